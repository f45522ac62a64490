#pragma once

#include "gasprint/emission_factors.hpp"

namespace gasprint {

inline constexpr double kGweiPerEther = 1e9;
inline constexpr double kDaysPerYear = 365.0;

/// Market price of Ether. The Gwei price is derived, never stored separately.
class PriceContext {
public:
    /// Throws DomainError unless eth_price_usd > 0.
    explicit PriceContext(double eth_price_usd);

    [[nodiscard]] double eth_price() const noexcept { return eth_price_; }
    [[nodiscard]] double gwei_price() const noexcept { return eth_price_ * 1e-9; }

    friend bool operator==(const PriceContext&, const PriceContext&) = default;

private:
    double eth_price_;
};

/// Fee and emissions lower bound of one transaction under the first-price
/// auction. Rebids of displaced transactions are not counted, so the
/// emissions figure is a floor.
struct TxCost {
    double gas = 0.0;                    // gas units
    double gas_price = 0.0;              // Gwei per gas
    double fee = 0.0;                    // USD
    double emissions_lower_bound = 0.0;  // kgCO2eq
};

/// Expected revenue of one miner from one block given its hash share.
[[nodiscard]] double expected_miner_revenue(double block_reward_usd, double fees_usd,
                                            double own_hash, double total_hash);

/// Emissions attributed to a given miner revenue (revenue equals cost at
/// equilibrium, so the factor applies directly).
[[nodiscard]] double network_emissions(double revenue_usd, EmissionFactor alpha);

/// Daily to yearly, 365 days, no leap handling.
[[nodiscard]] constexpr double annualize(double daily) noexcept { return daily * kDaysPerYear; }

[[nodiscard]] double tx_fee(double gas, double gas_price_gwei, const PriceContext& ctx);

[[nodiscard]] double tx_emissions_lower_bound(double gas, double gas_price_gwei,
                                              const PriceContext& ctx, EmissionFactor alpha);

[[nodiscard]] TxCost tx_cost(double gas, double gas_price_gwei, const PriceContext& ctx,
                             EmissionFactor alpha);

}  // namespace gasprint
