#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gasprint {

/// Parameters of the burn-regime supply model.
///
/// Each block mints `block_subsidy` Ether and burns fees worth
/// `burn_per_block` USD. With the total dollar value of the supply held at
/// `total_value`, the supply contracts by the factor K = 1 - b/V per block
/// before the subsidy is added: S(t+1) = K S(t) + m.
struct Eip1559Params {
    double initial_supply = 0.0;  // Ether, S0
    double total_value = 0.0;     // USD, V
    double block_subsidy = 0.0;   // Ether per block, m
    double burn_per_block = 0.0;  // USD per block, b

    [[nodiscard]] double burn_ratio() const noexcept { return burn_per_block / total_value; }
    [[nodiscard]] double contraction() const noexcept { return 1.0 - burn_ratio(); }
    /// Supply at which minting and burning cancel, m V / b.
    [[nodiscard]] double fixed_point_supply() const noexcept {
        return block_subsidy / burn_ratio();
    }
    [[nodiscard]] double initial_price() const noexcept { return total_value / initial_supply; }
};

/// Throws DomainError unless S0, V, m > 0 and 0 < b < V. With
/// `allow_zero_burn` the pure-inflation limit b = 0 is accepted as well.
void validate(const Eip1559Params& params, bool allow_zero_burn = false);

struct SupplyPoint {
    std::uint64_t block = 0;
    double supply = 0.0;              // Ether
    double price = 0.0;               // USD per Ether
    double cumulative_revenue = 0.0;  // USD paid to miners in blocks 1..block
};

/// Per-block supply, price and cumulative miner revenue, index 0 included.
class SupplyTrajectory {
public:
    SupplyTrajectory(double total_value, std::vector<SupplyPoint> points);

    [[nodiscard]] std::span<const SupplyPoint> points() const noexcept { return points_; }
    [[nodiscard]] const SupplyPoint& at(std::uint64_t block) const { return points_.at(block); }
    [[nodiscard]] const SupplyPoint& back() const noexcept { return points_.back(); }
    [[nodiscard]] std::uint64_t horizon() const noexcept { return points_.size() - 1; }
    [[nodiscard]] double total_value() const noexcept { return total_value_; }

    /// Absolute supply change from block t to t+1 (u_t).
    [[nodiscard]] double supply_change(std::uint64_t block) const;
    /// Relative supply change u_t / S_t.
    [[nodiscard]] double supply_growth_rate(std::uint64_t block) const;

private:
    double total_value_;
    std::vector<SupplyPoint> points_;
};

/// Runs the block recurrence for `horizon` blocks. b = 0 is accepted.
[[nodiscard]] SupplyTrajectory simulate(const Eip1559Params& params, std::uint64_t horizon);

/// Same recurrence without storing the trajectory; returns the last point.
[[nodiscard]] SupplyPoint simulate_final(const Eip1559Params& params, std::uint64_t horizon);

/// S_t = K^t S0 + m (1 - K^t) / (1 - K); S0 + m t when b = 0.
[[nodiscard]] double supply_closed_form(const Eip1559Params& params, std::uint64_t block);

/// Cumulative miner revenue after `block` blocks through the q-digamma
/// closed form. Agrees with simulate(). Throws DomainError when b = 0 or when
/// K is so close to 1 that the series is intractable.
[[nodiscard]] double revenue_closed_form(const Eip1559Params& params, std::uint64_t block);

/// Solution of the continuous approximation dS/dt = m - (b/V) S.
[[nodiscard]] double supply_continuous(const Eip1559Params& params, double t);

struct RevenueDelta {
    std::uint64_t block = 0;
    double delta_revenue = 0.0;  // USD
};

/// Extra miner revenue caused by burning `fee_usd` at block 0: the revenue
/// path with fee * S0 / V Ether removed from S0, minus the baseline path.
[[nodiscard]] std::vector<RevenueDelta> fee_burn_delta(const Eip1559Params& params,
                                                       double fee_usd, std::uint64_t horizon);

/// Cumulative miner revenue without burning: supply grows by m each block
/// and the fee is paid to miners on top of the subsidy.
[[nodiscard]] double legacy_revenue_total(const Eip1559Params& params, double fee_per_block_usd,
                                          std::uint64_t horizon);

struct BaseFeeState {
    double basefee = 0.0;      // Gwei per gas
    double target_gas = 0.0;   // gas units; blocks may hold up to twice this
};

/// Base fee after a block using `gas_used`: moves by up to 1/8 towards
/// fuller or emptier blocks relative to the target.
[[nodiscard]] BaseFeeState basefee_next(const BaseFeeState& state, double gas_used);

namespace reference {

inline constexpr std::uint64_t kLondonToMergeBlocks = 1'160'000;

/// S0 = 115.7M Ether, V = 341B USD, m = 2 Ether, b = 2650 USD.
[[nodiscard]] constexpr Eip1559Params mainnet_2021() {
    return {115.7e6, 341e9, 2.0, 2650.0};
}

}  // namespace reference

}  // namespace gasprint
