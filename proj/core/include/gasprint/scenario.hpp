#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gasprint/emission_factors.hpp"
#include "gasprint/gas_price_series.hpp"
#include "gasprint/network_model.hpp"

namespace gasprint {

enum class TxKind { Mint, Buy, Transfer, Bid, Custom };

[[nodiscard]] std::string_view to_string(TxKind kind) noexcept;
/// Accepts "mint", "buy", "transfer", "bid", "custom". Throws DomainError.
[[nodiscard]] TxKind parse_tx_kind(std::string_view text);

struct TxTemplate {
    TxKind kind = TxKind::Custom;
    std::string label;  // display name; required for Custom
    double gas = 0.0;   // gas units per transaction, > 0

    [[nodiscard]] std::string display_name() const;
};

namespace pricing {

struct Fixed {
    double gwei = 0.0;
};
/// Mean of a series of paid gas prices.
struct DailyAverage {
    GasPriceSeries series;
};
/// Mean of a series of minimum-for-inclusion gas prices, i.e. paying just
/// enough to be included at whatever hour the transaction lands.
struct DailyMinimum {
    GasPriceSeries series;
};
/// Mean minimum-for-inclusion price during the cheapest hour of the day.
struct BestHour {
    GasPriceSeries series;
};

}  // namespace pricing

using GasPricingStrategy =
    std::variant<pricing::Fixed, pricing::DailyAverage, pricing::DailyMinimum, pricing::BestHour>;

/// Gas price in Gwei that a strategy resolves to.
[[nodiscard]] double resolve_gas_price(const GasPricingStrategy& strategy);
[[nodiscard]] std::string_view strategy_name(const GasPricingStrategy& strategy) noexcept;
/// The series behind a strategy, if any.
[[nodiscard]] const GasPriceSeries* strategy_series(const GasPricingStrategy& strategy) noexcept;

inline constexpr double kDefaultOffsetRate = 0.004;  // USD per kgCO2eq
/// Typical passenger car, used only for the narrative distance equivalents.
inline constexpr double kKgCo2PerMile = 0.404;
inline constexpr double kKmPerMile = 1.609344;

struct ScenarioItem {
    TxTemplate tx;
    std::uint64_t count = 0;
};

struct Scenario {
    std::string name;
    std::vector<ScenarioItem> items;
    GasPricingStrategy pricing;
    PriceContext ctx;
    EmissionFactor alpha;
    bool bids_on_chain = true;
    double offset_rate = kDefaultOffsetRate;
    /// Series consulted by the min-gas and best-hour mitigations when the
    /// pricing strategy itself carries none.
    std::optional<GasPriceSeries> reference_series;
};

/// Throws DomainError if a template has non-positive gas, a Custom template
/// has no label, the strategy resolves to a negative price, or the offset
/// rate or factor is negative.
void validate(const Scenario& scenario);

struct ReportLine {
    std::string label;
    TxKind kind = TxKind::Custom;
    std::uint64_t count = 0;
    double gas_per_tx = 0.0;   // effective gas; zero for off-chain bids
    double fee_per_tx = 0.0;   // USD
    double fee = 0.0;          // USD, all `count` transactions
    double emissions = 0.0;    // kgCO2eq, all `count` transactions
};

struct ScenarioReport {
    std::string name;
    std::string pricing;
    double gas_price = 0.0;  // effective Gwei per gas
    std::vector<ReportLine> lines;
    double total_fee = 0.0;
    double total_emissions = 0.0;
    double offset_rate = 0.0;
    double offset_cost = 0.0;
    double equivalent_miles = 0.0;
    double equivalent_km = 0.0;
};

[[nodiscard]] ScenarioReport evaluate(const Scenario& scenario);

struct Mitigations {
    bool offchain_bids = false;
    bool min_gas = false;    // pay the daily mean of the minimum inclusion price
    bool best_hour = false;  // transact during the cheapest hour; overrides min_gas
};

/// Returns a copy of `scenario` with the requested mitigations applied.
/// Series lookup order: `explicit_series`, the pricing strategy's own series,
/// then scenario.reference_series. Throws DomainError when a price
/// mitigation is requested and no series is available.
[[nodiscard]] Scenario apply_mitigations(Scenario scenario, const Mitigations& mitigations,
                                         const GasPriceSeries* explicit_series = nullptr);

[[nodiscard]] double offset_cost(double emissions_kg, double rate_usd_per_kg);

/// Fractional reduction of total emissions from `baseline` to `mitigated`.
[[nodiscard]] double emissions_reduction(const ScenarioReport& baseline,
                                         const ScenarioReport& mitigated);

namespace reference {

inline constexpr double kEthPriceUsd = 3207.0;
inline constexpr double kAverageGasPriceGwei = 61.0;
inline constexpr double kAlphaTotal = 1.305;

/// Mint 450k, buy 300k, transfer 80k, bid 100k gas.
[[nodiscard]] std::vector<TxTemplate> nft_templates();
[[nodiscard]] TxTemplate nft_template(TxKind kind);

/// One mint, ten on-chain bids, one purchase and one transfer at 61 Gwei.
[[nodiscard]] Scenario nft_lifecycle();

}  // namespace reference

}  // namespace gasprint
