#include "gasprint/scenario.hpp"

#include <cmath>
#include <utility>

#include "gasprint/error.hpp"

namespace gasprint {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view to_string(TxKind kind) noexcept {
    switch (kind) {
        case TxKind::Mint: return "mint";
        case TxKind::Buy: return "buy";
        case TxKind::Transfer: return "transfer";
        case TxKind::Bid: return "bid";
        case TxKind::Custom: return "custom";
    }
    return "custom";
}

TxKind parse_tx_kind(std::string_view text) {
    for (TxKind k : {TxKind::Mint, TxKind::Buy, TxKind::Transfer, TxKind::Bid, TxKind::Custom})
        if (to_string(k) == text) return k;
    throw DomainError("unknown transaction kind '" + std::string(text) + "'");
}

std::string TxTemplate::display_name() const {
    if (!label.empty()) return label;
    switch (kind) {
        case TxKind::Mint: return "Minting";
        case TxKind::Buy: return "Buying";
        case TxKind::Transfer: return "Transferring";
        case TxKind::Bid: return "Bidding";
        case TxKind::Custom: return "Custom";
    }
    return "Custom";
}

double resolve_gas_price(const GasPricingStrategy& strategy) {
    return std::visit(overloaded{
                          [](const pricing::Fixed& s) {
                              if (!(std::isfinite(s.gwei) && s.gwei >= 0.0))
                                  throw DomainError("fixed gas price must be >= 0");
                              return s.gwei;
                          },
                          [](const pricing::DailyAverage& s) { return series_stats(s.series).average; },
                          [](const pricing::DailyMinimum& s) { return series_stats(s.series).average; },
                          [](const pricing::BestHour& s) { return series_stats(s.series).best_hour_mean; },
                      },
                      strategy);
}

std::string_view strategy_name(const GasPricingStrategy& strategy) noexcept {
    return std::visit(overloaded{
                          [](const pricing::Fixed&) { return std::string_view("fixed"); },
                          [](const pricing::DailyAverage&) { return std::string_view("daily-average"); },
                          [](const pricing::DailyMinimum&) { return std::string_view("daily-minimum"); },
                          [](const pricing::BestHour&) { return std::string_view("best-hour"); },
                      },
                      strategy);
}

const GasPriceSeries* strategy_series(const GasPricingStrategy& strategy) noexcept {
    return std::visit(overloaded{
                          [](const pricing::Fixed&) -> const GasPriceSeries* { return nullptr; },
                          [](const auto& s) -> const GasPriceSeries* { return &s.series; },
                      },
                      strategy);
}

void validate(const Scenario& scenario) {
    for (std::size_t i = 0; i < scenario.items.size(); ++i) {
        const auto& tx = scenario.items[i].tx;
        const std::string where = "items[" + std::to_string(i) + "]: ";
        if (!(std::isfinite(tx.gas) && tx.gas > 0.0)) throw DomainError(where + "gas must be > 0");
        if (tx.kind == TxKind::Custom && tx.label.empty())
            throw DomainError(where + "custom transactions need a label");
    }
    if (!(std::isfinite(scenario.alpha.kg_per_usd) && scenario.alpha.kg_per_usd >= 0.0))
        throw DomainError("alpha must be >= 0");
    if (!(std::isfinite(scenario.offset_rate) && scenario.offset_rate >= 0.0))
        throw DomainError("offset rate must be >= 0");
    (void)resolve_gas_price(scenario.pricing);
}

ScenarioReport evaluate(const Scenario& scenario) {
    validate(scenario);
    ScenarioReport report;
    report.name = scenario.name;
    report.pricing = std::string(strategy_name(scenario.pricing));
    report.gas_price = resolve_gas_price(scenario.pricing);
    report.offset_rate = scenario.offset_rate;

    for (const auto& item : scenario.items) {
        ReportLine line;
        line.label = item.tx.display_name();
        line.kind = item.tx.kind;
        line.count = item.count;
        const bool off_chain = item.tx.kind == TxKind::Bid && !scenario.bids_on_chain;
        line.gas_per_tx = off_chain ? 0.0 : item.tx.gas;
        const TxCost per_tx = tx_cost(line.gas_per_tx, report.gas_price, scenario.ctx, scenario.alpha);
        const auto n = static_cast<double>(item.count);
        line.fee_per_tx = per_tx.fee;
        line.fee = n * per_tx.fee;
        line.emissions = n * per_tx.emissions_lower_bound;
        report.total_fee += line.fee;
        report.total_emissions += line.emissions;
        report.lines.push_back(std::move(line));
    }
    report.offset_cost = offset_cost(report.total_emissions, scenario.offset_rate);
    report.equivalent_miles = report.total_emissions / kKgCo2PerMile;
    report.equivalent_km = report.equivalent_miles * kKmPerMile;
    return report;
}

Scenario apply_mitigations(Scenario scenario, const Mitigations& mitigations,
                           const GasPriceSeries* explicit_series) {
    if (mitigations.offchain_bids) scenario.bids_on_chain = false;
    if (!mitigations.min_gas && !mitigations.best_hour) return scenario;

    const GasPriceSeries* series = explicit_series;
    if (series == nullptr) series = strategy_series(scenario.pricing);
    if (series == nullptr && scenario.reference_series) series = &*scenario.reference_series;
    if (series == nullptr)
        throw DomainError("gas price mitigations need a gas price series");

    GasPriceSeries copy = *series;
    if (mitigations.best_hour)
        scenario.pricing = pricing::BestHour{std::move(copy)};
    else
        scenario.pricing = pricing::DailyMinimum{std::move(copy)};
    return scenario;
}

double offset_cost(double emissions_kg, double rate_usd_per_kg) {
    if (!(std::isfinite(emissions_kg) && emissions_kg >= 0.0))
        throw DomainError("emissions must be >= 0");
    if (!(std::isfinite(rate_usd_per_kg) && rate_usd_per_kg >= 0.0))
        throw DomainError("offset rate must be >= 0");
    return emissions_kg * rate_usd_per_kg;
}

double emissions_reduction(const ScenarioReport& baseline, const ScenarioReport& mitigated) {
    if (!(baseline.total_emissions > 0.0))
        throw DomainError("reduction undefined for a zero-emission baseline");
    return 1.0 - mitigated.total_emissions / baseline.total_emissions;
}

namespace reference {

TxTemplate nft_template(TxKind kind) {
    switch (kind) {
        case TxKind::Mint: return {TxKind::Mint, "", 450'000.0};
        case TxKind::Buy: return {TxKind::Buy, "", 300'000.0};
        case TxKind::Transfer: return {TxKind::Transfer, "", 80'000.0};
        case TxKind::Bid: return {TxKind::Bid, "", 100'000.0};
        case TxKind::Custom: break;
    }
    throw DomainError("no default template for custom transactions");
}

std::vector<TxTemplate> nft_templates() {
    return {nft_template(TxKind::Mint), nft_template(TxKind::Buy), nft_template(TxKind::Transfer),
            nft_template(TxKind::Bid)};
}

Scenario nft_lifecycle() {
    return Scenario{
        .name = "NFT lifecycle",
        .items = {{nft_template(TxKind::Mint), 1},
                  {nft_template(TxKind::Bid), 10},
                  {nft_template(TxKind::Buy), 1},
                  {nft_template(TxKind::Transfer), 1}},
        .pricing = pricing::Fixed{kAverageGasPriceGwei},
        .ctx = PriceContext(kEthPriceUsd),
        .alpha = EmissionFactor{kAlphaTotal},
        .bids_on_chain = true,
        .offset_rate = kDefaultOffsetRate,
        .reference_series = std::nullopt,
    };
}

}  // namespace reference

}  // namespace gasprint
