#pragma once

#include <span>
#include <string>
#include <vector>

namespace gasprint {

/// Mass of CO2-equivalent emitted per US dollar spent (kgCO2eq / USD).
struct EmissionFactor {
    double kg_per_usd = 0.0;

    friend bool operator==(const EmissionFactor&, const EmissionFactor&) = default;
};

struct RegionProfile {
    std::string name;
    double hash_share = 0.0;         // fraction of network hash rate
    double electricity_price = 0.0;  // USD / kWh
    double cipk = 0.0;               // kgCO2eq / kWh
};

/// A validated, non-empty set of mining regions whose hash shares sum to
/// 1 within kShareTolerance. Shares are renormalized on construction.
class RegionSet {
public:
    static constexpr double kShareTolerance = 0.02;

    explicit RegionSet(std::vector<RegionProfile> regions);

    [[nodiscard]] std::span<const RegionProfile> regions() const noexcept { return regions_; }
    [[nodiscard]] std::size_t size() const noexcept { return regions_.size(); }
    /// Sum of the shares as supplied, before renormalization.
    [[nodiscard]] double raw_share_total() const noexcept { return raw_share_total_; }

private:
    std::vector<RegionProfile> regions_;
    double raw_share_total_ = 0.0;
};

struct GpuProfile {
    std::string name;
    double unit_price = 0.0;          // USD
    double hash_rate = 0.0;           // MH/s
    double power_draw = 0.0;          // W
    double embodied_emissions = 0.0;  // kgCO2eq per unit produced
    double lifetime_hours = 0.0;
};

/// Throws DomainError unless every numeric field is strictly positive.
void validate(const GpuProfile& gpu);

struct CostEmissionBreakdown {
    double hardware_cost = 0.0;           // USD
    double electricity_cost = 0.0;        // USD
    double hardware_emissions = 0.0;      // kgCO2eq
    double electricity_emissions = 0.0;   // kgCO2eq

    [[nodiscard]] double total_cost() const noexcept { return hardware_cost + electricity_cost; }
    [[nodiscard]] double total_emissions() const noexcept {
        return hardware_emissions + electricity_emissions;
    }
    /// Hardware share of total cost. Requires total_cost() > 0.
    [[nodiscard]] double hardware_share() const;
    [[nodiscard]] EmissionFactor hardware_factor() const;
    [[nodiscard]] EmissionFactor electricity_factor() const;
};

struct RegionAggregate {
    double electricity_price = 0.0;  // USD / kWh, share-weighted mean
    double cipk = 0.0;               // kgCO2eq / kWh, share-weighted mean
    EmissionFactor factor;           // share-weighted mean of per-region cipk/price
};

[[nodiscard]] EmissionFactor regional_electricity_factor(double price_usd_per_kwh,
                                                         double cipk_kg_per_kwh);

/// Weighted means over a region set. The factor averages the per-region
/// ratios; it is not cipk / price of the aggregate row.
[[nodiscard]] RegionAggregate aggregate_regions(const RegionSet& regions);

/// Cost and emissions of running one GPU at full duty for its whole lifetime.
[[nodiscard]] CostEmissionBreakdown gpu_breakdown(const GpuProfile& gpu,
                                                  double electricity_price_usd_per_kwh,
                                                  EmissionFactor electricity_factor);

/// Emissions per dollar over the combined hardware and electricity spend.
[[nodiscard]] EmissionFactor alpha_total(const CostEmissionBreakdown& breakdown);

/// Same quantity assembled from the per-component factors and the hardware
/// share: a_hw * beta + a_el * (1 - beta).
[[nodiscard]] EmissionFactor alpha_from_components(EmissionFactor hardware,
                                                   EmissionFactor electricity,
                                                   double hardware_share);

namespace reference {

constexpr double kHoursPerYear = 8760.0;

/// AMD RX 590: 650 USD, 27.31 MH/s, 163 W, 54 kg embodied, two-year life.
[[nodiscard]] GpuProfile rx590();

/// Europe / East Asia / North America, 50 / 38 / 12 percent of hash rate.
[[nodiscard]] RegionSet ethereum_regions_2021();

}  // namespace reference

}  // namespace gasprint
