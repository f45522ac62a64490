#include "gasprint/emission_factors.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gasprint/error.hpp"

namespace gasprint {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

RegionSet::RegionSet(std::vector<RegionProfile> regions) : regions_(std::move(regions)) {
    require(!regions_.empty(), "region set is empty");
    double total = 0.0;
    for (const auto& r : regions_) {
        const std::string where = "region '" + r.name + "': ";
        require(finite_nonneg(r.hash_share), where + "hash_share must be >= 0");
        require(finite_pos(r.electricity_price), where + "electricity_price must be > 0");
        require(finite_nonneg(r.cipk), where + "cipk must be >= 0");
        total += r.hash_share;
    }
    require(std::abs(total - 1.0) <= kShareTolerance,
            "hash_share values sum to " + std::to_string(total) + ", expected 1 +/- " +
                std::to_string(kShareTolerance));
    for (auto& r : regions_) r.hash_share /= total;
    raw_share_total_ = total;
}

void validate(const GpuProfile& gpu) {
    const std::string where = "gpu '" + gpu.name + "': ";
    require(finite_pos(gpu.unit_price), where + "unit_price must be > 0");
    require(finite_pos(gpu.hash_rate), where + "hash_rate must be > 0");
    require(finite_pos(gpu.power_draw), where + "power_draw must be > 0");
    require(finite_pos(gpu.embodied_emissions), where + "embodied_emissions must be > 0");
    require(finite_pos(gpu.lifetime_hours), where + "lifetime_hours must be > 0");
}

double CostEmissionBreakdown::hardware_share() const {
    require(total_cost() > 0.0, "hardware share undefined for zero total cost");
    return hardware_cost / total_cost();
}

EmissionFactor CostEmissionBreakdown::hardware_factor() const {
    require(hardware_cost > 0.0, "hardware factor undefined for zero hardware cost");
    return {hardware_emissions / hardware_cost};
}

EmissionFactor CostEmissionBreakdown::electricity_factor() const {
    require(electricity_cost > 0.0, "electricity factor undefined for zero electricity cost");
    return {electricity_emissions / electricity_cost};
}

EmissionFactor regional_electricity_factor(double price_usd_per_kwh, double cipk_kg_per_kwh) {
    require(finite_pos(price_usd_per_kwh), "electricity price must be > 0");
    require(finite_nonneg(cipk_kg_per_kwh), "carbon intensity must be >= 0");
    return {cipk_kg_per_kwh / price_usd_per_kwh};
}

RegionAggregate aggregate_regions(const RegionSet& regions) {
    RegionAggregate out;
    for (const auto& r : regions.regions()) {
        out.electricity_price += r.hash_share * r.electricity_price;
        out.cipk += r.hash_share * r.cipk;
        out.factor.kg_per_usd +=
            r.hash_share * regional_electricity_factor(r.electricity_price, r.cipk).kg_per_usd;
    }
    return out;
}

CostEmissionBreakdown gpu_breakdown(const GpuProfile& gpu, double electricity_price_usd_per_kwh,
                                    EmissionFactor electricity_factor) {
    validate(gpu);
    require(finite_pos(electricity_price_usd_per_kwh), "electricity price must be > 0");
    require(finite_nonneg(electricity_factor.kg_per_usd), "electricity factor must be >= 0");

    const double energy_kwh = gpu.power_draw * gpu.lifetime_hours / 1000.0;
    CostEmissionBreakdown b;
    b.hardware_cost = gpu.unit_price;
    b.hardware_emissions = gpu.embodied_emissions;
    b.electricity_cost = energy_kwh * electricity_price_usd_per_kwh;
    b.electricity_emissions = b.electricity_cost * electricity_factor.kg_per_usd;
    return b;
}

EmissionFactor alpha_total(const CostEmissionBreakdown& b) {
    require(finite_nonneg(b.hardware_cost) && finite_nonneg(b.electricity_cost) &&
                finite_nonneg(b.hardware_emissions) && finite_nonneg(b.electricity_emissions),
            "breakdown fields must be finite and >= 0");
    require(b.total_cost() > 0.0, "alpha undefined for zero total cost");
    return {b.total_emissions() / b.total_cost()};
}

EmissionFactor alpha_from_components(EmissionFactor hardware, EmissionFactor electricity,
                                     double hardware_share) {
    require(hardware_share >= 0.0 && hardware_share <= 1.0, "hardware share must lie in [0, 1]");
    return {hardware.kg_per_usd * hardware_share +
            electricity.kg_per_usd * (1.0 - hardware_share)};
}

namespace reference {

GpuProfile rx590() {
    return {.name = "AMD RX 590",
            .unit_price = 650.0,
            .hash_rate = 27.31,
            .power_draw = 163.0,
            .embodied_emissions = 54.0,
            .lifetime_hours = 2.0 * kHoursPerYear};
}

RegionSet ethereum_regions_2021() {
    return RegionSet({
        {"Europe", 0.50, 0.1419, 0.230},
        {"East Asia", 0.38, 0.0916, 0.582},
        {"North America", 0.12, 0.0815, 0.331},
    });
}

}  // namespace reference

}  // namespace gasprint
