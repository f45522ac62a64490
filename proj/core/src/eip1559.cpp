#include "gasprint/eip1559.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gasprint/error.hpp"
#include "gasprint/q_digamma.hpp"

namespace gasprint {

namespace {

bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

/// One block of the burn recurrence: S + (m - (b/V) S).
struct SupplyStep {
    double subsidy;
    double burn_ratio;

    [[nodiscard]] double operator()(double supply) const noexcept {
        const double change = subsidy - burn_ratio * supply;
        return supply + change;
    }
};

template <typename Visit>
void run_recurrence(const Eip1559Params& p, std::uint64_t horizon, Visit&& visit) {
    const SupplyStep step{p.block_subsidy, p.burn_ratio()};
    const double mv = p.block_subsidy * p.total_value;
    double supply = p.initial_supply;
    double revenue = 0.0;
    visit(SupplyPoint{0, supply, p.total_value / supply, 0.0});
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        supply = step(supply);
        if (!(supply > 0.0)) throw DomainError("supply became non-positive at block " + std::to_string(t));
        revenue += mv / supply;
        visit(SupplyPoint{t, supply, p.total_value / supply, revenue});
    }
}

}  // namespace

void validate(const Eip1559Params& p, bool allow_zero_burn) {
    if (!finite_pos(p.initial_supply)) throw DomainError("initial_supply must be > 0");
    if (!finite_pos(p.total_value)) throw DomainError("total_value must be > 0");
    if (!finite_pos(p.block_subsidy)) throw DomainError("block_subsidy must be > 0");
    if (!std::isfinite(p.burn_per_block) || p.burn_per_block < 0.0 ||
        (p.burn_per_block == 0.0 && !allow_zero_burn))
        throw DomainError("burn_per_block must be > 0");
    if (p.burn_per_block >= p.total_value)
        throw DomainError("burn_per_block must be below total_value (contraction factor in (0, 1))");
}

SupplyTrajectory::SupplyTrajectory(double total_value, std::vector<SupplyPoint> points)
    : total_value_(total_value), points_(std::move(points)) {
    if (points_.empty()) throw DomainError("trajectory needs at least the initial point");
}

double SupplyTrajectory::supply_change(std::uint64_t block) const {
    return at(block + 1).supply - at(block).supply;
}

double SupplyTrajectory::supply_growth_rate(std::uint64_t block) const {
    return supply_change(block) / at(block).supply;
}

SupplyTrajectory simulate(const Eip1559Params& params, std::uint64_t horizon) {
    validate(params, true);
    std::vector<SupplyPoint> points;
    points.reserve(horizon + 1);
    run_recurrence(params, horizon, [&](const SupplyPoint& pt) { points.push_back(pt); });
    return SupplyTrajectory(params.total_value, std::move(points));
}

SupplyPoint simulate_final(const Eip1559Params& params, std::uint64_t horizon) {
    validate(params, true);
    SupplyPoint last;
    run_recurrence(params, horizon, [&](const SupplyPoint& pt) { last = pt; });
    return last;
}

double supply_closed_form(const Eip1559Params& params, std::uint64_t block) {
    validate(params, true);
    const double t = static_cast<double>(block);
    const double r = params.burn_ratio();
    if (r == 0.0) return params.initial_supply + params.block_subsidy * t;
    const double log_k = std::log1p(-r);
    const double k_pow = std::exp(t * log_k);
    const double one_minus_k_pow = -std::expm1(t * log_k);
    return k_pow * params.initial_supply + params.block_subsidy * one_minus_k_pow / r;
}

double revenue_closed_form(const Eip1559Params& params, std::uint64_t block) {
    validate(params);
    using special::SignedLog;

    const double m = params.block_subsidy;
    const double v = params.total_value;
    const double s0 = params.initial_supply;
    const double r = params.burn_ratio();
    const auto base = special::QBase::from_one_minus_q(r);
    const double log_k = base.log_q();
    const double t = static_cast<double>(block);

    // S_j = (m/r) (1 - c K^j) with c = 1 - r S0 / m, i.e. c = K^(-h). The
    // q-digamma arguments -h and t - h + 1 enter only through K^x, so they
    // are passed as c and c K^(t+1). c <= 0 (supply starting at or above the
    // fixed point) gives complex h but a real result.
    const double excess = r * s0 / m;
    SignedLog c;
    if (excess < 1.0)
        c = {+1, std::log1p(-excess)};
    else if (excess > 1.0)
        c = {-1, std::log(excess - 1.0)};
    SignedLog c_shifted = c;
    c_shifted.log_abs += (t + 1.0) * log_k;

    const double psi_start = special::q_digamma_at_power(base, c).value;
    const double psi_end = special::q_digamma_at_power(base, c_shifted).value;

    // mV [ (K-1) psi(t-h+1) / (m ln K) + (1-K) psi(-h) / (m ln K) - (K-1)(t+1)/m ]
    // sums mV/S_j over j = 0..t; block 0 pays no revenue, so drop mV/S0.
    const double k_minus_1 = -r;
    const double through_t = m * v *
                             (k_minus_1 * (psi_end - psi_start) / (m * log_k) -
                              k_minus_1 * (t + 1.0) / m);
    return through_t - m * v / s0;
}

double supply_continuous(const Eip1559Params& params, double t) {
    validate(params, true);
    if (!(std::isfinite(t) && t >= 0.0)) throw DomainError("time must be >= 0");
    const double r = params.burn_ratio();
    if (r == 0.0) return params.initial_supply + params.block_subsidy * t;
    const double equilibrium = params.fixed_point_supply();
    return (params.initial_supply - equilibrium) * std::exp(-r * t) + equilibrium;
}

std::vector<RevenueDelta> fee_burn_delta(const Eip1559Params& params, double fee_usd,
                                         std::uint64_t horizon) {
    validate(params, true);
    if (!(std::isfinite(fee_usd) && fee_usd >= 0.0)) throw DomainError("fee must be >= 0");
    const double burned = fee_usd * params.initial_supply / params.total_value;
    if (burned >= params.initial_supply)
        throw DomainError("fee would burn the entire initial supply");

    // Baseline and perturbed runs share the affine step S -> K S + m, so the
    // gap between them evolves as gap -> K gap. Tracking the gap directly
    // keeps it exact instead of recovering it from two nearly equal supplies.
    const SupplyStep step{params.block_subsidy, params.burn_ratio()};
    const double k = params.contraction();
    const double mv = params.block_subsidy * params.total_value;

    std::vector<RevenueDelta> out;
    out.reserve(horizon + 1);
    out.push_back({0, 0.0});
    double supply = params.initial_supply;
    double gap = burned;
    double delta = 0.0;
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        supply = step(supply);
        gap *= k;
        const double perturbed = supply - gap;
        if (!(perturbed > 0.0)) throw DomainError("perturbed supply became non-positive");
        // mV/S' - mV/S
        delta += mv * gap / (supply * perturbed);
        out.push_back({t, delta});
    }
    return out;
}

double legacy_revenue_total(const Eip1559Params& params, double fee_per_block_usd,
                            std::uint64_t horizon) {
    validate(params, true);
    if (!(std::isfinite(fee_per_block_usd) && fee_per_block_usd >= 0.0))
        throw DomainError("fee per block must be >= 0");
    const double mv = params.block_subsidy * params.total_value;
    double supply = params.initial_supply;
    double revenue = 0.0;
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        supply += params.block_subsidy;
        revenue += mv / supply + fee_per_block_usd;
    }
    return revenue;
}

BaseFeeState basefee_next(const BaseFeeState& state, double gas_used) {
    if (!(std::isfinite(state.basefee) && state.basefee >= 0.0))
        throw DomainError("basefee must be >= 0");
    if (!finite_pos(state.target_gas)) throw DomainError("target gas must be > 0");
    if (!(std::isfinite(gas_used) && gas_used >= 0.0)) throw DomainError("gas used must be >= 0");
    if (gas_used > 2.0 * state.target_gas)
        throw DomainError("gas used exceeds the maximum block size (2 x target)");
    const double deviation = (gas_used - state.target_gas) / state.target_gas;
    return {state.basefee * (1.0 + deviation / 8.0), state.target_gas};
}

}  // namespace gasprint
