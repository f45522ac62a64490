#include <doctest.h>

#include <cmath>

#include "gasprint/eip1559.hpp"
#include "gasprint/error.hpp"
#include "support/oracles.hpp"

using namespace gasprint;
using doctest::Approx;

namespace {

Eip1559Params random_params(double k_lo, double k_hi) {
    const double k = oracle::uniform(k_lo, k_hi);
    const double v = std::pow(10.0, oracle::uniform(3, 9));
    const double m = oracle::uniform(0.5, 10.0);
    // Start anywhere between a tenth and ten times the fixed point.
    const double fixed = m / (1.0 - k);
    const double s0 = fixed * std::pow(10.0, oracle::uniform(-1, 1));
    return {s0, v, m, (1.0 - k) * v};
}

}  // namespace

TEST_CASE("simulate starts from the initial state") {
    const Eip1559Params p{100.0, 1000.0, 10.0, 500.0};
    const auto traj = simulate(p, 0);
    CHECK(traj.horizon() == 0);
    CHECK(traj.at(0).supply == 100.0);
    CHECK(traj.at(0).price == Approx(10.0));
    CHECK(traj.at(0).cumulative_revenue == 0.0);
}

TEST_CASE("zero-burn limit by hand") {
    const Eip1559Params p{100.0, 1000.0, 10.0, 0.0};
    const auto traj = simulate(p, 3);
    CHECK(traj.at(1).supply == 110.0);
    CHECK(traj.at(2).supply == 120.0);
    CHECK(traj.at(3).supply == 130.0);
    CHECK(traj.at(3).cumulative_revenue == Approx(251.17).epsilon(0.005 / 251.17));
    CHECK(traj.at(3).cumulative_revenue ==
          Approx(10.0 * 1000.0 * (1.0 / 110 + 1.0 / 120 + 1.0 / 130)).epsilon(1e-14));
    CHECK(supply_closed_form(p, 5) == 150.0);
    CHECK(supply_continuous(p, 5.0) == 150.0);
    CHECK_THROWS_AS((void)revenue_closed_form(p, 3), DomainError);
}

TEST_CASE("trajectory invariants") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(0.5, 0.999);
        const auto traj = simulate(p, 2000);
        const double k = p.contraction();
        for (std::uint64_t t = 0; t <= traj.horizon(); ++t) {
            const auto& pt = traj.at(t);
            CHECK(oracle::rel_close(pt.price * pt.supply, p.total_value, 1e-9));
            if (t > 0) {
                CHECK(pt.cumulative_revenue >= traj.at(t - 1).cumulative_revenue);
                CHECK(oracle::rel_close(pt.supply, k * traj.at(t - 1).supply + p.block_subsidy, 1e-14));
            }
        }
        const auto& last = traj.at(1000);
        const auto& prev = traj.at(999);
        CHECK(traj.supply_change(999) == last.supply - prev.supply);
        CHECK(traj.supply_growth_rate(999) == Approx((last.supply - prev.supply) / prev.supply));
    }
}

TEST_CASE("supply converges monotonically to the fixed point") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(0.5, 0.99);
        const auto traj = simulate(p, 500);
        const double fixed = p.fixed_point_supply();
        const bool rising = p.initial_supply < fixed;
        for (std::uint64_t t = 1; t <= traj.horizon(); ++t) {
            const double s = traj.at(t).supply, prev = traj.at(t - 1).supply;
            if (rising) {
                CHECK(s >= prev);
                CHECK(s <= fixed * (1 + 1e-12));
            } else {
                CHECK(s <= prev);
                CHECK(s >= fixed * (1 - 1e-12));
            }
        }
    }
}

TEST_CASE("simulate agrees with an extended-precision recurrence") {
    const auto p = reference::mainnet_2021();
    const auto last = simulate_final(p, 200'000);
    const auto want = oracle::burn_recurrence(p.initial_supply, p.total_value, p.block_subsidy,
                                              p.burn_per_block, 200'000);
    CHECK(oracle::rel_close(last.supply, static_cast<double>(want.supply), 1e-12));
    CHECK(oracle::rel_close(last.cumulative_revenue, static_cast<double>(want.revenue), 1e-10));
    CHECK(simulate(p, 1000).back().cumulative_revenue == simulate_final(p, 1000).cumulative_revenue);
}

TEST_CASE("supply closed form") {
    const Eip1559Params half{100.0, 1000.0, 10.0, 500.0};
    CHECK(supply_closed_form(half, 0) == 100.0);
    CHECK(supply_closed_form(half, 1) == Approx(60.0).epsilon(1e-15));

    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(0.5, 0.999);
        const auto supplies = oracle::burn_supplies(p.initial_supply, p.total_value, p.block_subsidy,
                                                    p.burn_per_block, 100'000);
        for (std::uint64_t t : {0ULL, 1ULL, 7ULL, 100ULL, 5'000ULL, 99'999ULL, 100'000ULL})
            CHECK(oracle::rel_close(supply_closed_form(p, t), static_cast<double>(supplies[t]), 1e-9));
    }
}

TEST_CASE("revenue closed form against the recurrence") {
    SUBCASE("start at the fixed point, three steps by hand") {
        const Eip1559Params p{10.0, 100.0, 5.0, 50.0};  // K = 0.5, S stays at 10
        CHECK(oracle::rel_close(revenue_closed_form(p, 3), 150.0, 1e-9));
    }
    SUBCASE("K = 0.99, supply above the fixed point") {
        const Eip1559Params p{1000.0, 1e6, 2.0, 1e4};
        CHECK(oracle::rel_close(revenue_closed_form(p, 1000), 8402792.3600083017802, 1e-9));
        CHECK(oracle::rel_close(revenue_closed_form(p, 1000), simulate_final(p, 1000).cumulative_revenue, 1e-6));
    }
    SUBCASE("zero blocks") {
        for (double k : {0.5, 0.9, 0.99}) {
            const Eip1559Params p{30.0, 1e5, 2.0, (1 - k) * 1e5};
            CHECK(std::abs(revenue_closed_form(p, 0)) <= 1e-9 * p.block_subsidy * p.total_value);
        }
    }
    SUBCASE("grid of contraction factors") {
        for (double k : {0.5, 0.9, 0.99}) {
            for (int trial = 0; trial < 5; ++trial) {
                auto p = random_params(k, k);
                p.burn_per_block = (1.0 - k) * p.total_value;
                for (std::uint64_t t : {1ULL, 10ULL, 137ULL, 1000ULL, 10'000ULL}) {
                    const auto want = oracle::burn_recurrence(p.initial_supply, p.total_value,
                                                              p.block_subsidy, p.burn_per_block, t);
                    CHECK(oracle::rel_close(revenue_closed_form(p, t), static_cast<double>(want.revenue), 1e-6));
                }
            }
        }
    }
    SUBCASE("intractable contraction is refused") {
        CHECK_THROWS_AS((void)revenue_closed_form(reference::mainnet_2021(), 10), DomainError);
    }
}

TEST_CASE("continuous supply") {
    const auto p = reference::mainnet_2021();
    CHECK(supply_continuous(p, 0.0) == Approx(p.initial_supply).epsilon(1e-15));
    CHECK(supply_continuous(p, 1e15) == Approx(p.fixed_point_supply()).epsilon(1e-12));
    const auto h = reference::kLondonToMergeBlocks;
    CHECK(oracle::rel_close(supply_continuous(p, static_cast<double>(h)), simulate_final(p, h).supply, 1e-3));
    CHECK_THROWS_AS((void)supply_continuous(p, -1.0), DomainError);
}

TEST_CASE("fee burn delta") {
    const auto p = reference::mainnet_2021();
    SUBCASE("zero fee") {
        for (const auto& d : fee_burn_delta(p, 0.0, 1000)) CHECK(d.delta_revenue == 0.0);
    }
    SUBCASE("against two independent extended-precision runs") {
        const std::uint64_t h = 20'000;
        const auto delta = fee_burn_delta(p, 100.0, h);
        const long double burned = 100.0L * p.initial_supply / p.total_value;
        const auto base = oracle::burn_recurrence(p.initial_supply, p.total_value, p.block_subsidy,
                                                  p.burn_per_block, h);
        const auto moved = oracle::burn_recurrence(p.initial_supply - burned, p.total_value,
                                                   p.block_subsidy, p.burn_per_block, h);
        CHECK(oracle::rel_close(delta.back().delta_revenue,
                                static_cast<double>(moved.revenue - base.revenue), 1e-4));
    }
    SUBCASE("small parameters against exact double runs") {
        const Eip1559Params small{50.0, 1000.0, 3.0, 10.0};
        const auto delta = fee_burn_delta(small, 40.0, 30);
        Eip1559Params moved = small;
        moved.initial_supply -= 40.0 * small.initial_supply / small.total_value;
        const double want = simulate_final(moved, 30).cumulative_revenue - simulate_final(small, 30).cumulative_revenue;
        CHECK(oracle::rel_close(delta.back().delta_revenue, want, 1e-10));
    }
    SUBCASE("nondecreasing in time and in the fee") {
        for (int trial = 0; trial < 20; ++trial) {
            const auto q = random_params(0.5, 0.9999);
            const double fee = oracle::uniform(0.0, 0.5) * q.total_value;
            const auto a = fee_burn_delta(q, fee, 500);
            const auto b = fee_burn_delta(q, fee * 1.5, 500);
            CHECK(a.front().delta_revenue == 0.0);
            for (std::size_t t = 1; t < a.size(); ++t) {
                CHECK(a[t].delta_revenue >= a[t - 1].delta_revenue);
                CHECK(b[t].delta_revenue >= a[t].delta_revenue);
                CHECK(a[t].delta_revenue >= 0.0);
            }
        }
    }
    SUBCASE("burning the whole supply is rejected") {
        CHECK_THROWS_AS((void)fee_burn_delta(p, p.total_value, 10), DomainError);
        CHECK_THROWS_AS((void)fee_burn_delta(p, -1.0, 10), DomainError);
    }
}

TEST_CASE("legacy revenue") {
    const Eip1559Params p{100.0, 1000.0, 10.0, 1.0};
    CHECK(legacy_revenue_total(p, 1.0, 0) == 0.0);
    CHECK(legacy_revenue_total(p, 1.0, 2) == Approx(176.24).epsilon(0.005 / 176.24));
    CHECK(legacy_revenue_total(p, 1.0, 2) == Approx(10 * 1000.0 / 110 + 1 + 10 * 1000.0 / 120 + 1).epsilon(1e-14));

    const auto real = reference::mainnet_2021();
    const auto h = reference::kLondonToMergeBlocks;
    const double legacy = legacy_revenue_total(real, real.burn_per_block, h);
    CHECK(oracle::rel_close(legacy, static_cast<double>(oracle::legacy_revenue(
                                        real.initial_supply, real.total_value, real.block_subsidy,
                                        real.burn_per_block, h)),
                            1e-10));
    CHECK(legacy >= simulate_final(real, h).cumulative_revenue);
}

TEST_CASE("base fee update") {
    const BaseFeeState s{100.0, 15e6};
    CHECK(basefee_next(s, 15e6).basefee == 100.0);
    CHECK(basefee_next(s, 30e6).basefee == 112.5);
    CHECK(basefee_next(s, 0.0).basefee == 87.5);

    BaseFeeState cur = s;
    for (int i = 0; i < 10; ++i) cur = basefee_next(cur, cur.target_gas);
    CHECK(cur.basefee == 100.0);
    cur = s;
    for (int i = 0; i < 5; ++i) cur = basefee_next(cur, 2 * cur.target_gas);
    CHECK(cur.basefee == 100.0 * std::pow(1.125, 5));

    CHECK_THROWS_AS((void)basefee_next(s, 30e6 + 1), DomainError);
    CHECK_THROWS_AS((void)basefee_next({1.0, 0.0}, 0.0), DomainError);
    CHECK_THROWS_AS((void)basefee_next(s, -1.0), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(Eip1559Params{0.0, 1.0, 1.0, 0.1}), DomainError);
    CHECK_THROWS_AS(validate(Eip1559Params{1.0, 0.0, 1.0, 0.1}), DomainError);
    CHECK_THROWS_AS(validate(Eip1559Params{1.0, 1.0, 0.0, 0.1}), DomainError);
    CHECK_THROWS_AS(validate(Eip1559Params{1.0, 1.0, 1.0, 0.0}), DomainError);
    CHECK_NOTHROW(validate(Eip1559Params{1.0, 1.0, 1.0, 0.0}, true));
    CHECK_THROWS_AS(validate(Eip1559Params{1.0, 1.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS((void)simulate(Eip1559Params{1.0, 1.0, 1.0, 2.0}, 1), DomainError);
}
