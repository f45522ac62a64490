#include <doctest.h>

#include "gasprint/error.hpp"
#include "gasprint/network_model.hpp"
#include "support/oracles.hpp"

using namespace gasprint;
using doctest::Approx;

TEST_CASE("price context derives the Gwei price") {
    const PriceContext ctx(3207.0);
    CHECK(ctx.gwei_price() == 3207.0 * 1e-9);
    CHECK_THROWS_AS(PriceContext(0.0), DomainError);
    CHECK_THROWS_AS(PriceContext(-5.0), DomainError);
}

TEST_CASE("expected miner revenue") {
    CHECK(expected_miner_revenue(10, 5, 50, 100) == Approx(7.5));
    CHECK(expected_miner_revenue(10, 5, 0, 100) == 0.0);
    CHECK(expected_miner_revenue(12.5, 2.5, 30, 120) == Approx(3.75));
    CHECK_THROWS_AS((void)expected_miner_revenue(10, 5, 101, 100), DomainError);
    CHECK_THROWS_AS((void)expected_miner_revenue(10, 5, 0, 0), DomainError);
}

TEST_CASE("miner revenue over a partition sums to the block total") {
    for (int trial = 0; trial < 100; ++trial) {
        const double reward = oracle::uniform(0, 1e4), fees = oracle::uniform(0, 1e3);
        std::vector<double> shares;
        double total = 0.0;
        for (int i = 0; i < 7; ++i) total += shares.emplace_back(oracle::uniform(0, 100));
        double sum = 0.0;
        for (double h : shares) sum += expected_miner_revenue(reward, fees, h, total);
        CHECK(sum == Approx(reward + fees).epsilon(1e-12));
    }
}

TEST_CASE("network emissions") {
    const EmissionFactor alpha{1.305};
    const double daily = network_emissions(58.91e6, alpha);
    CHECK(daily == Approx(76.89e6).epsilon(0.001));
    CHECK(annualize(daily) == Approx(28.06e9).epsilon(0.001));
    CHECK(network_emissions(0.0, alpha) == 0.0);
    CHECK(network_emissions(3.0, alpha) + network_emissions(4.0, alpha) ==
          Approx(network_emissions(7.0, alpha)));
    CHECK_THROWS_AS((void)network_emissions(-1.0, alpha), DomainError);
}

TEST_CASE("transaction fee and emissions lower bound") {
    const PriceContext ctx(3207.0);
    const EmissionFactor alpha{1.305};
    CHECK(tx_fee(450000, 61, ctx) == Approx(88.03).epsilon(0.01 / 88.03));
    CHECK(tx_fee(300000, 61, ctx) == Approx(58.69).epsilon(0.01 / 58.69));
    CHECK(tx_fee(0, 61, ctx) == 0.0);
    CHECK(tx_emissions_lower_bound(450000, 61, ctx, alpha) == Approx(114.90).epsilon(0.1 / 114.90));
    CHECK(tx_emissions_lower_bound(100000, 61, ctx, alpha) == Approx(25.54).epsilon(0.05 / 25.54));
    CHECK(tx_emissions_lower_bound(123456, 0, ctx, alpha) == 0.0);
    CHECK_THROWS_AS((void)tx_fee(-1, 61, ctx), DomainError);
    CHECK_THROWS_AS((void)tx_fee(1, -61, ctx), DomainError);

    const auto cost = tx_cost(80000, 61, ctx, alpha);
    CHECK(cost.fee == Approx(15.65).epsilon(0.01 / 15.65));
    CHECK(cost.emissions_lower_bound == Approx(20.42).epsilon(0.05 / 20.42));
}

TEST_CASE("transaction fee is linear and monotone") {
    const PriceContext ctx(2000.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double g = oracle::uniform(0, 1e6), p = oracle::uniform(0, 500);
        const double f = tx_fee(g, p, ctx);
        CHECK(tx_fee(2 * g, p, ctx) == Approx(2 * f).epsilon(1e-14));
        CHECK(tx_fee(g, 3 * p, ctx) == Approx(3 * f).epsilon(1e-14));
        CHECK(tx_fee(g + 1, p, ctx) >= f);
        CHECK(tx_fee(g, p + 1, ctx) >= f);
        CHECK(tx_emissions_lower_bound(g, p, ctx, EmissionFactor{2.0}) >=
              tx_emissions_lower_bound(g, p, ctx, EmissionFactor{1.0}));
    }
}
