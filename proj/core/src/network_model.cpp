#include "gasprint/network_model.hpp"

#include <cmath>

#include "gasprint/error.hpp"

namespace gasprint {

namespace {

void require_nonneg(double v, const char* what) {
    if (!(std::isfinite(v) && v >= 0.0)) throw DomainError(std::string(what) + " must be >= 0");
}

}  // namespace

PriceContext::PriceContext(double eth_price_usd) : eth_price_(eth_price_usd) {
    if (!(std::isfinite(eth_price_usd) && eth_price_usd > 0.0))
        throw DomainError("eth price must be > 0");
}

double expected_miner_revenue(double block_reward_usd, double fees_usd, double own_hash,
                              double total_hash) {
    require_nonneg(block_reward_usd, "block reward");
    require_nonneg(fees_usd, "fees");
    require_nonneg(own_hash, "own hash rate");
    if (!(std::isfinite(total_hash) && total_hash > 0.0))
        throw DomainError("total hash rate must be > 0");
    if (own_hash > total_hash) throw DomainError("own hash rate exceeds total hash rate");
    return (block_reward_usd + fees_usd) * own_hash / total_hash;
}

double network_emissions(double revenue_usd, EmissionFactor alpha) {
    require_nonneg(revenue_usd, "revenue");
    require_nonneg(alpha.kg_per_usd, "emission factor");
    return revenue_usd * alpha.kg_per_usd;
}

double tx_fee(double gas, double gas_price_gwei, const PriceContext& ctx) {
    require_nonneg(gas, "gas");
    require_nonneg(gas_price_gwei, "gas price");
    return gas * gas_price_gwei * ctx.gwei_price();
}

double tx_emissions_lower_bound(double gas, double gas_price_gwei, const PriceContext& ctx,
                                EmissionFactor alpha) {
    require_nonneg(alpha.kg_per_usd, "emission factor");
    return alpha.kg_per_usd * tx_fee(gas, gas_price_gwei, ctx);
}

TxCost tx_cost(double gas, double gas_price_gwei, const PriceContext& ctx, EmissionFactor alpha) {
    const double fee = tx_fee(gas, gas_price_gwei, ctx);
    require_nonneg(alpha.kg_per_usd, "emission factor");
    return {gas, gas_price_gwei, fee, alpha.kg_per_usd * fee};
}

}  // namespace gasprint
