#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gasprint/gasprint.hpp"

namespace gasprint::cli {

namespace {

enum class OutputMode { Table, Csv };

/// Rows of name / value / unit for commands that produce a handful of scalars.
class ScalarReport {
public:
    void add(std::string name, double value, std::string unit, int decimals = 2) {
        rows_.push_back({std::move(name), value, std::move(unit), decimals});
    }

    void print(std::ostream& out, OutputMode mode) const {
        if (mode == OutputMode::Csv) {
            std::string buf = "Quantity;Value\n";
            for (const auto& r : rows_) buf += r.name + ";" + io::format_number(r.value) + "\n";
            out << buf;
            return;
        }
        io::TextTable table({"Quantity", "Value", "Unit"});
        for (const auto& r : rows_) table.add_row({r.name, io::fixed(r.value, r.decimals), r.unit});
        table.print(out);
    }

private:
    struct Row {
        std::string name;
        double value;
        std::string unit;
        int decimals;
    };
    std::vector<Row> rows_;
};

struct AlphaOptions {
    std::string regions;
    std::string gpu;
};

struct NetworkOptions {
    double revenue = 0.0;
    double alpha = reference::kAlphaTotal;
    bool annualize = false;
};

struct TxOptions {
    double gas = 0.0;
    double gas_price = reference::kAverageGasPriceGwei;
    double eth_price = reference::kEthPriceUsd;
    double alpha = reference::kAlphaTotal;
};

struct ChainOptions {
    std::string params_file;
    std::optional<double> s0, v, m, b;
    std::uint64_t horizon = reference::kLondonToMergeBlocks;
    std::uint64_t every = 1;
    std::string output;
    std::optional<double> fee;
};

struct BaseFeeOptions {
    double basefee = 0.0;
    double target = 15e6;
    std::vector<double> gas_used;
};

struct ScenarioOptions {
    std::string file;
    std::string series;
    bool offchain_bids = false;
    bool min_gas = false;
    bool best_hour = false;
    std::optional<double> offset_rate;
};

struct SeriesOptions {
    std::string file;
};

Eip1559Params resolve_params(const ChainOptions& o) {
    Eip1559Params p = o.params_file.empty() ? reference::mainnet_2021() : io::load_eip1559(o.params_file);
    if (o.s0) p.initial_supply = *o.s0;
    if (o.v) p.total_value = *o.v;
    if (o.m) p.block_subsidy = *o.m;
    if (o.b) p.burn_per_block = *o.b;
    return p;
}

/// Writes a Block;Revenue series, keeping every `every`-th row and the last.
template <typename Rows, typename Project>
void emit_series(const ChainOptions& o, std::ostream& out, const Rows& rows, Project project) {
    std::vector<io::SeriesRow> kept;
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (i % o.every == 0 || i + 1 == n) kept.push_back(project(rows[i]));
    if (o.output.empty() || o.output == "-") {
        io::write_series_csv(out, io::kRevenueHeaderX, io::kRevenueHeaderY, kept);
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw DomainError("cannot write '" + o.output + "'");
    io::write_series_csv(file, io::kRevenueHeaderX, io::kRevenueHeaderY, kept);
}

void print_params(std::ostream& out, const Eip1559Params& p, std::uint64_t horizon) {
    out << "S0 = " << io::format_number(p.initial_supply) << " ETH, V = " << io::format_number(p.total_value)
        << " USD, m = " << io::format_number(p.block_subsidy) << " ETH/block, b = "
        << io::format_number(p.burn_per_block) << " USD/block, horizon = " << horizon << " blocks\n\n";
}

void run_alpha(const AlphaOptions& o, OutputMode mode, std::ostream& out) {
    const RegionSet regions = o.regions.empty() ? reference::ethereum_regions_2021() : io::load_regions(o.regions);
    const GpuProfile gpu = o.gpu.empty() ? reference::rx590() : io::load_gpu(o.gpu);
    const auto agg = aggregate_regions(regions);
    const auto breakdown = gpu_breakdown(gpu, agg.electricity_price, agg.factor);
    const auto alpha = alpha_total(breakdown);

    if (mode == OutputMode::Csv) {
        ScalarReport r;
        r.add("electricity_price", agg.electricity_price, "");
        r.add("cipk", agg.cipk, "");
        r.add("electricity_factor", agg.factor.kg_per_usd, "");
        r.add("hardware_cost", breakdown.hardware_cost, "");
        r.add("electricity_cost", breakdown.electricity_cost, "");
        r.add("hardware_emissions", breakdown.hardware_emissions, "");
        r.add("electricity_emissions", breakdown.electricity_emissions, "");
        r.add("hardware_share", breakdown.hardware_share(), "");
        r.add("alpha_total", alpha.kg_per_usd, "");
        r.print(out, mode);
        return;
    }

    io::TextTable region_table({"Region", "Hash share", "USD/kWh", "kgCO2eq/kWh", "kgCO2eq/USD"});
    for (const auto& reg : regions.regions())
        region_table.add_row({reg.name, io::fixed(100.0 * reg.hash_share, 1) + "%",
                              io::fixed(reg.electricity_price, 4), io::fixed(reg.cipk, 3),
                              io::fixed(regional_electricity_factor(reg.electricity_price, reg.cipk).kg_per_usd, 3)});
    region_table.add_rule();
    region_table.add_row({"Overall", io::fixed(100.0 * regions.raw_share_total(), 1) + "%",
                          io::fixed(agg.electricity_price, 4), io::fixed(agg.cipk, 3),
                          io::fixed(agg.factor.kg_per_usd, 3)});
    region_table.print(out);

    out << "\n" << gpu.name << " over " << io::format_number(gpu.lifetime_hours) << " h\n";
    io::TextTable cost_table({"Component", "Cost (USD)", "GHG (kgCO2eq)"});
    cost_table.add_row({"Hardware", io::fixed(breakdown.hardware_cost), io::fixed(breakdown.hardware_emissions)});
    cost_table.add_row({"Electricity", io::fixed(breakdown.electricity_cost),
                        io::fixed(breakdown.electricity_emissions)});
    cost_table.add_rule();
    cost_table.add_row({"Total", io::fixed(breakdown.total_cost()), io::fixed(breakdown.total_emissions())});
    cost_table.print(out);

    out << "\nhardware share of cost: " << io::fixed(breakdown.hardware_share(), 4) << "\n"
        << "alpha_hw:  " << io::fixed(breakdown.hardware_factor().kg_per_usd, 4) << " kgCO2eq/USD\n"
        << "alpha_el:  " << io::fixed(breakdown.electricity_factor().kg_per_usd, 4) << " kgCO2eq/USD\n"
        << "alpha_tot: " << io::fixed(alpha.kg_per_usd, 3) << " kgCO2eq/USD\n";
}

void run_network(const NetworkOptions& o, OutputMode mode, std::ostream& out) {
    const double daily = network_emissions(o.revenue, EmissionFactor{o.alpha});
    ScalarReport r;
    r.add("revenue", o.revenue, "USD");
    r.add("alpha", o.alpha, "kgCO2eq/USD", 3);
    r.add("emissions", daily, "kgCO2eq");
    if (o.annualize) r.add("emissions_per_year", annualize(daily), "kgCO2eq");
    r.print(out, mode);
}

void run_tx(const TxOptions& o, OutputMode mode, std::ostream& out) {
    const auto cost = tx_cost(o.gas, o.gas_price, PriceContext(o.eth_price), EmissionFactor{o.alpha});
    ScalarReport r;
    r.add("gas", cost.gas, "gas", 0);
    r.add("gas_price", cost.gas_price, "Gwei");
    r.add("fee", cost.fee, "USD");
    r.add("emissions_lower_bound", cost.emissions_lower_bound, "kgCO2eq");
    r.print(out, mode);
}

void run_simulate(const ChainOptions& o, OutputMode mode, std::ostream& out) {
    const auto p = resolve_params(o);
    if (mode == OutputMode::Csv) {
        const auto traj = simulate(p, o.horizon);
        emit_series(o, out, traj.points(), [](const SupplyPoint& pt) {
            return io::SeriesRow{static_cast<double>(pt.block), pt.cumulative_revenue};
        });
        return;
    }
    const auto last = simulate_final(p, o.horizon);
    print_params(out, p, o.horizon);
    ScalarReport r;
    r.add("final_supply", last.supply, "ETH");
    r.add("final_price", last.price, "USD/ETH");
    r.add("cumulative_revenue", last.cumulative_revenue, "USD");
    r.print(out, mode);
}

void run_closed_form(const ChainOptions& o, OutputMode mode, std::ostream& out, std::ostream& err) {
    const auto p = resolve_params(o);
    const auto last = simulate_final(p, o.horizon);
    ScalarReport r;
    r.add("supply_recurrence", last.supply, "ETH", 4);
    r.add("supply_closed_form", supply_closed_form(p, o.horizon), "ETH", 4);
    r.add("supply_continuous", supply_continuous(p, static_cast<double>(o.horizon)), "ETH", 4);
    r.add("revenue_recurrence", last.cumulative_revenue, "USD");
    try {
        r.add("revenue_closed_form", revenue_closed_form(p, o.horizon), "USD");
    } catch (const DomainError& e) {
        err << "revenue closed form unavailable: " << e.what() << "\n";
    }
    if (mode == OutputMode::Table) print_params(out, p, o.horizon);
    r.print(out, mode);
}

void run_delta(const ChainOptions& o, OutputMode mode, std::ostream& out) {
    const auto p = resolve_params(o);
    const double fee = o.fee.value_or(100.0);
    const auto series = fee_burn_delta(p, fee, o.horizon);
    if (mode == OutputMode::Csv) {
        emit_series(o, out, series, [](const RevenueDelta& d) {
            return io::SeriesRow{static_cast<double>(d.block), d.delta_revenue};
        });
        return;
    }
    print_params(out, p, o.horizon);
    ScalarReport r;
    r.add("fee", fee, "USD");
    r.add("delta_revenue", series.back().delta_revenue, "USD", 4);
    r.add("legacy_delta_revenue", fee, "USD");
    if (fee > 0.0) r.add("ratio_to_legacy", series.back().delta_revenue / fee, "", 5);
    r.print(out, mode);
}

void run_legacy(const ChainOptions& o, OutputMode mode, std::ostream& out) {
    const auto p = resolve_params(o);
    const double fee = o.fee.value_or(p.burn_per_block);
    const double legacy = legacy_revenue_total(p, fee, o.horizon);
    const double burn = simulate_final(p, o.horizon).cumulative_revenue;
    if (mode == OutputMode::Table) print_params(out, p, o.horizon);
    ScalarReport r;
    r.add("legacy_revenue", legacy, "USD");
    r.add("burn_revenue", burn, "USD");
    r.add("burn_to_legacy", legacy > 0.0 ? burn / legacy : 0.0, "", 4);
    r.add("emissions_reduction", legacy > 0.0 ? 1.0 - burn / legacy : 0.0, "", 4);
    r.print(out, mode);
}

void run_basefee(const BaseFeeOptions& o, OutputMode mode, std::ostream& out) {
    BaseFeeState state{o.basefee, o.target};
    ScalarReport r;
    r.add("basefee_0", state.basefee, "Gwei", 6);
    for (std::size_t i = 0; i < o.gas_used.size(); ++i) {
        state = basefee_next(state, o.gas_used[i]);
        r.add("basefee_" + std::to_string(i + 1), state.basefee, "Gwei", 6);
    }
    r.print(out, mode);
}

void run_scenario(const ScenarioOptions& o, OutputMode mode, std::ostream& out) {
    Scenario scenario = io::load_scenario(o.file);
    if (o.offset_rate) scenario.offset_rate = *o.offset_rate;
    std::optional<GasPriceSeries> series;
    if (!o.series.empty()) series = io::read_gas_price_csv(std::filesystem::path(o.series));

    const auto baseline = evaluate(scenario);
    const Mitigations m{o.offchain_bids, o.min_gas, o.best_hour};
    const bool mitigated = m.offchain_bids || m.min_gas || m.best_hour;
    const auto final_report =
        mitigated ? evaluate(apply_mitigations(scenario, m, series ? &*series : nullptr)) : baseline;

    if (mode == OutputMode::Csv) {
        io::write_scenario_csv(out, final_report);
        return;
    }
    io::print_scenario_table(out, baseline);
    if (!mitigated) return;
    out << "\nwith mitigations:";
    if (m.offchain_bids) out << " off-chain bids";
    if (m.best_hour) out << " best-hour pricing";
    else if (m.min_gas) out << " minimum gas price";
    out << "\n\n";
    io::print_scenario_table(out, final_report);
    out << "\nreduction: " << io::fixed(100.0 * emissions_reduction(baseline, final_report), 1) << "%\n";
}

void run_series_stats(const SeriesOptions& o, OutputMode mode, std::ostream& out) {
    const auto st = series_stats(io::read_gas_price_csv(std::filesystem::path(o.file)));
    ScalarReport r;
    r.add("average", st.average, "Gwei");
    r.add("minimum", st.minimum, "Gwei");
    r.add("best_hour", st.best_hour, "UTC hour", 0);
    r.add("best_hour_mean", st.best_hour_mean, "Gwei");
    r.print(out, mode);
}

void add_chain_options(CLI::App* cmd, ChainOptions& o, bool with_fee, const std::string& fee_help) {
    cmd->add_option("--params", o.params_file, "eip1559 parameter file (JSON, kind \"eip1559\")")
        ->check(CLI::ExistingFile);
    cmd->add_option("--s0", o.s0, "initial circulating supply in Ether (default 115.7e6)");
    cmd->add_option("--v", o.v, "total dollar value of the supply in USD (default 341e9)");
    cmd->add_option("--m", o.m, "Ether minted per block (default 2)");
    cmd->add_option("--b", o.b, "USD of fees burned per block (default 2650)");
    cmd->add_option("--horizon", o.horizon, "number of blocks (default 1160000)");
    if (with_fee) cmd->add_option("--fee", o.fee, fee_help);
}

void add_series_output(CLI::App* cmd, ChainOptions& o) {
    cmd->add_option("--every", o.every, "with --format csv, keep every N-th block (the last block is always kept)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", o.output, "with --format csv, write the Block;Revenue series to this file");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Greenhouse-gas emissions of proof-of-work blockchain activity", "gasprint"};
    app.require_subcommand(1);
    OutputMode mode = OutputMode::Table;
    app.add_option("--format", mode, "output format: table or csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputMode>{{"table", OutputMode::Table}, {"csv", OutputMode::Csv}},
            CLI::ignore_case));

    std::function<void()> action;

    AlphaOptions alpha_o;
    auto* alpha = app.add_subcommand("alpha", "estimate kgCO2eq per USD of mining revenue from GPU and region data");
    alpha->add_option("--regions", alpha_o.regions, "region set file (default: built-in 2021 regions)")
        ->check(CLI::ExistingFile);
    alpha->add_option("--gpu", alpha_o.gpu, "GPU profile file (default: built-in AMD RX 590)")
        ->check(CLI::ExistingFile);
    alpha->callback([&] { action = [&] { run_alpha(alpha_o, mode, out); }; });

    NetworkOptions net_o;
    auto* network = app.add_subcommand("network", "network emissions for a given miner revenue");
    network->add_option("--revenue", net_o.revenue, "miner revenue in USD")->required();
    network->add_option("--alpha", net_o.alpha, "kgCO2eq per USD (default 1.305)");
    network->add_flag("--annualize", net_o.annualize, "treat revenue as daily and add the yearly total (x365)");
    network->callback([&] { action = [&] { run_network(net_o, mode, out); }; });

    TxOptions tx_o;
    auto* tx = app.add_subcommand("tx", "fee and emissions lower bound of one transaction (first-price auction)");
    tx->add_option("--gas", tx_o.gas, "gas used")->required();
    tx->add_option("--gas-price", tx_o.gas_price, "gas price in Gwei (default 61)");
    tx->add_option("--eth-price", tx_o.eth_price, "Ether price in USD (default 3207)");
    tx->add_option("--alpha", tx_o.alpha, "kgCO2eq per USD (default 1.305)");
    tx->callback([&] { action = [&] { run_tx(tx_o, mode, out); }; });

    ChainOptions chain_o;
    BaseFeeOptions basefee_o;
    auto* eip = app.add_subcommand("eip1559", "burn-regime supply, price and miner revenue");
    eip->require_subcommand(1);
    auto* sim = eip->add_subcommand("simulate", "run the block recurrence; csv output is the cumulative revenue series");
    add_chain_options(sim, chain_o, false, "");
    add_series_output(sim, chain_o);
    sim->callback([&] { action = [&] { run_simulate(chain_o, mode, out); }; });
    auto* closed = eip->add_subcommand("closed-form", "compare recurrence, closed forms and the continuous approximation at --horizon");
    add_chain_options(closed, chain_o, false, "");
    closed->callback([&] { action = [&] { run_closed_form(chain_o, mode, out, err); }; });
    auto* delta = eip->add_subcommand("delta", "extra miner revenue caused by burning one fee at block 0");
    add_chain_options(delta, chain_o, true, "fee burned at block 0 in USD (default 100)");
    add_series_output(delta, chain_o);
    delta->callback([&] { action = [&] { run_delta(chain_o, mode, out); }; });
    auto* legacy = eip->add_subcommand("legacy", "miner revenue with fees paid to miners versus burned");
    add_chain_options(legacy, chain_o, true, "fee revenue per block in USD (default: --b)");
    legacy->callback([&] { action = [&] { run_legacy(chain_o, mode, out); }; });
    auto* basefee = eip->add_subcommand("basefee", "apply the base fee update rule to a sequence of blocks");
    basefee->add_option("--basefee", basefee_o.basefee, "starting base fee in Gwei")->required();
    basefee->add_option("--target", basefee_o.target, "target gas per block (default 15e6)");
    basefee->add_option("--gas-used", basefee_o.gas_used, "gas used by each successive block")->required();
    basefee->callback([&] { action = [&] { run_basefee(basefee_o, mode, out); }; });

    ScenarioOptions sc_o;
    auto* scenario = app.add_subcommand("scenario", "evaluate an NFT lifecycle scenario and mitigations");
    scenario->add_option("--file", sc_o.file, "scenario file (JSON, kind \"scenario\")")
        ->required()
        ->check(CLI::ExistingFile);
    scenario->add_flag("--offchain-bids", sc_o.offchain_bids, "move bids off-chain");
    scenario->add_flag("--min-gas", sc_o.min_gas, "pay the daily mean of the minimum inclusion price");
    scenario->add_flag("--best-hour", sc_o.best_hour, "transact in the cheapest hour of the day");
    scenario->add_option("--series", sc_o.series, "Hour;Gas Price file used by the price mitigations")
        ->check(CLI::ExistingFile);
    scenario->add_option("--offset-rate", sc_o.offset_rate, "carbon offset price in USD per kgCO2eq (default 0.004)");
    scenario->callback([&] { action = [&] { run_scenario(sc_o, mode, out); }; });

    SeriesOptions series_o;
    auto* series = app.add_subcommand("series", "gas price series tools");
    series->require_subcommand(1);
    auto* stats = series->add_subcommand("stats", "average, minimum and cheapest hour of a gas price series");
    stats->add_option("--file", series_o.file, "Hour;Gas Price file")->required()->check(CLI::ExistingFile);
    stats->callback([&] { action = [&] { run_series_stats(series_o, mode, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (action) action();
        return kExitOk;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitDomainError;
}

}  // namespace gasprint::cli
