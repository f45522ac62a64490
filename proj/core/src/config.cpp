#include "gasprint/config.hpp"

#include <fstream>
#include <initializer_list>
#include <istream>
#include <limits>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>

#include "gasprint/error.hpp"
#include "gasprint/series_csv.hpp"

namespace gasprint::io {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

/// A JSON object together with its path from the document root.
class Node {
public:
    Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

    [[nodiscard]] const std::string& path() const noexcept { return path_; }
    [[nodiscard]] const json& value() const noexcept { return value_; }

    void require_object() const {
        if (!value_.is_object()) fail("expected an object");
    }

    void allow_only(std::initializer_list<std::string_view> keys) const {
        require_object();
        for (const auto& [key, _] : value_.items()) {
            bool known = false;
            for (auto k : keys) known = known || key == k;
            if (!known) throw ParseError(path_ + "." + key + ": unknown key");
        }
    }

    [[nodiscard]] bool has(std::string_view key) const {
        return value_.contains(std::string(key));
    }

    [[nodiscard]] Node child(std::string_view key) const {
        const std::string k(key);
        if (!value_.contains(k)) throw ParseError(path_ + "." + k + ": missing required key");
        return Node(value_.at(k), path_ + "." + k);
    }

    [[nodiscard]] Node element(std::size_t i) const {
        return Node(value_.at(i), path_ + "[" + std::to_string(i) + "]");
    }

    [[nodiscard]] double number() const {
        if (!value_.is_number()) fail("expected a number");
        return value_.get<double>();
    }

    [[nodiscard]] std::uint64_t count() const {
        if (value_.is_number_unsigned()) return value_.get<std::uint64_t>();
        if (value_.is_number_integer() && value_.get<std::int64_t>() >= 0)
            return static_cast<std::uint64_t>(value_.get<std::int64_t>());
        fail("expected a non-negative integer");
    }

    [[nodiscard]] std::string text() const {
        if (!value_.is_string()) fail("expected a string");
        return value_.get<std::string>();
    }

    [[nodiscard]] bool boolean() const {
        if (!value_.is_boolean()) fail("expected true or false");
        return value_.get<bool>();
    }

    [[nodiscard]] std::size_t array_size() const {
        if (!value_.is_array()) fail("expected an array");
        return value_.size();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(path_ + ": " + message);
    }

private:
    const json& value_;
    std::string path_;
};

/// Runs `build`, prefixing domain errors with the node's path.
template <typename Build>
auto with_path(const Node& node, Build&& build) -> decltype(build()) {
    try {
        return build();
    } catch (const DomainError& e) {
        throw DomainError(node.path() + ": " + e.what());
    }
}

RegionSet parse_regions(const Node& root) {
    root.allow_only({"kind", "regions"});
    const Node list = root.child("regions");
    std::vector<RegionProfile> regions;
    for (std::size_t i = 0; i < list.array_size(); ++i) {
        const Node r = list.element(i);
        r.allow_only({"name", "hash_share", "electricity_price", "cipk"});
        RegionProfile p{r.child("name").text(), r.child("hash_share").number(),
                        r.child("electricity_price").number(), r.child("cipk").number()};
        with_path(r, [&] {
            if (p.hash_share < 0.0) throw DomainError("hash_share must be >= 0");
            if (p.electricity_price <= 0.0) throw DomainError("electricity_price must be > 0");
            if (p.cipk < 0.0) throw DomainError("cipk must be >= 0");
            return 0;
        });
        regions.push_back(std::move(p));
    }
    return with_path(list, [&] { return RegionSet(std::move(regions)); });
}

GpuProfile parse_gpu(const Node& root) {
    root.allow_only({"kind", "name", "unit_price", "hash_rate", "power_draw", "embodied_emissions",
                     "lifetime_hours"});
    GpuProfile gpu{root.child("name").text(),          root.child("unit_price").number(),
                   root.child("hash_rate").number(),   root.child("power_draw").number(),
                   root.child("embodied_emissions").number(),
                   root.child("lifetime_hours").number()};
    with_path(root, [&] {
        validate(gpu);
        return 0;
    });
    return gpu;
}

Eip1559Params parse_eip1559(const Node& root) {
    root.allow_only({"kind", "initial_supply", "total_value", "block_subsidy", "burn_per_block"});
    Eip1559Params p{root.child("initial_supply").number(), root.child("total_value").number(),
                    root.child("block_subsidy").number(), root.child("burn_per_block").number()};
    with_path(root, [&] {
        validate(p);
        return 0;
    });
    return p;
}

GasPriceSeries load_series(const Node& node, const fs::path& base_dir) {
    fs::path p = node.text();
    if (p.is_relative()) p = base_dir / p;
    try {
        return read_gas_price_csv(p);
    } catch (const ParseError& e) {
        throw ParseError(node.path() + ": " + e.what());
    }
}

GasPricingStrategy parse_pricing(const Node& node, const fs::path& base_dir) {
    node.require_object();
    const std::string strategy = node.child("strategy").text();
    if (strategy == "fixed") {
        node.allow_only({"strategy", "gwei"});
        return pricing::Fixed{node.child("gwei").number()};
    }
    if (strategy != "daily-average" && strategy != "daily-minimum" && strategy != "best-hour")
        node.child("strategy").fail("unknown strategy '" + strategy +
                                    "' (fixed, daily-average, daily-minimum, best-hour)");
    node.allow_only({"strategy", "series"});
    GasPriceSeries series = load_series(node.child("series"), base_dir);
    if (strategy == "daily-average") return pricing::DailyAverage{std::move(series)};
    if (strategy == "daily-minimum") return pricing::DailyMinimum{std::move(series)};
    return pricing::BestHour{std::move(series)};
}

ScenarioItem parse_item(const Node& node) {
    node.allow_only({"kind", "label", "gas", "count"});
    const Node kind_node = node.child("kind");
    const std::string kind_text = kind_node.text();
    TxKind kind;
    try {
        kind = parse_tx_kind(kind_text);
    } catch (const DomainError& e) {
        kind_node.fail(e.what());
    }
    ScenarioItem item;
    item.count = node.child("count").count();
    if (kind == TxKind::Custom) {
        item.tx = {kind, node.child("label").text(), node.child("gas").number()};
    } else {
        item.tx = reference::nft_template(kind);
        if (node.has("label")) item.tx.label = node.child("label").text();
        if (node.has("gas")) item.tx.gas = node.child("gas").number();
    }
    return item;
}

Scenario parse_scenario(const Node& root, const fs::path& base_dir) {
    root.allow_only({"kind", "name", "eth_price", "alpha", "bids_on_chain", "offset_rate", "pricing",
                     "series", "items"});
    const double eth_price = root.child("eth_price").number();
    Scenario s{
        .name = root.has("name") ? root.child("name").text() : std::string("scenario"),
        .items = {},
        .pricing = parse_pricing(root.child("pricing"), base_dir),
        .ctx = with_path(root.child("eth_price"), [&] { return PriceContext(eth_price); }),
        .alpha = EmissionFactor{root.child("alpha").number()},
        .bids_on_chain = root.has("bids_on_chain") ? root.child("bids_on_chain").boolean() : true,
        .offset_rate = root.has("offset_rate") ? root.child("offset_rate").number()
                                               : kDefaultOffsetRate,
        .reference_series = std::nullopt,
    };
    if (root.has("series")) s.reference_series = load_series(root.child("series"), base_dir);
    const Node items = root.child("items");
    for (std::size_t i = 0; i < items.array_size(); ++i) s.items.push_back(parse_item(items.element(i)));
    with_path(root, [&] {
        validate(s);
        return 0;
    });
    return s;
}

template <typename T>
T expect_kind(ConfigDocument doc, const fs::path& path) {
    if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
    throw ParseError(path.string() + ": unexpected document kind '" +
                     std::string(document_kind(doc)) + "'");
}

}  // namespace

ConfigDocument read_config(std::istream& in, const fs::path& base_dir) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const Node root(doc, "$");
    root.require_object();
    const std::string kind = root.child("kind").text();
    if (kind == "regions") return parse_regions(root);
    if (kind == "gpu") return parse_gpu(root);
    if (kind == "scenario") return parse_scenario(root, base_dir);
    if (kind == "eip1559") return parse_eip1559(root);
    root.child("kind").fail("unknown document kind '" + kind + "' (regions, gpu, scenario, eip1559)");
}

ConfigDocument read_config(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return read_config(in, path.parent_path());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(path.string() + ": " + e.what());
    }
}

RegionSet load_regions(const fs::path& path) { return expect_kind<RegionSet>(read_config(path), path); }
GpuProfile load_gpu(const fs::path& path) { return expect_kind<GpuProfile>(read_config(path), path); }
Scenario load_scenario(const fs::path& path) { return expect_kind<Scenario>(read_config(path), path); }
Eip1559Params load_eip1559(const fs::path& path) {
    return expect_kind<Eip1559Params>(read_config(path), path);
}

std::string_view document_kind(const ConfigDocument& doc) noexcept {
    switch (doc.index()) {
        case 0: return "regions";
        case 1: return "gpu";
        case 2: return "scenario";
        default: return "eip1559";
    }
}

}  // namespace gasprint::io
