#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <variant>

#include "gasprint/eip1559.hpp"
#include "gasprint/emission_factors.hpp"
#include "gasprint/scenario.hpp"

namespace gasprint::io {

/// One configuration document. The JSON object's "kind" member selects the
/// alternative: "regions", "gpu", "scenario" or "eip1559".
using ConfigDocument = std::variant<RegionSet, GpuProfile, Scenario, Eip1559Params>;

/// Parses and validates a configuration document. Relative series paths in
/// scenario documents resolve against `base_dir`.
///
/// Syntax and schema problems (bad JSON, unknown or missing keys, wrong
/// types) raise ParseError with a path such as `$.items[2].count`. Values
/// that parse but break a domain invariant raise DomainError with the same
/// kind of path prefix.
[[nodiscard]] ConfigDocument read_config(std::istream& in,
                                         const std::filesystem::path& base_dir = {});
[[nodiscard]] ConfigDocument read_config(const std::filesystem::path& path);

[[nodiscard]] RegionSet load_regions(const std::filesystem::path& path);
[[nodiscard]] GpuProfile load_gpu(const std::filesystem::path& path);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);
[[nodiscard]] Eip1559Params load_eip1559(const std::filesystem::path& path);

[[nodiscard]] std::string_view document_kind(const ConfigDocument& doc) noexcept;

}  // namespace gasprint::io
