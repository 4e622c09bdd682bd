#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "belitskii/analysis.hpp"
#include "belitskii/catalog.hpp"
#include "belitskii/reduction.hpp"

namespace belitskii {

using Json = nlohmann::ordered_json;

/// Rows of scalar strings; a matrix with no rows or no columns is [].
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j, size_t rows, size_t cols, const char* name);

/// {"m", "n", "l", "A", "B", "C"}. Throws MalformedInput on bad shape or
/// scalar syntax.
Json system_to_json(const SystemTriple& s);
SystemTriple system_from_json(const Json& j);

Json group_to_json(const GroupElement& g);
Json trace_to_json(const std::vector<ReducedBlock>& trace);
Json orbit_to_json(const OrbitInfo& info);
Json template_to_json(const Template& t);
Json report_to_json(const CatalogReport& r);

/// Two-space indentation, trailing newline.
std::string dump(const Json& j);

SystemTriple read_system_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

} // namespace belitskii
