#include "belitskii/io.hpp"

#include <fstream>
#include <sstream>

#include "belitskii/error.hpp"

namespace belitskii {

namespace {

std::string shape(size_t rows, size_t cols) { return std::to_string(rows) + "x" + std::to_string(cols); }

size_t read_dim(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw Error(ErrorKind::MalformedInput, std::string("missing or invalid dimension \"") + key + "\"");
    return j[key].get<size_t>();
}

} // namespace

Json matrix_to_json(const ExactMatrix& m) {
    Json out = Json::array();
    if (m.empty())
        return out;
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

ExactMatrix matrix_from_json(const Json& j, size_t rows, size_t cols, const char* name) {
    const std::string where = std::string(name) + " (expected " + shape(rows, cols) + ")";
    if (!j.is_array())
        throw Error(ErrorKind::MalformedInput, where + " is not an array");
    ExactMatrix m(rows, cols);
    if (rows == 0 || cols == 0) {
        // [] always; rows of [] are also accepted when cols == 0.
        if (j.empty())
            return m;
        if (cols == 0 && j.size() == rows) {
            for (const auto& row : j)
                if (!row.is_array() || !row.empty())
                    throw Error(ErrorKind::MalformedInput, where + " has entries");
            return m;
        }
        throw Error(ErrorKind::MalformedInput, where + " must be empty");
    }
    if (j.size() != rows)
        throw Error(ErrorKind::MalformedInput, where + " has " + std::to_string(j.size()) + " rows");
    for (size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw Error(ErrorKind::MalformedInput, where + ": row " + std::to_string(r) + " has the wrong length");
        for (size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string())
                throw Error(ErrorKind::MalformedInput, where + ": entries must be scalar strings");
            try {
                m(r, c) = parse_scalar(row[c].get<std::string>());
            } catch (const Error& e) {
                throw Error(ErrorKind::MalformedInput, where + ": " + e.what());
            }
        }
    }
    return m;
}

Json system_to_json(const SystemTriple& s) {
    const DimensionVector d = s.dims();
    Json out;
    out["m"] = d.m;
    out["n"] = d.n;
    out["l"] = d.l;
    out["A"] = matrix_to_json(s.a);
    out["B"] = matrix_to_json(s.b);
    out["C"] = matrix_to_json(s.c);
    return out;
}

SystemTriple system_from_json(const Json& j) {
    if (!j.is_object())
        throw Error(ErrorKind::MalformedInput, "system file must be a JSON object");
    const size_t m = read_dim(j, "m"), n = read_dim(j, "n"), l = read_dim(j, "l");
    for (const char* key : {"A", "B", "C"})
        if (!j.contains(key))
            throw Error(ErrorKind::MalformedInput, std::string("missing matrix \"") + key + "\"");
    return SystemTriple(matrix_from_json(j["A"], n, n, "A"), matrix_from_json(j["B"], n, m, "B"),
                        matrix_from_json(j["C"], l, n, "C"));
}

Json group_to_json(const GroupElement& g) {
    Json out;
    out["X"] = matrix_to_json(g.x);
    out["Y"] = matrix_to_json(g.y);
    out["Z"] = matrix_to_json(g.z);
    return out;
}

Json trace_to_json(const std::vector<ReducedBlock>& trace) {
    Json out = Json::array();
    for (const auto& b : trace) {
        Json e;
        e["kind"] = to_string(b.kind);
        e["region"] = to_string(b.location.region);
        e["rows"] = {b.location.row_begin, b.location.row_end};
        e["cols"] = {b.location.col_begin, b.location.col_end};
        if (b.kind == BlockKind::EdgeIdentity)
            e["rank"] = b.rank;
        if (b.kind == BlockKind::WeyrBlock) {
            Json blocks = Json::array();
            for (const auto& blk : b.structure.blocks)
                blocks.push_back({{"eigenvalue", to_string(blk.eigenvalue)}, {"partition", blk.partition}});
            e["structure"] = std::move(blocks);
        }
        e["sigma"] = b.sigma;
        out.push_back(std::move(e));
    }
    return out;
}

Json orbit_to_json(const OrbitInfo& info) {
    Json out;
    out["dim_orbit"] = info.dim_orbit;
    out["dim_stabilizer"] = info.dim_stabilizer;
    out["dim_group"] = info.dim_group;
    out["dim_system_space"] = info.dim_system_space;
    return out;
}

Json template_to_json(const Template& t) {
    auto tokens = [](const TemplateMatrix& m) {
        Json out = Json::array();
        for (const auto& row : m)
            if (!row.empty())
                out.push_back(row);
        return out;
    };
    Json out;
    out["id"] = t.id;
    out["m"] = t.d.m;
    out["n"] = t.d.n;
    out["l"] = t.d.l;
    out["A"] = tokens(t.a);
    out["B"] = tokens(t.b);
    out["C"] = tokens(t.c);
    out["parameters"] = t.parameters;
    out["distinct"] = t.eigen_parameters;
    return out;
}

Json report_to_json(const CatalogReport& r) {
    Json out;
    out["ok"] = r.ok();
    out["fixed_point_checks"] = r.fixed_point_checks;
    out["fixed_point_failures"] = r.fixed_point_failures;
    out["indecomposability_failures"] = r.indecomposability_failures;
    out["trials"] = r.trials;
    out["summands_checked"] = r.summands_checked;
    out["unmatched"] = r.unmatched;
    out["multiset_mismatches"] = r.multiset_mismatches;
    out["criterion_checks"] = r.criterion_checks;
    out["criterion_disagreements"] = r.criterion_disagreements;
    out["errors"] = r.errors;
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SystemTriple read_system_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::MalformedInput, "cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedInput, path.string() + ": " + e.what());
    }
    return system_from_json(j);
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::MalformedInput, "cannot write " + tmp.string());
        out << contents;
        if (!out)
            throw Error(ErrorKind::MalformedInput, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace belitskii
