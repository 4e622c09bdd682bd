#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "belitskii/analysis.hpp"
#include "belitskii/batch.hpp"
#include "belitskii/catalog.hpp"
#include "belitskii/error.hpp"
#include "belitskii/io.hpp"

namespace fs = std::filesystem;
using namespace belitskii;

namespace {

constexpr int kNotEquivalent = 1;
constexpr int kMalformed = 2;
constexpr int kNotInField = 3;
constexpr int kEmptyState = 4;
constexpr int kSizeMismatch = 5;
constexpr int kOther = 6;

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::MalformedInput:
    case ErrorKind::MalformedScalar:
    case ErrorKind::ZeroDenominator:
        return kMalformed;
    case ErrorKind::EigenvaluesNotInField: return kNotInField;
    case ErrorKind::EmptyStateSpace: return kEmptyState;
    case ErrorKind::SizeMismatch: return kSizeMismatch;
    default: return kOther;
    }
}

size_t max_dim() {
    const char* env = std::getenv("BELITSKII_MAX_DIM");
    if (!env || !*env)
        return 12;
    try {
        return std::stoul(env);
    } catch (const std::exception&) {
        throw Error(ErrorKind::MalformedInput, "BELITSKII_MAX_DIM must be a non-negative integer");
    }
}

SystemTriple load(const std::string& path) {
    SystemTriple s = read_system_file(path);
    const size_t cap = max_dim();
    if (s.dims().total() > cap)
        throw Error(ErrorKind::MalformedInput, path + ": |d| = " + std::to_string(s.dims().total()) +
                                                   " exceeds BELITSKII_MAX_DIM = " + std::to_string(cap));
    return s;
}

std::string sigma_line(const std::vector<ReducedBlock>& trace) {
    std::string out;
    for (const auto& b : trace)
        out += (out.empty() ? "" : " ") + std::to_string(b.sigma);
    return out;
}

void print_system(std::ostream& os, const SystemTriple& s, const std::string& indent = "") {
    os << indent << "d = " << to_string(s.dims()) << "\n";
    os << indent << "A = " << s.a << "\n" << indent << "B = " << s.b << "\n" << indent << "C = " << s.c << "\n";
}

void print_group(std::ostream& os, const GroupElement& g) {
    os << "X = " << g.x << "\nY = " << g.y << "\nZ = " << g.z << "\n";
}

void print_trace(std::ostream& os, const std::vector<ReducedBlock>& trace) {
    os << "trace:\n";
    size_t k = 0;
    for (const auto& b : trace) {
        const auto& loc = b.location;
        os << "  " << ++k << "  " << to_string(loc.region) << "[" << loc.row_begin << ":" << loc.row_end << ", "
           << loc.col_begin << ":" << loc.col_end << "]  " << to_string(b.kind) << " " << b.rows << "x" << b.cols;
        if (b.kind == BlockKind::EdgeIdentity)
            os << " r=" << b.rank;
        os << "  sigma " << b.sigma << "\n";
    }
    size_t total = 0;
    for (const auto& b : trace)
        total += b.sigma;
    os << "sigma: " << sigma_line(trace) << "\n";
    os << "total: " << total << "\n";
}

Json canon_json(const CanonicalSystem& c, bool trace, bool witness) {
    Json out;
    out["canonical"] = system_to_json(c.canonical);
    if (witness)
        out["witness"] = group_to_json(c.witness);
    if (trace) {
        out["trace"] = trace_to_json(c.trace);
        Json sigma = Json::array();
        size_t total = 0;
        for (const auto& b : c.trace) {
            sigma.push_back(b.sigma);
            total += b.sigma;
        }
        out["sigma"] = std::move(sigma);
        out["sigma_total"] = total;
    }
    return out;
}

struct Options {
    bool json = false;
    bool trace = false;
    bool witness = false;
    bool oracle = false;
    bool serial = false;
    std::string input;
    std::string input2;
    std::string output;
    std::string batch;
    std::string out_dir;
    std::string export_dir;
    size_t dim = 4;
    size_t verify = 0;
    bool verify_set = false;
    std::uint64_t seed = 1;
};

int run_canon_batch(const Options& o) {
    const fs::path dir(o.batch);
    if (!fs::is_directory(dir))
        throw Error(ErrorKind::MalformedInput, o.batch + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    const fs::path out_dir = o.out_dir.empty() ? dir / "canonical" : fs::path(o.out_dir);
    fs::create_directories(out_dir);

    struct Result {
        int code = 0;
        std::string message;
    };
    std::vector<Result> results(files.size());
    for_each_index(
        files.size(),
        [&](size_t k) {
            try {
                CanonicalSystem c = canonicalize(load(files[k].string()));
                write_file_atomically(out_dir / files[k].filename(), dump(canon_json(c, o.trace, o.witness)));
                results[k].message = "ok";
            } catch (const Error& e) {
                results[k] = {exit_code(e.kind()), e.what()};
            } catch (const std::exception& e) {
                results[k] = {kOther, e.what()};
            }
        },
        o.serial ? Execution::Serial : Execution::Parallel);

    int worst = 0;
    Json summary = Json::array();
    for (size_t k = 0; k < files.size(); ++k) {
        worst = std::max(worst, results[k].code);
        if (o.json)
            summary.push_back({{"file", files[k].filename().string()},
                               {"exit", results[k].code},
                               {"message", results[k].message}});
        else
            std::cout << files[k].filename().string() << ": " << results[k].message << "\n";
    }
    if (o.json)
        std::cout << dump(Json{{"output_dir", out_dir.string()}, {"files", summary}});
    return worst;
}

int run_canon(const Options& o) {
    if (!o.batch.empty())
        return run_canon_batch(o);
    if (o.input.empty())
        throw Error(ErrorKind::MalformedInput, "canon needs an input file or --batch");
    CanonicalSystem c = canonicalize(load(o.input));
    if (!o.output.empty())
        write_file_atomically(o.output, dump(system_to_json(c.canonical)));
    if (o.json) {
        std::cout << dump(canon_json(c, o.trace, o.witness));
        return 0;
    }
    print_system(std::cout, c.canonical);
    if (o.witness) {
        std::cout << "witness:\n";
        print_group(std::cout, c.witness);
    }
    if (o.trace)
        print_trace(std::cout, c.trace);
    return 0;
}

int run_equiv(const Options& o) {
    const SystemTriple s1 = load(o.input), s2 = load(o.input2);
    if (s1.dims() != s2.dims())
        throw Error(ErrorKind::SizeMismatch,
                    "dimension vectors differ: " + to_string(s1.dims()) + " vs " + to_string(s2.dims()));
    const CanonicalSystem c1 = canonicalize(s1), c2 = canonicalize(s2);
    const bool same = c1.canonical == c2.canonical;
    if (o.json) {
        Json out;
        out["equivalent"] = same;
        if (same && o.witness)
            out["witness"] = group_to_json(c2.witness.inverse() * c1.witness);
        std::cout << dump(out);
    } else {
        std::cout << (same ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
        if (same && o.witness)
            print_group(std::cout, c2.witness.inverse() * c1.witness);
    }
    return same ? 0 : kNotEquivalent;
}

std::string match_label(const CanonicalSystem& c) {
    auto m = match_template(c);
    if (!m)
        return "";
    std::string label = m->id;
    for (const auto& [name, v] : m->params)
        label += " " + name + "=" + to_string(v);
    return label;
}

int run_decompose(const Options& o) {
    const SystemTriple s = load(o.input);
    const auto parts = decompose(s);
    if (!o.out_dir.empty()) {
        fs::create_directories(o.out_dir);
        for (size_t k = 0; k < parts.size(); ++k)
            write_file_atomically(fs::path(o.out_dir) / ("summand-" + std::to_string(k + 1) + ".json"),
                                  dump(system_to_json(parts[k].canonical)));
    }
    if (o.json) {
        Json list = Json::array();
        for (const auto& p : parts) {
            Json e;
            e["system"] = system_to_json(p.canonical);
            auto m = match_template(p);
            if (m) {
                e["template"] = m->id;
                Json params = Json::object();
                for (const auto& [name, v] : m->params)
                    params[name] = to_string(v);
                e["params"] = std::move(params);
            } else {
                e["template"] = nullptr;
            }
            list.push_back(std::move(e));
        }
        std::cout << dump(Json{{"d", {s.dims().m, s.dims().n, s.dims().l}}, {"summands", list}});
        return 0;
    }
    std::cout << parts.size() << " summand(s) of d = " << to_string(s.dims()) << "\n";
    for (size_t k = 0; k < parts.size(); ++k) {
        const std::string label = match_label(parts[k]);
        std::cout << "summand " << k + 1 << ": " << (label.empty() ? "unmatched" : label) << "\n";
        print_system(std::cout, parts[k].canonical, "  ");
    }
    return 0;
}

int run_orbit_dim(const Options& o) {
    const SystemTriple s = load(o.input);
    const OrbitInfo info = orbit_dimension(canonicalize(s));
    size_t oracle = 0;
    if (o.oracle)
        oracle = orbit_dimension_oracle(s);
    if (o.json) {
        Json out = orbit_to_json(info);
        if (o.oracle) {
            out["oracle"] = oracle;
            out["agree"] = oracle == info.dim_orbit;
        }
        std::cout << dump(out);
        return 0;
    }
    std::cout << "dim_orbit: " << info.dim_orbit << "\n";
    std::cout << "dim_stabilizer: " << info.dim_stabilizer << "\n";
    std::cout << "dim_group: " << info.dim_group << "\n";
    std::cout << "dim_system_space: " << info.dim_system_space << "\n";
    if (o.oracle)
        std::cout << "oracle: " << oracle << " " << (oracle == info.dim_orbit ? "AGREE" : "DISAGREE") << "\n";
    return 0;
}

int run_catalog(const Options& o) {
    const auto ts = templates(o.dim);
    if (!o.export_dir.empty()) {
        fs::create_directories(o.export_dir);
        for (const auto& t : ts)
            write_file_atomically(fs::path(o.export_dir) / (t.id + ".json"), dump(template_to_json(t)));
    }
    if (o.verify_set) {
        const CatalogReport r = verify_catalog(o.verify, o.seed, o.serial ? Execution::Serial : Execution::Parallel);
        if (o.json) {
            std::cout << dump(report_to_json(r));
        } else {
            std::cout << "fixed-point checks: " << r.fixed_point_checks << ", failures "
                      << r.fixed_point_failures.size() + r.indecomposability_failures.size() << "\n";
            std::cout << "trials: " << r.trials << ", summands: " << r.summands_checked << ", unmatched "
                      << r.unmatched.size() << ", multiset mismatches " << r.multiset_mismatches.size() << "\n";
            std::cout << "criterion checks: " << r.criterion_checks << ", disagreements "
                      << r.criterion_disagreements.size() << "\n";
            for (const auto* list : {&r.fixed_point_failures, &r.indecomposability_failures, &r.unmatched,
                                     &r.multiset_mismatches, &r.criterion_disagreements, &r.errors})
                for (const auto& line : *list)
                    std::cout << "  " << line << "\n";
            std::cout << (r.ok() ? "PASS" : "FAIL") << "\n";
        }
        return r.ok() ? 0 : kOther;
    }
    if (o.json) {
        Json list = Json::array();
        for (const auto& t : ts)
            list.push_back(template_to_json(t));
        std::cout << dump(list);
        return 0;
    }
    for (const auto& t : ts) {
        auto render = [](const TemplateMatrix& m) {
            std::string out = "[";
            for (size_t r = 0; r < m.size(); ++r) {
                if (m[r].empty())
                    continue;
                out += r ? "; " : "";
                for (size_t c = 0; c < m[r].size(); ++c)
                    out += (c ? " " : "") + m[r][c];
            }
            return out + "]";
        };
        std::cout << t.id << "  d=" << to_string(t.d) << "  A=" << render(t.a) << " B=" << render(t.b)
                  << " C=" << render(t.c) << "\n";
    }
    std::cout << ts.size() << " templates\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical forms, equivalence, decomposition and orbit dimensions of linear systems (A, B, C) "
                 "over the Gaussian rationals"};
    app.require_subcommand(1);
    Options o;

    auto* canon = app.add_subcommand("canon", "Reduce a system to canonical form");
    canon->add_option("input", o.input, "System JSON file");
    canon->add_flag("--trace", o.trace, "Report the reduced blocks and their sigmas");
    canon->add_flag("--witness", o.witness, "Report the group element (X, Y, Z) reaching the canonical form");
    canon->add_option("-o,--output", o.output, "Also write the canonical system to this file");
    canon->add_option("--batch", o.batch, "Canonicalize every .json file in a directory in parallel");
    canon->add_option("--out-dir", o.out_dir, "Output directory for --batch (default: <batch>/canonical)");
    canon->add_flag("--serial", o.serial, "Process --batch files one at a time");

    auto* equiv = app.add_subcommand("equiv", "Decide whether two systems are equivalent");
    equiv->add_option("first", o.input, "System JSON file")->required();
    equiv->add_option("second", o.input2, "System JSON file")->required();
    equiv->add_flag("--witness", o.witness, "Print (X, Y, Z) carrying the first system to the second");

    auto* decomp = app.add_subcommand("decompose", "Split a system into indecomposable summands");
    decomp->add_option("input", o.input, "System JSON file")->required();
    decomp->add_option("--out-dir", o.out_dir, "Write one canonical JSON file per summand here");

    auto* orbit = app.add_subcommand("orbit-dim", "Orbit and stabilizer dimensions");
    orbit->add_option("input", o.input, "System JSON file")->required();
    orbit->add_flag("--oracle", o.oracle, "Cross-check against the tangent-map rank");

    auto* catalog = app.add_subcommand("catalog", "List or verify the indecomposables with |d| <= 4");
    catalog->add_option("--dim", o.dim, "Largest |d| to list (at most 4)")->check(CLI::Range(0, 4));
    catalog->add_option("--verify", o.verify, "Check the table and this many random systems")
        ->each([&](const std::string&) { o.verify_set = true; });
    catalog->add_option("--seed", o.seed, "Seed for --verify");
    catalog->add_option("--export", o.export_dir, "Write each template as a JSON file into this directory");
    catalog->add_flag("--serial", o.serial, "Run --verify on one thread");

    for (auto* sub : {canon, equiv, decomp, orbit, catalog})
        sub->add_flag("--json", o.json, "Print one JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kMalformed;
    }

    try {
        if (*canon)
            return run_canon(o);
        if (*equiv)
            return run_equiv(o);
        if (*decomp)
            return run_decompose(o);
        if (*orbit)
            return run_orbit_dim(o);
        return run_catalog(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
}
