#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "belitskii/batch.hpp"
#include "belitskii/reduction.hpp"

namespace belitskii {

/// Entry tokens: "0", "1", a parameter name ("λ", "μ", "ν") or "∅" for a
/// regularized zero.
using TemplateMatrix = std::vector<std::vector<std::string>>;

struct Template {
    std::string id;
    DimensionVector d;
    TemplateMatrix a;
    TemplateMatrix b;
    TemplateMatrix c;
    /// Parameters in order of first appearance.
    std::vector<std::string> parameters;
    /// Parameters on the diagonal of A; these must take pairwise different values.
    std::vector<std::string> eigen_parameters;
};

using ParamBinding = std::map<std::string, Scalar>;

/// The indecomposable canonical forms with |d| <= max_total_dim, in table
/// order. Throws Unsupported above 4.
const std::vector<Template>& templates();
std::vector<Template> templates(size_t max_total_dim);
const Template* find_template(const std::string& id);

SystemTriple instantiate(const Template& t, const ParamBinding& params);

struct TemplateMatch {
    std::string id;
    ParamBinding params;
};

/// Inverse lookup. Besides the table ids, the indecomposables the table
/// leaves implicit are reported as "vertex-1" (1,0,0), "vertex-3" (0,0,1)
/// and "jordan-k" (0,k,0).
std::optional<TemplateMatch> match_template(const CanonicalSystem& c);

struct CatalogReport {
    size_t fixed_point_checks = 0;
    std::vector<std::string> fixed_point_failures;
    std::vector<std::string> indecomposability_failures;
    size_t trials = 0;
    size_t summands_checked = 0;
    std::vector<std::string> unmatched;
    std::vector<std::string> multiset_mismatches;
    size_t criterion_checks = 0;
    std::vector<std::string> criterion_disagreements;
    std::vector<std::string> errors;

    bool ok() const;
};

/// The parameter sets every template is checked at.
std::vector<ParamBinding> standard_parameter_sets();

/// Fixed-point and indecomposability checks for the given templates.
void check_templates(std::span<const Template> ts, CatalogReport& report, Execution mode = Execution::Parallel);

/// check_templates on the whole table, then `trials` seeded random systems
/// with |d| <= 4: decompose, match every summand, and compare against the
/// decomposition of a random conjugate.
CatalogReport verify_catalog(size_t trials, std::uint64_t seed, Execution mode = Execution::Parallel);

} // namespace belitskii
