#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "belitskii/error.hpp"
#include "belitskii/reduction.hpp"

namespace belitskii {

enum class Execution { Serial, Parallel };

/// Calls body(0), ..., body(count - 1). Parallel mode spreads the indices
/// over OpenMP threads; body must not throw and must only write to slots
/// owned by its index.
void for_each_index(size_t count, const std::function<void(size_t)>& body, Execution mode);

size_t worker_count();

struct BatchItem {
    std::optional<CanonicalSystem> result;
    std::optional<ErrorKind> error;
    std::string message;
};

/// canonicalize over many inputs; results are in input order and identical
/// for both modes.
std::vector<BatchItem> canonicalize_batch(std::span<const SystemTriple> inputs, Execution mode);

} // namespace belitskii
