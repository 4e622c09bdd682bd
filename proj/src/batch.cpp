#include "belitskii/batch.hpp"

#include <omp.h>

namespace belitskii {

void for_each_index(size_t count, const std::function<void(size_t)>& body, Execution mode) {
    if (mode == Execution::Serial) {
        for (size_t k = 0; k < count; ++k)
            body(k);
        return;
    }
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k)
        body(static_cast<size_t>(k));
}

size_t worker_count() { return static_cast<size_t>(omp_get_max_threads()); }

std::vector<BatchItem> canonicalize_batch(std::span<const SystemTriple> inputs, Execution mode) {
    std::vector<BatchItem> out(inputs.size());
    for_each_index(
        inputs.size(),
        [&](size_t k) {
            try {
                out[k].result = canonicalize(inputs[k]);
            } catch (const Error& e) {
                out[k].error = e.kind();
                out[k].message = e.what();
            } catch (const std::exception& e) {
                out[k].error = ErrorKind::Internal;
                out[k].message = e.what();
            }
        },
        mode);
    return out;
}

} // namespace belitskii
