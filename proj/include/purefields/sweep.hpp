#ifndef PUREFIELDS_SWEEP_HPP
#define PUREFIELDS_SWEEP_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace purefields::sweep {

int max_threads();
void set_threads(int n);

// Applies fn(i) to every index; the OpenMP path and the serial reference
// produce identical results because callers write into index-addressed slots.
// Exceptions raised inside the parallel region are captured and rethrown.
template <typename Fn>
void run(size_t count, Fn&& fn, bool parallel = true) {
    if (!parallel) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::string error;
    bool failed = false;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        if (failed) continue;
        try {
            fn(static_cast<size_t>(i));
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                if (error.empty()) error = e.what();
            }
        }
    }
    if (failed) throw std::runtime_error(error);
}

}  // namespace purefields::sweep

#endif
