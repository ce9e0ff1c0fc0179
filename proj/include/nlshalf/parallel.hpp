#pragma once
#include <omp.h>

namespace nlshalf {

// Parallel map over [0, n). Each slot must be written independently.
// The serial path is the reference implementation; tests compare both.
template <class F>
void parallel_for(int n, F&& body, bool parallel = true) {
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) body(i);
    } else {
        for (int i = 0; i < n; ++i) body(i);
    }
}

inline void set_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
}

}  // namespace nlshalf
