#pragma once

#include <cstddef>
#include <vector>

namespace vck {

// Calls f(subset) for every k-subset of pool in lexicographic order of
// positions. Stops early and returns true as soon as f returns true.
template <class T, class F>
bool any_combination(const std::vector<T>& pool, std::size_t k, F&& f) {
    if (k > pool.size()) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<T> pick(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
        if (f(pick)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace vck
