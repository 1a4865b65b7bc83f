#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dimer {

// Recursive pairwise summation: deterministic order, O(log n) error growth.
template <typename T>
T pairwise_sum(const T* data, size_t n) {
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = data[0];
        for (size_t i = 1; i < n; ++i) acc += data[i];
        return acc;
    }
    const size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(v.data(), v.size());
}

}  // namespace dimer
