#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "cccforge/points.hpp"

namespace ccc {

/// A composition-[2,1,1] codeword in tuple form <a1,a2,a3,a4> over point
/// ids of some PointSet: symbol 1 at a1 and a2, symbol 2 at a3, symbol 3
/// at a4, zero elsewhere. Canonical form has a1 < a2.
struct Codeword {
    std::array<int, 4> a{};

    friend auto operator<=>(const Codeword&, const Codeword&) = default;
};

/// Symbol carried by tuple position 0..3 (1,1,2,3).
inline int tuple_symbol(int pos) { return pos < 2 ? 1 : pos + 1; }

/// Order the unordered first pair; reject repeated points.
Codeword canonicalize(const std::array<int, 4>& raw);

/// Hamming distance between two [2,1,1] codewords over the same set.
/// Counts coordinates whose symbols differ.
inline int distance(const Codeword& u, const Codeword& v) {
    static constexpr int sym[4] = {1, 1, 2, 3};
    int inter = 0, agree = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (u.a[i] == v.a[j]) {
                ++inter;
                agree += sym[i] == sym[j];
            }
    return 8 - inter - agree;
}

/// Expand to the length-n symbol vector; composition is [2,1,1] by
/// construction.
std::vector<std::uint8_t> to_vector(const Codeword& w, int n);

/// Inverse of to_vector. Rejects vectors whose composition is not [2,1,1].
Codeword from_vector(const std::vector<std::uint8_t>& vec);

// Generic kernels over arbitrary alphabets, used by the bound formulas'
// enumeration oracles.
int vector_distance(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v);
std::vector<int> vector_composition(const std::vector<std::uint8_t>& u, int q);

}  // namespace ccc
