#pragma once

#include <cstdint>
#include <vector>

namespace ccc {

/// Arithmetic in GF(p^k) for p <= 13, k <= 3, via explicit irreducible
/// polynomial tables. Elements are dense indices 0..q-1 encoding base-p
/// digit vectors (index 0 is zero, index 1 is one).
class GaloisField {
public:
    explicit GaloisField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;

    static bool is_prime_power(int q);

private:
    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<int> mul_table_;
    std::vector<int> add_table_;
};

}  // namespace ccc
