#include "cccforge/gf.hpp"

#include <array>
#include <stdexcept>

namespace ccc {

namespace {

struct Factorization {
    int p = 0, k = 0;
};

Factorization factor_prime_power(int q) {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        if (q % p) continue;
        int k = 0, rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest == 1) return {p, k};
        return {};
    }
    return {};
}

/// Monic irreducible polynomials over GF(p), low-degree coefficients
/// first, leading 1 omitted. One entry per (p, degree) this project needs.
std::vector<int> irreducible(int p, int k) {
    switch (k) {
        case 2:
            switch (p) {
                case 2: return {1, 1};        // x^2 + x + 1
                case 3: return {1, 0};        // x^2 + 1
                case 5: return {3, 0};        // x^2 + 3
                case 7: return {1, 0};        // x^2 + 1
                case 11: return {1, 0};       // x^2 + 1
                case 13: return {11, 0};      // x^2 + 11
            }
            break;
        case 3:
            switch (p) {
                case 2: return {1, 1, 0};     // x^3 + x + 1
                case 3: return {1, 2, 0};     // x^3 + 2x + 1
                case 5: return {2, 3, 0};     // x^3 + 3x + 2
                case 7: return {2, 0, 0};     // x^3 + 2
                case 11: return {4, 1, 0};    // x^3 + x + 4
                case 13: return {2, 0, 0};    // x^3 + 2
            }
            break;
    }
    throw std::invalid_argument("no irreducible polynomial table for p=" + std::to_string(p) +
                                ", k=" + std::to_string(k));
}

}  // namespace

bool GaloisField::is_prime_power(int q) {
    return q >= 2 && factor_prime_power(q).p != 0;
}

GaloisField::GaloisField(int q) : q_(q) {
    auto [p, k] = factor_prime_power(q);
    if (p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power (p <= 13)");
    if (k > 3) throw std::invalid_argument("field tables cover exponents up to 3");
    p_ = p;
    k_ = k;

    auto digits = [&](int a) {
        std::array<int, 4> d{};
        for (int i = 0; i < k_; ++i) {
            d[static_cast<std::size_t>(i)] = a % p_;
            a /= p_;
        }
        return d;
    };
    auto pack = [&](const std::array<int, 4>& d) {
        int a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
        return a;
    };

    add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    std::vector<int> poly = k_ > 1 ? irreducible(p_, k_) : std::vector<int>{};
    for (int a = 0; a < q_; ++a) {
        auto da = digits(a);
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::array<int, 4> sum{};
            for (int i = 0; i < k_; ++i) sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
            add_table_[static_cast<std::size_t>(a) * q_ + b] = pack(sum);

            // schoolbook product reduced by the modulus polynomial
            std::array<int, 7> prod{};
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
            for (int deg = 2 * (k_ - 1); deg >= k_; --deg) {
                int c = prod[static_cast<std::size_t>(deg)];
                if (!c) continue;
                prod[static_cast<std::size_t>(deg)] = 0;
                for (int i = 0; i < k_; ++i)
                    prod[static_cast<std::size_t>(deg - k_ + i)] =
                        ((prod[static_cast<std::size_t>(deg - k_ + i)] - c * poly[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
            }
            std::array<int, 4> red{};
            for (int i = 0; i < k_; ++i) red[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
            mul_table_[static_cast<std::size_t>(a) * q_ + b] = pack(red);
        }
    }
}

int GaloisField::add(int a, int b) const { return add_table_[static_cast<std::size_t>(a) * q_ + b]; }

int GaloisField::neg(int a) const {
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("no additive inverse");
}

int GaloisField::mul(int a, int b) const { return mul_table_[static_cast<std::size_t>(a) * q_ + b]; }

}  // namespace ccc
