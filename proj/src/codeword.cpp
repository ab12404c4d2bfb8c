#include "cccforge/codeword.hpp"

#include <stdexcept>
#include <utility>

namespace ccc {

Codeword canonicalize(const std::array<int, 4>& raw) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (raw[i] == raw[j]) throw std::invalid_argument("codeword with repeated point");
    Codeword w{raw};
    if (w.a[0] > w.a[1]) std::swap(w.a[0], w.a[1]);
    return w;
}

std::vector<std::uint8_t> to_vector(const Codeword& w, int n) {
    std::vector<std::uint8_t> vec(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < 4; ++i) {
        int p = w.a[i];
        if (p < 0 || p >= n) throw std::out_of_range("codeword point outside the vector length");
        vec[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(tuple_symbol(i));
    }
    return vec;
}

Codeword from_vector(const std::vector<std::uint8_t>& vec) {
    std::array<int, 4> raw{-1, -1, -1, -1};
    int ones = 0;
    for (int x = 0; x < static_cast<int>(vec.size()); ++x) {
        switch (vec[static_cast<std::size_t>(x)]) {
            case 0: break;
            case 1:
                if (ones == 2) throw std::invalid_argument("composition is not [2,1,1]");
                raw[ones++] = x;
                break;
            case 2:
                if (raw[2] >= 0) throw std::invalid_argument("composition is not [2,1,1]");
                raw[2] = x;
                break;
            case 3:
                if (raw[3] >= 0) throw std::invalid_argument("composition is not [2,1,1]");
                raw[3] = x;
                break;
            default: throw std::invalid_argument("symbol outside the quaternary alphabet");
        }
    }
    if (ones != 2 || raw[2] < 0 || raw[3] < 0) throw std::invalid_argument("composition is not [2,1,1]");
    return canonicalize(raw);
}

int vector_distance(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vectors over different point sets");
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
    return d;
}

std::vector<int> vector_composition(const std::vector<std::uint8_t>& u, int q) {
    std::vector<int> comp(static_cast<std::size_t>(q - 1), 0);
    for (auto s : u) {
        if (s >= q) throw std::invalid_argument("symbol outside the alphabet");
        if (s > 0) ++comp[static_cast<std::size_t>(s - 1)];
    }
    return comp;
}

}  // namespace ccc
