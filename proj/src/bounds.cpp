#include "cccforge/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace ccc::bounds {

namespace {

long long weight_of(const std::vector<int>& composition) {
    long long w = 0;
    for (int wi : composition) {
        if (wi < 0) throw std::invalid_argument("negative composition entry");
        w += wi;
    }
    return w;
}

/// C(n,w) * w! / (w1! w2! ...): the number of words with the given
/// composition. 64-bit with on-the-way division keeps this exact for every
/// parameter this project touches.
long long composition_count(int n, const std::vector<int>& composition) {
    long long w = weight_of(composition);
    long long count = 1;
    long long k = 0;
    // product over i of C(n - k_i, w_i) where k_i is the prefix sum
    for (int wi : composition) {
        for (int j = 1; j <= wi; ++j) {
            count = count * (n - k) / j;  // exact: running binomial
            ++k;
        }
    }
    (void)w;
    return count;
}

}  // namespace

std::string BoundResult::str() const {
    switch (tag) {
        case Tag::exact: return std::to_string(value);
        case Tag::upper: return "<=" + std::to_string(value);
        case Tag::open: return "open(>=" + std::to_string(lower_bound) + ")";
        default: return "not covered";
    }
}

BoundResult exact_extremes(int n, int d, const std::vector<int>& composition) {
    long long w = weight_of(composition);
    if (n < w) throw std::invalid_argument("length shorter than the weight");
    if (d <= 2) return {BoundResult::Tag::exact, composition_count(n, composition), 0, "d<=2: every word"};
    if (d == 2 * w) return {BoundResult::Tag::exact, n / w, 0, "d=2w: disjoint supports"};
    if (d >= 2 * w + 1) return {BoundResult::Tag::exact, 1, 0, "d>=2w+1: single word"};
    return {BoundResult::Tag::not_covered, 0, 0, "no extreme case fires"};
}

long long johnson_step(int n, int d, const std::vector<int>& composition, long long inner_bound) {
    (void)d;
    if (composition.empty() || composition.front() <= 0)
        throw std::invalid_argument("johnson step needs w1 >= 1");
    if (inner_bound < 0) throw std::invalid_argument("negative inner bound");
    return static_cast<long long>(n) * inner_bound / composition.front();
}

long long u5(int n) {
    if (n < 4) throw std::invalid_argument("u5 needs n >= 4");
    return static_cast<long long>(n) * ((n - 1) / 2);
}

long long u6(int n) {
    if (n < 4) throw std::invalid_argument("u6 needs n >= 4");
    return static_cast<long long>(n) * ((n - 1) / 3) / 2;
}

long long near_perfect_bound(int n, const std::vector<int>& composition) {
    long long w = weight_of(composition);
    if (composition.empty() || composition.front() <= 0 || w < 2)
        throw std::invalid_argument("bad composition");
    long long inner = (n - 1) / (w - 1);
    return static_cast<long long>(n) * inner / composition.front();
}

BoundResult summary_value(int n, int d) {
    if (n < 4 || (d != 5 && d != 6)) throw std::invalid_argument("summary_value covers n >= 4, d in {5,6}");
    using Tag = BoundResult::Tag;
    if (d == 5) {
        switch (n) {
            case 4: return {Tag::exact, 1, 0, "small case"};
            case 5: return {Tag::exact, 2, 0, "small case"};
            case 6: return {Tag::exact, 6, 0, "small case"};
            case 7: return {Tag::exact, 10, 0, "small case"};
            case 8: return {Tag::open, u5(8), 18, "undetermined length"};
            case 9: return {Tag::open, u5(9), 27, "undetermined length"};
            case 10: return {Tag::open, u5(10), 36, "undetermined length"};
            case 11: return {Tag::open, u5(11), 48, "undetermined length"};
            case 13: return {Tag::open, u5(13), 72, "undetermined length"};
            default: return {Tag::exact, u5(n), 0, "u5 met for n>=12, n!=13"};
        }
    }
    if (n == 4 || n == 5) return {Tag::exact, 1, 0, "small case"};
    if (n == 7) return {Tag::exact, 4, 0, "small case"};
    return {Tag::exact, u6(n), 0, "u6 met for n>=6, n!=7"};
}

}  // namespace ccc::bounds
