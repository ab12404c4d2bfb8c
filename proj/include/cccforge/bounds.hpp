#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccc::bounds {

/// Result of a closed-form bound: an exact count, an upper bound, or an
/// "open" value that carries the best known lower bound. Open values are
/// tagged rather than returned as plain integers so a bound is never
/// silently presented as an exact size.
struct BoundResult {
    enum class Tag { exact, upper, open, not_covered };
    Tag tag = Tag::not_covered;
    long long value = 0;        // count or upper bound
    long long lower_bound = 0;  // only for open
    std::string source;         // which rule fired

    bool exact() const { return tag == Tag::exact; }
    bool open() const { return tag == Tag::open; }
    std::string str() const;
};

/// Exact maximum sizes in the degenerate regimes: d <= 2 (every word
/// qualifies, multinomial count), d = 2w (supports must be disjoint) and
/// d >= 2w+1 (a single word). Anything else is reported as not covered.
BoundResult exact_extremes(int n, int d, const std::vector<int>& composition);

/// One Johnson peeling step: floor(n * inner / w1), where inner bounds the
/// (n-1)-column code with the first composition entry reduced. Exact
/// integer arithmetic.
long long johnson_step(int n, int d, const std::vector<int>& composition, long long inner_bound);

/// The closed-form upper bounds for quaternary weight-4 composition
/// [2,1,1] codes:  u5(n) = n*floor((n-1)/2),  u6(n) = floor(n/2 *
/// floor((n-1)/3)).
long long u5(int n);
long long u6(int n);

/// Upper bound for d = 2w-2 derived by the same peeling route as u6:
/// floor(n/w1 * floor((n-1)/(w-1))).
long long near_perfect_bound(int n, const std::vector<int>& composition);

/// The final published value of A4(n,d,[2,1,1]) for d in {5,6}: exact
/// where settled, open (with the known lower bound) for the five
/// undetermined lengths at d = 5.
BoundResult summary_value(int n, int d);

}  // namespace ccc::bounds
