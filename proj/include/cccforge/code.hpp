#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cccforge/codeword.hpp"
#include "cccforge/points.hpp"

namespace ccc {

/// A constant-composition code: a deduplicated, canonically sorted word
/// list over a point set, with the distance it claims to achieve.
struct Code {
    PointSet points;
    std::vector<Codeword> words;
    int declared_distance = 0;
    std::array<int, 3> composition{2, 1, 1};
    bool verified = false;

    int length() const { return points.size(); }
    std::size_t size() const { return words.size(); }

    /// Sort canonically and drop duplicates (reported via verify).
    void normalize();
};

/// A group divisible code: a code plus a partition of its points such that
/// no codeword meets a group twice. A plain code is the type-1^n case.
struct Gdc {
    Code code;
    std::vector<std::vector<int>> groups;  // partition of point ids

    /// Group sizes as a sorted multiset, e.g. {2,2,...}.
    std::vector<int> type() const;
    /// Exponential type string, e.g. "2^8" or "12^4 9^1".
    std::string type_string() const;
};

/// Verification outcome. Failures are data, never exceptions: catalogs
/// must be able to record them.
struct VerificationReport {
    bool pass = false;
    int observed_min_distance = std::numeric_limits<int>::max();
    std::size_t word_count = 0;
    std::size_t duplicate_count = 0;
    std::vector<std::size_t> composition_violations;                 // word indices
    std::optional<std::pair<std::size_t, std::size_t>> closest_pair; // word indices at min distance
    std::vector<std::pair<std::size_t, std::size_t>> group_violations;  // (word, group)

    std::string summary() const;
};

/// Check pairwise distance >= declared, composition [2,1,1], no
/// duplicates. Pairwise work is split across threads; the verdict is
/// deterministic.
VerificationReport verify_code(const Code& c);

/// verify_code plus the group condition: every word's support meets every
/// group in at most one point. Groups must partition the point set.
VerificationReport verify_gdc(const Gdc& g);

/// Number of words with a nonzero symbol at each coordinate.
std::vector<int> nonzero_census(const Code& c);

std::vector<std::vector<int>> singleton_groups(int n);

}  // namespace ccc
