#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cccforge/io.hpp"

namespace ccc {

/// Points plus blocks, optionally with a group partition (GDD/TD) and
/// resolution classes (RGDD). Block-size set K and index lambda complete
/// the declared kind; verify_design checks the matching axioms.
struct BlockDesign {
    enum class Kind { pbd, gdd, td, rgdd };

    Kind kind = Kind::pbd;
    int points = 0;
    std::set<int> K;
    int lambda = 1;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> groups;   // gdd/td/rgdd
    std::vector<std::vector<int>> classes;  // rgdd: block indices per class
    std::string source;

    std::vector<int> group_type() const;
};

struct DesignReport {
    bool pass = false;
    std::string first_violation;
};

/// TD(k,q) for prime powers q, k <= q+1: groups {i} x GF(q), one block
/// per (x,y) in GF(q)^2 through (0,x) and (1,y).
BlockDesign td_prime_power(int k, int q);

/// MacNeish product: TD(k,m1) x TD(k,m2) -> TD(k, m1*m2).
BlockDesign td_product(const BlockDesign& d1, const BlockDesign& d2);

DesignReport verify_design(const BlockDesign& d);

/// Delete a point from a PBD: blocks through it become the groups of a
/// GDD, the remaining blocks survive.
BlockDesign delete_point(const BlockDesign& pbd, int x);

/// Append one new ideal point to every block of each of the first u
/// resolution classes; the ideal points form a new group.
BlockDesign complete_parallel_classes(const BlockDesign& rgdd, int u);

struct BacktrackRequest {
    BlockDesign::Kind kind = BlockDesign::Kind::gdd;
    std::set<int> K;
    std::vector<int> group_sizes;  // gdd; empty means pbd on `points`
    int points = 0;                // pbd only
    long long node_budget = 2'000'000;
    unsigned seed = 0;
};

struct BacktrackResult {
    std::optional<BlockDesign> design;
    bool exhausted = false;  // the whole space was searched: nonexistence proven
    long long nodes = 0;
};

/// Deterministic block-by-block backtracking for desk-scale parameters
/// (point count <= 30, lambda = 1). Covers the lexicographically first
/// uncovered pair at each step; prunes on per-point coverage deficits.
BacktrackResult backtrack_design(const BacktrackRequest& request);

json design_to_json(const BlockDesign& d);
BlockDesign design_from_json(const json& j);
BlockDesign load_design(const std::filesystem::path& path);
void save_design(const BlockDesign& d, const std::filesystem::path& path);

}  // namespace ccc
