#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cccforge/code.hpp"
#include "cccforge/io.hpp"

namespace ccc {

/// A difference-method development recipe: base codewords split into a
/// multiplied part P and a rest R, expanded by s multiplier steps and by
/// translation in steps of M modulo v. Starter recipes reuse the same
/// shape with pairs instead of 4-tuples.
struct Recipe {
    enum class Kind { code, gdc, starter, frame_starter };

    Kind kind = Kind::code;
    int d = 0;
    int v = 0;       // finite modulus
    long long m = 1; // multiplier
    int s = 1;       // multiplier orbit length
    int M = 1;       // translation step; M == v means no development
    std::vector<PointSet::InfiniteClass> infinite;
    std::vector<std::string> fixed;

    std::map<int, int> group_type;            // declared exponential type (gdc)
    std::optional<int> group_stride;          // groups {i, t+i, ...} over Z_v
    std::vector<std::vector<Point>> explicit_groups;

    std::vector<std::vector<Point>> P;
    std::vector<std::vector<Point>> R;
    long long expected_size = 0;
    bool optimal = false;  // size must additionally meet u5/u6
    std::string source;

    PointSet point_set() const;
    bool is_starter_kind() const { return kind == Kind::starter || kind == Kind::frame_starter; }
};

Recipe recipe_from_json(const json& j);
Recipe load_recipe(const std::filesystem::path& path);

/// Multiply every residue of a finite word by m modulo v, then
/// canonicalize. Words holding infinite or fixed points only admit the
/// identity multiplier.
Codeword apply_multiplier(const Codeword& w, const PointSet& ps, long long m, int v);

/// Translate by delta: finite residues move mod v, infinite subscripts
/// move mod their class modulus, fixed points stay put.
Codeword translate(const Codeword& w, const PointSet& ps, int delta, int v);

/// Expand a code/gdc recipe into the full word set:
///   { (m^i p) + jM : p in P, 0 <= i < s, 0 <= j < v/M }
///   union { r + jM : r in R, 0 <= j < v/M },
/// attaching stride groups plus one group holding all infinite and fixed
/// points. Any collision amongst generated words is a hard error: the
/// expected-size arithmetic assumes free orbits.
Gdc expand(const Recipe& recipe);

/// Convenience for kind == code.
Code expand_code(const Recipe& recipe);

}  // namespace ccc
