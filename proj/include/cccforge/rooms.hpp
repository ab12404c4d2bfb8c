#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cccforge/code.hpp"
#include "cccforge/recipe.hpp"

namespace ccc {

/// An unordered pair of group elements.
struct SymbolPair {
    int s = 0, t = 0;  // stored with s < t
    friend auto operator<=>(const SymbolPair&, const SymbolPair&) = default;
};

/// A starter in Z_g: pairs covering G\{0} whose differences also cover
/// G\{0}. A frame starter avoids the order-2 hole {0, g/2} instead.
struct Starter {
    int order = 0;                   // g
    bool frame = false;              // hole {0, g/2} when true
    std::vector<SymbolPair> pairs;

    std::vector<int> hole() const { return frame ? std::vector<int>{0, order / 2} : std::vector<int>{}; }
};

/// An adder: distinct translations carrying a starter to an orthogonal one.
using Adder = std::vector<int>;

/// An n x n partial array of symbol pairs. Plain Room squares carry the
/// extra symbol "infinity" on the diagonal; Room frames instead leave the
/// hole subarrays empty.
struct RoomArray {
    static constexpr int kInfinity = -1;

    int side = 0;
    bool has_infinity = false;
    std::vector<std::vector<int>> holes;              // partition of symbols (frames)
    std::map<std::pair<int, int>, SymbolPair> cells;  // (row, col) -> pair

    std::size_t filled_cells() const { return cells.size(); }
};

struct RoomReport {
    bool pass = false;
    std::string first_violation;
};

Starter expand_starter(const Recipe& recipe);

bool is_starter(const Starter& st);
/// Strong: pair sums pairwise distinct and outside {0} (outside the hole
/// for frame starters).
bool is_strong(const Starter& st);

Starter negate(const Starter& st);

/// a_i = -(s_i + t_i); carries the starter onto -S, which is orthogonal to
/// it when the starter is strong.
Adder adder_from_strong(const Starter& st);

/// Place pair {s_i + g, t_i + g} at (row g, col g - a_i) for every g; for
/// plain squares also place {infinity, g} at (g, g). A cell collision
/// signals an invalid adder.
RoomArray room_from_starter(const Starter& st, const Adder& adder);

/// Row/column coverage, pair uniqueness and hole emptiness, straight from
/// the definitions.
RoomReport verify_room(const RoomArray& r);

/// True when all underlying 4-subsets {i,j,row,col} of filled cells
/// pairwise share at most two elements.
bool is_super_simple(const RoomArray& r);

/// One codeword <i,j,row,col> per admissible filled cell: every cell of a
/// frame, the infinity-free cells of a plain square. Requires
/// super-simplicity; the result is checked at distance 5 by the caller.
Code code_from_room(const RoomArray& r);

}  // namespace ccc
