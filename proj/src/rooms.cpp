#include "cccforge/rooms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ccc {

namespace {

SymbolPair make_pair_mod(long long s, long long t, int g) {
    int a = static_cast<int>(((s % g) + g) % g);
    int b = static_cast<int>(((t % g) + g) % g);
    if (a == b) throw std::invalid_argument("degenerate symbol pair");
    if (a > b) std::swap(a, b);
    return {a, b};
}

int point_value(const Point& p, const std::string& source) {
    if (!p.is_finite())
        throw std::invalid_argument("starter pairs must be finite (" + source + ")");
    return p.residue();
}

}  // namespace

Starter expand_starter(const Recipe& recipe) {
    if (!recipe.is_starter_kind())
        throw std::invalid_argument("expand_starter takes starter recipes");
    if (recipe.M != 1)
        throw std::invalid_argument("starter recipes are not developed (" + recipe.source + ")");
    Starter st;
    st.order = recipe.v;
    st.frame = recipe.kind == Recipe::Kind::frame_starter;
    if (st.frame && recipe.v % 2 != 0)
        throw std::invalid_argument("frame starter over an odd group (" + recipe.source + ")");

    auto add_orbit = [&](const std::vector<Point>& pr, bool multiplied) {
        if (pr.size() != 2)
            throw std::invalid_argument("starter entry without two elements (" + recipe.source + ")");
        long long s = point_value(pr[0], recipe.source);
        long long t = point_value(pr[1], recipe.source);
        int steps = multiplied ? recipe.s : 1;
        long long factor = 1;
        for (int i = 0; i < steps; ++i) {
            st.pairs.push_back(make_pair_mod(s * factor, t * factor, recipe.v));
            factor = factor * recipe.m % recipe.v;
        }
    };
    for (const auto& pr : recipe.P) add_orbit(pr, true);
    for (const auto& pr : recipe.R) add_orbit(pr, false);

    std::size_t want = static_cast<std::size_t>(st.frame ? (recipe.v - 2) : (recipe.v - 1)) / 2;
    if (st.pairs.size() != want)
        throw std::invalid_argument("starter has " + std::to_string(st.pairs.size()) + " pairs, needs " +
                                    std::to_string(want) + " (" + recipe.source + ")");
    return st;
}

bool is_starter(const Starter& st) {
    const int g = st.order;
    std::set<int> excluded(st.hole().begin(), st.hole().end());
    excluded.insert(0);
    std::vector<bool> element(static_cast<std::size_t>(g), false);
    std::vector<bool> difference(static_cast<std::size_t>(g), false);
    for (const auto& [s, t] : st.pairs) {
        for (int x : {s, t}) {
            if (excluded.count(x) || element[static_cast<std::size_t>(x)]) return false;
            element[static_cast<std::size_t>(x)] = true;
        }
        int d1 = ((t - s) % g + g) % g;
        int d2 = (g - d1) % g;
        for (int d : {d1, d2}) {
            if (excluded.count(d) || (difference[static_cast<std::size_t>(d)] && d1 != d2)) return false;
            difference[static_cast<std::size_t>(d)] = true;
        }
    }
    for (int x = 0; x < g; ++x) {
        bool excl = excluded.count(x) > 0;
        if (element[static_cast<std::size_t>(x)] == excl) return false;
        if (difference[static_cast<std::size_t>(x)] == excl) return false;
    }
    return true;
}

bool is_strong(const Starter& st) {
    if (!is_starter(st)) return false;
    std::set<int> forbidden(st.hole().begin(), st.hole().end());
    forbidden.insert(0);
    std::set<int> sums;
    for (const auto& [s, t] : st.pairs) {
        int sum = (s + t) % st.order;
        if (forbidden.count(sum)) return false;
        if (!sums.insert(sum).second) return false;
    }
    return true;
}

Starter negate(const Starter& st) {
    Starter neg = st;
    neg.pairs.clear();
    for (const auto& [s, t] : st.pairs) neg.pairs.push_back(make_pair_mod(-s, -t, st.order));
    return neg;
}

Adder adder_from_strong(const Starter& st) {
    if (!is_strong(st)) throw std::invalid_argument("adder requires a strong starter");
    Adder adder;
    for (const auto& [s, t] : st.pairs)
        adder.push_back(((-(s + t)) % st.order + st.order) % st.order);
    return adder;
}

RoomArray room_from_starter(const Starter& st, const Adder& adder) {
    if (adder.size() != st.pairs.size())
        throw std::invalid_argument("adder length disagrees with the starter");
    const int g = st.order;
    RoomArray room;
    room.side = g;
    room.has_infinity = !st.frame;
    if (st.frame)
        for (int i = 0; i < g / 2; ++i) room.holes.push_back({i, i + g / 2});

    auto place = [&](int row, int col, SymbolPair pair) {
        if (!room.cells.emplace(std::make_pair(row, col), pair).second)
            throw std::runtime_error("cell collision: the adder is not valid");
    };
    if (room.has_infinity)
        for (int x = 0; x < g; ++x) place(x, x, {RoomArray::kInfinity, x});
    for (std::size_t i = 0; i < st.pairs.size(); ++i) {
        const auto& [s, t] = st.pairs[i];
        for (int x = 0; x < g; ++x)
            place(x, ((x - adder[i]) % g + g) % g, make_pair_mod(s + x, t + x, g));
    }
    return room;
}

namespace {

RoomReport fail(const std::string& what) { return {false, what}; }

}  // namespace

RoomReport verify_room(const RoomArray& r) {
    const int n = r.side;
    std::vector<int> hole_of(static_cast<std::size_t>(n), -1);
    if (!r.holes.empty()) {
        std::size_t covered = 0;
        for (std::size_t h = 0; h < r.holes.size(); ++h)
            for (int x : r.holes[h]) {
                if (x < 0 || x >= n || hole_of[static_cast<std::size_t>(x)] != -1)
                    return fail("holes do not partition the symbols");
                hole_of[static_cast<std::size_t>(x)] = static_cast<int>(h);
                ++covered;
            }
        if (covered != static_cast<std::size_t>(n)) return fail("holes do not partition the symbols");
    }

    // row/column occurrence counts per symbol
    std::vector<std::vector<int>> row_count(static_cast<std::size_t>(n)),
        col_count(static_cast<std::size_t>(n));
    const int symbols = n + (r.has_infinity ? 1 : 0);
    for (auto& v : row_count) v.assign(static_cast<std::size_t>(symbols), 0);
    for (auto& v : col_count) v.assign(static_cast<std::size_t>(symbols), 0);
    auto sym_index = [&](int s) { return s == RoomArray::kInfinity ? n : s; };

    std::set<SymbolPair> seen_pairs;
    for (const auto& [cell, pair] : r.cells) {
        auto [row, col] = cell;
        if (row < 0 || row >= n || col < 0 || col >= n) return fail("cell outside the array");
        for (int s : {pair.s, pair.t}) {
            if (s != RoomArray::kInfinity && (s < 0 || s >= n)) return fail("symbol outside the set");
            if (s == RoomArray::kInfinity && !r.has_infinity) return fail("infinity in a frame");
        }
        if (!r.holes.empty() && hole_of[static_cast<std::size_t>(row)] == hole_of[static_cast<std::size_t>(col)])
            return fail("filled cell inside hole (" + std::to_string(row) + "," + std::to_string(col) + ")");
        if (!seen_pairs.insert(pair).second)
            return fail("pair {" + std::to_string(pair.s) + "," + std::to_string(pair.t) + "} occurs twice");
        ++row_count[static_cast<std::size_t>(row)][static_cast<std::size_t>(sym_index(pair.s))];
        ++row_count[static_cast<std::size_t>(row)][static_cast<std::size_t>(sym_index(pair.t))];
        ++col_count[static_cast<std::size_t>(col)][static_cast<std::size_t>(sym_index(pair.s))];
        ++col_count[static_cast<std::size_t>(col)][static_cast<std::size_t>(sym_index(pair.t))];
    }

    for (int line = 0; line < n; ++line)
        for (int s = 0; s < symbols; ++s) {
            int expect_row = 1, expect_col = 1;
            if (!r.holes.empty() && s < n) {
                if (hole_of[static_cast<std::size_t>(s)] == hole_of[static_cast<std::size_t>(line)])
                    expect_row = expect_col = 0;
            }
            if (row_count[static_cast<std::size_t>(line)][static_cast<std::size_t>(s)] != expect_row)
                return fail("row " + std::to_string(line) + " covers symbol " + std::to_string(s) + " " +
                            std::to_string(row_count[static_cast<std::size_t>(line)][static_cast<std::size_t>(s)]) + " times");
            if (col_count[static_cast<std::size_t>(line)][static_cast<std::size_t>(s)] != expect_col)
                return fail("column " + std::to_string(line) + " covers symbol " + std::to_string(s) + " " +
                            std::to_string(col_count[static_cast<std::size_t>(line)][static_cast<std::size_t>(s)]) + " times");
        }

    // admissible pairs all present: counting suffices once uniqueness holds
    std::size_t admissible;
    if (!r.holes.empty()) {
        std::size_t same = 0;
        for (const auto& h : r.holes) same += h.size() * (h.size() - 1) / 2;
        admissible = static_cast<std::size_t>(n) * (n - 1) / 2 - same;
    } else {
        admissible = static_cast<std::size_t>(n) * (n + 1) / 2;  // includes {infinity, x}
    }
    if (seen_pairs.size() != admissible)
        return fail("only " + std::to_string(seen_pairs.size()) + " of " + std::to_string(admissible) +
                    " admissible pairs occur");
    return {true, ""};
}

bool is_super_simple(const RoomArray& r) {
    // 4-subsets as sorted arrays; infinity participates like any symbol
    std::vector<std::array<int, 4>> subsets;
    subsets.reserve(r.cells.size());
    for (const auto& [cell, pair] : r.cells) {
        std::array<int, 4> s{pair.s, pair.t, cell.first, cell.second};
        std::sort(s.begin(), s.end());
        subsets.push_back(s);
    }
    const std::size_t m = subsets.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            int shared = 0;
            const auto& a = subsets[i];
            const auto& b = subsets[j];
            std::size_t x = 0, y = 0;
            while (x < 4 && y < 4) {
                if (a[x] == b[y]) {
                    // duplicated elements within a degenerate subset count once
                    int v = a[x];
                    while (x < 4 && a[x] == v) ++x;
                    while (y < 4 && b[y] == v) ++y;
                    ++shared;
                } else if (a[x] < b[y]) {
                    ++x;
                } else {
                    ++y;
                }
            }
            if (shared > 2) return false;
        }
    return true;
}

Code code_from_room(const RoomArray& r) {
    if (!is_super_simple(r))
        throw std::invalid_argument("room array is not super-simple; refusing to emit a code");
    Code c;
    c.points = PointSet::plain(r.side);
    c.declared_distance = 5;
    for (const auto& [cell, pair] : r.cells) {
        if (pair.s == RoomArray::kInfinity || pair.t == RoomArray::kInfinity) continue;
        c.words.push_back(canonicalize({pair.s, pair.t, cell.first, cell.second}));
    }
    c.normalize();
    return c;
}

}  // namespace ccc
