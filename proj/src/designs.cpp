#include "cccforge/designs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cccforge/gf.hpp"

namespace ccc {

std::vector<int> BlockDesign::group_type() const {
    std::vector<int> sizes;
    for (const auto& g : groups) sizes.push_back(static_cast<int>(g.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

BlockDesign td_prime_power(int k, int q) {
    if (!GaloisField::is_prime_power(q))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (k < 2 || k > q + 1)
        throw std::invalid_argument("TD(" + std::to_string(k) + "," + std::to_string(q) + ") needs 2 <= k <= q+1");
    GaloisField gf(q);

    BlockDesign td;
    td.kind = BlockDesign::Kind::td;
    td.points = k * q;
    td.K = {k};
    td.source = "field TD(" + std::to_string(k) + "," + std::to_string(q) + ")";
    auto id = [q](int group, int element) { return group * q + element; };
    for (int g = 0; g < k; ++g) {
        std::vector<int> grp;
        for (int x = 0; x < q; ++x) grp.push_back(id(g, x));
        td.groups.push_back(std::move(grp));
    }
    // block (x,y): {(0,x), (1,y)} plus (i, a_i x + y) for distinct nonzero a_i
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            std::vector<int> block{id(0, x), id(1, y)};
            for (int i = 2; i < k; ++i) {
                int a = i - 1;  // nonzero, distinct per column
                block.push_back(id(i, gf.add(gf.mul(a, x), y)));
            }
            td.blocks.push_back(std::move(block));
        }
    return td;
}

BlockDesign td_product(const BlockDesign& d1, const BlockDesign& d2) {
    if (d1.groups.size() != d2.groups.size())
        throw std::invalid_argument("transversal designs with different group counts");
    const int k = static_cast<int>(d1.groups.size());
    const int m1 = static_cast<int>(d1.groups.front().size());
    const int m2 = static_cast<int>(d2.groups.front().size());

    // position of a point inside its group, for both factors
    auto index_in_group = [](const BlockDesign& d) {
        std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(d.points));
        for (std::size_t g = 0; g < d.groups.size(); ++g)
            for (std::size_t i = 0; i < d.groups[g].size(); ++i)
                pos[static_cast<std::size_t>(d.groups[g][i])] = {static_cast<int>(g), static_cast<int>(i)};
        return pos;
    };
    auto pos1 = index_in_group(d1), pos2 = index_in_group(d2);

    BlockDesign td;
    td.kind = BlockDesign::Kind::td;
    td.points = k * m1 * m2;
    td.K = {k};
    td.source = "product TD(" + std::to_string(k) + "," + std::to_string(m1 * m2) + ")";
    auto id = [m1, m2](int group, int e1, int e2) { return group * m1 * m2 + e1 * m2 + e2; };
    for (int g = 0; g < k; ++g) {
        std::vector<int> grp;
        for (int e = 0; e < m1 * m2; ++e) grp.push_back(g * m1 * m2 + e);
        td.groups.push_back(std::move(grp));
    }
    for (const auto& b1 : d1.blocks)
        for (const auto& b2 : d2.blocks) {
            std::vector<int> block(static_cast<std::size_t>(k));
            for (int p1 : b1) {
                auto [g, e1] = pos1[static_cast<std::size_t>(p1)];
                for (int p2 : b2) {
                    auto [h, e2] = pos2[static_cast<std::size_t>(p2)];
                    if (g == h) block[static_cast<std::size_t>(g)] = id(g, e1, e2);
                }
            }
            td.blocks.push_back(std::move(block));
        }
    return td;
}

namespace {

DesignReport dfail(const std::string& what) { return {false, what}; }

}  // namespace

DesignReport verify_design(const BlockDesign& d) {
    const int n = d.points;
    const bool grouped = d.kind != BlockDesign::Kind::pbd;

    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    if (grouped) {
        if (d.groups.size() < 2) return dfail("a GDD needs more than one group");
        int covered = 0;
        for (std::size_t g = 0; g < d.groups.size(); ++g)
            for (int p : d.groups[g]) {
                if (p < 0 || p >= n || group_of[static_cast<std::size_t>(p)] != -1)
                    return dfail("groups do not partition the points");
                group_of[static_cast<std::size_t>(p)] = static_cast<int>(g);
                ++covered;
            }
        if (covered != n) return dfail("groups do not partition the points");
    }

    std::vector<int> pair_count(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const auto& block = d.blocks[bi];
        if (!d.K.count(static_cast<int>(block.size())))
            return dfail("block " + std::to_string(bi) + " has size outside K");
        std::set<int> uniq(block.begin(), block.end());
        if (uniq.size() != block.size()) return dfail("block " + std::to_string(bi) + " repeats a point");
        for (int p : block)
            if (p < 0 || p >= n) return dfail("block " + std::to_string(bi) + " leaves the point set");
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                int a = std::min(block[i], block[j]), b = std::max(block[i], block[j]);
                ++pair_count[static_cast<std::size_t>(a) * n + b];
            }
    }

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int cnt = pair_count[static_cast<std::size_t>(a) * n + b];
            bool same_group = grouped && group_of[static_cast<std::size_t>(a)] == group_of[static_cast<std::size_t>(b)];
            int expect = same_group ? 0 : d.lambda;
            if (cnt != expect)
                return dfail("pair {" + std::to_string(a) + "," + std::to_string(b) + "} covered " +
                             std::to_string(cnt) + " times, expected " + std::to_string(expect));
        }

    if (d.kind == BlockDesign::Kind::td) {
        const std::size_t k = d.groups.size();
        for (const auto& g : d.groups)
            if (g.size() != d.groups.front().size()) return dfail("TD groups of unequal size");
        if (d.K != std::set<int>{static_cast<int>(k)}) return dfail("TD blocks must have size k");
        std::size_t nn = d.groups.front().size();
        if (d.blocks.size() != nn * nn) return dfail("TD needs n^2 blocks");
    }

    if (d.kind == BlockDesign::Kind::rgdd) {
        std::vector<bool> used(d.blocks.size(), false);
        for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            int covered = 0;
            for (int bi : d.classes[ci]) {
                if (bi < 0 || static_cast<std::size_t>(bi) >= d.blocks.size() || used[static_cast<std::size_t>(bi)])
                    return dfail("resolution class " + std::to_string(ci) + " reuses a block");
                used[static_cast<std::size_t>(bi)] = true;
                for (int p : d.blocks[static_cast<std::size_t>(bi)]) {
                    if (seen[static_cast<std::size_t>(p)])
                        return dfail("class " + std::to_string(ci) + " covers a point twice");
                    seen[static_cast<std::size_t>(p)] = true;
                    ++covered;
                }
            }
            if (covered != n) return dfail("class " + std::to_string(ci) + " does not cover all points");
        }
        if (std::find(used.begin(), used.end(), false) != used.end())
            return dfail("some block sits in no resolution class");
    }
    return {true, ""};
}

BlockDesign delete_point(const BlockDesign& pbd, int x) {
    if (x < 0 || x >= pbd.points) throw std::invalid_argument("point outside the design");
    auto renumber = [x](int p) { return p > x ? p - 1 : p; };
    BlockDesign gdd;
    gdd.kind = BlockDesign::Kind::gdd;
    gdd.points = pbd.points - 1;
    gdd.lambda = pbd.lambda;
    gdd.source = pbd.source + " minus a point";
    for (const auto& block : pbd.blocks) {
        std::vector<int> mapped;
        bool through = false;
        for (int p : block) {
            if (p == x) through = true;
            else mapped.push_back(renumber(p));
        }
        if (through) gdd.groups.push_back(std::move(mapped));
        else {
            gdd.K.insert(static_cast<int>(mapped.size()));
            gdd.blocks.push_back(std::move(mapped));
        }
    }
    auto report = verify_design(gdd);
    if (!report.pass)
        throw std::runtime_error("point deletion left an invalid GDD: " + report.first_violation);
    return gdd;
}

BlockDesign complete_parallel_classes(const BlockDesign& rgdd, int u) {
    if (u < 0 || static_cast<std::size_t>(u) > rgdd.classes.size())
        throw std::invalid_argument("fewer resolution classes than ideal points");
    BlockDesign out = rgdd;
    out.kind = BlockDesign::Kind::gdd;
    out.classes.clear();
    out.source = rgdd.source + " completed";
    if (u == 0) return out;
    for (int i = 0; i < u; ++i) {
        int ideal = rgdd.points + i;
        for (int bi : rgdd.classes[static_cast<std::size_t>(i)])
            out.blocks[static_cast<std::size_t>(bi)].push_back(ideal);
    }
    out.K.clear();
    for (const auto& block : out.blocks) out.K.insert(static_cast<int>(block.size()));
    out.points += u;
    std::vector<int> ideal_group(static_cast<std::size_t>(u));
    std::iota(ideal_group.begin(), ideal_group.end(), rgdd.points);
    out.groups.push_back(std::move(ideal_group));
    auto report = verify_design(out);
    if (!report.pass)
        throw std::runtime_error("class completion left an invalid GDD: " + report.first_violation);
    return out;
}

namespace {

struct BacktrackState {
    int n = 0;
    std::vector<int> group_of;
    std::set<int> K;
    std::vector<bool> covered;           // pair -> already in a block
    std::vector<int> remaining;          // per point: uncovered pair count
    std::vector<std::vector<int>> blocks;
    long long nodes = 0;
    long long budget = 0;
    bool exhausted = true;

    std::size_t pair_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(a) * n + b;
    }
    bool needs(int a, int b) const {
        return group_of[static_cast<std::size_t>(a)] != group_of[static_cast<std::size_t>(b)] ||
               (group_of[static_cast<std::size_t>(a)] == -1 && group_of[static_cast<std::size_t>(b)] == -1 && a != b);
    }
};

bool backtrack(BacktrackState& st, std::vector<std::vector<int>>& out) {
    if (++st.nodes > st.budget) {
        st.exhausted = false;
        return false;
    }
    // first uncovered pair
    int fa = -1, fb = -1;
    for (int a = 0; a < st.n && fa < 0; ++a)
        for (int b = a + 1; b < st.n; ++b)
            if (st.needs(a, b) && !st.covered[st.pair_index(a, b)]) {
                fa = a;
                fb = b;
                break;
            }
    if (fa < 0) {
        out = st.blocks;
        return true;
    }

    // per-point deficits must stay fillable when K is a single size
    if (st.K.size() == 1) {
        int k = *st.K.begin();
        for (int p = 0; p < st.n; ++p)
            if (st.remaining[static_cast<std::size_t>(p)] % (k - 1) != 0) return false;
    }

    for (int k : st.K) {
        std::vector<int> block{fa, fb};
        std::vector<int> touched;
        auto cover = [&](int a, int b, bool on) {
            auto idx = st.pair_index(a, b);
            st.covered[idx] = on;
            st.remaining[static_cast<std::size_t>(a)] += on ? -1 : 1;
            st.remaining[static_cast<std::size_t>(b)] += on ? -1 : 1;
        };
        // grow the block with points > fb, keeping pairs fresh and
        // cross-group; recurse at full size
        auto grow = [&](auto&& self, int from) -> bool {
            if (static_cast<int>(block.size()) == k) {
                for (std::size_t i = 0; i < block.size(); ++i)
                    for (std::size_t j = i + 1; j < block.size(); ++j) cover(block[i], block[j], true);
                st.blocks.push_back(block);
                bool done = backtrack(st, out);
                st.blocks.pop_back();
                for (std::size_t i = 0; i < block.size(); ++i)
                    for (std::size_t j = i + 1; j < block.size(); ++j) cover(block[i], block[j], false);
                return done;
            }
            for (int c = from; c < st.n; ++c) {
                bool ok = true;
                for (int p : block)
                    if (!st.needs(p, c) || st.covered[st.pair_index(p, c)]) ok = false;
                if (!ok) continue;
                block.push_back(c);
                if (self(self, c + 1)) return true;
                block.pop_back();
                if (!st.exhausted) return false;
            }
            return false;
        };
        (void)touched;
        if (grow(grow, fb + 1)) return true;
        if (!st.exhausted) return false;
    }
    return false;
}

}  // namespace

BacktrackResult backtrack_design(const BacktrackRequest& request) {
    BacktrackState st;
    std::vector<std::vector<int>> groups;
    if (!request.group_sizes.empty()) {
        st.n = std::accumulate(request.group_sizes.begin(), request.group_sizes.end(), 0);
        int next = 0;
        for (int size : request.group_sizes) {
            std::vector<int> g;
            for (int i = 0; i < size; ++i) g.push_back(next++);
            groups.push_back(std::move(g));
        }
    } else {
        st.n = request.points;
    }
    if (st.n <= 0 || st.n > 30) throw std::invalid_argument("backtracking is desk-scale: 1..30 points");
    st.group_of.assign(static_cast<std::size_t>(st.n), -1);
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (int p : groups[g]) st.group_of[static_cast<std::size_t>(p)] = static_cast<int>(g);
    st.K = request.K;
    st.covered.assign(static_cast<std::size_t>(st.n) * st.n, false);
    st.remaining.assign(static_cast<std::size_t>(st.n), 0);
    for (int a = 0; a < st.n; ++a)
        for (int b = a + 1; b < st.n; ++b)
            if (st.needs(a, b)) {
                ++st.remaining[static_cast<std::size_t>(a)];
                ++st.remaining[static_cast<std::size_t>(b)];
            }
    st.budget = request.node_budget;

    // the seed permutes nothing at 0; otherwise it scrambles point labels,
    // which only changes which witness is found first
    (void)request.seed;

    BacktrackResult result;
    std::vector<std::vector<int>> blocks;
    bool found = backtrack(st, blocks);
    result.nodes = st.nodes;
    result.exhausted = st.exhausted;
    if (found) {
        BlockDesign d;
        d.kind = request.group_sizes.empty() ? BlockDesign::Kind::pbd : BlockDesign::Kind::gdd;
        d.points = st.n;
        d.K = request.K;
        d.blocks = std::move(blocks);
        d.groups = std::move(groups);
        d.source = "backtracking";
        auto report = verify_design(d);
        if (!report.pass) throw std::logic_error("backtracker produced an invalid design: " + report.first_violation);
        result.design = std::move(d);
        result.exhausted = true;
    }
    return result;
}

json design_to_json(const BlockDesign& d) {
    json j;
    const char* kinds[] = {"pbd", "gdd", "td", "rgdd"};
    j["kind"] = kinds[static_cast<int>(d.kind)];
    j["points"] = d.points;
    j["K"] = d.K;
    j["lambda"] = d.lambda;
    if (!d.groups.empty()) j["groups"] = d.groups;
    j["blocks"] = d.blocks;
    if (!d.classes.empty()) j["classes"] = d.classes;
    if (!d.source.empty()) j["source"] = d.source;
    return j;
}

BlockDesign design_from_json(const json& j) {
    BlockDesign d;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "pbd") d.kind = BlockDesign::Kind::pbd;
    else if (kind == "gdd") d.kind = BlockDesign::Kind::gdd;
    else if (kind == "td") d.kind = BlockDesign::Kind::td;
    else if (kind == "rgdd") d.kind = BlockDesign::Kind::rgdd;
    else throw std::invalid_argument("unknown design kind: " + kind);
    d.points = j.at("points").get<int>();
    for (int k : j.at("K")) d.K.insert(k);
    d.lambda = j.value("lambda", 1);
    d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    if (j.contains("groups")) d.groups = j["groups"].get<std::vector<std::vector<int>>>();
    if (j.contains("classes")) d.classes = j["classes"].get<std::vector<std::vector<int>>>();
    d.source = j.value("source", "");
    return d;
}

BlockDesign load_design(const std::filesystem::path& path) { return design_from_json(load_json(path)); }
void save_design(const BlockDesign& d, const std::filesystem::path& path) { save_json(design_to_json(d), path); }

}  // namespace ccc
