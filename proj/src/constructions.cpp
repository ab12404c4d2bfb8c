#include "cccforge/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ccc {

namespace {

void require_verified(const Code& c, const std::string& what) {
    auto report = verify_code(c);
    if (!report.pass) throw std::runtime_error(what + " failed verification: " + report.summary());
}

void require_verified(const Gdc& g, const std::string& what) {
    auto report = verify_gdc(g);
    if (!report.pass) throw std::runtime_error(what + " failed verification: " + report.summary());
}

/// Monotone placement of a code's points onto target ids.
void place_words(const Code& filler, const std::vector<int>& target, std::vector<Codeword>& out) {
    if (static_cast<int>(target.size()) != filler.length())
        throw std::invalid_argument("filler length disagrees with its slot");
    for (const auto& w : filler.words) {
        std::array<int, 4> raw{};
        for (int k = 0; k < 4; ++k) raw[static_cast<std::size_t>(k)] = target[static_cast<std::size_t>(w.a[k])];
        out.push_back(canonicalize(raw));
    }
}

}  // namespace

Code fill_groups(const Gdc& g, const std::map<int, Code>& fillers) {
    if (g.code.declared_distance > 6)
        throw std::invalid_argument("filling in groups needs d <= 2(w-1) = 6");
    Code out;
    out.points = PointSet::plain(g.code.length());
    out.declared_distance = g.code.declared_distance;
    out.words = g.code.words;
    for (const auto& group : g.groups) {
        auto sorted = group;
        std::sort(sorted.begin(), sorted.end());
        auto it = fillers.find(static_cast<int>(sorted.size()));
        if (it == fillers.end())
            throw std::invalid_argument("no filler for group size " + std::to_string(sorted.size()));
        if (it->second.declared_distance < out.declared_distance)
            throw std::invalid_argument("filler distance below the master's");
        place_words(it->second, sorted, out.words);
    }
    std::size_t before = out.words.size();
    out.normalize();
    if (out.words.size() != before) throw std::runtime_error("group filling produced duplicate words");
    require_verified(out, "group filling");
    out.verified = true;
    return out;
}

Gdc as_edge_filler(const Code& c) {
    Gdc g;
    g.code = c;
    g.groups = singleton_groups(c.length());
    return g;
}

Code adjoin_points(const Gdc& g, int y, std::size_t first_group,
                   const Code& first_filler, const std::map<int, Gdc>& edge_fillers) {
    if (g.code.declared_distance > 6)
        throw std::invalid_argument("adjoining points needs d <= 2(w-1) = 6");
    if (first_group >= g.groups.size()) throw std::invalid_argument("no such group");
    const int n = g.code.length();
    const int d = g.code.declared_distance;

    Code out;
    out.points = PointSet::plain(n + y);
    out.declared_distance = d;
    out.words = g.code.words;

    std::vector<int> ideal(static_cast<std::size_t>(y));
    std::iota(ideal.begin(), ideal.end(), n);

    for (std::size_t gi = 0; gi < g.groups.size(); ++gi) {
        auto sorted = g.groups[gi];
        std::sort(sorted.begin(), sorted.end());
        if (gi == first_group) {
            if (first_filler.declared_distance < d)
                throw std::invalid_argument("first filler distance below the master's");
            // filler points: group first, ideal points last
            auto target = sorted;
            target.insert(target.end(), ideal.begin(), ideal.end());
            place_words(first_filler, target, out.words);
            continue;
        }
        auto it = edge_fillers.find(static_cast<int>(sorted.size()));
        if (it == edge_fillers.end())
            throw std::invalid_argument("no edge filler for group size " + std::to_string(sorted.size()));
        const Gdc& filler = it->second;
        if (filler.code.declared_distance < d)
            throw std::invalid_argument("edge filler distance below the master's");
        if (filler.code.length() != static_cast<int>(sorted.size()) + y)
            throw std::invalid_argument("edge filler length disagrees with group size + y");

        // locate the filler's y-group; all other groups must be singletons
        std::vector<int> ygroup, singles;
        if (y == 1) {
            for (const auto& grp : filler.groups)
                if (grp.size() != 1) throw std::invalid_argument("a y=1 edge filler must have singleton groups");
            ygroup = {filler.code.length() - 1};
        } else {
            for (const auto& grp : filler.groups) {
                if (static_cast<int>(grp.size()) == y && ygroup.empty()) ygroup = grp;
                else if (grp.size() == 1) continue;
                else throw std::invalid_argument("edge filler is not of type 1^g y^1");
            }
            if (ygroup.empty()) throw std::invalid_argument("edge filler has no group of size y");
        }
        std::sort(ygroup.begin(), ygroup.end());
        for (int p = 0; p < filler.code.length(); ++p)
            if (!std::binary_search(ygroup.begin(), ygroup.end(), p)) singles.push_back(p);

        std::vector<int> target(static_cast<std::size_t>(filler.code.length()));
        for (std::size_t i = 0; i < singles.size(); ++i) target[static_cast<std::size_t>(singles[i])] = sorted[i];
        for (std::size_t i = 0; i < ygroup.size(); ++i) target[static_cast<std::size_t>(ygroup[i])] = ideal[i];
        place_words(filler.code, target, out.words);
    }

    std::size_t before = out.words.size();
    out.normalize();
    if (out.words.size() != before) throw std::runtime_error("adjoining points produced duplicate words");
    require_verified(out, "adjoining points");
    out.verified = true;
    return out;
}

Gdc fundamental(const BlockDesign& master, const std::vector<int>& weights,
                const std::function<Gdc(const std::vector<int>&)>& supplier) {
    if (weights.size() != static_cast<std::size_t>(master.points))
        throw std::invalid_argument("one weight per master point");
    auto master_report = verify_design(master);
    if (!master_report.pass)
        throw std::invalid_argument("master design invalid: " + master_report.first_violation);

    // flatten (x, copy) to dense ids
    std::vector<int> offset(static_cast<std::size_t>(master.points) + 1, 0);
    for (int x = 0; x < master.points; ++x) {
        if (weights[static_cast<std::size_t>(x)] < 0) throw std::invalid_argument("negative weight");
        offset[static_cast<std::size_t>(x) + 1] = offset[static_cast<std::size_t>(x)] + weights[static_cast<std::size_t>(x)];
    }
    const int n = offset.back();

    Gdc out;
    out.code.points = PointSet::plain(n);
    for (const auto& group : master.groups) {
        std::vector<int> fiber;
        for (int x : group)
            for (int c = 0; c < weights[static_cast<std::size_t>(x)]; ++c)
                fiber.push_back(offset[static_cast<std::size_t>(x)] + c);
        if (!fiber.empty()) out.groups.push_back(std::move(fiber));
    }

    std::set<Codeword> words;
    int d = 0;
    for (const auto& block : master.blocks) {
        std::vector<int> type;
        for (int x : block)
            if (weights[static_cast<std::size_t>(x)] > 0) type.push_back(weights[static_cast<std::size_t>(x)]);
        std::sort(type.begin(), type.end());
        if (type.size() < 2) continue;  // too light to carry any word
        Gdc ingredient = supplier(type);
        if (ingredient.type() != type)
            throw std::invalid_argument("ingredient type " + ingredient.type_string() + " does not match the block");
        if (d == 0) d = ingredient.code.declared_distance;
        if (ingredient.code.declared_distance != d)
            throw std::invalid_argument("ingredient distances disagree");

        // match ingredient groups to block points of equal weight, in order
        std::vector<std::size_t> grp_order(ingredient.groups.size());
        std::iota(grp_order.begin(), grp_order.end(), 0);
        std::stable_sort(grp_order.begin(), grp_order.end(), [&](std::size_t a, std::size_t b) {
            return ingredient.groups[a].size() < ingredient.groups[b].size();
        });
        std::vector<int> block_order;
        for (int x : block)
            if (weights[static_cast<std::size_t>(x)] > 0) block_order.push_back(x);
        std::stable_sort(block_order.begin(), block_order.end(), [&](int a, int b) {
            return weights[static_cast<std::size_t>(a)] < weights[static_cast<std::size_t>(b)];
        });

        std::vector<int> target(static_cast<std::size_t>(ingredient.code.length()), -1);
        for (std::size_t i = 0; i < block_order.size(); ++i) {
            auto group = ingredient.groups[grp_order[i]];
            std::sort(group.begin(), group.end());
            int x = block_order[i];
            for (std::size_t c = 0; c < group.size(); ++c)
                target[static_cast<std::size_t>(group[c])] = offset[static_cast<std::size_t>(x)] + static_cast<int>(c);
        }
        for (const auto& w : ingredient.code.words) {
            std::array<int, 4> raw{};
            for (int k = 0; k < 4; ++k) raw[static_cast<std::size_t>(k)] = target[static_cast<std::size_t>(w.a[k])];
            if (!words.insert(canonicalize(raw)).second)
                throw std::runtime_error("weighting construction produced a duplicate word");
        }
    }

    out.code.declared_distance = d;
    out.code.words.assign(words.begin(), words.end());
    if (!out.code.words.empty()) {
        require_verified(out, "weighting construction");
        out.code.verified = true;
    }
    return out;
}

Gdc inflate(const Gdc& g, const BlockDesign& td) {
    auto td_report = verify_design(td);
    if (td.kind != BlockDesign::Kind::td || !td_report.pass)
        throw std::invalid_argument("inflation needs a verified TD: " + td_report.first_violation);
    if (td.groups.size() != 4) throw std::invalid_argument("inflation uses a TD(4,m)");
    const int m = static_cast<int>(td.groups.front().size());
    const int n = g.code.length();

    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(td.points));
    for (std::size_t grp = 0; grp < td.groups.size(); ++grp) {
        auto sorted = td.groups[grp];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            pos[static_cast<std::size_t>(sorted[i])] = {static_cast<int>(grp), static_cast<int>(i)};
    }

    Gdc out;
    out.code.points = PointSet::plain(n * m);
    out.code.declared_distance = g.code.declared_distance;
    for (const auto& group : g.groups) {
        std::vector<int> blown;
        for (int x : group)
            for (int j = 0; j < m; ++j) blown.push_back(x * m + j);
        out.groups.push_back(std::move(blown));
    }

    std::set<Codeword> words;
    for (const auto& block : td.blocks) {
        std::array<int, 4> beta{};
        for (int p : block) {
            auto [grp, idx] = pos[static_cast<std::size_t>(p)];
            beta[static_cast<std::size_t>(grp)] = idx;
        }
        for (const auto& w : g.code.words) {
            std::array<int, 4> raw{};
            for (int k = 0; k < 4; ++k)
                raw[static_cast<std::size_t>(k)] = w.a[k] * m + beta[static_cast<std::size_t>(k)];
            if (!words.insert(canonicalize(raw)).second)
                throw std::runtime_error("inflation produced a duplicate word");
        }
    }
    if (words.size() != g.code.words.size() * static_cast<std::size_t>(m) * m)
        throw std::runtime_error("inflation size is off");
    out.code.words.assign(words.begin(), words.end());
    require_verified(out, "inflation");
    out.code.verified = true;
    return out;
}

ShortenResult shorten(const Code& c, int x) {
    if (x < 0 || x >= c.length()) throw std::invalid_argument("coordinate outside the code");
    ShortenResult result;
    result.census = nonzero_census(c);
    Code out;
    out.points = PointSet::plain(c.length() - 1);
    out.declared_distance = c.declared_distance;
    for (const auto& w : c.words) {
        bool hit = false;
        std::array<int, 4> raw{};
        for (int k = 0; k < 4; ++k) {
            if (w.a[k] == x) hit = true;
            raw[static_cast<std::size_t>(k)] = w.a[k] > x ? w.a[k] - 1 : w.a[k];
        }
        if (hit) ++result.removed;
        else out.words.push_back(canonicalize(raw));
    }
    out.normalize();
    result.code = std::move(out);
    return result;
}

}  // namespace ccc
