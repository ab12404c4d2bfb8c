#include "cccforge/recipe.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace ccc {

namespace {

std::vector<std::vector<Point>> parse_words(const json& j, const char* key) {
    std::vector<std::vector<Point>> words;
    for (const auto& tuple : j.value(key, json::array())) {
        std::vector<Point> w;
        for (const auto& p : tuple) w.push_back(point_from_json(p));
        words.push_back(std::move(w));
    }
    return words;
}

}  // namespace

PointSet Recipe::point_set() const {
    return PointSet(v, infinite, fixed);
}

Recipe recipe_from_json(const json& j) {
    Recipe r;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "code") r.kind = Recipe::Kind::code;
    else if (kind == "gdc") r.kind = Recipe::Kind::gdc;
    else if (kind == "starter") r.kind = Recipe::Kind::starter;
    else if (kind == "frame_starter") r.kind = Recipe::Kind::frame_starter;
    else throw std::invalid_argument("unknown recipe kind: " + kind);

    r.d = j.value("d", r.is_starter_kind() ? 5 : 0);
    r.v = j.at("v").get<int>();
    r.m = j.value("m", 1);
    r.s = j.value("s", 1);
    r.M = j.value("M", 1);
    for (const auto& cls : j.value("infinite", json::array()))
        r.infinite.push_back({cls.at("labels").get<std::vector<std::string>>(), cls.at("modulus").get<int>()});
    r.fixed = j.value("fixed", std::vector<std::string>{});
    if (j.contains("group_type"))
        for (auto& [size, count] : j["group_type"].items())
            r.group_type[std::stoi(size)] = count.get<int>();
    if (j.contains("group_stride")) r.group_stride = j["group_stride"].get<int>();
    if (j.contains("groups_explicit"))
        for (const auto& grp : j["groups_explicit"]) {
            std::vector<Point> pts;
            for (const auto& p : grp) pts.push_back(point_from_json(p));
            r.explicit_groups.push_back(std::move(pts));
        }
    r.P = parse_words(j, "P");
    r.R = parse_words(j, "R");
    r.expected_size = j.value("expected_size", 0LL);
    r.optimal = j.value("optimal", false);
    r.source = j.value("source", "");

    if (r.v <= 0) throw std::invalid_argument("recipe needs a positive modulus");
    if (r.M <= 0 || r.v % r.M != 0)
        throw std::invalid_argument("translation step must divide the modulus (" + r.source + ")");
    if (r.s > 1 && std::gcd(r.m, static_cast<long long>(r.v)) != 1)
        throw std::invalid_argument("multiplier must be a unit modulo v (" + r.source + ")");
    return r;
}

Recipe load_recipe(const std::filesystem::path& path) {
    return recipe_from_json(load_json(path));
}

Codeword apply_multiplier(const Codeword& w, const PointSet& ps, long long m, int v) {
    if (m == 1) return w;
    std::array<int, 4> raw{};
    for (int k = 0; k < 4; ++k) {
        const Point& p = ps.point_of(w.a[k]);
        if (!p.is_finite())
            throw std::invalid_argument("multiplier applied to a word holding " + p.str());
        raw[static_cast<std::size_t>(k)] =
            ps.id_of(Point::finite(static_cast<int>((p.residue() * m) % v)));
    }
    return canonicalize(raw);
}

Codeword translate(const Codeword& w, const PointSet& ps, int delta, int v) {
    if (delta == 0) return w;
    std::array<int, 4> raw{};
    for (int k = 0; k < 4; ++k) {
        const Point& p = ps.point_of(w.a[k]);
        switch (p.kind()) {
            case Point::Kind::finite:
                raw[static_cast<std::size_t>(k)] = ps.id_of(Point::finite((p.residue() + delta) % v));
                break;
            case Point::Kind::infinite: {
                int u = ps.class_modulus(p.label());
                raw[static_cast<std::size_t>(k)] =
                    ps.id_of(Point::infinite(p.label(), (p.subscript() + delta) % u));
                break;
            }
            default:
                raw[static_cast<std::size_t>(k)] = w.a[k];
        }
    }
    return canonicalize(raw);
}

namespace {

Codeword to_codeword(const std::vector<Point>& pts, const PointSet& ps, const std::string& source) {
    if (pts.size() != 4)
        throw std::invalid_argument("base codeword without four points (" + source + ")");
    std::array<int, 4> raw{};
    for (int k = 0; k < 4; ++k) raw[static_cast<std::size_t>(k)] = ps.id_of(pts[static_cast<std::size_t>(k)]);
    return canonicalize(raw);
}

std::vector<std::vector<int>> build_groups(const Recipe& recipe, const PointSet& ps) {
    std::vector<std::vector<int>> groups;
    std::vector<bool> used(static_cast<std::size_t>(ps.size()), false);
    auto claim = [&](int id) {
        if (used[static_cast<std::size_t>(id)])
            throw std::invalid_argument("group scheme reuses a point (" + recipe.source + ")");
        used[static_cast<std::size_t>(id)] = true;
    };
    if (recipe.group_stride) {
        int t = *recipe.group_stride;
        if (t <= 0 || recipe.v % t != 0)
            throw std::invalid_argument("group stride must divide the modulus (" + recipe.source + ")");
        for (int i = 0; i < t; ++i) {
            std::vector<int> grp;
            for (int x = i; x < recipe.v; x += t) {
                claim(x);
                grp.push_back(x);
            }
            groups.push_back(std::move(grp));
        }
    }
    for (const auto& grp : recipe.explicit_groups) {
        std::vector<int> ids;
        for (const auto& p : grp) {
            int id = ps.id_of(p);
            claim(id);
            ids.push_back(id);
        }
        groups.push_back(std::move(ids));
    }
    // one group collecting every infinite and fixed point, when present
    std::vector<int> extra;
    for (int id = recipe.v; id < ps.size(); ++id)
        if (!used[static_cast<std::size_t>(id)]) {
            used[static_cast<std::size_t>(id)] = true;
            extra.push_back(id);
        }
    if (!extra.empty()) groups.push_back(std::move(extra));
    // leftover finite points become singletons (type 1^k part)
    for (int id = 0; id < ps.size(); ++id)
        if (!used[static_cast<std::size_t>(id)]) groups.push_back({id});
    return groups;
}

}  // namespace

Gdc expand(const Recipe& recipe) {
    if (recipe.is_starter_kind())
        throw std::invalid_argument("expand() takes code/gdc recipes; use expand_starter");
    PointSet ps = recipe.point_set();

    std::vector<Codeword> base;
    for (const auto& pw : recipe.P) {
        Codeword w = to_codeword(pw, ps, recipe.source);
        long long factor = 1;
        for (int i = 0; i < recipe.s; ++i) {
            base.push_back(apply_multiplier(w, ps, factor, recipe.v));
            factor = factor * recipe.m % recipe.v;
        }
    }
    for (const auto& rw : recipe.R) base.push_back(to_codeword(rw, ps, recipe.source));

    std::set<Codeword> words;
    const int orbit = recipe.v / recipe.M;
    for (const auto& b : base)
        for (int j = 0; j < orbit; ++j) {
            if (!words.insert(translate(b, ps, j * recipe.M, recipe.v)).second)
                throw std::runtime_error("development produced a duplicate word (" + recipe.source + ")");
        }

    const long long expected = static_cast<long long>(recipe.P.size()) * recipe.s + static_cast<long long>(recipe.R.size());
    if (static_cast<long long>(words.size()) != expected * orbit)
        throw std::runtime_error("orbit counting is off (" + recipe.source + ")");
    if (recipe.expected_size && static_cast<long long>(words.size()) != recipe.expected_size)
        throw std::runtime_error("expanded size " + std::to_string(words.size()) + " != expected " +
                                 std::to_string(recipe.expected_size) + " (" + recipe.source + ")");

    Gdc g;
    g.code.points = ps;
    g.code.words.assign(words.begin(), words.end());
    g.code.declared_distance = recipe.d;
    if (recipe.kind == Recipe::Kind::gdc) {
        g.groups = build_groups(recipe, ps);
        if (!recipe.group_type.empty()) {
            std::map<int, int> observed;
            for (const auto& grp : g.groups) ++observed[static_cast<int>(grp.size())];
            if (observed != recipe.group_type)
                throw std::runtime_error("group type disagrees with the declared type (" + recipe.source + ")");
        }
    } else {
        g.groups = singleton_groups(ps.size());
    }
    return g;
}

Code expand_code(const Recipe& recipe) {
    return expand(recipe).code;
}

}  // namespace ccc
