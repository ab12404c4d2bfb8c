#include "cccforge/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ccc {

json point_to_json(const Point& p) {
    if (p.is_finite()) return p.residue();
    return p.str();
}

Point point_from_json(const json& j) {
    if (j.is_number_integer()) return Point::finite(j.get<int>());
    if (j.is_string()) return Point::parse(j.get<std::string>());
    throw std::invalid_argument("a point must be an integer or a string");
}

namespace {

json points_to_json(const PointSet& ps) {
    json j;
    j["v"] = ps.finite_modulus();
    json inf = json::array();
    for (const auto& cls : ps.infinite_classes())
        inf.push_back({{"labels", cls.labels}, {"modulus", cls.modulus}});
    j["infinite"] = inf;
    j["fixed"] = ps.fixed_labels();
    return j;
}

PointSet points_from_json(const json& j) {
    if (j.is_number_integer()) return PointSet::plain(j.get<int>());
    std::vector<PointSet::InfiniteClass> infinite;
    for (const auto& cls : j.value("infinite", json::array()))
        infinite.push_back({cls.at("labels").get<std::vector<std::string>>(), cls.at("modulus").get<int>()});
    return PointSet(j.value("v", 0), std::move(infinite),
                    j.value("fixed", std::vector<std::string>{}));
}

json words_to_json(const Code& c) {
    auto sorted = c.words;
    std::sort(sorted.begin(), sorted.end());
    json words = json::array();
    for (const auto& w : sorted) {
        json tuple = json::array();
        for (int k = 0; k < 4; ++k) tuple.push_back(point_to_json(c.points.point_of(w.a[k])));
        words.push_back(std::move(tuple));
    }
    return words;
}

}  // namespace

json code_to_json(const Code& c) {
    json j;
    j["n"] = c.length();
    j["d"] = c.declared_distance;
    j["composition"] = c.composition;
    j["points"] = points_to_json(c.points);
    j["words"] = words_to_json(c);
    return j;
}

Code code_from_json(const json& j) {
    Code c;
    c.points = points_from_json(j.at("points"));
    c.declared_distance = j.at("d").get<int>();
    if (j.contains("composition")) {
        auto comp = j["composition"].get<std::vector<int>>();
        if (comp.size() != 3) throw std::invalid_argument("composition must have three components");
        c.composition = {comp[0], comp[1], comp[2]};
    }
    if (j.at("n").get<int>() != c.points.size())
        throw std::invalid_argument("declared n disagrees with the point set");
    for (const auto& tuple : j.at("words")) {
        if (tuple.size() != 4) throw std::invalid_argument("a word needs exactly four points");
        std::array<int, 4> raw{};
        for (int k = 0; k < 4; ++k) raw[static_cast<std::size_t>(k)] = c.points.id_of(point_from_json(tuple[static_cast<std::size_t>(k)]));
        c.words.push_back(canonicalize(raw));
    }
    c.normalize();
    return c;
}

json gdc_to_json(const Gdc& g) {
    json j = code_to_json(g.code);
    json groups = json::array();
    for (const auto& grp : g.groups) {
        json one = json::array();
        for (int p : grp) one.push_back(point_to_json(g.code.points.point_of(p)));
        groups.push_back(std::move(one));
    }
    j["groups"] = groups;
    return j;
}

Gdc gdc_from_json(const json& j) {
    Gdc g;
    g.code = code_from_json(j);
    if (j.contains("groups")) {
        for (const auto& grp : j["groups"]) {
            std::vector<int> ids;
            for (const auto& p : grp) ids.push_back(g.code.points.id_of(point_from_json(p)));
            g.groups.push_back(std::move(ids));
        }
    } else {
        g.groups = singleton_groups(g.code.length());
    }
    return g;
}

void save_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(1) << '\n';
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    json j;
    in >> j;
    return j;
}

Code load_code(const std::filesystem::path& path) { return code_from_json(load_json(path)); }
void save_code(const Code& c, const std::filesystem::path& path) { save_json(code_to_json(c), path); }
Gdc load_gdc(const std::filesystem::path& path) { return gdc_from_json(load_json(path)); }
void save_gdc(const Gdc& g, const std::filesystem::path& path) { save_json(gdc_to_json(g), path); }

}  // namespace ccc
