#include "cccforge/points.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ccc {

int Point::residue() const {
    if (kind_ != Kind::finite) throw std::logic_error("residue() on a non-finite point");
    return value_;
}

int Point::subscript() const {
    if (kind_ != Kind::infinite) throw std::logic_error("subscript() on a non-infinite point");
    return value_;
}

std::string Point::str() const {
    switch (kind_) {
        case Kind::finite: return std::to_string(value_);
        case Kind::infinite: return label_ + "@" + std::to_string(value_);
        default: return label_;
    }
}

Point Point::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty point");
    if (auto at = text.find('@'); at != std::string::npos) {
        std::string label = text.substr(0, at);
        if (label.empty()) throw std::invalid_argument("infinite point with empty label: " + text);
        return Point::infinite(label, std::stoi(text.substr(at + 1)));
    }
    bool numeric = std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (numeric || (text.size() > 1 && text[0] == '-')) return Point::finite(std::stoi(text));
    return Point::fixed(text);
}

PointSet::PointSet(int v, std::vector<InfiniteClass> infinite, std::vector<std::string> fixed)
    : v_(v), infinite_(std::move(infinite)), fixed_(std::move(fixed)) {
    if (v < 0) throw std::invalid_argument("negative finite modulus");
    for (int r = 0; r < v; ++r) points_.push_back(Point::finite(r));
    std::set<std::string> seen;
    std::vector<Point> tail;
    for (const auto& cls : infinite_) {
        if (cls.modulus <= 0) throw std::invalid_argument("infinite class modulus must be positive");
        for (const auto& label : cls.labels) {
            if (!seen.insert(label).second)
                throw std::invalid_argument("duplicate point label: " + label);
            for (int j = 0; j < cls.modulus; ++j) tail.push_back(Point::infinite(label, j));
        }
    }
    for (const auto& label : fixed_) {
        if (!seen.insert(label).second)
            throw std::invalid_argument("duplicate point label: " + label);
        tail.push_back(Point::fixed(label));
    }
    std::sort(tail.begin(), tail.end());
    points_.insert(points_.end(), tail.begin(), tail.end());
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

int PointSet::id_of(const Point& p) const {
    if (p.is_finite()) {
        // fast path: finite ids coincide with residues
        int r = p.residue();
        if (r < 0 || r >= v_) throw std::out_of_range("finite residue " + p.str() + " outside [0," + std::to_string(v_) + ")");
        return r;
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p)
        throw std::out_of_range("point " + p.str() + " not in the ambient set");
    return static_cast<int>(it - points_.begin());
}

const Point& PointSet::point_of(int id) const {
    if (id < 0 || id >= size()) throw std::out_of_range("point id out of range");
    return points_[static_cast<std::size_t>(id)];
}

int PointSet::class_modulus(const std::string& label) const {
    for (const auto& cls : infinite_)
        for (const auto& l : cls.labels)
            if (l == label) return cls.modulus;
    throw std::out_of_range("no infinite class with label " + label);
}

}  // namespace ccc
