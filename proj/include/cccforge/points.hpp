#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ccc {

/// A point of the ambient set. Either a residue in Z_v, an "infinite"
/// point x_j whose subscript j is developed modulo a small class modulus,
/// or a fixed labelled point that every development leaves alone.
class Point {
public:
    enum class Kind : std::uint8_t { finite = 0, infinite = 1, fixed = 2 };

    Point() = default;

    static Point finite(int residue) { return Point(Kind::finite, residue, {}); }
    static Point infinite(std::string label, int subscript) {
        return Point(Kind::infinite, subscript, std::move(label));
    }
    static Point fixed(std::string label) { return Point(Kind::fixed, 0, std::move(label)); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    int residue() const;
    int subscript() const;
    const std::string& label() const { return label_; }

    /// "7", "a@2" or "f" per the canonical file format.
    std::string str() const;
    static Point parse(const std::string& text);

    /// Total point order: finite residues ascending, then infinite points
    /// by (label, subscript), then fixed labels.
    friend std::strong_ordering operator<=>(const Point& x, const Point& y) {
        if (x.kind_ != y.kind_) return x.kind_ <=> y.kind_;
        switch (x.kind_) {
            case Kind::finite: return x.value_ <=> y.value_;
            case Kind::infinite:
                if (auto c = x.label_ <=> y.label_; c != 0) return c;
                return x.value_ <=> y.value_;
            default: return x.label_ <=> y.label_;
        }
    }
    friend bool operator==(const Point& x, const Point& y) = default;

private:
    Point(Kind kind, int value, std::string label)
        : kind_(kind), value_(value), label_(std::move(label)) {}

    Kind kind_ = Kind::finite;
    int value_ = 0;  // residue (finite) or subscript (infinite)
    std::string label_;
};

/// The ambient point set: Z_v, plus classes of infinite points, plus fixed
/// points. Assigns every point a dense id following the total point order,
/// which is what codewords and verification kernels work with.
class PointSet {
public:
    struct InfiniteClass {
        std::vector<std::string> labels;
        int modulus = 0;
    };

    PointSet() = default;
    PointSet(int v, std::vector<InfiniteClass> infinite, std::vector<std::string> fixed);

    static PointSet plain(int n) { return PointSet(n, {}, {}); }

    int size() const { return static_cast<int>(points_.size()); }
    int finite_modulus() const { return v_; }
    const std::vector<InfiniteClass>& infinite_classes() const { return infinite_; }
    const std::vector<std::string>& fixed_labels() const { return fixed_; }

    bool contains(const Point& p) const;
    /// Dense id in [0, size()). Throws std::out_of_range for foreign points.
    int id_of(const Point& p) const;
    const Point& point_of(int id) const;

    /// Modulus of the class an infinite point belongs to.
    int class_modulus(const std::string& label) const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.v_ == b.v_ && a.points_ == b.points_;
    }

private:
    int v_ = 0;
    std::vector<InfiniteClass> infinite_;
    std::vector<std::string> fixed_;
    std::vector<Point> points_;  // sorted by the total order
};

}  // namespace ccc
