#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ndlrs/errors.hpp"

namespace ndlrs {

/// A point of Z^n: the exponent of a monomial, or the index of a sequence
/// entry. Comparison is lexicographic with axis 1 most significant, which is
/// the canonical term order used for iteration and printing everywhere.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<int> components) : c_(std::move(components)) {}
    Exponent(std::initializer_list<int> components) : c_(components) {}

    static Exponent zeros(int n) { return Exponent(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    static Exponent ones(int n) { return Exponent(std::vector<int>(static_cast<std::size_t>(n), 1)); }
    /// c * unit vector along `axis` (0-based).
    static Exponent unit(int n, int axis, int c = 1);

    int dim() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& components() const { return c_; }

    Exponent operator+(const Exponent& rhs) const;
    Exponent operator-(const Exponent& rhs) const;
    Exponent operator-() const;

    /// Componentwise partial order; a.leq(b) is "a <= b" in Z^n.
    bool leq(const Exponent& rhs) const;
    bool all_geq(int bound) const;
    bool all_leq(int bound) const;

    /// Componentwise max (join in the partial order).
    static Exponent max(const Exponent& a, const Exponent& b);

    int sum() const;

    auto operator<=>(const Exponent&) const = default;

    std::string str() const;

private:
    std::vector<int> c_;
};

/// Odometer step through the box [lo,hi] in canonical order (axis 1 most
/// significant, last axis varying fastest). Returns false when exhausted.
bool next_point(Exponent& cur, const Exponent& lo, const Exponent& hi);

/// All points of [lo,hi] in canonical order; empty when lo <= hi fails.
std::vector<Exponent> box_points(const Exponent& lo, const Exponent& hi);

/// A product of per-axis intervals, each [lo_i,hi_i] or (-inf,hi_i].
/// Covers the three shapes used throughout: boxes [a,b], lower sets
/// (-inf,a], and border cells (mixed products of (-inf,0] and [1,d_i]).
class Region {
public:
    struct AxisRange {
        std::optional<int> lo;  // absent = -infinity
        int hi = 0;
        friend bool operator==(const AxisRange&, const AxisRange&) = default;
    };

    static Region box(const Exponent& lo, const Exponent& hi);
    static Region lower_set(const Exponent& hi);
    explicit Region(std::vector<AxisRange> axes) : axes_(std::move(axes)) {}

    int dim() const { return static_cast<int>(axes_.size()); }
    const std::vector<AxisRange>& axes() const { return axes_; }

    bool contains(const Exponent& a) const;
    bool is_empty() const;
    /// True when every axis has a finite lower bound.
    bool is_finite() const;

    Exponent finite_lo() const;
    Exponent hi() const;

    Region intersect(const Region& other) const;

    /// Points of a finite region in canonical order.
    std::vector<Exponent> points() const;

    friend bool operator==(const Region&, const Region&) = default;

private:
    std::vector<AxisRange> axes_;
};

}  // namespace ndlrs
