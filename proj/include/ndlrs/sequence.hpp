#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ndlrs/polynomial.hpp"

namespace ndlrs {

namespace detail {
class SeqImpl;
}

/// An evaluable n-dimensional sequence indexed by -N^n. Handles are
/// immutable values; the backing may memoize internally but behaves as if
/// it did not. Backings: finite window tables (evaluation outside the
/// window is an error, never silently zero), axis-recurrence sequences
/// with an initial value box, and lazy shift/section views.
class Sequence {
public:
    /// Window-backed sequence on the box [lo, 0]; `values` in canonical
    /// order (axis 1 most significant, last axis fastest).
    static Sequence window(const Exponent& lo, const std::vector<Scalar>& values, const FieldCtx& field);

    /// The unique sequence with the given initial box that every axis
    /// polynomial annihilates. Each f_i must be univariate in axis i with
    /// degree d_i >= 1 (normalized monic here); the initial box is
    /// prod [-(d_i - 1), 0] and `init_values` lists it in canonical order.
    static Sequence evr(const std::vector<Poly>& axis_polys, const std::vector<Scalar>& init_values);

    /// The unique s with border polynomial X*g for f = prod f_i: the
    /// sequence defined by the rational form X*g/f. Requires each partial
    /// degree of g to be < the matching degree of f.
    static Sequence from_rational(const Poly& g, const std::vector<Poly>& axis_polys);

    int dim() const;
    FieldCtx field() const;

    /// s_a for a <= 0; exact.
    Scalar at(const Exponent& a) const;

    /// Axis polynomials of a recurrence-backed handle (monic), if any.
    const std::vector<Poly>* recurrence_polys() const;

private:
    explicit Sequence(std::shared_ptr<const detail::SeqImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::SeqImpl> impl_;

    friend Sequence shift_action(const Poly& f, const Sequence& s);
    friend Sequence section(const Sequence& s, const std::vector<int>& fixed_axes, const Exponent& fixed_values);
    friend Sequence minus_map(const Exponent& hi, const std::vector<Scalar>& values, const FieldCtx& field);
};

/// f acting on s by right shift: (f o s)_b = sum_a f_a s_{b-a}, lazily.
Sequence shift_action(const Poly& f, const Sequence& s);

/// The section of s with the given axes (0-based, strictly increasing,
/// a proper nonempty subset) frozen at `fixed_values` (<= 0). The result
/// ranges over the remaining axes in their original order.
Sequence section(const Sequence& s, const std::vector<int>& fixed_axes, const Exponent& fixed_values);

/// Bridge from N^n-indexed data: given a table on [0, hi] (canonical
/// order), the window sequence (s^-)_a = table[-a] on [-hi, 0].
Sequence minus_map(const Exponent& hi, const std::vector<Scalar>& values, const FieldCtx& field);

/// Truncated generating function: sum_{a in box} s_a X^a. The box must be
/// finite and contained in (-inf, 0].
Series gamma_window(const Sequence& s, const Region& box);

}  // namespace ndlrs
