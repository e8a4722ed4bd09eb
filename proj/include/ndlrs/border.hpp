#pragma once

#include <vector>

#include "ndlrs/polynomial.hpp"
#include "ndlrs/sequence.hpp"

namespace ndlrs {

/// Cells of the border partition of (-inf, d] are indexed by k in
/// [0, 2^n - 1]: bit i-1 of k is 1 exactly when the cell's axis-i factor is
/// (-inf, 0] (and [1, d_i] otherwise). k = 0 is the all-finite cell [1, d];
/// k = 2^n - 1 is (-inf, 0].
int border_cell_count(int n);
bool border_bit(int k, int axis);
/// Axes whose factor is (-inf, 0] (0-based, ascending).
std::vector<int> infinite_axes(int k, int n);

/// The k-th cell of the border partition of (-inf, d]; d >= 1 required.
Region border_cell(int k, const Exponent& d);

/// The unique k with a in cell(k, d); requires a <= d and d >= 1.
int classify(const Exponent& a, const Exponent& d);

/// The truncated product f * Gamma(s) over a finite box: coefficient at c
/// is sum over terms f_b with c - b <= 0 of f_b s_{c-b}. Exact; used both
/// as public restriction machinery and as the independent oracle for the
/// border formulas.
Series product_window(const Poly& f, const Sequence& s, const Region& box);

/// Border polynomial via divided differences:
///   beta_0(f,s) = X * sum_{0 <= a <= deg f - 1} s_{-a} nu^{a+1} f.
/// Divisible by X_1...X_n, support inside [1, deg f].
Poly beta0(const Poly& f, const Sequence& s);

/// Border polynomial computed the defining way: (f * Gamma(s)) | [1, deg f].
/// Independent of beta0's route; the two agree identically.
Poly beta0_direct(const Poly& f, const Sequence& s);

/// The k-th summand of f * Gamma(s) restricted to its border cell,
/// truncated to exponents >= -depth on the infinite axes. Middle cells are
/// assembled from cross-products of sections and divided differences;
/// k = 0 delegates to beta0 and k = 2^n - 1 is Gamma(f o s).
Series beta_k(const Poly& f, const Sequence& s, int k, const Exponent& depth);

/// All 2^n truncated summands of f * Gamma(s), indexed by k. Supports lie
/// in pairwise disjoint cells and the sum equals the truncated product.
std::vector<Series> decompose(const Poly& f, const Sequence& s, const Exponent& depth);

/// Finite-box probe of Proposition-style membership: true iff (f o s)
/// vanishes on the box. Necessary-condition check only; exact membership
/// is the annihilator module's is_member.
bool is_char_window(const Poly& f, const Sequence& s, const Region& box);

}  // namespace ndlrs
