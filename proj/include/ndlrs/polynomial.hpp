#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndlrs/exponent.hpp"
#include "ndlrs/field.hpp"

namespace ndlrs {

/// Sparse multivariate polynomial over F_p or Q: a finitely supported map
/// from exponent vectors (componentwise >= 0) to nonzero coefficients.
/// Terms iterate in the canonical order (lexicographic ascending, axis 1
/// most significant).
class Poly {
public:
    using Terms = std::map<Exponent, Scalar>;

    Poly(int n, const FieldCtx& field) : n_(n), field_(field) {
        if (n < 1) throw DomainError("polynomial dimension must be >= 1");
    }

    static Poly zero(int n, const FieldCtx& field) { return Poly(n, field); }
    static Poly constant(int n, const Scalar& c);
    static Poly monomial(int n, const Exponent& e, const Scalar& c);
    /// The monomial X^e with coefficient 1.
    static Poly x_pow(int n, const FieldCtx& field, const Exponent& e);
    /// Univariate helper: builds sum_k coefs[k] * X_axis^k in dimension n.
    static Poly from_axis_coeffs(int n, int axis, const FieldCtx& field, const std::vector<Scalar>& coefs);

    int dim() const { return n_; }
    FieldCtx field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Accumulate c * X^e, dropping the term if it cancels to zero.
    void add_term(const Exponent& e, const Scalar& c);
    Scalar coeff(const Exponent& e) const;

    /// Degree vector (componentwise max over the support); nullopt encodes
    /// the degree of the zero polynomial.
    std::optional<Exponent> degree() const;
    /// Partial degree along one axis; -1 stands in for -infinity.
    int degree_in(int axis) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly scaled(const Scalar& c) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// True when the support touches no axis other than `axis` (constants
    /// qualify for every axis).
    bool is_univariate_in(int axis) const;
    /// Dense coefficient vector of a univariate-in-`axis` polynomial.
    std::vector<Scalar> axis_coeffs(int axis) const;

    /// Exact division by the monomial X^e; every exponent must dominate e.
    Poly divide_by_monomial(const Exponent& e) const;

    /// Monic normalization (leading coefficient in canonical order made 1).
    Poly monic() const;

    /// Plain-text rendering in descending canonical order, e.g. "X1^2*X2 - X1".
    std::string str() const;

private:
    void check_compatible(const Poly& rhs) const;

    int n_;
    FieldCtx field_;
    Terms terms_;
};

/// A truncation of a Laurent object: finitely many terms plus the declared
/// region that bounds where those terms live (and where the truncation is
/// meaningful). Exponents may be negative.
class Series {
public:
    using Terms = std::map<Exponent, Scalar>;

    Series(int n, const FieldCtx& field, Region region)
        : n_(n), field_(field), region_(std::move(region)) {
        if (region_.dim() != n_) throw DomainError("series region dimension mismatch");
    }

    int dim() const { return n_; }
    FieldCtx field() const { return field_; }
    const Region& region() const { return region_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Scalar& c);
    Scalar coeff(const Exponent& e) const;

    std::optional<Exponent> degree() const;

    /// Equality of the stored terms (the region is bookkeeping).
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// The terms as a polynomial; requires all exponents >= 0.
    Poly as_poly() const;
    static Series from_poly(const Poly& f);

private:
    int n_;
    FieldCtx field_;
    Region region_;
    Terms terms_;
};

/// Degree vector of a term map (shared by Poly and Series).
std::optional<Exponent> degree_of_terms(const std::map<Exponent, Scalar>& terms, int n);

/// G|A: the terms of G with exponent in A; the result's declared region is
/// A intersected with G's region.
Series restrict_to(const Series& g, const Region& a);
Series restrict_to(const Poly& g, const Region& a);

/// f* = X^{deg f} f(X^{-1}); 0* = 0.
Poly reciprocal(const Poly& f);

/// Generalized Newton divided difference: (f | [a, deg f]) / X^a, for a >= 0.
Poly divided_difference(const Poly& f, const Exponent& a);

/// Monic gcd of two polynomials that are univariate in a common axis
/// (not both zero).
Poly uni_gcd(const Poly& f, const Poly& g);
/// Monic lcm; lcm(f,0) = 0.
Poly uni_lcm(const Poly& f, const Poly& g);
/// Euclidean division f = q*g + r with deg r < deg g, both univariate in a
/// common axis; g nonzero.
std::pair<Poly, Poly> uni_divrem(const Poly& f, const Poly& g);

/// gcd of f_i (nonzero, univariate in `axis`) with an arbitrary h: every
/// divisor of f_i lies in F[X_axis], so this is uni_gcd(f_i, g0) where g0 is
/// the gcd of the axis coefficient polynomials of h.
Poly gcd_axis(const Poly& f_axis, const Poly& h, int axis);

/// Exact division of h by a monic polynomial d that is univariate in `axis`;
/// throws unless the remainder is zero.
Poly divide_exact_axis(const Poly& h, const Poly& d, int axis);

/// Normal form of g modulo the rectilinear ideal (gamma_1,...,gamma_n): the
/// unique representative with every axis-i degree < deg gamma_i. Each
/// gamma_i must be monic, univariate in axis i, of degree >= 1.
Poly normal_form(const Poly& g, const std::vector<Poly>& gammas);

/// Normal form together with the quotients: g = sum_i u_i * gamma_i + nf.
struct NormalFormResult {
    Poly nf;
    std::vector<Poly> quotients;
};
NormalFormResult normal_form_with_quotients(const Poly& g, const std::vector<Poly>& gammas);

}  // namespace ndlrs
