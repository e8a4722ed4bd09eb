#pragma once

#include <vector>

#include "ndlrs/border.hpp"
#include "ndlrs/polynomial.hpp"
#include "ndlrs/sequence.hpp"

namespace ndlrs {

/// Axis polynomials certified (by a window spot-check, not a proof) to
/// annihilate a sequence: f_i monic, univariate in axis i, degree >= 1.
class EvrWitness {
public:
    /// Validates shape and spot-checks (f_i o s) = 0 on a window; throws
    /// DomainError when the check fails.
    static EvrWitness certify(const Sequence& s, const std::vector<Poly>& axis_polys);

    const std::vector<Poly>& axis_polys() const { return polys_; }
    const Poly& axis_poly(int axis) const { return polys_[static_cast<std::size_t>(axis)]; }
    int dim() const { return static_cast<int>(polys_.size()); }
    /// f = prod f_i.
    Poly product() const;

private:
    explicit EvrWitness(std::vector<Poly> polys) : polys_(std::move(polys)) {}
    std::vector<Poly> polys_;
};

/// Minimal polynomial of a 1-D sequence from any known annihilator
/// f in Ann(t): the monic gamma = f / gcd(f, beta_0(f,t)/X), which
/// generates Ann(t) over the field.
Poly gamma_1d(const Poly& f, const Sequence& t);

/// Monic generator of Ann(s) intersected with F[X_axis], by the gcd route:
/// gamma_i = f_i / gcd_axis(f_i, beta_0(f,s)/X_i) with f = prod f_j.
Poly gamma_axis_gcd(int axis, const EvrWitness& w, const Sequence& s);

/// Same generator by the independent lcm route: the lcm of the 1-D minimal
/// polynomials of the sections s^{(a')} over the finite box
/// [-Delta'_i, 0'], Delta'_i = deg(prod_{j != i} f_j) - 1. Needs n >= 2.
Poly gamma_axis_lcm(int axis, const EvrWitness& w, const Sequence& s);

/// Basis (reduced echelon form, canonical monomial pivot order) of the
/// kernel of c |-> normal_form(c * b, gammas) on the monomial space
/// {X^m : m <= deg gamma - 1} of dimension D = prod deg gamma_i.
std::vector<Poly> quotient_kernel(const std::vector<Poly>& gammas, const Poly& b);

/// Output of the end-to-end basis computation.
struct AnnBasisResult {
    std::vector<Poly> gammas;  // monic axis generators
    Poly b;                    // beta_0(prod gammas, s) / (X_1...X_n)
    std::vector<Poly> kernel;  // ideal-quotient kernel polynomials
    std::vector<Poly> basis;   // kernel followed by the gammas
};

/// Axis generators by the gcd route (cross-checked against the lcm route
/// when n >= 2), the quotient kernel, and the combined basis for Ann(s).
AnnBasisResult ann_basis(const Sequence& s, const EvrWitness& w);

/// Exact membership: g in Ann(s) iff normal_form(g * b, gammas) = 0.
bool is_member(const Poly& g, const AnnBasisResult& r);

/// D = prod deg gamma_i: generator count of P_n/(gamma) and the dimension
/// of the quotient monomial space.
long long cofinite_dim(const AnnBasisResult& r);

}  // namespace ndlrs
