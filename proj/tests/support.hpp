#pragma once

// Shared helpers for the test suites: deterministic random generators for
// polynomials and recurrence-backed sequences, tiny parsing shims, and a
// term-map accumulator for summing truncated series.

#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "ndlrs/annihilator.hpp"
#include "ndlrs/border.hpp"
#include "ndlrs/polynomial.hpp"
#include "ndlrs/sequence.hpp"

namespace testsupport {

using namespace ndlrs;
using Rng = std::mt19937_64;

inline Scalar random_scalar(const FieldCtx& field, Rng& rng) {
    if (field.is_rational()) {
        std::uniform_int_distribution<int> dist(-4, 4);
        return Scalar::from_int(field, dist(rng));
    }
    std::uniform_int_distribution<long long> dist(0, static_cast<long long>(field.modulus()) - 1);
    return Scalar::from_int(field, dist(rng));
}

inline Scalar random_nonzero_scalar(const FieldCtx& field, Rng& rng) {
    for (;;) {
        Scalar c = random_scalar(field, rng);
        if (!c.is_zero()) return c;
    }
}

// Random polynomial with support inside [0, maxdeg], term presence ~density%.
inline Poly random_poly(int n, const Exponent& maxdeg, const FieldCtx& field, Rng& rng, int density = 60) {
    std::uniform_int_distribution<int> pct(0, 99);
    Poly f(n, field);
    for (const Exponent& e : box_points(Exponent::zeros(n), maxdeg))
        if (pct(rng) < density) f.add_term(e, random_scalar(field, rng));
    return f;
}

// Random polynomial with degree vector exactly d (corner term forced in).
inline Poly random_poly_with_degree(int n, const Exponent& d, const FieldCtx& field, Rng& rng) {
    Poly f = random_poly(n, d, field, rng);
    if (f.coeff(d).is_zero()) f.add_term(d, random_nonzero_scalar(field, rng));
    return f;
}

// Random monic univariate in `axis` of exact degree deg (>= 1).
inline Poly random_monic_axis_poly(int n, int axis, int deg, const FieldCtx& field, Rng& rng) {
    Poly f(n, field);
    f.add_term(Exponent::unit(n, axis, deg), Scalar::one(field));
    for (int k = 0; k < deg; ++k) f.add_term(Exponent::unit(n, axis, k), random_scalar(field, rng));
    return f;
}

// Random recurrence-backed sequence with a nonzero initial box.
inline Sequence random_evr(int n, const std::vector<int>& degs, const FieldCtx& field, Rng& rng,
                           std::vector<Poly>* polys_out = nullptr) {
    std::vector<Poly> polys;
    for (int i = 0; i < n; ++i) polys.push_back(random_monic_axis_poly(n, i, degs[static_cast<std::size_t>(i)], field, rng));
    std::size_t count = 1;
    for (int d : degs) count *= static_cast<std::size_t>(d);
    std::vector<Scalar> init;
    for (;;) {
        init.clear();
        bool nonzero = false;
        for (std::size_t k = 0; k < count; ++k) {
            init.push_back(random_scalar(field, rng));
            nonzero = nonzero || !init.back().is_zero();
        }
        if (nonzero) break;
    }
    if (polys_out) *polys_out = polys;
    return Sequence::evr(polys, init);
}

// Terse builders for hand-written fixtures: parse "X1^2*X2 - X1 + 3" style
// is overkill; instead build from (coef, exps...) triples.
struct Term {
    long long c;
    std::vector<int> e;
};

inline Poly make_poly(int n, const FieldCtx& field, const std::vector<Term>& terms) {
    Poly f(n, field);
    for (const Term& t : terms) f.add_term(Exponent(t.e), Scalar::from_int(field, t.c));
    return f;
}

inline std::vector<Scalar> scalars(const FieldCtx& field, const std::vector<long long>& vals) {
    std::vector<Scalar> out;
    out.reserve(vals.size());
    for (long long v : vals) out.push_back(Scalar::from_int(field, v));
    return out;
}

// Example 2.4(a): s_{0,j} = 1 for j <= 0, else 0. Witness {X_1, X_2 - 1}.
inline Sequence example_a(const FieldCtx& field, std::vector<Poly>* polys_out = nullptr) {
    std::vector<Poly> polys = {make_poly(2, field, {{1, {1, 0}}}),
                               make_poly(2, field, {{1, {0, 1}}, {-1, {0, 0}}})};
    if (polys_out) *polys_out = polys;
    return Sequence::evr(polys, scalars(field, {1}));
}

// The cross sequence: s_{(i,0)} = s_{(0,j)} = 1, else 0.
// Witness f_i = X_i^2 - X_i; initial box [-1,0]^2.
inline Sequence cross_sequence(const FieldCtx& field, std::vector<Poly>* polys_out = nullptr) {
    std::vector<Poly> polys = {make_poly(2, field, {{1, {2, 0}}, {-1, {1, 0}}}),
                               make_poly(2, field, {{1, {0, 2}}, {-1, {0, 1}}})};
    if (polys_out) *polys_out = polys;
    // canonical order over [-1,0]^2: (-1,-1), (-1,0), (0,-1), (0,0)
    return Sequence::evr(polys, scalars(field, {0, 1, 1, 1}));
}

// Reversed Fibonacci: s_0 = s_{-1} = 1, s_{b-2} = s_{b-1} + s_b.
inline Sequence reversed_fibonacci(const FieldCtx& field, Poly* f_out = nullptr) {
    Poly f = make_poly(1, field, {{1, {2}}, {-1, {1}}, {-1, {0}}});
    if (f_out) *f_out = f;
    return Sequence::evr({f}, scalars(field, {1, 1}));
}

inline Region window_box(int n, int w) {
    Exponent lo = Exponent::zeros(n);
    for (int i = 0; i < n; ++i) lo[i] = -w;
    return Region::box(lo, Exponent::zeros(n));
}

// Sum of truncated series as a bare term map (series regions differ by cell).
inline std::map<Exponent, Scalar> term_sum(const std::vector<Series>& parts) {
    std::map<Exponent, Scalar> acc;
    for (const Series& s : parts) {
        for (const auto& [e, c] : s.terms()) {
            auto [it, inserted] = acc.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    return acc;
}

}  // namespace testsupport
