#include "ndlrs/annihilator.hpp"

#include <algorithm>

namespace ndlrs {

namespace {

// (f o s) == 0 on the box [-w, 0]^n.
bool annihilates_window(const Poly& f, const Sequence& s, int w) {
    Exponent lo = Exponent::zeros(s.dim());
    for (int i = 0; i < s.dim(); ++i) lo[i] = -w;
    return is_char_window(f, s, Region::box(lo, Exponent::zeros(s.dim())));
}

std::vector<Poly> validate_witness_shape(const Sequence& s, const std::vector<Poly>& axis_polys) {
    int n = s.dim();
    if (static_cast<int>(axis_polys.size()) != n) throw DomainError("witness needs one polynomial per axis");
    std::vector<Poly> polys;
    polys.reserve(axis_polys.size());
    for (int i = 0; i < n; ++i) {
        const Poly& f = axis_polys[static_cast<std::size_t>(i)];
        if (f.dim() != n) throw DomainError("witness polynomial dimension mismatch");
        if (f.field() != s.field()) throw DomainError("witness polynomial field mismatch");
        if (!f.is_univariate_in(i))
            throw DomainError("witness polynomial " + std::to_string(i + 1) + " not univariate in its axis");
        if (f.degree_in(i) < 1)
            throw DomainError("witness polynomial " + std::to_string(i + 1) + " must have degree >= 1");
        polys.push_back(f.monic());
    }
    return polys;
}

// Reinterpret a polynomial univariate in `axis` as a 1-D polynomial.
Poly to_one_dim(const Poly& f, int axis) {
    return Poly::from_axis_coeffs(1, 0, f.field(), f.axis_coeffs(axis));
}

Poly from_one_dim(const Poly& f, int n, int axis) {
    return Poly::from_axis_coeffs(n, axis, f.field(), f.axis_coeffs(0));
}

}  // namespace

EvrWitness EvrWitness::certify(const Sequence& s, const std::vector<Poly>& axis_polys) {
    std::vector<Poly> polys = validate_witness_shape(s, axis_polys);
    int maxdeg = 1;
    for (int i = 0; i < s.dim(); ++i) maxdeg = std::max(maxdeg, polys[static_cast<std::size_t>(i)].degree_in(i));
    for (int i = 0; i < s.dim(); ++i) {
        if (!annihilates_window(polys[static_cast<std::size_t>(i)], s, 2 * maxdeg))
            throw DomainError("witness polynomial " + std::to_string(i + 1) +
                              " fails the window annihilation check");
    }
    return EvrWitness(std::move(polys));
}

Poly EvrWitness::product() const {
    Poly f = Poly::constant(dim(), Scalar::one(polys_[0].field()));
    for (const Poly& fi : polys_) f = f * fi;
    return f;
}

Poly gamma_1d(const Poly& f, const Sequence& t) {
    if (t.dim() != 1 || f.dim() != 1) throw DomainError("gamma_1d expects a 1-D sequence and polynomial");
    if (f.field() != t.field()) throw DomainError("field mismatch");
    int df = f.degree_in(0);
    if (df < 1) throw DomainError("annihilator must have degree >= 1");
    Poly fm = f.monic();
    if (!annihilates_window(fm, t, 2 * df))
        throw DomainError("polynomial fails the window annihilation check");
    Poly b = beta0(fm, t).divide_by_monomial(Exponent::ones(1));
    Poly d = uni_gcd(fm, b);
    auto [q, r] = uni_divrem(fm, d);
    return q.monic();
}

Poly gamma_axis_gcd(int axis, const EvrWitness& w, const Sequence& s) {
    int n = s.dim();
    if (axis < 0 || axis >= n) throw DomainError("axis out of range");
    Poly f = w.product();
    Poly h = beta0(f, s).divide_by_monomial(Exponent::unit(n, axis, 1));
    Poly d = gcd_axis(w.axis_poly(axis), h, axis);
    auto [q, r] = uni_divrem(w.axis_poly(axis), d);
    return q.monic();
}

Poly gamma_axis_lcm(int axis, const EvrWitness& w, const Sequence& s) {
    int n = s.dim();
    if (n < 2) throw DomainError("the lcm route needs n >= 2 (use gamma_1d)");
    if (axis < 0 || axis >= n) throw DomainError("axis out of range");

    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != axis) others.push_back(i);
    // Delta'_i = deg(prod_{j != axis} f_j) - 1 over the other axes.
    Exponent lo = Exponent::zeros(n - 1);
    for (std::size_t j = 0; j < others.size(); ++j)
        lo[static_cast<int>(j)] = -(w.axis_poly(others[j]).degree_in(others[j]) - 1);

    Poly f1 = to_one_dim(w.axis_poly(axis), axis);
    Poly acc = Poly::zero(1, s.field());
    for (const Exponent& ap : box_points(lo, Exponent::zeros(n - 1))) {
        Poly g = gamma_1d(f1, section(s, others, ap));
        acc = acc.is_zero() ? g : uni_lcm(acc, g);
    }
    return from_one_dim(acc, n, axis);
}

std::vector<Poly> quotient_kernel(const std::vector<Poly>& gammas, const Poly& b) {
    int n = static_cast<int>(gammas.size());
    if (b.dim() != n) throw DomainError("quotient dimension mismatch");
    FieldCtx field = b.field();
    Poly b_red = normal_form(b, gammas);  // also validates the gammas

    Exponent dg = Exponent::zeros(n);
    for (int i = 0; i < n; ++i) dg[i] = gammas[static_cast<std::size_t>(i)].degree_in(i);
    std::vector<Exponent> monomials = box_points(Exponent::zeros(n), dg - Exponent::ones(n));
    std::size_t D = monomials.size();
    std::map<Exponent, std::size_t> index;
    for (std::size_t m = 0; m < D; ++m) index.emplace(monomials[m], m);

    // mat[r][c] = coefficient of monomial r in normal_form(X^{m_c} * b).
    std::vector<std::vector<Scalar>> mat(D, std::vector<Scalar>(D, Scalar::zero(field)));
    for (std::size_t c = 0; c < D; ++c) {
        Poly img = normal_form(Poly::x_pow(n, field, monomials[c]) * b_red, gammas);
        for (const auto& [e, v] : img.terms()) mat[index.at(e)][c] = v;
    }

    // Gauss-Jordan; pivot columns scanned in canonical monomial order.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < D && rank < D; ++col) {
        std::size_t sel = rank;
        while (sel < D && mat[sel][col].is_zero()) ++sel;
        if (sel == D) continue;
        std::swap(mat[sel], mat[rank]);
        Scalar inv = mat[rank][col].inverse();
        for (std::size_t j = col; j < D; ++j) mat[rank][j] *= inv;
        for (std::size_t r = 0; r < D; ++r) {
            if (r == rank || mat[r][col].is_zero()) continue;
            Scalar factor = mat[r][col];
            for (std::size_t j = col; j < D; ++j) mat[r][j] -= factor * mat[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(D, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<Poly> kernel;
    for (std::size_t freec = 0; freec < D; ++freec) {
        if (is_pivot[freec]) continue;
        Poly g(n, field);
        g.add_term(monomials[freec], Scalar::one(field));
        for (std::size_t r = 0; r < rank; ++r)
            g.add_term(monomials[pivot_col[r]], -mat[r][freec]);
        kernel.push_back(std::move(g));
    }
    return kernel;
}

AnnBasisResult ann_basis(const Sequence& s, const EvrWitness& w) {
    int n = s.dim();
    std::vector<Poly> gammas;
    gammas.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Poly g = gamma_axis_gcd(i, w, s);
        if (n >= 2) {
            Poly g2 = gamma_axis_lcm(i, w, s);
            if (g != g2)
                throw DomainError("axis generator routes disagree on axis " + std::to_string(i + 1) +
                                  ": " + g.str() + " vs " + g2.str());
        }
        gammas.push_back(std::move(g));
    }

    Poly gamma = Poly::constant(n, Scalar::one(s.field()));
    for (const Poly& g : gammas) gamma = gamma * g;
    Poly b0 = beta0(gamma, s);
    for (int i = 0; i < n; ++i) {
        Poly d = gcd_axis(gammas[static_cast<std::size_t>(i)],
                          b0.divide_by_monomial(Exponent::unit(n, i, 1)), i);
        if (d.degree_in(i) != 0)
            throw DomainError("axis generator " + std::to_string(i + 1) + " shares a factor with the border polynomial");
    }
    Poly b = b0.divide_by_monomial(Exponent::ones(n));

    std::vector<Poly> kernel = quotient_kernel(gammas, b);
    std::vector<Poly> basis = kernel;
    for (const Poly& g : gammas) basis.push_back(g);
    return AnnBasisResult{std::move(gammas), std::move(b), std::move(kernel), std::move(basis)};
}

bool is_member(const Poly& g, const AnnBasisResult& r) {
    if (g.dim() != r.b.dim()) throw DomainError("membership query dimension mismatch");
    if (g.field() != r.b.field()) throw DomainError("membership query field mismatch");
    return normal_form(g * r.b, r.gammas).is_zero();
}

long long cofinite_dim(const AnnBasisResult& r) {
    long long d = 1;
    for (std::size_t i = 0; i < r.gammas.size(); ++i)
        d *= r.gammas[i].degree_in(static_cast<int>(i));
    return d;
}

}  // namespace ndlrs
