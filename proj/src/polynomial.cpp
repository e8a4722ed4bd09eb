#include "ndlrs/polynomial.hpp"

#include <algorithm>

namespace ndlrs {

Poly Poly::constant(int n, const Scalar& c) {
    Poly f(n, c.field());
    f.add_term(Exponent::zeros(n), c);
    return f;
}

Poly Poly::monomial(int n, const Exponent& e, const Scalar& c) {
    Poly f(n, c.field());
    f.add_term(e, c);
    return f;
}

Poly Poly::x_pow(int n, const FieldCtx& field, const Exponent& e) {
    return monomial(n, e, Scalar::one(field));
}

Poly Poly::from_axis_coeffs(int n, int axis, const FieldCtx& field, const std::vector<Scalar>& coefs) {
    Poly f(n, field);
    for (std::size_t k = 0; k < coefs.size(); ++k)
        f.add_term(Exponent::unit(n, axis, static_cast<int>(k)), coefs[k]);
    return f;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
    if (e.dim() != n_) throw DomainError("term dimension mismatch");
    if (!e.all_geq(0)) throw DomainError("polynomial exponent must be >= 0: " + e.str());
    if (c.field() != field_) throw DomainError("term field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<Exponent> degree_of_terms(const std::map<Exponent, Scalar>& terms, int n) {
    if (terms.empty()) return std::nullopt;
    Exponent d = terms.begin()->first;
    for (const auto& [e, c] : terms) d = Exponent::max(d, e);
    (void)n;
    return d;
}

std::optional<Exponent> Poly::degree() const { return degree_of_terms(terms_, n_); }

int Poly::degree_in(int axis) const {
    if (axis < 0 || axis >= n_) throw DomainError("axis out of range");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[axis]);
    return d;
}

void Poly::check_compatible(const Poly& rhs) const {
    if (rhs.n_ != n_) throw DomainError("polynomial dimension mismatch");
    if (rhs.field_ != field_) throw DomainError("polynomial field mismatch");
}

Poly Poly::operator-() const {
    Poly out(n_, field_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly out(a.n_, a.field_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly out(n_, field_);
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

bool Poly::is_univariate_in(int axis) const {
    if (axis < 0 || axis >= n_) throw DomainError("axis out of range");
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < n_; ++i)
            if (i != axis && e[i] != 0) return false;
    return true;
}

std::vector<Scalar> Poly::axis_coeffs(int axis) const {
    if (!is_univariate_in(axis)) throw DomainError("polynomial is not univariate in requested axis");
    std::vector<Scalar> out(static_cast<std::size_t>(degree_in(axis) + 1), Scalar::zero(field_));
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e[axis])] = c;
    return out;
}

Poly Poly::divide_by_monomial(const Exponent& e) const {
    Poly out(n_, field_);
    for (const auto& [a, c] : terms_) {
        if (!e.leq(a)) throw DomainError("polynomial not divisible by monomial " + e.str());
        out.add_term(a - e, c);
    }
    return out;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    const Scalar& lead = terms_.rbegin()->second;
    if (lead.is_one()) return *this;
    return scaled(lead.inverse());
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mono.empty())
            body = mag;
        else if (mag == "1")
            body = mono;
        else
            body = mag + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

void Series::add_term(const Exponent& e, const Scalar& c) {
    if (e.dim() != n_) throw DomainError("series term dimension mismatch");
    if (c.field() != field_) throw DomainError("series term field mismatch");
    if (c.is_zero()) return;
    if (!region_.contains(e)) throw DomainError("series term " + e.str() + " outside declared region");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Series::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<Exponent> Series::degree() const { return degree_of_terms(terms_, n_); }

bool operator==(const Series& a, const Series& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Poly Series::as_poly() const {
    Poly out(n_, field_);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

Series Series::from_poly(const Poly& f) {
    Exponent hi = f.degree().value_or(Exponent::zeros(f.dim()));
    Series out(f.dim(), f.field(), Region::box(Exponent::zeros(f.dim()), hi));
    for (const auto& [e, c] : f.terms()) out.add_term(e, c);
    return out;
}

Series restrict_to(const Series& g, const Region& a) {
    Series out(g.dim(), g.field(), g.region().intersect(a));
    for (const auto& [e, c] : g.terms())
        if (a.contains(e)) out.add_term(e, c);
    return out;
}

Series restrict_to(const Poly& g, const Region& a) { return restrict_to(Series::from_poly(g), a); }

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) return f;
    Exponent d = *f.degree();
    Poly out(f.dim(), f.field());
    for (const auto& [e, c] : f.terms()) out.add_term(d - e, c);
    return out;
}

Poly divided_difference(const Poly& f, const Exponent& a) {
    if (a.dim() != f.dim()) throw DomainError("divided difference index dimension mismatch");
    if (!a.all_geq(0)) throw DomainError("divided difference index must be >= 0: " + a.str());
    Poly out(f.dim(), f.field());
    for (const auto& [e, c] : f.terms())
        if (a.leq(e)) out.add_term(e - a, c);
    return out;
}

namespace {

// The single axis both polynomials live on; constants fit any axis.
int common_axis(const Poly& f, const Poly& g) {
    int axis = -1;
    for (const Poly* p : {&f, &g}) {
        for (const auto& [e, c] : p->terms()) {
            for (int i = 0; i < p->dim(); ++i) {
                if (e[i] == 0) continue;
                if (axis == -1) axis = i;
                if (axis != i) throw DomainError("polynomials are not univariate in a common axis");
            }
        }
    }
    return axis == -1 ? 0 : axis;
}

// Dense Euclidean division; g nonzero. Coefficient vectors, low to high.
std::pair<std::vector<Scalar>, std::vector<Scalar>> dense_divrem(std::vector<Scalar> r,
                                                                 const std::vector<Scalar>& g,
                                                                 const FieldCtx& field) {
    int dg = static_cast<int>(g.size()) - 1;
    Scalar lead_inv = g[static_cast<std::size_t>(dg)].inverse();
    int dr = static_cast<int>(r.size()) - 1;
    std::vector<Scalar> q(static_cast<std::size_t>(std::max(dr - dg + 1, 0)), Scalar::zero(field));
    for (int k = dr - dg; k >= 0; --k) {
        Scalar c = r[static_cast<std::size_t>(k + dg)] * lead_inv;
        if (c.is_zero()) continue;
        q[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k + j)] -= c * g[static_cast<std::size_t>(j)];
    }
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return {q, r};
}

std::vector<Scalar> trimmed(std::vector<Scalar> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

}  // namespace

Poly uni_gcd(const Poly& f, const Poly& g) {
    if (f.dim() != g.dim() || f.field() != g.field())
        throw DomainError("gcd operands must share dimension and field");
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0,0) is undefined");
    int axis = common_axis(f, g);
    std::vector<Scalar> a = f.is_zero() ? std::vector<Scalar>{} : f.axis_coeffs(axis);
    std::vector<Scalar> b = g.is_zero() ? std::vector<Scalar>{} : g.axis_coeffs(axis);
    while (!b.empty()) {
        auto [q, r] = dense_divrem(a, b, f.field());
        a = std::move(b);
        b = std::move(r);
    }
    return Poly::from_axis_coeffs(f.dim(), axis, f.field(), a).monic();
}

std::pair<Poly, Poly> uni_divrem(const Poly& f, const Poly& g) {
    if (f.dim() != g.dim() || f.field() != g.field())
        throw DomainError("divrem operands must share dimension and field");
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    int axis = common_axis(f, g);
    auto [q, r] = dense_divrem(f.is_zero() ? std::vector<Scalar>{} : f.axis_coeffs(axis),
                               g.axis_coeffs(axis), f.field());
    return {Poly::from_axis_coeffs(f.dim(), axis, f.field(), trimmed(q)),
            Poly::from_axis_coeffs(f.dim(), axis, f.field(), r)};
}

Poly uni_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) {
        if (f.is_zero() && g.is_zero()) throw DomainError("lcm(0,0) is undefined");
        return Poly::zero(f.dim(), f.field());
    }
    Poly d = uni_gcd(f, g);
    auto [q, r] = uni_divrem(f, d);
    return (q * g).monic();
}

Poly gcd_axis(const Poly& f_axis, const Poly& h, int axis) {
    if (f_axis.is_zero()) throw DomainError("gcd_axis: axis polynomial is zero");
    if (!f_axis.is_univariate_in(axis)) throw DomainError("gcd_axis: polynomial not univariate in axis");
    if (h.is_zero()) return f_axis.monic();
    if (h.dim() != f_axis.dim() || h.field() != f_axis.field())
        throw DomainError("gcd_axis operands must share dimension and field");
    // Coefficients of h as a polynomial in the other variables, each one a
    // univariate polynomial in X_axis.
    std::map<Exponent, Poly> groups;
    for (const auto& [e, c] : h.terms()) {
        Exponent key = e;
        key[axis] = 0;
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(key, Poly::zero(h.dim(), h.field())).first;
        it->second.add_term(Exponent::unit(h.dim(), axis, e[axis]), c);
    }
    Poly g0 = Poly::zero(h.dim(), h.field());
    for (const auto& [key, coef_poly] : groups) {
        g0 = g0.is_zero() ? coef_poly.monic() : uni_gcd(g0, coef_poly);
        if (!g0.is_zero() && g0.degree_in(axis) == 0) break;  // gcd already 1
    }
    return uni_gcd(f_axis, g0);
}

Poly divide_exact_axis(const Poly& h, const Poly& d, int axis) {
    if (!d.is_univariate_in(axis)) throw DomainError("divisor not univariate in axis");
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    int m = d.degree_in(axis);
    const Scalar lead = d.coeff(Exponent::unit(h.dim(), axis, m));
    if (!lead.is_one()) throw DomainError("divisor must be monic");
    Poly rem = h;
    Poly quot(h.dim(), h.field());
    while (!rem.is_zero()) {
        int k = rem.degree_in(axis);
        if (k < m) break;
        // Leading axis-coefficient of rem: terms with X_axis exponent k.
        Poly lead_coef(h.dim(), h.field());
        for (const auto& [e, c] : rem.terms()) {
            if (e[axis] != k) continue;
            Exponent shifted = e;
            shifted[axis] = k - m;
            lead_coef.add_term(shifted, c);
        }
        quot += lead_coef;
        rem -= lead_coef * d;
    }
    if (!rem.is_zero()) throw DomainError("inexact division along axis");
    return quot;
}

namespace {

void validate_gammas(const std::vector<Poly>& gammas, int n) {
    if (static_cast<int>(gammas.size()) != n)
        throw DomainError("expected one modulus polynomial per axis");
    for (int i = 0; i < n; ++i) {
        const Poly& g = gammas[static_cast<std::size_t>(i)];
        if (g.dim() != n) throw DomainError("modulus dimension mismatch");
        if (!g.is_univariate_in(i)) throw DomainError("modulus for axis " + std::to_string(i + 1) + " not univariate in that axis");
        int d = g.degree_in(i);
        if (d < 1) throw DomainError("modulus for axis " + std::to_string(i + 1) + " must have degree >= 1");
        if (!g.coeff(Exponent::unit(n, i, d)).is_one())
            throw DomainError("modulus for axis " + std::to_string(i + 1) + " must be monic");
    }
}

}  // namespace

NormalFormResult normal_form_with_quotients(const Poly& g, const std::vector<Poly>& gammas) {
    int n = g.dim();
    validate_gammas(gammas, n);
    std::vector<int> degs(static_cast<std::size_t>(n));
    std::vector<Poly> tails;  // r_i = gamma_i - X_i^{d_i}, so X_i^{d_i} == gamma_i - r_i
    tails.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Poly& gm = gammas[static_cast<std::size_t>(i)];
        int d = gm.degree_in(i);
        degs[static_cast<std::size_t>(i)] = d;
        Poly tail = gm;
        tail.add_term(Exponent::unit(n, i, d), -Scalar::one(g.field()));
        tails.push_back(tail);
    }

    NormalFormResult res{Poly::zero(n, g.field()),
                         std::vector<Poly>(static_cast<std::size_t>(n), Poly::zero(n, g.field()))};
    Poly::Terms pending = g.terms();
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Exponent e = it->first;
        Scalar c = it->second;
        pending.erase(it);
        int axis = -1;
        for (int i = 0; i < n; ++i) {
            if (e[i] >= degs[static_cast<std::size_t>(i)]) {
                axis = i;
                break;
            }
        }
        if (axis < 0) {
            res.nf.add_term(e, c);
            continue;
        }
        // c*X^e = c*X^{e'} * X_axis^{d} with e' = e - d*u_axis,
        // and X_axis^{d} = gamma_axis - r_axis.
        Exponent shifted = e - Exponent::unit(n, axis, degs[static_cast<std::size_t>(axis)]);
        res.quotients[static_cast<std::size_t>(axis)].add_term(shifted, c);
        for (const auto& [re, rc] : tails[static_cast<std::size_t>(axis)].terms()) {
            Exponent ne = shifted + re;
            Scalar nc = -(c * rc);
            auto [pit, inserted] = pending.emplace(ne, nc);
            if (!inserted) {
                pit->second += nc;
                if (pit->second.is_zero()) pending.erase(pit);
            }
        }
    }
    return res;
}

Poly normal_form(const Poly& g, const std::vector<Poly>& gammas) {
    return normal_form_with_quotients(g, gammas).nf;
}

}  // namespace ndlrs
