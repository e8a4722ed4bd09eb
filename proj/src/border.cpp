#include "ndlrs/border.hpp"

namespace ndlrs {

int border_cell_count(int n) {
    if (n < 1 || n > 30) throw DomainError("unsupported dimension");
    return 1 << n;
}

bool border_bit(int k, int axis) { return (k >> axis) & 1; }

std::vector<int> infinite_axes(int k, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (border_bit(k, i)) out.push_back(i);
    return out;
}

namespace {

void check_cell_args(int k, const Exponent& d) {
    if (!d.all_geq(1)) throw DomainError("border partition needs d >= 1, got " + d.str());
    if (k < 0 || k >= border_cell_count(d.dim())) throw DomainError("cell index out of range: " + std::to_string(k));
}

Exponent poly_degree_checked(const Poly& f) {
    auto d = f.degree();
    if (!d || !d->all_geq(1)) throw DomainError("polynomial must have degree >= 1 in every axis");
    return *d;
}

}  // namespace

Region border_cell(int k, const Exponent& d) {
    check_cell_args(k, d);
    std::vector<Region::AxisRange> axes(static_cast<std::size_t>(d.dim()));
    for (int i = 0; i < d.dim(); ++i) {
        if (border_bit(k, i))
            axes[static_cast<std::size_t>(i)] = {std::nullopt, 0};
        else
            axes[static_cast<std::size_t>(i)] = {1, d[i]};
    }
    return Region(std::move(axes));
}

int classify(const Exponent& a, const Exponent& d) {
    check_cell_args(0, d);
    if (a.dim() != d.dim()) throw DomainError("dimension mismatch");
    if (!a.leq(d)) throw DomainError("point " + a.str() + " not in (-inf, " + d.str() + "]");
    int k = 0;
    for (int i = 0; i < d.dim(); ++i)
        if (a[i] <= 0) k |= 1 << i;
    return k;
}

Series product_window(const Poly& f, const Sequence& s, const Region& box) {
    if (f.dim() != s.dim() || box.dim() != s.dim()) throw DomainError("dimension mismatch");
    if (f.field() != s.field()) throw DomainError("field mismatch");
    Series out(s.dim(), s.field(), box);
    for (const Exponent& c : box.points()) {
        Scalar acc = Scalar::zero(s.field());
        for (const auto& [b, coef] : f.terms()) {
            Exponent idx = c - b;
            if (!idx.all_leq(0)) continue;  // Gamma(s) has support in (-inf, 0]
            acc += coef * s.at(idx);
        }
        out.add_term(c, acc);
    }
    return out;
}

Poly beta0(const Poly& f, const Sequence& s) {
    if (f.dim() != s.dim()) throw DomainError("dimension mismatch");
    if (f.field() != s.field()) throw DomainError("field mismatch");
    Exponent df = poly_degree_checked(f);
    int n = f.dim();
    Exponent one = Exponent::ones(n);
    Poly acc(n, f.field());
    for (const Exponent& a : box_points(Exponent::zeros(n), df - one)) {
        Scalar v = s.at(-a);
        if (v.is_zero()) continue;
        acc += divided_difference(f, a + one).scaled(v);
    }
    Poly out(n, f.field());
    for (const auto& [e, c] : acc.terms()) out.add_term(e + one, c);
    return out;
}

Poly beta0_direct(const Poly& f, const Sequence& s) {
    Exponent df = poly_degree_checked(f);
    return product_window(f, s, Region::box(Exponent::ones(f.dim()), df)).as_poly();
}

namespace {

// Middle cells: assemble from sections of f over the infinite axes and
// sections of s over the finite axes,
//   X_{i'} sum_{0<=e<=delta} sum_{0<=e'<=delta'-1}
//       (nu^{e'+1} f^{(e)})(X_{i'}) * Gamma(X_i^e o s^{(-e')})(X_i^{-1}).
Series beta_cross(const Poly& f, const Sequence& s, int k, const Exponent& depth, const Exponent& df) {
    int n = f.dim();
    std::vector<int> inf = infinite_axes(k, n);
    std::vector<int> fin;
    for (int i = 0; i < n; ++i)
        if (!border_bit(k, i)) fin.push_back(i);
    int ni = static_cast<int>(inf.size());
    int nf = static_cast<int>(fin.size());

    Exponent delta_inf = Exponent::zeros(ni), depth_inf = Exponent::zeros(ni);
    for (int j = 0; j < ni; ++j) {
        delta_inf[j] = df[inf[static_cast<std::size_t>(j)]];
        depth_inf[j] = depth[inf[static_cast<std::size_t>(j)]];
    }
    Exponent delta_fin = Exponent::zeros(nf);
    for (int j = 0; j < nf; ++j) delta_fin[j] = df[fin[static_cast<std::size_t>(j)]];

    std::vector<Region::AxisRange> axes(static_cast<std::size_t>(n));
    for (int j = 0; j < ni; ++j)
        axes[static_cast<std::size_t>(inf[static_cast<std::size_t>(j)])] = {-depth_inf[j], 0};
    for (int j = 0; j < nf; ++j)
        axes[static_cast<std::size_t>(fin[static_cast<std::size_t>(j)])] = {1, delta_fin[j]};
    Series out(n, f.field(), Region(std::move(axes)));

    Region inf_box = Region::box(-depth_inf, Exponent::zeros(ni));
    for (const Exponent& e : box_points(Exponent::zeros(ni), delta_inf)) {
        // f^{(e)}: terms of f whose infinite-axis exponents equal e,
        // projected onto the finite axes.
        Poly f_sec(nf, f.field());
        for (const auto& [a, c] : f.terms()) {
            bool match = true;
            for (int j = 0; j < ni; ++j)
                if (a[inf[static_cast<std::size_t>(j)]] != e[j]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            Exponent proj = Exponent::zeros(nf);
            for (int j = 0; j < nf; ++j) proj[j] = a[fin[static_cast<std::size_t>(j)]];
            f_sec.add_term(proj, c);
        }
        if (f_sec.is_zero()) continue;

        for (const Exponent& ep : box_points(Exponent::zeros(nf), delta_fin - Exponent::ones(nf))) {
            Poly g = divided_difference(f_sec, ep + Exponent::ones(nf));
            if (g.is_zero()) continue;
            Sequence sec = section(s, fin, -ep);
            Sequence shifted = shift_action(Poly::x_pow(ni, f.field(), e), sec);
            Series gw = gamma_window(shifted, inf_box);
            for (const auto& [d_inf, sval] : gw.terms()) {
                for (const auto& [dp, gc] : g.terms()) {
                    Exponent full = Exponent::zeros(n);
                    for (int j = 0; j < ni; ++j) full[inf[static_cast<std::size_t>(j)]] = d_inf[j];
                    for (int j = 0; j < nf; ++j) full[fin[static_cast<std::size_t>(j)]] = dp[j] + 1;
                    out.add_term(full, sval * gc);
                }
            }
        }
    }
    return out;
}

}  // namespace

Series beta_k(const Poly& f, const Sequence& s, int k, const Exponent& depth) {
    if (f.dim() != s.dim()) throw DomainError("dimension mismatch");
    if (f.field() != s.field()) throw DomainError("field mismatch");
    Exponent df = poly_degree_checked(f);
    int n = f.dim();
    if (k < 0 || k >= border_cell_count(n)) throw DomainError("cell index out of range: " + std::to_string(k));
    if (depth.dim() != n || !depth.all_geq(0)) throw DomainError("truncation depth must be >= 0 per axis");

    if (k == 0) {
        Series out(n, f.field(), border_cell(0, df));
        for (const auto& [e, c] : beta0(f, s).terms()) out.add_term(e, c);
        return out;
    }
    if (k == border_cell_count(n) - 1)
        return gamma_window(shift_action(f, s), Region::box(-depth, Exponent::zeros(n)));
    return beta_cross(f, s, k, depth, df);
}

std::vector<Series> decompose(const Poly& f, const Sequence& s, const Exponent& depth) {
    std::vector<Series> out;
    int cells = border_cell_count(f.dim());
    out.reserve(static_cast<std::size_t>(cells));
    for (int k = 0; k < cells; ++k) out.push_back(beta_k(f, s, k, depth));
    return out;
}

bool is_char_window(const Poly& f, const Sequence& s, const Region& box) {
    if (f.dim() != s.dim() || box.dim() != s.dim()) throw DomainError("dimension mismatch");
    if (!box.is_finite()) throw DomainError("probe box must be finite");
    if (!box.is_empty() && !box.hi().all_leq(0)) throw DomainError("probe box must lie in -N^n");
    Sequence fs = shift_action(f, s);
    for (const Exponent& b : box.points())
        if (!fs.at(b).is_zero()) return false;
    return true;
}

}  // namespace ndlrs
