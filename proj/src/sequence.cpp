#include "ndlrs/sequence.hpp"

#include <algorithm>

namespace ndlrs {

namespace detail {

class SeqImpl {
public:
    SeqImpl(int n, const FieldCtx& field) : n_(n), field_(field) {}
    virtual ~SeqImpl() = default;

    int dim() const { return n_; }
    FieldCtx field() const { return field_; }

    // a <= 0 has already been checked.
    virtual Scalar value_at(const Exponent& a) const = 0;
    virtual const std::vector<Poly>* recurrence_polys() const { return nullptr; }

private:
    int n_;
    FieldCtx field_;
};

namespace {

class WindowSeq final : public SeqImpl {
public:
    WindowSeq(int n, const FieldCtx& field, Exponent lo, std::map<Exponent, Scalar> table)
        : SeqImpl(n, field), lo_(std::move(lo)), table_(std::move(table)) {}

    Scalar value_at(const Exponent& a) const override {
        if (!lo_.leq(a))
            throw DomainError("index " + a.str() + " outside window [" + lo_.str() + ", 0]");
        auto it = table_.find(a);
        return it == table_.end() ? Scalar::zero(field()) : it->second;
    }

private:
    Exponent lo_;
    std::map<Exponent, Scalar> table_;
};

class EvrSeq final : public SeqImpl {
public:
    EvrSeq(int n, const FieldCtx& field, std::vector<Poly> axis_polys, std::vector<int> degs,
           std::map<Exponent, Scalar> init)
        : SeqImpl(n, field), axis_polys_(std::move(axis_polys)), degs_(std::move(degs)), init_(std::move(init)) {}

    Scalar value_at(const Exponent& a) const override {
        // Inside the initial box prod [-(d_i - 1), 0]?
        bool inside = true;
        for (int i = 0; i < dim(); ++i)
            if (a[i] < -(degs_[static_cast<std::size_t>(i)] - 1)) {
                inside = false;
                break;
            }
        if (inside) {
            auto it = init_.find(a);
            return it == init_.end() ? Scalar::zero(field()) : it->second;
        }
        if (auto it = memo_.find(a); it != memo_.end()) return it->second;
        // Canonical-order reduction: the first out-of-range axis is pushed
        // toward the initial box via its recurrence.
        int axis = 0;
        while (a[axis] >= -(degs_[static_cast<std::size_t>(axis)] - 1)) ++axis;
        int d = degs_[static_cast<std::size_t>(axis)];
        const Poly& f = axis_polys_[static_cast<std::size_t>(axis)];
        // s_a = -sum_{j<d} f_j * s_{a + (d-j) u_axis}  (f monic of degree d).
        Scalar acc = Scalar::zero(field());
        for (int j = 0; j < d; ++j) {
            Scalar c = f.coeff(Exponent::unit(dim(), axis, j));
            if (c.is_zero()) continue;
            acc += c * value_at(a + Exponent::unit(dim(), axis, d - j));
        }
        Scalar out = -acc;
        memo_.emplace(a, out);
        return out;
    }

    const std::vector<Poly>* recurrence_polys() const override { return &axis_polys_; }

private:
    std::vector<Poly> axis_polys_;
    std::vector<int> degs_;
    std::map<Exponent, Scalar> init_;
    mutable std::map<Exponent, Scalar> memo_;
};

class ShiftSeq final : public SeqImpl {
public:
    ShiftSeq(Poly f, Sequence base) : SeqImpl(base.dim(), base.field()), f_(std::move(f)), base_(std::move(base)) {}

    Scalar value_at(const Exponent& b) const override {
        Scalar acc = Scalar::zero(field());
        for (const auto& [a, c] : f_.terms()) acc += c * base_.at(b - a);
        return acc;
    }

private:
    Poly f_;
    Sequence base_;
};

class SectionSeq final : public SeqImpl {
public:
    SectionSeq(Sequence base, std::vector<int> fixed_axes, Exponent fixed_values, std::vector<int> free_axes)
        : SeqImpl(static_cast<int>(free_axes.size()), base.field()),
          base_(std::move(base)),
          fixed_axes_(std::move(fixed_axes)),
          fixed_values_(std::move(fixed_values)),
          free_axes_(std::move(free_axes)) {}

    Scalar value_at(const Exponent& a) const override {
        Exponent full = Exponent::zeros(base_.dim());
        for (std::size_t k = 0; k < fixed_axes_.size(); ++k)
            full[fixed_axes_[k]] = fixed_values_[static_cast<int>(k)];
        for (std::size_t k = 0; k < free_axes_.size(); ++k) full[free_axes_[k]] = a[static_cast<int>(k)];
        return base_.at(full);
    }

private:
    Sequence base_;
    std::vector<int> fixed_axes_;
    Exponent fixed_values_;
    std::vector<int> free_axes_;
};

std::map<Exponent, Scalar> table_from_values(const Exponent& lo, const Exponent& hi,
                                             const std::vector<Scalar>& values, const FieldCtx& field) {
    std::vector<Exponent> pts = box_points(lo, hi);
    if (pts.size() != values.size())
        throw DomainError("value table has " + std::to_string(values.size()) + " entries, box needs " +
                          std::to_string(pts.size()));
    std::map<Exponent, Scalar> table;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (values[k].field() != field) throw DomainError("value table field mismatch");
        if (!values[k].is_zero()) table.emplace(pts[k], values[k]);
    }
    return table;
}

// Validates and monic-normalizes recurrence polynomials; returns degrees.
std::pair<std::vector<Poly>, std::vector<int>> prepare_axis_polys(const std::vector<Poly>& axis_polys) {
    int n = static_cast<int>(axis_polys.size());
    if (n < 1) throw DomainError("at least one axis polynomial required");
    std::vector<Poly> polys;
    std::vector<int> degs;
    polys.reserve(axis_polys.size());
    for (int i = 0; i < n; ++i) {
        const Poly& f = axis_polys[static_cast<std::size_t>(i)];
        if (f.dim() != n) throw DomainError("axis polynomial dimension mismatch");
        if (f.field() != axis_polys[0].field()) throw DomainError("axis polynomial field mismatch");
        if (!f.is_univariate_in(i))
            throw DomainError("recurrence polynomial " + std::to_string(i + 1) + " not univariate in its axis");
        int d = f.degree_in(i);
        if (d < 1)
            throw DomainError("recurrence polynomial " + std::to_string(i + 1) + " must have degree >= 1");
        polys.push_back(f.monic());
        degs.push_back(d);
    }
    return {polys, degs};
}

}  // namespace

}  // namespace detail

Sequence Sequence::window(const Exponent& lo, const std::vector<Scalar>& values, const FieldCtx& field) {
    if (!lo.all_leq(0)) throw DomainError("window corner must be <= 0");
    auto table = detail::table_from_values(lo, Exponent::zeros(lo.dim()), values, field);
    return Sequence(std::make_shared<detail::WindowSeq>(lo.dim(), field, lo, std::move(table)));
}

Sequence Sequence::evr(const std::vector<Poly>& axis_polys, const std::vector<Scalar>& init_values) {
    auto [polys, degs] = detail::prepare_axis_polys(axis_polys);
    int n = static_cast<int>(polys.size());
    FieldCtx field = polys[0].field();
    Exponent lo = Exponent::zeros(n);
    for (int i = 0; i < n; ++i) lo[i] = -(degs[static_cast<std::size_t>(i)] - 1);
    auto init = detail::table_from_values(lo, Exponent::zeros(n), init_values, field);
    return Sequence(std::make_shared<detail::EvrSeq>(n, field, std::move(polys), std::move(degs), std::move(init)));
}

Sequence Sequence::from_rational(const Poly& g, const std::vector<Poly>& axis_polys) {
    auto [polys, degs] = detail::prepare_axis_polys(axis_polys);
    int n = static_cast<int>(polys.size());
    FieldCtx field = polys[0].field();
    if (g.dim() != n) throw DomainError("numerator dimension mismatch");
    if (g.field() != field) throw DomainError("numerator field mismatch");
    Poly f = Poly::constant(n, Scalar::one(field));
    for (const Poly& fi : polys) f = f * fi;
    Exponent df = *f.degree();
    if (auto dg = g.degree(); dg && !dg->leq(df - Exponent::ones(n)))
        throw DomainError("numerator degree too large for denominator");

    // Solve for the initial box: the map from initial values to border
    // coefficients is triangular with unit diagonal (f is monic), so
    //   s_{-m} = g_{df-1-m} - sum_{a <= m, a != m} f_{a+df-m} s_{-a}
    // resolves in canonical order.
    std::map<Exponent, Scalar> init;
    Exponent zero = Exponent::zeros(n);
    Exponent mhi = df - Exponent::ones(n);
    for (const Exponent& m : box_points(zero, mhi)) {
        Scalar v = g.coeff(mhi - m);
        for (const Exponent& a : box_points(zero, m)) {
            if (a == m) continue;
            Scalar c = f.coeff(a + df - m);
            if (c.is_zero()) continue;
            auto it = init.find(-a);
            if (it != init.end()) v -= c * it->second;
        }
        if (!v.is_zero()) init.emplace(-m, v);
    }
    return Sequence(std::make_shared<detail::EvrSeq>(n, field, std::move(polys), std::move(degs), std::move(init)));
}

int Sequence::dim() const { return impl_->dim(); }

FieldCtx Sequence::field() const { return impl_->field(); }

Scalar Sequence::at(const Exponent& a) const {
    if (a.dim() != dim()) throw DomainError("index dimension mismatch");
    if (!a.all_leq(0)) throw DomainError("sequence index must be <= 0: " + a.str());
    return impl_->value_at(a);
}

const std::vector<Poly>* Sequence::recurrence_polys() const { return impl_->recurrence_polys(); }

Sequence shift_action(const Poly& f, const Sequence& s) {
    if (f.dim() != s.dim()) throw DomainError("shift polynomial dimension mismatch");
    if (f.field() != s.field()) throw DomainError("shift polynomial field mismatch");
    return Sequence(std::make_shared<detail::ShiftSeq>(f, s));
}

Sequence section(const Sequence& s, const std::vector<int>& fixed_axes, const Exponent& fixed_values) {
    int n = s.dim();
    if (fixed_axes.empty() || static_cast<int>(fixed_axes.size()) >= n)
        throw DomainError("section must fix a proper nonempty subset of axes");
    if (static_cast<int>(fixed_axes.size()) != fixed_values.dim())
        throw DomainError("section axis/value count mismatch");
    if (!fixed_values.all_leq(0)) throw DomainError("section index must be <= 0");
    if (!std::is_sorted(fixed_axes.begin(), fixed_axes.end()) ||
        std::adjacent_find(fixed_axes.begin(), fixed_axes.end()) != fixed_axes.end())
        throw DomainError("section axes must be strictly increasing");
    if (fixed_axes.front() < 0 || fixed_axes.back() >= n) throw DomainError("section axis out of range");
    std::vector<int> free_axes;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(fixed_axes.begin(), fixed_axes.end(), i)) free_axes.push_back(i);
    return Sequence(std::make_shared<detail::SectionSeq>(s, fixed_axes, fixed_values, std::move(free_axes)));
}

Sequence minus_map(const Exponent& hi, const std::vector<Scalar>& values, const FieldCtx& field) {
    if (!hi.all_geq(0)) throw DomainError("minus_map table corner must be >= 0");
    std::vector<Exponent> pts = box_points(Exponent::zeros(hi.dim()), hi);
    if (pts.size() != values.size()) throw DomainError("minus_map value count mismatch");
    std::map<Exponent, Scalar> table;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (values[k].field() != field) throw DomainError("minus_map value field mismatch");
        if (!values[k].is_zero()) table.emplace(-pts[k], values[k]);
    }
    return Sequence(std::make_shared<detail::WindowSeq>(hi.dim(), field, -hi, std::move(table)));
}

Series gamma_window(const Sequence& s, const Region& box) {
    if (box.dim() != s.dim()) throw DomainError("window dimension mismatch");
    if (!box.is_finite()) throw DomainError("generating-function window must be finite");
    if (!box.hi().all_leq(0) && !box.is_empty())
        throw DomainError("generating-function window must lie in -N^n");
    Series out(s.dim(), s.field(), box);
    for (const Exponent& a : box.points()) out.add_term(a, s.at(a));
    return out;
}

}  // namespace ndlrs
