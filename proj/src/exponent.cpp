#include "ndlrs/exponent.hpp"

#include <algorithm>

namespace ndlrs {

Exponent Exponent::unit(int n, int axis, int c) {
    if (axis < 0 || axis >= n) throw DomainError("axis out of range");
    Exponent e = zeros(n);
    e[axis] = c;
    return e;
}

namespace {
void check_dim(const Exponent& a, const Exponent& b) {
    if (a.dim() != b.dim()) throw DomainError("exponent dimension mismatch");
}
}  // namespace

Exponent Exponent::operator+(const Exponent& rhs) const {
    check_dim(*this, rhs);
    Exponent out(*this);
    for (int i = 0; i < dim(); ++i) out[i] += rhs[i];
    return out;
}

Exponent Exponent::operator-(const Exponent& rhs) const {
    check_dim(*this, rhs);
    Exponent out(*this);
    for (int i = 0; i < dim(); ++i) out[i] -= rhs[i];
    return out;
}

Exponent Exponent::operator-() const {
    Exponent out(*this);
    for (int i = 0; i < dim(); ++i) out[i] = -out[i];
    return out;
}

bool Exponent::leq(const Exponent& rhs) const {
    check_dim(*this, rhs);
    for (int i = 0; i < dim(); ++i)
        if ((*this)[i] > rhs[i]) return false;
    return true;
}

bool Exponent::all_geq(int bound) const {
    return std::all_of(c_.begin(), c_.end(), [bound](int v) { return v >= bound; });
}

bool Exponent::all_leq(int bound) const {
    return std::all_of(c_.begin(), c_.end(), [bound](int v) { return v <= bound; });
}

Exponent Exponent::max(const Exponent& a, const Exponent& b) {
    check_dim(a, b);
    Exponent out(a);
    for (int i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

int Exponent::sum() const {
    int s = 0;
    for (int v : c_) s += v;
    return s;
}

std::string Exponent::str() const {
    std::string out = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) out += ",";
        out += std::to_string(c_[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

bool next_point(Exponent& cur, const Exponent& lo, const Exponent& hi) {
    for (int i = cur.dim() - 1; i >= 0; --i) {
        if (cur[i] < hi[i]) {
            ++cur[i];
            for (int j = i + 1; j < cur.dim(); ++j) cur[j] = lo[j];
            return true;
        }
    }
    return false;
}

std::vector<Exponent> box_points(const Exponent& lo, const Exponent& hi) {
    std::vector<Exponent> out;
    if (!lo.leq(hi)) return out;
    Exponent cur = lo;
    do {
        out.push_back(cur);
    } while (next_point(cur, lo, hi));
    return out;
}

Region Region::box(const Exponent& lo, const Exponent& hi) {
    if (lo.dim() != hi.dim()) throw DomainError("box corner dimension mismatch");
    std::vector<AxisRange> axes(static_cast<std::size_t>(lo.dim()));
    for (int i = 0; i < lo.dim(); ++i) axes[static_cast<std::size_t>(i)] = {lo[i], hi[i]};
    return Region(std::move(axes));
}

Region Region::lower_set(const Exponent& hi) {
    std::vector<AxisRange> axes(static_cast<std::size_t>(hi.dim()));
    for (int i = 0; i < hi.dim(); ++i) axes[static_cast<std::size_t>(i)] = {std::nullopt, hi[i]};
    return Region(std::move(axes));
}

bool Region::contains(const Exponent& a) const {
    if (a.dim() != dim()) throw DomainError("region/point dimension mismatch");
    for (int i = 0; i < dim(); ++i) {
        const AxisRange& r = axes_[static_cast<std::size_t>(i)];
        if (a[i] > r.hi) return false;
        if (r.lo && a[i] < *r.lo) return false;
    }
    return true;
}

bool Region::is_empty() const {
    for (const AxisRange& r : axes_)
        if (r.lo && *r.lo > r.hi) return true;
    return false;
}

bool Region::is_finite() const {
    for (const AxisRange& r : axes_)
        if (!r.lo) return false;
    return true;
}

Exponent Region::finite_lo() const {
    Exponent lo = Exponent::zeros(dim());
    for (int i = 0; i < dim(); ++i) {
        const AxisRange& r = axes_[static_cast<std::size_t>(i)];
        if (!r.lo) throw DomainError("region is unbounded below");
        lo[i] = *r.lo;
    }
    return lo;
}

Exponent Region::hi() const {
    Exponent h = Exponent::zeros(dim());
    for (int i = 0; i < dim(); ++i) h[i] = axes_[static_cast<std::size_t>(i)].hi;
    return h;
}

Region Region::intersect(const Region& other) const {
    if (other.dim() != dim()) throw DomainError("region dimension mismatch");
    std::vector<AxisRange> axes(axes_);
    for (int i = 0; i < dim(); ++i) {
        AxisRange& r = axes[static_cast<std::size_t>(i)];
        const AxisRange& o = other.axes_[static_cast<std::size_t>(i)];
        r.hi = std::min(r.hi, o.hi);
        if (o.lo) r.lo = r.lo ? std::max(*r.lo, *o.lo) : *o.lo;
    }
    return Region(std::move(axes));
}

std::vector<Exponent> Region::points() const {
    if (is_empty()) return {};
    return box_points(finite_lo(), hi());
}

}  // namespace ndlrs
