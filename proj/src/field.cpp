#include "ndlrs/field.hpp"

#include <ostream>

namespace ndlrs {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid inverse of a mod p, a in (0,p).
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DomainError("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin: this witness set decides all 64-bit n.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldCtx FieldCtx::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw DomainError("modulus is not prime: " + std::to_string(p));
    return FieldCtx(p);
}

FieldCtx FieldCtx::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad field spec: '" + text + "' (expected 'q' or a prime)");
    try {
        return prime(std::stoull(text));
    } catch (const std::out_of_range&) {
        throw ParseError("field modulus out of range: " + text);
    }
}

std::string FieldCtx::describe() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldCtx& f) {
    return f.is_rational() ? Scalar(mpq_class(0)) : Scalar(f.modulus(), 0);
}

Scalar Scalar::one(const FieldCtx& f) {
    return f.is_rational() ? Scalar(mpq_class(1)) : Scalar(f.modulus(), 1 % f.modulus());
}

Scalar Scalar::from_int(const FieldCtx& f, long long value) {
    if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(value)));
    std::uint64_t p = f.modulus();
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Scalar(p, static_cast<std::uint64_t>(r));
}

Scalar Scalar::parse(const FieldCtx& f, const std::string& text) {
    if (text.empty()) throw ParseError("empty coefficient");
    if (f.is_rational()) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw ParseError("bad rational coefficient: '" + text + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in coefficient: '" + text + "'");
        q.canonicalize();
        return Scalar(q);
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size() || text.find_first_not_of("0123456789", start) != std::string::npos)
        throw ParseError("bad F_p coefficient: '" + text + "'");
    mpz_class z(text, 10);
    mpz_class p(static_cast<unsigned long>(f.modulus()));
    mpz_class r = z % p;
    if (r < 0) r += p;
    return Scalar(f.modulus(), r.get_ui());
}

bool Scalar::is_zero() const { return p_ ? v_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return p_ ? v_ == 1 % p_ : q_ == 1; }

void Scalar::check_same_field(const Scalar& rhs) const {
    if (p_ != rhs.p_) throw DomainError("field mismatch between scalars");
}

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(mpq_class(-q_));
    return Scalar(p_, v_ == 0 ? 0 : p_ - v_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (p_ == 0) {
        q_ += rhs.q_;
    } else {
        v_ += rhs.v_;
        if (v_ >= p_) v_ -= p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (p_ == 0) {
        q_ -= rhs.q_;
    } else {
        v_ = (v_ >= rhs.v_) ? v_ - rhs.v_ : v_ + p_ - rhs.v_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (p_ == 0)
        q_ *= rhs.q_;
    else
        v_ = mulmod(v_, rhs.v_, p_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero scalar");
    if (p_ == 0) return Scalar(mpq_class(1 / q_));
    return Scalar(p_, invmod(v_, p_));
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    return a.p_ ? a.v_ == b.v_ : a.q_ == b.q_;
}

std::string Scalar::str() const {
    if (p_) return std::to_string(v_);
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ndlrs
