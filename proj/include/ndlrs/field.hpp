#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "ndlrs/errors.hpp"

namespace ndlrs {

/// Coefficient domain: the rationals, or a prime field F_p.
///
/// Every scalar operation in the library is exact; there is no floating
/// point anywhere. Primality of p is established by a deterministic
/// Miller-Rabin check at construction.
class FieldCtx {
public:
    static FieldCtx rationals() { return FieldCtx(0); }
    static FieldCtx prime(std::uint64_t p);

    /// Parse "q"/"Q" as the rationals, a decimal integer as a prime modulus.
    static FieldCtx parse(const std::string& text);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t modulus() const { return p_; }

    std::string describe() const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldCtx& a, const FieldCtx& b) { return a.p_ != b.p_; }

private:
    explicit FieldCtx(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 = rationals, otherwise a prime modulus
};

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// An exact element of F_p or Q, tagged with its field context.
class Scalar {
public:
    Scalar() : p_(0), v_(0), q_(0) {}

    static Scalar zero(const FieldCtx& f);
    static Scalar one(const FieldCtx& f);
    /// Embed a machine integer (reduced mod p in the prime case).
    static Scalar from_int(const FieldCtx& f, long long value);
    /// Parse a canonical coefficient string: decimal integer for F_p
    /// (any integer accepted, reduced into [0,p)), "num" or "num/den" for Q.
    static Scalar parse(const FieldCtx& f, const std::string& text);

    FieldCtx field() const { return p_ == 0 ? FieldCtx::rationals() : FieldCtx::prime(p_); }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Exact division; rhs must be nonzero.
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical decimal rendering: value in [0,p) for F_p, "num" or
    /// "num/den" (den > 1) for Q.
    std::string str() const;

private:
    Scalar(std::uint64_t p, std::uint64_t v) : p_(p), v_(v), q_(0) {}
    explicit Scalar(mpq_class q) : p_(0), v_(0), q_(std::move(q)) {}
    void check_same_field(const Scalar& rhs) const;

    std::uint64_t p_;  // 0 = rational
    std::uint64_t v_;  // value in [0,p) when p_ != 0
    mpq_class q_;      // value when p_ == 0
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ndlrs
