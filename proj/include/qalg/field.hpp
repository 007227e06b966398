#pragma once

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "qalg/errors.hpp"

namespace qalg {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("64-bit overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("64-bit overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("64-bit overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN) throw overflow_error("gcd out of range");
    return std::gcd(a, b);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::int64_t g = gcd64(a, b);
    return checked::mul(a < 0 ? -a : a, (b < 0 ? -b : b) / g);
}

// Exact rational number with checked 64-bit numerator and denominator.
// Always normalized: den > 0, gcd(num, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw validation_error("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = checked::neg(num_);
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.num_ == 0) return b;
        if (b.num_ == 0) return a;
        Rational r;
        if (a.den_ == b.den_) {
            r.num_ = checked::add(a.num_, b.num_);
            r.den_ = a.den_;
        } else {
            r.num_ = checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_));
            r.den_ = checked::mul(a.den_, b.den_);
        }
        r.normalize();
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        // cross-reduce first so intermediates stay small
        const std::int64_t g1 = gcd64(a.num_, b.den_);
        const std::int64_t g2 = gcd64(b.num_, a.den_);
        Rational r;
        r.num_ = checked::mul(a.num_ / g1, b.num_ / g2);
        r.den_ = checked::mul(a.den_ / g2, b.den_ / g1);
        r.normalize();
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    Rational inverse() const {
        if (num_ == 0) throw validation_error("division by zero rational");
        Rational r;
        if (num_ > 0) {
            r.num_ = den_;
            r.den_ = num_;
        } else {
            r.num_ = checked::neg(den_);
            r.den_ = checked::neg(num_);
        }
        return r;
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked::mul(a.num_, b.den_) < checked::mul(b.num_, a.den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = checked::neg(num_);
            den_ = checked::neg(den_);
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const std::int64_t g = gcd64(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Element of a prime field F_p with the modulus carried by the value.
// A default-constructed or int-constructed element is an unbound literal
// (modulus 0); it binds to a concrete modulus on first contact with a bound
// element. Generic code (Eigen fills, Scalar(0)/Scalar(1)) only ever creates
// small literals, which this scheme reduces correctly.
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t n) : v_(n) {}
    Fp(std::int64_t n, std::int64_t p) : v_(n), p_(p) {
        if (p_ < 2) throw validation_error("prime field modulus must be >= 2");
        reduce();
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const {
        if (p_ == 0) return Fp(checked::neg(v_));
        return Fp(p_ - v_, p_);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        const std::int64_t p = resolve(a, b);
        if (p == 0) return Fp(checked::add(a.v_, b.v_));
        return Fp(bound(a, p).v_ + bound(b, p).v_, p);
    }

    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

    friend Fp operator*(const Fp& a, const Fp& b) {
        const std::int64_t p = resolve(a, b);
        if (p == 0) return Fp(checked::mul(a.v_, b.v_));
        return Fp(checked::mul(bound(a, p).v_, bound(b, p).v_), p);
    }

    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp inverse() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw internal_error("inverse of unbound prime-field literal");
        }
        if (v_ == 0) throw validation_error("division by zero in prime field");
        // extended Euclid: x with v*x = 1 mod p
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (r != 1) throw internal_error("non-invertible element in prime field");
        return Fp(t, p_);
    }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        const std::int64_t p = resolve(a, b);
        if (p == 0) return a.v_ == b.v_;
        return bound(a, p).v_ == bound(b, p).v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

private:
    void reduce() {
        v_ %= p_;
        if (v_ < 0) v_ += p_;
    }

    static std::int64_t resolve(const Fp& a, const Fp& b) {
        if (a.p_ == b.p_) return a.p_;
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        throw internal_error("prime field modulus mismatch");
    }

    static Fp bound(const Fp& a, std::int64_t p) { return a.p_ == p ? a : Fp(a.v_, p); }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

template <class K>
concept scalar_field = std::regular<K> && requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    K(0);
    K(1);
};

static_assert(scalar_field<Rational>);
static_assert(scalar_field<Fp>);

}  // namespace qalg

namespace Eigen {

template <>
struct NumTraits<qalg::Rational> : GenericNumTraits<qalg::Rational> {
    typedef qalg::Rational Real;
    typedef qalg::Rational NonInteger;
    typedef qalg::Rational Nested;
    typedef qalg::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qalg::Fp> : GenericNumTraits<qalg::Fp> {
    typedef qalg::Fp Real;
    typedef qalg::Fp NonInteger;
    typedef qalg::Fp Nested;
    typedef qalg::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
