// Checked 64-bit integer arithmetic and the exact rational type used for
// Ising coefficients. All model coefficients are plain int64; any overflow
// raises instead of wrapping.
#ifndef QUBOKIT_ARITH_HPP
#define QUBOKIT_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qubokit {

using Coeff = std::int64_t;

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A requested search space is too large to enumerate.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

// Exact rational over int64, always normalized (gcd 1, positive denominator).
// Spin-space coefficients are quarters of integers, so denominators stay tiny,
// but the type is general.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Coeff value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(Coeff num, Coeff den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    Coeff num() const { return num_; }
    Coeff den() const { return den_; }

    Rational operator+(const Rational& o) const {
        Coeff g = std::gcd(den_, o.den_);
        Coeff lhs = checked_mul(num_, o.den_ / g);
        Coeff rhs = checked_mul(o.num_, den_ / g);
        return Rational(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
    }
    Rational operator-(const Rational& o) const { return *this + Rational(checked_mul(-1, o.num_), o.den_); }
    Rational operator*(const Rational& o) const {
        Coeff g1 = std::gcd(std::abs(num_), o.den_);
        Coeff g2 = std::gcd(std::abs(o.num_), den_);
        return Rational(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    bool operator==(const Rational&) const = default;

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = checked_mul(num_, -1); den_ = checked_mul(den_, -1); }
        Coeff g = std::gcd(std::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Coeff num_;
    Coeff den_;
};

}  // namespace qubokit

#endif
