#pragma once

// Minimal exact rational type for area bookkeeping. Always normalized:
// denominator positive, gcd(|num|, den) = 1. Deliberately tiny; the library
// only ever adds and compares a handful of terms with single-digit
// denominators, so int64 components never come close to overflow.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace crosscap {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend bool operator==(Rational a, Rational b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(Rational a, Rational b) noexcept { return !(a == b); }
    friend bool operator<(Rational a, Rational b) noexcept {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(Rational a, Rational b) noexcept { return b < a; }

    bool is_positive() const noexcept { return num_ > 0; }

private:
    std::int64_t num_;
    std::int64_t den_;
};

inline std::string to_string(Rational r) {
    if (r.den() == 1) return std::to_string(r.num());
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

} // namespace crosscap
