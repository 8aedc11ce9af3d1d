#include "crosscap/fp.hpp"

#include <ostream>
#include <stdexcept>

namespace crosscap {

bool is_odd_prime(long long n) noexcept {
    if (n < 3 || n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

int reduce(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

} // namespace

Fp::Fp(long long value, int p) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("Fp: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    p_ = p;
    value_ = reduce(value, p);
}

void Fp::require_same_modulus(Fp rhs) const {
    if (p_ != rhs.p_) {
        throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p_) +
                                    " and " + std::to_string(rhs.p_));
    }
}

Fp Fp::operator+(Fp rhs) const {
    require_same_modulus(rhs);
    return Fp(static_cast<long long>(value_) + rhs.value_, p_);
}

Fp Fp::operator-(Fp rhs) const {
    require_same_modulus(rhs);
    return Fp(static_cast<long long>(value_) - rhs.value_, p_);
}

Fp Fp::operator*(Fp rhs) const {
    require_same_modulus(rhs);
    return Fp(static_cast<long long>(value_) * rhs.value_, p_);
}

Fp Fp::operator-() const {
    return Fp(-static_cast<long long>(value_), p_);
}

Fp Fp::inv() const {
    if (value_ == 0) {
        throw std::domain_error("Fp: zero has no inverse mod " +
                                std::to_string(p_));
    }
    // Extended Euclid on (value, p); p prime guarantees gcd 1.
    long long r0 = value_, r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return Fp(s0, p_);
}

Fp Fp::halve() const {
    // (p+1)/2 is the inverse of 2 modulo an odd p.
    return *this * Fp((p_ + 1) / 2, p_);
}

std::string to_string(Fp a) {
    return std::to_string(a.value()) + " (mod " + std::to_string(a.modulus()) + ")";
}

std::ostream& operator<<(std::ostream& os, Fp a) {
    return os << to_string(a);
}

} // namespace crosscap
