#pragma once

// Arithmetic in the prime field Z/p for odd primes p. Every element carries
// its modulus, so mixing moduli is a hard error instead of a silent wrap.
// Residues are kept canonical in [0, p) at all times.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace crosscap {

// Trial division is plenty: the library is built for desk-scale primes.
bool is_odd_prime(long long n) noexcept;

class Fp {
public:
    // Throws std::invalid_argument unless p is an odd prime. Any integer is
    // accepted as the value and reduced into [0, p).
    Fp(long long value, int p);

    int value() const noexcept { return value_; }
    int modulus() const noexcept { return p_; }

    bool is_zero() const noexcept { return value_ == 0; }
    bool is_unit() const noexcept { return value_ != 0; }

    Fp operator+(Fp rhs) const;
    Fp operator-(Fp rhs) const;
    Fp operator*(Fp rhs) const;
    Fp operator-() const;

    Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
    Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
    Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

    // Multiplicative inverse. Throws std::domain_error on zero.
    Fp inv() const;

    // The unique b with 2b = a. Well defined because p is odd; in
    // particular halve(0) = 0 and halve never needs a sign convention.
    Fp halve() const;

    // Total order by (modulus, value) so elements work as container keys.
    // Cross-modulus comparison is intentional here and only here.
    friend bool operator==(Fp a, Fp b) noexcept {
        return a.p_ == b.p_ && a.value_ == b.value_;
    }
    friend bool operator!=(Fp a, Fp b) noexcept { return !(a == b); }
    friend bool operator<(Fp a, Fp b) noexcept {
        return a.p_ != b.p_ ? a.p_ < b.p_ : a.value_ < b.value_;
    }

private:
    void require_same_modulus(Fp rhs) const;

    int value_;
    int p_;
};

std::string to_string(Fp a);
std::ostream& operator<<(std::ostream& os, Fp a);

} // namespace crosscap
