#include "crosscap/fp.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>

using crosscap::Fp;
using crosscap::is_odd_prime;

namespace {
constexpr int kPrimes[] = {3, 5, 7, 11, 13};
}

TEST_CASE("odd prime recognition") {
    for (int p : kPrimes) CHECK(is_odd_prime(p));
    CHECK(is_odd_prime(97));
    for (long long n : {-7LL, 0LL, 1LL, 2LL, 4LL, 9LL, 15LL, 21LL, 91LL}) {
        CHECK_FALSE(is_odd_prime(n));
    }
}

TEST_CASE("construction reduces into [0, p)") {
    CHECK(Fp(7, 5).value() == 2);
    CHECK(Fp(-1, 5).value() == 4);
    CHECK(Fp(-13, 5).value() == 2);
    CHECK(Fp(0, 3).value() == 0);
    CHECK(Fp(1'000'000'007LL, 13).value() == 1000000007LL % 13);
}

TEST_CASE("non-odd-prime moduli are rejected") {
    CHECK_THROWS_AS(Fp(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, -5), std::invalid_argument);
}

TEST_CASE("pinned arithmetic values") {
    // Each value recertified on the spot: definitions, not echoes.
    Fp inv2 = Fp(2, 5).inv();
    CHECK(inv2.value() == 3);
    CHECK((Fp(2, 5) * inv2).value() == 1);

    CHECK((-Fp(0, 5)).value() == 0);

    Fp prod = Fp(3, 7) * Fp(5, 7);
    CHECK(prod.value() == 1); // 15 = 2*7 + 1

    Fp h1 = Fp(1, 5).halve();
    CHECK(h1.value() == 3);
    CHECK((h1 + h1).value() == 1);

    CHECK(Fp(0, 7).halve().value() == 0);
    Fp h4 = Fp(4, 7).halve();
    CHECK(h4.value() == 2);
    CHECK((h4 + h4).value() == 4);
}

TEST_CASE("field laws hold exhaustively for small primes") {
    for (int p : kPrimes) {
        for (int a = 0; a < p; ++a) {
            Fp fa(a, p);
            CHECK((fa + Fp(0, p)) == fa);
            CHECK((fa * Fp(1, p)) == fa);
            CHECK((fa + (-fa)).is_zero());
            CHECK((fa - fa).is_zero());
            CHECK(fa.halve() + fa.halve() == fa);
            CHECK(fa.halve() == fa * Fp(2, p).inv());
            if (!fa.is_zero()) {
                CHECK((fa * fa.inv()).value() == 1);
                CHECK(fa.inv().inv() == fa);
            }
            for (int b = 0; b < p; ++b) {
                Fp fb(b, p);
                CHECK(fa + fb == fb + fa);
                CHECK(fa * fb == fb * fa);
                for (int c = 0; c < p; ++c) {
                    Fp fc(c, p);
                    CHECK((fa + fb) + fc == fa + (fb + fc));
                    CHECK((fa * fb) * fc == fa * (fb * fc));
                    CHECK(fa * (fb + fc) == fa * fb + fa * fc);
                }
            }
        }
    }
}

TEST_CASE("mixed moduli are a hard error in arithmetic") {
    Fp a(1, 3), b(1, 5);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a - b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    // Comparison is exempt so containers can hold mixed elements.
    CHECK(a != b);
    CHECK(a < b);
}

TEST_CASE("zero has no inverse") {
    CHECK_THROWS_AS(Fp(0, 7).inv(), std::domain_error);
}

TEST_CASE("elements order consistently for container use") {
    std::map<Fp, int> m;
    for (int v = 0; v < 5; ++v) m[Fp(v, 5)] = v;
    CHECK(m.size() == 5);
    CHECK(m.begin()->first.value() == 0);
    CHECK(m.rbegin()->first.value() == 4);
}

TEST_CASE("compound assignment matches the binary operators") {
    Fp a(3, 7);
    a += Fp(6, 7);
    CHECK(a.value() == 2);
    a *= Fp(5, 7);
    CHECK(a.value() == 3);
    a -= Fp(4, 7);
    CHECK(a.value() == 6);
}
