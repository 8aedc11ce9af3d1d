#include "crosscap/tuples.hpp"

#include "crosscap/nec.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using crosscap::are_congruent;
using crosscap::canonical_form;
using crosscap::class_of;
using crosscap::count_classes;
using crosscap::elliptic_tuple;
using crosscap::enumerate_classes;
using crosscap::Fp;
using crosscap::kernel_from_tuple;
using crosscap::MarkedTuple;
using crosscap::multichoose;
using crosscap::SurfaceKernel;
using crosscap::validate;

namespace {

constexpr int kPrimes[] = {3, 5, 7, 11, 13};

// Every unit tuple of the given shape, for exhaustive sweeps.
std::vector<MarkedTuple> all_tuples(int p, int t, int k) {
    std::vector<MarkedTuple> out;
    std::vector<int> digits(static_cast<std::size_t>(t), 1);
    for (;;) {
        out.emplace_back(p, k, digits);
        int pos = t - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1) {
            digits[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
    return out;
}

} // namespace

TEST_CASE("tuple construction reduces and validates") {
    MarkedTuple t(5, 1, {6, -1});
    CHECK(t.values == std::vector<int>{1, 4});
    CHECK(t.marked == 1);
    CHECK(t.length() == 2);

    CHECK_THROWS_AS(MarkedTuple(5, 0, {5}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedTuple(5, 0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedTuple(5, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedTuple(5, 3, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedTuple(5, -1, {1}), std::invalid_argument);
    CHECK_THROWS_AS(MarkedTuple(9, 0, {1}), std::invalid_argument);
}

TEST_CASE("canonical forms, pinned") {
    // 4 = -1 mod 5 folds to 1.
    CHECK(canonical_form(MarkedTuple(5, 1, {1, 4})) == MarkedTuple(5, 1, {1, 1}));
    // 4 folds to 3 mod 7.
    CHECK(canonical_form(MarkedTuple(7, 1, {1, 4})) == MarkedTuple(7, 1, {1, 3}));
    // Unmarked: scaling (2,3) by 3 gives (6,9) = (1,4), folding gives (1,1).
    CHECK(canonical_form(MarkedTuple(5, 0, {2, 3})) == MarkedTuple(5, 0, {1, 1}));

    // Same three, certified against the exhaustive-definition oracle.
    for (const auto& t : {MarkedTuple(5, 1, {1, 4}), MarkedTuple(7, 1, {1, 4}),
                          MarkedTuple(5, 0, {2, 3})}) {
        CHECK(canonical_form(t) == crosscap::oracle::canonical_naive(t));
    }
}

TEST_CASE("canonical form equals the brute-force minimum everywhere small") {
    for (int p : {3, 5, 7}) {
        for (int t = 1; t <= 3; ++t) {
            for (int k = 0; k <= t; ++k) {
                for (const MarkedTuple& tup : all_tuples(p, t, k)) {
                    CAPTURE(to_string(tup));
                    MarkedTuple canon = canonical_form(tup);
                    CHECK(canon == crosscap::oracle::canonical_naive(tup));
                    CHECK(canonical_form(canon) == canon);
                    if (k >= 1) CHECK(canon.values[0] == 1);
                    CHECK(class_of(tup).representative == canon);
                }
            }
        }
    }
}

TEST_CASE("congruence requires matching shape") {
    MarkedTuple a(5, 1, {1, 2});
    CHECK_THROWS_AS(are_congruent(a, MarkedTuple(7, 1, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(are_congruent(a, MarkedTuple(5, 0, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(are_congruent(a, MarkedTuple(5, 1, {1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("congruence, pinned and against the oracle") {
    CHECK(are_congruent(MarkedTuple(5, 1, {1, 4}), MarkedTuple(5, 1, {1, 1})));
    CHECK(are_congruent(MarkedTuple(5, 0, {2, 3}), MarkedTuple(5, 0, {1, 1})));
    CHECK_FALSE(are_congruent(MarkedTuple(5, 1, {1, 1}), MarkedTuple(5, 1, {1, 2})));

    for (int p : {3, 5}) {
        for (int t = 1; t <= 3; ++t) {
            for (int k = 0; k <= t; ++k) {
                auto tuples = all_tuples(p, t, k);
                for (const MarkedTuple& a : tuples) {
                    for (const MarkedTuple& b : tuples) {
                        CAPTURE(to_string(a));
                        CAPTURE(to_string(b));
                        CHECK(are_congruent(a, b) ==
                              crosscap::oracle::congruent_naive(a, b));
                    }
                }
            }
        }
    }
}

TEST_CASE("congruence is an equivalence relation on random tuples") {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 300; ++round) {
        const int p = kPrimes[rng() % 3]; // 3, 5 or 7
        const int t = 1 + static_cast<int>(rng() % 4);
        const int k = static_cast<int>(rng() % (t + 1));
        auto random_tuple = [&] {
            std::vector<int> vals(static_cast<std::size_t>(t));
            for (int& v : vals) v = 1 + static_cast<int>(rng() % (p - 1));
            return MarkedTuple(p, k, vals);
        };
        MarkedTuple x = random_tuple(), y = random_tuple(), z = random_tuple();
        CHECK(are_congruent(x, x));
        CHECK(are_congruent(x, y) == are_congruent(y, x));
        if (are_congruent(x, y) && are_congruent(y, z)) CHECK(are_congruent(x, z));

        // A randomly transformed copy must land in the same class: scale,
        // slot signs, and a shuffle of the unmarked tail.
        const int a = 1 + static_cast<int>(rng() % (p - 1));
        std::vector<int> transformed(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) {
            int v = (a * x.values[static_cast<std::size_t>(i)]) % p;
            if (rng() % 2) v = p - v;
            transformed[static_cast<std::size_t>(i)] = v;
        }
        std::shuffle(transformed.begin() + k, transformed.end(), rng);
        CHECK(are_congruent(x, MarkedTuple(p, k, transformed)));
    }
}

TEST_CASE("class enumeration, pinned") {
    auto one_marked = enumerate_classes(5, 2, 1);
    REQUIRE(one_marked.size() == 2);
    CHECK(one_marked[0] == MarkedTuple(5, 1, {1, 1}));
    CHECK(one_marked[1] == MarkedTuple(5, 1, {1, 2}));

    auto all_marked = enumerate_classes(7, 2, 2);
    REQUIRE(all_marked.size() == 3);
    CHECK(all_marked[0] == MarkedTuple(7, 2, {1, 1}));
    CHECK(all_marked[1] == MarkedTuple(7, 2, {1, 2}));
    CHECK(all_marked[2] == MarkedTuple(7, 2, {1, 3}));

    auto unmarked = enumerate_classes(3, 3, 0);
    REQUIRE(unmarked.size() == 1);
    CHECK(unmarked[0] == MarkedTuple(3, 0, {1, 1, 1}));
}

TEST_CASE("enumerated classes are canonical, sorted, and complete") {
    for (int p : {3, 5, 7}) {
        for (int t = 1; t <= 4; ++t) {
            for (int k = 0; k <= t; ++k) {
                CAPTURE(p);
                CAPTURE(t);
                CAPTURE(k);
                auto classes = enumerate_classes(p, t, k);
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    CHECK(canonical_form(classes[i]) == classes[i]);
                    if (i) CHECK(classes[i - 1] < classes[i]);
                }
                // Completeness: every tuple's canonical form appears.
                std::set<MarkedTuple> listed(classes.begin(), classes.end());
                for (const MarkedTuple& tup : all_tuples(p, t, k)) {
                    CHECK(listed.count(canonical_form(tup)) == 1);
                }
                CHECK(static_cast<std::int64_t>(classes.size()) ==
                      count_classes(p, t, k));
            }
        }
    }
}

TEST_CASE("multichoose is exact") {
    CHECK(multichoose(2, 1) == 2);
    CHECK(multichoose(2, 2) == 3);
    CHECK(multichoose(5, 1) == 5);
    CHECK(multichoose(6, 4) == 126);
    CHECK(multichoose(3, 0) == 1);
    CHECK(multichoose(0, 0) == 1);
    CHECK(multichoose(0, 2) == 0);
    CHECK_THROWS_AS(multichoose(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(multichoose(1, -1), std::invalid_argument);
}

TEST_CASE("class counts, pinned and by formula") {
    CHECK(count_classes(11, 2, 1) == 5);
    CHECK(count_classes(5, 3, 1) == 3);
    CHECK(count_classes(5, 2, 2) == 2);
    for (int p : kPrimes) {
        CHECK(count_classes(p, 2, 1) == (p - 1) / 2);
        CHECK(count_classes(p, 2, 2) == (p - 1) / 2);
        for (int t = 1; t <= 5; ++t) {
            for (int k = 0; k <= t; ++k) {
                CAPTURE(p);
                CAPTURE(t);
                CAPTURE(k);
                CHECK(count_classes(p, t, k) ==
                      static_cast<std::int64_t>(enumerate_classes(p, t, k).size()));
            }
        }
    }
    CHECK_THROWS_AS(count_classes(4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_classes(5, 2, 3), std::invalid_argument);
}

TEST_CASE("elliptic tuple reads off the x images") {
    SurfaceKernel k(3, 0, {2, 1, 1}, {1});
    REQUIRE(validate(k).ok);
    MarkedTuple t = elliptic_tuple(k);
    CHECK(t == MarkedTuple(3, 0, {2, 1, 1}));
    CHECK(are_congruent(t, MarkedTuple(3, 0, {1, 1, 1})));

    SurfaceKernel marked(5, 2, {1, 2, 4}, {4});
    REQUIRE(validate(marked).ok);
    CHECK(elliptic_tuple(marked).marked == 2);

    CHECK_THROWS_AS(elliptic_tuple(SurfaceKernel(5, 0, {1, 1}, {1})),
                    std::invalid_argument);
}

TEST_CASE("kernel_from_tuple, pinned constructions") {
    // (1 | 2) at p=5: lifts sum to mu = 3, odd, so x_1 = -1 = 4 and
    // d_1 = (2 - 5 - 3)/2 = -3 = 2.
    SurfaceKernel odd_mu = kernel_from_tuple(MarkedTuple(5, 1, {1, 2}), 1);
    CHECK(odd_mu.elliptic() == std::vector<Fp>{{4, 5}, {2, 5}});
    CHECK(odd_mu.glide() == std::vector<Fp>{{2, 5}});
    CHECK(odd_mu.marked() == 1);

    // (1 | 1) at p=5: mu = 2, even, x_1 = 1, d_1 = -1 = 4.
    SurfaceKernel even_mu = kernel_from_tuple(MarkedTuple(5, 1, {1, 1}), 1);
    CHECK(even_mu.elliptic() == std::vector<Fp>{{1, 5}, {1, 5}});
    CHECK(even_mu.glide() == std::vector<Fp>{{4, 5}});

    // (1,1 | 1) at p=3: mu = 3, odd, x_1 = -1 = 2, d_1 = (2-3-3)/2 = -2 = 1.
    SurfaceKernel three = kernel_from_tuple(MarkedTuple(3, 2, {1, 1, 1}), 1);
    CHECK(three.elliptic() == std::vector<Fp>{{2, 3}, {1, 3}, {1, 3}});
    CHECK(three.glide() == std::vector<Fp>{{1, 3}});

    // Extra orbit genus pads with zero glide images.
    SurfaceKernel padded = kernel_from_tuple(MarkedTuple(5, 1, {1, 2}), 3);
    CHECK(padded.glide() == std::vector<Fp>{{2, 5}, {0, 5}, {0, 5}});
}

TEST_CASE("kernel_from_tuple rejects bad input") {
    CHECK_THROWS_AS(kernel_from_tuple(MarkedTuple(5, 1, {2, 1}), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernel_from_tuple(MarkedTuple(5, 1, {1, 2}), 0),
                    std::invalid_argument);
}

TEST_CASE("tuple-to-kernel-to-tuple round trip on every canonical class") {
    for (int p : {3, 5, 7}) {
        for (int t = 1; t <= 5; ++t) {
            for (int k = 0; k <= t; ++k) {
                for (const MarkedTuple& rep : enumerate_classes(p, t, k)) {
                    for (int h : {1, 2}) {
                        CAPTURE(to_string(rep));
                        CAPTURE(h);
                        SurfaceKernel kernel = kernel_from_tuple(rep, h);
                        CHECK(validate(kernel).ok);
                        CHECK(kernel.orbit_genus() == h);
                        CHECK(are_congruent(elliptic_tuple(kernel), rep));
                    }
                }
            }
        }
    }
}

TEST_CASE("the elliptic tuple class is invariant under every move") {
    for (int p : {3, 5}) {
        for (int h : {1, 2}) {
            for (int t = 1; t <= 2; ++t) {
                for (int k = 0; k <= t; ++k) {
                    for (const SurfaceKernel& kernel :
                         crosscap::enumerate_valid(p, h, t, k)) {
                        MarkedTuple before = elliptic_tuple(kernel);
                        for (const crosscap::KernelMove& m :
                             crosscap::valid_moves(kernel)) {
                            MarkedTuple after =
                                elliptic_tuple(crosscap::apply_move(kernel, m));
                            CAPTURE(to_string(kernel));
                            CAPTURE(to_string(m));
                            CHECK(are_congruent(before, after));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("orbits and classes count the same at small sizes") {
    for (int p : {3, 5}) {
        for (int h : {1, 2}) {
            for (int t = 1; t <= 2; ++t) {
                for (int k = 0; k <= t; ++k) {
                    CAPTURE(p);
                    CAPTURE(h);
                    CAPTURE(t);
                    CAPTURE(k);
                    CHECK(crosscap::orbit_partition(p, h, t, k).size() ==
                          enumerate_classes(p, t, k).size());
                }
            }
        }
    }
}

TEST_CASE("standard kernels realize the expected tuple class") {
    // The base construction and the tuple-driven one must agree up to
    // congruence whenever both apply.
    for (int p : {3, 5, 7}) {
        for (int t = 1; t <= 4; ++t) {
            for (int k = 0; k <= t; ++k) {
                SurfaceKernel base = crosscap::standard_kernel(2, t, p, k);
                MarkedTuple from_base = elliptic_tuple(base);
                MarkedTuple canon = canonical_form(from_base);
                SurfaceKernel rebuilt = kernel_from_tuple(canon, 2);
                CHECK(are_congruent(elliptic_tuple(rebuilt), from_base));
            }
        }
    }
}
