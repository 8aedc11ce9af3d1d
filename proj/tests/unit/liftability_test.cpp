#include "crosscap/liftability.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

using crosscap::all_assignments;
using crosscap::compose;
using crosscap::Fp;
using crosscap::induced;
using crosscap::is_liftable;
using crosscap::kAllSlides;
using crosscap::liftable_subgroup;
using crosscap::MonodromyAssignment;
using crosscap::SlideMap;

namespace {
constexpr int kPrimes[] = {3, 5, 7, 11, 13};
}

TEST_CASE("assignment validation") {
    CHECK_NOTHROW(MonodromyAssignment(5, 1, 1, 4));
    CHECK_THROWS_AS(MonodromyAssignment(5, 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(MonodromyAssignment(5, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(MonodromyAssignment(5, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(MonodromyAssignment(Fp(1, 5), Fp(1, 5), Fp(4, 7)),
                    std::invalid_argument);
}

TEST_CASE("assignment enumeration is complete and lexicographic") {
    auto small = all_assignments(3);
    REQUIRE(small.size() == 4);
    CHECK(small[0] == MonodromyAssignment(3, 1, 1, 2));
    CHECK(small[1] == MonodromyAssignment(3, 1, 2, 0));
    CHECK(small[2] == MonodromyAssignment(3, 2, 1, 0));
    CHECK(small[3] == MonodromyAssignment(3, 2, 2, 1));

    for (int p : kPrimes) {
        CHECK(all_assignments(p).size() ==
              static_cast<std::size_t>((p - 1) * (p - 1)));
    }
    CHECK_THROWS_AS(all_assignments(4), std::invalid_argument);
}

TEST_CASE("induced actions, pinned") {
    MonodromyAssignment theta(5, 1, 1, 4);
    CHECK(induced(theta, SlideMap::Identity) == theta);
    CHECK(induced(theta, SlideMap::SlideFirst) == MonodromyAssignment(5, 4, 1, 0));
    CHECK(induced(theta, SlideMap::SlideSecond) == MonodromyAssignment(5, 1, 4, 0));
    CHECK(induced(theta, SlideMap::SlideBoth) == MonodromyAssignment(5, 4, 4, 1));
}

TEST_CASE("slides compose as the Klein four-group") {
    CHECK(compose(SlideMap::SlideFirst, SlideMap::SlideSecond) == SlideMap::SlideBoth);
    CHECK(compose(SlideMap::SlideBoth, SlideMap::SlideBoth) == SlideMap::Identity);
    CHECK(compose(SlideMap::SlideFirst, SlideMap::SlideFirst) == SlideMap::Identity);
    for (SlideMap a : kAllSlides) {
        CHECK(compose(a, SlideMap::Identity) == a);
        CHECK(compose(SlideMap::Identity, a) == a);
        for (SlideMap b : kAllSlides) CHECK(compose(a, b) == compose(b, a));
    }
}

TEST_CASE("induced respects composition on valid assignments") {
    // Chaining single slides lands on the composite only because the
    // relation x1 + x2 + 2d = 0 holds; this is the group acting, not four
    // unrelated formulas.
    for (int p : {3, 5, 7}) {
        for (const MonodromyAssignment& theta : all_assignments(p)) {
            for (SlideMap a : kAllSlides) {
                for (SlideMap b : kAllSlides) {
                    CHECK(induced(induced(theta, a), b) ==
                          induced(theta, compose(a, b)));
                }
            }
        }
    }
}

TEST_CASE("single slides never lift, the composite always does") {
    for (int p : kPrimes) {
        for (const MonodromyAssignment& theta : all_assignments(p)) {
            CAPTURE(to_string(theta));

            auto id = is_liftable(theta, SlideMap::Identity);
            CHECK(id.liftable);
            CHECK(id.scalar->value() == 1);

            auto both = is_liftable(theta, SlideMap::SlideBoth);
            CHECK(both.liftable);
            CHECK(both.scalar->value() == p - 1); // lambda = -1

            CHECK_FALSE(is_liftable(theta, SlideMap::SlideFirst).liftable);
            CHECK_FALSE(is_liftable(theta, SlideMap::SlideSecond).liftable);
            CHECK_FALSE(is_liftable(theta, SlideMap::SlideFirst).scalar.has_value());
        }
    }
}

TEST_CASE("proportionality agrees with the kernel-preservation oracle") {
    for (int p : kPrimes) {
        for (const MonodromyAssignment& theta : all_assignments(p)) {
            for (SlideMap s : kAllSlides) {
                CAPTURE(to_string(theta));
                CAPTURE(to_string(s));
                CHECK(is_liftable(theta, s).liftable ==
                      crosscap::oracle::liftable_kernel_oracle(theta, s));
            }
        }
    }
}

TEST_CASE("the obstruction identities behind the single-slide failures") {
    // x2 + 2d = -x1 and x1 + 2d = -x2 are forced by the relation and are
    // nonzero since the elliptic images are units; they are exactly why a
    // single slide would need two different scalars at once.
    for (int p : kPrimes) {
        Fp two(2, p);
        for (const MonodromyAssignment& theta : all_assignments(p)) {
            Fp lhs1 = theta.x2() + two * theta.d();
            CHECK(lhs1 == -theta.x1());
            CHECK(lhs1.is_unit());
            Fp lhs2 = theta.x1() + two * theta.d();
            CHECK(lhs2 == -theta.x2());
            CHECK(lhs2.is_unit());
            CHECK((theta.x1() + theta.x2() + two * theta.d()).is_zero());
        }
    }
}

TEST_CASE("the liftable slides form the order-2 subgroup") {
    for (int p : {3, 5, 13}) {
        auto lifts = liftable_subgroup(p);
        REQUIRE(lifts.size() == 2);
        CHECK(lifts[0] == SlideMap::Identity);
        CHECK(lifts[1] == SlideMap::SlideBoth);
        // Closure under composition.
        for (SlideMap a : lifts) {
            for (SlideMap b : lifts) {
                CHECK(std::find(lifts.begin(), lifts.end(), compose(a, b)) !=
                      lifts.end());
            }
        }
    }
}
