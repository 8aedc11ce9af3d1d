#pragma once

// Which slide homeomorphisms lift through the order-p cyclic cover?
//
// The setting is the genus-p surface with two cone points: the covering
// group is presented by < d, x_1, x_2 | x_i^p = 1, x_1 x_2 d^2 = 1 > and a
// monodromy is an epimorphism theta onto Z/p, recorded by the images
// (x1, x2, d) with x1, x2 units and x1 + x2 + 2d = 0. Sliding a marked
// point around induces an automorphism of the covering group; theta lifts
// along the slide exactly when the composite theta' equals lambda * theta
// for a single unit lambda (rescaling theta relabels the deck group but
// keeps its kernel, which is what the cover is).
//
// The induced maps on image vectors (conjugation already dropped, since the
// target is abelian):
//
//   Identity       (x1, x2, d)
//   SlideFirst     (-x1, x2, d + x1)
//   SlideSecond    (x1, -x2, d + x2)
//   SlideBoth      (-x1, -x2, -d)
//
// SlideFirst would need lambda = -1 on the first slot and lambda = +1 on
// the second at once, impossible for p > 2; likewise SlideSecond. The
// composite of both is global negation, which always lifts with
// lambda = -1. So exactly {Identity, SlideBoth} lift for every monodromy,
// a subgroup of order 2.

#include "crosscap/fp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crosscap {

class MonodromyAssignment {
public:
    // Validates that x1, x2 are units and x1 + x2 + 2d = 0 mod p; throws
    // std::invalid_argument otherwise.
    MonodromyAssignment(int p, int x1, int x2, int d);
    MonodromyAssignment(Fp x1, Fp x2, Fp d);

    int prime() const noexcept { return x1_.modulus(); }
    Fp x1() const noexcept { return x1_; }
    Fp x2() const noexcept { return x2_; }
    Fp d() const noexcept { return d_; }

    friend bool operator==(const MonodromyAssignment& a,
                           const MonodromyAssignment& b) noexcept {
        return a.x1_ == b.x1_ && a.x2_ == b.x2_ && a.d_ == b.d_;
    }

private:
    Fp x1_, x2_, d_;
};

std::string to_string(const MonodromyAssignment& m);

// All (p-1)^2 valid assignments: the relation pins d once x1, x2 are chosen.
// Ordered lexicographically by (x1, x2).
std::vector<MonodromyAssignment> all_assignments(int p);

enum class SlideMap { Identity, SlideFirst, SlideSecond, SlideBoth };

inline constexpr SlideMap kAllSlides[] = {SlideMap::Identity, SlideMap::SlideFirst,
                                          SlideMap::SlideSecond, SlideMap::SlideBoth};

std::string to_string(SlideMap s);

// The slide group is (Z/2)^2: each generator slides one marked point and
// squares to something acting trivially here.
SlideMap compose(SlideMap a, SlideMap b);

MonodromyAssignment induced(const MonodromyAssignment& theta, SlideMap s);

struct LiftDecision {
    bool liftable;
    std::optional<Fp> scalar; // the unit lambda with induced = lambda * theta
};

LiftDecision is_liftable(const MonodromyAssignment& theta, SlideMap s);

// Slides liftable for every valid assignment at this p, in enum order.
std::vector<SlideMap> liftable_subgroup(int p);

} // namespace crosscap
