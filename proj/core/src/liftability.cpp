#include "crosscap/liftability.hpp"

#include <stdexcept>

namespace crosscap {

namespace {

void check_assignment(Fp x1, Fp x2, Fp d) {
    if (x1.modulus() != x2.modulus() || x1.modulus() != d.modulus()) {
        throw std::invalid_argument("MonodromyAssignment: mixed moduli");
    }
    if (x1.is_zero() || x2.is_zero()) {
        throw std::invalid_argument(
            "MonodromyAssignment: elliptic images must be units");
    }
    Fp sum = x1 + x2 + Fp(2, d.modulus()) * d;
    if (!sum.is_zero()) {
        throw std::invalid_argument("MonodromyAssignment: x1 + x2 + 2d = " +
                                    std::to_string(sum.value()) + " != 0 mod " +
                                    std::to_string(d.modulus()));
    }
}

} // namespace

MonodromyAssignment::MonodromyAssignment(int p, int x1, int x2, int d)
    : x1_(x1, p), x2_(x2, p), d_(d, p) {
    check_assignment(x1_, x2_, d_);
}

MonodromyAssignment::MonodromyAssignment(Fp x1, Fp x2, Fp d)
    : x1_(x1), x2_(x2), d_(d) {
    check_assignment(x1_, x2_, d_);
}

std::string to_string(const MonodromyAssignment& m) {
    return "(x1=" + std::to_string(m.x1().value()) + ", x2=" +
           std::to_string(m.x2().value()) + ", d=" + std::to_string(m.d().value()) +
           ") mod " + std::to_string(m.prime());
}

std::vector<MonodromyAssignment> all_assignments(int p) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("all_assignments: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    std::vector<MonodromyAssignment> out;
    out.reserve(static_cast<std::size_t>(p - 1) * (p - 1));
    for (int a = 1; a < p; ++a) {
        for (int b = 1; b < p; ++b) {
            Fp x1(a, p), x2(b, p);
            Fp d = (-(x1 + x2)).halve();
            out.emplace_back(x1, x2, d);
        }
    }
    return out;
}

std::string to_string(SlideMap s) {
    switch (s) {
    case SlideMap::Identity: return "identity";
    case SlideMap::SlideFirst: return "slide_first";
    case SlideMap::SlideSecond: return "slide_second";
    case SlideMap::SlideBoth: return "slide_both";
    }
    return "?";
}

SlideMap compose(SlideMap a, SlideMap b) {
    const int bits = static_cast<int>(a) ^ static_cast<int>(b);
    return static_cast<SlideMap>(bits);
}

MonodromyAssignment induced(const MonodromyAssignment& theta, SlideMap s) {
    const Fp x1 = theta.x1(), x2 = theta.x2(), d = theta.d();
    switch (s) {
    case SlideMap::Identity:
        return theta;
    case SlideMap::SlideFirst:
        return MonodromyAssignment(-x1, x2, d + x1);
    case SlideMap::SlideSecond:
        return MonodromyAssignment(x1, -x2, d + x2);
    case SlideMap::SlideBoth:
        return MonodromyAssignment(-x1, -x2, -d);
    }
    throw std::logic_error("induced: unknown slide");
}

LiftDecision is_liftable(const MonodromyAssignment& theta, SlideMap s) {
    const MonodromyAssignment image = induced(theta, s);
    // x1 is a unit, so the only possible scalar is x1' / x1.
    const Fp lambda = image.x1() * theta.x1().inv();
    if (image.x2() == lambda * theta.x2() && image.d() == lambda * theta.d()) {
        return LiftDecision{true, lambda};
    }
    return LiftDecision{false, std::nullopt};
}

std::vector<SlideMap> liftable_subgroup(int p) {
    std::vector<SlideMap> out;
    const std::vector<MonodromyAssignment> assignments = all_assignments(p);
    for (SlideMap s : kAllSlides) {
        bool everywhere = true;
        for (const MonodromyAssignment& theta : assignments) {
            if (!is_liftable(theta, s).liftable) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) out.push_back(s);
    }
    return out;
}

} // namespace crosscap
