#include "crosscap/nec.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace crosscap {

NecSignature::NecSignature(int orbit_genus_, bool orientable_, std::vector<int> periods_)
    : orbit_genus(orbit_genus_), orientable(orientable_), periods(std::move(periods_)) {
    if (orbit_genus < 1) {
        throw std::invalid_argument("NecSignature: orbit genus must be >= 1");
    }
    for (int m : periods) {
        if (m < 2) {
            throw std::invalid_argument("NecSignature: period " + std::to_string(m) +
                                        " < 2");
        }
    }
}

Rational area_multiple(const NecSignature& sig) {
    const int eta = sig.orientable ? 2 : 1;
    Rational mu(static_cast<std::int64_t>(eta) * sig.orbit_genus - 2);
    for (int m : sig.periods) {
        mu = mu + Rational(m - 1, m);
    }
    return mu;
}

bool is_realizable(const NecSignature& sig) {
    return area_multiple(sig).is_positive();
}

bool check_rh_index(const NecSignature& sub, const NecSignature& super,
                    std::int64_t index) {
    if (index < 1) {
        throw std::invalid_argument("check_rh_index: index must be >= 1");
    }
    if (!is_realizable(sub) || !is_realizable(super)) return false;
    return area_multiple(sub) == Rational(index) * area_multiple(super);
}

CanonicalPresentation presentation_of(const NecSignature& sig, int marked) {
    if (sig.orientable) {
        throw std::invalid_argument(
            "presentation_of: only non-orientable signatures carry this presentation");
    }
    const int t = static_cast<int>(sig.periods.size());
    if (marked < 0 || marked > t) {
        throw std::invalid_argument("presentation_of: marked count " +
                                    std::to_string(marked) + " outside [0, " +
                                    std::to_string(t) + "]");
    }
    return CanonicalPresentation{sig.orbit_genus, sig.periods, marked};
}

SurfaceKernel standard_kernel(int h, int t, int p, int marked) {
    if (h < 1) throw std::invalid_argument("standard_kernel: orbit genus must be >= 1");
    if (t < 1) throw std::invalid_argument("standard_kernel: need at least one period");
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("standard_kernel: order " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (marked < 0 || marked > t) {
        throw std::invalid_argument("standard_kernel: marked count outside [0, t]");
    }

    const int eps = t % 2;
    Fp first(1 + eps, p);
    if (first.is_zero()) {
        // 1 + eps is 1 or 2; unreachable for an odd prime, kept as a guard.
        throw std::logic_error("standard_kernel: degenerate first image");
    }

    std::vector<Fp> x;
    x.reserve(static_cast<std::size_t>(t));
    x.push_back(first);
    for (int i = 2; i <= t; ++i) x.emplace_back(1, p);

    std::vector<Fp> d;
    d.reserve(static_cast<std::size_t>(h));
    d.push_back(Fp(-(t + eps), p).halve());
    for (int j = 2; j <= h; ++j) d.emplace_back(0, p);

    SurfaceKernel kernel =
        SurfaceKernel::from_field_images(p, marked, std::move(x), std::move(d));
    ValidationReport report = validate(kernel);
    if (!report.ok) {
        throw std::logic_error("standard_kernel: construction broke its own invariant: " +
                               report.message);
    }
    return kernel;
}

} // namespace crosscap
