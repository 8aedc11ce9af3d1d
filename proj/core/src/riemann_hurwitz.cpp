#include "crosscap/riemann_hurwitz.hpp"

#include "crosscap/fp.hpp"

#include <stdexcept>
#include <string>

namespace crosscap {

RhInstance::RhInstance(int genus_, int marked_points_, int prime_)
    : genus(genus_), marked_points(marked_points_), prime(prime_) {
    if (genus < 3) {
        throw std::invalid_argument("RhInstance: genus " + std::to_string(genus) +
                                    " < 3");
    }
    if (marked_points < 0) {
        throw std::invalid_argument("RhInstance: negative marked point count");
    }
    if (!is_odd_prime(prime)) {
        throw std::invalid_argument("RhInstance: order " + std::to_string(prime) +
                                    " is not an odd prime");
    }
}

std::vector<RhSolution> solve_all(const RhInstance& inst) {
    const int g = inst.genus;
    const int p = inst.prime;
    std::vector<RhSolution> out;
    const int h_max = (g - 2) / p + 2;
    for (int h = 1; h <= h_max; ++h) {
        const int rem = (g - 2) - p * (h - 2);
        if (rem < 0) break; // rem is decreasing in h
        if (rem % (p - 1) != 0) continue;
        const int t = rem / (p - 1);
        out.push_back(RhSolution{h, t, t == 0});
    }
    // Ascending h with a unique t per h: already sorted by (h, t).
    return out;
}

TorsionReport has_p_torsion(const RhInstance& inst) {
    const int need = inst.marked_points > 1 ? inst.marked_points : 1;
    TorsionReport report{false, {}};
    for (const RhSolution& s : solve_all(inst)) {
        if (s.cone_points >= need) {
            report.witnesses.push_back(s);
        }
    }
    report.exists = !report.witnesses.empty();
    return report;
}

KernelGenusResult kernel_genus(int orbit_genus, int cone_points, int p) {
    if (orbit_genus < 1) {
        throw std::invalid_argument("kernel_genus: orbit genus must be >= 1");
    }
    if (cone_points < 0) {
        throw std::invalid_argument("kernel_genus: negative cone point count");
    }
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("kernel_genus: order " + std::to_string(p) +
                                    " is not an odd prime");
    }
    const int g = p * (orbit_genus - 2) + cone_points * (p - 1) + 2;
    return KernelGenusResult{g, g < 3};
}

} // namespace crosscap
