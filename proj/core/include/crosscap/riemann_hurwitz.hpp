#pragma once

// Riemann-Hurwitz bookkeeping for actions of the cyclic group of odd prime
// order p on a closed non-orientable surface of genus g with k marked points.
// The governing equation is
//
//     g - 2 = p*(h - 2) + t*(p - 1)
//
// where h is the genus of the orbit surface and t counts the branch points.
// Solutions with t = 0 correspond to free actions; they are reported but are
// never torsion witnesses for the pure mapping class group.

#include <vector>

namespace crosscap {

struct RhInstance {
    int genus;         // g >= 3
    int marked_points; // k >= 0
    int prime;         // odd prime p

    RhInstance(int genus, int marked_points, int prime);
};

struct RhSolution {
    int orbit_genus; // h >= 1
    int cone_points; // t >= 0
    bool free_action; // t == 0

    friend bool operator==(const RhSolution& a, const RhSolution& b) noexcept {
        return a.orbit_genus == b.orbit_genus && a.cone_points == b.cone_points;
    }
    friend bool operator<(const RhSolution& a, const RhSolution& b) noexcept {
        if (a.orbit_genus != b.orbit_genus) return a.orbit_genus < b.orbit_genus;
        return a.cone_points < b.cone_points;
    }
};

// All (h, t) with h >= 1, t >= 0 satisfying the equation, sorted by (h, t).
// Bounds: t >= 0 forces p*(h-2) <= g-2, so h <= (g-2)/p + 2; for each h the
// value t = (g-2 - p*(h-2))/(p-1) is unique when integral, so the h-loop
// alone enumerates everything.
std::vector<RhSolution> solve_all(const RhInstance& inst);

struct TorsionReport {
    bool exists;
    // Solutions with t >= max(k, 1): enough cone points to pin every marked
    // point, and at least one so the action is not free.
    std::vector<RhSolution> witnesses;
};

TorsionReport has_p_torsion(const RhInstance& inst);

struct KernelGenusResult {
    int genus;
    // The formula can produce genus < 3 (outside the range the rest of the
    // library is built for); flagged rather than rejected.
    bool below_classical_range;
};

// Genus of the surface an index-p subgroup acts on: inverts the equation,
// g = p*(h-2) + t*(p-1) + 2. Requires h >= 1, t >= 0, p an odd prime.
KernelGenusResult kernel_genus(int orbit_genus, int cone_points, int p);

} // namespace crosscap
