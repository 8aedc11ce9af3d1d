#pragma once

// Assembly of p-primary Farrell cohomology. Everything here is elementary
// abelian bookkeeping: a pattern is a period together with one rank per
// residue degree, meaning the cohomology in degree i is (Z/p)^ranks[i mod
// period]. Patterns for single normalizers are combined over the conjugacy
// classes of order-p subgroups; with one normalizer shape per class the
// assembled rank is just (class count) * (pattern rank), degreewise.

#include "crosscap/liftability.hpp"
#include "crosscap/riemann_hurwitz.hpp"
#include "crosscap/tuples.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crosscap {

class FarrellPattern {
public:
    // ranks.size() must equal period; all ranks nonnegative.
    FarrellPattern(int p, int period, std::vector<std::int64_t> ranks);

    static FarrellPattern zero(int p) { return FarrellPattern(p, 1, {0}); }

    int prime() const noexcept { return p_; }
    int period() const noexcept { return period_; }
    const std::vector<std::int64_t>& ranks() const noexcept { return ranks_; }

    // Farrell cohomology is Z-graded and periodic, so any integer degree
    // (negative included) reduces into the pattern.
    std::int64_t rank_at(std::int64_t degree) const noexcept;

    bool is_zero() const noexcept;

    friend bool operator==(const FarrellPattern& a, const FarrellPattern& b) noexcept {
        return a.p_ == b.p_ && a.period_ == b.period_ && a.ranks_ == b.ranks_;
    }

private:
    int p_;
    int period_;
    std::vector<std::int64_t> ranks_;
};

std::string to_string(const FarrellPattern& pat);

// Normalizer of order 2p with the inverting action: rank 1 every fourth
// degree starting at 0.
FarrellPattern dihedral_pattern(int p);

// Normalizer Z/p x Z/2: the direct factor contributes in every even degree.
FarrellPattern cyclic_times_z2_pattern(int p);

// count copies of the same pattern, one per conjugacy class: ranks scale,
// period stays. Additive in count.
FarrellPattern brown_assemble(std::int64_t count, const FarrellPattern& pat);

// Degreewise sum of two patterns over the same prime (periods aligned via
// their least common multiple), for assembling heterogeneous normalizers.
FarrellPattern combine(const FarrellPattern& a, const FarrellPattern& b);

enum class NormalizerGroup { Dihedral2p, CyclicTimesZ2, Unresolved };

std::string to_string(NormalizerGroup g);

// 1 -> Z/kernel_order -> N -> Z/quotient_order -> 1
struct GroupExtension {
    std::int64_t kernel_order;
    std::int64_t quotient_order;
};

struct NormalizerResolution {
    NormalizerGroup group;
    std::optional<GroupExtension> extension;
};

// p-period of the pure mapping class groups assembled below. An input to
// the computation (established a priori for this family), not something the
// library derives; twice the period of a cyclic group of odd prime order.
inline constexpr int kPureMcgPPeriod = 4;

// Identifies the normalizer of an order-p subgroup for the genus-p surface
// with k marked points. The quotient of the normalizer by the subgroup
// itself is the group of slides that lift through the cover, which
// liftable_subgroup(p) certifies to be Z/2; the extension
// 1 -> Z/p -> N -> Z/2 -> 1 is recorded, and the given p-period decides
// between the two order-2p candidates (dihedral for period 4, cyclic times
// Z/2 for period 2). Supported only for k in {1, 2}; anything else comes
// back Unresolved. Throws std::invalid_argument for a period other than
// 2 or 4.
NormalizerResolution resolve_normalizer(int p, int k, int p_period);

// p-primary Farrell cohomology pattern of the pure mapping class group of
// the genus-p non-orientable surface with k >= 1 marked points, computed
// end to end: torsion existence, class count at the witnessing branch data,
// normalizer resolution, Brown assembly. Without p-torsion the pattern is
// zero.
FarrellPattern farrell_pure_mcg(int p, int k);

// Virtual cohomological dimension of the same group: 2p - 4 + k.
int vcd_pure_mcg(int p, int k);

// Ordinary cohomology rank in degrees above the vcd, where it agrees with
// the Farrell pattern. Degrees below the vcd are not determined by the
// pattern; those come back empty.
std::optional<std::int64_t> ordinary_rank(int p, int k, std::int64_t degree);

} // namespace crosscap
