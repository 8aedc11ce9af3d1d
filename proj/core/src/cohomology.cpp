#include "crosscap/cohomology.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crosscap {

FarrellPattern::FarrellPattern(int p, int period, std::vector<std::int64_t> ranks)
    : p_(p), period_(period), ranks_(std::move(ranks)) {
    if (!is_odd_prime(p_)) {
        throw std::invalid_argument("FarrellPattern: modulus " + std::to_string(p_) +
                                    " is not an odd prime");
    }
    if (period_ < 1) {
        throw std::invalid_argument("FarrellPattern: period must be >= 1");
    }
    if (ranks_.size() != static_cast<std::size_t>(period_)) {
        throw std::invalid_argument("FarrellPattern: need exactly one rank per residue");
    }
    for (std::int64_t r : ranks_) {
        if (r < 0) throw std::invalid_argument("FarrellPattern: negative rank");
    }
}

std::int64_t FarrellPattern::rank_at(std::int64_t degree) const noexcept {
    std::int64_t r = degree % period_;
    if (r < 0) r += period_;
    return ranks_[static_cast<std::size_t>(r)];
}

bool FarrellPattern::is_zero() const noexcept {
    for (std::int64_t r : ranks_) {
        if (r != 0) return false;
    }
    return true;
}

std::string to_string(const FarrellPattern& pat) {
    std::ostringstream os;
    os << "period " << pat.period() << ", ranks (";
    for (std::size_t i = 0; i < pat.ranks().size(); ++i) {
        if (i) os << ",";
        os << pat.ranks()[i];
    }
    os << ") over Z/" << pat.prime();
    return os.str();
}

FarrellPattern dihedral_pattern(int p) {
    return FarrellPattern(p, 4, {1, 0, 0, 0});
}

FarrellPattern cyclic_times_z2_pattern(int p) {
    return FarrellPattern(p, 2, {1, 0});
}

FarrellPattern brown_assemble(std::int64_t count, const FarrellPattern& pat) {
    if (count < 0) {
        throw std::invalid_argument("brown_assemble: negative class count");
    }
    std::vector<std::int64_t> ranks = pat.ranks();
    for (std::int64_t& r : ranks) r *= count;
    return FarrellPattern(pat.prime(), pat.period(), std::move(ranks));
}

FarrellPattern combine(const FarrellPattern& a, const FarrellPattern& b) {
    if (a.prime() != b.prime()) {
        throw std::invalid_argument("combine: patterns over different primes");
    }
    const int period = std::lcm(a.period(), b.period());
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(period), 0);
    for (int i = 0; i < period; ++i) {
        ranks[static_cast<std::size_t>(i)] = a.rank_at(i) + b.rank_at(i);
    }
    return FarrellPattern(a.prime(), period, std::move(ranks));
}

std::string to_string(NormalizerGroup g) {
    switch (g) {
    case NormalizerGroup::Dihedral2p: return "dihedral of order 2p";
    case NormalizerGroup::CyclicTimesZ2: return "Z/p x Z/2";
    case NormalizerGroup::Unresolved: return "unresolved";
    }
    return "?";
}

NormalizerResolution resolve_normalizer(int p, int k, int p_period) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("resolve_normalizer: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (p_period != 2 && p_period != 4) {
        throw std::invalid_argument("resolve_normalizer: p-period " +
                                    std::to_string(p_period) + " is not 2 or 4");
    }
    if (k != 1 && k != 2) {
        return NormalizerResolution{NormalizerGroup::Unresolved, std::nullopt};
    }

    // The quotient N / (Z/p) is the subgroup of slides that lift.
    const std::vector<SlideMap> lifts = liftable_subgroup(p);
    if (lifts.size() != 2 || lifts[0] != SlideMap::Identity ||
        lifts[1] != SlideMap::SlideBoth) {
        throw std::logic_error("resolve_normalizer: lift computation broke the "
                               "expected order-2 quotient");
    }

    const NormalizerGroup group = p_period == 4 ? NormalizerGroup::Dihedral2p
                                                : NormalizerGroup::CyclicTimesZ2;
    return NormalizerResolution{group, GroupExtension{p, 2}};
}

FarrellPattern farrell_pure_mcg(int p, int k) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("farrell_pure_mcg: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (k < 1) {
        throw std::invalid_argument("farrell_pure_mcg: need at least one marked point");
    }

    const RhInstance inst(p, k, p);
    const TorsionReport torsion = has_p_torsion(inst);
    if (!torsion.exists) {
        return FarrellPattern::zero(p);
    }

    // At genus p the equation admits exactly one branch datum, (h, t) =
    // (1, 2); anything else would mean the arithmetic above changed.
    if (torsion.witnesses.size() != 1) {
        throw std::logic_error("farrell_pure_mcg: unexpected witness count at genus p");
    }
    const RhSolution witness = torsion.witnesses.front();
    const std::int64_t classes = count_classes(p, witness.cone_points, k);

    const NormalizerResolution res = resolve_normalizer(p, k, kPureMcgPPeriod);
    FarrellPattern base = FarrellPattern::zero(p);
    switch (res.group) {
    case NormalizerGroup::Dihedral2p:
        base = dihedral_pattern(p);
        break;
    case NormalizerGroup::CyclicTimesZ2:
        base = cyclic_times_z2_pattern(p);
        break;
    case NormalizerGroup::Unresolved:
        throw std::logic_error("farrell_pure_mcg: normalizer unresolved although "
                               "torsion exists");
    }
    return brown_assemble(classes, base);
}

int vcd_pure_mcg(int p, int k) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("vcd_pure_mcg: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (k < 1) {
        throw std::invalid_argument("vcd_pure_mcg: need at least one marked point");
    }
    return 2 * p - 4 + k;
}

std::optional<std::int64_t> ordinary_rank(int p, int k, std::int64_t degree) {
    if (degree < vcd_pure_mcg(p, k)) {
        return std::nullopt;
    }
    return farrell_pure_mcg(p, k).rank_at(degree);
}

} // namespace crosscap
