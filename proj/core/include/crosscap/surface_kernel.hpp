#pragma once

// Epimorphisms onto Z/p from the canonical presentation
//
//   < d_1..d_h, x_1..x_t | x_i^p = 1,  x_1...x_t * d_1^2...d_h^2 = 1 >
//
// recorded by their generator images in Z/p: a vector of elliptic images
// (all nonzero, since each x_i must have exact order p) and a vector of
// glide images, subject to the abelianized long relation
//
//   sum(x) + 2*sum(d) = 0   in Z/p.
//
// The first `marked` elliptic slots are pinned: they track distinguished
// cone points and may never be permuted.
//
// Presentation-level automorphisms act on these image vectors; conjugation
// dies in the abelian target, so every move below is the exact induced
// action of a presentation automorphism even though it looks simpler.

#include "crosscap/fp.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscap {

class SurfaceKernel {
public:
    // Values are reduced mod p. Structural checks only (sizes and marking
    // range); semantic invariants are the job of validate(), so a kernel
    // with a zero elliptic image or a broken relation can be constructed
    // and then reported on.
    SurfaceKernel(int p, int marked, const std::vector<int>& elliptic_images,
                  const std::vector<int>& glide_images);

    // Same checks, for callers already holding field elements. A named
    // factory rather than an overload so braced integer lists stay
    // unambiguous.
    static SurfaceKernel from_field_images(int p, int marked,
                                           std::vector<Fp> elliptic_images,
                                           std::vector<Fp> glide_images);

    int prime() const noexcept { return p_; }
    int marked() const noexcept { return marked_; }
    int cone_points() const noexcept { return static_cast<int>(elliptic_.size()); }
    int orbit_genus() const noexcept { return static_cast<int>(glide_.size()); }

    const std::vector<Fp>& elliptic() const noexcept { return elliptic_; }
    const std::vector<Fp>& glide() const noexcept { return glide_; }

    friend bool operator==(const SurfaceKernel& a, const SurfaceKernel& b) noexcept;
    friend bool operator<(const SurfaceKernel& a, const SurfaceKernel& b) noexcept;

private:
    struct raw_t {};
    SurfaceKernel(raw_t, int p, int marked, std::vector<Fp> elliptic_images,
                  std::vector<Fp> glide_images);

    int p_;
    int marked_;
    std::vector<Fp> elliptic_;
    std::vector<Fp> glide_;
};

std::string to_string(const SurfaceKernel& k);

enum class KernelDefect {
    ZeroEllipticImage, // some x_i image is 0, killing its order
    RelationViolated,  // sum(x) + 2*sum(d) != 0
};

struct ValidationReport {
    bool ok;
    std::optional<KernelDefect> defect;
    int slot; // 1-based elliptic slot for ZeroEllipticImage, 0 otherwise
    std::string message;
};

ValidationReport validate(const SurfaceKernel& k);

// Generating moves, named by what they do to the image vectors.
//
//   NegateLast        x_t -> -x_t,  d_1 -> d_1 + old x_t
//   SwapElliptic(i)   x_i <-> x_{i+1}, only for marked < i <= t-1
//   SwapGlide(j)      d_j <-> d_{j+1}, 1 <= j <= h-1
//   FlipSign(i)       x_i -> -x_i,  d_1 -> d_1 + old x_i, any 1 <= i <= t
//   Rescale(a)        every image scaled by a unit a
//
// NegateLast acts identically to FlipSign(t); both are kept because they
// arise from different presentation automorphisms, and tests pin their
// equality as actions.
struct KernelMove {
    enum class Kind { NegateLast, SwapElliptic, SwapGlide, FlipSign, Rescale };

    Kind kind;
    int arg; // 1-based slot index, or the scalar for Rescale; 0 for NegateLast

    static KernelMove negate_last() { return {Kind::NegateLast, 0}; }
    static KernelMove swap_elliptic(int i) { return {Kind::SwapElliptic, i}; }
    static KernelMove swap_glide(int j) { return {Kind::SwapGlide, j}; }
    static KernelMove flip_sign(int i) { return {Kind::FlipSign, i}; }
    static KernelMove rescale(int a) { return {Kind::Rescale, a}; }

    friend bool operator==(const KernelMove& a, const KernelMove& b) noexcept {
        return a.kind == b.kind && a.arg == b.arg;
    }
};

std::string to_string(const KernelMove& m);

// Applies one move. Throws std::invalid_argument for an out-of-range index,
// a swap touching a marked slot, or a non-unit Rescale scalar.
SurfaceKernel apply_move(const SurfaceKernel& k, const KernelMove& m);

// Every move legal for this kernel's shape, in a fixed deterministic order.
std::vector<KernelMove> valid_moves(const SurfaceKernel& k);

// Representative with all glide weight pushed into d_1: d_1 = halve(-sum(x)),
// d_j = 0 for j >= 2, elliptic images untouched. Computed directly from the
// relation rather than by replaying moves; idempotent by construction.
// Requires a valid kernel.
SurfaceKernel normal_form(const SurfaceKernel& k);

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::int64_t budget)
        : std::runtime_error(what), budget_(budget) {}
    std::int64_t budget() const noexcept { return budget_; }

private:
    std::int64_t budget_;
};

inline constexpr std::int64_t kDefaultStateBudget = 1'000'000;

// Closure of a valid kernel under valid_moves, via breadth-first search with
// a visited set. Throws BudgetExceeded once more than `budget` distinct
// states have been reached.
std::set<SurfaceKernel> orbit(const SurfaceKernel& seed,
                              std::int64_t budget = kDefaultStateBudget);

// All valid kernels for the shape, ordered lexicographically by the free
// coordinates: elliptic images first, then the trailing glide images
// d_2..d_h (d_1 is pinned by the relation once those are chosen). There are
// exactly (p-1)^t * p^(h-1) kernels. Throws BudgetExceeded if that count is
// over budget.
std::vector<SurfaceKernel> enumerate_valid(int p, int h, int t, int k,
                                           std::int64_t budget = kDefaultStateBudget);

// Partition of enumerate_valid(p, h, t, k) into move-closure orbits,
// ordered by each orbit's first seed in enumeration order.
std::vector<std::set<SurfaceKernel>> orbit_partition(
    int p, int h, int t, int k, std::int64_t budget = kDefaultStateBudget);

} // namespace crosscap
