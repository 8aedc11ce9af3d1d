#pragma once

// Tuples over the units of Z/p with a marked prefix, up to the congruence
// generated by a global unit scale, per-slot sign flips, and permutations of
// the unmarked slots:
//
//   (b_1..b_t) ~ (b'_1..b'_t)  iff  b_i = a * e_i * b'_{sigma(i)}
//
// for some unit a, signs e_i in {+1,-1}, and a permutation sigma fixing the
// first `marked` slots pointwise. These tuples classify the kernels of
// surface_kernel.hpp by their elliptic images, and the canonical form here
// is the hinge the whole classification turns on.

#include "crosscap/surface_kernel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crosscap {

struct MarkedTuple {
    int p;
    int marked;              // k, in [0, t]
    std::vector<int> values; // unit residues, kept reduced into [1, p-1]

    // Reduces every value mod p and rejects zeros (a tuple entry must be a
    // unit), non-odd-prime p, and marked counts outside [0, t].
    MarkedTuple(int p, int marked, std::vector<int> values);

    int length() const noexcept { return static_cast<int>(values.size()); }

    friend bool operator==(const MarkedTuple& a, const MarkedTuple& b) noexcept {
        return a.p == b.p && a.marked == b.marked && a.values == b.values;
    }
    friend bool operator!=(const MarkedTuple& a, const MarkedTuple& b) noexcept {
        return !(a == b);
    }
    friend bool operator<(const MarkedTuple& a, const MarkedTuple& b) noexcept {
        if (a.p != b.p) return a.p < b.p;
        if (a.marked != b.marked) return a.marked < b.marked;
        return a.values < b.values;
    }
};

std::string to_string(const MarkedTuple& t);

// The distinguished representative of a tuple's congruence class.
//
// Sign flips act slot-wise, so the best sign choice for a slot value v is
// whichever of v, p-v is smaller ("folding"); folded values live in
// [1, (p-1)/2]. For marked >= 1 the scale is pinned to make slot 1 equal 1
// (both unit scales achieving that fold to identical vectors; the smaller
// result is taken anyway), remaining marked slots are folded in place, and
// unmarked slots are folded and sorted. For marked = 0 every unit scale is
// tried and the lexicographically least fold-and-sort image wins; slot-wise
// folding and sorting realize the exact minimum over signs and permutations
// for each fixed scale, so this is the true lexicographic minimum over the
// whole congruence class.
MarkedTuple canonical_form(const MarkedTuple& t);

// Throws std::invalid_argument unless a and b share (p, length, marked).
bool are_congruent(const MarkedTuple& a, const MarkedTuple& b);

struct CongruenceClass {
    MarkedTuple representative; // always a canonical form

    friend bool operator==(const CongruenceClass& a, const CongruenceClass& b) noexcept {
        return a.representative == b.representative;
    }
    friend bool operator<(const CongruenceClass& a, const CongruenceClass& b) noexcept {
        return a.representative < b.representative;
    }
};

CongruenceClass class_of(const MarkedTuple& t);

// All classes for the shape, as canonical representatives in ascending
// lexicographic order. For marked >= 1 these are generated directly (slot 1
// equal to 1, marked slots over [1, (p-1)/2], unmarked slots nondecreasing);
// for marked = 0 the nondecreasing candidates are filtered down to fixed
// points of canonical_form.
std::vector<MarkedTuple> enumerate_classes(int p, int t, int k);

// Number of multisets of size r from n symbols, C(n+r-1, r), exact.
std::int64_t multichoose(std::int64_t n, std::int64_t r);

// Class count. Closed form for k >= 1:
//
//   ((p-1)/2)^(k-1) * multichoose((p-1)/2, t-k)
//
// (slot 1 is normalized away, each further marked slot contributes a free
// folded value, the unmarked slots contribute a multiset). No closed form is
// asserted for k = 0; that case counts by enumeration.
std::int64_t count_classes(int p, int t, int k);

// The kernel's elliptic image vector as a tuple, marking preserved.
// Requires a valid kernel.
MarkedTuple elliptic_tuple(const SurfaceKernel& k);

// A kernel on orbit genus h realizing the tuple, for normalized input
// (slot 1 must equal 1; canonical forms qualify). With integer lifts
// b_i in [1, p-1] and mu = 1 + b_2 + ... + b_t:
//
//   x_1 = +1, d_1 = -mu/2           when mu is even,
//   x_1 = -1, d_1 = (2 - p - mu)/2  when mu is odd,
//
// x_i = b_i for i >= 2 and d_j = 0 for j >= 2; both deltas are even
// integers, so d_1 is an honest integer before reduction. The long relation
// telescopes to 0 in either parity. Throws std::invalid_argument for
// unnormalized input or h < 1.
SurfaceKernel kernel_from_tuple(const MarkedTuple& t, int h);

} // namespace crosscap
