#pragma once

// Signatures of non-euclidean crystallographic groups, their hyperbolic
// areas, and the canonical presentation used throughout: for a signature
// (h; -; [p, ..., p]) with t periods the group presentation is
//
//   < d_1..d_h, x_1..x_t | x_i^p = 1,  x_1...x_t * d_1^2...d_h^2 = 1 >.
//
// Areas are tracked as the exact rational multiple mu with Area = 2*pi*mu;
// a signature is realizable by a group acting on the hyperbolic plane
// exactly when mu > 0. Floating point never enters any of this.

#include "crosscap/rational.hpp"
#include "crosscap/surface_kernel.hpp"

#include <vector>

namespace crosscap {

struct NecSignature {
    int orbit_genus;          // >= 1
    bool orientable;          // sign '+' when true, '-' when false
    std::vector<int> periods; // proper periods, each >= 2

    NecSignature(int orbit_genus, bool orientable, std::vector<int> periods);
};

// mu = eta*g - 2 + sum over periods of (1 - 1/m), with eta = 2 for an
// orientable sign and 1 otherwise.
Rational area_multiple(const NecSignature& sig);

bool is_realizable(const NecSignature& sig);

// True when both signatures are realizable and Area(sub) is exactly
// index * Area(super), the Riemann-Hurwitz condition for sub to sit inside
// super with the given index.
bool check_rh_index(const NecSignature& sub, const NecSignature& super,
                    std::int64_t index);

// The canonical presentation of a non-orientable signature, with the first
// `marked` elliptic generators distinguished.
struct CanonicalPresentation {
    int glide_generators;             // one d_j per unit of orbit genus
    std::vector<int> elliptic_orders; // one x_i per period
    int marked;
};

CanonicalPresentation presentation_of(const NecSignature& sig, int marked);

// The base epimorphism for the signature (h; -; [p ... p]) with t periods:
//
//   x_1 = 1 + eps,  x_i = 1 for i >= 2,  d_1 = halve(-(t + eps)),  d_j = 0,
//
// where eps is 1 for odd t and 0 for even t. The long relation then sums to
// t + eps + 2*halve(-(t+eps)) = 0 exactly, and every elliptic image is a
// unit (1 + eps is 1 or 2, never 0 mod an odd prime). This is the witness
// that every Riemann-Hurwitz solution is actually achieved by a group.
SurfaceKernel standard_kernel(int h, int t, int p, int marked);

} // namespace crosscap
