#pragma once

// Brute-force reference implementations, used by tests only. Each one takes
// the dumbest correct route it can so that agreement with the library is
// meaningful: nothing here shares code with the implementation under test.

#include "crosscap/liftability.hpp"
#include "crosscap/tuples.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace crosscap::oracle {

// Scans a generous (h, t) box for solutions of g - 2 = p*(h - 2) + t*(p - 1)
// instead of solving for t. The box is wide enough for every sweep in this
// suite: h beyond (g-2)/p + 2 makes the right side exceed g - 2 for every
// t >= 0, and t beyond g + 2p makes it exceed g - 2 for every h >= 1.
inline std::vector<std::pair<int, int>> rh_solutions_naive(int g, int p) {
    std::vector<std::pair<int, int>> out;
    for (int h = 1; h <= g + 2; ++h) {
        for (int t = 0; t <= g + 2 * p; ++t) {
            if (g - 2 == p * (h - 2) + t * (p - 1)) {
                out.emplace_back(h, t);
            }
        }
    }
    return out;
}

namespace detail {

inline int mod_reduce(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

// All tuples reachable from `values` by one (scale, signs, permutation)
// choice, visited through a callback. sigma permutes only indices >= marked.
template <typename Visit>
void for_each_class_member(int p, int marked, const std::vector<int>& values,
                           Visit&& visit) {
    const int t = static_cast<int>(values.size());
    std::vector<int> perm(static_cast<std::size_t>(t));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool fixes_marked = true;
        for (int i = 0; i < marked; ++i) {
            if (perm[static_cast<std::size_t>(i)] != i) {
                fixes_marked = false;
                break;
            }
        }
        if (!fixes_marked) continue;
        for (int a = 1; a < p; ++a) {
            for (unsigned mask = 0; mask < (1u << t); ++mask) {
                std::vector<int> member(static_cast<std::size_t>(t));
                for (int i = 0; i < t; ++i) {
                    long long v = static_cast<long long>(a) *
                                  values[static_cast<std::size_t>(
                                      perm[static_cast<std::size_t>(i)])];
                    if (mask & (1u << i)) v = -v;
                    member[static_cast<std::size_t>(i)] = mod_reduce(v, p);
                }
                visit(member);
            }
        }
    } while (std::next_permutation(perm.begin() + marked, perm.end()));
}

} // namespace detail

// Congruence straight from the definition: some unit scale, some per-slot
// signs, some permutation fixing the marked prefix carries b onto a.
inline bool congruent_naive(const MarkedTuple& a, const MarkedTuple& b) {
    bool found = false;
    detail::for_each_class_member(b.p, b.marked, b.values,
                                  [&](const std::vector<int>& member) {
                                      if (member == a.values) found = true;
                                  });
    return found;
}

// Lexicographic minimum over the entire congruence class, by exhaustion.
inline MarkedTuple canonical_naive(const MarkedTuple& t) {
    std::vector<int> best;
    detail::for_each_class_member(t.p, t.marked, t.values,
                                  [&](const std::vector<int>& member) {
                                      if (best.empty() || member < best) best = member;
                                  });
    return MarkedTuple(t.p, t.marked, best);
}

// Lifting via kernels: theta lifts along the slide exactly when the induced
// map preserves ker(theta) in the abelianized covering group, i.e. every
// (a, b, c) with a*x1 + b*x2 + c*d = 0 also kills the induced images.
inline bool liftable_kernel_oracle(const MonodromyAssignment& theta, SlideMap s) {
    const MonodromyAssignment image = induced(theta, s);
    const int p = theta.prime();
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
            for (int c = 0; c < p; ++c) {
                const long long before = static_cast<long long>(a) * theta.x1().value() +
                                         static_cast<long long>(b) * theta.x2().value() +
                                         static_cast<long long>(c) * theta.d().value();
                if (before % p != 0) continue;
                const long long after = static_cast<long long>(a) * image.x1().value() +
                                        static_cast<long long>(b) * image.x2().value() +
                                        static_cast<long long>(c) * image.d().value();
                if (after % p != 0) return false;
            }
        }
    }
    return true;
}

// Counts valid kernels by scanning every image vector, zeros included, and
// checking the defining conditions directly.
inline std::int64_t valid_kernel_count_naive(int p, int h, int t) {
    const auto advance = [&](std::vector<int>& digits) {
        int pos = static_cast<int>(digits.size()) - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return false;
        ++digits[static_cast<std::size_t>(pos)];
        return true;
    };

    std::int64_t count = 0;
    std::vector<int> all(static_cast<std::size_t>(t + h), 0);
    do {
        bool units = true;
        for (int i = 0; i < t; ++i) {
            if (all[static_cast<std::size_t>(i)] == 0) {
                units = false;
                break;
            }
        }
        if (!units) continue;
        long long sum = 0;
        for (int i = 0; i < t; ++i) sum += all[static_cast<std::size_t>(i)];
        for (int j = 0; j < h; ++j) sum += 2LL * all[static_cast<std::size_t>(t + j)];
        if (sum % p == 0) ++count;
    } while (advance(all));
    return count;
}

} // namespace crosscap::oracle
