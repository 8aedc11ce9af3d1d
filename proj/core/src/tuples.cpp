#include "crosscap/tuples.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace crosscap {

namespace {

// Best value reachable from v by a sign flip: min(v, p - v), in [1, (p-1)/2]
// for unit v.
int fold(int v, int p) { return v <= p - v ? v : p - v; }

} // namespace

MarkedTuple::MarkedTuple(int p_, int marked_, std::vector<int> values_)
    : p(p_), marked(marked_), values(std::move(values_)) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("MarkedTuple: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (values.empty()) {
        throw std::invalid_argument("MarkedTuple: need at least one slot");
    }
    if (marked < 0 || marked > length()) {
        throw std::invalid_argument("MarkedTuple: marked count " +
                                    std::to_string(marked) + " outside [0, t]");
    }
    for (int& v : values) {
        v = Fp(v, p).value();
        if (v == 0) {
            throw std::invalid_argument("MarkedTuple: slot value 0 is not a unit mod " +
                                        std::to_string(p));
        }
    }
}

std::string to_string(const MarkedTuple& t) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < t.length(); ++i) {
        if (i == t.marked) os << (i ? " | " : "| ");
        else if (i) os << ",";
        os << t.values[static_cast<std::size_t>(i)];
    }
    if (t.marked == t.length()) os << " |";
    os << ") mod " << t.p;
    return os.str();
}

namespace {

// Image of the tuple under one unit scale, folded slot-wise, unmarked tail
// sorted. For a fixed scale this is the lexicographic minimum over all sign
// choices and unmarked permutations: folding is optimal per slot because
// signs act independently, and sorting the folded tail is optimal because
// permutations act only there.
std::vector<int> scaled_candidate(const MarkedTuple& t, int a) {
    std::vector<int> out(t.values.size());
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        const int scaled = static_cast<int>(
            (static_cast<long long>(a) * t.values[i]) % t.p);
        out[i] = fold(scaled, t.p);
    }
    std::sort(out.begin() + t.marked, out.end());
    return out;
}

} // namespace

MarkedTuple canonical_form(const MarkedTuple& t) {
    std::vector<int> best;
    if (t.marked >= 1) {
        // Pin slot 1 to the value 1: only the scales +/- values[0]^{-1} can
        // do it, and their folded candidates coincide. Taking the smaller of
        // the two keeps the contract literal at no cost.
        const int inv1 = Fp(t.values[0], t.p).inv().value();
        for (int a : {inv1, t.p - inv1}) {
            std::vector<int> cand = scaled_candidate(t, a);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    } else {
        for (int a = 1; a < t.p; ++a) {
            std::vector<int> cand = scaled_candidate(t, a);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return MarkedTuple(t.p, t.marked, std::move(best));
}

bool are_congruent(const MarkedTuple& a, const MarkedTuple& b) {
    if (a.p != b.p || a.length() != b.length() || a.marked != b.marked) {
        throw std::invalid_argument("are_congruent: shape mismatch between " +
                                    to_string(a) + " and " + to_string(b));
    }
    return canonical_form(a) == canonical_form(b);
}

CongruenceClass class_of(const MarkedTuple& t) {
    return CongruenceClass{canonical_form(t)};
}

namespace {

// Nondecreasing sequences over [1, m] of the given length, in lexicographic
// order. Calls sink for each.
template <typename Sink>
void for_each_multiset(int m, int length, std::vector<int>& prefix, Sink&& sink) {
    std::vector<int> digits(static_cast<std::size_t>(length), 1);
    for (;;) {
        std::vector<int> full = prefix;
        full.insert(full.end(), digits.begin(), digits.end());
        sink(full);
        int pos = length - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == m) --pos;
        if (pos < 0) break;
        const int next = digits[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < length; ++i) digits[static_cast<std::size_t>(i)] = next;
    }
}

} // namespace

std::vector<MarkedTuple> enumerate_classes(int p, int t, int k) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("enumerate_classes: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (t < 1) throw std::invalid_argument("enumerate_classes: need t >= 1");
    if (k < 0 || k > t) {
        throw std::invalid_argument("enumerate_classes: marked count outside [0, t]");
    }

    const int m = (p - 1) / 2;
    std::vector<MarkedTuple> out;

    if (k == 0) {
        std::vector<int> empty;
        for_each_multiset(m, t, empty, [&](const std::vector<int>& full) {
            MarkedTuple cand(p, 0, full);
            if (canonical_form(cand) == cand) out.push_back(std::move(cand));
        });
        return out;
    }

    // Marked digits c_2..c_k sweep [1, m] as an odometer (slow to fast), the
    // unmarked tail sweeps multisets; combined output is lexicographic.
    std::vector<int> marked_digits(static_cast<std::size_t>(k - 1), 1);
    for (;;) {
        std::vector<int> prefix;
        prefix.reserve(static_cast<std::size_t>(k));
        prefix.push_back(1);
        prefix.insert(prefix.end(), marked_digits.begin(), marked_digits.end());
        if (t == k) {
            out.emplace_back(p, k, prefix);
        } else {
            for_each_multiset(m, t - k, prefix, [&](const std::vector<int>& full) {
                out.emplace_back(p, k, full);
            });
        }
        int pos = k - 2;
        while (pos >= 0 && marked_digits[static_cast<std::size_t>(pos)] == m) {
            marked_digits[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++marked_digits[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::int64_t multichoose(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0) {
        throw std::invalid_argument("multichoose: negative argument");
    }
    if (r == 0) return 1;
    if (n == 0) return 0;
    // C(n+r-1, r) by the usual exact product: each partial product is a
    // binomial coefficient, so the division is always exact.
    const std::int64_t top = n + r - 1;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        result = result * (top - r + i) / i;
    }
    return result;
}

std::int64_t count_classes(int p, int t, int k) {
    if (k == 0) {
        return static_cast<std::int64_t>(enumerate_classes(p, t, 0).size());
    }
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("count_classes: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (t < 1 || k > t) {
        throw std::invalid_argument("count_classes: marked count outside [0, t]");
    }
    const std::int64_t m = (p - 1) / 2;
    std::int64_t result = multichoose(m, t - k);
    for (int i = 1; i < k; ++i) result *= m;
    return result;
}

MarkedTuple elliptic_tuple(const SurfaceKernel& k) {
    ValidationReport report = validate(k);
    if (!report.ok) {
        throw std::invalid_argument("elliptic_tuple: " + report.message);
    }
    std::vector<int> values;
    values.reserve(k.elliptic().size());
    for (Fp e : k.elliptic()) values.push_back(e.value());
    return MarkedTuple(k.prime(), k.marked(), std::move(values));
}

SurfaceKernel kernel_from_tuple(const MarkedTuple& t, int h) {
    if (h < 1) {
        throw std::invalid_argument("kernel_from_tuple: orbit genus must be >= 1");
    }
    if (t.values.front() != 1) {
        throw std::invalid_argument(
            "kernel_from_tuple: input is not normalized (slot 1 is " +
            std::to_string(t.values.front()) + ", expected 1)");
    }

    // Integer lifts in [1, p-1] are exactly the stored values. The parity of
    // mu below is a statement about the lifts, not about residues.
    long long mu = 0;
    for (int v : t.values) mu += v;

    const long long delta = (mu % 2 == 0) ? -mu : (2 - t.p - mu);
    std::vector<Fp> x;
    x.reserve(t.values.size());
    x.emplace_back(mu % 2 == 0 ? 1 : -1, t.p);
    for (std::size_t i = 1; i < t.values.size(); ++i) x.emplace_back(t.values[i], t.p);

    std::vector<Fp> d;
    d.reserve(static_cast<std::size_t>(h));
    d.emplace_back(delta / 2, t.p); // delta is even in both branches
    for (int j = 2; j <= h; ++j) d.emplace_back(0, t.p);

    SurfaceKernel kernel =
        SurfaceKernel::from_field_images(t.p, t.marked, std::move(x), std::move(d));
    ValidationReport report = validate(kernel);
    if (!report.ok) {
        throw std::logic_error("kernel_from_tuple: construction broke its own invariant: " +
                               report.message);
    }
    return kernel;
}

} // namespace crosscap
