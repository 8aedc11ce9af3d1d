#include "crosscap/surface_kernel.hpp"

#include <deque>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace crosscap {

namespace {

void check_shape(int p, int marked, std::size_t t, std::size_t h) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("SurfaceKernel: modulus " + std::to_string(p) +
                                    " is not an odd prime");
    }
    if (t < 1) throw std::invalid_argument("SurfaceKernel: no elliptic slots");
    if (h < 1) throw std::invalid_argument("SurfaceKernel: no glide slots");
    if (marked < 0 || static_cast<std::size_t>(marked) > t) {
        throw std::invalid_argument("SurfaceKernel: marked count " +
                                    std::to_string(marked) + " outside [0, t]");
    }
}

std::vector<Fp> lift(const std::vector<int>& values, int p) {
    std::vector<Fp> out;
    out.reserve(values.size());
    for (int v : values) out.emplace_back(v, p);
    return out;
}

Fp sum_of(const std::vector<Fp>& v, int p) {
    Fp acc(0, p);
    for (Fp e : v) acc += e;
    return acc;
}

// One char32_t per image value; used as the visited key during search.
std::u32string encode(const SurfaceKernel& k) {
    std::u32string key;
    key.reserve(k.elliptic().size() + k.glide().size());
    for (Fp e : k.elliptic()) key.push_back(static_cast<char32_t>(e.value()));
    for (Fp e : k.glide()) key.push_back(static_cast<char32_t>(e.value()));
    return key;
}

} // namespace

SurfaceKernel::SurfaceKernel(int p, int marked,
                             const std::vector<int>& elliptic_images,
                             const std::vector<int>& glide_images)
    : p_(p), marked_(marked), elliptic_(lift(elliptic_images, p)),
      glide_(lift(glide_images, p)) {
    check_shape(p, marked, elliptic_.size(), glide_.size());
}

SurfaceKernel::SurfaceKernel(raw_t, int p, int marked,
                             std::vector<Fp> elliptic_images,
                             std::vector<Fp> glide_images)
    : p_(p), marked_(marked), elliptic_(std::move(elliptic_images)),
      glide_(std::move(glide_images)) {
    check_shape(p, marked, elliptic_.size(), glide_.size());
    for (Fp e : elliptic_) {
        if (e.modulus() != p_) {
            throw std::invalid_argument("SurfaceKernel: elliptic image modulus mismatch");
        }
    }
    for (Fp e : glide_) {
        if (e.modulus() != p_) {
            throw std::invalid_argument("SurfaceKernel: glide image modulus mismatch");
        }
    }
}

SurfaceKernel SurfaceKernel::from_field_images(int p, int marked,
                                               std::vector<Fp> elliptic_images,
                                               std::vector<Fp> glide_images) {
    return SurfaceKernel(raw_t{}, p, marked, std::move(elliptic_images),
                         std::move(glide_images));
}

bool operator==(const SurfaceKernel& a, const SurfaceKernel& b) noexcept {
    return a.p_ == b.p_ && a.marked_ == b.marked_ && a.elliptic_ == b.elliptic_ &&
           a.glide_ == b.glide_;
}

bool operator<(const SurfaceKernel& a, const SurfaceKernel& b) noexcept {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    if (a.marked_ != b.marked_) return a.marked_ < b.marked_;
    if (a.elliptic_ != b.elliptic_) return a.elliptic_ < b.elliptic_;
    return a.glide_ < b.glide_;
}

std::string to_string(const SurfaceKernel& k) {
    std::ostringstream os;
    os << "x=(";
    for (std::size_t i = 0; i < k.elliptic().size(); ++i) {
        if (i) os << ",";
        os << k.elliptic()[i].value();
    }
    os << ") d=(";
    for (std::size_t j = 0; j < k.glide().size(); ++j) {
        if (j) os << ",";
        os << k.glide()[j].value();
    }
    os << ") mod " << k.prime();
    if (k.marked() > 0) os << " marked=" << k.marked();
    return os.str();
}

ValidationReport validate(const SurfaceKernel& k) {
    for (std::size_t i = 0; i < k.elliptic().size(); ++i) {
        if (k.elliptic()[i].is_zero()) {
            return ValidationReport{
                false, KernelDefect::ZeroEllipticImage, static_cast<int>(i + 1),
                "elliptic slot " + std::to_string(i + 1) +
                    " has image 0, which has order 1 instead of " +
                    std::to_string(k.prime())};
        }
    }
    Fp total = sum_of(k.elliptic(), k.prime());
    Fp two(2, k.prime());
    total += two * sum_of(k.glide(), k.prime());
    if (!total.is_zero()) {
        return ValidationReport{false, KernelDefect::RelationViolated, 0,
                                "long relation sum(x) + 2*sum(d) = " +
                                    std::to_string(total.value()) + " != 0 mod " +
                                    std::to_string(k.prime())};
    }
    return ValidationReport{true, std::nullopt, 0, ""};
}

std::string to_string(const KernelMove& m) {
    switch (m.kind) {
    case KernelMove::Kind::NegateLast: return "NegateLast";
    case KernelMove::Kind::SwapElliptic: return "SwapElliptic(" + std::to_string(m.arg) + ")";
    case KernelMove::Kind::SwapGlide: return "SwapGlide(" + std::to_string(m.arg) + ")";
    case KernelMove::Kind::FlipSign: return "FlipSign(" + std::to_string(m.arg) + ")";
    case KernelMove::Kind::Rescale: return "Rescale(" + std::to_string(m.arg) + ")";
    }
    return "?";
}

SurfaceKernel apply_move(const SurfaceKernel& k, const KernelMove& m) {
    const int t = k.cone_points();
    const int h = k.orbit_genus();
    std::vector<Fp> x = k.elliptic();
    std::vector<Fp> d = k.glide();

    switch (m.kind) {
    case KernelMove::Kind::NegateLast: {
        Fp old = x[t - 1];
        x[t - 1] = -old;
        d[0] += old;
        break;
    }
    case KernelMove::Kind::SwapElliptic: {
        const int i = m.arg;
        if (i < 1 || i > t - 1) {
            throw std::invalid_argument("apply_move: SwapElliptic index " +
                                        std::to_string(i) + " outside [1, t-1]");
        }
        if (i <= k.marked()) {
            throw std::invalid_argument("apply_move: SwapElliptic(" + std::to_string(i) +
                                        ") touches a marked slot");
        }
        std::swap(x[i - 1], x[i]);
        break;
    }
    case KernelMove::Kind::SwapGlide: {
        const int j = m.arg;
        if (j < 1 || j > h - 1) {
            throw std::invalid_argument("apply_move: SwapGlide index " +
                                        std::to_string(j) + " outside [1, h-1]");
        }
        std::swap(d[j - 1], d[j]);
        break;
    }
    case KernelMove::Kind::FlipSign: {
        const int i = m.arg;
        if (i < 1 || i > t) {
            throw std::invalid_argument("apply_move: FlipSign index " +
                                        std::to_string(i) + " outside [1, t]");
        }
        Fp old = x[i - 1];
        x[i - 1] = -old;
        d[0] += old;
        break;
    }
    case KernelMove::Kind::Rescale: {
        Fp a(m.arg, k.prime());
        if (a.is_zero()) {
            throw std::invalid_argument("apply_move: Rescale scalar " +
                                        std::to_string(m.arg) + " is not a unit mod " +
                                        std::to_string(k.prime()));
        }
        for (Fp& e : x) e *= a;
        for (Fp& e : d) e *= a;
        break;
    }
    }
    return SurfaceKernel::from_field_images(k.prime(), k.marked(), std::move(x),
                                            std::move(d));
}

std::vector<KernelMove> valid_moves(const SurfaceKernel& k) {
    const int t = k.cone_points();
    const int h = k.orbit_genus();
    std::vector<KernelMove> out;
    out.push_back(KernelMove::negate_last());
    for (int i = k.marked() + 1; i <= t - 1; ++i) {
        out.push_back(KernelMove::swap_elliptic(i));
    }
    for (int j = 1; j <= h - 1; ++j) {
        out.push_back(KernelMove::swap_glide(j));
    }
    for (int i = 1; i <= t; ++i) {
        out.push_back(KernelMove::flip_sign(i));
    }
    for (int a = 1; a <= k.prime() - 1; ++a) {
        out.push_back(KernelMove::rescale(a));
    }
    return out;
}

SurfaceKernel normal_form(const SurfaceKernel& k) {
    ValidationReport report = validate(k);
    if (!report.ok) {
        throw std::invalid_argument("normal_form: " + report.message);
    }
    std::vector<Fp> d;
    d.reserve(k.glide().size());
    d.push_back((-sum_of(k.elliptic(), k.prime())).halve());
    for (std::size_t j = 1; j < k.glide().size(); ++j) d.emplace_back(0, k.prime());
    return SurfaceKernel::from_field_images(k.prime(), k.marked(), k.elliptic(),
                                            std::move(d));
}

std::set<SurfaceKernel> orbit(const SurfaceKernel& seed, std::int64_t budget) {
    ValidationReport report = validate(seed);
    if (!report.ok) {
        throw std::invalid_argument("orbit: seed is not a valid kernel: " +
                                    report.message);
    }
    std::set<SurfaceKernel> reached;
    std::unordered_set<std::u32string> seen;
    std::deque<SurfaceKernel> frontier;

    auto visit = [&](const SurfaceKernel& k) {
        if (!seen.insert(encode(k)).second) return;
        if (static_cast<std::int64_t>(seen.size()) > budget) {
            throw BudgetExceeded("orbit: state budget of " + std::to_string(budget) +
                                     " exceeded",
                                 budget);
        }
        reached.insert(k);
        frontier.push_back(k);
    };

    visit(seed);
    while (!frontier.empty()) {
        SurfaceKernel current = std::move(frontier.front());
        frontier.pop_front();
        for (const KernelMove& m : valid_moves(current)) {
            visit(apply_move(current, m));
        }
    }
    return reached;
}

std::vector<SurfaceKernel> enumerate_valid(int p, int h, int t, int k,
                                           std::int64_t budget) {
    check_shape(p, k, static_cast<std::size_t>(t > 0 ? t : 0),
                static_cast<std::size_t>(h > 0 ? h : 0));

    std::int64_t count = 1;
    for (int i = 0; i < t; ++i) {
        count *= p - 1;
        if (count > budget) {
            throw BudgetExceeded("enumerate_valid: (p-1)^t * p^(h-1) exceeds budget of " +
                                     std::to_string(budget),
                                 budget);
        }
    }
    for (int j = 0; j < h - 1; ++j) {
        count *= p;
        if (count > budget) {
            throw BudgetExceeded("enumerate_valid: (p-1)^t * p^(h-1) exceeds budget of " +
                                     std::to_string(budget),
                                 budget);
        }
    }

    std::vector<SurfaceKernel> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> xv(static_cast<std::size_t>(t), 1);
    std::vector<int> dv(static_cast<std::size_t>(h - 1), 0);

    for (;;) {
        Fp x_sum(0, p);
        for (int v : xv) x_sum += Fp(v, p);
        Fp d_rest(0, p);
        for (int v : dv) d_rest += Fp(v, p);
        Fp d1 = (-x_sum).halve() - d_rest;

        std::vector<Fp> x;
        x.reserve(xv.size());
        for (int v : xv) x.emplace_back(v, p);
        std::vector<Fp> d;
        d.reserve(static_cast<std::size_t>(h));
        d.push_back(d1);
        for (int v : dv) d.emplace_back(v, p);
        out.push_back(
            SurfaceKernel::from_field_images(p, k, std::move(x), std::move(d)));

        // Odometer: glide digits advance fastest, elliptic digits next, so
        // output order is lexicographic in (elliptic, trailing glide).
        int pos = static_cast<int>(dv.size()) - 1;
        while (pos >= 0 && dv[static_cast<std::size_t>(pos)] == p - 1) {
            dv[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos >= 0) {
            ++dv[static_cast<std::size_t>(pos)];
            continue;
        }
        pos = t - 1;
        while (pos >= 0 && xv[static_cast<std::size_t>(pos)] == p - 1) {
            xv[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++xv[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<std::set<SurfaceKernel>> orbit_partition(int p, int h, int t, int k,
                                                     std::int64_t budget) {
    std::vector<std::set<SurfaceKernel>> parts;
    std::unordered_set<std::u32string> assigned;
    for (const SurfaceKernel& seed : enumerate_valid(p, h, t, k, budget)) {
        if (assigned.count(encode(seed))) continue;
        std::set<SurfaceKernel> orb = orbit(seed, budget);
        for (const SurfaceKernel& member : orb) assigned.insert(encode(member));
        parts.push_back(std::move(orb));
    }
    return parts;
}

} // namespace crosscap
