// Result builders call into the library and return plain JSON; the renderers
// turn that JSON back into text without touching the library, so output never
// depends on whether a result was computed fresh or replayed from the cache.

#include "crosscap_cli/report.hpp"

#include "crosscap/cohomology.hpp"
#include "crosscap/liftability.hpp"
#include "crosscap/nec.hpp"
#include "crosscap/riemann_hurwitz.hpp"
#include "crosscap/surface_kernel.hpp"
#include "crosscap/tuples.hpp"
#include "crosscap/version.hpp"

#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace crosscap::cli {

using nlohmann::json;

namespace {

json solution_json(const RhSolution& s) {
    return json{{"h", s.orbit_genus}, {"t", s.cone_points}, {"free_action", s.free_action}};
}

json tuple_json(const MarkedTuple& t) {
    return json{{"marked", t.marked}, {"values", t.values}};
}

json kernel_json(const SurfaceKernel& k) {
    std::vector<int> x;
    std::vector<int> d;
    for (const Fp& v : k.elliptic()) x.push_back(v.value());
    for (const Fp& v : k.glide()) d.push_back(v.value());
    return json{{"p", k.prime()}, {"marked", k.marked()}, {"x", x}, {"d", d}};
}

json pattern_json(const FarrellPattern& pat) {
    return json{{"period", pat.period()}, {"ranks", pat.ranks()}};
}

} // namespace

json torsion_result(int g, int k, int p) {
    const TorsionReport report = has_p_torsion(RhInstance(g, k, p));
    json witnesses = json::array();
    for (const RhSolution& s : report.witnesses) witnesses.push_back(solution_json(s));
    return json{{"exists", report.exists}, {"witnesses", std::move(witnesses)}};
}

json solutions_result(int g, int k, int p) {
    json arr = json::array();
    for (const RhSolution& s : solve_all(RhInstance(g, k, p))) {
        arr.push_back(solution_json(s));
    }
    return json{{"solutions", std::move(arr)}};
}

json classes_result(int g, int k, int p, std::optional<int> only_h,
                    std::optional<int> only_t) {
    const TorsionReport report = has_p_torsion(RhInstance(g, k, p));
    json out = json::array();
    for (const RhSolution& s : report.witnesses) {
        if (only_h && s.orbit_genus != *only_h) continue;
        if (only_t && s.cone_points != *only_t) continue;
        json classes = json::array();
        for (const MarkedTuple& rep : enumerate_classes(p, s.cone_points, k)) {
            const SurfaceKernel kernel = kernel_from_tuple(rep, s.orbit_genus);
            classes.push_back(json{{"tuple", tuple_json(rep)}, {"kernel", kernel_json(kernel)}});
        }
        out.push_back(json{
            {"h", s.orbit_genus},
            {"t", s.cone_points},
            {"count", count_classes(p, s.cone_points, k)},
            {"classes", std::move(classes)},
        });
    }
    json result{{"solutions", std::move(out)}};
    if (!report.exists) result["note"] = "no p-torsion";
    return result;
}

json verify_result(int p, int h, int t, int k, std::int64_t budget) {
    const std::vector<SurfaceKernel> kernels = enumerate_valid(p, h, t, k, budget);
    const std::vector<std::set<SurfaceKernel>> parts = orbit_partition(p, h, t, k, budget);
    const std::vector<MarkedTuple> reps = enumerate_classes(p, t, k);

    // The class invariant must be constant on every move orbit, and the
    // canonical forms of orbit representatives must reproduce the enumerated
    // classes exactly (same set, same cardinality, no orbit merged or split).
    bool constant = true;
    std::set<MarkedTuple> orbit_invariants;
    std::size_t covered = 0;
    for (const std::set<SurfaceKernel>& part : parts) {
        covered += part.size();
        std::optional<MarkedTuple> first;
        for (const SurfaceKernel& kernel : part) {
            MarkedTuple canon = canonical_form(elliptic_tuple(kernel));
            if (!first) {
                first = std::move(canon);
            } else if (*first != canon) {
                constant = false;
            }
        }
        if (first) orbit_invariants.insert(*first);
    }
    const std::set<MarkedTuple> class_set(reps.begin(), reps.end());
    const bool match = orbit_invariants == class_set && parts.size() == class_set.size();
    const bool pass = constant && match && covered == kernels.size() &&
                      static_cast<std::int64_t>(parts.size()) == count_classes(p, t, k);
    return json{
        {"kernels", kernels.size()},
        {"orbits", parts.size()},
        {"classes", reps.size()},
        {"phi_constant_on_orbits", constant},
        {"classes_match_orbits", match},
        {"pass", pass},
    };
}

json cohomology_result(int p, int k) {
    const FarrellPattern pat = farrell_pure_mcg(p, k);
    const TorsionReport report = has_p_torsion(RhInstance(p, k, p));
    json reason; // null unless the pattern vanishes for lack of torsion
    if (!report.exists) reason = "no p-torsion";
    return json{
        {"pattern", pattern_json(pat)},
        {"vcd", vcd_pure_mcg(p, k)},
        {"zero", pat.is_zero()},
        {"reason", std::move(reason)},
    };
}

json liftability_result(int p) {
    json liftable = json::array();
    json not_liftable = json::array();
    const std::vector<MonodromyAssignment> assignments = all_assignments(p);
    for (SlideMap s : kAllSlides) {
        bool lifts_everywhere = true;
        std::optional<int> scalar;
        bool scalar_unique = true;
        for (const MonodromyAssignment& theta : assignments) {
            const LiftDecision decision = is_liftable(theta, s);
            if (!decision.liftable) {
                lifts_everywhere = false;
                break;
            }
            const int v = decision.scalar->value();
            if (!scalar) {
                scalar = v;
            } else if (*scalar != v) {
                scalar_unique = false;
            }
        }
        if (lifts_everywhere) {
            json entry{{"slide", to_string(s)}};
            if (scalar && scalar_unique) {
                entry["scalar"] = *scalar;
            } else {
                entry["scalar"] = nullptr;
            }
            liftable.push_back(std::move(entry));
        } else {
            not_liftable.push_back(to_string(s));
        }
    }
    return json{{"liftable", std::move(liftable)}, {"not_liftable", std::move(not_liftable)}};
}

json selftest_result() {
    json checks = json::array();
    bool all = true;
    const auto record = [&](const std::string& name, bool pass) {
        checks.push_back(json{{"name", name}, {"pass", pass}});
        all = all && pass;
    };

    {
        bool ok = true;
        const TorsionReport a = has_p_torsion(RhInstance(5, 1, 5));
        ok = ok && a.exists && a.witnesses.size() == 1 &&
             a.witnesses[0] == RhSolution{1, 2, false};
        // t = 2 cone points cannot pin three marked points.
        ok = ok && !has_p_torsion(RhInstance(7, 3, 7)).exists;
        // Free solutions exist here but must not be reported as witnesses.
        const TorsionReport c = has_p_torsion(RhInstance(5, 0, 3));
        ok = ok && c.exists && c.witnesses.size() == 1 &&
             c.witnesses[0] == RhSolution{1, 3, false};
        record("torsion_witnesses", ok);
    }
    {
        bool ok = true;
        for (int p : {3, 5, 7}) {
            for (int t = 1; t <= 4; ++t) {
                for (int k = 0; k <= t; ++k) {
                    const std::vector<MarkedTuple> reps = enumerate_classes(p, t, k);
                    ok = ok && static_cast<std::int64_t>(reps.size()) == count_classes(p, t, k);
                    for (const MarkedTuple& rep : reps) {
                        ok = ok && canonical_form(rep) == rep;
                    }
                }
            }
        }
        record("class_count_formula", ok);
    }
    {
        const bool ok = verify_result(5, 1, 2, 1, kDefaultStateBudget)["pass"].get<bool>() &&
                        verify_result(3, 2, 2, 0, kDefaultStateBudget)["pass"].get<bool>();
        record("orbit_classes_agree", ok);
    }
    {
        bool ok = true;
        for (int p : {3, 5}) {
            for (int h = 1; h <= 2; ++h) {
                for (int t = 1; t <= 3; ++t) {
                    for (int k = 0; k <= t; ++k) {
                        ok = ok && validate(standard_kernel(h, t, p, k)).ok;
                        for (const MarkedTuple& rep : enumerate_classes(p, t, k)) {
                            const SurfaceKernel kernel = kernel_from_tuple(rep, h);
                            ok = ok && validate(kernel).ok;
                            ok = ok && kernel.orbit_genus() == h &&
                                 kernel.cone_points() == t && kernel.marked() == k;
                            ok = ok && are_congruent(elliptic_tuple(kernel), rep);
                        }
                    }
                }
            }
        }
        record("kernel_round_trip", ok);
    }
    {
        const std::vector<SlideMap> expected{SlideMap::Identity, SlideMap::SlideBoth};
        record("liftable_slides", liftable_subgroup(7) == expected);
    }
    {
        const FarrellPattern got = farrell_pure_mcg(5, 1);
        const FarrellPattern want = brown_assemble(count_classes(5, 2, 1), dihedral_pattern(5));
        const bool ok = got == want && got.rank_at(0) == 2 && got.rank_at(1) == 0 &&
                        got.rank_at(4) == 2 && vcd_pure_mcg(5, 1) == 7;
        record("cohomology_assembly", ok);
    }

    return json{{"checks", std::move(checks)}, {"pass", all}};
}

json make_envelope(const std::string& command, json params, json result) {
    return json{
        {"command", command},
        {"params", std::move(params)},
        {"result", std::move(result)},
        {"version", kVersion},
    };
}

namespace {

std::string words(const json& arr) {
    std::ostringstream out;
    bool first = true;
    for (const json& v : arr) {
        if (!first) out << ' ';
        out << v.get<std::int64_t>();
        first = false;
    }
    return out.str();
}

void render_params_line(std::ostringstream& out, const json& params) {
    out << "  ";
    bool first = true;
    for (const auto& [key, value] : params.items()) {
        if (!first) out << ' ';
        out << key << '=' << value.dump();
        first = false;
    }
    out << '\n';
}

} // namespace

std::string render_text(const json& envelope) {
    const std::string command = envelope.at("command").get<std::string>();
    const json& params = envelope.at("params");
    const json& result = envelope.at("result");
    std::ostringstream out;

    if (command == "torsion") {
        out << "torsion: " << (result.at("exists").get<bool>() ? "yes" : "no") << '\n';
        render_params_line(out, params);
        for (const json& w : result.at("witnesses")) {
            out << "  witness: h=" << w.at("h").get<int>() << " t=" << w.at("t").get<int>()
                << '\n';
        }
    } else if (command == "solutions") {
        const json& sols = result.at("solutions");
        out << "solutions: " << sols.size() << '\n';
        render_params_line(out, params);
        for (const json& s : sols) {
            out << "  h=" << s.at("h").get<int>() << " t=" << s.at("t").get<int>();
            if (s.at("free_action").get<bool>()) out << " (free)";
            out << '\n';
        }
    } else if (command == "classes") {
        out << "classes:\n";
        render_params_line(out, params);
        if (result.contains("note")) {
            out << "  none (" << result.at("note").get<std::string>() << ")\n";
        }
        for (const json& s : result.at("solutions")) {
            out << "  h=" << s.at("h").get<int>() << " t=" << s.at("t").get<int>() << ": "
                << s.at("count").get<std::int64_t>() << " class(es)\n";
            int index = 1;
            for (const json& c : s.at("classes")) {
                out << "    " << index++ << ": tuple (" << words(c.at("tuple").at("values"))
                    << ")  kernel x=(" << words(c.at("kernel").at("x")) << ") d=("
                    << words(c.at("kernel").at("d")) << ")\n";
            }
        }
    } else if (command == "verify") {
        out << "verify:\n";
        render_params_line(out, params);
        out << "  kernels: " << result.at("kernels").get<std::int64_t>() << '\n';
        out << "  orbits: " << result.at("orbits").get<std::int64_t>() << '\n';
        out << "  classes: " << result.at("classes").get<std::int64_t>() << '\n';
        out << "  invariant constant on orbits: "
            << (result.at("phi_constant_on_orbits").get<bool>() ? "yes" : "no") << '\n';
        out << "  orbit representatives match classes: "
            << (result.at("classes_match_orbits").get<bool>() ? "yes" : "no") << '\n';
        out << "result: " << (result.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
    } else if (command == "cohomology") {
        out << "cohomology:\n";
        render_params_line(out, params);
        if (result.at("zero").get<bool>()) {
            out << "  pattern: zero";
            if (!result.at("reason").is_null()) {
                out << " (" << result.at("reason").get<std::string>() << ")";
            }
            out << '\n';
        } else {
            const json& pat = result.at("pattern");
            out << "  pattern: period " << pat.at("period").get<int>() << " ranks ["
                << words(pat.at("ranks")) << "]\n";
        }
        out << "  vcd: " << result.at("vcd").get<int>() << '\n';
    } else if (command == "liftability") {
        out << "liftability:\n";
        render_params_line(out, params);
        for (const json& entry : result.at("liftable")) {
            out << "  " << entry.at("slide").get<std::string>() << ": lifts";
            if (!entry.at("scalar").is_null()) {
                out << " (scalar " << entry.at("scalar").get<int>() << ")";
            }
            out << '\n';
        }
        for (const json& name : result.at("not_liftable")) {
            out << "  " << name.get<std::string>() << ": no\n";
        }
    } else if (command == "selftest") {
        out << "selftest:\n";
        for (const json& check : result.at("checks")) {
            out << "  " << check.at("name").get<std::string>() << ": "
                << (check.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
        }
        out << "result: " << (result.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
    } else {
        out << envelope.dump(2) << '\n';
    }
    return out.str();
}

std::string render_classes_csv(const json& envelope) {
    std::ostringstream out;
    out << "h,t,class_index,marked,tuple,kernel_x,kernel_d\n";
    for (const json& s : envelope.at("result").at("solutions")) {
        int index = 1;
        for (const json& c : s.at("classes")) {
            out << s.at("h").get<int>() << ',' << s.at("t").get<int>() << ',' << index++ << ','
                << c.at("tuple").at("marked").get<int>() << ','
                << words(c.at("tuple").at("values")) << ',' << words(c.at("kernel").at("x"))
                << ',' << words(c.at("kernel").at("d")) << '\n';
        }
    }
    return out.str();
}

} // namespace crosscap::cli
