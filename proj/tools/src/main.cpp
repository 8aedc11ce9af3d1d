// Command line front end. Verbs:
//
//   torsion      does the pure mapping class group contain order-p torsion?
//   solutions    all branch data (h, t) for the covering equation
//   classes      conjugacy classes of order-p subgroups with representatives
//   verify       cross-check move orbits against congruence classes
//   cohomology   p-primary Farrell cohomology pattern for genus p, k points
//   liftability  which slides lift through the order-p cyclic cover
//   selftest     run the built-in cross-checks
//
// Exit codes: 0 success, 1 usage or validation error, 2 a verification or
// selftest reported FAIL, 3 state budget exceeded.

#include "crosscap_cli/cache.hpp"
#include "crosscap_cli/report.hpp"

#include "crosscap/surface_kernel.hpp"
#include "crosscap/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

struct OutputFlags {
    bool as_json = false;
    bool as_csv = false;
    bool no_cache = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags, bool with_csv = false) {
    CLI::Option* json_opt = cmd->add_flag("--json", flags.as_json, "emit the JSON envelope");
    if (with_csv) {
        cmd->add_flag("--csv", flags.as_csv, "emit one CSV row per class")->excludes(json_opt);
    }
    cmd->add_flag("--no-cache", flags.no_cache, "skip reading and writing the query cache");
}

int run_query(const std::string& command, const json& params, const OutputFlags& flags,
              const std::function<json()>& compute) {
    std::optional<json> result;
    if (!flags.no_cache) result = crosscap::cli::cache_lookup(command, params);
    const bool fresh = !result.has_value();
    if (fresh) result = compute();
    if (fresh && !flags.no_cache) crosscap::cli::cache_store(command, params, *result);

    const json envelope = crosscap::cli::make_envelope(command, params, *result);
    if (flags.as_csv) {
        std::cout << crosscap::cli::render_classes_csv(envelope);
    } else if (flags.as_json) {
        std::cout << envelope.dump(2) << '\n';
    } else {
        std::cout << crosscap::cli::render_text(envelope);
    }
    if (result->contains("pass") && !result->at("pass").get<bool>()) return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"order-p subgroups of pure mapping class groups of non-orientable surfaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", crosscap::kVersion);

    int exit_code = 0;

    // The branch-data options are spelled --h and --t, so the subcommands
    // cannot keep the default -h short flag for help.
    const auto verb = [&app](const std::string& name, const std::string& description) {
        CLI::App* cmd = app.add_subcommand(name, description);
        cmd->set_help_flag("--help", "print help and exit");
        return cmd;
    };

    struct {
        int g = 0, k = 0, p = 0;
        OutputFlags out;
    } tor;
    CLI::App* torsion = verb("torsion", "decide existence of order-p torsion");
    torsion->add_option("--g", tor.g, "non-orientable genus, at least 3")->required();
    torsion->add_option("--k", tor.k, "marked points")->capture_default_str();
    torsion->add_option("--p", tor.p, "odd prime")->required();
    add_output_flags(torsion, tor.out);
    torsion->callback([&] {
        const json params{{"g", tor.g}, {"k", tor.k}, {"p", tor.p}};
        exit_code = run_query("torsion", params, tor.out, [&] {
            return crosscap::cli::torsion_result(tor.g, tor.k, tor.p);
        });
    });

    struct {
        int g = 0, k = 0, p = 0;
        OutputFlags out;
    } sol;
    CLI::App* solutions = verb("solutions", "list all covering branch data (h, t)");
    solutions->add_option("--g", sol.g, "non-orientable genus, at least 3")->required();
    solutions->add_option("--k", sol.k, "marked points")->capture_default_str();
    solutions->add_option("--p", sol.p, "odd prime")->required();
    add_output_flags(solutions, sol.out);
    solutions->callback([&] {
        const json params{{"g", sol.g}, {"k", sol.k}, {"p", sol.p}};
        exit_code = run_query("solutions", params, sol.out, [&] {
            return crosscap::cli::solutions_result(sol.g, sol.k, sol.p);
        });
    });

    struct {
        int g = 0, k = 0, p = 0;
        std::optional<int> h, t;
        OutputFlags out;
    } cls;
    CLI::App* classes =
        verb("classes", "conjugacy classes of order-p subgroups per branch data");
    classes->add_option("--g", cls.g, "non-orientable genus, at least 3")->required();
    classes->add_option("--k", cls.k, "marked points")->capture_default_str();
    classes->add_option("--p", cls.p, "odd prime")->required();
    classes->add_option("--h", cls.h, "restrict to this orbit genus");
    classes->add_option("--t", cls.t, "restrict to this number of cone points");
    add_output_flags(classes, cls.out, /*with_csv=*/true);
    classes->callback([&] {
        json params{{"g", cls.g}, {"k", cls.k}, {"p", cls.p}};
        if (cls.h) params["h"] = *cls.h;
        if (cls.t) params["t"] = *cls.t;
        exit_code = run_query("classes", params, cls.out, [&] {
            return crosscap::cli::classes_result(cls.g, cls.k, cls.p, cls.h, cls.t);
        });
    });

    struct {
        int p = 0, h = 0, t = 0, k = 0;
        std::int64_t budget = crosscap::kDefaultStateBudget;
        OutputFlags out;
    } ver;
    CLI::App* verify =
        verb("verify", "cross-check move orbits against congruence classes");
    verify->add_option("--p", ver.p, "odd prime")->required();
    verify->add_option("--h", ver.h, "orbit genus, at least 1")->required();
    verify->add_option("--t", ver.t, "cone points, at least 1")->required();
    verify->add_option("--k", ver.k, "marked points")->capture_default_str();
    verify->add_option("--budget", ver.budget, "state budget for the orbit search")
        ->capture_default_str();
    add_output_flags(verify, ver.out);
    verify->callback([&] {
        const json params{
            {"p", ver.p}, {"h", ver.h}, {"t", ver.t}, {"k", ver.k}, {"budget", ver.budget}};
        exit_code = run_query("verify", params, ver.out, [&] {
            return crosscap::cli::verify_result(ver.p, ver.h, ver.t, ver.k, ver.budget);
        });
    });

    struct {
        int p = 0, k = 0;
        OutputFlags out;
    } coh;
    CLI::App* cohomology = verb(
        "cohomology", "p-primary Farrell cohomology for genus p with k marked points");
    cohomology->add_option("--p", coh.p, "odd prime, also the genus")->required();
    cohomology->add_option("--k", coh.k, "marked points, at least 1")->required();
    add_output_flags(cohomology, coh.out);
    cohomology->callback([&] {
        const json params{{"k", coh.k}, {"p", coh.p}};
        exit_code = run_query("cohomology", params, coh.out, [&] {
            return crosscap::cli::cohomology_result(coh.p, coh.k);
        });
    });

    struct {
        int p = 0;
        OutputFlags out;
    } lift;
    CLI::App* liftability =
        verb("liftability", "slides lifting through the order-p cyclic cover");
    liftability->add_option("--p", lift.p, "odd prime")->required();
    add_output_flags(liftability, lift.out);
    liftability->callback([&] {
        const json params{{"p", lift.p}};
        exit_code = run_query("liftability", params, lift.out, [&] {
            return crosscap::cli::liftability_result(lift.p);
        });
    });

    struct {
        OutputFlags out;
    } self;
    CLI::App* selftest = verb("selftest", "run the built-in cross-checks");
    selftest->add_flag("--json", self.out.as_json, "emit the JSON envelope");
    selftest->callback([&] {
        self.out.no_cache = true; // a self-check replayed from a cache checks nothing
        exit_code = run_query("selftest", json::object(), self.out,
                              [] { return crosscap::cli::selftest_result(); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const crosscap::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
