#pragma once

// Query evaluation and rendering for the command line tool. Every verb is
// split into a pure result builder (library calls in, JSON out) and
// renderers that work from the JSON alone, so cached and freshly computed
// queries print byte-identically.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace crosscap::cli {

nlohmann::json torsion_result(int g, int k, int p);
nlohmann::json solutions_result(int g, int k, int p);
nlohmann::json classes_result(int g, int k, int p, std::optional<int> only_h,
                              std::optional<int> only_t);
nlohmann::json verify_result(int p, int h, int t, int k, std::int64_t budget);
nlohmann::json cohomology_result(int p, int k);
nlohmann::json liftability_result(int p);
nlohmann::json selftest_result();

// {"command", "params", "result", "version"}. Objects dump with keys in
// alphabetical order, so equal queries print identically byte for byte.
nlohmann::json make_envelope(const std::string& command, nlohmann::json params,
                             nlohmann::json result);

std::string render_text(const nlohmann::json& envelope);

// classes only: one row per congruence class.
std::string render_classes_csv(const nlohmann::json& envelope);

} // namespace crosscap::cli
