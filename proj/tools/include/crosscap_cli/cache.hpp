#pragma once

// Append-only query cache. Records live in queries.jsonl under the cache
// directory, one JSON object per line with fields command, params, result,
// timestamp, version. Lookups replay the file and keep the last record whose
// (command, params, version) triple matches, so the file never needs
// rewriting and interleaved appends from parallel runs stay readable.

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace crosscap::cli {

// CROSSCAP_CACHE_DIR, else XDG_CACHE_HOME/crosscap, else HOME/.cache/crosscap;
// empty when none of those variables are set.
std::optional<std::filesystem::path> cache_dir();

std::optional<nlohmann::json> cache_lookup(const std::string& command,
                                           const nlohmann::json& params);

void cache_store(const std::string& command, const nlohmann::json& params,
                 const nlohmann::json& result);

} // namespace crosscap::cli
