#include "crosscap_cli/cache.hpp"

#include "crosscap/version.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <string>
#include <system_error>

namespace crosscap::cli {

using nlohmann::json;

namespace {

const char* env_nonempty(const char* name) {
    const char* v = std::getenv(name);
    return (v != nullptr && *v != '\0') ? v : nullptr;
}

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::optional<std::filesystem::path> cache_dir() {
    if (const char* v = env_nonempty("CROSSCAP_CACHE_DIR")) {
        return std::filesystem::path(v);
    }
    if (const char* v = env_nonempty("XDG_CACHE_HOME")) {
        return std::filesystem::path(v) / "crosscap";
    }
    if (const char* v = env_nonempty("HOME")) {
        return std::filesystem::path(v) / ".cache" / "crosscap";
    }
    return std::nullopt;
}

std::optional<json> cache_lookup(const std::string& command, const json& params) {
    const auto dir = cache_dir();
    if (!dir) return std::nullopt;
    std::ifstream in(*dir / "queries.jsonl");
    if (!in) return std::nullopt;

    std::optional<json> hit;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        // Tolerate torn or foreign lines: a cache miss is always safe.
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object()) continue;
        if (rec.value("command", "") != command) continue;
        if (rec.value("version", "") != std::string(kVersion)) continue;
        if (!rec.contains("params") || rec["params"] != params) continue;
        if (!rec.contains("result")) continue;
        hit = rec["result"];
    }
    return hit;
}

void cache_store(const std::string& command, const json& params, const json& result) {
    const auto dir = cache_dir();
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) return;
    std::ofstream out(*dir / "queries.jsonl", std::ios::app);
    if (!out) return;
    const json rec{
        {"command", command},
        {"params", params},
        {"result", result},
        {"timestamp", now_utc()},
        {"version", kVersion},
    };
    out << rec.dump() << '\n';
}

} // namespace crosscap::cli
