#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include "json.hpp"
#include "ppa/ideal.hpp"

namespace ppacli {

using nlohmann::json;

// Exit codes: 0 success, 1 domain error or failed verification, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Indented plain-text rendering of a result object, fields in the same order as the JSON.
std::string render_text(const json& j);

// Engines keyed by (type, weight, cap); optionally persisted under a directory.
class EngineCache {
public:
    explicit EngineCache(std::optional<std::filesystem::path> dir = std::nullopt) : dir_(std::move(dir)) {}
    const ppa::IdealEngine& get(const ppa::ExtDynkinType& t, const ppa::Weight& lambda, int cap);
    long disk_hits() const { return disk_hits_; }

private:
    std::optional<std::filesystem::path> dir_;
    std::map<std::string, std::unique_ptr<ppa::IdealEngine>> mem_;
    long disk_hits_ = 0;
};

struct VerifyOptions {
    std::string suite = "all";
    int cap = 24;
    unsigned seed = 1;
    long samples = 1000;
};

json verify_suite(const VerifyOptions& opt, EngineCache& cache);

}  // namespace ppacli
