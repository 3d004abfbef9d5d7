#include <cstdint>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace ppacli {

namespace {

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

const ppa::IdealEngine& EngineCache::get(const ppa::ExtDynkinType& t, const ppa::Weight& lambda, int cap) {
    const std::string key = t.name() + "|" + ppa::format_weight(lambda) + "|" + std::to_string(cap);
    auto it = mem_.find(key);
    if (it != mem_.end()) return *it->second;
    auto q = ppa::build_extended(t);
    std::unique_ptr<ppa::IdealEngine> e;
    std::filesystem::path file;
    if (dir_) {
        file = *dir_ / ("ideal-v1-" + fnv1a(key) + ".basis");
        std::ifstream in(file);
        std::string stored;
        if (in && std::getline(in, stored) && stored == key) {
            try {
                e = std::make_unique<ppa::IdealEngine>(ppa::IdealEngine::load(q, lambda, cap, in));
                ++disk_hits_;
            } catch (const ppa::ParseError&) {
                e.reset();
            }
        }
    }
    if (!e) {
        e = std::make_unique<ppa::IdealEngine>(q, lambda, cap);
        if (dir_) {
            std::filesystem::create_directories(*dir_);
            std::ofstream os(file);
            os << key << '\n';
            e->save(os);
        }
    }
    return *mem_.emplace(key, std::move(e)).first->second;
}

}  // namespace ppacli
