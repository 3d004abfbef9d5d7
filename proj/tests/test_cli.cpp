#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "cli.hpp"

using ppacli::json;

struct Run {
    int code;
    std::string out, err;
};

static Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ppa");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = ppacli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

static std::vector<std::string> numbers(const std::string& s) {
    std::vector<std::string> out;
    std::regex num("-?[0-9]+(/[0-9]+)?");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
        out.push_back(it->str());
    return out;
}

static const std::vector<std::vector<std::string>> kCommands = {
    {"decompose", "--type", "~A5", "--weights", "0,0,1,0,0,0"},
    {"knit", "--type", "~D5", "--S", "0,5", "--target", "4", "--ascii"},
    {"knit", "--type", "~E7", "--S", "0,2", "--target", "1"},
    {"dims", "--type", "D5"},
    {"intersect", "--type", "~E8"},
    {"resolve", "--type", "~E6"},
    {"resolve", "--type", "~D5", "--weights", "1,-1,1/2,0,0,0"},
    {"presentation", "--type", "~A3", "--weights", "0,0,0,1"},
    {"verify", "--suite", "intersection"},
};

TEST_CASE("examples") {
    auto d = run(kCommands[0]);
    REQUIRE(d.code == 0);
    auto j = json::parse(d.out);
    CHECK(j["descriptor"] == json({"A1", "A3"}));
    CHECK(j["components"][1]["vertices"] == json({3, 4, 5}));
    CHECK(j["translation"] == json({{"1", 1}, {"3", 5}, {"4", 4}, {"5", 3}}));

    auto k = json::parse(run(kCommands[1]).out);
    CHECK(k["kernel"] == 1);
    CHECK(k["multiplicities"] == json({{"0", 1}, {"5", 1}}));
    CHECK(k["maps"]["certified"] == true);
    CHECK(k.contains("pattern"));

    auto g = json::parse(run(kCommands[4]).out);
    CHECK(g["gamma"][0] == json({-2, 1, 0, 0, 0, 0, 0, 0}));
    CHECK(g["gamma"][4] == json({0, 0, 0, 1, -2, 1, 0, 1}));

    auto p = json::parse(run(kCommands[7]).out);
    CHECK(p["relations"][2] == "xz = (z + 1)x");
    CHECK(p["relations"][1] == "yx = z^4 - 3*z^3 + 3*z^2 - z");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"decompose", "--type", "~A3"}).code == 2);
    CHECK(run({"decompose", "--type", "~B3", "--weights", "0,0,0,0"}).code == 2);
    CHECK(run({"decompose", "--type", "~A3", "--weights", "0,0,1"}).code == 2);
    CHECK(run({"knit", "--type", "~D5", "--S", "0,x", "--target", "4"}).code == 2);
    CHECK(run({"decompose", "--type", "~A3", "--weights", "1,-1,0,1", "--format", "yaml"}).code == 2);
    auto qd = run({"decompose", "--type", "~A3", "--weights", "1,-1,0,1"});
    CHECK(qd.code == 1);
    CHECK(qd.err.find("quasi-dominant") != std::string::npos);
    CHECK(run({"knit", "--type", "~D5", "--S", "5", "--target", "4"}).code == 1);
    CHECK(run({"knit", "--type", "~A5", "--S", "0,1", "--target", "3"}).code == 1);
    CHECK(run({"presentation", "--type", "~D4", "--weights", "0,0,0,0,0"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json round trip and text parity") {
    for (const auto& c : kCommands) {
        INFO(c[0]);
        auto r = run(c);
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
        auto args = c;
        args.push_back("--format");
        args.push_back("text");
        auto t = run(args);
        REQUIRE(t.code == 0);
        CHECK(numbers(t.out) == numbers(ppacli::render_text(json::parse(r.out))));
        // every number of the json output appears in the text, in order
        std::vector<std::string> from_json;
        std::function<void(const json&)> walk = [&](const json& j) {
            if (j.is_object())
                for (auto it = j.begin(); it != j.end(); ++it) {
                    for (auto& n : numbers(it.key())) from_json.push_back(n);
                    walk(it.value());
                }
            else if (j.is_array())
                for (auto& x : j) walk(x);
            else
                for (auto& n : numbers(j.is_string() ? j.get<std::string>() : j.dump())) from_json.push_back(n);
        };
        walk(json::parse(r.out));
        CHECK(numbers(t.out) == from_json);
    }
}

TEST_CASE("cache directory") {
    auto dir = std::filesystem::temp_directory_path() / "ppa-cli-cache-test";
    std::filesystem::remove_all(dir);
    ppacli::EngineCache a(dir);
    auto t = ppa::ExtDynkinType::make(ppa::Family::D, 4);
    auto lam = ppa::integer_weight({1, 0, 0, 0, 0});
    auto words = a.get(t, lam, 8).leading_words();
    ppacli::EngineCache b(dir);
    CHECK(b.get(t, lam, 8).leading_words() == words);
    CHECK(b.disk_hits() == 1);
    // a corrupted entry is recomputed
    for (auto& e : std::filesystem::directory_iterator(dir)) std::ofstream(e.path()) << "garbage";
    ppacli::EngineCache c(dir);
    CHECK(c.get(t, lam, 8).leading_words() == words);
    CHECK(c.disk_hits() == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify report is sorted and reproducible") {
    auto a = run({"verify", "--suite", "translation", "--seed", "7", "--samples", "200"});
    auto b = run({"verify", "--suite", "translation", "--seed", "7", "--samples", "200"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(run({"verify", "--suite", "knitting"}).out);
    CHECK(j["failed"] == 0);
    std::vector<std::string> ids;
    for (auto& f : j["fixtures"]) ids.push_back(f["id"]);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(ids.size() == 245);
}
