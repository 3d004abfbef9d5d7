#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppa/knitting.hpp"
#include "ppa/reference.hpp"

using namespace ppa;

static std::string describe(const SequenceFixture& f) {
    std::string s = f.id + ": " + std::to_string(f.kernel) + " ->";
    for (auto& [v, a] : f.middle) s += " " + std::to_string(v) + "^" + std::to_string(a);
    return s + " -> " + std::to_string(f.target);
}

TEST_CASE("sequence counts") {
    CHECK(e_sequences(6).size() == 26);
    CHECK(e_sequences(7).size() == 34);
    CHECK(e_sequences(8).size() == 43);
    for (int n = 4; n <= 8; ++n) CHECK(!d_sequences(n).empty());
}

TEST_CASE("knitting reproduces every listed sequence") {
    for (const auto& f : all_sequences()) {
        INFO(describe(f));
        KnitResult r;
        REQUIRE_NOTHROW(r = knit(f.type, f.knitting_set(), f.target));
        CHECK(r.kernel == f.kernel);
        CHECK(r.middle() == f.middle);
    }
}

TEST_CASE("middle vertices are adjacent to the subquiver") {
    for (const auto& f : all_sequences()) {
        INFO(describe(f));
        auto q = build_extended(f.type);
        auto sub = f.subquiver_vertices();
        CHECK(sub.count(f.kernel));
        CHECK(sub.count(f.target));
        for (auto& [v, a] : f.middle) {
            bool adj = false;
            for (int u : sub) adj = adj || q.adjacent(u, v);
            CHECK(adj);
        }
        auto comps = classify_components(q, sub);
        REQUIRE(comps.size() == 1);
        CHECK(family_char(comps[0].type.family) == f.subquiver);
    }
}

TEST_CASE("printed maps compose to zero") {
    for (const auto& m : map_fixtures()) {
        INFO(m.id);
        auto q = build_extended(m.sequence.type);
        PathMatrix psi = parse_matrix(q, {m.used_psi()});
        std::vector<std::vector<std::string>> col;
        for (auto& s : m.used_phi()) col.push_back({s});
        PathMatrix phi = parse_matrix(q, col);
        for (int k = 0; k < static_cast<int>(m.phi.size()); ++k) {
            CHECK(psi[0][k].source() == m.sequence.target);
            CHECK(phi[k][0].target() == m.sequence.kernel);
        }
        for (const Weight& lam : {Weight(Weight::Constant(m.sequence.type.vertex_count(), FieldElem(0))),
                                  component_weight(m.sequence)}) {
            auto r = verify_zero_product(q, lam, psi, phi, 24);
            CHECK(r.certified);
            if (r.certified)
                for (std::size_t k = 0; k < r.certificates.size(); ++k)
                    CHECK(check_certificate(q, lam, r.certificates[k], r.product[0][k]));
        }
    }
}

TEST_CASE("printed errata fail as printed") {
    int errata = 0;
    for (const auto& m : map_fixtures()) {
        if (!m.has_erratum()) continue;
        INFO(m.id);
        ++errata;
        auto q = build_extended(m.sequence.type);
        Weight zero = Weight::Constant(m.sequence.type.vertex_count(), FieldElem(0));
        bool composes = true;
        PathMatrix psi, phi;
        try {
            psi = parse_matrix(q, {m.psi});
            std::vector<std::vector<std::string>> col;
            for (auto& s : m.phi) col.push_back({s});
            phi = parse_matrix(q, col);
        } catch (const ParseError&) {
            composes = false;
        }
        if (!composes) continue;
        // a nonzero remainder modulo a basis complete up to the product degree is a proof of non-membership
        IdealEngine e(q, zero, 24);
        auto prod = multiply(psi, phi);
        CHECK(prod[0][0].degree() <= 24);
        CHECK(!e.reduce(prod[0][0]).is_zero());
    }
    CHECK(errata == 2);
}

TEST_CASE("maps extracted for every listed sequence are certified") {
    for (const auto& f : all_sequences()) {
        INFO(describe(f));
        auto m = extract_maps(knit(f.type, f.knitting_set(), f.target));
        CHECK(m.status != MapStatus::Unresolved);
        CHECK(m.verification.certified);
        long total = 0;
        for (auto& [v, a] : f.middle) total += a;
        CHECK(static_cast<long>(m.psi[0].size()) == total);
    }
}
