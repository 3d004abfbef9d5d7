#include <algorithm>
#include <random>

#include "cli.hpp"
#include "ppa/graded.hpp"
#include "ppa/intersection.hpp"
#include "ppa/knitting.hpp"
#include "ppa/reference.hpp"
#include "ppa/singularity.hpp"

namespace ppacli {

using namespace ppa;

namespace {

struct Fixture {
    std::string id;
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::vector<DynkinType> dynkin_types() {
    std::vector<DynkinType> v;
    for (int n = 1; n <= 8; ++n) v.push_back(DynkinType::make(Family::A, n));
    for (int n = 4; n <= 8; ++n) v.push_back(DynkinType::make(Family::D, n));
    for (int n = 6; n <= 8; ++n) v.push_back(DynkinType::make(Family::E, n));
    return v;
}

std::vector<ExtDynkinType> extended_types() {
    std::vector<ExtDynkinType> v;
    for (int n = 2; n <= 8; ++n) v.push_back(ExtDynkinType::make(Family::A, n));
    for (int n = 4; n <= 8; ++n) v.push_back(ExtDynkinType::make(Family::D, n));
    for (int n = 6; n <= 8; ++n) v.push_back(ExtDynkinType::make(Family::E, n));
    return v;
}

Fixture dims_fixture(const DynkinType& t, std::vector<std::string>& errata) {
    Fixture f{"dims/" + t.name()};
    auto g = graded_dims_pi(t);
    auto H = hom_matrix(g, t.n);
    const long n = t.n;
    if (g.total != expected_dim_pi(t)) f.fail("total " + std::to_string(g.total));
    auto row = [&](long i) { return static_cast<long>(H.row(i - 1).sum()); };
    if (t.family == Family::A) {
        if (g.total != n * (n + 1) * (n + 2) / 6) f.fail("total differs from n(n+1)(n+2)/6");
        for (long i = 1; i <= n; ++i)
            if (row(i) != i * (n + 1 - i)) f.fail("dim U_" + std::to_string(i));
    } else if (t.family == Family::D) {
        if (g.total != n * (n - 1) * (2 * n - 1) / 3) f.fail("total differs from n(n-1)(2n-1)/3");
        for (long i = 1; i <= n; ++i) {
            long want = i <= n - 2 ? 2 * n * i - i * (i + 1) : n * (n - 1) / 2;
            if (row(i) != want) f.fail("dim U_" + std::to_string(i));
        }
    } else {
        if (g.total != printed_total(t.n)) f.fail("total differs from the printed value");
        auto u = printed_u_dims(t.n);
        for (long i = 1; i <= n; ++i)
            if (row(i) != u[i - 1]) f.fail("dim U_" + std::to_string(i));
        Eigen::MatrixXi P = printed_hom_matrix(t.n);
        for (const auto& e : hom_matrix_errata()) {
            if (e.n != t.n) continue;
            if (P(e.row - 1, e.col - 1) != e.printed || H(e.row - 1, e.col - 1) != e.corrected) {
                f.fail("erratum entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ") not as recorded");
                continue;
            }
            P(e.row - 1, e.col - 1) = e.corrected;
            errata.push_back("dims/" + t.name() + ": printed H(" + std::to_string(e.row) + "," + std::to_string(e.col) +
                             ") = " + std::to_string(e.printed) + ", computed " + std::to_string(e.corrected));
        }
        if (H != P) f.fail("Hom matrix differs from the printed matrix");
    }
    f.detail = f.pass ? "total " + std::to_string(g.total) : f.detail;
    return f;
}

Fixture knitting_fixture(const SequenceFixture& s) {
    Fixture f{"knitting/" + s.id};
    try {
        auto r = knit(s.type, s.knitting_set(), s.target);
        if (r.kernel != s.kernel) f.fail("kernel " + std::to_string(r.kernel));
        if (r.middle() != s.middle) f.fail("middle multiset differs");
        auto m = extract_maps(r);
        if (!m.verification.certified) f.fail("extracted maps not certified");
        if (f.pass) f.detail = "maps by " + map_status_name(m.status);
    } catch (const std::exception& e) {
        f.fail(e.what());
    }
    return f;
}

bool certified_with_checks(const LabelledDoubleQuiver& q, const IdealEngine& e, const PathMatrix& psi,
                           const PathMatrix& phi) {
    auto r = verify_zero_product(e, psi, phi);
    if (!r.certified) return false;
    std::size_t k = 0;
    for (const auto& row : r.product)
        for (const auto& x : row)
            if (!check_certificate(q, e.weight(), r.certificates[k++], x)) return false;
    return true;
}

Fixture maps_fixture(const MapFixture& m, int cap, EngineCache& cache, std::vector<std::string>& errata) {
    Fixture f{"maps/" + m.id};
    const auto& t = m.sequence.type;
    auto q = build_extended(t);
    const Weight zero = Weight::Constant(t.vertex_count(), FieldElem(0));
    const Weight comp = component_weight(m.sequence);
    try {
        PathMatrix psi = parse_matrix(q, {m.used_psi()});
        std::vector<std::vector<std::string>> col;
        for (const auto& s : m.used_phi()) col.push_back({s});
        PathMatrix phi = parse_matrix(q, col);
        if (!certified_with_checks(q, cache.get(t, zero, cap), psi, phi)) f.fail("not certified at lambda = 0");
        if (!certified_with_checks(q, cache.get(t, comp, cap), psi, phi))
            f.fail("not certified at weight " + format_weight(comp));
    } catch (const std::exception& e) {
        f.fail(e.what());
    }
    if (m.has_erratum()) {
        bool printed_fails = false;
        try {
            PathMatrix psi = parse_matrix(q, {m.psi});
            std::vector<std::vector<std::string>> col;
            for (const auto& s : m.phi) col.push_back({s});
            PathMatrix phi = parse_matrix(q, col);
            printed_fails = !verify_zero_product(cache.get(t, zero, cap), psi, phi).certified;
        } catch (const ParseError&) {
            printed_fails = true;
        }
        if (!printed_fails) f.fail("printed pair certifies although an erratum is recorded");
        errata.push_back("maps/" + m.id + ": " + m.erratum);
        f.detail = f.pass ? "corrected pair certified" : f.detail;
    } else if (f.pass) {
        f.detail = "certified at both weights";
    }
    return f;
}

Fixture intersection_fixture(const ExtDynkinType& t) {
    Fixture f{"intersection/" + t.name()};
    try {
        auto q = build_extended(t);
        auto G = intersection_matrix(t);
        if (G != -cartan(t).C) f.fail("gamma differs from -C");
        for (int i = 1; i <= t.n; ++i)
            for (int j = 1; j <= t.n; ++j) {
                ExtTriple want = i == j ? ExtTriple{1, 0, 1} : q.adjacent(i, j) ? ExtTriple{0, 1, 0} : ExtTriple{};
                if (ext_dims(t, i, j) != want) f.fail("ext triple at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
    } catch (const std::exception& e) {
        f.fail(e.what());
    }
    return f;
}

std::vector<Fixture> translation_fixtures(unsigned seed, long samples) {
    std::vector<Fixture> out;
    Fixture ex{"translation/~A5-example"};
    auto d = q_lambda_decompose(ExtDynkinType::make(Family::A, 5), integer_weight({1, 0, 1, 0, 0, 0}));
    if (descriptor(d).names() != std::vector<std::string>{"A1", "A3"}) ex.fail("descriptor");
    if (translation_permutation(d) != VertexPermutation{{1, 1}, {3, 5}, {4, 4}, {5, 3}}) ex.fail("permutation");
    out.push_back(ex);

    Fixture rnd{"translation/random"};
    std::mt19937 rng(seed);
    auto types = extended_types();
    for (long k = 0; k < samples; ++k) {
        auto t = types[rng() % types.size()];
        std::vector<long> w(t.vertex_count());
        w[0] = static_cast<long>(rng() % 7) - 3;
        for (int i = 1; i <= t.n; ++i) w[i] = rng() % 3 == 0 ? static_cast<long>(rng() % 4) : 0;
        auto dd = q_lambda_decompose(t, integer_weight(w));
        auto pi = translation_permutation(dd);
        std::size_t total = 0;
        bool ok = is_involution(pi) && preserves_adjacency(full_subquiver(build_extended(t), dd.I), pi);
        for (const auto& c : dd.components) {
            total += c.vertices.size();
            for (int v : c.vertices)
                ok = ok && std::find(c.vertices.begin(), c.vertices.end(), pi.at(v)) != c.vertices.end();
        }
        ok = ok && total == dd.I.size();
        if (!ok) {
            rnd.fail(t.name() + " weight " + format_weight(integer_weight(w)));
            break;
        }
    }
    if (rnd.pass) rnd.detail = std::to_string(samples) + " samples, seed " + std::to_string(seed);
    out.push_back(rnd);
    return out;
}

}  // namespace

json verify_suite(const VerifyOptions& opt, EngineCache& cache) {
    std::vector<Fixture> fx;
    std::vector<std::string> errata;
    auto want = [&](const char* s) { return opt.suite == "all" || opt.suite == s; };
    if (want("dims"))
        for (const auto& t : dynkin_types()) fx.push_back(dims_fixture(t, errata));
    if (want("knitting"))
        for (const auto& s : all_sequences()) fx.push_back(knitting_fixture(s));
    if (want("maps"))
        for (const auto& m : map_fixtures()) fx.push_back(maps_fixture(m, opt.cap, cache, errata));
    if (want("intersection"))
        for (const auto& t : extended_types()) fx.push_back(intersection_fixture(t));
    if (want("translation"))
        for (auto& f : translation_fixtures(opt.seed, opt.samples)) fx.push_back(std::move(f));

    std::sort(fx.begin(), fx.end(), [](const Fixture& a, const Fixture& b) { return a.id < b.id; });
    std::sort(errata.begin(), errata.end());
    json list = json::array();
    long failed = 0;
    for (const auto& f : fx) {
        list.push_back({{"id", f.id}, {"pass", f.pass}, {"detail", f.detail}});
        failed += !f.pass;
    }
    return {{"command", "verify"},
            {"suite", opt.suite},
            {"cap", opt.cap},
            {"seed", opt.seed},
            {"fixtures", list},
            {"passed", static_cast<long>(fx.size()) - failed},
            {"failed", failed},
            {"errata", errata}};
}

}  // namespace ppacli
