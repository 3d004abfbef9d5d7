// One line per acceptance criterion. Failures caused only by inconsistencies in the printed reference
// data are reported as FAIL but do not change the exit status; anything else does.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ppa/graded.hpp"
#include "ppa/intersection.hpp"
#include "ppa/knitting.hpp"
#include "ppa/reference.hpp"
#include "ppa/singularity.hpp"
#include "ppa/typea.hpp"

using namespace ppa;

namespace {

struct Outcome {
    bool pass = true;
    bool only_printed_errata = true;  // every failure is a documented inconsistency of the printed data
    std::vector<std::string> notes;

    void fail(const std::string& why, bool erratum = false) {
        pass = false;
        only_printed_errata = only_printed_errata && erratum;
        notes.push_back(why);
    }
};

std::vector<ExtDynkinType> extended_types() {
    std::vector<ExtDynkinType> v;
    for (int n = 2; n <= 8; ++n) v.push_back(ExtDynkinType::make(Family::A, n));
    for (int n = 4; n <= 8; ++n) v.push_back(ExtDynkinType::make(Family::D, n));
    for (int n = 6; n <= 8; ++n) v.push_back(ExtDynkinType::make(Family::E, n));
    return v;
}

// Every certificate emitted anywhere in this run, with what it should expand to.
struct Emitted {
    LabelledDoubleQuiver q;
    Weight lambda;
    MembershipCertificate cert;
    PathElement target;
};
std::vector<Emitted> emitted;

void record(const LabelledDoubleQuiver& q, const Weight& lam, const ZeroProductResult& r) {
    std::size_t k = 0;
    for (const auto& row : r.product)
        for (const auto& x : row) {
            if (k >= r.certificates.size()) return;
            emitted.push_back({q, lam, r.certificates[k++], x});
        }
}

std::string str(long x) { return std::to_string(x); }

Outcome dims() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        auto t = DynkinType::make(Family::A, n);
        auto g = graded_dims_pi(t);
        auto H = hom_matrix(g, n);
        if (g.total != n * (n + 1) * (n + 2) / 6) o.fail("dim Pi(" + t.name() + ")");
        for (int i = 1; i <= n; ++i)
            if (H.row(i - 1).sum() != i * (n + 1 - i)) o.fail("dim U_" + str(i) + " of " + t.name());
    }
    for (int n = 4; n <= 8; ++n) {
        auto t = DynkinType::make(Family::D, n);
        auto g = graded_dims_pi(t);
        auto H = hom_matrix(g, n);
        if (g.total != n * (n - 1) * (2 * n - 1) / 3) o.fail("dim Pi(" + t.name() + ")");
        for (int i = 1; i <= n; ++i) {
            long want = i <= n - 2 ? 2L * n * i - i * (i + 1) : n * (n - 1) / 2;
            if (H.row(i - 1).sum() != want) o.fail("dim U_" + str(i) + " of " + t.name());
        }
    }
    const long totals[] = {156, 399, 1240};
    for (int n = 6; n <= 8; ++n) {
        auto t = DynkinType::make(Family::E, n);
        auto g = graded_dims_pi(t);
        auto H = hom_matrix(g, n);
        auto P = printed_hom_matrix(n);
        auto u = printed_u_dims(n);
        if (g.total != totals[n - 6]) o.fail("dim Pi(" + t.name() + ") = " + str(g.total));
        for (int i = 1; i <= n; ++i)
            if (H.row(i - 1).sum() != u[i - 1]) o.fail("dim U_" + str(i) + " of " + t.name());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (H(i, j) == P(i, j)) continue;
                // printed entry contradicted by the printed matrix's own symmetry and printed row sum
                long printed_row = P.row(i).sum();
                bool inconsistent = P(j, i) == H(i, j) && printed_row - P(i, j) + P(j, i) == u[i] && printed_row != u[i];
                o.fail("printed H(" + t.name() + ")(" + str(i + 1) + "," + str(j + 1) + ") = " + str(P(i, j)) +
                           ", computed " + str(H(i, j)) + (inconsistent ? " (printed (" + str(j + 1) + "," + str(i + 1) +
                                                                               ") = " + str(P(j, i)) + " and printed U_" +
                                                                               str(i + 1) + " = " + str(u[i]) + " agree with the computed value)"
                                                                         : ""),
                       inconsistent);
            }
    }
    return o;
}

Outcome knitting() {
    Outcome o;
    long n = 0;
    for (const auto& s : all_sequences()) {
        auto r = knit(s.type, s.knitting_set(), s.target);
        if (r.kernel != s.kernel || r.middle() != s.middle) o.fail(s.id);
        auto m = extract_maps(r);
        if (m.verification.certified)
            record(build_extended(s.type), Weight::Constant(s.type.vertex_count(), FieldElem(0)), m.verification);
        ++n;
    }
    o.notes.insert(o.notes.begin(), str(n) + " sequences");
    return o;
}

PathMatrix column(const LabelledDoubleQuiver& q, const std::vector<std::string>& entries) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : entries) rows.push_back({s});
    return parse_matrix(q, rows);
}

Outcome zero_products() {
    Outcome o;
    long pairs = 0;
    for (const auto& m : map_fixtures()) {
        const auto& t = m.sequence.type;
        auto q = build_extended(t);
        const Weight zero = Weight::Constant(t.vertex_count(), FieldElem(0));
        const Weight comp = component_weight(m.sequence);
        auto certify = [&](const std::vector<std::string>& psi, const std::vector<std::string>& phi, const Weight& lam) {
            try {
                auto r = verify_zero_product(q, lam, parse_matrix(q, {psi}), column(q, phi), 24);
                if (r.certified) record(q, lam, r);
                return r.certified;
            } catch (const ParseError&) {
                return false;
            }
        };
        for (const Weight* lam : {&zero, &comp}) {
            ++pairs;
            if (certify(m.psi, m.phi, *lam)) continue;
            // the printed pair fails; a documented correction must certify in its place
            bool corrected = m.has_erratum() && certify(m.corrected_psi, m.corrected_phi, *lam);
            o.fail(m.id + " as printed at weight " + format_weight(*lam) +
                       (corrected ? " (corrected pair certifies: " + m.erratum + ")" : ""),
                   corrected);
        }
    }
    o.notes.insert(o.notes.begin(), str(pairs) + " pair checks at cap 24");
    return o;
}

Outcome intersection() {
    Outcome o;
    for (auto t : extended_types()) {
        auto q = build_extended(t);
        if (intersection_matrix(t) != -cartan(t).C) o.fail(t.name());
        for (int i = 1; i <= t.n; ++i)
            for (int j = 1; j <= t.n; ++j) {
                ExtTriple want = i == j ? ExtTriple{1, 0, 1} : q.adjacent(i, j) ? ExtTriple{0, 1, 0} : ExtTriple{};
                if (ext_dims(t, i, j) != want) o.fail(t.name() + " ext(" + str(i) + "," + str(j) + ")");
            }
    }
    return o;
}

Outcome translation() {
    Outcome o;
    auto d = q_lambda_decompose(ExtDynkinType::make(Family::A, 5), integer_weight({2, 0, 1, 0, 0, 0}));
    if (descriptor(d).names() != std::vector<std::string>{"A1", "A3"}) o.fail("~A5 components");
    if (translation_permutation(d) != VertexPermutation{{1, 1}, {3, 5}, {4, 4}, {5, 3}}) o.fail("~A5 permutation");
    std::mt19937 rng(20240601);
    auto types = extended_types();
    for (int k = 0; k < 1000; ++k) {
        auto t = types[rng() % types.size()];
        Weight w(t.vertex_count());
        w(0) = FieldElem(Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
        for (int i = 1; i <= t.n; ++i)
            w(i) = rng() % 3 ? FieldElem(0) : FieldElem(Rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 2)));
        auto dd = q_lambda_decompose(t, w);
        auto pi = translation_permutation(dd);
        auto q = build_extended(t);
        std::size_t total = 0;
        bool ok = is_involution(pi) && preserves_adjacency(full_subquiver(q, dd.I), pi) && pi.size() == dd.I.size();
        for (const auto& c : dd.components) {
            total += c.vertices.size();
            for (int v : c.vertices) ok = ok && std::count(c.vertices.begin(), c.vertices.end(), pi.at(v)) == 1;
        }
        if (!ok || total != dd.I.size()) o.fail(t.name() + " " + format_weight(w));
    }
    return o;
}

Outcome numbers_game() {
    Outcome o;
    for (auto t : extended_types()) {
        auto start = std::chrono::steady_clock::now();
        auto r = resolve_to_smooth(t);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > 10) o.fail(t.name() + " took " + std::to_string(secs) + " s");
        if (dot_delta(t, r.weight) != FieldElem(1)) o.fail(t.name() + " mu.delta");
        for (int i = 1; i <= t.n; ++i)
            if (!(FieldElem(0) < r.weight(i))) o.fail(t.name() + " mu_" + str(i));
        if (apply_reflections(t, epsilon(t, 0), r.sequence) != r.weight) o.fail(t.name() + " sequence");
    }
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::A, 4}, {Family::A, 6}, {Family::D, 4},
                                                           {Family::D, 5}, {Family::D, 8}, {Family::E, 6}, {Family::E, 8}}) {
        auto t = ExtDynkinType::make(f, n);
        Weight target = schedler_config(t, std::vector<long>(n, 1));
        auto seq = reach_from_epsilon0(t, target);
        if (!seq || apply_reflections(t, epsilon(t, 0), *seq) != target) o.fail("Schedler " + t.name());
    }
    return o;
}

Outcome type_a() {
    Outcome o;
    auto a3 = ExtDynkinType::make(Family::A, 3);
    auto comm = presentation(3, integer_weight({-1, 0, 0, 1}));
    auto nc = presentation(3, integer_weight({0, 0, 0, 1}));
    if (comm.xy.str() != "z^4 + z^3") o.fail("xy = " + comm.xy.str());
    if (!comm.commutative()) o.fail("xz = zx");
    if (nc.shift != FieldElem(1)) o.fail("xz = (z+1)x");
    Polynomial want = Polynomial::linear(FieldElem(0));
    for (int k = 0; k < 3; ++k) want = want * Polynomial::linear(FieldElem(-1));
    if (!(nc.yx == want)) o.fail("yx = " + nc.yx.str());
    if (!equivalent(q_lambda_decompose(a3, integer_weight({-1, 0, 0, 1})), q_lambda_decompose(a3, integer_weight({0, 0, 0, 1}))))
        o.fail("descriptor equivalence");
    // type-A sequence maps also emit certificates
    for (int n = 2; n <= 5; ++n) {
        auto q = build_extended(ExtDynkinType::make(Family::A, n));
        Weight lam = Weight::Constant(n + 1, FieldElem(0));
        for (int i = 0; i <= n; ++i)
            for (int j = i + 2; j <= n + 1; ++j)
                for (int k = i + 1; k < j; ++k) {
                    auto [psi, phi] = type_a_maps(type_a_sequence(n, lam, i, j, k));
                    auto r = verify_zero_product(q, lam, psi, phi, 2 * n + 4);
                    if (r.certified)
                        record(q, lam, r);
                    else
                        o.fail("~A" + str(n) + " sequence " + str(i) + "," + str(j) + "," + str(k));
                }
    }
    return o;
}

// Expansion written against relation() only.
PathElement expand(const LabelledDoubleQuiver& q, const Weight& lam, const MembershipCertificate& c) {
    PathElement out(c.source, c.target);
    for (const auto& t : c.terms) out += relation(q, lam, t.vertex).sandwich(t.left, c.source, t.right, c.target) * t.coeff;
    return out;
}

Outcome soundness() {
    Outcome o;
    // random members of the ideal, homogeneous and not
    std::mt19937 rng(77);
    for (auto t : {ExtDynkinType::make(Family::A, 3), ExtDynkinType::make(Family::D, 4), ExtDynkinType::make(Family::D, 5),
                   ExtDynkinType::make(Family::E, 6)}) {
        auto q = build_extended(t);
        for (const Weight& lam : {Weight(Weight::Constant(t.vertex_count(), FieldElem(0))), schedler_config(t, std::vector<long>(t.n, 1))}) {
            IdealEngine e(q, lam, 8);
            auto walk = [&](int from, int len, Word& w) {
                int at = from;
                for (int s = 0; s < len; ++s) {
                    auto ls = q.letters_from(at);
                    int l = ls[rng() % ls.size()];
                    w.push_back(static_cast<char>(l));
                    at = q.head(l);
                }
                return at;
            };
            for (int k = 0; k < 40; ++k) {
                int s = q.vertices()[rng() % q.vertices().size()];
                Word u;
                int v = walk(s, static_cast<int>(rng() % 3), u);
                Word w;
                int tt = walk(v, static_cast<int>(rng() % 3), w);
                PathElement f = relation(q, lam, v).sandwich(u, s, w, tt) * FieldElem(static_cast<long>(rng() % 5) + 1);
                // a second relation term with the same endpoints
                Word u2;
                int v2 = walk(s, static_cast<int>(rng() % 2), u2);
                for (int tries = 0; tries < 20; ++tries) {
                    Word w2;
                    if (walk(v2, static_cast<int>(w.size() + u.size() - u2.size()), w2) == tt) {
                        f += relation(q, lam, v2).sandwich(u2, s, w2, tt) * FieldElem(-2);
                        break;
                    }
                }
                if (f.is_zero()) continue;
                auto c = e.member(f);
                if (!c) {
                    o.fail("member not found in " + t.name());
                    continue;
                }
                emitted.push_back({q, lam, *c, f});
            }
        }
    }
    long good = 0;
    for (const auto& x : emitted)
        if (x.cert.terms.empty() ? x.target.is_zero() : expand(x.q, x.lambda, x.cert) == x.target) ++good;
    if (good != static_cast<long>(emitted.size())) o.fail(str(static_cast<long>(emitted.size()) - good) + " certificates do not expand");
    o.notes.insert(o.notes.begin(), str(good) + "/" + str(static_cast<long>(emitted.size())) + " certificates expand to the queried element");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"dimension suite", dims},
        {"knitting golden suite", knitting},
        {"zero-product certificates", zero_products},
        {"intersection matrix", intersection},
        {"translation and decomposition", translation},
        {"numbers game", numbers_game},
        {"type A presentation", type_a},
        {"certificate soundness", soundness},
    };
    int status = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].name << " ["
             << std::fixed;
        line.precision(1);
        line << secs << " s]";
        for (const auto& n : o.notes) line << " | " << n;
        std::cout << line.str() << std::endl;
        if (!o.pass && !o.only_printed_errata) status = 1;
    }
    return status;
}
