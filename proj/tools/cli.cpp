#include "cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "ppa/graded.hpp"
#include "ppa/intersection.hpp"
#include "ppa/knitting.hpp"
#include "ppa/singularity.hpp"
#include "ppa/typea.hpp"

namespace ppacli {

using namespace ppa;

namespace {

json weight_json(const Weight& w) {
    json a = json::array();
    for (Eigen::Index k = 0; k < w.size(); ++k) a.push_back(w(k).str());
    return a;
}

json matrix_json(const Eigen::MatrixXi& m) {
    json a = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        a.push_back(row);
    }
    return a;
}

json vertices_json(int n) {
    json a = json::array();
    for (int i = 1; i <= n; ++i) a.push_back(i);
    return a;
}

template <class Map>
json int_map_json(const Map& m) {
    json o = json::object();
    for (const auto& [k, v] : m) o[std::to_string(k)] = v;
    return o;
}

std::set<int> parse_vertex_set(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.insert(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad vertex '" + item + "' in '" + s + "'");
        }
    }
    return out;
}

json decompose_json(const ExtDynkinType& t, const Weight& lam) {
    auto d = q_lambda_decompose(t, lam);
    json comps = json::array();
    for (const auto& c : d.components) comps.push_back({{"type", c.type.name()}, {"vertices", c.vertices}});
    return {{"command", "decompose"},
            {"type", t.name()},
            {"weights", weight_json(lam)},
            {"I", std::vector<int>(d.I.begin(), d.I.end())},
            {"components", comps},
            {"descriptor", descriptor(d).names()},
            {"smooth", descriptor(d).smooth()},
            {"translation", int_map_json(translation_permutation(d))}};
}

json knit_json(const ExtDynkinType& t, const std::set<int>& S, int target, bool ascii) {
    auto r = knit(t, S, target);
    auto m = extract_maps(r);
    auto q = build_extended(t);
    json psi = json::array(), phi = json::array();
    for (const auto& e : m.psi.empty() ? std::vector<PathElement>{} : m.psi[0]) psi.push_back(format_element(q, e));
    for (const auto& row : m.phi) phi.push_back(format_element(q, row[0]));
    json out = {{"command", "knit"},
                {"type", t.name()},
                {"S", std::vector<int>(S.begin(), S.end())},
                {"target", target},
                {"kernel", r.kernel},
                {"columns", r.last_column},
                {"multiplicities", int_map_json(r.multiplicities)},
                {"maps",
                 {{"status", map_status_name(m.status)},
                  {"certified", m.verification.certified},
                  {"psi", psi},
                  {"phi", phi}}}};
    if (ascii) out["pattern"] = render_pattern(r.pattern);
    return out;
}

json dims_json(const DynkinType& t) {
    auto g = graded_dims_pi(t);
    auto H = hom_matrix(g, t.n);
    std::vector<long> u;
    for (int i = 0; i < t.n; ++i) u.push_back(H.row(i).sum());
    return {{"command", "dims"},
            {"type", t.name()},
            {"coxeter_number", t.coxeter_number()},
            {"total", g.total},
            {"formula_total", expected_dim_pi(t)},
            {"per_degree", g.per_degree},
            {"vertices", vertices_json(t.n)},
            {"hom_matrix", matrix_json(H)},
            {"row_sums", u}};
}

json intersect_json(const ExtDynkinType& t) {
    auto G = intersection_matrix(t);
    json ext = json::array();
    for (int i = 1; i <= t.n; ++i)
        for (int j = i; j <= t.n; ++j) {
            auto e = ext_dims(t, i, j);
            if (e == ExtTriple{}) continue;
            ext.push_back({{"i", i}, {"j", j}, {"dims", {e.hom, e.ext1, e.ext2}}});
        }
    return {{"command", "intersect"},
            {"type", t.name()},
            {"vertices", vertices_json(t.n)},
            {"gamma", matrix_json(G)},
            {"nonzero_ext", ext}};
}

json resolve_json(const ExtDynkinType& t, const std::optional<Weight>& lam) {
    if (!lam) {
        auto r = smooth_resolution(t);
        return {{"command", "resolve"},
                {"type", t.name()},
                {"mu", weight_json(r.mu)},
                {"reflections", r.reflections},
                {"mu_dot_delta", dot_delta(t, r.mu).str()},
                {"gamma", matrix_json(r.gamma)}};
    }
    auto r = quasi_dominantize(t, *lam);
    auto c = classify_weight(t, r.weight);
    json cls = {{"commutative", c.commutative}, {"quasi_dominant", c.quasi_dominant}, {"dominant", c.dominant}};
    if (c.singular) cls["singular"] = *c.singular;
    if (c.smooth) cls["smooth"] = *c.smooth;
    return {{"command", "resolve"},
            {"type", t.name()},
            {"weights", weight_json(*lam)},
            {"quasi_dominant", weight_json(r.weight)},
            {"reflections", r.sequence},
            {"class", cls}};
}

json presentation_json(const ExtDynkinType& t, const Weight& lam) {
    if (t.family != Family::A) throw DomainError("presentation is available for type ~A only");
    auto p = presentation(t.n, lam);
    auto twist = [&](const FieldElem& s) { return s.is_zero() ? std::string("z") : "(" + Polynomial::linear(s).str() + ")"; };
    json out = {{"command", "presentation"},
                {"type", t.name()},
                {"weights", weight_json(lam)},
                {"shift", p.shift.str()},
                {"commutative", p.commutative()},
                {"relations",
                 {"xy = " + p.xy.str(), "yx = " + p.yx.str(), "xz = " + twist(p.shift) + "x",
                  "yz = " + twist(-p.shift) + "y"}}};
    if (is_quasi_dominant(lam)) out["descriptor"] = descriptor(q_lambda_decompose(t, lam)).names();
    return out;
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, int indent, std::string& out) {
    const std::string pad(indent, ' ');
    auto inline_array = [](const json& a) {
        std::string s = "[";
        for (std::size_t k = 0; k < a.size(); ++k) s += (k ? ", " : "") + scalar_text(a[k]);
        return s + "]";
    };
    auto all_scalar = [](const json& a) {
        for (const auto& x : a)
            if (!is_scalar(x)) return false;
        return true;
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (is_scalar(v)) {
            std::string s = scalar_text(v);
            if (s.find('\n') == std::string::npos) {
                out += pad + it.key() + ": " + s + "\n";
            } else {
                out += pad + it.key() + ":\n";
                std::stringstream ss(s);
                for (std::string line; std::getline(ss, line);) out += pad + "  " + line + "\n";
            }
        } else if (v.is_object()) {
            out += pad + it.key() + ":\n";
            render(v, indent + 2, out);
        } else if (all_scalar(v)) {
            out += pad + it.key() + ": " + inline_array(v) + "\n";
        } else {
            out += pad + it.key() + ":\n";
            for (const auto& x : v) {
                if (x.is_array() && all_scalar(x)) {
                    out += pad + "  " + inline_array(x) + "\n";
                } else if (x.is_object()) {
                    std::string sub;
                    render(x, indent + 4, sub);
                    out += sub.replace(0, indent + 4, pad + "  - ");
                } else {
                    out += pad + "  - " + x.dump() + "\n";
                }
            }
        }
    }
}

ExtDynkinType ext_type(const std::string& s) {
    if (s.empty()) throw ParseError("--type is required");
    return ExtDynkinType::parse(s);
}

}  // namespace

std::string render_text(const json& j) {
    std::string out;
    render(j, 0, out);
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deformed preprojective algebras of extended Dynkin quivers"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "json", type, weights, S, cache_dir;
    int target = -1, cap = 24;
    unsigned seed = 1;
    long samples = 1000;
    bool ascii = false, exact = false;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cache_dir, "persist ideal bases here");
    app.add_flag("--exact", exact, "exact rational arithmetic (always on)");

    auto* dec = app.add_subcommand("decompose", "Q_lambda components, descriptor and translation permutation");
    dec->add_option("--type", type)->required();
    dec->add_option("--weights", weights)->required();

    auto* kn = app.add_subcommand("knit", "knitting sequence with kernel, multiplicities and maps");
    kn->add_option("--type", type)->required();
    kn->add_option("--S", S, "comma-separated vertex set containing 0")->required();
    kn->add_option("--target", target)->required();
    kn->add_flag("--ascii", ascii, "include the knitting pattern");

    auto* di = app.add_subcommand("dims", "graded dimensions and Hom matrix of Pi(Dynkin)");
    di->add_option("--type", type, "Dynkin type such as E6 (a leading ~ is ignored)")->required();

    auto* in = app.add_subcommand("intersect", "intersection matrix of the simples");
    in->add_option("--type", type)->required();

    auto* re = app.add_subcommand("resolve", "smooth weight by reflections, or quasi-dominantize --weights");
    re->add_option("--type", type)->required();
    re->add_option("--weights", weights);

    auto* pr = app.add_subcommand("presentation", "relations of the type ~A algebra");
    pr->add_option("--type", type)->required();
    pr->add_option("--weights", weights)->required();

    VerifyOptions vo;
    auto* ve = app.add_subcommand("verify", "run the reference fixtures");
    ve->add_option("--suite", vo.suite)
        ->check(CLI::IsMember({"dims", "knitting", "maps", "intersection", "translation", "all"}));
    ve->add_option("--cap", cap, "degree cap for ideal membership");
    ve->add_option("--seed", seed, "seed for randomized suites");
    ve->add_option("--samples", samples, "random samples for the translation suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    (void)exact;

    try {
        json result;
        int code = 0;
        if (*dec) {
            auto t = ext_type(type);
            result = decompose_json(t, parse_weight(t, weights));
        } else if (*kn) {
            result = knit_json(ext_type(type), parse_vertex_set(S), target, ascii);
        } else if (*di) {
            result = dims_json(DynkinType::parse(type.rfind('~', 0) == 0 ? type.substr(1) : type));
        } else if (*in) {
            result = intersect_json(ext_type(type));
        } else if (*re) {
            auto t = ext_type(type);
            std::optional<Weight> w;
            if (!weights.empty()) w = parse_weight(t, weights);
            result = resolve_json(t, w);
        } else if (*pr) {
            auto t = ext_type(type);
            result = presentation_json(t, parse_weight(t, weights));
        } else if (*ve) {
            if (cap < 2) throw DomainError("--cap must be at least 2");
            vo.cap = cap;
            vo.seed = seed;
            vo.samples = samples;
            EngineCache cache(cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(cache_dir));
            result = verify_suite(vo, cache);
            if (result.at("failed").get<long>() > 0) code = 1;
        }
        if (format == "json")
            out << result.dump(2) << "\n";
        else
            out << render_text(result);
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ppacli
