#include "ppa/knitting.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "ppa/linalg.hpp"

namespace ppa {

int Pattern::columns() const {
    int c = 0;
    for (const auto& [key, e] : entries) c = std::max(c, key.first);
    return c;
}

const PatternEntry* Pattern::at(int column, int vertex) const {
    auto it = entries.find({column, vertex});
    return it == entries.end() ? nullptr : &it->second;
}

std::map<int, long> KnitResult::middle() const {
    std::map<int, long> out;
    for (const auto& [j, a] : multiplicities)
        if (a > 0) out[j] = a;
    return out;
}

std::map<int, int> bipartition(const LabelledDoubleQuiver& q) {
    std::map<int, int> colour;
    for (int s : q.vertices()) {
        if (colour.count(s)) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : q.neighbours(v)) {
                auto it = colour.find(u);
                if (it == colour.end()) {
                    colour[u] = 1 - colour[v];
                    stack.push_back(u);
                } else if (it->second == colour[v]) {
                    throw DomainError("quiver is not bipartite");
                }
            }
        }
    }
    return colour;
}

KnitResult knit(const ExtDynkinType& t, const std::set<int>& S, int target) {
    if (t.family == Family::A) throw DomainError("knitting is defined for types ~D and ~E only");
    LabelledDoubleQuiver q = build_extended(t);
    if (!S.count(0)) throw DomainError("S must contain the extending vertex 0");
    for (int v : S)
        if (!q.has_vertex(v)) throw DomainError("S contains a vertex outside " + t.name());
    if (!q.has_vertex(target)) throw DomainError("target is not a vertex of " + t.name());
    if (S.count(target)) throw DomainError("target must lie outside S");

    const auto colour = bipartition(q);
    const int guard = 4 * DynkinType::make(t.family, t.n).coxeter_number();

    KnitResult r;
    r.type = t;
    r.S = S;
    r.target = target;
    std::vector<std::map<int, long>> val(2);
    for (int v : q.vertices())
        if (colour.at(v) == colour.at(target)) val[1][v] = v == target ? 1 : 0;

    for (int c = 1;; ++c) {
        if (c + 1 > guard)
            throw DomainError("knitting did not reach -1 within " + std::to_string(guard) + " columns");
        std::map<int, long> next;
        for (int k : q.vertices()) {
            if (colour.at(k) == colour.at(target) ? (c + 1) % 2 == 0 : (c + 1) % 2 == 1) continue;
            long s = 0;
            for (int j : q.neighbours(k))
                if (!S.count(j)) s += val[c].at(j);
            if (!S.count(k)) {
                auto it = val[c - 1].find(k);
                if (it != val[c - 1].end()) s -= it->second;
            }
            next[k] = s;
        }
        val.push_back(std::move(next));
        std::vector<int> neg;
        for (const auto& [k, x] : val[c + 1])
            if (x < 0) neg.push_back(k);
        if (neg.empty()) continue;
        if (neg.size() != 1 || val[c + 1].at(neg[0]) != -1)
            throw DomainError("knitting produced an entry below -1 or several negative entries");
        r.kernel = neg[0];
        r.last_column = c + 1;
        break;
    }

    for (int j : S) r.multiplicities[j] = 0;
    for (int c = 1; c <= r.last_column; ++c)
        for (const auto& [k, x] : val[c]) {
            PatternEntry e{x, S.count(k) > 0, c == 1 && k == target};
            r.pattern.entries[{c, k}] = e;
            if (e.circled) r.multiplicities[k] += x;
        }
    return r;
}

std::string render_pattern(const Pattern& p) {
    if (p.entries.empty()) return "";
    const int cols = p.columns();
    std::set<int> rows;
    std::size_t width = 0;
    auto cell = [](const PatternEntry& e) {
        std::string s = std::to_string(e.value);
        if (e.circled) return "(" + s + ")";
        if (e.boxed) return "[" + s + "]";
        return s;
    };
    for (const auto& [key, e] : p.entries) {
        rows.insert(key.second);
        width = std::max(width, cell(e).size());
    }
    std::string out;
    for (int v : rows) {
        std::string line;
        for (int c = cols; c >= 1; --c) {
            const PatternEntry* e = p.at(c, v);
            std::string s = e ? cell(*e) : "";
            if (c != cols) line += ' ';
            line += std::string(width - s.size(), ' ') + s;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        if (!out.empty()) out += '\n';
        out += line;
    }
    return out;
}

std::string map_status_name(MapStatus s) {
    switch (s) {
        case MapStatus::SignSearch: return "sign-search";
        case MapStatus::Kernel: return "kernel";
        case MapStatus::Unresolved: return "unresolved";
    }
    return "unresolved";
}

namespace {

Word walk_word(const LabelledDoubleQuiver& q, const std::vector<int>& vs) {
    Word w;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) w.push_back(static_cast<char>(*q.letter_between(vs[k], vs[k + 1])));
    return w;
}

// Paths (c, j) -> (1, target) stepping one column right each time through nonzero uncircled entries.
std::vector<std::vector<int>> pattern_paths(const LabelledDoubleQuiver& q, const KnitResult& r, int column, int vertex,
                                            std::size_t limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{vertex};
    std::function<void(int, int)> go = [&](int c, int v) {
        if (out.size() >= limit) return;
        if (c == 1) {
            if (v == r.target) out.push_back(cur);
            return;
        }
        for (int u : q.neighbours(v)) {
            const PatternEntry* e = r.pattern.at(c - 1, u);
            if (!e) continue;
            if (c - 1 > 1 && (e->circled || e->value == 0)) continue;
            cur.push_back(u);
            go(c - 1, u);
            cur.pop_back();
        }
    };
    go(column, vertex);
    return out;
}

std::vector<int> shortest_walk(const LabelledDoubleQuiver& q, int from, int to) {
    std::map<int, int> parent{{from, from}};
    std::queue<int> bfs;
    bfs.push(from);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : q.neighbours(v))
            if (parent.emplace(u, v).second) bfs.push(u);
    }
    std::vector<int> out{to};
    while (out.back() != from) out.push_back(parent.at(out.back()));
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Word> normal_words(const LabelledDoubleQuiver& q, const std::vector<Word>& lws, int from, int to, int len) {
    std::vector<Word> out;
    std::function<void(int, Word&)> grow = [&](int at, Word& w) {
        for (const Word& lw : lws)
            if (w.size() >= lw.size() && w.compare(w.size() - lw.size(), lw.size(), lw) == 0) return;
        if (static_cast<int>(w.size()) == len) {
            if (at == to) out.push_back(w);
            return;
        }
        for (int l : q.letters_from(at)) {
            w.push_back(static_cast<char>(l));
            grow(q.head(l), w);
            w.pop_back();
        }
    };
    Word w;
    grow(from, w);
    return out;
}

}  // namespace

ExtractedMaps extract_maps(const KnitResult& r, long max_sign_vectors) {
    LabelledDoubleQuiver q = build_extended(r.type);
    ExtractedMaps out;
    const int L = r.last_column;

    std::vector<std::pair<int, int>> occ;  // (vertex, column)
    for (const auto& [key, e] : r.pattern.entries)
        if (e.circled && e.value > 0) occ.push_back({key.second, key.first});
    std::sort(occ.begin(), occ.end());

    std::vector<PathElement> psi;
    for (auto [v, c] : occ) {
        const long m = r.pattern.at(c, v)->value;
        auto paths = pattern_paths(q, r, c, v, 64);
        if (paths.empty())
            throw std::logic_error("no pattern path from column " + std::to_string(c) + " vertex " +
                                   std::to_string(v) + " to the box");
        std::set<Word> seen;
        long taken = 0;
        for (auto& p : paths) {
            std::vector<int> rev(p.rbegin(), p.rend());
            Word w = walk_word(q, rev);
            if (!seen.insert(w).second) continue;
            out.components.push_back(MapComponent{v, c, p});
            psi.push_back(PathElement::path(q, r.target, w));
            if (++taken == m) break;
        }
        if (taken < m) {
            out.note = "fewer distinct pattern paths than the circled value at vertex " + std::to_string(v);
            return out;
        }
    }
    const std::size_t m = psi.size();
    if (m == 0) {
        out.note = "no circled occurrences";
        return out;
    }

    Weight zero = Weight::Constant(r.type.vertex_count(), FieldElem(0));
    IdealEngine engine(q, zero, std::max(L - 1, 2));

    auto assemble = [&](const std::vector<PathElement>& ps, const std::vector<PathElement>& fs) {
        out.psi = PathMatrix(1);
        out.phi.clear();
        for (std::size_t k = 0; k < m; ++k) {
            out.psi[0].push_back(ps[k]);
            out.phi.push_back({fs[k]});
        }
    };

    bool walks_fit = true;
    std::vector<PathElement> phi;
    for (const auto& comp : out.components) {
        auto w = shortest_walk(q, comp.vertex, r.kernel);
        if (static_cast<int>(w.size()) - 1 != L - comp.column) {
            walks_fit = false;
            break;
        }
        phi.push_back(PathElement::path(q, comp.vertex, walk_word(q, w)));
    }
    if (walks_fit) {
        const long total = m > 40 ? max_sign_vectors : std::min<long>(1L << (m - 1), max_sign_vectors);
        for (long mask = 0; mask < total; ++mask) {
            ++out.sign_vectors_tried;
            std::vector<PathElement> ps = psi;
            std::vector<int> signs(m, 1);
            for (std::size_t k = 1; k < m; ++k)
                if (mask >> (k - 1) & 1) {
                    signs[k] = -1;
                    ps[k] = -ps[k];
                }
            assemble(ps, phi);
            auto v = verify_zero_product(engine, out.psi, out.phi);
            if (v.certified) {
                out.status = MapStatus::SignSearch;
                out.signs = signs;
                out.verification = std::move(v);
                return out;
            }
        }
    }

    // psi fixed, phi solved from psi.phi = 0 over normal words of the right degrees
    const auto lws = engine.leading_words();
    std::vector<std::pair<std::size_t, Word>> unknowns;
    for (std::size_t k = 0; k < m; ++k) {
        const auto& comp = out.components[k];
        for (Word& w : normal_words(q, lws, comp.vertex, r.kernel, L - comp.column)) unknowns.push_back({k, w});
    }
    std::map<Word, std::size_t> row_of;
    std::vector<PathElement> images;
    for (auto& [k, w] : unknowns) {
        PathElement f = engine.reduce(multiply(psi[k], PathElement::path(q, out.components[k].vertex, w)));
        for (const auto& [word, c] : f.terms()) row_of.emplace(word, row_of.size());
        images.push_back(std::move(f));
    }
    const int cols = static_cast<int>(unknowns.size());
    RatMatrix mat(row_of.size(), std::vector<Rational>(cols, Rational(0)));
    for (int u = 0; u < cols; ++u)
        for (const auto& [word, c] : images[u].terms()) mat[row_of.at(word)][u] = c.re();
    RatMatrix ns = nullspace(mat, cols);
    out.kernel_dimension = static_cast<int>(ns.size());
    if (ns.empty()) {
        out.note = "no nonzero solution for phi";
        return out;
    }
    auto covers = [&](const std::vector<Rational>& x) {
        std::vector<bool> hit(m, false);
        for (int u = 0; u < cols; ++u)
            if (sgn(x[u]) != 0) hit[unknowns[u].first] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    };
    std::vector<Rational> x;
    for (auto& v : ns)
        if (covers(v)) {
            x = v;
            break;
        }
    if (x.empty()) {
        x.assign(cols, Rational(0));
        for (auto& v : ns)
            for (int u = 0; u < cols; ++u) x[u] += v[u];
    }
    if (ns.size() > 1) out.note = "solution space of dimension " + std::to_string(ns.size());
    x = primitive_integer(x);
    phi.assign(m, PathElement());
    for (std::size_t k = 0; k < m; ++k) phi[k] = PathElement(out.components[k].vertex, r.kernel);
    for (int u = 0; u < cols; ++u)
        if (sgn(x[u]) != 0) phi[unknowns[u].first].add_term(unknowns[u].second, FieldElem(x[u]));
    assemble(psi, phi);
    out.signs.assign(m, 1);
    out.verification = verify_zero_product(engine, out.psi, out.phi);
    out.status = out.verification.certified ? MapStatus::Kernel : MapStatus::Unresolved;
    return out;
}

}  // namespace ppa
