#include "ppa/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ppa {

char family_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::D: return 'D';
        case Family::E: return 'E';
    }
    return '?';
}

namespace {

std::pair<Family, int> parse_family_rank(const std::string& s) {
    if (s.size() < 2) throw ParseError("bad type '" + s + "'");
    Family f;
    switch (s[0]) {
        case 'A': f = Family::A; break;
        case 'D': f = Family::D; break;
        case 'E': f = Family::E; break;
        default: throw ParseError("bad type '" + s + "'");
    }
    std::string digits = s.substr(1);
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("bad type '" + s + "'");
    return {f, std::stoi(digits)};
}

}  // namespace

ExtDynkinType ExtDynkinType::make(Family f, int n) {
    bool ok = (f == Family::A && n >= 2) || (f == Family::D && n >= 4) ||
              (f == Family::E && n >= 6 && n <= 8);
    if (!ok)
        throw DomainError(std::string("unsupported extended type ~") + family_char(f) +
                          std::to_string(n) + " (need ~A_n n>=2, ~D_n n>=4, ~E_6/7/8)");
    return ExtDynkinType{f, n};
}

ExtDynkinType ExtDynkinType::parse(const std::string& s) {
    if (s.empty() || s[0] != '~') throw ParseError("extended type must start with '~': '" + s + "'");
    auto [f, n] = parse_family_rank(s.substr(1));
    return make(f, n);
}

std::string ExtDynkinType::name() const { return std::string("~") + family_char(family) + std::to_string(n); }

DynkinType DynkinType::make(Family f, int n) {
    bool ok = (f == Family::A && n >= 1) || (f == Family::D && n >= 4) ||
              (f == Family::E && n >= 6 && n <= 8);
    if (!ok)
        throw DomainError(std::string("unsupported Dynkin type ") + family_char(f) + std::to_string(n));
    return DynkinType{f, n};
}

DynkinType DynkinType::parse(const std::string& s) {
    auto [f, n] = parse_family_rank(s);
    return make(f, n);
}

std::string DynkinType::name() const { return std::string(1, family_char(family)) + std::to_string(n); }

int DynkinType::coxeter_number() const {
    switch (family) {
        case Family::A: return n + 1;
        case Family::D: return 2 * n - 2;
        case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    }
    return 0;
}

LabelledDoubleQuiver::LabelledDoubleQuiver(std::vector<int> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::sort(vertices_.begin(), vertices_.end());
    int mx = vertices_.empty() ? -1 : vertices_.back();
    index_.assign(mx + 1, -1);
    for (std::size_t k = 0; k < vertices_.size(); ++k) index_[vertices_[k]] = static_cast<int>(k);
    for (const Arrow& a : arrows_)
        if (!has_vertex(a.tail) || !has_vertex(a.head)) throw std::logic_error("arrow outside vertex set");
}

bool LabelledDoubleQuiver::has_vertex(int v) const {
    return v >= 0 && v < static_cast<int>(index_.size()) && index_[v] >= 0;
}

int LabelledDoubleQuiver::index_of(int v) const {
    if (!has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in quiver");
    return index_[v];
}

int LabelledDoubleQuiver::tail(int letter) const {
    const Arrow& a = arrows_[letter >> 1];
    return is_reverse(letter) ? a.head : a.tail;
}

int LabelledDoubleQuiver::head(int letter) const {
    const Arrow& a = arrows_[letter >> 1];
    return is_reverse(letter) ? a.tail : a.head;
}

std::string LabelledDoubleQuiver::letter_name(int letter) const {
    return (is_reverse(letter) ? "~a" : "a") + std::to_string(arrow_label(letter));
}

std::optional<int> LabelledDoubleQuiver::letter_by_name(const std::string& name) const {
    for (int l = 0; l < letter_count(); ++l)
        if (letter_name(l) == name) return l;
    return std::nullopt;
}

std::optional<int> LabelledDoubleQuiver::letter_between(int u, int v) const {
    for (int l = 0; l < letter_count(); ++l)
        if (tail(l) == u && head(l) == v) return l;
    return std::nullopt;
}

std::vector<int> LabelledDoubleQuiver::neighbours(int v) const {
    std::vector<int> out;
    for (const Arrow& a : arrows_) {
        if (a.tail == v) out.push_back(a.head);
        if (a.head == v) out.push_back(a.tail);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool LabelledDoubleQuiver::adjacent(int u, int v) const {
    for (const Arrow& a : arrows_)
        if ((a.tail == u && a.head == v) || (a.tail == v && a.head == u)) return true;
    return false;
}

Eigen::MatrixXi LabelledDoubleQuiver::adjacency() const {
    int m = static_cast<int>(vertices_.size());
    Eigen::MatrixXi A = Eigen::MatrixXi::Zero(m, m);
    for (const Arrow& a : arrows_) {
        A(index_of(a.tail), index_of(a.head)) += 1;
        A(index_of(a.head), index_of(a.tail)) += 1;
    }
    return A;
}

std::vector<int> LabelledDoubleQuiver::letters_from(int v) const {
    std::vector<int> out;
    for (int l = 0; l < letter_count(); ++l)
        if (tail(l) == v) out.push_back(l);
    return out;
}

LabelledDoubleQuiver build_extended(const ExtDynkinType& t) {
    const int n = t.n;
    std::vector<int> verts(n + 1);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<Arrow> arrows;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) arrows.push_back({i, i, i + 1});
            arrows.push_back({n, n, 0});
            break;
        case Family::D:
            arrows.push_back({0, 0, 2});
            arrows.push_back({1, 1, 2});
            // chain edge k-(k+1), oriented from the odd endpoint to the even one
            for (int k = 2; k <= n - 3; ++k) {
                if (k % 2 == 1)
                    arrows.push_back({k, k, k + 1});
                else
                    arrows.push_back({k, k + 1, k});
            }
            if (n % 2 == 0) {
                arrows.push_back({n - 1, n - 1, n - 2});
                arrows.push_back({n, n, n - 2});
            } else {
                arrows.push_back({n - 1, n - 2, n - 1});
                arrows.push_back({n, n - 2, n});
            }
            break;
        case Family::E:
            if (n == 6) {
                arrows = {{0, 0, 1}, {1, 4, 1}, {2, 2, 3}, {3, 4, 3}, {4, 4, 5}, {5, 6, 5}};
            } else if (n == 7) {
                arrows = {{0, 0, 1}, {1, 2, 1}, {2, 2, 3}, {3, 4, 3}, {4, 4, 5}, {5, 6, 5}, {7, 7, 3}};
            } else {
                arrows = {{0, 0, 1}, {1, 2, 1}, {2, 2, 3}, {3, 4, 3},
                          {4, 4, 5}, {5, 6, 5}, {6, 6, 7}, {8, 8, 5}};
            }
            break;
    }
    return LabelledDoubleQuiver(verts, arrows);
}

LabelledDoubleQuiver full_subquiver(const LabelledDoubleQuiver& q, const std::set<int>& keep) {
    std::vector<int> verts;
    for (int v : keep) {
        if (!q.has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in quiver");
        verts.push_back(v);
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows())
        if (keep.count(a.tail) && keep.count(a.head)) arrows.push_back(a);
    return LabelledDoubleQuiver(verts, arrows);
}

LabelledDoubleQuiver build_dynkin(const DynkinType& t) {
    if (t.family == Family::A && t.n == 1) return LabelledDoubleQuiver({1}, {});
    LabelledDoubleQuiver ext = build_extended(ExtDynkinType::make(t.family, t.n));
    std::set<int> keep;
    for (int v = 1; v <= t.n; ++v) keep.insert(v);
    return full_subquiver(ext, keep);
}

CartanData cartan(const ExtDynkinType& t) {
    LabelledDoubleQuiver q = build_extended(t);
    CartanData d;
    d.A_ext = q.adjacency();
    const int m = t.n + 1;
    d.C_ext = 2 * Eigen::MatrixXi::Identity(m, m) - d.A_ext;
    d.A = d.A_ext.bottomRightCorner(t.n, t.n);
    d.C = d.C_ext.bottomRightCorner(t.n, t.n);
    d.delta = Eigen::VectorXi::Ones(m);
    switch (t.family) {
        case Family::A: break;
        case Family::D:
            for (int i = 2; i <= t.n - 2; ++i) d.delta(i) = 2;
            break;
        case Family::E:
            if (t.n == 6) d.delta << 1, 2, 1, 2, 3, 2, 1;
            if (t.n == 7) d.delta << 1, 2, 3, 4, 3, 2, 1, 2;
            if (t.n == 8) d.delta << 1, 2, 3, 4, 5, 6, 4, 2, 3;
            break;
    }
    return d;
}

Eigen::MatrixXi cartan_matrix(const DynkinType& t) {
    Eigen::MatrixXi A = build_dynkin(t).adjacency();
    return 2 * Eigen::MatrixXi::Identity(t.n, t.n) - A;
}

VertexPermutation nakayama(const DynkinType& t) {
    VertexPermutation p;
    for (int v = 1; v <= t.n; ++v) p[v] = v;
    switch (t.family) {
        case Family::A:
            for (int v = 1; v <= t.n; ++v) p[v] = t.n + 1 - v;
            break;
        case Family::D:
            if (t.n % 2 == 1) {
                p[t.n - 1] = t.n;
                p[t.n] = t.n - 1;
            }
            break;
        case Family::E:
            if (t.n == 6) {
                p[2] = 6;
                p[6] = 2;
                p[3] = 5;
                p[5] = 3;
            }
            break;
    }
    return p;
}

bool is_involution(const VertexPermutation& p) {
    for (auto [v, w] : p) {
        auto it = p.find(w);
        if (it == p.end() || it->second != v) return false;
    }
    return true;
}

bool preserves_adjacency(const LabelledDoubleQuiver& q, const VertexPermutation& p) {
    for (auto [u, pu] : p)
        for (auto [v, pv] : p)
            if (q.adjacent(u, v) != q.adjacent(pu, pv)) return false;
    return true;
}

namespace {

DynkinType shape_of(const LabelledDoubleQuiver& g) {
    const auto& vs = g.vertices();
    const int k = static_cast<int>(vs.size());
    if (static_cast<int>(g.arrows().size()) != k - 1)
        throw std::logic_error("component is not a tree");
    std::vector<int> branch;
    for (int v : vs) {
        auto deg = g.neighbours(v).size();
        if (deg > 3) throw std::logic_error("component has a vertex of valency > 3");
        if (deg == 3) branch.push_back(v);
    }
    if (branch.empty()) return DynkinType::make(Family::A, k);
    if (branch.size() > 1) throw std::logic_error("component has two branch points");
    std::vector<int> arms;
    for (int start : g.neighbours(branch[0])) {
        int len = 1, prev = branch[0], cur = start;
        for (;;) {
            int next = -1;
            for (int w : g.neighbours(cur))
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return DynkinType::make(Family::D, k);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType::make(Family::E, k);
    throw std::logic_error("component is not Dynkin");
}

// Lexicographically least isomorphism, images listed by increasing source vertex.
std::map<int, int> canonical_map(const LabelledDoubleQuiver& g, const DynkinType& t) {
    LabelledDoubleQuiver c = build_dynkin(t);
    const auto& vs = g.vertices();
    const int k = static_cast<int>(vs.size());
    std::vector<int> image(k, 0);
    std::vector<bool> used(k + 1, false);
    std::function<bool(int)> go = [&](int pos) -> bool {
        if (pos == k) return true;
        for (int lab = 1; lab <= k; ++lab) {
            if (used[lab]) continue;
            if (g.neighbours(vs[pos]).size() != c.neighbours(lab).size()) continue;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev)
                ok = g.adjacent(vs[prev], vs[pos]) == c.adjacent(image[prev], lab);
            if (!ok) continue;
            used[lab] = true;
            image[pos] = lab;
            if (go(pos + 1)) return true;
            used[lab] = false;
        }
        return false;
    };
    if (!go(0)) throw std::logic_error("no isomorphism to canonical labelling");
    std::map<int, int> out;
    for (int p = 0; p < k; ++p) out[vs[p]] = image[p];
    return out;
}

}  // namespace

std::vector<Component> classify_components(const LabelledDoubleQuiver& q, const std::set<int>& keep) {
    std::vector<Component> out;
    std::set<int> seen;
    for (int v : keep) {
        if (!q.has_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in quiver");
        if (seen.count(v)) continue;
        std::set<int> comp;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (!comp.insert(u).second) continue;
            for (int w : q.neighbours(u))
                if (keep.count(w) && !comp.count(w)) stack.push_back(w);
        }
        seen.insert(comp.begin(), comp.end());
        LabelledDoubleQuiver g = full_subquiver(q, comp);
        Component c;
        c.type = shape_of(g);
        c.vertices.assign(comp.begin(), comp.end());
        c.to_canonical = canonical_map(g, c.type);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace ppa
