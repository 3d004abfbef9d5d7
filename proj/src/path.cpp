#include "ppa/path.hpp"

#include <cctype>

namespace ppa {

int Path::target(const LabelledDoubleQuiver& q) const {
    return word.empty() ? source : q.head(static_cast<unsigned char>(word.back()));
}

bool Path::valid(const LabelledDoubleQuiver& q) const {
    if (!q.has_vertex(source)) return false;
    int at = source;
    for (char c : word) {
        int l = static_cast<unsigned char>(c);
        if (l >= q.letter_count() || q.tail(l) != at) return false;
        at = q.head(l);
    }
    return true;
}

PathElement PathElement::path(const LabelledDoubleQuiver& q, int source, const Word& w, FieldElem c) {
    Path p{source, w};
    if (!p.valid(q)) throw DomainError("not a path: " + format_word(q, source, w));
    PathElement e(source, p.target(q));
    e.add_term(w, c);
    return e;
}

PathElement PathElement::idempotent(int v, FieldElem c) {
    PathElement e(v, v);
    e.add_term(Word(), c);
    return e;
}

void PathElement::add_term(const Word& w, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

static void check_endpoints(PathElement& a, const PathElement& b) {
    if (b.is_zero()) return;
    if (a.is_zero() && (a.source() < 0 || a.target() < 0)) {
        a = PathElement(b.source(), b.target());
        return;
    }
    if (a.source() != b.source() || a.target() != b.target())
        throw DomainError("adding path elements with different endpoints");
}

PathElement& PathElement::operator+=(const PathElement& o) {
    check_endpoints(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
    check_endpoints(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

PathElement& PathElement::operator*=(const FieldElem& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

PathElement PathElement::operator-() const {
    PathElement r = *this;
    for (auto& [w, x] : r.terms_) x = -x;
    return r;
}

bool operator==(const PathElement& a, const PathElement& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
}

PathElement PathElement::sandwich(const Word& u, int new_source, const Word& v, int new_target) const {
    PathElement r(new_source, new_target);
    for (const auto& [w, c] : terms_) r.terms_.emplace(u + w + v, c);
    return r;
}

PathElement multiply(const PathElement& a, const PathElement& b) {
    if (a.is_zero() || b.is_zero() || a.target() != b.source()) return PathElement(a.source(), b.target());
    PathElement r(a.source(), b.target());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa + wb, ca * cb);
    return r;
}

std::string format_word(const LabelledDoubleQuiver& q, int source, const Word& w) {
    if (w.empty()) return "e" + std::to_string(source);
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ".";
        s += q.letter_name(static_cast<unsigned char>(w[k]));
    }
    return s;
}

std::string format_element(const LabelledDoubleQuiver& q, const PathElement& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        FieldElem c = it->second;
        bool neg = c.is_real() && c.re() < 0;
        if (neg) c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        s += c.is_real() ? c.str() : "(" + c.str() + ")";
        s += " * " + format_word(q, f.source(), it->first);
        first = false;
    }
    s += " : " + std::to_string(f.source()) + "->" + std::to_string(f.target());
    return s;
}

static std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Word parse_word(const LabelledDoubleQuiver& q, const std::string& text, int* source) {
    std::string s = trim(text);
    if (s.size() > 1 && s[0] == 'e' && std::isdigit(static_cast<unsigned char>(s[1]))) {
        int v = std::stoi(s.substr(1));
        if (!q.has_vertex(v)) throw ParseError("unknown vertex in '" + s + "'");
        if (source) *source = v;
        return Word();
    }
    Word w;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t dot = s.find_first_of(". ", pos);
        std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (!tok.empty()) {
            auto l = q.letter_by_name(tok);
            if (!l) throw ParseError("unknown arrow '" + tok + "'");
            w.push_back(static_cast<char>(*l));
        }
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    if (w.empty()) throw ParseError("empty word '" + text + "'");
    int src = q.tail(static_cast<unsigned char>(w[0]));
    if (!Path{src, w}.valid(q)) throw ParseError("arrows do not compose in '" + text + "'");
    if (source) *source = src;
    return w;
}

PathElement parse_element(const LabelledDoubleQuiver& q, const std::string& text) {
    std::string body = text;
    int want_s = -1, want_t = -1;
    std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        body = text.substr(0, colon);
        std::string ends = trim(text.substr(colon + 1));
        std::size_t arrow = ends.find("->");
        if (arrow == std::string::npos) throw ParseError("bad endpoints in '" + text + "'");
        want_s = std::stoi(ends.substr(0, arrow));
        want_t = std::stoi(ends.substr(arrow + 2));
    }
    body = trim(body);
    PathElement out(want_s, want_t);
    if (body == "0") {
        if (want_s < 0) throw ParseError("zero element needs endpoints");
        return out;
    }
    // split into signed terms at top-level + and -
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sign = 1;
    std::string cur;
    for (std::size_t k = 0; k < body.size(); ++k) {
        char c = body[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            std::string t = trim(cur);
            if (!t.empty()) {
                terms.push_back({sign, t});
                sign = 1;
            }
            if (c == '-') sign = -sign;
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (!trim(cur).empty()) terms.push_back({sign, trim(cur)});
    if (terms.empty()) throw ParseError("empty element '" + text + "'");
    for (auto& [sg, t] : terms) {
        FieldElem coeff(sg);
        std::string wtext = t;
        std::size_t star = t.find('*');
        if (star != std::string::npos) {
            std::string ctext = trim(t.substr(0, star));
            if (!ctext.empty() && ctext.front() == '(' && ctext.back() == ')')
                ctext = ctext.substr(1, ctext.size() - 2);
            coeff *= FieldElem::parse(ctext);
            wtext = t.substr(star + 1);
        }
        int src = -1;
        Word w = parse_word(q, wtext, &src);
        int tgt = Path{src, w}.target(q);
        if (out.source() < 0) out = PathElement(src, tgt);
        if (src != out.source() || tgt != out.target())
            throw ParseError("terms with different endpoints in '" + text + "'");
        out.add_term(w, coeff);
    }
    if (out.is_zero() && want_s < 0) throw ParseError("element cancels to zero without endpoints");
    return out;
}

PathMatrix parse_matrix(const LabelledDoubleQuiver& q, const std::vector<std::vector<std::string>>& rows) {
    PathMatrix m;
    for (const auto& r : rows) {
        std::vector<PathElement> row;
        for (const auto& s : r) row.push_back(parse_element(q, s));
        m.push_back(std::move(row));
    }
    return m;
}

PathMatrix multiply(const PathMatrix& a, const PathMatrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw DomainError("matrix shapes do not compose");
    PathMatrix out(a.size(), std::vector<PathElement>(b[0].size()));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < b[0].size(); ++c) {
            PathElement s(a[r][0].source(), b[0][c].target());
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (a[r][k].is_zero() || b[k][c].is_zero()) continue;
                if (a[r][k].target() != b[k][c].source())
                    throw DomainError("matrix entries do not compose at position " + std::to_string(k));
                s += multiply(a[r][k], b[k][c]);
            }
            out[r][c] = s;
        }
    return out;
}

FieldElem weight_at(const LabelledDoubleQuiver& q, const Weight& lambda, int v) {
    (void)q;
    if (v < 0 || v >= lambda.size()) return FieldElem(0);
    return lambda(v);
}

PathElement relation(const LabelledDoubleQuiver& q, const Weight& lambda, int v) {
    PathElement r(v, v);
    for (int l = 0; l < q.letter_count(); ++l) {
        if (q.tail(l) != v) continue;
        Word w = word_of({l, q.reverse(l)});
        r.add_term(w, q.is_reverse(l) ? FieldElem(-1) : FieldElem(1));
    }
    r.add_term(Word(), -weight_at(q, lambda, v));
    return r;
}

std::map<int, PathElement> relations(const LabelledDoubleQuiver& q, const Weight& lambda) {
    std::map<int, PathElement> out;
    for (int v : q.vertices()) out.emplace(v, relation(q, lambda, v));
    return out;
}

}  // namespace ppa
