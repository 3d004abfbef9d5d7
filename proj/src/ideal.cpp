#include "ppa/ideal.hpp"

#include <algorithm>

namespace ppa {

namespace {

int walk(const LabelledDoubleQuiver& q, int from, const Word& w) {
    int at = from;
    for (char c : w) {
        int l = static_cast<unsigned char>(c);
        if (l >= q.letter_count() || q.tail(l) != at) return -1;
        at = q.head(l);
    }
    return at;
}

}  // namespace

PathElement expand_certificate(const LabelledDoubleQuiver& q, const Weight& lambda, const MembershipCertificate& c) {
    PathElement out(c.source, c.target);
    for (const CertificateTerm& t : c.terms) {
        if (t.source != c.source || walk(q, t.source, t.left) != t.vertex)
            throw DomainError("certificate term has a bad left path");
        if (walk(q, t.vertex, t.right) != c.target) throw DomainError("certificate term has a bad right path");
        const int v = t.vertex;
        for (const Arrow& a : q.arrows()) {
            int k = static_cast<int>(&a - q.arrows().data());
            int fwd = 2 * k, rev = 2 * k + 1;
            if (a.tail == v) out.add_term(t.left + static_cast<char>(fwd) + static_cast<char>(rev) + t.right, t.coeff);
            if (a.head == v) out.add_term(t.left + static_cast<char>(rev) + static_cast<char>(fwd) + t.right, -t.coeff);
        }
        FieldElem lv = v < lambda.size() ? lambda(v) : FieldElem(0);
        out.add_term(t.left + t.right, -(t.coeff * lv));
    }
    return out;
}

bool check_certificate(const LabelledDoubleQuiver& q, const Weight& lambda, const MembershipCertificate& c,
                       const PathElement& f) {
    if (!f.is_zero() && (f.source() != c.source || f.target() != c.target)) return false;
    try {
        return expand_certificate(q, lambda, c) == f;
    } catch (const DomainError&) {
        return false;
    }
}

IdealEngine::IdealEngine(LabelledDoubleQuiver q, Weight lambda, int degree_cap)
    : IdealEngine(std::move(q), std::move(lambda), degree_cap, true) {}

IdealEngine::IdealEngine(LabelledDoubleQuiver q, Weight lambda, int degree_cap, bool complete_now)
    : q_(std::move(q)), lambda_(std::move(lambda)), cap_(degree_cap) {
    if (cap_ < 2) throw DomainError("degree cap must be at least 2");
    if (complete_now) complete();
}

namespace {

constexpr const char* kDumpHeader = "ppa-ideal-basis 1";

void put_word(std::ostream& os, const Word& w) {
    os << w.size();
    for (char c : w) os << ' ' << static_cast<int>(static_cast<unsigned char>(c));
}

void put_coeff(std::ostream& os, const FieldElem& c) { os << rational_str(c.re()) << ' ' << rational_str(c.im()); }

template <class T>
T get(std::istream& is) {
    T x;
    if (!(is >> x)) throw ParseError("truncated ideal basis dump");
    return x;
}

Word get_word(std::istream& is, int letters) {
    const auto n = get<long>(is);
    if (n < 0 || n > 100000) throw ParseError("bad word length in ideal basis dump");
    Word w;
    for (long k = 0; k < n; ++k) {
        int l = get<int>(is);
        if (l < 0 || l >= letters) throw ParseError("bad letter in ideal basis dump");
        w.push_back(static_cast<char>(l));
    }
    return w;
}

FieldElem get_coeff(std::istream& is) {
    Rational re = parse_rational(get<std::string>(is));
    Rational im = parse_rational(get<std::string>(is));
    return FieldElem(re, im);
}

}  // namespace

void IdealEngine::save(std::ostream& os) const {
    os << kDumpHeader << '\n' << cap_ << ' ' << basis_.size() << '\n';
    for (const Tracked& g : basis_) {
        os << g.poly.source() << ' ' << g.poly.target() << ' ' << g.poly.terms().size() << '\n';
        for (const auto& [w, c] : g.poly.terms()) {
            put_coeff(os, c);
            os << ' ';
            put_word(os, w);
            os << '\n';
        }
        os << g.cert.size() << '\n';
        for (const auto& [key, c] : g.cert) {
            put_coeff(os, c);
            os << ' ';
            put_word(os, std::get<0>(key));
            os << ' ' << std::get<1>(key) << ' ';
            put_word(os, std::get<2>(key));
            os << '\n';
        }
    }
}

IdealEngine IdealEngine::load(LabelledDoubleQuiver q, Weight lambda, int degree_cap, std::istream& is) {
    IdealEngine e(std::move(q), std::move(lambda), degree_cap, false);
    std::string header;
    std::getline(is, header);
    if (header != kDumpHeader) throw ParseError("not an ideal basis dump");
    if (get<int>(is) != degree_cap) throw ParseError("ideal basis dump has a different degree cap");
    const auto n = get<std::size_t>(is);
    const int letters = e.q_.letter_count();
    for (std::size_t k = 0; k < n; ++k) {
        const int s = get<int>(is), t = get<int>(is);
        if (!e.q_.has_vertex(s) || !e.q_.has_vertex(t)) throw ParseError("bad vertex in ideal basis dump");
        Tracked g{PathElement(s, t), {}};
        for (auto m = get<std::size_t>(is); m > 0; --m) {
            FieldElem c = get_coeff(is);
            g.poly.add_term(get_word(is, letters), c);
        }
        if (g.poly.is_zero()) throw ParseError("zero polynomial in ideal basis dump");
        for (auto m = get<std::size_t>(is); m > 0; --m) {
            FieldElem c = get_coeff(is);
            Word u = get_word(is, letters);
            int v = get<int>(is);
            Word w = get_word(is, letters);
            g.cert[CertKey{u, v, w}] = c;
        }
        // each stored element must be what its certificate says
        MembershipCertificate mc{s, t, {}};
        for (const auto& [key, c] : g.cert)
            mc.terms.push_back(CertificateTerm{c, s, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
        if (!check_certificate(e.q_, e.lambda_, mc, g.poly)) throw ParseError("ideal basis dump fails its certificates");
        e.basis_.push_back(std::move(g));
    }
    return e;
}

std::vector<Word> IdealEngine::leading_words() const {
    std::vector<Word> out;
    for (const auto& g : basis_) out.push_back(g.poly.leading_word());
    return out;
}

void IdealEngine::add_cert(CertMap& into, const CertMap& from, const FieldElem& c, const Word& u, const Word& v) {
    for (const auto& [key, x] : from) {
        CertKey k{u + std::get<0>(key), std::get<1>(key), std::get<2>(key) + v};
        auto [it, inserted] = into.try_emplace(std::move(k), c * x);
        if (!inserted) {
            it->second += c * x;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

std::optional<std::size_t> IdealEngine::find_occurrence(const Word& w, int source, const Tracked& g) const {
    const Word& lw = g.poly.leading_word();
    if (!lw.empty()) {
        std::size_t p = w.find(lw);
        if (p == std::string::npos) return std::nullopt;
        return p;
    }
    int at = source;
    for (std::size_t p = 0;; ++p) {
        if (at == g.poly.source()) return p;
        if (p == w.size()) return std::nullopt;
        at = q_.head(static_cast<unsigned char>(w[p]));
    }
}

void IdealEngine::reduce_tracked(Tracked& h, bool full) const {
    PathElement rest(h.poly.source(), h.poly.target());
    PathElement f = h.poly;
    while (!f.is_zero()) {
        Word w = f.leading_word();
        FieldElem c = f.leading_coeff();
        const Tracked* hit = nullptr;
        std::size_t pos = 0;
        for (const Tracked& g : basis_) {
            if (auto p = find_occurrence(w, f.source(), g)) {
                hit = &g;
                pos = *p;
                break;
            }
        }
        if (!hit) {
            if (!full) {
                rest += f;
                break;
            }
            rest.add_term(w, c);
            PathElement lead(f.source(), f.target());
            lead.add_term(w, c);
            f -= lead;
            continue;
        }
        std::size_t m = hit->poly.leading_word().size();
        Word u = w.substr(0, pos), v = w.substr(pos + m);
        f -= hit->poly.sandwich(u, f.source(), v, f.target()) * c;
        add_cert(h.cert, hit->cert, -c, u, v);
    }
    h.poly = rest;
}

void IdealEngine::complete() {
    std::vector<Tracked> pending;
    for (auto& [v, rho] : relations(q_, lambda_)) {
        Tracked t{rho, {}};
        t.cert[CertKey{Word(), v, Word()}] = FieldElem(1);
        pending.push_back(std::move(t));
    }
    DegLex less;
    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), [&](const Tracked& a, const Tracked& b) {
            return less(a.poly.leading_word(), b.poly.leading_word());
        });
        Tracked h = std::move(*it);
        pending.erase(it);
        reduce_tracked(h, true);
        if (h.poly.is_zero() || h.poly.degree() > cap_) continue;
        FieldElem inv = FieldElem(1) / h.poly.leading_coeff();
        h.poly *= inv;
        for (auto& [k, x] : h.cert) x *= inv;

        for (std::size_t k = basis_.size(); k-- > 0;) {
            const Word& lw = basis_[k].poly.leading_word();
            if (find_occurrence(lw, basis_[k].poly.source(), h)) {
                pending.push_back(std::move(basis_[k]));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(k));
            }
        }
        basis_.push_back(std::move(h));
        const Tracked& g1 = basis_.back();
        auto overlaps = [&](const Tracked& a, const Tracked& b) {
            const Word& la = a.poly.leading_word();
            const Word& lb = b.poly.leading_word();
            std::size_t lim = std::min(la.size(), lb.size());
            for (std::size_t k = 1; k < lim; ++k) {
                if (la.size() + lb.size() - k > static_cast<std::size_t>(cap_)) continue;
                if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
                Word A = la.substr(0, la.size() - k);
                Word C = lb.substr(k);
                Tracked s{a.poly.sandwich(Word(), a.poly.source(), C, b.poly.target()), {}};
                s.poly -= b.poly.sandwich(A, a.poly.source(), Word(), b.poly.target());
                if (s.poly.is_zero()) continue;
                add_cert(s.cert, a.cert, FieldElem(1), Word(), C);
                add_cert(s.cert, b.cert, FieldElem(-1), A, Word());
                pending.push_back(std::move(s));
            }
        };
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            overlaps(g1, basis_[k]);
            if (k + 1 != basis_.size()) overlaps(basis_[k], g1);
        }
    }
}

PathElement IdealEngine::reduce(const PathElement& f, MembershipCertificate* cert) const {
    Tracked t{f, {}};
    reduce_tracked(t, true);
    if (cert) {
        cert->source = f.source();
        cert->target = f.target();
        cert->terms.clear();
        for (const auto& [k, x] : t.cert)
            cert->terms.push_back(CertificateTerm{-x, f.source(), std::get<0>(k), std::get<1>(k), std::get<2>(k)});
    }
    return t.poly;
}

std::optional<MembershipCertificate> IdealEngine::member(const PathElement& f) const {
    if (f.degree() > cap_)
        throw DomainError("degree cap " + std::to_string(cap_) + " is below the element degree " +
                          std::to_string(f.degree()));
    MembershipCertificate c;
    PathElement r = reduce(f, &c);
    if (!r.is_zero()) return std::nullopt;
    return c;
}

MembershipResult ideal_member(const LabelledDoubleQuiver& q, const Weight& lambda, const PathElement& f, int cap) {
    if (f.degree() > cap)
        throw DomainError("degree cap " + std::to_string(cap) + " is below the element degree " +
                          std::to_string(f.degree()));
    MembershipResult r;
    r.cap = cap;
    if (f.is_zero()) {
        r.status = MembershipStatus::Member;
        r.certificate = MembershipCertificate{f.source(), f.target(), {}};
        return r;
    }
    IdealEngine e(q, lambda, std::max(cap, 2));
    r.certificate = e.member(f);
    r.status = r.certificate ? MembershipStatus::Member : MembershipStatus::NotFound;
    return r;
}

ZeroProductResult verify_zero_product(const IdealEngine& engine, const PathMatrix& psi, const PathMatrix& phi) {
    ZeroProductResult r;
    r.cap = engine.degree_cap();
    r.product = multiply(psi, phi);
    for (std::size_t i = 0; i < r.product.size(); ++i)
        for (std::size_t j = 0; j < r.product[i].size(); ++j) {
            const PathElement& f = r.product[i][j];
            if (f.is_zero()) {
                r.certificates.push_back(MembershipCertificate{f.source(), f.target(), {}});
                continue;
            }
            if (f.degree() > engine.degree_cap()) {
                r.failing_row = static_cast<int>(i);
                r.failing_col = static_cast<int>(j);
                return r;
            }
            auto c = engine.member(f);
            if (!c) {
                r.failing_row = static_cast<int>(i);
                r.failing_col = static_cast<int>(j);
                return r;
            }
            r.certificates.push_back(std::move(*c));
        }
    r.certified = true;
    return r;
}

ZeroProductResult verify_zero_product(const LabelledDoubleQuiver& q, const Weight& lambda, const PathMatrix& psi,
                                      const PathMatrix& phi, int cap) {
    IdealEngine e(q, lambda, cap);
    return verify_zero_product(e, psi, phi);
}

}  // namespace ppa
