#include "ppa/typea.hpp"

namespace ppa {

int Polynomial::degree() const {
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
        if (!coeffs[d].is_zero()) return d;
    return -1;
}

FieldElem Polynomial::operator()(const FieldElem& z) const {
    FieldElem acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::linear(const FieldElem& c) { return Polynomial{{c, FieldElem(1)}}; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return Polynomial{};
    Polynomial out{std::vector<FieldElem>(a.coeffs.size() + b.coeffs.size() - 1, FieldElem(0))};
    for (std::size_t p = 0; p < a.coeffs.size(); ++p)
        for (std::size_t q = 0; q < b.coeffs.size(); ++q) out.coeffs[p + q] += a.coeffs[p] * b.coeffs[q];
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    const int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k) {
        FieldElem x = k < static_cast<int>(a.coeffs.size()) ? a.coeffs[k] : FieldElem(0);
        FieldElem y = k < static_cast<int>(b.coeffs.size()) ? b.coeffs[k] : FieldElem(0);
        if (!(x == y)) return false;
    }
    return true;
}

Polynomial Polynomial::shifted(const FieldElem& a) const {
    Polynomial out{{FieldElem(0)}};
    Polynomial power{{FieldElem(1)}};
    const Polynomial lin = linear(a);
    for (const FieldElem& c : coeffs) {
        Polynomial term = power * Polynomial{{c}};
        if (out.coeffs.size() < term.coeffs.size()) out.coeffs.resize(term.coeffs.size(), FieldElem(0));
        for (std::size_t k = 0; k < term.coeffs.size(); ++k) out.coeffs[k] += term.coeffs[k];
        power = power * lin;
    }
    return out;
}

std::string Polynomial::str(const std::string& var) const {
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const FieldElem& c = coeffs[d];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = c.is_real() && sgn(c.re()) < 0;
        if (neg) cs = (-c).str();
        if (!c.is_real()) cs = "(" + cs + ")";
        std::string mono = d == 0 ? "" : d == 1 ? var : var + "^" + std::to_string(d);
        std::string term = mono.empty() ? cs : cs == "1" ? mono : cs + "*" + mono;
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

TypeAPresentation presentation(int n, const Weight& lambda) {
    ExtDynkinType t = ExtDynkinType::make(Family::A, n);
    if (lambda.size() != n + 1) throw DomainError("weight must have " + std::to_string(n + 1) + " entries");
    TypeAPresentation p;
    p.n = n;
    p.lambda = lambda;
    p.shift = dot_delta(t, lambda);
    p.xy = Polynomial{{FieldElem(1)}};
    FieldElem partial(0);
    for (int i = 0; i <= n; ++i) {
        if (i >= 1) partial += lambda(i);
        p.xy = p.xy * Polynomial::linear(partial);
    }
    p.yx = p.xy.shifted(-p.shift);
    return p;
}

TypeASequence type_a_sequence(int n, const Weight& lambda, int i, int j, int k) {
    ExtDynkinType::make(Family::A, n);
    if (lambda.size() != n + 1) throw DomainError("weight must have " + std::to_string(n + 1) + " entries");
    if (!(0 <= i && i < j && j <= n + 1)) throw DomainError("need 0 <= i < j <= n+1");
    if (!(i < k && k < j)) throw DomainError("need i < k < j");
    for (int m = i + 1; m < j; ++m)
        if (!lambda(m).is_zero()) throw DomainError("weight must vanish strictly between i and j");
    return TypeASequence{n, i, j, k};
}

std::pair<PathMatrix, PathMatrix> type_a_maps(const TypeASequence& s) {
    LabelledDoubleQuiver q = build_extended(ExtDynkinType::make(Family::A, s.n));
    const int N = s.n + 1;
    const int l = s.target();
    // upward letters follow a_v : v -> v+1, downward ones are their reverses
    auto up = [&](int from, int steps) {
        Word w;
        for (int v = from; v < from + steps; ++v) w.push_back(static_cast<char>(2 * (v % N)));
        return w;
    };
    auto down = [&](int from, int steps) {
        Word w;
        for (int v = from; v > from - steps; --v) w.push_back(static_cast<char>(2 * ((v - 1 + N) % N) + 1));
        return w;
    };
    const int jv = s.j % N;
    PathElement psi_i = PathElement::path(q, l, down(l, l - s.i));
    PathElement psi_j = PathElement::path(q, l, up(l, s.j - l));
    PathElement phi_i = PathElement::path(q, s.i, up(s.i, s.k - s.i));
    PathElement phi_j = PathElement::path(q, jv, down(s.j, s.j - s.k));
    return {PathMatrix{{psi_i, -psi_j}}, PathMatrix{{phi_i}, {phi_j}}};
}

VertexPermutation type_a_translation(int n, const Weight& lambda) {
    if (lambda.size() != n + 1) throw DomainError("weight must have " + std::to_string(n + 1) + " entries");
    VertexPermutation out;
    int i = 0;
    while (i <= n) {
        int j = i + 1;
        while (j <= n && lambda(j).is_zero()) ++j;
        for (int k = i + 1; k < j; ++k) out[k] = i + j - k;
        i = j;
    }
    return out;
}

}  // namespace ppa
