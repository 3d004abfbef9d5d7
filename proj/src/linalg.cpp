#include "ppa/linalg.hpp"

namespace ppa {

std::vector<int> rref(RatMatrix& m, int cols) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (int k = c; k < cols; ++k) m[row][k] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

RatMatrix nullspace(RatMatrix m, int cols) {
    std::vector<int> piv = rref(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[p] = true;
    RatMatrix out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Rational> primitive_integer(std::vector<Rational> v) {
    mpz_class l = 1, g = 0;
    for (auto& x : v) {
        x.canonicalize();
        if (sgn(x) != 0) l = lcm(l, mpz_class(x.get_den()));
    }
    for (auto& x : v) {
        x *= l;
        if (sgn(x) != 0) g = gcd(g, mpz_class(x.get_num()));
    }
    if (g == 0) return v;
    int s = 0;
    for (auto& x : v)
        if (sgn(x) != 0) {
            s = sgn(x);
            break;
        }
    for (auto& x : v) x = x / g * s;
    return v;
}

}  // namespace ppa
