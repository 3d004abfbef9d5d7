#include "ppa/intersection.hpp"

#include <stdexcept>

#include "ppa/linalg.hpp"

namespace ppa {

NeighbourSequence neighbour_sequence(const ExtDynkinType& t, int i) {
    if (i < 1 || i > t.n) throw DomainError("neighbour sequences need a vertex 1.." + std::to_string(t.n));
    return NeighbourSequence{i, build_extended(t).neighbours(i)};
}

namespace {

// Hom(-, S_j) of a map between sums of vertex projectives given by paths: only length-zero paths at j survive.
RatMatrix hom_into_simple(const std::vector<int>& from, const std::vector<int>& to,
                          const std::vector<std::vector<int>>& path_lengths, int j) {
    std::vector<int> rows, cols;
    for (std::size_t a = 0; a < to.size(); ++a)
        if (to[a] == j) rows.push_back(static_cast<int>(a));
    for (std::size_t b = 0; b < from.size(); ++b)
        if (from[b] == j) cols.push_back(static_cast<int>(b));
    RatMatrix m(cols.size(), std::vector<Rational>(rows.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (path_lengths[cols[c]][rows[r]] == 0) m[c][r] = 1;
    return m;
}

long rank_of(RatMatrix m, int cols) { return static_cast<long>(rref(m, cols).size()); }

}  // namespace

ExtTriple ext_dims(const ExtDynkinType& t, int i, int j) {
    LabelledDoubleQuiver q = build_extended(t);
    if (i < 1 || i > t.n || j < 1 || j > t.n) throw DomainError("ext_dims needs vertices 1.." + std::to_string(t.n));
    const std::vector<int> P2{i}, P0{i};
    const std::vector<int> P1 = q.neighbours(i);
    // components of the differentials are single arrows
    std::vector<std::vector<int>> d2(1, std::vector<int>(P1.size(), 1));
    std::vector<std::vector<int>> d1(P1.size(), std::vector<int>(1, 1));
    auto count = [&](const std::vector<int>& P) {
        long c = 0;
        for (int v : P) c += v == j;
        return c;
    };
    const long c0 = count(P0), c1 = count(P1), c2 = count(P2);
    // cochain complex Hom(P0,S_j) -> Hom(P1,S_j) -> Hom(P2,S_j)
    RatMatrix D1 = hom_into_simple(P1, P0, d1, j);  // c1 x c0
    RatMatrix D2 = hom_into_simple(P2, P1, d2, j);  // c2 x c1
    const long r1 = c1 && c0 ? rank_of(D1, static_cast<int>(c0)) : 0;
    const long r2 = c2 && c1 ? rank_of(D2, static_cast<int>(c1)) : 0;
    ExtTriple e;
    e.hom = c0 - r1;
    e.ext1 = c1 - r2 - r1;
    e.ext2 = c2 - r2;
    return e;
}

Eigen::MatrixXi intersection_matrix(const ExtDynkinType& t) {
    Eigen::MatrixXi G(t.n, t.n);
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j) G(i - 1, j - 1) = static_cast<int>(ext_dims(t, i, j).intersection());
    if (G != -cartan(t).C) throw std::logic_error("intersection matrix differs from -C for " + t.name());
    return G;
}

SmoothResolution smooth_resolution(const ExtDynkinType& t) {
    ReflectedWeight r = resolve_to_smooth(t);
    return SmoothResolution{r.weight, r.sequence, intersection_matrix(t)};
}

}  // namespace ppa
