#include "ppa/graded.hpp"

#include <algorithm>

#include "ppa/linalg.hpp"

namespace ppa {

namespace {

using Vec = std::map<int, Rational>;  // sparse over a basis index
using BlockKey = std::pair<int, int>;

struct Degree {
    std::map<BlockKey, std::vector<Word>> basis;
    std::map<Word, Vec> nf;  // candidate word -> combination of basis words of its block
};

}  // namespace

GradedDims graded_dims_pi(const DynkinType& t) {
    LabelledDoubleQuiver q = build_dynkin(t);
    const auto& vs = q.vertices();
    std::vector<Degree> deg;

    Degree d0;
    for (int v : vs) d0.basis[{v, v}] = {Word()};
    deg.push_back(std::move(d0));

    GradedDims out;
    auto record = [&](const Degree& d) {
        long total = 0;
        for (const auto& [key, b] : d.basis) {
            auto& blk = out.block[key];
            blk.resize(deg.size(), 0);
            blk.back() = static_cast<long>(b.size());
            total += static_cast<long>(b.size());
        }
        out.per_degree.push_back(total);
        out.total += total;
    };
    out.per_degree.push_back(static_cast<long>(vs.size()));
    out.total = static_cast<long>(vs.size());
    for (int v : vs) out.block[{v, v}] = {1};

    auto target_of = [&](int s, const Word& w) { return Path{s, w}.target(q); };

    for (int d = 1;; ++d) {
        Degree cur;
        const Degree& prev = deg[d - 1];
        std::map<BlockKey, std::vector<Word>> cand;
        for (const auto& [key, words] : prev.basis)
            for (const Word& b : words)
                for (int l : q.letters_from(key.second))
                    cand[{key.first, q.head(l)}].push_back(b + static_cast<char>(l));

        for (auto& [key, words] : cand) {
            std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return DegLex()(b, a); });
            std::map<Word, int> col;
            for (int k = 0; k < static_cast<int>(words.size()); ++k) col[words[k]] = k;
            const int ncols = static_cast<int>(words.size());
            std::vector<std::vector<Rational>> rows;
            if (d >= 2) {
                const int s = key.first, v = key.second;
                auto it = deg[d - 2].basis.find({s, v});
                PathElement rho = relation(q, Weight(), v);
                if (it != deg[d - 2].basis.end()) {
                    for (const Word& c : it->second) {
                        std::vector<Rational> row(ncols, Rational(0));
                        for (const auto& [xy, coeff] : rho.terms()) {
                            if (xy.size() != 2) continue;
                            Word cx = c + xy[0];
                            const Degree& pd = deg[d - 1];
                            const Vec& nf = pd.nf.at(cx);
                            if (nf.empty()) continue;
                            const auto& pb = pd.basis.at({s, target_of(s, cx)});
                            for (const auto& [bi, beta] : nf) {
                                Word cand_word = pb[bi] + xy[1];
                                row[col.at(cand_word)] += beta * coeff.re();
                            }
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
            std::vector<int> piv = rref(rows, ncols);
            std::vector<bool> is_piv(ncols, false);
            for (int p : piv) is_piv[p] = true;
            std::vector<Word>& basis = cur.basis[key];
            std::vector<int> basis_pos(ncols, -1);
            // basis listed in increasing order
            for (int k = ncols - 1; k >= 0; --k)
                if (!is_piv[k]) {
                    basis_pos[k] = static_cast<int>(basis.size());
                    basis.push_back(words[k]);
                }
            for (int k = 0; k < ncols; ++k)
                if (!is_piv[k]) cur.nf[words[k]] = Vec{{basis_pos[k], Rational(1)}};
            for (std::size_t r = 0; r < rows.size(); ++r) {
                Vec v;
                for (int k = 0; k < ncols; ++k)
                    if (!is_piv[k] && sgn(rows[r][k]) != 0) v[basis_pos[k]] = -rows[r][k];
                cur.nf[words[piv[r]]] = std::move(v);
            }
            if (basis.empty()) cur.basis.erase(key);
        }
        long total = 0;
        for (const auto& [key, b] : cur.basis) total += static_cast<long>(b.size());
        if (total == 0) break;
        deg.push_back(std::move(cur));
        record(deg.back());
    }
    for (auto& [key, v] : out.block) v.resize(out.per_degree.size(), 0);
    return out;
}

Eigen::MatrixXi hom_matrix(const GradedDims& g, int n) {
    Eigen::MatrixXi H = Eigen::MatrixXi::Zero(n, n);
    for (const auto& [key, v] : g.block) {
        long s = 0;
        for (long x : v) s += x;
        H(key.first - 1, key.second - 1) = static_cast<int>(s);
    }
    return H;
}

Eigen::MatrixXi hom_matrix(const DynkinType& t) { return hom_matrix(graded_dims_pi(t), t.n); }

long expected_dim_pi(const DynkinType& t) {
    long h = t.coxeter_number();
    return static_cast<long>(t.n) * h * (h + 1) / 6;
}

}  // namespace ppa
