#include "ppa/weights.hpp"

#include <algorithm>
#include <sstream>

namespace ppa {

Weight parse_weight(const ExtDynkinType& t, const std::string& text) {
    std::vector<FieldElem> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(FieldElem::parse(item));
    if (static_cast<int>(entries.size()) != t.vertex_count())
        throw ParseError("weight for " + t.name() + " needs " + std::to_string(t.vertex_count()) +
                         " entries, got " + std::to_string(entries.size()));
    Weight w(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) w(k) = entries[k];
    return w;
}

std::string format_weight(const Weight& w) {
    std::string s;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        if (k) s += ",";
        s += w(k).str();
    }
    return s;
}

Weight epsilon(const ExtDynkinType& t, int v) {
    Weight w = Weight::Constant(t.vertex_count(), FieldElem(0));
    w(v) = FieldElem(1);
    return w;
}

Weight integer_weight(const std::vector<long>& entries) {
    Weight w(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) w(k) = FieldElem(entries[k]);
    return w;
}

FieldElem dot_delta(const ExtDynkinType& t, const Weight& w) {
    Eigen::VectorXi d = cartan(t).delta;
    FieldElem s(0);
    for (Eigen::Index k = 0; k < w.size(); ++k) s += FieldElem(static_cast<long>(d(k))) * w(k);
    return s;
}

Weight dual_reflection(const ExtDynkinType& t, const Weight& w, int i) {
    if (i < 0 || i > t.n) throw DomainError("reflection vertex " + std::to_string(i) + " out of range");
    if (w.size() != t.vertex_count()) throw DomainError("weight length does not match " + t.name());
    return dual_reflection(cartan(t).C_ext, w, i);
}

Weight apply_reflections(const ExtDynkinType& t, Weight w, const std::vector<int>& seq) {
    Eigen::MatrixXi C = cartan(t).C_ext;
    for (int i : seq) w = dual_reflection(C, w, i);
    return w;
}

bool is_quasi_dominant(const Weight& w) {
    for (Eigen::Index k = 1; k < w.size(); ++k)
        if (w(k) < FieldElem(0)) return false;
    return true;
}

WeightClass classify_weight(const ExtDynkinType& t, const Weight& w) {
    WeightClass c;
    c.commutative = dot_delta(t, w).is_zero();
    c.quasi_dominant = is_quasi_dominant(w);
    c.dominant = c.quasi_dominant && !(w(0) < FieldElem(0));
    if (c.quasi_dominant) {
        bool sing = false;
        for (Eigen::Index k = 1; k < w.size(); ++k) sing = sing || w(k).is_zero();
        c.singular = sing;
        c.smooth = !sing;
    }
    return c;
}

namespace {

// Index of the least negative entry among [from, size), or -1.
int most_negative(const Weight& w, int from) {
    int best = -1;
    for (int k = from; k < w.size(); ++k)
        if (w(k) < FieldElem(0) && (best < 0 || w(k) < w(best))) best = k;
    return best;
}

}  // namespace

ReflectedWeight quasi_dominantize(const ExtDynkinType& t, const Weight& w, long cap) {
    if (w.size() != t.vertex_count()) throw DomainError("weight length does not match " + t.name());
    Eigen::MatrixXi C = cartan(t).C_ext;
    ReflectedWeight r{w, {}};
    for (;;) {
        int i = most_negative(r.weight, 1);
        if (i < 0) return r;
        if (static_cast<long>(r.sequence.size()) >= cap)
            throw DomainError("quasi-dominantization exceeded cap of " + std::to_string(cap) + " reflections");
        r.weight = dual_reflection(C, r.weight, i);
        r.sequence.push_back(i);
    }
}

Weight schedler_config(const ExtDynkinType& t, const std::vector<long>& c) {
    if (static_cast<int>(c.size()) != t.n) throw DomainError("configuration needs n entries");
    Eigen::VectorXi d = cartan(t).delta;
    std::vector<long> e(t.n + 1);
    e[0] = 1;
    for (int i = 1; i <= t.n; ++i) {
        e[i] = c[i - 1];
        e[0] -= c[i - 1] * d(i);
    }
    return integer_weight(e);
}

std::optional<std::vector<int>> reach_from_epsilon0(const ExtDynkinType& t, const Weight& target,
                                                    long move_budget) {
    Eigen::MatrixXi C = cartan(t).C_ext;
    Weight w = target;
    std::vector<int> fired;
    for (;;) {
        int i = most_negative(w, 0);
        if (i < 0) break;
        if (static_cast<long>(fired.size()) >= move_budget) return std::nullopt;
        w = dual_reflection(C, w, i);
        fired.push_back(i);
    }
    if (w != epsilon(t, 0)) return std::nullopt;
    std::reverse(fired.begin(), fired.end());
    return fired;
}

ReflectedWeight resolve_to_smooth(const ExtDynkinType& t, long move_budget) {
    const int n = t.n;
    for (long top = 1; top <= 3; ++top) {
        std::vector<long> c(n, 1);
        for (;;) {
            if (*std::max_element(c.begin(), c.end()) == top) {
                Weight target = schedler_config(t, c);
                if (auto seq = reach_from_epsilon0(t, target, move_budget)) return {target, *seq};
            }
            int k = n - 1;
            while (k >= 0 && c[k] == top) c[k--] = 1;
            if (k < 0) break;
            ++c[k];
        }
    }
    throw DomainError("no smooth resolution found for " + t.name() + " within the search budget");
}

}  // namespace ppa
