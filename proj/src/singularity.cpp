#include "ppa/singularity.hpp"

#include <algorithm>

namespace ppa {

namespace {

void require_quasi_dominant(const ExtDynkinType& t, const Weight& lambda) {
    if (lambda.size() != t.vertex_count()) throw DomainError("weight length does not match " + t.name());
    if (!is_quasi_dominant(lambda))
        throw DomainError("weight is not quasi-dominant; apply quasi_dominantize first");
}

}  // namespace

QLambdaDecomposition q_lambda_decompose(const ExtDynkinType& t, const Weight& lambda) {
    require_quasi_dominant(t, lambda);
    QLambdaDecomposition d;
    d.type = t;
    d.lambda = lambda;
    for (int i = 1; i <= t.n; ++i)
        if (lambda(i).is_zero()) d.I.insert(i);
    d.components = classify_components(build_extended(t), d.I);
    return d;
}

VertexPermutation translation_permutation(const QLambdaDecomposition& d) {
    VertexPermutation out;
    for (const Component& c : d.components) {
        std::map<int, int> from_canonical;
        for (auto [v, k] : c.to_canonical) from_canonical[k] = v;
        VertexPermutation nak = nakayama(c.type);
        for (int v : c.vertices) out[v] = from_canonical.at(nak.at(c.to_canonical.at(v)));
    }
    return out;
}

std::vector<std::string> SingularityDescriptor::names() const {
    std::vector<std::string> out;
    for (const auto& t : types) out.push_back(t.name());
    return out;
}

SingularityDescriptor descriptor(const QLambdaDecomposition& d) {
    SingularityDescriptor s;
    for (const Component& c : d.components) s.types.push_back(c.type);
    std::sort(s.types.begin(), s.types.end());
    return s;
}

bool equivalent(const SingularityDescriptor& a, const SingularityDescriptor& b) { return a.types == b.types; }

bool equivalent(const QLambdaDecomposition& a, const QLambdaDecomposition& b) {
    return equivalent(descriptor(a), descriptor(b));
}

bool is_projective_vertex(const ExtDynkinType& t, const Weight& lambda, int i) {
    require_quasi_dominant(t, lambda);
    if (i < 0 || i > t.n) throw DomainError("vertex " + std::to_string(i) + " not in " + t.name());
    return i == 0 || !lambda(i).is_zero();
}

}  // namespace ppa
