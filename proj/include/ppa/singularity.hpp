#pragma once

#include <set>
#include <string>
#include <vector>

#include "ppa/dynkin.hpp"
#include "ppa/weights.hpp"

namespace ppa {

struct QLambdaDecomposition {
    ExtDynkinType type;
    Weight lambda;
    std::set<int> I;  // vertices i >= 1 with lambda_i = 0
    std::vector<Component> components;
};

QLambdaDecomposition q_lambda_decompose(const ExtDynkinType& t, const Weight& lambda);

// Nakayama permutation of each component, transported through its canonical labelling.
VertexPermutation translation_permutation(const QLambdaDecomposition& d);

struct SingularityDescriptor {
    std::vector<DynkinType> types;  // sorted

    bool smooth() const { return types.empty(); }
    std::vector<std::string> names() const;
    friend bool operator==(const SingularityDescriptor&, const SingularityDescriptor&) = default;
};

SingularityDescriptor descriptor(const QLambdaDecomposition& d);
bool equivalent(const SingularityDescriptor& a, const SingularityDescriptor& b);
bool equivalent(const QLambdaDecomposition& a, const QLambdaDecomposition& b);

bool is_projective_vertex(const ExtDynkinType& t, const Weight& lambda, int i);

}  // namespace ppa
