#pragma once

#include <Eigen/Core>
#include <vector>

#include "ppa/dynkin.hpp"
#include "ppa/weights.hpp"

namespace ppa {

// 0 -> V_i -> (+)_{k in di} V_k -> V_i -> 0
struct NeighbourSequence {
    int vertex = 0;
    std::vector<int> middle;
};

NeighbourSequence neighbour_sequence(const ExtDynkinType& t, int i);

struct ExtTriple {
    long hom = 0, ext1 = 0, ext2 = 0;

    long intersection() const { return -hom + ext1 - ext2; }
    friend bool operator==(const ExtTriple&, const ExtTriple&) = default;
};

// Ext^l(S_i, S_j) from the projective resolution 0 -> e_i Pi -> (+)_{k in di} e_k Pi -> e_i Pi -> S_i -> 0.
ExtTriple ext_dims(const ExtDynkinType& t, int i, int j);

// Gamma_ij = S_i . S_j over the Dynkin vertices 1..n; checked against -C.
Eigen::MatrixXi intersection_matrix(const ExtDynkinType& t);

struct SmoothResolution {
    Weight mu;
    std::vector<int> reflections;
    Eigen::MatrixXi gamma;
};

SmoothResolution smooth_resolution(const ExtDynkinType& t);

}  // namespace ppa
