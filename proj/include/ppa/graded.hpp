#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "ppa/dynkin.hpp"
#include "ppa/path.hpp"

namespace ppa {

struct GradedDims {
    std::vector<long> per_degree;                           // dim Pi_d
    std::map<std::pair<int, int>, std::vector<long>> block;  // (i, j) -> dim e_i Pi_d e_j
    long total = 0;
};

// Graded pieces of the undeformed preprojective algebra of a Dynkin quiver, built degree by degree as
// Pi_d = (Pi_{d-1} x arrows) / (Pi_{d-2} . rho).
GradedDims graded_dims_pi(const DynkinType& t);

// H_ij = dim e_i Pi e_j, rows and columns indexed by vertices 1..n.
Eigen::MatrixXi hom_matrix(const DynkinType& t);
Eigen::MatrixXi hom_matrix(const GradedDims& g, int n);

// dim Pi = n h (h + 1) / 6
long expected_dim_pi(const DynkinType& t);

}  // namespace ppa
