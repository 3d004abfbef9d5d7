#pragma once

#include <vector>

#include "ppa/field.hpp"

namespace ppa {

using RatMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place, zero rows dropped; returns the pivot column of each row.
std::vector<int> rref(RatMatrix& m, int cols);

// Basis of {x : m x = 0}, one vector per free column.
RatMatrix nullspace(RatMatrix m, int cols);

// Scales a nonzero rational vector to a primitive integer vector whose first nonzero entry is positive.
std::vector<Rational> primitive_integer(std::vector<Rational> v);

}  // namespace ppa
