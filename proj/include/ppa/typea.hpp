#pragma once

#include <string>
#include <vector>

#include "ppa/ideal.hpp"

namespace ppa {

// Coefficients in ascending degree.
struct Polynomial {
    std::vector<FieldElem> coeffs;

    int degree() const;
    FieldElem operator()(const FieldElem& z) const;
    // p(z + a)
    Polynomial shifted(const FieldElem& a) const;
    std::string str(const std::string& var = "z") const;

    static Polynomial linear(const FieldElem& c);  // z + c
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
};

// O^lambda(~A_n) = k<x, y, z> with xy = xy_poly(z), yx = yx_poly(z), xz = (z + s) x, yz = (z - s) y, s = lambda.delta.
struct TypeAPresentation {
    int n = 0;
    Weight lambda;
    Polynomial xy;
    Polynomial yx;
    FieldElem shift;

    bool commutative() const { return shift.is_zero(); }
};

TypeAPresentation presentation(int n, const Weight& lambda);

// 0 -> V_k -> V_i + V_{j mod (n+1)} -> V_{i+j-k} -> 0
struct TypeASequence {
    int n = 0;
    int i = 0, j = 0, k = 0;

    int kernel() const { return k; }
    int target() const { return i + j - k; }
    std::vector<int> middle() const { return {i, j % (n + 1)}; }
};

TypeASequence type_a_sequence(int n, const Weight& lambda, int i, int j, int k);

// psi = (psi_i, -psi_j) along shortest paths from the target, phi = (phi_i; phi_j) to the kernel.
std::pair<PathMatrix, PathMatrix> type_a_maps(const TypeASequence& s);

// k -> i + j - k on every maximal run i < k < j of vertices with zero weight.
VertexPermutation type_a_translation(int n, const Weight& lambda);

}  // namespace ppa
