#pragma once

#include <Eigen/Core>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ppa/dynkin.hpp"
#include "ppa/weights.hpp"

namespace ppa {

// 0 -> V_kernel -> (+) V_j^{a_j} -> V_target -> 0
struct SequenceFixture {
    std::string id;
    ExtDynkinType type;
    char subquiver = 'A';  // Dynkin type of the subquiver the sequence belongs to
    int kernel = 0;
    std::map<int, long> middle;
    int target = 0;

    // middle vertices together with 0
    std::set<int> knitting_set() const;
    // connected full subquiver holding the flanking vertices, with the middle vertices and 0 removed
    std::set<int> subquiver_vertices() const;
};

// 0 on the fixture's subquiver, 1 elsewhere
Weight component_weight(const SequenceFixture& f);

std::vector<SequenceFixture> worked_sequences();
std::vector<SequenceFixture> d_sequences(int n);
std::vector<SequenceFixture> e_sequences(int n);
std::vector<SequenceFixture> all_sequences();  // worked examples, D~4..D~8, E~6..E~8

struct MapFixture {
    std::string id;
    SequenceFixture sequence;
    std::vector<std::string> psi;  // one row, as printed
    std::vector<std::string> phi;  // one column, as printed
    // Replacement for a printed pair that does not compose to zero; empty when the printed pair is used.
    std::vector<std::string> corrected_psi;
    std::vector<std::string> corrected_phi;
    std::string erratum;

    bool has_erratum() const { return !corrected_psi.empty(); }
    const std::vector<std::string>& used_psi() const { return has_erratum() ? corrected_psi : psi; }
    const std::vector<std::string>& used_phi() const { return has_erratum() ? corrected_phi : phi; }
};

std::vector<MapFixture> map_fixtures();

// dim e_i Pi e_j as printed for E6, E7, E8 (rows/cols 1..n)
Eigen::MatrixXi printed_hom_matrix(int n);
// Entries of the printed matrices contradicted by symmetry and the printed row sums: (row, col, corrected value).
struct Erratum {
    int n, row, col, printed, corrected;
};
std::vector<Erratum> hom_matrix_errata();
// dim U_i = sum_j H_ij as printed, and the printed total
std::vector<long> printed_u_dims(int n);
long printed_total(int n);

}  // namespace ppa
