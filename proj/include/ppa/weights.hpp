#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "ppa/dynkin.hpp"
#include "ppa/field.hpp"

namespace ppa {

using Weight = Eigen::Matrix<FieldElem, Eigen::Dynamic, 1>;

Weight parse_weight(const ExtDynkinType& t, const std::string& text);
std::string format_weight(const Weight& w);
Weight epsilon(const ExtDynkinType& t, int v);
Weight integer_weight(const std::vector<long>& entries);

FieldElem dot_delta(const ExtDynkinType& t, const Weight& w);

// (r_i w)_j = w_j - C_ij w_i
template <class Derived>
auto dual_reflection(const Eigen::MatrixXi& C, const Eigen::MatrixBase<Derived>& w, int i) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = w;
    const Scalar wi = w(i);
    for (Eigen::Index j = 0; j < out.size(); ++j)
        if (C(i, j) != 0) out(j) -= Scalar(static_cast<long>(C(i, j))) * wi;
    return out;
}

Weight dual_reflection(const ExtDynkinType& t, const Weight& w, int i);
Weight apply_reflections(const ExtDynkinType& t, Weight w, const std::vector<int>& seq);

struct WeightClass {
    bool commutative = false;
    bool quasi_dominant = false;
    bool dominant = false;
    std::optional<bool> singular;
    std::optional<bool> smooth;
};

bool is_quasi_dominant(const Weight& w);
WeightClass classify_weight(const ExtDynkinType& t, const Weight& w);

struct ReflectedWeight {
    Weight weight;
    std::vector<int> sequence;  // application order
};

ReflectedWeight quasi_dominantize(const ExtDynkinType& t, const Weight& w, long cap = 1000000);

// Weight (1 - sum_{i>=1} c_i delta_i, c_1, ..., c_n).
Weight schedler_config(const ExtDynkinType& t, const std::vector<long>& c);

// Sequence taking eps_0 to target, found by playing the numbers game backwards; empty if none within budget.
std::optional<std::vector<int>> reach_from_epsilon0(const ExtDynkinType& t, const Weight& target,
                                                    long move_budget = 100000);

ReflectedWeight resolve_to_smooth(const ExtDynkinType& t, long move_budget = 100000);

}  // namespace ppa
