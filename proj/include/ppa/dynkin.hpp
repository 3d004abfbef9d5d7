#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ppa/errors.hpp"

namespace ppa {

enum class Family { A, D, E };

char family_char(Family f);

// Extended Dynkin type ~A_n (n >= 2), ~D_n (n >= 4), ~E_n (n = 6, 7, 8); vertices 0..n.
struct ExtDynkinType {
    Family family = Family::A;
    int n = 2;

    static ExtDynkinType make(Family f, int n);
    static ExtDynkinType parse(const std::string& s);
    std::string name() const;
    int vertex_count() const { return n + 1; }

    friend bool operator==(const ExtDynkinType&, const ExtDynkinType&) = default;
};

// Dynkin type A_n (n >= 1), D_n (n >= 4), E_n (n = 6, 7, 8); vertices 1..n.
struct DynkinType {
    Family family = Family::A;
    int n = 1;

    static DynkinType make(Family f, int n);
    static DynkinType parse(const std::string& s);
    std::string name() const;
    int coxeter_number() const;

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

struct Arrow {
    int label;
    int tail;
    int head;
};

// Double quiver on labelled vertices. Letter 2k is the ordinary arrow arrows()[k],
// letter 2k+1 its reverse.
class LabelledDoubleQuiver {
public:
    LabelledDoubleQuiver() = default;
    LabelledDoubleQuiver(std::vector<int> vertices, std::vector<Arrow> arrows);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    bool has_vertex(int v) const;
    int index_of(int v) const;

    int letter_count() const { return 2 * static_cast<int>(arrows_.size()); }
    int tail(int letter) const;
    int head(int letter) const;
    static bool is_reverse(int letter) { return letter & 1; }
    static int reverse(int letter) { return letter ^ 1; }
    int arrow_label(int letter) const { return arrows_[letter >> 1].label; }
    std::string letter_name(int letter) const;
    std::optional<int> letter_by_name(const std::string& name) const;
    std::optional<int> letter_between(int u, int v) const;

    std::vector<int> neighbours(int v) const;
    bool adjacent(int u, int v) const;
    Eigen::MatrixXi adjacency() const;
    std::vector<int> letters_from(int v) const;

private:
    std::vector<int> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<int> index_;
};

LabelledDoubleQuiver build_extended(const ExtDynkinType& t);
LabelledDoubleQuiver build_dynkin(const DynkinType& t);
LabelledDoubleQuiver full_subquiver(const LabelledDoubleQuiver& q, const std::set<int>& keep);

struct CartanData {
    Eigen::MatrixXi C;         // Dynkin part, rows/cols are vertices 1..n
    Eigen::MatrixXi C_ext;     // extended, vertices 0..n
    Eigen::MatrixXi A;         // Dynkin adjacency
    Eigen::MatrixXi A_ext;     // extended adjacency
    Eigen::VectorXi delta;
};

CartanData cartan(const ExtDynkinType& t);
Eigen::MatrixXi cartan_matrix(const DynkinType& t);

using VertexPermutation = std::map<int, int>;

VertexPermutation nakayama(const DynkinType& t);
bool is_involution(const VertexPermutation& p);
bool preserves_adjacency(const LabelledDoubleQuiver& q, const VertexPermutation& p);

struct Component {
    DynkinType type;
    std::vector<int> vertices;
    std::map<int, int> to_canonical;
};

std::vector<Component> classify_components(const LabelledDoubleQuiver& q, const std::set<int>& keep);

}  // namespace ppa
