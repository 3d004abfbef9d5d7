#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppa/dynkin.hpp"
#include "ppa/field.hpp"
#include "ppa/weights.hpp"

namespace ppa {

// A word is a string of letter ids; paths compose left to right.
using Word = std::string;

inline Word word_of(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(static_cast<char>(l));
    return w;
}

// Shorter words first, then lexicographic by letter id.
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct Path {
    int source = 0;
    Word word;

    int target(const LabelledDoubleQuiver& q) const;
    bool valid(const LabelledDoubleQuiver& q) const;
};

// Linear combination of paths sharing a source and a target. The zero element has no terms.
class PathElement {
public:
    using Terms = std::map<Word, FieldElem, DegLex>;

    PathElement() = default;
    PathElement(int source, int target) : source_(source), target_(target) {}
    static PathElement path(const LabelledDoubleQuiver& q, int source, const Word& w, FieldElem c = FieldElem(1));
    static PathElement idempotent(int v, FieldElem c = FieldElem(1));

    int source() const { return source_; }
    int target() const { return target_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
    const Word& leading_word() const { return terms_.rbegin()->first; }
    const FieldElem& leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(const Word& w, const FieldElem& c);
    PathElement& operator+=(const PathElement& o);
    PathElement& operator-=(const PathElement& o);
    PathElement& operator*=(const FieldElem& c);
    PathElement operator-() const;

    friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
    friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
    friend PathElement operator*(PathElement a, const FieldElem& c) { return a *= c; }
    friend bool operator==(const PathElement& a, const PathElement& b);

    // u * this * v for words u (ending at source) and v (starting at target)
    PathElement sandwich(const Word& u, int new_source, const Word& v, int new_target) const;

private:
    int source_ = -1;
    int target_ = -1;
    Terms terms_;
};

PathElement multiply(const PathElement& a, const PathElement& b);

std::string format_word(const LabelledDoubleQuiver& q, int source, const Word& w);
std::string format_element(const LabelledDoubleQuiver& q, const PathElement& f);
Word parse_word(const LabelledDoubleQuiver& q, const std::string& text, int* source = nullptr);
PathElement parse_element(const LabelledDoubleQuiver& q, const std::string& text);

using PathMatrix = std::vector<std::vector<PathElement>>;

PathMatrix parse_matrix(const LabelledDoubleQuiver& q, const std::vector<std::vector<std::string>>& rows);
PathMatrix multiply(const PathMatrix& a, const PathMatrix& b);

// Weight entry at a vertex of q, zero if the weight is shorter.
FieldElem weight_at(const LabelledDoubleQuiver& q, const Weight& lambda, int v);

// rho_v = sum_{t(a)=v} a.~a - sum_{h(a)=v} ~a.a - lambda_v e_v
PathElement relation(const LabelledDoubleQuiver& q, const Weight& lambda, int v);
std::map<int, PathElement> relations(const LabelledDoubleQuiver& q, const Weight& lambda);

}  // namespace ppa
