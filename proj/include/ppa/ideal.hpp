#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "ppa/path.hpp"

namespace ppa {

// coeff * left . rho_vertex . right
struct CertificateTerm {
    FieldElem coeff;
    int source = 0;
    Word left;
    int vertex = 0;
    Word right;
};

struct MembershipCertificate {
    int source = -1;
    int target = -1;
    std::vector<CertificateTerm> terms;
};

// Expands a certificate in the free path algebra; uses only the quiver and the weight.
PathElement expand_certificate(const LabelledDoubleQuiver& q, const Weight& lambda, const MembershipCertificate& c);
bool check_certificate(const LabelledDoubleQuiver& q, const Weight& lambda, const MembershipCertificate& c,
                       const PathElement& f);

// Two-sided ideal generated by the deformed preprojective relations, explored up to a word-length cap by
// a truncated noncommutative Buchberger completion. Every basis element carries its expression in the
// generators, so membership answers come with certificates.
class IdealEngine {
public:
    IdealEngine(LabelledDoubleQuiver q, Weight lambda, int degree_cap);

    const LabelledDoubleQuiver& quiver() const { return q_; }
    const Weight& weight() const { return lambda_; }
    int degree_cap() const { return cap_; }
    std::size_t basis_size() const { return basis_.size(); }
    std::vector<Word> leading_words() const;

    // Remainder of f modulo the truncated basis; cert receives f - remainder.
    PathElement reduce(const PathElement& f, MembershipCertificate* cert = nullptr) const;
    std::optional<MembershipCertificate> member(const PathElement& f) const;

    // Plain-text dump of the completed basis with its certificates.
    void save(std::ostream& os) const;
    // Rebuilds an engine from save() output; throws ParseError on malformed input.
    static IdealEngine load(LabelledDoubleQuiver q, Weight lambda, int degree_cap, std::istream& is);

private:
    IdealEngine(LabelledDoubleQuiver q, Weight lambda, int degree_cap, bool complete_now);

    using CertKey = std::tuple<Word, int, Word>;
    using CertMap = std::map<CertKey, FieldElem>;
    struct Tracked {
        PathElement poly;
        CertMap cert;
    };

    static void add_cert(CertMap& into, const CertMap& from, const FieldElem& c, const Word& u, const Word& v);
    std::optional<std::size_t> find_occurrence(const Word& w, int source, const Tracked& g) const;
    void reduce_tracked(Tracked& h, bool full) const;
    void complete();

    LabelledDoubleQuiver q_;
    Weight lambda_;
    int cap_;
    std::vector<Tracked> basis_;
};

enum class MembershipStatus { Member, NotFound };

struct MembershipResult {
    MembershipStatus status = MembershipStatus::NotFound;
    std::optional<MembershipCertificate> certificate;
    int cap = 0;
};

MembershipResult ideal_member(const LabelledDoubleQuiver& q, const Weight& lambda, const PathElement& f, int cap);

struct ZeroProductResult {
    bool certified = false;
    PathMatrix product;
    std::vector<MembershipCertificate> certificates;  // row-major, one per entry
    int failing_row = -1;
    int failing_col = -1;
    int cap = 0;
};

ZeroProductResult verify_zero_product(const IdealEngine& engine, const PathMatrix& psi, const PathMatrix& phi);
ZeroProductResult verify_zero_product(const LabelledDoubleQuiver& q, const Weight& lambda, const PathMatrix& psi,
                                      const PathMatrix& phi, int cap);

}  // namespace ppa
