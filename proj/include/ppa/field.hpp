#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <ostream>
#include <string>

#include "ppa/errors.hpp"

namespace ppa {

using Rational = mpq_class;

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

// Element of Q(i) ordered lexicographically by (re, im).
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(long v) : re_(v) {}
    FieldElem(const Rational& re) : re_(re) { re_.canonicalize(); }
    FieldElem(const Rational& re, const Rational& im) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const;

    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    FieldElem operator-() const { return FieldElem(-re_, -im_); }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

    std::string str() const;
    static FieldElem parse(const std::string& s);

private:
    Rational re_{0};
    Rational im_{0};
};

std::strong_ordering compare(const FieldElem& a, const FieldElem& b);

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.str(); }

}  // namespace ppa

namespace Eigen {
template <>
struct NumTraits<ppa::FieldElem> : GenericNumTraits<ppa::FieldElem> {
    typedef ppa::FieldElem Real;
    typedef ppa::FieldElem NonInteger;
    typedef ppa::FieldElem Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
};
}  // namespace Eigen
