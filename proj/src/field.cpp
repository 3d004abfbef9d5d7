#include "ppa/field.hpp"

#include <algorithm>
#include <cctype>

namespace ppa {

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    bool digit = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(s[k]))) {
            digit = true;
        } else if (s[k] == '/' && !slash && digit && k + 1 < s.size()) {
            slash = true;
        } else {
            throw ParseError("bad number '" + s + "'");
        }
    }
    if (!digit) throw ParseError("bad number '" + s + "'");
    std::string body = s[0] == '+' ? s.substr(1) : s;
    Rational q;
    if (q.set_str(body, 10) != 0) throw ParseError("bad number '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

bool FieldElem::is_integer() const { return is_real() && re_.get_den() == 1; }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    im_ = i;
    return *this;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const FieldElem& a, const FieldElem& b) { return a <=> b; }

std::string FieldElem::str() const {
    if (is_real()) return rational_str(re_);
    std::string s = rational_str(re_);
    s += sgn(im_) < 0 ? "-" : "+";
    s += rational_str(abs(im_));
    s += " i";
    return s;
}

FieldElem FieldElem::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty field element");
    if (s.back() != 'i') return FieldElem(parse_rational(s));
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    Rational re(0);
    std::string im = body;
    if (split != std::string::npos) {
        re = parse_rational(body.substr(0, split));
        im = body.substr(split);
    }
    if (im.empty() || im == "+") return FieldElem(re, Rational(1));
    if (im == "-") return FieldElem(re, Rational(-1));
    return FieldElem(re, parse_rational(im));
}

}  // namespace ppa
