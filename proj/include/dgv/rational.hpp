#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace dgv {

using Rat = boost::multiprecision::cpp_rational;

std::string rat_str(const Rat& r);

// Sparse polynomial in up to three variables (x, y, t), exact rational
// coefficients. Enough for every formula in the audit catalog.
class Poly {
public:
    using Key = std::array<int, 3>;  // exponents of x, y, t

    Poly() = default;
    explicit Poly(const Rat& c);

    static Poly var(int i);       // 0 = x, 1 = y, 2 = t
    static Poly constant(long c) { return Poly(Rat(c)); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rat eval(const Rat& x, const Rat& y, const Rat& t) const;
    std::string str() const;

private:
    void trim();
    std::map<Key, Rat> terms_;
};

// Quotient of polynomials; denominators in the catalog never vanish on the
// sampled domain, which eval() asserts.
struct RatFun {
    Poly num;
    Poly den = Poly::constant(1);

    Rat eval(const Rat& x, const Rat& y, const Rat& t) const;
    std::string str() const;
};

// Tiny expression parser so catalog formulas can be transcribed as strings
// close to the source text. Grammar: + - * / ( ) integer x y t, with '/'
// restricted to a single top-level division per factor chain.
RatFun parse_ratfun(const std::string& text);
Poly parse_poly(const std::string& text);

}  // namespace dgv
