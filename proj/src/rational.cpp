#include "dgv/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dgv {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Poly::Poly(const Rat& c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
}

Poly Poly::var(int i) {
    Poly p;
    Key k{0, 0, 0};
    k[i] = 1;
    p.terms_[k] = 1;
    return p;
}

void Poly::trim() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [k, c] : o.terms_) r.terms_[k] += c;
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [k, c] : o.terms_) r.terms_[k] -= c;
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            r.terms_[k] += ca * cb;
        }
    r.trim();
    return r;
}

Rat Poly::eval(const Rat& x, const Rat& y, const Rat& t) const {
    Rat acc = 0;
    for (const auto& [k, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < k[0]; ++i) term *= x;
        for (int i = 0; i < k[1]; ++i) term *= y;
        for (int i = 0; i < k[2]; ++i) term *= t;
        acc += term;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static const char* names[3] = {"x", "y", "t"};
    for (const auto& [k, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = c > 0 ? c : Rat(-c);
        bool unit = (a == 1) && (k[0] + k[1] + k[2] > 0);
        if (!unit) os << a;
        for (int i = 0; i < 3; ++i)
            for (int e = 0; e < k[i]; ++e) os << names[i];
    }
    return os.str();
}

Rat RatFun::eval(const Rat& x, const Rat& y, const Rat& t) const {
    Rat d = den.eval(x, y, t);
    if (d == 0) throw std::runtime_error("ratfun: denominator vanished at sample point");
    return num.eval(x, y, t) / d;
}

std::string RatFun::str() const {
    if (den == Poly::constant(1)) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

namespace {

// Recursive-descent parser over + - * / ( ) int x y t.
struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("formula parse error at '" + s.substr(pos) + "': " + msg);
    }

    RatFun expr() {
        RatFun acc = term();
        for (;;) {
            skip();
            if (eat('+')) {
                RatFun r = term();
                acc = add(acc, r, 1);
            } else if (eat('-')) {
                RatFun r = term();
                acc = add(acc, r, -1);
            } else {
                return acc;
            }
        }
    }

    static RatFun add(const RatFun& a, const RatFun& b, int sign) {
        RatFun r;
        Poly sb = sign > 0 ? b.num : -b.num;
        r.num = a.num * b.den + sb * a.den;
        r.den = a.den * b.den;
        return r;
    }

    RatFun term() {
        RatFun acc = factor();
        for (;;) {
            skip();
            if (eat('*')) {
                RatFun r = factor();
                acc.num = acc.num * r.num;
                acc.den = acc.den * r.den;
            } else if (eat('/')) {
                RatFun r = factor();
                if (!(r.den == Poly::constant(1))) fail("nested division");
                acc.den = acc.den * r.num;
            } else if (pos < s.size() && (s[pos] == '(' || std::isalnum(static_cast<unsigned char>(s[pos])))) {
                // implicit multiplication, e.g. 2x(1-y)
                RatFun r = factor();
                acc.num = acc.num * r.num;
                acc.den = acc.den * r.den;
            } else {
                return acc;
            }
        }
    }

    RatFun factor() {
        skip();
        if (eat('-')) {
            RatFun r = factor();
            r.num = -r.num;
            return r;
        }
        if (eat('(')) {
            RatFun r = expr();
            if (!eat(')')) fail("expected ')'");
            return postfix(r);
        }
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + (s[pos++] - '0');
            return postfix({Poly::constant(v), Poly::constant(1)});
        }
        if (c == 'x' || c == 'y' || c == 't') {
            ++pos;
            int idx = c == 'x' ? 0 : (c == 'y' ? 1 : 2);
            return postfix({Poly::var(idx), Poly::constant(1)});
        }
        fail("unexpected character");
    }

    // caret powers: only small positive integer exponents appear (t^2 etc.)
    RatFun postfix(RatFun r) {
        skip();
        while (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected exponent");
            int e = s[pos++] - '0';
            Poly n = Poly::constant(1), d = Poly::constant(1);
            for (int i = 0; i < e; ++i) {
                n = n * r.num;
                d = d * r.den;
            }
            r = {n, d};
            skip();
        }
        return r;
    }
};

}  // namespace

RatFun parse_ratfun(const std::string& text) {
    Parser p(text);
    RatFun r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

Poly parse_poly(const std::string& text) {
    RatFun r = parse_ratfun(text);
    if (!(r.den == Poly::constant(1)))
        throw std::runtime_error("expected polynomial, got denominator: " + text);
    return r.num;
}

}  // namespace dgv
