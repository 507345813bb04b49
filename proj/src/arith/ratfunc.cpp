#include "coprod/arith/ratfunc.hpp"

#include "coprod/errors.hpp"

namespace coprod {

RatFunc RatFunc::from_coprime(Poly num, Poly den) {
    if (num.is_zero()) return {};
    Rat lead = den.lead();
    if (!lead.is_one()) {
        Rat inv = lead.inverse();
        num = num * inv;
        den = den * inv;
    }
    return RatFunc(std::move(num), std::move(den), Normalized{});
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.is_one()) {
        *this = from_coprime(num, den);
    } else {
        *this = from_coprime(poly_div_exact(num, g), poly_div_exact(den, g));
    }
}

Rat RatFunc::eval(const Rat& s) const {
    Rat d = den_.eval(s);
    if (d.is_zero()) throw ArithmeticError("rational function has a pole at t = " + s.str());
    return num_.eval(s) / d;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero rational function");
    return from_coprime(den_, num_);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Normalized{});
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, RatFunc::Normalized{});
    if (b.den_.is_one()) return RatFunc(b.num_ * a.den_ + a.num_, a.den_, RatFunc::Normalized{});
    // Henrici: with g = gcd(da, db), only g can share factors with the sum.
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Normalized{});
    }
    Poly da = poly_div_exact(a.den_, g);
    Poly db = poly_div_exact(b.den_, g);
    Poly num = a.num_ * db + b.num_ * da;
    if (num.is_zero()) return {};
    Poly h = poly_gcd(num, g);
    if (!h.is_one()) {
        num = poly_div_exact(num, h);
        g = poly_div_exact(g, h);
    }
    return RatFunc::from_coprime(std::move(num), da * db * g);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one())
        return RatFunc(a.num_ * b.num_, Poly(1), RatFunc::Normalized{});
    // Cross-cancel: gcd(na, db) and gcd(nb, da).
    Poly na = a.num_, da = a.den_, nb = b.num_, db = b.den_;
    if (!db.is_one()) {
        Poly g = poly_gcd(na, db);
        if (!g.is_one()) {
            na = poly_div_exact(na, g);
            db = poly_div_exact(db, g);
        }
    }
    if (!da.is_one()) {
        Poly g = poly_gcd(nb, da);
        if (!g.is_one()) {
            nb = poly_div_exact(nb, g);
            da = poly_div_exact(da, g);
        }
    }
    return RatFunc::from_coprime(na * nb, da * db);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

}  // namespace coprod
