#include "coprod/arith/rat.hpp"

#include "coprod/errors.hpp"

namespace coprod {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s, 10));
        BigInt n(s.substr(0, slash), 10);
        BigInt d(s.substr(slash + 1), 10);
        if (d == 0) throw ValidationError("rational '" + s + "' has zero denominator");
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse rational '" + s + "'");
    }
}

std::string Rat::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero rational");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rat(std::move(r));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    os << r.raw();
    return os;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace coprod
