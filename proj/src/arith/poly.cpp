#include "coprod/arith/poly.hpp"

#include "coprod/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

namespace coprod {

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    Rat inv = c_.back().inverse();
    Poly r = *this;
    for (auto& x : r.c_) x *= inv;
    return r;
}

Rat Poly::eval(const Rat& s) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= s;
        acc += *it;
    }
    return acc;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag.is_one();
        if (!unit || i == 0) os << mag;
        if (i > 0) {
            if (!unit) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i].raw() * b.c_[j].raw();
    }
    std::vector<Rat> out;
    out.reserve(v.size());
    for (auto& q : v) out.emplace_back(q.get_num(), q.get_den());
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Rat& c) {
    if (c.is_zero()) return {};
    Poly r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    Rat inv_lead = b.lead().inverse();
    std::vector<Rat> quo(a.degree() - db + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat f = rem[k + db] * inv_lead;
        quo[k] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
    return q;
}

namespace {

using IntPoly = std::vector<BigInt>;  // lowest degree first, trimmed

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Scales a rational polynomial to a primitive integer polynomial.
IntPoly primitive_integer(const Poly& p) {
    BigInt den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.den());
    IntPoly out;
    out.reserve(p.coeffs().size());
    BigInt content = 0;
    for (const auto& c : p.coeffs()) {
        BigInt v = c.num() * (den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

void make_primitive(IntPoly& p) {
    BigInt content = 0;
    for (const auto& v : p) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        if (content == 1) return;
    }
    if (content > 1)
        for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        BigInt la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& v : a) v *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

// Degree of gcd(a, b) over Z/q. Returns -1 when q divides a leading
// coefficient, in which case the result carries no information.
int modular_gcd_degree(const IntPoly& a, const IntPoly& b, std::uint64_t q) {
    auto reduce = [q](const IntPoly& p) {
        std::vector<std::uint64_t> r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = mpz_fdiv_ui(p[i].get_mpz_t(), q);
        return r;
    };
    auto mulmod = [q](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % q);
    };
    auto invmod = [&](std::uint64_t x) {
        std::uint64_t r = 1, e = q - 2;
        while (e) {
            if (e & 1) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1;
        }
        return r;
    };
    auto x = reduce(a);
    auto y = reduce(b);
    if (x.back() == 0 || y.back() == 0) return -1;
    auto strip = [](std::vector<std::uint64_t>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::uint64_t inv = invmod(y.back());
        while (x.size() >= y.size()) {
            std::uint64_t f = mulmod(x.back(), inv);
            std::size_t shift = x.size() - y.size();
            for (std::size_t j = 0; j < y.size(); ++j)
                x[shift + j] = (x[shift + j] + q - mulmod(f, y[j])) % q;
            strip(x);
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;
}

constexpr std::array<std::uint64_t, 2> kCheckPrimes = {4294967291ULL, 4294967279ULL};

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw ArithmeticError("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

    IntPoly x = primitive_integer(a);
    IntPoly y = primitive_integer(b);

    // Over Z/q with q not dividing either leading coefficient, the gcd degree
    // bounds the true gcd degree from above; zero settles it.
    for (std::uint64_t q : kCheckPrimes) {
        if (modular_gcd_degree(x, y, q) == 0) return Poly(Rat(1));
    }

    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        IntPoly r = pseudo_remainder(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(x.size());
    for (auto& v : x) coeffs.emplace_back(v);
    return Poly(std::move(coeffs)).monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw ArithmeticError("lcm with the zero polynomial");
    Poly g = poly_gcd(a, b);
    return (poly_div_exact(a, g) * b).monic();
}

}  // namespace coprod
