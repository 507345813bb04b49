#include "coprod/arith/fp.hpp"

#include "coprod/errors.hpp"

namespace coprod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

void check_same_field(const FpElem& a, const FpElem& b) {
    if (a.modulus() != b.modulus())
        throw ArithmeticError("mixing Z/" + std::to_string(a.modulus()) + " and Z/" +
                              std::to_string(b.modulus()));
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

FpElem::FpElem(std::uint64_t value, std::uint64_t p) : v_(0), p_(p) {
    if (p >= (1ULL << 32) || !is_prime(p))
        throw ArithmeticError("modulus " + std::to_string(p) + " is not a supported prime");
    v_ = value % p;
}

FpElem FpElem::inverse() const {
    if (v_ == 0) throw ArithmeticError("inverse of zero in Z/" + std::to_string(p_));
    return {powmod(v_, p_ - 2, p_), p_, Trusted{}};
}

FpElem operator+(const FpElem& a, const FpElem& b) {
    check_same_field(a, b);
    std::uint64_t s = a.v_ + b.v_;
    return {s >= a.p_ ? s - a.p_ : s, a.p_, FpElem::Trusted{}};
}

FpElem operator-(const FpElem& a, const FpElem& b) {
    check_same_field(a, b);
    return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, FpElem::Trusted{}};
}

FpElem operator*(const FpElem& a, const FpElem& b) {
    check_same_field(a, b);
    return {mulmod(a.v_, b.v_, a.p_), a.p_, FpElem::Trusted{}};
}

FpElem rat_to_fp(const Rat& x, std::uint64_t p) {
    FpElem probe(0, p);  // validates p
    std::uint64_t d = mpz_fdiv_ui(x.den().get_mpz_t(), p);
    if (d == 0)
        throw ArithmeticError("prime " + std::to_string(p) + " divides the denominator of " + x.str());
    std::uint64_t n = mpz_fdiv_ui(x.num().get_mpz_t(), p);
    return FpElem(n, p) * FpElem(d, p).inverse();
}

}  // namespace coprod
