#pragma once

#include "coprod/arith/rat.hpp"

#include <cstdint>
#include <string>

namespace coprod {

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Element of Z/p. The modulus travels with the value; arithmetic between
/// elements of different fields throws ArithmeticError.
class FpElem {
public:
    /// Throws ArithmeticError if p is not prime (p < 2^32 supported).
    FpElem(std::uint64_t value, std::uint64_t p);

    [[nodiscard]] std::uint64_t value() const { return v_; }
    [[nodiscard]] std::uint64_t modulus() const { return p_; }
    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }

    [[nodiscard]] FpElem inverse() const;
    [[nodiscard]] std::string str() const { return std::to_string(v_); }

    FpElem operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_, Trusted{}}; }
    friend FpElem operator+(const FpElem& a, const FpElem& b);
    friend FpElem operator-(const FpElem& a, const FpElem& b);
    friend FpElem operator*(const FpElem& a, const FpElem& b);
    friend FpElem operator/(const FpElem& a, const FpElem& b) { return a * b.inverse(); }
    FpElem& operator+=(const FpElem& o) { return *this = *this + o; }
    FpElem& operator-=(const FpElem& o) { return *this = *this - o; }
    FpElem& operator*=(const FpElem& o) { return *this = *this * o; }
    friend bool operator==(const FpElem& a, const FpElem& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    [[nodiscard]] FpElem zero_like() const { return {0, p_, Trusted{}}; }
    [[nodiscard]] FpElem one_like() const { return {1, p_, Trusted{}}; }

private:
    struct Trusted {};
    FpElem(std::uint64_t value, std::uint64_t p, Trusted) : v_(value), p_(p) {}
    std::uint64_t v_;
    std::uint64_t p_;
};

/// numerator · denominator⁻¹ mod p. Throws ArithmeticError when p divides the
/// denominator.
FpElem rat_to_fp(const Rat& x, std::uint64_t p);

}  // namespace coprod
