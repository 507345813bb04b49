#pragma once

#include "coprod/arith/poly.hpp"

#include <string>

namespace coprod {

/// Element of Q(t) kept in normal form: gcd(num, den) = 1, den monic.
/// Equality of values is equality of normal forms.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rat(c)) {}          // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    /// Normalizes num/den. Throws ArithmeticError on a zero denominator.
    RatFunc(const Poly& num, const Poly& den);

    [[nodiscard]] const Poly& num() const { return num_; }
    [[nodiscard]] const Poly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return den_.is_one() && num_.is_one(); }
    /// True when the value does not depend on t.
    [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// Value at t = s. Throws ArithmeticError if den(s) = 0.
    [[nodiscard]] Rat eval(const Rat& s) const;
    [[nodiscard]] RatFunc inverse() const;
    [[nodiscard]] std::string str() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    [[nodiscard]] RatFunc zero_like() const { return {}; }
    [[nodiscard]] RatFunc one_like() const { return RatFunc(1); }

private:
    struct Normalized {};
    // Trusts that gcd(num, den) = 1 and den is monic.
    RatFunc(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
    static RatFunc from_coprime(Poly num, Poly den);

    Poly num_;
    Poly den_;
};

}  // namespace coprod
