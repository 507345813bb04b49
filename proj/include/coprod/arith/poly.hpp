#pragma once

#include "coprod/arith/rat.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace coprod {

/// Univariate polynomial over Q in the indeterminate t, coefficients stored
/// lowest degree first. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    /// The monomial c·t^k.
    static Poly monomial(const Rat& c, std::size_t k);
    /// t
    static Poly t() { return monomial(Rat(1), 1); }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    [[nodiscard]] Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(); }
    [[nodiscard]] Rat lead() const { return c_.empty() ? Rat() : c_.back(); }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    [[nodiscard]] Poly monic() const;
    /// Horner evaluation at t = s.
    [[nodiscard]] Rat eval(const Rat& s) const;

    [[nodiscard]] std::string str() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rat& c);
    friend Poly operator*(const Poly& a, int c) { return a * Rat(c); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder of Euclidean division. Throws on b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// a / b when b divides a exactly; throws ArithmeticError otherwise.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// Monic gcd. Throws ArithmeticError when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm. Throws ArithmeticError when either input is zero.
Poly poly_lcm(const Poly& a, const Poly& b);

}  // namespace coprod
