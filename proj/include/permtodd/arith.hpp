#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permtodd {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised when an argument violates a documented precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// n/d in lowest terms, d != 0.
Rational make_rational(long n, long d = 1);
Rational make_rational(const BigInt& n, const BigInt& d);

// "p/q", or "p" when q == 1. A leading '-' marks negatives.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Coefficients td_0 .. td_{m_max} of x / (1 - e^{-x}).
std::vector<Rational> todd_coefficients(int m_max);

// Memoized td_m.
Rational todd_coefficient(int m);

// Zero when k < 0 or k > n.
BigInt binomial(long n, long k);

class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> coeffs);

    static PolynomialQ constant(const Rational& c);
    // (slope * t + offset)
    static PolynomialQ linear(const Rational& slope, const Rational& offset);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Zero when i is beyond the degree.
    Rational coefficient(int i) const;
    Rational leading() const;

    Rational operator()(const Rational& t) const;

    PolynomialQ& operator+=(const PolynomialQ& rhs);
    PolynomialQ& operator-=(const PolynomialQ& rhs);
    PolynomialQ& operator*=(const PolynomialQ& rhs);
    PolynomialQ& operator*=(const Rational& c);

    friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ& b) { return a += b; }
    friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ& b) { return a -= b; }
    friend PolynomialQ operator*(PolynomialQ a, const PolynomialQ& b) { return a *= b; }
    friend PolynomialQ operator*(PolynomialQ a, const Rational& c) { return a *= c; }
    friend bool operator==(const PolynomialQ& a, const PolynomialQ& b) = default;

    // Human-readable form in the variable t, highest power first, e.g. "3t^2+3t+1".
    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Exact Lagrange interpolation through (x_i, y_i). Throws DomainError on
// duplicate abscissae or an empty sample set.
PolynomialQ interpolate(std::span<const std::pair<long, Rational>> points);

}  // namespace permtodd
