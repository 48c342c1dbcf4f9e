#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "phecke/errors.hpp"

namespace phecke {

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients, stored by ascending power.  Invariant: the coefficient
// vector never ends in a zero; the zero polynomial is the empty vector.
class PolyQ {
  public:
    PolyQ() = default;
    PolyQ(long n) { if (n != 0) coeffs_.emplace_back(n); }
    PolyQ(const mpz_class& n) { if (n != 0) coeffs_.push_back(n); }

    // q^power, or coeff*q^power.
    static PolyQ q(unsigned power = 1);
    static PolyQ term(const mpz_class& coeff, unsigned power);
    static PolyQ from_coeffs(std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coeff(int power) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& rhs);
    PolyQ& operator-=(const PolyQ& rhs);
    PolyQ& operator*=(const PolyQ& rhs) { *this = *this * rhs; return *this; }
    PolyQ operator+(const PolyQ& rhs) const { PolyQ r = *this; r += rhs; return r; }
    PolyQ operator-(const PolyQ& rhs) const { PolyQ r = *this; r -= rhs; return r; }
    PolyQ operator*(const PolyQ& rhs) const;
    PolyQ pow(unsigned e) const;

    // Exact quotient; throws NonDivisibleError when rhs does not divide
    // *this in Z[q].
    PolyQ divexact(const PolyQ& rhs) const;

    mpq_class eval(const mpq_class& q_value) const;

    bool operator==(const PolyQ& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const PolyQ& rhs) const { return coeffs_ != rhs.coeffs_; }

    // Ascending-power rendering without spaces: "1+q+2*q^2+q^3"; "0" if zero.
    std::string to_string() const;

    // True when the lowest nonzero coefficient is negative; used by element
    // printers to pull a minus sign out of a term.
    bool negative_lead() const {
        for (const auto& c : coeffs_)
            if (c != 0) return c < 0;
        return false;
    }
    // Single term c*q^k (printable without parentheses).
    bool is_single_term() const;

  private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

inline PolyQ operator*(const mpz_class& n, const PolyQ& p) { return PolyQ(n) * p; }
inline PolyQ operator*(long n, const PolyQ& p) { return PolyQ(n) * p; }

}  // namespace phecke
