#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "phecke/polyq.hpp"

namespace phecke {

// The variable universe is q < lambda < mu; a value carries the set it was
// built over and arithmetic between different sets is rejected.
enum class VarSet { Q = 1, QL = 2, QLM = 3 };

inline int var_count(VarSet vs) { return static_cast<int>(vs); }

// Sparse polynomial over Z in at most the three variables q, lambda, mu.
// No zero coefficients are stored.
class MPoly {
  public:
    using Exponents = std::array<unsigned, 3>;  // powers of (q, lambda, mu)

    explicit MPoly(VarSet vars = VarSet::Q) : vars_(vars) {}

    static MPoly constant(const mpz_class& n, VarSet vars);
    // index: 0 = q, 1 = lambda, 2 = mu (must belong to `vars`).
    static MPoly variable(int index, VarSet vars);
    static MPoly from_polyq(const PolyQ& p, VarSet vars);

    VarSet vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Exponents, mpz_class>& terms() const { return terms_; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly operator+(const MPoly& rhs) const { MPoly r = *this; r += rhs; return r; }
    MPoly operator-(const MPoly& rhs) const { MPoly r = *this; r -= rhs; return r; }
    MPoly operator*(const MPoly& rhs) const;
    MPoly& operator*=(const MPoly& rhs) { *this = *this * rhs; return *this; }
    MPoly operator*(const mpz_class& n) const;
    MPoly pow(unsigned e) const;

    MPoly divexact(const MPoly& rhs) const;

    mpq_class eval(const mpq_class& q_value, const mpq_class& lambda_value = 0,
                   const mpq_class& mu_value = 0) const;

    // Only valid when lambda and mu do not occur.
    PolyQ to_polyq() const;

    bool operator==(const MPoly& rhs) const;
    bool operator!=(const MPoly& rhs) const { return !(*this == rhs); }

    // Terms ordered by exponent tuple; agrees with PolyQ::to_string on
    // q-only values.  Example: "-1-q+q^2*lambda".
    std::string to_string() const;
    bool negative_lead() const { return !terms_.empty() && terms_.begin()->second < 0; }
    bool is_single_term() const { return terms_.size() == 1; }

    void add_term(const Exponents& e, const mpz_class& coeff);

  private:
    void check_compatible(const MPoly& rhs) const;
    VarSet vars_;
    std::map<Exponents, mpz_class> terms_;
};

inline MPoly operator*(const mpz_class& n, const MPoly& p) { return p * n; }
inline MPoly operator*(long n, const MPoly& p) { return p * mpz_class(n); }

// Formal power series in t truncated at a fixed order N: exactly N+1
// coefficients; multiplication discards everything beyond t^N.
class TruncSeries {
  public:
    TruncSeries(int order, VarSet vars);
    static TruncSeries one(int order, VarSet vars);

    int order() const { return order_; }
    VarSet vars() const { return vars_; }
    const MPoly& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, MPoly value);

    TruncSeries operator+(const TruncSeries& rhs) const;
    TruncSeries operator-(const TruncSeries& rhs) const;
    TruncSeries operator*(const TruncSeries& rhs) const;

    bool is_zero() const;
    bool operator==(const TruncSeries& rhs) const;

    std::string to_string() const;  // e.g. "1+(q+q^2)*t+q^3*t^2"

  private:
    void check_compatible(const TruncSeries& rhs) const;
    int order_;
    VarSet vars_;
    std::vector<MPoly> coeffs_;
};

}  // namespace phecke
