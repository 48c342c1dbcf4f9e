#pragma once

#include <map>
#include <string>
#include <vector>

#include "phecke/polyq.hpp"

namespace phecke {

enum class Gen { V, X, Y1, Y2 };

// Exponent tuple of a normal-form word V^v X^x Y1^y1 Y2^y2.  Basis
// monomials additionally satisfy y1*y2 = 0.
struct Monomial {
    int v = 0, x = 0, y1 = 0, y2 = 0;
    int degree() const { return v + x + 2 * (y1 + y2); }
    bool is_normal() const { return y1 == 0 || y2 == 0; }
    bool operator==(const Monomial&) const = default;
};

// Graded order: lower degree first; within a degree, V-heavy words first
// (lexicographically descending exponent tuples).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.v != b.v) return a.v > b.v;
        if (a.x != b.x) return a.x > b.x;
        if (a.y1 != b.y1) return a.y1 > b.y1;
        return a.y2 > b.y2;
    }
};

// Element of the algebra in the monomial normal-form basis: a finite
// Z[q]-combination of basis monomials.  Zero coefficients are never stored.
class HeckeElement {
  public:
    HeckeElement() = default;

    static HeckeElement zero() { return {}; }
    static HeckeElement one() { return monomial({}); }
    static HeckeElement monomial(const Monomial& m, PolyQ coeff = PolyQ(1));
    static HeckeElement generator(Gen g);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, PolyQ, MonomialOrder>& terms() const { return terms_; }
    // Maximal degree of a term; -1 for the zero element.
    int degree() const;

    void add_term(const Monomial& m, const PolyQ& coeff);
    void add_scaled(const HeckeElement& e, const PolyQ& coeff);

    HeckeElement operator-() const;
    HeckeElement operator+(const HeckeElement& rhs) const;
    HeckeElement operator-(const HeckeElement& rhs) const;
    HeckeElement operator*(const HeckeElement& rhs) const;
    HeckeElement& operator+=(const HeckeElement& rhs) { add_scaled(rhs, PolyQ(1)); return *this; }
    HeckeElement& operator-=(const HeckeElement& rhs) { add_scaled(rhs, PolyQ(-1)); return *this; }
    HeckeElement scaled(const PolyQ& coeff) const;
    HeckeElement pow(unsigned e) const;

    // The degree-preserving automorphism exchanging Y1 and Y2.
    HeckeElement alpha() const;
    // The anti-automorphism fixing all four generators: each word is
    // reversed and renormalized.
    HeckeElement beta() const;
    // Canonical representative modulo the two-sided ideal (V^2 - 1):
    // every V-exponent is reduced mod 2.
    HeckeElement gk_project() const;

    std::map<int, HeckeElement> degree_components() const;

    bool operator==(const HeckeElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const HeckeElement& rhs) const { return terms_ != rhs.terms_; }

  private:
    std::map<Monomial, PolyQ, MonomialOrder> terms_;
};

inline HeckeElement operator*(const PolyQ& c, const HeckeElement& e) { return e.scaled(c); }

HeckeElement mul(const HeckeElement& lhs, const HeckeElement& rhs);

// All degree-k basis monomials (y1*y2 = 0) in the canonical order.
std::vector<Monomial> monomial_basis(int k);

// rank of the degree-k graded piece: (2k^2+4k+3+(-1)^k)/4.
long hk_rank(int k);

// One defining relation as a Z[q]-combination of generator words; the
// relations r1..r7 generate the kernel of the free-algebra presentation.
struct RelationTerm {
    PolyQ coeff;
    std::vector<Gen> word;
};
const std::vector<std::vector<RelationTerm>>& defining_relations();

}  // namespace phecke
