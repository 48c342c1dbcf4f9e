#pragma once

#include <array>
#include <vector>

#include "phecke/hecke.hpp"

namespace phecke {

// Exponents of Z1^a Z2^b Z3^c; the degree is a + 2(b+c).
struct CenterMonomial {
    int a = 0, b = 0, c = 0;
    int degree() const { return a + 2 * (b + c); }
    bool operator==(const CenterMonomial&) const = default;
};

// Z1 = X - (q^2-1)V, Z2 = (q-1)VX - (Y1+Y2), Z3 = V^2.
std::array<HeckeElement, 3> center_generators();

// Commutation with the four generators suffices since they generate.
bool is_central(const HeckeElement& h);

// All (a,b,c) with a + 2(b+c) = k, lexicographically ascending.
std::vector<CenterMonomial> center_monomials(int k);

// Expansions of Z1^a Z2^b Z3^c in the monomial basis.
std::vector<HeckeElement> center_basis(int k);

// Number of solutions of a + 2(b+c) = k.
long center_rank(int k);

}  // namespace phecke
