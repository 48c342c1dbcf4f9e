#pragma once

#include <array>
#include <vector>

#include "phecke/coset.hpp"
#include "phecke/hecke.hpp"
#include "phecke/mpoly.hpp"

namespace phecke {

// A homomorphism from the algebra to a commutative ring, in one of the
// three classified families.  Kinds 1 and 2 are normalized so that
// chi(V) = eps with eps^2 = 1, and chi(Y1) = chi(Y2) is forced:
//   kind 1: mu = -(1+q) - eps*lambda
//   kind 2: mu = -(q^2+q^3) + q*eps*lambda
// Kind 3 has chi(V) = 0 and chi(Y1)*chi(Y2) = 0; `mu_on_y1` selects which
// of the two carries the free value mu.
class Character {
  public:
    static Character kind1(int eps, MPoly lambda);
    static Character kind2(int eps, MPoly lambda);
    static Character kind3(MPoly lambda, MPoly mu, Gen mu_target);
    // Kind 2 with eps = +1 and lambda = q^3+2q^2+q; the derived mu equals
    // q^4+q^3.
    static Character index();

    // Symbolic lambda over {q,lambda}.
    static MPoly symbolic_lambda() { return MPoly::variable(1, VarSet::QL); }

    int kind() const { return kind_; }
    int eps() const { return eps_; }
    VarSet vars() const { return vars_; }
    const MPoly& lambda() const { return lambda_; }
    const MPoly& chi_y1() const { return chi_y1_; }
    const MPoly& chi_y2() const { return chi_y2_; }

    MPoly eval(const HeckeElement& h) const;
    MPoly eval(const CosetElement& e, CosetEngine& engine) const;

  private:
    Character() = default;
    int kind_ = 0;
    int eps_ = 0;  // 0 for kind 3
    VarSet vars_ = VarSet::QL;
    MPoly lambda_{VarSet::QL};
    MPoly chi_y1_{VarSet::QL};
    MPoly chi_y2_{VarSet::QL};
};

// a_k = chi(0,0,k) for k = 0..kmax; kinds 1 and 2 only.
std::vector<MPoly> a_seq(const Character& chi, int kmax, CosetEngine& engine);

// B_k = sum of chi(a,b,k) over the boundary labels ab = 0 of S_Delta.
std::vector<MPoly> b_seq(const Character& chi, int kmax, CosetEngine& engine);

// The four coefficients (c0,c1,c2,c3); Q_chi(t) = c3 + c2 t + c1 t^2 + c0 t^3.
std::array<MPoly, 4> cj_coeffs(const Character& chi);

// Witness of the rationality statement at truncation order N: S is the
// series of chi(T(q^k)), and residual = Q*S - P must vanish identically.
struct SeriesCertificate {
    int order;
    TruncSeries S;
    TruncSeries P;
    TruncSeries Q;
    TruncSeries residual;
    bool valid() const { return residual.is_zero(); }
};
SeriesCertificate series_certificate(const Character& chi, int order, CosetEngine& engine);

// Closed form of the index character on T(q^k):
//   (1 + q^2 - 2q^{2k+1}(1+q+q^2) + q^{3k+1}(1+q+q^2+q^3)) / ((q-1)^2 (1+q+q^2));
// the division is exact.
PolyQ index_closed_form(int k);

// Checks that the kind-1 denominator equals the rescaled degree-4 spin
// factor 1 - (lambda+eps) t + (q*mu+q^3) t^2 + eps q^4 t^3, symbolically in
// lambda.  `negate_t3` flips the cubic coefficient as a negative control.
bool euler_factor_identity(int eps, bool negate_t3 = false);

// Cross-multiplies the guessed index series (numerator 1 - q^2 t^2 over its
// cubic) against the actual one and reports true when they differ.
bool guess_counterexample();

// Expands P/Q as a power series (Q must have constant term 1).
std::vector<PolyQ> rational_series(const std::vector<PolyQ>& p, const std::vector<PolyQ>& q,
                                   int order);

}  // namespace phecke
