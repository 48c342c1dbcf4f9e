#pragma once

#include <array>
#include <map>
#include <vector>

#include "phecke/hecke.hpp"
#include "phecke/polyq.hpp"

namespace phecke {

// Double-coset label: the cosets are indexed by delta in {0,1} and a
// normalized triple (a,b,c) with 0 <= a <= c-a and 0 <= b <= c-b; delta = 1
// marks the w-shifted coset.  Degree is c + delta.
struct CosetLabel {
    int delta = 0;
    int a = 0, b = 0, c = 0;
    int degree() const { return c + delta; }
    bool operator==(const CosetLabel&) const = default;
};

// Ascending degree; within a degree, delta = 0 before delta = 1, then
// lexicographic on (a,b).
struct CosetLabelOrder {
    bool operator()(const CosetLabel& x, const CosetLabel& y) const {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        if (x.delta != y.delta) return x.delta < y.delta;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

bool in_s_delta(int a, int b, int c);
// Throws InvalidTripleError outside D_Delta; otherwise returns
// (min(a,c-a), min(b,c-b), c).
std::array<int, 3> normalize_triple(int a, int b, int c);

class CosetElement {
  public:
    CosetElement() = default;
    static CosetElement zero() { return {}; }
    static CosetElement unit();  // T(0,0,0)
    static CosetElement label(const CosetLabel& l, PolyQ coeff = PolyQ(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<CosetLabel, PolyQ, CosetLabelOrder>& terms() const { return terms_; }

    void add_term(const CosetLabel& l, const PolyQ& coeff);
    void add_scaled(const CosetElement& e, const PolyQ& coeff);

    CosetElement operator+(const CosetElement& rhs) const;
    CosetElement operator-(const CosetElement& rhs) const;
    CosetElement scaled(const PolyQ& coeff) const;

    bool operator==(const CosetElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const CosetElement& rhs) const { return terms_ != rhs.terms_; }

  private:
    std::map<CosetLabel, PolyQ, CosetLabelOrder> terms_;
};

// All degree-k labels: (0,(a,b,k)) followed by (1,(a,b,k-1)); the count is
// hk_rank(k).
std::vector<CosetLabel> coset_enumerate(int k);

// The sum of all degree-k cosets with coefficient 1.
CosetElement t_qk(int k);

// Row of the degree-1 multiplication table at an S_Delta triple.  Targets:
//   n1 (a,b,c+1)   n2 (a,b+1,c+1)   n3 (a+1,b,c+1)
//   n4 (a+1,b+1,c+1)   n5 delta-shift of (a,b,c).
struct XTableRow {
    int id = 0;  // 1..9, row position in the table
    std::array<PolyQ, 5> n;
};
XTableRow degree1_row(int a, int b, int c);

// Row of the degree-2 multiplication table.  Targets:
//   m1 (a,b+1,c+2)   m2 (a+1,b+1,c+2)   m3 (a+2,b+1,c+2)
//   m4 shift (a,b,c+1)   m5 shift (a+1,b,c+1)   m6 shift (a+1,b+1,c+1).
struct YTableRow {
    int id = 0;  // 1..14
    std::array<PolyQ, 6> m;
};
YTableRow degree2_row(int a, int b, int c);

// Left product of X = T(0,0,1), resp. Y1 = T(0,1,2), with T(a,b,c): the
// table row with entries dropped whenever the target leaves S_Delta.
CosetElement mul_x_coset(int a, int b, int c);
CosetElement mul_y1_coset(int a, int b, int c);

// Left multiplication by one generator, extended linearly.  V toggles delta
// (a second V advances the triple by (1,1,2)); X and Y1 act through the
// tables with the w-shift commuting out front; Y2 acts as the
// alpha-conjugate of Y1.
CosetElement mul_generator_coset(Gen g, const CosetElement& e);

// (delta,(a,b,c)) -> (delta,(b,a,c)) on every label.
CosetElement alpha_coset(const CosetElement& e);

// Expands each monomial's generator word against the identity coset.
CosetElement monomial_to_coset(const HeckeElement& h);

// Change of basis coset -> monomial via the generation recursion, memoized
// per engine instance.  Intended for single-threaded use.
class CosetEngine {
  public:
    const HeckeElement& to_monomial(const CosetLabel& l);
    HeckeElement to_monomial(const CosetElement& e);
    // Product computed through the monomial basis and converted back; the
    // coefficients read off the result are the structure constants.
    CosetElement mul(const CosetElement& lhs, const CosetElement& rhs);

  private:
    std::map<CosetLabel, HeckeElement, CosetLabelOrder> memo_;
};

}  // namespace phecke
