#include "phecke/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace phecke {

HeckeElement HeckeElement::monomial(const Monomial& m, PolyQ coeff) {
    if (!m.is_normal()) throw std::invalid_argument("monomial violates y1*y2 = 0");
    HeckeElement e;
    e.add_term(m, coeff);
    return e;
}

HeckeElement HeckeElement::generator(Gen g) {
    switch (g) {
        case Gen::V: return monomial({1, 0, 0, 0});
        case Gen::X: return monomial({0, 1, 0, 0});
        case Gen::Y1: return monomial({0, 0, 1, 0});
        case Gen::Y2: return monomial({0, 0, 0, 1});
    }
    throw std::logic_error("unreachable");
}

int HeckeElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void HeckeElement::add_term(const Monomial& m, const PolyQ& coeff) {
    if (coeff.is_zero()) return;
    if (!m.is_normal() || m.v < 0 || m.x < 0 || m.y1 < 0 || m.y2 < 0)
        throw std::invalid_argument("monomial violates the normal-form invariants");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HeckeElement::add_scaled(const HeckeElement& e, const PolyQ& coeff) {
    if (coeff.is_zero()) return;
    for (const auto& [m, c] : e.terms_) add_term(m, c * coeff);
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

HeckeElement HeckeElement::operator+(const HeckeElement& rhs) const {
    HeckeElement r = *this;
    r.add_scaled(rhs, PolyQ(1));
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& rhs) const {
    HeckeElement r = *this;
    r.add_scaled(rhs, PolyQ(-1));
    return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& rhs) const { return mul(*this, rhs); }

HeckeElement HeckeElement::scaled(const PolyQ& coeff) const {
    HeckeElement r;
    r.add_scaled(*this, coeff);
    return r;
}

HeckeElement HeckeElement::pow(unsigned e) const {
    HeckeElement r = one(), base = *this;
    while (e) {
        if (e & 1u) r = mul(r, base);
        e >>= 1u;
        if (e) base = mul(base, base);
    }
    return r;
}

namespace {

// Right multiplication of a normal-form monomial by one generator.  V slides
// leftward through the whole word in one step (XV = VX, Y1 V = V Y2,
// Y2 V = V Y1, so the Y-block swaps type).  X slides past a trailing Y via
//   Y1 X = X Y1 + (1-q^2) V Y1 - (1-q^2) V Y2,
//   Y2 X = X Y2 - (1-q^2) V Y1 + (1-q^2) V Y2,
// and an appended Y of the opposite type eliminates the adjacent pair via
// the degree-4 relations, recursing until every term carries a single Y type.
HeckeElement mul_gen(const Monomial& m, Gen g);

HeckeElement mul_elem_gen(const HeckeElement& e, Gen g) {
    HeckeElement out;
    for (const auto& [m, c] : e.terms()) out.add_scaled(mul_gen(m, g), c);
    return out;
}

HeckeElement mul_word(const Monomial& base, std::initializer_list<Gen> word) {
    HeckeElement e = HeckeElement::monomial(base);
    for (Gen g : word) e = mul_elem_gen(e, g);
    return e;
}

const PolyQ& one_minus_q2() {
    static const PolyQ p = PolyQ(1) - PolyQ::q(2);
    return p;
}

// n * (Y2 Y1) when last == Y1, n * (Y1 Y2) when last == Y2.  Both expansions
// read, with `other` the remaining Y type:
//   -q^2(q+1)^2 V^4 - q(q^2-1) V^3 X + q V^2 X^2
//   + (q-1) V X last - (1+q^3) V^2 last - q(q+1) V^2 other.
HeckeElement append_eliminated_pair(const Monomial& n, Gen last) {
    static const PolyQ c_v4 = -(PolyQ::q(2) * (PolyQ::q() + PolyQ(1)).pow(2));
    static const PolyQ c_v3x = -(PolyQ::q() * (PolyQ::q(2) - PolyQ(1)));
    static const PolyQ c_v2x2 = PolyQ::q();
    static const PolyQ c_vx_last = PolyQ::q() - PolyQ(1);
    static const PolyQ c_v2_last = -(PolyQ(1) + PolyQ::q(3));
    static const PolyQ c_v2_other = -(PolyQ::q() * (PolyQ::q() + PolyQ(1)));
    const Gen other = (last == Gen::Y1) ? Gen::Y2 : Gen::Y1;
    HeckeElement out;
    out.add_scaled(mul_word(n, {Gen::V, Gen::V, Gen::V, Gen::V}), c_v4);
    out.add_scaled(mul_word(n, {Gen::V, Gen::V, Gen::V, Gen::X}), c_v3x);
    out.add_scaled(mul_word(n, {Gen::V, Gen::V, Gen::X, Gen::X}), c_v2x2);
    out.add_scaled(mul_word(n, {Gen::V, Gen::X, last}), c_vx_last);
    out.add_scaled(mul_word(n, {Gen::V, Gen::V, last}), c_v2_last);
    out.add_scaled(mul_word(n, {Gen::V, Gen::V, other}), c_v2_other);
    return out;
}

HeckeElement mul_gen(const Monomial& m, Gen g) {
    switch (g) {
        case Gen::V:
            return HeckeElement::monomial({m.v + 1, m.x, m.y2, m.y1});
        case Gen::X: {
            if (m.y1 == 0 && m.y2 == 0) return HeckeElement::monomial({m.v, m.x + 1, 0, 0});
            if (m.y1 > 0) {
                Monomial n{m.v, m.x, m.y1 - 1, 0};
                HeckeElement out = mul_elem_gen(mul_gen(n, Gen::X), Gen::Y1);
                out.add_scaled(mul_word(n, {Gen::V, Gen::Y1}), one_minus_q2());
                out.add_scaled(mul_word(n, {Gen::V, Gen::Y2}), -one_minus_q2());
                return out;
            }
            Monomial n{m.v, m.x, 0, m.y2 - 1};
            HeckeElement out = mul_elem_gen(mul_gen(n, Gen::X), Gen::Y2);
            out.add_scaled(mul_word(n, {Gen::V, Gen::Y1}), -one_minus_q2());
            out.add_scaled(mul_word(n, {Gen::V, Gen::Y2}), one_minus_q2());
            return out;
        }
        case Gen::Y1: {
            if (m.y2 == 0) return HeckeElement::monomial({m.v, m.x, m.y1 + 1, 0});
            return append_eliminated_pair({m.v, m.x, 0, m.y2 - 1}, Gen::Y1);
        }
        case Gen::Y2: {
            if (m.y1 == 0) return HeckeElement::monomial({m.v, m.x, 0, m.y2 + 1});
            return append_eliminated_pair({m.v, m.x, m.y1 - 1, 0}, Gen::Y2);
        }
    }
    throw std::logic_error("unreachable");
}

HeckeElement mul_mono_word(const HeckeElement& lhs, const Monomial& m) {
    HeckeElement e = lhs;
    for (int i = 0; i < m.v; ++i) e = mul_elem_gen(e, Gen::V);
    for (int i = 0; i < m.x; ++i) e = mul_elem_gen(e, Gen::X);
    for (int i = 0; i < m.y1; ++i) e = mul_elem_gen(e, Gen::Y1);
    for (int i = 0; i < m.y2; ++i) e = mul_elem_gen(e, Gen::Y2);
    return e;
}

}  // namespace

HeckeElement mul(const HeckeElement& lhs, const HeckeElement& rhs) {
    HeckeElement out;
    for (const auto& [m, c] : rhs.terms()) out.add_scaled(mul_mono_word(lhs, m), c);
    return out;
}

HeckeElement HeckeElement::alpha() const {
    HeckeElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.v, m.x, m.y2, m.y1}, c);
    return r;
}

HeckeElement HeckeElement::beta() const {
    HeckeElement r;
    for (const auto& [m, c] : terms_) {
        // Reversed word Y2^y2 Y1^y1 X^x V^v, renormalized.
        HeckeElement word = one();
        for (int i = 0; i < m.y2; ++i) word = mul_elem_gen(word, Gen::Y2);
        for (int i = 0; i < m.y1; ++i) word = mul_elem_gen(word, Gen::Y1);
        for (int i = 0; i < m.x; ++i) word = mul_elem_gen(word, Gen::X);
        for (int i = 0; i < m.v; ++i) word = mul_elem_gen(word, Gen::V);
        r.add_scaled(word, c);
    }
    return r;
}

HeckeElement HeckeElement::gk_project() const {
    HeckeElement r;
    for (const auto& [m, c] : terms_) r.add_term({m.v % 2, m.x, m.y1, m.y2}, c);
    return r;
}

std::map<int, HeckeElement> HeckeElement::degree_components() const {
    std::map<int, HeckeElement> parts;
    for (const auto& [m, c] : terms_) parts[m.degree()].add_term(m, c);
    return parts;
}

std::vector<Monomial> monomial_basis(int k) {
    std::vector<Monomial> out;
    for (int y = 0; 2 * y <= k; ++y) {
        for (int v = 0; v + 2 * y <= k; ++v) {
            int x = k - v - 2 * y;
            out.push_back({v, x, y, 0});
            if (y > 0) out.push_back({v, x, 0, y});
        }
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

long hk_rank(int k) {
    if (k < 0) return 0;
    long kk = k;
    return (2 * kk * kk + 4 * kk + 3 + ((k % 2 == 0) ? 1 : -1)) / 4;
}

const std::vector<std::vector<RelationTerm>>& defining_relations() {
    using W = std::vector<Gen>;
    static const std::vector<std::vector<RelationTerm>> rels = [] {
        const PolyQ one(1);
        const PolyQ q = PolyQ::q();
        const PolyQ r4c = PolyQ(1) - PolyQ::q(2);            // 1-q^2
        const PolyQ r6c = (q - 1).pow(2) * (q + 1);          // (q-1)^2(q+1)
        const PolyQ qm1 = q - 1;
        std::vector<std::vector<RelationTerm>> r;
        // r1 = VX - XV
        r.push_back({{one, W{Gen::V, Gen::X}}, {-one, W{Gen::X, Gen::V}}});
        // r2 = VY1 - Y2V
        r.push_back({{one, W{Gen::V, Gen::Y1}}, {-one, W{Gen::Y2, Gen::V}}});
        // r3 = VY2 - Y1V
        r.push_back({{one, W{Gen::V, Gen::Y2}}, {-one, W{Gen::Y1, Gen::V}}});
        // r4 = XY1 - Y1X + (1-q^2)VY1 - (1-q^2)VY2
        r.push_back({{one, W{Gen::X, Gen::Y1}},
                     {-one, W{Gen::Y1, Gen::X}},
                     {r4c, W{Gen::V, Gen::Y1}},
                     {-r4c, W{Gen::V, Gen::Y2}}});
        // r5 = XY2 - Y2X - (1-q^2)VY1 + (1-q^2)VY2
        r.push_back({{one, W{Gen::X, Gen::Y2}},
                     {-one, W{Gen::Y2, Gen::X}},
                     {-r4c, W{Gen::V, Gen::Y1}},
                     {r4c, W{Gen::V, Gen::Y2}}});
        // r6 = Y1Y2 - Y2Y1 - (q-1)^2(q+1)V^2Y1 + (q-1)^2(q+1)V^2Y2
        //      + (q-1)VXY1 - (q-1)VXY2
        r.push_back({{one, W{Gen::Y1, Gen::Y2}},
                     {-one, W{Gen::Y2, Gen::Y1}},
                     {-r6c, W{Gen::V, Gen::V, Gen::Y1}},
                     {r6c, W{Gen::V, Gen::V, Gen::Y2}},
                     {qm1, W{Gen::V, Gen::X, Gen::Y1}},
                     {-qm1, W{Gen::V, Gen::X, Gen::Y2}}});
        // r7 = Y1Y2 + q^2(q+1)^2 V^4 + q(q^2-1)V^3X - qV^2X^2 - (q-1)VXY2
        //      + q(q+1)V^2Y1 + (1+q^3)V^2Y2
        r.push_back({{one, W{Gen::Y1, Gen::Y2}},
                     {PolyQ::q(2) * (q + 1).pow(2), W{Gen::V, Gen::V, Gen::V, Gen::V}},
                     {q * (PolyQ::q(2) - 1), W{Gen::V, Gen::V, Gen::V, Gen::X}},
                     {-q, W{Gen::V, Gen::V, Gen::X, Gen::X}},
                     {-qm1, W{Gen::V, Gen::X, Gen::Y2}},
                     {q * (q + 1), W{Gen::V, Gen::V, Gen::Y1}},
                     {PolyQ(1) + PolyQ::q(3), W{Gen::V, Gen::V, Gen::Y2}}});
        return r;
    }();
    return rels;
}

}  // namespace phecke
