#include "phecke/coset.hpp"

#include <stdexcept>
#include <string>

#include "phecke/errors.hpp"

namespace phecke {

bool in_s_delta(int a, int b, int c) { return a >= 0 && b >= 0 && a <= c - a && b <= c - b; }

std::array<int, 3> normalize_triple(int a, int b, int c) {
    if (a < 0 || b < 0 || a > c || b > c)
        throw InvalidTripleError("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ") lies outside D_Delta");
    return {std::min(a, c - a), std::min(b, c - b), c};
}

CosetElement CosetElement::unit() { return label(CosetLabel{}); }

CosetElement CosetElement::label(const CosetLabel& l, PolyQ coeff) {
    CosetElement e;
    e.add_term(l, coeff);
    return e;
}

void CosetElement::add_term(const CosetLabel& l, const PolyQ& coeff) {
    if (coeff.is_zero()) return;
    if (!in_s_delta(l.a, l.b, l.c) || (l.delta != 0 && l.delta != 1))
        throw InvalidTripleError("label outside the normalized coset index set");
    auto it = terms_.find(l);
    if (it == terms_.end()) {
        terms_.emplace(l, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CosetElement::add_scaled(const CosetElement& e, const PolyQ& coeff) {
    if (coeff.is_zero()) return;
    for (const auto& [l, c] : e.terms_) add_term(l, c * coeff);
}

CosetElement CosetElement::operator+(const CosetElement& rhs) const {
    CosetElement r = *this;
    r.add_scaled(rhs, PolyQ(1));
    return r;
}

CosetElement CosetElement::operator-(const CosetElement& rhs) const {
    CosetElement r = *this;
    r.add_scaled(rhs, PolyQ(-1));
    return r;
}

CosetElement CosetElement::scaled(const PolyQ& coeff) const {
    CosetElement r;
    r.add_scaled(*this, coeff);
    return r;
}

std::vector<CosetLabel> coset_enumerate(int k) {
    std::vector<CosetLabel> out;
    for (int delta = 0; delta <= 1; ++delta) {
        int c = k - delta;
        if (c < 0) continue;
        for (int a = 0; 2 * a <= c; ++a)
            for (int b = 0; 2 * b <= c; ++b) out.push_back({delta, a, b, c});
    }
    return out;
}

CosetElement t_qk(int k) {
    CosetElement e;
    for (const CosetLabel& l : coset_enumerate(k)) e.add_term(l, PolyQ(1));
    return e;
}

namespace {

void require_s_delta(int a, int b, int c) {
    if (!in_s_delta(a, b, c))
        throw InvalidTripleError("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ") lies outside S_Delta");
}

// Exactly one row of each table must match a given triple.
template <typename Row>
Row select_row(const std::vector<std::pair<bool, Row>>& candidates) {
    const Row* found = nullptr;
    int matches = 0;
    for (const auto& [cond, row] : candidates) {
        if (!cond) continue;
        ++matches;
        found = &row;
    }
    if (matches != 1) throw std::logic_error("table row selection matched " + std::to_string(matches) + " rows");
    return *found;
}

}  // namespace

XTableRow degree1_row(int a, int b, int c) {
    require_s_delta(a, b, c);
    const PolyQ q = PolyQ::q(), q2 = PolyQ::q(2), q3 = PolyQ::q(3);
    const int ga = c - 2 * a;  // distance from a to c-a
    const int gb = c - 2 * b;
    std::vector<std::pair<bool, XTableRow>> rows = {
        {b < a && ga == 0, {1, {PolyQ(1), q2, PolyQ(0), PolyQ(0), q2 - 1}}},
        {b < a && ga == 1, {2, {PolyQ(1), q2, q + 1, q3 + q2, q2 - 1}}},
        {b < a && ga >= 2, {3, {PolyQ(1), q2, q, q3, q2 - 1}}},
        {b == a && gb == 0, {4, {PolyQ(1), PolyQ(0), PolyQ(0), PolyQ(0), PolyQ(0)}}},
        {b == a && gb == 1, {5, {PolyQ(1), q + 1, q + 1, q3 + 2 * q2 + q, q - 1}}},
        {b == a && gb >= 2, {6, {PolyQ(1), q, q, q3, q - 1}}},
        {a < b && gb == 0, {7, {PolyQ(1), PolyQ(0), q2, PolyQ(0), q2 - 1}}},
        {a < b && gb == 1, {8, {PolyQ(1), q + 1, q2, q3 + q2, q2 - 1}}},
        {a < b && gb >= 2, {9, {PolyQ(1), q, q2, q3, q2 - 1}}},
    };
    return select_row(rows);
}

YTableRow degree2_row(int a, int b, int c) {
    require_s_delta(a, b, c);
    const PolyQ q = PolyQ::q(), q2 = PolyQ::q(2), q3 = PolyQ::q(3), q4 = PolyQ::q(4);
    const PolyQ z(0), one(1);
    const int ga = c - 2 * a;
    const int gb = c - 2 * b;
    // For a < b membership in S_Delta forces ga >= 2.
    std::vector<std::pair<bool, YTableRow>> rows = {
        {b < a && ga == 0, {1, {q, z, z, q - 1, z, z}}},
        {b < a && ga == 1, {2, {q, q2, z, q - 1, q2 - 1, z}}},
        {b < a && ga == 2, {3, {q, q2 - q, q3 + q2, q - 1, q2 - q, z}}},
        {b < a && ga >= 3, {4, {q, q2 - q, q3, q - 1, q2 - q, z}}},
        {b == a && ga == 0, {5, {one, z, z, z, z, z}}},
        {b == a && ga == 1, {6, {one, q2, z, z, q2 - 1, z}}},
        {b == a && ga == 2, {7, {one, q2 - q, q3 + q2, z, q2 - q, z}}},
        {b == a && ga >= 3, {8, {one, q2 - q, q3, z, q2 - q, z}}},
        {a < b && ga == 2 && gb == 0, {9, {one, q3 - q2, q4 + q3, z, q3 - q2, z}}},
        {a < b && ga == 2 && gb == 1, {10, {one, q3 - q2, q4 + q3, z, q3 - q2, q4 - q2}}},
        {a < b && ga == 2 && gb >= 2, {11, {one, q3 - q2, q4 + q3, z, q3 - q2, q4 - q3}}},
        {a < b && ga > 2 && gb == 0, {12, {one, q3 - q2, q4, z, q3 - q2, z}}},
        {a < b && ga > 2 && gb == 1, {13, {one, q3 - q2, q4, z, q3 - q2, q4 - q2}}},
        {a < b && ga > 2 && gb >= 2, {14, {one, q3 - q2, q4, z, q3 - q2, q4 - q3}}},
    };
    return select_row(rows);
}

namespace {

// Append coeff * (delta-shift^delta of T(e,f,g)) honoring the tables' rule
// that an entry is dropped when its triple leaves S_Delta.
void emit(CosetElement& out, const PolyQ& coeff, int delta, int e, int f, int g) {
    if (coeff.is_zero()) return;
    if (!in_s_delta(e, f, g)) return;
    auto t = normalize_triple(e, f, g);
    out.add_term({delta, t[0], t[1], t[2]}, coeff);
}

CosetLabel v_shift(const CosetLabel& l) {
    if (l.delta == 0) return {1, l.a, l.b, l.c};
    return {0, l.a + 1, l.b + 1, l.c + 2};
}

CosetElement v_shift(const CosetElement& e) {
    CosetElement out;
    for (const auto& [l, p] : e.terms()) out.add_term(v_shift(l), p);
    return out;
}

}  // namespace

CosetElement mul_x_coset(int a, int b, int c) {
    const XTableRow row = degree1_row(a, b, c);
    CosetElement out;
    emit(out, row.n[0], 0, a, b, c + 1);
    emit(out, row.n[1], 0, a, b + 1, c + 1);
    emit(out, row.n[2], 0, a + 1, b, c + 1);
    emit(out, row.n[3], 0, a + 1, b + 1, c + 1);
    emit(out, row.n[4], 1, a, b, c);
    return out;
}

CosetElement mul_y1_coset(int a, int b, int c) {
    const YTableRow row = degree2_row(a, b, c);
    CosetElement out;
    emit(out, row.m[0], 0, a, b + 1, c + 2);
    emit(out, row.m[1], 0, a + 1, b + 1, c + 2);
    emit(out, row.m[2], 0, a + 2, b + 1, c + 2);
    emit(out, row.m[3], 1, a, b, c + 1);
    emit(out, row.m[4], 1, a + 1, b, c + 1);
    emit(out, row.m[5], 1, a + 1, b + 1, c + 1);
    return out;
}

CosetElement alpha_coset(const CosetElement& e) {
    CosetElement out;
    for (const auto& [l, p] : e.terms()) out.add_term({l.delta, l.b, l.a, l.c}, p);
    return out;
}

namespace {

// Action of one generator on one label.  X slides past the w-shift
// unchanged; sliding Y1 or Y2 past it swaps their roles (VY1 = Y2V and
// VY2 = Y1V), and Y2 on an unshifted label is the alpha-conjugate of Y1.
CosetElement act_generator(Gen g, const CosetLabel& l) {
    switch (g) {
        case Gen::V:
            return CosetElement::label(v_shift(l));
        case Gen::X: {
            CosetElement t = mul_x_coset(l.a, l.b, l.c);
            return l.delta == 1 ? v_shift(t) : t;
        }
        case Gen::Y1:
            if (l.delta == 1) return v_shift(act_generator(Gen::Y2, {0, l.a, l.b, l.c}));
            return mul_y1_coset(l.a, l.b, l.c);
        case Gen::Y2:
            if (l.delta == 1) return v_shift(act_generator(Gen::Y1, {0, l.a, l.b, l.c}));
            return alpha_coset(act_generator(Gen::Y1, {0, l.b, l.a, l.c}));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

CosetElement mul_generator_coset(Gen g, const CosetElement& e) {
    CosetElement out;
    for (const auto& [l, p] : e.terms()) out.add_scaled(act_generator(g, l), p);
    return out;
}

CosetElement monomial_to_coset(const HeckeElement& h) {
    CosetElement out;
    for (const auto& [m, p] : h.terms()) {
        // The word acts on the identity coset from the right end first.
        CosetElement e = CosetElement::unit();
        for (int i = 0; i < m.y2; ++i) e = mul_generator_coset(Gen::Y2, e);
        for (int i = 0; i < m.y1; ++i) e = mul_generator_coset(Gen::Y1, e);
        for (int i = 0; i < m.x; ++i) e = mul_generator_coset(Gen::X, e);
        for (int i = 0; i < m.v; ++i) e = mul_generator_coset(Gen::V, e);
        out.add_scaled(e, p);
    }
    return out;
}

const HeckeElement& CosetEngine::to_monomial(const CosetLabel& l0) {
    auto t = normalize_triple(l0.a, l0.b, l0.c);
    if (l0.delta != 0 && l0.delta != 1) throw InvalidTripleError("delta must be 0 or 1");
    CosetLabel l{l0.delta, t[0], t[1], t[2]};
    auto it = memo_.find(l);
    if (it != memo_.end()) return it->second;

    auto prepend_v = [](const HeckeElement& h, int count) {
        HeckeElement out;
        for (const auto& [m, c] : h.terms()) out.add_term({m.v + count, m.x, m.y1, m.y2}, c);
        return out;
    };

    HeckeElement result;
    if (l.delta == 1) {
        result = prepend_v(to_monomial({0, l.a, l.b, l.c}), 1);
    } else if (l.a >= 1 && l.b >= 1) {
        result = prepend_v(to_monomial({0, l.a - 1, l.b - 1, l.c - 2}), 2);
    } else if (l.a >= 1) {  // b == 0
        result = to_monomial({0, 0, l.a, l.c}).alpha();
    } else if (l.b == 0 && l.c == 0) {
        result = HeckeElement::one();
    } else if (l.b == 0) {
        // Solve the degree-1 table row at (0,0,c-1) for its leading target:
        // T(0,0,c) = X*T(0,0,c-1) - n2*T(0,1,c) - n3*T(1,0,c) - n4*T(1,1,c)
        //            - n5*(shift of T(0,0,c-1)).
        const int c = l.c;
        const XTableRow row = degree1_row(0, 0, c - 1);
        result = phecke::mul(HeckeElement::generator(Gen::X), to_monomial({0, 0, 0, c - 1}));
        struct Tgt { int delta, a, b, c; };
        const Tgt tgt[4] = {{0, 0, 1, c}, {0, 1, 0, c}, {0, 1, 1, c}, {1, 0, 0, c - 1}};
        for (int i = 0; i < 4; ++i) {
            const PolyQ& n = row.n[static_cast<std::size_t>(i) + 1];
            if (n.is_zero() || !in_s_delta(tgt[i].a, tgt[i].b, tgt[i].c)) continue;
            result.add_scaled(to_monomial({tgt[i].delta, tgt[i].a, tgt[i].b, tgt[i].c}), -n);
        }
    } else {
        // b >= 1: solve the degree-2 table row at (0,b-1,c-2) for its leading
        // target: T(0,b,c) = Y1*T(0,b-1,c-2) - m2*T(1,b,c) - m3*T(2,b,c)
        //                    - m4*shift T(0,b-1,c-1) - m5*shift T(1,b-1,c-1)
        //                    - m6*shift T(1,b,c-1).
        const int b = l.b, c = l.c;
        const YTableRow row = degree2_row(0, b - 1, c - 2);
        if (!row.m[0].is_one()) throw std::logic_error("leading table entry is not 1");
        result = phecke::mul(HeckeElement::generator(Gen::Y1), to_monomial({0, 0, b - 1, c - 2}));
        struct Tgt { int delta, a, b, c; };
        const Tgt tgt[5] = {{0, 1, b, c}, {0, 2, b, c}, {1, 0, b - 1, c - 1},
                            {1, 1, b - 1, c - 1}, {1, 1, b, c - 1}};
        for (int i = 0; i < 5; ++i) {
            const PolyQ& m = row.m[static_cast<std::size_t>(i) + 1];
            if (m.is_zero() || !in_s_delta(tgt[i].a, tgt[i].b, tgt[i].c)) continue;
            result.add_scaled(to_monomial({tgt[i].delta, tgt[i].a, tgt[i].b, tgt[i].c}), -m);
        }
    }
    return memo_.emplace(l, std::move(result)).first->second;
}

HeckeElement CosetEngine::to_monomial(const CosetElement& e) {
    HeckeElement out;
    for (const auto& [l, p] : e.terms()) out.add_scaled(to_monomial(l), p);
    return out;
}

CosetElement CosetEngine::mul(const CosetElement& lhs, const CosetElement& rhs) {
    return monomial_to_coset(phecke::mul(to_monomial(lhs), to_monomial(rhs)));
}

}  // namespace phecke
