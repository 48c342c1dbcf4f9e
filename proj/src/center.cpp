#include "phecke/center.hpp"

namespace phecke {

std::array<HeckeElement, 3> center_generators() {
    const HeckeElement v = HeckeElement::generator(Gen::V);
    const HeckeElement x = HeckeElement::generator(Gen::X);
    const HeckeElement y1 = HeckeElement::generator(Gen::Y1);
    const HeckeElement y2 = HeckeElement::generator(Gen::Y2);
    HeckeElement z1 = x - v.scaled(PolyQ::q(2) - 1);
    HeckeElement z2 = mul(v, x).scaled(PolyQ::q() - 1) - y1 - y2;
    HeckeElement z3 = HeckeElement::monomial({2, 0, 0, 0});
    return {z1, z2, z3};
}

bool is_central(const HeckeElement& h) {
    for (Gen g : {Gen::V, Gen::X, Gen::Y1, Gen::Y2}) {
        const HeckeElement ge = HeckeElement::generator(g);
        if (mul(h, ge) != mul(ge, h)) return false;
    }
    return true;
}

std::vector<CenterMonomial> center_monomials(int k) {
    std::vector<CenterMonomial> out;
    for (int a = 0; a <= k; ++a) {
        if ((k - a) % 2 != 0) continue;
        const int r = (k - a) / 2;
        for (int b = 0; b <= r; ++b) out.push_back({a, b, r - b});
    }
    return out;
}

std::vector<HeckeElement> center_basis(int k) {
    const auto z = center_generators();
    std::vector<HeckeElement> out;
    for (const CenterMonomial& m : center_monomials(k)) {
        HeckeElement e = z[0].pow(static_cast<unsigned>(m.a));
        e = mul(e, z[1].pow(static_cast<unsigned>(m.b)));
        e = mul(e, z[2].pow(static_cast<unsigned>(m.c)));
        out.push_back(std::move(e));
    }
    return out;
}

long center_rank(int k) {
    if (k < 0) return 0;
    long n = 0;
    for (int a = k % 2; a <= k; a += 2) n += (k - a) / 2 + 1;
    return n;
}

}  // namespace phecke
