#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "phecke/hecke.hpp"

using namespace phecke;

namespace {

HeckeElement G(Gen g) { return HeckeElement::generator(g); }

HeckeElement word(std::initializer_list<Gen> gens) {
    HeckeElement e = HeckeElement::one();
    for (Gen g : gens) e = mul(e, G(g));
    return e;
}

HeckeElement random_element(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> dn(1, 4), dc(-3, 3), dd(0, maxdeg);
    HeckeElement e;
    int n = dn(rng);
    for (int t = 0; t < n; ++t) {
        int deg = dd(rng);
        std::uniform_int_distribution<int> dv(0, deg);
        int v = dv(rng);
        std::uniform_int_distribution<int> dx(0, deg - v);
        int x = dx(rng);
        std::uniform_int_distribution<int> dy(0, (deg - v - x) / 2);
        int y = dy(rng);
        Monomial m = (t % 2 == 0) ? Monomial{v, x, y, 0} : Monomial{v, x, 0, y};
        int c = dc(rng);
        e.add_term(m, PolyQ(c == 0 ? 1 : c));
    }
    return e;
}

}  // namespace

TEST_CASE("products of generators reach normal form") {
    // Y2 * V = V * Y1
    CHECK(mul(G(Gen::Y2), G(Gen::V)) == word({Gen::V, Gen::Y1}));

    // Y1 * Y2 expands into the degree-4 combination.
    const PolyQ q = PolyQ::q();
    HeckeElement expected;
    expected.add_term({4, 0, 0, 0}, -(PolyQ::q(2) * (q + 1).pow(2)));
    expected.add_term({3, 1, 0, 0}, -(q * (PolyQ::q(2) - 1)));
    expected.add_term({2, 2, 0, 0}, q);
    expected.add_term({1, 1, 0, 1}, q - 1);
    expected.add_term({2, 0, 1, 0}, -(q * (q + 1)));
    expected.add_term({2, 0, 0, 1}, -(PolyQ(1) + PolyQ::q(3)));
    CHECK(mul(G(Gen::Y1), G(Gen::Y2)) == expected);

    // The identity is neutral.
    std::mt19937 rng(1);
    for (int i = 0; i < 20; ++i) {
        HeckeElement h = random_element(rng, 5);
        CHECK(mul(HeckeElement::one(), h) == h);
        CHECK(mul(h, HeckeElement::one()) == h);
    }
}

TEST_CASE("zero divisor") {
    const PolyQ q = PolyQ::q();
    HeckeElement lhs = G(Gen::Y1) + HeckeElement::monomial({2, 0, 0, 0}, q + 1) +
                       HeckeElement::monomial({1, 1, 0, 0});
    HeckeElement rhs = G(Gen::Y2) + HeckeElement::monomial({2, 0, 0, 0}, PolyQ::q(2) + PolyQ::q(3)) +
                       HeckeElement::monomial({1, 1, 0, 0}, -q);
    CHECK_FALSE(lhs.is_zero());
    CHECK_FALSE(rhs.is_zero());
    CHECK(mul(lhs, rhs).is_zero());
}

TEST_CASE("the seven defining relations evaluate to zero") {
    for (const auto& rel : defining_relations()) {
        HeckeElement acc;
        for (const auto& t : rel) {
            HeckeElement w = HeckeElement::one();
            for (Gen g : t.word) w = mul(w, G(g));
            acc.add_scaled(w, t.coeff);
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("degree components") {
    HeckeElement h = G(Gen::V) + G(Gen::X) + G(Gen::Y1);
    auto parts = h.degree_components();
    REQUIRE(parts.size() == 2);
    CHECK(parts[1] == G(Gen::V) + G(Gen::X));
    CHECK(parts[2] == G(Gen::Y1));
    CHECK(HeckeElement::zero().degree_components().empty());

    HeckeElement g = HeckeElement::monomial({0, 2, 0, 0}) +
                     HeckeElement::monomial({1, 1, 0, 0}, PolyQ::q() - 1);
    auto gp = g.degree_components();
    REQUIRE(gp.size() == 1);
    CHECK(gp[2] == g);
}

TEST_CASE("monomial basis enumeration") {
    CHECK(monomial_basis(0) == std::vector<Monomial>{Monomial{}});
    auto b2 = monomial_basis(2);
    REQUIRE(b2.size() == 5);
    CHECK(b2[0] == Monomial{2, 0, 0, 0});
    CHECK(b2[1] == Monomial{1, 1, 0, 0});
    CHECK(b2[2] == Monomial{0, 2, 0, 0});
    CHECK(b2[3] == Monomial{0, 0, 1, 0});
    CHECK(b2[4] == Monomial{0, 0, 0, 1});
    CHECK(monomial_basis(8).size() == 41);

    const long expected[9] = {1, 2, 5, 8, 13, 18, 25, 32, 41};
    for (int k = 0; k <= 8; ++k) {
        CHECK(hk_rank(k) == expected[k]);
        CHECK(static_cast<long>(monomial_basis(k).size()) == expected[k]);
    }
    // rank(H_{k+1}) = rank(H_k) + k + 1 + (1+(-1)^{k+1})/2
    for (int k = 0; k <= 11; ++k)
        CHECK(hk_rank(k + 1) == hk_rank(k) + k + 1 + (k % 2 == 0 ? 0 : 1));
}

TEST_CASE("alpha") {
    CHECK(word({Gen::V, Gen::X, Gen::Y1}).alpha() == word({Gen::V, Gen::X, Gen::Y2}));
    CHECK(word({Gen::X, Gen::X, Gen::X}).alpha() == word({Gen::X, Gen::X, Gen::X}));
    std::mt19937 rng(2);
    for (int i = 0; i < 30; ++i) {
        HeckeElement h = random_element(rng, 5);
        CHECK(h.alpha().alpha() == h);
    }
    for (int i = 0; i < 50; ++i) {
        HeckeElement a = random_element(rng, 4), b = random_element(rng, 4);
        CHECK(mul(a, b).alpha() == mul(a.alpha(), b.alpha()));
    }
}

TEST_CASE("beta") {
    CHECK(G(Gen::V).beta() == G(Gen::V));
    CHECK(G(Gen::X).beta() == G(Gen::X));
    CHECK(G(Gen::Y1).beta() == G(Gen::Y1));
    CHECK(G(Gen::Y2).beta() == G(Gen::Y2));
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        HeckeElement a = random_element(rng, 4), b = random_element(rng, 4);
        CHECK(mul(a, b).beta() == mul(b.beta(), a.beta()));
    }
    for (int k = 0; k <= 8; ++k)
        for (const Monomial& m : monomial_basis(k)) {
            HeckeElement e = HeckeElement::monomial(m);
            CHECK(e.beta().beta() == e);
            CHECK(e.alpha().alpha() == e);
        }
}

TEST_CASE("quotient projection") {
    CHECK(HeckeElement::monomial({3, 1, 0, 0}).gk_project() == HeckeElement::monomial({1, 1, 0, 0}));
    CHECK(word({Gen::V, Gen::Y1, Gen::V}).gk_project() == G(Gen::Y2));
    std::mt19937 rng(4);
    for (int i = 0; i < 50; ++i) {
        HeckeElement a = random_element(rng, 4), b = random_element(rng, 4);
        CHECK(mul(a, b).gk_project() ==
              mul(a.gk_project(), b.gk_project()).gk_project());
    }
}

TEST_CASE("grading and normal form closure") {
    std::mt19937 rng(5);
    for (int j = 0; j <= 4; ++j) {
        for (const Monomial& m1 : monomial_basis(j)) {
            for (int k = 0; j + k <= 7; ++k) {
                for (const Monomial& m2 : monomial_basis(k)) {
                    HeckeElement prod = mul(HeckeElement::monomial(m1), HeckeElement::monomial(m2));
                    for (const auto& [m, c] : prod.terms()) {
                        CHECK(m.degree() == j + k);
                        CHECK(m.is_normal());
                    }
                }
            }
        }
    }
}

TEST_CASE("associativity on random elements") {
    std::mt19937 rng(6);
    for (int i = 0; i < 100; ++i) {
        HeckeElement a = random_element(rng, 4), b = random_element(rng, 4),
                     c = random_element(rng, 4);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("commutators") {
    auto comm = [](const HeckeElement& a, const HeckeElement& b) {
        return mul(a, b) - mul(b, a);
    };
    CHECK_FALSE(comm(G(Gen::V), G(Gen::Y1)).is_zero());
    CHECK_FALSE(comm(G(Gen::X), G(Gen::Y1)).is_zero());
    CHECK_FALSE(comm(G(Gen::Y1), G(Gen::Y2)).is_zero());
    CHECK(comm(G(Gen::V), G(Gen::Y1)) == -comm(G(Gen::V), G(Gen::Y2)));
    CHECK(comm(G(Gen::X), G(Gen::Y1)) == -comm(G(Gen::X), G(Gen::Y2)));
    CHECK(comm(G(Gen::V), G(Gen::X)).is_zero());
}

TEST_CASE("graded ranks match the rational Hilbert series through t^12") {
    // (1-t^4) / ((1-t)^2 (1-t^2)^2) expanded by the division recurrence.
    const int order = 12;
    long den[7] = {1, -2, -1, 4, -1, -2, 1};
    long num[5] = {1, 0, 0, 0, -1};
    std::vector<long> s(order + 1, 0);
    for (int n = 0; n <= order; ++n) {
        long acc = (n < 5) ? num[n] : 0;
        for (int j = 1; j <= n && j < 7; ++j) acc -= den[j] * s[static_cast<std::size_t>(n - j)];
        s[static_cast<std::size_t>(n)] = acc;
    }
    for (int k = 0; k <= order; ++k)
        CHECK(static_cast<long>(monomial_basis(k).size()) == s[static_cast<std::size_t>(k)]);
}
