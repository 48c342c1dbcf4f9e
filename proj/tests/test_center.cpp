#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phecke/center.hpp"
#include "phecke/linalg.hpp"

using namespace phecke;

TEST_CASE("center generators") {
    const auto z = center_generators();
    CHECK(z[2] == HeckeElement::monomial({2, 0, 0, 0}));

    HeckeElement z2_expected;
    z2_expected.add_term({1, 1, 0, 0}, PolyQ::q() - 1);
    z2_expected.add_term({0, 0, 1, 0}, PolyQ(-1));
    z2_expected.add_term({0, 0, 0, 1}, PolyQ(-1));
    CHECK(z[1] == z2_expected);

    // Z1 = X - (q^2-1)V degenerates to X at q = 1.
    auto it = z[0].terms().find(Monomial{1, 0, 0, 0});
    REQUIRE(it != z[0].terms().end());
    CHECK(it->second.eval(1) == 0);
    CHECK(z[0].terms().at(Monomial{0, 1, 0, 0}).is_one());
}

TEST_CASE("centrality") {
    const auto z = center_generators();
    CHECK(is_central(z[0]));
    CHECK(is_central(z[1]));
    CHECK(is_central(z[2]));
    CHECK_FALSE(is_central(HeckeElement::generator(Gen::Y1)));
    CHECK_FALSE(is_central(HeckeElement::generator(Gen::V)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(mul(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]) ==
                  mul(z[static_cast<std::size_t>(j)], z[static_cast<std::size_t>(i)]));
}

TEST_CASE("center monomials and ranks") {
    CHECK(center_monomials(1) == std::vector<CenterMonomial>{{1, 0, 0}});
    CHECK(center_monomials(2) ==
          std::vector<CenterMonomial>{{0, 0, 1}, {0, 1, 0}, {2, 0, 0}});
    CHECK(center_basis(6).size() == 10);
    CHECK(center_basis(1).size() == 1);
    CHECK(center_basis(1)[0] == center_generators()[0]);

    const long expected[10] = {1, 1, 3, 3, 6, 6, 10, 10, 15, 15};
    for (int k = 0; k <= 9; ++k) CHECK(center_rank(k) == expected[k]);
    CHECK(center_rank(8) == 15);

    for (int k = 0; k <= 12; ++k) CHECK(center_rank(k + 2) == center_rank(k) + k / 2 + 2);

    // 1 / ((1-t)(1-t^2)^2) through t^12.
    const long den[6] = {1, -1, -2, 2, 1, -1};
    std::vector<long> s(13, 0);
    for (int n = 0; n <= 12; ++n) {
        long acc = (n == 0) ? 1 : 0;
        for (int j = 1; j <= n && j < 6; ++j) acc -= den[j] * s[static_cast<std::size_t>(n - j)];
        s[static_cast<std::size_t>(n)] = acc;
    }
    for (int k = 0; k <= 12; ++k) CHECK(center_rank(k) == s[static_cast<std::size_t>(k)]);
}

TEST_CASE("center basis elements are central, alpha-invariant and independent") {
    for (int k = 0; k <= 6; ++k) {
        const auto basis = center_basis(k);
        REQUIRE(static_cast<long>(basis.size()) == center_rank(k));
        const auto monos = monomial_basis(k);
        std::vector<std::vector<PolyQ>> mat;
        for (const HeckeElement& e : basis) {
            CHECK(is_central(e));
            CHECK(e.alpha() == e);
            for (const auto& [m, c] : e.terms()) CHECK(m.degree() == k);
            std::vector<PolyQ> row;
            for (const Monomial& m : monos) {
                auto it = e.terms().find(m);
                row.push_back(it == e.terms().end() ? PolyQ() : it->second);
            }
            mat.push_back(std::move(row));
        }
        for (int qv : {2, 3, 5}) CHECK(rank_at(mat, qv) == static_cast<int>(basis.size()));
    }
}
