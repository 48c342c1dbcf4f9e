#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "phecke/mpoly.hpp"
#include "phecke/polyq.hpp"

using namespace phecke;

namespace {

PolyQ random_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg), dc(-5, 5);
    std::vector<mpz_class> cs(static_cast<std::size_t>(dd(rng)) + 1);
    for (auto& c : cs) c = dc(rng);
    return PolyQ::from_coeffs(std::move(cs));
}

MPoly random_mpoly(std::mt19937& rng, VarSet vs) {
    std::uniform_int_distribution<int> dn(0, 4), de(0, 3), dc(-5, 5);
    MPoly p(vs);
    int n = dn(rng);
    for (int i = 0; i < n; ++i) {
        MPoly::Exponents e{static_cast<unsigned>(de(rng)), 0, 0};
        if (var_count(vs) > 1) e[1] = static_cast<unsigned>(de(rng));
        if (var_count(vs) > 2) e[2] = static_cast<unsigned>(de(rng));
        p.add_term(e, dc(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic on the worked examples") {
    const PolyQ q = PolyQ::q();
    CHECK((q + 1) * (q - 1) == PolyQ::q(2) - 1);
    CHECK((PolyQ(0) * (PolyQ::q(3) + 2 * PolyQ::q(2) + q)).is_zero());
    CHECK(PolyQ::q(2) + q + (PolyQ::q(3) + PolyQ::q(2)) == PolyQ::q(3) + 2 * PolyQ::q(2) + q);
}

TEST_CASE("exact division") {
    const PolyQ q = PolyQ::q();
    CHECK((PolyQ::q(2) - 1).divexact(q - 1) == q + 1);

    // 1+q^2-2q(1+q+q^2)+q(1+q+q^2+q^3) over (q-1)^2(1+q+q^2) collapses to 1.
    const PolyQ quad = PolyQ(1) + q + PolyQ::q(2);
    const PolyQ num = PolyQ(1) + PolyQ::q(2) - 2 * q * quad + q * (quad + PolyQ::q(3));
    const PolyQ den = (q - 1).pow(2) * quad;
    CHECK(num == den);
    CHECK(num.divexact(den).is_one());

    CHECK((PolyQ::q(3) + PolyQ::q(2)).divexact(PolyQ::q(2)) == q + 1);
    CHECK_THROWS_AS((PolyQ::q(3) + q + 1).divexact(q), NonDivisibleError);
    CHECK_THROWS_AS(PolyQ(1).divexact(PolyQ(0)), NonDivisibleError);
    CHECK_THROWS_AS((q + 1).divexact(PolyQ(2)), NonDivisibleError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        PolyQ a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("divexact inverts multiplication") {
    std::mt19937 rng(43);
    for (int i = 0; i < 200; ++i) {
        PolyQ a = random_poly(rng, 6), b = random_poly(rng, 6);
        if (b.is_zero()) b = PolyQ(1);
        CHECK((a * b).divexact(b) == a);
    }
}

TEST_CASE("printing is ascending and exact") {
    CHECK(PolyQ(0).to_string() == "0");
    CHECK((PolyQ::q(3) + 2 * PolyQ::q(2) + PolyQ::q()).to_string() == "q+2*q^2+q^3");
    CHECK((PolyQ::q() - 1).to_string() == "-1+q");
    CHECK((-PolyQ::q(4)).to_string() == "-q^4");
    CHECK(PolyQ::term(-3, 2).to_string() == "-3*q^2");
}

TEST_CASE("rational evaluation") {
    const PolyQ p = PolyQ::q(3) + 2 * PolyQ::q(2) + PolyQ::q();
    CHECK(p.eval(3) == 48);
    CHECK(p.eval(mpq_class(1, 2)) == mpq_class(9, 8));
}

TEST_CASE("multivariate arithmetic and variable-set discipline") {
    std::mt19937 rng(44);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_mpoly(rng, VarSet::QL), b = random_mpoly(rng, VarSet::QL),
              c = random_mpoly(rng, VarSet::QL);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
    MPoly a = MPoly::variable(0, VarSet::Q);
    MPoly b = MPoly::variable(1, VarSet::QL);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(MPoly::variable(2, VarSet::QL), std::invalid_argument);

    // Cancellation never leaves a stored zero.
    MPoly x = MPoly::variable(1, VarSet::QL);
    MPoly diff = x - x;
    CHECK(diff.is_zero());
    CHECK(diff.terms().empty());
}

TEST_CASE("multivariate exact division") {
    std::mt19937 rng(45);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_mpoly(rng, VarSet::QLM), b = random_mpoly(rng, VarSet::QLM);
        if (b.is_zero()) b = MPoly::constant(1, VarSet::QLM);
        CHECK((a * b).divexact(b) == a);
    }
    MPoly q = MPoly::variable(0, VarSet::QL), l = MPoly::variable(1, VarSet::QL);
    CHECK_THROWS_AS((q * q + l).divexact(q), NonDivisibleError);
}

TEST_CASE("truncated series") {
    const VarSet vs = VarSet::Q;
    TruncSeries a(2, vs), b(2, vs);
    a.set_coeff(0, MPoly::constant(1, vs));
    a.set_coeff(1, MPoly::constant(1, vs));
    b.set_coeff(0, MPoly::constant(1, vs));
    b.set_coeff(1, MPoly::constant(-1, vs));
    TruncSeries prod = a * b;
    CHECK(prod.coeff(0) == MPoly::constant(1, vs));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == MPoly::constant(-1, vs));

    // identity * X = X
    TruncSeries one = TruncSeries::one(2, vs);
    CHECK(one * a == a);

    CHECK_THROWS_AS(a * TruncSeries(3, vs), std::invalid_argument);
    CHECK_THROWS_AS(a * TruncSeries(2, VarSet::QL), std::invalid_argument);

    // Cauchy product agrees with polynomial multiplication plus truncation.
    std::mt19937 rng(46);
    for (int i = 0; i < 50; ++i) {
        PolyQ p = random_poly(rng, 5), r = random_poly(rng, 5);
        const int order = 7;
        auto embed = [&](const PolyQ& f) {
            TruncSeries s(order, vs);
            for (int k = 0; k <= order && k <= f.degree(); ++k)
                s.set_coeff(k, MPoly::constant(f.coeff(k), vs));
            return s;
        };
        TruncSeries lhs = embed(p) * embed(r);
        TruncSeries rhs = embed(p * r);
        CHECK(lhs == rhs);
    }
}
