#include "phecke/character.hpp"

#include <stdexcept>

#include "phecke/errors.hpp"

namespace phecke {

namespace {

void require_sign(int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
}

MPoly mq(VarSet vs, unsigned power = 1) { return MPoly::from_polyq(PolyQ::q(power), vs); }

}  // namespace

Character Character::kind1(int eps, MPoly lambda) {
    require_sign(eps);
    Character chi;
    chi.kind_ = 1;
    chi.eps_ = eps;
    chi.vars_ = lambda.vars();
    chi.lambda_ = std::move(lambda);
    // mu = -(1+q)eps^2 - eps*lambda with eps^2 = 1.
    chi.chi_y1_ = -(MPoly::constant(1, chi.vars_) + mq(chi.vars_)) - chi.lambda_ * mpz_class(eps);
    chi.chi_y2_ = chi.chi_y1_;
    return chi;
}

Character Character::kind2(int eps, MPoly lambda) {
    require_sign(eps);
    Character chi;
    chi.kind_ = 2;
    chi.eps_ = eps;
    chi.vars_ = lambda.vars();
    chi.lambda_ = std::move(lambda);
    // mu = -(q^2+q^3)eps^2 + q*eps*lambda with eps^2 = 1.
    chi.chi_y1_ = -(mq(chi.vars_, 2) + mq(chi.vars_, 3)) + mq(chi.vars_) * chi.lambda_ * mpz_class(eps);
    chi.chi_y2_ = chi.chi_y1_;
    return chi;
}

Character Character::kind3(MPoly lambda, MPoly mu, Gen mu_target) {
    if (mu_target != Gen::Y1 && mu_target != Gen::Y2)
        throw std::invalid_argument("mu target must be Y1 or Y2");
    if (lambda.vars() != mu.vars()) throw std::invalid_argument("lambda/mu variable set mismatch");
    Character chi;
    chi.kind_ = 3;
    chi.eps_ = 0;
    chi.vars_ = lambda.vars();
    chi.lambda_ = std::move(lambda);
    MPoly zero(chi.vars_);
    chi.chi_y1_ = (mu_target == Gen::Y1) ? mu : zero;
    chi.chi_y2_ = (mu_target == Gen::Y2) ? std::move(mu) : zero;
    return chi;
}

Character Character::index() {
    const PolyQ lam = PolyQ::q(3) + 2 * PolyQ::q(2) + PolyQ::q();
    Character chi = kind2(+1, MPoly::from_polyq(lam, VarSet::QL));
    const PolyQ mu = PolyQ::q(4) + PolyQ::q(3);
    if (chi.chi_y1_ != MPoly::from_polyq(mu, VarSet::QL))
        throw std::logic_error("index character: derived mu is not q^4+q^3");
    return chi;
}

MPoly Character::eval(const HeckeElement& h) const {
    MPoly acc(vars_);
    for (const auto& [m, coeff] : h.terms()) {
        if (kind_ == 3 && m.v > 0) continue;  // chi(V) = 0
        MPoly term = MPoly::from_polyq(coeff, vars_);
        if (kind_ != 3 && eps_ == -1 && (m.v % 2 == 1)) term = -term;
        if (m.x > 0) term *= lambda_.pow(static_cast<unsigned>(m.x));
        if (m.y1 > 0) term *= chi_y1_.pow(static_cast<unsigned>(m.y1));
        if (m.y2 > 0) term *= chi_y2_.pow(static_cast<unsigned>(m.y2));
        acc += term;
    }
    return acc;
}

MPoly Character::eval(const CosetElement& e, CosetEngine& engine) const {
    return eval(engine.to_monomial(e));
}

namespace {

void require_series_kind(const Character& chi) {
    if (chi.kind() != 1 && chi.kind() != 2)
        throw KindUnsupportedError("operation requires a character of kind 1 or 2");
}

}  // namespace

std::vector<MPoly> a_seq(const Character& chi, int kmax, CosetEngine& engine) {
    require_series_kind(chi);
    std::vector<MPoly> a;
    a.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) a.push_back(chi.eval(engine.to_monomial(CosetLabel{0, 0, 0, k})));
    return a;
}

std::vector<MPoly> b_seq(const Character& chi, int kmax, CosetEngine& engine) {
    require_series_kind(chi);
    std::vector<MPoly> b;
    b.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        MPoly acc(chi.vars());
        for (int a = 0; 2 * a <= k; ++a) {
            acc += chi.eval(engine.to_monomial(CosetLabel{0, a, 0, k}));
            if (a > 0) acc += chi.eval(engine.to_monomial(CosetLabel{0, 0, a, k}));
        }
        b.push_back(std::move(acc));
    }
    return b;
}

std::array<MPoly, 4> cj_coeffs(const Character& chi) {
    require_series_kind(chi);
    const VarSet vs = chi.vars();
    const mpz_class e(chi.eps());
    const MPoly& lam = chi.lambda();
    if (chi.kind() == 1) {
        return {
            mq(vs, 4) * e,                                     // c0 = eps q^4
            -mq(vs, 1) - mq(vs, 2) + mq(vs, 3) - mq(vs, 1) * lam * e,  // c1
            -MPoly::constant(e, vs) - lam,                     // c2 = -eps - lambda
            MPoly::constant(1, vs),
        };
    }
    return {
        -mq(vs, 5) * e,                                        // c0 = -eps q^5
        mq(vs, 2) - mq(vs, 4) * mpz_class(2) + mq(vs, 2) * lam * e,  // c1
        MPoly::constant(-e, vs) + mq(vs, 1) * e + mq(vs, 2) * e - lam,  // c2
        MPoly::constant(1, vs),
    };
}

SeriesCertificate series_certificate(const Character& chi, int order, CosetEngine& engine) {
    require_series_kind(chi);
    if (order < 3) throw std::invalid_argument("series order must be at least 3");
    const VarSet vs = chi.vars();

    TruncSeries s(order, vs);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, chi.eval(t_qk(k), engine));

    const auto c = cj_coeffs(chi);
    TruncSeries qs(order, vs);
    qs.set_coeff(0, c[3]);
    qs.set_coeff(1, c[2]);
    qs.set_coeff(2, c[1]);
    qs.set_coeff(3, c[0]);

    TruncSeries p(order, vs);
    if (chi.kind() == 1) {
        p.set_coeff(0, MPoly::constant(1, vs));
        p.set_coeff(2, -mq(vs, 2));
    } else {
        p.set_coeff(0, MPoly::constant(1, vs));
        p.set_coeff(1, (mq(vs, 1) + mq(vs, 2)) * mpz_class(chi.eps()));
        p.set_coeff(2, mq(vs, 3));
    }

    TruncSeries residual = qs * s - p;
    return SeriesCertificate{order, std::move(s), std::move(p), std::move(qs), std::move(residual)};
}

PolyQ index_closed_form(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const PolyQ q = PolyQ::q();
    const PolyQ quad = PolyQ(1) + q + PolyQ::q(2);
    const PolyQ num = PolyQ(1) + PolyQ::q(2) -
                      2 * PolyQ::q(static_cast<unsigned>(2 * k + 1)) * quad +
                      PolyQ::q(static_cast<unsigned>(3 * k + 1)) * (quad + PolyQ::q(3));
    const PolyQ den = (q - 1).pow(2) * quad;
    return num.divexact(den);
}

bool euler_factor_identity(int eps, bool negate_t3) {
    Character chi = Character::kind1(eps, Character::symbolic_lambda());
    const auto c = cj_coeffs(chi);
    const VarSet vs = chi.vars();
    const MPoly lam = Character::symbolic_lambda();
    const MPoly mu = chi.chi_y1();  // -(1+q) - eps*lambda
    // D(q^{3/2} t) expanded: the half powers cancel against the t-powers.
    const MPoly d0 = MPoly::constant(1, vs);
    const MPoly d1 = -(lam + MPoly::constant(eps, vs));
    const MPoly d2 = mq(vs, 1) * mu + mq(vs, 3);
    MPoly d3 = mq(vs, 4) * mpz_class(eps);
    if (negate_t3) d3 = -d3;
    return c[3] == d0 && c[2] == d1 && c[1] == d2 && c[0] == d3;
}

std::vector<PolyQ> rational_series(const std::vector<PolyQ>& p, const std::vector<PolyQ>& q,
                                   int order) {
    if (q.empty() || !q[0].is_one())
        throw std::invalid_argument("denominator must have constant term 1");
    std::vector<PolyQ> s(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        PolyQ acc = (n < static_cast<int>(p.size())) ? p[static_cast<std::size_t>(n)] : PolyQ();
        for (int j = 1; j <= n && j < static_cast<int>(q.size()); ++j)
            acc -= q[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(n - j)];
        s[static_cast<std::size_t>(n)] = acc;
    }
    return s;
}

bool guess_counterexample() {
    const PolyQ q = PolyQ::q(), q2 = PolyQ::q(2), q3 = PolyQ::q(3), q4 = PolyQ::q(4),
                q5 = PolyQ::q(5);
    // Guessed index series: (1 - q^2 t^2) / (1 - (1+q+2q^2+q^3)t + (q^3+q^4+q^5)t^2 + q^4 t^3).
    const std::vector<PolyQ> guess_p = {PolyQ(1), PolyQ(0), -q2};
    const std::vector<PolyQ> guess_q = {PolyQ(1), -(PolyQ(1) + q + 2 * q2 + q3), q3 + q4 + q5, q4};
    // Actual index series: (1 + (q+q^2)t + q^3 t^2) / (1 - (1+q^2+q^3)t + (q^2+q^3+q^5)t^2 - q^5 t^3).
    const std::vector<PolyQ> index_p = {PolyQ(1), q + q2, q3};
    const std::vector<PolyQ> index_q = {PolyQ(1), -(PolyQ(1) + q2 + q3), q2 + q3 + q5, -q5};

    // Cross-multiplied polynomials in t over Z[q].
    auto convolve = [](const std::vector<PolyQ>& f, const std::vector<PolyQ>& g) {
        std::vector<PolyQ> out(f.size() + g.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
        return out;
    };
    auto lhs = convolve(guess_p, index_q);
    auto rhs = convolve(index_p, guess_q);
    lhs.resize(std::max(lhs.size(), rhs.size()));
    rhs.resize(lhs.size());
    return lhs != rhs;
}

}  // namespace phecke
