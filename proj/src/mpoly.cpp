#include "phecke/mpoly.hpp"

#include <stdexcept>
#include <utility>

namespace phecke {

MPoly MPoly::constant(const mpz_class& n, VarSet vars) {
    MPoly p(vars);
    p.add_term({0, 0, 0}, n);
    return p;
}

MPoly MPoly::variable(int index, VarSet vars) {
    if (index < 0 || index >= var_count(vars))
        throw std::invalid_argument("variable index outside of variable set");
    MPoly p(vars);
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

MPoly MPoly::from_polyq(const PolyQ& p, VarSet vars) {
    MPoly r(vars);
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) r.add_term({static_cast<unsigned>(i), 0, 0}, cs[i]);
    return r;
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0} &&
           terms_.begin()->second == 1;
}

void MPoly::add_term(const Exponents& e, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::check_compatible(const MPoly& rhs) const {
    if (vars_ != rhs.vars_)
        throw std::invalid_argument("arithmetic between incompatible variable sets");
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& rhs) const {
    check_compatible(rhs);
    MPoly r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

MPoly MPoly::operator*(const mpz_class& n) const {
    MPoly r(vars_);
    if (n == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * n);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = constant(1, vars_), base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

MPoly MPoly::divexact(const MPoly& rhs) const {
    check_compatible(rhs);
    if (rhs.is_zero()) throw NonDivisibleError("division by zero polynomial");
    MPoly rem = *this;
    MPoly quot(vars_);
    const auto& [dlead_e, dlead_c] = *rhs.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rlead_e, rlead_c] = *rem.terms_.rbegin();
        Exponents diff{};
        for (int i = 0; i < 3; ++i) {
            if (rlead_e[i] < dlead_e[i])
                throw NonDivisibleError("leading monomial does not divide");
            diff[static_cast<std::size_t>(i)] = rlead_e[i] - dlead_e[i];
        }
        if (rlead_c % dlead_c != 0)
            throw NonDivisibleError("leading coefficient does not divide");
        MPoly t(vars_);
        t.add_term(diff, rlead_c / dlead_c);
        quot += t;
        rem -= t * rhs;
    }
    return quot;
}

mpq_class MPoly::eval(const mpq_class& q_value, const mpq_class& lambda_value,
                      const mpq_class& mu_value) const {
    auto qpow = [](const mpq_class& base, unsigned e) {
        mpq_class r = 1, b = base;
        while (e) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return r;
    };
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_)
        acc += mpq_class(c) * qpow(q_value, e[0]) * qpow(lambda_value, e[1]) * qpow(mu_value, e[2]);
    return acc;
}

PolyQ MPoly::to_polyq() const {
    std::vector<mpz_class> cs;
    for (const auto& [e, c] : terms_) {
        if (e[1] != 0 || e[2] != 0)
            throw std::invalid_argument("value involves lambda or mu; not in Z[q]");
        if (cs.size() <= e[0]) cs.resize(e[0] + 1, mpz_class(0));
        cs[e[0]] = c;
    }
    return PolyQ::from_coeffs(std::move(cs));
}

bool MPoly::operator==(const MPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"q", "lambda", "mu"};
    std::string out;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? "-" : "+";
        std::string factors;
        for (int i = 0; i < 3; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += names[i];
            if (e[static_cast<std::size_t>(i)] > 1)
                factors += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += factors;
        }
    }
    return out;
}

TruncSeries::TruncSeries(int order, VarSet vars) : order_(order), vars_(vars) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, MPoly(vars));
}

TruncSeries TruncSeries::one(int order, VarSet vars) {
    TruncSeries s(order, vars);
    s.coeffs_[0] = MPoly::constant(1, vars);
    return s;
}

void TruncSeries::set_coeff(int k, MPoly value) {
    if (value.vars() != vars_) throw std::invalid_argument("coefficient variable set mismatch");
    coeffs_.at(static_cast<std::size_t>(k)) = std::move(value);
}

void TruncSeries::check_compatible(const TruncSeries& rhs) const {
    if (order_ != rhs.order_ || vars_ != rhs.vars_)
        throw std::invalid_argument("series orders or variable sets are incompatible");
}

TruncSeries TruncSeries::operator+(const TruncSeries& rhs) const {
    check_compatible(rhs);
    TruncSeries r(order_, vars_);
    for (int k = 0; k <= order_; ++k) r.coeffs_[static_cast<std::size_t>(k)] = coeff(k) + rhs.coeff(k);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& rhs) const {
    check_compatible(rhs);
    TruncSeries r(order_, vars_);
    for (int k = 0; k <= order_; ++k) r.coeffs_[static_cast<std::size_t>(k)] = coeff(k) - rhs.coeff(k);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& rhs) const {
    check_compatible(rhs);
    TruncSeries r(order_, vars_);
    for (int i = 0; i <= order_; ++i) {
        if (coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j)
            r.coeffs_[static_cast<std::size_t>(i + j)] += coeff(i) * rhs.coeff(j);
    }
    return r;
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool TruncSeries::operator==(const TruncSeries& rhs) const {
    return order_ == rhs.order_ && vars_ == rhs.vars_ && coeffs_ == rhs.coeffs_;
}

std::string TruncSeries::to_string() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        const MPoly& c = coeff(k);
        if (c.is_zero()) continue;
        MPoly mag = c.negative_lead() ? -c : c;
        if (out.empty())
            out += c.negative_lead() ? "-" : "";
        else
            out += c.negative_lead() ? "-" : "+";
        std::string cs = mag.to_string();
        bool needs_parens = !mag.is_single_term();
        std::string tpart = (k == 0) ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (tpart.empty()) {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else if (mag.is_one()) {
            out += tpart;
        } else {
            out += (needs_parens ? "(" + cs + ")" : cs) + "*" + tpart;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace phecke
