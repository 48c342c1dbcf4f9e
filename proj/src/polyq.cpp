#include "phecke/polyq.hpp"

#include <utility>

namespace phecke {

PolyQ PolyQ::q(unsigned power) { return term(1, power); }

PolyQ PolyQ::term(const mpz_class& coeff, unsigned power) {
    PolyQ p;
    if (coeff != 0) {
        p.coeffs_.assign(power + 1, mpz_class(0));
        p.coeffs_[power] = coeff;
    }
    return p;
}

PolyQ PolyQ::from_coeffs(std::vector<mpz_class> coeffs) {
    PolyQ p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

void PolyQ::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class PolyQ::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[power];
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

PolyQ PolyQ::operator*(const PolyQ& rhs) const {
    if (is_zero() || rhs.is_zero()) return PolyQ{};
    PolyQ r;
    r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    r.normalize();
    return r;
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ r(1), base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

PolyQ PolyQ::divexact(const PolyQ& rhs) const {
    if (rhs.is_zero()) throw NonDivisibleError("division by zero polynomial");
    if (is_zero()) return PolyQ{};
    if (degree() < rhs.degree())
        throw NonDivisibleError("degree of divisor exceeds degree of dividend");
    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quot(coeffs_.size() - rhs.coeffs_.size() + 1, mpz_class(0));
    const mpz_class& lead = rhs.coeffs_.back();
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(rhs.coeffs_.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        if (rem[i] % lead != 0)
            throw NonDivisibleError("leading coefficient does not divide: " + to_string() +
                                    " by " + rhs.to_string());
        mpz_class f = rem[i] / lead;
        int shift = i - (static_cast<int>(rhs.coeffs_.size()) - 1);
        quot[shift] = f;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) rem[shift + j] -= f * rhs.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0)
            throw NonDivisibleError("nonzero remainder: " + to_string() + " by " + rhs.to_string());
    return from_coeffs(std::move(quot));
}

mpq_class PolyQ::eval(const mpq_class& q_value) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q_value + mpq_class(*it);
    return acc;
}

bool PolyQ::is_single_term() const {
    int nz = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++nz;
    return nz == 1;
}

std::string PolyQ::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? "-" : "+";
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += (i == 1) ? "q" : "q^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace phecke
