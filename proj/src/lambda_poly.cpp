#include "glam/lambda_poly.hpp"

#include <algorithm>
#include <sstream>

namespace glam {

LambdaPoly::LambdaPoly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

LambdaPoly LambdaPoly::from_coefficients(std::vector<Rational> coeffs) {
    LambdaPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

LambdaPoly LambdaPoly::lambda() { return from_coefficients({Rational(0), Rational(1)}); }

Rational LambdaPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::size_t LambdaPoly::term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

Rational LambdaPoly::eval(const Rational& v) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) {
    *this = *this * o;
    return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LambdaPoly::from_coefficients(std::move(out));
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

void LambdaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string to_string(const LambdaPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto cs = p.coefficients();
    for (std::size_t k = cs.size(); k-- > 0;) {
        const Rational& c = cs[k];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational mag = c.abs();
        if (k == 0) {
            os << mag;
        } else {
            if (mag != Rational(1)) os << mag << "*";
            os << "l";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace glam
