#include "lagint/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagint {

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::constant(Rational v) {
    RationalPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

RationalPoly RationalPoly::monomial(Rational c, int degree) {
    if (degree < 0) throw std::invalid_argument("RationalPoly::monomial: negative degree");
    RationalPoly p;
    if (c != 0) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

Rational RationalPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
    return c_[j];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

std::vector<double> RationalPoly::coeffs_as_double() const {
    std::vector<double> d(c_.size());
    std::transform(c_.begin(), c_.end(), d.begin(),
                   [](const Rational& q) { return to_double(q); });
    return d;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * static_cast<int>(j);
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("RationalPoly::shifted: negative shift");
    if (c_.empty() || k == 0) return k == 0 ? *this : RationalPoly{};
    std::vector<Rational> d(c_.size() + k, Rational(0));
    std::copy(c_.begin(), c_.end(), d.begin() + k);
    return RationalPoly(std::move(d));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(d));
}

void LaurentPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        low_ += static_cast<int>(lead);
    }
    if (c_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::constant(Rational v) { return monomial(std::move(v), 0); }

LaurentPoly LaurentPoly::monomial(Rational c, int exponent) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exponent;
        p.c_.push_back(std::move(c));
    }
    return p;
}

Rational LaurentPoly::coeff(int exponent) const {
    int i = exponent - low_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    std::vector<Rational> d(hi - lo + 1, Rational(0));
    for (int e = low_; e <= high(); ++e) d[e - lo] = c_[e - low_];
    for (int e = o.low_; e <= o.high(); ++e) d[e - lo] += o.c_[e - o.low_];
    low_ = lo;
    c_ = std::move(d);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    LaurentPoly p;
    p.low_ = a.low_ + b.low_;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    p.trim();
    return p;
}

LaurentPoly compose(const RationalPoly& p, const LaurentPoly& arg) {
    LaurentPoly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * arg + LaurentPoly::constant(*it);
    return acc;
}

} // namespace lagint
