// Copyright 2026 The udisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "udisc/sqrt_rational.hpp"

#include "udisc/errors.hpp"

#include <cmath>
#include <ostream>

namespace udisc {

namespace mp = boost::multiprecision;

SqrtRational SqrtRational::from_signed_radicand(int sign, const BigRational& radicand) {
    if (radicand < 0) throw DomainError("SqrtRational: negative radicand");
    SqrtRational out;
    if (sign == 0 || radicand == 0) return out;
    out.sign_ = sign > 0 ? 1 : -1;
    // cpp_rational is always normalized, so these are already in lowest terms.
    out.num_ = mp::numerator(radicand);
    out.den_ = mp::denominator(radicand);
    return out;
}

SqrtRational SqrtRational::from_rational(const BigRational& value) {
    const int s = value > 0 ? 1 : (value < 0 ? -1 : 0);
    return from_signed_radicand(s, value * value);
}

BigRational SqrtRational::squared() const { return BigRational(num_, den_); }

BigRational SqrtRational::signed_squared() const { return sign_ * squared(); }

double SqrtRational::to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::sqrt(udisc::to_double(squared()));
}

std::string SqrtRational::str() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += "sqrt(" + num_.str();
    if (den_ != 1) s += "/" + den_.str();
    s += ")";
    return s;
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
    return SqrtRational::from_signed_radicand(a.sign_ * b.sign_, a.squared() * b.squared());
}

SqrtRational operator-(const SqrtRational& a) {
    SqrtRational out = a;
    out.sign_ = -out.sign_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const SqrtRational& x) { return os << x.str(); }

}  // namespace udisc
