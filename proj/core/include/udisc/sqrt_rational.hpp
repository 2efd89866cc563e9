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

#pragma once

#include "udisc/bigint.hpp"

#include <iosfwd>
#include <string>

namespace udisc {

/// Exact value sign * sqrt(radicand_num / radicand_den).
///
/// Clebsch-Gordan coefficients and 6j symbols are square roots of rationals up
/// to sign, so this closes the exact arithmetic used by the Racah sums. The
/// radicand is kept in lowest terms; square factors are not extracted.
class SqrtRational {
  public:
    SqrtRational() = default;

    /// sign * sqrt(radicand); radicand must be >= 0.
    static SqrtRational from_signed_radicand(int sign, const BigRational& radicand);
    /// Exact rational value r (radicand r^2, sign of r).
    static SqrtRational from_rational(const BigRational& value);
    static SqrtRational zero() { return {}; }

    int sign() const noexcept { return sign_; }
    const BigInt& radicand_num() const noexcept { return num_; }
    const BigInt& radicand_den() const noexcept { return den_; }
    bool is_zero() const noexcept { return sign_ == 0; }

    /// The exact square, value^2 = num/den (always >= 0).
    BigRational squared() const;
    /// sign * (num/den): the signed square, for exact sums of squares.
    BigRational signed_squared() const;

    double to_double() const;
    std::string str() const;

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
    friend SqrtRational operator-(const SqrtRational& a);
    friend bool operator==(const SqrtRational& a, const SqrtRational& b) = default;

  private:
    int sign_ = 0;
    BigInt num_ = 0;
    BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const SqrtRational& x);

}  // namespace udisc
