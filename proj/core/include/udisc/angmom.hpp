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

// Exact-arithmetic angular-momentum kernel.
//
// Phase convention: Condon-Shortley throughout. Clebsch-Gordan coefficients
// are real, <j1 j1; j2 (J - j1) | J J> > 0, and the Racah closed forms below
// are used without extra phase factors. Spin-1/2 |0> is the +1/2 projection.
//
// All factorial-bearing sums run over big-integer rationals; a square root is
// taken only at the SqrtRational boundary. Selection-rule zeros are exact.

#include "udisc/bigint.hpp"
#include "udisc/sqrt_rational.hpp"

#include <compare>
#include <cstdint>

namespace udisc {

/// A spin or projection quantum number stored as twice its value.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_twice(int t) noexcept { return HalfInt{t}; }
    static constexpr HalfInt from_int(int n) noexcept { return HalfInt{2 * n}; }

    constexpr bool is_integer() const noexcept { return twice % 2 == 0; }
    constexpr double value() const noexcept { return 0.5 * twice; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept { return {a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept { return {a.twice - b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) noexcept { return {-a.twice}; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) noexcept = default;
};

/// Two-row Young diagram [row1, row2].
struct YoungTwoRow {
    int row1 = 0;
    int row2 = 0;

    friend constexpr bool operator==(YoungTwoRow, YoungTwoRow) noexcept = default;
};

/// n!, memoized. The memo table grows under an exclusive lock and is read
/// under a shared one, so concurrent callers are safe.
BigInt factorial(int n);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// <j1 m1; j2 m2 | J M>. Throws DomainError for negative spins, |m| > j, or
/// j +- m non-integral.
SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                            HalfInt M);

/// |d^j_{l,j}(beta)|^2 = C(2j, j+l) cos^{2(j+l)}(beta/2) sin^{2(j-l)}(beta/2).
///
/// Only the modulus is exposed: the Euler phases exp(-i l alpha),
/// exp(-i j gamma) drop out of every success-probability expression.
double wigner_d_stretched_sq(HalfInt j, HalfInt l, double beta);

/// Racah single-sum 6j symbol {j1 j2 j3; j4 j5 j6}. Zero unless all four
/// triads (j1 j2 j3), (j1 j5 j6), (j4 j2 j6), (j4 j5 j3) are admissible.
SqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// Terminating 2F1(a, b; 1; z) for b <= 0, summed with Neumaier compensation.
double gauss_2f1_terminating(std::int64_t a, std::int64_t b, double z);

/// Dimension of the U(d) irrep labelled by a two-row diagram (hook-content).
BigInt weyl_dim(YoungTwoRow diagram, int d);

/// Dimension of the n-fold symmetric subspace of C^d, C(n+d-1, d-1).
BigInt sym_dim(int n, int d);

/// Triangle rule with integral perimeter.
bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) noexcept;

}  // namespace udisc
