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

#include "udisc/angmom.hpp"

#include "udisc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <vector>

namespace udisc {

namespace {

class FactorialTable {
  public:
    BigInt get(int n) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < table_.size()) return table_[n];
        }
        std::unique_lock lock(mutex_);
        while (table_.size() <= static_cast<std::size_t>(n)) {
            table_.push_back(table_.back() * static_cast<unsigned>(table_.size()));
        }
        return table_[n];
    }

  private:
    std::shared_mutex mutex_;
    std::vector<BigInt> table_{BigInt(1)};
};

FactorialTable& factorial_table() {
    static FactorialTable table;
    return table;
}

void check_spin(HalfInt j, HalfInt m, const char* what) {
    if (j.twice < 0) throw DomainError(std::string(what) + ": negative spin");
    if (std::abs(m.twice) > j.twice) throw DomainError(std::string(what) + ": |m| > j");
    if ((j.twice + m.twice) % 2 != 0) throw DomainError(std::string(what) + ": j - m not integral");
}

// (x.twice + y.twice - z.twice) / 2 and friends; callers guarantee evenness.
constexpr int half(int twice_sum) noexcept { return twice_sum / 2; }

BigRational inv_factorial_product(std::initializer_list<int> args) {
    BigInt den = 1;
    for (int a : args) den *= factorial(a);
    return BigRational(BigInt(1), den);
}

// Delta(abc)^2 = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
BigRational triangle_coeff_sq(HalfInt a, HalfInt b, HalfInt c) {
    const BigInt num = factorial(half(a.twice + b.twice - c.twice)) *
                       factorial(half(a.twice - b.twice + c.twice)) *
                       factorial(half(-a.twice + b.twice + c.twice));
    return BigRational(num, factorial(half(a.twice + b.twice + c.twice) + 1));
}

}  // namespace

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) noexcept {
    if (a.twice < 0 || b.twice < 0 || c.twice < 0) return false;
    if ((a.twice + b.twice + c.twice) % 2 != 0) return false;
    return std::abs(a.twice - b.twice) <= c.twice && c.twice <= a.twice + b.twice;
}

BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial: negative argument " + std::to_string(n));
    return factorial_table().get(n);
}

BigInt binomial(int n, int k) {
    if (n < 0) throw DomainError("binomial: negative n");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    check_spin(j1, m1, "clebsch_gordan");
    check_spin(j2, m2, "clebsch_gordan");
    check_spin(J, M, "clebsch_gordan");
    if (m1 + m2 != M || !triangle_ok(j1, j2, J)) return SqrtRational::zero();

    const int j12_J = half(j1.twice + j2.twice - J.twice);
    const int j1_m1 = half(j1.twice - m1.twice);
    const int j2_m2p = half(j2.twice + m2.twice);
    const int a = half(J.twice - j2.twice + m1.twice);  // J - j2 + m1
    const int b = half(J.twice - j1.twice - m2.twice);  // J - j1 - m2

    BigRational prefactor = BigRational(J.twice + 1) * triangle_coeff_sq(j1, j2, J);
    prefactor *= BigRational(factorial(half(J.twice + M.twice)) * factorial(half(J.twice - M.twice)) *
                             factorial(j1_m1) * factorial(half(j1.twice + m1.twice)) *
                             factorial(half(j2.twice - m2.twice)) * factorial(j2_m2p));

    const int kmin = std::max({0, -a, -b});
    const int kmax = std::min({j12_J, j1_m1, j2_m2p});
    BigRational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigRational term = inv_factorial_product({k, j12_J - k, j1_m1 - k, j2_m2p - k, a + k, b + k});
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    const int sign = sum > 0 ? 1 : (sum < 0 ? -1 : 0);
    return SqrtRational::from_signed_radicand(sign, prefactor * sum * sum);
}

double wigner_d_stretched_sq(HalfInt j, HalfInt l, double beta) {
    check_spin(j, l, "wigner_d_stretched_sq");
    if (!(beta >= 0.0 && beta <= std::numbers::pi)) {
        throw DomainError("wigner_d_stretched_sq: beta outside [0, pi]");
    }
    const int n = j.twice;
    const int up = half(j.twice + l.twice);
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    return to_double(binomial(n, up)) * std::pow(c * c, up) * std::pow(s * s, n - up);
}

SqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6}) {
        if (j.twice < 0) throw DomainError("wigner_6j: negative spin");
    }
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) || !triangle_ok(j4, j2, j6) ||
        !triangle_ok(j4, j5, j3)) {
        return SqrtRational::zero();
    }
    const int t123 = half(j1.twice + j2.twice + j3.twice);
    const int t156 = half(j1.twice + j5.twice + j6.twice);
    const int t426 = half(j4.twice + j2.twice + j6.twice);
    const int t453 = half(j4.twice + j5.twice + j3.twice);
    const int q1245 = half(j1.twice + j2.twice + j4.twice + j5.twice);
    const int q2356 = half(j2.twice + j3.twice + j5.twice + j6.twice);
    const int q3164 = half(j3.twice + j1.twice + j6.twice + j4.twice);

    const BigRational delta_sq = triangle_coeff_sq(j1, j2, j3) * triangle_coeff_sq(j1, j5, j6) *
                                 triangle_coeff_sq(j4, j2, j6) * triangle_coeff_sq(j4, j5, j3);

    const int tmin = std::max({t123, t156, t426, t453});
    const int tmax = std::min({q1245, q2356, q3164});
    BigRational sum = 0;
    for (int t = tmin; t <= tmax; ++t) {
        BigRational term = BigRational(factorial(t + 1)) *
                           inv_factorial_product({t - t123, t - t156, t - t426, t - t453, q1245 - t,
                                                  q2356 - t, q3164 - t});
        if (t % 2 != 0) term = -term;
        sum += term;
    }
    const int sign = sum > 0 ? 1 : (sum < 0 ? -1 : 0);
    return SqrtRational::from_signed_radicand(sign, delta_sq * sum * sum);
}

double gauss_2f1_terminating(std::int64_t a, std::int64_t b, double z) {
    if (b > 0) throw DomainError("gauss_2f1_terminating: b > 0 does not terminate");
    double sum = 1.0;
    double compensation = 0.0;
    double term = 1.0;
    for (std::int64_t j = 0; j < -b; ++j) {
        const double jd = static_cast<double>(j);
        term *= (static_cast<double>(a) + jd) * (static_cast<double>(b) + jd) /
                ((jd + 1.0) * (jd + 1.0)) * z;
        const double t = sum + term;
        compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + compensation;
}

BigInt weyl_dim(YoungTwoRow diagram, int d) {
    if (diagram.row2 < 0 || diagram.row1 < diagram.row2) {
        throw DomainError("weyl_dim: rows must satisfy row1 >= row2 >= 0");
    }
    if (d < 1) throw DomainError("weyl_dim: d must be positive");
    if (diagram.row2 > 0 && d < 2) throw DomainError("weyl_dim: two rows need d >= 2");

    BigRational product = 1;
    for (int col = 0; col < diagram.row1; ++col) {
        const int leg = col < diagram.row2 ? 1 : 0;
        const int hook = (diagram.row1 - col - 1) + leg + 1;
        product *= BigRational(d + col, hook);
    }
    for (int col = 0; col < diagram.row2; ++col) {
        const int hook = diagram.row2 - col;
        product *= BigRational(d + col - 1, hook);
    }
    return boost::multiprecision::numerator(product);
}

BigInt sym_dim(int n, int d) {
    if (n < 0 || d < 1) throw DomainError("sym_dim: need n >= 0 and d >= 1");
    return binomial(n + d - 1, d - 1);
}

}  // namespace udisc
