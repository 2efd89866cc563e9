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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

namespace udisc {
namespace {

TEST(SqrtRational, ZeroInvariants) {
    const auto z = SqrtRational::zero();
    EXPECT_EQ(z.sign(), 0);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.radicand_den(), 1);
    EXPECT_EQ(z.to_double(), 0.0);
    EXPECT_EQ(SqrtRational::from_signed_radicand(-1, 0), z);
}

TEST(SqrtRational, LowestTermsAndSign) {
    const auto x = SqrtRational::from_signed_radicand(-1, BigRational(6, 8));
    EXPECT_EQ(x.sign(), -1);
    EXPECT_EQ(x.radicand_num(), 3);
    EXPECT_EQ(x.radicand_den(), 4);
    EXPECT_EQ(x.signed_squared(), BigRational(-3, 4));
    EXPECT_NEAR(x.to_double(), -std::sqrt(0.75), 1e-16);
}

TEST(SqrtRational, FromRational) {
    const auto x = SqrtRational::from_rational(BigRational(-2, 3));
    EXPECT_EQ(x.sign(), -1);
    EXPECT_EQ(x.squared(), BigRational(4, 9));
    EXPECT_DOUBLE_EQ(x.to_double(), -2.0 / 3.0);
}

TEST(SqrtRational, Multiplication) {
    const auto a = SqrtRational::from_signed_radicand(1, BigRational(1, 2));
    const auto b = SqrtRational::from_signed_radicand(-1, BigRational(2, 9));
    const auto p = a * b;
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.squared(), BigRational(1, 9));
    EXPECT_EQ((-p).sign(), 1);
    EXPECT_TRUE((a * SqrtRational::zero()).is_zero());
}

TEST(SqrtRational, ToDoubleSquaredRoundTrip) {
    for (int p = 1; p < 60; p += 7)
        for (int q = 1; q < 60; q += 5) {
            const auto x = SqrtRational::from_signed_radicand(1, BigRational(p, q));
            const double v = x.to_double();
            const double r = static_cast<double>(p) / q;
            EXPECT_NEAR(v * v, r, 4 * r * std::numeric_limits<double>::epsilon());
        }
}

TEST(SqrtRational, HugeRadicand) {
    BigInt big = 1;
    for (int i = 0; i < 400; ++i) big *= 10;
    const auto x = SqrtRational::from_signed_radicand(1, BigRational(big + 1, big));
    EXPECT_DOUBLE_EQ(x.to_double(), 1.0);
}

TEST(SqrtRational, Printing) {
    std::ostringstream os;
    os << SqrtRational::from_signed_radicand(-1, BigRational(1, 2));
    EXPECT_EQ(os.str(), SqrtRational::from_signed_radicand(-1, BigRational(1, 2)).str());
    EXPECT_FALSE(os.str().empty());
}

}  // namespace
}  // namespace udisc
