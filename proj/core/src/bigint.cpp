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

#include "udisc/bigint.hpp"

#include <cmath>
#include <cstdint>

namespace udisc {

namespace mp = boost::multiprecision;

double to_double(const BigRational& value) {
    BigInt num = mp::numerator(value);
    const BigInt den = mp::denominator(value);
    if (num == 0) return 0.0;
    const bool negative = num < 0;
    if (negative) num = -num;

    // Scale so the integer quotient carries at least 64 significant bits.
    const long num_bits = static_cast<long>(mp::msb(num)) + 1;
    const long den_bits = static_cast<long>(mp::msb(den)) + 1;
    const long shift = 66 - (num_bits - den_bits);
    BigInt quotient;
    BigInt remainder;
    if (shift >= 0) {
        mp::divide_qr(BigInt(num << shift), den, quotient, remainder);
    } else {
        mp::divide_qr(num, BigInt(den << -shift), quotient, remainder);
    }
    // Sticky bit keeps round-to-nearest honest when the tail is nonzero.
    if (remainder != 0) quotient |= 1;

    const long q_bits = static_cast<long>(mp::msb(quotient)) + 1;
    const long drop = q_bits > 64 ? q_bits - 64 : 0;
    BigInt top = quotient >> drop;
    if (drop > 0 && (quotient & ((BigInt(1) << drop) - 1)) != 0) top |= 1;
    const double mantissa = static_cast<double>(top.convert_to<std::uint64_t>());
    const double result = std::ldexp(mantissa, static_cast<int>(drop - shift));
    return negative ? -result : result;
}

double to_double(const BigInt& value) { return to_double(BigRational(value)); }

std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace udisc
