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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace udisc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Nearest-double conversion that stays finite for ratios of huge integers
/// (e.g. 300!/299!), where converting numerator and denominator separately
/// would overflow.
double to_double(const BigRational& value);
double to_double(const BigInt& value);

std::string to_string(const BigInt& value);

}  // namespace udisc
