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

// JSON and CSV renderings of the library's result types. Field names and
// column orders here are the tool's stable interface.

#include "udisc/discriminator.hpp"
#include "udisc/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace udisc::io {

using Json = nlohmann::ordered_json;

/// Rounds to `precision` significant digits; NaN and infinities become null.
Json number(double value, int precision);
/// Fixed %.*g rendering used for CSV cells ("nan" for NaN).
std::string format_number(double value, int precision);

Json to_json(const CopyConfig& config);
Json to_json(const Priors& priors, int precision);
Json to_json(const Overlap& ov, int precision);
Json to_json(const BlockData& block, int precision);
Json to_json(const PspBreakdown& psp, int precision);
Json to_json(const CheckResult& check, int precision);
Json to_json(const VerificationReport& report, int precision);

CopyConfig config_from_json(const Json& j);
BlockData block_from_json(const Json& j);
PspBreakdown psp_from_json(const Json& j);
CheckResult check_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

struct SweepRow {
    double s = 0.0;
    double beta = 0.0;
    double eta1 = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double total = 0.0;
};

Json to_json(const SweepRow& row, int precision);
SweepRow sweep_row_from_json(const Json& j);

inline const char* kSweepCsvHeader = "s,beta,eta1,a,b,c,total";
std::string to_csv(const SweepRow& row, int precision);

}  // namespace udisc::io
