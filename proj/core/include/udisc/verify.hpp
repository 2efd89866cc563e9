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

#include "udisc/discriminator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace udisc {

struct VerifyOptions {
    Priors priors{};
    int euler_pairs = 50;
    int beta_steps = 15;
    int eta_steps = 9;
    int scan_steps = 200;
    std::int64_t shots = 100000;
    std::uint64_t seed = 0x5eed;
};

struct CheckResult {
    std::string name;
    /// "core", or "reconstruction-dependent" for checks that rest on the
    /// dim_weights binding when n_A != n_C.
    std::string group;
    bool passed = false;
    bool skipped = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string detail;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    CopyConfig config;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Runs the full oracle suite on one configuration. Throws ResourceError when
/// the configuration exceeds the oracle caps.
VerificationReport run_verification(const CopyConfig& config, const VerifyOptions& options = {});

}  // namespace udisc
