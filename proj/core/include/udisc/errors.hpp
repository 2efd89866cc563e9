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

#include <stdexcept>
#include <string>

namespace udisc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Priors with eta1 in {0, 1}; the discrimination problem degenerates.
class DegeneratePriorError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A Jordan block whose two partner vectors coincide (1 - O_k^2 ~ 0).
class DegenerateBlockError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Requested Hilbert-space dimension or grid size exceeds the configured cap.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Linear system too close to singular to trust the solution.
class IllConditionedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Outcome probabilities of a POVM that do not sum to one.
class PovmError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A brute-force cross-check disagreed with itself (e.g. M-dependent overlaps).
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Feature outside the supported envelope (e.g. the oracle for d != 2).
class UnsupportedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace udisc
