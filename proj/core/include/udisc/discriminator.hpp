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

// Analytic success probabilities of the optimal universal programmable
// unambiguous discriminator evaluated on pure inputs.
//
// Registers: A holds n_A copies of phi1, C holds n_C copies of phi2 (the
// programs), B holds n_B copies of the unknown data state. Inputs are
//   Phi1 = phi1^{n_A} (x) phi1^{n_B} (x) phi2^{n_C}
//   Phi2 = phi1^{n_A} (x) phi2^{n_B} (x) phi2^{n_C}.
// Irreducible blocks are labelled by k through the diagram [N - k, k], i.e.
// total spin N/2 - k in the qubit picture.

#include "udisc/angmom.hpp"
#include "udisc/bigint.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace udisc {

/// Register shape. Canonical form has n_a >= n_c; make() swaps A and C (and
/// records it) when the caller gives n_a < n_c.
struct CopyConfig {
    int n_a = 1;
    int n_b = 1;
    int n_c = 1;
    int d = 2;
    bool swapped = false;

    static CopyConfig make(int n_a, int n_b, int n_c, int d);

    int n1() const noexcept { return n_a + n_b; }
    int n2() const noexcept { return n_b + n_c; }
    int total() const noexcept { return n_a + n_b + n_c; }
    /// Largest k carried by side 2: min(n_A, n_2).
    int side2_max_k() const noexcept { return n_a < n2() ? n_a : n2(); }

    friend bool operator==(const CopyConfig&, const CopyConfig&) = default;
};

struct Priors {
    double eta1 = 0.5;
    double eta2 = 0.5;

    /// eta1 in [0,1]; eta2 = 1 - eta1.
    static Priors from_eta1(double eta1);
    /// Both given; must sum to one within 1e-12.
    static Priors make(double eta1, double eta2);

    /// True when eta1 is exactly 0 or 1.
    bool degenerate() const noexcept { return eta1 <= 0.0 || eta1 >= 1.0; }
    Priors swapped() const noexcept { return {eta2, eta1}; }

    friend bool operator==(const Priors&, const Priors&) = default;
};

/// Overlap of the two unknown states: s = |<phi1|phi2>| = cos(beta/2).
/// Both cos^2 and sin^2 of beta/2 are stored so neither endpoint loses digits.
class Overlap {
  public:
    static Overlap from_beta(double beta);
    static Overlap from_s(double s);

    double beta() const noexcept { return beta_; }
    double s() const noexcept { return s_; }
    double cos2() const noexcept { return cos2_; }
    double sin2() const noexcept { return sin2_; }

  private:
    double beta_ = 0.0;
    double s_ = 1.0;
    double cos2_ = 1.0;
    double sin2_ = 0.0;
};

enum class Regime { Q1Saturated, Interior, Q2Saturated };

std::string_view to_string(Regime r) noexcept;

struct BlockData {
    int k = 0;
    YoungTwoRow diagram;
    BigInt dim_block;
    double overlap = 0.0;  // O_k
    double lower = 0.0;    // eta1 below this: q1 = 1
    double upper = 1.0;    // eta1 above this: q1 = O_k^2
    double q1 = 1.0;
    double q2 = 1.0;
    Regime regime = Regime::Interior;
};

struct BlockContribution {
    int k = 0;
    int side = 1;
    double contribution = 0.0;

    friend bool operator==(const BlockContribution&, const BlockContribution&) = default;
};

struct PspBreakdown {
    /// Coefficients with the (1 - s^2)^{n_C} and (1 - s^2)^{n_2} factors pulled
    /// out. They diverge as s -> 1; at s == 1 exactly they are NaN.
    double coeff_a = 0.0;
    double coeff_b = 0.0;
    double coeff_c = 0.0;
    std::vector<BlockContribution> per_block;
    std::vector<BlockData> blocks;
    double total = 0.0;
};

/// O_k as an exact square root of a rational. Zero when the block k is not
/// carried by both sides.
SqrtRational jordan_overlap_exact(const CopyConfig& config, int k);
/// |sqrt((n1+1)(n2+1)) {n_A/2 n_B/2 n1/2; n_C/2 N/2-k n2/2}|, memoized per config.
double jordan_overlap(const CopyConfig& config, int k);
/// O_k for k = 1..n_C.
std::vector<double> jordan_overlaps(const CopyConfig& config);

/// Support dimensions (dim H_1, dim H_2) of the uniformly averaged inputs.
std::pair<BigInt, BigInt> dim_weights(const CopyConfig& config);

/// Priors as seen by the canonical (n_a >= n_c) labelling.
Priors canonical_priors(const CopyConfig& config, const Priors& priors);

/// Eq.-(3)-style three-regime optimal failure parameters for k = 1..n_C.
/// Priors are interpreted in the canonical labelling (see canonical_priors).
std::vector<BlockData> optimal_q(const CopyConfig& config, const Priors& priors);

/// Block data with a caller-chosen q1 (q2 = O_k^2 / q1). Used by grid scans.
BlockData block_with_q1(const CopyConfig& config, int k, double q1);

/// <Phi|1^{[N-k,k]}|Phi> for a state whose first register is u stretched
/// spins-1/2 and second is v copies at overlap beta with them. N = u + v.
/// All-positive polynomial expansion, exact rational coefficients.
double block_expectation(int u, int v, int k, const Overlap& ov);
double block_expectation(int u, int v, int k, double beta);

/// Same quantity via sum_l |d^{v/2}_{l,v/2}|^2 <u/2 u/2; v/2 l|N/2-k, u/2+l>^2.
double block_expectation_lemma(int u, int v, int k, double beta);

/// Same quantity via prefactor * sin^{2v}(beta/2) * 2F1(u-k+1, k-v; 1; -cot^2).
/// Singular at beta = 0; returns the exact limit 0 (k >= 1) or 1 (k = 0) there.
double block_expectation_hypergeometric(int u, int v, int k, double beta);

PspBreakdown psp(const CopyConfig& config, const Priors& priors, const Overlap& ov);
/// PSP with precomputed block data (from optimal_q or block_with_q1).
PspBreakdown psp_with_blocks(const CopyConfig& config, const Priors& priors,
                             std::span<const BlockData> blocks, const Overlap& ov);

/// n_B -> infinity: 1 - s^{2m}.
double limit_data_infinite(int m, const Overlap& ov);

struct ProgramLimit {
    double value = 0.0;
    double e = 0.0;
    double f = 1.0;
    Regime branch = Regime::Interior;
};

/// n_A = n_C -> infinity: unambiguous discrimination of phi1^{n} vs phi2^{n}.
ProgramLimit program_limit(int n, const Priors& priors, const Overlap& ov);
double limit_program_infinite(int n, const Priors& priors, const Overlap& ov);

/// Least-squares coefficients a_{mk}, k = 1..m, of
///   psp(m, n_large, m) ~ sum_k a_{mk} cos^{2(m-k)}(beta/2) sin^{2k}(beta/2).
std::vector<double> pascal_extract(int m, int n_large, std::span<const double> beta_grid,
                                   const Priors& priors = Priors{});

struct MonteCarloEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Average success probability by sampling t = s^2 from the Haar-induced
/// density (d-1)(1-t)^{d-2}. Deterministic for a fixed seed.
MonteCarloEstimate asp_monte_carlo(const CopyConfig& config, const Priors& priors,
                                   std::int64_t samples, std::uint64_t seed);

}  // namespace udisc
