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

// Brute-force Hilbert-space verifier.
//
// Everything here is built explicitly in the 2^N product space of N qubits
// (qubit 0 is the most significant bit; registers are laid out A, B, C). It
// shares only the Clebsch-Gordan kernel with the analytic path, so agreement
// between the two is evidence, not tautology. All functions work in the
// canonical labelling of CopyConfig (n_a >= n_c).

#include "udisc/angmom.hpp"
#include "udisc/discriminator.hpp"
#include "udisc/random.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace udisc {

using DenseKet = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;

/// Largest ket dimension the oracle will allocate (env UDISC_MAX_DIM, default 2^14).
std::size_t max_state_dim();
/// Largest dense-operator dimension: min(env UDISC_MAX_OP_DIM (default 2^12),
/// max_state_dim()).
std::size_t max_operator_dim();

/// Phi_which = phi1^{n_A} (x) phi_which^{n_B} (x) phi2^{n_C}.
DenseKet build_input_state(const DenseKet& phi1, const DenseKet& phi2, const CopyConfig& config,
                           int which);

struct StatePair {
    DenseKet phi1;
    DenseKet phi2;
};

/// phi1 = |0>, phi2 = e^{-i(a+g)/2} cos(b/2)|0> + e^{i(a-g)/2} sin(b/2)|1>.
StatePair euler_pair(double beta, double alpha, double gamma);

enum class Scheme {
    Side1,  // (A B) coupled to C: supports Phi1
    Side2,  // A coupled to (B C): supports Phi2
};

struct CoupledBasisVector {
    HalfInt total_j;
    HalfInt total_m;
    int k = 0;
    Scheme scheme = Scheme::Side1;
    DenseKet embedding;
};

/// Dicke states of the two registers coupled by Clebsch-Gordan coefficients
/// into |J = N/2 - k, M>. Side1 carries k = 0..n_C; Side2 k = 0..min(n_A, n_2).
/// Ordered by k, then M descending.
std::vector<CoupledBasisVector> coupled_basis(const CopyConfig& config, Scheme scheme);

/// Collective J^2 applied to an N-qubit ket.
DenseKet apply_total_spin_sq(const DenseKet& ket, int num_qubits);

/// |<Side1: k M | Side2: k M>|, checked to be M-independent within 1e-10.
double gram_overlap(const CopyConfig& config, int k);
/// gram_overlap for k = 1..n_C.
std::vector<double> gram_overlaps(const CopyConfig& config);

struct Povm {
    DenseOperator pi1;
    DenseOperator pi2;
    DenseOperator pi0;
    DenseOperator support;  // projector onto H_1 + H_2
};

/// Explicit POVM from block data (one entry per k = 1..n_C). With phase_seed
/// set, every Jordan basis vector is multiplied by a random phase first; the
/// operators must not change.
Povm build_povm(const CopyConfig& config, const Priors& priors, std::span<const BlockData> blocks,
                std::optional<std::uint64_t> phase_seed = std::nullopt);

/// Re <psi|op|psi>.
double expectation(const DenseOperator& op, const DenseKet& psi);

/// eta1 <Phi1|Pi1|Phi1> + eta2 <Phi2|Pi2|Phi2>.
double psp_direct(const Povm& povm, const DenseKet& state1, const DenseKet& state2, const Priors& priors);

/// Squared norm of the projection of state onto the J = N/2 - k block of scheme.
double block_projection(const CopyConfig& config, const DenseKet& state, Scheme scheme, int k);

struct QScanResult {
    std::vector<double> overlaps;  // Gram O_k, k = 1..n_C
    std::vector<double> best_q1;   // argmax per block
    double grid_step_max = 0.0;    // widest q1 grid spacing over blocks
    double best_asp = 0.0;
};

/// Average success probability against normalized projectors onto H_1 and
/// H_2, maximized block by block over a q1 grid on [O_k^2, 1]. d = 2 only.
QScanResult asp_q_scan(const CopyConfig& config, const Priors& priors, int grid_steps);

struct OutcomeProbabilities {
    double p1 = 0.0;
    double p2 = 0.0;
    double p0 = 0.0;
};

OutcomeProbabilities outcome_probabilities(const Povm& povm, const DenseKet& state);

struct BornCounts {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t n0 = 0;

    friend bool operator==(const BornCounts&, const BornCounts&) = default;
};

/// Samples POVM outcomes; probabilities below 1e-14 are treated as zero.
BornCounts born_sample(const Povm& povm, const DenseKet& state, std::int64_t shots, std::uint64_t seed);

/// Haar-random unit vector in C^d.
DenseKet haar_random_state(int d, Rng& rng);
/// |<a|b>|^2 for independent Haar pairs.
std::vector<double> haar_overlap_samples(int d, std::int64_t samples, std::uint64_t seed);
/// Sample mean of (|phi><phi|)^{(x) n} over Haar phi.
DenseOperator haar_averaged_product(int n, int d, std::int64_t samples, std::uint64_t seed);
/// Projector onto the symmetric subspace of (C^d)^{(x) n}, by permutation averaging.
DenseOperator symmetric_projector(int n, int d);

}  // namespace udisc
