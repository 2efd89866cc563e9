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

#include "udisc/oracle.hpp"

#include "udisc/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

namespace udisc {

namespace {

using cplx = std::complex<double>;

std::size_t env_cap(const char* name, std::size_t fallback) {
    if (const char* raw = std::getenv(name)) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

std::size_t qubit_dim(int num_qubits) {
    if (num_qubits >= 63) throw ResourceError("oracle: register too large");
    return std::size_t{1} << num_qubits;
}

void require_qubits(const CopyConfig& config, std::size_t cap, const char* what) {
    if (config.d != 2) throw UnsupportedError(std::string(what) + ": the oracle works on qubits (d = 2)");
    const int n = config.total();
    if (n >= 63 || qubit_dim(n) > cap) {
        throw ResourceError(std::string(what) + ": 2^" + std::to_string(n) + " exceeds the oracle cap of " +
                            std::to_string(cap));
    }
}

struct RegisterSplit {
    int first = 0;
    int second = 0;
    int max_k = 0;
};

RegisterSplit split_for(const CopyConfig& config, Scheme scheme) {
    if (scheme == Scheme::Side1) return {config.n1(), config.n_c, config.n_c};
    return {config.n_a, config.n2(), config.side2_max_k()};
}

// Maps (k, twice M) to the basis index for quick partner lookup.
using BlockIndex = std::map<std::pair<int, int>, std::size_t>;

BlockIndex index_basis(const std::vector<CoupledBasisVector>& basis) {
    BlockIndex idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[{basis[i].k, basis[i].total_m.twice}] = i;
    return idx;
}

DenseKet kron(const DenseKet& a, const DenseKet& b) {
    DenseKet out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

double normal01(Rng& rng) {
    // Box-Muller on the portable uniform source.
    const double u1 = 1.0 - uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::size_t max_state_dim() { return env_cap("UDISC_MAX_DIM", std::size_t{1} << 14); }
std::size_t max_operator_dim() {
    return std::min(env_cap("UDISC_MAX_OP_DIM", std::size_t{1} << 12), max_state_dim());
}

DenseKet build_input_state(const DenseKet& phi1, const DenseKet& phi2, const CopyConfig& config,
                           int which) {
    if (which != 1 && which != 2) throw DomainError("build_input_state: which must be 1 or 2");
    if (phi1.size() != phi2.size() || phi1.size() < 2) throw DomainError("build_input_state: bad qudit kets");
    const double dim = std::pow(static_cast<double>(phi1.size()), config.total());
    if (dim > static_cast<double>(max_state_dim())) {
        throw ResourceError("build_input_state: d^N exceeds the oracle cap");
    }
    DenseKet out = DenseKet::Ones(1);
    for (int i = 0; i < config.n_a; ++i) out = kron(out, phi1);
    const DenseKet& data = which == 1 ? phi1 : phi2;
    for (int i = 0; i < config.n_b; ++i) out = kron(out, data);
    for (int i = 0; i < config.n_c; ++i) out = kron(out, phi2);
    return out;
}

StatePair euler_pair(double beta, double alpha, double gamma) {
    StatePair p{DenseKet::Zero(2), DenseKet::Zero(2)};
    p.phi1(0) = 1.0;
    p.phi2(0) = std::polar(std::cos(0.5 * beta), -0.5 * (alpha + gamma));
    p.phi2(1) = std::polar(std::sin(0.5 * beta), 0.5 * (alpha - gamma));
    return p;
}

std::vector<CoupledBasisVector> coupled_basis(const CopyConfig& config, Scheme scheme) {
    require_qubits(config, max_state_dim(), "coupled_basis");
    const int n = config.total();
    const RegisterSplit split = split_for(config, scheme);
    const std::size_t dim = qubit_dim(n);
    const std::uint64_t low_mask = (std::uint64_t{1} << split.second) - 1;

    // Dicke normalizations 1/sqrt(C(r, p)).
    auto inv_sqrt_binom = [](int r) {
        std::vector<double> v(r + 1);
        for (int p = 0; p <= r; ++p) v[p] = 1.0 / std::sqrt(to_double(binomial(r, p)));
        return v;
    };
    const auto norm1 = inv_sqrt_binom(split.first);
    const auto norm2 = inv_sqrt_binom(split.second);

    const HalfInt j1 = HalfInt::from_twice(split.first);
    const HalfInt j2 = HalfInt::from_twice(split.second);
    std::vector<CoupledBasisVector> basis;
    for (int k = 0; k <= split.max_k; ++k) {
        const HalfInt J = HalfInt::from_twice(n - 2 * k);
        for (int twice_m = J.twice; twice_m >= -J.twice; twice_m -= 2) {
            // amplitude for excitation counts (p1, p2); p = number of |1> = spin down.
            std::vector<double> table((split.first + 1) * (split.second + 1), 0.0);
            for (int p1 = 0; p1 <= split.first; ++p1) {
                const int twice_m1 = split.first - 2 * p1;
                const int twice_m2 = twice_m - twice_m1;
                if (std::abs(twice_m2) > split.second) continue;
                const int p2 = (split.second - twice_m2) / 2;
                const double cg = clebsch_gordan(j1, HalfInt::from_twice(twice_m1), j2,
                                                 HalfInt::from_twice(twice_m2), J, HalfInt::from_twice(twice_m))
                                      .to_double();
                table[p1 * (split.second + 1) + p2] = cg * norm1[p1] * norm2[p2];
            }
            DenseKet v = DenseKet::Zero(static_cast<Eigen::Index>(dim));
            for (std::size_t x = 0; x < dim; ++x) {
                const int p1 = std::popcount(static_cast<std::uint64_t>(x) >> split.second);
                const int p2 = std::popcount(static_cast<std::uint64_t>(x) & low_mask);
                v(static_cast<Eigen::Index>(x)) = table[p1 * (split.second + 1) + p2];
            }
            basis.push_back({J, HalfInt::from_twice(twice_m), k, scheme, std::move(v)});
        }
    }
    return basis;
}

DenseKet apply_total_spin_sq(const DenseKet& ket, int num_qubits) {
    const auto dim = static_cast<std::size_t>(ket.size());
    if (dim != qubit_dim(num_qubits)) throw DomainError("apply_total_spin_sq: size mismatch");
    const cplx i_unit(0.0, 1.0);
    auto apply = [&](const DenseKet& in, char axis) {
        DenseKet out = DenseKet::Zero(in.size());
        for (int q = 0; q < num_qubits; ++q) {
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t x = 0; x < dim; ++x) {
                const bool down = (x & bit) != 0;
                const auto xi = static_cast<Eigen::Index>(x);
                switch (axis) {
                    case 'x': out(static_cast<Eigen::Index>(x ^ bit)) += 0.5 * in(xi); break;
                    case 'y':  // sigma_y|0> = i|1>, sigma_y|1> = -i|0>
                        out(static_cast<Eigen::Index>(x ^ bit)) += (down ? -0.5 : 0.5) * i_unit * in(xi);
                        break;
                    default: out(xi) += (down ? -0.5 : 0.5) * in(xi); break;
                }
            }
        }
        return out;
    };
    return apply(apply(ket, 'x'), 'x') + apply(apply(ket, 'y'), 'y') + apply(apply(ket, 'z'), 'z');
}

double gram_overlap(const CopyConfig& config, int k) {
    if (k < 0 || k > config.n_c) throw DomainError("gram_overlap: k outside 0..n_C");
    const auto side1 = coupled_basis(config, Scheme::Side1);
    const auto side2 = coupled_basis(config, Scheme::Side2);
    const auto idx2 = index_basis(side2);
    double first = -1.0;
    for (const auto& v1 : side1) {
        if (v1.k != k) continue;
        const double o = std::abs(v1.embedding.dot(side2[idx2.at({k, v1.total_m.twice})].embedding));
        if (first < 0.0) {
            first = o;
        } else if (std::abs(o - first) > 1e-10) {
            throw ConsistencyError("gram_overlap: Jordan overlap depends on M");
        }
    }
    return first;
}

std::vector<double> gram_overlaps(const CopyConfig& config) {
    const auto side1 = coupled_basis(config, Scheme::Side1);
    const auto side2 = coupled_basis(config, Scheme::Side2);
    const auto idx2 = index_basis(side2);
    std::vector<double> out(config.n_c, -1.0);
    for (const auto& v1 : side1) {
        if (v1.k == 0) continue;
        const double o = std::abs(v1.embedding.dot(side2[idx2.at({v1.k, v1.total_m.twice})].embedding));
        double& slot = out[v1.k - 1];
        if (slot < 0.0) {
            slot = o;
        } else if (std::abs(o - slot) > 1e-10) {
            throw ConsistencyError("gram_overlaps: Jordan overlap depends on M");
        }
    }
    return out;
}

Povm build_povm(const CopyConfig& config, const Priors& priors, std::span<const BlockData> blocks,
                std::optional<std::uint64_t> phase_seed) {
    require_qubits(config, max_operator_dim(), "build_povm");
    if (canonical_priors(config, priors).degenerate()) {
        throw DegeneratePriorError("build_povm: eta1 must lie strictly inside (0, 1)");
    }
    if (static_cast<int>(blocks.size()) != config.n_c) throw DomainError("build_povm: need one block per k");

    auto side1 = coupled_basis(config, Scheme::Side1);
    auto side2 = coupled_basis(config, Scheme::Side2);
    if (phase_seed) {
        Rng rng(*phase_seed);
        for (auto* basis : {&side1, &side2}) {
            for (auto& v : *basis) v.embedding *= std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
        }
    }
    const auto idx2 = index_basis(side2);
    const auto dim = static_cast<Eigen::Index>(qubit_dim(config.total()));

    Povm povm{DenseOperator::Zero(dim, dim), DenseOperator::Zero(dim, dim), DenseOperator::Zero(dim, dim),
              DenseOperator::Zero(dim, dim)};
    for (const auto& v : side1) povm.support.noalias() += v.embedding * v.embedding.adjoint();

    for (const auto& v1 : side1) {
        if (v1.k == 0) continue;
        const BlockData& b = blocks[v1.k - 1];
        const DenseKet& a = v1.embedding;
        const DenseKet& c = side2[idx2.at({v1.k, v1.total_m.twice})].embedding;
        const cplx g = a.dot(c);  // <a|c>
        const double gap = 1.0 - std::norm(g);
        if (gap < 1e-12) throw DegenerateBlockError("build_povm: Jordan partners coincide");
        const double scale = 1.0 / std::sqrt(gap);
        // Orthogonal to c (resp. a) inside span{a, c}; <a|perp_c> is real positive.
        const DenseKet perp_c = (a - std::conj(g) * c) * scale;
        const DenseKet perp_a = (c - g * a) * scale;
        povm.pi1.noalias() += ((1.0 - b.q1) / gap) * (perp_c * perp_c.adjoint());
        povm.pi2.noalias() += ((1.0 - b.q2) / gap) * (perp_a * perp_a.adjoint());
        povm.support.noalias() += perp_a * perp_a.adjoint();
    }
    for (const auto& v2 : side2) {
        if (v2.k <= config.n_c) continue;
        povm.pi2.noalias() += v2.embedding * v2.embedding.adjoint();
        povm.support.noalias() += v2.embedding * v2.embedding.adjoint();
    }
    povm.pi0 = povm.support - povm.pi1 - povm.pi2;
    return povm;
}

double expectation(const DenseOperator& op, const DenseKet& psi) { return psi.dot(op * psi).real(); }

double psp_direct(const Povm& povm, const DenseKet& state1, const DenseKet& state2, const Priors& priors) {
    if (state1.size() != povm.pi1.rows() || state2.size() != povm.pi1.rows()) {
        throw DomainError("psp_direct: state and POVM dimensions differ");
    }
    return priors.eta1 * expectation(povm.pi1, state1) + priors.eta2 * expectation(povm.pi2, state2);
}

double block_projection(const CopyConfig& config, const DenseKet& state, Scheme scheme, int k) {
    double sum = 0.0;
    for (const auto& v : coupled_basis(config, scheme)) {
        if (v.k == k) sum += std::norm(v.embedding.dot(state));
    }
    return sum;
}

QScanResult asp_q_scan(const CopyConfig& config, const Priors& priors, int grid_steps) {
    require_qubits(config, max_state_dim(), "asp_q_scan");
    if (grid_steps < 1) throw DomainError("asp_q_scan: grid_steps must be >= 1");
    const Priors p = canonical_priors(config, priors);
    if (p.degenerate()) throw DegeneratePriorError("asp_q_scan: eta1 must lie strictly inside (0, 1)");

    const auto side1 = coupled_basis(config, Scheme::Side1);
    const auto side2 = coupled_basis(config, Scheme::Side2);
    const auto idx2 = index_basis(side2);
    const double dim_h1 = static_cast<double>(side1.size());
    const double dim_h2 = static_cast<double>(side2.size());

    // Tr(P_H perp perp^dag) summed over M, by explicit projection on every basis vector.
    auto captured = [](const std::vector<CoupledBasisVector>& basis, const DenseKet& v) {
        double s = 0.0;
        for (const auto& w : basis) s += std::norm(w.embedding.dot(v));
        return s;
    };

    std::vector<double> trace1(config.n_c, 0.0);
    std::vector<double> trace2(config.n_c, 0.0);
    std::vector<double> overlap(config.n_c, 0.0);
    for (const auto& v1 : side1) {
        if (v1.k == 0) continue;
        const DenseKet& a = v1.embedding;
        const DenseKet& c = side2[idx2.at({v1.k, v1.total_m.twice})].embedding;
        const cplx g = a.dot(c);
        const double gap = 1.0 - std::norm(g);
        if (gap < 1e-12) throw DegenerateBlockError("asp_q_scan: Jordan partners coincide");
        const DenseKet perp_c = (a - std::conj(g) * c) / std::sqrt(gap);
        const DenseKet perp_a = (c - g * a) / std::sqrt(gap);
        trace1[v1.k - 1] += captured(side1, perp_c) / gap;
        trace2[v1.k - 1] += captured(side2, perp_a) / gap;
        overlap[v1.k - 1] = std::abs(g);
    }

    QScanResult out;
    out.overlaps = overlap;
    int s2_count = 0;
    for (const auto& v2 : side2) s2_count += v2.k > config.n_c ? 1 : 0;
    out.best_asp = p.eta2 * s2_count / dim_h2;
    for (int k = 1; k <= config.n_c; ++k) {
        const double o2 = overlap[k - 1] * overlap[k - 1];
        const double step = (1.0 - o2) / grid_steps;
        out.grid_step_max = std::max(out.grid_step_max, step);
        double best_q = 1.0;
        double best_val = -1.0;
        for (int i = 0; i <= grid_steps; ++i) {
            const double q1 = o2 + i * step;
            const double q2 = q1 > 0.0 ? o2 / q1 : 0.0;
            const double val = p.eta1 * (1.0 - q1) * trace1[k - 1] / dim_h1 +
                               p.eta2 * (1.0 - q2) * trace2[k - 1] / dim_h2;
            if (val > best_val) {
                best_val = val;
                best_q = q1;
            }
        }
        out.best_q1.push_back(best_q);
        out.best_asp += best_val;
    }
    return out;
}

OutcomeProbabilities outcome_probabilities(const Povm& povm, const DenseKet& state) {
    return {expectation(povm.pi1, state), expectation(povm.pi2, state), expectation(povm.pi0, state)};
}

BornCounts born_sample(const Povm& povm, const DenseKet& state, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw DomainError("born_sample: shots must be >= 1");
    OutcomeProbabilities pr = outcome_probabilities(povm, state);
    if (std::abs(pr.p1 + pr.p2 + pr.p0 - 1.0) > 1e-9) {
        throw PovmError("born_sample: outcome probabilities do not sum to 1");
    }
    auto floor_zero = [](double p) { return p < 1e-14 ? 0.0 : p; };
    const std::array<double, 3> probs{floor_zero(pr.p1), floor_zero(pr.p2), floor_zero(pr.p0)};
    const double total = probs[0] + probs[1] + probs[2];
    std::size_t last = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) last = i;
    }

    Rng rng(seed);
    std::array<std::int64_t, 3> tally{};
    for (std::int64_t i = 0; i < shots; ++i) {
        const double u = uniform01(rng) * total;
        std::size_t outcome = last;
        double cumulative = 0.0;
        for (std::size_t j = 0; j < probs.size(); ++j) {
            cumulative += probs[j];
            if (probs[j] > 0.0 && u < cumulative) {
                outcome = j;
                break;
            }
        }
        ++tally[outcome];
    }
    BornCounts counts{tally[0], tally[1], tally[2]};
    return counts;
}

DenseKet haar_random_state(int d, Rng& rng) {
    if (d < 1) throw DomainError("haar_random_state: d must be positive");
    DenseKet v(d);
    for (int i = 0; i < d; ++i) v(i) = cplx(normal01(rng), normal01(rng));
    return v / v.norm();
}

std::vector<double> haar_overlap_samples(int d, std::int64_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t i = 0; i < samples; ++i) {
        const DenseKet a = haar_random_state(d, rng);
        const DenseKet b = haar_random_state(d, rng);
        out.push_back(std::norm(a.dot(b)));
    }
    return out;
}

DenseOperator haar_averaged_product(int n, int d, std::int64_t samples, std::uint64_t seed) {
    const double dim = std::pow(static_cast<double>(d), n);
    if (dim > static_cast<double>(max_operator_dim())) throw ResourceError("haar_averaged_product: too large");
    Rng rng(seed);
    const auto size = static_cast<Eigen::Index>(dim);
    DenseOperator acc = DenseOperator::Zero(size, size);
    for (std::int64_t s = 0; s < samples; ++s) {
        const DenseKet phi = haar_random_state(d, rng);
        DenseKet prod = DenseKet::Ones(1);
        for (int i = 0; i < n; ++i) prod = kron(prod, phi);
        acc.noalias() += prod * prod.adjoint();
    }
    return acc / static_cast<double>(samples);
}

DenseOperator symmetric_projector(int n, int d) {
    const double dim_d = std::pow(static_cast<double>(d), n);
    if (n < 0 || d < 1 || dim_d > static_cast<double>(max_operator_dim())) {
        throw ResourceError("symmetric_projector: too large");
    }
    const auto dim = static_cast<std::size_t>(dim_d);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    DenseOperator acc = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<int> digits(n);
    std::size_t count = 0;
    do {
        for (std::size_t x = 0; x < dim; ++x) {
            std::size_t rem = x;
            for (int i = n - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rem % d);
                rem /= d;
            }
            std::size_t y = 0;
            for (int i = 0; i < n; ++i) y = y * d + digits[perm[i]];
            acc(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += 1.0;
        }
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc / static_cast<double>(count);
}

}  // namespace udisc
