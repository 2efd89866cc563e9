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

#include "udisc/discriminator.hpp"

#include "udisc/errors.hpp"
#include "udisc/random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace udisc {

namespace {

template <class Key, class Value>
class Memo {
  public:
    template <class Compute>
    Value get(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.emplace(key, std::move(value)).first->second;
    }

  private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

using Triple = std::tuple<int, int, int>;

// Coefficients c_j of E(u, v, k) = sum_j c_j cos^{2j} sin^{2(v-j)}, j = 0..v-k.
const std::vector<double>& expectation_coefficients(int u, int v, int k) {
    static Memo<Triple, std::shared_ptr<const std::vector<double>>> memo;
    auto ptr = memo.get({u, v, k}, [&] {
        const int n = u + v;
        const BigRational prefactor(BigInt(n - 2 * k + 1) * factorial(u) * factorial(v),
                                    factorial(k) * factorial(n - k + 1));
        auto coeffs = std::make_shared<std::vector<double>>();
        coeffs->reserve(v - k + 1);
        for (int j = 0; j <= v - k; ++j) {
            const double c = to_double(prefactor * binomial(u - k + j, j) * binomial(v - k, j));
            if (!std::isfinite(c)) {
                throw ResourceError("block_expectation: coefficient overflows double precision");
            }
            coeffs->push_back(c);
        }
        return std::shared_ptr<const std::vector<double>>(std::move(coeffs));
    });
    // The memo never erases, so the pointee outlives every caller.
    return *ptr;
}

void check_block_args(int u, int v, int k) {
    if (u < 0 || v < 0) throw DomainError("block_expectation: negative register size");
    if (k < 0) throw DomainError("block_expectation: negative block index");
}

double pow_int(double base, int exp) { return std::pow(base, exp); }

}  // namespace

CopyConfig CopyConfig::make(int n_a, int n_b, int n_c, int d) {
    if (n_a < 1 || n_b < 1 || n_c < 1) throw DomainError("CopyConfig: every register needs >= 1 copy");
    if (d < 2) throw DomainError("CopyConfig: dimension d must be >= 2");
    CopyConfig c{n_a, n_b, n_c, d, false};
    if (n_a < n_c) {
        std::swap(c.n_a, c.n_c);
        c.swapped = true;
    }
    return c;
}

Priors Priors::from_eta1(double eta1) {
    if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw DomainError("Priors: eta1 outside [0, 1]");
    return {eta1, 1.0 - eta1};
}

Priors Priors::make(double eta1, double eta2) {
    if (!(eta1 >= 0.0 && eta1 <= 1.0 && eta2 >= 0.0 && eta2 <= 1.0)) {
        throw DomainError("Priors: probabilities outside [0, 1]");
    }
    if (std::abs(eta1 + eta2 - 1.0) > 1e-12) throw DomainError("Priors: eta1 + eta2 != 1");
    return {eta1, eta2};
}

Overlap Overlap::from_beta(double beta) {
    if (!(beta >= 0.0 && beta <= std::numbers::pi)) throw DomainError("Overlap: beta outside [0, pi]");
    Overlap o;
    o.beta_ = beta;
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    o.s_ = std::max(c, 0.0);
    o.cos2_ = o.s_ * o.s_;
    o.sin2_ = s * s;
    return o;
}

Overlap Overlap::from_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("Overlap: s outside [0, 1]");
    Overlap o;
    o.s_ = s;
    o.beta_ = 2.0 * std::acos(s);
    o.cos2_ = s * s;
    o.sin2_ = (1.0 - s) * (1.0 + s);
    return o;
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::Q1Saturated: return "Q1_SATURATED";
        case Regime::Interior: return "INTERIOR";
        case Regime::Q2Saturated: return "Q2_SATURATED";
    }
    return "?";
}

SqrtRational jordan_overlap_exact(const CopyConfig& config, int k) {
    if (k < 0) throw DomainError("jordan_overlap: negative block index");
    const int n = config.total();
    if (2 * k > n) return SqrtRational::zero();
    const SqrtRational sixj = wigner_6j(
        HalfInt::from_twice(config.n_a), HalfInt::from_twice(config.n_b),
        HalfInt::from_twice(config.n1()), HalfInt::from_twice(config.n_c),
        HalfInt::from_twice(n - 2 * k), HalfInt::from_twice(config.n2()));
    if (sixj.is_zero()) return sixj;
    const BigRational dims = BigRational((config.n1() + 1) * (config.n2() + 1));
    return SqrtRational::from_signed_radicand(1, dims * sixj.squared());
}

double jordan_overlap(const CopyConfig& config, int k) {
    static Memo<Triple, std::vector<double>> memo;
    if (k < 0) throw DomainError("jordan_overlap: negative block index");
    if (k > config.n_c) return jordan_overlap_exact(config, k).to_double();
    const auto& table = memo.get({config.n_a, config.n_b, config.n_c}, [&] {
        std::vector<double> values;
        for (int j = 0; j <= config.n_c; ++j) values.push_back(jordan_overlap_exact(config, j).to_double());
        return values;
    });
    return table[k];
}

std::vector<double> jordan_overlaps(const CopyConfig& config) {
    std::vector<double> out;
    out.reserve(config.n_c);
    for (int k = 1; k <= config.n_c; ++k) out.push_back(jordan_overlap(config, k));
    return out;
}

std::pair<BigInt, BigInt> dim_weights(const CopyConfig& config) {
    const int d = config.d;
    return {sym_dim(config.n1(), d) * sym_dim(config.n_c, d),
            sym_dim(config.n_a, d) * sym_dim(config.n2(), d)};
}

Priors canonical_priors(const CopyConfig& config, const Priors& priors) {
    return config.swapped ? priors.swapped() : priors;
}

namespace {

BlockData make_block(const CopyConfig& config, int k, double weight_ratio) {
    BlockData b;
    b.k = k;
    b.diagram = {config.total() - k, k};
    b.dim_block = weyl_dim(b.diagram, config.d);
    b.overlap = jordan_overlap(config, k);
    const double o2 = b.overlap * b.overlap;
    b.lower = weight_ratio * o2 / (1.0 + weight_ratio * o2);
    b.upper = weight_ratio / (weight_ratio + o2);
    return b;
}

double weight_ratio(const CopyConfig& config) {
    const auto [w1, w2] = dim_weights(config);
    return to_double(BigRational(w1, w2));
}

}  // namespace

std::vector<BlockData> optimal_q(const CopyConfig& config, const Priors& priors) {
    const Priors p = canonical_priors(config, priors);
    if (p.degenerate()) throw DegeneratePriorError("optimal_q: eta1 must lie strictly inside (0, 1)");
    const double r = weight_ratio(config);

    std::vector<BlockData> blocks;
    blocks.reserve(config.n_c);
    for (int k = 1; k <= config.n_c; ++k) {
        BlockData b = make_block(config, k, r);
        const double o2 = b.overlap * b.overlap;
        if (p.eta1 < b.lower) {
            b.q1 = 1.0;
            b.regime = Regime::Q1Saturated;
        } else if (p.eta1 > b.upper) {
            b.q1 = o2;
            b.regime = Regime::Q2Saturated;
        } else {
            b.q1 = std::clamp(std::sqrt(p.eta2 * r / p.eta1) * b.overlap, o2, 1.0);
            b.regime = Regime::Interior;
        }
        b.q2 = b.q1 > 0.0 ? o2 / b.q1 : 0.0;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

BlockData block_with_q1(const CopyConfig& config, int k, double q1) {
    if (k < 1 || k > config.n_c) throw DomainError("block_with_q1: k outside 1..n_C");
    BlockData b = make_block(config, k, weight_ratio(config));
    const double o2 = b.overlap * b.overlap;
    if (q1 < o2 - 1e-12 || q1 > 1.0 + 1e-12) throw DomainError("block_with_q1: q1 outside [O_k^2, 1]");
    b.q1 = std::clamp(q1, o2, 1.0);
    b.q2 = b.q1 > 0.0 ? o2 / b.q1 : 0.0;
    b.regime = b.q1 == 1.0 ? Regime::Q1Saturated : (b.q1 == o2 ? Regime::Q2Saturated : Regime::Interior);
    return b;
}

double block_expectation(int u, int v, int k, const Overlap& ov) {
    check_block_args(u, v, k);
    if (k > std::min(u, v)) return 0.0;
    const auto& coeffs = expectation_coefficients(u, v, k);
    const double x = ov.cos2();
    const double y = ov.sin2();
    double sum = 0.0;
    double compensation = 0.0;
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
        const double term = coeffs[j] * pow_int(x, j) * pow_int(y, v - j);
        const double t = sum + term;
        compensation += sum >= term ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + compensation;
}

double block_expectation(int u, int v, int k, double beta) {
    return block_expectation(u, v, k, Overlap::from_beta(beta));
}

double block_expectation_lemma(int u, int v, int k, double beta) {
    check_block_args(u, v, k);
    if (k > std::min(u, v)) return 0.0;
    const HalfInt ju = HalfInt::from_twice(u);
    const HalfInt jv = HalfInt::from_twice(v);
    const HalfInt J = HalfInt::from_twice(u + v - 2 * k);
    double sum = 0.0;
    for (int twice_l = -v; twice_l <= v; twice_l += 2) {
        const HalfInt l = HalfInt::from_twice(twice_l);
        const HalfInt M = ju + l;
        if (std::abs(M.twice) > J.twice) continue;
        const double cg_sq = to_double(clebsch_gordan(ju, ju, jv, l, J, M).squared());
        if (cg_sq == 0.0) continue;
        sum += wigner_d_stretched_sq(jv, l, beta) * cg_sq;
    }
    return sum;
}

double block_expectation_hypergeometric(int u, int v, int k, double beta) {
    check_block_args(u, v, k);
    if (k > std::min(u, v)) return 0.0;
    const Overlap ov = Overlap::from_beta(beta);
    if (ov.sin2() == 0.0) return k == 0 ? 1.0 : 0.0;
    const int n = u + v;
    const double prefactor = to_double(BigRational(BigInt(n - 2 * k + 1) * factorial(u) * factorial(v),
                                                   factorial(k) * factorial(n - k + 1)));
    return prefactor * pow_int(ov.sin2(), v) * gauss_2f1_terminating(u - k + 1, k - v, -ov.cos2() / ov.sin2());
}

PspBreakdown psp_with_blocks(const CopyConfig& config, const Priors& priors,
                             std::span<const BlockData> blocks, const Overlap& ov) {
    const Priors p = canonical_priors(config, priors);
    if (p.degenerate()) throw DegeneratePriorError("psp: eta1 must lie strictly inside (0, 1)");
    if (static_cast<int>(blocks.size()) != config.n_c) throw DomainError("psp: need one block per k = 1..n_C");

    PspBreakdown out;
    out.blocks.assign(blocks.begin(), blocks.end());

    double side1 = 0.0;
    double side2_s1 = 0.0;
    double side2_s2 = 0.0;
    out.per_block.push_back({0, 1, 0.0});
    for (const BlockData& b : blocks) {
        const double e1 = block_expectation(config.n1(), config.n_c, b.k, ov);
        const double c1 = p.eta1 * (1.0 - b.q1) * e1;
        side1 += c1;
        out.per_block.push_back({b.k, 1, c1});
    }
    out.per_block.push_back({0, 2, 0.0});
    for (const BlockData& b : blocks) {
        const double e2 = block_expectation(config.n_a, config.n2(), b.k, ov);
        const double c2 = p.eta2 * (1.0 - b.q2) * e2;
        side2_s1 += c2;
        out.per_block.push_back({b.k, 2, c2});
    }
    for (int k = config.n_c + 1; k <= config.side2_max_k(); ++k) {
        const double c2 = p.eta2 * block_expectation(config.n_a, config.n2(), k, ov);
        side2_s2 += c2;
        out.per_block.push_back({k, 2, c2});
    }

    out.total = side1 + side2_s1 + side2_s2;
    const double y = ov.sin2();
    if (y > 0.0) {
        out.coeff_a = side1 / pow_int(y, config.n_c);
        out.coeff_b = side2_s1 / pow_int(y, config.n2());
        out.coeff_c = side2_s2 / pow_int(y, config.n2());
    } else {
        out.coeff_a = out.coeff_b = out.coeff_c = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

PspBreakdown psp(const CopyConfig& config, const Priors& priors, const Overlap& ov) {
    const auto blocks = optimal_q(config, priors);
    return psp_with_blocks(config, priors, blocks, ov);
}

double limit_data_infinite(int m, const Overlap& ov) {
    if (m < 0) throw DomainError("limit_data_infinite: m must be >= 0");
    return 1.0 - pow_int(ov.cos2(), m);
}

ProgramLimit program_limit(int n, const Priors& priors, const Overlap& ov) {
    if (n < 1) throw DomainError("program_limit: n must be >= 1");
    const double c = pow_int(ov.cos2(), n);
    ProgramLimit out;
    out.e = c / (1.0 + c);
    out.f = 1.0 / (1.0 + c);
    if (priors.eta1 < out.e) {
        out.value = priors.eta2 * (1.0 - c);
        out.branch = Regime::Q1Saturated;
    } else if (priors.eta1 > out.f) {
        out.value = priors.eta1 * (1.0 - c);
        out.branch = Regime::Q2Saturated;
    } else {
        out.value = 1.0 - 2.0 * std::sqrt(priors.eta1 * priors.eta2) * pow_int(ov.s(), n);
        out.branch = Regime::Interior;
    }
    return out;
}

double limit_program_infinite(int n, const Priors& priors, const Overlap& ov) {
    return program_limit(n, priors, ov).value;
}

std::vector<double> pascal_extract(int m, int n_large, std::span<const double> beta_grid,
                                   const Priors& priors) {
    if (m < 1 || m > 6) throw DomainError("pascal_extract: m must be in 1..6");
    if (n_large < 100) throw DomainError("pascal_extract: n_large must be >= 100");
    if (static_cast<int>(beta_grid.size()) < m) throw DomainError("pascal_extract: grid smaller than m");

    const CopyConfig config = CopyConfig::make(m, n_large, m, 2);
    const auto blocks = optimal_q(config, priors);
    const auto rows = static_cast<Eigen::Index>(beta_grid.size());
    Eigen::MatrixXd design(rows, m);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Overlap ov = Overlap::from_beta(beta_grid[i]);
        for (int k = 1; k <= m; ++k) design(i, k - 1) = pow_int(ov.cos2(), m - k) * pow_int(ov.sin2(), k);
        rhs(i) = psp_with_blocks(config, priors, blocks, ov).total;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
        throw IllConditionedError("pascal_extract: beta grid does not resolve the basis");
    }
    const Eigen::VectorXd coeffs = svd.solve(rhs);
    return {coeffs.data(), coeffs.data() + coeffs.size()};
}

MonteCarloEstimate asp_monte_carlo(const CopyConfig& config, const Priors& priors,
                                   std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("asp_monte_carlo: samples must be >= 1");
    const auto blocks = optimal_q(config, priors);
    Rng rng(seed);
    const double inv_exponent = 1.0 / static_cast<double>(config.d - 1);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        // Inverse CDF of (d-1)(1-t)^{d-2}: t = 1 - (1-u)^{1/(d-1)}.
        const double u = uniform01(rng);
        const double t = std::clamp(1.0 - std::pow(1.0 - u, inv_exponent), 0.0, 1.0);
        const double value = psp_with_blocks(config, priors, blocks, Overlap::from_s(std::sqrt(t))).total;
        const double delta = value - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (value - mean);
    }
    MonteCarloEstimate out;
    out.mean = mean;
    out.standard_error = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / samples) : 0.0;
    return out;
}

}  // namespace udisc
