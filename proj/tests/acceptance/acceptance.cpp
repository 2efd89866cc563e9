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

// Acceptance harness: one PASS/FAIL line per criterion, detail lines indented.
// Usage: acceptance [--criterion N]   (all ten criteria when omitted)

#include "udisc/discriminator.hpp"
#include "udisc/oracle.hpp"

#include <CLI11.hpp>
#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace udisc;

constexpr double kPi = std::numbers::pi;
using Shape = std::array<int, 3>;

const std::vector<Shape> kOracleConfigs{{1, 1, 1}, {1, 2, 1}, {2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {3, 2, 3}};

struct Verdict {
    bool passed = true;
    std::vector<std::string> details;

    void note(const char* fmt, auto... args) {
        char buf[512];
        std::snprintf(buf, sizeof buf, fmt, args...);
        details.emplace_back(buf);
    }
    void require(bool ok, const char* fmt, auto... args) {
        if (!ok) passed = false;
        note(fmt, args...);
    }
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CopyConfig qubits(const Shape& s) { return CopyConfig::make(s[0], s[1], s[2], 2); }

// 1. Block expectation: closed polynomial form against the CG/Wigner-d sum.
Verdict criterion1() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const auto betas = linspace(0.0, kPi, 25);
    for (int u = 0; u <= 16; ++u)
        for (int w = 0; u + w <= 16; ++w)
            for (int k = 0; k <= w; ++k)
                for (double beta : betas) {
                    worst = std::max(worst, std::abs(block_expectation(u, w, k, beta) - block_expectation_lemma(u, w, k, beta)));
                }
    const double elapsed = seconds_since(t0);
    v.require(worst <= 1e-10, "max |closed - lemma| = %.3e (tol 1e-10)", worst);
    v.require(elapsed < 10.0, "runtime %.2f s (limit 10 s)", elapsed);
    return v;
}

// 2. Analytic PSP against the explicit POVM on the 2^N space.
Verdict criterion2() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto betas = linspace(0.0, kPi, 15);
    const auto etas = linspace(0.1, 0.9, 9);
    for (const auto& s : kOracleConfigs) {
        const auto c = qubits(s);
        double worst = 0.0;
        for (double eta : etas) {
            const Priors pr = Priors::from_eta1(eta);
            const auto blocks = optimal_q(c, pr);
            const Povm povm = build_povm(c, pr, blocks);
            for (double beta : betas) {
                const auto pair = euler_pair(beta, 0.61, 2.17);
                const double direct = psp_direct(povm, build_input_state(pair.phi1, pair.phi2, c, 1),
                                                 build_input_state(pair.phi1, pair.phi2, c, 2), pr);
                worst = std::max(worst, std::abs(direct - psp_with_blocks(c, pr, blocks, Overlap::from_beta(beta)).total));
            }
        }
        v.require(worst <= 1e-8, "(%d,%d,%d): max |psp - psp_direct| = %.3e (tol 1e-8)", s[0], s[1], s[2], worst);
    }
    const double elapsed = seconds_since(t0);
    v.require(elapsed < 120.0, "runtime %.2f s (limit 120 s)", elapsed);
    return v;
}

// 3. POVM positivity and unambiguity for random Euler pairs.
Verdict criterion3() {
    Verdict v;
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi), beta(0.0, kPi);
    for (const auto& s : kOracleConfigs) {
        const auto c = qubits(s);
        double floor = 0.0, leak = 0.0;
        for (double eta : {0.2, 0.5, 0.8}) {
            const Priors pr = Priors::from_eta1(eta);
            const Povm povm = build_povm(c, pr, optimal_q(c, pr));
            for (const auto* op : {&povm.pi1, &povm.pi2, &povm.pi0}) {
                floor = std::min(floor, Eigen::SelfAdjointEigenSolver<DenseOperator>(*op).eigenvalues().minCoeff());
            }
            for (int i = 0; i < 50; ++i) {
                const auto pair = euler_pair(beta(rng), angle(rng), angle(rng));
                const auto phi1 = build_input_state(pair.phi1, pair.phi2, c, 1);
                const auto phi2 = build_input_state(pair.phi1, pair.phi2, c, 2);
                leak = std::max({leak, std::abs(expectation(povm.pi1, phi2)), std::abs(expectation(povm.pi2, phi1))});
            }
        }
        v.require(floor >= -1e-10, "(%d,%d,%d): eigenvalue floor %.3e (>= -1e-10)", s[0], s[1], s[2], floor);
        v.require(leak <= 1e-12, "(%d,%d,%d): max wrong-outcome probability %.3e (<= 1e-12)", s[0], s[1], s[2], leak);
    }
    return v;
}

// 4. Jordan overlaps: 6j recoupling against explicit Gram overlaps, plus the asymptote.
Verdict criterion4() {
    Verdict v;
    double worst = 0.0;
    int configs = 0;
    for (int na = 1; na <= 10; ++na)
        for (int nb = 1; nb <= 10; ++nb)
            for (int nc = 1; nc <= na; ++nc) {
                if (na + nb + nc > 12) continue;
                const auto c = qubits({na, nb, nc});
                const auto gram = gram_overlaps(c);
                const auto exact = jordan_overlaps(c);
                for (std::size_t k = 0; k < gram.size(); ++k) worst = std::max(worst, std::abs(gram[k] - exact[k]));
                ++configs;
            }
    v.require(worst <= 1e-10, "dual path over %d configs with N <= 12: max |6j - Gram| = %.3e (tol 1e-10)", configs, worst);
    const bool exact_half = jordan_overlap_exact(qubits({1, 1, 1}), 1).squared() == BigRational(1, 4);
    v.require(exact_half, "O_1(1,1,1)^2 == 1/4 in exact arithmetic: %s", exact_half ? "yes" : "no");
    const auto c = qubits({64, 2, 64});
    for (int k = 1; k <= 4; ++k) {
        const double approx = std::pow(1.0 - k / 64.0, 2);
        const double rel = std::abs(jordan_overlap(c, k) - approx) / approx;
        v.require(rel <= 2e-3, "m=64 n=2 k=%d: O_k = %.6f, (1-k/m)^n = %.6f, rel err %.3e (tol 2e-3)", k,
                  jordan_overlap(c, k), approx, rel);
    }
    return v;
}

// 5. Pascal triangle from the large-data fit.
Verdict criterion5() {
    Verdict v;
    const auto betas = linspace(kPi / 40, kPi, 40);
    for (int m = 1; m <= 4; ++m) {
        const auto a = pascal_extract(m, 200, betas);
        std::string got;
        double worst = 0.0;
        for (int k = 1; k <= m; ++k) {
            worst = std::max(worst, std::abs(a[k - 1] - to_double(binomial(m, k))));
            char buf[32];
            std::snprintf(buf, sizeof buf, "%s%.5f", k > 1 ? ", " : "", a[k - 1]);
            got += buf;
        }
        v.require(worst <= 1e-2, "m=%d: a = (%s), max |a - C(m,k)| = %.3e (tol 1e-2)", m, got.c_str(), worst);
    }
    return v;
}

// 6. Data-register limit 1 - s^{2m}.
Verdict criterion6() {
    Verdict v;
    const auto ov = Overlap::from_s(0.5);
    const Priors pr = Priors::from_eta1(0.5);
    for (int m = 1; m <= 3; ++m) {
        std::array<double, 3> gap{};
        const std::array<int, 3> ns{32, 64, 128};
        for (int i = 0; i < 3; ++i) {
            gap[i] = std::abs(psp(qubits({m, ns[i], m}), pr, ov).total - limit_data_infinite(m, ov));
        }
        v.require(gap[1] < gap[0] && gap[2] < gap[1], "m=%d: gaps %.4e, %.4e, %.4e at n = 32, 64, 128 (decreasing)", m,
                  gap[0], gap[1], gap[2]);
        v.require(gap[2] < 1e-3, "m=%d: gap at n=128 = %.4e (< 1e-3)", m, gap[2]);
    }
    return v;
}

// 7. Program-register limit and branch continuity.
Verdict criterion7() {
    Verdict v;
    const auto ov = Overlap::from_s(0.5);
    for (int n = 1; n <= 2; ++n)
        for (double eta : {0.2, 0.5, 0.9}) {
            const Priors pr = Priors::from_eta1(eta);
            std::array<double, 3> gap{};
            const std::array<int, 3> ms{16, 32, 64};
            for (int i = 0; i < 3; ++i) {
                gap[i] = std::abs(psp(qubits({ms[i], n, ms[i]}), pr, ov).total - limit_program_infinite(n, pr, ov));
            }
            v.require(gap[1] < gap[0] && gap[2] < gap[1], "n=%d eta1=%.1f: gaps %.4e, %.4e, %.4e at m = 16, 32, 64", n,
                      eta, gap[0], gap[1], gap[2]);
        }
    double jump = 0.0;
    for (int n = 1; n <= 2; ++n)
        for (double s : {0.2, 0.5, 0.8}) {
            const auto o = Overlap::from_s(s);
            const auto p = program_limit(n, Priors::from_eta1(0.5), o);
            for (double edge : {p.e, p.f}) {
                const double below = limit_program_infinite(n, Priors::from_eta1(std::nextafter(edge, 0.0)), o);
                const double above = limit_program_infinite(n, Priors::from_eta1(std::nextafter(edge, 1.0)), o);
                jump = std::max(jump, std::abs(above - below));
            }
        }
    v.require(jump <= 1e-10, "max jump across e, f = %.3e (tol 1e-10)", jump);
    return v;
}

// 8. Dimension independence when n_A = n_C.
Verdict criterion8() {
    Verdict v;
    int compared = 0, mismatches = 0;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (double beta : linspace(0.0, kPi, 13))
                for (double eta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                    const auto ov = Overlap::from_beta(beta);
                    const Priors pr = Priors::from_eta1(eta);
                    const double ref = psp(CopyConfig::make(m, n, m, 2), pr, ov).total;
                    for (int d : {3, 5, 7}) {
                        ++compared;
                        if (psp(CopyConfig::make(m, n, m, d), pr, ov).total != ref) ++mismatches;
                    }
                }
    v.require(mismatches == 0, "%d of %d comparisons differ (exact equality required)", mismatches, compared);
    return v;
}

// 9. Regime-rule parameters against a brute-force scan of the averaged success probability.
Verdict criterion9() {
    Verdict v;
    for (const Shape& s : {Shape{1, 1, 1}, Shape{2, 1, 2}, Shape{2, 1, 1}})
        for (double eta : {0.2, 0.5, 0.8}) {
            const auto c = qubits(s);
            const Priors pr = Priors::from_eta1(eta);
            const auto scan = asp_q_scan(c, pr, 200);
            const auto blocks = optimal_q(c, pr);
            double worst = 0.0;
            for (int k = 1; k <= c.n_c; ++k) {
                const double o2 = scan.overlaps[k - 1] * scan.overlaps[k - 1];
                worst = std::max(worst, std::abs(scan.best_q1[k - 1] - blocks[k - 1].q1) / ((1.0 - o2) / 200));
            }
            v.require(worst <= 1.0 + 1e-9, "(%d,%d,%d) eta1=%.1f: |argmax - q1_opt| = %.3f grid steps (<= 1)", s[0], s[1],
                      s[2], eta, worst);
        }
    return v;
}

// 10. Born-rule sampling.
Verdict criterion10() {
    Verdict v;
    constexpr std::int64_t kShots = 100000;
    std::uint64_t seed = 100;
    for (const auto& s : kOracleConfigs) {
        const auto c = qubits(s);
        const Priors pr = Priors::from_eta1(0.5);
        const Povm povm = build_povm(c, pr, optimal_q(c, pr));
        double zmax = 0.0;
        std::int64_t forbidden = 0;
        for (double beta : {0.9, 1.8, 2.7}) {
            const auto pair = euler_pair(beta, 1.1, 4.4);
            for (int which : {1, 2}) {
                const auto state = build_input_state(pair.phi1, pair.phi2, c, which);
                const auto p = outcome_probabilities(povm, state);
                const auto counts = born_sample(povm, state, kShots, ++seed);
                const std::array<double, 3> expected{p.p1, p.p2, p.p0};
                const std::array<double, 3> observed{static_cast<double>(counts.n1), static_cast<double>(counts.n2),
                                                     static_cast<double>(counts.n0)};
                for (int i = 0; i < 3; ++i) {
                    const double q = expected[i] < 1e-14 ? 0.0 : expected[i];
                    const double sigma = std::sqrt(q * (1.0 - q) / kShots);
                    const double diff = std::abs(observed[i] / kShots - q);
                    if (sigma > 0.0) zmax = std::max(zmax, diff / sigma);
                    else if (diff > 0.0) zmax = HUGE_VAL;
                }
                if (which == 2) forbidden += counts.n1;
            }
        }
        v.require(zmax <= 4.0, "(%d,%d,%d): max |z| = %.3f over outcomes (<= 4)", s[0], s[1], s[2], zmax);
        v.require(forbidden == 0, "(%d,%d,%d): Pi1 counts on Phi2 inputs = %lld", s[0], s[1], s[2],
                  static_cast<long long>(forbidden));
    }
    return v;
}

const std::array<std::pair<const char*, std::function<Verdict()>>, 10> kCriteria{{
    {"lemma equivalence", criterion1},
    {"oracle PSP equivalence", criterion2},
    {"POVM validity and unambiguity", criterion3},
    {"Jordan overlap dual path and asymptote", criterion4},
    {"Pascal triangle reproduction", criterion5},
    {"data-register limit", criterion6},
    {"program-register limit", criterion7},
    {"dimension independence", criterion8},
    {"optimal parameter scan", criterion9},
    {"Born sampling", criterion10},
}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    bool all_passed = true;
    for (int i = 1; i <= 10; ++i) {
        if (only != 0 && i != only) continue;
        const auto& [name, fn] = kCriteria[i - 1];
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.passed = false;
            v.note("exception: %s", e.what());
        }
        for (const auto& line : v.details) std::printf("    %s\n", line.c_str());
        std::printf("%s criterion %d: %s (%.2f s)\n", v.passed ? "PASS" : "FAIL", i, name, seconds_since(t0));
        std::fflush(stdout);
        all_passed = all_passed && v.passed;
    }
    return all_passed ? 0 : 1;
}
