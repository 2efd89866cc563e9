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

#include "cli.hpp"

#include "report_io.hpp"
#include "udisc/discriminator.hpp"
#include "udisc/errors.hpp"
#include "udisc/oracle.hpp"
#include "udisc/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace udisc::cli {

namespace {

using io::Json;

constexpr std::size_t kMaxGridPoints = 1'000'000;

struct RunSpec {
    int n_a = 1;
    int n_b = 1;
    int n_c = 1;
    int d = 2;
    double eta1 = 0.5;
    std::optional<double> s;
    std::optional<double> beta;
    std::string s_grid;
    std::string beta_grid;
    std::string eta_grid;
    std::int64_t samples = 10000;
    std::uint64_t seed = 1;
    std::int64_t shots = 100000;
    int max_copies = 0;
    std::string format = "json";
    int precision = 12;
};

void add_common(CLI::App* sub, RunSpec& spec) {
    sub->add_option("--na", spec.n_a, "copies of phi1 in program register A")->check(CLI::PositiveNumber);
    sub->add_option("--nb", spec.n_b, "copies in the data register B")->check(CLI::PositiveNumber);
    sub->add_option("--nc", spec.n_c, "copies of phi2 in program register C")->check(CLI::PositiveNumber);
    sub->add_option("-d", spec.d, "single-copy Hilbert dimension")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--eta1", spec.eta1, "prior probability of Phi1")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--format", spec.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--precision", spec.precision, "significant digits")->check(CLI::Range(1, 17));
}

void add_overlap(CLI::App* sub, RunSpec& spec) {
    auto* s = sub->add_option("--s", spec.s, "|<phi1|phi2>| in [0, 1]")->check(CLI::Range(0.0, 1.0));
    auto* b = sub->add_option("--beta", spec.beta, "beta in [0, pi], s = cos(beta/2)")
                  ->check(CLI::Range(0.0, std::numbers::pi));
    s->excludes(b);
    b->excludes(s);
}

Overlap overlap_of(const RunSpec& spec) {
    if (spec.s) return Overlap::from_s(*spec.s);
    if (spec.beta) return Overlap::from_beta(*spec.beta);
    throw DomainError("exactly one of --s or --beta is required");
}

CopyConfig config_of(const RunSpec& spec, std::ostream& err) {
    const CopyConfig c = CopyConfig::make(spec.n_a, spec.n_b, spec.n_c, spec.d);
    if (c.swapped) {
        err << "notice: n_A < n_C; registers A and C swapped and priors exchanged "
               "(coefficients refer to the swapped labelling)\n";
    }
    return c;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int run_psp(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const CopyConfig config = config_of(spec, err);
    const Priors priors = Priors::from_eta1(spec.eta1);
    const Overlap ov = overlap_of(spec);
    const PspBreakdown result = psp(config, priors, ov);
    const int p = spec.precision;
    if (spec.format == "json") {
        Json j{{"command", "psp"},
               {"config", io::to_json(config)},
               {"priors", io::to_json(priors, p)},
               {"overlap", io::to_json(ov, p)}};
        j.update(io::to_json(result, p));
        emit_json(out, j);
        return kOk;
    }
    out << "k,side,diagram,dim_block,overlap,q1,q2,regime,contribution,a,b,c,total\n";
    for (const auto& c : result.per_block) {
        std::string diagram = std::to_string(config.total() - c.k) + ";" + std::to_string(c.k);
        std::string dim_block = to_string(weyl_dim({config.total() - c.k, c.k}, config.d));
        std::string o = "", q1 = "", q2 = "", regime = "";
        if (c.k >= 1 && c.k <= config.n_c) {
            const BlockData& b = result.blocks[c.k - 1];
            o = io::format_number(b.overlap, p);
            q1 = io::format_number(b.q1, p);
            q2 = io::format_number(b.q2, p);
            regime = std::string(to_string(b.regime));
        }
        out << c.k << ',' << c.side << ',' << diagram << ',' << dim_block << ',' << o << ',' << q1 << ',' << q2
            << ',' << regime << ',' << io::format_number(c.contribution, p) << ','
            << io::format_number(result.coeff_a, p) << ',' << io::format_number(result.coeff_b, p) << ','
            << io::format_number(result.coeff_c, p) << ',' << io::format_number(result.total, p) << '\n';
    }
    return kOk;
}

int run_sweep(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.s_grid.empty() == spec.beta_grid.empty()) {
        throw DomainError("exactly one of --s-grid or --beta-grid is required");
    }
    const bool by_s = !spec.s_grid.empty();
    const auto points = parse_grid(by_s ? spec.s_grid : spec.beta_grid);
    const auto etas = spec.eta_grid.empty() ? std::vector<double>{spec.eta1} : parse_grid(spec.eta_grid);
    if (points.size() * etas.size() > kMaxGridPoints) {
        throw ResourceError("sweep grid exceeds " + std::to_string(kMaxGridPoints) + " points");
    }
    std::vector<Overlap> overlaps;
    for (double v : points) overlaps.push_back(by_s ? Overlap::from_s(v) : Overlap::from_beta(v));
    std::vector<Priors> priors;
    for (double e : etas) priors.push_back(Priors::from_eta1(e));

    const CopyConfig config = config_of(spec, err);
    std::vector<std::vector<BlockData>> blocks;
    for (const auto& pr : priors) blocks.push_back(optimal_q(config, pr));

    std::vector<io::SweepRow> rows;
    rows.reserve(points.size() * etas.size());
    for (const auto& ov : overlaps) {
        for (std::size_t e = 0; e < priors.size(); ++e) {
            const PspBreakdown r = psp_with_blocks(config, priors[e], blocks[e], ov);
            rows.push_back({ov.s(), ov.beta(), priors[e].eta1, r.coeff_a, r.coeff_b, r.coeff_c, r.total});
        }
    }

    const int p = spec.precision;
    if (spec.format == "csv") {
        out << io::kSweepCsvHeader << '\n';
        for (const auto& r : rows) out << io::to_csv(r, p) << '\n';
        return kOk;
    }
    Json monotone = Json::array();
    for (std::size_t e = 0; e < priors.size(); ++e) {
        std::vector<std::pair<double, double>> curve;
        for (std::size_t i = 0; i < overlaps.size(); ++i) curve.emplace_back(rows[i * priors.size() + e].s, rows[i * priors.size() + e].total);
        std::sort(curve.begin(), curve.end());
        bool ok = true;
        for (std::size_t i = 1; i < curve.size(); ++i) ok = ok && curve[i].second <= curve[i - 1].second + 1e-12;
        monotone.push_back(Json{{"eta1", io::number(priors[e].eta1, p)}, {"nonincreasing_in_s", ok}});
    }
    Json jrows = Json::array();
    for (const auto& r : rows) jrows.push_back(io::to_json(r, p));
    emit_json(out, Json{{"command", "sweep"}, {"config", io::to_json(config)}, {"rows", jrows}, {"monotonicity", monotone}});
    return kOk;
}

int run_limits(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const CopyConfig config = config_of(spec, err);
    const Priors priors = Priors::from_eta1(spec.eta1);
    const Overlap ov = overlap_of(spec);
    const double total = psp(config, priors, ov).total;
    const double data_limit = limit_data_infinite(config.n_c, ov);
    const ProgramLimit prog = program_limit(config.n_b, canonical_priors(config, priors), ov);
    const int p = spec.precision;
    if (spec.format == "csv") {
        out << "psp_total,data_limit_m,data_limit,program_limit_n,program_limit,e,f,branch\n";
        out << io::format_number(total, p) << ',' << config.n_c << ',' << io::format_number(data_limit, p) << ','
            << config.n_b << ',' << io::format_number(prog.value, p) << ',' << io::format_number(prog.e, p) << ','
            << io::format_number(prog.f, p) << ',' << to_string(prog.branch) << '\n';
        return kOk;
    }
    emit_json(out, Json{{"command", "limits"},
                        {"config", io::to_json(config)},
                        {"priors", io::to_json(priors, p)},
                        {"overlap", io::to_json(ov, p)},
                        {"psp_total", io::number(total, p)},
                        {"data_register_limit", Json{{"m", config.n_c}, {"value", io::number(data_limit, p)}}},
                        {"program_register_limit",
                         Json{{"n", config.n_b},
                              {"value", io::number(prog.value, p)},
                              {"e", io::number(prog.e, p)},
                              {"f", io::number(prog.f, p)},
                              {"branch", std::string(to_string(prog.branch))}}}});
    return kOk;
}

int run_asp(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const CopyConfig config = config_of(spec, err);
    const Priors priors = Priors::from_eta1(spec.eta1);
    const MonteCarloEstimate est = asp_monte_carlo(config, priors, spec.samples, spec.seed);
    const int p = spec.precision;
    if (spec.format == "csv") {
        out << "samples,seed,mean,stderr\n"
            << spec.samples << ',' << spec.seed << ',' << io::format_number(est.mean, p) << ','
            << io::format_number(est.standard_error, p) << '\n';
        return kOk;
    }
    emit_json(out, Json{{"command", "asp"},
                        {"config", io::to_json(config)},
                        {"priors", io::to_json(priors, p)},
                        {"samples", spec.samples},
                        {"seed", spec.seed},
                        {"mean", io::number(est.mean, p)},
                        {"stderr", io::number(est.standard_error, p)}});
    return kOk;
}

int run_verify(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const CopyConfig config = config_of(spec, err);
    const int cap_copies = std::bit_width(max_operator_dim()) - 1;
    const int max_copies = spec.max_copies > 0 ? std::min(spec.max_copies, cap_copies) : cap_copies;
    if (config.total() > max_copies) {
        throw ResourceError("verify: N = " + std::to_string(config.total()) + " exceeds the limit of " +
                            std::to_string(max_copies) + " copies");
    }
    VerifyOptions options;
    options.priors = Priors::from_eta1(spec.eta1);
    options.seed = spec.seed;
    options.shots = spec.shots;
    const VerificationReport report = run_verification(config, options);
    const int p = spec.precision;
    if (spec.format == "csv") {
        out << "name,group,status,residual,tolerance,detail\n";
        for (const auto& c : report.checks) {
            out << c.name << ',' << c.group << ',' << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << ','
                << io::format_number(c.residual, p) << ',' << io::format_number(c.tolerance, p) << ",\""
                << c.detail << "\"\n";
        }
    } else {
        Json j{{"command", "verify"}};
        j.update(io::to_json(report, p));
        emit_json(out, j);
    }
    return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> values;
    auto to_double = [&](const std::string& field) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(field, &used);
        } catch (const std::exception&) {
            throw DomainError("grid: cannot parse '" + field + "'");
        }
        if (used != field.size()) throw DomainError("grid: cannot parse '" + field + "'");
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::stringstream ss(text);
        std::string lo, hi, count;
        if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, count) ||
            count.find(':') != std::string::npos) {
            throw DomainError("grid: expected lo:hi:count");
        }
        const double a = to_double(lo);
        const double b = to_double(hi);
        const double n = to_double(count);
        if (n < 1 || n != std::floor(n)) throw DomainError("grid: count must be a positive integer");
        if (n > static_cast<double>(kMaxGridPoints)) throw ResourceError("grid: too many points");
        const auto m = static_cast<int>(n);
        for (int i = 0; i < m; ++i) values.push_back(m == 1 ? a : (i == m - 1 ? b : a + (b - a) * i / (m - 1)));
        return values;
    }
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) values.push_back(to_double(field));
    if (values.empty()) throw DomainError("grid: empty");
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Success probabilities of universal programmable unambiguous discriminators", "udisc"};
    app.require_subcommand(1);
    RunSpec spec;

    auto* psp_cmd = app.add_subcommand("psp", "pure success probability with per-block breakdown");
    add_common(psp_cmd, spec);
    add_overlap(psp_cmd, spec);

    auto* sweep_cmd = app.add_subcommand("sweep", "PSP table over an overlap x prior grid");
    add_common(sweep_cmd, spec);
    auto* sg = sweep_cmd->add_option("--s-grid", spec.s_grid, "overlap grid: lo:hi:count or v1,v2,...");
    auto* bg = sweep_cmd->add_option("--beta-grid", spec.beta_grid, "beta grid: lo:hi:count or v1,v2,...");
    sg->excludes(bg);
    bg->excludes(sg);
    sweep_cmd->add_option("--eta-grid", spec.eta_grid, "eta1 grid (default: --eta1)");

    auto* limits_cmd = app.add_subcommand("limits", "PSP next to its data- and program-register limits");
    add_common(limits_cmd, spec);
    add_overlap(limits_cmd, spec);

    auto* asp_cmd = app.add_subcommand("asp", "Monte-Carlo average success probability");
    add_common(asp_cmd, spec);
    asp_cmd->add_option("--samples", spec.samples, "overlap samples")->check(CLI::PositiveNumber);
    asp_cmd->add_option("--seed", spec.seed, "RNG seed");

    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force oracle suite");
    add_common(verify_cmd, spec);
    verify_cmd->add_option("--seed", spec.seed, "RNG seed");
    verify_cmd->add_option("--shots", spec.shots, "Born-rule shots")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-copies", spec.max_copies, "refuse configs with more copies than this")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (psp_cmd->parsed()) return run_psp(spec, out, err);
        if (sweep_cmd->parsed()) return run_sweep(spec, out, err);
        if (limits_cmd->parsed()) return run_limits(spec, out, err);
        if (asp_cmd->parsed()) return run_asp(spec, out, err);
        if (verify_cmd->parsed()) return run_verify(spec, out, err);
    } catch (const DegeneratePriorError& e) {
        err << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const DegenerateBlockError& e) {
        err << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace udisc::cli
