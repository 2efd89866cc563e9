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

#include "report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace udisc::io {

namespace {

double num_or_nan(const Json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

Regime regime_from_string(const std::string& s) {
    if (s == "Q1_SATURATED") return Regime::Q1Saturated;
    if (s == "Q2_SATURATED") return Regime::Q2Saturated;
    return Regime::Interior;
}

}  // namespace

std::string format_number(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

Json number(double value, int precision) {
    if (!std::isfinite(value)) return nullptr;
    return std::strtod(format_number(value, precision).c_str(), nullptr);
}

Json to_json(const CopyConfig& c) {
    return Json{{"n_a", c.n_a}, {"n_b", c.n_b}, {"n_c", c.n_c}, {"d", c.d}, {"swapped", c.swapped}};
}

Json to_json(const Priors& p, int precision) {
    return Json{{"eta1", number(p.eta1, precision)}, {"eta2", number(p.eta2, precision)}};
}

Json to_json(const Overlap& ov, int precision) {
    return Json{{"s", number(ov.s(), precision)}, {"beta", number(ov.beta(), precision)}};
}

Json to_json(const BlockData& b, int precision) {
    return Json{{"k", b.k},
                {"diagram", Json::array({b.diagram.row1, b.diagram.row2})},
                {"dim_block", to_string(b.dim_block)},
                {"overlap", number(b.overlap, precision)},
                {"lower", number(b.lower, precision)},
                {"upper", number(b.upper, precision)},
                {"q1", number(b.q1, precision)},
                {"q2", number(b.q2, precision)},
                {"regime", std::string(to_string(b.regime))}};
}

Json to_json(const PspBreakdown& psp, int precision) {
    Json blocks = Json::array();
    for (const auto& b : psp.blocks) blocks.push_back(to_json(b, precision));
    Json per_block = Json::array();
    for (const auto& c : psp.per_block) {
        per_block.push_back(Json{{"k", c.k}, {"side", c.side}, {"contribution", number(c.contribution, precision)}});
    }
    return Json{{"coefficients",
                 Json{{"a", number(psp.coeff_a, precision)},
                      {"b", number(psp.coeff_b, precision)},
                      {"c", number(psp.coeff_c, precision)}}},
                {"blocks", blocks},
                {"per_block", per_block},
                {"total", number(psp.total, precision)}};
}

Json to_json(const CheckResult& c, int precision) {
    return Json{{"name", c.name},
                {"group", c.group},
                {"passed", c.passed},
                {"skipped", c.skipped},
                {"residual", number(c.residual, precision)},
                {"tolerance", number(c.tolerance, precision)},
                {"detail", c.detail}};
}

Json to_json(const VerificationReport& r, int precision) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c, precision));
    return Json{{"config", to_json(r.config)}, {"passed", r.passed()}, {"checks", checks}};
}

CopyConfig config_from_json(const Json& j) {
    CopyConfig c;
    c.n_a = j.at("n_a").get<int>();
    c.n_b = j.at("n_b").get<int>();
    c.n_c = j.at("n_c").get<int>();
    c.d = j.at("d").get<int>();
    c.swapped = j.at("swapped").get<bool>();
    return c;
}

BlockData block_from_json(const Json& j) {
    BlockData b;
    b.k = j.at("k").get<int>();
    b.diagram = {j.at("diagram").at(0).get<int>(), j.at("diagram").at(1).get<int>()};
    b.dim_block = BigInt(j.at("dim_block").get<std::string>());
    b.overlap = num_or_nan(j.at("overlap"));
    b.lower = num_or_nan(j.at("lower"));
    b.upper = num_or_nan(j.at("upper"));
    b.q1 = num_or_nan(j.at("q1"));
    b.q2 = num_or_nan(j.at("q2"));
    b.regime = regime_from_string(j.at("regime").get<std::string>());
    return b;
}

PspBreakdown psp_from_json(const Json& j) {
    PspBreakdown p;
    const Json& coeff = j.at("coefficients");
    p.coeff_a = num_or_nan(coeff.at("a"));
    p.coeff_b = num_or_nan(coeff.at("b"));
    p.coeff_c = num_or_nan(coeff.at("c"));
    for (const auto& b : j.at("blocks")) p.blocks.push_back(block_from_json(b));
    for (const auto& c : j.at("per_block")) {
        p.per_block.push_back({c.at("k").get<int>(), c.at("side").get<int>(), num_or_nan(c.at("contribution"))});
    }
    p.total = num_or_nan(j.at("total"));
    return p;
}

CheckResult check_from_json(const Json& j) {
    CheckResult c;
    c.name = j.at("name").get<std::string>();
    c.group = j.at("group").get<std::string>();
    c.passed = j.at("passed").get<bool>();
    c.skipped = j.at("skipped").get<bool>();
    c.residual = num_or_nan(j.at("residual"));
    c.tolerance = num_or_nan(j.at("tolerance"));
    c.detail = j.at("detail").get<std::string>();
    return c;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.config = config_from_json(j.at("config"));
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    return r;
}

Json to_json(const SweepRow& row, int precision) {
    return Json{{"s", number(row.s, precision)},       {"beta", number(row.beta, precision)},
                {"eta1", number(row.eta1, precision)}, {"a", number(row.a, precision)},
                {"b", number(row.b, precision)},       {"c", number(row.c, precision)},
                {"total", number(row.total, precision)}};
}

SweepRow sweep_row_from_json(const Json& j) {
    return {num_or_nan(j.at("s")), num_or_nan(j.at("beta")), num_or_nan(j.at("eta1")), num_or_nan(j.at("a")),
            num_or_nan(j.at("b")), num_or_nan(j.at("c")),    num_or_nan(j.at("total"))};
}

std::string to_csv(const SweepRow& row, int precision) {
    std::string out;
    for (double v : {row.s, row.beta, row.eta1, row.a, row.b, row.c, row.total}) {
        if (!out.empty()) out += ',';
        out += format_number(v, precision);
    }
    return out;
}

}  // namespace udisc::io
