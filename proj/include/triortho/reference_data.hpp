// Copyright 2026 The triortho Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Published reference values, embedded so verification needs no files.
// Decimals are kept as printed strings.

#ifndef TRIORTHO_REFERENCE_DATA_HPP
#define TRIORTHO_REFERENCE_DATA_HPP

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "triortho/serialization.hpp"
#include "triortho/tower_calculus.hpp"

namespace triortho {

inline constexpr const char* kReferenceJson = R"json({
  "version": 1,
  "base_codes": [
    {"r": 8, "n": 56, "k": 19, "d": 38},
    {"r": 16, "n": 240, "k": 69, "d": 172},
    {"r": 32, "n": 992, "k": 331, "d": 662}
  ],
  "table3": [
    {"r": 8, "j": 0, "N": 42, "K": 14, "D": 6, "rate": "0.333", "gamma": "0.613"},
    {"r": 8, "j": 1, "N": 422, "K": 26, "D": 22, "rate": "0.062", "gamma": "0.902"},
    {"r": 8, "j": 2, "N": 3416, "K": 168, "D": 104, "rate": "0.049", "gamma": "0.649"},
    {"r": 8, "j": 3, "N": 27851, "K": 821, "D": 459, "rate": "0.030", "gamma": "0.575"},
    {"r": 8, "j": 4, "N": 222850, "K": 6526, "D": 2818, "rate": "0.029", "gamma": "0.444"},
    {"r": 16, "j": 0, "N": 188, "K": 52, "D": 18, "rate": "0.277", "gamma": "0.445"},
    {"r": 16, "j": 1, "N": 3361, "K": 479, "D": 161, "rate": "0.143", "gamma": "0.383"},
    {"r": 16, "j": 2, "N": 53447, "K": 7993, "D": 1767, "rate": "0.150", "gamma": "0.254"},
    {"r": 16, "j": 3, "N": 855756, "K": 127284, "D": 21196, "rate": "0.149", "gamma": "0.191"},
    {"r": 16, "j": 4, "N": 13632492, "K": 2096148, "D": 271852, "rate": "0.154", "gamma": "0.150"},
    {"r": 32, "j": 0, "N": 708, "K": 284, "D": 48, "rate": "0.401", "gamma": "0.236"},
    {"r": 32, "j": 1, "N": 24072, "K": 7672, "D": 968, "rate": "0.319", "gamma": "0.166"},
    {"r": 32, "j": 2, "N": 762355, "K": 253453, "D": 21043, "rate": "0.333", "gamma": "0.111"},
    {"r": 32, "j": 3, "N": 24292183, "K": 8213673, "D": 506711, "rate": "0.338", "gamma": "0.083"},
    {"r": 32, "j": 4, "N": 774113521, "K": 266073871, "D": 12914929, "rate": "0.344", "gamma": "0.065"}
  ]
})json";

struct ReferenceRow {
  std::uint64_t r = 0;
  int j = 0;
  std::int64_t n = 0, k = 0, d = 0;
  std::string rate, gamma;  // as printed
};

struct ReferenceBaseCode {
  std::uint32_t r = 0;
  std::int64_t n = 0, k = 0, d = 0;
};

struct ReferenceData {
  int version = 0;
  std::vector<ReferenceBaseCode> base_codes;
  std::vector<ReferenceRow> table3;
};

inline ReferenceData parse_reference(const std::string& text) {
  ReferenceData out;
  try {
    const Json j = Json::parse(text);
    out.version = j.at("version").get<int>();
    for (const auto& b : j.at("base_codes"))
      out.base_codes.push_back({b.at("r").get<std::uint32_t>(), b.at("n").get<std::int64_t>(),
                                b.at("k").get<std::int64_t>(), b.at("d").get<std::int64_t>()});
    for (const auto& row : j.at("table3"))
      out.table3.push_back({row.at("r").get<std::uint64_t>(), row.at("j").get<int>(), row.at("N").get<std::int64_t>(),
                            row.at("K").get<std::int64_t>(), row.at("D").get<std::int64_t>(),
                            row.at("rate").get<std::string>(), row.at("gamma").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed reference data: ") + e.what());
  }
  if (out.version != 1) throw std::invalid_argument("unsupported reference data version");
  return out;
}

inline ReferenceData embedded_reference() { return parse_reference(kReferenceJson); }

inline ReferenceData load_reference(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read reference file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_reference(ss.str());
}

/// True when `value` is a correct rounding of itself to the printed decimals.
inline bool matches_printed(double value, const std::string& printed) {
  const auto dot = printed.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  const double half_ulp = 0.5 * std::pow(10.0, -digits);
  return std::fabs(value - std::stod(printed)) <= half_ulp + 1e-12;
}

struct CellMismatch {
  std::uint64_t r = 0;
  int j = 0;
  std::string column;
  std::string printed;
  std::string computed;
};

/// Cell-by-cell comparison of recomputed best codes against the reference.
inline std::vector<CellMismatch> verify_table3(const ReferenceData& ref) {
  std::vector<CellMismatch> out;
  for (const ReferenceRow& row : ref.table3) {
    const auto q = optimize_k({row.r, row.j});
    if (!q) {
      out.push_back({row.r, row.j, "N", std::to_string(row.n), "none"});
      continue;
    }
    auto cmp_int = [&](const char* col, std::int64_t printed, const BigInt& got) {
      if (BigInt(printed) != got) out.push_back({row.r, row.j, col, std::to_string(printed), got.str()});
    };
    cmp_int("N", row.n, q->n_phys);
    cmp_int("K", row.k, q->k_log);
    cmp_int("D_min", row.d, q->d_lower);
    char buf[32];
    if (!matches_printed(q->rate, row.rate)) {
      std::snprintf(buf, sizeof buf, "%.5f", q->rate);
      out.push_back({row.r, row.j, "rate", row.rate, buf});
    }
    if (!matches_printed(q->gamma_max, row.gamma)) {
      std::snprintf(buf, sizeof buf, "%.5f", q->gamma_max);
      out.push_back({row.r, row.j, "gamma_max", row.gamma, buf});
    }
  }
  return out;
}

}  // namespace triortho

#endif  // TRIORTHO_REFERENCE_DATA_HPP
