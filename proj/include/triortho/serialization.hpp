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

// JSON, CSV and binary encodings.
//
// Field elements are fixed-width lowercase hex of the coefficient bits
// (ceil(m/4) digits). Matrices in CSV are one row per line, elements
// separated by commas, lines ended by CRLF (RFC 4180).
//
// Binary generator format, all integers little-endian:
//
//   offset 0   4 bytes  magic "TOGM"
//   offset 4   u8       version (1)
//   offset 5   u32      q (field order)
//   offset 9   u32      n (columns)
//   offset 13  u32      k (rows)
//   offset 17  u16 * k*n  elements, row-major, coefficient bits

#ifndef TRIORTHO_SERIALIZATION_HPP
#define TRIORTHO_SERIALIZATION_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "triortho/classical_codes.hpp"
#include "triortho/css_builder.hpp"
#include "triortho/function_field.hpp"
#include "triortho/state_reduction.hpp"
#include "triortho/tower_calculus.hpp"

namespace triortho {

using Json = nlohmann::ordered_json;

inline Json field_json(const Field& f) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", f.modulus());
  return Json{{"m", f.degree()}, {"modulus", buf}};
}

inline Json place_json(const Field& f, const Place& p) {
  if (p.at_infinity) return Json{{"inf", true}};
  return Json{{"alpha", to_hex(f, p.alpha)}};
}

/// [{"place": {...}, "coeff": c}, ...] in place order.
inline Json divisor_json(const Field& f, const Divisor& d) {
  Json out = Json::array();
  for (const auto& [p, c] : d.terms()) out.push_back(Json{{"place", place_json(f, p)}, {"coeff", c}});
  return out;
}

inline Json hex_vector_json(const Field& f, std::span<const Gf> v) {
  Json out = Json::array();
  for (Gf x : v) out.push_back(to_hex(f, x));
  return out;
}

inline Json hex_matrix_json(const Field& f, const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(hex_vector_json(f, m.row(i)));
  return out;
}

/// Integers as JSON numbers when they fit in int64, else decimal strings.
inline Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

/// {"exact": "p/q", "value": double}
inline Json rational_json(const Rational& v) {
  const std::string exact = numerator(v).str() + "/" + denominator(v).str();
  return Json{{"exact", exact}, {"value", static_cast<double>(v)}};
}

/// Rounds to `digits` decimals for stable textual output.
inline double rounded(double v, int digits) {
  const double s = std::pow(10.0, digits);
  return std::round(v * s) / s;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

inline std::string matrix_csv(const Field& f, const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (Gf x : m.row(i)) row.push_back(to_hex(f, x));
    out += csv_row(row);
  }
  return out;
}

inline Matrix matrix_from_csv(const Field& f, const std::string& text) {
  Matrix m;
  std::istringstream in(text);
  std::string line;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Gf> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(from_hex(f, cell));
    if (m.rows() == 0) {
      cols = row.size();
      m = Matrix(0, cols);
    }
    if (row.size() != cols) throw std::invalid_argument("ragged CSV matrix");
    m.append_row(row);
  }
  return m;
}

inline constexpr char kBinaryMagic[4] = {'T', 'O', 'G', 'M'};
inline constexpr std::uint8_t kBinaryVersion = 1;

inline std::string matrix_binary(const Field& f, const Matrix& m) {
  std::string out(kBinaryMagic, 4);
  out += static_cast<char>(kBinaryVersion);
  auto put32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFFU);
  };
  put32(f.order());
  put32(static_cast<std::uint32_t>(m.cols()));
  put32(static_cast<std::uint32_t>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (Gf x : m.row(i)) {
      out += static_cast<char>(x.bits & 0xFFU);
      out += static_cast<char>((x.bits >> 8) & 0xFFU);
    }
  return out;
}

struct BinaryMatrix {
  std::uint32_t q = 0;
  Matrix m;
};

inline BinaryMatrix matrix_from_binary(const std::string& bytes) {
  if (bytes.size() < 17 || bytes.compare(0, 4, std::string(kBinaryMagic, 4)) != 0)
    throw std::invalid_argument("not a TOGM matrix file");
  if (static_cast<std::uint8_t>(bytes[4]) != kBinaryVersion) throw std::invalid_argument("unsupported TOGM version");
  auto get32 = [&](std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{static_cast<std::uint8_t>(bytes[off + i])} << (8 * i);
    return v;
  };
  BinaryMatrix b;
  b.q = get32(5);
  const std::uint32_t n = get32(9), k = get32(13);
  if (bytes.size() != 17 + 2ULL * n * k) throw std::invalid_argument("TOGM payload size mismatch");
  b.m = Matrix(k, n);
  std::size_t off = 17;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < n; ++j, off += 2) {
      const std::uint32_t v = std::uint32_t{static_cast<std::uint8_t>(bytes[off])} |
                              (std::uint32_t{static_cast<std::uint8_t>(bytes[off + 1])} << 8);
      if (v >= b.q) throw std::invalid_argument("TOGM element outside the field");
      b.m(i, j) = Gf{v};
    }
  return b;
}

inline Json triorthogonality_json(const TriorthogonalityReport& t) {
  Json j{{"triorthogonal", t.triorthogonal},
         {"contains_all_ones", t.contains_all_ones},
         {"pairs_orthogonal", t.pairs_orthogonal},
         {"triples_orthogonal", t.triples_orthogonal},
         {"pairs_checked", t.pairs_checked},
         {"triples_checked", t.triples_checked}};
  if (t.bad_pair) j["bad_pair"] = {t.bad_pair->first, t.bad_pair->second};
  if (t.bad_triple) j["bad_triple"] = {(*t.bad_triple)[0], (*t.bad_triple)[1], (*t.bad_triple)[2]};
  return j;
}

inline Json distance_json(const Field& f, const DistanceCertificate& d) {
  return Json{{"lower", d.lower},          {"upper", d.upper}, {"exact", d.exact},
              {"mds", d.mds},              {"witness", hex_vector_json(f, d.witness)}};
}

/// {n, k, d_x_lower, d_z_lower, x_stab, z_stab, column_perm}
inline Json css_json(const CssCode& c) {
  const Field& f = c.form.field;
  Json j{{"field", field_json(f)}, {"n", c.n_phys}, {"k", c.k_log}};
  if (c.bounds_known) {
    j["d_x_lower"] = c.d_x_lower;
    j["d_z_lower"] = c.d_z_lower;
    j["d_lower"] = c.d_lower;
    j["vacuous"] = c.vacuous;
  }
  j["x_stab"] = hex_matrix_json(f, c.x_stabilizers);
  j["z_stab"] = hex_matrix_json(f, c.z_stabilizers);
  j["column_perm"] = c.form.column_perm;
  return j;
}

inline Json quantum_params_json(const QuantumParams& q) {
  return Json{{"r", q.level.r},
              {"j", q.level.j},
              {"N", bigint_json(q.n_phys)},
              {"K", bigint_json(q.k_log)},
              {"D_min", bigint_json(q.d_lower)},
              {"d_x_lower", bigint_json(q.d_x_lower)},
              {"d_z_lower", bigint_json(q.d_z_lower)},
              {"rate", rounded(q.rate, 12)},
              {"rate_exact", rational_json(q.rate_exact)},
              {"gamma_max", rounded(q.gamma_max, 12)},
              {"x1", rational_json(q.x1)},
              {"x2", rational_json(q.x2)}};
}

inline Json table3_json(const std::vector<Table3Row>& rows) {
  Json out = Json::array();
  for (const Table3Row& row : rows) {
    Json j = row.best ? quantum_params_json(*row.best) : Json{{"r", row.r}, {"j", row.j}, {"N", nullptr}};
    j["beyond_reference"] = row.beyond_reference;
    out.push_back(std::move(j));
  }
  return out;
}

inline std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string table3_csv(const std::vector<Table3Row>& rows) {
  std::string out = csv_row({"r", "j", "N", "K", "D_min", "rate", "gamma_max", "beyond_reference"});
  for (const Table3Row& row : rows) {
    if (!row.best) {
      out += csv_row({std::to_string(row.r), std::to_string(row.j), "", "", "", "", "", row.beyond_reference ? "true" : "false"});
      continue;
    }
    const QuantumParams& q = *row.best;
    out += csv_row({std::to_string(row.r), std::to_string(row.j), q.n_phys.str(), q.k_log.str(), q.d_lower.str(),
                    fixed3(q.rate), fixed3(q.gamma_max), row.beyond_reference ? "true" : "false"});
  }
  return out;
}

inline Json tvz_json(const TvzReport& t) {
  return Json{{"r", t.r},
              {"published_dist_limit", rational_json(t.published_dist_limit)},
              {"published_rate_limit", rational_json(t.published_rate_limit)},
              {"published_rate_intermediate", rational_json(t.published_rate_intermediate)},
              {"published_sum", rational_json(t.published_sum)},
              {"claimed_bound", rational_json(t.claimed_bound)},
              {"tvz_bound", rational_json(t.tvz_bound)},
              {"family_rate_limit", rational_json(t.family_rate_limit)},
              {"family_dist_limit", rational_json(t.family_dist_limit)},
              {"family_sum", rational_json(t.family_sum)},
              {"published_chain_holds", t.published_chain_holds},
              {"family_meets_claimed_bound", t.family_meets_claimed_bound},
              {"family_meets_tvz", t.family_meets_tvz},
              {"family_beats_tvz_strictly", t.family_beats_tvz_strictly},
              {"margin_family_vs_claimed", rational_json(t.margin_family_vs_claimed)},
              {"margin_claimed_vs_tvz", rational_json(t.margin_claimed_vs_tvz)},
              {"margin_family_vs_tvz", rational_json(t.margin_family_vs_tvz)},
              {"gv_rate_at_family_dist", rounded(t.gv_rate_at_family_dist, 12)},
              {"family_beats_gv", t.family_beats_gv}};
}

inline Json plan_json(const ReductionPlan& p) {
  Json steps = Json::array();
  for (const ReductionStep& s : p.steps)
    steps.push_back(Json{{"from_log2", s.from_log2}, {"to_log2", s.to_log2}, {"gamma_invertible", s.gamma_invertible}});
  return Json{{"n", p.n},
              {"distill_log2", p.distill_log2},
              {"reductions", p.reductions},
              {"steps", steps},
              {"totals",
               {{"measurements", p.totals.measurements},
                {"single_qudit", p.totals.single_qudit},
                {"two_qudit", p.totals.two_qudit}}},
              {"within_budget", p.within_budget},
              {"all_steps_invertible", p.all_steps_invertible}};
}

inline Json simulation_json(const SimulationReport& s) {
  const QuadraticExtension ext(s.r);
  Json outcomes = Json::array();
  for (const OutcomeResult& o : s.outcomes)
    outcomes.push_back(Json{{"outcome", hex_vector_json(ext.small(), o.outcome)},
                            {"probability", rounded(o.probability, 15)},
                            {"fidelity_gamma", rounded(o.fidelity_gamma, 12)},
                            {"fidelity_final", rounded(o.fidelity_final, 12)},
                            {"max_amplitude_error", o.max_amplitude_error <= 1e-12 ? 0.0 : o.max_amplitude_error},
                            {"measurements", o.measurements},
                            {"single_qudit", o.single_qudit},
                            {"two_qudit", o.two_qudit}});
  return Json{{"r", s.r},
              {"theta", to_hex(ext.big(), s.constants.nb.theta)},
              {"gamma", to_hex(ext.small(), s.constants.gamma)},
              {"eta", to_hex(ext.small(), s.constants.eta)},
              {"gamma_invertible", s.constants.gamma_invertible},
              {"applied_m_gamma", s.applied_m_gamma},
              {"min_fidelity_gamma", rounded(s.min_fidelity_gamma, 12)},
              {"min_fidelity_final", rounded(s.min_fidelity_final, 12)},
              {"passed", s.passed},
              {"diagnostics", s.diagnostics},
              {"outcomes", outcomes}};
}

}  // namespace triortho

#endif  // TRIORTHO_SERIALIZATION_HPP
