// Copyright 2026 The qha Authors
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

#include "qha/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qha {

namespace {

// Shortest-round-trip decimal form; deterministic for a given value.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::int64_t> parse_group_orders(const std::string& spec) {
  std::vector<std::int64_t> orders;
  std::size_t i = 0;
  while (i < spec.size()) {
    if (spec[i] != 'Z' && spec[i] != 'z') {
      throw std::invalid_argument("group spec: expected 'Z' at position " +
                                  std::to_string(i) + " in '" + spec + "'");
    }
    ++i;
    std::size_t start = i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
      ++i;
    }
    if (start == i) {
      throw std::invalid_argument("group spec: missing order after 'Z' in '" +
                                  spec + "'");
    }
    std::int64_t order = 0;
    try {
      order = std::stoll(spec.substr(start, i - start));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("group spec: order out of range in '" +
                                  spec + "'");
    }
    orders.push_back(order);
    if (i == spec.size()) {
      break;
    }
    if (spec[i] != 'x' && spec[i] != 'X') {
      throw std::invalid_argument("group spec: expected 'x' at position " +
                                  std::to_string(i) + " in '" + spec + "'");
    }
    ++i;
    if (i == spec.size()) {
      throw std::invalid_argument("group spec: dangling 'x' in '" + spec +
                                  "'");
    }
  }
  if (orders.empty()) {
    throw std::invalid_argument("group spec: empty");
  }
  return orders;
}

std::string group_spec_string(const std::vector<std::int64_t>& orders) {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0) {
      out += 'x';
    }
    out += 'Z';
    out += std::to_string(orders[i]);
  }
  return out;
}

Json complex_to_json(const Cplx& v) { return Json::array({v.real(), v.imag()}); }

Cplx complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex value must be a [re, im] pair");
  }
  return Cplx(j[0].get<double>(), j[1].get<double>());
}

Json group_to_json(const FiniteAbelianGroup& g) {
  Json j;
  j["orders"] = g.orders();
  return j;
}

FiniteAbelianGroup group_from_json(const nlohmann::json& j) {
  if (!j.contains("orders")) {
    throw std::invalid_argument("group JSON must contain 'orders'");
  }
  return make_group(j.at("orders").get<std::vector<std::int64_t>>());
}

Json multiplier_to_json(const Multiplier& m) {
  Json j;
  j["kind"] = to_string(m.kind());
  j["orders"] = m.group().orders();
  if (m.kind() == MultiplierKind::modified) {
    Json phases = Json::array();
    for (const Cplx& a : m.modification()) {
      phases.push_back(complex_to_json(a));
    }
    j["phases"] = std::move(phases);
  }
  if (m.kind() == MultiplierKind::table) {
    Json values = Json::array();
    const std::int64_t n = m.point_count();
    for (std::int64_t z = 0; z < n; ++z) {
      for (std::int64_t w = 0; w < n; ++w) {
        values.push_back(complex_to_json(m.eval(z, w)));
      }
    }
    j["values"] = std::move(values);
  }
  return j;
}

Multiplier multiplier_from_json(const nlohmann::json& j) {
  if (!j.contains("kind") || !j.contains("orders")) {
    throw std::invalid_argument(
        "multiplier JSON must contain 'kind' and 'orders'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  FiniteAbelianGroup g =
      make_group(j.at("orders").get<std::vector<std::int64_t>>());
  if (kind == "canonical") {
    return Multiplier::canonical(std::move(g));
  }
  if (kind == "weyl") {
    return Multiplier::weyl(std::move(g));
  }
  if (kind == "modified") {
    if (!j.contains("phases")) {
      throw std::invalid_argument("modified multiplier JSON needs 'phases'");
    }
    std::vector<Cplx> phases;
    for (const auto& entry : j.at("phases")) {
      phases.push_back(complex_from_json(entry));
    }
    return Multiplier::modified(Multiplier::canonical(std::move(g)),
                                std::move(phases));
  }
  if (kind == "table") {
    if (!j.contains("values")) {
      throw std::invalid_argument("table multiplier JSON needs 'values'");
    }
    std::vector<Cplx> values;
    for (const auto& entry : j.at("values")) {
      values.push_back(complex_from_json(entry));
    }
    const std::int64_t n = g.size() * g.size();
    if (static_cast<std::int64_t>(values.size()) != n * n) {
      throw std::invalid_argument(
          "table multiplier JSON: 'values' must hold |Xi|^2 entries");
    }
    return Multiplier::from_table(std::move(g), std::move(values));
  }
  throw std::invalid_argument("unknown multiplier kind '" + kind + "'");
}

Json operator_to_json(const Operator& a) {
  Json j;
  j["dim"] = a.rows();
  Json entries = Json::array();
  for (std::int64_t r = 0; r < a.rows(); ++r) {
    for (std::int64_t c = 0; c < a.cols(); ++c) {
      entries.push_back(complex_to_json(a(r, c)));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

Operator operator_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("entries")) {
    throw std::invalid_argument(
        "operator JSON must contain 'dim' and 'entries'");
  }
  const std::int64_t dim = j.at("dim").get<std::int64_t>();
  if (dim <= 0) {
    throw std::invalid_argument("operator JSON: 'dim' must be positive");
  }
  const auto& entries = j.at("entries");
  if (static_cast<std::int64_t>(entries.size()) != dim * dim) {
    throw std::invalid_argument(
        "operator JSON: 'entries' must hold dim^2 values");
  }
  Operator a(dim, dim);
  std::int64_t k = 0;
  for (std::int64_t r = 0; r < dim; ++r) {
    for (std::int64_t c = 0; c < dim; ++c) {
      a(r, c) = complex_from_json(entries[k++]);
    }
  }
  return a;
}

Json values_to_json(const CVec& v) {
  Json j;
  Json values = Json::array();
  for (std::int64_t i = 0; i < v.size(); ++i) {
    values.push_back(complex_to_json(v(i)));
  }
  j["values"] = std::move(values);
  return j;
}

CVec values_from_json(const nlohmann::json& j) {
  if (!j.contains("values")) {
    throw std::invalid_argument("function JSON must contain 'values'");
  }
  const auto& values = j.at("values");
  CVec v(values.size());
  std::int64_t i = 0;
  for (const auto& entry : values) {
    v(i++) = complex_from_json(entry);
  }
  return v;
}

Json rule_to_json(const CorrespondenceRule& rule) {
  Json j;
  j["b1"] = operator_to_json(rule.b1);
  j["b2"] = operator_to_json(rule.b2);
  return j;
}

CorrespondenceRule rule_from_json(const nlohmann::json& j) {
  if (!j.contains("b1") || !j.contains("b2")) {
    throw std::invalid_argument("rule JSON must contain 'b1' and 'b2'");
  }
  CorrespondenceRule rule;
  rule.b1 = operator_from_json(j.at("b1"));
  rule.b2 = operator_from_json(j.at("b2"));
  return rule;
}

Json family_to_json(const std::vector<Operator>& family) {
  Json j;
  Json ops = Json::array();
  for (const Operator& a : family) {
    ops.push_back(operator_to_json(a));
  }
  j["operators"] = std::move(ops);
  return j;
}

std::vector<Operator> family_from_json(const nlohmann::json& j) {
  if (!j.contains("operators")) {
    throw std::invalid_argument("family JSON must contain 'operators'");
  }
  std::vector<Operator> family;
  for (const auto& entry : j.at("operators")) {
    family.push_back(operator_from_json(entry));
  }
  return family;
}

std::string phase_function_csv(const PhaseFunction& f,
                               const std::string& warning) {
  const PhaseSpace& s = f.space;
  const FiniteAbelianGroup& g = s.group();
  const std::size_t k = g.factor_count();
  std::ostringstream out;

  out << "# phase-space grid on " << group_spec_string(g.orders())
      << " (|G| = " << g.size() << ", points = " << s.dim() * s.dim() << ")\n";
  out << "# point weight w = " << format_double(s.weight())
      << " (= 1/|G|); weighted sums w*sum(re) give integrals -- for a Wigner "
         "function, w*sum(re) equals the trace\n";
  if (!warning.empty()) {
    out << "# warning: " << warning << "\n";
  }
  for (std::size_t i = 0; i < k; ++i) {
    out << "x" << i << ",";
  }
  for (std::size_t i = 0; i < k; ++i) {
    out << "xi" << i << ",";
  }
  out << "re,im\n";

  const std::int64_t n = s.dim() * s.dim();
  for (std::int64_t z = 0; z < n; ++z) {
    const GroupElement x = g.element(s.pos(z));
    const GroupElement xi = g.element(s.mom(z));
    for (std::size_t i = 0; i < k; ++i) {
      out << x[i] << ",";
    }
    for (std::size_t i = 0; i < k; ++i) {
      out << xi[i] << ",";
    }
    out << format_double(f.values(z).real()) << ","
        << format_double(f.values(z).imag()) << "\n";
  }
  return out.str();
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read file: " + path);
  }
  return nlohmann::json::parse(in);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << content;
  if (!out.flush()) {
    throw std::runtime_error("failed writing file: " + path);
  }
}

}  // namespace qha
