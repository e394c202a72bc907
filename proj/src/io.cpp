// Copyright 2026 The sparsezt Authors
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

#include "sparsezt/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sparsezt::io {

namespace {

using nlohmann::json;

std::uint64_t parse_uint(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

FieldElement element_at(const Field& field, std::uint64_t index) {
  if (index >= field.order()) {
    throw ParseError("element index " + std::to_string(index) + " out of range for " + field.name());
  }
  return field.element(static_cast<std::uint32_t>(index));
}

FieldElement element_from_json(const Field& field, const json& j) {
  if (!j.is_number_unsigned()) throw ParseError("field elements must be non-negative integers");
  return element_at(field, j.get<std::uint64_t>());
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

const Field& field_of(const json& j, const Field* field) {
  if (j.is_object() && j.contains("field")) {
    const json& name = j.at("field");
    if (!name.is_string()) throw ParseError("\"field\" must be a string");
    const Field& parsed = parse_field(name.get<std::string>());
    if (field != nullptr && &parsed != field) throw ParseError("field mismatch: " + parsed.name());
    return parsed;
  }
  if (field == nullptr) throw ParseError("missing \"field\"");
  return *field;
}

// Runs fn, turning library and json errors into ParseError.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
}

json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

}  // namespace

const Field& parse_field(std::string_view name) {
  const std::string_view s = trim(name);
  if (s.size() < 4 || s.substr(0, 3) != "GF(" || s.back() != ')') {
    throw ParseError("field must look like GF(p), GF(p^k) or GF(q): '" + std::string(name) + "'");
  }
  const std::string_view body = s.substr(3, s.size() - 4);
  std::uint64_t p = 0;
  std::uint64_t k = 1;
  if (const auto caret = body.find('^'); caret != std::string_view::npos) {
    p = parse_uint(trim(body.substr(0, caret)), "characteristic");
    k = parse_uint(trim(body.substr(caret + 1)), "extension degree");
    if (!is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime");
  } else {
    const std::uint64_t q = parse_uint(trim(body), "field order");
    if (q < 2) throw ParseError("field order must be at least 2");
    // Smallest prime factor, then require q to be a power of it.
    p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint64_t rest = q;
    k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) throw ParseError(std::to_string(q) + " is not a prime power");
  }
  if (p > std::numeric_limits<std::uint32_t>::max() || k > 64) throw ParseError("field too large");
  return guarded([&]() -> const Field& {
    return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  });
}

std::string format_poly(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += '+';
    out += std::to_string(c.index());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*x" + std::to_string(i + 1) + '^' + std::to_string(e[i]);
    }
  }
  return out;
}

SparsePoly parse_poly(const Field& field, std::size_t nvars, std::string_view text) {
  SparsePoly f(field, nvars);
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty polynomial");
  if (body == "0") return f;
  for (std::string_view term : split(body, '+')) {
    term = trim(term);
    if (term.empty()) throw ParseError("empty term in polynomial");
    FieldElement c = field.one();
    bool have_coeff = false;
    Monomial e(nvars, 0);
    for (std::string_view factor : split(term, '*')) {
      factor = trim(factor);
      if (factor.empty()) throw ParseError("empty factor in term '" + std::string(term) + "'");
      if (factor.front() == 'x' || factor.front() == 'X') {
        const auto caret = factor.find('^');
        const std::uint64_t var = parse_uint(trim(factor.substr(1, caret == std::string_view::npos
                                                                       ? std::string_view::npos
                                                                       : caret - 1)),
                                             "variable index");
        if (var < 1 || var > nvars) {
          throw ParseError("variable x" + std::to_string(var) + " outside 1.." + std::to_string(nvars));
        }
        const std::uint64_t exp =
            caret == std::string_view::npos ? 1 : parse_uint(trim(factor.substr(caret + 1)), "exponent");
        const std::uint64_t total = e[var - 1] + exp;
        if (total > std::numeric_limits<std::uint32_t>::max()) throw ParseError("exponent too large");
        e[var - 1] = static_cast<std::uint32_t>(total);
      } else {
        if (have_coeff) throw ParseError("term '" + std::string(term) + "' has two coefficients");
        c = element_at(field, parse_uint(factor, "coefficient"));
        have_coeff = true;
      }
    }
    f.add_term(e, c);
  }
  return f;
}

json element_list(std::span<const FieldElement> xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.index());
  return out;
}

Point parse_point(const Field& field, std::string_view text) {
  Point p;
  const std::string_view body = trim(text);
  if (body.empty()) return p;
  for (auto part : split(body, ',')) p.push_back(element_at(field, parse_uint(trim(part), "element index")));
  return p;
}

Point point_from_json(const Field& field, const json& j) {
  if (!j.is_array()) throw ParseError("a point must be an array of element indices");
  Point p;
  for (const auto& x : j) p.push_back(element_from_json(field, x));
  return p;
}

json poly_to_json(const SparsePoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"coeff", c.index()}, {"exps", e}});
  return {{"field", f.field().name()}, {"nvars", f.nvars()}, {"terms", terms}};
}

SparsePoly poly_from_json(const json& j, const Field* field) {
  return guarded([&]() {
    const Field& fld = field_of(j, field);
    const json& nv = member(j, "nvars");
    if (!nv.is_number_unsigned()) throw ParseError("\"nvars\" must be a non-negative integer");
    const auto nvars = nv.get<std::size_t>();
    if (j.contains("poly")) {
      if (!j.at("poly").is_string()) throw ParseError("\"poly\" must be a string");
      return parse_poly(fld, nvars, j.at("poly").get<std::string>());
    }
    const json& terms = member(j, "terms");
    if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
    SparsePoly f(fld, nvars);
    for (const auto& t : terms) {
      const FieldElement c = element_from_json(fld, member(t, "coeff"));
      const json& exps = member(t, "exps");
      if (!exps.is_array() || exps.size() != nvars) throw ParseError("\"exps\" must have nvars entries");
      Monomial e;
      for (const auto& x : exps) {
        if (!x.is_number_unsigned() || x.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
          throw ParseError("exponents must be non-negative 32-bit integers");
        }
        e.push_back(x.get<std::uint32_t>());
      }
      f.add_term(e, c);
    }
    return f;
  });
}

json domain_to_json(const RectangularDomain& q) {
  json sets = json::array();
  for (const auto& s : q.sets()) sets.push_back(element_list(s));
  return {{"field", q.field().name()}, {"sets", sets}};
}

RectangularDomain domain_from_json(const json& j, const Field* field) {
  return guarded([&]() {
    const Field& fld = field_of(j, field);
    const json& sets = member(j, "sets");
    if (!sets.is_array()) throw ParseError("\"sets\" must be an array");
    std::vector<std::vector<FieldElement>> out;
    for (const auto& s : sets) out.push_back(point_from_json(fld, s));
    return RectangularDomain(fld, std::move(out));
  });
}

SystemInput system_from_json(const json& j) {
  return guarded([&]() {
    const Field& fld = field_of(j, nullptr);
    const json& polys = member(j, "polys");
    if (!polys.is_array()) throw ParseError("\"polys\" must be an array");
    std::vector<SparsePoly> list;
    for (const auto& p : polys) list.push_back(poly_from_json(p, &fld));
    SystemInput in{PolySystem(std::move(list)), std::nullopt, std::nullopt};
    if (j.contains("domain")) in.domain = domain_from_json(j.at("domain"), &fld);
    if (j.contains("anchor")) in.anchor = point_from_json(fld, j.at("anchor"));
    return in;
  });
}

json system_to_json(const PolySystem& sys, const RectangularDomain* q, const Point* anchor) {
  json polys = json::array();
  for (const auto& f : sys.polys()) polys.push_back(poly_to_json(f));
  json out = {{"field", sys.field().name()}, {"polys", polys}};
  if (q != nullptr) out["domain"] = domain_to_json(*q);
  if (anchor != nullptr) out["anchor"] = element_list(*anchor);
  return out;
}

json report_to_json(const SearchReport& report) {
  const bool system = report.kind == ReportKind::kSystem;
  const bool found = report.verdict == Verdict::kWitnessFound;
  json out;
  out["kind"] = system ? "system" : "zero-test";
  out["verdict"] = system ? (found ? "solution-found" : "no-solution") : (found ? "witness" : "vanishes");
  out["witness"] = report.witness ? element_list(*report.witness) : json(nullptr);
  out["distance"] = report.distance ? json(*report.distance) : json(nullptr);
  out["radius"] = report.radius;
  out["theorem"] = std::string(rule_name(report.rule));
  out["evaluations"] = report.evaluations;
  if (report.budget) out["budget"] = big_to_json(*report.budget);
  if (report.closed_form_radius) out["closed_form_radius"] = *report.closed_form_radius;
  if (report.monomial_bound) out["monomial_bound"] = big_to_json(*report.monomial_bound);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace sparsezt::io
