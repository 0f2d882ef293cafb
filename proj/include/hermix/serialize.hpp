#pragma once

// JSON and CSV encodings. Rationals are always written as "a/b" strings.

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hermix/expansion.hpp"
#include "hermix/gaussian.hpp"
#include "hermix/polynomial.hpp"
#include "hermix/verification.hpp"

namespace hermix {

using json = nlohmann::ordered_json;

/// Comma-separated list of integers or "a/b" tokens, lowest power first.
/// Throws std::invalid_argument naming the offending token.
inline std::vector<Rational> parse_coeff_list(std::string_view text) {
  std::vector<Rational> out;
  if (detail::trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(Rational::parse(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient token '" + std::string(detail::trim(token)) +
                                  "' (expected integer or a/b)");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline json rationals_to_json(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

inline json to_json(const Polynomial& p) { return json{{"coeffs", rationals_to_json(p.coeffs())}}; }

inline json to_json(const HermiteExpansion& e) {
  return json{{"coeffs", rationals_to_json(e.coeffs)}};
}

inline json to_json(const GaussSqrtPi& g) { return json{{"sqrt_pi_coeff", g.coeff.to_string()}}; }

inline Polynomial polynomial_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

namespace detail {

inline json case_to_json(const CaseRecord& c) {
  json j;
  j["n"] = c.n;
  if (c.l) j["l"] = *c.l;
  j["k"] = c.k;
  j["closed"] = c.closed.to_string();
  j["oracle"] = c.oracle.to_string();
  j["match"] = c.match;
  return j;
}

}  // namespace detail

inline json to_json(const VerificationReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["variant"] = std::string(to_string(r.variant));
  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back(detail::case_to_json(c));
  j["cases"] = std::move(cases);
  json summary{{"total", r.total()}, {"matched", r.matched()}};
  if (const CaseRecord* bad = r.first_mismatch()) summary["first_mismatch"] = detail::case_to_json(*bad);
  j["summary"] = std::move(summary);
  return j;
}

// CSV writers. Header row, comma delimiter, '\n' terminator.

inline std::string polynomial_csv(const Polynomial& p) {
  std::ostringstream os;
  os << "power,value\n";
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << i << ',' << c[i] << '\n';
  return os.str();
}

inline std::string expansion_csv(const HermiteExpansion& e) {
  std::ostringstream os;
  os << "k,value\n";
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) os << k << ',' << e.coeffs[k] << '\n';
  return os.str();
}

inline std::string report_csv_header() { return "theorem,variant,n,l,k,closed,oracle,match\n"; }

inline std::string report_csv_rows(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.cases) {
    os << r.theorem << ',' << to_string(r.variant) << ',' << c.n << ',';
    if (c.l) os << *c.l;
    os << ',' << c.k << ',' << c.closed << ',' << c.oracle << ',' << (c.match ? "true" : "false")
       << '\n';
  }
  return os.str();
}

/// Coefficients of a polynomial packed into one CSV cell, ';'-separated.
inline std::string packed_coeffs(const Polynomial& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ';';
    out += c.to_string();
  }
  return out;
}

}  // namespace hermix
