#pragma once

// Command-line front end: gen, expand, verify, table.
//
// Exit status: 0 on success (and for verify, every case matched), 1 when a
// verify run recorded at least one mismatch, 2 on any usage or input error.

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hermix/serialize.hpp"

namespace hermix::cli {

enum class Command { gen, expand, verify, table };
enum class Format { json, csv };

struct CliConfig {
  Command command = Command::gen;
  std::optional<std::string> family;
  std::optional<long> n, k, l, max_n;
  std::optional<int> theorem;
  std::optional<std::string> variant;  // verbatim | corrected | both
  Format format = Format::json;
  std::optional<std::string> out_path;
  std::optional<std::string> coeffs;
  std::optional<std::string> in_path;
};

struct CliResult {
  int exit_code = 0;
  std::string out;  // payload for stdout when no --out was given
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Signals a usage or input problem; always maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string emit(const json& j) { return j.dump(2) + "\n"; }

inline long require(const std::optional<long>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  if (*v < 0) throw UsageError(std::string(flag) + " must be non-negative");
  return *v;
}

inline Family require_family(const CliConfig& cfg) {
  if (!cfg.family) throw UsageError("missing required option --family");
  try {
    return parse_family(*cfg.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace detail

inline std::string run_gen(const CliConfig& cfg) {
  const Family family = detail::require_family(cfg);
  const long n = detail::require(cfg.n, "--n");
  Polynomial p;
  switch (family) {
    case Family::euler: p = euler_poly(n); break;
    case Family::genocchi: p = genocchi_poly(n); break;
    case Family::hermite: p = hermite_poly(n); break;
    case Family::bernstein: {
      if (!cfg.k) throw UsageError("missing required option --k");
      if (*cfg.k < 0 || *cfg.k > n) throw UsageError("k must satisfy 0 <= k <= n");
      p = bernstein_poly(*cfg.k, n);
      break;
    }
  }
  return cfg.format == Format::json ? detail::emit(to_json(p)) : polynomial_csv(p);
}

inline std::string run_expand(const CliConfig& cfg) {
  if (cfg.coeffs.has_value() == cfg.in_path.has_value())
    throw UsageError("expand needs exactly one of --coeffs or --in");
  Polynomial p;
  try {
    if (cfg.coeffs) {
      p = Polynomial(parse_coeff_list(*cfg.coeffs));
    } else {
      const std::string text = detail::read_file(*cfg.in_path);
      const std::string_view body = hermix::detail::trim(text);
      if (!body.empty() && body.front() == '{')
        p = polynomial_from_json(json::parse(body));
      else
        p = Polynomial(parse_coeff_list(body));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const HermiteExpansion e = expand(p);
  return cfg.format == Format::json ? detail::emit(to_json(e)) : expansion_csv(e);
}

/// Returns the serialized report(s) and whether every case matched.
inline std::pair<std::string, bool> run_verify(const CliConfig& cfg) {
  if (!cfg.theorem) throw UsageError("missing required option --theorem");
  const int theorem = *cfg.theorem;
  if (theorem < 1 || theorem > 3) throw UsageError("--theorem must be 1, 2 or 3");
  const long max_n = detail::require(cfg.max_n, "--max-n");

  std::vector<Variant> variants;
  const std::string v = cfg.variant.value_or(theorem == 3 ? "both" : "verbatim");
  if (theorem != 3 && v != "verbatim") throw UsageError("--variant is only meaningful for theorem 3");
  if (v == "both") {
    variants = {Variant::verbatim, Variant::corrected};
  } else {
    try {
      variants = {parse_variant(v)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<VerificationReport> reports;
  bool ok = true;
  for (Variant variant : variants) {
    reports.push_back(verify_theorem(theorem, variant, max_n));
    ok = ok && reports.back().all_match();
  }

  if (cfg.format == Format::csv) {
    std::string out = report_csv_header();
    for (const auto& r : reports) out += report_csv_rows(r);
    return {out, ok};
  }
  if (reports.size() == 1) return {detail::emit(to_json(reports.front())), ok};
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return {detail::emit(json{{"reports", std::move(arr)}}), ok};
}

inline std::string run_table(const CliConfig& cfg) {
  const Family family = detail::require_family(cfg);
  const long max_n = detail::require(cfg.max_n, "--max-n");
  const bool csv = cfg.format == Format::csv;
  std::ostringstream os;
  json rows = json::array();

  switch (family) {
    case Family::euler:
    case Family::genocchi: {
      if (csv) os << "n,value\n";
      for (long n = 0; n <= max_n; ++n) {
        const Rational value = family == Family::euler ? euler_number(n) : genocchi_number(n);
        if (csv)
          os << n << ',' << value << '\n';
        else
          rows.push_back(json{{"n", n}, {"value", value.to_string()}});
      }
      break;
    }
    case Family::hermite: {
      if (csv) os << "n,coeffs\n";
      for (long n = 0; n <= max_n; ++n) {
        const Polynomial p = hermite_poly(n);
        if (csv)
          os << n << ',' << packed_coeffs(p) << '\n';
        else
          rows.push_back(json{{"n", n}, {"coeffs", rationals_to_json(p.coeffs())}});
      }
      break;
    }
    case Family::bernstein: {
      if (csv) os << "n,k,coeffs\n";
      for (long n = 0; n <= max_n; ++n) {
        for (long k = 0; k <= n; ++k) {
          const Polynomial p = bernstein_poly(k, n);
          if (csv)
            os << n << ',' << k << ',' << packed_coeffs(p) << '\n';
          else
            rows.push_back(json{{"n", n}, {"k", k}, {"coeffs", rationals_to_json(p.coeffs())}});
        }
      }
      break;
    }
  }
  if (csv) return os.str();
  return detail::emit(json{{"family", std::string(to_string(family))}, {"rows", std::move(rows)}});
}

/// Dispatches a parsed configuration. Output goes to cfg.out_path when set,
/// otherwise into CliResult::out.
inline CliResult run(const CliConfig& cfg) {
  CliResult result;
  try {
    std::string payload;
    switch (cfg.command) {
      case Command::gen: payload = run_gen(cfg); break;
      case Command::expand: payload = run_expand(cfg); break;
      case Command::table: payload = run_table(cfg); break;
      case Command::verify: {
        auto [text, ok] = run_verify(cfg);
        payload = std::move(text);
        result.exit_code = ok ? kExitOk : kExitMismatch;
        break;
      }
    }
    if (cfg.out_path) {
      std::ofstream out(*cfg.out_path, std::ios::binary);
      if (!out) throw UsageError("cannot write output file '" + *cfg.out_path + "'");
      out << payload;
    } else {
      result.out = std::move(payload);
    }
  } catch (const UsageError& e) {
    result = {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    result = {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

/// Parses argv-style arguments (without the program name) and runs them.
inline CliResult run_args(std::vector<std::string> args) {
  CLI::App app{"Exact Hermite-basis expansions of Euler, Genocchi and Bernstein polynomials"};
  app.require_subcommand(1, 1);
  CliConfig cfg;
  std::string format = "json";

  const std::vector<std::string> families{"euler", "genocchi", "hermite", "bernstein"};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  };

  auto* gen = app.add_subcommand("gen", "Emit one polynomial of a family");
  gen->add_option("--family", cfg.family, "euler|genocchi|hermite|bernstein")->check(CLI::IsMember(families));
  gen->add_option("--n", cfg.n, "Degree index");
  gen->add_option("--k", cfg.k, "Bernstein index k");
  add_common(gen);

  auto* exp = app.add_subcommand("expand", "Expand a polynomial in the Hermite basis");
  exp->add_option("--coeffs", cfg.coeffs, "Comma-separated coefficients, lowest power first");
  exp->add_option("--in", cfg.in_path, "Read coefficients (list or JSON) from file");
  add_common(exp);

  auto* ver = app.add_subcommand("verify", "Check a closed form against the projection");
  ver->add_option("--theorem", cfg.theorem, "1 (Genocchi), 2 (Bernstein), 3 (Euler sum)");
  ver->add_option("--variant", cfg.variant, "verbatim|corrected|both (theorem 3 only)")
      ->check(CLI::IsMember({"verbatim", "corrected", "both"}));
  ver->add_option("--max-n", cfg.max_n, "Largest n to check");
  add_common(ver);

  auto* tab = app.add_subcommand("table", "Tabulate numbers or polynomials up to --max-n");
  tab->add_option("--family", cfg.family, "euler|genocchi|hermite|bernstein")->check(CLI::IsMember(families));
  tab->add_option("--max-n", cfg.max_n, "Largest index");
  add_common(tab);

  // CLI11 expects arguments in reverse order when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {kExitOk, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }

  cfg.format = format == "csv" ? Format::csv : Format::json;
  if (gen->parsed()) cfg.command = Command::gen;
  else if (exp->parsed()) cfg.command = Command::expand;
  else if (ver->parsed()) cfg.command = Command::verify;
  else cfg.command = Command::table;
  return run(cfg);
}

}  // namespace hermix::cli
