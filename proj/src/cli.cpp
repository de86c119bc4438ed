#include "comppat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>

#include "comppat/asymptotics.hpp"
#include "comppat/genfun.hpp"
#include "comppat/patterns.hpp"
#include "comppat/words.hpp"

namespace comppat {

namespace {

using json = nlohmann::json;

// A usage error attributed to one flag.
struct FlagError : UsageError {
  FlagError(const std::string& flag, const std::string& what) : UsageError(flag + ": " + what) {}
};

PatternId pattern_arg(const std::string& text) {
  const auto p = parse_pattern(text);
  if (!p) throw FlagError("--pattern", "unknown pattern '" + text + "' (expected 111, 112, 221, 123, peak or valley)");
  return *p;
}

PartSet set_arg(const std::string& text) {
  try {
    return PartSet::parse(text);
  } catch (const UsageError& e) {
    throw FlagError("--set", e.what());
  }
}

void check_order(unsigned order, const char* flag) {
  if (order > kMaxOrder) throw FlagError(flag, "must be at most " + std::to_string(kMaxOrder));
}

std::string materialized_label(const PartSet& parts, unsigned order) {
  std::string out;
  for (auto a : parts.materialize(order)) out += (out.empty() ? "" : ",") + std::to_string(a);
  return out;
}

json envelope(const std::string& command) {
  return json{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}};
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct Options {
  std::string pattern;
  std::string set = "nat";
  unsigned order = 10;
  std::string format = "json";
  bool bfile = false;
  double radius = kContourRadius;
  unsigned samples = kContourSamples;
  std::string curve_csv;
  unsigned max_n = 10;
  bool words = false;
  unsigned k = 2;
  unsigned max_m = 8;
};

int cmd_expand(const Options& o, std::ostream& out) {
  const PatternId p = pattern_arg(o.pattern);
  const PartSet parts = set_arg(o.set);
  check_order(o.order, "--order");
  const TruncatedSeries s = build_gf(p, parts, o.order);
  if (o.format == "csv") {
    out << "n,m,r,count\n";
    for (const auto& [mono, c] : s.terms()) out << mono.n << ',' << mono.m << ',' << mono.r << ',' << c << '\n';
    return kExitOk;
  }
  json j = envelope("expand");
  j["pattern"] = to_string(p);
  j["set"] = materialized_label(parts, o.order);
  j["order"] = o.order;
  json rows = json::array();
  for (const auto& [mono, c] : s.terms()) {
    rows.push_back({{"n", mono.n}, {"m", mono.m}, {"r", mono.r}, {"count", c.str()}});
  }
  j["coefficients"] = std::move(rows);
  write_json(out, j);
  return kExitOk;
}

int cmd_avoiders(const Options& o, std::ostream& out) {
  const PatternId p = pattern_arg(o.pattern);
  const PartSet parts = set_arg(o.set);
  check_order(o.order, "--order");
  const TruncatedSeries s = substitute_z1(substitute_y0(build_gf(p, parts, o.order)));
  std::vector<std::string> values;
  for (unsigned n = 0; n <= o.order; ++n) values.push_back(s.coefficient(n, 0, 0).str());
  if (o.bfile) {
    for (unsigned n = 0; n <= o.order; ++n) out << n << ' ' << values[n] << '\n';
    return kExitOk;
  }
  json j = envelope("avoiders");
  j["pattern"] = to_string(p);
  j["set"] = materialized_label(parts, o.order);
  j["order"] = o.order;
  j["values"] = values;
  write_json(out, j);
  return kExitOk;
}

int cmd_asymptotics(const Options& o, std::ostream& out) {
  const PatternId p = pattern_arg(o.pattern);
  if (!(o.radius > 0 && o.radius < 0.8)) throw FlagError("--radius", "must lie in (0, 0.8)");
  if (o.samples < 1024) throw FlagError("--samples", "must be at least 1024");
  Tolerances tol;
  tol.radius = o.radius;
  tol.samples = o.samples;
  const AsymptoticEstimate est = estimate(p, tol);

  if (!o.curve_csv.empty()) {
    std::ofstream csv(o.curve_csv);
    if (!csv) throw FlagError("--curve-csv", "cannot open '" + o.curve_csv + "' for writing");
    csv << "re_x,im_x,re_f,im_f\n";
    for (const auto& pt : emit_curve(p, o.radius, o.samples)) {
      csv << fmt_double(pt.re_x) << ',' << fmt_double(pt.im_x) << ',' << fmt_double(pt.re_f) << ','
          << fmt_double(pt.im_f) << '\n';
    }
  }

  json j = envelope("asymptotics");
  j["pattern"] = to_string(p);
  j["rho"] = est.rho;
  j["v"] = est.growth_v;
  j["K"] = est.constant_K;
  j["winding"] = est.winding;
  j["residual"] = est.residual;
  j["tolerances"] = {{"rho_tol", tol.rho_tol},
                     {"tail_eps", tol.tail_eps},
                     {"derivative_step", tol.derivative_step},
                     {"radius", tol.radius},
                     {"samples", tol.samples}};
  if (est.winding != 1) {
    j["warning"] = "winding number " + std::to_string(est.winding) + " at radius " + fmt_short(o.radius) +
                   "; expected exactly one zero inside the contour";
  }
  write_json(out, j);
  return kExitOk;
}

json compare_tables(const OccurrenceTable& formula, const OccurrenceTable& oracle, unsigned max_index,
                    std::size_t& checked) {
  std::set<Monomial> keys;
  auto in_range = [&](const Monomial& mono) { return (formula.words ? mono.m : mono.n) <= max_index; };
  for (const auto& [mono, c] : formula.counts) if (in_range(mono)) keys.insert(mono);
  for (const auto& [mono, c] : oracle.counts) if (in_range(mono)) keys.insert(mono);
  json mismatches = json::array();
  for (const auto& mono : keys) {
    const BigInt a = formula.at(mono.n, mono.m, mono.r);
    const BigInt b = oracle.at(mono.n, mono.m, mono.r);
    if (a != b) {
      json row = {{"m", mono.m}, {"r", mono.r}, {"formula", a.str()}, {"oracle", b.str()}};
      if (!formula.words) row["n"] = mono.n;
      mismatches.push_back(std::move(row));
    }
  }
  checked = keys.size();
  return mismatches;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PatternId p = pattern_arg(o.pattern);
  json j = envelope("verify");
  j["pattern"] = to_string(p);
  std::size_t checked = 0;
  json mismatches;
  if (o.words) {
    if (o.k == 0) throw FlagError("-k", "must be at least 1");
    check_order(o.max_m, "--max-m");
    double words_to_visit = 1;
    for (unsigned m = 0; m < o.max_m; ++m) words_to_visit *= o.k;
    if (words_to_visit > kMaxBruteForceItems) throw FlagError("--max-m", "k^max-m is too large to enumerate");
    const auto formula = table_from_series(p, word_gf(p, o.k, o.max_m), "[" + std::to_string(o.k) + "]");
    const auto oracle = brute_force_word_table(p, o.k, o.max_m);
    mismatches = compare_tables(formula, oracle, o.max_m, checked);
    j["k"] = o.k;
    j["max_m"] = o.max_m;
  } else {
    const PartSet parts = set_arg(o.set);
    if (o.max_n > kMaxBruteForceN) {
      throw FlagError("--max-n", "must be at most " + std::to_string(kMaxBruteForceN) + " for enumeration");
    }
    const auto oracle = brute_force_table(p, parts, o.max_n);
    const auto formula = table_from_series(p, build_gf(p, parts, o.max_n), oracle.set);
    mismatches = compare_tables(formula, oracle, o.max_n, checked);
    j["set"] = materialized_label(parts, o.max_n);
    j["max_n"] = o.max_n;
  }
  const bool ok = mismatches.empty();
  j["checked"] = checked;
  j["mismatches"] = std::move(mismatches);
  write_json(out, j);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_words(const Options& o, std::ostream& out) {
  const PatternId p = pattern_arg(o.pattern);
  if (o.k == 0) throw FlagError("-k", "must be at least 1");
  check_order(o.order, "--order");
  const TruncatedSeries s = word_gf(p, o.k, o.order);
  if (o.format == "csv") {
    out << "m,r,count\n";
    for (const auto& [mono, c] : s.terms()) out << mono.m << ',' << mono.r << ',' << c << '\n';
    return kExitOk;
  }
  json j = envelope("words");
  j["pattern"] = to_string(p);
  j["k"] = o.k;
  j["order"] = o.order;
  json rows = json::array();
  for (const auto& [mono, c] : s.terms()) rows.push_back({{"m", mono.m}, {"r", mono.r}, {"count", c.str()}});
  j["coefficients"] = std::move(rows);
  write_json(out, j);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern statistics in compositions and words", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto pattern_option = [&](CLI::App* sub) {
    sub->add_option("--pattern", o.pattern, "111, 112, 221, 123, peak or valley")->required();
  };
  auto format_option = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* expand = app.add_subcommand("expand", "Coefficient table of the trivariate series");
  pattern_option(expand);
  expand->add_option("--set", o.set, "nat or a list such as 1,3,4");
  expand->add_option("--order", o.order, "truncation order in n")->required();
  format_option(expand);

  auto* avoiders = app.add_subcommand("avoiders", "Number of avoiding compositions of n = 0..order");
  pattern_option(avoiders);
  avoiders->add_option("--set", o.set, "nat or a list such as 1,3,4");
  avoiders->add_option("--order", o.order, "largest n")->required();
  avoiders->add_flag("--bfile", o.bfile, "emit 'n a(n)' lines");

  auto* asym = app.add_subcommand("asymptotics", "Dominant pole, growth rate and constant");
  pattern_option(asym);
  asym->add_option("--radius", o.radius, "contour radius for the winding number");
  asym->add_option("--samples", o.samples, "contour samples");
  asym->add_option("--curve-csv", o.curve_csv, "write the image curve to this file");

  auto* verify = app.add_subcommand("verify", "Compare the series against brute-force enumeration");
  pattern_option(verify);
  verify->add_option("--set", o.set, "nat or a list such as 1,3,4");
  verify->add_option("--max-n", o.max_n, "largest n");
  verify->add_flag("--words", o.words, "check words over [k] instead");
  verify->add_option("-k", o.k, "alphabet size");
  verify->add_option("--max-m", o.max_m, "largest word length");

  auto* words = app.add_subcommand("words", "Coefficient table for words over [k]");
  pattern_option(words);
  words->add_option("-k", o.k, "alphabet size")->required();
  words->add_option("--order", o.order, "truncation order in m")->required();
  format_option(words);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(o, out);
    if (avoiders->parsed()) return cmd_avoiders(o, out);
    if (asym->parsed()) return cmd_asymptotics(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (words->parsed()) return cmd_words(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace comppat
