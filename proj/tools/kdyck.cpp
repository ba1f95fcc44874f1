// Command-line front end: counts, tables, bijections and the k = 1 law of J.
//
// JSON is the default output; --format csv prints a header row and
// comma-separated rows. Big integers are always decimal strings.
// Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kdyck/bijections.hpp"
#include "kdyck/brute_force.hpp"
#include "kdyck/closed_forms.hpp"
#include "kdyck/distribution.hpp"
#include "kdyck/series.hpp"
#include "kdyck/strip.hpp"
#include "kdyck/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace kdyck;

constexpr int kExitMismatch = 2;

std::string float_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string float_str(const mpq_class& q) { return float_str(q.get_d()); }

json rational(const mpq_class& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"float", float_str(q)}};
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void print_csv(const Table& t) {
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void print_json(const std::string& command, const json& params, const json& result) {
  json out;
  out["command"] = command;
  out["parameters"] = params;
  out["result"] = result;
  std::cout << out.dump(2) << '\n';
}

struct Format {
  std::string value = "json";
  bool csv() const { return value == "csv"; }
};

void add_format(CLI::App* cmd, Format& f) {
  cmd->add_option("--format", f.value, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

Path parse_path(const std::string& text, int k) { return Path::parse(text, k); }

TupleDecomposition parse_tuple(const std::string& text, int k) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tuple is not valid JSON: ") + e.what());
  }
  if (!arr.is_array() || arr.empty()) throw ParseError("tuple must be a non-empty JSON array of U/D strings");
  TupleDecomposition tup{k, {}};
  for (const auto& item : arr) {
    if (!item.is_string()) throw ParseError("tuple entries must be strings");
    tup.parts.push_back(parse_path(item.get<std::string>(), k));
  }
  return tup;
}

json tuple_json(const TupleDecomposition& tup) {
  json arr = json::array();
  for (const auto& p : tup.parts) arr.push_back(p.str());
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of k-Dyck paths bounded below by -t"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Format fmt;
  int k = 1, t = 0, m = 0, h = 0, level = 0, len = 0;
  long n = 0, nmax = 10, max_s = -1;
  std::string method = "formula", path_text, tuple_text, profile = "quick";
  bool limit = false;
  std::optional<long> dist_n;

  auto add_k = [&](CLI::App* c) { c->add_option("--k", k, "Down-step size")->check(CLI::PositiveNumber); };
  auto add_t = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--t", t, "Lower boundary -t")->check(CLI::NonNegativeNumber);
    if (required) o->required();
  };

  auto* count = app.add_subcommand("count", "Number of k_t-Dyck paths of length (k+1)n");
  add_k(count);
  add_t(count, false);
  count->add_option("--n", n, "Half-length index")->check(CLI::NonNegativeNumber);
  count->add_option("--method", method)->check(CLI::IsMember({"formula", "series", "brute", "all"}));
  add_format(count, fmt);

  auto* table = app.add_subcommand("table", "Counts for n = 0..nmax");
  add_k(table);
  add_t(table, false);
  table->add_option("--nmax", nmax)->check(CLI::NonNegativeNumber);
  add_format(table, fmt);

  auto* dpoly = app.add_subcommand("dpoly", "Coefficients of D_m in x = z^(k+1)");
  add_k(dpoly);
  dpoly->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  add_format(dpoly, fmt);

  auto* ratio = app.add_subcommand("ratio", "count_general / [x^n]y^(t+1) and its limit");
  add_k(ratio);
  add_t(ratio, true);
  ratio->add_option("--nmax", nmax)->check(CLI::NonNegativeNumber);
  add_format(ratio, fmt);

  auto* dist = app.add_subcommand("dist", "k = 1 law of s = (J - t)/2");
  add_t(dist, true);
  auto* dist_n_opt = dist->add_option("--n", dist_n, "Finite half-length")->check(CLI::NonNegativeNumber);
  auto* limit_opt = dist->add_flag("--limit", limit, "Limiting law");
  dist->add_option("--max-s", max_s, "Truncation for --limit (default: residual < 1e-12)");
  dist_n_opt->excludes(limit_opt);
  add_format(dist, fmt);

  auto* strip = app.add_subcommand("strip", "Paths confined to [-t, h] ending on level i");
  add_k(strip);
  add_t(strip, true);
  strip->add_option("--h", h)->required()->check(CLI::NonNegativeNumber);
  strip->add_option("--i", level)->required();
  strip->add_option("--len", len)->required()->check(CLI::NonNegativeNumber);
  add_format(strip, fmt);

  auto* biject = app.add_subcommand("biject", "k_t path <-> (t+1)-tuple of k-Dyck paths (t <= k)");
  add_k(biject);
  add_t(biject, true);
  auto* path_opt = biject->add_option("--path", path_text, "U/D string");
  auto* tuple_opt = biject->add_option("--tuple", tuple_text, "JSON array of U/D strings");
  path_opt->excludes(tuple_opt);
  add_format(biject, fmt);

  auto* split = app.add_subcommand("split-fg", "First-arrival split of a path from 0 to t");
  add_k(split);
  add_t(split, true);
  split->add_option("--path", path_text)->required();
  add_format(split, fmt);

  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle grid");
  verify_cmd->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  add_format(verify_cmd, fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*count) {
      json params{{"k", k}, {"t", t}, {"n", n}, {"method", method}};
      std::vector<std::pair<std::string, mpz_class>> results;
      if (method == "formula" || method == "all") results.emplace_back("formula", count_general(k, t, n));
      if (method == "series" || method == "all") {
        const Series y = solve_y(k, n).series;
        const Series gf = mul(Series::from_poly(d_poly(k, t).coeffs, n), pow(y, t + 1));
        results.emplace_back("series", gf[n]);
      }
      if (method == "brute" || method == "all") {
        long total = 0;
        brute::KtPathStream stream({k, t, static_cast<int>(n), {}, {}});
        while (stream.next()) ++total;
        results.emplace_back("brute", mpz_class(total));
      }
      bool agree = true;
      for (const auto& r : results) agree = agree && r.second == results.front().second;
      if (fmt.csv()) {
        Table tab{{"method", "count"}, {}};
        for (const auto& r : results) tab.rows.push_back({r.first, r.second.get_str()});
        print_csv(tab);
      } else {
        json res;
        for (const auto& r : results) res[r.first] = r.second.get_str();
        res["length"] = (k + 1) * n;
        res["agree"] = agree;
        print_json("count", params, res);
      }
      return agree ? 0 : kExitMismatch;
    }

    if (*table) {
      Table tab{{"n", "length", "count", "fuss_catalan_t_plus_1"}, {}};
      for (long i = 0; i <= nmax; ++i)
        tab.rows.push_back({std::to_string(i), std::to_string((k + 1) * i), count_general(k, t, i).get_str(),
                            ycoeff(k, t + 1, i).get_str()});
      if (fmt.csv()) {
        print_csv(tab);
      } else {
        json rows = json::array();
        for (const auto& r : tab.rows) rows.push_back({{"n", std::stol(r[0])}, {"length", std::stol(r[1])}, {"count", r[2]}, {"fuss_catalan_t_plus_1", r[3]}});
        print_json("table", {{"k", k}, {"t", t}, {"nmax", nmax}}, rows);
      }
      return 0;
    }

    if (*dpoly) {
      const DPoly d = d_poly(k, m);
      if (fmt.csv()) {
        Table tab{{"power", "coefficient"}, {}};
        for (std::size_t l = 0; l < d.coeffs.size(); ++l) tab.rows.push_back({std::to_string(l), d.coeffs[l].get_str()});
        print_csv(tab);
      } else {
        json coeffs = json::array();
        for (const auto& c : d.coeffs) coeffs.push_back(c.get_str());
        print_json("dpoly", {{"k", k}, {"m", m}}, {{"coeffs", coeffs}});
      }
      return 0;
    }

    if (*ratio) {
      const RatioReport rep = ratio_report(k, t, nmax);
      if (fmt.csv()) {
        Table tab{{"n", "num", "den", "float"}, {}};
        for (std::size_t i = 0; i < rep.quotients.size(); ++i) {
          const auto& q = rep.quotients[i];
          tab.rows.push_back({std::to_string(i), q.get_num().get_str(), q.get_den().get_str(), float_str(q)});
        }
        tab.rows.push_back({"limit", rep.limit.get_num().get_str(), rep.limit.get_den().get_str(), float_str(rep.limit_float)});
        print_csv(tab);
      } else {
        json qs = json::array();
        for (std::size_t i = 0; i < rep.quotients.size(); ++i) {
          json row = rational(rep.quotients[i]);
          row["n"] = i;
          qs.push_back(row);
        }
        print_json("ratio", {{"k", k}, {"t", t}, {"nmax", nmax}},
                   {{"quotients", qs}, {"rho", rational(rho(k))}, {"limit", rational(rep.limit)}});
      }
      return 0;
    }

    if (*dist) {
      if (!dist_n && !limit) throw std::invalid_argument("dist needs --n or --limit");
      const DistributionTable d = dist_n ? finite_dist(t, *dist_n) : (max_s >= 0 ? limit_dist(t, max_s) : limit_dist(t));
      Table tab{{"s", "J", "mass_num", "mass_den", "mass_float"}, {}};
      for (std::size_t s = 0; s < d.masses.size(); ++s) {
        const std::string num = d.is_limit() ? d.masses[s].get_num().get_str() : d.counts[s].get_str();
        const std::string den = d.is_limit() ? d.masses[s].get_den().get_str() : d.total.get_str();
        tab.rows.push_back({std::to_string(s), std::to_string(d.j_value(s)), num, den, float_str(d.masses[s])});
      }
      if (fmt.csv()) {
        print_csv(tab);
      } else {
        json rows = json::array();
        for (const auto& r : tab.rows)
          rows.push_back({{"s", std::stol(r[0])}, {"J", std::stol(r[1])}, {"mass_num", r[2]}, {"mass_den", r[3]}, {"mass_float", r[4]}});
        json res{{"masses", rows}, {d.is_limit() ? "truncated_mean_J" : "mean_J", rational(d.mean_j())}};
        if (d.is_limit()) {
          res["residual"] = rational(d.residual);
          res["asymptotic_mean_J"] = rational(mean_j(t));
        } else {
          res["total"] = d.total.get_str();
        }
        json params{{"t", t}};
        if (dist_n) params["n"] = *dist_n; else params["limit"] = true;
        print_json("dist", params, res);
      }
      return 0;
    }

    if (*strip) {
      const StripSpec spec{k, t, h, level, len};
      const LengthCounts dp = phi_series_dp(spec);
      const LengthCounts cr = phi_series_cramer(spec);
      const bool agree = dp == cr;
      if (fmt.csv()) {
        Table tab{{"length", "dp", "cramer"}, {}};
        for (int i = 0; i <= len; ++i) tab.rows.push_back({std::to_string(i), dp[i].get_str(), cr[i].get_str()});
        print_csv(tab);
      } else {
        json rows = json::array();
        for (int i = 0; i <= len; ++i) rows.push_back({{"length", i}, {"dp", dp[i].get_str()}, {"cramer", cr[i].get_str()}});
        print_json("strip", {{"k", k}, {"t", t}, {"h", h}, {"i", level}, {"len", len}},
                   {{"counts", rows}, {"product_form", product_form_applies(spec)}, {"agree", agree}});
      }
      return agree ? 0 : kExitMismatch;
    }

    if (*biject) {
      if (!*path_opt && !*tuple_opt) throw std::invalid_argument("biject needs --path or --tuple");
      json params{{"k", k}, {"t", t}};
      if (*path_opt) {
        const TupleDecomposition tup = to_tuple(parse_path(path_text, k), t);
        params["path"] = path_text;
        if (fmt.csv()) {
          Table tab{{"index", "part"}, {}};
          for (std::size_t i = 0; i < tup.parts.size(); ++i) tab.rows.push_back({std::to_string(i), tup.parts[i].str()});
          print_csv(tab);
        } else {
          print_json("biject", params, {{"tuple", tuple_json(tup)}});
        }
      } else {
        const TupleDecomposition tup = parse_tuple(tuple_text, k);
        if (tup.t() != t) throw std::invalid_argument("tuple has " + std::to_string(tup.parts.size()) + " parts, expected t+1");
        const Path p = from_tuple(tup);
        params["tuple"] = tuple_json(tup);
        if (fmt.csv()) {
          print_csv({{"path"}, {{p.str()}}});
        } else {
          print_json("biject", params, {{"path", p.str()}});
        }
      }
      return 0;
    }

    if (*split) {
      const FGSplit fg = split_fg(parse_path(path_text, k), t);
      const long j = static_cast<long>(fg.f.size());
      if (fmt.csv()) {
        print_csv({{"f", "g", "J"}, {{fg.f.str(), fg.g.str(), std::to_string(j)}}});
      } else {
        print_json("split-fg", {{"k", k}, {"t", t}, {"path", path_text}}, {{"f", fg.f.str()}, {"g", fg.g.str()}, {"J", j}});
      }
      return 0;
    }

    if (*verify_cmd) {
      const auto results = verify::run(profile == "full" ? verify::Profile::Full : verify::Profile::Quick);
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (fmt.csv()) {
        Table tab{{"check", "status", "detail"}, {}};
        for (const auto& r : results) tab.rows.push_back({"\"" + r.name + "\"", r.passed ? "pass" : "FAIL", "\"" + r.detail + "\""});
        print_csv(tab);
      } else {
        json checks = json::array();
        for (const auto& r : results) checks.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        print_json("verify", {{"profile", profile}}, {{"checks", checks}, {"all_passed", all}});
      }
      return all ? 0 : kExitMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
