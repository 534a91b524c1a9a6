#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isotropica/algebra.hpp"
#include "isotropica/bounds.hpp"
#include "isotropica/errors.hpp"
#include "isotropica/incidence.hpp"
#include "isotropica/io.hpp"
#include "isotropica/main_lemma.hpp"
#include "isotropica/pluecker.hpp"
#include "isotropica/schubert.hpp"
#include "isotropica/search.hpp"

namespace {

using namespace isotropica;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

/// A formula or invariant check failed; the message carries expected and actual values.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string output = "-";
  std::string format;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  bool serial = false;
  json extra = json::object();

  Budget resolved_budget() const { return budget ? Budget{*budget} : Budget::from_env(); }
  Execution exec() const { return serial ? Execution::serial : Execution::parallel; }

  json metadata() const {
    json config = extra;
    config["format"] = format;
    config["budget"] = resolved_budget().max_tests;
    config["serial"] = serial;
    return json{{"command", command}, {"config", config}, {"artifact_version", ISOTROPICA_VERSION}, {"seed", seed}};
  }
};

void emit(const RunConfig& cfg, const std::string& contents) {
  if (cfg.output == "-") {
    std::cout << contents;
  } else {
    io::write_atomically(cfg.output, contents);
  }
}

void emit_json(const RunConfig& cfg, json result) {
  auto doc = cfg.metadata();
  doc["result"] = std::move(result);
  emit(cfg, doc.dump(2) + "\n");
}

void emit_csv(const RunConfig& cfg, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows, const json& summary = json::object()) {
  auto meta = cfg.metadata();
  if (!summary.empty()) meta["summary"] = summary;
  std::string out = "# " + meta.dump() + "\r\n" + io::csv_line(header);
  for (const auto& r : rows) out += io::csv_line(r);
  emit(cfg, out);
}

std::vector<std::uint32_t> to_primes(const std::vector<std::uint32_t>& qs) {
  for (auto q : qs) FieldSpec::prime(q);
  return qs;
}

// -- commands ---------------------------------------------------------------

void bound_table_cmd(RunConfig& cfg, std::int64_t s_max) {
  cfg.extra["s_max"] = s_max;
  const auto rows = bound_table(s_max);
  for (const auto& r : rows) {
    const auto forced = sandwich_check(r.s);
    if (forced != r.l_value) {
      throw Mismatch("s = " + std::to_string(r.s) + ": bounds force " + std::to_string(forced) + ", formula gives " +
                     std::to_string(r.l_value));
    }
  }
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back(json{{"s", r.s},
                         {"l", r.l_value},
                         {"upper6", r.upper_lemma6},
                         {"lower7", r.lower_lemma7},
                         {"lower8", io::rational_string(r.lower_lemma8)},
                         {"regime", to_string(r.regime)},
                         {"g_complex", r.l_value}});
    emit_json(cfg, out);
    return;
  }
  std::vector<std::vector<std::string>> lines;
  for (const auto& r : rows) lines.push_back(io::bound_row_fields(r));
  emit_csv(cfg, io::bound_table_header(), lines);
}

void heisenberg_cmd(RunConfig& cfg, std::size_t m, std::uint32_t q) {
  cfg.extra["m"] = m;
  cfg.extra["q"] = q;
  const auto a = heisenberg(m, PrimeField(q));
  const auto report = max_abelian(a, cfg.resolved_budget(), SearchMethod::exhaustive, cfg.seed, cfg.exec());
  const auto c = center(a);
  emit_json(cfg, json{{"algebra", io::to_json(a)}, {"report", io::to_json(report)}, {"center_dim", c}});
  if (report.exhaustive_certified && report.max_abelian_dim != m + 1) {
    throw Mismatch("h_" + std::to_string(m) + ": expected max abelian dimension " + std::to_string(m + 1) +
                   ", found " + std::to_string(report.max_abelian_dim));
  }
  if (c != 1) throw Mismatch("h_" + std::to_string(m) + ": expected center dimension 1, found " + std::to_string(c));
}

void max_abelian_cmd(RunConfig& cfg, const std::string& path, const std::string& method) {
  cfg.extra["algebra"] = path;
  cfg.extra["method"] = method;
  const auto a = io::algebra_from_json(io::read_json_file(path));
  const auto report = max_abelian(a, cfg.resolved_budget(), parse_search_method(method), cfg.seed, cfg.exec());
  emit_json(cfg, io::to_json(report));
}

void find_isotropic_cmd(RunConfig& cfg, const std::string& path, std::size_t k, const std::string& method,
                        std::uint64_t restarts) {
  cfg.extra["forms"] = path;
  cfg.extra["k"] = k;
  cfg.extra["method"] = method;
  const auto phi = io::forms_from_json(io::read_json_file(path));
  const auto m = parse_search_method(method);
  SearchOutcome out;
  if (m == SearchMethod::exhaustive) {
    out = exhaustive_isotropic(phi, k, cfg.resolved_budget(), cfg.exec());
  } else {
    std::optional<SubspaceFp> best;
    if (m == SearchMethod::greedy) {
      best = cfg.seed == 0 ? greedy_isotropic(phi) : greedy_isotropic(phi, cfg.seed);
      out.trials = 1;
    } else {
      cfg.extra["restarts"] = restarts;
      best = randomized_isotropic(phi, cfg.seed, restarts).witness;
      out.trials = restarts;
    }
    out.method = m;
    out.k_target = k;
    if (best && best->dim() >= k) {
      MatrixFp rows(phi.field(), 0, phi.n());
      for (std::size_t i = 0; i < k; ++i) rows.append_row(best->basis().row(i));
      out.found = true;
      out.witness = SubspaceFp::span(std::move(rows));
    }
  }
  out.seed = cfg.seed;
  if (out.found && !is_isotropic(phi, *out.witness)) throw Mismatch("search returned a non-isotropic witness");
  emit_json(cfg, io::to_json(out));
}

void hunt_lower_cmd(RunConfig& cfg, std::int64_t s, std::uint32_t q, std::uint64_t trials) {
  cfg.extra["s"] = s;
  cfg.extra["q"] = q;
  cfg.extra["trials"] = trials;
  const auto params = lemma8_params(s);
  const auto hunt = witness_hunt_no_isotropic(static_cast<std::size_t>(params.n), static_cast<std::size_t>(params.t),
                                              static_cast<std::size_t>(params.k), q, trials, cfg.seed,
                                              cfg.resolved_budget(), cfg.exec());
  const json summary{{"lemma8", {{"s", params.s}, {"t", params.t}, {"k", params.k}, {"n", params.n},
                                 {"dim_achieved", params.dim_achieved}}},
                     {"successes", hunt.successes}};
  if (cfg.format == "json") {
    json result = summary;
    result["n"] = hunt.n;
    result["t"] = hunt.t;
    result["k"] = hunt.k;
    result["q"] = hunt.q;
    result["seed"] = hunt.seed;
    result["trials"] = hunt.trials;
    result["found_tuple"] = hunt.tuple ? io::to_json(*hunt.tuple) : json(nullptr);
    result["success_rate"] = io::format_rate(hunt.success_rate());
    emit_json(cfg, result);
    return;
  }
  emit_csv(cfg, io::hunt_header(), {io::hunt_fields(hunt)}, summary);
}

void verify_pluecker_cmd(RunConfig& cfg, std::size_t n, std::size_t k, std::uint32_t q) {
  cfg.extra["n"] = n;
  cfg.extra["k"] = k;
  cfg.extra["q"] = q;
  const auto sweep = verify_pluecker_sweep(n, k, q, cfg.resolved_budget());
  const auto expected = gaussian_binomial(n, k, q);
  emit_json(cfg, json{{"n", n},
                      {"k", k},
                      {"q", q},
                      {"total", sweep.total},
                      {"expected_total", expected.get_str()},
                      {"round_trips", sweep.round_trips},
                      {"relations_ok", sweep.relations_ok},
                      {"passed", sweep.passed()}});
  if (mpz_class(static_cast<unsigned long>(sweep.total)) != expected)
    throw Mismatch("enumerated " + std::to_string(sweep.total) + " points, Gaussian binomial gives " + expected.get_str());
  if (!sweep.passed()) {
    throw Mismatch(std::to_string(sweep.round_trips) + "/" + std::to_string(sweep.total) + " round trips, " +
                   std::to_string(sweep.relations_ok) + "/" + std::to_string(sweep.total) + " relation checks");
  }
}

template <class Field, class Draw>
json dims_report(const Field& field, std::size_t n, std::size_t k, std::size_t t, std::optional<std::size_t> s,
                 std::size_t samples, Draw draw) {
  const std::size_t predicted = s ? predicted_vanishing_dim_pair(n, k, t, *s) : predicted_vanishing_dim(n, k, t);
  std::size_t agree = 0;
  std::vector<std::size_t> observed;
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Subspace<Field>> us;
    if (s) {
      auto [u1, u2] = split_pair(draw(2 * k - *s), k, *s);
      if (intersection_dim(u1, u2) != *s) throw InvariantViolation("pair does not meet in dimension s");
      us = {u1, u2};
    } else {
      us = {draw(k)};
    }
    const auto d = vanishing_space_dim(std::span<const Subspace<Field>>(us), n, t);
    observed.push_back(d);
    if (d == predicted) ++agree;
  }
  return json{{"field", field.spec().name()}, {"predicted", predicted}, {"agree", agree},
              {"samples", samples}, {"observed", observed}};
}

void verify_dims_cmd(RunConfig& cfg, std::size_t n, std::size_t k, std::size_t t, std::optional<std::size_t> s,
                     std::uint32_t q, std::size_t samples) {
  cfg.extra["n"] = n;
  cfg.extra["k"] = k;
  cfg.extra["t"] = t;
  cfg.extra["q"] = q;
  cfg.extra["samples"] = samples;
  if (s) cfg.extra["s"] = *s;
  const PrimeField fp(q);
  auto rng_q = stream_engine(cfg.seed, 0);
  auto rng_p = stream_engine(cfg.seed, 1);
  const auto over_q =
      dims_report(RationalField{}, n, k, t, s, samples, [&](std::size_t d) { return random_subspace_q(n, d, rng_q); });
  const auto over_p =
      dims_report(fp, n, k, t, s, samples, [&](std::size_t d) { return random_subspace(n, d, fp, rng_p); });
  emit_json(cfg, json{{"rational", over_q}, {"prime", over_p}});
  for (const auto& r : {over_q, over_p}) {
    if (r.at("agree").get<std::size_t>() != samples) {
      throw Mismatch("over " + r.at("field").get<std::string>() + ": " + std::to_string(r.at("agree").get<std::size_t>()) +
                     "/" + std::to_string(samples) + " samples have dimension " +
                     std::to_string(r.at("predicted").get<std::size_t>()));
    }
  }
}

void count_incidence_cmd(RunConfig& cfg, std::size_t n, std::size_t k, std::size_t t,
                         const std::vector<std::uint32_t>& qs) {
  cfg.extra["n"] = n;
  cfg.extra["k"] = k;
  cfg.extra["t"] = t;
  cfg.extra["q_list"] = qs;
  const auto budget = cfg.resolved_budget();
  std::vector<IncidenceCount> counts;
  for (auto q : to_primes(qs)) counts.push_back(count_incidence_points(n, k, t, q, budget, cfg.exec()));
  const auto degree = incidence_degree_check(n, k, t, budget, cfg.exec());
  json degree_json{{"predicted_dim", degree.predicted_dim}, {"fitted_degree", degree.fitted_degree}};
  json sample_qs = json::array();
  for (const auto& c : degree.samples) sample_qs.push_back(c.q);
  degree_json["sample_primes"] = sample_qs;
  if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : counts) rows.push_back(io::incidence_fields(c));
    emit_csv(cfg, io::incidence_header(), rows, json{{"degree", degree_json}});
  } else {
    json rows = json::array();
    for (const auto& c : counts) rows.push_back(io::to_json(c));
    emit_json(cfg, json{{"counts", rows}, {"degree", degree_json}});
  }
  if (!degree.matches()) {
    throw Mismatch("incidence variety: predicted dimension " + std::to_string(degree.predicted_dim) +
                   ", fitted degree " + std::to_string(degree.fitted_degree));
  }
}

void schubert_cmd(RunConfig& cfg, std::size_t n, std::size_t k, const std::vector<std::size_t>& dims,
                  const std::vector<std::uint32_t>& qs) {
  cfg.extra["n"] = n;
  cfg.extra["k"] = k;
  cfg.extra["flag_dims"] = dims;
  cfg.extra["q_list"] = qs;
  if (dims.size() != k) throw std::invalid_argument("--flag-dims needs exactly k entries");
  require_flag_dims(n, dims);
  json counts = json::array();
  for (auto q : to_primes(qs))
    counts.push_back(json{{"q", q}, {"count", count_schubert_cell(n, dims, q, cfg.exec())}});
  const auto check = schubert_dimension_check(n, dims, cfg.resolved_budget(), cfg.exec());
  json fitted_counts = json::array();
  for (const auto& c : check.counts) fitted_counts.push_back(c.get_str());
  emit_json(cfg, json{{"counts", counts},
                      {"formula_dim", check.formula_dim},
                      {"counted_degree", check.counted_degree},
                      {"sample_primes", check.primes},
                      {"sample_counts", fitted_counts}});
  if (!check.matches()) {
    throw Mismatch("Schubert cell: formula dimension " + std::to_string(check.formula_dim) + ", counted degree " +
                   std::to_string(check.counted_degree));
  }
}

void main_lemma_cmd(RunConfig& cfg, std::size_t n_max, const std::vector<std::size_t>& ts,
                    const std::vector<std::uint32_t>& qs, std::uint64_t tuples) {
  cfg.extra["n_max"] = n_max;
  cfg.extra["t_list"] = ts;
  cfg.extra["q_list"] = qs;
  cfg.extra["tuples"] = tuples;
  const auto report = main_lemma_table(n_max, ts, to_primes(qs), tuples, cfg.seed, cfg.resolved_budget(), cfg.exec());
  const json summary{{"witnesses_checked", report.witnesses_checked},
                     {"witness_failures", report.witness_failures},
                     {"monotonicity_violations", report.monotonicity_violations},
                     {"consistency_violations", report.consistency_violations},
                     {"uncertified", report.uncertified}};
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : report.rows)
      rows.push_back(json{{"n", r.n}, {"t", r.t}, {"k", r.k}, {"q", r.q}, {"tuples", r.tuples},
                          {"found", r.found}, {"rate", io::format_rate(r.rate())}});
    emit_json(cfg, json{{"rows", rows}, {"summary", summary}});
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : report.rows)
      rows.push_back({std::to_string(r.n), std::to_string(r.t), std::to_string(r.k), std::to_string(r.q),
                      std::to_string(r.tuples), std::to_string(r.found), io::format_rate(r.rate())});
    emit_csv(cfg, {"n", "t", "k", "q", "tuples", "found", "rate"}, rows, summary);
  }
  if (!report.clean()) throw Mismatch("search invariants violated: " + summary.dump());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class-2 nilpotent algebras, isotropic subspaces and the bounds on their abelian subalgebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ISOTROPICA_VERSION));

  RunConfig cfg;
  std::function<void()> action;

  std::map<std::string, std::string> default_format;
  // format "json" means json only; "csv" or "json+csv" also offer --format
  auto common = [&](CLI::App* sub, const std::string& format) {
    const bool tabular = format != "json";
    default_format[sub->get_name()] = format == "csv" ? "csv" : "json";
    sub->add_option("--output,-o", cfg.output, "Output file, '-' for stdout")->capture_default_str();
    if (tabular)
      sub->add_option("--format", cfg.format, "json or csv (default " + default_format[sub->get_name()] + ")")
          ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "Maximum subspaces tested (default: ISOTROPICA_BUDGET or 10^7)");
    sub->add_flag("--serial", cfg.serial, "Use the serial reference kernels");
  };

  std::int64_t s_max = 20;
  auto* bt = app.add_subcommand("bound-table", "Table of l(s) against the upper and lower bounds");
  bt->add_option("--s-max", s_max)->required()->check(CLI::PositiveNumber);
  bt->callback([&] {
    cfg.command = "bound-table";
    action = [&] { bound_table_cmd(cfg, s_max); };
  });

  std::size_t m = 1;
  std::uint32_t q = 2;
  auto* hb = app.add_subcommand("heisenberg", "Build h_m and compute its largest abelian subalgebra");
  hb->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  hb->add_option("--q", q)->required();
  hb->callback([&] {
    cfg.command = "heisenberg";
    action = [&] { heisenberg_cmd(cfg, m, q); };
  });

  std::string path;
  std::string method = "exhaustive";
  auto* ma = app.add_subcommand("max-abelian", "Largest abelian subalgebra of an algebra read from JSON");
  ma->add_option("--algebra", path)->required()->check(CLI::ExistingFile);
  ma->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "greedy", "random"}))->capture_default_str();
  ma->callback([&] {
    cfg.command = "max-abelian";
    action = [&] { max_abelian_cmd(cfg, path, method); };
  });

  std::size_t k = 1;
  std::uint64_t restarts = 16;
  auto* fi = app.add_subcommand("find-isotropic", "Search for a common isotropic k-subspace");
  fi->add_option("--forms", path)->required()->check(CLI::ExistingFile);
  fi->add_option("--k", k)->required();
  fi->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "greedy", "random"}))->capture_default_str();
  fi->add_option("--restarts", restarts, "Restarts for --method random")->capture_default_str();
  fi->callback([&] {
    cfg.command = "find-isotropic";
    action = [&] { find_isotropic_cmd(cfg, path, k, method, restarts); };
  });

  std::int64_t s = 2;
  std::uint64_t trials = 100;
  auto* hl = app.add_subcommand("hunt-lower", "Hunt for tuples without an isotropic k-subspace, parameters from s");
  hl->add_option("--s", s)->required();
  hl->add_option("--q", q)->required();
  hl->add_option("--trials", trials)->capture_default_str();
  hl->callback([&] {
    cfg.command = "hunt-lower";
    action = [&] { hunt_lower_cmd(cfg, s, q, trials); };
  });

  std::size_t n = 4;
  auto* vp = app.add_subcommand("verify-pluecker", "Round-trip and relation check over all of G(k,n)(F_q)");
  vp->add_option("--n", n)->required();
  vp->add_option("--k", k)->required();
  vp->add_option("--q", q)->required();
  vp->callback([&] {
    cfg.command = "verify-pluecker";
    action = [&] { verify_pluecker_cmd(cfg, n, k, q); };
  });

  std::size_t t = 1;
  std::optional<std::size_t> pair_s;
  std::size_t samples = 20;
  std::uint32_t dims_q = 3;
  auto* vd = app.add_subcommand("verify-dims", "Dimension of the tuples vanishing on one or two subspaces");
  vd->add_option("--n", n)->required();
  vd->add_option("--k", k)->required();
  vd->add_option("--t", t)->required()->check(CLI::PositiveNumber);
  vd->add_option("--s", pair_s, "Use pairs meeting in dimension s");
  vd->add_option("--q", dims_q, "Prime field used alongside Q")->capture_default_str();
  vd->add_option("--samples", samples)->capture_default_str();
  vd->callback([&] {
    cfg.command = "verify-dims";
    action = [&] { verify_dims_cmd(cfg, n, k, t, pair_s, dims_q, samples); };
  });

  std::vector<std::uint32_t> q_list{2, 3, 5};
  auto* ci = app.add_subcommand("count-incidence", "Point counts of the incidence variety and their degree");
  ci->add_option("--n", n)->required();
  ci->add_option("--k", k)->required();
  ci->add_option("--t", t)->required()->check(CLI::PositiveNumber);
  ci->add_option("--q-list", q_list)->delimiter(',')->capture_default_str();
  ci->callback([&] {
    cfg.command = "count-incidence";
    action = [&] { count_incidence_cmd(cfg, n, k, t, q_list); };
  });

  std::vector<std::size_t> flag_dims;
  auto* sc = app.add_subcommand("schubert", "Schubert cell dimension against point-count degree");
  sc->add_option("--n", n)->required();
  sc->add_option("--k", k)->required();
  sc->add_option("--flag-dims", flag_dims)->required()->delimiter(',');
  sc->add_option("--q-list", q_list)->delimiter(',')->capture_default_str();
  sc->callback([&] {
    cfg.command = "schubert";
    action = [&] { schubert_cmd(cfg, n, k, flag_dims, q_list); };
  });

  std::size_t n_max = 6;
  std::vector<std::size_t> t_list{2, 3};
  std::uint64_t tuples = 100;
  auto* ml = app.add_subcommand("main-lemma-table", "Witness rates for isotropic subspaces in the threshold range");
  ml->add_option("--n-max", n_max)->capture_default_str();
  ml->add_option("--t-list", t_list)->delimiter(',')->capture_default_str();
  ml->add_option("--q-list", q_list)->delimiter(',')->capture_default_str();
  ml->add_option("--tuples", tuples)->capture_default_str();
  ml->callback([&] {
    cfg.command = "main-lemma-table";
    action = [&] { main_lemma_cmd(cfg, n_max, t_list, q_list, tuples); };
  });

  common(bt, "csv");
  common(hb, "json");
  common(ma, "json");
  common(fi, "json");
  common(hl, "csv");
  common(vp, "json");
  common(vd, "json");
  common(ci, "json+csv");
  common(sc, "json");
  common(ml, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the generic error code
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  if (cfg.format.empty()) cfg.format = default_format.at(cfg.command);
  try {
    action();
    return kExitOk;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
