// lctlab command-line front end: parse a model description, run the exact
// pipeline and the checkers, emit machine-readable reports or sweep tables.
//
// Exit codes: 0 success, 1 inequality violation, 2 input/schema error,
// 3 model validation error.

#include "lctlab/bounds.hpp"
#include "lctlab/json_io.hpp"
#include "lctlab/rng.hpp"
#include "lctlab/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using lctlab::Rat;
using json = lctlab::io::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitModel = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lctlab::SchemaError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_invariants(const std::string& path) {
  const auto model = lctlab::io::parse_model_text(read_file(path));
  const auto table = lctlab::invariant_table(model);
  std::cout << lctlab::io::invariants_document(model, table).dump(2) << "\n";
  return kExitOk;
}

int cmd_check(const std::string& path, bool numeric, std::uint64_t samples,
              std::uint64_t seed, const std::string& inject_c) {
  const auto model = lctlab::io::parse_model_text(read_file(path));
  lctlab::bounds::ReportOptions opt;
  opt.numeric = numeric;
  opt.samples = samples;
  opt.seed = seed;
  if (!inject_c.empty()) opt.inject_c = lctlab::rat_parse(inject_c);
  const auto rep = lctlab::bounds::report(model, opt);
  const auto doc = lctlab::io::make_report_document(model, rep);
  std::cout << lctlab::io::report_to_json(doc).dump(2) << "\n";
  return rep.all_exact_hold ? kExitOk : kExitViolation;
}

struct SweepRow {
  std::string id;
  lctlab::bounds::CheckReport rep;
};

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "model-id,c,rhs,margin,upper_bound,concavity_ok\n";
  for (const auto& row : rows) {
    const lctlab::bounds::CheckResult* main = nullptr;
    const lctlab::bounds::CheckResult* upper = nullptr;
    const lctlab::bounds::CheckResult* conc = nullptr;
    for (const auto& c : row.rep.checks) {
      if (c.name == "main_inequality") main = &c;
      if (c.name == "upper_bound") upper = &c;
      if (c.name == "concavity") conc = &c;
    }
    out << row.id << ',' << lctlab::ext_str(row.rep.table.c) << ','
        << (main ? lctlab::ext_str(main->rhs) : "") << ','
        << (main ? lctlab::ext_str(main->margin) : "") << ','
        << (upper ? lctlab::ext_str(upper->rhs) : "") << ','
        << (conc ? (conc->verdict == lctlab::bounds::Verdict::Holds ? "true" : "false")
                 : "")
        << '\n';
  }
}

int cmd_sweep(const std::string& family, std::size_t n, std::size_t m_max, std::size_t p_max,
              std::size_t q_max, std::size_t count, std::uint64_t seed,
              const std::string& output) {
  std::vector<SweepRow> rows;
  if (family == "pq-ideal") {
    if (p_max == 0 || q_max == 0) throw lctlab::SchemaError("empty sweep range");
    for (std::size_t p = 1; p <= p_max; ++p) {
      for (std::size_t q = 1; q <= q_max; ++q) {
        lctlab::ExponentVector a{Rat(static_cast<unsigned long>(p)), Rat(0)};
        lctlab::ExponentVector b{Rat(0), Rat(static_cast<unsigned long>(q))};
        lctlab::SingularityModel model =
            lctlab::MonomialIdeal(lctlab::NewtonPolyhedron::from_generators({a, b}));
        rows.push_back({"pq_" + std::to_string(p) + "_" + std::to_string(q),
                        lctlab::bounds::report(model)});
      }
    }
  } else if (family == "weighted-tail") {
    if (n < 2 || m_max == 0) throw lctlab::SchemaError("empty sweep range");
    for (std::size_t m = 1; m <= m_max; ++m) {
      std::vector<Rat> w(n, Rat(1));
      w.back() = Rat(static_cast<unsigned long>(m));
      lctlab::SingularityModel model = lctlab::WeightedMonomial{lctlab::Weights(w)};
      rows.push_back({"tail_n" + std::to_string(n) + "_m" + std::to_string(m),
                      lctlab::bounds::report(model)});
    }
  } else if (family == "weighted-random") {
    if (n < 2 || count == 0) throw lctlab::SchemaError("empty sweep range");
    for (std::size_t i = 0; i < count; ++i) {
      lctlab::SplitMix64 rng(lctlab::derive_seed(seed, i));
      std::vector<Rat> w;
      for (std::size_t j = 0; j < n; ++j) {
        const auto num = 1 + rng.next_below(12);
        const auto den = 1 + rng.next_below(4);
        w.emplace_back(Rat(static_cast<unsigned long>(num)) /
                       Rat(static_cast<unsigned long>(den)));
      }
      lctlab::SingularityModel model = lctlab::WeightedMonomial{lctlab::Weights(w)};
      rows.push_back({"wrand_s" + std::to_string(seed) + "_" + std::to_string(i),
                      lctlab::bounds::report(model)});
    }
  } else {
    throw lctlab::SchemaError("unknown sweep family: " + family);
  }

  bool all_ok = true;
  for (const auto& row : rows) all_ok = all_ok && row.rep.all_exact_hold;
  if (output.empty() || output == "-") {
    write_sweep(std::cout, rows);
  } else {
    std::ofstream out(output);
    if (!out) throw lctlab::SchemaError("cannot open output file: " + output);
    write_sweep(out, rows);
  }
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_bounds_eval(int lemma, const std::string& params_path) {
  json doc;
  try {
    doc = json::parse(read_file(params_path));
  } catch (const json::parse_error& e) {
    throw lctlab::SchemaError(std::string("JSON parse error: ") + e.what());
  }
  lctlab::bounds::LemmaParams p;
  const auto get = [&](const char* key, double fallback, bool required = false) {
    if (doc.contains(key)) return doc.at(key).get<double>();
    if (required) throw lctlab::SchemaError(std::string("missing parameter: ") + key);
    return fallback;
  };
  p.n = doc.contains("n") ? doc.at("n").get<std::size_t>() : 2;
  p.energy_bound = get("A", 1.0);
  p.slice_bound = get("B", 1.0);
  p.diameter = get("delta", 1.0);
  p.c_n_const = get("c_n_const", 1.0);
  p.volume = get("vol", 0.0);
  json out;
  out["lemma"] = lemma;
  out["n"] = p.n;
  out["version"] = lctlab::kVersion;
  if (lemma == 23) {
    const double t = get("t", 0.0, true);
    out["t"] = t;
    out["value"] = lctlab::bounds::lemma23_rhs(t, p);
  } else if (lemma == 24) {
    p.c = get("c", 1.0, true);
    p.lambda = get("lambda", 0.0, true);
    out["c"] = p.c;
    out["lambda"] = p.lambda;
    out["jn_integral"] = lctlab::rat_str(lctlab::bounds::jn_integral(p.n));
    out["value"] = lctlab::bounds::lemma24_rhs(p);
  } else {
    throw lctlab::SchemaError("--lemma must be 23 or 24");
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lctlab: exact thresholds, masses and inequality checks for "
               "weighted-monomial and monomial-ideal singularities"};
  app.set_version_flag("--version", lctlab::kVersion);
  app.require_subcommand(1);

  std::string input_path;
  auto* inv = app.add_subcommand("invariants", "emit the invariant table of a model");
  inv->add_option("file", input_path, "model spec JSON file")->required();

  std::string check_path, inject_c;
  bool numeric = false;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 20260808;
  auto* check = app.add_subcommand("check", "run every inequality check on a model");
  check->add_option("file", check_path, "model spec JSON file")->required();
  check->add_flag("--numeric", numeric, "include numeric cross-checks");
  check->add_option("--samples", samples, "Monte-Carlo samples per estimate");
  check->add_option("--seed", seed, "seed for every randomized estimate");
  check->add_option("--inject-c", inject_c,
                    "test hook: override the exact threshold before checking");

  std::string family, output;
  std::size_t sweep_n = 2, m_max = 10, p_max = 6, q_max = 6, count = 0;
  std::uint64_t sweep_seed = 20260808;
  auto* sweep = app.add_subcommand("sweep", "tabulate a model family as CSV");
  sweep->add_option("--family", family, "pq-ideal | weighted-tail | weighted-random")
      ->required();
  sweep->add_option("--n", sweep_n, "dimension (weighted families)");
  sweep->add_option("--m-max", m_max, "largest tail weight (weighted-tail)");
  sweep->add_option("--p-max", p_max, "largest p (pq-ideal)");
  sweep->add_option("--q-max", q_max, "largest q (pq-ideal)");
  sweep->add_option("--count", count, "family size (weighted-random)");
  sweep->add_option("--seed", sweep_seed, "seed (weighted-random)");
  sweep->add_option("--output", output, "CSV path ('-' = stdout)");

  int lemma = 0;
  std::string params_path;
  auto* be = app.add_subcommand("bounds-eval", "evaluate a lemma bound at given parameters");
  be->add_option("--lemma", lemma, "23 or 24")->required();
  be->add_option("--params", params_path, "parameter JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(inv)) return cmd_invariants(input_path);
    if (app.got_subcommand(check)) return cmd_check(check_path, numeric, samples, seed, inject_c);
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(family, sweep_n, m_max, p_max, q_max, count, sweep_seed, output);
    }
    if (app.got_subcommand(be)) return cmd_bounds_eval(lemma, params_path);
  } catch (const lctlab::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const lctlab::ValidationError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
