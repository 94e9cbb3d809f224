// Python bindings for the main operations. Exact rationals cross the
// boundary as canonical "p/q" strings; structured results as plain dicts
// mirroring the CLI's JSON documents.

#include "lctlab/bounds.hpp"
#include "lctlab/json_io.hpp"
#include "lctlab/numeric.hpp"
#include "lctlab/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using lctlab::Rat;
using lctlab::io::json;

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
      return d;
    }
    case json::value_t::array: {
      py::list l;
      for (const auto& item : j) l.append(json_to_py(item));
      return l;
    }
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

lctlab::NewtonPolyhedron poly_from(const std::vector<std::vector<std::string>>& gens) {
  std::vector<lctlab::ExponentVector> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    lctlab::ExponentVector v;
    v.reserve(g.size());
    for (const auto& c : g) v.push_back(lctlab::rat_parse(c));
    rows.push_back(std::move(v));
  }
  return lctlab::NewtonPolyhedron::from_generators(rows);
}

std::vector<std::vector<std::string>> poly_out(const lctlab::NewtonPolyhedron& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& v : p.vertices()) {
    std::vector<std::string> row;
    for (const auto& c : v) row.push_back(lctlab::rat_str(c));
    out.push_back(std::move(row));
  }
  return out;
}

lctlab::SingularityModel model_from_spec(const std::string& text) {
  return lctlab::io::parse_model_text(text);
}

}  // namespace

PYBIND11_MODULE(_lctlab, m) {
  m.doc() = "exact thresholds, Monge-Ampere masses and inequality checks for "
            "weighted-monomial and monomial-ideal singularities";
  m.attr("__version__") = lctlab::kVersion;

  py::register_exception<lctlab::SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<lctlab::ValidationError>(m, "ValidationError", PyExc_ValueError);

  // Polyhedral layer: generators as lists of "p/q" strings.
  m.def("polyhedron_vertices",
        [](const std::vector<std::vector<std::string>>& gens) {
          return poly_out(poly_from(gens));
        },
        py::arg("generators"), "minimal vertex form of conv(generators) + R^n_+");
  m.def("contains",
        [](const std::vector<std::vector<std::string>>& gens, const std::vector<std::string>& x) {
          lctlab::ExponentVector v;
          for (const auto& c : x) v.push_back(lctlab::rat_parse(c));
          return lctlab::contains(poly_from(gens), v);
        },
        py::arg("generators"), py::arg("point"));
  m.def("minkowski_sum",
        [](const std::vector<std::vector<std::string>>& a,
           const std::vector<std::vector<std::string>>& b) {
          return poly_out(lctlab::minkowski_sum(poly_from(a), poly_from(b)));
        },
        py::arg("p"), py::arg("q"));
  m.def("covolume",
        [](const std::vector<std::vector<std::string>>& gens) -> py::object {
          const auto cv = lctlab::covolume(poly_from(gens));
          if (!cv.bounded) return py::none();
          return py::str(lctlab::rat_str(cv.value));
        },
        py::arg("generators"), "exact covolume, or None when unbounded");
  m.def("covolume_mc",
        [](const std::vector<std::vector<std::string>>& gens, const std::string& box,
           std::uint64_t samples, std::uint64_t seed) {
          const auto est =
              lctlab::covolume_mc(poly_from(gens), lctlab::rat_parse(box), samples, seed);
          return py::make_tuple(est.value, est.stderr_);
        },
        py::arg("generators"), py::arg("box_height"), py::arg("samples"), py::arg("seed"));
  m.def("restrict_to",
        [](const std::vector<std::vector<std::string>>& gens,
           const std::vector<std::size_t>& coords) -> py::object {
          const auto sub = lctlab::restrict_to(poly_from(gens), coords);
          if (!sub) return py::none();
          return py::cast(poly_out(*sub));
        },
        py::arg("generators"), py::arg("coords"),
        "restriction to a coordinate subspace (0-based); None when empty");

  m.def("lct", [](const std::vector<std::vector<std::string>>& gens) {
    return lctlab::rat_str(lctlab::lct(poly_from(gens)));
  });
  m.def("lct_dual", [](const std::vector<std::vector<std::string>>& gens) {
    return lctlab::rat_str(lctlab::lct_dual(poly_from(gens)));
  });
  m.def("lelong", [](const std::vector<std::vector<std::string>>& gens) {
    return lctlab::rat_str(lctlab::lelong_number(poly_from(gens)));
  });
  m.def("ma_mass", [](const std::vector<std::vector<std::string>>& gens, std::size_t k) {
    return lctlab::rat_str(lctlab::ma_mass(poly_from(gens), k));
  });

  // Model layer: specs are the same JSON documents the CLI reads.
  m.def("invariants",
        [](const std::string& model_spec) {
          const auto model = model_from_spec(model_spec);
          const auto table = lctlab::invariant_table(model);
          return json_to_py(lctlab::io::invariants_document(model, table));
        },
        py::arg("model_spec_json"));
  m.def("check",
        [](const std::string& model_spec, bool numeric, std::uint64_t samples,
           std::uint64_t seed) {
          const auto model = model_from_spec(model_spec);
          lctlab::bounds::ReportOptions opt;
          opt.numeric = numeric;
          opt.samples = samples;
          opt.seed = seed;
          const auto rep = lctlab::bounds::report(model, opt);
          return json_to_py(
              lctlab::io::report_to_json(lctlab::io::make_report_document(model, rep)));
        },
        py::arg("model_spec_json"), py::arg("numeric") = false,
        py::arg("samples") = std::uint64_t{1000000}, py::arg("seed") = std::uint64_t{20260808});

  // Bound evaluators.
  m.def("theorem_rhs",
        [](const std::string& c_nm1, const std::string& e_n, const std::string& e_1,
           std::size_t n) {
          return lctlab::ext_str(lctlab::bounds::theorem_rhs(
              lctlab::rat_parse(c_nm1), lctlab::rat_parse(e_n), lctlab::rat_parse(e_1), n));
        },
        py::arg("c_nm1"), py::arg("e_n"), py::arg("e_1"), py::arg("n"));
  m.def("openness_gain", [](const std::string& c, std::size_t n, const std::string& e_n) {
    return lctlab::rat_str(
        lctlab::bounds::openness_gain(lctlab::rat_parse(c), n, lctlab::rat_parse(e_n)));
  });
  m.def("jn_integral",
        [](std::size_t n) { return lctlab::rat_str(lctlab::bounds::jn_integral(n)); });
  m.def("f_lemma21", [](const std::string& t1, const std::string& t2, std::size_t n) {
    return lctlab::rat_str(
        lctlab::bounds::f_lemma21(lctlab::rat_parse(t1), lctlab::rat_parse(t2), n));
  });

  // Numeric estimators.
  m.def("sublevel_volume",
        [](const std::string& model_spec, double t, double radius, std::uint64_t samples,
           std::uint64_t seed) {
          lctlab::numeric::NumericConfig cfg{samples, seed};
          return lctlab::numeric::sublevel_volume(model_from_spec(model_spec), t, radius, cfg);
        },
        py::arg("model_spec_json"), py::arg("t"), py::arg("radius") = 1.0,
        py::arg("samples") = std::uint64_t{1000000}, py::arg("seed") = std::uint64_t{20260808});
  m.def("lct_estimate_decay",
        [](const std::string& model_spec, const std::vector<double>& grid, double radius,
           std::uint64_t samples, std::uint64_t seed) {
          lctlab::numeric::NumericConfig cfg{samples, seed};
          const auto d =
              lctlab::numeric::lct_estimate_decay(model_from_spec(model_spec), grid, radius, cfg);
          py::dict out;
          out["c_hat"] = d.c_hat;
          out["stderr"] = d.stderr_;
          out["t_grid"] = d.t_grid;
          out["log_volumes"] = d.log_volumes;
          return out;
        },
        py::arg("model_spec_json"), py::arg("t_grid"), py::arg("radius") = 1.0,
        py::arg("samples") = std::uint64_t{1000000}, py::arg("seed") = std::uint64_t{20260808});
  m.def("integrability_check",
        [](const std::string& model_spec, double c, std::uint64_t samples, std::uint64_t seed) {
          const auto r =
              lctlab::numeric::integrability_check(model_from_spec(model_spec), c, samples, seed);
          const char* verdict = r.verdict == lctlab::numeric::IntegrabilityVerdict::Finite
                                    ? "finite"
                                : r.verdict == lctlab::numeric::IntegrabilityVerdict::Diverging
                                    ? "diverging"
                                    : "inconclusive";
          return py::make_tuple(verdict, r.statistic);
        },
        py::arg("model_spec_json"), py::arg("c"), py::arg("samples") = std::uint64_t{1000000},
        py::arg("seed") = std::uint64_t{20260808});
  m.def("generic_restriction_estimate",
        [](const std::string& model_spec, std::size_t k, std::size_t trials, std::uint64_t seed) {
          return lctlab::numeric::generic_restriction_estimate(model_from_spec(model_spec), k,
                                                               trials, seed);
        },
        py::arg("model_spec_json"), py::arg("k"), py::arg("trials") = std::size_t{8},
        py::arg("seed") = std::uint64_t{20260808});
  m.def("slice_energy",
        [](const std::string& model_spec, std::complex<double> w) {
          return lctlab::numeric::slice_energy(model_from_spec(model_spec), w);
        },
        py::arg("model_spec_json"), py::arg("w"));
  m.def("slice_limit_check",
        [](const std::string& model_spec, double lambda, double r, std::size_t depth,
           double threshold) {
          const auto trace = lctlab::numeric::slice_limit_check(model_from_spec(model_spec),
                                                                lambda, r, depth, threshold);
          py::dict out;
          out["lambda"] = trace.lambda;
          out["w_sequence"] = trace.w_sequence;
          out["values"] = trace.values;
          out["verdict"] = trace.verdict;
          out["threshold"] = trace.threshold;
          return out;
        },
        py::arg("model_spec_json"), py::arg("lambda_"), py::arg("r") = 0.4,
        py::arg("depth") = std::size_t{20}, py::arg("threshold") = 1e-3);
}
