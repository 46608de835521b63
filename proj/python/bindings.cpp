#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/operators.h>
#include <pybind11/stl/filesystem.h>

#include "expressivity/construction.hpp"
#include "expressivity/conversion.hpp"
#include "expressivity/error.hpp"
#include "expressivity/grid.hpp"
#include "expressivity/harness/suites.hpp"
#include "expressivity/network_io.hpp"
#include "expressivity/pwl.hpp"
#include "expressivity/ratio.hpp"
#include "expressivity/trace.hpp"

namespace py = pybind11;
using namespace expressivity;

namespace {

Network network_from_params(const NetworkShape& shape, const std::vector<double>& theta,
                            const ActivationSpec& activation) {
  return Network::from_params(shape, ParamVector{theta}, activation);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Piecewise-linear networks: exact region tracing, fineness, fold constructions, ratio curves";

  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<NoKinkError>(m, "NoKinkError", PyExc_ValueError);
  py::register_exception<BoundingError>(m, "BoundingError", PyExc_RuntimeError);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_readwrite("lo", &Interval::lo)
      .def_readwrite("hi", &Interval::hi)
      .def("length", &Interval::length)
      .def("__repr__", [](const Interval& i) {
        return "Interval(" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + ")";
      });

  py::class_<ActivationSpec>(m, "ActivationSpec")
      .def_static("relu", &ActivationSpec::relu)
      .def_static("hard_tanh", &ActivationSpec::hard_tanh)
      .def_static("generic", &ActivationSpec::generic, py::arg("breakpoints"), py::arg("slopes"),
                  py::arg("value_at_first_breakpoint"))
      .def_property_readonly("breakpoints", &ActivationSpec::breakpoints)
      .def_property_readonly("slopes", &ActivationSpec::slopes)
      .def("__call__", py::overload_cast<double>(&ActivationSpec::operator(), py::const_))
      .def("__repr__", &ActivationSpec::describe)
      .def(py::self == py::self);

  py::class_<NetworkShape>(m, "NetworkShape")
      .def(py::init([](std::size_t input_dim, const std::vector<std::size_t>& hidden, std::size_t output_dim) {
             return NetworkShape::from_hidden(input_dim, hidden, output_dim);
           }),
           py::arg("input_dim"), py::arg("hidden_widths"), py::arg("output_dim") = 1)
      .def_readonly("input_dim", &NetworkShape::input_dim)
      .def_readonly("widths", &NetworkShape::widths)
      .def_property_readonly("hidden_widths", &NetworkShape::hidden_widths)
      .def_property_readonly("parameter_count", &NetworkShape::parameter_count)
      .def_property_readonly("depth", &NetworkShape::depth);

  py::class_<Network>(m, "Network")
      .def_static("from_params", &network_from_params, py::arg("shape"), py::arg("theta"),
                  py::arg("activation") = ActivationSpec::relu())
      .def_static("random",
                  [](const NetworkShape& shape, const std::string& dist, std::uint64_t seed, std::uint64_t index) {
                    return Network::from_params(shape, sample_param(shape, distribution_from_string(dist), seed, index),
                                                ActivationSpec::relu());
                  },
                  py::arg("shape"), py::arg("distribution") = "standard_normal", py::arg("seed") = 0,
                  py::arg("index") = 0)
      .def_property_readonly("shape", &Network::shape)
      .def_property_readonly("activation", &Network::activation)
      .def("params", [](const Network& n) { return n.pack().values; })
      .def("forward", [](const Network& n, const std::vector<double>& x) { return n.forward(x); })
      .def("__call__", &Network::forward_scalar)
      .def("evaluate_grid",
           [](const Network& n, const std::vector<double>& xs) { return n.evaluate_grid(std::span<const double>(xs)); })
      .def("to_json", [](const Network& n) { return network_to_json(n); })
      .def_static("from_json", &network_from_json);

  py::class_<LinearPiece>(m, "LinearPiece")
      .def_readonly("slope", &LinearPiece::slope)
      .def_readonly("intercept", &LinearPiece::intercept);

  py::class_<PiecewiseLinear1D>(m, "PiecewiseLinear1D")
      .def_static("from_vertices", &PiecewiseLinear1D::from_vertices, py::arg("xs"), py::arg("ys"))
      .def_property_readonly("domain", &PiecewiseLinear1D::domain)
      .def_property_readonly("breakpoints", &PiecewiseLinear1D::breakpoints)
      .def_property_readonly("pieces", &PiecewiseLinear1D::pieces)
      .def("__call__", &PiecewiseLinear1D::operator())
      .def("__len__", &PiecewiseLinear1D::piece_count)
      .def("min_slope_jump", &PiecewiseLinear1D::min_slope_jump)
      .def("to_csv", [](const PiecewiseLinear1D& p) { return to_csv(p); });

  py::class_<RefinementReport>(m, "RefinementReport")
      .def_readonly("holds", &RefinementReport::holds)
      .def_readonly("r", &RefinementReport::r)
      .def_readonly("witness", &RefinementReport::witness);

  py::class_<IdentificationResult>(m, "IdentificationResult")
      .def_readonly("holds", &IdentificationResult::holds)
      .def_readonly("pieces", &IdentificationResult::pieces)
      .def_readonly("witness", &IdentificationResult::witness);

  m.def("fineness", py::overload_cast<const PiecewiseLinear1D&>(&fineness));
  m.def("region_count", [](const PiecewiseLinear1D& p) { return regions(p).count(); });
  m.def("check_refinement", &check_refinement, py::arg("g"), py::arg("f"));
  m.def("check_identification", &check_identification, py::arg("h"), py::arg("codomain") = kUnitInterval);
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("trace_exact", &trace_exact, py::arg("network"), py::arg("domain") = kUnitInterval);
  m.def("grid_fineness",
        [](const Network& n, std::size_t grid, double threshold, const std::string& precision) {
          return grid_fineness(n, grid, threshold, precision_from_string(precision));
        },
        py::arg("network"), py::arg("grid") = kDefaultGridCount, py::arg("threshold") = kDefaultSlopeThreshold,
        py::arg("precision") = "double");

  m.def("build_fold_network",
        [](const std::vector<std::size_t>& widths, std::size_t input_dim, const std::vector<double>& out_w,
           const std::vector<double>& out_b) {
          FoldSpec spec;
          spec.input_dim = input_dim;
          spec.hidden_widths = widths;
          spec.output_weights = out_w;
          spec.output_biases = out_b;
          return build_fold_network(spec);
        },
        py::arg("hidden_widths"), py::arg("input_dim") = 1, py::arg("output_weights") = std::vector<double>{},
        py::arg("output_biases") = std::vector<double>{});
  m.def("lemma2_bound", &lemma2_bound, py::arg("input_dim"), py::arg("hidden_widths"));
  m.def("theorem1_bound", &theorem1_bound, py::arg("input_dim"), py::arg("hidden_widths"));
  m.def("relu_to_pwl", &relu_to_pwl, py::arg("network"), py::arg("target"), py::arg("input_box"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("achieved_fineness", &BoundReport::achieved_fineness)
      .def_readonly("bound", &BoundReport::bound)
      .def_readonly("attains", &BoundReport::attains)
      .def_readonly("converted_widths", &BoundReport::converted_widths)
      .def_readonly("parameter_count", &BoundReport::parameter_count);
  m.def("verify_theorem1", &verify_theorem1, py::arg("input_dim"), py::arg("hidden_widths"),
        py::arg("target") = ActivationSpec::hard_tanh());

  py::class_<TargetFunction>(m, "TargetFunction")
      .def_static("sin4pi", &TargetFunction::sin4pi)
      .def_static("weierstrass", &TargetFunction::weierstrass, py::arg("a") = 0.5, py::arg("b") = 13.0,
                  py::arg("terms") = 30)
      .def_static("from_name", &target_from_name)
      .def_property_readonly("name", &TargetFunction::name)
      .def("__call__", &TargetFunction::operator());

  py::class_<RatioCurve>(m, "RatioCurve")
      .def_readonly("epsilons", &RatioCurve::epsilons)
      .def_readonly("ratios", &RatioCurve::ratios)
      .def_readonly("draws", &RatioCurve::draws)
      .def_readonly("degenerate_draws", &RatioCurve::degenerate_draws)
      .def("to_csv", [](const RatioCurve& c) { return to_csv(c); });
  m.def("estimate_ratio_curve",
        [](const NetworkShape& shape, const TargetFunction& target, std::size_t draws, std::size_t grid,
           double eps_offset, double eps_step, std::size_t eps_count, std::uint64_t seed, std::size_t workers) {
          RatioConfig cfg;
          cfg.theta_draws = draws;
          cfg.grid_count = grid;
          cfg.epsilon = {eps_offset, eps_step, eps_count};
          cfg.seed = seed;
          cfg.workers = workers;
          return estimate_ratio_curve(Network::zeros(shape, ActivationSpec::relu()), target, cfg);
        },
        py::arg("shape"), py::arg("target"), py::arg("draws") = 20000, py::arg("grid") = 10000,
        py::arg("eps_offset") = 0.4, py::arg("eps_step") = 4e-5, py::arg("eps_count") = 10000, py::arg("seed") = 0,
        py::arg("workers") = 1);
  m.def("dominance_fraction", &dominance_fraction);

  py::class_<FinenessSearchReport>(m, "FinenessSearchReport")
      .def_readonly("min_fineness", &FinenessSearchReport::min_fineness)
      .def_readonly("argmin", &FinenessSearchReport::argmin)
      .def_readonly("per_draw", &FinenessSearchReport::per_draw)
      .def_readonly("exact_fineness_at_argmin", &FinenessSearchReport::exact_fineness_at_argmin);
  m.def("min_fineness_search",
        [](const NetworkShape& shape, std::size_t draws, std::size_t grid, std::uint64_t seed,
           const std::string& distribution, const std::string& precision, std::size_t workers) {
          FinenessSearchConfig cfg;
          cfg.draws = draws;
          cfg.grid_count = grid;
          cfg.seed = seed;
          cfg.distribution = distribution_from_string(distribution);
          cfg.precision = precision_from_string(precision);
          cfg.workers = workers;
          return min_fineness_search(shape, cfg);
        },
        py::arg("shape"), py::arg("draws") = 1000, py::arg("grid") = kDefaultGridCount, py::arg("seed") = 0,
        py::arg("distribution") = "uniform01", py::arg("precision") = "double", py::arg("workers") = 1);
}
