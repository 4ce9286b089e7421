#include <random>
#include <stdexcept>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oqmi/discord.hpp"
#include "oqmi/entropy.hpp"
#include "oqmi/mutualinfo.hpp"
#include "oqmi/negativity.hpp"
#include "oqmi/states.hpp"

namespace py = pybind11;
using namespace oqmi;

namespace {

PartySet parties_of(const std::vector<std::size_t>& indices) { return PartySet(indices); }

EntropyKind kind_of(const std::string& name, double q) {
  if (name == "von_neumann") return EntropyKind::von_neumann();
  if (name == "renyi") return EntropyKind::renyi(q);
  if (name == "tsallis") return EntropyKind::tsallis(q);
  throw std::invalid_argument("unknown entropy kind '" + name + "' (von_neumann, renyi or tsallis)");
}

OptimizerConfig config(std::size_t grid_theta, std::size_t grid_phi, std::size_t refine_iterations,
                       std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.grid_theta = grid_theta;
  cfg.grid_phi = grid_phi;
  cfg.refine_iterations = refine_iterations;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiparty quantum mutual information, common information and discord";

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix, Dims>(), py::arg("matrix"), py::arg("dims"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dims", &DensityMatrix::dims)
      .def_property_readonly("parties", &DensityMatrix::parties)
      .def("__repr__", [](const DensityMatrix& rho) {
        return "<DensityMatrix dims=" + py::repr(py::cast(rho.dims())).cast<std::string>() + ">";
      });

  py::class_<DiscordResult>(m, "DiscordResult")
      .def_readonly("value", &DiscordResult::value)
      .def_readonly("pre_measurement_mi", &DiscordResult::pre_measurement_mi)
      .def_readonly("optimized_mi", &DiscordResult::optimized_mi)
      .def_readonly("grid_mi", &DiscordResult::grid_mi)
      .def_readonly("iterations", &DiscordResult::iterations)
      .def_readonly("evaluations", &DiscordResult::evaluations)
      .def_readonly("clamped", &DiscordResult::clamped)
      .def_property_readonly("best_angles", [](const DiscordResult& r) {
        py::dict out;
        for (const auto& [party, a] : r.best_angles) out[py::int_(party)] = py::make_tuple(a.theta, a.phi);
        return out;
      });

  m.def("validate", [](const DensityMatrix& rho) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& v : validate(rho).violations) out.emplace_back(v.invariant, v.magnitude);
    return out;
  }, py::arg("rho"), "List of (invariant, magnitude) violations; empty for a valid state.");

  m.def("partial_trace", [](const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
    return partial_trace(rho, parties_of(keep));
  }, py::arg("rho"), py::arg("keep"));
  m.def("partial_transpose", [](const DensityMatrix& rho, const std::vector<std::size_t>& parties) {
    return partial_transpose(rho, parties_of(parties));
  }, py::arg("rho"), py::arg("parties"));

  m.def("build_state", [](const std::string& spec) { return build(NamedState::parse(spec)).projector(); },
        py::arg("spec"), "Projector onto a named state such as 'ghz:3', 'w:3', 'dicke:4:2', 'cluster4', 'antisym3'.");
  m.def("white_noise", [](const std::string& spec, double p) { return white_noise(build(NamedState::parse(spec)), p); },
        py::arg("spec"), py::arg("p"));
  m.def("random_mixed_state", [](const Dims& dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_mixed_state(dims, rng);
  }, py::arg("dims"), py::arg("seed") = 0);
  m.def("random_pure_state", [](const Dims& dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_pure_state(dims, rng).projector();
  }, py::arg("dims"), py::arg("seed") = 0);

  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("generalized_entropy", [](const DensityMatrix& rho, const std::string& kind, double q) {
    return generalized_entropy(rho, kind_of(kind, q));
  }, py::arg("rho"), py::arg("kind"), py::arg("q") = 1.0);
  m.def("relative_entropy", [](const DensityMatrix& rho, const DensityMatrix& sigma) {
    const auto r = relative_entropy(rho, sigma);
    return py::make_tuple(r.value, r.support_violated);
  }, py::arg("rho"), py::arg("sigma"));
  m.def("classical_cmi_variants", [](const std::vector<double>& weights, std::array<std::size_t, 3> shape) {
    const auto k = classical_cmi_variants(ProbabilityDistribution(weights), shape);
    return py::make_tuple(k.k1, k.k2, k.k3);
  }, py::arg("weights"), py::arg("shape"));

  m.def("bipartite_qmi", &bipartite_qmi, py::arg("rho"));
  m.def("mutual_information", [](const DensityMatrix& rho, const std::vector<std::size_t>& x,
                                 const std::vector<std::size_t>& y) {
    return mutual_information(rho, parties_of(x), parties_of(y));
  }, py::arg("rho"), py::arg("x"), py::arg("y"));
  m.def("common_information", &common_information, py::arg("rho"));
  m.def("operational_qmi", &operational_qmi, py::arg("rho"));
  m.def("conventional_ix", &conventional_ix, py::arg("rho"));
  m.def("shared_two_party", &shared_two_party, py::arg("rho"));
  m.def("generalized_oqmi", [](const DensityMatrix& rho, const std::string& kind, double q) {
    return generalized_oqmi(rho, kind_of(kind, q));
  }, py::arg("rho"), py::arg("kind"), py::arg("q") = 1.0);
  m.def("theorem2_bounds", [](const DensityMatrix& rho) {
    const auto b = theorem2_bounds(rho);
    return py::make_tuple(b.lower, b.value, b.upper);
  }, py::arg("rho"), "(I_x - (n-2)S, I, I_x + 2S)");

  m.def("log_negativity", [](const DensityMatrix& rho, const std::vector<std::size_t>& left) {
    return log_negativity(rho, Bipartition::split(parties_of(left), rho.parties()));
  }, py::arg("rho"), py::arg("left"));

  m.def("bipartite_discord", [](const DensityMatrix& rho, std::size_t measured, std::size_t grid_theta,
                                std::size_t grid_phi, std::size_t refine_iterations) {
    py::gil_scoped_release release;
    return bipartite_discord(rho, measured, config(grid_theta, grid_phi, refine_iterations, 0));
  }, py::arg("rho"), py::arg("measured") = 0, py::arg("grid_theta") = 25, py::arg("grid_phi") = 25,
     py::arg("refine_iterations") = 200);
  m.def("multiparty_discord", [](const DensityMatrix& rho, const std::vector<std::size_t>& measured,
                                 const std::string& mi, std::uint64_t seed, std::size_t grid_theta,
                                 std::size_t grid_phi, std::size_t refine_iterations) {
    const DiscordSpec spec{parties_of(measured), parse_mi_kind(mi),
                           config(grid_theta, grid_phi, refine_iterations, seed)};
    py::gil_scoped_release release;
    return multiparty_discord(rho, spec);
  }, py::arg("rho"), py::arg("measured"), py::arg("mi") = "operational", py::arg("seed") = 0,
     py::arg("grid_theta") = 25, py::arg("grid_phi") = 25, py::arg("refine_iterations") = 200);
}
