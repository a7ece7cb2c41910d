#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "eur/bounds.hpp"
#include "eur/error.hpp"
#include "eur/report_io.hpp"
#include "eur/sweep.hpp"
#include "eur/verify.hpp"

namespace py = pybind11;
using namespace eur;

namespace {

// A basis is either an observable label ("x", "y", "z") or a unitary whose columns are the basis vectors.
using BasisArg = std::variant<std::string, Matrix>;

ProjectiveBasis to_basis(const BasisArg& arg) {
  if (const auto* label = std::get_if<std::string>(&arg)) return eigenbasis(spin_observable(*label));
  return ProjectiveBasis::from_unitary(std::get<Matrix>(arg), "unitary");
}

Dims default_dims(const Matrix& m) { return {static_cast<std::size_t>(m.rows())}; }

DensityMatrix to_density(const Matrix& m, std::optional<Dims> dims) {
  return DensityMatrix(m, dims ? *dims : default_dims(m));
}

Matrix basis_matrix(const ProjectiveBasis& b) {
  Matrix out(b.dim(), b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) out.col(static_cast<Eigen::Index>(j)) = b[j];
  return out;
}

}  // namespace

PYBIND11_MODULE(_horizon_eur, m) {
  m.doc() = "Entropic uncertainty bounds for Dirac modes near a Schwarzschild horizon";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NotPositiveSemidefiniteError>(m, "NotPositiveSemidefiniteError", base.ptr());
  py::register_exception<UnsupportedInputError>(m, "UnsupportedInputError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.def("spin_observable", [](const std::string& label) { return spin_observable(label).matrix; }, py::arg("label"));
  m.def("eigenbasis", [](const BasisArg& b) { return basis_matrix(to_basis(b)); }, py::arg("basis"),
        "Basis vectors as columns, in descending eigenvalue order.");
  m.def("c1", [](const BasisArg& a, const BasisArg& b) { return overlap_table(to_basis(a), to_basis(b)).c1; },
        py::arg("basis1"), py::arg("basis2"));

  m.def("dilation_angle", py::overload_cast<double, double>(&dilation_angle), py::arg("omega"), py::arg("r0"));
  m.def("dilation_angle_physical",
        [](double mass, double frequency, double radius) {
          return dilation_angle(HorizonParams::from_physical(mass, frequency, radius));
        },
        py::arg("mass"), py::arg("frequency"), py::arg("radius"));
  m.def("mode_isometry", [](double q) { return mode_isometry(q).isometry.matrix(); }, py::arg("q"));

  m.def("example_state", [](const std::string& label) { return example_state(parse_state_label(label)).entries(); },
        py::arg("label"));
  m.def("transform_memory",
        [](const Matrix& rho, const Dims& dims, std::size_t target, double q) {
          return transform_memory(DensityMatrix(rho, dims), target, q).entries();
        },
        py::arg("rho"), py::arg("dims"), py::arg("target"), py::arg("q"));
  m.def("partial_trace",
        [](const Matrix& rho, const Dims& dims, const std::vector<std::size_t>& keep) {
          return partial_trace(DensityMatrix(rho, dims), keep).entries();
        },
        py::arg("rho"), py::arg("dims"), py::arg("keep"));

  m.def("shannon_entropy", [](const std::vector<double>& p) { return shannon_entropy(ProbDist(p)); }, py::arg("p"));
  m.def("von_neumann_entropy",
        [](const Matrix& rho, std::optional<Dims> dims) { return von_neumann_entropy(to_density(rho, dims)); },
        py::arg("rho"), py::arg("dims") = py::none());
  m.def("conditional_entropy",
        [](const Matrix& rho, const Dims& dims, std::size_t condition_on) {
          return conditional_entropy(DensityMatrix(rho, dims), condition_on);
        },
        py::arg("rho"), py::arg("dims"), py::arg("condition_on") = 1);
  m.def("mutual_information",
        [](const Matrix& rho, const Dims& dims) { return mutual_information(DensityMatrix(rho, dims)); },
        py::arg("rho"), py::arg("dims"));
  m.def("holevo_quantity",
        [](const Matrix& rho, const Dims& dims, const BasisArg& b, std::size_t measured) {
          return holevo_quantity(DensityMatrix(rho, dims), to_basis(b), measured);
        },
        py::arg("rho"), py::arg("dims"), py::arg("basis"), py::arg("measured") = 0);

  m.def("_report_json",
        [](const Matrix& rho, const Dims& dims, const BasisArg& b1, const BasisArg& b2) {
          return to_json(full_report("custom", DensityMatrix(rho, dims), to_basis(b1), to_basis(b2))).dump();
        },
        py::arg("rho"), py::arg("dims"), py::arg("basis1"), py::arg("basis2"));
  m.def("_evaluate_json",
        [](const std::string& state, double omega, double r0, const BasisArg& b1, const BasisArg& b2) {
          const auto p = HorizonParams::from_ratios(omega, r0);
          return to_json(evaluate_point(parse_state_label(state), p, to_basis(b1), to_basis(b2))).dump();
        },
        py::arg("state"), py::arg("omega"), py::arg("r0"), py::arg("basis1"), py::arg("basis2"));
  m.def("_sweep",
        [](const std::string& state, std::vector<double> omegas, double r0_min, double r0_max, std::size_t steps,
           std::string basis1, std::string basis2, const std::string& format) {
          SweepSpec spec{parse_state_label(state), std::move(omegas), r0_min, r0_max, steps, std::move(basis1),
                         std::move(basis2)};
          std::vector<BoundReport> rows;
          {
            py::gil_scoped_release release;
            rows = run_sweep(spec);
          }
          if (format == "csv") return render_csv(rows);
          if (format == "json") return render_json(rows);
          throw PreconditionError("format must be csv or json");
        },
        py::arg("state"), py::arg("omegas"), py::arg("r0_min"), py::arg("r0_max"), py::arg("steps"),
        py::arg("basis1"), py::arg("basis2"), py::arg("format"));

  m.def("verify",
        [](std::uint64_t seed, std::size_t trials, double tolerance) {
          VerifyOutcome out;
          {
            py::gil_scoped_release release;
            out = run_verify({seed, trials, tolerance, false});
          }
          py::list suites;
          for (const auto& s : out.suites) {
            py::dict d;
            d["name"] = s.name;
            d["passed"] = s.passed;
            d["total"] = s.total;
            d["counterexample"] = s.counterexample ? py::object(py::str(*s.counterexample)) : py::object(py::none());
            suites.append(d);
          }
          py::dict result;
          result["ok"] = out.ok();
          result["suites"] = suites;
          result["notes"] = out.notes;
          result["summary"] = render_summary(out);
          return result;
        },
        py::arg("seed") = 20170101, py::arg("trials") = 50, py::arg("tolerance") = 1e-9);
}
