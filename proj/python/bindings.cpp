#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "phm/io.hpp"
#include "phm/phm.hpp"

namespace py = pybind11;
using namespace phm;
using phm::io::json;

namespace {

using PointList = std::vector<std::vector<cplx>>;

py::object to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& v : j) out.append(to_py(v));
        return std::move(out);
    }
    case json::value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
        return std::move(out);
    }
    default: return py::none();
    }
}

std::vector<ComplexPoint> to_points(const PointList& pts) {
    std::vector<ComplexPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(p);
    return out;
}

std::vector<ComplexPoint> points_or_default(const std::optional<PointList>& pts, std::size_t n, std::uint64_t seed) {
    return pts ? to_points(*pts) : default_polydisk_sample(n, seed);
}

TorusGrid make_grid(std::size_t n, double radius, std::optional<std::size_t> angles) {
    return TorusGrid(n, radius, angles.value_or(default_angles(n)));
}

PointList from_points(const std::vector<ComplexPoint>& pts) {
    PointList out;
    for (const auto& p : pts) out.emplace_back(p.coords().begin(), p.coords().end());
    return out;
}

const PolySeries& part_of(const PluriharmonicMap& f, const std::string& part) {
    if (part == "h") return f.h();
    if (part == "g") return f.g();
    throw UsageError("part must be 'h' or 'g'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numerical checks for pluriharmonic maps f = h + conj(g) on the unit polydisk";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DegreeCapError>(m, "DegreeCapError", PyExc_ArithmeticError);

    py::class_<PluriharmonicMap>(m, "Map")
        .def_static("from_json", [](const std::string& text) { return io::parse_map_spec(text); },
                    py::arg("text"))
        .def_static("from_file", [](const std::string& path) { return io::load_map_spec(path); },
                    py::arg("path"))
        .def_static("extremal_sharpness",
                    [](std::size_t n, unsigned mdeg, double M, const std::string& part) {
                        if (part != "h" && part != "g") throw UsageError("part must be 'h' or 'g'");
                        return extremal_sharpness_map(n, mdeg, M,
                                                      part == "h" ? SharpnessPart::Holomorphic
                                                                  : SharpnessPart::Antiholomorphic);
                    },
                    py::arg("n"), py::arg("m"), py::arg("M"), py::arg("part") = "h")
        .def_static("extremal_growth", &extremal_growth_map, py::arg("n"), py::arg("M"), py::arg("sign") = 1)
        .def_property_readonly("dim", &PluriharmonicMap::dim)
        .def_property_readonly("degree_cap", &PluriharmonicMap::degree_cap)
        .def("to_json", &io::dump_map_spec)
        .def("is_normalized", &PluriharmonicMap::is_normalized, py::arg("tol") = 1e-12)
        .def("is_normalized_h0", &PluriharmonicMap::is_normalized_h0, py::arg("tol") = 1e-12)
        .def("__call__", [](const PluriharmonicMap& f, const std::vector<cplx>& z) {
            return evaluate_map(f, ComplexPoint(z));
        })
        .def("__eq__", [](const PluriharmonicMap& a, const PluriharmonicMap& b) { return a == b; })
        .def("__repr__", [](const PluriharmonicMap& f) {
            return "<phm.Map n=" + std::to_string(f.dim()) + " D=" + std::to_string(f.degree_cap()) + ">";
        });

    m.def("convex_combine",
          [](const std::vector<PluriharmonicMap>& maps, const std::vector<double>& weights) {
              return convex_combine(maps, weights);
          },
          py::arg("maps"), py::arg("weights"));

    // sampling
    m.def("default_sample", [](std::size_t n, std::uint64_t seed) { return from_points(default_polydisk_sample(n, seed)); },
          py::arg("n"), py::arg("seed") = 1);
    m.def("unimodular_sample", &unimodular_sample, py::arg("count") = 16);

    // functionals
    m.def("lambda_value", [](const PluriharmonicMap& f, const std::vector<cplx>& z) {
        return lambda_value(f, ComplexPoint(z));
    }, py::arg("f"), py::arg("z"));
    m.def("sup_estimate",
          [](const PluriharmonicMap& f, double radius, std::optional<std::size_t> angles, unsigned refine) {
              const auto est = sup_estimate(f, make_grid(f.dim(), radius, angles), refine);
              const auto w = est.witness.coords();
              return py::make_tuple(est.value, std::vector<cplx>(w.begin(), w.end()));
          },
          py::arg("f"), py::arg("radius") = 0.999, py::arg("angles") = py::none(), py::arg("refine_steps") = 3);
    m.def("certified_upper_bound", py::overload_cast<const PluriharmonicMap&>(&certified_upper_bound),
          py::arg("f"));
    m.def("membership",
          [](const PluriharmonicMap& f, double M, double radius, std::optional<std::size_t> angles) {
              return to_py(io::to_json(membership(f, M, make_grid(f.dim(), radius, angles))));
          },
          py::arg("f"), py::arg("M"), py::arg("radius") = 0.999, py::arg("angles") = py::none());

    // criteria
    m.def("noshiro_warschawski",
          [](const PluriharmonicMap& f, double gamma, std::optional<PointList> pts, std::uint64_t seed) {
              return to_py(io::to_json(noshiro_warschawski(f, gamma, points_or_default(pts, f.dim(), seed))));
          },
          py::arg("f"), py::arg("gamma") = 0.0, py::arg("points") = py::none(), py::arg("seed") = 1);
    m.def("epsilon_family_check",
          [](const PluriharmonicMap& f, double M, std::optional<std::vector<cplx>> eps, double radius,
             std::optional<std::size_t> angles) {
              const auto e = eps.value_or(unimodular_sample(32));
              return to_py(io::to_json(epsilon_family_check(f, M, e, make_grid(f.dim(), radius, angles))));
          },
          py::arg("f"), py::arg("M"), py::arg("epsilons") = py::none(), py::arg("radius") = 0.999,
          py::arg("angles") = py::none());
    m.def("derivative_band",
          [](const PluriharmonicMap& f, double M, std::optional<PointList> pts, std::uint64_t seed) {
              return to_py(io::to_json(derivative_band(f.h(), M, points_or_default(pts, f.dim(), seed))));
          },
          py::arg("f"), py::arg("M"), py::arg("points") = py::none(), py::arg("seed") = 1);
    m.def("coefficient_audit",
          [](const PluriharmonicMap& f, double M, std::optional<unsigned> m_max) {
              return to_py(io::to_json(coefficient_audit(f, M, m_max.value_or(f.degree_cap()))));
          },
          py::arg("f"), py::arg("M"), py::arg("m_max") = py::none());
    m.def("sufficient_condition",
          [](const PluriharmonicMap& f, double M) { return to_py(io::to_json(sufficient_condition(f, M))); },
          py::arg("f"), py::arg("M"));
    m.def("growth_check",
          [](const PluriharmonicMap& f, double M, std::optional<PointList> pts, std::uint64_t seed) {
              return to_py(io::to_json(
                  growth_check(f, M, points_or_default(pts, f.dim(), seed), TorusGrid::standard(f.dim()))));
          },
          py::arg("f"), py::arg("M"), py::arg("points") = py::none(), py::arg("seed") = 1);

    // univalence
    m.def("injectivity_scan",
          [](const PluriharmonicMap& f, std::optional<PointList> pts, double delta, double eta, std::uint64_t seed) {
              return to_py(io::to_json(injectivity_scan(f, points_or_default(pts, f.dim(), seed), delta, eta)));
          },
          py::arg("f"), py::arg("points") = py::none(), py::arg("delta") = 1e-9, py::arg("eta") = 1e-3,
          py::arg("seed") = 1);
    m.def("stable_scan",
          [](const PluriharmonicMap& f, std::optional<std::vector<cplx>> lambdas, std::optional<PointList> pts,
             double delta, double eta, std::uint64_t seed) {
              const auto l = lambdas.value_or(unimodular_sample(16));
              return to_py(io::to_json(stable_scan(f, l, points_or_default(pts, f.dim(), seed), delta, eta)));
          },
          py::arg("f"), py::arg("lambdas") = py::none(), py::arg("points") = py::none(), py::arg("delta") = 1e-9,
          py::arg("eta") = 1e-3, py::arg("seed") = 1);
    m.def("local_nonvanishing",
          [](const PluriharmonicMap& f, std::optional<PointList> pts, std::uint64_t seed) {
              return to_py(io::to_json(local_nonvanishing(f, points_or_default(pts, f.dim(), seed))));
          },
          py::arg("f"), py::arg("points") = py::none(), py::arg("seed") = 1);

    // extraction
    m.def("dft_coefficients",
          [](const PluriharmonicMap& f, double r, std::optional<std::size_t> samples, std::optional<unsigned> m_max,
             const std::string& part) {
              const unsigned mm = m_max.value_or(f.degree_cap());
              const std::size_t N = samples.value_or(2 * (static_cast<std::size_t>(mm) + 1));
              return to_py(io::to_json(dft_coefficients(part_of(f, part), r, N, mm)));
          },
          py::arg("f"), py::arg("r"), py::arg("samples_per_dim") = py::none(), py::arg("m_max") = py::none(),
          py::arg("part") = "h");
    m.def("orthogonality_selftest",
          [](std::size_t n, unsigned nu_max, std::size_t samples) {
              return to_py(io::to_json(orthogonality_selftest(n, nu_max, samples)));
          },
          py::arg("n"), py::arg("nu_max"), py::arg("samples_per_dim"));
    m.def("schwarz_check",
          [](const PluriharmonicMap& f, double M) {
              if (!f.g().is_zero()) throw UsageError("schwarz_check: map must be holomorphic (g = 0)");
              return to_py(io::to_json(schwarz_check(f.h(), M)));
          },
          py::arg("f"), py::arg("M"));
}
