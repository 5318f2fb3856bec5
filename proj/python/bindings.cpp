#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vtwist/census/config.hpp"
#include "vtwist/cubicfield/cubic_field.hpp"
#include "vtwist/errors.hpp"
#include "vtwist/kummer/conic.hpp"
#include "vtwist/kummer/e37b.hpp"
#include "vtwist/kummer/families.hpp"
#include "vtwist/kummer/surface.hpp"
#include "vtwist/lvalue/algebraic_part.hpp"

namespace py = pybind11;
using namespace vtwist;

namespace {

mpq_class q(const std::string& s) {
  mpq_class x;
  if (x.set_str(s, 10) != 0) throw ConfigError("not a rational number: '" + s + "'");
  x.canonicalize();
  return x;
}

py::dict field_dict(cubicfield::CubicField& K) {
  py::dict d;
  d["cubic"] = K.defining_poly().str();
  d["conductor"] = K.conductor.get_str();
  d["field_discriminant"] = K.field_discriminant.get_str();
  d["index"] = K.index.get_str();
  d["character"] = cubicfield::matching_character(K).id();
  return d;
}

py::dict twist_value(const std::string& curve, const std::string& chi_id, int ell, int digits) {
  auto E = census::builtin_config(curve).curve();
  auto chi = dirichlet::Character::parse(ell, chi_id).orbit_representative();
  auto norm = lvalue::calibrate_normalization(E, ell, 10, digits);
  auto rec = lvalue::analyze_orbit(E, chi, norm, digits);
  py::dict d;
  d["character"] = rec.chi.id();
  d["L_re"] = rec.L.value.re.str(30);
  d["L_im"] = rec.L.value.im.str(30);
  d["error_bound"] = rec.L.err;
  std::vector<std::string> S;
  for (auto& s : rec.sums.S) S.push_back(s.get_str());
  d["S"] = S;
  d["decision"] = lvalue::to_string(rec.decision);
  d["omega_scale"] = norm.scale.get_str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_vtwist, m) {
  m.doc() = "Twisted central L-values and cyclic cubic fields";

  static py::exception<TheoryAlarm> alarm(m, "TheoryAlarm");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TheoryAlarm& e) {
      alarm(e.what());
    } catch (const ConfigError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def("characters", [](int ell, std::uint64_t X) {
    std::vector<std::string> out;
    for (auto& c : dirichlet::enumerate(ell, X)) out.push_back(c.id());
    return out;
  }, py::arg("ell"), py::arg("max_conductor"), "Orbit representatives with conductor <= X.");

  m.def("twist_value", &twist_value, py::arg("curve"), py::arg("chi"), py::arg("ell") = 3, py::arg("digits") = 50);

  m.def("cubic_field", [](long a2, long a1, long a0) {
    auto K = cubicfield::from_cubic(numcore::QPoly{mpq_class(a0), mpq_class(a1), mpq_class(a2), mpq_class(1)});
    return field_dict(K);
  }, py::arg("a2"), py::arg("a1"), py::arg("a0"), "Field of x^3 + a2 x^2 + a1 x + a0.");

  m.def("e37b_field", [](long a, long b) {
    auto K = kummer::e37b_field(a, b);
    return field_dict(K);
  }, py::arg("a"), py::arg("b"));

  m.def("census_37b", [](std::uint64_t X, long H, std::vector<double> cutoffs) {
    auto c = kummer::census_37b(X, H, cutoffs);
    py::dict d;
    std::vector<std::string> f;
    for (auto& x : c.conductors) f.push_back(x.get_str());
    d["conductors"] = f;
    std::vector<std::pair<double, std::size_t>> ladder;
    for (auto& l : c.ladder) ladder.emplace_back(l.X, l.count);
    d["ladder"] = ladder;
    d["slope"] = c.slope ? py::cast(*c.slope) : py::none();
    d["pairs"] = c.rows.size();
    return d;
  }, py::arg("max_conductor"), py::arg("height_bound"), py::arg("cutoffs") = std::vector<double>{});

  m.def("short_quartic_matches", [](const std::string& A, const std::string& B) {
    auto S = kummer::delta_poly({0, 0, 0, q(A), q(B)});
    return py::make_tuple(S.delta == kummer::short_quartic(q(A), q(B)),
                          S.delta == kummer::printed_short_quartic(q(A), q(B)));
  }, py::arg("A"), py::arg("B"), "(matches corrected form, matches printed form)");

  m.def("conic", [](const std::string& U, const std::string& T) {
    auto c = kummer::conic_norm_test(q(U), q(T));
    py::dict d;
    d["q"] = c.q.get_str();
    d["solvable"] = c.solvable;
    d["reason"] = c.reason;
    if (c.base) d["base"] = py::make_tuple(c.base->z.get_str(), c.base->w.get_str());
    return d;
  }, py::arg("U"), py::arg("T"));

  m.def("family", [](const std::string& kind, const std::string& lambda) {
    auto F = kummer::torsion_family(kummer::parse_family_kind(kind), q(lambda));
    py::dict d;
    d["point"] = py::make_tuple(F.point.x.get_str(), F.point.y.get_str());
    d["on_curve"] = F.on_curve;
    d["nontorsion"] = F.nontorsion;
    d["singular_fiber"] = F.singular_fiber;
    return d;
  }, py::arg("kind"), py::arg("lam"));
}
