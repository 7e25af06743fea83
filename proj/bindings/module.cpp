#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "tropkit/automorphism.hpp"
#include "tropkit/fp.hpp"
#include "tropkit/json_io.hpp"
#include "tropkit/kex.hpp"
#include "tropkit/matrix.hpp"
#include "tropkit/poly.hpp"
#include "tropkit/sat.hpp"

namespace py = pybind11;
using namespace tropkit;

namespace {

// Epsilon crosses the boundary as float("inf"); finite scalars as ints.
TropScalar scalar_from_py(py::handle h) {
  if (py::isinstance<py::bool_>(h))
    throw py::type_error("tropical scalars are integers or float('inf')");
  if (py::isinstance<py::int_>(h)) return TropScalar(h.cast<long long>());
  if (py::isinstance<py::float_>(h)) {
    double v = h.cast<double>();
    if (std::isinf(v) && v > 0) return TropScalar::eps();
    throw py::type_error("tropical scalars are integers or float('inf')");
  }
  throw py::type_error("tropical scalars are integers or float('inf')");
}

py::object scalar_to_py(TropScalar s) {
  if (s.is_eps()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(s.value());
}

TropMatrix matrix_from_rows(const py::sequence& rows) {
  std::vector<std::vector<TropScalar>> data;
  for (auto row : rows) {
    std::vector<TropScalar> r;
    for (auto cell : py::cast<py::sequence>(row)) r.push_back(scalar_from_py(cell));
    data.push_back(std::move(r));
  }
  return TropMatrix::from_rows(data);
}

py::list matrix_rows(const TropMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.dim(); ++j) row.append(scalar_to_py(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

TropPoly poly_from_pairs(std::size_t nvars, const py::sequence& monomials) {
  std::vector<TropMonomial> out;
  for (auto item : monomials) {
    auto pair = py::cast<py::sequence>(item);
    out.push_back({pair[0].cast<long long>(), pair[1].cast<ExpVec>()});
  }
  return TropPoly(nvars, std::move(out));
}

py::list poly_pairs(const TropPoly& p) {
  py::list out;
  for (const auto& m : p.monomials()) out.append(py::make_tuple(m.coeff, m.exps));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tropical (min-plus) algebra and the cryptographic schemes built on it";
  m.attr("EPS") = py::float_(std::numeric_limits<double>::infinity());

  // scalar operations
  m.def("t_add", [](py::object a, py::object b) {
    return scalar_to_py(t_add(scalar_from_py(a), scalar_from_py(b)));
  });
  m.def("t_mul", [](py::object a, py::object b) {
    return scalar_to_py(t_mul(scalar_from_py(a), scalar_from_py(b)));
  });
  m.def("t_div", [](py::object a, py::object b) {
    return scalar_to_py(t_div(scalar_from_py(a), scalar_from_py(b)));
  });
  m.def("t_pow", [](py::object a, long long k) {
    return scalar_to_py(t_pow(scalar_from_py(a), k));
  });

  // matrices and univariate polynomials
  py::class_<TropMatrix>(m, "TropMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_static("identity", &TropMatrix::identity, py::arg("n"))
      .def_property_readonly("n", &TropMatrix::dim)
      .def("rows", &matrix_rows)
      .def("all_finite", &TropMatrix::all_finite)
      .def("__eq__", [](const TropMatrix& a, const TropMatrix& b) { return a == b; })
      .def("__repr__", [](const TropMatrix& m_) {
        return "TropMatrix(n=" + std::to_string(m_.dim()) + ")";
      });
  m.def("m_add", &m_add);
  m.def("m_mul", &m_mul);
  m.def("m_scalar_mul",
        [](py::object lam, const TropMatrix& a) { return m_scalar_mul(scalar_from_py(lam), a); });
  m.def("m_pow", &m_pow);
  m.def("m_is_invertible", &m_is_invertible);

  py::class_<UniPoly>(m, "UniPoly")
      .def(py::init<std::vector<UniPoly::Term>>(), py::arg("terms"))
      .def_property_readonly("terms", &UniPoly::terms)
      .def_property_readonly("degree", &UniPoly::degree)
      .def("__eq__", [](const UniPoly& a, const UniPoly& b) { return a == b; });
  m.def("poly_eval_matrix", &poly_eval_matrix);

  // multivariate polynomials and rational functions
  py::class_<TropPoly>(m, "TropPoly")
      .def(py::init(&poly_from_pairs), py::arg("nvars"), py::arg("monomials"))
      .def_static("constant", &TropPoly::constant)
      .def_static("variable", &TropPoly::variable)
      .def_property_readonly("nvars", &TropPoly::nvars)
      .def_property_readonly("degree", &TropPoly::degree)
      .def("monomials", &poly_pairs)
      .def("__len__", &TropPoly::size)
      .def("__eq__", [](const TropPoly& a, const TropPoly& b) { return a == b; })
      .def("__str__", [](const TropPoly& p) { return to_string(p); });
  m.def("poly_add", &poly_add, py::arg("p"), py::arg("q"), py::arg("cap") = kDefaultMonomialCap);
  m.def("poly_mul", &poly_mul, py::arg("p"), py::arg("q"), py::arg("cap") = kDefaultMonomialCap);
  m.def("poly_eval", [](const TropPoly& p, const std::vector<long long>& point) {
    return poly_eval(p, point);
  });

  py::class_<TropRat>(m, "TropRat")
      .def(py::init<TropPoly, TropPoly>(), py::arg("num"), py::arg("den"))
      .def_static("from_poly", &TropRat::from_poly)
      .def_readonly("num", &TropRat::num)
      .def_readonly("den", &TropRat::den)
      .def("__eq__", [](const TropRat& a, const TropRat& b) { return a == b; })
      .def("__str__", [](const TropRat& r) { return to_string(r); });
  m.def("rat_add", &rat_add, py::arg("r"), py::arg("s"), py::arg("cap") = kDefaultMonomialCap);
  m.def("rat_mul", &rat_mul, py::arg("r"), py::arg("s"), py::arg("cap") = kDefaultMonomialCap);
  m.def("rat_equiv", &rat_equiv, py::arg("r"), py::arg("s"), py::arg("cap") = kDefaultMonomialCap);
  m.def("rat_eval", [](const TropRat& r, const std::vector<long long>& point) {
    return rat_eval(r, point);
  });
  m.def(
      "rat_substitute",
      [](const TropRat& r, const std::vector<TropRat>& args, std::size_t cap) {
        return rat_substitute(r, args, cap);
      },
      py::arg("r"), py::arg("args"), py::arg("cap") = kDefaultMonomialCap);

  // key exchange
  py::class_<KexParams>(m, "KexParams")
      .def(py::init<>())
      .def_readwrite("n", &KexParams::n)
      .def_readwrite("entry_lo", &KexParams::entry_lo)
      .def_readwrite("entry_hi", &KexParams::entry_hi)
      .def_readwrite("degree_lo", &KexParams::degree_lo)
      .def_readwrite("degree_hi", &KexParams::degree_hi)
      .def_readwrite("coeff_lo", &KexParams::coeff_lo)
      .def_readwrite("coeff_hi", &KexParams::coeff_hi)
      .def_readwrite("seed", &KexParams::seed);
  m.def("kex_preset_paper", &kex_preset_paper, py::arg("seed"));
  m.def("kex_preset_toy", &kex_preset_toy, py::arg("seed"));

  py::class_<KexPublic>(m, "KexPublic")
      .def_readonly("a", &KexPublic::a)
      .def_readonly("b", &KexPublic::b);
  py::class_<KexPrivate>(m, "KexPrivate")
      .def(py::init<UniPoly, UniPoly>(), py::arg("p1"), py::arg("p2"))
      .def_readonly("p1", &KexPrivate::p1)
      .def_readonly("p2", &KexPrivate::p2);
  py::class_<KexTranscript>(m, "KexTranscript")
      .def_readonly("pub", &KexTranscript::pub)
      .def_readonly("alice", &KexTranscript::alice)
      .def_readonly("bob", &KexTranscript::bob)
      .def_readonly("offer_alice", &KexTranscript::offer_alice)
      .def_readonly("offer_bob", &KexTranscript::offer_bob)
      .def_readonly("key_alice", &KexTranscript::key_alice)
      .def_readonly("key_bob", &KexTranscript::key_bob)
      .def_readonly("agreement", &KexTranscript::agreement);
  m.def("kex_setup", &kex_setup);
  m.def("kex_offer", &kex_offer);
  m.def("kex_finish", &kex_finish);
  m.def("kex_run_demo", &kex_run_demo);
  m.def("kex_keyspace_log10", &kex_keyspace_log10);

  // classical baseline
  py::class_<FpMatrix>(m, "FpMatrix")
      .def(py::init([](std::size_t k, long long p, const std::vector<long long>& entries) {
             return FpMatrix(k, p, entries);
           }),
           py::arg("k"), py::arg("p"), py::arg("entries"))
      .def_property_readonly("k", &FpMatrix::dim)
      .def_property_readonly("p", &FpMatrix::modulus)
      .def("at", [](const FpMatrix& m_, std::size_t i, std::size_t j) { return m_.at(i, j); })
      .def("__eq__", [](const FpMatrix& a, const FpMatrix& b) { return a == b; });
  py::class_<ClassicalInstance>(m, "ClassicalInstance")
      .def_readonly("a", &ClassicalInstance::a)
      .def_readonly("b", &ClassicalInstance::b)
      .def_readonly("u", &ClassicalInstance::u)
      .def_readonly("v", &ClassicalInstance::v)
      .def_readonly("key", &ClassicalInstance::key);
  m.def(
      "classical_run",
      [](std::size_t k, long long p, std::uint64_t seed) {
        ClassicalParams params;
        params.k = k;
        params.p = p;
        return classical_run(params, seed);
      },
      py::arg("k"), py::arg("p"), py::arg("seed"));
  m.def("classical_attack", &classical_attack, py::arg("a"), py::arg("b"), py::arg("u"),
        py::arg("v"), py::arg("seed"), py::arg("combination_attempts") = 50);

  // automorphism encryption
  py::class_<AutKeygenParams>(m, "AutKeygenParams")
      .def(py::init<>())
      .def_readwrite("n", &AutKeygenParams::n)
      .def_readwrite("seed", &AutKeygenParams::seed)
      .def_readwrite("coeff_lo", &AutKeygenParams::coeff_lo)
      .def_readwrite("coeff_hi", &AutKeygenParams::coeff_hi)
      .def_readwrite("q_degree", &AutKeygenParams::q_degree)
      .def_readwrite("q_extra_prob", &AutKeygenParams::q_extra_prob)
      .def_readwrite("monomial_cap", &AutKeygenParams::monomial_cap)
      .def_readwrite("max_attempts", &AutKeygenParams::max_attempts);
  m.def("aut_preset_paper", &aut_preset_paper, py::arg("seed"));
  m.def("aut_preset_toy", &aut_preset_toy, py::arg("seed"));

  py::class_<AutChain>(m, "AutChain").def_readonly("nvars", &AutChain::nvars);
  py::class_<AutPublicKey>(m, "AutPublicKey")
      .def_readonly("nvars", &AutPublicKey::nvars)
      .def_readonly("coords", &AutPublicKey::coords);

  m.def("aut_keygen", [](const AutKeygenParams& params) {
    AutKeyPair keys = aut_keygen(params);
    return py::make_tuple(keys.pub, keys.priv);
  });
  m.def("aut_compose", &aut_compose, py::arg("chain"), py::arg("cap") = kDefaultMonomialCap);
  m.def("aut_apply_point", [](const AutChain& chain, const std::vector<long long>& point) {
    return aut_apply_point(chain, point);
  });
  m.def("aut_apply_point_inverse",
        [](const AutChain& chain, const std::vector<long long>& point) {
          return aut_apply_point_inverse(chain, point);
        });
  m.def("aut_encrypt", [](const AutPublicKey& pk, const std::vector<long long>& point) {
    return aut_encrypt(pk, point);
  });
  m.def("aut_decrypt", [](const AutChain& chain, const std::vector<long long>& point) {
    return aut_decrypt(chain, point);
  });
  m.def(
      "aut_apply_poly",
      [](const AutPublicKey& pk, const TropPoly& u, std::size_t cap) {
        return aut_apply_poly(pk, u, cap);
      },
      py::arg("pk"), py::arg("u"), py::arg("cap") = kDefaultMonomialCap);
  m.def("public_key_to_json", [](const AutPublicKey& pk) { return public_key_to_json(pk).dump(); });
  m.def("public_key_from_json",
        [](const std::string& text) { return public_key_from_json(Json::parse(text)); });
  m.def("private_key_to_json",
        [](const AutChain& chain) { return private_key_to_json(chain).dump(); });
  m.def("private_key_from_json",
        [](const std::string& text) { return private_key_from_json(Json::parse(text)); });

  // SAT reduction
  py::class_<CnfFormula>(m, "CnfFormula")
      .def(py::init<>())
      .def(py::init([](int num_vars, std::vector<std::vector<int>> clauses) {
             return CnfFormula{num_vars, std::move(clauses)};
           }),
           py::arg("num_vars"), py::arg("clauses"))
      .def_readwrite("num_vars", &CnfFormula::num_vars)
      .def_readwrite("clauses", &CnfFormula::clauses);
  py::class_<TropEquation>(m, "TropEquation")
      .def_readonly("poly", &TropEquation::poly)
      .def_readonly("target", &TropEquation::target);
  py::class_<TropEqSystem>(m, "TropEqSystem")
      .def_readonly("num_unknowns", &TropEqSystem::num_unknowns)
      .def_readonly("equations", &TropEqSystem::equations)
      .def_readonly("unknown_names", &TropEqSystem::unknown_names);
  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def("reduce_to_tropical", &reduce_to_tropical);
  m.def(
      "solve_tropical_brute",
      [](const TropEqSystem& system, const std::vector<long long>& domain, std::uint64_t budget) {
        return solve_tropical_brute(system, domain, budget);
      },
      py::arg("system"), py::arg("domain"), py::arg("budget") = (1ULL << 24));
  m.def("solve_sat_brute", &solve_sat_brute);
  m.def("lift_assignment", &lift_assignment);
  m.def("project_assignment", [](const std::vector<long long>& assignment) {
    return project_assignment(assignment);
  });
}
