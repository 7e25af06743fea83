#include "tropkit/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tropkit {

Json scalar_to_json(TropScalar s) {
  if (s.is_eps()) return Json("inf");
  return Json(s.value());
}

TropScalar scalar_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return TropScalar::eps();
    throw std::invalid_argument("tropkit: unknown scalar literal '" + j.get<std::string>() + "'");
  }
  if (!j.is_number_integer()) throw std::invalid_argument("tropkit: scalar must be integer or \"inf\"");
  return TropScalar(j.get<long long>());
}

Json matrix_to_json(const TropMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

TropMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("tropkit: matrix must be a nonempty array");
  std::size_t n = j.size();
  std::vector<TropScalar> entries;
  entries.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("tropkit: matrix rows must all have length n");
    for (const auto& cell : row) entries.push_back(scalar_from_json(cell));
  }
  return TropMatrix(n, std::move(entries));
}

Json unipoly_to_json(const UniPoly& p) {
  Json terms = Json::array();
  for (const auto& [degree, coeff] : p.terms())
    terms.push_back(Json{{"degree", degree}, {"coefficient", coeff}});
  return terms;
}

UniPoly unipoly_from_json(const Json& j) {
  std::vector<UniPoly::Term> terms;
  for (const auto& t : j)
    terms.emplace_back(t.at("degree").get<long long>(), t.at("coefficient").get<long long>());
  return UniPoly(std::move(terms));
}

Json poly_to_json(const TropPoly& p) {
  Json monomials = Json::array();
  for (const auto& m : p.monomials())
    monomials.push_back(Json{{"coeff", m.coeff}, {"exps", m.exps}});
  return monomials;
}

TropPoly poly_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("tropkit: polynomial must be a nonempty array");
  std::vector<TropMonomial> monomials;
  std::size_t nvars = j.front().at("exps").size();
  for (const auto& m : j)
    monomials.push_back({m.at("coeff").get<long long>(), m.at("exps").get<ExpVec>()});
  return TropPoly(nvars, std::move(monomials));
}

Json rat_to_json(const TropRat& r) {
  return Json{{"num", poly_to_json(r.num)}, {"den", poly_to_json(r.den)}};
}

TropRat rat_from_json(const Json& j) {
  return TropRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json public_key_to_json(const AutPublicKey& pk) {
  Json coords = Json::array();
  for (const auto& c : pk.coords) coords.push_back(rat_to_json(c));
  return Json{{"n", pk.nvars}, {"coords", std::move(coords)}};
}

AutPublicKey public_key_from_json(const Json& j) {
  AutPublicKey pk;
  pk.nvars = j.at("n").get<std::size_t>();
  for (const auto& c : j.at("coords")) pk.coords.push_back(rat_from_json(c));
  if (pk.coords.size() != pk.nvars)
    throw std::invalid_argument("tropkit: public key needs one coordinate per variable");
  for (const auto& c : pk.coords)
    if (c.nvars() != pk.nvars)
      throw std::invalid_argument("tropkit: public key coordinate has wrong variable count");
  return pk;
}

Json private_key_to_json(const AutChain& chain) {
  Json factors = Json::array();
  for (const auto& factor : chain.factors) {
    if (const auto* mono = std::get_if<MonomialAut>(&factor)) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < mono->exponents.n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < mono->exponents.n; ++k) row.push_back(mono->exponents.at(i, k));
        rows.push_back(std::move(row));
      }
      factors.push_back(Json{{"type", "monomial"}, {"b", mono->offsets}, {"A", std::move(rows)}});
    } else {
      const auto& tri = std::get<ElemTriangularAut>(factor);
      factors.push_back(Json{{"type", "triangular"},
                             {"j", tri.axis + 1},  // 1-based in the file format
                             {"q", poly_to_json(tri.shift)}});
    }
  }
  return Json{{"n", chain.nvars}, {"factors", std::move(factors)}};
}

AutChain private_key_from_json(const Json& j) {
  AutChain chain;
  chain.nvars = j.at("n").get<std::size_t>();
  for (const auto& f : j.at("factors")) {
    std::string type = f.at("type").get<std::string>();
    if (type == "monomial") {
      MonomialAut mono;
      mono.offsets = f.at("b").get<std::vector<long long>>();
      const auto& rows = f.at("A");
      mono.exponents = IntMatrix(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows.size(); ++k)
          mono.exponents.at(i, k) = rows.at(i).at(k).get<long long>();
      chain.factors.emplace_back(std::move(mono));
    } else if (type == "triangular") {
      std::size_t axis = f.at("j").get<std::size_t>() - 1;
      chain.factors.emplace_back(ElemTriangularAut{axis, poly_from_json(f.at("q"))});
    } else {
      throw std::invalid_argument("tropkit: unknown factor type '" + type + "'");
    }
  }
  validate_chain(chain);
  return chain;
}

Json kex_transcript_to_json(const KexTranscript& t) {
  auto priv_to_json = [](const KexPrivate& priv) {
    return Json{{"p1", unipoly_to_json(priv.p1)}, {"p2", unipoly_to_json(priv.p2)}};
  };
  return Json{{"n", t.pub.a.dim()},
              {"a", matrix_to_json(t.pub.a)},
              {"b", matrix_to_json(t.pub.b)},
              {"alice", priv_to_json(t.alice)},
              {"bob", priv_to_json(t.bob)},
              {"offer_alice", matrix_to_json(t.offer_alice)},
              {"offer_bob", matrix_to_json(t.offer_bob)},
              {"key_alice", matrix_to_json(t.key_alice)},
              {"key_bob", matrix_to_json(t.key_bob)},
              {"agreement", t.agreement}};
}

Json equation_system_to_json(const TropEqSystem& system) {
  Json equations = Json::array();
  for (const auto& eq : system.equations)
    equations.push_back(Json{{"poly", poly_to_json(eq.poly)},
                             {"target", eq.target},
                             {"text", to_string(eq, system.unknown_names)}});
  return Json{{"num_unknowns", system.num_unknowns},
              {"unknowns", system.unknown_names},
              {"equations", std::move(equations)}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("tropkit: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("tropkit: cannot write '" + path + "'");
  out << content;
}

}  // namespace tropkit
