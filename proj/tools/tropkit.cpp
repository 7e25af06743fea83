#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropkit/automorphism.hpp"
#include "tropkit/fp.hpp"
#include "tropkit/json_io.hpp"
#include "tropkit/kex.hpp"
#include "tropkit/matrix.hpp"
#include "tropkit/poly.hpp"
#include "tropkit/sat.hpp"

namespace {

using namespace tropkit;

std::size_t monomial_cap() {
  const char* env = std::getenv("TROPKIT_MONOMIAL_CAP");
  if (env == nullptr) return kDefaultMonomialCap;
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw std::invalid_argument("tropkit: TROPKIT_MONOMIAL_CAP must be an unsigned integer");
  }
}

std::vector<long long> parse_point(const std::string& text) {
  std::vector<long long> point;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t begin = item.find_first_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("tropkit: empty point coordinate");
    std::size_t end = item.find_last_not_of(" \t");
    point.push_back(std::stoll(item.substr(begin, end - begin + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return point;
}

std::string format_point(const std::vector<long long>& point) {
  std::string out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(point[i]);
  }
  return out;
}

void print_matrix(std::ostream& os, const std::string& name, const TropMatrix& m) {
  os << name << ":\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < m.dim(); ++j) os << " " << to_string(m.at(i, j));
    os << "\n";
  }
}

struct KexArgs {
  std::string preset = "paper";
  std::uint64_t seed = 0;
  bool json = false;
};

int run_kex(const KexArgs& args) {
  KexParams params =
      args.preset == "toy" ? kex_preset_toy(args.seed) : kex_preset_paper(args.seed);
  KexTranscript transcript = kex_run_demo(params);
  if (args.json) {
    Json j = kex_transcript_to_json(transcript);
    j["preset"] = args.preset + "-kex";
    j["seed"] = args.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "tropical Stickel key exchange (" << args.preset << " preset, seed " << args.seed
              << ", n=" << params.n << ")\n";
    print_matrix(std::cout, "public A", transcript.pub.a);
    print_matrix(std::cout, "public B", transcript.pub.b);
    print_matrix(std::cout, "offer from Alice  p1(A) (x) p2(B)", transcript.offer_alice);
    print_matrix(std::cout, "offer from Bob    q1(A) (x) q2(B)", transcript.offer_bob);
    print_matrix(std::cout, "key computed by Alice", transcript.key_alice);
    print_matrix(std::cout, "key computed by Bob", transcript.key_bob);
    std::cout << "agreement: " << (transcript.agreement ? "true" : "false") << "\n";
  }
  return transcript.agreement ? 0 : 1;
}

struct AttackArgs {
  std::size_t k = 4;
  long long p = 101;
  int trials = 100;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_classical_attack(const AttackArgs& args) {
  ClassicalParams params;
  params.k = args.k;
  params.p = args.p;
  int recovered = 0;
  for (int t = 0; t < args.trials; ++t) {
    Rng trial_rng = Rng(args.seed).fork(static_cast<std::uint64_t>(t));
    ClassicalInstance instance = classical_run(params, trial_rng.next_u64());
    auto key = classical_attack(instance.a, instance.b, instance.u, instance.v,
                                trial_rng.next_u64());
    if (key && *key == instance.key) ++recovered;
  }
  double rate = args.trials > 0 ? static_cast<double>(recovered) / args.trials : 0.0;
  if (args.json) {
    Json j{{"k", args.k},      {"p", args.p},
           {"trials", args.trials}, {"seed", args.seed},
           {"recovered", recovered}, {"success_rate", rate}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "classical Stickel attack: k=" << args.k << " p=" << args.p
              << " trials=" << args.trials << " seed=" << args.seed << "\n";
    std::cout << "exact key recoveries: " << recovered << "/" << args.trials << " ("
              << rate * 100.0 << "%)\n";
  }
  return 0;
}

struct KeygenArgs {
  std::string preset = "paper";
  std::size_t n = 0;  // 0 = take the preset's n
  std::uint64_t seed = 0;
  std::string out_pub;
  std::string out_priv;
  bool json = false;
};

int run_aut_keygen(const KeygenArgs& args) {
  AutKeygenParams params =
      args.preset == "toy" ? aut_preset_toy(args.seed) : aut_preset_paper(args.seed);
  if (args.n != 0) params.n = args.n;
  params.monomial_cap = monomial_cap();
  AutKeyPair keys = aut_keygen(params);
  write_text_file(args.out_pub, public_key_to_json(keys.pub).dump() + "\n");
  write_text_file(args.out_priv, private_key_to_json(keys.priv).dump() + "\n");
  std::size_t monomials = 0;
  for (const auto& c : keys.pub.coords) monomials += c.num.size() + c.den.size();
  if (args.json) {
    Json j{{"n", params.n},
           {"seed", args.seed},
           {"public_key", args.out_pub},
           {"private_key", args.out_priv},
           {"public_monomials", monomials}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "generated automorphism key pair (n=" << params.n << ", seed=" << args.seed
              << ")\n";
    std::cout << "public key:  " << args.out_pub << " (" << monomials << " monomials)\n";
    std::cout << "private key: " << args.out_priv << "\n";
  }
  return 0;
}

struct PointArgs {
  std::string key_path;
  std::string point;
  bool json = false;
};

int run_aut_encrypt(const PointArgs& args) {
  AutPublicKey pk = public_key_from_json(Json::parse(read_text_file(args.key_path)));
  std::vector<long long> s = parse_point(args.point);
  std::vector<long long> cipher = aut_encrypt(pk, s);
  if (args.json)
    std::cout << Json{{"point", s}, {"cipher", cipher}}.dump(2) << "\n";
  else
    std::cout << format_point(cipher) << "\n";
  return 0;
}

int run_aut_decrypt(const PointArgs& args) {
  AutChain chain = private_key_from_json(Json::parse(read_text_file(args.key_path)));
  std::vector<long long> c = parse_point(args.point);
  std::vector<long long> plain = aut_decrypt(chain, c);
  if (args.json)
    std::cout << Json{{"point", c}, {"plain", plain}}.dump(2) << "\n";
  else
    std::cout << format_point(plain) << "\n";
  return 0;
}

struct SatArgs {
  std::string path;
  bool solve = false;
  std::string domain = "0,1";
  bool json = false;
};

int run_sat_reduce(const SatArgs& args) {
  CnfFormula formula = parse_dimacs(read_text_file(args.path));
  TropEqSystem system = reduce_to_tropical(formula);
  std::vector<long long> domain = parse_point(args.domain);
  std::optional<std::vector<long long>> solution;
  if (args.solve) solution = solve_tropical_brute(system, domain);

  if (args.json) {
    Json j = equation_system_to_json(system);
    if (args.solve) {
      j["solve"] = Json{{"domain", domain}, {"solvable", solution.has_value()}};
      if (solution) j["solve"]["assignment"] = *solution;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "tropical system for " << formula.num_vars << " variables, "
              << formula.clauses.size() << " clauses:\n";
    for (const auto& eq : system.equations)
      std::cout << "  " << to_string(eq, system.unknown_names) << "\n";
    if (args.solve) {
      if (solution) {
        std::cout << "solvable over {" << args.domain << "}:";
        for (std::size_t i = 0; i < solution->size(); ++i)
          std::cout << " " << system.unknown_names[i] << "=" << (*solution)[i];
        std::cout << "\n";
      } else {
        std::cout << "unsolvable over {" << args.domain << "}\n";
      }
    }
  }
  return 0;
}

int run_selftest() {
  int failures = 0;
  auto check = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  TropScalar e = TropScalar::eps();
  TropMatrix lhs = TropMatrix::from_rows({{1, 2}, {5, -1}});
  TropMatrix rhs = TropMatrix::from_rows({{0, 3}, {2, 8}});

  check("matrix (+) fixture", m_add(lhs, rhs) == TropMatrix::from_rows({{0, 2}, {2, -1}}));
  check("matrix (x) fixture", m_mul(lhs, rhs) == TropMatrix::from_rows({{1, 4}, {1, 7}}));
  check("scalar (x) matrix fixture",
        m_scalar_mul(2, lhs) == TropMatrix::from_rows({{3, 4}, {7, 1}}));
  check("scalar matrix equals diagonal form",
        m_scalar_mul(2, lhs) == m_mul(TropMatrix::from_rows({{2, e}, {e, 2}}), lhs));

  // x (x) x (x) y (x) z (x) z has degree 5
  TropMonomial monomial{0, {2, 1, 2}};
  check("monomial degree fixture", monomial.degree() == 5);

  // 5 (x) x (x) y (x) z (+) x (x) x (+) 2 (x) z (+) 17 has degree 3
  TropPoly example_poly(3, {TropMonomial{5, {1, 1, 1}},
                            TropMonomial{0, {2, 0, 0}},
                            TropMonomial{2, {0, 0, 1}},
                            TropMonomial{17, {0, 0, 0}}});
  check("polynomial degree fixture", example_poly.degree() == 3);

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropkit: tropical (min-plus) algebra and cryptography toolkit"};
  app.require_subcommand(1);

  KexArgs kex_args;
  auto* kex_cmd = app.add_subcommand("kex", "run the tropical Stickel key exchange end to end");
  kex_cmd->add_option("--preset", kex_args.preset, "parameter preset")
      ->check(CLI::IsMember({"paper", "toy"}));
  kex_cmd->add_option("--seed", kex_args.seed, "RNG seed")->required();
  kex_cmd->add_flag("--json", kex_args.json, "structured output");

  AttackArgs attack_args;
  auto* attack_cmd = app.add_subcommand(
      "classical-attack", "reproduce the linear-algebra attack on the classical protocol");
  attack_cmd->add_option("--k", attack_args.k, "matrix dimension");
  attack_cmd->add_option("--p", attack_args.p, "prime modulus");
  attack_cmd->add_option("--trials", attack_args.trials, "number of seeded protocol runs");
  attack_cmd->add_option("--seed", attack_args.seed, "RNG seed")->required();
  attack_cmd->add_flag("--json", attack_args.json, "structured output");

  KeygenArgs keygen_args;
  auto* keygen_cmd =
      app.add_subcommand("aut-keygen", "generate an automorphism encryption key pair");
  keygen_cmd->add_option("--preset", keygen_args.preset, "parameter preset")
      ->check(CLI::IsMember({"paper", "toy"}));
  keygen_cmd->add_option("--n", keygen_args.n, "number of variables");
  keygen_cmd->add_option("--seed", keygen_args.seed, "RNG seed")->required();
  keygen_cmd->add_option("--out-pub", keygen_args.out_pub, "public key output path")->required();
  keygen_cmd->add_option("--out-priv", keygen_args.out_priv, "private key output path")
      ->required();
  keygen_cmd->add_flag("--json", keygen_args.json, "structured output");

  PointArgs encrypt_args;
  auto* encrypt_cmd = app.add_subcommand("aut-encrypt", "encrypt an integer point");
  encrypt_cmd->add_option("--pub", encrypt_args.key_path, "public key file")->required();
  encrypt_cmd->add_option("--point", encrypt_args.point, "comma-separated integers")->required();
  encrypt_cmd->add_flag("--json", encrypt_args.json, "structured output");

  PointArgs decrypt_args;
  auto* decrypt_cmd = app.add_subcommand("aut-decrypt", "decrypt an integer point");
  decrypt_cmd->add_option("--priv", decrypt_args.key_path, "private key file")->required();
  decrypt_cmd->add_option("--point", decrypt_args.point, "comma-separated integers")->required();
  decrypt_cmd->add_flag("--json", decrypt_args.json, "structured output");

  SatArgs sat_args;
  auto* sat_cmd =
      app.add_subcommand("sat-reduce", "reduce a DIMACS CNF to a tropical polynomial system");
  sat_cmd->add_option("file", sat_args.path, "DIMACS CNF file")->required();
  sat_cmd->add_flag("--solve", sat_args.solve, "brute-force the system");
  sat_cmd->add_option("--domain", sat_args.domain, "search domain, comma-separated");
  sat_cmd->add_flag("--json", sat_args.json, "structured output");

  auto* selftest_cmd = app.add_subcommand("selftest", "check the built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (kex_cmd->parsed()) return run_kex(kex_args);
    if (attack_cmd->parsed()) return run_classical_attack(attack_args);
    if (keygen_cmd->parsed()) return run_aut_keygen(keygen_args);
    if (encrypt_cmd->parsed()) return run_aut_encrypt(encrypt_args);
    if (decrypt_cmd->parsed()) return run_aut_decrypt(decrypt_args);
    if (sat_cmd->parsed()) return run_sat_reduce(sat_args);
    if (selftest_cmd->parsed()) return run_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
