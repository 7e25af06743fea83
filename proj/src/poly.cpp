#include "tropkit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace tropkit {

long long TropMonomial::degree() const {
  long long sum = 0;
  for (long long e : exps) sum = checked_add(sum, e);
  return sum;
}

bool deglex_before(const ExpVec& a, const ExpVec& b) {
  long long da = 0, db = 0;
  for (long long e : a) da = checked_add(da, e);
  for (long long e : b) db = checked_add(db, e);
  if (da != db) return da > db;
  return a > b;
}

namespace {

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (long long e : v) {
      h ^= static_cast<std::size_t>(e);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

using MergeMap = std::unordered_map<ExpVec, long long, ExpVecHash>;

std::vector<TropMonomial> to_canonical(MergeMap&& map) {
  std::vector<TropMonomial> out;
  out.reserve(map.size());
  for (auto& [exps, coeff] : map) out.push_back({coeff, exps});
  std::sort(out.begin(), out.end(), [](const TropMonomial& a, const TropMonomial& b) {
    return deglex_before(a.exps, b.exps);
  });
  return out;
}

void upsert_min(MergeMap& map, ExpVec&& exps, long long coeff, std::size_t cap) {
  auto [it, inserted] = map.try_emplace(std::move(exps), coeff);
  if (!inserted)
    it->second = std::min(it->second, coeff);
  else if (map.size() > cap)
    throw MonomialCapError(cap);
}

void require_same_nvars(const TropPoly& p, const TropPoly& q) {
  if (p.nvars() != q.nvars())
    throw std::invalid_argument("tropkit: polynomial variable count mismatch");
}

}  // namespace

TropPoly::TropPoly(std::size_t nvars, std::vector<TropMonomial> monomials) : nvars_(nvars) {
  if (monomials.empty()) throw std::invalid_argument("tropkit: empty polynomial");
  for (const auto& m : monomials)
    if (m.exps.size() != nvars)
      throw std::invalid_argument("tropkit: monomial exponent vector has wrong length");
  std::sort(monomials.begin(), monomials.end(), [](const TropMonomial& a, const TropMonomial& b) {
    return a.exps != b.exps ? deglex_before(a.exps, b.exps) : a.coeff < b.coeff;
  });
  for (auto& m : monomials) {
    if (!monomials_.empty() && monomials_.back().exps == m.exps)
      monomials_.back().coeff = std::min(monomials_.back().coeff, m.coeff);
    else
      monomials_.push_back(std::move(m));
  }
}

TropPoly TropPoly::constant(std::size_t nvars, long long c) {
  return TropPoly(nvars, {TropMonomial{c, ExpVec(nvars, 0)}});
}

TropPoly TropPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("tropkit: variable index out of range");
  ExpVec e(nvars, 0);
  e[index] = 1;
  return TropPoly(nvars, {TropMonomial{0, std::move(e)}});
}

TropPoly TropPoly::monomial(std::size_t nvars, TropMonomial m) {
  return TropPoly(nvars, {std::move(m)});
}

long long TropPoly::degree() const {
  long long best = monomials_.front().degree();
  for (const auto& m : monomials_) best = std::max(best, m.degree());
  return best;
}

TropPoly poly_add(const TropPoly& p, const TropPoly& q, std::size_t cap) {
  require_same_nvars(p, q);
  MergeMap map;
  map.reserve(p.size() + q.size());
  for (const auto& m : p.monomials()) upsert_min(map, ExpVec(m.exps), m.coeff, cap);
  for (const auto& m : q.monomials()) upsert_min(map, ExpVec(m.exps), m.coeff, cap);
  return TropPoly(p.nvars(), to_canonical(std::move(map)));
}

TropPoly poly_mul(const TropPoly& p, const TropPoly& q, std::size_t cap) {
  require_same_nvars(p, q);
  MergeMap map;
  map.reserve(std::min(cap + 1, p.size() * q.size()));
  ExpVec exps(p.nvars());
  for (const auto& a : p.monomials())
    for (const auto& b : q.monomials()) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = checked_add(a.exps[i], b.exps[i]);
      upsert_min(map, ExpVec(exps), checked_add(a.coeff, b.coeff), cap);
    }
  return TropPoly(p.nvars(), to_canonical(std::move(map)));
}

TropPoly poly_pow(const TropPoly& p, long long k, std::size_t cap) {
  if (k < 0) throw std::invalid_argument("tropkit: polynomial power requires k >= 0");
  TropPoly result = TropPoly::constant(p.nvars(), 0);
  TropPoly base = p;
  while (k > 0) {
    if (k & 1) result = poly_mul(result, base, cap);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base, cap);
  }
  return result;
}

long long poly_eval(const TropPoly& p, std::span<const long long> point) {
  if (point.size() != p.nvars())
    throw std::invalid_argument("tropkit: evaluation point has wrong length");
  bool first = true;
  long long best = 0;
  for (const auto& m : p.monomials()) {
    long long v = m.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m.exps[i] != 0) v = checked_add(v, checked_mul(m.exps[i], point[i]));
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

TropRat::TropRat(TropPoly n, TropPoly d) : num(std::move(n)), den(std::move(d)) {
  if (num.nvars() != den.nvars())
    throw std::invalid_argument("tropkit: quotient components disagree on variable count");
}

TropRat TropRat::from_poly(TropPoly p) {
  std::size_t nvars = p.nvars();
  return TropRat(std::move(p), TropPoly::constant(nvars, 0));
}

TropRat rat_add(const TropRat& r, const TropRat& s, std::size_t cap) {
  return TropRat(poly_add(poly_mul(r.num, s.den, cap), poly_mul(r.den, s.num, cap), cap),
                 poly_mul(r.den, s.den, cap));
}

TropRat rat_mul(const TropRat& r, const TropRat& s, std::size_t cap) {
  return TropRat(poly_mul(r.num, s.num, cap), poly_mul(r.den, s.den, cap));
}

TropRat rat_div(const TropRat& r, const TropRat& s, std::size_t cap) {
  return TropRat(poly_mul(r.num, s.den, cap), poly_mul(r.den, s.num, cap));
}

TropRat rat_pow(const TropRat& r, long long k, std::size_t cap) {
  if (k >= 0) return TropRat(poly_pow(r.num, k, cap), poly_pow(r.den, k, cap));
  return TropRat(poly_pow(r.den, -k, cap), poly_pow(r.num, -k, cap));
}

bool rat_equiv(const TropRat& r, const TropRat& s, std::size_t cap) {
  if (r.nvars() != s.nvars())
    throw std::invalid_argument("tropkit: quotient variable count mismatch");
  return poly_mul(r.num, s.den, cap) == poly_mul(r.den, s.num, cap);
}

long long rat_eval(const TropRat& r, std::span<const long long> point) {
  return checked_sub(poly_eval(r.num, point), poly_eval(r.den, point));
}

TropRat poly_substitute(const TropPoly& p, std::span<const TropRat> args, std::size_t cap) {
  if (args.size() != p.nvars())
    throw std::invalid_argument("tropkit: substitution needs one argument per variable");
  std::size_t out_vars = args.empty() ? 0 : args.front().nvars();
  for (const auto& a : args)
    if (a.nvars() != out_vars)
      throw std::invalid_argument("tropkit: substitution arguments disagree on variable count");

  bool first = true;
  TropRat acc = TropRat::from_poly(TropPoly::constant(out_vars, 0));
  for (const auto& m : p.monomials()) {
    TropRat image = TropRat::from_poly(TropPoly::constant(out_vars, m.coeff));
    for (std::size_t i = 0; i < args.size(); ++i)
      if (m.exps[i] != 0) image = rat_mul(image, rat_pow(args[i], m.exps[i], cap), cap);
    acc = first ? image : rat_add(acc, image, cap);
    first = false;
  }
  return acc;
}

TropRat rat_substitute(const TropRat& r, std::span<const TropRat> args, std::size_t cap) {
  return rat_div(poly_substitute(r.num, args, cap), poly_substitute(r.den, args, cap), cap);
}

namespace {

std::string var_name(std::span<const std::string> names, std::size_t i) {
  if (i < names.size()) return names[i];
  return "x" + std::to_string(i + 1);
}

void render_monomial(std::ostringstream& os, const TropMonomial& m,
                     std::span<const std::string> names) {
  bool wrote = false;
  if (m.coeff != 0 || std::all_of(m.exps.begin(), m.exps.end(), [](long long e) { return e == 0; })) {
    os << m.coeff;
    wrote = true;
  }
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (wrote) os << " (x) ";
    os << var_name(names, i);
    if (m.exps[i] != 1) os << "^" << m.exps[i];
    wrote = true;
  }
}

}  // namespace

std::string to_string(const TropPoly& p, std::span<const std::string> names) {
  std::ostringstream os;
  bool first = true;
  for (const auto& m : p.monomials()) {
    if (!first) os << " (+) ";
    render_monomial(os, m, names);
    first = false;
  }
  return os.str();
}

std::string to_string(const TropRat& r, std::span<const std::string> names) {
  bool trivial_den = r.den.size() == 1 && r.den.monomials().front().coeff == 0 &&
                     r.den.monomials().front().degree() == 0 &&
                     std::all_of(r.den.monomials().front().exps.begin(),
                                 r.den.monomials().front().exps.end(),
                                 [](long long e) { return e == 0; });
  if (trivial_den) return to_string(r.num, names);
  return "(" + to_string(r.num, names) + ") (/) (" + to_string(r.den, names) + ")";
}

}  // namespace tropkit
