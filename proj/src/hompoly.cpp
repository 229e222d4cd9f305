#include "lorcheck/hompoly.hpp"

#include <algorithm>
#include <sstream>

namespace lorcheck {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    std::size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!valid(num, true) || !valid(den, false))
    throw InputError("malformed rational literal '" + s + "'");
  Rat r(num + "/" + den);
  if (r.get_den() == 0) throw InputError("rational with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

Rat pow_rat(const Rat& base, int exp) {
  Rat r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<MultiIndex> multi_indices_of_degree(int n, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // Recursive lexicographic enumeration, first variable outermost.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[pos] = e;
      self(self, pos + 1, rem - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to_degree(int n, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) {
    auto part = multi_indices_of_degree(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

RatVector rat_vector(std::initializer_list<long> entries) {
  RatVector v(static_cast<int>(entries.size()));
  int i = 0;
  for (long e : entries) v(i++) = Rat(e);
  return v;
}

bool vec_eq(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool vec_lex_less(const RatVector& a, const RatVector& b) {
  for (int i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return a.size() < b.size();
}

HomPoly make_hompoly(int nvars, int degree,
                     const std::vector<std::pair<MultiIndex, Rat>>& terms) {
  if (nvars < 0 || degree < 0) throw InputError("negative nvars or degree");
  HomPoly f(nvars, degree);
  for (const auto& [alpha, c] : terms) {
    if (static_cast<int>(alpha.size()) != nvars)
      throw InputError("exponent vector length mismatch");
    for (int e : alpha)
      if (e < 0) throw InputError("negative exponent");
    if (lorcheck::degree(alpha) != degree)
      throw InputError("term degree mismatch");
    if (c != 0) f.terms[alpha] += c;
  }
  for (auto it = f.terms.begin(); it != f.terms.end();)
    it = (it->second == 0) ? f.terms.erase(it) : std::next(it);
  return f;
}

bool has_nonnegative_coefficients(const HomPoly& f) {
  for (const auto& [alpha, c] : f.terms)
    if (c < 0) return false;
  return true;
}

std::set<MultiIndex> support(const HomPoly& f) {
  std::set<MultiIndex> s;
  for (const auto& [alpha, c] : f.terms) s.insert(alpha);
  return s;
}

Rat evaluate(const HomPoly& f, const RatVector& x) {
  if (x.size() != f.nvars) throw InputError("evaluation point dimension mismatch");
  // Power cache: powers[i][e] = x_i^e.
  std::vector<std::vector<Rat>> powers(f.nvars);
  for (int i = 0; i < f.nvars; ++i) {
    powers[i].resize(f.degree + 1);
    powers[i][0] = 1;
    for (int e = 1; e <= f.degree; ++e) powers[i][e] = powers[i][e - 1] * x(i);
  }
  Rat total = 0;
  for (const auto& [alpha, c] : f.terms) {
    Rat t = c;
    for (int i = 0; i < f.nvars; ++i)
      if (alpha[i] > 0) t *= powers[i][alpha[i]];
    total += t;
  }
  return total;
}

HomPoly partial1(const HomPoly& f, int var) {
  if (var < 0 || var >= f.nvars) throw InputError("derivative variable out of range");
  HomPoly g(f.nvars, f.degree > 0 ? f.degree - 1 : 0);
  if (f.degree == 0) return g;
  for (const auto& [alpha, c] : f.terms) {
    if (alpha[var] == 0) continue;
    MultiIndex beta = alpha;
    beta[var] -= 1;
    g.terms[beta] += c * alpha[var];
  }
  for (auto it = g.terms.begin(); it != g.terms.end();)
    it = (it->second == 0) ? g.terms.erase(it) : std::next(it);
  return g;
}

HomPoly partial(const HomPoly& f, const MultiIndex& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars)
    throw InputError("derivative multi-index length mismatch");
  HomPoly g = f;
  for (int i = 0; i < f.nvars; ++i)
    for (int k = 0; k < alpha[i]; ++k) g = partial1(g, i);
  return g;
}

RatVector gradient_at(const HomPoly& f, const RatVector& x) {
  RatVector g(f.nvars);
  for (int i = 0; i < f.nvars; ++i) g(i) = evaluate(partial1(f, i), x);
  return g;
}

RatMatrix hessian_at(const HomPoly& f, const RatVector& x) {
  RatMatrix h(f.nvars, f.nvars);
  for (int i = 0; i < f.nvars; ++i) {
    HomPoly fi = partial1(f, i);
    for (int j = i; j < f.nvars; ++j) {
      h(i, j) = evaluate(partial1(fi, j), x);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

HomPoly add(const HomPoly& f, const HomPoly& g) {
  if (f.nvars != g.nvars || f.degree != g.degree)
    throw InputError("adding polynomials of different shape");
  HomPoly h = f;
  for (const auto& [alpha, c] : g.terms) {
    h.terms[alpha] += c;
    if (h.terms[alpha] == 0) h.terms.erase(alpha);
  }
  return h;
}

HomPoly scale(const HomPoly& f, const Rat& c) {
  HomPoly h(f.nvars, f.degree);
  if (c == 0) return h;
  for (const auto& [alpha, k] : f.terms) h.terms[alpha] = k * c;
  return h;
}

HomPoly mul(const HomPoly& f, const HomPoly& g) {
  if (f.nvars != g.nvars) throw InputError("multiplying polynomials in different variables");
  HomPoly h(f.nvars, f.degree + g.degree);
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : g.terms) {
      MultiIndex s = mi_add(a, b);
      h.terms[s] += ca * cb;
      if (h.terms[s] == 0) h.terms.erase(s);
    }
  return h;
}

HomPoly substitute_linear(const HomPoly& f, const RatMatrix& L) {
  if (L.rows() != f.nvars) throw InputError("substitution matrix row count mismatch");
  int m = static_cast<int>(L.cols());
  // Linear forms l_i(y) = row i of L, as degree-1 polynomials in m variables.
  std::vector<HomPoly> forms(f.nvars);
  for (int i = 0; i < f.nvars; ++i) {
    HomPoly l(m, 1);
    for (int j = 0; j < m; ++j)
      if (L(i, j) != 0) l.terms[mi_unit(m, j)] = L(i, j);
    forms[i] = l;
  }
  HomPoly result(m, f.degree);
  for (const auto& [alpha, c] : f.terms) {
    HomPoly term(m, 0);
    term.terms[MultiIndex(m, 0)] = c;
    for (int i = 0; i < f.nvars; ++i)
      for (int k = 0; k < alpha[i]; ++k) term = mul(term, forms[i]);
    result = add(result, term);
  }
  return result;
}

Rat multilinear_form(const HomPoly& f, const std::vector<RatVector>& vs) {
  int d = f.degree;
  if (static_cast<int>(vs.size()) != d)
    throw InputError("polarization needs exactly degree-many vectors");
  for (const auto& v : vs)
    if (v.size() != f.nvars) throw InputError("polarization vector dimension mismatch");
  Rat total = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    RatVector s = RatVector::Zero(f.nvars);
    int bits = 0;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) {
        s += vs[i];
        ++bits;
      }
    Rat val = evaluate(f, s);
    if ((d - bits) % 2 == 1) val = -val;
    total += val;
  }
  return total / Rat(factorial(d));
}

DerivativeTable::DerivativeTable(const HomPoly& f) {
  table_[MultiIndex(f.nvars, 0)] = f;
  // Breadth-first by degree: each entry of degree k+1 from a degree-k parent.
  for (int k = 0; k < f.degree; ++k) {
    for (const auto& alpha : multi_indices_of_degree(f.nvars, k)) {
      const HomPoly& g = table_.at(alpha);
      for (int i = 0; i < f.nvars; ++i) {
        MultiIndex beta = mi_add(alpha, mi_unit(f.nvars, i));
        if (!table_.count(beta)) table_[beta] = partial1(g, i);
      }
    }
  }
}

const HomPoly& DerivativeTable::at(const MultiIndex& alpha) const {
  auto it = table_.find(alpha);
  if (it == table_.end()) throw InputError("derivative order exceeds degree");
  return it->second;
}

}  // namespace lorcheck
