#include "lorcheck/lorentzian.hpp"

namespace lorcheck {

Verdict m_convex_support(const std::set<MultiIndex>& s, int nvars) {
  for (const auto& a : s)
    if (static_cast<int>(a.size()) != nvars)
      throw InputError("support multi-index length mismatch");
  for (const auto& a : s) {
    for (const auto& b : s) {
      for (int i = 0; i < nvars; ++i) {
        if (a[i] <= b[i]) continue;
        bool found = false;
        for (int j = 0; j < nvars && !found; ++j) {
          if (a[j] >= b[j]) continue;
          MultiIndex a2 = a, b2 = b;
          a2[i] -= 1;
          a2[j] += 1;
          b2[i] += 1;
          b2[j] -= 1;
          if (s.count(a2) && s.count(b2)) found = true;
        }
        if (!found) {
          Witness w;
          w["kind"] = "exchange-failure";
          w["alpha"] = a;
          w["beta"] = b;
          w["i"] = i;
          return Verdict::fail(std::move(w));
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict quadratic_in_l2(const HomPoly& q) {
  if (q.degree != 2) throw InputError("quadratic_in_l2 expects degree 2");
  if (!has_nonnegative_coefficients(q))
    throw InputError("quadratic_in_l2 expects nonnegative coefficients");
  if (q.is_zero()) return Verdict::ok();
  RatMatrix h = hessian_at(q, RatVector::Zero(q.nvars));
  Inertia in = inertia(h);
  if (in.positive == 1) return Verdict::ok();
  Witness w;
  w["kind"] = "hessian-signature";
  w["inertia"] = {{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}};
  return Verdict::fail(std::move(w));
}

Verdict is_lorentzian(const HomPoly& f) {
  for (const auto& [alpha, c] : f.terms) {
    if (c < 0) {
      Witness w;
      w["kind"] = "negative-coefficient";
      w["alpha"] = alpha;
      w["coefficient"] = rat_to_string(c);
      return Verdict::fail(std::move(w));
    }
  }
  if (f.degree <= 1 || f.is_zero()) return Verdict::ok();

  Verdict mc = m_convex_support(support(f), f.nvars);
  if (!mc.holds) {
    Witness w = *mc.witness;
    w["stage"] = "support";
    return Verdict::fail(std::move(w));
  }

  for (const auto& alpha : multi_indices_of_degree(f.nvars, f.degree - 2)) {
    HomPoly q = partial(f, alpha);
    Verdict v = quadratic_in_l2(q);
    if (!v.holds) {
      Witness w = *v.witness;
      w["stage"] = "quadratic-slice";
      w["alpha"] = alpha;
      return Verdict::fail(std::move(w));
    }
  }
  return Verdict::ok();
}

Verdict quadratic_class_equiv(const HomPoly& f, const RatVector& x) {
  if (f.degree < 2) throw InputError("quadratic_class_equiv expects degree >= 2");
  Rat fx = evaluate(f, x);
  if (fx <= 0) throw InputError("quadratic_class_equiv expects f(x) > 0");
  RatMatrix h = hessian_at(f, x);
  RatVector g = gradient_at(f, x);
  Rat c = Rat(1) - Rat(1, (unsigned long)f.degree);
  RatMatrix m = fx * h - c * (g * g.transpose());
  Inertia ih = inertia(h);
  Inertia im = inertia(m);
  bool one_positive = (ih.positive == 1);
  bool nsd = (im.positive == 0);
  if (one_positive == nsd) return Verdict::ok();
  Witness w;
  w["kind"] = "criteria-disagree";
  w["point"] = witness_point(x);
  w["hessian_inertia"] = {{"positive", ih.positive}, {"zero", ih.zero}, {"negative", ih.negative}};
  w["scaled_inertia"] = {{"positive", im.positive}, {"zero", im.zero}, {"negative", im.negative}};
  return Verdict::fail(std::move(w));
}

Rat rayleigh_constant(int d) {
  if (d < 1) throw InputError("rayleigh_constant expects degree >= 1");
  return rat(2 * (d - 1), d);
}

Verdict c_rayleigh_check(const HomPoly& f, const Rat& c,
                         const std::vector<RatVector>& points) {
  for (const auto& x : points) {
    if (x.size() != f.nvars) throw InputError("point dimension mismatch");
    for (int i = 0; i < x.size(); ++i)
      if (x(i) < 0) throw InputError("c_rayleigh_check expects nonnegative points");
  }
  if (f.degree < 2) return Verdict::ok();
  DerivativeTable table(f);
  std::optional<Rat> min_margin;
  for (const auto& x : points) {
    for (const auto& alpha : multi_indices_up_to_degree(f.nvars, f.degree - 2)) {
      for (int i = 0; i < f.nvars; ++i) {
        for (int j = i; j < f.nvars; ++j) {
          MultiIndex ai = mi_add(alpha, mi_unit(f.nvars, i));
          MultiIndex aj = mi_add(alpha, mi_unit(f.nvars, j));
          MultiIndex aij = mi_add(ai, mi_unit(f.nvars, j));
          Rat lhs = evaluate(table.at(alpha), x) * evaluate(table.at(aij), x);
          Rat rhs = c * evaluate(table.at(ai), x) * evaluate(table.at(aj), x);
          Rat margin = rhs - lhs;
          if (margin < 0) {
            Witness w;
            w["kind"] = "rayleigh-violation";
            w["point"] = witness_point(x);
            w["alpha"] = alpha;
            w["i"] = i;
            w["j"] = j;
            return Verdict::fail(std::move(w), margin);
          }
          if (!min_margin || margin < *min_margin) min_margin = margin;
        }
      }
    }
  }
  Verdict v = Verdict::ok();
  v.margin = min_margin;
  return v;
}

}  // namespace lorcheck
