#include "lorcheck/mixed_discriminant.hpp"

#include <Eigen/Dense>

#include "lorcheck/inertia.hpp"

namespace lorcheck {

namespace {

void require_symmetric(const RatMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw InputError(std::string(what) + " must be square");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i))
        throw InputError(std::string(what) + " must be symmetric");
}

// Shared evaluation core: fills the slot list and polarizes.
Rat md_of(const std::vector<const RatMatrix*>& slots) {
  const int n = static_cast<int>(slots.size());
  RatMatrix sum(n, n);
  Rat acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    sum.setZero();
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sum += *slots[i];
        ++size;
      }
    Rat d = sum.determinant();
    if ((n - size) % 2 == 0)
      acc += d;
    else
      acc -= d;
  }
  return acc / Rat(factorial(n));
}

std::vector<const RatMatrix*> hodge_slots(const RatMatrix& M, const RatMatrix& N,
                                          const std::vector<RatMatrix>& hyp,
                                          const RatMatrix& W, int n, int m) {
  std::vector<const RatMatrix*> slots;
  slots.reserve(n);
  slots.push_back(&M);
  slots.push_back(&N);
  for (const auto& a : hyp) slots.push_back(&a);
  for (int i = 0; i < n - m; ++i) slots.push_back(&W);
  return slots;
}

void validate_hypothesis(const std::vector<RatMatrix>& hyp, const RatMatrix& W,
                         int m) {
  const int n = static_cast<int>(W.rows());
  require_symmetric(W, "reference matrix");
  if (m < 2 || m > n) throw InputError("m must satisfy 2 <= m <= n");
  if (static_cast<int>(hyp.size()) != m - 2)
    throw InputError("expected exactly m-2 hypothesis matrices");
  for (const auto& a : hyp) {
    require_symmetric(a, "hypothesis matrix");
    if (a.rows() != n) throw InputError("hypothesis matrix dimension mismatch");
    if (!is_positive_definite(a))
      throw InputError("hypothesis matrices must be positive definite");
  }
  if (!is_positive_definite(W))
    throw InputError("reference matrix must be positive definite");
}

}  // namespace

Rat mixed_discriminant(const std::vector<RatMatrix>& mats) {
  if (mats.empty()) throw InputError("mixed discriminant needs matrices");
  const int n = static_cast<int>(mats[0].rows());
  if (static_cast<int>(mats.size()) != n)
    throw InputError("mixed discriminant needs exactly n matrices of size n");
  std::vector<const RatMatrix*> slots;
  for (const auto& mat : mats) {
    require_symmetric(mat, "matrix");
    if (mat.rows() != n) throw InputError("matrix dimension mismatch");
    slots.push_back(&mat);
  }
  return md_of(slots);
}

std::vector<RatMatrix> sym_matrix_basis(int n) {
  std::vector<RatMatrix> basis;
  for (int i = 0; i < n; ++i) {
    RatMatrix b = RatMatrix::Zero(n, n);
    b(i, i) = 1;
    basis.push_back(std::move(b));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix b = RatMatrix::Zero(n, n);
      b(i, j) = 1;
      b(j, i) = 1;
      basis.push_back(std::move(b));
    }
  return basis;
}

RatMatrix md_hodge_form(const std::vector<RatMatrix>& hypothesis,
                        const RatMatrix& W, int m) {
  validate_hypothesis(hypothesis, W, m);
  const int n = static_cast<int>(W.rows());
  std::vector<RatMatrix> basis = sym_matrix_basis(n);
  const int dim = static_cast<int>(basis.size());
  RatMatrix gram(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      Rat v = md_of(hodge_slots(basis[a], basis[b], hypothesis, W, n, m));
      gram(a, b) = v;
      gram(b, a) = v;
    }
  return gram;
}

Verdict md_af_check(const RatMatrix& A, const RatMatrix& B,
                    const std::vector<RatMatrix>& hypothesis,
                    const RatMatrix& W, int m) {
  validate_hypothesis(hypothesis, W, m);
  const int n = static_cast<int>(W.rows());
  require_symmetric(A, "first matrix");
  require_symmetric(B, "second matrix");
  if (A.rows() != n || B.rows() != n)
    throw InputError("matrix dimension mismatch");
  if (!is_positive_definite(A))
    throw InputError("first matrix must be positive definite");

  Rat dab = md_of(hodge_slots(A, B, hypothesis, W, n, m));
  Rat daa = md_of(hodge_slots(A, A, hypothesis, W, n, m));
  Rat dbb = md_of(hodge_slots(B, B, hypothesis, W, n, m));
  Rat margin = dab * dab - daa * dbb;
  if (margin >= 0) return Verdict::ok_with_margin(margin);
  Witness w;
  w["kind"] = "md-af-violation";
  w["D_AB"] = rat_to_string(dab);
  w["D_AA"] = rat_to_string(daa);
  w["D_BB"] = rat_to_string(dbb);
  return Verdict::fail(w, margin);
}

}  // namespace lorcheck
