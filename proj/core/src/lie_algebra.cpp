#include "gradelie/lie_algebra.hpp"

#include <string>

#include "gradelie/error.hpp"

namespace gradelie {
namespace {

void require_size(const Mat& a, std::size_t n, const char* op) {
  if (a.rows() != n || a.cols() != n)
    throw DimensionError(std::string(op) + ": expected " + std::to_string(n) + "x" + std::to_string(n) +
                         " matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

Subspace next_term(const Subspace& left, const Subspace& right, std::size_t n) {
  return commutator_subspace(left, right, n);
}

SeriesReport run_series(const LieAlgebra& lie, SeriesKind kind) {
  SeriesReport report{kind, {lie.span()}, false, 0};
  const std::size_t n = lie.ambient_dim();
  while (true) {
    const Subspace& last = report.terms.back();
    Subspace next = kind == SeriesKind::kDerived ? next_term(last, last, n) : next_term(lie.span(), last, n);
    const bool repeated = next == last;
    report.terms.push_back(std::move(next));
    if (repeated) break;
  }
  report.stabilized = true;
  report.terminal_dim = report.terms.back().dim();
  return report;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t n, std::vector<Mat> basis, Subspace span)
    : n_(n), basis_(std::move(basis)), span_(std::move(span)) {
  const std::size_t d = basis_.size();
  const std::size_t nn = n_ * n_;
  Mat aug(d, nn + d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& data = basis_[i].data();
    for (std::size_t j = 0; j < nn; ++j) aug(i, j) = data[j];
    aug(i, nn + i) = Scalar(1);
  }
  rref_in_place(aug);
  to_basis_ = Mat(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) to_basis_(k, j) = aug(k, nn + j);
}

LieAlgebra LieAlgebra::from_basis(std::vector<Mat> basis, std::size_t n) {
  Subspace span(n * n);
  for (const auto& b : basis) {
    require_size(b, n, "LieAlgebra::from_basis");
    if (!span.insert(flatten(b))) throw PreconditionError("LieAlgebra::from_basis: basis is linearly dependent");
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!span.contains(flatten(bracket(basis[i], basis[j]))))
        throw PreconditionError("LieAlgebra::from_basis: span is not closed under the bracket (basis pair " +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
  return LieAlgebra(n, std::move(basis), std::move(span));
}

LieAlgebra LieAlgebra::from_subspace(const Subspace& span, std::size_t n) {
  if (span.ambient_dim() != n * n) throw DimensionError("LieAlgebra::from_subspace: ambient is not n^2");
  return from_basis(span.basis_matrices(n), n);
}

LieAlgebra LieAlgebra::zero(std::size_t n) { return LieAlgebra(n, {}, Subspace(n * n)); }

std::optional<Vec> LieAlgebra::coordinates(const Mat& a) const {
  require_size(a, n_, "LieAlgebra::coordinates");
  const Vec flat = flatten(a);
  if (!span_.contains(flat)) return std::nullopt;
  const Vec echelon = span_.echelon_coordinates(flat);
  Vec coords(basis_.size());
  for (std::size_t k = 0; k < echelon.size(); ++k) {
    if (echelon[k].is_zero()) continue;
    for (std::size_t j = 0; j < coords.size(); ++j) fused_add_mul(coords[j], echelon[k], to_basis_(k, j));
  }
  return coords;
}

Mat LieAlgebra::element(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw DimensionError("LieAlgebra::element: coordinate length mismatch");
  Mat out(n_, n_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out += coords[i] * basis_[i];
  return out;
}

LieAlgebra lie_closure(std::span<const Mat> generators, std::size_t n, std::size_t cap) {
  if (cap == 0) cap = n * n;
  Subspace span(n * n);
  std::vector<Mat> basis;
  for (const auto& g : generators) {
    require_size(g, n, "lie_closure");
    if (span.insert(flatten(g))) basis.push_back(g);
  }
  if (basis.size() > cap) throw Error("lie_closure: dimension cap exceeded");
  for (std::size_t k = 1; k < basis.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Mat c = bracket(basis[j], basis[k]);
      if (span.insert(flatten(c))) {
        basis.push_back(std::move(c));
        if (basis.size() > cap) throw Error("lie_closure: dimension cap exceeded");
      }
    }
  }
  return LieAlgebra(n, std::move(basis), std::move(span));
}

Subspace commutator_subspace(const Subspace& a, const Subspace& b, std::size_t n) {
  Subspace out(n * n);
  const auto left = a.basis_matrices(n);
  const auto right = b.basis_matrices(n);
  for (const auto& x : left)
    for (const auto& y : right) {
      if (out.is_full()) return out;
      out.insert(flatten(bracket(x, y)));
    }
  return out;
}

Mat ad_matrix(const LieAlgebra& lie, const Mat& a) {
  require_size(a, lie.ambient_dim(), "ad_matrix");
  const std::size_t d = lie.dim();
  Mat ad(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto coords = lie.coordinates(bracket(a, lie.basis()[j]));
    if (!coords) throw NotNormalizingError("ad_matrix: [a, b_" + std::to_string(j) + "] is not in L");
    for (std::size_t i = 0; i < d; ++i) ad(i, j) = (*coords)[i];
  }
  return ad;
}

std::vector<Mat> ad_image(const LieAlgebra& lie, const Subspace& v) {
  std::vector<Mat> out;
  for (const auto& x : v.basis_matrices(lie.ambient_dim())) out.push_back(ad_matrix(lie, x));
  return out;
}

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

SeriesReport derived_series(const LieAlgebra& lie) { return run_series(lie, SeriesKind::kDerived); }
SeriesReport lower_central_series(const LieAlgebra& lie) { return run_series(lie, SeriesKind::kLowerCentral); }
bool is_solvable(const LieAlgebra& lie) { return derived_series(lie).terminal_dim == 0; }
bool is_nilpotent_lie(const LieAlgebra& lie) { return lower_central_series(lie).terminal_dim == 0; }
bool is_engel_algebra(const LieAlgebra& lie) { return is_nilpotent_lie(lie); }

KillingGram killing_form(const LieAlgebra& lie) {
  const std::size_t d = lie.dim();
  std::vector<Mat> ads;
  ads.reserve(d);
  for (const auto& b : lie.basis()) ads.push_back(ad_matrix(lie, b));
  KillingGram k{Mat(d, d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      k.gram(i, j) = trace_of_product(ads[i], ads[j]);
      k.gram(j, i) = k.gram(i, j);
    }
  return k;
}

Scalar killing_pairing(const LieAlgebra& lie, const Mat& x, const Mat& y) {
  return trace_of_product(ad_matrix(lie, x), ad_matrix(lie, y));
}

bool cartan_test(const LieAlgebra& lie) {
  const std::size_t n = lie.ambient_dim();
  const Subspace derived = commutator_subspace(lie.span(), lie.span(), n);
  for (const auto& a : derived.basis_matrices(n))
    for (const auto& b : lie.basis())
      if (!trace_of_product(a, b).is_zero()) return false;
  return true;
}

bool is_engel_element(const LieAlgebra& lie, const Mat& a) { return is_nilpotent_exact(ad_matrix(lie, a)); }

namespace {

Subspace subspace_from_coefficient_kernel(const LieAlgebra& lie, const Mat& system) {
  Subspace out(lie.ambient_dim() * lie.ambient_dim());
  if (lie.dim() == 0) return out;
  for (const auto& c : kernel(system)) out.insert(flatten(lie.element(c)));
  return out;
}

}  // namespace

Subspace trace_orthogonal_ideal(const LieAlgebra& lie) {
  const std::size_t d = lie.dim();
  Mat gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      gram(i, j) = trace_of_product(lie.basis()[i], lie.basis()[j]);
      gram(j, i) = gram(i, j);
    }
  Subspace ideal = subspace_from_coefficient_kernel(lie, gram);
  if (!is_ideal(lie, ideal)) throw InvariantViolation("trace_orthogonal_ideal: result is not an ideal");
  return ideal;
}

Subspace killing_orthogonal_ideal(const LieAlgebra& lie) {
  return subspace_from_coefficient_kernel(lie, killing_form(lie).gram);
}

Subspace solvable_radical(const LieAlgebra& lie) {
  const std::size_t n = lie.ambient_dim();
  const Subspace derived = commutator_subspace(lie.span(), lie.span(), n);
  const auto derived_mats = derived.basis_matrices(n);
  std::vector<Mat> ads;
  for (const auto& b : lie.basis()) ads.push_back(ad_matrix(lie, b));
  std::vector<Mat> derived_ads;
  for (const auto& x : derived_mats) derived_ads.push_back(ad_matrix(lie, x));
  Mat system(derived_ads.size(), lie.dim());
  for (std::size_t k = 0; k < derived_ads.size(); ++k)
    for (std::size_t i = 0; i < ads.size(); ++i) system(k, i) = trace_of_product(ads[i], derived_ads[k]);
  return subspace_from_coefficient_kernel(lie, system);
}

bool is_ideal(const LieAlgebra& lie, const Subspace& ideal) {
  if (!lie.span().contains(ideal)) throw PreconditionError("is_ideal: subspace is not contained in L");
  const auto members = ideal.basis_matrices(lie.ambient_dim());
  for (const auto& b : lie.basis())
    for (const auto& v : members)
      if (!ideal.contains(bracket(b, v))) return false;
  return true;
}

Subspace center(const LieAlgebra& lie) {
  const std::size_t d = lie.dim();
  Mat stacked(d * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Mat ad = ad_matrix(lie, lie.basis()[j]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(j * d + r, c) = ad(r, c);
  }
  return subspace_from_coefficient_kernel(lie, stacked);
}

bool is_scalar_set(const Subspace& v, std::size_t n) {
  for (const auto& m : v.basis_matrices(n))
    if (!m.is_scalar_multiple_of_identity()) return false;
  return true;
}

bool engel_sum_check(const LieAlgebra& solvable, const Mat& a, const Mat& b) {
  if (!is_solvable(solvable)) throw PreconditionError("engel_sum_check: algebra is not solvable");
  if (!solvable.contains(a) || !solvable.contains(b))
    throw PreconditionError("engel_sum_check: summands must lie in the algebra");
  if (!is_engel_element(solvable, a) || !is_engel_element(solvable, b))
    throw PreconditionError("engel_sum_check: summands must be Engel elements");
  return is_engel_element(solvable, a + b);
}

}  // namespace gradelie
