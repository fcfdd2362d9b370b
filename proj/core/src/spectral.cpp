#include "gradelie/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "gradelie/error.hpp"
#include "gradelie/invariant.hpp"

namespace gradelie {
namespace {

void require_family(std::span<const Mat> mats, std::size_t n, const char* op) {
  for (const auto& m : mats)
    if (m.rows() != n || m.cols() != n) throw DimensionError(std::string(op) + ": matrix size mismatch");
}

double cluster_radius(const NumMat& a, double tol) { return std::max(tol, 1e-5) * std::max(1.0, a.norm()); }

NumMat numeric_bracket(const NumMat& a, const NumMat& b) { return a * b - b * a; }

NumMat stack(const std::vector<NumMat>& mats, Eigen::Index cols) {
  NumMat out(static_cast<Eigen::Index>(mats.size()) * cols, cols);
  for (std::size_t k = 0; k < mats.size(); ++k) out.middleRows(static_cast<Eigen::Index>(k) * cols, cols) = mats[k];
  return out;
}

// A common eigenvector of a solvable family, computed exactly. [L, L] acts
// nilpotently, so its common kernel K is nonzero and L-invariant; on K the
// family commutes and successive eigenspaces cut K down to common
// eigenvectors. Fails when some eigenvalue on the way is not in Q(i).
std::optional<Vec> common_eigenvector_exact(const std::vector<Mat>& mats, std::size_t m) {
  std::vector<Mat> derived;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (Mat c = bracket(mats[i], mats[j]); !c.is_zero()) derived.push_back(std::move(c));
  Subspace w = common_kernel(derived, m);
  if (w.is_zero()) throw InvariantViolation("triangularize_solvable: derived algebra has no common null vector");
  for (const auto& a : mats) {
    if (w.dim() == 1) break;
    const Mat restricted = split_along(std::span<const Mat>(&a, 1), w).sub.front();
    if (restricted.is_scalar_multiple_of_identity()) continue;
    const NumMat num = to_numeric(restricted);
    bool found = false;
    for (const auto& c : cluster_eigenvalues(eig_numeric(num), cluster_radius(num, 1e-9))) {
      const auto lambda = rationalize(c.center, 1e-6, 10'000);
      if (!lambda) continue;
      const auto ker = kernel(a - *lambda * Mat::identity(m));
      Subspace e = subspace_intersect(w, Subspace::span_of(ker, m));
      if (!e.is_zero()) {
        w = std::move(e);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return w.basis().front();
}

std::optional<Mat> triangularize_exact(const std::vector<Mat>& mats, std::size_t n) {
  std::vector<Vec> cols;
  std::vector<Vec> reps;  // ambient representatives of the quotient coordinates
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n);
    e[j] = Scalar(1);
    reps.push_back(std::move(e));
  }
  std::vector<Mat> current = mats;
  for (std::size_t m = n; m > 0; --m) {
    Vec v(m);
    if (m == 1) {
      v[0] = Scalar(1);
    } else {
      auto found = common_eigenvector_exact(current, m);
      if (!found) return std::nullopt;
      v = std::move(*found);
    }
    Vec lifted(n);
    for (std::size_t j = 0; j < m; ++j)
      if (!v[j].is_zero())
        for (std::size_t i = 0; i < n; ++i) fused_add_mul(lifted[i], v[j], reps[j][i]);
    cols.push_back(std::move(lifted));
    if (m == 1) break;
    Subspace line(m);
    line.insert(v);
    current = split_along(current, line).quotient;
    reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(line.pivots().front()));
  }
  return Mat::from_columns(cols, n);
}

NumVec common_eigenvector_numeric(const std::vector<NumMat>& mats, Eigen::Index m) {
  constexpr double kKernelTol = 1e-7;
  double scale = 1.0;
  for (const auto& a : mats) scale = std::max(scale, a.norm());
  std::vector<NumMat> derived;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) derived.push_back(numeric_bracket(mats[i], mats[j]));
  NumMat w = NumMat::Identity(m, m);
  if (!derived.empty()) {
    const NumMat d = stack(derived, m);
    w = numeric_kernel(d, kKernelTol);
    if (w.cols() == 0) w = smallest_singular_vectors(d, 1);
  }
  for (const auto& a : mats) {
    if (w.cols() == 1) break;
    const NumMat c = w.adjoint() * a * w;
    const auto clusters = cluster_eigenvalues(eig_numeric(c), cluster_radius(c, 1e-9));
    if (clusters.size() < 2) continue;
    const auto& pick = clusters.front();
    const Eigen::Index r = c.rows();
    const NumMat shifted = (c - pick.center * NumMat::Identity(r, r)) / scale;
    NumMat p = NumMat::Identity(r, r);
    for (Eigen::Index k = 0; k < r; ++k) p = p * shifted;
    w = w * smallest_singular_vectors(p, static_cast<Eigen::Index>(pick.multiplicity));
  }
  // On a joint generalized eigenspace every member is its mean eigenvalue
  // plus a nilpotent part, and the nilpotent parts commute.
  std::vector<NumMat> nilpotent_parts;
  const Eigen::Index r = w.cols();
  for (const auto& a : mats) {
    const NumMat c = w.adjoint() * a * w;
    nilpotent_parts.push_back(c - (c.trace() / static_cast<double>(r)) * NumMat::Identity(r, r));
  }
  NumVec v = w.col(0);
  if (r > 1 && !nilpotent_parts.empty()) v = w * smallest_singular_vectors(stack(nilpotent_parts, r), 1).col(0);
  return v / v.norm();
}

NumMat triangularize_numeric(const std::vector<Mat>& mats, std::size_t n) {
  std::vector<NumMat> full;
  for (const auto& a : mats) full.push_back(to_numeric(a));
  const auto size = static_cast<Eigen::Index>(n);
  NumMat u(size, size);
  NumMat q = NumMat::Identity(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    const Eigen::Index m = q.cols();
    std::vector<NumMat> compressed;
    for (const auto& a : full) compressed.push_back(q.adjoint() * a * q);
    NumVec v = m == 1 ? NumVec::Ones(1) : common_eigenvector_numeric(compressed, m);
    u.col(col) = q * v;
    if (m == 1) break;
    const NumMat column = v;
    Eigen::HouseholderQR<NumMat> qr(column);
    const NumMat h = qr.householderQ() * NumMat::Identity(m, m);
    q = q * h.rightCols(m - 1);
  }
  return u;
}

}  // namespace

std::vector<Complex> eig_numeric(const NumMat& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionError("eig_numeric: matrix is not square");
  require_finite(a);
  const Eigen::Index n = a.rows();
  if (n == 0) return {};
  Eigen::ComplexSchur<NumMat> schur(n);
  schur.setMaxIterations(100 * n);
  schur.compute(a);
  if (schur.info() != Eigen::Success) throw NumericError("eig_numeric: Schur iteration did not converge");
  const NumMat& t = schur.matrixT();
  const NumMat& z = schur.matrixU();
  const double defect = (z * t * z.adjoint() - a).norm();
  if (defect > tol * std::max(1.0, a.norm())) throw NumericError("eig_numeric: similarity defect above tolerance");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(t(i, i));
  return out;
}

double spectral_radius(const NumMat& a, double tol) {
  double r = 0;
  for (const auto& z : eig_numeric(a, tol)) r = std::max(r, std::abs(z));
  return r;
}

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<Complex>& values, double radius) {
  std::vector<std::size_t> parent(values.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= radius) parent[find(j)] = find(i);
  std::vector<EigenCluster> out;
  std::vector<std::size_t> root_of_cluster;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t root = find(i);
    auto it = std::find(root_of_cluster.begin(), root_of_cluster.end(), root);
    if (it == root_of_cluster.end()) {
      root_of_cluster.push_back(root);
      out.push_back({values[i], 1});
    } else {
      auto& c = out[static_cast<std::size_t>(it - root_of_cluster.begin())];
      c.center += values[i];
      ++c.multiplicity;
    }
  }
  for (auto& c : out) c.center /= static_cast<double>(c.multiplicity);
  return out;
}

NumMat generalized_eigenspace_numeric(const NumMat& a, Complex lambda, double tol) {
  const Eigen::Index n = a.rows();
  const double radius = cluster_radius(a, tol);
  for (const auto& c : cluster_eigenvalues(eig_numeric(a, tol), radius)) {
    if (std::abs(c.center - lambda) > radius) continue;
    const double scale = std::max(1.0, a.norm());
    const NumMat shifted = (a - c.center * NumMat::Identity(n, n)) / scale;
    NumMat p = NumMat::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) p = p * shifted;
    return smallest_singular_vectors(p, static_cast<Eigen::Index>(c.multiplicity));
  }
  return NumMat(n, 0);
}

std::vector<Mat> assoc_closure(std::span<const Mat> mats, std::size_t n) {
  require_family(mats, n, "assoc_closure");
  std::vector<Mat> words;
  if (n == 0) return words;
  Subspace span(n * n);
  words.push_back(Mat::identity(n));
  span.insert(flatten(words.front()));
  for (std::size_t k = 0; k < words.size() && !span.is_full(); ++k)
    for (const auto& g : mats) {
      Mat w = g * words[k];
      if (span.insert(flatten(w))) words.push_back(std::move(w));
    }
  return words;
}

std::size_t assoc_closure_dim(std::span<const Mat> mats, std::size_t n) { return assoc_closure(mats, n).size(); }

IrreducibilityVerdict decide_irreducible(std::span<const Mat> mats, std::size_t n) {
  if (n == 0) throw PreconditionError("decide_irreducible: ambient dimension must be positive");
  require_family(mats, n, "decide_irreducible");
  const auto words = assoc_closure(mats, n);
  IrreducibilityVerdict verdict;
  verdict.assoc_dim = words.size();
  if (verdict.assoc_dim == n * n) {
    verdict.irreducible = true;
    return verdict;
  }
  auto try_seed = [&](const Vec& v) -> bool {
    if (is_zero(v)) return false;
    Subspace o = orbit_span(mats, v);
    if (o.dim() == 0 || o.dim() == n || !is_invariant(mats, o)) return false;
    verdict.witness = std::move(o);
    return true;
  };

  constexpr std::size_t kSingularBudget = 25;
  std::size_t singular_seen = 0;
  for (const auto& w : words) {
    if (singular_seen >= kSingularBudget) break;
    if (w.is_scalar_multiple_of_identity()) continue;
    std::vector<Mat> candidates;
    if (rank(w) < n) {
      candidates.push_back(w);
    } else {
      const NumMat num = to_numeric(w);
      for (const auto& c : cluster_eigenvalues(eig_numeric(num), cluster_radius(num, 1e-9))) {
        const auto lambda = rationalize(c.center, 1e-6, 10'000);
        if (!lambda) continue;
        Mat shifted = w - *lambda * Mat::identity(n);
        if (rank(shifted) < n) candidates.push_back(std::move(shifted));
      }
    }
    for (const auto& c : candidates) {
      if (singular_seen++ >= kSingularBudget) break;
      for (const auto& v : kernel(c))
        if (try_seed(v)) return verdict;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n);
    e[j] = Scalar(1);
    if (try_seed(e)) return verdict;
  }
  std::mt19937_64 rng(0x1badc0deULL + n);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  for (int t = 0; t < 100; ++t) {
    Vec v(n);
    for (auto& x : v) x = Scalar(entry(rng));
    if (try_seed(v)) return verdict;
  }
  throw WitnessSearchError("decide_irreducible: associative closure has dimension " +
                               std::to_string(verdict.assoc_dim) + " < n^2 but no invariant subspace over Q(i) was found",
                           verdict.assoc_dim);
}

Flag Flag::exact(Mat basis) {
  if (!basis.is_square() || !inverse(basis)) throw PreconditionError("Flag::exact: basis must be invertible");
  Flag f;
  f.numeric_ = to_numeric(basis);
  f.exact_ = std::move(basis);
  return f;
}

Flag Flag::numeric(NumMat basis) {
  if (basis.rows() != basis.cols()) throw PreconditionError("Flag::numeric: basis must be square");
  require_finite(basis);
  Flag f;
  f.numeric_ = std::move(basis);
  return f;
}

std::vector<Subspace> Flag::chain() const {
  if (!exact_) throw PreconditionError("Flag::chain: numeric flags carry no exact chain");
  const std::size_t n = dim();
  std::vector<Subspace> out;
  Subspace s(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    s.insert(exact_->column(k));
    out.push_back(s);
  }
  return out;
}

Flag triangularize_solvable(const LieAlgebra& lie, double tol) {
  if (!is_solvable(lie)) throw PreconditionError("triangularize_solvable: algebra is not solvable");
  const std::size_t n = lie.ambient_dim();
  const auto& mats = lie.basis();
  if (auto basis = triangularize_exact(mats, n)) {
    Flag flag = Flag::exact(std::move(*basis));
    if (!verify_flag(mats, flag, tol).pass) throw InvariantViolation("triangularize_solvable: exact flag failed");
    return flag;
  }
  Flag flag = Flag::numeric(triangularize_numeric(mats, n));
  if (!verify_flag(mats, flag, tol).pass)
    throw NumericError("triangularize_solvable: numeric flag fails verification at tolerance");
  return flag;
}

FlagReport verify_flag(std::span<const Mat> mats, const Flag& flag, double tol) {
  const std::size_t n = flag.dim();
  require_family(mats, n, "verify_flag");
  FlagReport report;
  report.exact = flag.is_exact();
  if (report.exact) {
    const Mat& p = *flag.exact_basis();
    const Mat pinv = *inverse(p);
    for (const auto& a : mats) {
      const Mat conj = pinv * a * p;
      double worst = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) worst = std::max(worst, std::abs(conj(i, j).to_complex()));
      const bool ok = conj.is_upper_triangular();
      report.per_matrix.push_back(ok);
      report.residuals.push_back(ok ? 0.0 : worst);
      report.pass = report.pass && ok;
    }
    return report;
  }
  const NumMat& b = flag.numeric_basis();
  const Eigen::PartialPivLU<NumMat> lu(b);
  for (const auto& a : mats) {
    const NumMat na = to_numeric(a);
    const NumMat conj = lu.solve(na * b);
    double worst = 0;
    for (Eigen::Index i = 0; i < conj.rows(); ++i)
      for (Eigen::Index j = 0; j < i; ++j) worst = std::max(worst, std::abs(conj(i, j)));
    const bool ok = worst <= tol * std::max(1.0, na.norm());
    report.per_matrix.push_back(ok);
    report.residuals.push_back(worst);
    report.pass = report.pass && ok;
  }
  return report;
}

}  // namespace gradelie
