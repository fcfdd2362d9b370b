#include "gradelie/invariant.hpp"

#include "gradelie/error.hpp"

namespace gradelie {

Subspace orbit_span(std::span<const Mat> mats, const Subspace& seed) {
  Subspace span = seed;
  std::vector<Vec> frontier = seed.basis();
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& w : frontier)
      for (const auto& m : mats) {
        Vec image = m * w;
        if (span.insert(image)) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  return span;
}

Subspace orbit_span(std::span<const Mat> mats, const Vec& v) {
  Subspace seed(v.size());
  seed.insert(v);
  return orbit_span(mats, seed);
}

bool is_invariant(std::span<const Mat> mats, const Subspace& w_space) {
  for (const auto& m : mats)
    for (const auto& w : w_space.basis())
      if (!w_space.contains(m * w)) return false;
  return true;
}

Subspace common_kernel(std::span<const Mat> mats, std::size_t n) {
  if (mats.empty()) return Subspace::full(n);
  Mat stacked(mats.size() * n, n);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != n || mats[k].cols() != n) throw DimensionError("common_kernel: size mismatch");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = mats[k](i, j);
  }
  const auto k = kernel(stacked);
  return Subspace::span_of(k, n);
}

Subspace image_sum(std::span<const Mat> mats, std::size_t n) {
  Subspace s(n);
  for (const auto& m : mats)
    for (std::size_t j = 0; j < n && !s.is_full(); ++j) s.insert(m.column(j));
  return s;
}

BlockSplit split_along(std::span<const Mat> mats, const Subspace& invariant) {
  const std::size_t n = invariant.ambient_dim();
  const std::size_t w = invariant.dim();
  std::vector<Vec> cols = invariant.basis();
  std::vector<bool> is_pivot(n, false);
  for (auto p : invariant.pivots()) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec e(n);
    e[j] = Scalar(1);
    cols.push_back(std::move(e));
  }
  const Mat basis = Mat::from_columns(cols, n);
  const auto inv = inverse(basis);
  if (!inv) throw InvariantViolation("split_along: complement basis is singular");
  BlockSplit out;
  for (const auto& m : mats) {
    const Mat conj = *inv * m * basis;
    Mat top(w, w), bottom(n - w, n - w);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i < w && j < w) {
          top(i, j) = conj(i, j);
        } else if (i >= w && j >= w) {
          bottom(i - w, j - w) = conj(i, j);
        } else if (i >= w && j < w && !conj(i, j).is_zero()) {
          throw PreconditionError("split_along: subspace is not invariant");
        }
      }
    out.sub.push_back(std::move(top));
    out.quotient.push_back(std::move(bottom));
  }
  return out;
}

std::optional<Subspace> find_proper_invariant_subspace(std::span<const Mat> mats, std::size_t n) {
  auto proper = [n](const Subspace& s) { return !s.is_zero() && s.dim() < n; };
  if (n < 2) return std::nullopt;
  if (Subspace k = common_kernel(mats, n); proper(k)) return k;
  if (Subspace im = image_sum(mats, n); proper(im)) return im;
  for (const auto& m : mats)
    for (const auto& v : kernel(m))
      if (Subspace o = orbit_span(mats, v); proper(o)) return o;
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n);
    e[j] = Scalar(1);
    if (Subspace o = orbit_span(mats, e); proper(o)) return o;
  }
  return std::nullopt;
}

}  // namespace gradelie
