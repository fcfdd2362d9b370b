#include "gradelie/nil.hpp"

#include <cstdint>
#include <map>

#include "gradelie/error.hpp"
#include "gradelie/invariant.hpp"

namespace gradelie {
namespace {

using Monomial = std::vector<std::uint8_t>;

// A linear family uses one block of variables; a bilinear family uses two,
// with member Σ s_i t_j mats[i*q + j].
struct Family {
  std::size_t p = 0;
  std::size_t q = 0;  // 0 for a linear family
  std::vector<Mat> mats;

  [[nodiscard]] std::size_t size() const { return mats.empty() ? 0 : mats.front().rows(); }
  [[nodiscard]] bool bilinear() const { return q > 0; }
  [[nodiscard]] std::size_t variables() const { return p + q; }

  [[nodiscard]] Family with(std::vector<Mat> blocks) const { return Family{p, q, std::move(blocks)}; }

  [[nodiscard]] Mat evaluate(const std::vector<std::int64_t>& coeffs) const {
    const std::size_t n = size();
    Mat out(n, n);
    if (!bilinear()) {
      for (std::size_t i = 0; i < p; ++i)
        if (coeffs[i] != 0) out += Scalar(coeffs[i]) * mats[i];
      return out;
    }
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        const std::int64_t c = coeffs[i] * coeffs[p + j];
        if (c != 0) out += Scalar(c) * mats[i * q + j];
      }
    return out;
  }

  [[nodiscard]] std::vector<std::pair<Monomial, const Mat*>> terms() const {
    std::vector<std::pair<Monomial, const Mat*>> out;
    for (std::size_t k = 0; k < mats.size(); ++k) {
      if (mats[k].is_zero()) continue;
      Monomial m(variables(), 0);
      if (bilinear()) {
        m[k / q] = 1;
        m[p + k % q] = 1;
      } else {
        m[k] = 1;
      }
      out.emplace_back(std::move(m), &mats[k]);
    }
    return out;
  }
};

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool polarize(const Family& family) {
  const std::size_t n = family.size();
  const auto terms = family.terms();
  if (terms.empty() || n == 0) return true;
  std::map<Monomial, Mat> power{{Monomial(family.variables(), 0), Mat::identity(n)}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::map<Monomial, Mat> next;
    for (const auto& [mono, coeff] : power)
      for (const auto& [step, mat] : terms) {
        Monomial key = mono;
        for (std::size_t v = 0; v < key.size(); ++v) key[v] = static_cast<std::uint8_t>(key[v] + step[v]);
        Mat product = coeff * *mat;
        auto it = next.find(key);
        if (it == next.end())
          next.emplace(std::move(key), std::move(product));
        else
          it->second += product;
      }
    bool all_zero = true;
    for (auto it = next.begin(); it != next.end();) {
      if (!it->second.trace().is_zero()) return false;
      if (it->second.is_zero()) {
        it = next.erase(it);
      } else {
        all_zero = false;
        ++it;
      }
    }
    if (all_zero) return true;  // x^k vanishes identically
    power = std::move(next);
  }
  return true;
}

bool refuted(const Family& family) {
  for (const auto& m : family.mats)
    if (!is_nilpotent_exact(m)) return true;
  std::uint64_t state = 0x5eedULL + family.mats.size();
  const std::size_t trials = 4 + family.variables();
  std::vector<std::int64_t> coeffs(family.variables());
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& c : coeffs) c = static_cast<std::int64_t>(splitmix(state) % 5) - 2;
    if (!is_nilpotent_exact(family.evaluate(coeffs))) return true;
  }
  return false;
}

bool decide(const Family& family) {
  const std::size_t n = family.size();
  if (n == 0) return true;
  bool all_zero = true;
  for (const auto& m : family.mats) all_zero = all_zero && m.is_zero();
  if (all_zero) return true;
  if (refuted(family)) return false;
  if (auto w = find_proper_invariant_subspace(family.mats, n)) {
    BlockSplit split = split_along(family.mats, *w);
    return decide(family.with(std::move(split.sub))) && decide(family.with(std::move(split.quotient)));
  }
  return polarize(family);
}

Family linear_family(std::span<const Mat> spanning) {
  Family f;
  f.p = spanning.size();
  f.mats.assign(spanning.begin(), spanning.end());
  for (const auto& m : f.mats)
    if (!m.is_square() || m.rows() != f.mats.front().rows()) throw DimensionError("nil test: matrix size mismatch");
  return f;
}

Family bilinear_family(const std::vector<std::vector<Mat>>& grid) {
  Family f;
  f.p = grid.size();
  f.q = grid.empty() ? 0 : grid.front().size();
  if (f.q == 0) {
    f.p = 0;
    return f;
  }
  for (const auto& row : grid) {
    if (row.size() != f.q) throw DimensionError("nil test: ragged bilinear grid");
    for (const auto& m : row) {
      if (!m.is_square() || m.rows() != grid.front().front().rows())
        throw DimensionError("nil test: matrix size mismatch");
      f.mats.push_back(m);
    }
  }
  return f;
}

}  // namespace

bool is_nil_subspace(std::span<const Mat> spanning) { return decide(linear_family(spanning)); }

bool is_nil_subspace(const Subspace& v, std::size_t n) {
  const auto mats = v.basis_matrices(n);
  return is_nil_subspace(mats);
}

bool nil_by_polarization(std::span<const Mat> spanning) { return polarize(linear_family(spanning)); }

bool is_nil_bilinear(const std::vector<std::vector<Mat>>& grid) { return decide(bilinear_family(grid)); }

bool nil_bilinear_by_polarization(const std::vector<std::vector<Mat>>& grid) {
  return polarize(bilinear_family(grid));
}

}  // namespace gradelie
