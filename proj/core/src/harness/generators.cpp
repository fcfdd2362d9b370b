#include "gradelie/harness/generators.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "gradelie/error.hpp"

namespace gradelie::harness {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

// One generator only occasionally; a single generator spans a line.
std::size_t generator_count(Rng& rng) { return chance(rng, 0.15) ? 1 : static_cast<std::size_t>(uniform(rng, 2, 3)); }

Mat nonzero(Rng& rng, std::size_t n, Mat m, bool strict) {
  while (m.is_zero()) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    if (strict ? j <= i : j < i) continue;
    m(i, j) = Scalar(uniform(rng, 1, 2));
  }
  return m;
}

std::vector<Mat> conjugate_all(const std::vector<Mat>& mats, const std::pair<Mat, Mat>& g) {
  std::vector<Mat> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(g.first * m * g.second);
  return out;
}

// Closes `gens` under a multilinear product supplied as a callback over the
// current basis; `product(basis, fresh)` yields candidate members.
template <typename Products>
MatSubspace close_under(const std::vector<Mat>& gens, std::size_t n, Products products) {
  Subspace span(n * n);
  std::vector<Mat> basis;
  for (const auto& g : gens)
    if (span.insert(flatten(g))) basis.push_back(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& c : products(basis))
      if (span.insert(flatten(c))) {
        basis.push_back(c);
        grew = true;
      }
  }
  return MatSubspace(basis, n);
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Mat random_small_matrix(Rng& rng, std::size_t n, double density, std::int64_t lo, std::int64_t hi) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (chance(rng, density)) m(i, j) = Scalar(uniform(rng, lo, hi));
  return m;
}

Mat random_upper_triangular(Rng& rng, std::size_t n, bool strict) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = strict ? i + 1 : i; j < n; ++j)
      if (chance(rng, 0.7)) m(i, j) = Scalar(uniform(rng, -2, 2));
  if (n > (strict ? 1u : 0u)) m = nonzero(rng, n, std::move(m), strict);
  return m;
}

std::pair<Mat, Mat> random_unimodular(Rng& rng, std::size_t n) {
  Mat g = Mat::identity(n);
  Mat ginv = Mat::identity(n);
  if (n < 2) return {g, ginv};
  const std::size_t steps = 2 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const std::int64_t c = uniform(rng, 1, 2) * (chance(rng, 0.5) ? 1 : -1);
    Mat e = Mat::identity(n);
    e(i, j) = Scalar(c);
    Mat einv = Mat::identity(n);
    einv(i, j) = Scalar(-c);
    g = g * e;
    ginv = einv * ginv;
  }
  return {g, ginv};
}

MatSubspace triple_closure(const std::vector<Mat>& gens, std::size_t n) {
  return close_under(gens, n, [](const std::vector<Mat>& b) {
    std::vector<Mat> out;
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = j + 1; k < b.size(); ++k) {
        const Mat inner = bracket(b[j], b[k]);
        if (inner.is_zero()) continue;
        for (const auto& a : b) out.push_back(bracket(a, inner));
      }
    return out;
  });
}

MatSubspace jordan_closure(const std::vector<Mat>& gens, std::size_t n) {
  return close_under(gens, n, [](const std::vector<Mat>& b) {
    std::vector<Mat> out;
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = j; k < b.size(); ++k) out.push_back(jordan_product(b[j], b[k]));
    return out;
  });
}

MatSubspace jordan_ideal_closure(const MatSubspace& j, const Mat& x) {
  const auto& jb = j.basis();
  return close_under({x}, j.ambient_dim(), [&jb](const std::vector<Mat>& b) {
    std::vector<Mat> out;
    for (const auto& a : jb)
      for (const auto& y : b) out.push_back(jordan_product(a, y));
    return out;
  });
}

SubgradedAlgebra weight_graded(std::size_t n, const FinAbGroup& group, const std::vector<GroupElem>& weights,
                               const std::vector<Mat>& generators) {
  if (weights.size() != n) throw DimensionError("weight_graded: one weight per coordinate required");
  auto degree = [&](std::size_t i, std::size_t j) { return group.add(weights[i], group.negate(weights[j])); };
  for (const auto& g : generators) {
    std::optional<GroupElem> deg;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (g(i, j).is_zero()) continue;
        const GroupElem d = degree(i, j);
        if (deg && *deg != d) throw PreconditionError("weight_graded: generator is not homogeneous");
        deg = d;
      }
  }
  const LieAlgebra lie = lie_closure(generators, n);
  ComponentMap comps;
  for (const auto& g : group.elements()) {
    Subspace w(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (degree(i, j) == g) w.insert(flatten(Mat::unit(n, i, j)));
    comps.emplace(g, subspace_intersect(lie.span(), w));
  }
  return verify_subgrading(lie, group, comps);
}

SubgradedAlgebra gen_weight_graded(std::size_t n, const std::vector<std::int64_t>& moduli, std::uint64_t seed) {
  Rng rng(seed);
  const FinAbGroup group(moduli);
  const auto elements = group.elements();
  std::vector<GroupElem> weights;
  for (std::size_t i = 0; i < n; ++i)
    weights.push_back(elements[static_cast<std::size_t>(uniform(rng, 0, group.order() - 1))]);

  std::map<GroupElem, std::vector<std::pair<std::size_t, std::size_t>>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[group.add(weights[i], group.negate(weights[j]))].emplace_back(i, j);
  std::vector<GroupElem> degrees;
  const bool avoid_zero = chance(rng, 0.35) && cells.size() > 1;
  for (const auto& [g, unused] : cells)
    if (!(avoid_zero && g == group.zero())) degrees.push_back(g);

  const std::size_t count = generator_count(rng);
  std::vector<Mat> gens;
  for (std::size_t k = 0; k < count; ++k) {
    const GroupElem& g = degrees[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(degrees.size()) - 1))];
    const auto& slots = cells[g];
    Mat m(n, n);
    while (m.is_zero())
      for (const auto& [i, j] : slots)
        if (chance(rng, 0.6)) m(i, j) = Scalar(uniform(rng, -2, 2));
    gens.push_back(std::move(m));
  }
  return weight_graded(n, group, weights, gens);
}

LieAlgebra gen_random_lie(Rng& rng, std::size_t n) {
  const std::size_t count = generator_count(rng);
  const auto shape = uniform(rng, 0, 3);
  std::vector<Mat> gens;
  for (std::size_t k = 0; k < count; ++k) {
    switch (shape) {
      case 0:
        gens.push_back(random_small_matrix(rng, n));
        break;
      case 1:
        gens.push_back(random_small_matrix(rng, n, 0.3));
        break;
      default:
        gens.push_back(random_upper_triangular(rng, n, shape == 3));
        break;
    }
  }
  if (shape >= 2) gens = conjugate_all(gens, random_unimodular(rng, n));
  return lie_closure(gens, n);
}

LieAlgebra gen_conjugated_upper(Rng& rng, std::size_t n) {
  const std::size_t count = generator_count(rng);
  std::vector<Mat> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(random_upper_triangular(rng, n, false));
  return lie_closure(conjugate_all(gens, random_unimodular(rng, n)), n);
}

MatSubspace gen_nilpotent_triple(Rng& rng, std::size_t n) {
  const std::size_t count = generator_count(rng);
  std::vector<Mat> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(random_upper_triangular(rng, n, true));
  const MatSubspace closed = triple_closure(gens, n);
  return MatSubspace(conjugate_all(closed.basis(), random_unimodular(rng, n)), n);
}

MatSubspace gen_nilpotent_jordan(Rng& rng, std::size_t n) {
  const std::size_t count = generator_count(rng);
  std::vector<Mat> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(random_upper_triangular(rng, n, true));
  const MatSubspace closed = jordan_closure(gens, n);
  return MatSubspace(conjugate_all(closed.basis(), random_unimodular(rng, n)), n);
}

std::pair<MatSubspace, MatSubspace> gen_jordan_pair(Rng& rng, std::size_t n) {
  const auto count = static_cast<std::size_t>(uniform(rng, 1, 2));
  std::vector<Mat> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(random_upper_triangular(rng, n, chance(rng, 0.5)));
  const auto g = random_unimodular(rng, n);
  const MatSubspace j(conjugate_all(jordan_closure(gens, n).basis(), g), n);
  Mat x(n, n);
  while (x.is_zero())
    for (const auto& b : j.basis())
      if (chance(rng, 0.5)) x += Scalar(uniform(rng, -2, 2)) * b;
  return {j, jordan_ideal_closure(j, x)};
}

MatSubspace gen_nilpotent_pair_span(Rng& rng, std::size_t n) {
  std::vector<Mat> mats;
  for (int k = 0; k < 2; ++k) {
    const auto g = random_unimodular(rng, n);
    mats.push_back(g.first * random_upper_triangular(rng, n, true) * g.second);
  }
  return MatSubspace(mats, n);
}

std::pair<Mat, Mat> gen_double_commutant_pair(Rng& rng, std::size_t n) {
  Mat a = chance(rng, 0.5) ? random_small_matrix(rng, n, 0.5) : random_upper_triangular(rng, n, true);
  if (chance(rng, 0.5)) {
    const auto g = random_unimodular(rng, n);
    a = g.first * a * g.second;
  }
  std::vector<Vec> columns;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) columns.push_back(flatten(bracket(a, bracket(a, Mat::unit(n, i, j)))));
  const auto null = kernel(Mat::from_columns(columns, n * n));
  Mat b(n, n);
  for (const auto& v : null)
    if (chance(rng, 0.6)) b += Scalar(uniform(rng, -2, 2)) * unflatten(v, n);
  return {a, b};
}

}  // namespace gradelie::harness
