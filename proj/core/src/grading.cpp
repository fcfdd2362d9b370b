#include "gradelie/grading.hpp"

#include <cmath>
#include <numbers>

#include "gradelie/spectral.hpp"

namespace gradelie {
namespace {

Subspace sum_of(std::size_t ambient, const std::vector<const Subspace*>& parts) {
  Subspace out(ambient);
  for (const auto* p : parts)
    for (const auto& v : p->basis()) out.insert(v);
  return out;
}

LieAlgebra subalgebra_or_throw(const Subspace& span, std::size_t n, const char* op) {
  try {
    return LieAlgebra::from_subspace(span, n);
  } catch (const PreconditionError& e) {
    throw InvariantViolation(std::string(op) + ": result is not a subalgebra (" + e.what() + ")");
  }
}

// Coordinates of [b_i, b_j] for all basis pairs, as columns indexed i*d + j.
std::vector<Vec> structure_constants(const LieAlgebra& lie) {
  const std::size_t d = lie.dim();
  std::vector<Vec> out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i * d + j] = *lie.coordinates(bracket(lie.basis()[i], lie.basis()[j]));
  return out;
}

void require_endomorphism(const LieAlgebra& lie, const Mat& phi, const char* op) {
  const std::size_t d = lie.dim();
  if (phi.rows() != d || phi.cols() != d)
    throw DimensionError(std::string(op) + ": phi must be " + std::to_string(d) + "x" + std::to_string(d));
  std::vector<Mat> images;
  for (std::size_t j = 0; j < d; ++j) images.push_back(lie.element(phi.column(j)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec lhs = phi * *lie.coordinates(bracket(lie.basis()[i], lie.basis()[j]));
      const auto rhs = lie.coordinates(bracket(images[i], images[j]));
      if (!rhs || lhs != *rhs)
        throw PreconditionError(std::string(op) + ": phi does not preserve the bracket on basis pair (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
    }
}

Subspace span_of_coordinates(const LieAlgebra& lie, const std::vector<Vec>& coords) {
  const std::size_t n = lie.ambient_dim();
  Subspace out(n * n);
  for (const auto& c : coords) out.insert(flatten(lie.element(c)));
  return out;
}

}  // namespace

const Subspace& SubgradedAlgebra::component(const GroupElem& g) const {
  const auto it = components_.find(g);
  if (it == components_.end()) throw PreconditionError("SubgradedAlgebra: " + to_key(g) + " is not a group element");
  return it->second;
}

std::vector<Mat> SubgradedAlgebra::component_basis(const GroupElem& g) const {
  return component(g).basis_matrices(ambient_dim());
}

SubgradedAlgebra verify_subgrading(const LieAlgebra& algebra, const FinAbGroup& group, const ComponentMap& components) {
  const std::size_t n = algebra.ambient_dim();
  ComponentMap full;
  for (const auto& g : group.elements()) full.emplace(g, Subspace(n * n));
  std::vector<const Subspace*> parts;
  for (const auto& [g, sub] : components) {
    if (!group.is_canonical(g))
      throw GradingError(GradingError::Kind::kBadKey, "component key " + to_key(g) + " is not a group element");
    if (sub.ambient_dim() != n * n)
      throw GradingError(GradingError::Kind::kBadKey, "component " + to_key(g) + " has the wrong ambient dimension");
    if (!algebra.span().contains(sub))
      throw GradingError(GradingError::Kind::kOutsideAlgebra, "component " + to_key(g) + " is not inside the algebra");
    full[g] = sub;
    parts.push_back(&full[g]);
  }
  if (sum_of(n * n, parts) != algebra.span())
    throw GradingError(GradingError::Kind::kSumMismatch, "components do not sum to the algebra");

  std::map<GroupElem, std::vector<Mat>> bases;
  std::size_t total = 0;
  for (const auto& [g, sub] : full) {
    bases[g] = sub.basis_matrices(n);
    total += sub.dim();
  }
  for (auto it = bases.begin(); it != bases.end(); ++it)
    for (auto jt = it; jt != bases.end(); ++jt) {
      const Subspace& target = full.at(group.add(it->first, jt->first));
      for (std::size_t p = 0; p < it->second.size(); ++p)
        for (std::size_t q = (it == jt ? p + 1 : 0); q < jt->second.size(); ++q) {
          Mat c = bracket(it->second[p], jt->second[q]);
          if (!target.contains(c))
            throw GradingError("grading law violated: [L_" + to_key(it->first) + ", L_" + to_key(jt->first) +
                                   "] is not inside L_" + to_key(group.add(it->first, jt->first)),
                               it->first, jt->first, std::move(c));
        }
    }
  return SubgradedAlgebra(algebra, group, std::move(full), total == algebra.dim());
}

AmpliationResult ampliate(const SubgradedAlgebra& s) {
  const FinAbGroup& group = s.group();
  const std::size_t big = s.ambient_dim() * static_cast<std::size_t>(group.order());
  std::vector<Mat> basis;
  std::map<GroupElem, std::vector<std::pair<Mat, Mat>>> table;
  std::map<GroupElem, std::vector<Mat>> per_degree;
  for (const auto& g : group.elements()) {
    const Mat pi = regular_rep(group, g);
    auto& rows = table[g];
    for (const auto& a : s.component_basis(g)) {
      Mat lifted = kronecker(a, pi);
      basis.push_back(lifted);
      per_degree[g].push_back(lifted);
      rows.emplace_back(std::move(lifted), a);
    }
  }
  const LieAlgebra algebra = subalgebra_or_throw(Subspace::span_of_matrices(basis, big), big, "ampliate");
  ComponentMap comps;
  for (const auto& [g, mats] : per_degree) comps.emplace(g, Subspace::span_of_matrices(mats, big));
  SubgradedAlgebra out = verify_subgrading(algebra, group, comps);
  if (!out.is_direct()) throw InvariantViolation("ampliate: ampliation is not direct");
  return AmpliationResult{std::move(out), std::move(table)};
}

Mat f_pi(const Mat& u, std::size_t n, const FinAbGroup& group) {
  const std::size_t g = static_cast<std::size_t>(group.order());
  if (u.rows() != n * g || u.cols() != n * g) throw DimensionError("f_pi: expected a matrix of size n*|G|");
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < g; ++k) out(i, j) += u(i * g + k, j * g);
  return out;
}

MaptriReport check_maptri(const SubgradedAlgebra& s) {
  const AmpliationResult amp = ampliate(s);
  MaptriReport r;
  r.ampliated_engel = is_engel_algebra(amp.ampliated.algebra());
  r.original_engel = is_engel_algebra(s.algebra());
  r.ampliated_solvable = is_solvable(amp.ampliated.algebra());
  r.original_solvable = is_solvable(s.algebra());
  return r;
}

std::vector<HomogeneousCommutator> homogeneous_commutators(const SubgradedAlgebra& s) {
  std::vector<HomogeneousCommutator> out;
  const FinAbGroup& group = s.group();
  for (const auto& [g, gsub] : s.components()) {
    const auto left = s.component_basis(g);
    for (const auto& [h, hsub] : s.components()) {
      const auto right = s.component_basis(h);
      for (const auto& a : left)
        for (const auto& b : right) out.push_back({g, h, group.add(g, h), bracket(a, b)});
    }
  }
  return out;
}

namespace {

SubgradedAlgebra replace_zero_component(const SubgradedAlgebra& s, bool include_zero, const char* op) {
  const std::size_t n = s.ambient_dim();
  const FinAbGroup& group = s.group();
  const GroupElem zero = group.zero();
  Subspace l0(n * n);
  for (const auto& [g, sub] : s.components()) {
    if (!include_zero && g == zero) continue;
    const Subspace c = commutator_subspace(sub, s.component(group.negate(g)), n);
    for (const auto& v : c.basis()) l0.insert(v);
  }
  ComponentMap comps = s.components();
  comps[zero] = l0;
  std::vector<const Subspace*> parts;
  for (const auto& [g, sub] : comps) parts.push_back(&sub);
  const Subspace span = sum_of(n * n, parts);
  const LieAlgebra algebra = subalgebra_or_throw(span, n, op);
  if (!is_ideal(s.algebra(), span)) throw InvariantViolation(std::string(op) + ": result is not an ideal of L");
  return verify_subgrading(algebra, group, comps);
}

}  // namespace

SubgradedAlgebra l_prime(const SubgradedAlgebra& s) { return replace_zero_component(s, true, "l_prime"); }
SubgradedAlgebra l_double_prime(const SubgradedAlgebra& s) {
  return replace_zero_component(s, false, "l_double_prime");
}

// Irrational entries such as cos(2π/3) have convergents within 1e-9 once
// denominators reach ~1e5; a small bound makes them fail instead.
constexpr std::int64_t kMaxEigenDenominator = 1000;

SubgradedAlgebra grading_from_automorphism(const LieAlgebra& lie, const Mat& phi, std::int64_t n, double tol) {
  if (n < 1) throw PreconditionError("grading_from_automorphism: n must be positive");
  require_endomorphism(lie, phi, "grading_from_automorphism");
  const std::size_t d = lie.dim();
  if (d > 0 && determinant(phi).is_zero()) throw PreconditionError("grading_from_automorphism: phi is not invertible");
  if (power(phi, static_cast<std::size_t>(n)) != Mat::identity(d))
    throw PreconditionError("grading_from_automorphism: phi^n is not the identity");

  const FinAbGroup group = FinAbGroup::cyclic(n);
  ComponentMap comps;
  const bool exact = n == 1 || n == 2 || n == 4;
  std::size_t total = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    std::vector<Vec> coords;
    if (exact) {
      static const Scalar kRoots[4] = {Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
      const Scalar theta_k = kRoots[(4 / n) * k % 4];
      coords = kernel(phi - theta_k * Mat::identity(d));
    } else {
      const Complex theta_k = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
      const NumMat p = to_numeric(phi);
      const NumMat shifted = p - theta_k * NumMat::Identity(p.rows(), p.cols());
      const NumMat ker = numeric_kernel(shifted, tol);
      if (ker.cols() > 0) {
        const NumMat rows = numeric_rref(ker.transpose(), tol);
        for (Eigen::Index r = 0; r < rows.rows(); ++r) {
          Vec v(d);
          for (Eigen::Index c = 0; c < rows.cols(); ++c) {
            const auto q = rationalize(rows(r, c), tol, kMaxEigenDenominator);
            if (!q) throw NumericError("grading_from_automorphism: eigenvector entry does not rationalize");
            v[static_cast<std::size_t>(c)] = *q;
          }
          const NumVec nv = to_numeric(v);
          if ((p * nv - theta_k * nv).norm() > 1e-6 * std::max(1.0, nv.norm()))
            throw NumericError("grading_from_automorphism: rationalized eigenvector fails the eigen-equation");
          coords.push_back(std::move(v));
        }
      }
    }
    total += coords.size();
    comps.emplace(group.element({k}), span_of_coordinates(lie, coords));
  }
  if (total != d) throw NumericError("grading_from_automorphism: eigenspaces do not account for the whole algebra");
  SubgradedAlgebra out = verify_subgrading(lie, group, comps);
  if (!out.is_direct()) throw NumericError("grading_from_automorphism: eigenspace sum is not direct");
  return out;
}

CoarseningResult coarsen_by_subgroup(const SubgradedAlgebra& s, const std::vector<GroupElem>& subgroup_generators) {
  GroupQuotient proj = quotient_by_subgroup(s.group(), subgroup_generators);
  const std::size_t n = s.ambient_dim();
  ComponentMap comps;
  for (const auto& a : proj.quotient.elements()) comps.emplace(a, Subspace(n * n));
  for (const auto& [g, sub] : s.components()) {
    Subspace& target = comps[proj.project(g)];
    for (const auto& v : sub.basis()) target.insert(v);
  }
  SubgradedAlgebra out = verify_subgrading(s.algebra(), proj.quotient, comps);
  const bool cyclic = proj.quotient.is_cyclic();
  return CoarseningResult{std::move(out), std::move(proj), cyclic};
}

EndoReport endo_eigenspace_product_check(const LieAlgebra& lie, const Mat& phi, double tol) {
  require_endomorphism(lie, phi, "endo_eigenspace_product_check");
  EndoReport report;
  const std::size_t d = lie.dim();
  if (d == 0) return report;
  const NumMat p = to_numeric(phi);
  const double scale = std::max(1.0, p.norm());
  const double radius = std::max(tol, 1e-5) * scale;
  const auto clusters = cluster_eigenvalues(eig_numeric(p, tol), radius);
  std::vector<NumMat> spaces;
  for (const auto& c : clusters) {
    report.eigenvalues.push_back(c.center);
    spaces.push_back(generalized_eigenspace_numeric(p, c.center, tol));
  }
  const auto sc = structure_constants(lie);
  std::vector<NumVec> nsc;
  nsc.reserve(sc.size());
  for (const auto& v : sc) nsc.push_back(to_numeric(v));
  auto bracket_coords = [&](const NumVec& x, const NumVec& y) {
    NumVec z = NumVec::Zero(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) z += x(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j)) * nsc[i * d + j];
    return z;
  };
  const double check_tol = std::max(tol, 1e-6);
  for (std::size_t a = 0; a < clusters.size(); ++a)
    for (std::size_t b = 0; b < clusters.size(); ++b) {
      ++report.pairs_checked;
      const Complex target = clusters[a].center * clusters[b].center;
      NumMat q(static_cast<Eigen::Index>(d), 0);
      for (std::size_t c = 0; c < clusters.size(); ++c)
        if (std::abs(clusters[c].center - target) <= radius) q = spaces[c];
      double worst = 0;
      for (Eigen::Index x = 0; x < spaces[a].cols(); ++x)
        for (Eigen::Index y = 0; y < spaces[b].cols(); ++y) {
          const NumVec z = bracket_coords(spaces[a].col(x), spaces[b].col(y));
          const NumVec rest = q.cols() > 0 ? NumVec(z - q * (q.adjoint() * z)) : z;
          worst = std::max(worst, rest.norm() / (1.0 + z.norm()));
        }
      if (worst > check_tol) report.violations.push_back({clusters[a].center, clusters[b].center, worst});
    }
  return report;
}

}  // namespace gradelie
