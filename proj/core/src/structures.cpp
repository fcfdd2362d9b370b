#include "gradelie/structures.hpp"

#include "gradelie/error.hpp"

namespace gradelie {
namespace {

LieAlgebra algebra_on(const Subspace& span, std::size_t n, const char* op) {
  try {
    return LieAlgebra::from_subspace(span, n);
  } catch (const PreconditionError& e) {
    throw InvariantViolation(std::string(op) + ": span is not a Lie algebra (" + e.what() + ")");
  }
}

Subspace plus(const Subspace& a, const Subspace& b) { return subspace_sum(a, b); }

SubgradedAlgebra z2_from_triple(const MatSubspace& m, const char* op) {
  const std::size_t n = m.ambient_dim();
  const Subspace l0 = commutator_subspace(m.span(), m.span(), n);
  const LieAlgebra lie = algebra_on(plus(l0, m.span()), n, op);
  const FinAbGroup z2 = FinAbGroup::cyclic(2);
  return verify_subgrading(lie, z2, {{z2.element({0}), l0}, {z2.element({1}), m.span()}});
}

}  // namespace

MatSubspace::MatSubspace(std::span<const Mat> spanning, std::size_t n) : n_(n), span_(n * n) {
  for (const auto& a : spanning) {
    if (a.rows() != n || a.cols() != n) throw DimensionError("MatSubspace: matrix size mismatch");
    if (span_.insert(flatten(a))) basis_.push_back(a);
  }
}

MatSubspace::MatSubspace(const Subspace& span, std::size_t n) : n_(n), basis_(span.basis_matrices(n)), span_(span) {
  if (span.ambient_dim() != n * n) throw DimensionError("MatSubspace: ambient is not n^2");
}

bool is_lie_triple_system(const MatSubspace& m) {
  const auto& b = m.basis();
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = j + 1; k < b.size(); ++k) {
      const Mat inner = bracket(b[j], b[k]);
      if (inner.is_zero()) continue;
      for (const auto& a : b)
        if (!m.contains(bracket(a, inner))) return false;
    }
  return true;
}

std::vector<Mat> m_bracket_powers(const MatSubspace& m, std::size_t k) {
  if (k == 0) throw PreconditionError("m_bracket_powers: k must be at least 1");
  const std::size_t n = m.ambient_dim();
  Subspace level = m.span();
  for (std::size_t step = 1; step < k && !level.is_zero(); ++step) level = commutator_subspace(m.span(), level, n);
  return level.basis_matrices(n);
}

bool is_lie_n_product_system(const MatSubspace& m, std::size_t n) {
  if (n < 2) throw PreconditionError("is_lie_n_product_system: n must be at least 2");
  for (const auto& a : m_bracket_powers(m, n))
    if (!m.contains(a)) return false;
  return true;
}

LieAlgebra triple_envelope(const MatSubspace& m) {
  if (!is_lie_triple_system(m)) throw PreconditionError("triple_envelope: M is not a Lie triple system");
  const std::size_t n = m.ambient_dim();
  return algebra_on(plus(m.span(), commutator_subspace(m.span(), m.span(), n)), n, "triple_envelope");
}

SubgradedAlgebra triple_to_z2(const MatSubspace& m) {
  if (!is_lie_triple_system(m)) throw PreconditionError("triple_to_z2: M is not a Lie triple system");
  return z2_from_triple(m, "triple_to_z2");
}

bool is_jordan_algebra(const MatSubspace& j) {
  const auto& b = j.basis();
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = p; q < b.size(); ++q)
      if (!j.contains(jordan_product(b[p], b[q]))) return false;
  return true;
}

bool is_jordan_ideal(const MatSubspace& j, const MatSubspace& i) {
  if (!j.span().contains(i.span())) throw PreconditionError("is_jordan_ideal: I is not contained in J");
  for (const auto& a : j.basis())
    for (const auto& x : i.basis())
      if (!i.contains(jordan_product(a, x))) return false;
  return true;
}

SubgradedAlgebra jordan_to_z2(const MatSubspace& j) {
  if (!is_jordan_algebra(j)) throw PreconditionError("jordan_to_z2: J is not a Jordan algebra");
  if (!is_lie_triple_system(j)) throw InvariantViolation("jordan_to_z2: Jordan algebra is not a Lie triple system");
  return z2_from_triple(j, "jordan_to_z2");
}

JordanIdealChain jordan_ideal_chain(const MatSubspace& j, const MatSubspace& i) {
  if (!is_jordan_algebra(j)) throw PreconditionError("jordan_ideal_chain: J is not a Jordan algebra");
  if (!is_jordan_ideal(j, i)) throw PreconditionError("jordan_ideal_chain: I is not a Jordan ideal of J");
  const std::size_t n = j.ambient_dim();
  LieAlgebra li = algebra_on(plus(i.span(), commutator_subspace(i.span(), i.span(), n)), n, "jordan_ideal_chain");
  LieAlgebra lji = algebra_on(plus(i.span(), commutator_subspace(j.span(), i.span(), n)), n, "jordan_ideal_chain");
  LieAlgebra lj = algebra_on(plus(j.span(), commutator_subspace(j.span(), j.span(), n)), n, "jordan_ideal_chain");
  if (!lji.span().contains(li.span()) || !is_ideal(lji, li.span()))
    throw InvariantViolation("jordan_ideal_chain: L(I) is not an ideal of L(J,I)");
  if (!lj.span().contains(lji.span()) || !is_ideal(lj, lji.span()))
    throw InvariantViolation("jordan_ideal_chain: L(J,I) is not an ideal of L(J)");
  return JordanIdealChain{std::move(li), std::move(lji), std::move(lj)};
}

}  // namespace gradelie
