#include "gradelie/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>

#include "gradelie/error.hpp"

namespace gradelie {
namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

using IntMat = std::vector<std::vector<std::int64_t>>;

// Smith normal form of `a` (rows are relations). Returns the diagonal and
// accumulates the column operations into `v`, so that the lattice spanned by
// the rows of a·v equals the lattice spanned by the diagonal.
std::vector<std::int64_t> smith_diagonal(IntMat a, IntMat& v) {
  const std::size_t m = a.size();
  const std::size_t k = v.size();
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  auto sub_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : v) row[dst] -= q * row[src];
  };
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(m, k); ++t) {
    while (true) {
      std::size_t bp = m, bq = k;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (a[i][j] != 0 && (bp == m || std::abs(a[i][j]) < std::abs(a[bp][bq]))) {
            bp = i;
            bq = j;
          }
      if (bp == m) return diag;
      std::swap(a[t], a[bp]);
      swap_cols(t, bq);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < k; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        sub_col(j, t, a[t][j] / a[t][t]);
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < k && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < k; ++c) a[t][c] += a[i][c];
            divides = false;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (auto& row : a) row[t] = -row[t];
      for (auto& row : v) row[t] = -row[t];
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_)
    if (m < 1) throw PreconditionError("FinAbGroup: moduli must be positive");
}

std::int64_t FinAbGroup::order() const {
  std::int64_t o = 1;
  for (auto m : moduli_) o *= m;
  return o;
}

GroupElem FinAbGroup::element(std::vector<std::int64_t> values) const {
  if (values.size() != rank()) throw DimensionError("FinAbGroup::element: wrong number of residues");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = mod(values[i], moduli_[i]);
  return GroupElem{std::move(values)};
}

bool FinAbGroup::is_canonical(const GroupElem& g) const {
  if (g.residues.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (g.residues[i] < 0 || g.residues[i] >= moduli_[i]) return false;
  return true;
}

void FinAbGroup::require(const GroupElem& g) const {
  if (!is_canonical(g)) throw PreconditionError("group element " + to_key(g) + " is not a canonical element");
}

std::vector<GroupElem> FinAbGroup::elements() const {
  std::vector<GroupElem> out;
  out.reserve(static_cast<std::size_t>(order()));
  GroupElem g = zero();
  for (std::int64_t c = 0; c < order(); ++c) {
    out.push_back(g);
    for (std::size_t i = rank(); i-- > 0;) {
      if (++g.residues[i] < moduli_[i]) break;
      g.residues[i] = 0;
    }
  }
  return out;
}

std::size_t FinAbGroup::index_of(const GroupElem& g) const {
  require(g);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(g.residues[i]);
  return idx;
}

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
  require(a);
  require(b);
  GroupElem out = a;
  for (std::size_t i = 0; i < rank(); ++i) out.residues[i] = (a.residues[i] + b.residues[i]) % moduli_[i];
  return out;
}

GroupElem FinAbGroup::negate(const GroupElem& a) const {
  require(a);
  GroupElem out = a;
  for (std::size_t i = 0; i < rank(); ++i) out.residues[i] = mod(-a.residues[i], moduli_[i]);
  return out;
}

GroupElem FinAbGroup::multiple(const GroupElem& a, std::int64_t k) const {
  require(a);
  GroupElem out = a;
  for (std::size_t i = 0; i < rank(); ++i) out.residues[i] = mod(mod(k, moduli_[i]) * a.residues[i], moduli_[i]);
  return out;
}

std::int64_t FinAbGroup::order_of(const GroupElem& a) const {
  require(a);
  std::int64_t o = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t component = moduli_[i] / std::gcd(moduli_[i], a.residues[i]);
    o = std::lcm(o, component);
  }
  return o;
}

std::vector<GroupElem> FinAbGroup::subgroup(const std::vector<GroupElem>& gens) const {
  std::set<GroupElem> seen{zero()};
  std::vector<GroupElem> frontier{zero()};
  while (!frontier.empty()) {
    std::vector<GroupElem> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        GroupElem y = add(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool FinAbGroup::is_cyclic() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (std::gcd(moduli_[i], moduli_[j]) != 1) return false;
  return true;
}

std::string to_key(const GroupElem& g) {
  std::string out;
  for (std::size_t i = 0; i < g.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.residues[i]);
  }
  return out;
}

GroupElem parse_key(const FinAbGroup& group, std::string_view key) {
  std::vector<std::int64_t> values;
  if (!key.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = key.find(',', start);
      const std::string_view part = key.substr(start, comma == std::string_view::npos ? key.npos : comma - start);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
        throw PreconditionError("malformed group element key '" + std::string(key) + "'");
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (values.size() != group.rank())
    throw PreconditionError("group element key '" + std::string(key) + "' has the wrong number of residues");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0 || values[i] >= group.moduli()[i])
      throw PreconditionError("group element key '" + std::string(key) + "' is not in least-residue form");
  return GroupElem{std::move(values)};
}

std::vector<std::int64_t> invariant_factors(const FinAbGroup& group) {
  const std::size_t k = group.rank();
  IntMat rel(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) rel[i][i] = group.moduli()[i];
  IntMat v(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) v[i][i] = 1;
  std::vector<std::int64_t> out;
  for (auto d : smith_diagonal(rel, v))
    if (d != 1) out.push_back(d);
  return out;
}

bool in_gamma_sharp(const FinAbGroup& group, const GroupElem& a, const GroupElem& b) {
  const auto generated = static_cast<std::int64_t>(group.subgroup({a, b}).size());
  return generated != std::lcm(group.order_of(a), group.order_of(b));
}

std::vector<std::pair<GroupElem, GroupElem>> gamma_sharp(const FinAbGroup& group) {
  std::vector<std::pair<GroupElem, GroupElem>> out;
  const auto elems = group.elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (in_gamma_sharp(group, a, b)) out.emplace_back(a, b);
  return out;
}

Mat regular_rep(const FinAbGroup& group, const GroupElem& g) {
  const auto elems = group.elements();
  Mat p(elems.size(), elems.size());
  for (const auto& d : elems) p(group.index_of(group.add(g, d)), group.index_of(d)) = Scalar(1);
  return p;
}

std::map<GroupElem, Mat> regular_rep(const FinAbGroup& group) {
  std::map<GroupElem, Mat> out;
  for (const auto& g : group.elements()) out.emplace(g, regular_rep(group, g));
  return out;
}

GroupElem GroupQuotient::project(const GroupElem& g) const {
  if (g.residues.size() != images.size()) throw DimensionError("GroupQuotient::project: rank mismatch");
  GroupElem out = quotient.zero();
  for (std::size_t i = 0; i < images.size(); ++i) out = quotient.add(out, quotient.multiple(images[i], g.residues[i]));
  return out;
}

GroupQuotient quotient_by_subgroup(const FinAbGroup& group, const std::vector<GroupElem>& generators) {
  const std::size_t k = group.rank();
  for (const auto& h : generators)
    if (!group.is_canonical(h)) throw PreconditionError("subgroup generator " + to_key(h) + " is not in the group");
  IntMat rel;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> row(k, 0);
    row[i] = group.moduli()[i];
    rel.push_back(std::move(row));
  }
  for (const auto& h : generators) rel.push_back(h.residues);
  IntMat v(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) v[i][i] = 1;
  const auto diag = smith_diagonal(rel, v);

  std::vector<std::size_t> kept;
  std::vector<std::int64_t> moduli;
  for (std::size_t j = 0; j < diag.size(); ++j)
    if (diag[j] != 1) {
      kept.push_back(j);
      moduli.push_back(diag[j]);
    }
  GroupQuotient out;
  out.quotient = moduli.empty() ? FinAbGroup({1}) : FinAbGroup(moduli);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> image(out.quotient.rank(), 0);
    for (std::size_t c = 0; c < kept.size(); ++c) image[c] = v[i][kept[c]];
    out.images.push_back(out.quotient.element(std::move(image)));
  }
  return out;
}

}  // namespace gradelie
