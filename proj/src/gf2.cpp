#include "tglab/gf2.hpp"

#include <stdexcept>

namespace tglab::gf2 {

Basis::Basis(std::size_t dimension, bool track_coefficients)
    : dimension_(dimension), track_(track_coefficients) {}

void Basis::check_length(const BitVec& v) const {
  if (v.size() != dimension_) {
    throw std::invalid_argument("gf2::Basis: vector length does not match basis dimension");
  }
}

InsertResult Basis::insert(const BitVec& v) {
  check_length(v);
  BitVec residual = v;
  BitVec combo(track_ ? originals_.size() : 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (residual.test(pivots_[r])) {
      residual ^= rows_[r];
      if (track_) combo ^= combos_[r];
    }
  }
  const auto pivot = residual.lowest_set();
  if (!pivot) {
    return Dependent{std::move(combo)};
  }

  const std::size_t index = originals_.size();
  originals_.push_back(v);
  if (track_) {
    for (BitVec& c : combos_) c.resize(index + 1);
    combo.resize(index + 1);
    combo.set(index);
  }
  // Keep the form fully reduced: clear the new pivot from older rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].test(*pivot)) {
      rows_[r] ^= residual;
      if (track_) combos_[r] ^= combo;
    }
  }
  rows_.push_back(std::move(residual));
  pivots_.push_back(*pivot);
  if (track_) combos_.push_back(std::move(combo));
  return Extended{index};
}

bool Basis::extends(const BitVec& v) const { return reduce(v).any(); }

BitVec Basis::reduce(const BitVec& v) const {
  check_length(v);
  BitVec residual = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (residual.test(pivots_[r])) residual ^= rows_[r];
  }
  return residual;
}

std::optional<BitVec> Basis::coords(const BitVec& v) const {
  if (!track_) {
    throw std::logic_error("gf2::Basis::coords requires coefficient tracking");
  }
  check_length(v);
  BitVec residual = v;
  BitVec combo(originals_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (residual.test(pivots_[r])) {
      residual ^= rows_[r];
      combo ^= combos_[r];
    }
  }
  if (residual.any()) return std::nullopt;
  return combo;
}

std::size_t rank(std::span<const BitVec> vectors) {
  if (vectors.empty()) return 0;
  Basis basis(vectors.front().size(), false);
  for (const BitVec& v : vectors) {
    if (v.size() != basis.dimension()) {
      throw std::invalid_argument("gf2::rank: mixed vector lengths");
    }
    basis.insert(v);
  }
  return basis.rank();
}

std::optional<Solution> solve(std::span<const BitVec> equations, const BitVec& rhs,
                              std::size_t variables) {
  if (rhs.size() != equations.size()) {
    throw std::invalid_argument("gf2::solve: rhs length must equal equation count");
  }
  // Augmented rows with the rhs in the last column; a reduced row whose
  // pivot is that column is 0 = 1.
  Basis basis(variables + 1, false);
  for (std::size_t r = 0; r < equations.size(); ++r) {
    if (equations[r].size() != variables) {
      throw std::invalid_argument("gf2::solve: equation length does not match variable count");
    }
    BitVec row = equations[r];
    row.resize(variables + 1);
    row.assign(variables, rhs.test(r));
    basis.insert(row);
  }

  Solution sol;
  sol.particular = BitVec(variables);
  std::vector<bool> is_pivot(variables, false);
  const auto& rows = basis.rows();
  const auto& pivots = basis.pivots();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (pivots[r] == variables) return std::nullopt;
    is_pivot[pivots[r]] = true;
    sol.particular.assign(pivots[r], rows[r].test(variables));
  }
  sol.rank = rows.size();
  for (std::size_t f = 0; f < variables; ++f) {
    if (is_pivot[f]) continue;
    BitVec null(variables);
    null.set(f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].test(f)) null.set(pivots[r]);
    }
    sol.nullspace.push_back(std::move(null));
  }
  return sol;
}

BitVec multiply(std::span<const BitVec> equations, const BitVec& x) {
  BitVec out(equations.size());
  for (std::size_t r = 0; r < equations.size(); ++r) {
    out.assign(r, equations[r].dot(x));
  }
  return out;
}

}  // namespace tglab::gf2
