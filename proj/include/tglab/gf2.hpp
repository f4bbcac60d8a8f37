#ifndef TGLAB_GF2_HPP
#define TGLAB_GF2_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tglab/bitvec.hpp"

namespace tglab::gf2 {

/// The inserted vector was independent; it is now original number `index`.
struct Extended {
  std::size_t index;
};

/// The inserted vector lies in the span. `coeffs` has one bit per original
/// (in insertion order) and their xor equals the inserted vector.
struct Dependent {
  BitVec coeffs;
};

using InsertResult = std::variant<Extended, Dependent>;

/// Incrementally maintained basis of a subspace of GF(2)^dimension.
///
/// Rows are kept in fully reduced echelon form: each row's pivot (its
/// lowest set bit) is clear in every other row. Only independent inserted
/// vectors become originals, so coordinates over the originals are unique.
/// With coefficient tracking enabled each row also carries its expression
/// as an xor of originals.
class Basis {
 public:
  explicit Basis(std::size_t dimension, bool track_coefficients = true);

  InsertResult insert(const BitVec& v);

  /// True when v is outside the current span (insert would extend).
  bool extends(const BitVec& v) const;
  bool contains(const BitVec& v) const { return !extends(v); }

  /// Coefficients over the originals reproducing v, or nullopt if v is not
  /// in the span. Requires coefficient tracking.
  std::optional<BitVec> coords(const BitVec& v) const;

  /// v with every pivot cleared (the canonical coset representative).
  BitVec reduce(const BitVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }
  bool tracks_coefficients() const { return track_; }

  const std::vector<BitVec>& originals() const { return originals_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void check_length(const BitVec& v) const;

  std::size_t dimension_;
  bool track_;
  std::vector<BitVec> rows_;
  std::vector<BitVec> combos_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVec> originals_;
};

/// Rank of a list of equal-length vectors. Throws on mixed lengths.
std::size_t rank(std::span<const BitVec> vectors);

struct Solution {
  BitVec particular;
  std::vector<BitVec> nullspace;
  /// Rank of the coefficient matrix.
  std::size_t rank = 0;
};

/// Solves A x = b where `equations[r]` is row r of A (length `variables`)
/// and b is given bitwise by `rhs` (one bit per equation). Returns nullopt
/// when the system is inconsistent. Free variables are zero in the
/// particular solution; each nullspace vector sets exactly one free variable.
std::optional<Solution> solve(std::span<const BitVec> equations, const BitVec& rhs,
                              std::size_t variables);

/// A x for A given by rows.
BitVec multiply(std::span<const BitVec> equations, const BitVec& x);

}  // namespace tglab::gf2

#endif  // TGLAB_GF2_HPP
