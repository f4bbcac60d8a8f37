#ifndef TGLAB_BITVEC_HPP
#define TGLAB_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tglab {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-level
/// equality, hashing and popcount are exact.
class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t length)
      : length_(length), words_(word_count(length), 0) {}

  static BitVec unit(std::size_t length, std::size_t index) {
    BitVec v(length);
    v.set(index);
    return v;
  }

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool test(std::size_t index) const {
    return (words_[index / kWordBits] >> (index % kWordBits)) & 1u;
  }
  void set(std::size_t index) {
    words_[index / kWordBits] |= word_type{1} << (index % kWordBits);
  }
  void reset(std::size_t index) {
    words_[index / kWordBits] &= ~(word_type{1} << (index % kWordBits));
  }
  void flip(std::size_t index) {
    words_[index / kWordBits] ^= word_type{1} << (index % kWordBits);
  }
  void assign(std::size_t index, bool value) {
    if (value) {
      set(index);
    } else {
      reset(index);
    }
  }

  /// Grows or shrinks the vector; new bits are zero.
  void resize(std::size_t length);

  /// In-place xor. Throws std::invalid_argument on length mismatch.
  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  bool operator==(const BitVec& other) const = default;

  bool any() const;
  bool none() const { return !any(); }
  std::size_t popcount() const;

  /// Parity of the bits in [first, last).
  bool parity(std::size_t first, std::size_t last) const;

  /// Lowest set bit, if any.
  std::optional<std::size_t> lowest_set() const;

  /// Indices of all set bits, ascending.
  std::vector<std::size_t> set_bits() const;

  /// Dot product over GF(2).
  bool dot(const BitVec& other) const;

  std::size_t word_size() const { return words_.size(); }
  const word_type* data() const { return words_.data(); }

  /// Lowercase hex, one digit per 4 bits; digit k holds bits 4k..4k+3 with
  /// bit 4k as its low bit. The length is carried separately.
  std::string to_hex() const;
  static BitVec from_hex(std::string_view hex, std::size_t length);

  std::size_t hash() const;

 private:
  static std::size_t word_count(std::size_t length) {
    return (length + kWordBits - 1) / kWordBits;
  }
  void clear_tail();

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace tglab

#endif  // TGLAB_BITVEC_HPP
