#include "tglab/bitvec.hpp"

#include <stdexcept>

namespace tglab {

void BitVec::resize(std::size_t length) {
  length_ = length;
  words_.resize(word_count(length), 0);
  clear_tail();
}

void BitVec::clear_tail() {
  const std::size_t rem = length_ % kWordBits;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (word_type{1} << rem) - 1;
  }
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitVec xor: length mismatch");
  }
  const std::size_t n = words_.size();
  word_type* dst = words_.data();
  const word_type* src = other.words_.data();
  for (std::size_t w = 0; w < n; ++w) {
    dst[w] ^= src[w];
  }
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitVec and: length mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

bool BitVec::any() const {
  for (word_type w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVec::popcount() const {
  std::size_t total = 0;
  for (word_type w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVec::parity(std::size_t first, std::size_t last) const {
  if (first > last || last > length_) {
    throw std::out_of_range("BitVec::parity: bad range");
  }
  word_type acc = 0;
  std::size_t pos = first;
  // Leading partial word.
  while (pos < last && pos % kWordBits != 0) {
    acc ^= test(pos) ? 1u : 0u;
    ++pos;
  }
  while (pos + kWordBits <= last) {
    acc ^= static_cast<word_type>(std::popcount(words_[pos / kWordBits]) & 1);
    pos += kWordBits;
  }
  while (pos < last) {
    acc ^= test(pos) ? 1u : 0u;
    ++pos;
  }
  return (acc & 1u) != 0;
}

std::optional<std::size_t> BitVec::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVec::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    word_type bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool BitVec::dot(const BitVec& other) const {
  if (other.length_ != length_) {
    throw std::invalid_argument("BitVec dot: length mismatch");
  }
  word_type acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nibbles = (length_ + 3) / 4;
  std::string out(nibbles, '0');
  for (std::size_t k = 0; k < nibbles; ++k) {
    const std::size_t bit = k * 4;
    const unsigned value =
        static_cast<unsigned>((words_[bit / kWordBits] >> (bit % kWordBits)) & 0xF);
    out[k] = kDigits[value];
  }
  return out;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) {
    throw std::invalid_argument("BitVec::from_hex: length does not match digit count");
  }
  BitVec v(length);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char c = hex[k];
    word_type value = 0;
    if (c >= '0' && c <= '9') {
      value = static_cast<word_type>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      value = static_cast<word_type>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      value = static_cast<word_type>(c - 'A' + 10);
    } else {
      throw std::invalid_argument("BitVec::from_hex: bad digit");
    }
    const std::size_t bit = k * 4;
    v.words_[bit / kWordBits] |= value << (bit % kWordBits);
  }
  if (v.length_ % kWordBits != 0 && !v.words_.empty()) {
    const word_type before = v.words_.back();
    v.clear_tail();
    if (before != v.words_.back()) {
      throw std::invalid_argument("BitVec::from_hex: bits set past length");
    }
  }
  return v;
}

std::size_t BitVec::hash() const {
  // splitmix-style mixing over the words plus the length
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ length_;
  for (word_type w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace tglab
