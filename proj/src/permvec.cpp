#include "tglab/permvec.hpp"

#include <stdexcept>

namespace tglab {

namespace {

void check_same_order(int a, int b) {
  if (a != b) throw std::invalid_argument("vectors of different orders");
}

}  // namespace

EdgeVector::EdgeVector(int n, BitVec bits) : n_(n), bits_(std::move(bits)) {
  if (bits_.size() != edge_count(n)) throw std::invalid_argument("EdgeVector: length must be n^2(n-1)");
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& other) {
  check_same_order(n_, other.n_);
  bits_ ^= other.bits_;
  return *this;
}

PairVector::PairVector(int n) : n_(n), m_(edge_count(n)), bits_(m_ * m_) {}

PairVector::PairVector(int n, BitVec bits) : n_(n), m_(edge_count(n)), bits_(std::move(bits)) {
  if (bits_.size() != m_ * m_) throw std::invalid_argument("PairVector: length must be |E(n)|^2");
}

void PairVector::flip_symmetric(std::size_t a, std::size_t b) {
  bits_.flip(a * m_ + b);
  if (a != b) bits_.flip(b * m_ + a);
}

PairVector& PairVector::operator^=(const PairVector& other) {
  check_same_order(n_, other.n_);
  bits_ ^= other.bits_;
  return *this;
}

bool PairVector::row_any(std::size_t a) const {
  // Row a is the bit range [a m, (a + 1) m); scan whole words where possible.
  const std::size_t first = a * m_;
  const std::size_t last = first + m_;
  std::size_t pos = first;
  while (pos < last && pos % BitVec::kWordBits != 0) {
    if (bits_.test(pos)) return true;
    ++pos;
  }
  const BitVec::word_type* words = bits_.data();
  while (pos + BitVec::kWordBits <= last) {
    if (words[pos / BitVec::kWordBits] != 0) return true;
    pos += BitVec::kWordBits;
  }
  for (; pos < last; ++pos) {
    if (bits_.test(pos)) return true;
  }
  return false;
}

EdgeVector tn(const Permutation& p) {
  EdgeVector f(p.size());
  for (const Edge& e : incident_edges(p)) f.set(e);
  return f;
}

PairVector tpn(const Permutation& p) {
  PairVector g(p.size());
  const auto idx = incident_edge_indices(p);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a; b < idx.size(); ++b) g.flip_symmetric(idx[a], idx[b]);
  }
  return g;
}

EdgeVector pmap(const PairVector& g) {
  BitVec diag(g.edges());
  for (std::size_t a = 0; a < g.edges(); ++a) {
    if (g.at(a, a)) diag.set(a);
  }
  return EdgeVector(g.order(), std::move(diag));
}

EdgeVector pe_map(const PairVector& g, const Edge& e) {
  const std::size_t a = edge_index(e, g.order());
  BitVec row(g.edges());
  for (std::size_t b = 0; b < g.edges(); ++b) {
    if (g.at(a, b)) row.set(b);
  }
  return EdgeVector(g.order(), std::move(row));
}

bool value(const EdgeVector& f) {
  const auto n = static_cast<std::size_t>(f.order());
  if (n < 2) return false;
  return f.bits().parity(0, n * n);
}

bool value(const PairVector& g) { return value(pmap(g)); }

bool is_symmetric(const PairVector& g) {
  for (std::size_t a = 0; a < g.edges(); ++a) {
    for (std::size_t b = a + 1; b < g.edges(); ++b) {
      if (g.at(a, b) != g.at(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> support(const PairVector& g) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.edges(); ++a) {
    if (g.row_any(a)) out.push_back(a);
  }
  return out;
}

bool is_supported_in(const PairVector& g, const TimeGraph& graph) {
  check_same_order(g.order(), graph.order());
  for (std::size_t a : graph.complement_indices()) {
    if (g.row_any(a)) return false;
  }
  return true;
}

EdgeVector sum_tn(const std::vector<Permutation>& perms, int n) {
  EdgeVector f(n);
  for (const Permutation& p : perms) f ^= tn(p);
  return f;
}

PairVector sum_tpn(const std::vector<Permutation>& perms, int n) {
  PairVector g(n);
  for (const Permutation& p : perms) g ^= tpn(p);
  return g;
}

}  // namespace tglab
