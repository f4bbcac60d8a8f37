#include "tglab/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "tglab/rng.hpp"

namespace tglab {

namespace {

std::vector<std::size_t> positions_for(const TimeGraph& g, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> position(edge_count(g.order()), 0);
  std::vector<bool> seen(position.size(), false);
  std::size_t m = 0;
  for (std::size_t idx : order) {
    ++m;
    if (idx >= position.size()) throw std::invalid_argument("complement order: edge index out of range");
    if (g.contains_index(idx)) {
      throw std::invalid_argument("complement order: edge " + std::to_string(idx) + " belongs to G");
    }
    if (seen[idx]) throw std::invalid_argument("complement order: repeated edge " + std::to_string(idx));
    seen[idx] = true;
    position[idx] = m;
  }
  if (order.size() != position.size() - g.size()) {
    throw std::invalid_argument("complement order does not cover G^c");
  }
  return position;
}

/// Permutations grouped by entry layer, each group in lexicographic order
/// or shuffled by the seed.
std::vector<std::vector<Permutation>> group_by_layer(const TimeGraph& g,
                                                     const std::vector<std::size_t>& position,
                                                     std::size_t k, std::uint64_t seed, int cap) {
  std::vector<std::vector<Permutation>> groups(k + 1);
  for (Permutation& p : all_permutations(g.order(), cap)) {
    groups[entry_layer(p, position)].push_back(std::move(p));
  }
  if (seed != 0) {
    Rng rng(seed);
    for (auto& group : groups) rng.shuffle(group);
  }
  return groups;
}

}  // namespace

std::vector<std::size_t> default_complement_order(const TimeGraph& g) {
  return g.complement_indices();
}

std::vector<std::size_t> shuffled_complement_order(const TimeGraph& g, std::uint64_t seed) {
  auto order = g.complement_indices();
  Rng rng(seed);
  rng.shuffle(order);
  return order;
}

std::size_t entry_layer(const Permutation& p, const std::vector<std::size_t>& position) {
  std::size_t layer = 0;
  for (std::size_t idx : incident_edge_indices(p)) layer = std::max(layer, position[idx]);
  return layer;
}

CanonicalBasis::CanonicalBasis(TimeGraph graph, std::vector<std::size_t> order, std::uint64_t seed)
    : graph_(std::move(graph)),
      order_(std::move(order)),
      position_(positions_for(graph_, order_)),
      seed_(seed),
      layers_(order_.size() + 1),
      f_basis_(edge_count(graph_.order())) {}

bool CanonicalBasis::try_add(std::size_t layer, const Permutation& p) {
  EdgeVector f = tn(p);
  if (!std::holds_alternative<gf2::Extended>(f_basis_.insert(f.bits()))) return false;
  layers_[layer].push_back(CanonicalElement{p, std::move(f), tpn(p)});
  return true;
}

CanonicalBasis build_canonical_basis(const TimeGraph& g, std::vector<std::size_t> order,
                                     std::uint64_t basis_seed, int cap) {
  CanonicalBasis cb(g, std::move(order), basis_seed);
  const auto groups = group_by_layer(g, cb.position_, cb.k(), basis_seed, cap);
  for (std::size_t layer = 0; layer < groups.size(); ++layer) {
    for (const Permutation& p : groups[layer]) cb.try_add(layer, p);
  }
  return cb;
}

PairLayeredBasis build_canonical_pair_basis(const TimeGraph& g, const std::vector<std::size_t>& order,
                                            int cap) {
  const auto position = positions_for(g, order);
  const auto groups = group_by_layer(g, position, order.size(), 0, cap);
  const std::size_t m = edge_count(g.order());
  gf2::Basis basis(m * m, false);
  PairLayeredBasis out;
  out.layers.resize(groups.size());
  for (std::size_t layer = 0; layer < groups.size(); ++layer) {
    for (const Permutation& p : groups[layer]) {
      if (std::holds_alternative<gf2::Extended>(basis.insert(tpn(p).bits()))) {
        out.layers[layer].push_back(p);
      }
    }
    out.counts.push_back(out.layers[layer].size());
  }
  out.rank = basis.rank();
  return out;
}

Decomposition decompose(const PairVector& g, const CanonicalBasis& cb) {
  if (g.order() != cb.order()) throw std::invalid_argument("decompose: order mismatch");
  const auto flat = cb.f_basis().coords(pmap(g).bits());
  if (!flat) {
    throw std::logic_error("decompose: P(g) is not in the span of the canonical basis");
  }
  Decomposition dec;
  dec.gc = g;
  std::size_t offset = 0;
  for (const auto& layer : cb.layers()) {
    BitVec alpha(layer.size());
    EdgeVector sum(cb.order());
    for (std::size_t j = 0; j < layer.size(); ++j) {
      if (!flat->test(offset + j)) continue;
      alpha.set(j);
      sum ^= layer[j].f;
      dec.gc ^= layer[j].F;
    }
    offset += layer.size();
    dec.alpha.push_back(std::move(alpha));
    dec.layer_sums.push_back(std::move(sum));
  }
  if (pmap(dec.gc).any()) {
    throw std::logic_error("decompose: remainder is not a closed cycle");
  }
  return dec;
}

std::vector<bool> tail_sums_at_pivots(const Decomposition& dec, const CanonicalBasis& cb, bool strict) {
  const std::size_t k = cb.k();
  std::vector<bool> out(k, false);
  // suffix = sum of f^{(i)} for i > m while walking m downward.
  EdgeVector suffix(cb.order());
  for (std::size_t m = k; m >= 1; --m) {
    const std::size_t edge = cb.complement_order()[m - 1];
    if (strict) {
      out[m - 1] = suffix.at(edge);
      suffix ^= dec.layer_sums[m];
    } else {
      suffix ^= dec.layer_sums[m];
      out[m - 1] = suffix.at(edge);
    }
  }
  return out;
}

bool theorem8_check(const Decomposition& dec, const CanonicalBasis& cb) {
  const auto sums = tail_sums_at_pivots(dec, cb, false);
  return std::none_of(sums.begin(), sums.end(), [](bool b) { return b; });
}

nlohmann::json permutation_to_json(const Permutation& p) { return p.image(); }

Permutation permutation_from_json(const nlohmann::json& j) {
  return Permutation(j.get<std::vector<int>>());
}

nlohmann::json to_json(const CanonicalBasis& cb) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : cb.layers()) {
    nlohmann::json perms = nlohmann::json::array();
    for (const auto& el : layer) perms.push_back(permutation_to_json(el.perm));
    layers.push_back(std::move(perms));
  }
  return nlohmann::json{{"n", cb.order()},
                        {"edges", cb.graph().edge_indices()},
                        {"complement_order", cb.complement_order()},
                        {"basis_seed", cb.basis_seed()},
                        {"layers", std::move(layers)}};
}

CanonicalBasis canonical_basis_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const auto graph = TimeGraph::from_indices(n, j.at("edges").get<std::vector<std::size_t>>());
  CanonicalBasis cb(graph, j.at("complement_order").get<std::vector<std::size_t>>(),
                    j.at("basis_seed").get<std::uint64_t>());
  const auto& layers = j.at("layers");
  if (layers.size() != cb.k() + 1) throw std::invalid_argument("canonical basis: wrong layer count");
  const auto groups = group_by_layer(graph, cb.position_, cb.k(), 0, kDefaultPermutationCap);
  for (std::size_t layer = 0; layer < layers.size(); ++layer) {
    for (const auto& item : layers[layer]) {
      const Permutation p = permutation_from_json(item);
      if (p.size() != n || entry_layer(p, cb.position_) != layer) {
        throw std::invalid_argument("canonical basis: permutation " + to_string(p) +
                                    " does not enter at layer " + std::to_string(layer));
      }
      if (!cb.try_add(layer, p)) {
        throw std::invalid_argument("canonical basis: dependent element " + to_string(p));
      }
    }
    // Prefix property: layers 0..layer span H^n(G_layer).
    for (const Permutation& p : groups[layer]) {
      if (cb.f_basis_.extends(tn(p).bits())) {
        throw std::invalid_argument("canonical basis: layers 0.." + std::to_string(layer) +
                                    " do not span H^n(G_" + std::to_string(layer) + ")");
      }
    }
  }
  return cb;
}

}  // namespace tglab
