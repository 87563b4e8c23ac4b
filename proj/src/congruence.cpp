#include "latcon/congruence.hpp"

#include <algorithm>
#include <unordered_set>

#include "latcon/error.hpp"

namespace latcon {

namespace {

// Closes the union-find state under meet/join translation. `pending` holds
// the pairs merged so far whose translates have not been processed.
void close_congruence(const Lattice& lattice, UnionFind& uf,
                      std::vector<std::pair<Element, Element>>& pending) {
  const auto n = static_cast<Element>(lattice.size());
  while (!pending.empty()) {
    const auto [x, y] = pending.back();
    pending.pop_back();
    for (Element z = 0; z < n; ++z) {
      const Element mx = lattice.meet(x, z);
      const Element my = lattice.meet(y, z);
      if (uf.unite(mx, my)) pending.emplace_back(mx, my);
      const Element jx = lattice.join(x, z);
      const Element jy = lattice.join(y, z);
      if (uf.unite(jx, jy)) pending.emplace_back(jx, jy);
    }
  }
}

void check_cap(const Lattice& lattice, const ConOptions& options) {
  if (lattice.size() > options.max_elements) {
    throw Error(ErrorKind::SizeCapExceeded,
                "Con(L) for |L| = " + std::to_string(lattice.size()) +
                    " exceeds the cap of " + std::to_string(options.max_elements));
  }
}

bool member_order(const Partition& a, const Partition& b) {
  const auto ca = a.block_count();
  const auto cb = b.block_count();
  if (ca != cb) return ca > cb;
  return a.assignment() < b.assignment();
}

}  // namespace

Partition principal_congruence(const Lattice& lattice, Element a, Element b) {
  UnionFind uf(lattice.size());
  std::vector<std::pair<Element, Element>> pending;
  if (uf.unite(a, b)) pending.emplace_back(a, b);
  close_congruence(lattice, uf, pending);
  return uf.to_partition();
}

Partition congruence_generated(const Lattice& lattice,
                               std::span<const std::pair<Element, Element>> pairs) {
  UnionFind uf(lattice.size());
  std::vector<std::pair<Element, Element>> pending;
  for (const auto& [a, b] : pairs) {
    if (uf.unite(a, b)) pending.emplace_back(a, b);
  }
  close_congruence(lattice, uf, pending);
  return uf.to_partition();
}

ConLattice::ConLattice(Lattice base, std::vector<Partition> members)
    : base_(std::move(base)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), member_order);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const std::size_t m = members_.size();
  order_ = BoolMatrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (eq_leq(members_[i], members_[j])) order_.set(i, j);
    }
  }
  const auto d = index_of(delta(base_));
  const auto t = index_of(nabla(base_));
  if (!d || !t) throw Error(ErrorKind::BadParam, "Con(L) must contain Δ and ∇");
  delta_ix_ = *d;
  nabla_ix_ = *t;
}

std::optional<std::size_t> ConLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), p, member_order);
  if (it == members_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

namespace {

// Indices j with i < j and nothing strictly between.
bool covers_in(const BoolMatrix& order, std::size_t lo, std::size_t hi) {
  if (lo == hi || !order(lo, hi)) return false;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k != lo && k != hi && order(lo, k) && order(k, hi)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> ConLattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (covers_in(order_, delta_ix_, i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> ConLattice::coatoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (covers_in(order_, i, nabla_ix_)) out.push_back(i);
  }
  return out;
}

std::vector<Partition> ConLattice::con01() const {
  std::vector<Partition> out;
  const Element bottom = base_.bottom();
  const Element top = base_.top();
  for (const auto& theta : members_) {
    if (theta.block(bottom).size() == 1 && theta.block(top).size() == 1) {
      out.push_back(theta);
    }
  }
  return out;
}

Partition ConLattice::mu_con01() const {
  // Con₀₁ is a principal ideal of Con(L), so its join is its maximum.
  Partition mu = delta(base_);
  for (const auto& theta : con01()) mu = eq_join(mu, theta);
  return mu;
}

std::vector<Partition> ConLattice::maximal() const {
  std::vector<Partition> out;
  for (std::size_t i : coatoms()) out.push_back(members_[i]);
  return out;
}

std::vector<Partition> ConLattice::prime() const {
  std::vector<Partition> out;
  const std::size_t m = size();
  // meet_ix[i][j] = index of members_[i] ∩ members_[j].
  std::vector<std::size_t> meet_ix(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      auto k = index_of(eq_meet(members_[i], members_[j]));
      meet_ix[i * m + j] = meet_ix[j * m + i] = k.value();
    }
  }
  for (std::size_t t = 0; t < m; ++t) {
    if (t == nabla_ix_) continue;
    bool prime = true;
    for (std::size_t i = 0; i < m && prime; ++i) {
      if (order_(i, t)) continue;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!order_(j, t) && order_(meet_ix[i * m + j], t)) {
          prime = false;
          break;
        }
      }
    }
    if (prime) out.push_back(members_[t]);
  }
  return out;
}

std::vector<Partition> ConLattice::two_class() const {
  std::vector<Partition> out;
  for (const auto& theta : members_) {
    if (theta.block_count() == 2) out.push_back(theta);
  }
  return out;
}

bool ConLattice::is_simple() const noexcept {
  return size() == 2 && delta_ix_ != nabla_ix_;
}

std::optional<Partition> ConLattice::monolith() const {
  const auto a = atoms();
  if (a.size() != 1) return std::nullopt;
  // In a finite lattice a unique atom lies below every non-bottom member.
  return members_[a.front()];
}

Lattice ConLattice::suborder_lattice(std::span<const std::size_t> indices) const {
  std::vector<std::string> labels;
  BoolMatrix leq(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    labels.push_back(render(base_, members_.at(indices[i])));
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (order_(indices[i], indices[j])) leq.set(i, j);
    }
  }
  return Lattice::from_order(std::move(labels), std::move(leq),
                             std::max(indices.size(), kDefaultMaxElements));
}

Lattice ConLattice::as_lattice() const {
  std::vector<std::size_t> all(size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return suborder_lattice(all);
}

ConLattice all_congruences(const Lattice& lattice, const ConOptions& options) {
  check_cap(lattice, options);
  // Every congruence is a join of principal congruences Cg(a, b) with a ≺ b,
  // so closing {Δ} under joins with those generators reaches all of Con(L).
  std::vector<Partition> generators;
  std::unordered_set<Partition, PartitionHash> seen_generators;
  for (const auto& [a, b] : lattice.covers()) {
    Partition p = principal_congruence(lattice, a, b);
    if (seen_generators.insert(p).second) generators.push_back(std::move(p));
  }

  std::vector<Partition> members{delta(lattice)};
  std::unordered_set<Partition, PartitionHash> seen{members.front()};
  for (const auto& g : generators) {
    const std::size_t existing = members.size();
    for (std::size_t i = 0; i < existing; ++i) {
      Partition joined = eq_join(members[i], g);
      if (seen.insert(joined).second) {
        members.push_back(std::move(joined));
        if (members.size() > options.max_members) {
          throw Error(ErrorKind::SizeCapExceeded,
                      "Con(L) has more than " + std::to_string(options.max_members) +
                          " members");
        }
      }
    }
  }
  return ConLattice(lattice, std::move(members));
}

std::vector<Partition> con01(const Lattice& lattice, const ConOptions& options) {
  return all_congruences(lattice, options).con01();
}

Partition mu_con01(const Lattice& lattice, const ConOptions& options) {
  return all_congruences(lattice, options).mu_con01();
}

std::vector<Partition> maximal_congruences(const Lattice& lattice,
                                           const ConOptions& options) {
  return all_congruences(lattice, options).maximal();
}

std::vector<Partition> prime_congruences(const Lattice& lattice,
                                         const ConOptions& options) {
  return all_congruences(lattice, options).prime();
}

std::vector<Partition> two_class_congruences(const Lattice& lattice,
                                             const ConOptions& options) {
  return all_congruences(lattice, options).two_class();
}

bool is_simple(const Lattice& lattice, const ConOptions& options) {
  return all_congruences(lattice, options).is_simple();
}

bool is_subdirectly_irreducible(const Lattice& lattice, const ConOptions& options) {
  return monolith(lattice, options).has_value();
}

std::optional<Partition> monolith(const Lattice& lattice, const ConOptions& options) {
  return all_congruences(lattice, options).monolith();
}

Quotient quotient(const Lattice& lattice, const Partition& theta) {
  if (theta.size() != lattice.size() || !is_congruence(lattice, theta)) {
    throw Error(ErrorKind::NotACongruence, "cannot form L/θ");
  }
  const auto blocks = theta.blocks();
  Quotient out{.lattice = lattice, .projection = std::vector<Element>(lattice.size())};
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    labels.push_back(blocks[b].size() == 1 ? lattice.label(blocks[b].front())
                                           : render_set(lattice, blocks[b]));
    for (Element x : blocks[b]) out.projection[x] = static_cast<Element>(b);
  }
  // X ≤ Y iff x ∨ y ∈ Y for representatives x ∈ X, y ∈ Y.
  BoolMatrix leq(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const Element joined = lattice.join(blocks[i].front(), blocks[j].front());
      if (out.projection[joined] == j) leq.set(i, j);
    }
  }
  out.lattice = Lattice::from_order(std::move(labels), std::move(leq));
  return out;
}

}  // namespace latcon
