#ifndef SIGMAEMBED_SUBGROUP_HPP
#define SIGMAEMBED_SUBGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "group.hpp"

namespace sigmaembed {

using IndexSet = std::vector<uint32_t>;  // sorted element indices in a parent group

inline IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline bool index_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// A subgroup of a fixed parent group, canonically keyed by its sorted
/// element-index set.
class Subgroup {
public:
  Subgroup() = default;

  /// Takes ownership of a set already known to be a subgroup.
  static Subgroup from_sorted_indices(Group parent, IndexSet elems) {
    return Subgroup(std::move(parent), std::move(elems));
  }

  static Subgroup trivial(const Group& parent) {
    return Subgroup(parent, {parent.identity_index()});
  }

  static Subgroup whole(const Group& parent) {
    IndexSet all(parent.order());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subgroup(parent, std::move(all));
  }

  /// Closure of the given element indices within the parent.
  static Subgroup generated(const Group& parent, const IndexSet& gens) {
    std::vector<char> in(parent.order(), 0);
    IndexSet frontier;
    uint32_t id = parent.identity_index();
    in[id] = 1;
    frontier.push_back(id);
    for (uint32_t g : gens) {
      if (!in[g]) {
        in[g] = 1;
        frontier.push_back(g);
      }
    }
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (uint32_t g : gens) {
        uint32_t next = parent.mult(frontier[i], g);
        if (!in[next]) {
          in[next] = 1;
          frontier.push_back(next);
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    return Subgroup(parent, std::move(frontier));
  }

  static Subgroup generated_by_perms(const Group& parent,
                                     const std::vector<Perm>& gens) {
    IndexSet idx;
    for (const Perm& g : gens) idx.push_back(parent.index_of(g));
    return generated(parent, idx);
  }

  const Group& parent() const { return parent_; }
  const IndexSet& indices() const { return elems_; }
  uint64_t order() const { return elems_.size(); }

  bool contains_index(uint32_t i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
  }

  bool contains(const Subgroup& other) const {
    return index_subset(other.elems_, elems_);
  }

  bool is_trivial() const { return elems_.size() == 1; }
  bool is_whole() const { return elems_.size() == parent_.order(); }

  /// The subgroup as a standalone group (same degree as the parent).
  Group as_group() const {
    std::vector<Perm> gens = generating_perms();
    return Group::from_generators(parent_.degree(), gens,
                                  std::max<uint64_t>(order(), 1));
  }

  /// A small generating set, grown greedily in index order.
  std::vector<Perm> generating_perms() const {
    IndexSet gen_idx = generating_indices();
    std::vector<Perm> out;
    for (uint32_t i : gen_idx) out.push_back(parent_.element(i));
    if (out.empty()) out.push_back(Perm::identity(parent_.degree()));
    return out;
  }

  IndexSet generating_indices() const {
    IndexSet gens;
    std::vector<char> in(parent_.order(), 0);
    uint32_t id = parent_.identity_index();
    IndexSet frontier{id};
    in[id] = 1;
    size_t have = 1;
    for (uint32_t cand : elems_) {
      if (in[cand]) continue;
      gens.push_back(cand);
      // extend the closure with the new generator
      for (size_t i = 0; i < frontier.size(); ++i) {
        for (uint32_t g : gens) {
          uint32_t next = parent_.mult(frontier[i], g);
          if (!in[next]) {
            in[next] = 1;
            frontier.push_back(next);
            ++have;
          }
        }
      }
      if (have == elems_.size()) break;
    }
    return gens;
  }

  Subgroup conjugated_by(uint32_t g) const {
    IndexSet out(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) out[i] = parent_.conj(elems_[i], g);
    std::sort(out.begin(), out.end());
    return Subgroup(parent_, std::move(out));
  }

  bool is_normalized_by(uint32_t g) const {
    for (uint32_t e : elems_)
      if (!contains_index(parent_.conj(e, g))) return false;
    return true;
  }

  bool is_normal_in_parent() const {
    for (const Perm& g : parent_.generators())
      if (!is_normalized_by(parent_.index_of(g))) return false;
    return true;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems_.size() != b.elems_.size())
      return a.elems_.size() < b.elems_.size();
    return a.elems_ < b.elems_;
  }

private:
  Subgroup(Group parent, IndexSet elems)
      : parent_(std::move(parent)), elems_(std::move(elems)) {}

  Group parent_;
  IndexSet elems_;
};

inline Subgroup join(const Group& parent, const std::vector<Subgroup>& parts) {
  IndexSet gens;
  for (const Subgroup& s : parts) {
    if (!s.parent().same_data(parent))
      throw ValidationError("join over mixed parents");
    gens.insert(gens.end(), s.indices().begin(), s.indices().end());
  }
  return Subgroup::generated(parent, gens);
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  return join(a.parent(), {a, b});
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  return Subgroup::from_sorted_indices(a.parent(), intersect(a.indices(), b.indices()));
}

inline Subgroup normal_closure(const Group& parent, const Subgroup& h) {
  IndexSet gens = h.indices();
  std::vector<char> in(parent.order(), 0);
  for (uint32_t e : gens) in[e] = 1;
  std::vector<uint32_t> gen_idx;
  for (const Perm& g : parent.generators()) gen_idx.push_back(parent.index_of(g));
  bool changed = true;
  while (changed) {
    changed = false;
    IndexSet add;
    for (uint32_t e : gens)
      for (uint32_t g : gen_idx) {
        uint32_t c = parent.conj(e, g);
        if (!in[c]) {
          in[c] = 1;
          add.push_back(c);
          changed = true;
        }
      }
    gens.insert(gens.end(), add.begin(), add.end());
    if (changed) {
      Subgroup s = Subgroup::generated(parent, gens);
      gens = s.indices();
      for (auto& f : in) f = 0;
      for (uint32_t e : gens) in[e] = 1;
    }
  }
  std::sort(gens.begin(), gens.end());
  return Subgroup::from_sorted_indices(parent, std::move(gens));
}

inline Subgroup core(const Group& parent, const Subgroup& h) {
  // Intersection of all parent-conjugates of h.
  IndexSet acc = h.indices();
  std::vector<Subgroup> seen{h};
  for (size_t i = 0; i < seen.size(); ++i) {
    for (const Perm& g : parent.generators()) {
      Subgroup c = seen[i].conjugated_by(parent.index_of(g));
      if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
        acc = intersect(acc, c.indices());
        seen.push_back(std::move(c));
      }
    }
  }
  return Subgroup::from_sorted_indices(parent, std::move(acc));
}

inline Subgroup normalizer(const Group& parent, const Subgroup& h) {
  IndexSet out;
  for (uint32_t g = 0; g < parent.order(); ++g)
    if (h.is_normalized_by(g)) out.push_back(g);
  return Subgroup::from_sorted_indices(parent, std::move(out));
}

inline Subgroup centralizer(const Group& parent, const Subgroup& h) {
  IndexSet out;
  for (uint32_t g = 0; g < parent.order(); ++g) {
    bool central = true;
    for (uint32_t e : h.indices())
      if (parent.conj(e, g) != e) {
        central = false;
        break;
      }
    if (central) out.push_back(g);
  }
  return Subgroup::from_sorted_indices(parent, std::move(out));
}

inline Subgroup center(const Group& parent) {
  return centralizer(parent, Subgroup::whole(parent));
}

/// The set product HK as element indices (not necessarily a subgroup).
inline IndexSet product_set(const Subgroup& h, const Subgroup& k) {
  const Group& parent = h.parent();
  std::vector<char> in(parent.order(), 0);
  IndexSet out;
  for (uint32_t a : h.indices())
    for (uint32_t b : k.indices()) {
      uint32_t p = parent.mult(a, b);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff HK = KH (equivalently HK is a subgroup).
inline bool product_permutes(const Group& parent, const Subgroup& h,
                             const Subgroup& k) {
  (void)parent;
  uint64_t expected = h.order() * k.order() / intersect(h, k).order();
  if (parent.order() % expected != 0) return false;  // |HK| would not divide |G|
  return product_set(h, k) == product_set(k, h);
}

/// Group epimorphism induced by the right-coset action of parent on N.
class Epimorphism {
public:
  Epimorphism(Group parent, Subgroup kernel_sub, Group quotient,
              std::vector<uint32_t> image_index)
      : parent_(std::move(parent)),
        kernel_(std::move(kernel_sub)),
        quotient_(std::move(quotient)),
        image_index_(std::move(image_index)) {}

  const Group& parent() const { return parent_; }
  const Group& quotient() const { return quotient_; }
  const Subgroup& kernel() const { return kernel_; }

  uint32_t image_index_of(uint32_t parent_elem_idx) const {
    return image_index_[parent_elem_idx];
  }

  Perm image(const Perm& g) const {
    return quotient_.element(image_index_[parent_.index_of(g)]);
  }

  /// Image of a subgroup of the parent as a subgroup of the quotient.
  Subgroup image_subgroup(const Subgroup& h) const {
    IndexSet out;
    std::vector<char> in(quotient_.order(), 0);
    for (uint32_t e : h.indices()) {
      uint32_t q = image_index_[e];
      if (!in[q]) {
        in[q] = 1;
        out.push_back(q);
      }
    }
    std::sort(out.begin(), out.end());
    return Subgroup::from_sorted_indices(quotient_, std::move(out));
  }

  /// Preimage of a subgroup of the quotient.
  Subgroup preimage_subgroup(const Subgroup& q) const {
    IndexSet out;
    for (uint32_t e = 0; e < parent_.order(); ++e)
      if (q.contains_index(image_index_[e])) out.push_back(e);
    return Subgroup::from_sorted_indices(parent_, std::move(out));
  }

private:
  Group parent_;
  Subgroup kernel_;
  Group quotient_;
  std::vector<uint32_t> image_index_;
};

/// Permutation action of parent on the right cosets of a normal subgroup N,
/// together with the quotient map. Faithful for parent/N.
inline Epimorphism quotient(const Group& parent, const Subgroup& n) {
  if (!n.is_normal_in_parent())
    throw ValidationError("quotient by a non-normal subgroup");
  const uint64_t ord = parent.order();
  const uint32_t index = static_cast<uint32_t>(ord / n.order());

  // coset id of each element: discovered in element-index order
  std::vector<uint32_t> coset_of(ord, UINT32_MAX);
  std::vector<uint32_t> coset_rep;
  for (uint32_t e = 0; e < ord; ++e) {
    if (coset_of[e] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(coset_rep.size());
    coset_rep.push_back(e);
    for (uint32_t x : n.indices()) coset_of[parent.mult(x, e)] = id;
  }

  // the action of g maps coset c -> coset of rep(c)*g
  auto action = [&](uint32_t g) {
    std::vector<uint32_t> images(index);
    for (uint32_t c = 0; c < index; ++c)
      images[c] = coset_of[parent.mult(coset_rep[c], g)];
    return Perm::from_images(std::move(images));
  };

  std::vector<Perm> qgens;
  for (const Perm& g : parent.generators()) qgens.push_back(action(parent.index_of(g)));
  Group q = Group::from_generators(index, qgens, index);

  std::vector<uint32_t> image_index(ord);
  for (uint32_t e = 0; e < ord; ++e) image_index[e] = q.index_of(action(e));
  return Epimorphism(parent, n, q, std::move(image_index));
}

}  // namespace sigmaembed

#endif
