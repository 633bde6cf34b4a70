#ifndef SIGMAEMBED_BSGS_HPP
#define SIGMAEMBED_BSGS_HPP

#include <cstdint>
#include <vector>

#include "perm.hpp"

namespace sigmaembed {

/// Base and strong generating set via a deterministic Schreier-Sims.
/// Each level's base point is the smallest point moved by the generator that
/// created the level; transversals are grown by breadth-first search in
/// insertion order, so the certificate is reproducible. A strong generator
/// stored at level j fixes the base points of all earlier levels, so the
/// generating set of level i is the union of the generators at levels >= i.
class Bsgs {
public:
  Bsgs() = default;

  explicit Bsgs(unsigned degree, const std::vector<Perm>& gens)
      : degree_(degree) {
    for (const Perm& g : gens) {
      size_t stuck = strip_level(g);
      if (stuck == SIZE_MAX) continue;  // identity or already in the chain
      place(stuck, strip_residue(g));
      verify_from(stuck);
    }
  }

  uint64_t order() const {
    uint64_t n = 1;
    for (const Level& lvl : levels_) n *= lvl.orbit.size();
    return n;
  }

  bool contains(const Perm& g) const {
    Perm h = g;
    for (const Level& lvl : levels_) {
      const Perm* rep = lvl.transversal_to(h[lvl.base_point]);
      if (rep == nullptr) return false;
      h = h * rep->inverse();
    }
    return h.is_identity();
  }

  std::vector<uint32_t> base() const {
    std::vector<uint32_t> b;
    for (const Level& lvl : levels_) b.push_back(lvl.base_point);
    return b;
  }

  std::vector<size_t> basic_orbit_lengths() const {
    std::vector<size_t> v;
    for (const Level& lvl : levels_) v.push_back(lvl.orbit.size());
    return v;
  }

private:
  struct Level {
    uint32_t base_point = 0;
    std::vector<Perm> gens;                  // strong generators first stuck here
    std::vector<uint32_t> orbit;             // in BFS discovery order
    std::vector<int32_t> transversal_index;  // point -> index into reps, -1 if absent
    std::vector<Perm> reps;                  // reps[i] maps base_point to orbit[i]

    const Perm* transversal_to(uint32_t point) const {
      if (point >= transversal_index.size() || transversal_index[point] < 0)
        return nullptr;
      return &reps[transversal_index[point]];
    }
  };

  unsigned degree_ = 0;
  std::vector<Level> levels_;

  // Level where g gets stuck when sifted from the top; SIZE_MAX if it strips
  // to the identity.
  size_t strip_level(const Perm& g) const {
    Perm h = g;
    for (size_t i = 0; i < levels_.size(); ++i) {
      const Perm* rep = levels_[i].transversal_to(h[levels_[i].base_point]);
      if (rep == nullptr) return i;
      h = h * rep->inverse();
    }
    return h.is_identity() ? SIZE_MAX : levels_.size();
  }

  Perm strip_residue(const Perm& g) const {
    Perm h = g;
    for (const Level& lvl : levels_) {
      const Perm* rep = lvl.transversal_to(h[lvl.base_point]);
      if (rep == nullptr) break;
      h = h * rep->inverse();
    }
    return h;
  }

  // Stores h as a strong generator at the given level (creating the level if
  // needed). h must fix the base points of all earlier levels.
  void place(size_t level, Perm h) {
    if (level == levels_.size()) {
      Level lvl;
      uint32_t pt = 0;
      while (h[pt] == pt) ++pt;
      lvl.base_point = pt;
      levels_.push_back(std::move(lvl));
    }
    levels_[level].gens.push_back(std::move(h));
  }

  // Generators acting at level i: everything stored at levels >= i.
  std::vector<Perm> generating_set(size_t level) const {
    std::vector<Perm> out;
    for (size_t k = level; k < levels_.size(); ++k)
      out.insert(out.end(), levels_[k].gens.begin(), levels_[k].gens.end());
    return out;
  }

  void recompute_orbit(size_t level, const std::vector<Perm>& gens) {
    Level& lvl = levels_[level];
    lvl.orbit.assign(1, lvl.base_point);
    lvl.transversal_index.assign(degree_, -1);
    lvl.transversal_index[lvl.base_point] = 0;
    lvl.reps.assign(1, Perm::identity(degree_));
    for (size_t i = 0; i < lvl.orbit.size(); ++i)
      for (const Perm& g : gens) {
        uint32_t img = g[lvl.orbit[i]];
        if (lvl.transversal_index[img] < 0) {
          lvl.transversal_index[img] = static_cast<int32_t>(lvl.orbit.size());
          lvl.orbit.push_back(img);
          lvl.reps.push_back(lvl.reps[i] * g);
        }
      }
  }

  // Bottom-up verification: levels deeper than `start` are assumed complete.
  // Verifies `start`, then start-1, ..., 0; whenever a Schreier generator
  // fails to sift, the residue is stored where it got stuck and verification
  // resumes from that level.
  void verify_from(size_t start) {
    if (levels_.empty()) return;
    size_t i = std::min(start, levels_.size() - 1);
    for (;;) {
      std::vector<Perm> gens = generating_set(i);
      recompute_orbit(i, gens);
      const Level& lvl = levels_[i];
      bool clean = true;
      for (size_t u = 0; u < lvl.orbit.size() && clean; ++u)
        for (const Perm& g : gens) {
          Perm schreier = lvl.reps[u] * g *
                          lvl.transversal_to(g[lvl.orbit[u]])->inverse();
          // sift through the levels below i
          Perm h = std::move(schreier);
          size_t j = i + 1;
          for (; j < levels_.size(); ++j) {
            const Perm* rep = levels_[j].transversal_to(h[levels_[j].base_point]);
            if (rep == nullptr) break;
            h = h * rep->inverse();
          }
          if (j < levels_.size() || !h.is_identity()) {
            place(j, std::move(h));
            i = j;
            clean = false;
            break;
          }
        }
      if (!clean) continue;
      if (i == 0) return;
      --i;
    }
  }
};

}  // namespace sigmaembed

#endif
