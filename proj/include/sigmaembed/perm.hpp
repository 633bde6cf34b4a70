#ifndef SIGMAEMBED_PERM_HPP
#define SIGMAEMBED_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigmaembed {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A permutation of {0..degree-1}, stored as its image array.
class Perm {
public:
  Perm() = default;

  static Perm identity(unsigned degree) {
    Perm p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0u);
    return p;
  }

  static Perm from_images(std::vector<uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (uint32_t v : images) {
      if (v >= images.size() || seen[v])
        throw ValidationError("image array is not a bijection");
      seen[v] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  /// Parses cycle notation with zero-based points, e.g. "(0 1 2)(3 4)".
  /// "()" or an empty string is the identity.
  static Perm from_cycles(unsigned degree, const std::string& text) {
    std::vector<uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() &&
             (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
        ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(')
        throw ValidationError("expected '(' in cycle string: " + text);
      ++i;
      std::vector<uint32_t> cycle;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw ValidationError("expected point in cycle string: " + text);
        uint32_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = 10 * v + static_cast<uint32_t>(text[i++] - '0');
        if (v >= degree)
          throw ValidationError("point exceeds degree in cycle string: " + text);
        cycle.push_back(v);
        skip_ws();
      }
      if (i >= text.size())
        throw ValidationError("unterminated cycle in: " + text);
      ++i;  // ')'
      for (size_t k = 0; k < cycle.size(); ++k) {
        uint32_t from = cycle[k];
        uint32_t to = cycle[(k + 1) % cycle.size()];
        if (images[from] != from)
          throw ValidationError("point repeated across cycles in: " + text);
        images[from] = to;
      }
      skip_ws();
    }
    return from_images(std::move(images));
  }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  uint32_t operator[](uint32_t point) const { return images_[point]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const {
    for (uint32_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// (p * q)[x] = q[p[x]]: apply p first, then q.
  friend Perm operator*(const Perm& p, const Perm& q) {
    Perm r;
    r.images_.resize(p.images_.size());
    for (size_t i = 0; i < p.images_.size(); ++i)
      r.images_[i] = q.images_[p.images_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (uint32_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = i;
    return r;
  }

  Perm conjugate_by(const Perm& g) const {  // g^-1 * this * g
    return g.inverse() * (*this * g);
  }

  unsigned order() const {
    Perm p = *this;
    unsigned n = 1;
    while (!p.is_identity()) {
      p = p * *this;
      ++n;
    }
    return n;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

  std::string to_cycles() const {
    std::ostringstream out;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (uint32_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      any = true;
      out << '(';
      uint32_t j = i;
      bool first = true;
      do {
        if (!first) out << ' ';
        out << j;
        first = false;
        seen[j] = true;
        j = images_[j];
      } while (j != i);
      out << ')';
    }
    if (!any) out << "()";
    return out.str();
  }

private:
  std::vector<uint32_t> images_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace sigmaembed

#endif
