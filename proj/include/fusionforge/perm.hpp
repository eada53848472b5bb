#ifndef GUARD_FUSIONFORGE_PERM_H
#define GUARD_FUSIONFORGE_PERM_H

#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace fusionforge {

using point = std::uint16_t;

// A permutation of {0, ..., n-1}, stored as its image vector.
//
// Composition is function composition: (a * b)[x] == a[b[x]], i.e. b acts first. With points
// acted on from the left this makes g |-> (x |-> g[x]) a left action: (g*h).x == g.(h.x).
class Perm {
public:
  Perm() = default;

  explicit Perm(unsigned degree); // identity

  explicit Perm(std::vector<point> images);

  Perm(std::initializer_list<point> images) : Perm(std::vector<point>(images)) {}

  unsigned degree() const { return static_cast<unsigned>(_images.size()); }

  point operator[](point x) const {
    assert(x < _images.size() && "point within domain");
    return _images[x];
  }

  bool is_identity() const;

  Perm operator*(Perm const &other) const;

  Perm inverse() const;

  unsigned order() const;

  std::vector<point> const &images() const { return _images; }

  auto operator<=>(Perm const &other) const = default;

  // cycle notation, e.g. "(0 1 2)(3 4)"; identity prints as "()"
  std::string cycle_string() const;

private:
  std::vector<point> _images;
};

std::ostream &operator<<(std::ostream &os, Perm const &p);

struct PermHash {
  std::size_t operator()(Perm const &p) const {
    // FNV-1a over the image words
    std::size_t h = 1469598103934665603ull;
    for (point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_PERM_H
