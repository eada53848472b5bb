#include "fusionforge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fusionforge {

Perm::Perm(unsigned degree) : _images(degree) {
  std::iota(_images.begin(), _images.end(), point{0});
}

Perm::Perm(std::vector<point> images) : _images(std::move(images)) {
#ifndef NDEBUG
  std::vector<bool> seen(_images.size(), false);
  for (point x : _images) {
    assert(x < _images.size() && "image within domain");
    assert(!seen[x] && "images distinct");
    seen[x] = true;
  }
#endif
}

bool Perm::is_identity() const {
  for (unsigned x = 0u; x < _images.size(); ++x)
    if (_images[x] != x)
      return false;
  return true;
}

Perm Perm::operator*(Perm const &other) const {
  assert(degree() == other.degree() && "degrees match");

  std::vector<point> res(_images.size());
  for (unsigned x = 0u; x < _images.size(); ++x)
    res[x] = _images[other._images[x]];
  return Perm(std::move(res));
}

Perm Perm::inverse() const {
  std::vector<point> res(_images.size());
  for (unsigned x = 0u; x < _images.size(); ++x)
    res[_images[x]] = static_cast<point>(x);
  return Perm(std::move(res));
}

unsigned Perm::order() const {
  // lcm of cycle lengths
  unsigned res = 1u;
  std::vector<bool> seen(_images.size(), false);
  for (unsigned x = 0u; x < _images.size(); ++x) {
    if (seen[x])
      continue;
    unsigned len = 0u;
    unsigned y = x;
    do {
      seen[y] = true;
      y = _images[y];
      ++len;
    } while (y != x);
    res = std::lcm(res, len);
  }
  return res;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  bool any = false;
  std::vector<bool> seen(_images.size(), false);
  for (unsigned x = 0u; x < _images.size(); ++x) {
    if (seen[x] || _images[x] == x)
      continue;
    any = true;
    os << '(' << x;
    seen[x] = true;
    for (unsigned y = _images[x]; y != x; y = _images[y]) {
      seen[y] = true;
      os << ' ' << y;
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

std::ostream &operator<<(std::ostream &os, Perm const &p) {
  return os << p.cycle_string();
}

} // namespace fusionforge
