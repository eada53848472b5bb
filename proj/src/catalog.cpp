#include "fusionforge/catalog.hpp"

#include <cctype>
#include <cstdlib>

namespace fusionforge {

namespace {

bool all_digits(std::string const &s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

PermGroup quaternion_16(Config const &cfg) {
  // Normal forms a^i b^j with i mod 8, j mod 2, b a = a^-1 b, b b = a^4.
  // Point 2i + j; generators act by left multiplication.
  std::vector<el> a(16), b(16);
  for (el i = 0; i < 8; ++i)
    for (el j = 0; j < 2; ++j) {
      el x = static_cast<el>(2 * i + j);
      a[x] = static_cast<el>(2 * ((i + 1) % 8) + j);
      if (j == 0)
        b[x] = static_cast<el>(2 * ((8 - i) % 8) + 1);
      else
        b[x] = static_cast<el>(2 * ((12 - i) % 8));
    }
  return PermGroup::from_generators(16, {Perm(a), Perm(b)}, cfg);
}

PermGroup semidihedral_16(Config const &cfg) {
  // x -> x + 1 and x -> 3x on the integers mod 8.
  std::vector<el> r(8), s(8);
  for (el x = 0; x < 8; ++x) {
    r[x] = static_cast<el>((x + 1) % 8);
    s[x] = static_cast<el>((3 * x) % 8);
  }
  return PermGroup::from_generators(8, {Perm(r), Perm(s)}, cfg);
}

// Index nonzero vectors (a, b) over the 3-element field as 3a + b - 1.
el vec_index(int a, int b) { return static_cast<el>(3 * a + b - 1); }

Perm matrix_perm(int m00, int m01, int m10, int m11) {
  std::vector<el> img(8);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0)
        continue;
      int a2 = (m00 * a + m01 * b) % 3;
      int b2 = (m10 * a + m11 * b) % 3;
      img[vec_index(a, b)] = vec_index(a2, b2);
    }
  return Perm(img);
}

PermGroup special_linear_23(Config const &cfg) {
  return PermGroup::from_generators(
      8, {matrix_perm(1, 1, 0, 1), matrix_perm(0, 2, 1, 0)}, cfg);
}

PermGroup general_linear_23(Config const &cfg) {
  return PermGroup::from_generators(
      8,
      {matrix_perm(1, 1, 0, 1), matrix_perm(0, 2, 1, 0),
       matrix_perm(1, 0, 0, 2)},
      cfg);
}

PermGroup elementary_abelian(unsigned n) {
  unsigned p = 0;
  for (unsigned d = 2; d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0 || !is_prime(p) || !is_p_power(n, p))
    throw InvalidData("elementary abelian order must be a prime power");
  PermGroup cur = PermGroup::cyclic(p);
  for (unsigned m = n / p; m > 1; m /= p)
    cur = direct_product(cur, PermGroup::cyclic(p)).group;
  return cur;
}

} // namespace

PermGroup catalog_group(std::string const &name, Config const &cfg) {
  // Strip outer whitespace, then split on the lowest-level " x ".
  std::size_t b = name.find_first_not_of(" \t");
  std::size_t e = name.find_last_not_of(" \t");
  if (b == std::string::npos)
    throw InvalidData("empty group name");
  std::string s = name.substr(b, e - b + 1);

  std::size_t cut = s.find(" x ");
  if (cut != std::string::npos) {
    PermGroup left = catalog_group(s.substr(0, cut), cfg);
    PermGroup right = catalog_group(s.substr(cut + 3), cfg);
    return direct_product(left, right).group;
  }

  if (s == "Q8") {
    return PermGroup::from_generators(
        8,
        {Perm({2, 3, 1, 0, 6, 7, 5, 4}), Perm({4, 5, 7, 6, 1, 0, 2, 3})},
        cfg);
  }
  if (s == "Q16")
    return quaternion_16(cfg);
  if (s == "SD16")
    return semidihedral_16(cfg);
  if (s == "SL23")
    return special_linear_23(cfg);
  if (s == "GL23")
    return general_linear_23(cfg);

  if (s.size() >= 2 && all_digits(s.substr(1))) {
    unsigned n = static_cast<unsigned>(std::strtoul(s.c_str() + 1, nullptr, 10));
    switch (s[0]) {
    case 'C':
      return PermGroup::cyclic(n);
    case 'D':
      if (n % 2 != 0 || n < 4)
        throw InvalidData("dihedral name must be D<2n> with n >= 2: " + s);
      return PermGroup::dihedral(n);
    case 'S':
      return PermGroup::symmetric(n);
    case 'A':
      return PermGroup::alternating(n);
    case 'E':
      return elementary_abelian(n);
    default:
      break;
    }
  }
  throw InvalidData("unknown group name: " + name);
}

} // namespace fusionforge
