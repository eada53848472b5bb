#ifndef GUARD_FUSIONFORGE_CATALOG_H
#define GUARD_FUSIONFORGE_CATALOG_H

#include <string>
#include <vector>

#include "fusionforge/group.hpp"

namespace fusionforge {

// Groups by name:
//   "C<n>"      cyclic of order n
//   "D<2n>"     dihedral of order 2n (n >= 2)
//   "S<n>"      symmetric on n points
//   "A<n>"      alternating on n points
//   "E<p^k>"    elementary abelian of order p^k, written out (e.g. "E8", "E27")
//   "Q8", "Q16" quaternion groups
//   "SD16"      the order-16 group with an order-8 rotation inverted-and-squared by s
//   "SL23"      2x2 determinant-one matrices over the 3-element field, on nonzero vectors
//   "GL23"      all invertible 2x2 matrices over the 3-element field
//   "X x Y"     direct products of any of the above (right associated)
// InvalidData for anything else.
PermGroup catalog_group(std::string const &name, Config const &cfg = Config());

} // namespace fusionforge

#endif // GUARD_FUSIONFORGE_CATALOG_H
