#ifndef QSET_CATALOG_HPP_
#define QSET_CATALOG_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace qset {

// Spec strings of the built-in test catalog with group order <= max_order:
// cyclic, dihedral and dicyclic families, small symmetric groups, the
// alternating group of degree 4 as a permutation spec, and a fixed list of
// abelian and non-abelian direct products. Sorted by (order, spec).
std::vector<std::string> catalog_specs(std::size_t max_order);

}  // namespace qset

#endif  // QSET_CATALOG_HPP_
