#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indres/permutation.hpp"

namespace indres {

// Permutation generators of a named group.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
};

GroupSpec symmetric_group(int n);
GroupSpec alternating_group(int n);
GroupSpec cyclic_group(int n);
GroupSpec dihedral_group(int n);  // order 2n on n points
GroupSpec quaternion_group();     // regular action on 8 points
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);
GroupSpec sl2(int q);             // q prime, on the q^2 - 1 nonzero vectors
GroupSpec sl3_3();                // on the 26 nonzero vectors of F_3^3
GroupSpec su3_3();                // on the 28 isotropic points over F_9
GroupSpec mathieu11();
GroupSpec mathieu12();
// Extraspecial 5^{1+2} of exponent 5 acting on itself by right translation,
// extended by the quaternion group acting through SL_2(5) on L/Z(L).
GroupSpec heisenberg_q8();
// Generators of the quaternion subgroup of heisenberg_q8().
std::vector<Permutation> heisenberg_q8_complement();

// Lookup by name: S<n>, A<n>, C<n>, D<2n>, Q8, SL2(<q>), SL3(3), PSU3(3),
// M11, M12, 5^(1+2):Q8, SL2(3), D8xC3, C2xA4, S3xS3, C3xS3. Throws
// DomainError for unknown names.
GroupSpec named_group(const std::string& name);
std::vector<std::string> corpus_names();

}  // namespace indres
