#ifndef OPRADIUS_ENSEMBLES_HPP
#define OPRADIUS_ENSEMBLES_HPP

#include "opradius/types.hpp"

#include <cstdint>
#include <string>

namespace opradius {

// Seeded generator description. Kinds:
//   ginibre          i.i.d. complex Gaussian entries (re, im standard normal), times scale
//   hermitian        (G + G^*)/2 for a ginibre draw G
//   psd              G^* G
//   unitary          modified Gram-Schmidt orthonormalization of a ginibre draw
//   diagonal         real Gaussian diagonal, times scale
//   nilpotent_jordan Jordan block with zero diagonal, superdiagonal = scale
//   tuple[:elem]     tuple of `length` draws of the element kind (default ginibre)
struct EnsembleSpec {
  std::string kind = "ginibre";
  int dim = 2;
  int length = 1;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

ComplexMatrix draw_matrix(const EnsembleSpec& spec);

// Element i of the tuple uses the derived seed child_seed(spec.seed, i).
OperatorTuple draw_tuple(const EnsembleSpec& spec);

// Complex Gaussian draw normalized to unit norm.
ComplexVector draw_unit_vector(int dim, std::uint64_t seed);

}  // namespace opradius

#endif
