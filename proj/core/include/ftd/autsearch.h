#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftd/group.h"

namespace ftd {

struct StabilizerResult {
  std::uint64_t order = 0;          // product of the basic orbit lengths
  std::vector<Matrix> generators;   // GF(p) matrices, x -> xA
  std::vector<std::uint64_t> orbit_lengths;
  std::uint64_t nodes = 0, prunes = 0;
  bool generators_verified = false;  // every generator maps the block set onto itself
  bool certified = false;            // element enumeration reproduced the order
  std::uint64_t enumerated_order = 0;
};

struct AutSearchOptions {
  std::uint64_t seed = 0;  // nonzero shuffles the candidate order
  std::size_t enumeration_cap = kElementCap;
};

// Subgroup of GL_n(p) mapping the set of blocks through 0 onto itself. The
// search runs down the chain of pointwise stabilizers of e_1, ..., e_n and finds
// one coset representative per basic orbit point.
StabilizerResult linear_blockset_stabilizer(const std::vector<Block>& blocks0, std::uint32_t p, std::uint32_t n,
                                            const AutSearchOptions& opts = {});

// Does x -> xA (GF(p) matrix) map every block of the set to a block of the set?
bool stabilizes_blockset(const std::vector<Block>& blocks0, const PointSpace& space, const PrimeAffine& a);

GenGroup group_from_prime_matrices(std::string name, std::uint32_t p, const std::vector<Matrix>& gens,
                                   std::optional<std::uint64_t> order);

}  // namespace ftd
