#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftd/group.h"

namespace ftd {

class DesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DesignParams {
  std::uint64_t v = 0, k = 0, lambda = 0, r = 0, b = 0;
  std::uint32_t p = 0, m = 0, f = 0, t = 0;

  // v = p^2m, k = p^m, lambda | k, r = lambda (p^m + 1), b = v r / k, m - t <= f <= m.
  bool consistent() const;
  static DesignParams expected(std::uint32_t p, std::uint32_t m, std::uint64_t lambda);
};

// A translation-invariant design on V: the blocks are all translates of the
// blocks through 0.
struct Design {
  PointSpace space;
  std::uint64_t k = 0;
  Block base_block;
  std::string group_name;
  std::vector<Block> blocks0;  // sorted list of sorted blocks through 0

  std::uint64_t v() const { return space.size(); }
  std::uint64_t r() const { return blocks0.size(); }
  std::uint64_t b() const { return v() * r() / k; }
  // Every distinct block; throws above the limit on b * k.
  std::vector<Block> all_blocks(std::uint64_t limit = std::uint64_t{1} << 26) const;
};

// Blocks of base^G for G containing T: G_0 is generated by the linear parts.
Design build_design(const Block& base, const GenGroup& g, std::size_t cap = kOrbitCap);
// The linear group generated by the linear parts of g's generators.
GenGroup linear_part(const GenGroup& g);

enum class VerifyMode { kBruteforce, kOrbitwise };

struct LambdaReport {
  bool ok = false;
  std::uint64_t lambda = 0;
  // Witness of nonuniformity: two pairs {x,y} with different counts.
  std::optional<std::pair<Point, Point>> pair_a, pair_b;
  std::uint64_t count_a = 0, count_b = 0;
  std::string message;
};

// Orbitwise mode uses one representative per G0-orbit on V*.
LambdaReport verify_2design(const Design& d, VerifyMode mode, const GenGroup* g0 = nullptr,
                            unsigned threads = 1);
// Pair counts through 0 for each point: lambda(0, y).
std::vector<std::uint64_t> pair_counts_through_zero(const Design& d);

struct FlagReport {
  bool flag_transitive = false;
  std::uint64_t orbit = 0;    // size of the flag orbit, or of B^G0 for the slice criterion
  std::uint64_t expected = 0;  // b k, or r
  bool literal = false;        // flag orbit computed directly
};
// Literal flag orbit when b k <= literal_limit, else G0-transitivity on the blocks through 0.
FlagReport check_flag_transitive(const Design& d, const GenGroup& g,
                                 std::uint64_t literal_limit = std::uint64_t{1} << 20);

struct TacticalRow {
  std::uint64_t orbit_size = 0, meet = 0;
  bool ratio_ok = false;
};
struct TacticalReport {
  std::vector<TacticalRow> rows;  // ordered by least orbit element
  std::uint64_t ratio = 0;        // p^m + 1
  bool ok = false;
};
TacticalReport tactical_counts(const Design& d, const GenGroup& g0, const Block& block);
TacticalReport tactical_counts(const Design& d, const GenGroup& g0);

struct TranslationStabilizer {
  std::uint64_t order = 0;
  std::uint32_t t = 0, f = 0, m = 0;
  bool bound_ok = false;
};
TranslationStabilizer translation_block_stabilizer(const Design& d, const Block& block, std::uint64_t lambda);

struct SubspaceReport {
  bool subspaces = false;
  bool translates = false;       // every block is a translate of a block through 0
  std::uint32_t prime_dim = 0;   // dimension over GF(p)
  std::uint32_t field_degree = 0;  // largest d dividing h with GF(p^d)-linear blocks (0 if not subspaces)
};
// field and n give the GF(q)-structure used for the linearity degree.
SubspaceReport blocks_are_subspaces(const Design& d, const FieldPtr& field, std::size_t n);

bool is_gf_p_subspace(const PointSpace& space, const Block& b);

// r three ways: |blocks through 0|, lambda (p^m + 1), b k / v.
struct ReplicationCheck {
  std::uint64_t through_zero = 0, from_lambda = 0, from_b = 0;
  bool ok = false;
};
ReplicationCheck replication_three_ways(const Design& d, std::uint64_t lambda);

nlohmann::json design_to_json(const Design& d, std::optional<std::uint64_t> lambda,
                              std::uint64_t block_limit = std::uint64_t{1} << 16);
Design design_from_json(const nlohmann::json& j);

// Subgroup search for base blocks: see block_search.cc.
struct SearchHit {
  Block base;
  Design design;
  std::uint64_t lambda = 0;
};
struct SearchStats {
  std::uint64_t subspace_candidates = 0, invariant_candidates = 0, subgroups = 0, hits = 0;
};
std::vector<SearchHit> base_block_search(const GenGroup& g0, std::uint64_t k, std::uint64_t lambda,
                                         SearchStats* stats = nullptr);

// Partitions the blocks through 0 into spreads of the given size, if possible.
std::optional<std::vector<std::vector<std::size_t>>> spread_decomposition(const Design& d, std::size_t parts);

}  // namespace ftd
