#pragma once

#include <cstdint>
#include <vector>

#include "qgv/counting.hpp"
#include "qgv/symplectic.hpp"

namespace qgv {

// Exhaustive census of symplectic self-orthogonal [2n, k] codes, used as
// ground truth for the counting formulas.

inline constexpr std::uint64_t kDefaultCensusCap = 10'000'000;

struct CensusOptions {
  std::uint64_t cap = kDefaultCensusCap;
  /// Keep the codes themselves (sorted by canonical generator matrix).
  bool keep_codes = false;
  /// Vectors for which containing / dual-containing counts are collected.
  std::vector<SympVector> fixed_vectors;
};

struct VectorCounts {
  SympVector u;
  BigInt containing;       // codes C with u in C
  BigInt dual_containing;  // codes C with u in C^{perp_S}, i.e. C inside u^{perp_S}
};

struct CensusReport {
  std::uint64_t q;
  std::size_t n;
  std::size_t k;
  BigInt total;
  std::vector<VectorCounts> per_vector;
  std::vector<SympCode> codes;
};

/// Depth-first extension from every isotropic line through one-dimensional
/// subspaces of C^{perp_S}/C, deduplicated by canonical form. Throws
/// CapExceeded when the predicted census (any level) exceeds options.cap,
/// InvalidArgument unless 1 <= k <= n or a fixed vector is zero.
CensusReport enumerate_so_codes(const Field& f, std::size_t n, std::size_t k,
                                const CensusOptions& options = {});

std::vector<SympCode> so_code_list(const Field& f, std::size_t n, std::size_t k,
                                   std::uint64_t cap = kDefaultCensusCap);

BigInt oracle_count_containing(const Field& f, std::size_t n, std::size_t k, const SympVector& u,
                               std::uint64_t cap = kDefaultCensusCap);
BigInt oracle_count_dual_containing(const Field& f, std::size_t n, std::size_t k, const SympVector& u,
                                    std::uint64_t cap = kDefaultCensusCap);

/// Equivalent counts over an existing list of codes.
VectorCounts count_for_vector(std::span<const SympCode> codes, const SympVector& u);

/// All vectors of F_q^{2n} whose first nonzero coordinate is 1.
std::vector<SympVector> projective_points(const Field& f, std::size_t n);

}  // namespace qgv
