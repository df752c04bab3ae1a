#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qgv/counting.hpp"
#include "qgv/symplectic.hpp"

namespace qgv {

/// 64-bit multiply-xor-shift avalanche (the splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

/// Seed for trial `trial` of a run seeded with `seed`; trials can run in any
/// order or concurrently and still draw the same streams.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Deterministic random source. Bounded draws use rejection on raw
/// mt19937_64 output, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Self-orthogonal [2n, k] code built from the zero code by k extension
/// steps, each adding a uniform vector of C^{perp_S} \ C. k = 0 yields the
/// zero code; k > n throws InvalidArgument.
SympCode random_so_code(const Field& f, std::size_t n, std::size_t k, Rng& rng);

enum class DistanceMode { primal, dual };
enum class Strategy { random, greedy };

const char* to_string(DistanceMode m);
const char* to_string(Strategy s);

struct SearchConfig {
  std::size_t n;
  std::size_t k;
  std::size_t d;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  DistanceMode mode = DistanceMode::dual;
  Strategy strategy = Strategy::random;
  unsigned threads = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Candidate extensions scored per greedy step.
  std::size_t candidates = 8;
  /// Low-weight vectors examined per greedy score.
  std::uint64_t score_budget = std::uint64_t{1} << 16;
};

struct SearchOutcome {
  std::optional<SympCode> found;
  std::optional<std::size_t> certified_distance;
  std::uint64_t trials_used;
  BoundVerdict verdict_context;
};

/// Repeats randomized constructions until the selected distance (of C in
/// primal mode, of C^{perp_S} in dual mode) reaches config.d. Exhausting the
/// trials is reported through an absent `found`. Throws Infeasible when the
/// measured code cannot reach d by the symplectic Singleton bound, CapExceeded
/// when its codewords cannot be enumerated within config.cap, and
/// InvalidArgument for out-of-range parameters. The outcome depends only on
/// the config, never on config.threads.
SearchOutcome search_witness(const Field& f, const SearchConfig& config);

struct Certificate {
  bool ok;
  bool self_orthogonal;
  std::size_t distance;
  /// A codeword of the measured code with weight `distance`.
  SympVector witness;
  std::string text;
};

/// Recomputes self-orthogonality and the selected minimum distance from
/// scratch, without the incremental traversal used by min_symp_weight.
/// Throws InvalidArgument when the measured code is zero and CapExceeded
/// above the cap.
Certificate certify(const SympCode& code, std::size_t d, DistanceMode mode,
                    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qgv
