#include "qgv/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "qgv/code_io.hpp"
#include "qgv/errors.hpp"

namespace qgv {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed ^ mix64(trial + 0x9e3779b97f4a7c15ull));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

const char* to_string(DistanceMode m) { return m == DistanceMode::primal ? "primal" : "dual"; }
const char* to_string(Strategy s) { return s == Strategy::random ? "random" : "greedy"; }

namespace {

// Uniform element of C^{perp_S} \ C, given the RREF basis of C^{perp_S}.
std::vector<Element> draw_extension(const SympCode& code, const SympCode& dual, Rng& rng) {
  const Field& f = code.field();
  std::vector<Element> v(2 * code.n());
  while (true) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t r = 0; r < dual.k(); ++r) {
      axpy(v, static_cast<Element>(rng.below(f.q())), dual.generators().row(r), f);
    }
    if (!code.contains(v)) return v;
  }
}

SympCode extend(const SympCode& code, std::span<const Element> v) {
  Matrix rows = code.generators();
  rows.append_row(v);
  return code_from_rows(code.field(), code.n(), rows);
}

// Visits nonzero vectors of weight <= max_weight in support-lexicographic
// order until visit returns false or `budget` vectors were seen.
template <typename Visit>
void for_each_low_weight(const Field& f, std::size_t n, std::size_t max_weight, std::uint64_t budget,
                         Visit&& visit) {
  const std::uint32_t pairs = f.q() * f.q() - 1;  // nonzero (a_i, b_i) encoded as 1..q^2-1
  std::uint64_t seen = 0;
  std::vector<Element> v(2 * n, 0);
  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
      std::vector<std::uint32_t> label(w, 1);
      while (true) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t i = 0; i < w; ++i) {
          v[support[i]] = label[i] % f.q();
          v[n + support[i]] = label[i] / f.q();
        }
        if (!visit(std::as_const(v)) || ++seen >= budget) return;
        std::size_t j = w;
        while (j > 0 && label[j - 1] == pairs) label[--j] = 1;
        if (j == 0) break;
        ++label[j - 1];
      }
      // next combination
      std::size_t i = w;
      while (i > 0 && support[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (std::size_t t = i; t < w; ++t) support[t] = support[t - 1] + 1;
    }
  }
}

// Number of low-weight vectors that would keep the measured distance below d.
std::uint64_t greedy_score(const SympCode& code, const SearchConfig& cfg) {
  if (cfg.d <= 1) return 0;
  const Field& f = code.field();
  std::uint64_t bad = 0;
  for_each_low_weight(f, code.n(), cfg.d - 1, cfg.score_budget, [&](const std::vector<Element>& v) {
    bool hit;
    if (cfg.mode == DistanceMode::primal) {
      hit = code.contains(v);
    } else {
      hit = true;
      for (std::size_t r = 0; r < code.k() && hit; ++r) hit = symp_inner(f, v, code.generators().row(r)) == 0;
    }
    bad += hit;
    return true;
  });
  return bad;
}

SympCode greedy_so_code(const Field& f, const SearchConfig& cfg, Rng& rng) {
  SympCode code = zero_code(f, cfg.n);
  for (std::size_t step = 0; step < cfg.k; ++step) {
    const SympCode dual = symp_dual(code);
    std::optional<SympCode> best;
    std::uint64_t best_score = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t c = 0; c < std::max<std::size_t>(1, cfg.candidates); ++c) {
      SympCode cand = extend(code, draw_extension(code, dual, rng));
      const std::uint64_t score = greedy_score(cand, cfg);
      if (score < best_score) {
        best_score = score;
        best = std::move(cand);
      }
    }
    code = std::move(*best);
  }
  return code;
}

std::size_t measured_distance(const SympCode& code, DistanceMode mode, std::uint64_t cap) {
  return mode == DistanceMode::primal ? min_symp_weight(code, cap) : min_symp_weight(symp_dual(code), cap);
}

}  // namespace

SympCode random_so_code(const Field& f, std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw InvalidArgument("self-orthogonal codes have k <= n");
  SympCode code = zero_code(f, n);
  for (std::size_t step = 0; step < k; ++step) code = extend(code, draw_extension(code, symp_dual(code), rng));
  return code;
}

SearchOutcome search_witness(const Field& f, const SearchConfig& cfg) {
  if (cfg.k < 1 || cfg.k > cfg.n) throw InvalidArgument("need 1 <= k <= n");
  if (cfg.d < 1) throw InvalidArgument("target distance must be at least 1");
  if (cfg.trials < 1) throw InvalidArgument("trial budget must be at least 1");

  const std::size_t measured_dim = cfg.mode == DistanceMode::primal ? cfg.k : 2 * cfg.n - cfg.k;
  if (!singleton_check(cfg.n, measured_dim, cfg.d)) {
    std::ostringstream os;
    os << "infeasible by the symplectic Singleton bound: " << measured_dim << " + 2*" << cfg.d << " > "
       << 2 * cfg.n + 2;
    throw Infeasible(os.str());
  }
  if (saturating_pow(f.q(), measured_dim) > cfg.cap) {
    throw CapExceeded("measured code has " + std::to_string(f.q()) + "^" + std::to_string(measured_dim) +
                      " codewords, above the cap of " + std::to_string(cfg.cap));
  }

  BoundVerdict verdict = cfg.mode == DistanceMode::primal ? thm34_holds(f.q(), cfg.n, cfg.k, cfg.d)
                                                          : cor37_holds(f.q(), cfg.n, cfg.k, cfg.d);
  if (cfg.mode == DistanceMode::dual) verdict.which = Condition::cor43;

  std::atomic<std::uint64_t> next_trial{0};
  std::atomic<std::uint64_t> winner{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  std::optional<SympCode> found;
  std::size_t found_distance = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      while (true) {
        const std::uint64_t t = next_trial.fetch_add(1);
        if (t >= cfg.trials || t > winner.load()) return;
        Rng rng(trial_seed(cfg.seed, t));
        SympCode code = cfg.strategy == Strategy::random ? random_so_code(f, cfg.n, cfg.k, rng)
                                                         : greedy_so_code(f, cfg, rng);
        const std::size_t dist = measured_distance(code, cfg.mode, cfg.cap);
        if (dist >= cfg.d) {
          std::lock_guard lock(mu);
          if (t < winner.load()) {
            winner = t;
            found = std::move(code);
            found_distance = dist;
          }
          return;
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      winner = 0;
    }
  };

  const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(cfg.threads, 1, cfg.trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SearchOutcome out{std::nullopt, std::nullopt, cfg.trials, std::move(verdict)};
  if (found) {
    out.found = std::move(found);
    out.certified_distance = found_distance;
    out.trials_used = winner.load() + 1;
  }
  return out;
}

Certificate certify(const SympCode& code, std::size_t d, DistanceMode mode, std::uint64_t cap) {
  const Field& f = code.field();
  const std::size_t n = code.n();
  const auto& g = code.generators();

  bool self_orthogonal = true;
  for (std::size_t i = 0; i < code.k(); ++i)
    for (std::size_t j = 0; j < code.k(); ++j)
      if (symp_inner(f, g.row(i), g.row(j)) != 0) self_orthogonal = false;

  Matrix basis = g;
  if (mode == DistanceMode::dual) {
    const SympCode dual = symp_dual(code);
    if (dual.k() + code.k() != 2 * n) throw InternalError("dual dimension identity violated");
    for (std::size_t i = 0; i < dual.k(); ++i)
      for (std::size_t j = 0; j < code.k(); ++j)
        if (symp_inner(f, dual.generators().row(i), g.row(j)) != 0) throw InternalError("dual basis not orthogonal");
    basis = dual.generators();
  }
  const std::size_t dim = basis.rows();
  if (dim == 0) throw InvalidArgument("measured code is zero-dimensional; minimum distance undefined");
  if (saturating_pow(f.q(), dim) > cap) {
    throw CapExceeded("certifying needs " + std::to_string(f.q()) + "^" + std::to_string(dim) +
                      " codewords, above the cap of " + std::to_string(cap));
  }

  // Every coefficient tuple, each codeword formed from scratch.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Element> best_word;
  const std::uint64_t total = saturating_pow(f.q(), dim);
  std::vector<Element> word(2 * n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::fill(word.begin(), word.end(), 0);
    std::uint64_t t = idx;
    for (std::size_t r = dim; r-- > 0;) {
      axpy(word, static_cast<Element>(t % f.q()), basis.row(r), f);
      t /= f.q();
    }
    const std::size_t w = symp_weight(word);
    if (w < best) {
      best = w;
      best_word = word;
    }
  }

  Certificate cert{self_orthogonal && best >= d, self_orthogonal, best, SympVector::from_coords(best_word), {}};
  std::ostringstream os;
  os << "self_orthogonal=" << (self_orthogonal ? "true" : "false") << "\n"
     << "mode=" << to_string(mode) << "\n"
     << "distance=" << best << "\n"
     << "target=" << d << "\n"
     << "min_weight_witness=" << format_symp_vector(cert.witness) << "\n"
     << "verdict=" << (cert.ok ? "PASS" : "FAIL") << "\n";
  cert.text = os.str();
  return cert;
}

}  // namespace qgv
