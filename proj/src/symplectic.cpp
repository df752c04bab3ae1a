#include "qgv/symplectic.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "qgv/errors.hpp"

namespace qgv {

SympVector::SympVector(std::span<const Element> a, std::span<const Element> b) : n_(a.size()) {
  if (a.size() != b.size()) throw InvalidArgument("a and b halves differ in length");
  coords_.reserve(2 * n_);
  coords_.insert(coords_.end(), a.begin(), a.end());
  coords_.insert(coords_.end(), b.begin(), b.end());
}

SympVector SympVector::from_coords(std::span<const Element> coords) {
  if (coords.size() % 2 != 0) throw InvalidArgument("symplectic vector needs even length");
  const std::size_t n = coords.size() / 2;
  return SympVector(coords.first(n), coords.subspan(n));
}

bool SympVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Element x) { return x == 0; });
}

Element symp_inner(const Field& f, std::span<const Element> u, std::span<const Element> v) {
  const std::size_t n = u.size() / 2;
  Element acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = f.add(acc, f.mul(u[i], v[n + i]));
    acc = f.sub(acc, f.mul(u[n + i], v[i]));
  }
  return acc;
}

Element symp_inner(const Field& f, const SympVector& u, const SympVector& v) {
  if (u.n() != v.n()) throw InvalidArgument("symplectic inner product of vectors with different n");
  return symp_inner(f, u.coords(), v.coords());
}

std::size_t symp_weight(std::span<const Element> coords) {
  const std::size_t n = coords.size() / 2;
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w += (coords[i] | coords[n + i]) != 0;
  return w;
}

std::size_t symp_distance(const Field& f, const SympVector& u, const SympVector& v) {
  if (u.n() != v.n()) throw InvalidArgument("symplectic distance of vectors with different n");
  SympVector diff(u.n());
  for (std::size_t i = 0; i < 2 * u.n(); ++i) diff.coords()[i] = f.sub(u.coords()[i], v.coords()[i]);
  return symp_weight(diff);
}

bool SympCode::contains(std::span<const Element> coords) const {
  if (coords.size() != 2 * n_) throw InvalidArgument("vector length does not match code length");
  return in_row_space(generators_, pivots_, coords, field_);
}

SympCode code_from_rows(const Field& f, std::size_t n, const Matrix& rows) {
  if (n == 0) throw InvalidArgument("half-length n must be positive");
  if (rows.rows() > 0 && rows.cols() != 2 * n) {
    throw InvalidArgument("generator rows must have length 2n = " + std::to_string(2 * n));
  }
  for (auto x : rows.data()) {
    if (!f.contains(x)) throw InvalidArgument("symbol " + std::to_string(x) + " outside [0, q)");
  }
  Matrix g = rows.rows() > 0 ? rows : Matrix(0, 2 * n);
  auto pivots = reduce_rref(g, f);
  if (g.rows() == 0) g = Matrix(0, 2 * n);
  return SympCode(f, n, std::move(g), std::move(pivots));
}

SympCode code_from_rows(const Field& f, std::size_t n, std::span<const SympVector> rows) {
  Matrix m(0, 2 * n);
  for (const auto& r : rows) {
    if (r.n() != n) throw InvalidArgument("generator vector has wrong half-length");
    m.append_row(r.coords());
  }
  return code_from_rows(f, n, m);
}

SympCode zero_code(const Field& f, std::size_t n) { return code_from_rows(f, n, Matrix(0, 2 * n)); }

SympCode symp_dual(const SympCode& code) {
  const Field& f = code.field();
  const std::size_t n = code.n();
  // Rows of G * [[0, I], [-I, 0]] are (-b | a).
  Matrix twisted(code.k(), 2 * n);
  for (std::size_t r = 0; r < code.k(); ++r) {
    auto row = code.generators().row(r);
    for (std::size_t i = 0; i < n; ++i) {
      twisted(r, i) = f.neg(row[n + i]);
      twisted(r, n + i) = row[i];
    }
  }
  Matrix basis = code.k() == 0 ? Matrix(0, 2 * n) : nullspace(twisted, f);
  if (code.k() == 0) {
    for (std::size_t i = 0; i < 2 * n; ++i) {
      std::vector<Element> e(2 * n, 0);
      e[i] = 1;
      basis.append_row(e);
    }
  }
  return code_from_rows(f, n, basis);
}

bool is_self_orthogonal(const SympCode& code) {
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i + 1; j < g.rows(); ++j) {
      if (symp_inner(code.field(), g.row(i), g.row(j)) != 0) return false;
    }
  }
  return true;
}

std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

namespace {

struct PartitionResult {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::vector<Element> witness;
};

// Walks the coefficient tuples whose leading `prefix_len` digits equal
// `prefix`, in lexicographic order, maintaining the codeword incrementally.
PartitionResult scan_partition(const SympCode& code, std::size_t prefix_len, std::uint64_t prefix) {
  const Field& f = code.field();
  const std::size_t k = code.k();
  const std::size_t len = 2 * code.n();
  const std::uint32_t q = f.q();
  const auto& g = code.generators();

  // scaled[j][c] = c * row_j
  std::vector<std::vector<std::vector<Element>>> scaled(k, std::vector<std::vector<Element>>(q));
  for (std::size_t j = 0; j < k; ++j) {
    for (Element c = 0; c < q; ++c) {
      scaled[j][c].resize(len);
      for (std::size_t i = 0; i < len; ++i) scaled[j][c][i] = f.mul(c, g(j, i));
    }
  }

  std::vector<Element> digits(k, 0);
  for (std::size_t j = prefix_len; j-- > 0;) {
    digits[j] = static_cast<Element>(prefix % q);
    prefix /= q;
  }
  std::vector<Element> word(len, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < len; ++i) word[i] = f.add(word[i], scaled[j][digits[j]][i]);
  }

  PartitionResult best;
  auto visit = [&] {
    const std::size_t w = symp_weight(word);
    if (w != 0 && w < best.weight) {
      best.weight = w;
      best.witness = word;
    }
  };
  visit();
  if (prefix_len == k) return best;
  while (best.weight > 1) {
    // Odometer over the free digits, last digit fastest.
    bool wrapped = true;
    for (std::size_t j = k; j-- > prefix_len;) {
      const Element old = digits[j];
      const Element next = old + 1 == q ? 0 : old + 1;
      digits[j] = next;
      for (std::size_t i = 0; i < len; ++i) {
        word[i] = f.add(f.sub(word[i], scaled[j][old][i]), scaled[j][next][i]);
      }
      if (next != 0) {
        wrapped = false;
        break;
      }
    }
    if (wrapped) break;
    visit();
  }
  return best;
}

}  // namespace

MinWeight min_symp_weight_witness(const SympCode& code, std::uint64_t cap, unsigned threads) {
  const std::size_t k = code.k();
  if (k == 0) throw InvalidArgument("minimum weight of the zero code is undefined");
  const std::uint64_t q = code.field().q();
  const std::uint64_t total = saturating_pow(q, k);
  if (total > cap) {
    throw CapExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(k) +
                      " codewords exceeds the cap of " + std::to_string(cap));
  }
  threads = std::max(1u, threads);

  // Split on leading digits so there are a few partitions per worker.
  std::size_t prefix_len = 0;
  std::uint64_t parts = 1;
  if (threads > 1) {
    while (prefix_len < k && parts < 4ull * threads) {
      parts *= q;
      ++prefix_len;
    }
  }

  std::vector<PartitionResult> results(parts);
  if (threads == 1 || parts == 1) {
    for (std::uint64_t p = 0; p < parts; ++p) results[p] = scan_partition(code, prefix_len, p);
  } else {
    std::vector<std::thread> pool;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, parts));
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t p = t; p < parts; p += workers) results[p] = scan_partition(code, prefix_len, p);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::size_t best = 0;
  for (std::size_t p = 1; p < results.size(); ++p) {
    if (results[p].weight < results[best].weight) best = p;
  }
  return {results[best].weight, SympVector::from_coords(results[best].witness)};
}

std::size_t min_symp_weight(const SympCode& code, std::uint64_t cap, unsigned threads) {
  return min_symp_weight_witness(code, cap, threads).weight;
}

bool singleton_check(std::size_t n, std::size_t k, std::size_t d) { return k + 2 * d <= 2 * n + 2; }

}  // namespace qgv
