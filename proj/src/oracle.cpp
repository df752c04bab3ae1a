#include "qgv/oracle.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "qgv/errors.hpp"

namespace qgv {

namespace {

using Key = std::vector<Element>;

// Basis of a complement of `code` inside its symplectic dual.
Matrix quotient_complement(const SympCode& code) {
  const Field& f = code.field();
  const SympCode dual = symp_dual(code);
  Matrix span = code.generators();
  Matrix complement(0, 2 * code.n());
  for (std::size_t r = 0; r < dual.k(); ++r) {
    Matrix trial = span;
    trial.append_row(dual.generators().row(r));
    if (rank(trial, f) > span.rows()) {
      span = std::move(trial);
      complement.append_row(dual.generators().row(r));
    }
  }
  return complement;
}

// Calls visit(coeffs) for every tuple in F_q^dim whose first nonzero entry is 1.
template <typename Visit>
void for_each_normalized(std::uint32_t q, std::size_t dim, Visit&& visit) {
  std::vector<Element> c(dim, 0);
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      visit(std::as_const(c));
      bool carry = true;
      for (std::size_t j = dim; j-- > lead + 1;) {
        if (++c[j] < q) {
          carry = false;
          break;
        }
        c[j] = 0;
      }
      if (carry) break;
    }
  }
}

Key key_of(const SympCode& c) { return c.generators().data(); }

SympCode code_of(const Field& f, std::size_t n, const Key& key) {
  Matrix m(0, 2 * n);
  for (std::size_t r = 0; r < key.size() / (2 * n); ++r) {
    m.append_row(std::span<const Element>(key).subspan(r * 2 * n, 2 * n));
  }
  return code_from_rows(f, n, m);
}

void check_cap(std::uint64_t q, std::size_t n, std::size_t k, std::uint64_t cap) {
  for (std::size_t j = 1; j <= k; ++j) {
    const BigInt predicted = count_A(q, n, j, CountVariant::projective);
    if (predicted > cap) {
      throw CapExceeded("census of dimension-" + std::to_string(j) + " codes has " + predicted.str() +
                        " entries, above the cap of " + std::to_string(cap));
    }
  }
}

std::set<Key> census(const Field& f, std::size_t n, std::size_t k, std::uint64_t cap) {
  if (k < 1 || k > n) {
    throw InvalidArgument("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  check_cap(f.q(), n, k, cap);

  std::set<Key> level;
  for (const auto& u : projective_points(f, n)) level.insert(Key(u.coords().begin(), u.coords().end()));

  for (std::size_t j = 1; j < k; ++j) {
    std::set<Key> next;
    for (const auto& key : level) {
      const SympCode c = code_of(f, n, key);
      const Matrix comp = quotient_complement(c);
      std::vector<Element> v(2 * n);
      for_each_normalized(f.q(), comp.rows(), [&](const std::vector<Element>& coeffs) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) axpy(v, coeffs[i], comp.row(i), f);
        Matrix rows = c.generators();
        rows.append_row(v);
        next.insert(key_of(code_from_rows(f, n, rows)));
      });
      if (next.size() > cap) throw CapExceeded("census exceeded the cap during extension");
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<SympVector> projective_points(const Field& f, std::size_t n) {
  std::vector<SympVector> out;
  for_each_normalized(f.q(), 2 * n, [&](const std::vector<Element>& c) {
    out.push_back(SympVector::from_coords(c));
  });
  return out;
}

VectorCounts count_for_vector(std::span<const SympCode> codes, const SympVector& u) {
  if (u.is_zero()) throw InvalidArgument("fixed vector must be nonzero");
  VectorCounts counts{u, 0, 0};
  for (const auto& c : codes) {
    if (c.n() != u.n()) throw InvalidArgument("fixed vector has wrong half-length");
    if (c.contains(u)) ++counts.containing;
    bool orthogonal = true;
    for (std::size_t r = 0; r < c.k() && orthogonal; ++r) {
      orthogonal = symp_inner(c.field(), u.coords(), c.generators().row(r)) == 0;
    }
    if (orthogonal) ++counts.dual_containing;
  }
  return counts;
}

CensusReport enumerate_so_codes(const Field& f, std::size_t n, std::size_t k, const CensusOptions& options) {
  for (const auto& u : options.fixed_vectors) {
    if (u.is_zero()) throw InvalidArgument("fixed vector must be nonzero");
    if (u.n() != n) throw InvalidArgument("fixed vector has wrong half-length");
  }
  const std::set<Key> keys = census(f, n, k, options.cap);

  CensusReport report{f.q(), n, k, BigInt(keys.size()), {}, {}};
  if (options.keep_codes || !options.fixed_vectors.empty()) {
    std::vector<SympCode> codes;
    codes.reserve(keys.size());
    for (const auto& key : keys) codes.push_back(code_of(f, n, key));
    for (const auto& u : options.fixed_vectors) report.per_vector.push_back(count_for_vector(codes, u));
    if (options.keep_codes) report.codes = std::move(codes);
  }
  return report;
}

std::vector<SympCode> so_code_list(const Field& f, std::size_t n, std::size_t k, std::uint64_t cap) {
  CensusOptions opts;
  opts.cap = cap;
  opts.keep_codes = true;
  return enumerate_so_codes(f, n, k, opts).codes;
}

BigInt oracle_count_containing(const Field& f, std::size_t n, std::size_t k, const SympVector& u,
                               std::uint64_t cap) {
  CensusOptions opts;
  opts.cap = cap;
  opts.fixed_vectors = {u};
  return enumerate_so_codes(f, n, k, opts).per_vector.front().containing;
}

BigInt oracle_count_dual_containing(const Field& f, std::size_t n, std::size_t k, const SympVector& u,
                                    std::uint64_t cap) {
  CensusOptions opts;
  opts.cap = cap;
  opts.fixed_vectors = {u};
  return enumerate_so_codes(f, n, k, opts).per_vector.front().dual_containing;
}

}  // namespace qgv
