#pragma once

// Exact numeric kernel: big integers and rationals (GMP-backed), factored
// counts kept as base^exponent products, and a fraction-free determinant.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fractree/error.hpp"

namespace fractree {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

// Always "p/q", including integers ("2/1") and zero ("0/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string& text) {
  Rational r(text, 10);
  r.canonicalize();
  return r;
}

// Correctly rounded conversion through the exact decimal digits.
inline double to_double(const BigInt& x) {
  return std::strtod(to_decimal(x).c_str(), nullptr);
}

inline double to_double(const Rational& r) { return r.get_d(); }

// Natural log of a positive big integer, without materializing a float of
// the full value.
inline double ln_big(const BigInt& x) {
  if (x <= 0) {
    throw std::domain_error("ln of non-positive integer");
  }
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline BigInt pow_big(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

// C(a, 2) = a(a-1)/2
inline BigInt choose2(const BigInt& a) { return a * (a - 1) / 2; }

/// Exact positive integer stored as a product of bases raised to big-integer
/// exponents. Bases are kept as given (not factored into primes), so 45^6 * 2^4
/// stays in that shape. Zero exponents are dropped; equal bases merge.
class FactoredCount {
public:
  using FactorMap = std::map<BigInt, BigInt>;

  FactoredCount() = default;

  FactoredCount(std::initializer_list<std::pair<BigInt, BigInt>> factors) {
    for (const auto& [base, exponent] : factors) {
      multiply(base, exponent);
    }
  }

  void multiply(const BigInt& base, const BigInt& exponent) {
    if (base < 2) {
      if (base == 1 || exponent == 0) return;
      throw std::domain_error("factored count base must be >= 2");
    }
    if (exponent < 0) {
      throw std::domain_error("factored count exponent must be >= 0");
    }
    if (exponent == 0) return;
    factors_[base] += exponent;
  }

  void merge(const FactoredCount& other) {
    for (const auto& [base, exponent] : other.factors_) {
      multiply(base, exponent);
    }
  }

  [[nodiscard]] const FactorMap& factors() const { return factors_; }
  [[nodiscard]] bool empty() const { return factors_.empty(); }

  [[nodiscard]] BigInt exponent_of(const BigInt& base) const {
    auto it = factors_.find(base);
    return it == factors_.end() ? BigInt(0) : it->second;
  }

  /// Rewrites the product over a pairwise-coprime set of bases.
  [[nodiscard]] FactoredCount coprime_normalized() const {
    std::vector<std::pair<BigInt, BigInt>> items(factors_.begin(), factors_.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < items.size() && !changed; ++a) {
        for (std::size_t b = a + 1; b < items.size() && !changed; ++b) {
          BigInt g;
          mpz_gcd(g.get_mpz_t(), items[a].first.get_mpz_t(), items[b].first.get_mpz_t());
          if (g == 1) continue;
          auto [ba, ea] = items[a];
          auto [bb, eb] = items[b];
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(b));
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(a));
          items.emplace_back(g, ea + eb);
          if (ba / g > 1) items.emplace_back(ba / g, ea);
          if (bb / g > 1) items.emplace_back(bb / g, eb);
          // Merge equal bases before the next sweep.
          std::map<BigInt, BigInt> merged;
          for (auto& [base, e] : items) merged[base] += e;
          items.assign(merged.begin(), merged.end());
          changed = true;
        }
      }
    }
    FactoredCount out;
    for (const auto& [base, e] : items) out.multiply(base, e);
    return out;
  }

  /// Value equality. Both sides are rewritten as exponent vectors over one
  /// gcd-free basis of the union of their bases; pairwise coprime elements
  /// above 1 are multiplicatively independent, so the vectors are unique.
  friend bool operator==(const FactoredCount& lhs, const FactoredCount& rhs) {
    if (lhs.factors_ == rhs.factors_) return true;
    std::vector<BigInt> bases;
    for (const auto& [b, e] : lhs.factors_) bases.push_back(b);
    for (const auto& [b, e] : rhs.factors_) bases.push_back(b);
    const std::vector<BigInt> basis = gcd_free_basis(std::move(bases));
    return lhs.over_basis(basis) == rhs.over_basis(basis);
  }

  /// Predicted bit length of the expanded value.
  [[nodiscard]] double predicted_bits() const {
    double bits = 0.0;
    for (const auto& [base, exponent] : factors_) {
      bits += to_double(exponent) * ln_big(base) / std::log(2.0);
    }
    return bits;
  }

  /// "2^5*3^16", "1" when empty.
  [[nodiscard]] std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [base, exponent] : factors_) {
      if (!out.empty()) out += "*";
      out += to_decimal(base) + "^" + to_decimal(exponent);
    }
    return out;
  }

private:
  static std::vector<BigInt> gcd_free_basis(std::vector<BigInt> items) {
    std::set<BigInt> work(items.begin(), items.end());
    work.erase(BigInt(1));
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto a = work.begin(); a != work.end() && !changed; ++a) {
        for (auto b = std::next(a); b != work.end() && !changed; ++b) {
          BigInt g;
          mpz_gcd(g.get_mpz_t(), a->get_mpz_t(), b->get_mpz_t());
          if (g == 1) continue;
          const BigInt x = *a / g;
          const BigInt y = *b / g;
          work.erase(*b);
          work.erase(*a);
          for (const BigInt& z : {g, x, y}) {
            if (z != 1) work.insert(z);
          }
          changed = true;
        }
      }
    }
    return {work.begin(), work.end()};
  }

  [[nodiscard]] std::vector<BigInt> over_basis(const std::vector<BigInt>& basis) const {
    std::vector<BigInt> vec(basis.size(), BigInt(0));
    for (const auto& [base, exponent] : factors_) {
      BigInt rest = base;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        while (rest % basis[k] == 0) {
          rest /= basis[k];
          vec[k] += exponent;
        }
      }
    }
    return vec;
  }

  FactorMap factors_;
};

inline constexpr double kDefaultExpandCapBits = 16777216.0; // 2^24

inline BigInt factored_expand(const FactoredCount& c, double cap_bits = kDefaultExpandCapBits) {
  if (c.predicted_bits() > cap_bits) {
    throw OverflowCap("factored count expands past " + std::to_string(cap_bits) + " bits");
  }
  BigInt out = 1;
  for (const auto& [base, exponent] : c.factors()) {
    if (!exponent.fits_ulong_p()) {
      throw OverflowCap("exponent does not fit a machine word");
    }
    out *= pow_big(base, exponent.get_ui());
  }
  return out;
}

/// Sum of exponent * ln(base); exponents converted through their decimal digits.
inline double factored_log(const FactoredCount& c) {
  double total = 0.0;
  for (const auto& [base, exponent] : c.factors()) {
    total += to_double(exponent) * ln_big(base);
  }
  return total;
}

/// Square matrix of exact integers, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t order) : order_(order), entries_(order * order) {}

  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntegerMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != order_) {
        throw std::invalid_argument("IntegerMatrix must be square");
      }
      std::size_t c = 0;
      for (long v : row) at(r, c++) = v;
      ++r;
    }
  }

  [[nodiscard]] std::size_t order() const { return order_; }
  BigInt& at(std::size_t r, std::size_t c) { return entries_[r * order_ + c]; }
  [[nodiscard]] const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  std::size_t order_ = 0;
  std::vector<BigInt> entries_;
};

namespace detail {

struct SparseEntry {
  std::size_t col;
  BigInt value;
};

using SparseRow = std::vector<SparseEntry>;

} // namespace detail

/// Exact determinant by one-step fraction-free (Bareiss) elimination.
///
/// Rows are held sparsely: after step k every entry is a (k+1)-order minor of
/// the input, so a zero stays zero unless its row has a nonzero in the pivot
/// column. This keeps Laplacian minors cheap under a fill-reducing ordering.
/// A zero pivot triggers a row swap with sign tracking; a column with no
/// usable pivot means the determinant is zero.
inline BigInt bareiss_determinant(const IntegerMatrix& m) {
  using detail::SparseEntry;
  using detail::SparseRow;
  const std::size_t n = m.order();
  if (n == 0) return 1;

  std::vector<SparseRow> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m.at(r, c) != 0) rows[r].push_back({c, m.at(r, c)});
    }
  }

  int sign = 1;
  BigInt prev = 1;
  BigInt scratch;
  for (std::size_t k = 0; k < n; ++k) {
    auto leads_with_k = [k](const SparseRow& row) { return !row.empty() && row.front().col == k; };
    if (!leads_with_k(rows[k])) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && !leads_with_k(rows[swap_with])) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(rows[k], rows[swap_with]);
      sign = -sign;
    }
    const SparseRow& pivot_row = rows[k];
    const BigInt& pivot = pivot_row.front().value;

    for (std::size_t r = k + 1; r < n; ++r) {
      SparseRow& row = rows[r];
      if (leads_with_k(row)) {
        const BigInt factor = row.front().value;
        SparseRow updated;
        updated.reserve(row.size() + pivot_row.size());
        std::size_t a = 1;
        std::size_t b = 1;
        while (a < row.size() || b < pivot_row.size()) {
          const std::size_t col_a = a < row.size() ? row[a].col : n;
          const std::size_t col_b = b < pivot_row.size() ? pivot_row[b].col : n;
          const std::size_t col = std::min(col_a, col_b);
          scratch = 0;
          if (col_a == col) {
            mpz_mul(scratch.get_mpz_t(), pivot.get_mpz_t(), row[a].value.get_mpz_t());
            ++a;
          }
          if (col_b == col) {
            mpz_submul(scratch.get_mpz_t(), factor.get_mpz_t(), pivot_row[b].value.get_mpz_t());
            ++b;
          }
          if (scratch != 0) {
            mpz_divexact(scratch.get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
            updated.push_back({col, scratch});
          }
        }
        row = std::move(updated);
      } else {
        for (auto& entry : row) {
          mpz_mul(entry.value.get_mpz_t(), entry.value.get_mpz_t(), pivot.get_mpz_t());
          mpz_divexact(entry.value.get_mpz_t(), entry.value.get_mpz_t(), prev.get_mpz_t());
        }
      }
    }
    prev = pivot;
  }
  return sign * prev;
}

} // namespace fractree
