#pragma once

// Spanning-tree entropy: lim ln(tau(G^(k))) / |V| along the stage sequence.
//
// Two denominators are in use. SameStage divides by the vertex count of
// G^(k) itself (u_{k+1}); OffsetStage divides by u_k, the literal reading of
// the |V^(i)| label under the shifted vertex-count indexing. The offset value
// is the same-stage value times the dominant root in the limit.

#include <cmath>
#include <cstddef>
#include <string_view>

#include "fractree/error.hpp"
#include "fractree/exact_arith.hpp"
#include "fractree/sequences.hpp"
#include "fractree/spanning.hpp"

namespace fractree {

enum class EntropyMethod { LimitSameStage, LimitOffsetStage, ClosedForm };

inline std::string_view to_string(EntropyMethod m) {
  switch (m) {
  case EntropyMethod::LimitSameStage: return "same-stage";
  case EntropyMethod::LimitOffsetStage: return "offset-stage";
  case EntropyMethod::ClosedForm: return "closed-form";
  }
  return "?";
}

struct EntropyEstimate {
  double value = 0.0;
  EntropyMethod method = EntropyMethod::LimitOffsetStage;
  int iterations = 0;
  double last_delta = 0.0;
};

/// ln(c) / den without expanding c: sum over factors of (exponent/den) ln(base),
/// with the exponent ratio formed exactly before rounding.
inline double factored_log_ratio(const FactoredCount& c, const BigInt& den) {
  double total = 0.0;
  for (const auto& [base, exponent] : c.factors()) {
    total += to_double(make_rational(exponent, den)) * ln_big(base);
  }
  return total;
}

namespace detail {

inline double entropy_at(const FractalParams& family_params, int stage, EntropyMethod convention,
                         const SizeSequences& sizes) {
  FractalParams p = family_params;
  p.i = stage;
  const BigInt& den = convention == EntropyMethod::LimitSameStage ? sizes.u[static_cast<std::size_t>(stage) + 1]
                                                                  : sizes.u[static_cast<std::size_t>(stage)];
  return factored_log_ratio(tau_closed(p), den);
}

} // namespace detail

/// Value at stage `iters`, delta against stage `iters - 1`. Only the size
/// recurrences are used; no graph is built. p.i is ignored.
inline EntropyEstimate entropy_limit(const FractalParams& p, int iters, EntropyMethod convention) {
  if (iters < 2) throw UsageError("entropy_limit needs iters >= 2");
  if (convention == EntropyMethod::ClosedForm) throw UsageError("entropy_limit takes a limit convention");
  FractalParams q = p;
  q.i = 0;
  q.validate();
  const SizeSequences sizes = size_sequences(q, static_cast<std::size_t>(iters) + 1);
  const double last = detail::entropy_at(q, iters, convention, sizes);
  const double before = detail::entropy_at(q, iters - 1, convention, sizes);
  return {last, convention, iters, last - before};
}

/// Closed-form entropy as printed.
///
/// cycle (requires n > m):
///   (2(m-1) n ln n - n ln m (-phi + a2 - 2)) / ((m-1)(phi - a1))
/// wheel: A (B + C + D) with the printed constants A..D.
inline double entropy_closed(const FractalParams& p) {
  FractalParams q = p;
  q.i = 0;
  q.validate();
  const double n = p.n;
  const double m = p.m;
  const double a1 = m - n;
  const double a2 = m + n;
  if (p.family == Family::Cycle) {
    if (!(p.n > p.m)) {
      throw DomainViolation("cycle closed-form entropy stated for n > m only");
    }
    const double phi = std::sqrt(-4.0 * n + (m + n) * (m + n));
    return (2.0 * (m - 1.0) * n * std::log(n) - n * std::log(m) * (-phi + a2 - 2.0)) / ((m - 1.0) * (phi - a1));
  }
  const double zeta = std::sqrt(6.0 * (m - 1.0) * n + (m - 1.0) * (m - 1.0) + n * n);
  const double golden = (std::sqrt(5.0) + 1.0) / 2.0;
  const double cap_a = 4.0 * (m - 1.0) / ((zeta - a2 + 1.0) * (zeta + a2 - 1.0) * (zeta + a2 - 1.0));
  const double cap_b = 4.0 * n * std::log(m) / ((zeta - a2 + 1.0) * (zeta - a2 + 1.0)) *
                       (-zeta + m * m * (n - 1.0) + m * (zeta + n * (-zeta + 3.0 * n - 7.0) + 2.0) +
                        n * (3.0 * zeta - 5.0 * n + 6.0) - 1.0);
  const double cap_c = 1.0 / (-zeta + a2 - 1.0) * (zeta + a2 - 1.0) *
                       (zeta + m * (n - 1.0) - n * (zeta + n + 4.0) + 1.0) *
                       std::log(std::pow(golden, 2.0 * n) - 2.0);
  const double cap_d = std::pow(4.0, n) * std::pow(std::sqrt(5.0) + 1.0, -2.0 * n) * std::cos(2.0 * M_PI * n);
  return cap_a * (cap_b + cap_c + cap_d);
}

/// Dominant characteristic root of the vertex recurrence.
inline double dominant_root(const FractalParams& p) {
  return recurrence_spec(p).root_plus.to_double_approx();
}

} // namespace fractree
