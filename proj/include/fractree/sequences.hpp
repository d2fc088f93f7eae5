#pragma once

// Vertex/edge count sequences of the two families.
//
// Indexing: u[0] = 1, e[0] = 0 is the single-vertex seed; the built graph
// G^(k) has u[k+1] vertices and e[k+1] edges.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fractree/exact_arith.hpp"
#include "fractree/graph.hpp"
#include "fractree/quadratic_field.hpp"

namespace fractree {

struct SizeSequences {
  FractalParams params;
  std::vector<BigInt> u;
  std::vector<BigInt> e;
};

/// Coupled recurrences:
///   cycle: u' = n u + (m-1) e,     e' = n u + m e
///   wheel: u' = (n+1) u + (m-1) e, e' = 2n u + m e
inline SizeSequences size_sequences(const FractalParams& p, std::size_t upto) {
  SizeSequences s{p, {BigInt(1)}, {BigInt(0)}};
  s.u.reserve(upto + 1);
  s.e.reserve(upto + 1);
  const long n = p.n;
  const long m = p.m;
  const long u_coeff = p.family == Family::Cycle ? n : n + 1;
  const long e_coeff = p.family == Family::Cycle ? n : 2 * n;
  for (std::size_t j = 1; j <= upto; ++j) {
    const BigInt& u = s.u.back();
    const BigInt& e = s.e.back();
    BigInt next_u = u_coeff * u + (m - 1) * e;
    BigInt next_e = e_coeff * u + m * e;
    s.u.push_back(std::move(next_u));
    s.e.push_back(std::move(next_e));
  }
  return s;
}

/// Second-order form u_j = a u_{j-1} + b u_{j-2} (valid for j >= 2) with its
/// characteristic roots and Binet coefficients in Q(sqrt d), d = a^2 + 4b.
struct RecurrenceSpec {
  BigInt a;
  BigInt b;
  BigInt discriminant;
  QuadraticNumber root_plus;
  QuadraticNumber root_minus;
  QuadraticNumber coeff_plus;
  QuadraticNumber coeff_minus;
};

inline RecurrenceSpec recurrence_spec(const FractalParams& p) {
  const long n = p.n;
  const long m = p.m;
  RecurrenceSpec r;
  if (p.family == Family::Cycle) {
    r.a = n + m;
    r.b = -n;
  } else {
    r.a = n + m + 1;
    r.b = n * m - m - 2 * n;
  }
  r.discriminant = r.a * r.a + 4 * r.b;
  const BigInt& d = r.discriminant;
  const Rational half(1, 2);
  r.root_plus = QuadraticNumber(Rational(r.a) * half, half, d);
  r.root_minus = QuadraticNumber(Rational(r.a) * half, -half, d);

  // c+ + c- = u0, c+ r+ + c- r- = u1
  const QuadraticNumber u0 = QuadraticNumber::rational(Rational(1), d);
  const QuadraticNumber u1 = QuadraticNumber::rational(Rational(p.family == Family::Cycle ? n : n + 1), d);
  const QuadraticNumber gap = r.root_plus - r.root_minus;
  r.coeff_plus = (u1 - r.root_minus * u0) / gap;
  r.coeff_minus = (r.root_plus * u0 - u1) / gap;
  return r;
}

/// Decoupled recurrence seeded with u0, u1.
inline std::vector<BigInt> decoupled_vertex_sequence(const FractalParams& p, std::size_t upto) {
  const RecurrenceSpec r = recurrence_spec(p);
  std::vector<BigInt> u{BigInt(1)};
  if (upto >= 1) u.emplace_back(p.family == Family::Cycle ? p.n : p.n + 1);
  for (std::size_t j = 2; j <= upto; ++j) {
    u.push_back(r.a * u[j - 1] + r.b * u[j - 2]);
  }
  return u;
}

/// Exact Binet evaluation c+ r+^j + c- r-^j.
inline BigInt binet_vertex(const FractalParams& p, std::size_t j) {
  const RecurrenceSpec r = recurrence_spec(p);
  const QuadraticNumber value = r.coeff_plus * r.root_plus.pow(j) + r.coeff_minus * r.root_minus.pow(j);
  if (!value.is_integer()) {
    throw std::logic_error("Binet form produced a non-integer: " + value.to_string());
  }
  return value.rational_part().get_num();
}

namespace detail {

inline QuadraticNumber q_int(long v, const BigInt& d) { return QuadraticNumber::rational(Rational(v), d); }

inline QuadraticNumber q_pow2(long k, const BigInt& d) {
  Rational r(1);
  if (k >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  r.canonicalize();
  return QuadraticNumber::rational(r, d);
}

} // namespace detail

/// Vertex-count closed form exactly as printed, evaluated in Q(sqrt d).
///   cycle: 2^{-j-1} ((a1+phi)(a2-phi)^j + (phi-a1)(phi+a2)^j) / phi
///   wheel: 2^{-j-1}/zeta ((a1+zeta-1)(-zeta+a2+1)^j + (zeta-a2+1)(zeta+a2+1)^j)
/// with a1 = m-n, a2 = m+n. The wheel form does not reproduce u0 = 1;
/// `amended` swaps its second coefficient for (zeta - a1 + 1).
inline QuadraticNumber printed_binet_vertex(const FractalParams& p, std::size_t j, bool amended = false) {
  using detail::q_int;
  const RecurrenceSpec r = recurrence_spec(p);
  const BigInt& d = r.discriminant;
  const QuadraticNumber root = QuadraticNumber::surd(d);
  const QuadraticNumber a1 = q_int(p.m - p.n, d);
  const QuadraticNumber a2 = q_int(p.m + p.n, d);
  const QuadraticNumber one = q_int(1, d);
  const QuadraticNumber scale = detail::q_pow2(-static_cast<long>(j) - 1, d);
  if (p.family == Family::Cycle) {
    return scale * ((a1 + root) * (a2 - root).pow(j) + (root - a1) * (root + a2).pow(j)) / root;
  }
  return scale / root *
         ((a1 + root - one) * (a2 + one - root).pow(j) + (root - (amended ? a1 : a2) + one) * (root + a2 + one).pow(j));
}

/// Published closed forms of sum_{j=0..i} u_j for both families.
inline QuadraticNumber printed_vertex_sum(const FractalParams& p, std::size_t i) {
  using detail::q_int;
  const RecurrenceSpec r = recurrence_spec(p);
  const BigInt& d = r.discriminant;
  const QuadraticNumber root = QuadraticNumber::surd(d);
  const QuadraticNumber a2 = q_int(p.m + p.n, d);
  const QuadraticNumber n = q_int(p.n, d);
  const long il = static_cast<long>(i);
  if (p.family == Family::Cycle) {
    return detail::q_pow2(-il, d) *
           (q_int(0, d) - n * (a2 - root).pow(i) + n * (root + a2).pow(i) + detail::q_pow2(il, d) * root) / root;
  }
  const QuadraticNumber one = q_int(1, d);
  const QuadraticNumber eta = (root + a2 + one).pow(i);
  const QuadraticNumber omega = (a2 + one - root).pow(i);
  const QuadraticNumber tail = q_int(static_cast<long>(p.m) * (p.n - 1) - static_cast<long>(p.n) * (p.n + 4) + 1, d);
  return detail::q_pow2(-il - 1, d) / (root * n) *
         (root * (detail::q_pow2(il + 1, d) + q_int(p.n - 1, d) * (eta + omega)) + (omega - eta) * tail);
}

} // namespace fractree
