#pragma once

#include <string>

#include "fractree/exact_arith.hpp"

namespace fractree {

/// Exact element p + q*sqrt(d) of Q(sqrt(d)), d a non-negative integer.
/// When d is a perfect square the surd is folded into p, so q is always zero
/// there and arithmetic stays in Q.
class QuadraticNumber {
public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational p, Rational q, BigInt d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    normalize();
  }

  static QuadraticNumber rational(const Rational& p, const BigInt& d) { return {p, Rational(0), d}; }
  static QuadraticNumber surd(const BigInt& d) { return {Rational(0), Rational(1), d}; }

  [[nodiscard]] const Rational& rational_part() const { return p_; }
  [[nodiscard]] const Rational& surd_part() const { return q_; }
  [[nodiscard]] const BigInt& radicand() const { return d_; }
  [[nodiscard]] bool is_rational() const { return q_ == 0; }
  [[nodiscard]] bool is_integer() const { return q_ == 0 && p_.get_den() == 1; }

  [[nodiscard]] double to_double_approx() const {
    return p_.get_d() + q_.get_d() * std::sqrt(to_double(d_));
  }

  [[nodiscard]] QuadraticNumber conjugate() const { return {p_, -q_, d_}; }

  /// p^2 - q^2 d
  [[nodiscard]] Rational norm() const { return p_ * p_ - q_ * q_ * Rational(d_); }

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.p_ + b.p_, a.q_ + b.q_, a.common_radicand(b)};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.p_ - b.p_, a.q_ - b.q_, a.common_radicand(b)};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    const BigInt d = a.common_radicand(b);
    return {a.p_ * b.p_ + a.q_ * b.q_ * Rational(d), a.p_ * b.q_ + a.q_ * b.p_, d};
  }
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
    const Rational nb = b.norm();
    if (nb == 0) throw std::domain_error("division by zero in Q(sqrt d)");
    QuadraticNumber num = a * b.conjugate();
    return {num.p_ / nb, num.q_ / nb, num.d_};
  }

  [[nodiscard]] QuadraticNumber pow(unsigned long k) const {
    QuadraticNumber result = rational(Rational(1), d_);
    QuadraticNumber base = *this;
    while (k > 0) {
      if (k & 1UL) result = result * base;
      base = base * base;
      k >>= 1UL;
    }
    return result;
  }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_);
  }

  [[nodiscard]] std::string to_string() const {
    if (q_ == 0) return to_fraction_string(p_);
    return to_fraction_string(p_) + " + " + to_fraction_string(q_) + "*sqrt(" + to_decimal(d_) + ")";
  }

private:
  [[nodiscard]] BigInt common_radicand(const QuadraticNumber& other) const {
    if (q_ == 0) return other.d_;
    if (other.q_ == 0 || d_ == other.d_) return d_;
    throw std::domain_error("mixed radicands");
  }

  void normalize() {
    p_.canonicalize();
    q_.canonicalize();
    if (d_ < 0) throw std::domain_error("negative radicand");
    if (q_ != 0 && mpz_perfect_square_p(d_.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
      p_ += q_ * Rational(root);
      q_ = 0;
    }
  }

  Rational p_{0};
  Rational q_{0};
  BigInt d_{0};
};

} // namespace fractree
