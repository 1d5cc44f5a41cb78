#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcomb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact Laurent polynomial in q with arbitrary-precision integer coefficients.
// Invariant: no zero coefficient is ever stored, so the zero polynomial is the
// empty map and equality is plain map equality.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) { if (c != 0) terms_[0] = c; }
  QPoly(BigInt c) { if (c != 0) terms_[0] = std::move(c); }

  // c * q^exp
  static QPoly term(BigInt c, int exp);
  static QPoly q() { return term(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  // Exponent bounds; only meaningful on nonzero polynomials.
  int min_exponent() const;
  int max_exponent() const;
  BigInt coeff(int exp) const;
  const std::map<int, BigInt>& terms() const { return terms_; }

  bool has_negative_exponent() const;
  bool has_negative_coeff() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;

  // Multiplication by q^k.
  QPoly shifted(int k) const;

  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const QPoly& o) const { return terms_ != o.terms_; }

  // Exact evaluation.  Throws std::domain_error when x = 0 meets a negative
  // exponent; 0^0 counts the constant term.
  BigRat eval(const BigRat& x) const;

  // Exact division; nullopt when the quotient is not a Laurent polynomial
  // over the integers.
  std::optional<QPoly> divided_exactly_by(const QPoly& d) const;

  // Plain ascending form, e.g. "q^-1+2+q^2".
  std::string str() const;
  // Best-effort factored form using q-integer brackets, e.g. "q[2][3]";
  // falls back to str() when the polynomial is not of that shape.
  std::string bracket_str() const;

 private:
  void set(int exp, BigInt c);
  std::map<int, BigInt> terms_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(QPoly a, const QPoly& b);

// q-integer [n] = 1 + q + ... + q^{n-1}; [0] = 0.  Requires n >= 0.
QPoly q_int(int n);

// Gaussian binomial coefficient; 0 when k < 0 or k > m.  Requires m >= 0.
QPoly q_binomial(int m, int k);

// Descending q-factorial of a composition J = (j_1..j_p):
// [p]^{j_1} [p-1]^{j_2} ... [1]^{j_p}.  Parts may be zero (weak compositions).
QPoly q_factorial_a(const std::vector<int>& parts);

// Type B variant: q_factorial_a(J) * prod_{t=1}^{p-1} (1 + q^t).
QPoly q_factorial_b(const std::vector<int>& parts);

// Integer analogue of q_factorial_a at q = 1: p^{j_1} (p-1)^{j_2} ... 1^{j_p}.
BigInt int_factorial_a(const std::vector<int>& parts);

}  // namespace qcomb
