#include "qcomb/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qcomb {

QPoly QPoly::term(BigInt c, int exp) {
  QPoly p;
  if (c != 0) p.terms_[exp] = std::move(c);
  return p;
}

int QPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int QPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

BigInt QPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool QPoly::has_negative_exponent() const {
  return !terms_.empty() && terms_.begin()->first < 0;
}

bool QPoly::has_negative_coeff() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return true;
  return false;
}

void QPoly::set(int exp, BigInt c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  std::map<int, BigInt> out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
  terms_.clear();
  for (auto& [e, c] : out)
    if (c != 0) terms_[e] = std::move(c);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

QPoly QPoly::shifted(int k) const {
  QPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
QPoly operator*(QPoly a, const QPoly& b) { a *= b; return a; }

BigRat QPoly::eval(const BigRat& x) const {
  if (x == 0 && has_negative_exponent())
    throw std::domain_error("evaluation at 0 with negative exponents");
  BigRat total = 0;
  for (const auto& [e, c] : terms_) {
    BigRat p = 1;
    if (e >= 0) {
      for (int i = 0; i < e; ++i) p *= x;
    } else {
      for (int i = 0; i < -e; ++i) p /= x;
    }
    total += BigRat(c) * p;
  }
  return total;
}

std::optional<QPoly> QPoly::divided_exactly_by(const QPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return QPoly();
  // Normalize both to ordinary polynomials with nonzero constant term, divide
  // in ascending order, then restore the exponent offset.
  int sn = min_exponent(), sd = d.min_exponent();
  QPoly rem = shifted(-sn);
  QPoly div = d.shifted(-sd);
  QPoly quot;
  const BigInt lead = div.terms_.begin()->second;
  // Ascending division computes the power-series quotient; it matches the
  // polynomial quotient exactly when the division is exact, so any quotient
  // term beyond deg(rem) - deg(div) proves inexactness.
  const int max_quot_exp = rem.max_exponent() - div.max_exponent();
  while (!rem.is_zero()) {
    int e = rem.min_exponent();
    BigInt c = rem.terms_.begin()->second;
    if (e > max_quot_exp) return std::nullopt;
    if (c % lead != 0) return std::nullopt;
    QPoly t = term(c / lead, e);
    quot += t;
    rem -= t * div;
  }
  return quot.shifted(sn - sd);
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string QPoly::bracket_str() const {
  if (is_zero() || has_negative_coeff()) return str();
  int shift = min_exponent();
  QPoly body = shifted(-shift);
  std::vector<int> brackets;
  int k = body.is_zero() ? 0 : body.max_exponent() + 1;
  for (; k >= 2; --k) {
    for (;;) {
      auto d = body.divided_exactly_by(q_int(k));
      if (!d || d->has_negative_exponent() || d->has_negative_coeff()) break;
      body = *d;
      brackets.push_back(k);
      if (body.is_zero() || body.max_exponent() + 1 < k) break;
    }
  }
  if (!body.is_zero() && body.max_exponent() > 0) return str();
  BigInt c = body.coeff(0);
  std::ostringstream os;
  if (c != 1 || (brackets.empty() && shift == 0)) os << c;
  if (shift != 0) {
    os << "q";
    if (shift != 1) os << "^" << shift;
  }
  for (auto it = brackets.rbegin(); it != brackets.rend(); ++it)
    os << "[" << *it << "]";
  return os.str();
}

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int of negative n");
  QPoly r;
  for (int i = 0; i < n; ++i) r += QPoly::term(1, i);
  return r;
}

QPoly q_binomial(int m, int k) {
  if (m < 0) throw std::invalid_argument("q_binomial with m < 0");
  if (k < 0 || k > m) return QPoly();
  // Pascal recurrence [m,k] = [m-1,k-1] + q^k [m-1,k], row by row.
  std::vector<QPoly> row(1, QPoly(1));
  for (int i = 1; i <= m; ++i) {
    std::vector<QPoly> next(i + 1);
    next[0] = QPoly(1);
    next[i] = QPoly(1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j].shifted(j);
    row = std::move(next);
  }
  return row[k];
}

QPoly q_factorial_a(const std::vector<int>& parts) {
  const int p = static_cast<int>(parts.size());
  QPoly r(1);
  for (int t = 0; t < p; ++t) {
    QPoly base = q_int(p - t);
    for (int i = 0; i < parts[t]; ++i) r *= base;
  }
  return r;
}

QPoly q_factorial_b(const std::vector<int>& parts) {
  QPoly r = q_factorial_a(parts);
  const int p = static_cast<int>(parts.size());
  for (int t = 1; t <= p - 1; ++t) r *= QPoly(1) + QPoly::term(1, t);
  return r;
}

BigInt int_factorial_a(const std::vector<int>& parts) {
  const int p = static_cast<int>(parts.size());
  BigInt r = 1;
  for (int t = 0; t < p; ++t)
    for (int i = 0; i < parts[t]; ++i) r *= (p - t);
  return r;
}

}  // namespace qcomb
