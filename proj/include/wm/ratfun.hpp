#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wm {

// Dense polynomial in N with rational coefficients, little-endian.
struct Poly {
  std::vector<mpq_class> c;

  static Poly constant(const mpq_class& v);
  // N - j
  static Poly root(long j);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  void trim();
  mpq_class eval(const mpq_class& x) const;
  // Exact division by (N - j); requires eval(j) == 0.
  Poly divide_root(long j) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

// Rational function num / prod_j (N - j)^{e_j}, reduced so that no root of
// the denominator is a root of the numerator. Equal to the quantity it
// represents for every integer N >= valid_from.
class RatFun {
 public:
  RatFun() = default;
  static RatFun constant(const mpq_class& v);
  static RatFun make(Poly num, std::map<long, int> den, long valid_from);

  const Poly& num() const { return num_; }
  const std::map<long, int>& den() const { return den_; }
  long valid_from() const { return valid_from_; }
  void set_valid_from(long n) { valid_from_ = n; }

  bool is_zero() const { return num_.is_zero(); }
  // Degree of num minus degree of den; meaningless for zero.
  int degree() const;
  mpq_class leading_coefficient() const;
  // Throws DomainError at a pole.
  mpq_class eval(long n) const;
  Poly den_poly() const;

  // Integer coefficient vectors (little-endian) with positive leading den
  // coefficient and content 1.
  std::pair<std::vector<mpz_class>, std::vector<mpz_class>> integer_form() const;
  std::string to_string() const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun scaled(const mpq_class& s) const;
  // Equality as rational functions; thresholds are ignored.
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void reduce();
  Poly num_;
  std::map<long, int> den_;
  long valid_from_ = 0;
};

// Product of falling factorials prod_k (N)_k^{e_k}, set to 0 for N < min_n.
struct FallingSig {
  long min_n = 0;
  std::vector<std::pair<int, int>> exps;  // (k, e), k >= 1, e != 0, sorted
  auto operator<=>(const FallingSig&) const = default;
};

// Exact function of N as a finite combination of falling-factorial terms.
// Evaluation is exact for every N >= 1; the rational form agrees from the
// largest min_n on.
class LinComb {
 public:
  static LinComb zero() { return {}; }
  static LinComb one();
  static LinComb term(FallingSig sig, const mpq_class& coef = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<FallingSig, mpq_class>& terms() const { return terms_; }
  long threshold() const;

  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const LinComb& a, const LinComb& b);
  LinComb scaled(const mpq_class& s) const;

  mpq_class eval(long n) const;
  RatFun to_ratfun() const;
  // Same function of N on all N >= 1.
  friend bool same_function(const LinComb& a, const LinComb& b);

 private:
  std::map<FallingSig, mpq_class> terms_;
};

mpz_class falling_factorial(long n, long k);
// num/den in lowest terms.
mpq_class make_rational(const mpz_class& num, const mpz_class& den);

}  // namespace wm
