#include "wm/ratfun.hpp"

#include <algorithm>
#include <sstream>

#include "wm/error.hpp"

namespace wm {

Poly Poly::constant(const mpq_class& v) {
  Poly p;
  if (v != 0) p.c.push_back(v);
  return p;
}

Poly Poly::root(long j) {
  Poly p;
  p.c = {mpq_class(-j), mpq_class(1)};
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::divide_root(long j) const {
  if (c.empty()) return {};
  Poly q;
  q.c.assign(c.size() - 1, 0);
  mpq_class carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * j;
    q.c[i - 1] = carry;
  }
  WM_CHECK(c[0] + carry * j == 0, "divide_root: nonzero remainder");
  q.trim();
  return q;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

namespace {

Poly root_power(long j, int e) {
  Poly p = Poly::constant(1);
  for (int i = 0; i < e; ++i) p = p * Poly::root(j);
  return p;
}

}  // namespace

RatFun RatFun::constant(const mpq_class& v) {
  RatFun r;
  r.num_ = Poly::constant(v);
  return r;
}

RatFun RatFun::make(Poly num, std::map<long, int> den, long valid_from) {
  RatFun r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.valid_from_ = valid_from;
  r.reduce();
  return r;
}

void RatFun::reduce() {
  num_.trim();
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0 && num_.eval(mpq_class(it->first)) == 0) {
      num_ = num_.divide_root(it->first);
      --it->second;
    }
    WM_CHECK(it->second >= 0, "RatFun: negative denominator exponent");
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

int RatFun::degree() const {
  int d = num_.degree();
  for (const auto& [j, e] : den_) d -= e;
  return d;
}

mpq_class RatFun::leading_coefficient() const { return num_.is_zero() ? mpq_class(0) : num_.c.back(); }

mpq_class RatFun::eval(long n) const {
  mpq_class d = 1;
  for (const auto& [j, e] : den_)
    for (int i = 0; i < e; ++i) d *= (n - j);
  if (d == 0) throw DomainError("RatFun: evaluation at a pole N=" + std::to_string(n));
  return num_.eval(mpq_class(n)) / d;
}

Poly RatFun::den_poly() const {
  Poly p = Poly::constant(1);
  for (const auto& [j, e] : den_) p = p * root_power(j, e);
  return p;
}

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> RatFun::integer_form() const {
  Poly d = den_poly();
  mpz_class l = 1;
  for (const auto& q : num_.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& q : d.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> n, m;
  mpz_class g = 0;
  for (const auto& q : num_.c) {
    mpq_class s = q * l;
    n.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.back().get_mpz_t());
  }
  for (const auto& q : d.c) {
    mpq_class s = q * l;
    m.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.back().get_mpz_t());
  }
  if (g == 0) g = 1;
  for (auto& x : n) x /= g;
  for (auto& x : m) x /= g;
  if (!m.empty() && m.back() < 0) {
    for (auto& x : n) x = -x;
    for (auto& x : m) x = -x;
  }
  return {n, m};
}

std::string RatFun::to_string() const {
  auto poly_str = [](const Poly& p) {
    if (p.is_zero()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const mpq_class& q = p.c[i];
      if (q == 0) continue;
      if (!first) os << (q > 0 ? " + " : " - ");
      else if (q < 0) os << "-";
      mpq_class a = abs(q);
      if (a != 1 || i == 0) os << a.get_str();
      if (i > 0) os << (a != 1 ? "*" : "") << "N" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    return os.str();
  };
  std::string s = "(" + poly_str(num_) + ")";
  if (!den_.empty()) {
    s += " / (";
    bool first = true;
    for (const auto& [j, e] : den_) {
      if (!first) s += "*";
      s += j == 0 ? "N" : "(N" + std::string(j > 0 ? "-" : "+") + std::to_string(j > 0 ? j : -j) + ")";
      if (e > 1) s += "^" + std::to_string(e);
      first = false;
    }
    s += ")";
  }
  return s;
}

namespace {

RatFun combine(const RatFun& a, const RatFun& b, bool subtract) {
  std::map<long, int> den = a.den();
  for (const auto& [j, e] : b.den()) den[j] = std::max(den[j], e);
  auto lift = [&](const RatFun& r) {
    Poly p = r.num();
    for (const auto& [j, e] : den) {
      auto it = r.den().find(j);
      p = p * root_power(j, e - (it == r.den().end() ? 0 : it->second));
    }
    return p;
  };
  Poly num = subtract ? lift(a) - lift(b) : lift(a) + lift(b);
  return RatFun::make(std::move(num), std::move(den), std::max(a.valid_from(), b.valid_from()));
}

}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) { return combine(a, b, false); }
RatFun operator-(const RatFun& a, const RatFun& b) { return combine(a, b, true); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  std::map<long, int> den = a.den();
  for (const auto& [j, e] : b.den()) den[j] += e;
  return RatFun::make(a.num() * b.num(), std::move(den), std::max(a.valid_from(), b.valid_from()));
}

RatFun RatFun::scaled(const mpq_class& s) const {
  Poly p = num_;
  for (auto& q : p.c) q *= s;
  return RatFun::make(std::move(p), den_, valid_from_);
}

mpz_class falling_factorial(long n, long k) {
  mpz_class r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

LinComb LinComb::one() { return term(FallingSig{}, 1); }

LinComb LinComb::term(FallingSig sig, const mpq_class& coef) {
  LinComb r;
  if (coef != 0) r.terms_.emplace(std::move(sig), coef);
  return r;
}

long LinComb::threshold() const {
  long t = 0;
  for (const auto& [sig, c] : terms_) t = std::max(t, sig.min_n);
  return t;
}

LinComb& LinComb::operator+=(const LinComb& o) {
  for (const auto& [sig, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(sig, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  for (const auto& [sig, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(sig, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LinComb operator*(const LinComb& a, const LinComb& b) {
  LinComb r;
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      FallingSig s;
      s.min_n = std::max(sa.min_n, sb.min_n);
      std::map<int, int> e;
      for (const auto& [k, x] : sa.exps) e[k] += x;
      for (const auto& [k, x] : sb.exps) e[k] += x;
      for (const auto& [k, x] : e)
        if (x != 0) s.exps.emplace_back(k, x);
      r += LinComb::term(std::move(s), ca * cb);
    }
  return r;
}

LinComb LinComb::scaled(const mpq_class& s) const {
  LinComb r;
  if (s == 0) return r;
  r.terms_ = terms_;
  for (auto& [sig, c] : r.terms_) c *= s;
  return r;
}

mpq_class LinComb::eval(long n) const {
  mpq_class total = 0;
  for (const auto& [sig, c] : terms_) {
    if (n < sig.min_n) continue;
    mpq_class v = c;
    for (const auto& [k, e] : sig.exps) {
      mpz_class f = falling_factorial(n, k);
      WM_CHECK(f != 0 || e > 0, "LinComb: falling factorial pole inside validity range");
      for (int i = 0; i < (e > 0 ? e : -e); ++i) {
        if (e > 0)
          v *= f;
        else
          v /= f;
      }
    }
    total += v;
  }
  return total;
}

RatFun LinComb::to_ratfun() const {
  // Net exponent of (N - j) per term; (N)_k contributes roots 0..k-1.
  std::vector<std::map<long, int>> roots;
  std::map<long, int> den;
  for (const auto& [sig, c] : terms_) {
    std::map<long, int> r;
    for (const auto& [k, e] : sig.exps)
      for (int j = 0; j < k; ++j) r[j] += e;
    for (const auto& [j, e] : r)
      if (e < 0) den[j] = std::max(den[j], -e);
    roots.push_back(std::move(r));
  }
  Poly num;
  std::size_t i = 0;
  for (const auto& [sig, c] : terms_) {
    Poly p = Poly::constant(c);
    std::map<long, int> r = roots[i++];
    for (const auto& [j, e] : den) r[j] += e;
    for (const auto& [j, e] : r) {
      WM_CHECK(e >= 0, "LinComb: inconsistent common denominator");
      p = p * root_power(j, e);
    }
    num = num + p;
  }
  return RatFun::make(std::move(num), std::move(den), threshold());
}

bool same_function(const LinComb& a, const LinComb& b) {
  LinComb d = a - b;
  if (!d.to_ratfun().is_zero()) return false;
  for (long n = 1; n <= d.threshold(); ++n)
    if (d.eval(n) != 0) return false;
  return true;
}

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace wm
