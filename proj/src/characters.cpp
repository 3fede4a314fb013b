#include "wm/characters.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>

#include "wm/error.hpp"

namespace wm {

int size_of(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

int first_part(const Partition& p) { return p.empty() ? 0 : p.front(); }

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  Partition c;
  for (int j = 1; j <= first_part(p); ++j) {
    int len = 0;
    for (int x : p)
      if (x >= j) ++len;
    c.push_back(len);
  }
  return c;
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']' && ch != '(' && ch != ')') s.push_back(ch);
  Partition p;
  if (s.empty() || s == "0") return p;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad partition: '" + text + "'");
    p.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (!is_partition(p)) throw InputError("not a partition: '" + text + "'");
  return p;
}

std::string partition_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

namespace {

void gen_partitions(int rest, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = std::min(rest, max_part); x >= 1; --x) {
    cur.push_back(x);
    gen_partitions(rest - x, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw InputError("partitions_of: negative size");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(d, d, cur, out);
  return out;
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class class_size(const Partition& cycle_type) {
  std::map<int, int> mult;
  for (int x : cycle_type) mult[x]++;
  mpz_class denom = 1;
  for (const auto& [len, m] : mult) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(m));
    denom *= pw * factorial(m);
  }
  return factorial(size_of(cycle_type)) / denom;
}

std::vector<ClassData> class_data(int d) {
  std::vector<ClassData> out;
  for (auto& p : partitions_of(d)) {
    mpz_class s = class_size(p);
    out.push_back({std::move(p), std::move(s)});
  }
  return out;
}

namespace {

std::mutex mn_mu;
std::map<std::pair<Partition, Partition>, long> mn_memo;

// Removes rim hooks of length rho.back() via beta-numbers.
long mn_rec(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard lock(mn_mu);
    auto it = mn_memo.find({lambda, rho});
    if (it != mn_memo.end()) return it->second;
  }
  const int r = rho.back();
  Partition rest(rho.begin(), rho.end() - 1);
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  std::set<int> bs(beta.begin(), beta.end());
  long total = 0;
  for (int i = 0; i < len; ++i) {
    int b = beta[i] - r;
    if (b < 0 || bs.count(b)) continue;
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    Partition mu;
    for (int j = 0; j < len; ++j) {
      int part = nb[j] - (len - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    long v = mn_rec(mu, rest);
    total += (between % 2 ? -v : v);
  }
  std::lock_guard lock(mn_mu);
  mn_memo.emplace(std::make_pair(lambda, rho), total);
  return total;
}

}  // namespace

long mn_character(const Partition& mu, const Partition& cycle_type) {
  if (!is_partition(mu) || !is_partition(cycle_type)) throw InputError("mn_character: malformed partition");
  if (size_of(mu) != size_of(cycle_type)) throw InputError("mn_character: size mismatch");
  return mn_rec(mu, cycle_type);
}

Partition stable_partition(const Partition& mu, long n) {
  if (n < size_of(mu) + first_part(mu))
    throw DomainError("stable character " + partition_string(mu) + " undefined at N=" + std::to_string(n));
  Partition p;
  if (n - size_of(mu) > 0) p.push_back(static_cast<int>(n - size_of(mu)));
  p.insert(p.end(), mu.begin(), mu.end());
  return p;
}

long mn_character_stable(const Partition& mu, long n, const Partition& cycle_type) {
  return mn_character(stable_partition(mu, n), cycle_type);
}

mpz_class hook_product(const Partition& mu) {
  Partition c = conjugate(mu);
  mpz_class h = 1;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int j = 0; j < mu[i]; ++j) h *= (mu[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
  return h;
}

mpz_class dimension(const Partition& mu) { return factorial(size_of(mu)) / hook_product(mu); }

Poly stable_dimension(const Partition& mu) {
  // N! / H(mu[N]) = (N)_{|mu|+mu_1} / (H(mu) prod_j (N - |mu| - j + 1 + mu'_j)).
  const int n = size_of(mu), m1 = first_part(mu);
  Partition c = conjugate(mu);
  std::set<int> skip;
  for (int j = 1; j <= m1; ++j) skip.insert(n + j - 1 - c[j - 1]);
  Poly p = Poly::constant(mpq_class(1) / mpq_class(hook_product(mu)));
  for (int i = 0; i < n + m1; ++i)
    if (!skip.count(i)) p = p * Poly::root(i);
  return p;
}

std::vector<Partition> p_minus(const Partition& mu) {
  // nu with mu/nu a horizontal strip: mu_{i+1} <= nu_i <= mu_i.
  std::vector<Partition> out;
  Partition cur(mu.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == mu.size()) {
      out.push_back(sorted_partition(cur));
      return;
    }
    int lo = i + 1 < mu.size() ? mu[i + 1] : 0;
    for (int x = mu[i]; x >= lo; --x) {
      cur[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return size_of(a) > size_of(b); });
  return out;
}

std::vector<Partition> pieri_decompose(const Partition& mu, long n) {
  if (n < size_of(mu) + first_part(mu))
    throw DomainError("pieri_decompose: N=" + std::to_string(n) + " below |mu|+mu_1");
  return p_minus(mu);
}

mpq_class inverse_pieri_lhs(const Partition& mu, int k, const Partition& tau_type) {
  const int d = size_of(mu);
  if (k < 0 || k > d || size_of(tau_type) != k) throw InputError("inverse_pieri_lhs: size mismatch");
  mpq_class total = 0;
  for (const auto& [alpha, count] : class_data(d - k)) {
    std::vector<int> joined = tau_type;
    joined.insert(joined.end(), alpha.begin(), alpha.end());
    total += mpq_class(count) * mn_character(mu, sorted_partition(joined));
  }
  return total / mpq_class(factorial(d - k));
}

mpq_class inverse_pieri_rhs(const Partition& mu, int k, const Partition& tau_type) {
  mpq_class total = 0;
  for (const auto& nu : p_minus(mu))
    if (size_of(nu) == k) total += mn_character(nu, tau_type);
  return total;
}

}  // namespace wm
