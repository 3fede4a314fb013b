#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "wm/ratfun.hpp"

namespace wm {

// Weakly decreasing positive parts; empty is the empty partition.
using Partition = std::vector<int>;

int size_of(const Partition& p);
int first_part(const Partition& p);  // 0 for the empty partition
bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);
// "2,1", "[2,1]", "" or "0" for the empty partition.
Partition parse_partition(const std::string& text);
std::string partition_string(const Partition& p);

// All partitions of d, largest first part first.
std::vector<Partition> partitions_of(int d);
// Cycle type from a list of cycle lengths.
Partition sorted_partition(std::vector<int> parts);

mpz_class factorial(int n);
mpz_class class_size(const Partition& cycle_type);
struct ClassData {
  Partition type;
  mpz_class size;
};
std::vector<ClassData> class_data(int d);

// chi^mu at an element of cycle type `cycle_type` (Murnaghan-Nakayama).
long mn_character(const Partition& mu, const Partition& cycle_type);
// mu[N] = (N - |mu|, mu_1, mu_2, ...); DomainError if N < |mu| + mu_1.
Partition stable_partition(const Partition& mu, long n);
long mn_character_stable(const Partition& mu, long n, const Partition& cycle_type);

mpz_class hook_product(const Partition& mu);
mpz_class dimension(const Partition& mu);
// dim chi^{mu[N]} as a polynomial in N of degree |mu|.
Poly stable_dimension(const Partition& mu);

// Partitions obtained from mu by removing at most one cell per column;
// mu first, then by decreasing size.
std::vector<Partition> p_minus(const Partition& mu);
std::vector<Partition> pieri_decompose(const Partition& mu, long n);
// (1/(d-k)!) sum over alpha in S_{d-k} of chi^mu(tau + alpha).
mpq_class inverse_pieri_lhs(const Partition& mu, int k, const Partition& tau_type);
mpq_class inverse_pieri_rhs(const Partition& mu, int k, const Partition& tau_type);

}  // namespace wm
