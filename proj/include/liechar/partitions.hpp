#pragma once

#include <string>
#include <vector>

#include "liechar/rational.hpp"

namespace liechar {

// Parts in non-increasing order, no zeros.
using Partition = std::vector<int>;

// All partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);
Partition conjugate_partition(const Partition& lambda);
int partition_size(const Partition& lambda);
// n(lambda) = sum (i-1) lambda_i
int partition_n(const Partition& lambda);
std::vector<int> hook_lengths(const Partition& lambda);
// Order of the centralizer in S_n of a permutation of cycle type mu.
Integer centralizer_size(const Partition& mu);
// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long sn_character(const Partition& lambda, const Partition& mu);
// q^{n(lambda)} prod (q^i - 1) / prod_h (q^h - 1)
Integer unipotent_degree(const Partition& lambda, long q);
std::string partition_string(const Partition& lambda);
// Cycle type of a permutation given as images, sorted descending.
Partition cycle_type(const std::vector<int>& permutation);

}  // namespace liechar
