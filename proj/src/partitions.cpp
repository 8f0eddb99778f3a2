#include "liechar/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "liechar/errors.hpp"

namespace liechar {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate_partition(const Partition& lambda) {
  Partition c;
  if (lambda.empty()) return c;
  for (int j = 1; j <= lambda.front(); ++j) {
    int count = 0;
    for (int part : lambda) count += part >= j;
    c.push_back(count);
  }
  return c;
}

int partition_size(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

int partition_n(const Partition& lambda) {
  int s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<int>(i) * lambda[i];
  return s;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  Partition c = conjugate_partition(lambda);
  std::vector<int> h;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) h.push_back(lambda[i] - j - 1 + c[static_cast<std::size_t>(j)] - static_cast<int>(i));
  return h;
}

Integer centralizer_size(const Partition& mu) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int part : mu) {
    z *= part;
    ++mult[part];
  }
  for (const auto& [part, m] : mult)
    for (int i = 2; i <= m; ++i) z *= i;
  return z;
}

namespace {

// Removes rim hooks of length r from the diagram given by beta numbers.
long mn_rec(std::vector<int> beta, const Partition& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;
  int r = mu[idx];
  long total = 0;
  std::sort(beta.begin(), beta.end());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i] - r;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    // sign: number of beta numbers strictly between b and beta[i]
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++between;
    std::vector<int> next = beta;
    next[i] = b;
    long sub = mn_rec(next, mu, idx + 1);
    total += (between % 2 ? -1 : 1) * sub;
  }
  return total;
}

}  // namespace

long sn_character(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu)) throw InvalidArgument("partitions of different sizes");
  int len = static_cast<int>(lambda.size());
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + len - 1 - i);
  return mn_rec(beta, mu, 0);
}

Integer unipotent_degree(const Partition& lambda, long q) {
  int m = partition_size(lambda);
  Integer num = 1, den = 1;
  Integer qi = 1;
  for (int i = 1; i <= m; ++i) {
    qi *= q;
    num *= qi - 1;
  }
  for (int h : hook_lengths(lambda)) {
    Integer qh = 1;
    for (int i = 0; i < h; ++i) qh *= q;
    den *= qh - 1;
  }
  for (int i = 0; i < partition_n(lambda); ++i) num *= q;
  if (num % den != 0) throw InconsistentData("unipotent degree is not integral");
  return num / den;
}

std::string partition_string(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + std::to_string(lambda[i]);
  return s + ")";
}

Partition cycle_type(const std::vector<int>& permutation) {
  std::vector<char> seen(permutation.size(), 0);
  Partition mu;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(permutation[j])) {
      seen[j] = 1;
      ++len;
    }
    mu.push_back(len);
  }
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

}  // namespace liechar
