#include "coreforms/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coreforms::partitions {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    if (parts_[i] == 0)
      throw std::invalid_argument("Partition: interior zero part");
  }
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition conjugate(const Partition& p) {
  const auto& a = p.parts();
  if (a.empty()) return Partition{};
  std::vector<long long> cols(static_cast<size_t>(a[0]), 0);
  for (long long k = 1; k <= a[0]; ++k) {
    long long cnt = 0;
    for (long long part : a) {
      if (part >= k)
        ++cnt;
      else
        break;
    }
    cols[static_cast<size_t>(k - 1)] = cnt;
  }
  return Partition{std::move(cols)};
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

HookTable hook_table(const Partition& p) {
  const auto& a = p.parts();
  Partition conj = conjugate(p);
  const auto& ac = conj.parts();
  HookTable t;
  t.rows.resize(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    t.rows[j].resize(static_cast<size_t>(a[j]));
    for (long long k = 1; k <= a[j]; ++k)
      t.rows[j][static_cast<size_t>(k - 1)] =
          a[j] + ac[static_cast<size_t>(k - 1)] - k - static_cast<long long>(j + 1) + 1;
  }
  return t;
}

bool is_t_core(const Partition& p, long long t) {
  if (t < 1) throw std::invalid_argument("is_t_core: t must be >= 1");
  const auto& a = p.parts();
  if (a.empty()) return true;
  // column counts once, then scan cells with early exit
  std::vector<long long> cols(static_cast<size_t>(a[0]), 0);
  for (long long part : a)
    for (long long k = 0; k < part; ++k) ++cols[static_cast<size_t>(k)];
  for (size_t j = 0; j < a.size(); ++j)
    for (long long k = 1; k <= a[j]; ++k) {
      long long h = a[j] + cols[static_cast<size_t>(k - 1)] - k -
                    static_cast<long long>(j + 1) + 1;
      if (h % t == 0) return false;
    }
  return true;
}

void for_each_partition(long long n,
                        const std::function<void(const std::vector<long long>&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
  std::vector<long long> a;
  if (n == 0) {
    fn(a);
    return;
  }
  a.push_back(n);
  for (;;) {
    fn(a);
    // next partition in descending lexicographic order
    long long rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) return;
    a.back() -= 1;
    ++rem;
    long long v = a.back();
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    if (rem > 0) a.push_back(rem);
  }
}

std::vector<Partition> enumerate_partitions(long long n, long long bound) {
  if (n > bound)
    throw std::invalid_argument(
        "enumerate_partitions: n exceeds the oracle bound");
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<long long>& a) {
    out.emplace_back(Partition{a});
  });
  return out;
}

namespace {

bool parts_self_conjugate(const std::vector<long long>& a) {
  if (a.empty()) return true;
  for (size_t k = 1; k <= static_cast<size_t>(a[0]); ++k) {
    long long col = 0;
    for (long long part : a) {
      if (part >= static_cast<long long>(k))
        ++col;
      else
        break;
    }
    if (k > a.size()) return false;
    if (col != a[k - 1]) return false;
  }
  return true;
}

bool parts_t_core(const std::vector<long long>& a, long long t,
                  std::vector<long long>& cols_scratch) {
  if (a.empty()) return true;
  cols_scratch.assign(static_cast<size_t>(a[0]), 0);
  for (long long part : a)
    for (long long k = 0; k < part; ++k) ++cols_scratch[static_cast<size_t>(k)];
  for (size_t j = 0; j < a.size(); ++j)
    for (long long k = 1; k <= a[j]; ++k) {
      long long h = a[j] + cols_scratch[static_cast<size_t>(k - 1)] - k -
                    static_cast<long long>(j + 1) + 1;
      if (h % t == 0) return false;
    }
  return true;
}

}  // namespace

long long count_t_cores_brute(long long n, long long t, long long bound) {
  if (t < 1) throw std::invalid_argument("count_t_cores_brute: t must be >= 1");
  if (n > bound)
    throw std::invalid_argument("count_t_cores_brute: n exceeds the oracle bound");
  long long count = 0;
  std::vector<long long> scratch;
  for_each_partition(n, [&](const std::vector<long long>& a) {
    if (parts_t_core(a, t, scratch)) ++count;
  });
  return count;
}

long long count_sc_t_cores_brute(long long n, long long t, long long bound) {
  if (t < 1)
    throw std::invalid_argument("count_sc_t_cores_brute: t must be >= 1");
  if (n > bound)
    throw std::invalid_argument(
        "count_sc_t_cores_brute: n exceeds the oracle bound");
  long long count = 0;
  std::vector<long long> scratch;
  for_each_partition(n, [&](const std::vector<long long>& a) {
    if (parts_self_conjugate(a) && parts_t_core(a, t, scratch)) ++count;
  });
  return count;
}

std::vector<long long> partition_numbers(long long max_n) {
  std::vector<long long> p(static_cast<size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (long long n = 1; n <= max_n; ++n) {
    long long sum = 0;
    for (long long j = 1;; ++j) {
      long long g1 = j * (3 * j - 1) / 2;
      long long g2 = j * (3 * j + 1) / 2;
      if (g1 > n && g2 > n) break;
      long long sign = (j % 2 == 1) ? 1 : -1;
      if (g1 <= n) sum += sign * p[static_cast<size_t>(n - g1)];
      if (g2 <= n) sum += sign * p[static_cast<size_t>(n - g2)];
    }
    p[static_cast<size_t>(n)] = sum;
  }
  return p;
}

}  // namespace coreforms::partitions
