// Integer partitions, Ferrers-Young hook lengths, t-core and self-conjugacy
// predicates, and exhaustive oracle counts. This layer is the ground truth
// the faster counting routes are tested against, so it stays deliberately
// simple: everything is computed straight from the definitions.
#pragma once

#include <functional>
#include <vector>

namespace coreforms::partitions {

// A partition: weakly decreasing positive parts. Trailing zero parts are
// stripped on construction; all formulas downstream are insensitive to them.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  long long size() const;  // sum of parts
  long long num_parts() const { return static_cast<long long>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<long long> parts_;
};

// Hook lengths h(j,k) = lambda_j + lambda'_k - k - j + 1 over the diagram,
// rows/cells 1-indexed.
struct HookTable {
  std::vector<std::vector<long long>> rows;
  long long at(long long j, long long k) const { return rows[j - 1][k - 1]; }
};

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);
HookTable hook_table(const Partition& p);

// True iff t divides no hook length. Requires t >= 1.
bool is_t_core(const Partition& p, long long t);

// Calls fn once per partition of n, parts in weakly decreasing order,
// descending lexicographic enumeration order. The buffer passed to fn is
// reused between calls.
void for_each_partition(long long n,
                        const std::function<void(const std::vector<long long>&)>& fn);

inline constexpr long long kDefaultOracleBound = 70;

// All partitions of n as objects (small n only; enumeration refuses beyond
// the oracle bound to keep this layer honest about its scale).
std::vector<Partition> enumerate_partitions(long long n,
                                            long long bound = kDefaultOracleBound);

long long count_t_cores_brute(long long n, long long t,
                              long long bound = kDefaultOracleBound);
long long count_sc_t_cores_brute(long long n, long long t,
                                 long long bound = kDefaultOracleBound);

// Classical pentagonal-number recurrence for p(n); self-check only.
std::vector<long long> partition_numbers(long long max_n);

}  // namespace coreforms::partitions
