// Abaci on t rods, extended t-residue lists, the partition <-> list
// bijection, top-justification t-core criterion, canonical rotation, the
// six families of self-conjugate 7-core abaci, and lattice-count kernels
// for c_t(n) and sc_t(n).
#pragma once

#include <array>
#include <vector>

#include "coreforms/partitions.hpp"

namespace coreforms::abacus {

using partitions::Partition;

// Bead counts per column. For a t-core the beads in column j occupy rows
// 1..m_j (top-justified), so counts determine the abacus completely.
// Canonical representatives have m_0 = 0.
struct Abacus {
  long long t = 0;
  std::vector<long long> counts;

  long long total_beads() const;
  bool operator==(const Abacus& o) const = default;
};

// The integer list N = [n_0,...,n_{t-1}] attached to the extended t-residue
// diagram; entries sum to zero.
struct ResidueList {
  long long t = 0;
  std::vector<long long> entries;

  long long sum() const;
  // t|N|^2/2 + B.N  with  B = [0,1,...,t-1]
  long long size() const;
  bool antisymmetric() const;  // n_l == -n_{t-1-l} for all l
  bool operator==(const ResidueList& o) const = default;
};

// Structure numbers B_j = lambda_j - j + s, strictly decreasing, >= 0.
std::vector<long long> structure_numbers(const Partition& p);

// Bead positions on t rods: the multiset {B_j}. Exposed for the
// top-justification criterion below.
std::vector<long long> bead_positions(const Partition& p, long long t);

// Abacus criterion for t-cores: every bead B >= t has the bead B - t
// directly above it, i.e. all columns are top-justified. Independent of the
// hook-length predicate in the partitions module; the two are cross-checked
// in tests.
bool is_t_core_abacus(const Partition& p, long long t);

// Column-count abacus of p, reduced to canonical form (m_0 = 0). Building
// from positive parts alone already gives m_0 = 0 for t-cores.
Abacus abacus_from_partition(const Partition& p, long long t);

// (m_0,...,m_{t-1}) -> (m_{t-1}+1, m_0,...,m_{t-2}); partition-preserving
// padding with one zero part.
Abacus rotate(const Abacus& a);
// Inverse of rotate; requires m_0 >= 1.
Abacus rotate_inverse(const Abacus& a);
// Apply rotate_inverse until m_0 = 0.
Abacus canonicalize(Abacus a);

// Decode a (top-justified) count abacus back to its partition.
Partition partition_from_abacus(const Abacus& a);

// Region-of-exposed-cells construction of the list. Requires is_t_core.
// Column 0 takes part through the exposed cells of the empty rows below the
// diagram, which expose every residue class at arbitrarily low regions.
ResidueList list_from_partition(const Partition& p, long long t);

// Inverse map, via the abacus with column l holding n_l + K beads for a
// large shift K (corresponding to s = tK appended zero parts), then
// canonical reduction. Requires sum(N) = 0.
Partition partition_from_list(const ResidueList& N);

// Number of lists N with sum 0 and size n: equals c_t(n).
long long count_t_cores_lattice(long long n, long long t);
// Same restricted to antisymmetric lists: equals sc_t(n).
long long count_sc_t_cores_lattice(long long n, long long t);

// The six families of self-conjugate 7-core abaci, parametrised by
// non-negative (a, b, r). The family type fixes s mod 7 (s = 4 mod 7 never
// occurs for self-conjugate 7-cores).
enum class ScFamilyType { I, II, III, IV, V, VI };

struct ScAbacusFamily {
  ScFamilyType type;
  long long a = 0, b = 0, r = 0;
  bool operator==(const ScAbacusFamily& o) const = default;
};

// Column counts of the family instance (first entry always 0).
Abacus family_abacus(const ScAbacusFamily& fam);
// Parameter ranges keeping all columns non-negative.
bool family_params_valid(const ScAbacusFamily& fam);
Partition family_partition(const ScAbacusFamily& fam);

// x^2 + y^2 + z^2 = 7n + 14 with no coordinate divisible by 7; one fixed
// formula per type.
std::array<long long, 3> family_to_triple(const ScAbacusFamily& fam);

// All family instances whose partition has size n; jointly in bijection
// with the self-conjugate 7-cores of n.
std::vector<ScAbacusFamily> sc7_families(long long n);

// Free coordinates of an antisymmetric 7-core list mapped to the triple
// (7n0 - 3, 7n1 - 2, 7n2 - 1) of norm 7n + 14. Requires t = 7 and
// antisymmetry.
std::array<long long, 3> sc7_triple_from_list(const ResidueList& N);

}  // namespace coreforms::abacus
