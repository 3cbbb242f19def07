#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, compositions and cell statistics.
 *
 * Diagrams are French: row 0 is the bottom row and has length parts[0].
 */

#include "parkqt/laurent.hpp"

#include <string>
#include <vector>

namespace parkqt {

/// Weakly decreasing positive parts. The empty vector is the empty partition.
using Partition = std::vector<int>;
/// Ordered positive parts.
using Composition = std::vector<int>;

int size(const std::vector<int>& parts);
bool is_partition(const std::vector<int>& parts);
bool is_composition(const std::vector<int>& parts);

/// Total order used for every partition-keyed map: size ascending, then
/// lexicographically descending ((3) before (2,1) before (1,1,1)).
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n, lexicographically descending.
const std::vector<Partition>& partitions(int n);
/// All compositions of n in lexicographic order; compositions(0) = {()}.
std::vector<Composition> compositions(int n);
std::vector<Composition> compositions(int n, int k);

Partition conjugate(const Partition& mu);
/// a >= b in dominance order (equal sizes assumed).
bool dominates(const Partition& a, const Partition& b);
/// n(mu) = sum (i-1) mu_i.
int n_stat(const Partition& mu);
/// z_mu = prod i^{m_i} m_i!.
BigInt z_coef(const Partition& mu);
/// (-1)^{|mu| - l(mu)}.
int sign_eps(const Partition& mu);
/// m_i(mu) for i = 0..max part (index 0 unused).
std::vector<int> multiplicities(const Partition& mu);
/// Union of parts, re-sorted.
Partition merge(const Partition& a, const Partition& b);

struct CellStats {
  int row = 0;
  int col = 0;
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;
};

std::vector<CellStats> cell_stats(const Partition& mu);

/// Partitions obtained by adding one cell (mu <- nu).
std::vector<Partition> add_corner(const Partition& nu);
/// Partitions obtained by removing one corner (nu -> mu).
std::vector<Partition> remove_corner(const Partition& mu);

/// "[3,2]"; the empty partition is "[]".
std::string to_string(const std::vector<int>& parts);
/// Parses "3,2", "[3,2]" or "3 2". Throws std::invalid_argument.
std::vector<int> parse_parts(const std::string& text);

}  // namespace parkqt
