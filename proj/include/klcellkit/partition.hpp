#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace klck {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const;                       // sum of parts
  const std::vector<int>& parts() const { return parts_; }
  Partition conjugate() const;
  /// Number of standard Young tableaux of this shape (hook length formula).
  unsigned long long hook_count() const;
  /// sum_i binom(conjugate_i, 2); the a-value of the corresponding cell.
  long long a_value() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;  // "(3,2,1)"

private:
  std::vector<int> parts_;
};

/// Dominance order: a <= b iff partial sums of a never exceed... precisely,
/// sum_{i<=k} a_i <= sum_{i<=k} b_i for all k. Requires |a| = |b|.
bool dominance_leq(const Partition& a, const Partition& b);

/// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

/// Covering pairs (a, b) with a < b in dominance and nothing strictly between.
std::vector<std::pair<Partition, Partition>> dominance_hasse(int n);

} // namespace klck
