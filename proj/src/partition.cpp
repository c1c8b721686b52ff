#include "klcellkit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace klck {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<size_t>(parts_[0]));
  for (int j = 0; j < parts_[0]; ++j)
    c[static_cast<size_t>(j)] =
        static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p > j; }));
  return Partition(std::move(c));
}

unsigned long long Partition::hook_count() const {
  // n! / prod of hook lengths; division is exact, done incrementally to stay in range.
  const auto conj = conjugate().parts();
  const int n = size();
  std::vector<unsigned long long> hooks;
  for (size_t r = 0; r < parts_.size(); ++r)
    for (int c = 0; c < parts_[r]; ++c) {
      int arm = parts_[r] - c - 1;
      int leg = conj[static_cast<size_t>(c)] - static_cast<int>(r) - 1;
      hooks.push_back(static_cast<unsigned long long>(arm + leg + 1));
    }
  unsigned long long num = 1, acc = 1;
  size_t hi = 0;
  for (int k = 1; k <= n; ++k) {
    num *= static_cast<unsigned long long>(k);
    while (hi < hooks.size() && num % hooks[hi] == 0) { num /= hooks[hi]; ++hi; }
  }
  for (; hi < hooks.size(); ++hi) {
    if (num % hooks[hi] != 0) throw std::logic_error("hook product does not divide n!");
    num /= hooks[hi];
  }
  acc = num;
  return acc;
}

long long Partition::a_value() const {
  long long a = 0;
  for (int c : conjugate().parts()) a += static_cast<long long>(c) * (c - 1) / 2;
  return a;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance compares partitions of equal size");
  const auto &pa = a.parts(), &pb = b.parts();
  long long sa = 0, sb = 0;
  size_t k = std::max(pa.size(), pb.size());
  for (size_t i = 0; i < k; ++i) {
    sa += i < pa.size() ? pa[i] : 0;
    sb += i < pb.size() ? pb[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

namespace {
void gen_parts(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) { out.emplace_back(cur); return; }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(n - p, p, cur, out);
    cur.pop_back();
  }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_parts(n, n, cur, out);
  return out;
}

std::vector<std::pair<Partition, Partition>> dominance_hasse(int n) {
  auto all = partitions_of(n);
  std::vector<std::pair<Partition, Partition>> edges;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a == b || !dominance_leq(a, b)) continue;
      bool cover = true;
      for (const auto& c : all) {
        if (c == a || c == b) continue;
        if (dominance_leq(a, c) && dominance_leq(c, b)) { cover = false; break; }
      }
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

} // namespace klck
