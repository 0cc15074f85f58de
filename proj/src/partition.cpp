#include "modnet/partition.hpp"

#include <numeric>

#include "modnet/errors.hpp"

namespace modnet {

Partition::Partition(std::vector<int> assignment)
    : assignment_(std::move(assignment)) {
  // Renumber labels by first appearance; any input labelling is accepted.
  std::vector<int> remap;
  for (int& a : assignment_) {
    if (a < 0) throw DomainError("negative part index");
    if (a >= static_cast<int>(remap.size())) remap.resize(a + 1, -1);
    if (remap[a] == -1) remap[a] = parts_++;
    a = remap[a];
  }
}

Partition Partition::trivial(int n) {
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::singletons(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  return Partition(std::move(a));
}

std::vector<std::vector<int>> Partition::groups() const {
  std::vector<std::vector<int>> out(parts_);
  for (int v = 0; v < size(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

}  // namespace modnet
