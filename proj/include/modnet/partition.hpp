#pragma once

#include <vector>

namespace modnet {

// Surjective map vertex -> part index with non-empty parts.  Stored in
// canonical form: parts are numbered by first appearance in vertex-id order,
// so equal partitions compare equal bit for bit.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> assignment);

  static Partition trivial(int n);
  static Partition singletons(int n);

  int size() const { return static_cast<int>(assignment_.size()); }
  int parts() const { return parts_; }
  int part_of(int v) const { return assignment_[v]; }
  const std::vector<int>& assignment() const { return assignment_; }

  // Vertices of each part, in increasing vertex order.
  std::vector<std::vector<int>> groups() const;

  bool operator==(const Partition&) const = default;
  // Lexicographic order on the canonical assignment vector.
  bool operator<(const Partition& other) const {
    return assignment_ < other.assignment_;
  }

 private:
  std::vector<int> assignment_;
  int parts_ = 0;
};

}  // namespace modnet
