#pragma once

#include "ring.hpp"

#include <string>
#include <vector>

namespace cohwork {

// Finite group as a multiplication table over element indices; index 0 is
// the identity.  Associativity, identity and inverses are checked at
// construction.
class FinGroup {
public:
  FinGroup(std::string name, std::vector<std::vector<int>> table);

  static FinGroup cyclic(int n); // C1 .. C8
  static FinGroup klein4();
  static FinGroup symmetric3();
  static FinGroup dihedral4();
  static FinGroup quaternion8();
  // C1, C2, C3, C4, C2xC2, C6, C8, S3, D4, Q8.
  static const std::vector<FinGroup> &catalog();
  static const FinGroup &by_name(const std::string &name);

  const std::string &name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const {
    return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  bool same_table(const FinGroup &other) const {
    return table_ == other.table_;
  }

  // Ascending element lists of every subgroup, smallest first.
  std::vector<std::vector<int>> all_subgroups() const;

private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

// A subgroup re-indexed as a group of its own: elems[i] is the parent
// index of element i, with elems[0] = 0.
struct SubgroupData {
  FinGroup group;
  std::vector<int> elems;

  int to_parent(int i) const { return elems[static_cast<size_t>(i)]; }
  // -1 when the parent element is outside the subgroup.
  int from_parent(int p) const;
};
SubgroupData subgroup_from(const FinGroup &g, std::vector<int> elems);

// Character with values in the units of Z/2^k; multiplicativity and
// oddness checked.
class Character {
public:
  Character(FinGroup g, Ring R, std::vector<uint32_t> values);
  static Character trivial(FinGroup g, Ring R);

  const FinGroup &group() const { return g_; }
  const Ring &ring() const { return R_; }
  uint32_t value(int g) const { return values_[static_cast<size_t>(g)]; }
  uint32_t power(int g, long long i) const; // chi(g)^i, any sign of i

private:
  FinGroup g_;
  Ring R_;
  std::vector<uint32_t> values_;
};

} // namespace cohwork
