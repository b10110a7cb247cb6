#include "cohwork/group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cohwork {

namespace {

void check_table(const std::string &name,
                 const std::vector<std::vector<int>> &t) {
  int n = static_cast<int>(t.size());
  if (n == 0)
    throw std::invalid_argument("group " + name + ": empty table");
  for (const auto &row : t) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group " + name + ": ragged table");
    for (int x : row)
      if (x < 0 || x >= n)
        throw std::invalid_argument("group " + name + ": entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (t[0][static_cast<size_t>(a)] != a || t[static_cast<size_t>(a)][0] != a)
      throw std::invalid_argument("group " + name +
                                  ": index 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        size_t sa = static_cast<size_t>(a), sb = static_cast<size_t>(b),
               sc = static_cast<size_t>(c);
        if (t[static_cast<size_t>(t[sa][sb])][sc] !=
            t[sa][static_cast<size_t>(t[sb][sc])])
          throw std::invalid_argument("group " + name + ": not associative");
      }
}

} // namespace

FinGroup::FinGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  check_table(name_, table_);
  int n = order();
  inv_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[static_cast<size_t>(a)] = b;
        break;
      }
    if (inv_[static_cast<size_t>(a)] < 0)
      throw std::invalid_argument("group " + name_ + ": element " +
                                  std::to_string(a) + " has no inverse");
  }
}

FinGroup FinGroup::cyclic(int n) {
  if (n < 1)
    throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<int>> t(static_cast<size_t>(n),
                                  std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return FinGroup("C" + std::to_string(n), std::move(t));
}

FinGroup FinGroup::klein4() {
  // index = 2a + b for (a, b) in Z/2 x Z/2
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      t[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          (((x >> 1) ^ (y >> 1)) << 1) | ((x ^ y) & 1);
  return FinGroup("C2xC2", std::move(t));
}

FinGroup FinGroup::symmetric3() {
  // Permutations of {0,1,2} in lexicographic one-line order, so the
  // identity lands at index 0.
  std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                              {0, 2, 1},
                                              {1, 0, 2},
                                              {1, 2, 0},
                                              {2, 0, 1},
                                              {2, 1, 0}}};
  auto find = [&](const std::array<int, 3> &p) {
    for (int i = 0; i < 6; ++i)
      if (perms[static_cast<size_t>(i)] == p)
        return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int i = 0; i < 3; ++i)
        c[static_cast<size_t>(i)] = perms[static_cast<size_t>(
            a)][static_cast<size_t>(perms[static_cast<size_t>(
            b)][static_cast<size_t>(i)])];
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = find(c);
    }
  return FinGroup("S3", std::move(t));
}

FinGroup FinGroup::dihedral4() {
  // r^i s^j with i mod 4, j mod 2, index = i + 4j; s r^a = r^{-a} s.
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j & 1); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b) {
          int left = idx(i, j);
          int right = idx(a, b);
          int prod = j == 0 ? idx(i + a, b) : idx(i - a, 1 + b);
          t[static_cast<size_t>(left)][static_cast<size_t>(right)] = prod;
        }
  return FinGroup("D4", std::move(t));
}

FinGroup FinGroup::quaternion8() {
  // 1, -1, i, -i, j, -j, k, -k; index = 2*axis + sign with axes 1,i,j,k.
  static const int axis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a >> 1, bx = b >> 1;
      int s = (a & 1) ^ (b & 1) ^ sign[ax][bx];
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = 2 * axis[ax][bx] + s;
    }
  return FinGroup("Q8", std::move(t));
}

const std::vector<FinGroup> &FinGroup::catalog() {
  static const std::vector<FinGroup> groups = {
      cyclic(1), cyclic(2),     cyclic(3),  cyclic(4),    klein4(),
      cyclic(6), cyclic(8),     symmetric3(), dihedral4(), quaternion8()};
  return groups;
}

const FinGroup &FinGroup::by_name(const std::string &name) {
  for (const auto &g : catalog())
    if (g.name() == name)
      return g;
  throw std::invalid_argument("unknown group: " + name);
}

std::vector<std::vector<int>> FinGroup::all_subgroups() const {
  int n = order();
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask < (1u << n); mask += 2) { // identity always in
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1))
        continue;
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> b & 1) && !(mask >> mul(a, b) & 1))
          closed = false;
    }
    if (!closed)
      continue;
    std::vector<int> elems;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1)
        elems.push_back(a);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int> &a, const std::vector<int> &b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a < b;
            });
  return out;
}

int SubgroupData::from_parent(int p) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == p)
      return static_cast<int>(i);
  return -1;
}

SubgroupData subgroup_from(const FinGroup &g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0 || elems.back() >= g.order())
    throw std::invalid_argument("subgroup_from: need identity and elements "
                                "inside the parent group");
  auto pos = [&](int p) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == p)
        return static_cast<int>(i);
    return -1;
  };
  size_t h = elems.size();
  std::vector<std::vector<int>> t(h, std::vector<int>(h));
  for (size_t a = 0; a < h; ++a)
    for (size_t b = 0; b < h; ++b) {
      int p = pos(g.mul(elems[a], elems[b]));
      if (p < 0)
        throw std::invalid_argument("subgroup_from: set is not closed");
      t[a][b] = p;
    }
  std::string name = g.name() + "[";
  for (size_t i = 0; i < elems.size(); ++i)
    name += (i ? "," : "") + std::to_string(elems[i]);
  name += "]";
  return SubgroupData{FinGroup(std::move(name), std::move(t)),
                      std::move(elems)};
}

Character::Character(FinGroup g, Ring R, std::vector<uint32_t> values)
    : g_(std::move(g)), R_(R), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != g_.order())
    throw std::invalid_argument("character: wrong number of values");
  for (auto &v : values_) {
    v = R_.reduce(v);
    if (!R_.is_unit(v))
      throw std::invalid_argument("character: values must be odd units");
  }
  for (int a = 0; a < g_.order(); ++a)
    for (int b = 0; b < g_.order(); ++b)
      if (R_.mul(value(a), value(b)) != value(g_.mul(a, b)))
        throw std::invalid_argument("character: not multiplicative");
}

Character Character::trivial(FinGroup g, Ring R) {
  std::vector<uint32_t> vals(static_cast<size_t>(g.order()), 1u);
  return Character(std::move(g), R, std::move(vals));
}

uint32_t Character::power(int g, long long i) const {
  uint32_t base = value(g);
  if (i < 0) {
    base = R_.inv_unit(base);
    i = -i;
  }
  uint32_t out = 1;
  while (i > 0) {
    if (i & 1)
      out = R_.mul(out, base);
    base = R_.mul(base, base);
    i >>= 1;
  }
  return out;
}

} // namespace cohwork
