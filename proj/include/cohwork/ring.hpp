#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace cohwork {

/// Arithmetic in Z/2^k. Values are canonical representatives in [0, 2^k).
/// k is capped at 16 so products fit comfortably in 64 bits and valuations
/// stay cheap to compute.
class Ring {
 public:
  explicit Ring(int k) : k_(k) {
    if (k < 1 || k > 16) throw std::invalid_argument("ring exponent k must be in [1,16]");
    mod_ = uint32_t{1} << k;
    mask_ = mod_ - 1;
  }

  int k() const { return k_; }
  uint32_t mod() const { return mod_; }

  uint32_t reduce(int64_t x) const {
    int64_t r = x & int64_t{mask_};
    return static_cast<uint32_t>(r);
  }
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) & mask_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a - b) & mask_; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t{a} * b) & mask_);
  }
  uint32_t neg(uint32_t a) const { return (mod_ - a) & mask_; }

  /// 2-adic valuation; val(0) = k by convention.
  int val(uint32_t x) const {
    if (x == 0) return k_;
    int v = 0;
    while ((x & 1u) == 0) { x >>= 1; ++v; }
    return v;
  }

  bool is_unit(uint32_t x) const { return (x & 1u) != 0; }

  uint32_t unit_part(uint32_t x) const {
    assert(x != 0);
    return x >> val(x);
  }

  /// Inverse of an odd residue (Newton iteration doubles correct bits).
  uint32_t inv_unit(uint32_t u) const {
    if (!is_unit(u)) throw std::invalid_argument("inv_unit: not a unit");
    uint32_t x = 1;
    for (int i = 0; i < 5; ++i) x = reduce(int64_t{x} * (2 - int64_t(mul(u, x))));
    assert(mul(u, x) == 1);
    return x;
  }

  uint32_t pow2(int a) const { return a >= k_ ? 0u : (uint32_t{1} << a); }

  /// True when a divides b in Z/2^k (valuation comparison).
  bool divides(uint32_t a, uint32_t b) const { return val(a) <= val(b); }

  /// Quotient b / a for val(a) <= val(b).  Well-defined modulo 2^(k - val a),
  /// which is all callers ever use it for (the quotient is multiplied back by
  /// a multiple of a).
  uint32_t div_exact(uint32_t b, uint32_t a) const {
    if (b == 0) return 0;
    int va = val(a);
    assert(va <= val(b));
    return mul(b >> va, inv_unit(a >> va));
  }

  bool operator==(const Ring& o) const { return k_ == o.k_; }

 private:
  int k_;
  uint32_t mod_;
  uint32_t mask_;
};

}  // namespace cohwork
