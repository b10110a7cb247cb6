#include "cohwork/staircase.hpp"

#include <deque>

namespace cohwork {

namespace {

// Reduction scratch: a dense accumulator walked by a forward scan pointer.
// Pivot tails only touch rows past their own lead, so positions are consumed
// in one monotone pass; a live counter tells the scan when to stop.  Every
// position is zeroed again as it is consumed or drained, so the buffer stays
// clean between queue items.
struct Acc {
  std::vector<uint32_t>& d;
  int live = 0;
  int32_t pos = 0;

  void scatter(const SparseVec& v) {
    for (auto [i, x] : v.e) d[size_t(i)] = x;
    live = static_cast<int>(v.e.size());
    pos = v.e.front().first;
  }

  // Smallest position still holding a nonzero, or -1 when exhausted.
  int32_t next_live() {
    if (live == 0) return -1;
    while (d[size_t(pos)] == 0) ++pos;
    return pos;
  }

  void consume(int32_t i) {
    d[size_t(i)] = 0;
    --live;
  }

  // d += c * tail(p); the caller has already dealt with the lead.
  void axpy_tail(const Ring& R, uint32_t c, const SparseVec& p) {
    for (size_t t = 1; t < p.e.size(); ++t) {
      auto [j, x] = p.e[t];
      uint32_t before = d[size_t(j)];
      uint32_t after = R.add(before, R.mul(c, x));
      d[size_t(j)] = after;
      live += static_cast<int>(after != 0) - static_cast<int>(before != 0);
    }
  }

  // Collect everything left in the accumulator into a sorted sparse vector,
  // zeroing the scratch.
  SparseVec drain() {
    SparseVec w;
    while (live > 0) {
      while (d[size_t(pos)] == 0) ++pos;
      w.e.emplace_back(pos, d[size_t(pos)]);
      consume(pos);
      ++pos;
    }
    return w;
  }
};

}  // namespace

void Staircase::insert(SparseVec v0) {
  if (v0.empty()) return;
  if (den_.size() < size_t(dim_)) den_.assign(size_t(dim_), 0);
  Acc acc{den_};
  std::deque<SparseVec> queue;
  queue.push_back(std::move(v0));
  while (!queue.empty()) {
    if (queue.front().empty()) {  // a Howell closure can scale away entirely
      queue.pop_front();
      continue;
    }
    acc.scatter(queue.front());
    queue.pop_front();
    for (int32_t i; (i = acc.next_live()) >= 0;) {
      uint32_t lead = den_[size_t(i)];
      int a = R_.val(lead);
      auto it = cols_.find(i);
      if (it == cols_.end()) {
        // New pivot: normalize the leading entry to an exact power of 2 and
        // enqueue the annihilator multiple (Howell closure).
        SparseVec v = acc.drain();
        if (R_.unit_part(lead) != 1)
          v = sv_scale(R_, R_.inv_unit(R_.unit_part(lead)), v);
        if (a > 0) queue.push_back(sv_scale(R_, R_.pow2(R_.k() - a), v));
        cols_.emplace(i, std::move(v));
        canonical_ = false;
        break;
      }
      int b = R_.val(it->second.lead_value());
      if (a >= b) {
        // Pivot lead is an exact power of 2, so the quotient cancels the
        // accumulator entry exactly; only the tail needs the axpy.
        uint32_t q = R_.neg(R_.div_exact(lead, it->second.lead_value()));
        acc.consume(i);
        acc.axpy_tail(R_, q, it->second);
      } else {
        // Incoming vector has a strictly smaller pivot valuation: swap it in,
        // then keep reducing the displaced column.
        SparseVec v = acc.drain();
        if (R_.unit_part(lead) != 1)
          v = sv_scale(R_, R_.inv_unit(R_.unit_part(lead)), v);
        std::swap(it->second, v);
        if (a > 0) queue.push_back(sv_scale(R_, R_.pow2(R_.k() - a), it->second));
        canonical_ = false;
        queue.push_back(std::move(v));
        break;
      }
    }
  }
}

SparseVec Staircase::reduce(SparseVec v) const {
  if (v.empty()) return v;
  if (den_.size() < size_t(dim_)) den_.assign(size_t(dim_), 0);
  Acc acc{den_};
  acc.scatter(v);
  SparseVec out;
  for (int32_t i; (i = acc.next_live()) >= 0;) {
    uint32_t x = den_[size_t(i)];
    acc.consume(i);
    auto it = cols_.find(i);
    if (it == cols_.end()) {
      out.e.emplace_back(i, x);
      continue;
    }
    uint32_t piv = it->second.lead_value();  // exact power of 2
    uint32_t q = x >> R_.val(piv);
    if (q != 0) acc.axpy_tail(R_, R_.neg(q), it->second);
    uint32_t rem = R_.add(x, R_.mul(R_.neg(q), piv));
    // An entry of valuation below the pivot stays in the residual.
    if (rem != 0) out.e.emplace_back(i, rem);
  }
  return out;
}

void Staircase::canonicalize() {
  if (canonical_) return;
  // Reducing a tail only touches rows after the column's own lead, and the
  // residual of a coset is unique, so one reduce per column suffices.
  for (auto& [row, col] : cols_) {
    if (col.e.size() == 1) continue;
    SparseVec tail;
    tail.e.assign(col.e.begin() + 1, col.e.end());
    SparseVec red = reduce(std::move(tail));
    col.e.resize(1);
    col.e.insert(col.e.end(), red.e.begin(), red.e.end());
  }
  canonical_ = true;
}

int64_t Staircase::size_log2() const {
  int64_t s = 0;
  for (const auto& [row, col] : cols_) s += R_.k() - R_.val(col.lead_value());
  return s;
}

bool Staircase::same_lattice(const Staircase& other) const {
  if (dim_ != other.dim_) return false;
  if (size_log2() != other.size_log2()) return false;
  for (const auto& [row, col] : cols_)
    if (!other.contains(col)) return false;
  return true;
}

std::vector<SparseVec> Staircase::columns() const {
  std::vector<SparseVec> out;
  out.reserve(cols_.size());
  for (const auto& [row, col] : cols_) out.push_back(col);
  return out;
}

LinearSystem::LinearSystem(const Ring& R, const SpMat& a)
    : R_(R), rows_(a.rows), cols_(a.cols), st_(R, a.rows + a.cols) {
  for (int j = 0; j < a.cols; ++j) {
    SparseVec v = a.col[size_t(j)];
    v.e.emplace_back(a.rows + j, 1u);
    st_.insert(std::move(v));
  }
  // Columns whose pivot lies in the tracking block have zero top part; their
  // bottom parts generate the kernel (the Howell closure makes this a full
  // generating set).
  for (const auto& [row, col] : st_.pivots()) {
    if (row < rows_) continue;
    SparseVec x;
    for (auto [i, v] : col.e) x.e.emplace_back(i - rows_, v);
    kernel_.push_back(std::move(x));
  }
}

std::optional<SparseVec> LinearSystem::solve(const SparseVec& b) const {
  SparseVec res = st_.reduce(b);
  if (!res.empty() && res.lead_index() < rows_) return std::nullopt;
  // b - (A x, x) reduced to (0, -x): negate the tracking block.
  SparseVec x;
  for (auto [i, v] : res.e) x.e.emplace_back(i - rows_, R_.neg(v));
  return x;
}

bool LinearSystem::in_image(const SparseVec& b) const { return solve(b).has_value(); }

}  // namespace cohwork
