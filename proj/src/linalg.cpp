#include "linalg.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace corner {

// ---------------------------------------------------------------- SVec

Integer SVec::get(int i) const {
  auto it = std::lower_bound(e.begin(), e.end(), i,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != e.end() && it->first == i) return it->second;
  return 0;
}

void SVec::add(int i, const Integer& v) {
  if (v != 0) e.emplace_back(i, v);
}

void SVec::normalize() {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Integer>> out;
  out.reserve(e.size());
  for (auto& p : e) {
    if (!out.empty() && out.back().first == p.first) {
      out.back().second += p.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(p));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  e = std::move(out);
}

SVec SVec::axpy(const SVec& y, const Integer& a, const SVec& x) {
  SVec r;
  if (a == 0) return y;
  r.e.reserve(y.e.size() + x.e.size());
  std::size_t i = 0, j = 0;
  while (i < y.e.size() || j < x.e.size()) {
    if (j == x.e.size() || (i < y.e.size() && y.e[i].first < x.e[j].first)) {
      r.e.push_back(y.e[i++]);
    } else if (i == y.e.size() || x.e[j].first < y.e[i].first) {
      r.e.emplace_back(x.e[j].first, a * x.e[j].second);
      ++j;
    } else {
      Integer s = y.e[i].second + a * x.e[j].second;
      if (s != 0) r.e.emplace_back(y.e[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

SVec SparseMatrix::apply(const SVec& v) const {
  SVec r;
  for (const auto& [j, a] : v.e) {
    for (const auto& [i, b] : col[j].e) r.add(i, a * b);
  }
  r.normalize();
  return r;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

// ---------------------------------------------------------------- dense

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  DenseMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Integer& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

namespace {

struct SnfWork {
  DenseMatrix& D;
  DenseMatrix* U;
  DenseMatrix* V;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < D.cols; ++j) std::swap(D.at(a, j), D.at(b, j));
    if (U)
      for (int j = 0; j < U->cols; ++j) std::swap(U->at(a, j), U->at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, a), D.at(i, b));
    if (V)
      for (int i = 0; i < V->rows; ++i) std::swap(V->at(i, a), V->at(i, b));
  }
  // row a += q * row b
  void add_row(int a, int b, const Integer& q) {
    if (q == 0) return;
    for (int j = 0; j < D.cols; ++j)
      if (D.at(b, j) != 0) D.at(a, j) += q * D.at(b, j);
    if (U)
      for (int j = 0; j < U->cols; ++j)
        if (U->at(b, j) != 0) U->at(a, j) += q * U->at(b, j);
  }
  // col a += q * col b
  void add_col(int a, int b, const Integer& q) {
    if (q == 0) return;
    for (int i = 0; i < D.rows; ++i)
      if (D.at(i, b) != 0) D.at(i, a) += q * D.at(i, b);
    if (V)
      for (int i = 0; i < V->rows; ++i)
        if (V->at(i, b) != 0) V->at(i, a) += q * V->at(i, b);
  }
  void negate_row(int a) {
    for (int j = 0; j < D.cols; ++j) D.at(a, j) = -D.at(a, j);
    if (U)
      for (int j = 0; j < U->cols; ++j) U->at(a, j) = -U->at(a, j);
  }

  void run() {
    const int r = D.rows, c = D.cols;
    for (int t = 0; t < std::min(r, c); ++t) {
      for (;;) {
        // smallest nonzero in the trailing block
        int bi = -1, bj = -1;
        Integer best;
        for (int i = t; i < r; ++i)
          for (int j = t; j < c; ++j) {
            const Integer& v = D.at(i, j);
            if (v == 0) continue;
            Integer av = abs(v);
            if (bi < 0 || av < best) {
              best = av;
              bi = i;
              bj = j;
              if (best == 1) goto found;
            }
          }
      found:
        if (bi < 0) return;
        swap_rows(t, bi);
        swap_cols(t, bj);
        bool clean = true;
        const Integer p = D.at(t, t);
        for (int i = t + 1; i < r; ++i) {
          if (D.at(i, t) == 0) continue;
          Integer q = D.at(i, t) / p;
          add_row(i, t, -q);
          if (D.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < c; ++j) {
          if (D.at(t, j) == 0) continue;
          Integer q = D.at(t, j) / p;
          add_col(j, t, -q);
          if (D.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility of the trailing block by the pivot
        int bad = -1;
        for (int i = t + 1; i < r && bad < 0; ++i)
          for (int j = t + 1; j < c; ++j)
            if (D.at(i, j) % p != 0) {
              bad = i;
              break;
            }
        if (bad >= 0) {
          add_row(t, bad, 1);
          continue;
        }
        if (D.at(t, t) < 0) negate_row(t);
        break;
      }
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const DenseMatrix& m) {
  SmithForm f{DenseMatrix::identity(m.rows), m, DenseMatrix::identity(m.cols)};
  SnfWork w{f.D, &f.U, &f.V};
  w.run();
  return f;
}

std::vector<Integer> invariant_factors(const SparseMatrix& m) {
  std::vector<SVec> cols = m.col;
  std::vector<char> alive_col(cols.size(), 1), alive_row(m.rows, 1);
  std::vector<std::vector<int>> row_cols(m.rows);
  std::vector<int> row_count(m.rows, 0);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (auto& [i, v] : cols[j].e) {
      row_cols[i].push_back(j);
      ++row_count[i];
    }
  std::size_t units = 0;

  using Item = std::pair<std::size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    if (!cols[j].empty()) pq.emplace(cols[j].size(), j);

  while (!pq.empty()) {
    auto [sz, j] = pq.top();
    pq.pop();
    if (!alive_col[j] || cols[j].size() != sz) continue;
    if (cols[j].empty()) {
      alive_col[j] = 0;
      continue;
    }
    int prow = -1;
    for (auto& [i, v] : cols[j].e) {
      if (v == 1 || v == -1) {
        if (prow < 0 || row_count[i] < row_count[prow]) prow = i;
      }
    }
    if (prow < 0) continue;  // left for the dense phase
    const Integer pv = cols[j].get(prow);
    // clear row prow from every other live column
    std::vector<int> touched;
    for (int k : row_cols[prow]) {
      if (k == j || !alive_col[k]) continue;
      Integer a = cols[k].get(prow);
      if (a == 0) continue;
      touched.push_back(k);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int k : touched) {
      Integer a = cols[k].get(prow);
      if (a == 0) continue;
      SVec before = cols[k];
      cols[k] = SVec::axpy(cols[k], -a * pv, cols[j]);  // pv = ±1 so pv^-1 = pv
      for (auto& [i, v] : before.e) --row_count[i];
      for (auto& [i, v] : cols[k].e) {
        ++row_count[i];
        row_cols[i].push_back(k);
      }
      if (cols[k].empty())
        alive_col[k] = 0;
      else
        pq.emplace(cols[k].size(), k);
    }
    for (auto& [i, v] : cols[j].e) --row_count[i];
    alive_col[j] = 0;
    alive_row[prow] = 0;
    // remove row prow from the rest of column j's rows is implicit: column j is gone
    ++units;
  }

  // Dense phase on whatever survived.
  std::vector<int> rc, cc;
  std::vector<int> row_map(m.rows, -1);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (!alive_col[j] || cols[j].empty()) continue;
    cc.push_back(j);
    for (auto& [i, v] : cols[j].e)
      if (row_map[i] < 0) {
        row_map[i] = static_cast<int>(rc.size());
        rc.push_back(i);
      }
  }
  std::vector<Integer> out(units, Integer(1));
  if (!cc.empty()) {
    DenseMatrix d(static_cast<int>(rc.size()), static_cast<int>(cc.size()));
    for (int jj = 0; jj < static_cast<int>(cc.size()); ++jj)
      for (auto& [i, v] : cols[cc[jj]].e) d.at(row_map[i], jj) = v;
    SnfWork w{d, nullptr, nullptr};
    w.run();
    for (int t = 0; t < std::min(d.rows, d.cols); ++t)
      if (d.at(t, t) != 0) out.push_back(abs(d.at(t, t)));
  }
  return out;
}

// ---------------------------------------------------------------- lattice

void LatticeReducer::add(const SVec& g) {
  if (finalized_) fail(Errc::Internal, "LatticeReducer::add after finalize");
  Row r;
  r.v = g;
  if (track_) r.combo.e.emplace_back(generator_count_, Integer(1));
  ++generator_count_;
  pending_.push_back(std::move(r));
}

SVec LatticeReducer::reduce_units(const SVec& v, SVec* cert) const {
  SVec out;
  std::vector<std::pair<int, Integer>> hits;
  for (const auto& [i, a] : v.e) {
    if (i < static_cast<int>(pivot_of_.size()) && pivot_of_[i] >= 0)
      hits.emplace_back(pivot_of_[i], a);
    else
      out.e.emplace_back(i, a);
  }
  for (auto& [p, a] : hits) {
    const Row& r = pivot_rows_[p];
    SVec tail;
    for (const auto& e : r.v.e)
      if (e.first != r.lead) tail.e.push_back(e);
    out = SVec::axpy(out, -a, tail);
    if (cert && track_) *cert = SVec::axpy(*cert, a, r.combo);
  }
  return out;
}

void LatticeReducer::absorb(Row r) {
  // r has been reduced against all current pivots and has a unit entry.
  int z = -1;
  for (const auto& [i, a] : r.v.e) {
    if (a == 1 || a == -1) {
      if (z < 0 || occurs_[i].size() < occurs_[z].size()) z = i;
    }
  }
  if (r.v.get(z) == -1) {
    for (auto& e : r.v.e) e.second = -e.second;
    for (auto& e : r.combo.e) e.second = -e.second;
  }
  r.lead = z;
  const int idx = static_cast<int>(pivot_rows_.size());
  std::vector<int> users = occurs_[z];
  std::sort(users.begin(), users.end());
  users.erase(std::unique(users.begin(), users.end()), users.end());
  for (int p : users) {
    Row& q = pivot_rows_[p];
    Integer a = q.v.get(z);
    if (a == 0) continue;
    q.v = SVec::axpy(q.v, -a, r.v);
    if (track_) q.combo = SVec::axpy(q.combo, -a, r.combo);
    for (const auto& e : q.v.e) occurs_[e.first].push_back(p);
  }
  for (const auto& e : r.v.e) occurs_[e.first].push_back(idx);
  pivot_of_[z] = idx;
  pivot_rows_.push_back(std::move(r));
}

namespace {
bool has_unit(const SVec& v) {
  for (const auto& e : v.e)
    if (e.second == 1 || e.second == -1) return true;
  return false;
}
}  // namespace

void LatticeReducer::finalize() {
  if (finalized_) return;
  finalized_ = true;
  pivot_of_.assign(dim_, -1);
  occurs_.assign(dim_, {});
  std::vector<Row> left;
  auto feed = [&](Row r) {
    SVec c;
    SVec* cp = track_ ? &c : nullptr;
    SVec red = reduce_units(r.v, cp);
    if (track_) r.combo = SVec::axpy(r.combo, -1, c);
    r.v = std::move(red);
    if (r.v.empty()) return;
    if (has_unit(r.v))
      absorb(std::move(r));
    else
      left.push_back(std::move(r));
  };
  for (auto& r : pending_) feed(std::move(r));
  pending_.clear();
  for (bool changed = true; changed && !left.empty();) {
    changed = false;
    std::vector<Row> again = std::move(left);
    left.clear();
    std::size_t before = pivot_rows_.size();
    for (auto& r : again) feed(std::move(r));
    if (pivot_rows_.size() != before) changed = true;
  }
  // Echelon form of the leftovers.
  for (auto& r : left) {
    SVec c;
    SVec red = reduce_units(r.v, track_ ? &c : nullptr);
    if (track_) r.combo = SVec::axpy(r.combo, -1, c);
    r.v = std::move(red);
  }
  std::vector<Row> pool;
  for (auto& r : left)
    if (!r.v.empty()) pool.push_back(std::move(r));
  while (!pool.empty()) {
    int lead = pool[0].v.e.front().first;
    for (auto& r : pool) lead = std::min(lead, r.v.e.front().first);
    for (;;) {
      int best = -1;
      int count = 0;
      for (int k = 0; k < static_cast<int>(pool.size()); ++k) {
        if (pool[k].v.e.front().first != lead) continue;
        ++count;
        if (best < 0 || abs(pool[k].v.e.front().second) < abs(pool[best].v.e.front().second))
          best = k;
      }
      if (count == 1) {
        Row r = std::move(pool[best]);
        pool.erase(pool.begin() + best);
        if (r.v.e.front().second < 0) {
          for (auto& e : r.v.e) e.second = -e.second;
          for (auto& e : r.combo.e) e.second = -e.second;
        }
        r.lead = lead;
        echelon_.push_back(std::move(r));
        break;
      }
      const Integer p = pool[best].v.e.front().second;
      std::vector<Row> next;
      for (int k = 0; k < static_cast<int>(pool.size()); ++k) {
        if (k == best || pool[k].v.e.front().first != lead) {
          next.push_back(std::move(pool[k]));
          continue;
        }
        Integer q = pool[k].v.e.front().second / p;
        Row r = std::move(pool[k]);
        r.v = SVec::axpy(r.v, -q, pool[best].v);
        if (track_) r.combo = SVec::axpy(r.combo, -q, pool[best].combo);
        if (!r.v.empty()) next.push_back(std::move(r));
      }
      pool = std::move(next);
    }
  }
}

SVec LatticeReducer::reduce(const SVec& v, SVec* certificate) const {
  if (!finalized_) fail(Errc::Internal, "LatticeReducer used before finalize");
  SVec w = reduce_units(v, certificate);
  for (const Row& r : echelon_) {
    Integer a = w.get(r.lead);
    if (a == 0) continue;
    const Integer& lc = r.v.e.front().second;
    Integer q = a / lc;
    if (q == 0) continue;
    w = SVec::axpy(w, -q, r.v);
    if (certificate && track_) *certificate = SVec::axpy(*certificate, q, r.combo);
  }
  return w;
}

std::vector<SVec> LatticeReducer::basis() const {
  std::vector<SVec> b;
  for (const Row& r : pivot_rows_) b.push_back(r.v);
  for (const Row& r : echelon_) b.push_back(r.v);
  return b;
}

std::optional<SVec> LatticeReducer::coordinates(const SVec& v) const {
  SVec coord;
  SVec w;
  for (const auto& [i, a] : v.e) {
    if (pivot_of_[i] >= 0)
      coord.e.emplace_back(pivot_of_[i], a);
    else
      w.e.emplace_back(i, a);
  }
  for (auto& [p, a] : coord.e) {
    const Row& r = pivot_rows_[p];
    SVec tail;
    for (const auto& e : r.v.e)
      if (e.first != r.lead) tail.e.push_back(e);
    w = SVec::axpy(w, -a, tail);
  }
  coord.normalize();
  const int base = static_cast<int>(pivot_rows_.size());
  for (int k = 0; k < static_cast<int>(echelon_.size()); ++k) {
    const Row& r = echelon_[k];
    Integer a = w.get(r.lead);
    if (a == 0) continue;
    const Integer& lc = r.v.e.front().second;
    if (a % lc != 0) return std::nullopt;
    Integer q = a / lc;
    w = SVec::axpy(w, -q, r.v);
    coord.e.emplace_back(base + k, q);
  }
  if (!w.empty()) return std::nullopt;
  coord.normalize();
  return coord;
}

}  // namespace corner
