#include "chain.hpp"

#include "error.hpp"

#include <memory>

namespace corner {

void ChainComplex::check_square_zero() const {
  for (int n = 2; n <= top(); ++n) {
    const SparseMatrix& hi = d[n];
    const SparseMatrix& lo = d[n - 1];
    for (int j = 0; j < hi.cols; ++j) {
      SVec img = lo.apply(hi.col[j]);
      if (!img.empty())
        fail(Errc::IllFormedComplex,
             "boundary composite is nonzero on " + basis[n][j] + " in degree " + std::to_string(n));
    }
  }
}

std::string HomologySummary::describe(int n) const {
  const HomologyGroup& g = groups.at(n);
  std::string s;
  if (g.betti == 1) s = "Z";
  if (g.betti > 1) s = "Z^" + std::to_string(g.betti);
  for (const Integer& t : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

namespace {

long matrix_rank(const std::vector<Integer>& f) { return static_cast<long>(f.size()); }

HomologySummary free_homology(const std::vector<int>& dims, const std::vector<SparseMatrix>& d,
                              int up_to) {
  // dims[n] for n in 0..up_to+1, d[n] : n -> n-1 for n in 1..up_to+1
  std::vector<std::vector<Integer>> factors(up_to + 2);
  for (int n = 1; n <= up_to + 1; ++n)
    if (n < static_cast<int>(d.size())) factors[n] = invariant_factors(d[n]);
  HomologySummary h;
  for (int n = 0; n <= up_to; ++n) {
    HomologyGroup g;
    g.degree = n;
    long r_out = n >= 1 ? matrix_rank(factors[n]) : 0;
    long r_in = matrix_rank(factors[n + 1]);
    g.betti = dims[n] - r_out - r_in;
    for (const Integer& t : factors[n + 1])
      if (t > 1) g.torsion.push_back(t);
    h.groups.push_back(std::move(g));
  }
  return h;
}

}  // namespace

HomologySummary complex_homology(const ChainComplex& c, int up_to) {
  c.check_square_zero();
  std::vector<int> dims(up_to + 2, 0);
  std::vector<SparseMatrix> d(up_to + 2);
  for (int n = 0; n <= up_to + 1; ++n) dims[n] = c.rank(n);
  for (int n = 1; n <= up_to + 1; ++n) {
    if (n <= c.top())
      d[n] = c.d[n];
    else
      d[n] = SparseMatrix(dims[n - 1], dims[n]);
  }
  return free_homology(dims, d, up_to);
}

HomologySummary complex_homology(const QuotientComplex& q, int up_to) {
  const ChainComplex& c = q.cx;
  c.check_square_zero();
  const int top = up_to + 1;
  auto rank = [&](int n) { return c.rank(n); };
  auto col = [&](int n, int j) -> const SVec& { return c.d[n].col[j]; };

  std::vector<std::unique_ptr<LatticeReducer>> red(top + 1);
  for (int n = 0; n <= top; ++n) {
    red[n] = std::make_unique<LatticeReducer>(rank(n));
    if (n < static_cast<int>(q.relators.size()))
      for (const SVec& r : q.relators[n]) red[n]->add(r);
    red[n]->finalize();
  }
  // Relator condition: boundaries of relators stay inside the relator span.
  for (int n = 1; n <= top && n < static_cast<int>(q.relators.size()); ++n) {
    for (const SVec& r : q.relators[n]) {
      if (n > c.top()) break;
      SVec img = c.d[n].apply(r);
      if (!red[n - 1]->contains(img))
        fail(Errc::IllFormedComplex,
             "boundary of a degree-" + std::to_string(n) + " relator leaves the relator span");
    }
  }

  bool residual = false;
  for (int n = 0; n <= top; ++n)
    if (red[n]->residual_count() > 0) residual = true;

  if (!residual) {
    // Unit relators only: pass to the free complex on the surviving coordinates.
    std::vector<std::vector<int>> keep(top + 1), where(top + 1);
    std::vector<int> dims(top + 1);
    for (int n = 0; n <= top; ++n) {
      where[n].assign(rank(n), -1);
      for (int i = 0; i < rank(n); ++i)
        if (!red[n]->pivot(i)) {
          where[n][i] = static_cast<int>(keep[n].size());
          keep[n].push_back(i);
        }
      dims[n] = static_cast<int>(keep[n].size());
    }
    std::vector<SparseMatrix> d(top + 1);
    for (int n = 1; n <= top; ++n) {
      d[n] = SparseMatrix(dims[n - 1], dims[n]);
      if (n > c.top()) continue;
      for (int jj = 0; jj < dims[n]; ++jj) {
        SVec v = red[n - 1]->reduce(col(n, keep[n][jj]));
        SVec m;
        for (auto& [i, a] : v.e) {
          if (where[n - 1][i] < 0) fail(Errc::Internal, "reduction left a pivot coordinate");
          m.e.emplace_back(where[n - 1][i], a);
        }
        d[n].col[jj] = std::move(m);
      }
    }
    return free_homology(dims, d, up_to);
  }

  // General case: mapping cone of the relator subcomplex.
  std::vector<std::vector<SVec>> B(top + 1);
  for (int n = 0; n <= top; ++n) B[n] = red[n]->basis();
  auto sdim = [&](int n) { return n >= 0 && n <= top ? static_cast<int>(B[n].size()) : 0; };
  std::vector<int> dims(top + 1);
  for (int n = 0; n <= top; ++n) dims[n] = rank(n) + sdim(n - 1);
  std::vector<SparseMatrix> d(top + 1);
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m(dims[n - 1], dims[n]);
    const int off_lo = rank(n - 1);
    for (int j = 0; j < rank(n); ++j)
      if (n <= c.top()) m.col[j] = col(n, j);
    for (int k = 0; k < sdim(n - 1); ++k) {
      SVec v = B[n - 1][k];  // inclusion into C_{n-1}
      if (n - 1 >= 1 && n - 1 <= c.top()) {
        SVec img = c.d[n - 1].apply(B[n - 1][k]);
        auto coord = red[n - 2]->coordinates(img);
        if (!coord) fail(Errc::IllFormedComplex, "relator boundary outside relator span");
        for (auto& [i, a] : coord->e) v.e.emplace_back(off_lo + i, -a);
      }
      v.normalize();
      m.col[rank(n) + k] = std::move(v);
    }
    d[n] = std::move(m);
  }
  return free_homology(dims, d, up_to);
}

}  // namespace corner
