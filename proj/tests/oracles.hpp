#pragma once

// Brute-force nerve of a category in degrees at most two, sharing no code with
// the library enumeration beyond the category table.

#include "category.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracles {

using corner::OmegaCategory;

// All functors I^n -> C for n <= 2, by trying every image table; entries are
// indexed by base-3 codes with the first letter most significant.
inline std::set<std::vector<int>> brute_nerve(const OmegaCategory& c, int n) {
  const int words = n == 0 ? 1 : (n == 1 ? 3 : 9);
  auto wdim = [&](int w) {
    int d = 0;
    for (int k = 0, x = w; k < n; ++k, x /= 3) d += x % 3 == 1;
    return d;
  };
  std::set<std::vector<int>> out;
  std::vector<int> img(words, -1);
  // assignment order with the check that becomes decidable at each step
  std::vector<int> order;
  std::vector<std::function<bool()>> check;
  auto edge = [&](int w, int a, int b) {
    return [&, w, a, b] { return c.s(img[w], 0) == img[a] && c.t(img[w], 0) == img[b]; };
  };
  auto yes = [] { return true; };
  if (n == 0) {
    order = {0};
    check = {yes};
  } else if (n == 1) {
    order = {0, 2, 1};
    check = {yes, yes, edge(1, 0, 2)};
  } else {
    // vertices -- 0, -+ 2, +- 6, ++ 8; edges -0 1, +0 7, 0- 3, 0+ 5; square 4
    order = {0, 2, 6, 8, 1, 7, 3, 5, 4};
    check = {yes, yes, yes, yes, edge(1, 0, 2), edge(7, 6, 8), edge(3, 0, 6), edge(5, 2, 8), [&] {
               int src = c.compose(img[1], img[5], 0), tgt = c.compose(img[3], img[7], 0);
               return src >= 0 && tgt >= 0 && c.s(img[4], 1) == src && c.t(img[4], 1) == tgt;
             }};
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      out.insert(img);
      return;
    }
    const int w = order[k];
    for (int m = 0; m < c.size(); ++m)
      if (c.dim(m) <= wdim(w)) {
        img[w] = m;
        if (check[k]()) rec(k + 1);
      }
    img[w] = -1;
  };
  rec(0);
  return out;
}

struct LowBetti {
  long h0 = 0;
  long h1 = 0;
};

// Branching Betti numbers in degrees 0 and 1 from the brute-force nerve.
inline LowBetti brute_branching_betti(const OmegaCategory& c) {
  using corner::SparseMatrix;
  auto br1 = [&](const std::vector<int>& x) { return c.dim(x[1]) == 1; };
  auto br2 = [&](const std::vector<int>& x) { return c.dim(x[1]) == 1 && c.dim(x[3]) == 1; };
  std::vector<std::vector<int>> n0, n1, n2;
  for (const auto& x : brute_nerve(c, 0)) n0.push_back(x);
  for (const auto& x : brute_nerve(c, 1))
    if (br1(x)) n1.push_back(x);
  for (const auto& x : brute_nerve(c, 2))
    if (br2(x)) n2.push_back(x);
  auto find = [](const std::vector<std::vector<int>>& v, const std::vector<int>& x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
  };
  // d^- of a 1-cube is its initial vertex; of a 2-cube, first minus face minus second
  SparseMatrix d1(static_cast<int>(n0.size()), static_cast<int>(n1.size()));
  for (std::size_t j = 0; j < n1.size(); ++j) {
    d1.col[j].add(find(n0, {n1[j][0]}), 1);
    d1.col[j].normalize();
  }
  SparseMatrix d2(static_cast<int>(n1.size()), static_cast<int>(n2.size()));
  for (std::size_t j = 0; j < n2.size(); ++j) {
    const auto& x = n2[j];
    d2.col[j].add(find(n1, {x[0], x[1], x[2]}), 1);
    d2.col[j].add(find(n1, {x[0], x[3], x[6]}), -1);
    d2.col[j].normalize();
  }
  long rank1 = static_cast<long>(corner::invariant_factors(d1).size());
  long rank2 = static_cast<long>(corner::invariant_factors(d2).size());
  return {static_cast<long>(n0.size()) - rank1, static_cast<long>(n1.size()) - rank1 - rank2};
}

}  // namespace oracles
