#include "folding.hpp"

#include "error.hpp"

#include <cstdlib>
#include <unordered_map>

namespace corner {

namespace {

SingularCube eps(const SingularCube& x, int i) { return degeneracy(x, i); }
SingularCube gam(const SingularCube& x, int i, int sign) { return connection(x, i, sign); }
SingularCube dface(const SingularCube& x, int i, int sign) { return face(x, i, sign); }

void check_degree(int n) {
  if (n < 0) fail(Errc::BadArgument, "negative degree");
  if (n > Limits::hard_cap + 1) fail(Errc::DimensionCap, "folding degree exceeds the cap");
}

void check_move_index(const SingularCube& x, const Move& m) {
  const int top = m.family == MoveFamily::Theta ? x.n - 2 : x.n - 1;
  if (m.i < 1 || m.i > top)
    fail(Errc::BadIndex, m.str() + " is not defined on a " + std::to_string(x.n) + "-cube");
}

// Constant cube check: all images equal.
bool is_constant(const SingularCube& x) {
  for (int v : x.img)
    if (v != x.img[0]) return false;
  return true;
}

}  // namespace

std::string Move::str() const {
  std::string f = family == MoveFamily::VPsi ? "vpsi" : family == MoveFamily::HPsi ? "hpsi" : "theta";
  return f + (sign ? "+" : "-") + "_" + std::to_string(i);
}

// ---------------------------------------------------------------- foldings

SingularCube box_minus(const OmegaCategory& c, int u, int n) {
  check_degree(n);
  if (u < 0 || u >= c.size()) fail(Errc::BadArgument, "unknown morphism");
  if (c.dim(u) > n) fail(Errc::DimensionMismatch, "morphism dimension exceeds the degree");
  if (n == 0) return constant_cube(u, 0);
  if (n == 1) return edge_cube(c, u);
  const SingularCube below = box_minus(c, c.s(u, n - 1), n - 1);
  std::vector<SingularCube> faces(2 * n);
  for (int i = 1; i <= n - 2; ++i)
    for (int a = 0; a < 2; ++a) faces[2 * (i - 1) + a] = gam(dface(below, i, a), n - 2, 0);
  const SingularCube plus = eps(dface(below, n - 1, 1), n - 1);
  for (int i = n - 1; i <= n; ++i) {
    const int side = (i % 2 == 1) ? 0 : 1;
    faces[2 * (i - 1)] = box_minus(c, c.d(u, n - 1, side), n - 1);
    faces[2 * (i - 1) + 1] = plus;
  }
  return fill_shell(c, n, faces, u, false);
}

SingularCube box_usual(const OmegaCategory& c, int u, int n) {
  check_degree(n);
  if (u < 0 || u >= c.size()) fail(Errc::BadArgument, "unknown morphism");
  if (c.dim(u) > n) fail(Errc::DimensionMismatch, "morphism dimension exceeds the degree");
  if (n == 0) return constant_cube(u, 0);
  if (n == 1) return edge_cube(c, u);
  const SingularCube below = box_usual(c, c.s(u, n - 1), n - 1);
  std::vector<SingularCube> faces(2 * n);
  for (int a = 0; a < 2; ++a) faces[a] = box_usual(c, c.d(u, n - 1, a), n - 1);
  for (int i = 2; i <= n; ++i)
    for (int a = 0; a < 2; ++a) faces[2 * (i - 1) + a] = eps(dface(below, i - 1, a), 1);
  return fill_shell(c, n, faces, u, false);
}

SingularCube phi_minus(const OmegaCategory& c, const SingularCube& x) {
  if (!is_branching(c, x)) fail(Errc::NotBranching, "phi_minus needs a branching cube");
  return box_minus(c, x.interior(), x.n);
}

// ---------------------------------------------------------------- moves

SingularCube vpsi(const OmegaCategory& c, const SingularCube& x, int i, int sign) {
  check_move_index(x, {MoveFamily::VPsi, sign, i});
  if (sign == 0) return cubical_compose(c, x, gam(dface(x, i, 1), i, 0), i);
  return cubical_compose(c, gam(dface(x, i, 0), i, 1), x, i);
}

SingularCube hpsi(const OmegaCategory& c, const SingularCube& x, int i, int sign) {
  check_move_index(x, {MoveFamily::HPsi, sign, i});
  if (sign == 0) return cubical_compose(c, x, gam(dface(x, i + 1, 1), i, 0), i + 1);
  return cubical_compose(c, gam(dface(x, i + 1, 0), i, 1), x, i + 1);
}

SingularCube theta(const OmegaCategory& c, const SingularCube& x, int i) {
  check_move_index(x, {MoveFamily::Theta, 0, i});
  return vpsi(c, vpsi(c, x, i, 1), i + 1, 0);
}

SingularCube apply_move(const OmegaCategory& c, const SingularCube& x, const Move& m) {
  switch (m.family) {
    case MoveFamily::VPsi: return vpsi(c, x, m.i, m.sign);
    case MoveFamily::HPsi: return hpsi(c, x, m.i, m.sign);
    case MoveFamily::Theta: break;
  }
  if (m.sign != 0) fail(Errc::BadArgument, "theta has no positive variant");
  return theta(c, x, m.i);
}

std::vector<Move> fold_pipeline(int n) {
  check_degree(n);
  std::vector<Move> p;
  for (int k = n - 1; k >= 1; --k) {
    for (int j = 1; j <= k; ++j) p.push_back({MoveFamily::HPsi, 0, j});
    for (int j = 1; j <= k; ++j) p.push_back({MoveFamily::VPsi, 0, j});
  }
  for (int k = 1; k <= n - 2; ++k)
    for (int j = n - 2; j >= k; --j) p.push_back({MoveFamily::Theta, 0, j});
  return p;
}

int psi_prefix_length(int n) { return n < 2 ? 0 : n * (n - 1); }

SingularCube apply_pipeline(const OmegaCategory& c, const std::vector<Move>& p, const SingularCube& x,
                            std::vector<TraceStep>* trace) {
  SingularCube y = x;
  for (const Move& m : p) {
    y = apply_move(c, y, m);
    if (trace) trace->push_back({m, y});
  }
  return y;
}

// ---------------------------------------------------------------- characterization

bool is_folded(const SingularCube& x) {
  const int n = x.n;
  if (n <= 1) return true;
  for (int i = 1; i <= n; ++i)
    if (!is_constant(dface(x, i, 1))) return false;
  for (int i = 1; i <= n - 2; ++i) {
    const SingularCube f = dface(x, i, 0);
    SingularCube g = f;
    for (int k = n - 2; k >= i; --k) g = dface(g, k, 0);
    for (int k = i; k <= n - 2; ++k) g = gam(g, k, 0);
    if (!(g == f)) return false;
  }
  return true;
}

bool is_folded_fixed_point(const OmegaCategory& c, const SingularCube& x) {
  if (c.dim(x.interior()) > x.n) return false;
  return box_minus(c, x.interior(), x.n) == x;
}

bool aspiration_holds(const OmegaCategory& c, const SingularCube& x) {
  const int n = x.n;
  if (n < 2) return true;
  std::vector<Move> p = fold_pipeline(n);
  p.resize(psi_prefix_length(n));
  const SingularCube y = apply_pipeline(c, p, x);
  const SingularCube target = constant_cube(x.img[word::plus_word(n)], n - 1);
  for (int i = 1; i <= n; ++i)
    if (!(dface(y, i, 1) == target)) return false;
  return true;
}

// ---------------------------------------------------------------- witnesses

std::vector<SingularCube> theta_shell(const OmegaCategory& c, const SingularCube& x) {
  if (x.n != 3) fail(Errc::BadIndex, "the theta shell is built for 3-cubes");
  std::vector<SingularCube> f(8);
  f[0] = gam(dface(x, 1, 0), 2, 0);
  f[2] = theta(c, x, 1);
  f[4] = x;
  {
    const SingularCube d12 = dface(dface(x, 1, 0), 2, 0);
    const SingularCube a = gam(dface(x, 3, 0), 2, 0);
    const SingularCube b = eps(dface(x, 2, 1), 2);
    const SingularCube cc =
        cubical_compose(c, gam(gam(d12, 1, 1), 1, 0), eps(gam(d12, 1, 0), 1), 2);
    const SingularCube d = gam(dface(x, 1, 0), 1, 0);
    f[6] = matrix2(c, a, b, cc, d, 3, 1);
  }
  f[1] = vpsi(c, gam(dface(x, 1, 1), 1, 0), 2, 0);
  f[3] = gam(dface(x, 2, 1), 2, 0);
  {
    const SingularCube l = gam(dface(dface(x, 1, 0), 2, 1), 1, 0);
    const SingularCube r = eps(dface(dface(x, 2, 1), 2, 1), 2);
    f[5] = eps(cubical_compose(c, l, r, 1), 3);
  }
  f[7] = vpsi(c, gam(dface(x, 3, 1), 2, 0), 2, 1);
  return f;
}

std::vector<SingularCube> t_witness(const OmegaCategory& c, const SingularCube& x, const Move& m) {
  check_move_index(x, m);
  if (!is_branching(c, x)) fail(Errc::NotBranching, "witnesses are built for branching cubes");
  if (m.sign != 0) fail(Errc::BadArgument, "no witness construction for " + m.str());
  switch (m.family) {
    case MoveFamily::HPsi: return {hpsi(c, gam(x, m.i + 1, 0), m.i, 0)};
    case MoveFamily::VPsi: return {vpsi(c, gam(x, m.i, 0), m.i + 1, 0)};
    case MoveFamily::Theta: break;
  }
  if (x.n != 3 || m.i != 1) fail(Errc::BadIndex, "the theta witness is built for theta-_1 on 3-cubes");
  std::vector<SingularCube> f = theta_shell(c, x);
  std::vector<SingularCube> g(6);
  for (int k = 0; k < 6; ++k) g[k] = dface(f[k], 3, 1);
  f[7] = fill_thin_shell(c, 3, g);
  return {fill_thin_shell(c, 4, f)};
}

SingularCube plus_witness(const OmegaCategory& c, const SingularCube& x, const SingularCube& y, int j) {
  return cubical_compose(c, gam(x, j, 0), eps(y, j + 1), j);
}

SingularCube composition_witness(const OmegaCategory& c, int x, int y) {
  const int n = c.dim(x);
  if (n < 2 || c.dim(y) != n) fail(Errc::DimensionMismatch, "two morphisms of the same dimension at least two");
  const int xy = c.compose(x, y, n - 1);
  if (xy < 0) fail(Errc::NotComposable, "t_{n-1}x differs from s_{n-1}y");
  std::vector<SingularCube> f(2 * (n + 1));
  for (int h = 1; h <= n - 2; ++h) {
    const int side = (h % 2 == 1) ? 0 : 1;
    SingularCube g = box_minus(c, c.d(x, h, side), h);
    for (int k = h; k <= n - 1; ++k) g = gam(g, k, 0);
    f[2 * (h - 1)] = g;
  }
  f[2 * (n - 2)] = box_minus(c, x, n);
  f[2 * (n - 1)] = box_minus(c, xy, n);
  f[2 * n] = box_minus(c, y, n);
  const SingularCube top = constant_cube(c.t(x, 0), n);
  for (int i = 1; i <= n + 1; ++i) f[2 * (i - 1) + 1] = top;
  return fill_thin_shell(c, n + 1, f);
}

// ---------------------------------------------------------------- commutation

AxiomReport commutation_report(const OmegaCategory& c, const std::vector<SingularCube>& cubes) {
  const std::vector<std::string> ids = {
      "comm-01", "comm-02", "comm-03", "comm-04", "comm-05", "comm-06", "comm-07",
      "comm-08", "comm-09", "comm-10", "comm-11", "comm-12", "comm-13", "comm-14",
      "comm-15", "comm-16", "comm-17", "comm-18", "comm-19", "comm-20", "psi-idem",
      "psi-vh-far", "psi-vh-same", "psi-hv-adj", "psi-braid"};
  AxiomReport rep;
  std::unordered_map<std::string, std::size_t> at;
  for (const auto& id : ids) {
    at[id] = rep.stats.size();
    rep.stats.push_back({id, 0, 0, ""});
  }
  const SingularCube* cur = nullptr;
  auto check = [&](const std::string& id, auto&& lhs, auto&& rhs) {
    AxiomStat& st = rep.stats[at[id]];
    ++st.checked;
    std::string why;
    try {
      if (lhs() == rhs()) return;
      why = "sides differ";
    } catch (const Error& e) {
      why = e.what();
    }
    ++st.failed;
    if (st.example.empty()) st.example = why + " on " + cube_json(c, *cur);
  };
  auto psi = [&](int fam, const SingularCube& y, int i, int sign) {
    return fam == 0 ? vpsi(c, y, i, sign) : hpsi(c, y, i, sign);
  };

  for (const SingularCube& x : cubes) {
    cur = &x;
    const int n = x.n;
    for (int i = 1; i <= n - 1; ++i) {
      for (int fam = 0; fam < 2; ++fam) {
        const std::string id = fam == 0 ? "comm-01" : "comm-02";
        for (int j = 1; j <= n; ++j)
          for (int a = 0; a < 2; ++a) {
            if (j < i)
              check(id, [&] { return dface(psi(fam, x, i, 0), j, a); },
                    [&] { return psi(fam, dface(x, j, a), i - 1, 0); });
            if (j > i + 1)
              check(id, [&] { return dface(psi(fam, x, i, 0), j, a); },
                    [&] { return psi(fam, dface(x, j, a), i, 0); });
          }
        for (int a = 0; a < 2; ++a)
          check("psi-idem", [&] { return psi(fam, psi(fam, x, i, a), i, a); },
                [&] { return psi(fam, x, i, a); });
        if (i + 1 <= n - 1)
          for (int a = 0; a < 2; ++a)
            check("psi-braid", [&] { return psi(fam, psi(fam, psi(fam, x, i, a), i + 1, a), i, a); },
                  [&] { return psi(fam, psi(fam, psi(fam, x, i + 1, a), i, a), i + 1, a); });
      }
      const SingularCube v = vpsi(c, x, i, 0), h = hpsi(c, x, i, 0);
      check("comm-05", [&] { return dface(v, i, 0); }, [&] { return dface(x, i, 0); });
      check("comm-06", [&] { return dface(v, i, 1); }, [&] { return eps(dface(dface(x, i, 1), i, 1), i); });
      check("comm-07", [&] { return dface(v, i + 1, 0); },
            [&] { return cubical_compose(c, dface(x, i + 1, 0), dface(x, i, 1), i); });
      check("comm-08", [&] { return dface(v, i + 1, 1); }, [&] { return dface(x, i + 1, 1); });
      check("comm-09", [&] { return dface(h, i, 0); },
            [&] { return cubical_compose(c, dface(x, i, 0), dface(x, i + 1, 1), i); });
      check("comm-10", [&] { return dface(h, i, 1); }, [&] { return dface(x, i, 1); });
      check("comm-11", [&] { return dface(h, i + 1, 0); }, [&] { return dface(x, i + 1, 0); });
      check("comm-12", [&] { return dface(h, i + 1, 1); },
            [&] { return eps(dface(dface(x, i + 1, 1), i, 1), i); });
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) < 2) continue;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            check("psi-vh-far", [&] { return vpsi(c, hpsi(c, x, j, b), i, a); },
                  [&] { return hpsi(c, vpsi(c, x, i, a), j, b); });
      }
      for (int a = 0; a < 2; ++a) {
        check("psi-vh-same", [&] { return vpsi(c, hpsi(c, x, i, a), i, a); },
              [&] { return hpsi(c, vpsi(c, x, i, a), i, a); });
        if (i + 1 <= n - 1)
          check("psi-hv-adj", [&] { return hpsi(c, vpsi(c, x, i, a), i + 1, a); },
                [&] { return vpsi(c, hpsi(c, x, i + 1, a), i, a); });
      }
    }
    for (int i = 1; i <= n - 2; ++i) {
      const SingularCube th = theta(c, x, i);
      for (int j = 1; j <= n; ++j)
        for (int a = 0; a < 2; ++a) {
          if (j < i)
            check("comm-03", [&] { return dface(th, j, a); }, [&] { return theta(c, dface(x, j, a), i - 1); });
          if (j > i + 2)
            check("comm-03", [&] { return dface(th, j, a); }, [&] { return theta(c, dface(x, j, a), i); });
        }
      check("comm-13", [&] { return dface(th, i, 0); },
            [&] { return gam(dface(dface(x, i, 0), i, 0), i, 0); });
      check("comm-14", [&] { return dface(th, i, 1); }, [&] { return vpsi(c, dface(x, i, 1), i, 0); });
      check("comm-15", [&] { return dface(th, i + 1, 0); }, [&] { return dface(x, i + 1, 0); });
      check("comm-16", [&] { return dface(th, i + 1, 1); },
            [&] {
              return cubical_compose(c, eps(dface(dface(x, i, 0), i + 1, 1), i + 1),
                                     eps(dface(dface(x, i + 1, 1), i + 1, 1), i + 1), i);
            });
      check("comm-17", [&] { return dface(th, i + 2, 0); },
            [&] {
              const SingularCube blank = gam(dface(dface(x, i + 2, 0), i, 0), i, 1);
              return matrix2(c, dface(x, i + 2, 0), dface(x, i + 1, 1), blank, dface(x, i, 0), i + 1, i);
            });
      check("comm-18", [&] { return dface(th, i + 2, 1); }, [&] { return vpsi(c, dface(x, i + 2, 1), i, 1); });
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (j + 1 < i)
          check("comm-04", [&] { return theta(c, gam(x, j, 0), i); },
                [&] { return gam(theta(c, x, i - 1), j, 0); });
        if (j > i + 2)
          check("comm-04", [&] { return theta(c, gam(x, j, 0), i); },
                [&] { return gam(theta(c, x, i), j, 0); });
      }
      check("comm-19", [&] { return theta(c, gam(x, i, 0), i); }, [&] { return gam(x, i + 1, 0); });
      check("comm-20", [&] { return theta(c, gam(x, i + 1, 0), i); }, [&] { return gam(x, i + 1, 0); });
    }
  }
  return rep;
}

// ---------------------------------------------------------------- folding report

AxiomReport folding_report(const OmegaCategory& c, const std::vector<SingularCube>& cubes, int n_max) {
  AxiomReport rep;
  rep.stats = {{"fold-routes", 0, 0, ""}, {"phi-folded", 0, 0, ""}, {"phi-idem", 0, 0, ""},
               {"pipeline", 0, 0, ""},    {"aspiration", 0, 0, ""}, {"box-degenerate", 0, 0, ""},
               {"box-ends", 0, 0, ""}};
  auto tally = [&](int k, auto&& pred, auto&& where) {
    AxiomStat& st = rep.stats[k];
    ++st.checked;
    std::string why;
    try {
      if (pred()) return;
      why = "violated";
    } catch (const Error& e) {
      why = e.what();
    }
    ++st.failed;
    if (st.example.empty()) st.example = why + " on " + where();
  };
  for (const SingularCube& x : cubes) {
    auto where = [&] { return cube_json(c, x); };
    tally(0, [&] { return is_folded(x) == is_folded_fixed_point(c, x); }, where);
    if (!is_branching(c, x)) continue;
    const SingularCube p = phi_minus(c, x);
    tally(1, [&] { return is_folded(p); }, where);
    tally(2, [&] { return phi_minus(c, p) == p; }, where);
    if (x.n >= 2) {
      tally(3, [&] { return apply_pipeline(c, fold_pipeline(x.n), x) == p; }, where);
      tally(4, [&] { return aspiration_holds(c, x); }, where);
    }
  }
  for (int u = 0; u < c.size(); ++u) {
    const int p = c.dim(u);
    auto where = [&] { return c.describe(u); };
    for (int n = std::max(p, 1) + 1; n <= n_max; ++n)
      tally(5, [&] {
        SingularCube g = box_minus(c, u, std::max(p, 1));
        for (int k = std::max(p, 1); k <= n - 1; ++k) g = gam(g, k, 0);
        return g == box_minus(c, u, n);
      }, where);
    if (p >= 2 && p - 1 <= n_max) {
      const int n = p - 1;
      tally(6, [&] {
        const SingularCube a = box_minus(c, c.s(u, n), n), b = box_minus(c, c.t(u, n), n);
        for (int i = 1; i <= n; ++i)
          for (int s = 0; s < 2; ++s)
            if (!(dface(a, i, s) == dface(b, i, s))) return false;
        return true;
      }, where);
    }
  }
  return rep;
}

}  // namespace corner
