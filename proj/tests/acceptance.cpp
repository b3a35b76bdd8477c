// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff every
// required criterion passes within its time budget.

#include "category.hpp"
#include "error.hpp"
#include "folding.hpp"
#include "homology.hpp"
#include "nerve.hpp"
#include "oracles.hpp"
#include "precub.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

using namespace corner;

namespace {

// Tolerances: every homology statement is an exact integer equality, every
// law suite allows zero failures. Budgets in seconds.
constexpr double kBudget1 = 1;
constexpr double kBudget2 = 10;
constexpr double kBudget3 = 30;
constexpr double kBudget4 = 30;
constexpr double kBudget5 = 30;
constexpr double kBudget6 = 60;
constexpr double kBudget6Attempt = 600;
constexpr double kBudget7 = 30;
constexpr double kBudget8 = 300;
constexpr double kBudget9 = 300;
constexpr double kBudget10 = 120;
constexpr double kBudget11 = 120;
constexpr double kBudget12 = 300;
constexpr long kAllowedFailures = 0;
// Composable partners drawn per cube and direction for the binary axioms on
// the filled 3-cube; the smaller fixtures use every partner.
constexpr std::size_t kCube3Partners = 2;

OmegaCategory free_on(const std::string& name) {
  std::ifstream f(std::string(CORNER_FIXTURES) + "/" + name);
  std::stringstream s;
  s << f.rdbuf();
  return build_free_category(parse_precubical(s.str()));
}

PrecubicalSet precubical(const std::string& name) {
  std::ifstream f(std::string(CORNER_FIXTURES) + "/" + name);
  std::stringstream s;
  s << f.rdbuf();
  return parse_precubical(s.str());
}

// Collects mismatches; the first few are kept for the report line.
struct Verdict {
  long checked = 0;
  long failed = 0;
  std::vector<std::string> notes;
  std::string info;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (notes.size() < 4) notes.push_back(what);
  }
  void say(const std::string& s) { info += (info.empty() ? "" : "; ") + s; }
};

std::string show(const HomologyGroup& g) {
  HomologySummary s;
  s.groups = {g};
  return s.describe(0);
}

std::string groups(const HomologySummary& h, int up_to) {
  std::string s;
  for (int n = 0; n <= up_to; ++n) s += (n ? " " : "") + h.describe(n);
  return s;
}

std::string concentrated(int up_to, const std::vector<int>& degrees) {
  std::vector<std::string> v(up_to + 1, "0");
  for (int d : degrees) v[d] = "Z";
  std::string s;
  for (int n = 0; n <= up_to; ++n) s += (n ? " " : "") + v[n];
  return s;
}

LatticeReducer image_of(const SparseMatrix& m) {
  LatticeReducer r(m.rows);
  for (const auto& col : m.col) r.add(col);
  r.finalize();
  return r;
}

void absorb(Verdict& v, const AxiomReport& r, const std::string& where) {
  for (const auto& s : r.stats) {
    v.checked += s.checked;
    v.failed += s.failed;
    if (s.failed && v.notes.size() < 4) v.notes.push_back(where + " " + s.id + " " + s.example);
  }
}

std::vector<SingularCube> cubes_up_to(const OmegaCategory& c, int n) {
  std::vector<SingularCube> out;
  for (int k = 0; k <= n; ++k) {
    auto v = enumerate_cubes(c, k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// ---------------------------------------------------------------- criteria

Verdict goubault_baseline() {
  Verdict v;
  PrecubicalSet k = precubical("fig1.json");
  std::string minus = complex_homology(goubault_complex(k, 0), 1).describe(0);
  std::string plus = complex_homology(goubault_complex(k, 1), 1).describe(0);
  v.expect(minus == "Z^2", "H0- = " + minus);
  v.expect(plus == "Z", "H0+ = " + plus);
  v.say("H0- " + minus + ", H0+ " + plus);
  return v;
}

Verdict branching_f1() {
  Verdict v;
  OmegaCategory c = free_on("fig1.json");
  HomologySummary h = compute_homology(Theory::Branching, &c, nullptr, 2);
  v.expect(h.describe(0) == "Z^2", "H0 = " + h.describe(0));
  v.expect(h.describe(1) == "Z", "H1 = " + h.describe(1));
  v.say("H " + groups(h, 2));
  oracles::LowBetti b = oracles::brute_branching_betti(c);
  v.expect(b.h0 == h.at(0).betti && b.h1 == h.at(1).betti,
           "brute-force nerve gives b0 " + std::to_string(b.h0) + ", b1 " + std::to_string(b.h1));
  v.say("brute-force nerve b0 " + std::to_string(b.h0) + " b1 " + std::to_string(b.h1));

  CornerNerve nv(c, 0, 2);
  ChainComplex cx = corner_complex(nv, 1);
  auto at = [&](const std::string& d) {
    for (int m = 0; m < c.size(); ++m)
      if (c.describe(m) == d) return nv.find(edge_cube(c, m));
    return -1;
  };
  SVec uw;
  uw.add(at("u"), 1);
  uw.add(at("w"), -1);
  uw.normalize();
  LatticeReducer im = image_of(cx.d[2]);
  v.expect(cx.d[1].apply(uw).empty(), "u-w is not a cycle");
  v.expect(!im.contains(uw), "u-w is a boundary");
  SVec diff = uw;
  diff.add(at("(u *0 v)"), -1);
  diff.add(at("(w *0 x)"), 1);
  diff.normalize();
  v.expect(im.contains(diff), "[u-w] differs from [(u*0 v)-(w*0 x)]");
  v.say("[u-w] nonzero and equal to [(u*0 v)-(w*0 x)]");
  return v;
}

// 2_p is acyclic above degree 0; G_p has one more class in degree p.
Verdict presented(const std::string& kind) {
  Verdict v;
  for (int p = 1; p <= 3; ++p) {
    OmegaCategory c = build_presented(kind, p);
    std::vector<int> nonzero{0};
    if (kind == "G_p") nonzero.push_back(p);
    for (Theory t : {Theory::Branching, Theory::ReducedBranching, Theory::Formal}) {
      std::string got = groups(compute_homology(t, &c, nullptr, 3), 3);
      v.expect(got == concentrated(3, nonzero), kind + " p=" + std::to_string(p) + " " + theory_name(t) + ": " + got);
    }
  }
  v.say(kind == "G_p" ? "H, HR, HF = Z in degrees 0 and p, for p = 1, 2, 3"
                      : "H, HR, HF = Z in degree 0 only, for p = 1, 2, 3");
  return v;
}

Verdict formal_cubes() {
  Verdict v;
  for (int n = 0; n <= 3; ++n) {
    OmegaCategory c = build_In(n);
    std::string got = groups(compute_homology(Theory::Formal, &c, nullptr, 3), 3);
    v.expect(got == concentrated(3, {0}), "I^" + std::to_string(n) + ": " + got);
  }
  v.say("HF(I^n) = Z in degree 0 for n <= 3");
  return v;
}

OmegaCategory bilocalized_cube(int n) {
  OmegaCategory I = build_In(n);
  return bilocalize(I, {I.find_name(std::string(n, '-'))}, {I.find_name(std::string(n, '+'))});
}

Verdict bilocalized_square() {
  Verdict v;
  OmegaCategory b = bilocalized_cube(2);
  HomologySummary h = compute_homology(Theory::Branching, &b, nullptr, 2);
  v.expect(h.trivial(1) && h.trivial(2), "H = " + groups(h, 2));
  v.say("I^2[-,+]: H " + groups(h, 2));
  return v;
}

Verdict thin_counterexample() {
  Verdict v;
  OmegaCategory c = build_thin_counterexample();
  CornerNerve nv(c, 0, 3);
  const SingularCube* id = nullptr;
  for (const auto& x : nv.cubes(2))
    if (x.img[word::code("0+")] == c.find_name("0+") && x.img[word::code("+0")] == c.find_name("+0") &&
        c.dim(x.interior()) == 1)
      id = &x;
  v.expect(id != nullptr, "identity 2-cube not found");
  if (!id) return v;
  v.expect(is_thin(c, *id), "identity cube not thin");
  v.expect(nv.boundary(*id).empty(), "identity cube not a cycle");
  SVec e;
  e.add(nv.find(*id), 1);
  v.expect(!image_of(corner_complex(nv, 2).d[3]).contains(e), "identity cube is a boundary");
  HomologySummary h = compute_homology(Theory::Branching, &c, nullptr, 2);
  HomologySummary hr = compute_homology(Theory::ReducedBranching, &c, nullptr, 2);
  v.say("thin cycle outside the image of d3; H2 " + h.describe(2) + ", HR2 " + hr.describe(2));
  return v;
}

Verdict operator_suite() {
  Verdict v;
  struct Case {
    const char* file;
    std::size_t partners;
  };
  for (Case k : {Case{"fig1.json", 0}, Case{"square.json", 0}, Case{"cube3.json", kCube3Partners}}) {
    OmegaCategory c = free_on(k.file);
    AxiomOptions opt;
    opt.n_max = 3;
    opt.samples = 0;
    opt.partners = k.partners;
    absorb(v, axiom_report(c, opt), k.file);
    auto cubes = cubes_up_to(c, 3);
    absorb(v, commutation_report(c, cubes), k.file);
    absorb(v, folding_report(c, cubes, 3), k.file);
  }
  v.say("21 cubical axioms, commutation relations, aspiration and pipeline on every cube of degree <= 3; "
        "filled 3-cube uses " + std::to_string(kCube3Partners) + " partners per binary check");
  return v;
}

Verdict t_equivalence_suite() {
  Verdict v;
  long folds = 0, glue = 0, whisker = 0, part1 = 0, part2 = 0;
  for (const char* f : {"fig1.json", "square.json", "cube3.json"}) {
    OmegaCategory c = free_on(f);
    for (int n = 1; n <= 3; ++n) {
      CornerNerve nv(c, 0, n + 1, true);
      ThinSolver solver(nv, n);
      const auto& br = nv.cubes(n);
      for (const auto& x : br) {
        v.expect(solver.equivalent({{x, 1}}, {{phi_minus(c, x), 1}}).equivalent,
                 std::string(f) + " Phi " + cube_json(c, x));
        ++folds;
      }
      // gluing: Phi(x +_j y) against x, under the dimension hypotheses
      auto all = enumerate_cubes(c, n);
      std::vector<std::unordered_map<SingularCube, std::vector<int>, SingularCubeHash>> neg(n + 1);
      for (int k = 0; k < static_cast<int>(all.size()); ++k)
        if (c.dim(all[k].interior()) >= 1)
          for (int j = 1; j <= n; ++j) neg[j][face(all[k], j, 0)].push_back(k);
      for (const auto& x : br) {
        if (c.dim(x.interior()) < 1) continue;
        for (int j = 1; j <= n; ++j) {
          auto it = neg[j].find(face(x, j, 1));
          if (it == neg[j].end()) continue;
          for (int yk : it->second) {
            SingularCube g = cubical_compose(c, x, all[yk], j);
            if (c.dim(g.interior()) < 1) continue;
            v.expect(solver.equivalent({{phi_minus(c, g), 1}}, {{x, 1}}).equivalent,
                     std::string(f) + " glue " + cube_json(c, x));
            ++glue;
          }
        }
      }
    }
  }

  std::vector<std::pair<std::string, OmegaCategory>> cats;
  for (int n = 2; n <= 3; ++n) {
    cats.emplace_back("I^" + std::to_string(n), build_In(n));
    cats.emplace_back("oriental " + std::to_string(n), build_oriental(n));
  }
  for (int p = 2; p <= 3; ++p) {
    cats.emplace_back("2_" + std::to_string(p), build_presented("2_p", p));
    cats.emplace_back("G_" + std::to_string(p), build_presented("G_p", p));
  }
  cats.emplace_back("fig1", free_on("fig1.json"));
  cats.emplace_back("square", free_on("square.json"));
  for (const auto& [name, c] : cats) {
    for (int n = 1; n <= 3; ++n) {
      CornerNerve nv(c, 0, n + 1, true);
      ThinSolver solver(nv, n);
      std::unique_ptr<CornerNerve> full;
      std::unique_ptr<ThinSolver> normal;
      const int N = c.size();
      for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
          for (int p = 0; p < n; ++p) {
            int xy = c.compose(x, y, p);
            if (xy < 0) continue;
            const int dx = c.dim(x), dy = c.dim(y), dxy = c.dim(xy);
            if (p == 0 && dx >= 1 && dx < n && dxy >= 1 && dxy < n) {
              v.expect(solver.equivalent({{box_minus(c, xy, n), 1}}, {{box_minus(c, x, n), 1}}).equivalent,
                       name + " whisker " + c.name(xy));
              ++whisker;
            }
            if (n >= 2 && p >= 1 && dx == n && dy == n) {
              CubeChain sum{{box_minus(c, x, n), 1}, {box_minus(c, y, n), 1}};
              v.expect(solver.equivalent({{box_minus(c, xy, n), 1}}, sum).equivalent,
                       name + " composite " + c.name(xy) + " p=" + std::to_string(p));
              if (p == n - 1) {
                if (!full) {
                  full = std::make_unique<CornerNerve>(c, 0, n + 1);
                  normal = std::make_unique<ThinSolver>(*full, n);
                }
                SVec d = normal->vector({{box_minus(c, xy, n), 1}, {box_minus(c, x, n), -1},
                                         {box_minus(c, y, n), -1}});
                v.expect(normal->normalized_boundary(d), name + " normalized boundary " + c.name(xy));
                ++part1;
              } else {
                ++part2;
              }
            }
          }
    }
  }
  v.say("Phi " + std::to_string(folds) + ", glue " + std::to_string(glue) + ", x*0y " +
        std::to_string(whisker) + ", x*_{n-1}y " + std::to_string(part1) + ", x*_p y (1<=p<=n-2) " +
        std::to_string(part2));
  if (part2 == 0) v.say("no composable pair for 1 <= p <= n-2 exists in the desk-scale categories");
  return v;
}

Verdict calcul() {
  Verdict v;
  for (const char* k : {"2_p", "G_p"})
    for (int p = 2; p <= 3; ++p) {
      CalculReport r = calcul_crosscheck(build_presented(k, p), 3);
      std::string name = std::string(k).substr(0, 2) + std::to_string(p);
      for (const auto& row : r.rows) {
        std::string detail = name + " n=" + std::to_string(row.n) + " H" + std::to_string(row.n + 1) +
                             "- " + show(row.corner) + " vs H" + std::to_string(row.n) + "(P) " +
                             show(row.path);
        v.expect(row.match, detail);
        if (row.corner.betti || !row.corner.torsion.empty()) v.say(detail);
      }
      v.expect(r.rows.size() == 2, name + " rows " + std::to_string(r.rows.size()));
    }
  return v;
}

Verdict diff_identities() {
  Verdict v;
  for (const char* f : {"fig1.json", "square.json", "cube3.json"}) {
    OmegaCategory c = free_on(f);
    for (int n = 2; n <= 3; ++n) {
      DiffReport r = diff_formula_check(c, n);
      v.checked += r.checked;
      v.failed += r.failed;
      if (r.failed && v.notes.size() < 4) v.notes.push_back(std::string(f) + " " + r.example);
    }
  }
  v.say("both identities on every branching cube of degree 2 and 3");
  return v;
}

Verdict thin_elements_table() {
  Verdict v;
  std::vector<std::pair<std::string, OmegaCategory>> cats;
  cats.emplace_back("F(fig1)", free_on("fig1.json"));
  cats.emplace_back("F(square)", free_on("square.json"));
  cats.emplace_back("F(cube3)", free_on("cube3.json"));
  for (int n = 1; n <= 3; ++n) cats.emplace_back("I^" + std::to_string(n), build_In(n));
  for (int p = 1; p <= 3; ++p) cats.emplace_back("G_" + std::to_string(p), build_presented("G_p", p));
  cats.emplace_back("thin quotient", build_thin_counterexample());
  std::printf("      %-14s %-16s %-16s %s\n", "category", "H-", "HR-", "agree");
  long agree = 0;
  for (const auto& [name, c] : cats) {
    HomologySummary h = compute_homology(Theory::Branching, &c, nullptr, 2);
    HomologySummary hr = compute_homology(Theory::ReducedBranching, &c, nullptr, 2);
    bool same = h == hr;
    agree += same;
    std::printf("      %-14s %-16s %-16s %s\n", name.c_str(), groups(h, 2).c_str(), groups(hr, 2).c_str(),
                same ? "yes" : "no");
    ++v.checked;
  }
  v.say(std::to_string(agree) + " of " + std::to_string(cats.size()) + " agree up to degree 2");
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  bool required;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "goubault-baseline", kBudget1, true, goubault_baseline},
      {2, "branching-f1", kBudget2, true, branching_f1},
      {3, "globes", kBudget3, true, [] { return presented("2_p"); }},
      {4, "parallel-generators", kBudget4, true, [] { return presented("G_p"); }},
      {5, "formal-cubes", kBudget5, true, formal_cubes},
      {6, "bilocalized-square", kBudget6, true, bilocalized_square},
      {7, "thin-cycle", kBudget7, true, thin_counterexample},
      {8, "operator-laws", kBudget8, true, operator_suite},
      {9, "t-equivalence", kBudget9, true, t_equivalence_suite},
      {10, "calcul", kBudget10, true, calcul},
      {11, "diff-identities", kBudget11, true, diff_identities},
      {12, "thin-elements-table", kBudget12, false, thin_elements_table},
  };
  int red = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    std::string error;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = error.empty() && v.failed <= kAllowedFailures && secs <= c.budget;
    if (!pass && c.required) ++red;
    std::printf("C%02d %s %-20s %8.2fs/%4.0fs checks %ld failed %ld  %s\n", c.id, pass ? "PASS" : "FAIL", c.name,
                secs, c.budget, v.checked, v.failed, v.info.c_str());
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    for (const auto& n : v.notes) std::printf("      %s\n", n.c_str());
    if (secs > c.budget) std::printf("      over budget\n");
    if (c.id == 6) {
      auto a0 = std::chrono::steady_clock::now();
      std::string note;
      try {
        OmegaCategory b = bilocalized_cube(3);
        note = "I^3[-,+]: H " + groups(compute_homology(Theory::Branching, &b, nullptr, 3), 3);
      } catch (const std::exception& e) {
        note = std::string("I^3[-,+]: ") + e.what();
      }
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - a0).count();
      std::printf("      attempt %s (%.2fs, budget %.0fs%s)\n", note.c_str(), s, kBudget6Attempt,
                  s > kBudget6Attempt ? ", exceeded" : "");
    }
    std::fflush(stdout);
  }
  std::printf("%s: %d required criteria failed\n", red ? "RED" : "GREEN", red);
  return red ? 1 : 0;
}
