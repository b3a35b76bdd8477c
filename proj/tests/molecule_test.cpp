#include "category.hpp"
#include "error.hpp"
#include "nerve.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace corner;
using namespace testing_support;

namespace {

int named(const OmegaCategory& c, const std::string& n) {
  int m = c.find_name(n);
  REQUIRE(m >= 0);
  return m;
}

int by_description(const OmegaCategory& c, const std::string& d) {
  for (int m = 0; m < c.size(); ++m)
    if (c.describe(m) == d) return m;
  FAIL("no morphism described as " << d);
  return -1;
}

int count_dim(const OmegaCategory& c, int d) { return static_cast<int>(c.of_dim(d).size()); }

}  // namespace

TEST_CASE("standard cubes") {
  OmegaCategory I0 = build_In(0);
  CHECK(I0.size() == 1);

  OmegaCategory I1 = build_In(1);
  CHECK(I1.size() == 3);
  int e = named(I1, "0");
  CHECK(I1.s(e, 0) == named(I1, "-"));
  CHECK(I1.t(e, 0) == named(I1, "+"));

  OmegaCategory I2 = build_In(2);
  int sq = named(I2, "00");
  CHECK(I2.describe(I2.s(sq, 1)) == "(-0 *0 0+)");
  CHECK(I2.describe(I2.t(sq, 1)) == "(0- *0 +0)");
  CHECK(I2.s(sq, 0) == named(I2, "--"));
  CHECK(I2.t(sq, 0) == named(I2, "++"));
}

TEST_CASE("orientals") {
  CHECK(build_oriental(0).size() == 1);
  OmegaCategory O1 = build_oriental(1);
  CHECK(O1.size() == 3);
  // deleting position 0 is even, so the source of {0,1} is {1}
  int e = named(O1, "01");
  CHECK(O1.s(e, 0) == named(O1, "1"));
  CHECK(O1.t(e, 0) == named(O1, "0"));

  OmegaCategory O2 = build_oriental(2);
  int top = named(O2, "012");
  const Scheme& S = *O2.scheme();
  CHECK(O2.cells(O2.s(top, 1)) == (S.closure(S.find_label("01")) | S.closure(S.find_label("12"))));
  CHECK(O2.t(top, 1) == named(O2, "02"));
}

TEST_CASE("free categories on precubical sets") {
  CHECK(build_free_category(parse_precubical(R"({"cubes":[{"id":"a","dim":0,"faces":{}}]})")).size() == 1);

  OmegaCategory path = build_free_category(path_set());
  CHECK(path.size() == 6);
  std::set<std::string> ones;
  for (int m : path.of_dim(1)) ones.insert(path.describe(m));
  CHECK(ones == std::set<std::string>{"u", "v", "(u *0 v)"});

  OmegaCategory f1 = free_on("fig1.json");
  ones.clear();
  for (int m : f1.of_dim(1)) ones.insert(f1.describe(m));
  CHECK(ones == std::set<std::string>{"u", "v", "w", "x", "(u *0 v)", "(w *0 x)"});
  CHECK(f1.non_contracting());
  CHECK_FALSE(f1.length_at_most_one());
  CHECK(build_presented("G_p", 2).length_at_most_one());
}

TEST_CASE("closure budget") {
  try {
    build_free_category(fixture("cube3.json"), BuildOptions{10});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ClosureBudgetExceeded);
  }
}

TEST_CASE("boundaries") {
  OmegaCategory I1 = build_In(1);
  int e = named(I1, "0");
  CHECK(I1.boundary_of(e, 0, 0) == named(I1, "-"));
  CHECK(I1.boundary_of(e, 1, 1) == e);
  try {
    I1.boundary_of(e, 2, 0);
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::BadLevel);
  }
}

TEST_CASE("composition") {
  OmegaCategory I2 = build_In(2);
  int a = named(I2, "-0"), b = named(I2, "0+");
  int ab = I2.compose(a, b, 0);
  REQUIRE(ab >= 0);
  const Scheme& S = *I2.scheme();
  CHECK(I2.cells(ab) == (S.closure(S.find_label("-0")) | S.closure(S.find_label("0+"))));
  for (int x = 0; x < I2.size(); ++x)
    for (int p = 0; p < 2; ++p) {
      CHECK(I2.compose(I2.s(x, p), x, p) == x);
      CHECK(I2.compose(x, I2.t(x, p), p) == x);
    }

  OmegaCategory f1 = free_on("fig1.json");
  CHECK(f1.compose(named(f1, "u"), named(f1, "w"), 0) == -1);
  CHECK(f1.compose(named(f1, "u"), named(f1, "v"), 0) == by_description(f1, "(u *0 v)"));
}

TEST_CASE("globular axioms hold on every built category") {
  std::vector<OmegaCategory> cats;
  for (int n = 0; n <= 3; ++n) cats.push_back(build_In(n));
  for (int n = 0; n <= 3; ++n) cats.push_back(build_oriental(n));
  for (int p = 1; p <= 3; ++p) {
    cats.push_back(build_presented("2_p", p));
    cats.push_back(build_presented("G_p", p));
  }
  cats.push_back(free_on("fig1.json"));
  cats.push_back(free_on("square.json"));
  cats.push_back(free_on("cube3.json"));
  cats.push_back(build_thin_counterexample());
  for (const auto& c : cats) {
    auto bad = check_globular_axioms(c, 2000000);
    CHECK(bad.empty());
    if (!bad.empty()) MESSAGE(bad.front());
  }
}

TEST_CASE("decomposition") {
  OmegaCategory I2 = build_In(2);
  const Scheme& S = *I2.scheme();
  TreePtr leaf = S.decompose(I2.cells(named(I2, "00")));
  REQUIRE(leaf);
  CHECK(leaf->is_leaf());

  OmegaCategory I3 = build_In(3);
  const Scheme& S3 = *I3.scheme();
  int cube = named(I3, "000");
  TreePtr t = S3.decompose(I3.cells(I3.s(cube, 2)));
  REQUIRE(t);
  CHECK(t->level == 1);
  CHECK(S3.decompose(I3.cells(I3.s(cube, 1)))->level == 0);
  auto name = [&](int c) { return S3.label[c]; };
  std::string shown = t->show(name);
  for (const char* leafname : {"-00", "0++", "-0-", "0+0", "00-", "++0"})
    CHECK(shown.find(leafname) != std::string::npos);

  OmegaCategory path = build_free_category(path_set());
  const Scheme& P = *path.scheme();
  TreePtr uv = P.decompose(path.cells(by_description(path, "(u *0 v)")));
  REQUIRE(uv);
  CHECK(uv->level == 0);
  CHECK(uv->left->is_leaf());
  CHECK(P.label[uv->left->leaf] == path.describe(named(path, "u")));
  CHECK(P.label[uv->right->leaf] == path.describe(named(path, "v")));

  CellSet junk(S.size());
  junk.set(S.find_label("-0"));
  junk.set(S.find_label("+0"));
  CHECK_FALSE(S.decompose(S.close(junk)));
}

TEST_CASE("evaluation of molecules along cubes") {
  OmegaCategory I3 = build_In(3);
  const Scheme& S = *I3.scheme();
  // identity cube: every word to its own atom
  SingularCube id;
  id.n = 3;
  for (int w = 0; w < word::count(3); ++w) id.img.push_back(I3.find_cells(S.closure(S.find_label(word::str(3, w)))));
  for (int m = 0; m < I3.size(); ++m) CHECK(evaluate_molecule(I3, id, I3.cells(m)) == m);

  OmegaCategory I1 = build_In(1);
  OmegaCategory path = build_free_category(path_set());
  SingularCube x;
  x.n = 1;
  x.img = {named(path, "a"), by_description(path, "(u *0 v)"), named(path, "c")};
  CHECK(evaluate_molecule(path, x, I1.cells(named(I1, "0"))) == x.img[1]);

  OmegaCategory f = free_on("square.json");
  for (const auto& y : enumerate_cubes(f, 2)) {
    int a = y.img[word::code("-0")], b = y.img[word::code("0+")];
    CHECK(evaluate_boundary(f, y, word::zero_word(2), 0) == f.compose(a, b, 0));
  }
}

TEST_CASE("evaluation is independent of the decomposition") {
  // both pastings of the top cell's source in I^3 evaluate identically in F(cube)
  OmegaCategory f = free_on("cube3.json");
  OmegaCategory I3 = build_In(3);
  auto cubes = enumerate_cubes(f, 3, {Filter::Branching});
  REQUIRE_FALSE(cubes.empty());
  for (std::size_t k = 0; k < cubes.size(); k += 97) {
    const auto& x = cubes[k];
    auto at = [&](const char* w) { return x.img[word::code(w)]; };
    int left = f.compose(f.compose(at("-00"), at("0++"), 0), f.compose(at("-0-"), at("0+0"), 0), 1);
    if (left < 0) continue;
    int whole = f.compose(left, f.compose(at("00-"), at("++0"), 0), 1);
    CHECK(whole == evaluate_boundary(f, x, word::zero_word(3), 0));
  }
}

TEST_CASE("path shift") {
  OmegaCategory p2 = path_shift(build_presented("2_p", 2));
  CHECK(p2.size() == build_presented("2_p", 1).size());
  CHECK(count_dim(p2, 1) == 1);
  OmegaCategory pg = path_shift(build_presented("G_p", 2));
  CHECK(pg.size() == 4);
  CHECK(count_dim(pg, 1) == 2);
  OmegaCategory p1 = path_shift(build_In(1));
  CHECK(p1.size() == 1);
  CHECK_THROWS_AS(path_shift(build_In(2)), Error);
}

TEST_CASE("bilocalization") {
  OmegaCategory I2 = build_In(2);
  OmegaCategory b = bilocalize(I2, {named(I2, "--")}, {named(I2, "++")});
  CHECK(b.size() == 5);
  CHECK(count_dim(b, 0) == 2);
  CHECK(count_dim(b, 1) == 2);
  CHECK(count_dim(b, 2) == 1);
  for (int m : b.of_dim(1)) CHECK(b.s(m, 0) != b.t(m, 0));

  std::vector<int> all = I2.objects();
  CHECK(bilocalize(I2, all, all).size() == I2.size());

  OmegaCategory f1 = free_on("fig1.json");
  OmegaCategory one = bilocalize(f1, {named(f1, "s")}, {named(f1, "b")});
  CHECK(one.size() == 3);
  REQUIRE(count_dim(one, 1) == 1);
  int path = one.of_dim(1).front();
  CHECK(one.describe(one.s(path, 0)) == "s");
  CHECK(one.describe(one.t(path, 0)) == "b");

  try {
    bilocalize(I2, {named(I2, "00")}, {});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownState);
  }
}

TEST_CASE("presented categories") {
  CHECK(build_presented("2_p", 1).size() == 3);
  CHECK(build_presented("2_p", 2).size() == 5);
  CHECK(build_presented("G_p", 2).size() == 6);
  CHECK(build_presented("2_p", 3).size() == 7);
  CHECK(build_presented("G_p", 3).size() == 8);
  try {
    build_presented("2_p", 9);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionCap);
  }
}

TEST_CASE("interchange where defined") {
  OmegaCategory c = free_on("square.json");
  const int n = c.size();
  long checked = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = c.compose(x, y, 1);
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          int zw = c.compose(z, w, 1);
          if (zw < 0) continue;
          int lhs = c.compose(xy, zw, 0);
          int xz = c.compose(x, z, 0), yw = c.compose(y, w, 0);
          if (lhs < 0 || xz < 0 || yw < 0) continue;
          CHECK(lhs == c.compose(xz, yw, 1));
          ++checked;
        }
    }
  CHECK(checked > 0);
}
