#include "corner/corner.h"

#include "category.hpp"
#include "error.hpp"
#include "folding.hpp"
#include "homology.hpp"
#include "precub.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

using namespace corner;
using nlohmann::ordered_json;

struct corner_category {
  std::optional<PrecubicalSet> k;
  OmegaCategory c;
};

namespace {

thread_local std::string last_error;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

corner_status status_of(Errc e) { return static_cast<corner_status>(static_cast<int>(e) + 1); }

template <class F>
corner_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return CORNER_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const IoFailure& e) {
    last_error = e.what();
    return CORNER_E_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CORNER_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CORNER_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

struct NullArg {};

void need(const void* p) {
  if (!p) throw NullArg{};
}

template <class F>
corner_status guard_args(F&& f) {
  try {
    return guard(f);
  } catch (const NullArg&) {
    last_error = "null argument";
    return CORNER_E_NULL;
  }
}

int parse_param(const std::string& s) {
  if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), ::isdigit))
    fail(Errc::BadArgument, "bad builtin parameter '" + s + "'");
  int p = std::stoi(s);
  if (p < 1) fail(Errc::BadArgument, "builtin parameter must be positive");
  if (p > Limits::hard_cap) fail(Errc::DimensionCap, "builtin parameter exceeds the cap");
  return p;
}

corner_category* load_builtin(const std::string& name) {
  auto* h = new corner_category;
  try {
    if (name.rfind("2_", 0) == 0) {
      h->c = build_presented("2_p", parse_param(name.substr(2)));
    } else if (name.rfind("G_", 0) == 0) {
      h->c = build_presented("G_p", parse_param(name.substr(2)));
    } else if (name.rfind("I_", 0) == 0) {
      int n = parse_param(name.substr(2));
      h->k = standard_cube(n);
      h->c = build_In(n);
    } else {
      fail(Errc::BadArgument, "unknown builtin '" + name + "'");
    }
  } catch (...) {
    delete h;
    throw;
  }
  return h;
}

corner_category* load_text(const std::string& text) {
  auto* h = new corner_category;
  try {
    h->k = parse_precubical(text);
    ValidationReport r = validate(*h->k);
    if (!r.ok) fail(Errc::InvalidInput, "precubical set fails validation: " + r.violations.front().message);
    h->c = build_free_category(*h->k);
  } catch (...) {
    delete h;
    throw;
  }
  return h;
}

void check_dim(int d) {
  if (d < 0) fail(Errc::BadArgument, "negative dimension");
  if (d > Limits::default_max_dim())
    fail(Errc::DimensionCap, "dimension " + std::to_string(d) + " exceeds the cap of " +
                                 std::to_string(Limits::default_max_dim()));
}

Filter parse_filter(const std::string& f) {
  if (f == "all") return Filter::All;
  if (f == "branching") return Filter::Branching;
  if (f == "merging") return Filter::Merging;
  fail(Errc::BadArgument, "unknown filter '" + f + "'");
}

ordered_json group_json(const HomologyGroup& g) {
  ordered_json tor = ordered_json::array();
  for (const auto& t : g.torsion) tor.push_back(t.str());
  return {{"degree", g.degree}, {"betti", g.betti}, {"torsion", tor}};
}

ordered_json report_json(const AxiomReport& r) {
  ordered_json a = ordered_json::array();
  for (const auto& s : r.stats) {
    ordered_json e{{"id", s.id}, {"checked", s.checked}, {"failed", s.failed}};
    if (!s.example.empty()) e["example"] = s.example;
    a.push_back(e);
  }
  return a;
}

std::string face_flags(const OmegaCategory& c, const SingularCube& x) {
  std::string s;
  for (int i = 1; i <= x.n; ++i)
    for (int a = 0; a < 2; ++a) {
      SingularCube f = face(x, i, a);
      CubeClass k = classify(c, f);
      s += " d" + std::to_string(i) + (a ? "+" : "-") + ":";
      s += k.thin ? "thin" : (k.branching ? "branching" : "other");
    }
  return s;
}

ordered_json cube_entry(const OmegaCategory& c, const SingularCube& x) {
  return ordered_json::parse(cube_json(c, x));
}

}  // namespace

extern "C" {

const char* corner_status_name(corner_status s) {
  switch (s) {
    case CORNER_OK: return "Ok";
    case CORNER_E_IO: return "IoError";
    case CORNER_E_NULL: return "NullArgument";
    default:
      if (s > CORNER_OK && s <= CORNER_E_INTERNAL) return errc_name(static_cast<Errc>(s - 1));
      return "Unknown";
  }
}

const char* corner_last_error(void) { return last_error.c_str(); }

void corner_string_free(char* s) { delete[] s; }

int corner_max_dim(void) {
  try {
    return Limits::default_max_dim();
  } catch (const Error&) {
    return Limits::hard_cap;
  }
}

corner_status corner_category_load(const char* source, corner_category** out) {
  return guard_args([&] {
    need(source);
    need(out);
    *out = nullptr;
    std::string s = source;
    if (s.rfind("builtin:", 0) == 0) {
      *out = load_builtin(s.substr(8));
      return;
    }
    std::ifstream f(s, std::ios::binary);
    if (!f) throw IoFailure("cannot open " + s);
    std::stringstream ss;
    ss << f.rdbuf();
    *out = load_text(ss.str());
  });
}

corner_status corner_category_from_json(const char* text, corner_category** out) {
  return guard_args([&] {
    need(text);
    need(out);
    *out = nullptr;
    *out = load_text(text);
  });
}

void corner_category_free(corner_category* c) { delete c; }

corner_status corner_category_morphisms(const corner_category* c, int dim, size_t* out) {
  return guard_args([&] {
    need(c);
    need(out);
    *out = dim < 0 ? static_cast<size_t>(c->c.size()) : c->c.of_dim(dim).size();
  });
}

namespace {

void add_violations(const ValidationReport& r, ordered_json& v, std::string& table) {
  for (const auto& x : r.violations) {
    v.push_back({{"rule", x.rule}, {"cube", x.cube}, {"indices", x.indices}, {"message", x.message}});
    table += x.rule + "\t" + x.cube + "\t" + x.message + "\n";
  }
}

void add_globular(const OmegaCategory& c, ordered_json& v, std::string& table) {
  for (const auto& m : check_globular_axioms(c, 200000)) {
    v.push_back({{"rule", "Globular"}, {"cube", ""}, {"indices", ordered_json::array()}, {"message", m}});
    table += "Globular\t\t" + m + "\n";
  }
}

char* render_validation(const ordered_json& v, const std::string& table, corner_format format, int* ok) {
  *ok = v.empty() ? 1 : 0;
  if (format == CORNER_FORMAT_TABLE)
    return dup(std::string(*ok ? "ok" : "invalid") + "\t" + std::to_string(v.size()) + " violations\n" + table);
  ordered_json j{{"ok", v.empty()}, {"violations", v}};
  return dup(j.dump() + "\n");
}

}  // namespace

corner_status corner_validate(const corner_category* c, corner_format format, int* ok, char** report) {
  return guard_args([&] {
    need(c);
    need(ok);
    need(report);
    ordered_json v = ordered_json::array();
    std::string table;
    if (c->k) add_violations(validate(*c->k), v, table);
    add_globular(c->c, v, table);
    *report = render_validation(v, table, format, ok);
  });
}

corner_status corner_validate_text(const char* text, corner_format format, int* ok, char** report) {
  return guard_args([&] {
    need(text);
    need(ok);
    need(report);
    PrecubicalSet k = parse_precubical(text);
    ValidationReport r = validate(k);
    ordered_json v = ordered_json::array();
    std::string table;
    add_violations(r, v, table);
    if (r.ok) add_globular(build_free_category(k), v, table);
    *report = render_validation(v, table, format, ok);
  });
}

corner_status corner_homology(const corner_category* c, const char* theory, int max_dim,
                              corner_format format, char** out) {
  return guard_args([&] {
    need(c);
    need(theory);
    need(out);
    check_dim(max_dim);
    Theory t = parse_theory(theory);
    if ((t == Theory::GoubaultMinus || t == Theory::GoubaultPlus) && !c->k)
      fail(Errc::BadArgument, "Goubault homology needs a precubical input");
    HomologySummary h = compute_homology(t, &c->c, c->k ? &*c->k : nullptr, max_dim);
    *out = dup(format == CORNER_FORMAT_TABLE ? homology_table(t, h) : homology_json(t, h) + "\n");
  });
}

corner_status corner_nerve(const corner_category* c, int dim, const char* filter, size_t* count,
                           char** json) {
  return guard_args([&] {
    need(c);
    need(filter);
    check_dim(dim);
    Filter f = parse_filter(filter);
    if (f != Filter::All && !c->c.non_contracting())
      fail(Errc::NotNonContracting, "branching and merging filters need a non-contracting category");
    auto cubes = enumerate_cubes(c->c, dim, {f});
    if (count) *count = cubes.size();
    if (json) {
      ordered_json a = ordered_json::array();
      for (const auto& x : cubes) a.push_back(cube_entry(c->c, x));
      ordered_json j{{"degree", dim}, {"cubes", a}};
      *json = dup(j.dump() + "\n");
    }
  });
}

corner_status corner_fold(const corner_category* c, int dim, size_t index, int trace,
                          corner_format format, char** out) {
  return guard_args([&] {
    need(c);
    need(out);
    check_dim(dim);
    if (dim < 1) fail(Errc::BadArgument, "folding needs degree at least 1");
    auto cubes = enumerate_cubes(c->c, dim, {Filter::Branching});
    if (index >= cubes.size())
      fail(Errc::BadIndex, "cube index " + std::to_string(index) + " out of range (" +
                               std::to_string(cubes.size()) + " branching cubes)");
    const SingularCube& x = cubes[index];
    std::vector<TraceStep> steps;
    SingularCube folded = dim >= 2 ? apply_pipeline(c->c, fold_pipeline(dim), x, &steps) : x;
    SingularCube phi = phi_minus(c->c, x);
    const bool agree = folded == phi;
    if (format == CORNER_FORMAT_TABLE) {
      std::string s = "cube " + std::to_string(index) + " degree " + std::to_string(dim) +
                      " interior " + OmegaCategory::ref(x.interior()) + face_flags(c->c, x) + "\n";
      if (trace)
        for (const auto& st : steps)
          s += st.move.str() + " interior " + OmegaCategory::ref(st.result.interior()) +
               face_flags(c->c, st.result) + "\n";
      s += std::string("folded ") + (is_folded(folded) ? "yes" : "no") + " phi " +
           (agree ? "agrees" : "differs") + "\n";
      *out = dup(s);
      return;
    }
    ordered_json j{{"degree", dim}, {"index", index}, {"cube", cube_entry(c->c, x)}};
    if (trace) {
      ordered_json t = ordered_json::array();
      for (const auto& st : steps) {
        ordered_json faces = ordered_json::array();
        for (int i = 1; i <= dim; ++i)
          for (int a = 0; a < 2; ++a) {
            CubeClass k = classify(c->c, face(st.result, i, a));
            faces.push_back({{"face", "d" + std::to_string(i) + (a ? "+" : "-")},
                             {"branching", k.branching},
                             {"thin", k.thin}});
          }
        t.push_back({{"move", st.move.str()},
                     {"interior", OmegaCategory::ref(st.result.interior())},
                     {"faces", faces}});
      }
      j["trace"] = t;
    }
    j["folded"] = cube_entry(c->c, folded);
    j["is_folded"] = is_folded(folded);
    j["matches_phi"] = agree;
    *out = dup(j.dump() + "\n");
  });
}

corner_status corner_check_laws(const corner_category* c, int max_dim, size_t samples, uint64_t seed,
                                corner_format format, int* ok, char** report) {
  return guard_args([&] {
    need(c);
    need(ok);
    need(report);
    check_dim(max_dim);
    AxiomOptions opt;
    opt.n_max = max_dim;
    opt.samples = samples;
    opt.seed = seed;
    AxiomReport axioms = axiom_report(c->c, opt);

    std::mt19937_64 rng(seed);
    std::vector<SingularCube> cubes;
    for (int n = 1; n <= max_dim; ++n) {
      auto all = enumerate_cubes(c->c, n);
      if (samples > 0 && all.size() > samples) {
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(samples);
        std::sort(all.begin(), all.end());
      }
      cubes.insert(cubes.end(), all.begin(), all.end());
    }
    AxiomReport comm = commutation_report(c->c, cubes);
    AxiomReport fold = folding_report(c->c, cubes, max_dim);
    *ok = axioms.ok() && comm.ok() && fold.ok();
    if (format == CORNER_FORMAT_TABLE) {
      *report = dup(axioms.table() + comm.table() + fold.table() + (*ok ? "all pass\n" : "FAILURES\n"));
    } else {
      ordered_json j{{"ok", static_cast<bool>(*ok)},
                     {"seed", seed},
                     {"samples", samples},
                     {"axioms", report_json(axioms)},
                     {"commutation", report_json(comm)},
                     {"folding", report_json(fold)}};
      *report = dup(j.dump() + "\n");
    }
  });
}

corner_status corner_crosscheck_calcul(const corner_category* c, int up_to, corner_format format, int* ok,
                                       char** report) {
  return guard_args([&] {
    need(c);
    need(ok);
    need(report);
    check_dim(up_to);
    CalculReport r = calcul_crosscheck(c->c, up_to);
    *ok = r.ok();
    if (format == CORNER_FORMAT_TABLE) {
      std::string s = "n\tH_{n+1}^-(C)\tH_n(PC)\tmatch\n";
      for (const auto& row : r.rows) {
        HomologySummary a{{row.corner}}, b{{row.path}};
        s += std::to_string(row.n) + "\t" + a.describe(0) + "\t" + b.describe(0) + "\t" +
             (row.match ? "yes" : "no") + "\n";
      }
      *report = dup(s);
    } else {
      ordered_json rows = ordered_json::array();
      for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"corner", group_json(row.corner)},
                        {"path", group_json(row.path)},
                        {"match", row.match}});
      ordered_json j{{"ok", r.ok()}, {"rows", rows}};
      *report = dup(j.dump() + "\n");
    }
  });
}

}  // extern "C"
