#include "precub.hpp"

#include "error.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace corner {

using nlohmann::json;

PrecubicalSet PrecubicalSet::from_raw(std::vector<RawCube> raw) {
  std::sort(raw.begin(), raw.end(), [](const RawCube& a, const RawCube& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
  });
  PrecubicalSet k;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!k.index_.emplace(raw[i].id, static_cast<int>(i)).second)
      fail(Errc::Syntax, "duplicate cube id '" + raw[i].id + "'");
  }
  k.cubes_.resize(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) {
    Cube& out = k.cubes_[c];
    out.id = raw[c].id;
    out.dim = raw[c].dim;
    if (static_cast<int>(raw[c].faces.size()) != 2 * raw[c].dim)
      fail(Errc::Syntax, "cube '" + raw[c].id + "' must list exactly " +
                             std::to_string(2 * raw[c].dim) + " faces");
    for (std::size_t s = 0; s < raw[c].faces.size(); ++s) {
      const std::string& f = raw[c].faces[s];
      auto it = k.index_.find(f);
      if (it == k.index_.end())
        fail(Errc::DanglingFace, "cube '" + raw[c].id + "' has face '" + f + "' which is absent");
      if (raw[it->second].dim != raw[c].dim - 1)
        fail(Errc::DimensionMismatch, "face '" + f + "' of cube '" + raw[c].id +
                                          "' has dimension " + std::to_string(raw[it->second].dim));
      out.faces.push_back(it->second);
    }
  }
  return k;
}

int PrecubicalSet::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int PrecubicalSet::max_dim() const {
  int d = -1;
  for (const auto& c : cubes_) d = std::max(d, c.dim);
  return d;
}

std::vector<int> PrecubicalSet::of_dim(int n) const {
  std::vector<int> r;
  for (int c = 0; c < size(); ++c)
    if (cubes_[c].dim == n) r.push_back(c);
  return r;
}

PrecubicalSet parse_precubical(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::Syntax, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cubes") || !doc["cubes"].is_array())
    fail(Errc::Syntax, "document must be an object with a \"cubes\" array");
  std::vector<PrecubicalSet::RawCube> raw;
  for (const json& c : doc["cubes"]) {
    if (!c.is_object() || !c.contains("id") || !c["id"].is_string() || !c.contains("dim") ||
        !c["dim"].is_number_unsigned())
      fail(Errc::Syntax, "every cube needs a string \"id\" and a natural \"dim\"");
    PrecubicalSet::RawCube r;
    r.id = c["id"].get<std::string>();
    if (r.id.empty()) fail(Errc::Syntax, "cube ids must be non-empty");
    r.dim = c["dim"].get<int>();
    r.faces.assign(2 * r.dim, "");
    json faces = c.contains("faces") ? c["faces"] : json::object();
    if (!faces.is_object()) fail(Errc::Syntax, "\"faces\" must be an object");
    for (auto it = faces.begin(); it != faces.end(); ++it) {
      const std::string& key = it.key();
      if (key.size() < 3 || key[0] != 'd' || (key.back() != '-' && key.back() != '+'))
        fail(Errc::Syntax, "bad face key '" + key + "'");
      std::string num = key.substr(1, key.size() - 2);
      if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num[0] == '0')
        fail(Errc::Syntax, "bad face key '" + key + "'");
      int i = std::stoi(num);
      if (i > r.dim)
        fail(Errc::DimensionMismatch,
             "face key '" + key + "' exceeds the dimension of cube '" + r.id + "'");
      if (!it.value().is_string()) fail(Errc::Syntax, "face values must be cube ids");
      r.faces[2 * (i - 1) + (key.back() == '+' ? 1 : 0)] = it.value().get<std::string>();
    }
    for (int s = 0; s < 2 * r.dim; ++s)
      if (r.faces[s].empty())
        fail(Errc::Syntax, "cube '" + r.id + "' is missing face d" + std::to_string(s / 2 + 1) +
                               (s % 2 ? "+" : "-"));
    raw.push_back(std::move(r));
  }
  return PrecubicalSet::from_raw(std::move(raw));
}

std::string serialize_precubical(const PrecubicalSet& k) {
  json cubes = json::array();
  for (const auto& c : k.cubes()) {
    json faces = json::object();
    for (int i = 1; i <= c.dim; ++i) {
      faces["d" + std::to_string(i) + "-"] = k.cube(c.faces[2 * (i - 1)]).id;
      faces["d" + std::to_string(i) + "+"] = k.cube(c.faces[2 * (i - 1) + 1]).id;
    }
    cubes.push_back(json{{"id", c.id}, {"dim", c.dim}, {"faces", faces}});
  }
  return json{{"cubes", cubes}}.dump();
}

ValidationReport validate(const PrecubicalSet& k) {
  ValidationReport rep;
  for (int c = 0; c < k.size(); ++c) {
    const auto& cu = k.cube(c);
    for (int s = 0; s < 2 * cu.dim; ++s) {
      if (k.cube(cu.faces[s]).dim != cu.dim - 1)
        rep.violations.push_back({"FaceDimension", cu.id, {s / 2 + 1},
                                  "face has dimension " +
                                      std::to_string(k.cube(cu.faces[s]).dim)});
    }
  }
  for (int c = 0; c < k.size(); ++c) {
    const auto& cu = k.cube(c);
    bool dims_ok = true;
    for (int s = 0; s < 2 * cu.dim; ++s)
      if (k.cube(cu.faces[s]).dim != cu.dim - 1) dims_ok = false;
    if (!dims_ok) continue;
    for (int i = 1; i <= cu.dim; ++i)
      for (int j = i + 1; j <= cu.dim; ++j) {
        std::string bad;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            int lhs = k.face(k.face(c, j, b), i, a);
            int rhs = k.face(k.face(c, i, a), j - 1, b);
            if (lhs != rhs) {
              if (!bad.empty()) bad += ", ";
              bad += std::string(a ? "+" : "-") + (b ? "+" : "-");
            }
          }
        if (!bad.empty())
          rep.violations.push_back({"CubeAxiom", cu.id, {i, j},
                                    "face(face(c," + std::to_string(j) + ",b)," +
                                        std::to_string(i) + ",a) differs for (a,b) in {" + bad +
                                        "}"});
      }
  }
  // Directed cycles in the 1-skeleton.
  const int n = k.size();
  std::vector<std::vector<int>> adj(n);
  std::vector<char> self(n, 0);
  for (int e : k.of_dim(1)) {
    int a = k.face(e, 1, 0), b = k.face(e, 1, 1);
    adj[a].push_back(b);
    if (a == b) self[a] = 1;
  }
  std::vector<int> idx(n, -1), low(n, 0), stack;
  std::vector<char> on(n, 0);
  int counter = 0;
  std::function<void(int)> tarjan = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = 1;
    for (int w : adj[v]) {
      if (idx[w] < 0) {
        tarjan(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      std::vector<int> comp;
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        on[w] = 0;
        comp.push_back(w);
        if (w == v) break;
      }
      if (comp.size() > 1 || self[v]) {
        std::sort(comp.begin(), comp.end());
        std::string names;
        for (int w : comp) names += (names.empty() ? "" : ",") + k.cube(w).id;
        rep.violations.push_back(
            {"Acyclicity", k.cube(comp.front()).id, {}, "directed cycle through {" + names + "}"});
      }
    }
  };
  for (int v : k.of_dim(0))
    if (idx[v] < 0) tarjan(v);
  rep.ok = rep.violations.empty();
  return rep;
}

ChainComplex goubault_complex(const PrecubicalSet& k, int side) {
  ValidationReport rep = validate(k);
  if (!rep.ok) fail(Errc::InvalidInput, "precubical set fails validation");
  ChainComplex cx;
  const int top = std::max(0, k.max_dim());
  std::vector<std::vector<int>> cells(top + 1);
  std::vector<int> pos(k.size(), -1);
  for (int n = 0; n <= top; ++n) {
    cells[n] = k.of_dim(n);
    for (std::size_t t = 0; t < cells[n].size(); ++t) pos[cells[n][t]] = static_cast<int>(t);
    std::vector<std::string> labels;
    for (int c : cells[n]) labels.push_back(k.cube(c).id);
    cx.basis.push_back(std::move(labels));
  }
  cx.d.resize(top + 1);
  cx.d[0] = SparseMatrix(0, static_cast<int>(cells[0].size()));
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m(static_cast<int>(cells[n - 1].size()), static_cast<int>(cells[n].size()));
    for (std::size_t t = 0; t < cells[n].size(); ++t) {
      SVec v;
      for (int i = 1; i <= n; ++i) v.add(pos[k.face(cells[n][t], i, side)], (i % 2) ? 1 : -1);
      v.normalize();
      m.col[t] = std::move(v);
    }
    cx.d[n] = std::move(m);
  }
  return cx;
}

PrecubicalSet standard_cube(int n) {
  std::vector<PrecubicalSet::RawCube> raw;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  const char letters[3] = {'-', '0', '+'};
  for (int code = 0; code < total; ++code) {
    std::string w(n, '-');
    int c = code;
    for (int i = n - 1; i >= 0; --i) {
      w[i] = letters[c % 3];
      c /= 3;
    }
    PrecubicalSet::RawCube r;
    r.id = w;
    r.dim = static_cast<int>(std::count(w.begin(), w.end(), '0'));
    int z = 0;
    r.faces.resize(2 * r.dim);
    for (int i = 0; i < n; ++i)
      if (w[i] == '0') {
        std::string lo = w, hi = w;
        lo[i] = '-';
        hi[i] = '+';
        r.faces[2 * z] = lo;
        r.faces[2 * z + 1] = hi;
        ++z;
      }
    raw.push_back(std::move(r));
  }
  return PrecubicalSet::from_raw(std::move(raw));
}

}  // namespace corner
