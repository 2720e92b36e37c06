#include "dowker/io.hpp"

#include <istream>
#include <map>
#include <sstream>

namespace dowker {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& msg) {
  throw parse_error(source + ":" + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string::size_type hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

CatPtr category_from_lines(const std::vector<Line>& lines,
                           const std::string& source) {
  std::vector<std::string> objects;
  std::map<std::string, obj_t> obj_index;
  struct MorLine {
    std::string name;
    std::string src, tgt;
    bool is_identity = false;
    int line = 0;
  };
  std::vector<MorLine> mor_lines;
  std::map<std::string, mor_t> mor_index;
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "object") {
      if (t.size() != 2) fail(source, l.number, "object takes one name");
      if (!obj_index.emplace(t[1], static_cast<obj_t>(objects.size())).second)
        fail(source, l.number, "duplicate object " + t[1]);
      objects.push_back(t[1]);
    } else if (t[0] == "identity") {
      if (t.size() != 3) fail(source, l.number, "identity takes name and object");
      if (!mor_index.emplace(t[1], static_cast<mor_t>(mor_lines.size())).second)
        fail(source, l.number, "duplicate morphism " + t[1]);
      mor_lines.push_back({t[1], t[2], t[2], true, l.number});
    } else if (t[0] == "morphism") {
      if (t.size() != 4)
        fail(source, l.number, "morphism takes name, source and target");
      if (!mor_index.emplace(t[1], static_cast<mor_t>(mor_lines.size())).second)
        fail(source, l.number, "duplicate morphism " + t[1]);
      mor_lines.push_back({t[1], t[2], t[3], false, l.number});
    } else if (t[0] == "compose") {
      // handled below
    } else {
      fail(source, l.number, "unknown directive " + t[0]);
    }
  }
  std::vector<FinCategory::Mor> mors;
  std::vector<mor_t> identities(objects.size(), -1);
  for (const MorLine& m : mor_lines) {
    auto s = obj_index.find(m.src);
    auto t = obj_index.find(m.tgt);
    if (s == obj_index.end()) fail(source, m.line, "unknown object " + m.src);
    if (t == obj_index.end()) fail(source, m.line, "unknown object " + m.tgt);
    if (m.is_identity) {
      if (identities[s->second] >= 0)
        fail(source, m.line, "second identity for object " + m.src);
      identities[s->second] = static_cast<mor_t>(mors.size());
    }
    mors.push_back({m.name, s->second, t->second});
  }
  for (std::size_t o = 0; o < objects.size(); ++o)
    if (identities[o] < 0)
      throw parse_error(source + ": object " + objects[o] + " has no identity");
  const std::size_t nm = mors.size();
  if (nm > morphism_limit())
    throw parse_error(source + ": category exceeds the morphism cap");
  std::vector<int32_t> comp(nm * nm, -1);
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] != "compose") continue;
    if (t.size() != 4) fail(source, l.number, "compose takes three morphisms");
    auto g = mor_index.find(t[1]);
    auto f = mor_index.find(t[2]);
    auto gf = mor_index.find(t[3]);
    if (g == mor_index.end()) fail(source, l.number, "unknown morphism " + t[1]);
    if (f == mor_index.end()) fail(source, l.number, "unknown morphism " + t[2]);
    if (gf == mor_index.end())
      fail(source, l.number, "unknown morphism " + t[3]);
    comp[static_cast<std::size_t>(g->second) * nm + f->second] = gf->second;
  }
  // identity composites are determined
  for (mor_t m = 0; m < static_cast<mor_t>(nm); ++m) {
    comp[static_cast<std::size_t>(identities[mors[m].tgt]) * nm + m] = m;
    comp[static_cast<std::size_t>(m) * nm + identities[mors[m].src]] = m;
  }
  try {
    return std::make_shared<FinCategory>(std::move(objects), std::move(mors),
                                         std::move(identities), std::move(comp));
  } catch (const validation_error& e) {
    throw parse_error(source + ": " + e.what());
  }
}

}  // namespace

CatPtr parse_category(std::istream& in, const std::string& source_name) {
  return category_from_lines(tokenize(in), source_name);
}

std::string dump_category(const FinCategory& c) {
  std::ostringstream os;
  for (obj_t o = 0; o < c.object_count(); ++o)
    os << "object " << c.object_name(o) << "\n";
  for (mor_t m = 0; m < c.morphism_count(); ++m) {
    const auto& mor = c.morphism(m);
    if (c.is_identity(m))
      os << "identity " << mor.name << " " << c.object_name(mor.src) << "\n";
    else
      os << "morphism " << mor.name << " " << c.object_name(mor.src) << " "
         << c.object_name(mor.tgt) << "\n";
  }
  for (mor_t g = 0; g < c.morphism_count(); ++g)
    for (mor_t f = 0; f < c.morphism_count(); ++f) {
      if (!c.composable(g, f) || c.is_identity(g) || c.is_identity(f)) continue;
      os << "compose " << c.morphism(g).name << " " << c.morphism(f).name
         << " " << c.morphism(c.compose(g, f)).name << "\n";
    }
  return os.str();
}

namespace {

Functor functor_from_lines(const std::vector<Line>& lines, CatPtr dom,
                           CatPtr cod, const std::string& source,
                           const std::string& which) {
  std::vector<obj_t> om(dom->object_count(), -1);
  std::vector<mor_t> mm(dom->morphism_count(), -1);
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "object") {
      if (t.size() != 3)
        fail(source, l.number, "functor object lines take two names");
      obj_t s = dom->object_index(t[1]);
      obj_t d = cod->object_index(t[2]);
      if (s < 0) fail(source, l.number, "unknown domain object " + t[1]);
      if (d < 0) fail(source, l.number, "unknown codomain object " + t[2]);
      om[s] = d;
    } else if (t[0] == "morphism") {
      if (t.size() != 3)
        fail(source, l.number, "functor morphism lines take two names");
      mor_t s = dom->morphism_index(t[1]);
      mor_t d = cod->morphism_index(t[2]);
      if (s < 0) fail(source, l.number, "unknown domain morphism " + t[1]);
      if (d < 0) fail(source, l.number, "unknown codomain morphism " + t[2]);
      mm[s] = d;
    } else {
      fail(source, l.number, "unknown directive " + t[0] + " in functor table");
    }
  }
  for (obj_t o = 0; o < dom->object_count(); ++o)
    if (om[o] < 0)
      throw parse_error(source + ": functor " + which + " misses object " +
                        dom->object_name(o));
  for (mor_t m = 0; m < dom->morphism_count(); ++m)
    if (mm[m] < 0)
      throw parse_error(source + ": functor " + which + " misses morphism " +
                        dom->morphism(m).name);
  try {
    return make_functor(std::move(dom), std::move(cod), std::move(om),
                        std::move(mm));
  } catch (const validation_error& e) {
    throw parse_error(source + ": functor " + which + ": " + e.what());
  }
}

}  // namespace

CatRelation parse_relation(std::istream& in, const std::string& source_name) {
  std::vector<Line> lines = tokenize(in);
  std::map<std::string, std::vector<Line>> sections;
  std::string current;
  for (Line& l : lines) {
    if (l.tokens[0].front() == '[') {
      std::string name;
      for (const std::string& t : l.tokens) name += (name.empty() ? "" : " ") + t;
      if (name.back() != ']')
        fail(source_name, l.number, "unterminated section header");
      current = name.substr(1, name.size() - 2);
      if (sections.count(current))
        fail(source_name, l.number, "duplicate section " + current);
      sections[current];
    } else {
      if (current.empty())
        fail(source_name, l.number, "content before the first section");
      sections[current].push_back(std::move(l));
    }
  }
  for (const char* need : {"category total", "category left", "category right",
                           "functor left", "functor right"})
    if (!sections.count(need))
      throw parse_error(source_name + ": missing section [" +
                        std::string(need) + "]");
  CatPtr total =
      category_from_lines(sections["category total"], source_name + "[total]");
  CatPtr left =
      category_from_lines(sections["category left"], source_name + "[left]");
  CatPtr right =
      category_from_lines(sections["category right"], source_name + "[right]");
  Functor lf = functor_from_lines(sections["functor left"], total, left,
                                  source_name, "left");
  Functor rf = functor_from_lines(sections["functor right"], total, right,
                                  source_name, "right");
  return make_relation(total, std::move(lf), std::move(rf));
}

std::string dump_relation(const CatRelation& r) {
  std::ostringstream os;
  os << "[category total]\n" << dump_category(*r.total);
  os << "[category left]\n" << dump_category(*r.left.cod);
  os << "[category right]\n" << dump_category(*r.right.cod);
  auto table = [&](const Functor& f) {
    std::ostringstream t;
    for (obj_t o = 0; o < f.dom->object_count(); ++o)
      t << "object " << f.dom->object_name(o) << " "
        << f.cod->object_name(f.on_object(o)) << "\n";
    for (mor_t m = 0; m < f.dom->morphism_count(); ++m)
      t << "morphism " << f.dom->morphism(m).name << " "
        << f.cod->morphism(f.on_morphism(m)).name << "\n";
    return t.str();
  };
  os << "[functor left]\n" << table(r.left);
  os << "[functor right]\n" << table(r.right);
  return os.str();
}

ComplexFile parse_complex(std::istream& in, const std::string& source_name) {
  std::vector<Line> lines = tokenize(in);
  std::vector<std::string> vertices;
  std::map<std::string, int> vindex;
  std::optional<std::vector<int>> order;
  int order_line = 0;
  std::vector<std::pair<int, std::vector<std::string>>> facet_lines;
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 2) fail(source_name, l.number, "vertex takes one name");
      if (!vindex.emplace(t[1], static_cast<int>(vertices.size())).second)
        fail(source_name, l.number, "duplicate vertex " + t[1]);
      vertices.push_back(t[1]);
    } else if (t[0] == "order") {
      if (order) fail(source_name, l.number, "second order directive");
      order.emplace();
      order_line = l.number;
      for (std::size_t i = 1; i < t.size(); ++i) order->push_back(0);
      // resolved after all vertices are known
      facet_lines.emplace_back(-l.number, std::vector<std::string>(t.begin() + 1,
                                                                   t.end()));
    } else if (t[0] == "facet") {
      if (t.size() < 2) fail(source_name, l.number, "facet needs vertices");
      facet_lines.emplace_back(l.number,
                               std::vector<std::string>(t.begin() + 1, t.end()));
    } else {
      fail(source_name, l.number, "unknown directive " + t[0]);
    }
  }
  std::vector<std::vector<int>> facets;
  for (const auto& [line, names] : facet_lines) {
    std::vector<int> ids;
    for (const std::string& n : names) {
      auto it = vindex.find(n);
      if (it == vindex.end())
        fail(source_name, std::abs(line), "unknown vertex " + n);
      ids.push_back(it->second);
    }
    if (line < 0)
      *order = ids;  // the order directive, now resolved
    else
      facets.push_back(std::move(ids));
  }
  if (order) {
    if (order->size() != vertices.size())
      fail(source_name, order_line, "order must list every vertex");
    std::vector<char> seen(vertices.size(), 0);
    for (int v : *order) {
      if (seen[v]) fail(source_name, order_line, "order repeats a vertex");
      seen[v] = 1;
    }
  }
  return ComplexFile{make_complex(std::move(vertices), facets), order};
}

std::string dump_complex(const SimplicialComplex& k,
                         const std::optional<std::vector<int>>& order) {
  std::ostringstream os;
  for (const std::string& v : k.vertices) os << "vertex " << v << "\n";
  if (order) {
    os << "order";
    for (int v : *order) os << " " << k.vertices[v];
    os << "\n";
  }
  // facets: maximal simplices
  for (const std::vector<int>& s : k.simplices) {
    bool maximal = true;
    for (const std::vector<int>& t : k.simplices)
      if (t.size() == s.size() + 1 &&
          std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    os << "facet";
    for (int v : s) os << " " << k.vertices[v];
    os << "\n";
  }
  return os.str();
}

SetRelation parse_pairs(std::istream& in, const std::string& source_name) {
  std::vector<Line> lines = tokenize(in);
  std::vector<std::string> xs, ys;
  std::map<std::string, int> xi, yi;
  std::vector<std::pair<int, int>> pairs;
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "xset" || t[0] == "yset") {
      auto& names = t[0] == "xset" ? xs : ys;
      auto& index = t[0] == "xset" ? xi : yi;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!index.emplace(t[i], static_cast<int>(names.size())).second)
          fail(source_name, l.number, "duplicate element " + t[i]);
        names.push_back(t[i]);
      }
    } else if (t[0] == "pair") {
      if (t.size() != 3) fail(source_name, l.number, "pair takes two names");
      auto x = xi.find(t[1]);
      auto y = yi.find(t[2]);
      if (x == xi.end()) fail(source_name, l.number, "unknown x element " + t[1]);
      if (y == yi.end()) fail(source_name, l.number, "unknown y element " + t[2]);
      pairs.emplace_back(x->second, y->second);
    } else {
      fail(source_name, l.number, "unknown directive " + t[0]);
    }
  }
  return make_set_relation(std::move(xs), std::move(ys), std::move(pairs));
}

std::string dump_pairs(const SetRelation& r) {
  std::ostringstream os;
  os << "xset";
  for (const std::string& x : r.xs) os << " " << x;
  os << "\nyset";
  for (const std::string& y : r.ys) os << " " << y;
  os << "\n";
  for (const auto& [x, y] : r.pairs)
    os << "pair " << r.xs[x] << " " << r.ys[y] << "\n";
  return os.str();
}

nlohmann::ordered_json sset_to_json(const SimplicialSet& s) {
  nlohmann::ordered_json j;
  j["truncation"] = s.truncation();
  nlohmann::ordered_json dims = nlohmann::ordered_json::array();
  for (int n = 0; n <= s.truncation(); ++n) {
    nlohmann::ordered_json d;
    d["dimension"] = n;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    nlohmann::ordered_json faces = nlohmann::ordered_json::array();
    nlohmann::ordered_json degens = nlohmann::ordered_json::array();
    for (int i = 0; i < s.size(n); ++i) {
      labels.push_back(s.label(n, i));
      nlohmann::ordered_json f = nlohmann::ordered_json::array();
      for (int k = 0; n >= 1 && k <= n; ++k) f.push_back(s.face(n, i, k));
      faces.push_back(std::move(f));
      nlohmann::ordered_json g = nlohmann::ordered_json::array();
      if (s.has_degeneracies(n))
        for (int k = 0; k <= n; ++k) g.push_back(s.degeneracy(n, i, k));
      degens.push_back(std::move(g));
    }
    d["simplices"] = std::move(labels);
    d["faces"] = std::move(faces);
    d["degeneracies"] = std::move(degens);
    dims.push_back(std::move(d));
  }
  j["dimensions"] = std::move(dims);
  return j;
}

SimplicialSet sset_from_json(const nlohmann::ordered_json& j) {
  int truncation = j.at("truncation").get<int>();
  SimplicialSetBuilder b(truncation);
  const auto& dims = j.at("dimensions");
  for (const auto& d : dims) {
    int n = d.at("dimension").get<int>();
    for (const auto& l : d.at("simplices"))
      b.add_simplex(n, l.get<std::string>());
  }
  for (const auto& d : dims) {
    int n = d.at("dimension").get<int>();
    const auto& labels = d.at("simplices");
    const auto& faces = d.at("faces");
    const auto& degens = d.at("degeneracies");
    const auto& below = n >= 1 ? dims.at(n - 1).at("simplices") : labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (n >= 1)
        for (int k = 0; k <= n; ++k)
          b.set_face(n, static_cast<int>(i), k,
                     below.at(faces.at(i).at(k).get<int>()).get<std::string>());
      if (n + 1 <= truncation) {
        const auto& above = dims.at(n + 1).at("simplices");
        for (int k = 0; k <= n; ++k)
          b.set_degeneracy(
              n, static_cast<int>(i), k,
              above.at(degens.at(i).at(k).get<int>()).get<std::string>());
      }
    }
  }
  return std::move(b).build();
}

nlohmann::ordered_json homology_to_json(const std::vector<HomologyGroup>& h,
                                        int certified_maxdeg, bool reduced) {
  nlohmann::ordered_json j;
  j["certified_max_degree"] = certified_maxdeg;
  j["reduced"] = reduced;
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const HomologyGroup& g : h) {
    nlohmann::ordered_json e;
    e["degree"] = g.degree;
    e["betti"] = g.betti;
    nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
    for (const Int& t : g.torsion) torsion.push_back(t.str());
    e["torsion"] = std::move(torsion);
    groups.push_back(std::move(e));
  }
  j["groups"] = std::move(groups);
  return j;
}

std::string matrix_to_triplets(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows << " " << m.cols << "\n";
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) os << i << " " << j << " " << m.at(i, j) << "\n";
  return os.str();
}

}  // namespace dowker
