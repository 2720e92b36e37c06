#include "dowker/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dowker/io.hpp"

namespace dowker::cli {

namespace {

using nlohmann::ordered_json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw parse_error("cannot open output file " + out_path);
  f << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open input file " + path);
  return f;
}

std::string sset_human(const SimplicialSet& s) {
  std::ostringstream os;
  os << "truncation " << s.truncation() << "\n";
  for (int n = 0; n <= s.truncation(); ++n) {
    os << "dimension " << n << ": " << s.size(n) << " simplices, "
       << s.nondegenerate(n).size() << " nondegenerate\n";
    for (int i = 0; i < s.size(n); ++i) {
      os << "  " << s.label(n, i);
      if (n >= 1) {
        os << "  faces";
        for (int k = 0; k <= n; ++k)
          os << " " << s.label(n - 1, s.face(n, i, k));
      }
      if (s.has_degeneracies(n)) {
        os << "  degeneracies";
        for (int k = 0; k <= n; ++k)
          os << " " << s.label(n + 1, s.degeneracy(n, i, k));
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string homology_human(const std::vector<HomologyGroup>& h) {
  std::ostringstream os;
  for (const HomologyGroup& g : h) os << to_string(g) << "\n";
  return os.str();
}

ordered_json verdict_to_json(const DowkerVerdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  j["bounds"] = {{"max_chain_length", v.bounds.max_chain_length},
                 {"fiber_truncation", v.bounds.fiber_truncation}};
  ordered_json reports = ordered_json::array();
  for (const FiberReport& r : v.reports) {
    ordered_json e;
    e["over"] = r.chain_label;
    e["ok"] = r.ok;
    if (r.empty) e["empty"] = true;
    if (!r.reduced_betti.empty()) e["reduced_betti"] = r.reduced_betti;
    if (!r.note.empty()) e["note"] = r.note;
    reports.push_back(std::move(e));
  }
  j["reports"] = std::move(reports);
  if (v.witness) j["witness"] = *v.witness;
  j["detail"] = v.detail;
  return j;
}

std::string verdict_human(const DowkerVerdict& v) {
  std::ostringstream os;
  os << "status: " << to_string(v.status) << "\n";
  os << "bounds: chains <= " << v.bounds.max_chain_length << ", fibers <= "
     << v.bounds.fiber_truncation << "\n";
  for (const FiberReport& r : v.reports) {
    os << "  " << r.chain_label << ": " << (r.ok ? "ok" : "FAIL");
    if (r.empty) os << " (empty)";
    if (!r.reduced_betti.empty()) {
      os << " reduced betti";
      for (long long b : r.reduced_betti) os << " " << b;
    }
    if (!r.note.empty()) os << " [" << r.note << "]";
    os << "\n";
  }
  os << v.detail << "\n";
  return os.str();
}

int status_exit(DowkerStatus s) {
  switch (s) {
    case DowkerStatus::certified_dowker:
    case DowkerStatus::acyclic_evidence:
      return kOk;
    case DowkerStatus::not_dowker:
      return kNegative;
    case DowkerStatus::inconclusive:
      return kInsufficientBounds;
  }
  return kInputError;
}

struct DualityLeg {
  std::string name;
  QuasiIsoVerdict verdict;
};

struct DualityReport {
  std::vector<DualityLeg> legs;
  bool transpose_bijective = false;
  std::vector<HomologyGroup> dr_homology, drt_homology;
  bool all_certified = false;
};

DualityReport verify_duality(const CatRelation& rel, int max_degree) {
  DualityReport out;
  const int trunc = max_degree + 1;
  RectangleNerve er = RectangleNerve::build(rel, trunc, trunc);
  CatRelation relt = transpose(rel);
  RectangleNerve ert = RectangleNerve::build(relt, trunc, trunc);
  SimplicialSet dr = dowker_nerve(rel, trunc);
  SimplicialSet drt = dowker_nerve(relt, trunc);

  RectangleTranspose tw = rectangle_transpose_iso(er, ert);
  out.transpose_bijective = tw.bijective;

  SimplicialMap pi = diagonal_projection(er, dr);
  SimplicialMap twd = diagonal_transpose_iso(er, ert);
  SimplicialMap pit = diagonal_projection(ert, drt);
  SimplicialMap composite = compose_simplicial_maps(pit, twd);

  out.legs.push_back({"projection", is_quasi_iso(induced_chain_map(pi, max_degree), max_degree)});
  out.legs.push_back({"transpose-iso", is_quasi_iso(induced_chain_map(twd, max_degree), max_degree)});
  out.legs.push_back({"transpose-projection", is_quasi_iso(induced_chain_map(pit, max_degree), max_degree)});
  out.legs.push_back({"diagonal-to-transpose-nerve", is_quasi_iso(induced_chain_map(composite, max_degree), max_degree)});

  std::vector<int> degrees;
  for (int k = 0; k <= max_degree; ++k) degrees.push_back(k);
  out.dr_homology = homology(dr, degrees);
  out.drt_homology = homology(drt, degrees);
  out.all_certified = out.transpose_bijective;
  for (const DualityLeg& leg : out.legs)
    if (!leg.verdict.certified) out.all_certified = false;
  return out;
}

ordered_json duality_to_json(const DualityReport& r, int max_degree) {
  ordered_json j;
  j["max_degree"] = max_degree;
  j["transpose_bijection"] = r.transpose_bijective;
  ordered_json legs = ordered_json::array();
  for (const DualityLeg& leg : r.legs) {
    ordered_json e;
    e["map"] = leg.name;
    e["certified_quasi_iso"] = leg.verdict.certified;
    e["certified_range"] = leg.verdict.max_degree;
    if (!leg.verdict.detail.empty()) e["detail"] = leg.verdict.detail;
    legs.push_back(std::move(e));
  }
  j["maps"] = std::move(legs);
  j["dowker_nerve_homology"] =
      homology_to_json(r.dr_homology, max_degree, false);
  j["transpose_nerve_homology"] =
      homology_to_json(r.drt_homology, max_degree, false);
  j["all_certified"] = r.all_certified;
  return j;
}

std::string duality_human(const DualityReport& r, int max_degree) {
  std::ostringstream os;
  os << "duality verification through degree " << max_degree << "\n";
  os << "  transpose bijection: " << (r.transpose_bijective ? "ok" : "FAIL")
     << "\n";
  for (const DualityLeg& leg : r.legs)
    os << "  " << leg.name << ": "
       << (leg.verdict.certified ? "quasi-iso" : "NOT certified")
       << " (degrees <= " << leg.verdict.max_degree << ")\n";
  os << "  nerve homology:";
  for (const HomologyGroup& g : r.dr_homology) os << " " << to_string(g) << ";";
  os << "\n  transpose nerve homology:";
  for (const HomologyGroup& g : r.drt_homology)
    os << " " << to_string(g) << ";";
  os << "\n" << (r.all_certified ? "all maps certified" : "verification FAILED")
     << "\n";
  return os.str();
}

SimplicialComplex standard_complex(const std::string& kind, int n) {
  auto names = [](int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(std::to_string(i));
    return out;
  };
  if (kind == "simplex") {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    return make_complex(names(n + 1), {all});
  }
  if (kind == "boundary") {
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n; ++skip) {
      std::vector<int> f;
      for (int i = 0; i <= n; ++i)
        if (i != skip) f.push_back(i);
      facets.push_back(std::move(f));
    }
    return make_complex(names(n + 1), facets);
  }
  if (kind == "two-triangles")
    return make_complex(names(4), {{0, 1, 2}, {1, 2, 3}});
  if (kind == "edge") return make_complex(names(2), {{0, 1}});
  throw parse_error("unknown complex preset " + kind);
}

std::vector<int> default_order(const SimplicialComplex& k) {
  std::vector<int> order(k.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return order;
}

std::string sniff_kind(const std::string& path) {
  std::ifstream f = open_input(path);
  std::string tok;
  while (f >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(f, rest);
      continue;
    }
    if (tok[0] == '[') return "relation";
    if (tok == "object" || tok == "identity" || tok == "morphism" ||
        tok == "compose")
      return "category";
    if (tok == "vertex" || tok == "facet" || tok == "order") return "complex";
    break;
  }
  throw parse_error(path + ": cannot determine the input kind");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"exact computations with relations of small categories"};
  app.require_subcommand(1);
  std::size_t mor_limit = morphism_limit();
  app.add_option("--morphism-limit", mor_limit,
                 "cap on the morphism count of any single category");

  std::string file, out_path, format = "human";
  auto add_io = [&](CLI::App* cmd, bool with_file = true) {
    if (with_file)
      cmd->add_option("file", file, "input file")->required();
    cmd->add_option("--out", out_path, "write the report to this file");
    cmd->add_option("--format", format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
  };

  auto* nerve_cmd =
      app.add_subcommand("nerve", "dump the truncated nerve of a category");
  int nerve_maxdim = 2;
  add_io(nerve_cmd);
  nerve_cmd->add_option("--max-dim", nerve_maxdim, "truncation dimension");

  auto* dowker_cmd = app.add_subcommand(
      "dowker", "Dowker nerve dumps, relation checks and duality reports");
  int dowker_maxdim = -1, duality_maxdeg = 1;
  bool do_check = false, do_duality = false;
  std::string strategy = "both";
  DowkerBounds bounds;
  add_io(dowker_cmd);
  dowker_cmd->add_option("--max-dim", dowker_maxdim,
                         "dump the Dowker nerve up to this dimension");
  dowker_cmd->add_flag("--check", do_check, "run the Dowker-relation checker");
  dowker_cmd->add_option("--strategy", strategy,
                         "initial-terminal, acyclic or both")
      ->check(CLI::IsMember({"initial-terminal", "acyclic", "both"}));
  dowker_cmd->add_option("--max-chain", bounds.max_chain_length,
                         "chain-length bound for the checker");
  dowker_cmd->add_option("--fiber-dim", bounds.fiber_truncation,
                         "fiber truncation for the checker");
  dowker_cmd->add_flag("--verify-duality", do_duality,
                       "certify the duality diagram legs");
  dowker_cmd->add_option("--max-deg", duality_maxdeg,
                         "degree bound for duality certification");

  auto* sing_cmd = app.add_subcommand(
      "sing", "vertex-tuple simplicial sets of a simplicial complex");
  int sing_maxdim = 3, sing_homology = -1;
  bool sing_use_order = false;
  add_io(sing_cmd);
  sing_cmd->add_option("--max-dim", sing_maxdim, "truncation dimension");
  sing_cmd->add_flag("--ordered", sing_use_order,
                     "order-preserving tuples (needs an order directive)");
  sing_cmd->add_option("--homology", sing_homology,
                       "also report homology through this degree");

  auto* hom_cmd = app.add_subcommand("homology", "integer homology reports");
  int hom_maxdeg = 1;
  std::string hom_kind = "auto";
  add_io(hom_cmd);
  hom_cmd->add_option("--max-deg", hom_maxdeg, "top certified degree");
  hom_cmd->add_option("--kind", hom_kind,
                      "category, complex, relation or auto")
      ->check(CLI::IsMember({"category", "complex", "relation", "auto"}));

  auto* classic_cmd = app.add_subcommand(
      "classic-dowker", "duality report for a relation of finite sets");
  int classic_maxdeg = 2;
  add_io(classic_cmd);
  classic_cmd->add_option("--max-deg", classic_maxdeg,
                          "compare homology through this degree");

  auto* gen_cmd =
      app.add_subcommand("gen", "write standard categories/complexes/relations");
  std::vector<std::string> gen_args;
  gen_cmd->add_option("what", gen_args, "preset name and arguments")
      ->required()
      ->expected(-1);
  gen_cmd->add_option("--out", out_path, "write to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  morphism_limit() = mor_limit;

  try {
    if (*nerve_cmd) {
      std::ifstream in = open_input(file);
      CatPtr c = parse_category(in, file);
      SimplicialSet s = nerve(c, nerve_maxdim);
      emit(format == "json" ? sset_to_json(s).dump(2) : sset_human(s),
           out_path);
      return kOk;
    }

    if (*dowker_cmd) {
      std::ifstream in = open_input(file);
      CatRelation rel = parse_relation(in, file);
      if (do_check) {
        DowkerStrategy st = strategy == "initial-terminal"
                                ? DowkerStrategy::initial_terminal
                                : strategy == "acyclic" ? DowkerStrategy::acyclic
                                                        : DowkerStrategy::both;
        DowkerVerdict v = check_dowker(rel, st, bounds);
        emit(format == "json" ? verdict_to_json(v).dump(2) : verdict_human(v),
             out_path);
        return status_exit(v.status);
      }
      if (do_duality) {
        DualityReport r = verify_duality(rel, duality_maxdeg);
        emit(format == "json" ? duality_to_json(r, duality_maxdeg).dump(2)
                              : duality_human(r, duality_maxdeg),
             out_path);
        return r.all_certified ? kOk : kNegative;
      }
      int maxdim = dowker_maxdim < 0 ? 2 : dowker_maxdim;
      SimplicialSet s = dowker_nerve(rel, maxdim);
      emit(format == "json" ? sset_to_json(s).dump(2) : sset_human(s),
           out_path);
      return kOk;
    }

    if (*sing_cmd) {
      std::ifstream in = open_input(file);
      ComplexFile cf = parse_complex(in, file);
      if (sing_homology >= 0 && sing_maxdim < sing_homology + 1) {
        std::cerr << "homology through degree " << sing_homology
                  << " needs --max-dim at least " << sing_homology + 1 << "\n";
        return kInsufficientBounds;
      }
      SimplicialSet s;
      if (sing_use_order) {
        if (!cf.order)
          throw parse_error(file +
                            ": --ordered requires an order directive in the "
                            "complex file");
        s = sing_ordered(cf.complex, *cf.order, sing_maxdim);
      } else {
        s = sing(cf.complex, sing_maxdim);
      }
      ordered_json j;
      std::ostringstream human;
      j["simplicial_set"] = sset_to_json(s);
      human << sset_human(s);
      if (sing_homology >= 0) {
        std::vector<int> degrees;
        for (int k = 0; k <= sing_homology; ++k) degrees.push_back(k);
        auto h = homology(s, degrees);
        auto hc = complex_homology(cf.complex, degrees);
        j["homology"] = homology_to_json(h, sing_homology, false);
        j["complex_homology"] = homology_to_json(hc, sing_homology, false);
        human << "homology:\n" << homology_human(h);
        human << "complex homology:\n" << homology_human(hc);
      }
      emit(format == "json" ? j.dump(2) : human.str(), out_path);
      return kOk;
    }

    if (*hom_cmd) {
      std::string kind = hom_kind == "auto" ? sniff_kind(file) : hom_kind;
      std::vector<int> degrees;
      for (int k = 0; k <= hom_maxdeg; ++k) degrees.push_back(k);
      std::vector<HomologyGroup> h;
      if (kind == "category") {
        std::ifstream in = open_input(file);
        h = homology(nerve(parse_category(in, file), hom_maxdeg + 1), degrees);
      } else if (kind == "complex") {
        std::ifstream in = open_input(file);
        h = complex_homology(parse_complex(in, file).complex, degrees);
      } else {
        std::ifstream in = open_input(file);
        h = homology(dowker_nerve(parse_relation(in, file), hom_maxdeg + 1),
                     degrees);
      }
      emit(format == "json" ? homology_to_json(h, hom_maxdeg, false).dump(2)
                            : homology_human(h),
           out_path);
      return kOk;
    }

    if (*classic_cmd) {
      std::ifstream in = open_input(file);
      SetRelation r = parse_pairs(in, file);
      std::vector<int> degrees;
      for (int k = 0; k <= classic_maxdeg; ++k) degrees.push_back(k);
      auto h = complex_homology(dowker_complex(r), degrees);
      auto ht = complex_homology(dowker_complex(transpose(r)), degrees);
      bool equal = h == ht;
      ordered_json j;
      j["relation_homology"] = homology_to_json(h, classic_maxdeg, false);
      j["transpose_homology"] = homology_to_json(ht, classic_maxdeg, false);
      j["equal"] = equal;
      std::ostringstream human;
      human << "Dowker complex homology:\n" << homology_human(h);
      human << "transpose complex homology:\n" << homology_human(ht);
      human << (equal ? "homology groups agree\n" : "homology groups DIFFER\n");
      emit(format == "json" ? j.dump(2) : human.str(), out_path);
      return equal ? kOk : kNegative;
    }

    if (*gen_cmd) {
      const std::string& what = gen_args[0];
      auto needint = [&](std::size_t i) {
        if (gen_args.size() <= i)
          throw parse_error("preset " + what + " needs a numeric argument");
        return std::stoi(gen_args[i]);
      };
      std::string text;
      if (what == "ordinal") {
        text = dump_category(*ordinal(needint(1)));
      } else if (what == "translation") {
        int n = needint(1);
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
        text = dump_category(*translation_category(names));
      } else if (what == "complex") {
        if (gen_args.size() < 2) throw parse_error("gen complex needs a preset");
        const std::string& kind = gen_args[1];
        int n = (kind == "simplex" || kind == "boundary") ? needint(2) : 0;
        SimplicialComplex k = standard_complex(kind, n);
        text = dump_complex(k, default_order(k));
      } else if (what == "relation") {
        if (gen_args.size() < 2)
          throw parse_error("gen relation needs a preset");
        const std::string& kind = gen_args[1];
        if (kind == "identity-ordinal") {
          text = dump_relation(identity_relation(ordinal(needint(2)),
                                                 ordinal(0)).rel);
        } else if (kind == "not-dowker") {
          SetRelation r = make_set_relation({"x"}, {"y1", "y2"},
                                            {{0, 0}, {0, 1}});
          text = dump_relation(set_relation_discrete(r));
        } else if (kind == "r1" || kind == "r2" || kind == "r0") {
          if (gen_args.size() < 3)
            throw parse_error("gen relation " + kind + " needs a complex file");
          std::ifstream in = open_input(gen_args[2]);
          ComplexFile cf = parse_complex(in, gen_args[2]);
          std::vector<int> order =
              cf.order ? *cf.order : default_order(cf.complex);
          if (kind == "r1")
            text = dump_relation(relation_r1(cf.complex, order));
          else if (kind == "r2")
            text = dump_relation(relation_r2(cf.complex));
          else
            text = dump_relation(relation_r0(cf.complex, order));
        } else {
          throw parse_error("unknown relation preset " + kind);
        }
      } else if (what == "pairs") {
        SetRelation r = make_set_relation({"1", "2", "3"}, {"a", "b"},
                                          {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
        text = dump_pairs(r);
      } else {
        throw parse_error("unknown preset " + what);
      }
      emit(text, out_path);
      return kOk;
    }
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const validation_error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace dowker::cli
