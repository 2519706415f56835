#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "sdot/json_io.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw sdot::Error("InvalidArgument", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void verbose_note(bool verbose, const std::string& msg) {
  if (verbose) std::cerr << msg << "\n";
}

int emit_check(const sdot::CheckReport& rep, const std::string& subject,
               bool verbose) {
  std::cout << sdot::report_to_json(rep, subject);
  verbose_note(verbose, subject + " " + rep.property + ": " +
                            (rep.verdict ? "holds" : "fails"));
  return rep.verdict ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdot-lab: discrete S-construction laboratory"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "human summary on stderr");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a standard object");
  std::string kind, format;
  int n = 0, q = 0, r = 0, depth = -1;
  unsigned seed = 0;
  gen->add_option("--kind", kind,
                  "delta|spine|W|H|V|box|sigma|random-pdec")
      ->required();
  gen->add_option("--n", n, "rank");
  gen->add_option("--q", q, "horizontal rank");
  gen->add_option("--r", r, "vertical rank");
  gen->add_option("--depth", depth, "truncation depth");
  gen->add_option("--format", format, "dcat|paug|tss (default per kind)");
  gen->add_option("--seed", seed, "seed for random-pdec");

  // check / dcheck / pcheck
  auto* check = app.add_subcommand("check", "simplicial property check");
  std::string property, file;
  int up_to = 2;
  check->add_option("--property", property, "segal|twosegal_full|twosegal_reduced|unital_full|unital_reduced|reduced")->required();
  check->add_option("--up-to", up_to, "largest level checked");
  check->add_option("file", file, "tss/v1 document ('-' for stdin)")->required();

  auto* dcheck = app.add_subcommand("dcheck", "double category property check");
  std::string dproperty, dfile;
  dcheck->add_option("--property", dproperty, "stable|augmented")->required();
  dcheck->add_option("file", dfile, "dcat/v1 document")->required();

  auto* pcheck = app.add_subcommand("pcheck", "preaugmented bisimplicial check");
  std::string pproperty, pfile;
  pcheck->add_option("--property", pproperty,
                     "double_segal|stable_baby|stable_full|augmented_baby|"
                     "augmented_full|pointed|split")
      ->required();
  pcheck->add_option("file", pfile, "paug/v1 document")->required();

  // path / sdot / nerve / roundtrip / triangulations
  auto* path = app.add_subcommand("path", "path construction of a tss");
  std::string path_file;
  path->add_option("file", path_file, "tss/v1 document")->required();

  auto* sdotv = app.add_subcommand("sdot", "S-construction");
  std::string sdot_file;
  int sdot_up_to = 2;
  sdotv->add_option("file", sdot_file, "dcat/v1 or paug/v1 document")->required();
  sdotv->add_option("--up-to", sdot_up_to, "largest simplicial level");

  auto* nerve = app.add_subcommand("nerve", "nerve of a category / augmented nerve");
  std::string nerve_category, nerve_file;
  int nerve_n = 1, nerve_depth = 2;
  nerve->add_option("--category", nerve_category, "linear|cyclic|square|terminal");
  nerve->add_option("--n", nerve_n, "rank (linear) or order (cyclic)");
  nerve->add_option("--depth", nerve_depth, "truncation depth");
  nerve->add_option("file", nerve_file, "dcat/v1 document (augmented nerve)");

  auto* roundtrip = app.add_subcommand("roundtrip", "unit/counit round trip");
  std::string rt_file;
  int rt_up_to = 2;
  roundtrip->add_option("file", rt_file, "tss/v1 or dcat/v1 document")->required();
  roundtrip->add_option("--up-to", rt_up_to, "largest level");

  auto* tri = app.add_subcommand("triangulations", "enumerate triangulations");
  int tri_n = 3;
  tri->add_option("--n", tri_n, "polygon has vertices 0..n")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (kind == "delta" || kind == "spine") {
        if (depth < 0) depth = n;
        std::cout << (kind == "delta"
                          ? sdot::tss_to_json(sdot::standard_simplex(n, depth))
                          : sdot::tss_to_json(sdot::spine(n, depth).object));
      } else if (kind == "W" || kind == "H" || kind == "V") {
        if (format.empty()) format = "dcat";
        if (format == "dcat") {
          auto g = kind == "W" ? sdot::generate_w(n)
                   : kind == "H" ? sdot::generate_h(n)
                                 : sdot::generate_v(n);
          std::cout << sdot::dcat_to_json(g.cat);
        } else if (format == "paug") {
          if (depth < 0) depth = 2;
          std::cout << sdot::paug_to_json(
              kind == "W"   ? sdot::generate_w_preaug(n, depth).y
              : kind == "H" ? sdot::generate_h_preaug(n, depth)
                            : sdot::generate_v_preaug(n, depth));
        } else {
          throw sdot::Error("InvalidArgument", "format " + format);
        }
      } else if (kind == "box") {
        std::cout << sdot::dcat_to_json(sdot::generate_box(q, r).cat);
      } else if (kind == "sigma") {
        if (depth < 0) depth = 2;
        std::cout << sdot::paug_to_json(sdot::representable(q, r, depth));
      } else if (kind == "random-pdec") {
        std::mt19937 rng(seed);
        std::vector<std::pair<int, int>> diags;
        for (int attempt = 0; attempt < 4 * n; ++attempt) {
          std::uniform_int_distribution<int> pick(0, n);
          int a = pick(rng), b = pick(rng);
          if (a > b) std::swap(a, b);
          if (b - a < 2 || (a == 0 && b == n)) continue;
          auto cand = diags;
          cand.push_back({a, b});
          try {
            sdot::decomposition_from_diagonals(n, cand);
            diags = cand;
          } catch (const sdot::Error&) {
          }
        }
        std::cout << sdot::pdec_to_json(
            sdot::decomposition_from_diagonals(n, diags));
      } else {
        throw sdot::Error("InvalidArgument", "unknown kind " + kind);
      }
      return 0;
    }
    if (*check) {
      auto x = sdot::tss_from_json(slurp(file));
      auto rep = sdot::check_simplicial(
          x, sdot::simplicial_property_from_string(property), up_to);
      return emit_check(rep, file, verbose);
    }
    if (*dcheck) {
      auto d = sdot::dcat_from_json(slurp(dfile));
      auto prop = dproperty == "stable" ? sdot::DoubleProperty::stable
                  : dproperty == "augmented"
                      ? sdot::DoubleProperty::augmented
                      : throw sdot::Error("InvalidArgument", dproperty);
      return emit_check(sdot::check_double(d, prop), dfile, verbose);
    }
    if (*pcheck) {
      auto y = sdot::paug_from_json(slurp(pfile));
      auto rep = sdot::check_preaug(
          y, sdot::preaug_property_from_string(pproperty));
      return emit_check(rep, pfile, verbose);
    }
    if (*path) {
      auto x = sdot::tss_from_json(slurp(path_file));
      std::cout << sdot::paug_to_json(sdot::path_construction(x));
      return 0;
    }
    if (*sdotv) {
      std::string text = slurp(sdot_file);
      std::string schema = sdot::schema_of(text);
      if (schema == "dcat/v1") {
        auto d = sdot::dcat_from_json(text);
        std::cout << sdot::tss_to_json(sdot::sdot_double(d, sdot_up_to).object);
      } else if (schema == "paug/v1") {
        auto y = sdot::paug_from_json(text);
        std::cout << sdot::tss_to_json(sdot::sdot_preaug(y, sdot_up_to).object);
      } else {
        throw sdot::Error("InvalidDocument", "sdot expects dcat/v1 or paug/v1");
      }
      return 0;
    }
    if (*nerve) {
      if (!nerve_category.empty()) {
        sdot::FiniteCategory c =
            nerve_category == "linear"   ? sdot::FiniteCategory::linear(nerve_n)
            : nerve_category == "cyclic" ? sdot::FiniteCategory::cyclic_group(nerve_n)
            : nerve_category == "square" ? sdot::FiniteCategory::commutative_square()
            : nerve_category == "terminal"
                ? sdot::FiniteCategory::terminal()
                : throw sdot::Error("InvalidArgument", nerve_category);
        std::cout << sdot::tss_to_json(
            sdot::nerve_of_category(c, nerve_depth).object);
      } else if (!nerve_file.empty()) {
        auto d = sdot::dcat_from_json(slurp(nerve_file));
        std::cout << sdot::paug_to_json(sdot::augmented_nerve(d, nerve_depth).y);
      } else {
        throw sdot::Error("InvalidArgument", "nerve needs --category or a file");
      }
      return 0;
    }
    if (*roundtrip) {
      std::string text = slurp(rt_file);
      std::string schema = sdot::schema_of(text);
      sdot::RoundtripReport rep;
      if (schema == "tss/v1")
        rep = sdot::roundtrip_simplicial(sdot::tss_from_json(text), rt_up_to);
      else if (schema == "dcat/v1")
        rep = sdot::roundtrip_double(sdot::dcat_from_json(text), rt_up_to);
      else
        throw sdot::Error("InvalidDocument", "roundtrip expects tss/v1 or dcat/v1");
      std::cout << sdot::roundtrip_to_json(rep);
      verbose_note(verbose, std::string("roundtrip: ") +
                                (rep.all_bijective ? "bijective" : "not bijective"));
      return rep.all_bijective ? 0 : 2;
    }
    if (*tri) {
      auto ts = sdot::enumerate_triangulations(tri_n);
      std::cout << "[\n";
      for (size_t i = 0; i < ts.size(); ++i) {
        std::string doc = sdot::pdec_to_json(ts[i]);
        doc.pop_back();  // newline; re-add with separator
        std::cout << doc << (i + 1 < ts.size() ? ",\n" : "\n");
      }
      std::cout << "]\n";
      verbose_note(verbose, std::to_string(ts.size()) + " triangulations");
      return 0;
    }
  } catch (const sdot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
