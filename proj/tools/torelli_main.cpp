#include <cstdio>
#include <deque>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "torelli/action.hpp"
#include "torelli/instance.hpp"
#include "torelli/json_io.hpp"
#include "torelli/theorem.hpp"

using json = nlohmann::ordered_json;
using namespace torelli;

namespace {

struct GlobalOpts {
  std::string surface = "g=3,bordered";
  std::string format = "text";
  unsigned seed = 1;
};

SurfaceSpec parse_surface(const std::string& s) {
  int g = 0;
  bool bordered;
  if (std::sscanf(s.c_str(), "g=%d,bordered", &g) == 1 && s.ends_with("bordered"))
    bordered = true;
  else if (std::sscanf(s.c_str(), "g=%d,closed", &g) == 1 && s.ends_with("closed"))
    bordered = false;
  else
    throw std::runtime_error("--surface must look like g=3,bordered or g=4,closed");
  if (g < 3 || g > 8)
    throw std::runtime_error("--surface: genus must be between 3 and 8");
  return SurfaceSpec{g, bordered};
}

HomologyClass parse_class(const std::string& s, int g) {
  std::vector<long long> c;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty()) throw std::runtime_error("--class: empty coordinate");
      try {
        c.push_back(std::stoll(cur));
      } catch (const std::exception&) {
        throw std::runtime_error("--class: bad coordinate '" + cur + "'");
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (static_cast<int>(c.size()) != 2 * g)
    throw std::runtime_error("--class needs exactly 2g coordinates");
  return HomologyClass(std::move(c));
}

void emit(const GlobalOpts& go, const json& report, const std::string& text) {
  if (go.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

json surface_json(const SurfaceSpec& spec) {
  return json{{"genus", spec.genus}, {"bordered", spec.bordered}};
}

int cmd_phi(const GlobalOpts& go, const std::string& word_path, const std::string& cls) {
  SurfaceSpec spec = parse_surface(go.surface);
  FatGraph fg = FatGraph::canonical(spec.genus);
  Catalog cat = build_catalog(spec, fg);
  TorelliWord w = word_from_json(read_text_file(word_path));
  HomologyClass h = parse_class(cls, spec.genus);
  long long phi = phi_eval(cat, w, h);
  std::string text = spec.modulus() == 0
                         ? "phi = " + std::to_string(phi) + "\n"
                         : "phi ≡ " + std::to_string(phi) + " (mod " +
                               std::to_string(spec.modulus()) + ")\n";
  emit(go,
       json{{"surface", surface_json(spec)},
            {"class", h.c},
            {"phi", phi},
            {"modulus", spec.modulus()}},
       text);
  return 0;
}

int cmd_chillingworth(const GlobalOpts& go, const std::string& word_path) {
  SurfaceSpec spec = parse_surface(go.surface);
  FatGraph fg = FatGraph::canonical(spec.genus);
  Catalog cat = build_catalog(spec, fg);
  TorelliWord w = word_from_json(read_text_file(word_path));
  MappingClass f = realize(cat, w);
  CohomologyClass viaWind =
      chillingworth_winding_class(f, spec, fg, PlanarImmersion::standard(fg));
  CohomologyClass viaJohnson = chillingworth_from_johnson(bp_factors(cat, w), spec);
  bool agree = viaWind.equal_mod(viaJohnson);
  CohomologyClass e = viaWind.reduced();
  std::string text;
  for (int i = 0; i < 2 * spec.genus; ++i)
    text += "e(" + basis_name(spec.genus, i) + ") = " + std::to_string(e.dual[i]) + "\n";
  if (e.modulus != 0) text += "(mod " + std::to_string(e.modulus) + ")\n";
  text += agree ? "routes agree\n" : "ROUTE MISMATCH\n";
  emit(go,
       json{{"surface", surface_json(spec)},
            {"dual", e.dual},
            {"modulus", e.modulus},
            {"routes_agree", agree}},
       text);
  return agree ? 0 : 1;
}

int cmd_verify_theorem(const GlobalOpts& go, int power, int threads) {
  SurfaceSpec spec = parse_surface(go.surface);
  SweepOptions opt;
  opt.max_len = power;
  opt.threads = threads;
  SweepResult r = verify_theorem_sweep(spec, opt);
  std::string text = "words: " + std::to_string(r.words) +
                     "\nautomorphisms: " + std::to_string(r.automorphisms) +
                     "\ncases: " + std::to_string(r.cases) +
                     "\nexcluded: " + std::to_string(r.excluded) + "\n" +
                     (r.ok ? "OK\n" : "FAILED: " + r.first_failure + "\n");
  emit(go,
       json{{"surface", surface_json(spec)},
            {"max_len", power},
            {"words", r.words},
            {"automorphisms", r.automorphisms},
            {"cases", r.cases},
            {"excluded", r.excluded},
            {"ok", r.ok},
            {"first_failure", r.first_failure}},
       text);
  return r.ok ? 0 : 1;
}

int cmd_graph_ball(const GlobalOpts& go, int radius) {
  SurfaceSpec spec = parse_surface(go.surface);
  DeskInstance di = build_desk_instance(spec);
  const UniverseGraph& G = di.graph;

  // hop-ball around the first base curve
  std::vector<int> dist(G.verts.size(), -1);
  std::deque<int> q;
  int root = G.index_of(di.bases[0]);
  dist[root] = 0;
  q.push_back(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (dist[u] == radius) continue;
    for (int eid : G.adj[u]) {
      const UniverseGraph::Edge& e = G.edges[eid];
      int v = e.u == u ? e.v : e.u;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  std::vector<CurveVertex> sub;
  for (size_t i = 0; i < G.verts.size(); ++i)
    if (dist[i] >= 0) sub.push_back(G.verts[i]);
  UniverseGraph ball = build_graph(spec, sub, di.fg);

  // attach each edge's subsurface cells, re-derived on its own pair complex
  std::vector<TameSet> cells;
  for (const UniverseGraph::Edge& e : ball.edges) {
    for (const SubsurfacePiece& p :
         find_edges(ball.verts[e.u], ball.verts[e.v], di.fg, !spec.bordered))
      if (p.sign == e.sign && p.genus == e.genus) {
        cells.push_back(p.cells);
        break;
      }
  }
  std::string text = "vertices: " + std::to_string(ball.verts.size()) + "\n";
  for (const CurveVertex& v : ball.verts) text += "  " + word_str(v.w) + "\n";
  text += "edges: " + std::to_string(ball.edges.size()) + "\n";
  for (const UniverseGraph::Edge& e : ball.edges)
    text += "  " + word_str(ball.verts[e.u].w) + "  ->  " + word_str(ball.verts[e.v].w) +
            "  sign " + (e.sign > 0 ? std::string("+1") : std::string("-1")) + "\n";
  if (go.format == "json")
    std::cout << graph_to_json(ball, cells);
  else
    std::cout << text;
  return 0;
}

int cmd_euler(const GlobalOpts& go, const std::string& complex_path,
              const std::string& function_path, int random_checks) {
  SurfaceSpec spec = parse_surface(go.surface);
  CellComplex cx = complex_path.empty() ? canonical_surface_complex(spec)
                                        : complex_from_json(read_text_file(complex_path));
  json report{{"chi", cx.chi()}};
  std::string text = "chi = " + std::to_string(cx.chi()) + "\n";
  if (!function_path.empty()) {
    ConstructibleFunction fn = function_from_json(read_text_file(function_path), cx);
    long long integral = euler_integral(fn);
    report["integral"] = integral;
    text += "integral = " + std::to_string(integral) + "\n";
  }
  if (random_checks > 0) {
    // subdivision invariance of random constructible functions
    std::mt19937 rng(go.seed);
    Refined r = refine(cx);
    int okc = 0;
    for (int t = 0; t < random_checks; ++t) {
      ConstructibleFunction fn = ConstructibleFunction::zero_for(cx);
      auto fill = [&](std::vector<long long>& a) {
        for (auto& x : a) x = static_cast<long long>(rng() % 7) - 3;
      };
      fill(fn.v);
      fill(fn.e);
      fill(fn.f);
      if (euler_integral(fn) == euler_integral(transfer(r, fn))) ++okc;
    }
    report["random_checks"] = random_checks;
    report["random_ok"] = okc;
    text += "subdivision-invariant integrals: " + std::to_string(okc) + "/" +
            std::to_string(random_checks) + "\n";
    if (okc != random_checks) {
      emit(go, report, text);
      return 1;
    }
  }
  emit(go, report, text);
  return 0;
}

int cmd_catalog_validate(const GlobalOpts& go, const std::string& file) {
  SurfaceSpec spec = parse_surface(go.surface);
  Catalog cat;
  if (file.empty()) {
    cat = build_catalog(spec, FatGraph::canonical(spec.genus));
  } else {
    cat = catalog_from_json(read_text_file(file));
  }
  FatGraph fg = FatGraph::canonical(cat.spec.genus);
  CatalogReport rep = validate_catalog(cat, fg);
  std::string text;
  for (const auto& f : rep.failures) text += "fail: " + f + "\n";
  text += rep.ok ? "catalog ok\n" : "catalog INVALID\n";
  emit(go,
       json{{"surface", surface_json(cat.spec)},
            {"entries", cat.entries.size()},
            {"ok", rep.ok},
            {"failures", rep.failures}},
       text);
  return rep.ok ? 0 : 1;
}

int cmd_catalog_emit(const GlobalOpts& go, const std::string& out) {
  SurfaceSpec spec = parse_surface(go.surface);
  Catalog cat = build_catalog(spec, FatGraph::canonical(spec.genus));
  std::string text = catalog_to_json(cat);
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed stable lengths and winding-number classes on a bordered spine"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand name
  GlobalOpts go;
  app.add_option("--surface", go.surface, "surface, e.g. g=3,bordered or g=4,closed");
  app.add_option("--format", go.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", go.seed, "seed for randomized property sweeps");

  std::string word_path, cls, file, out, complex_path, function_path;
  int power = 3, threads = 0, radius = 2, random_checks = 0;

  CLI::App* phi = app.add_subcommand("phi", "stable-length pairing of a word against a class");
  phi->add_option("--word", word_path, "word file (json)")->required();
  phi->add_option("--class", cls, "homology class, e.g. 1,0,0,0,0,0")->required();

  CLI::App* chill = app.add_subcommand("chillingworth", "winding defect class of a word");
  chill->add_option("--word", word_path, "word file (json)")->required();

  CLI::App* thm = app.add_subcommand("verify-theorem", "sweep all words up to a length");
  thm->add_option("--power", power, "maximum word length")->check(CLI::Range(1, 16));
  thm->add_option("--threads", threads, "worker threads (0 = hardware)")
      ->check(CLI::Range(0, 1024));

  CLI::App* ball = app.add_subcommand("graph-ball", "curve-graph ball around x1");
  ball->add_option("--radius", radius, "hop radius")->check(CLI::Range(0, 16));

  CLI::App* euler = app.add_subcommand("euler", "Euler characteristics and integrals");
  euler->add_option("--complex", complex_path, "cell complex file (json)");
  euler->add_option("--function", function_path, "constructible function file (json)");
  euler->add_option("--random", random_checks, "random subdivision-invariance checks")
      ->check(CLI::Range(0, 1000000));

  CLI::App* cat = app.add_subcommand("catalog", "generator catalog");
  cat->require_subcommand(1);
  CLI::App* catv = cat->add_subcommand("validate", "re-derive and cross-check every entry");
  catv->add_option("--file", file, "catalog file (json); defaults to the built-in catalog");
  CLI::App* cate = cat->add_subcommand("emit", "emit the built-in catalog as json");
  cate->add_option("--out", out, "output path; defaults to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*phi) return cmd_phi(go, word_path, cls);
    if (*chill) return cmd_chillingworth(go, word_path);
    if (*thm) return cmd_verify_theorem(go, power, threads);
    if (*ball) return cmd_graph_ball(go, radius);
    if (*euler) return cmd_euler(go, complex_path, function_path, random_checks);
    if (*catv) return cmd_catalog_validate(go, file);
    if (*cate) return cmd_catalog_emit(go, out);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
