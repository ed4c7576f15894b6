#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "curvature/bench.hpp"
#include "curvature/cayley.hpp"
#include "curvature/dehn.hpp"
#include "curvature/hplane.hpp"
#include "curvature/isoperimetry.hpp"
#include "curvature/oracle.hpp"
#include "curvature/qi.hpp"
#include "curvature/thinness.hpp"

namespace curv::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUnknown = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed10(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError("bad " + what + " '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Word word_arg(const Presentation& p, const std::string& text) {
  Word w = parse_word(text, p.generator_count());
  p.check_alphabet(w);
  return w;
}

json word_list(const std::vector<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(to_string(w));
  return out;
}

GeneratingSet parse_gens(const Presentation& p, const std::string& text) {
  GeneratingSet g;
  for (const std::string& part : split(text, ',')) {
    if (part.empty()) throw UsageError("empty generating word in '" + text + "'");
    g.words.push_back(word_arg(p, part));
  }
  if (g.words.empty()) throw UsageError("no generating words given");
  return g;
}

struct Common {
  std::string pres;
  std::size_t max_area = 0;
  std::size_t max_len = 0;
};

void add_pres(CLI::App* sub, Common& c) {
  sub->add_option("--pres", c.pres, "presentation file, or @zz, @free:N, @surface:G")->required();
}

void add_budget(CLI::App* sub, Common& c) {
  sub->add_option("--max-area", c.max_area, "area budget (0: default)");
  sub->add_option("--max-len", c.max_len, "longest intermediate word (0: automatic)");
}

OracleBudget oracle_budget(const Common& c) {
  OracleBudget b;
  if (c.max_area) b.max_area = c.max_area;
  b.max_search_length = c.max_len;
  return b;
}

AreaCaps area_caps(const Common& c) {
  AreaCaps caps;
  if (c.max_area) caps.max_area = c.max_area;
  caps.max_intermediate_length = c.max_len;
  return caps;
}

json ball_json(const CayleyBall& ball) {
  json j;
  j["radius"] = ball.radius();
  j["vertices"] = word_list(ball.vertices());
  json edges = json::array();
  for (const auto& e : ball.edges()) edges.push_back(json::array({e.from, ball.direction_labels()[e.direction], e.to}));
  j["edges"] = std::move(edges);
  j["dist"] = ball.dists();
  return j;
}

json path_json(const CayleyBall& ball, const GeodesicPath& g) {
  json j = json::array();
  for (std::size_t v : g.vertices) j.push_back(to_string(ball.vertex(v)));
  return j;
}

json thinness_json(const CayleyBall& ball, const ThinnessReport& r) {
  json j;
  j["delta"] = r.delta;
  j["radius"] = r.radius;
  j["triangles_examined"] = r.triangles_examined;
  j["choice"] = r.choice == GeodesicChoice::worst ? "worst" : "canonical";
  json policy;
  policy["kind"] = r.policy.kind == SamplingPolicy::Kind::exhaustive ? "exhaustive" : "random";
  if (r.policy.kind == SamplingPolicy::Kind::random) {
    policy["seed"] = r.policy.seed;
    policy["count"] = r.policy.count;
  }
  j["policy"] = std::move(policy);
  if (r.witness) {
    const ThinnessWitness& w = *r.witness;
    json wj;
    wj["triangle"] = json::array();
    for (std::size_t v : w.triangle) wj["triangle"].push_back(to_string(ball.vertex(v)));
    wj["geodesics"] = json::array();
    for (const auto& g : w.geodesics) wj["geodesics"].push_back(path_json(ball, g));
    wj["side"] = w.side;
    wj["p"] = to_string(ball.vertex(w.p));
    wj["q"] = to_string(ball.vertex(w.q));
    wj["distance"] = w.distance;
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::vector<std::pair<double, double>> read_csv_points(std::istream& in) {
  std::vector<std::pair<double, double>> pts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    if (cells.size() < 2) throw ParseError("expected at least two columns", line_no, 1);
    char* end = nullptr;
    const double n = std::strtod(cells[0].c_str(), &end);
    if (end == cells[0].c_str() || *end != '\0') {
      if (line_no == 1 || pts.empty()) continue;  // header
      throw ParseError("expected a number", line_no, 1);
    }
    const double v = std::strtod(cells[1].c_str(), &end);
    if (end == cells[1].c_str() || *end != '\0')
      throw ParseError("expected a number", line_no, cells[0].size() + 2);
    pts.emplace_back(n, v);
  }
  return pts;
}

}  // namespace

Presentation resolve_presentation(const std::string& source) {
  if (!source.empty() && source[0] == '@') {
    const std::string name = source.substr(1);
    if (name == "zz") return standard_presentation(Family::zz);
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
      const std::string fam = name.substr(0, colon);
      const unsigned param = parse_unsigned(name.substr(colon + 1), "presentation parameter");
      if (fam == "free") return standard_presentation(Family::free, param);
      if (fam == "surface") return standard_presentation(Family::surface, param);
    }
    throw UsageError("unknown builtin presentation '" + source + "' (use @zz, @free:N or @surface:G)");
  }
  return load_presentation(source);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problems, Dehn functions and thin triangles for finitely presented groups", "curvature"};
  app.require_subcommand(1);
  Common c;
  std::vector<std::string> words;
  int code = kOk;
  std::function<void()> action;

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Dehn's algorithm on a word; prints the result and step count");
  add_pres(reduce, c);
  std::string word;
  reduce->add_option("word", word, "word, lowercase letters and uppercase inverses")->required();
  reduce->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const DehnResult r = dehn_reduce(p, word_arg(p, word));
      out << to_string(r.word) << "\n";
      out << "steps: " << r.trace.step_count() << "\n";
      out << "free cancellations: " << r.trace.free_cancellations << "\n";
    };
  });

  // equal
  auto* equal = app.add_subcommand("equal", "decide whether two words name the same element");
  add_pres(equal, c);
  add_budget(equal, c);
  equal->add_option("words", words, "two words")->expected(2)->required();
  equal->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const Tristate t = words_equal(p, word_arg(p, words[0]), word_arg(p, words[1]), oracle_budget(c));
      out << to_string(t) << "\n";
      code = t == Tristate::equal ? kOk : t == Tristate::not_equal ? kNegative : kUnknown;
    };
  });

  // normal-form
  std::size_t nf_radius = 8;
  auto* nf = app.add_subcommand("normal-form", "shortlex-least word for the element");
  add_pres(nf, c);
  add_budget(nf, c);
  nf->add_option("word", word)->required();
  nf->add_option("--radius", nf_radius, "longest candidate representative for searched families");
  nf->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      out << to_string(canonical_form(p, word_arg(p, word), nf_radius, oracle_budget(c))) << "\n";
    };
  });

  // verify-dehn
  std::size_t insertions = 3, max_len = 16;
  auto* verify = app.add_subcommand("verify-dehn", "check Dehn's algorithm on generated null-homotopic words");
  add_pres(verify, c);
  verify->add_option("--insertions", insertions, "relator insertion rounds");
  verify->add_option("--max-len", max_len, "longest generated word");
  verify->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const DehnVerdict v = verify_dehn_presentation(p, insertions, max_len);
      if (v.holds) {
        out << "PASS (" << v.words_checked << " words)\n";
      } else {
        out << "FAIL counterexample: " << to_string(*v.counterexample) << "\n";
        code = kNegative;
      }
    };
  });

  // ball
  std::size_t radius = 0;
  std::string out_path;
  auto* ball = app.add_subcommand("ball", "Cayley graph ball around the identity");
  add_pres(ball, c);
  add_budget(ball, c);
  ball->add_option("--radius", radius)->required();
  ball->add_option("--out", out_path, "write JSON here ('-' for standard output)");
  ball->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const CayleyBall b = build_ball(p, radius, oracle_budget(c));
      if (out_path.empty()) {
        out << "radius " << b.radius() << "\nvertices " << b.size() << "\nedges " << b.edges().size() << "\n";
        return;
      }
      const std::string text = ball_json(b).dump() + "\n";
      if (out_path == "-") {
        out << text;
        return;
      }
      std::ofstream f(out_path);
      if (!(f << text)) throw std::runtime_error("cannot write '" + out_path + "'");
      out << "wrote " << b.size() << " vertices to " << out_path << "\n";
    };
  });

  // delta
  std::optional<std::size_t> sample;
  std::optional<std::uint64_t> seed;
  bool as_json = false;
  std::string choice = "worst";
  auto* delta = app.add_subcommand("delta", "thinness of geodesic triangles in a ball");
  add_pres(delta, c);
  add_budget(delta, c);
  delta->add_option("--radius", radius)->required();
  delta->add_option("--sample", sample, "random triangles instead of all of them (needs --seed)");
  delta->add_option("--seed", seed);
  delta->add_option("--geodesics", choice, "worst (every geodesic) or canonical (one per side)")
      ->check(CLI::IsMember({"worst", "canonical"}));
  delta->add_flag("--json", as_json, "emit the full report as JSON");
  delta->callback([&] {
    if (sample && !seed) throw UsageError("--sample requires --seed");
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const CayleyBall b = build_ball(p, radius, oracle_budget(c));
      const BallMetric m(b);
      const SamplingPolicy policy = sample ? SamplingPolicy::random(*seed, *sample) : SamplingPolicy::exhaustive();
      const ThinnessReport r =
          delta_estimate(b, m, policy, choice == "worst" ? GeodesicChoice::worst : GeodesicChoice::canonical);
      if (as_json) {
        out << thinness_json(b, r).dump() << "\n";
        return;
      }
      out << "delta " << r.delta << "\n";
      out << "triangles " << r.triangles_examined << "\n";
      if (r.witness) {
        const auto& w = *r.witness;
        out << "witness " << to_string(b.vertex(w.triangle[0])) << " " << to_string(b.vertex(w.triangle[1])) << " "
            << to_string(b.vertex(w.triangle[2])) << "\n";
        out << "p " << to_string(b.vertex(w.p)) << " on side " << w.side << ", nearest " << to_string(b.vertex(w.q))
            << " at distance " << w.distance << "\n";
      }
    };
  });

  // area
  auto* area_cmd = app.add_subcommand("area", "combinatorial area of a null-homotopic word");
  add_pres(area_cmd, c);
  add_budget(area_cmd, c);
  area_cmd->add_option("word", word)->required();
  area_cmd->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const Word w = word_arg(p, word);
      if (words_equal(p, w, Word{}, oracle_budget(c)) == Tristate::not_equal) {
        out << "NOT-NULL-HOMOTOPIC\n";
        code = kNegative;
        return;
      }
      const AreaResult r = area(p, w, area_caps(c));
      if (!r.value) {
        out << "UNKNOWN (max area " << r.caps.max_area << ", max length " << r.caps.max_intermediate_length << ")\n";
        code = kUnknown;
        return;
      }
      out << *r.value << "\n";
    };
  });

  // dehn-function
  std::size_t n_max = 0;
  auto* dehn_fn = app.add_subcommand("dehn-function", "CSV n,maxArea,argmax for even n up to N");
  add_pres(dehn_fn, c);
  add_budget(dehn_fn, c);
  dehn_fn->add_option("--n", n_max, "longest word length")->required();
  dehn_fn->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const DehnTable t = dehn_function(p, n_max, area_caps(c));
      out << "n,maxArea,argmax\n";
      for (const DehnRow& r : t.rows) out << r.n << "," << r.max_area << "," << to_string(r.argmax) << "\n";
    };
  });

  // fit
  std::string csv_path;
  auto* fit = app.add_subcommand("fit", "growth class of a CSV table (first two columns, '-' for standard input)");
  fit->add_option("csv", csv_path)->required();
  fit->callback([&] {
    action = [&] {
      std::vector<std::pair<double, double>> pts;
      if (csv_path == "-") {
        pts = read_csv_points(std::cin);
      } else {
        std::ifstream f(csv_path);
        if (!f) throw std::runtime_error("cannot read '" + csv_path + "'");
        pts = read_csv_points(f);
      }
      if (pts.empty()) throw std::runtime_error("no data rows to fit");
      const GrowthClass g = fit_growth(pts);
      out << to_string(g.growth) << "\n";
      out << "exponent " << fixed10(g.fitted_exponent) << "\nresidual " << fixed10(g.residual) << "\n";
      if (g.all_zero) out << "all rows zero\n";
    };
  });

  // qi
  std::string gens_a, gens_b;
  auto* qi = app.add_subcommand("qi", "compare word metrics of two generating sets");
  add_pres(qi, c);
  add_budget(qi, c);
  qi->add_option("--gens-a", gens_a, "comma-separated generating words (default: the generators)");
  qi->add_option("--gens-b", gens_b, "comma-separated generating words")->required();
  qi->add_option("--radius", radius)->required();
  qi->callback([&] {
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      const GeneratingSet a = gens_a.empty() ? GeneratingSet::letters(p) : parse_gens(p, gens_a);
      const QIReport r = compare_metrics(p, a, parse_gens(p, gens_b), radius, oracle_budget(c));
      out << "lambda " << fixed10(r.lambda) << "\nc " << r.c << "\nelements " << r.element_count << "\nviolations "
          << r.violations << "\n";
    };
  });

  // hplane verify
  std::size_t triangles = 1000, samples = 64;
  double diameter = 25.0;
  auto* hplane = app.add_subcommand("hplane", "hyperbolic plane experiments");
  hplane->require_subcommand(1);
  auto* hverify = hplane->add_subcommand("verify", "thinness of random triangles against log(1 + sqrt 2)");
  hverify->add_option("--triangles", triangles);
  hverify->add_option("--seed", seed)->required();
  hverify->add_option("--diameter", diameter, "largest side length")->check(CLI::PositiveNumber);
  hverify->add_option("--samples", samples, "sample points per side")->check(CLI::Range(2, 100000));
  hverify->callback([&] {
    action = [&] {
      const HVerifyReport r = verify_thin_triangles(triangles, *seed, diameter, samples);
      out << "max thinness " << fixed10(r.max_thinness) << " over " << r.triangles << " triangles (bound "
          << fixed10(kThinTriangleBound) << ")\n";
      out << (r.pass ? "PASS" : "FAIL") << "\n";
      if (!r.pass) code = kNegative;
    };
  });

  // bench
  std::string solver_name, sizes_text, source_name = "worst";
  std::size_t trials = 32;
  auto* bench = app.add_subcommand("bench", "CSV n,steps,wallNanos,trials for a word-problem solver");
  add_pres(bench, c);
  bench->add_option("--solver", solver_name)->required()->check(CLI::IsMember({"dehn", "zz-nf"}));
  bench->add_option("--sizes", sizes_text, "comma-separated word lengths")->required();
  bench->add_option("--source", source_name)->check(CLI::IsMember({"worst", "random", "trivial"}));
  bench->add_option("--seed", seed);
  bench->add_option("--trials", trials, "random words per length");
  bench->callback([&] {
    if (source_name == "random" && !seed) throw UsageError("--source random requires --seed");
    action = [&] {
      const Presentation p = resolve_presentation(c.pres);
      std::vector<std::size_t> sizes;
      for (const std::string& s : split(sizes_text, ',')) sizes.push_back(parse_unsigned(s, "size"));
      const WordSource src = source_name == "random"    ? WordSource::random(*seed, trials)
                             : source_name == "trivial" ? WordSource::null_homotopic()
                                                        : WordSource::worst();
      const BenchTable t = run_bench(p, solver_name == "dehn" ? Solver::dehn : Solver::zz_normal_form, sizes, src);
      err << "# steps: " << BenchTable::step_definition << "\n";
      out << "n,steps,wallNanos,trials\n";
      for (const BenchRow& r : t.rows) out << r.n << "," << r.steps << "," << r.wall_nanos << "," << r.trials << "\n";
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUnknown;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUnknown;
  }

  try {
    if (action) action();
  } catch (const InsufficientBudget& e) {
    out << "UNKNOWN\n";
    err << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUnknown;
  }
  return code;
}

}  // namespace curv::cli
