// Command-line front end: scaffold construction, quotients, reference fans,
// stratum reports, verification harness, and fan-file utilities.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tcs/json_io.hpp"
#include "tcs/reference.hpp"
#include "tcs/svg.hpp"
#include "tcs/verify.hpp"

using namespace tcs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

struct GlobalOpts {
  int threads = 1;
  std::string output = "text";
  uint64_t seed = kDefaultSeed;
};

// Coordinate names for inequality parsing: a1,b1,... for d<=2, else c1..ck.
std::vector<std::string> coord_names(int n, int d) {
  std::vector<std::string> names;
  if (d == 1) {
    for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  } else if (d == 2) {
    for (int i = 1; i <= n; ++i) {
      names.push_back("a" + std::to_string(i));
      names.push_back("b" + std::to_string(i));
    }
  } else {
    for (int i = 1; i <= n * d; ++i) names.push_back("c" + std::to_string(i));
  }
  return names;
}

struct Relation {
  IntVec normal;  // lhs - rhs
  bool equality = false;
};

IntVec parse_linear(const std::string& expr, const std::vector<std::string>& names) {
  IntVec v(names.size(), Int(0));
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < expr.size() && isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  Int sign = 1;
  while (true) {
    skip_ws();
    if (i == expr.size()) break;
    if (expr[i] == '+') {
      sign = 1;
      ++i;
      continue;
    }
    if (expr[i] == '-') {
      sign = -1;
      ++i;
      continue;
    }
    Int coeff = 1;
    std::string num;
    while (i < expr.size() && isdigit(static_cast<unsigned char>(expr[i]))) num += expr[i++];
    bool have_num = !num.empty();
    if (have_num) coeff = Int(num);
    skip_ws();
    if (i < expr.size() && expr[i] == '*') {
      ++i;
      skip_ws();
    }
    std::string word;
    while (i < expr.size() && (isalnum(static_cast<unsigned char>(expr[i])) || expr[i] == '_'))
      word += expr[i++];
    if (word.empty()) {
      if (!have_num) throw std::invalid_argument("bad expression: " + expr);
      if (coeff != 0) throw std::invalid_argument("nonzero constant in a cone relation");
    } else {
      auto it = std::find(names.begin(), names.end(), word);
      if (it == names.end()) throw std::invalid_argument("unknown coordinate " + word);
      v[size_t(it - names.begin())] += sign * coeff;
    }
    sign = 1;
  }
  return v;
}

Relation parse_relation(const std::string& s, const std::vector<std::string>& names) {
  for (const std::string op : {"<=", ">=", "="}) {
    size_t at = s.find(op);
    if (at == std::string::npos) continue;
    IntVec lhs = parse_linear(s.substr(0, at), names);
    IntVec rhs = parse_linear(s.substr(at + op.size()), names);
    Relation r;
    r.equality = op == "=";
    r.normal = op == "<=" ? sub(rhs, lhs) : sub(lhs, rhs);
    return r;
  }
  throw std::invalid_argument("relation needs <=, >= or =: " + s);
}

Cone cone_from_relations(const std::string& spec, int n, int d) {
  std::vector<IntVec> normals, eqs;
  std::stringstream ss(spec);
  std::string tok;
  auto names = coord_names(n, d);
  while (std::getline(ss, tok, ';')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    Relation r = parse_relation(tok, names);
    (r.equality ? eqs : normals).push_back(r.normal);
  }
  return Cone::from_inequalities(normals, eqs, n * d);
}

void emit_report(const GlobalOpts& g, const ConfigurationFan& cf, const StratumReport& rep,
                 const std::string& svg_path) {
  if (g.output == "json") std::cout << stratum_report_to_json(cf, rep);
  else std::cout << stratum_report_to_text(cf, rep);
  if (!svg_path.empty()) {
    write_file(svg_path, fiber_complex_svg(cf, rep));
    std::cerr << "wrote " << svg_path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical configuration spaces: scaffolds, quotients, strata"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads (runs are deterministic)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", g.output, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for sampling-based checks");

  auto* sc = app.add_subcommand("scaffold", "construct scaffolds");
  sc->fallthrough();
  auto* scb = sc->add_subcommand("build", "build a scaffold and write it as JSON");
  scb->fallthrough();
  std::string sc_kind, sc_fan, sc_left, sc_right, sc_out;
  int sc_n = 1;
  scb->add_option("--kind", sc_kind, "lambda0|square|biperm|from-fan|product")->required();
  scb->add_option("--n", sc_n, "number of unanchored marks")->required();
  scb->add_option("--fan", sc_fan, "fan JSON for --kind from-fan");
  scb->add_option("--left", sc_left, "scaffold JSON, first product factor");
  scb->add_option("--right", sc_right, "scaffold JSON, second product factor");
  scb->add_option("-o,--out", sc_out, "output file")->required();

  auto* qt = app.add_subcommand("quotient", "universal weak semistable reduction");
  qt->fallthrough();
  std::string qt_in, qt_out, qt_refined;
  bool qt_certify = false;
  qt->add_option("-i,--in", qt_in, "scaffold JSON")->required();
  qt->add_option("-o,--out", qt_out, "configuration fan JSON")->required();
  qt->add_option("--emit-refined", qt_refined, "also write the refined scaffold");
  qt->add_flag("--certify", qt_certify, "print the certificate suites");

  auto* rf = app.add_subcommand("reference", "reference fans");
  rf->fallthrough();
  std::string rf_kind, rf_out;
  int rf_n = 1;
  rf->add_option("--kind", rf_kind, "perm|perm2|biperm|harmonic")->required();
  rf->add_option("--n", rf_n, "number of unanchored marks")->required();
  rf->add_option("-o,--out", rf_out, "output file")->required();

  auto* st = app.add_subcommand("stratum", "inspect the stratum over a cone");
  st->fallthrough();
  std::string st_in, st_cone, st_svg;
  st->add_option("-i,--in", st_in, "configuration fan JSON")->required();
  st->add_option("--cone", st_cone, "cone id or ';'-separated relations like 'a1<=0;a2>=a1'")
      ->required();
  st->add_option("--svg", st_svg, "render the fiber complex (d=2)");

  auto* lc = app.add_subcommand("locate", "locate a point and report its stratum");
  lc->fallthrough();
  std::string lc_in, lc_point, lc_svg;
  lc->add_option("-i,--in", lc_in, "configuration fan JSON")->required();
  lc->add_option("--point", lc_point, "comma-separated rational point")->required();
  lc->add_option("--svg", lc_svg, "render the fiber complex (d=2)");

  auto* bs = app.add_subcommand("bisequence", "bisequence label of a planar configuration");
  bs->fallthrough();
  std::string bs_point;
  int bs_n = 1;
  bs->add_option("--n", bs_n, "number of unanchored marks")->required();
  bs->add_option("--point", bs_point, "a1,b1,...,an,bn")->required();

  auto* vf = app.add_subcommand("verify", "re-run the named checks");
  vf->fallthrough();
  std::string vf_name = "all";
  int vf_max_n = 4;
  vf->add_option("name", vf_name,
                 "all, permutahedron, square, bipermutahedron, sqrt-stack, chain-stratum, "
                 "square-stratum, biperm-stratum, certificates, properties");
  vf->add_option("--max-n", vf_max_n, "bound for the theorem sweeps");

  auto* ss = app.add_subcommand("stats", "fan statistics and f-vector");
  ss->fallthrough();
  std::string ss_in;
  ss->add_option("-i,--in", ss_in, "fan JSON")->required();

  auto* df = app.add_subcommand("diff", "maximal cones present in exactly one input");
  df->fallthrough();
  std::string df_a, df_b;
  df->add_option("a", df_a, "fan JSON")->required();
  df->add_option("b", df_b, "fan JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (scb->parsed()) {
      Scaffold s;
      if (sc_kind == "lambda0") s = minimal_scaffold(sc_n);
      else if (sc_kind == "square") s = square_scaffold(sc_n);
      else if (sc_kind == "biperm") s = biperm_scaffold(sc_n);
      else if (sc_kind == "from-fan") {
        if (sc_fan.empty()) throw std::invalid_argument("--kind from-fan needs --fan");
        s = scaffold_from_fan(fan_from_json(read_file(sc_fan)), sc_n);
      } else if (sc_kind == "product") {
        if (sc_left.empty() || sc_right.empty())
          throw std::invalid_argument("--kind product needs --left and --right");
        s = product_scaffold(scaffold_from_json(read_file(sc_left)),
                             scaffold_from_json(read_file(sc_right)));
      } else {
        throw std::invalid_argument("unknown scaffold kind " + sc_kind);
      }
      ScaffoldReport rep = validate_scaffold(s, g.seed);
      if (!rep.ok) throw std::runtime_error("constructed scaffold invalid: " + rep.detail);
      write_file(sc_out, scaffold_to_json(s));
      std::cerr << "wrote " << sc_out << " (" << s.fan.maximal_cones().size()
                << " maximal cones)\n";
    } else if (qt->parsed()) {
      Scaffold s = scaffold_from_json(read_file(qt_in));
      ScaffoldReport rep = validate_scaffold(s, g.seed);
      if (!rep.ok) throw std::invalid_argument("input is not a scaffold: " + rep.detail);
      ConfigurationFan cf = configuration_fan(s);
      write_file(qt_out, configuration_to_json(cf));
      std::cerr << "wrote " << qt_out << " (" << cf.pi_fan.fan().maximal_cones().size()
                << " maximal cones downstairs)\n";
      if (!qt_refined.empty()) {
        write_file(qt_refined, scaffold_to_json(cf.refined));
        std::cerr << "wrote " << qt_refined << "\n";
      }
      if (qt_certify) {
        FanMap pi{cf.projection, cf.refined_stacky, cf.pi_fan};
        auto pr = check_weakly_semistable(pi);
        std::cout << (pr.ok ? "[pass]" : "[FAIL]") << " projection weakly semistable\n";
        bool all = pr.ok;
        for (int i = 0; i <= cf.n(); ++i) {
          FanMap sec{cf.sections[size_t(i)], cf.pi_fan, cf.refined_stacky};
          auto sr = check_weakly_semistable(sec);
          std::cout << (sr.ok ? "[pass]" : "[FAIL]") << " section " << i
                    << " weakly semistable\n";
          all = all && sr.ok;
        }
        auto tr = check_terminality(cf);
        std::cout << (tr.ok ? "[pass]" : "[FAIL]") << " terminality\n";
        all = all && tr.ok;
        if (!all) return kExitVerifyFail;
      }
    } else if (rf->parsed()) {
      Fan f;
      if (rf_kind == "perm") f = permutahedral_fan(rf_n);
      else if (rf_kind == "perm2") f = square_permutahedral_fan(rf_n);
      else if (rf_kind == "biperm") f = bipermutahedral_fan(rf_n);
      else if (rf_kind == "harmonic") f = harmonic_fan(rf_n);
      else throw std::invalid_argument("unknown reference kind " + rf_kind);
      write_file(rf_out, fan_to_json(f));
      std::cerr << "wrote " << rf_out << " (" << f.maximal_cones().size()
                << " maximal cones)\n";
    } else if (st->parsed()) {
      ConfigurationFan cf = configuration_from_json(read_file(st_in));
      Cone rho;
      if (st_cone.find_first_not_of("0123456789") == std::string::npos) {
        size_t id = std::stoul(st_cone);
        const auto& all = cf.pi_fan.fan().all_cones();
        if (id >= all.size()) throw std::invalid_argument("cone id out of range");
        rho = all[id];
      } else {
        rho = cone_from_relations(st_cone, cf.n(), cf.d());
        if (!cf.pi_fan.fan().has_cone(rho))
          throw std::invalid_argument("the described cone is not a cone of the fan");
      }
      emit_report(g, cf, stratum_report(cf, rho), st_svg);
    } else if (lc->parsed()) {
      ConfigurationFan cf = configuration_from_json(read_file(lc_in));
      auto p = parse_point(lc_point);
      if (!p) throw std::invalid_argument("bad --point");
      auto [rho, rep] = locate(cf, *p);
      (void)rho;
      emit_report(g, cf, rep, lc_svg);
    } else if (bs->parsed()) {
      auto p = parse_point(bs_point);
      if (!p || int(p->size()) != 2 * bs_n)
        throw std::invalid_argument("--point needs 2n coordinates");
      std::string label = bisequence_of(*p);
      if (g.output == "json") std::cout << "{\"bisequence\": \"" << label << "\"}\n";
      else std::cout << label << "\n";
    } else if (vf->parsed()) {
      auto results = run_verify(vf_name, vf_max_n, g.seed);
      bool all = true;
      if (g.output == "json") {
        std::cout << "[\n";
        for (size_t i = 0; i < results.size(); ++i) {
          const auto& r = results[i];
          std::cout << "  {\"name\": \"" << r.name
                    << "\", \"pass\": " << (r.pass ? "true" : "false")
                    << ", \"seconds\": " << r.seconds << ", \"detail\": \"" << r.detail
                    << "\"}" << (i + 1 < results.size() ? "," : "") << "\n";
          all = all && r.pass;
        }
        std::cout << "]\n";
      } else {
        for (const auto& r : results) {
          std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds << "s) "
                    << r.detail << "\n";
          all = all && r.pass;
        }
      }
      return all ? kExitOk : kExitVerifyFail;
    } else if (ss->parsed()) {
      Fan f = fan_from_json(read_file(ss_in));
      bool complete = f.completeness_cache().value_or(false);
      std::cout << "rank " << f.ambient_rank() << ", maximal " << f.maximal_cones().size()
                << ", total " << f.all_cones().size() << ", "
                << (complete ? "complete" : "not complete") << "\n";
      FVector fv = f_vector(f);
      std::cout << "f-vector:";
      for (size_t k = 0; k < fv.counts.size(); ++k) std::cout << " " << fv.counts[k];
      std::cout << "\n";
    } else if (df->parsed()) {
      Fan a = fan_from_json(read_file(df_a));
      Fan b = fan_from_json(read_file(df_b));
      if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("fans live on different spaces");
      auto only_in = [](const Fan& x, const Fan& y, const char* tag) {
        int count = 0;
        for (const Cone& c : x.maximal_cones()) {
          bool found = false;
          for (const Cone& d : y.maximal_cones()) found = found || d == c;
          if (!found) {
            std::cout << tag << " " << c.key() << "\n";
            ++count;
          }
        }
        return count;
      };
      int only_a = only_in(a, b, "<");
      int only_b = only_in(b, a, ">");
      if (only_a + only_b == 0) return kExitOk;
      std::cout << only_a << " maximal cones only in " << df_a << ", " << only_b
                << " only in " << df_b << "\n";
      return kExitVerifyFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}
