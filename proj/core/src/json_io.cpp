#include "tcs/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tcs {

using json = nlohmann::ordered_json;

namespace {

json vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

json mat_to_json(const IntMat& m) {
  json a = json::array();
  for (int i = 0; i < m.rows; ++i) a.push_back(vec_to_json(m.row(i)));
  return a;
}

json ratvec_to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

IntVec vec_from_json(const json& a) {
  IntVec v;
  for (const auto& x : a) {
    auto p = parse_integer(x.get<std::string>());
    if (!p) throw std::invalid_argument("bad integer '" + x.get<std::string>() + "'");
    v.push_back(*p);
  }
  return v;
}

IntMat mat_from_json(const json& a, int cols_hint = -1) {
  std::vector<IntVec> rows;
  for (const auto& r : a) rows.push_back(vec_from_json(r));
  int cols = rows.empty() ? std::max(cols_hint, 0) : int(rows[0].size());
  return IntMat::from_rows(rows, cols);
}

json cone_to_json(const Cone& c, const StackyFan* stacky) {
  json o;
  json rays = json::array();
  for (const auto& r : c.rays()) rays.push_back(vec_to_json(r));
  o["rays"] = rays;
  o["lineality"] = mat_to_json(c.lineality().basis);
  if (stacky) {
    const LatticeBasis& l = stacky->sublattice(c);
    if (!(l == c.span_lattice())) o["sublattice_hnf"] = mat_to_json(l.basis);
  }
  return o;
}

Cone cone_from_json(const json& o, int rank) {
  std::vector<IntVec> rays;
  for (const auto& r : o.at("rays")) rays.push_back(vec_from_json(r));
  std::vector<IntVec> lin;
  for (const auto& r : o.at("lineality")) lin.push_back(vec_from_json(r));
  return Cone::from_generators(rays, lin, rank);
}

json fan_to_json_obj(const Fan& f, const StackyFan* stacky) {
  json o;
  o["ambient_rank"] = f.ambient_rank();
  json cones = json::array();
  for (const Cone& c : f.maximal_cones()) cones.push_back(cone_to_json(c, stacky));
  o["maximal_cones"] = cones;
  auto complete = f.completeness_cache();
  if (!complete) {
    bool v = check_complete(f);
    f.cache_complete(v);
    complete = v;
  }
  o["complete"] = *complete;
  return o;
}

struct ParsedFan {
  Fan fan;
  std::map<std::string, LatticeBasis> sublattices;
};

ParsedFan fan_from_json_obj(const json& o) {
  int rank = o.at("ambient_rank").get<int>();
  std::vector<Cone> maximal;
  std::map<std::string, LatticeBasis> subs;
  for (const auto& co : o.at("maximal_cones")) {
    Cone c = cone_from_json(co, rank);
    if (co.contains("sublattice_hnf")) {
      LatticeBasis l;
      l.ambient = rank;
      l.basis = mat_from_json(co.at("sublattice_hnf"), rank);
      subs[c.key()] = std::move(l);
    }
    maximal.push_back(std::move(c));
  }
  ParsedFan out;
  out.fan = Fan::from_maximal(std::move(maximal), rank,
                              o.contains("complete")
                                  ? std::optional<bool>(o.at("complete").get<bool>())
                                  : std::nullopt);
  out.sublattices = std::move(subs);
  return out;
}

json scaffold_to_json_obj(const Scaffold& s, const StackyFan* stacky) {
  json o = fan_to_json_obj(s.fan, stacky);
  o["n"] = s.n;
  o["d"] = s.d;
  o["kind"] = s.kind;
  return o;
}

Scaffold scaffold_from_json_obj(const json& o) {
  Scaffold s;
  s.n = o.at("n").get<int>();
  s.d = o.at("d").get<int>();
  s.kind = o.at("kind").get<std::string>();
  s.fan = fan_from_json_obj(o).fan;
  if (s.fan.ambient_rank() != s.total_rank())
    throw std::invalid_argument("scaffold JSON: rank does not match n*d + d");
  return s;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text, nullptr, true, true);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// missing keys / wrong types surface as input errors, not internal ones
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad fan file: ") + e.what());
  }
}

}  // namespace

std::string fan_to_json(const Fan& f) { return fan_to_json_obj(f, nullptr).dump(2) + "\n"; }

Fan fan_from_json(const std::string& text) {
  return guarded([&] {
    json o = parse_text(text);
    // configuration files carry their quotient fan under "pi_fan"
    if (!o.contains("ambient_rank") && o.contains("pi_fan"))
      return fan_from_json_obj(o.at("pi_fan")).fan;
    return fan_from_json_obj(o).fan;
  });
}

std::string stacky_to_json(const StackyFan& s) {
  return fan_to_json_obj(s.fan(), &s).dump(2) + "\n";
}

StackyFan stacky_from_json(const std::string& text) {
  return guarded([&] {
    ParsedFan p = fan_from_json_obj(parse_text(text));
    return StackyFan::with_sublattices(p.fan, p.sublattices);
  });
}

std::string scaffold_to_json(const Scaffold& s) {
  return scaffold_to_json_obj(s, nullptr).dump(2) + "\n";
}

Scaffold scaffold_from_json(const std::string& text) {
  return guarded([&] { return scaffold_from_json_obj(parse_text(text)); });
}

std::string configuration_to_json(const ConfigurationFan& cf) {
  json o;
  o["n"] = cf.n();
  o["d"] = cf.d();
  o["scaffold"] = scaffold_to_json_obj(cf.scaffold, nullptr);
  o["pi_fan"] = fan_to_json_obj(cf.pi_fan.fan(), &cf.pi_fan);
  o["refined_scaffold"] = scaffold_to_json_obj(cf.refined, &cf.refined_stacky);
  o["projection"] = mat_to_json(cf.projection);
  json secs = json::array();
  for (const auto& m : cf.sections) secs.push_back(mat_to_json(m));
  o["sections"] = secs;
  return o.dump(2) + "\n";
}

ConfigurationFan configuration_from_json(const std::string& text) {
  return guarded([&] {
  json o = parse_text(text);
  ConfigurationFan cf;
  cf.scaffold = scaffold_from_json_obj(o.at("scaffold"));
  {
    ParsedFan p = fan_from_json_obj(o.at("pi_fan"));
    cf.pi_fan = StackyFan::with_sublattices(p.fan, p.sublattices);
  }
  {
    const json& ro = o.at("refined_scaffold");
    ParsedFan p = fan_from_json_obj(ro);
    cf.refined.n = ro.at("n").get<int>();
    cf.refined.d = ro.at("d").get<int>();
    cf.refined.kind = ro.at("kind").get<std::string>();
    cf.refined.fan = p.fan;
    cf.refined_stacky = StackyFan::with_sublattices(p.fan, p.sublattices);
  }
  cf.projection = mat_from_json(o.at("projection"), cf.scaffold.total_rank());
  for (const auto& m : o.at("sections"))
    cf.sections.push_back(mat_from_json(m, cf.scaffold.base_rank()));
  // rebuild the fibration index, re-certifying that every refined cone maps
  // onto a quotient cone
  const auto& up = cf.refined.fan.all_cones();
  cf.fiber_cones.assign(cf.pi_fan.fan().all_cones().size(), {});
  for (size_t i = 0; i < up.size(); ++i) {
    Cone img = linear_image(cf.projection, up[i]);
    int at = cf.pi_fan.fan().cone_index(img);
    if (at < 0)
      throw std::invalid_argument("configuration JSON: refined cone maps outside the fan");
    cf.fiber_cones[size_t(at)].push_back(int(i));
  }
  return cf;
  });
}

std::string stratum_report_to_json(const ConfigurationFan& cf, const StratumReport& rep) {
  json o;
  o["cone"] = cone_to_json(rep.rho, nullptr);
  o["cone_dim"] = rep.rho.dim();
  o["stratum_dim"] = rep.stratum_dim;
  if (rep.bisequence) o["bisequence"] = *rep.bisequence;
  o["base_point"] = ratvec_to_json(rep.fiber.base_point);

  json fiber;
  std::vector<size_t> by_dim(size_t(cf.d()) + 1, 0);
  size_t bounded_edges = 0;
  for (const auto& p : rep.fiber.polyhedra) {
    by_dim[size_t(p.dim)]++;
    if (p.dim == 1 && p.bounded) ++bounded_edges;
  }
  fiber["polyhedra_by_dim"] = by_dim;
  fiber["vertex_count"] = rep.fiber.vertices.size();
  fiber["bounded_edges"] = bounded_edges;
  json vtx = json::array();
  for (int v : rep.fiber.vertices) {
    json vo;
    vo["id"] = v;
    vo["position"] = ratvec_to_json(rep.fiber.vertex_position.at(v));
    vo["component_fan_maximal_cones"] = rep.component_fans.at(v).maximal_cones().size();
    json w = mat_to_json(rep.rubber.weights.at(v));
    vo["rubber_weight"] = w;
    json stab = json::array();
    for (const Int& x : rep.stabilizers.at(v)) stab.push_back(x.get_str());
    vo["generic_stabilizer"] = stab;
    const auto& tpm = rep.positions.at(v);
    if (tpm.on_rays) {
      json r = json::array();
      for (const auto& col : *tpm.on_rays) r.push_back(ratvec_to_json(col));
      vo["position_on_rays"] = r;
    }
    vtx.push_back(vo);
  }
  fiber["vertices"] = vtx;
  o["fiber"] = fiber;

  json marks;
  for (const auto& [i, v] : rep.markings) marks[std::to_string(i)] = v;
  o["markings"] = marks;
  o["rubber_lattice"] = mat_to_json(rep.rubber.rubber_lattice.basis);
  o["rubber_rank"] = rep.rubber.rubber_lattice.rank();
  return o.dump(2) + "\n";
}

std::string stratum_report_to_text(const ConfigurationFan& cf, const StratumReport& rep) {
  std::ostringstream os;
  os << "stratum over a cone of dim " << rep.rho.dim() << " (stratum dim " << rep.stratum_dim
     << ", rubber rank " << rep.rubber.rubber_lattice.rank() << ")\n";
  if (rep.bisequence) os << "bisequence: " << *rep.bisequence << "\n";
  os << "base point:";
  for (const Rat& x : rep.fiber.base_point) os << " " << to_string(x);
  os << "\n";
  std::vector<size_t> by_dim(size_t(cf.d()) + 1, 0);
  for (const auto& p : rep.fiber.polyhedra) by_dim[size_t(p.dim)]++;
  os << "fiber polyhedra by dim:";
  for (size_t k = 0; k < by_dim.size(); ++k) os << " " << k << ":" << by_dim[k];
  os << "\n";
  std::map<int, std::vector<int>> marks_at;
  for (const auto& [i, v] : rep.markings) marks_at[v].push_back(i);
  os << "vertices (" << rep.fiber.vertices.size() << "):\n";
  for (int v : rep.fiber.vertices) {
    os << "  v" << v << " at (";
    const auto& pos = rep.fiber.vertex_position.at(v);
    for (size_t j = 0; j < pos.size(); ++j) os << (j ? "," : "") << to_string(pos[j]);
    os << ")";
    if (marks_at.count(v)) {
      os << " marks {";
      for (size_t j = 0; j < marks_at[v].size(); ++j)
        os << (j ? "," : "") << "x" << marks_at[v][j];
      os << "}";
    }
    os << " component cones " << rep.component_fans.at(v).maximal_cones().size();
    os << " weight " << to_string(rep.rubber.weights.at(v));
    if (!rep.stabilizers.at(v).empty()) {
      os << " stabilizer [";
      const auto& st = rep.stabilizers.at(v);
      for (size_t j = 0; j < st.size(); ++j) os << (j ? "," : "") << st[j].get_str();
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace tcs
