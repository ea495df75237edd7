#include "tcs/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcs {

namespace {

// Fixed-point decimal rendering of an exact rational; rounding happens only
// here, at the output boundary.
std::string fixed_decimal(const Rat& q, int digits = 4) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = q * Rat(scale);
  Int rounded;
  // round half away from zero
  Int num = scaled.get_num(), den = scaled.get_den();
  Int half = den;
  if (sgn(num) < 0) half = -half;
  Int twice = 2 * num + half;
  Int den2 = 2 * den;
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  bool neg = sgn(rounded) < 0;
  Int a = abs(rounded);
  Int ip = a / scale, fp = a % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), size_t(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

struct Segment {
  Rat x1, y1, x2, y2;
};

}  // namespace

std::string fiber_complex_svg(const ConfigurationFan& cf, const StratumReport& rep) {
  if (cf.d() != 2) throw std::invalid_argument("fiber_complex_svg: needs d == 2");
  const auto& fc = rep.fiber;
  const auto& up = cf.refined.fan.all_cones();

  Rat lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  for (const auto& [v, pos] : fc.vertex_position) {
    if (first) {
      lo_x = hi_x = pos[0];
      lo_y = hi_y = pos[1];
      first = false;
    }
    lo_x = std::min(lo_x, pos[0]);
    hi_x = std::max(hi_x, pos[0]);
    lo_y = std::min(lo_y, pos[1]);
    hi_y = std::max(hi_y, pos[1]);
  }
  Rat pad = std::max({Rat(hi_x - lo_x), Rat(hi_y - lo_y), Rat(1)}) * Rat(2, 5);
  lo_x -= pad;
  hi_x += pad;
  lo_y -= pad;
  hi_y += pad;

  Cone kernel = Cone::from_inequalities({}, cf.projection.row_list(), cf.scaffold.total_rank());
  std::vector<Segment> segments;
  for (size_t i = 0; i < fc.polyhedra.size(); ++i) {
    if (fc.polyhedra[i].dim != 1) continue;
    std::vector<int> ends;
    for (int v : fc.vertices)
      if (fc.leq[size_t(v)][i]) ends.push_back(v);
    if (fc.polyhedra[i].bounded) {
      if (ends.size() != 2) continue;
      const auto& a = fc.vertex_position.at(ends[0]);
      const auto& b = fc.vertex_position.at(ends[1]);
      segments.push_back({a[0], a[1], b[0], b[1]});
    } else if (ends.size() == 1) {
      Cone rec = intersect(up[size_t(fc.polyhedra[i].cone_index)], kernel);
      if (rec.rays().size() != 1) continue;
      const IntVec& r = rec.rays()[0];
      Rat dx = Rat(r[size_t(cf.scaffold.base_rank())]);
      Rat dy = Rat(r[size_t(cf.scaffold.base_rank()) + 1]);
      const auto& a = fc.vertex_position.at(ends[0]);
      Rat t = Rat(4) * (hi_x - lo_x + hi_y - lo_y);
      segments.push_back({a[0], a[1], a[0] + t * dx, a[1] + t * dy});
    }
  }

  const Rat W = 480, H = 480;
  auto X = [&](const Rat& x) -> Rat { return (x - lo_x) / (hi_x - lo_x) * W; };
  auto Y = [&](const Rat& y) -> Rat { return H - (y - lo_y) / (hi_y - lo_y) * H; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
        "viewBox=\"0 0 480 480\">\n";
  os << "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  os << "<clipPath id=\"w\"><rect width=\"480\" height=\"480\"/></clipPath>\n"
        "<g clip-path=\"url(#w)\">\n";
  for (const auto& s : segments)
    os << "<line x1=\"" << fixed_decimal(X(s.x1)) << "\" y1=\"" << fixed_decimal(Y(s.y1))
       << "\" x2=\"" << fixed_decimal(X(s.x2)) << "\" y2=\"" << fixed_decimal(Y(s.y2))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  std::map<int, std::vector<int>> marks_at;
  for (const auto& [i, v] : rep.markings) marks_at[v].push_back(i);
  for (const auto& [v, pos] : fc.vertex_position) {
    std::string x = fixed_decimal(X(pos[0])), y = fixed_decimal(Y(pos[1]));
    bool marked = marks_at.count(v) > 0;
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << (marked ? "4" : "2.5")
       << "\" fill=\"" << (marked ? "black" : "gray") << "\"/>\n";
    if (marked) {
      Rat tx = X(pos[0]) + Rat(6), ty = Y(pos[1]) - Rat(6);
      os << "<text x=\"" << fixed_decimal(tx) << "\" y=\"" << fixed_decimal(ty)
         << "\" font-size=\"13\">";
      for (size_t j = 0; j < marks_at[v].size(); ++j)
        os << (j ? "," : "") << "x" << marks_at[v][j];
      os << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace tcs
