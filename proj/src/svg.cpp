#include "polyft/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polyft {

namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 20.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double x0 = 0, y1 = 0, scale = 1;

  std::string x(const Vector& p) const { return num(kMargin + (p(0) - x0) * scale); }
  std::string y(const Vector& p) const { return num(kMargin + (y1 - p(1)) * scale); }
  std::string xy(const Vector& p) const { return x(p) + "," + y(p); }
};

std::vector<Vector> by_angle(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Vector& a, const Vector& b) { return std::atan2(a(1), a(0)) < std::atan2(b(1), b(0)); });
  return pts;
}

}  // namespace

std::string render_svg(const Instance& instance, const FTSet* set, const std::vector<Cone>& cones) {
  if (instance.ball.dim() != 2) throw Error(ErrorCode::WrongDimension, "SVG output needs a planar ball");
  validate(instance);

  std::vector<Vector> all = instance.ball.vertices();
  all.insert(all.end(), instance.sites.begin(), instance.sites.end());
  if (set) all.insert(all.end(), set->vertices.begin(), set->vertices.end());
  for (const Cone& c : cones) all.push_back(c.apex);
  Vector lo = all[0], hi = all[0];
  for (const Vector& p : all) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double side = std::max((hi - lo).maxCoeff(), 1e-9) * 1.1;
  const Vector mid = (lo + hi) / 2;
  Frame fr{mid(0) - side / 2, mid(1) + side / 2, (kCanvas - 2 * kMargin) / side};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";

  out += "  <polygon id=\"ball\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\" points=\"";
  bool first = true;
  for (const Vector& v : by_angle(instance.ball.vertices())) {
    out += (first ? "" : " ") + fr.xy(v);
    first = false;
  }
  out += "\"/>\n";

  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (const Vector& g : cones[i].generators) {
      const Vector end = cones[i].apex + g.normalized() * side * 2;
      out += "  <line class=\"cone\" x1=\"" + fr.x(cones[i].apex) + "\" y1=\"" + fr.y(cones[i].apex) + "\" x2=\"" +
             fr.x(end) + "\" y2=\"" + fr.y(end) + "\" stroke=\"#3070c0\" stroke-width=\"1\"/>\n";
    }
  }

  if (set && !set->vertices.empty()) {
    if (set->tag == FTSetTag::Polygon) {
      out += "  <polygon id=\"ft_set\" fill=\"#e07030\" fill-opacity=\"0.5\" stroke=\"#e07030\" points=\"";
      for (std::size_t i = 0; i < set->vertices.size(); ++i) out += (i ? " " : "") + fr.xy(set->vertices[i]);
      out += "\"/>\n";
    } else if (set->tag == FTSetTag::Segment) {
      out += "  <line id=\"ft_set\" x1=\"" + fr.x(set->vertices[0]) + "\" y1=\"" + fr.y(set->vertices[0]) +
             "\" x2=\"" + fr.x(set->vertices[1]) + "\" y2=\"" + fr.y(set->vertices[1]) +
             "\" stroke=\"#e07030\" stroke-width=\"4\"/>\n";
    } else {
      out += "  <circle id=\"ft_set\" cx=\"" + fr.x(set->vertices[0]) + "\" cy=\"" + fr.y(set->vertices[0]) +
             "\" r=\"7\" fill=\"none\" stroke=\"#e07030\" stroke-width=\"3\"/>\n";
    }
  }

  for (std::size_t i = 0; i < instance.sites.size(); ++i) {
    const Vector& s = instance.sites[i];
    out += "  <circle class=\"site\" cx=\"" + fr.x(s) + "\" cy=\"" + fr.y(s) + "\" r=\"3\" fill=\"black\"/>\n";
    out += "  <text x=\"" + num(kMargin + (s(0) - fr.x0) * fr.scale + 5) + "\" y=\"" +
           num(kMargin + (fr.y1 - s(1)) * fr.scale - 5) + "\" font-size=\"12\" font-family=\"sans-serif\">x" +
           std::to_string(i + 1) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string vertex_dump(const Instance& instance, const FTSet* set) {
  if (instance.ball.dim() > 3) throw Error(ErrorCode::WrongDimension, "vertex dumps cover d <= 3");
  auto line = [](const Vector& p) {
    std::string s = "v";
    for (int k = 0; k < 3; ++k) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.12g", k < p.size() ? (p(k) == 0.0 ? 0.0 : p(k)) : 0.0);
      s += buf;
    }
    return s + "\n";
  };
  std::string out = "o ball\n";
  for (const Vector& v : instance.ball.vertices()) out += line(v);
  out += "o sites\n";
  for (const Vector& s : instance.sites) out += line(s);
  if (set) {
    const std::size_t base = instance.ball.vertices().size() + instance.sites.size() + 1;
    out += "o ft_set\n# " + std::string(to_string(set->tag)) + "\n";
    for (const Vector& v : set->vertices) out += line(v);
    if (set->tag == FTSetTag::Segment) {
      out += "l " + std::to_string(base) + " " + std::to_string(base + 1) + "\n";
    } else if (set->tag == FTSetTag::Polygon) {
      out += "f";
      for (std::size_t i = 0; i < set->vertices.size(); ++i) out += " " + std::to_string(base + i);
      out += "\n";
    }
  }
  return out;
}

}  // namespace polyft
