#include "noct/emit.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "noct/errors.hpp"
#include "noct/model_io.hpp"

namespace noct {

using nlohmann::json;

json to_json(const Polygon& p) {
  json out = json::array();
  for (const auto& v : p.vertices()) out.push_back({to_string(v.x), to_string(v.y)});
  return out;
}

json to_json(const PiecewiseLinear& f) {
  json pieces = json::array();
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    pieces.push_back({{"from", to_string(f.breakpoints[i])},
                      {"to", to_string(f.breakpoints[i + 1])},
                      {"slope", to_string(f.pieces[i].slope)},
                      {"intercept", to_string(f.pieces[i].intercept)}});
  }
  return pieces;
}

json to_json(const SurfaceModel& model, const ZariskiDecomposition& z) {
  json negative = json::object();
  json support = json::array();
  for (const auto& [i, a] : z.negative_part) negative[model.curve_label(i)] = to_string(a);
  for (std::size_t i : z.support) support.push_back(model.curve_label(i));
  return {{"positive_part", to_json(z.positive_part)}, {"negative_part", negative}, {"support", support}};
}

json to_json(const SeshadriProfile& profile) {
  json samples = json::array();
  for (const auto& s : profile.samples) {
    samples.push_back({{"t", to_string(s.t)}, {"value", to_string(s.value)}, {"regime", to_string(s.regime)}});
  }
  json out = {{"from", to_json(profile.d0)},
              {"to", to_json(profile.d1)},
              {"mode", profile.exact ? "exact" : "sampled"},
              {"domain", {to_string(profile.t_begin), to_string(profile.t_end)}},
              {"samples", samples}};
  if (profile.exact) {
    json rb = json::array(), kinks = json::array(), all = json::array();
    for (const auto& t : profile.regime_breakpoints) rb.push_back(to_string(t));
    for (const auto& t : profile.kinks) kinks.push_back(to_string(t));
    for (const auto& t : profile.breakpoints()) all.push_back(to_string(t));
    out["pieces"] = to_json(profile.formula());
    out["segments"] = to_json(profile.pieces);
    out["regime_breakpoints"] = rb;
    out["kinks"] = kinks;
    out["breakpoints"] = all;
  }
  return out;
}

std::string profile_csv(const SeshadriProfile& profile) {
  std::ostringstream os;
  os << "t,value,regime\n";
  for (const auto& s : profile.samples) os << to_string(s.t) << ',' << to_string(s.value) << ',' << csv_label(s.regime) << '\n';
  return os.str();
}

namespace {

struct Frame {
  double x0, x1, y0, y1;
  static constexpr double size = 400, margin = 40;

  double px(double x) const { return margin + (x - x0) / (x1 - x0) * size; }
  double py(double y) const { return margin + size - (y - y0) / (y1 - y0) * size; }
};

std::string svg_header(const Frame& f, const std::string& title) {
  std::ostringstream os;
  const double total = Frame::size + 2 * Frame::margin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<line x1=\"" << f.px(f.x0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(f.x1) << "\" y2=\"" << f.py(0)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(f.y0) << "\" x2=\"" << f.px(0) << "\" y2=\"" << f.py(f.y1)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << f.px(f.x1) << "\" y=\"" << f.py(0) + 15 << "\" font-size=\"12\">" << f.x1 << "</text>\n";
  os << "<text x=\"" << f.px(0) - 30 << "\" y=\"" << f.py(f.y1) << "\" font-size=\"12\">" << f.y1 << "</text>\n";
  return os.str();
}

Frame frame_for(double xmin, double xmax, double ymin, double ymax) {
  xmin = std::min(xmin, 0.0);
  ymin = std::min(ymin, 0.0);
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  return {xmin, xmax, ymin, ymax};
}

}  // namespace

std::string polygon_svg(const Polygon& p, const std::string& title) {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v.x.get_d());
    xmax = std::max(xmax, v.x.get_d());
    ymin = std::min(ymin, v.y.get_d());
    ymax = std::max(ymax, v.y.get_d());
  }
  const Frame f = frame_for(xmin, xmax, ymin, ymax);
  std::ostringstream os;
  os << svg_header(f, title) << "<polygon fill=\"#9ecae1\" stroke=\"#08519c\" points=\"";
  for (const auto& v : p.vertices()) os << f.px(v.x.get_d()) << ',' << f.py(v.y.get_d()) << ' ';
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string profile_svg(const SeshadriProfile& profile) {
  double ymin = 0, ymax = 0;
  for (const auto& s : profile.samples) {
    ymin = std::min(ymin, s.value.get_d());
    ymax = std::max(ymax, s.value.get_d());
  }
  const Frame f = frame_for(0, 1, ymin, ymax);
  std::ostringstream os;
  os << svg_header(f, "extended Seshadri function") << "<polyline fill=\"none\" stroke=\"#a50f15\" points=\"";
  for (const auto& s : profile.samples) os << f.px(s.t.get_d()) << ',' << f.py(s.value.get_d()) << ' ';
  os << "\"/>\n</svg>\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace noct
