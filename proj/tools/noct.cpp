// noct: command line front end for the surface positivity library.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "noct/emit.hpp"
#include "noct/errors.hpp"
#include "noct/germ.hpp"
#include "noct/infinitesimal.hpp"
#include "noct/model_io.hpp"
#include "noct/polygon.hpp"
#include "noct/positivity.hpp"
#include "noct/zariski.hpp"

using nlohmann::json;
using namespace noct;

namespace {

struct Common {
  std::string model_name;
  std::string file;
  std::string point;
  std::string cls;
};

void add_model_options(CLI::App* sub, Common& c) {
  auto* m = sub->add_option("--model", c.model_name, "built-in model or NAME.json on NOCT_MODEL_PATH");
  auto* f = sub->add_option("--file", c.file, "model JSON file");
  m->excludes(f);
}

ModelFile resolve(const Common& c) {
  if (!c.file.empty()) return load_model_file(c.file);
  if (c.model_name.empty()) throw InputError("one of --model or --file is required");
  return load_model(c.model_name);
}

DivisorClass parse_class(const SurfaceModel& model, const std::string& text, const char* what = "--class") {
  if (text.empty()) throw InputError(std::string(what) + " is required");
  DivisorClass d(parse_rational_list(text));
  if (d.coords().size() != model.rank()) {
    throw InputError(std::string(what) + " has " + std::to_string(d.coords().size()) + " entries, model rank is " +
                     std::to_string(model.rank()));
  }
  return d;
}

PointedSurface pointed(const ModelFile& mf, const std::string& label) {
  if (label.empty()) {
    if (mf.points.size() == 1) return PointedSurface(mf.model, mf.points.front());
    throw InputError("--point is required for model " + mf.model.name);
  }
  return PointedSurface(mf.model, mf.point(label));
}

// "curve=E2" or "curve=1,0,0" (a class); incidence "E1=0,E3=0".
FlagSpec parse_flag(const SurfaceModel& model, const std::string& flag, const std::string& incidence) {
  std::string spec = flag;
  if (spec.rfind("curve=", 0) == 0) spec = spec.substr(6);
  if (spec.empty()) throw InputError("--flag needs a curve");
  std::vector<int> inc(model.negative_curves.size(), 0);
  std::stringstream ss(incidence);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad incidence entry '" + item + "', expected LABEL=N");
    auto idx = model.find_curve(item.substr(0, eq));
    if (!idx) throw InputError("unknown curve '" + item.substr(0, eq) + "' in --incidence");
    try {
      inc[*idx] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("bad incidence value in '" + item + "'");
    }
  }
  if (auto idx = model.find_curve(spec)) return FlagSpec::on_negative_curve(model, *idx, inc);
  return FlagSpec::on_class(model, parse_class(model, spec, "--flag"), inc);
}

json samples_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noct: Okounkov polygons, Zariski decompositions and Seshadri functions on surfaces"};
  app.require_subcommand(1);
  app.footer("Models: built-ins p2, hirzebruch:N, blp-p2, example5; NOCT_MODEL_PATH adds directories of NAME.json.\n"
             "Exit codes: 0 ok, 2 input, 3 io, 4 domain precondition, 1 internal.");

  Common c;
  std::string flag, incidence, svg, csv, z, from, to, samples, germ, coords, criterion;
  bool exact = false;
  int k = 0, n = 2, d = 1, m = 1;

  auto with_class = [&](CLI::App* s) {
    add_model_options(s, c);
    s->add_option("--class", c.cls, "divisor class, comma separated rationals")->required();
  };
  auto with_point = [&](CLI::App* s) {
    s->add_option("--point", c.point, "named point of the model");
    s->add_option("--z", z, "flag point on the exceptional curve (default: profile default)");
  };

  auto* validate = app.add_subcommand("validate", "validate a model and print the report");
  add_model_options(validate, c);
  auto* model_cmd = app.add_subcommand("model", "print the canonical JSON form of a model");
  add_model_options(model_cmd, c);
  auto* classify_cmd = app.add_subcommand("classify", "ample / nef / big / pseudoeffective classification");
  with_class(classify_cmd);
  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition P + N");
  with_class(zariski);
  auto* mu_cmd = app.add_subcommand("mu", "sup{t : D - tC big}");
  with_class(mu_cmd);
  mu_cmd->add_option("--flag", flag, "curve=LABEL or curve=CLASS")->required();
  auto* polygon = app.add_subcommand("polygon", "Newton-Okounkov polygon for a flag (C, z)");
  with_class(polygon);
  polygon->add_option("--flag", flag, "curve=LABEL or curve=CLASS")->required();
  polygon->add_option("--incidence", incidence, "local intersections at z, e.g. E1=0,E3=1");
  polygon->add_option("--svg", svg, "write an SVG rendering");
  auto* inf_body = app.add_subcommand("inf-body", "infinitesimal Newton-Okounkov polygon at a point");
  with_class(inf_body);
  with_point(inf_body);
  inf_body->add_option("--svg", svg, "write an SVG rendering");
  auto* xi_cmd = app.add_subcommand("xi", "largest inverted simplex constant");
  with_class(xi_cmd);
  with_point(xi_cmd);
  auto* check = app.add_subcommand("check", "nef threshold or origin membership check");
  with_class(check);
  with_point(check);
  check->add_option("--criterion", criterion, "nef | origin")->required()->check(CLI::IsMember({"nef", "origin"}));
  auto* seshadri = app.add_subcommand("seshadri", "extended Seshadri function at a class");
  with_class(seshadri);
  with_point(seshadri);
  auto* profile = app.add_subcommand("seshadri-profile", "extended Seshadri function along a segment");
  add_model_options(profile, c);
  profile->add_option("--point", c.point, "named point of the model");
  profile->add_option("--from", from, "start class")->required();
  profile->add_option("--to", to, "end class")->required();
  auto* ex = profile->add_flag("--exact", exact, "exact piecewise-linear formula");
  auto* sm = profile->add_option("--samples", samples, "comma separated parameters t in [0,1]");
  ex->excludes(sm);
  profile->add_option("--csv", csv, "write samples as CSV");
  profile->add_option("--svg", svg, "write an SVG rendering");
  auto* jets = app.add_subcommand("jets", "one-sided k-jet separation certificate for K + D");
  with_class(jets);
  with_point(jets);
  jets->add_option("--k", k, "jet order")->required();
  auto* base_locus = app.add_subcommand("base-locus", "restricted/augmented base locus membership of the point");
  with_class(base_locus);
  with_point(base_locus);
  auto* valuate = app.add_subcommand("valuate", "valuation vector of a germ along the infinitesimal flag");
  valuate->add_option("--n", n, "number of local coordinates")->required();
  valuate->add_option("--germ", germ, "polynomial in u1..un")->required();
  valuate->add_option("--coords", coords, "row-major n*n matrix A, the flag is taken in coordinates A u");
  auto* oracle = app.add_subcommand("oracle", "monomial oracle body on P^n");
  oracle->add_option("--n", n, "dimension")->required();
  oracle->add_option("--d", d, "degree")->required();
  oracle->add_option("--m", m, "multiple")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  json out;
  std::vector<std::string> artifacts;
  try {
    if (validate->parsed()) {
      auto mf = resolve(c);
      const SurfaceModel& model = mf.model;
      auto report = validate_model(model);
      out["valid"] = report.ok();
      out["report"] = report.summary();
    } else if (model_cmd->parsed()) {
      out = to_json(resolve(c));
      std::cout << out.dump(2) << '\n';
      return 0;
    } else if (classify_cmd->parsed()) {
      auto mf = resolve(c);
      out["class"] = to_json(parse_class(mf.model, c.cls));
      out["positivity"] = to_string(classify(mf.model, parse_class(mf.model, c.cls)));
    } else if (zariski->parsed()) {
      auto mf = resolve(c);
      auto cls = parse_class(mf.model, c.cls);
      out = to_json(mf.model, zariski_decompose(mf.model, cls));
      out["volume"] = to_string(volume(mf.model, cls));
    } else if (mu_cmd->parsed()) {
      auto mf = resolve(c);
      auto f = parse_flag(mf.model, flag, "");
      out["mu"] = to_string(mu(mf.model, parse_class(mf.model, c.cls), f.curve));
    } else if (polygon->parsed()) {
      auto mf = resolve(c);
      auto f = parse_flag(mf.model, flag, incidence);
      auto p = okounkov_polygon(mf.model, parse_class(mf.model, c.cls), f);
      out["vertices"] = to_json(p);
      out["area"] = to_string(p.area());
      if (!svg.empty()) {
        write_text_file(svg, polygon_svg(p, "Newton-Okounkov polygon"));
        artifacts.push_back(svg);
      }
    } else if (inf_body->parsed() || xi_cmd->parsed()) {
      auto mf = resolve(c);
      auto ps = pointed(mf, c.point);
      auto r = xi_constant(ps, parse_class(mf.model, c.cls), z);
      out["xi"] = to_string(r.xi);
      out["body"] = to_json(r.body);
      out["flag"] = r.witness_flag;
      if (!svg.empty()) {
        write_text_file(svg, polygon_svg(r.body, "infinitesimal Newton-Okounkov polygon"));
        artifacts.push_back(svg);
      }
    } else if (check->parsed()) {
      auto mf = resolve(c);
      auto ps = pointed(mf, c.point);
      auto cls = parse_class(mf.model, c.cls);
      if (criterion == "origin") {
        out["origin_in_body"] = check_origin(ps, cls, z);
      } else {
        ps.require_cones();
        auto pulled = pullback(cls);
        auto val = seshadri_via_nef_cone(ps.blowup(), pulled, ps.exceptional());
        out["nef_threshold"] = to_string(val);
        out["xi"] = to_string(moving_seshadri(ps, cls));
      }
    } else if (seshadri->parsed()) {
      auto mf = resolve(c);
      auto ps = pointed(mf, c.point);
      auto s = evaluate_extended(ps, parse_class(mf.model, c.cls));
      out["value"] = to_string(s.value);
      out["regime"] = to_string(s.regime);
    } else if (profile->parsed()) {
      auto mf = resolve(c);
      auto ps = pointed(mf, c.point);
      std::vector<Rational> ts;
      if (!samples.empty()) ts = parse_rational_list(samples);
      if (!exact && ts.empty()) throw InputError("give --exact or --samples");
      auto prof = seshadri_profile(ps, parse_class(mf.model, from, "--from"), parse_class(mf.model, to, "--to"), exact, ts);
      out = to_json(prof);
      if (!csv.empty()) {
        write_text_file(csv, profile_csv(prof));
        artifacts.push_back(csv);
      }
      if (!svg.empty()) {
        write_text_file(svg, profile_svg(prof));
        artifacts.push_back(svg);
      }
    } else if (jets->parsed()) {
      auto mf = resolve(c);
      auto ps = pointed(mf, c.point);
      auto cert = jets_separated(ps, parse_class(mf.model, c.cls), k);
      out["verdict"] = cert.certified ? "certified" : "no certificate";
      out["xi"] = to_string(cert.xi);
      out["threshold"] = cert.threshold;
    } else if (base_locus->parsed()) {
      auto mf = resolve(c);
      auto ps = pointed(mf, c.point);
      auto v = base_locus_membership(ps, parse_class(mf.model, c.cls));
      out["verdict"] = to_string(v.verdict);
      out["xi"] = to_string(v.xi);
      out["asymptotic_mult"] = to_string(v.asymptotic_mult);
    } else if (valuate->parsed()) {
      if (n < 1) throw InputError("--n must be positive");
      auto g = parse_germ(static_cast<std::size_t>(n), germ);
      ValuationVector v;
      if (coords.empty()) {
        v = valuation_vector(g);
      } else {
        auto entries = parse_rational_list(coords);
        if (entries.size() != static_cast<std::size_t>(n * n)) throw InputError("--coords needs n*n entries");
        Matrix a(n, Vector(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) a[i][j] = entries[i * n + j];
        v = valuation_vector(g, a);
      }
      out["nu"] = v.nu;
    } else if (oracle->parsed()) {
      auto body = monomial_oracle_body(n, d, m);
      json verts = json::array();
      for (const auto& v : body.vertices) verts.push_back(samples_json(v));
      out["vertices"] = verts;
      out["sections"] = body.sections;
    }
  } catch (const Error& e) {
    std::cerr << "noct: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "noct: internal error: " << e.what() << '\n';
    return 1;
  }

  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::vector<std::string> echo(argv, argv + argc);
  json result = {{"command", echo}, {"result", out}, {"elapsed_ms", ms}};
  if (!artifacts.empty()) result["artifacts"] = artifacts;
  std::cout << result.dump(2) << '\n';
  return 0;
}
