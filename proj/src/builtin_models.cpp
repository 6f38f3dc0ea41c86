#include <cstdlib>

#include "noct/errors.hpp"
#include "noct/model_io.hpp"

namespace noct {

namespace {

DivisorClass cls(std::initializer_list<int> c) {
  Vector v;
  for (int x : c) v.emplace_back(x);
  return DivisorClass(std::move(v));
}

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) v.emplace_back(x);
    m.push_back(std::move(v));
  }
  return m;
}

ModelFile p2() {
  ModelFile f;
  auto& m = f.model;
  m.name = "p2";
  m.basis_labels = {"H"};
  m.intersection_matrix = mat({{1}});
  m.effective_generators = {cls({1})};
  m.nef_generators = {cls({1})};
  m.canonical_class = cls({-3});

  // Bl_x P^2 with basis (H, E).
  PointProfile x;
  x.label = "generic";
  x.flag_incidence = {0};
  x.cones = BlowupCones{{}, {}, {cls({0, 1}), cls({1, -1})}, {cls({1, 0}), cls({1, -1})}, {}};
  f.points.push_back(std::move(x));
  return f;
}

ModelFile blp_p2() {
  ModelFile f;
  auto& m = f.model;
  m.name = "blp-p2";
  m.basis_labels = {"H", "E"};
  m.intersection_matrix = mat({{1, 0}, {0, -1}});
  m.negative_curves = {cls({0, 1})};
  m.negative_curve_labels = {"E"};
  m.effective_generators = {cls({0, 1}), cls({1, -1})};
  m.nef_generators = {cls({1, 0}), cls({1, -1})};
  m.canonical_class = cls({-3, 1});

  // x on E. The blow-up has basis (H, E, E2) and exactly three negative
  // curves E1 = E - E2, E2 and E3 = H - E - E2 (strict transform of the line
  // through p in the direction x).
  PointProfile on_e;
  on_e.label = "on-E";
  on_e.multiplicities = {1};
  on_e.flag_incidence = {0, 0, 0};
  on_e.alternate_incidences = {{"on-E1", {1, 0, 0}}, {"on-E3", {0, 0, 1}}};
  on_e.cones = BlowupCones{{cls({1, -1, -1})},
                           {"E3"},
                           {cls({0, 1, -1}), cls({0, 0, 1}), cls({1, -1, -1})},
                           {cls({1, 0, 0}), cls({2, -1, -1}), cls({1, -1, 0})},
                           {"E1", "E2", "E3"}};
  f.points.push_back(std::move(on_e));

  // x off E: the blow-up is P^2 blown up at two points.
  PointProfile generic;
  generic.label = "generic";
  generic.multiplicities = {0};
  generic.flag_incidence = {0, 0, 0};
  generic.alternate_incidences = {{"on-L", {0, 0, 1}}};
  generic.cones = BlowupCones{{cls({1, -1, -1})},
                              {"L"},
                              {cls({0, 1, 0}), cls({0, 0, 1}), cls({1, -1, -1})},
                              {cls({1, 0, 0}), cls({1, -1, 0}), cls({1, 0, -1})},
                              {"E", "E2", "L"}};
  f.points.push_back(std::move(generic));
  return f;
}

ModelFile example5() {
  ModelFile f;
  auto& m = f.model;
  m.name = "example5";
  m.basis_labels = {"E1", "E2", "E3"};
  m.intersection_matrix = mat({{-2, 1, 0}, {1, -1, 1}, {0, 1, -1}});
  m.negative_curves = {cls({1, 0, 0}), cls({0, 1, 0}), cls({0, 0, 1})};
  m.negative_curve_labels = {"E1", "E2", "E3"};
  m.effective_generators = m.negative_curves;
  // H' = E1 + 2 E2 + E3, H' + E3, E2 + E3
  m.nef_generators = {cls({1, 2, 1}), cls({1, 2, 2}), cls({0, 1, 1})};
  // pi^* K + E2 with K = -3H + E on Bl_p P^2
  m.canonical_class = cls({-2, -4, -3});
  return f;
}

ModelFile hirzebruch(int n) {
  if (n < 0) throw InputError("hirzebruch surface index must be nonnegative");
  ModelFile f;
  auto& m = f.model;
  m.name = "hirzebruch:" + std::to_string(n);
  m.basis_labels = {"C0", "F"};
  m.intersection_matrix = mat({{-n, 1}, {1, 0}});
  if (n > 0) {
    m.negative_curves = {cls({1, 0})};
    m.negative_curve_labels = {"C0"};
  }
  m.effective_generators = {cls({1, 0}), cls({0, 1})};
  m.nef_generators = {cls({0, 1}), cls({1, n})};
  m.canonical_class = cls({-2, -(n + 2)});

  // x off C0; blow-up basis (C0, F, E). The fibre through x becomes F - E.
  PointProfile x;
  x.label = "generic";
  if (n > 0) {
    x.multiplicities = {0};
    x.flag_incidence = {0, 0, 0};
    x.cones = BlowupCones{{cls({0, 1, -1})},
                          {"F~"},
                          {cls({1, 0, 0}), cls({0, 0, 1}), cls({0, 1, -1})},
                          {cls({0, 1, 0}), cls({1, n, 0}), cls({1, n, -1})},
                          {"C0", "E", "F~"}};
    x.alternate_incidences = {{"on-F~", {0, 0, 1}}};
  } else {
    // P^1 x P^1: both rulings through x become (-1)-curves.
    x.flag_incidence = {0, 0, 0};
    x.cones = BlowupCones{{cls({0, 1, -1}), cls({1, 0, -1})},
                          {"F~", "C0~"},
                          {cls({0, 0, 1}), cls({0, 1, -1}), cls({1, 0, -1})},
                          {cls({1, 0, 0}), cls({0, 1, 0}), cls({1, 1, -1})},
                          {"E", "F~", "C0~"}};
    x.alternate_incidences = {{"on-F~", {0, 1, 0}}};
  }
  f.points.push_back(std::move(x));
  return f;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"p2", "hirzebruch:n", "blp-p2", "example5"}; }

ModelFile builtin_model(const std::string& name) {
  if (name == "p2") return p2();
  if (name == "blp-p2") return blp_p2();
  if (name == "example5") return example5();
  const std::string prefix = "hirzebruch:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string arg = name.substr(prefix.size());
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad hirzebruch index in '" + name + "'");
    }
    return hirzebruch(std::stoi(arg));
  }
  throw InputError("unknown built-in model '" + name + "'");
}

}  // namespace noct
