#include "noct/polygon.hpp"

#include "noct/errors.hpp"

namespace noct {

FlagSpec FlagSpec::on_negative_curve(const SurfaceModel& model, std::size_t index, std::vector<int> incidence) {
  if (index >= model.negative_curves.size()) throw InputError("flag curve index out of range");
  incidence.resize(model.negative_curves.size(), 0);
  return {model.negative_curves[index], index, std::move(incidence)};
}

FlagSpec FlagSpec::on_class(const SurfaceModel& model, DivisorClass curve, std::vector<int> incidence) {
  incidence.resize(model.negative_curves.size(), 0);
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < model.negative_curves.size() && !index; ++i) {
    if (model.negative_curves[i] == curve) index = i;
  }
  return {std::move(curve), index, std::move(incidence)};
}

void validate_flag(const SurfaceModel& model, const FlagSpec& flag) {
  if (flag.curve.size() != model.rank()) throw InputError("flag curve does not match model rank");
  if (flag.curve.is_zero()) throw InputError("flag curve is zero");
  if (!is_pseudoeffective(model, flag.curve)) {
    throw InputError("flag curve " + to_string(flag.curve) + " is not in the effective cone");
  }
  if (flag.incidence.size() != model.negative_curves.size()) {
    throw InputError("flag incidence needs one entry per negative curve");
  }
  for (std::size_t i = 0; i < model.negative_curves.size(); ++i) {
    if (flag.curve_index && *flag.curve_index == i) continue;
    const int m = flag.incidence[i];
    if (m < 0) throw InputError("negative incidence for " + model.curve_label(i));
    if (m > 0 && Rational(m) > intersection(model, model.negative_curves[i], flag.curve)) {
      throw InputError("incidence of " + model.curve_label(i) + " at the flag point exceeds its intersection number");
    }
  }
}

OkounkovData okounkov_data(const SurfaceModel& model, const DivisorClass& d, const FlagSpec& flag) {
  validate_flag(model, flag);
  const auto z = zariski_decompose(model, d);
  if (intersection(model, z.positive_part, z.positive_part) <= 0) {
    throw DomainError("class " + to_string(d) + " is not big");
  }
  const Rational start = flag.curve_index ? z.coefficient(*flag.curve_index) : Rational(0);
  const Rational end = mu(model, d, flag.curve);
  const DivisorClass direction = -flag.curve;

  OkounkovData out;
  out.chambers = walk_chambers(model, d, direction, start, end);

  auto lower_at = [&](const ZariskiChamber& ch, const Rational& t) {
    Rational alpha = 0;
    for (std::size_t i : ch.support) {
      if (flag.curve_index && *flag.curve_index == i) continue;
      alpha += ch.coefficient(i, t) * flag.incidence[i];
    }
    return alpha;
  };
  auto width_at = [&](const ZariskiChamber& ch, const Rational& t) {
    return intersection(model, chamber_positive_part(model, ch, d, direction, t), flag.curve);
  };

  std::vector<Point2> points;
  out.lower.breakpoints.push_back(start);
  out.upper.breakpoints.push_back(start);
  for (const auto& ch : out.chambers) {
    const Rational a0 = lower_at(ch, ch.begin), a1 = lower_at(ch, ch.end);
    const Rational b0 = a0 + width_at(ch, ch.begin), b1 = a1 + width_at(ch, ch.end);
    points.push_back({ch.begin, a0});
    points.push_back({ch.begin, b0});
    points.push_back({ch.end, a1});
    points.push_back({ch.end, b1});
    out.lower.breakpoints.push_back(ch.end);
    out.upper.breakpoints.push_back(ch.end);
    out.lower.pieces.push_back(AffinePiece::through(ch.begin, a0, ch.end, a1));
    out.upper.pieces.push_back(AffinePiece::through(ch.begin, b0, ch.end, b1));
  }
  out.polygon = Polygon::hull(std::move(points));
  return out;
}

Polygon okounkov_polygon(const SurfaceModel& model, const DivisorClass& d, const FlagSpec& flag) {
  return okounkov_data(model, d, flag).polygon;
}

Polygon slice_at(const SurfaceModel& model, const DivisorClass& d, const FlagSpec& flag, const Rational& t) {
  if (t < 0) throw DomainError("slice_at: t must be nonnegative");
  validate_flag(model, flag);
  if (t >= mu(model, d, flag.curve)) throw DomainError("slice_at: t = " + to_string(t) + " is not below mu");
  return okounkov_polygon(model, d - t * flag.curve, flag).translated(t, 0);
}

}  // namespace noct
