#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "noct/convex.hpp"
#include "noct/positivity.hpp"
#include "noct/zariski.hpp"

namespace noct {

nlohmann::json to_json(const Polygon& p);
nlohmann::json to_json(const PiecewiseLinear& f);
nlohmann::json to_json(const SurfaceModel& model, const ZariskiDecomposition& z);
nlohmann::json to_json(const SeshadriProfile& profile);

/// Columns t,value,regime; one row per sample.
std::string profile_csv(const SeshadriProfile& profile);

/// Floats appear only here, converted at render time.
std::string polygon_svg(const Polygon& p, const std::string& title);
std::string profile_svg(const SeshadriProfile& profile);

/// Throws IoError when the path cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace noct
