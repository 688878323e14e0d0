#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "adisc/support.hpp"

namespace adisc::io {

using Json = nlohmann::ordered_json;

// Support file schema: { "points": [["0","0"], ["1","0"], ...],
//                        "signs": [1, 1, 1, -1, -1] }
// Coordinates are rational strings ("p/q" or decimals); integer JSON numbers
// are accepted, anything with a binary fraction is rejected.
inline Rat parse_coordinate(const Json& v) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<int64_t>());
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (d == std::floor(d) && std::fabs(d) < 1e15) return Rat(static_cast<int64_t>(d));
    throw Error(Errc::ParseError,
                "non-integer numeric coordinate; write it as a rational string instead");
  }
  throw Error(Errc::ParseError, "coordinate must be a rational string or an integer");
}

inline SignedSupport parse_support(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("signs"))
    throw Error(Errc::ParseError, "support JSON needs \"points\" and \"signs\"");
  std::vector<QVec> points;
  for (const Json& p : j.at("points")) {
    QVec q;
    for (const Json& c : p) q.push_back(parse_coordinate(c));
    points.push_back(std::move(q));
  }
  std::vector<int> signs;
  for (const Json& s : j.at("signs")) {
    if (!s.is_number_integer()) throw Error(Errc::ParseError, "signs must be +1/-1 integers");
    signs.push_back(s.get<int>());
  }
  return make_support(std::move(points), std::move(signs));
}

inline SignedSupport parse_support_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON");
  return parse_support(j);
}

inline Json support_to_json(const SignedSupport& s) {
  Json pts = Json::array();
  for (const QVec& p : s.points) {
    Json row = Json::array();
    for (const Rat& c : p) row.push_back(c.to_string());
    pts.push_back(row);
  }
  Json j;
  j["points"] = pts;
  j["signs"] = s.signs;
  return j;
}

inline Json rat_json(const Rat& r) { return Json(r.to_string()); }

inline Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(r.to_string());
  return a;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace adisc::io
