#include "cayley/report.hpp"

#include <fstream>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

namespace {

std::string require_string(const Json& j, const std::string& field) {
  if (!j.contains(field))
    fail(Errc::invalid_algebra, "missing field '" + field + "'");
  if (!j.at(field).is_string())
    fail(Errc::invalid_algebra, "field '" + field + "' must be a string");
  return j.at(field).get<std::string>();
}

RingElem parse_param(const RingSpec& ring, const std::string& text, const std::string& field) {
  try {
    return RingElem::parse(ring, text);
  } catch (const Error& e) {
    fail(Errc::invalid_algebra, "field '" + field + "': " + e.what());
  }
}

}  // namespace

AlgebraFile AlgebraFile::parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "algebra description is not valid JSON");
  if (!j.is_object()) fail(Errc::invalid_algebra, "algebra description must be a JSON object");
  AlgebraFile f;
  f.ring = require_string(j, "ring");
  f.kind = require_string(j, "kind");
  if (f.kind == "m2" || f.kind == "zorn") {
    // no parameters
  } else if (f.kind == "quaternion") {
    f.a = require_string(j, "a");
    f.b = require_string(j, "b");
  } else if (f.kind == "doubled") {
    f.lambda = require_string(j, "lambda");
    if (!j.contains("base") || !j.at("base").is_object())
      fail(Errc::invalid_algebra, "field 'base' must be an object");
    const Json& base = j.at("base");
    f.base_kind = require_string(base, "kind");
    if (f.base_kind == "quaternion") {
      f.base_a = require_string(base, "a");
      f.base_b = require_string(base, "b");
    } else if (f.base_kind != "m2") {
      fail(Errc::invalid_algebra, "field 'base.kind': expected m2 or quaternion, got '" +
                                      f.base_kind + "'");
    }
  } else {
    fail(Errc::invalid_algebra,
         "field 'kind': expected m2, quaternion, zorn or doubled, got '" + f.kind + "'");
  }
  return f;
}

AlgebraFile AlgebraFile::from_algebra(const AlgebraSpec& spec) {
  AlgebraFile f;
  f.ring = spec.ring().str();
  switch (spec.kind()) {
    case AlgKind::m2:
      f.kind = "m2";
      break;
    case AlgKind::zorn:
      f.kind = "zorn";
      break;
    case AlgKind::quaternion:
      f.kind = "quaternion";
      f.a = spec.param_a().str();
      f.b = spec.param_b().str();
      break;
    case AlgKind::doubled:
      f.kind = "doubled";
      f.lambda = spec.lambda().str();
      if (spec.base()->kind() == AlgKind::m2) {
        f.base_kind = "m2";
      } else {
        f.base_kind = "quaternion";
        f.base_a = spec.base()->param_a().str();
        f.base_b = spec.base()->param_b().str();
      }
      break;
  }
  return f;
}

AlgebraFile AlgebraFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string AlgebraFile::serialize() const {
  Json j;
  j["ring"] = ring;
  j["kind"] = kind;
  if (kind == "quaternion") {
    j["a"] = a;
    j["b"] = b;
  } else if (kind == "doubled") {
    Json base;
    base["kind"] = base_kind;
    if (base_kind == "quaternion") {
      base["a"] = base_a;
      base["b"] = base_b;
    }
    j["base"] = base;
    j["lambda"] = lambda;
  }
  return j.dump();
}

AlgebraRef AlgebraFile::to_algebra() const {
  RingSpec R = [&] {
    try {
      return RingSpec::parse(ring);
    } catch (const Error& e) {
      fail(Errc::invalid_algebra, "field 'ring': " + std::string(e.what()));
    }
  }();
  if (kind == "m2") return AlgebraSpec::m2(R);
  if (kind == "zorn") return AlgebraSpec::zorn(R);
  if (kind == "quaternion")
    return AlgebraSpec::quaternion(R, parse_param(R, a, "a"), parse_param(R, b, "b"));
  if (kind == "doubled") {
    AlgebraRef base = base_kind == "m2"
                          ? AlgebraSpec::m2(R)
                          : AlgebraSpec::quaternion(R, parse_param(R, base_a, "base.a"),
                                                    parse_param(R, base_b, "base.b"));
    return AlgebraSpec::doubled(base, parse_param(R, lambda, "lambda"));
  }
  fail(Errc::invalid_algebra, "field 'kind': unknown kind '" + kind + "'");
}

Json Report::to_json() const {
  Json j;
  j["claim"] = claim;
  j["ring"] = ring;
  j["algebra"] = algebra;
  j["verdict"] = verdict;
  j["reason"] = reason;
  j["witness"] = witness.is_null() ? Json(nullptr) : witness;
  j["data"] = data.is_null() ? Json::object() : data;
  Json counts;
  counts["scanned"] = scanned;
  counts["time_ms"] = time_ms;
  j["counts"] = counts;
  return j;
}

std::string Report::human_row() const {
  std::ostringstream out;
  out << claim << "  [" << algebra << "]  " << verdict;
  if (!reason.empty()) out << "  (" << reason << ")";
  out << "  scanned=" << scanned << "  time=" << time_ms << "ms";
  return out.str();
}

std::string reports_to_json(const std::vector<Report>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr.dump(2) + "\n";
}

int exit_code(const std::vector<Report>& reports, bool strict) {
  for (const auto& r : reports)
    if (r.verdict == "fail" || (strict && r.verdict == "skipped")) return 1;
  return 0;
}

}  // namespace cayley
