#include "tbm/evidence_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace tbm::io {
namespace {

using Json = nlohmann::ordered_json;

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

}  // namespace

double round_significant(double value) {
  if (!std::isfinite(value)) return value;
  const double rounded = std::strtod(format_number(value).c_str(), nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

Frame frame_of(const EvidenceDocument& doc) { return Frame(doc.frame); }

EvidenceDocument parse_document(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed evidence file: ") + e.what());
  }
  if (!json.is_object()) throw InvalidArgument("evidence file must be a JSON object");
  for (const auto& [field, value] : json.items())
    if (field != "frame" && field != "kind" && field != "masses" && field != "values")
      throw InvalidArgument("unknown field '" + field + "' in evidence file");

  EvidenceDocument doc;
  if (!json.contains("frame") || !json["frame"].is_array()) throw InvalidArgument("evidence file needs a 'frame' array");
  for (const auto& label : json["frame"]) {
    if (!label.is_string()) throw InvalidArgument("frame labels must be strings");
    doc.frame.push_back(label.get<std::string>());
  }
  const Frame frame(doc.frame);

  if (json.contains("kind")) {
    if (!json["kind"].is_string()) throw InvalidArgument("'kind' must be a string");
    doc.kind = json["kind"].get<std::string>();
  }
  if (doc.kind != "mass") parse_value_kind(doc.kind);

  const char* field = doc.kind == "mass" ? "masses" : "values";
  const char* other = doc.kind == "mass" ? "values" : "masses";
  if (json.contains(other)) throw InvalidArgument(std::string("kind '") + doc.kind + "' uses '" + field + "', not '" + other + "'");
  if (!json.contains(field) || !json[field].is_object())
    throw InvalidArgument(std::string("evidence file needs a '") + field + "' object");

  std::map<std::uint32_t, double> by_subset;
  for (const auto& [key, value] : json[field].items()) {
    if (!value.is_number()) throw InvalidArgument("value for '" + key + "' is not a number");
    const Subset s = frame.parse_key(key);
    if (!by_subset.emplace(s.bits(), value.get<double>()).second)
      throw InvalidArgument("subset '" + frame.key(s) + "' listed twice");
  }
  if (doc.kind != "mass" && by_subset.size() != frame.subset_count())
    throw InvalidArgument("a '" + doc.kind + "' document must list all " + std::to_string(frame.subset_count()) +
                          " subsets");
  for (const auto& [bits, value] : by_subset) doc.values.emplace_back(frame.key(Subset(bits)), value);
  return doc;
}

std::string print_document(const EvidenceDocument& doc) {
  Json json;
  json["frame"] = doc.frame;
  json["kind"] = doc.kind;
  Json values = Json::object();
  for (const auto& [key, value] : doc.values) values[key] = round_significant(value);
  json[doc.kind == "mass" ? "masses" : "values"] = std::move(values);
  return json.dump(2) + "\n";
}

EvidenceDocument document_from(const MassFunction& m) {
  EvidenceDocument doc{m.frame().labels(), "mass", {}};
  for (std::uint32_t a = 0; a < m.frame().subset_count(); ++a) {
    const double v = round_significant(m.values()(a));
    if (v != 0.0) doc.values.emplace_back(m.frame().key(Subset(a)), v);
  }
  return doc;
}

EvidenceDocument document_from(const ValueFunction& v) {
  EvidenceDocument doc{v.frame.labels(), std::string(to_string(v.kind)), {}};
  for (std::uint32_t a = 0; a < v.frame.subset_count(); ++a)
    doc.values.emplace_back(v.frame.key(Subset(a)), round_significant(v.values(a)));
  return doc;
}

MassFunction mass_from_document(const EvidenceDocument& doc, double tol) {
  const Frame frame = frame_of(doc);
  Vector values = Vector::Zero(frame.subset_count());
  for (const auto& [key, value] : doc.values) values(frame.parse_key(key).bits()) = value;
  if (doc.kind == "mass") return MassFunction(frame, std::move(values), tol);
  return mass_from(ValueFunction(frame, parse_value_kind(doc.kind), std::move(values)), tol);
}

std::string print_matrix(const Frame& frame, const Matrix& m, std::string_view kind) {
  std::string out = "# tbm matrix\n# kind: ";
  out += kind;
  out += "\n# frame:";
  for (const auto& label : frame.labels()) out += " " + label;
  out += "\n# index: bit i of a row/column index is frame element i; rows are source subsets, columns targets\n";
  out += "# subsets:";
  for (std::uint32_t a = 0; a < frame.subset_count(); ++a) out += " " + std::to_string(a) + ":" + display(frame, Subset(a));
  out += "\n# size: " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_number(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace tbm::io
