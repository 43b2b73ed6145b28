#include "treeinv/io.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace treeinv {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

std::string line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

int decimal_digits(Value scale) {
  int digits = 0;
  for (Value s = scale; s > 1; s /= 10) ++digits;
  return digits;
}

Value value_field(const json& j, const std::string& where, Value scale) {
  if (j.is_number_integer()) {
    const std::int64_t raw = j.get<std::int64_t>();
    if (raw > kValueLimit / scale || raw < -(kValueLimit / scale)) {
      fail(where, "value exceeds the magnitude limit");
    }
    return raw * scale;
  }
  if (j.is_string()) {
    try {
      return parse_scaled_decimal(j.get<std::string>(), scale);
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a decimal string");
}

std::string string_field(const json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>().empty()) {
    fail(where, "expected a non-empty string");
  }
  return j.get<std::string>();
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known |= item.key() == key;
    if (!known) fail(where, "unknown key '" + item.key() + "'");
  }
}

}  // namespace

Value parse_scaled_decimal(const std::string& text, Value scale) {
  const int max_frac = decimal_digits(scale);
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t int_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == int_begin) throw ParseError("'" + text + "' is not a decimal number");
  const std::string int_part = text.substr(int_begin, i - int_begin);

  std::string frac_part;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == frac_begin) throw ParseError("'" + text + "' is not a decimal number");
    frac_part = text.substr(frac_begin, i - frac_begin);
  }
  if (i != text.size()) throw ParseError("'" + text + "' is not a decimal number");
  if (static_cast<int>(frac_part.size()) > max_frac) {
    throw ParseError("'" + text + "' has more decimals than scale " + std::to_string(scale) +
                     " allows");
  }
  if (int_part.size() > 18) throw ParseError("'" + text + "' exceeds the magnitude limit");

  Value result = 0;
  for (char ch : int_part) result = result * 10 + (ch - '0');
  if (result > kValueLimit / scale) throw ParseError("'" + text + "' exceeds the magnitude limit");
  result *= scale;
  Value frac = 0;
  for (char ch : frac_part) frac = frac * 10 + (ch - '0');
  for (int d = static_cast<int>(frac_part.size()); d < max_frac; ++d) frac *= 10;
  result += frac;
  if (result > kValueLimit) throw ParseError("'" + text + "' exceeds the magnitude limit");
  return negative ? -result : result;
}

std::string format_scaled_decimal(Value value, Value scale) {
  const bool negative = value < 0;
  const std::uint64_t magnitude =
      negative ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  const std::uint64_t uscale = static_cast<std::uint64_t>(scale);
  std::string out = negative ? "-" : "";
  out += std::to_string(magnitude / uscale);
  std::uint64_t frac = magnitude % uscale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), static_cast<std::size_t>(decimal_digits(scale)) - digits.size(),
                  '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

InstanceDocument document_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON at " + line_and_column(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  reject_unknown_keys(j, "document", {"format_version", "scale", "root", "t0", "D", "edges"});
  for (const char* key : {"format_version", "scale", "root", "D", "edges"}) {
    if (!j.contains(key)) fail("document", std::string("missing key '") + key + "'");
  }

  InstanceDocument doc;
  if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != 1) {
    fail("format_version", "only version 1 is supported");
  }
  if (!j["scale"].is_number_integer()) fail("scale", "expected an integer power of ten");
  doc.scale = j["scale"].get<Value>();
  bool scale_ok = doc.scale >= 1 && doc.scale <= 1'000'000'000;
  for (Value s = doc.scale; scale_ok && s > 1; s /= 10) {
    if (s % 10 != 0) scale_ok = false;
  }
  if (!scale_ok) fail("scale", "expected an integer power of ten in [1, 10^9]");

  doc.root = string_field(j["root"], "root");
  if (j.contains("t0") && !j["t0"].is_null()) {
    doc.t0 = string_field(j["t0"], "t0");
  }
  doc.target = value_field(j["D"], "D", doc.scale);

  if (!j["edges"].is_array() || j["edges"].empty()) {
    fail("edges", "expected a non-empty array");
  }
  int index = 0;
  for (const json& ej : j["edges"]) {
    const std::string where = "edges[" + std::to_string(index) + "]";
    if (!ej.is_object()) fail(where, "expected an object");
    reject_unknown_keys(ej, where, {"parent", "child", "w", "l", "u", "c"});
    for (const char* key : {"parent", "child", "w", "l", "u", "c"}) {
      if (!ej.contains(key)) fail(where, std::string("missing key '") + key + "'");
    }
    EdgeRecord r;
    r.parent = string_field(ej["parent"], where + ".parent");
    r.child = string_field(ej["child"], where + ".child");
    r.w = value_field(ej["w"], where + ".w", doc.scale);
    r.l = value_field(ej["l"], where + ".l", doc.scale);
    r.u = value_field(ej["u"], where + ".u", doc.scale);
    r.c = value_field(ej["c"], where + ".c", doc.scale);
    doc.edges.push_back(std::move(r));
    ++index;
  }
  return doc;
}

Instance instance_from_document(const InstanceDocument& doc) {
  return build_instance(doc.edges, doc.root, doc.t0, doc.target, doc.scale);
}

InstanceDocument document_from_instance(const Instance& inst) {
  InstanceDocument doc;
  doc.scale = inst.scale;
  doc.root = inst.labels[inst.tree.root];
  if (inst.t0.has_value()) doc.t0 = inst.labels[*inst.t0];
  doc.target = inst.target;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    NodeId child = inst.tree.edge_child[e];
    const EdgeAttributes& a = inst.attrs[e];
    doc.edges.push_back(EdgeRecord{inst.labels[inst.tree.parent[child]], inst.labels[child], a.w,
                                   a.l, a.u, a.c});
  }
  return doc;
}

std::string document_to_json(const InstanceDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["scale"] = doc.scale;
  j["root"] = doc.root;
  if (doc.t0.has_value()) j["t0"] = *doc.t0;
  j["D"] = format_scaled_decimal(doc.target, doc.scale);
  j["edges"] = json::array();
  for (const EdgeRecord& r : doc.edges) {
    json ej;
    ej["parent"] = r.parent;
    ej["child"] = r.child;
    ej["w"] = format_scaled_decimal(r.w, doc.scale);
    ej["l"] = format_scaled_decimal(r.l, doc.scale);
    ej["u"] = format_scaled_decimal(r.u, doc.scale);
    ej["c"] = format_scaled_decimal(r.c, doc.scale);
    j["edges"].push_back(std::move(ej));
  }
  return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  InstanceDocument doc = document_from_json(text);
  try {
    return instance_from_document(doc);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  return document_to_json(document_from_instance(inst));
}

namespace {

json report_common(const Instance& inst, SolveStatus status, Value objective, int iterations,
                   const std::vector<ChangedEdge>& changed,
                   const std::optional<WeightAssignment>& assignment) {
  json j;
  j["status"] = to_string(status);
  if (status != SolveStatus::Infeasible) {
    j["objective"] = format_scaled_decimal(objective, inst.scale);
  }
  j["iterations"] = iterations;
  if (assignment.has_value()) {
    j["changed_edges"] = json::array();
    for (const ChangedEdge& ce : changed) {
      json cj;
      cj["edge"] = inst.labels[inst.tree.edge_child[ce.edge]];
      cj["old"] = format_scaled_decimal(ce.old_weight, inst.scale);
      cj["new"] = format_scaled_decimal(ce.new_weight, inst.scale);
      j["changed_edges"].push_back(std::move(cj));
    }
    json aj;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      aj[inst.labels[inst.tree.edge_child[e]]] =
          format_scaled_decimal(assignment->weights[e], inst.scale);
    }
    j["assignment"] = std::move(aj);
  }
  return j;
}

}  // namespace

std::string serialize_report(const Instance& inst, const SolveReport& report) {
  json j = report_common(inst, report.status, report.objective, report.iterations,
                         report.changed_edges, report.assignment);
  return j.dump(2) + "\n";
}

std::string serialize_report(const Instance& inst, const InterdictionReport& report) {
  json j = report_common(inst, report.status, report.objective, report.iterations,
                         report.changed_edges, report.assignment);
  j["achieved_shortest"] = format_scaled_decimal(report.achieved_shortest, inst.scale);
  return j.dump(2) + "\n";
}

}  // namespace treeinv
