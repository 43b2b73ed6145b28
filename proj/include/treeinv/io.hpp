#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeinv/interdiction.hpp"
#include "treeinv/riovspt.hpp"
#include "treeinv/tree.hpp"

namespace treeinv {

// In-memory form of the JSON instance file: labels plus already-scaled
// integer values. See README for the schema.
struct InstanceDocument {
  int format_version = 1;
  Value scale = 1;
  std::string root;
  std::optional<std::string> t0;
  Value target = 0;
  std::vector<EdgeRecord> edges;
};

// Throws ParseError with line/field context on malformed input.
InstanceDocument document_from_json(const std::string& text);

Instance instance_from_document(const InstanceDocument& doc);
InstanceDocument document_from_instance(const Instance& inst);

// Canonical bytes: fixed key order, edges by ascending child label, values
// as exact decimal strings. serialize/parse round-trips bit-exactly on
// canonical documents.
std::string document_to_json(const InstanceDocument& doc);

// Convenience: text -> validated instance. Any validation failure surfaces
// as ParseError.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

std::string serialize_report(const Instance& inst, const SolveReport& report);
std::string serialize_report(const Instance& inst, const InterdictionReport& report);

// Exact decimal <-> scaled integer conversion helpers.
Value parse_scaled_decimal(const std::string& text, Value scale);
std::string format_scaled_decimal(Value value, Value scale);

}  // namespace treeinv
