#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gqc/channels.hpp"
#include "gqc/coherence.hpp"
#include "gqc/gaussian.hpp"

namespace gqc::io {

using nlohmann::json;

/// Malformed specification document (bad JSON, missing or mistyped fields,
/// inconsistent array shapes).
struct SpecParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State documents:
//   {"kind":"vacuum","modes":m?}            {"kind":"thermal","nbar":x}
//   {"kind":"coherent","alpha":[re,im]}     {"kind":"squeezed","r":x,"theta":t?}
//   {"kind":"displaced-squeezed-thermal","nbar":x,"r":x,"theta":t,"alpha":[re,im]}
//   {"kind":"two-mode-squeezed","r":x}
//   {"kind":"explicit","modes":m?,"V":[[...]],"d":[...]}
//   {"kind":"tensor","parts":[...]}
GaussianState parse_state(const json& doc);

// Channel documents:
//   {"kind":"loss","eta":x}                 {"kind":"amplifier","gain":G}
//   {"kind":"rotation","theta":t}
//   {"kind":"incoherent","modes":[{"t":..,"theta":..,"reflect":..,"w":..}],"perm":[...]?}
//   {"kind":"explicit","T":[[...]],"N":[[...]],"dbar":[...]}
GaussianChannel parse_channel(const json& doc);

/// Emits {"kind":"explicit",...}; re-parsing reproduces (V, d) bit-exactly.
json state_document(const GaussianState& s);

/// Thermal doc for one mode, tensor-of-thermals otherwise.
json thermal_product_document(const std::vector<double>& nbars);

json validation_document(const ValidationReport& r);
json coherence_document(const CoherenceReport& r);
json classification_document(const IncoherentClassification& c);

/// Reads a JSON document from a file path, or from stdin when the path is "-".
json load_json(const std::string& path);

}  // namespace gqc::io
