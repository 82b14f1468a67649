#include "gqc/io.hpp"

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gqc/states.hpp"

namespace gqc::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SpecParseError(what); }

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

double number(const json& value, const char* what) {
  if (!value.is_number()) {
    fail(std::string(what) + " must be a number");
  }
  return value.get<double>();
}

double number_field(const json& doc, const char* key) {
  return number(require(doc, key), key);
}

double number_field_or(const json& doc, const char* key, double fallback) {
  if (doc.is_object() && doc.contains(key)) {
    return number(doc.at(key), key);
  }
  return fallback;
}

std::complex<double> complex_field(const json& doc, const char* key) {
  const json& value = require(doc, key);
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number()) {
    fail(std::string(key) + " must be a [re, im] pair");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

Matrix matrix_field(const json& doc, const char* key) {
  const json& rows = require(doc, key);
  if (!rows.is_array() || rows.empty()) {
    fail(std::string(key) + " must be a non-empty array of rows");
  }
  const std::size_t n = rows.size();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      fail(std::string(key) + " must be square (row " + std::to_string(i) +
           " has wrong length)");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        fail(std::string(key) + " entries must be numbers");
      }
      out(i, j) = row[j].get<double>();
    }
  }
  return out;
}

Vector vector_field(const json& doc, const char* key) {
  const json& entries = require(doc, key);
  if (!entries.is_array() || entries.empty()) {
    fail(std::string(key) + " must be a non-empty array");
  }
  Vector out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_number()) {
      fail(std::string(key) + " entries must be numbers");
    }
    out(i) = entries[i].get<double>();
  }
  return out;
}

std::string kind_of(const json& doc) {
  const json& kind = require(doc, "kind");
  if (!kind.is_string()) {
    fail("\"kind\" must be a string");
  }
  return kind.get<std::string>();
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(v(i));
  }
  return out;
}

GaussianState parse_explicit_state(const json& doc) {
  Matrix v = matrix_field(doc, "V");
  Vector d = vector_field(doc, "d");
  if (v.rows() % 2 != 0 || d.size() != v.rows()) {
    fail("explicit state needs a 2m x 2m \"V\" and a length-2m \"d\"");
  }
  const int modes = static_cast<int>(v.rows() / 2);
  if (doc.contains("modes")) {
    const int declared = static_cast<int>(number(doc.at("modes"), "modes"));
    if (declared != modes) {
      fail("declared mode count " + std::to_string(declared) +
           " does not match a " + std::to_string(v.rows()) + "x" +
           std::to_string(v.cols()) + " covariance");
    }
  }
  if (!v.allFinite() || !d.allFinite()) {
    fail("state entries must be finite");
  }
  return GaussianState{modes, std::move(v), std::move(d)};
}

}  // namespace

GaussianState parse_state(const json& doc) {
  const std::string kind = kind_of(doc);
  if (kind == "vacuum") {
    const int modes = static_cast<int>(number_field_or(doc, "modes", 1.0));
    if (modes < 1) {
      fail("vacuum mode count must be >= 1");
    }
    return make_vacuum(modes);
  }
  if (kind == "thermal") {
    const double nbar = number_field(doc, "nbar");
    if (nbar < 0.0) {
      fail("thermal \"nbar\" must be >= 0");
    }
    return make_thermal(nbar);
  }
  if (kind == "coherent") {
    return make_coherent(complex_field(doc, "alpha"));
  }
  if (kind == "squeezed") {
    return make_squeezed(number_field(doc, "r"), number_field_or(doc, "theta", 0.0));
  }
  if (kind == "displaced-squeezed-thermal") {
    const double nbar = number_field(doc, "nbar");
    if (nbar < 0.0) {
      fail("\"nbar\" must be >= 0");
    }
    return make_displaced_squeezed_thermal(nbar, number_field(doc, "r"),
                                           number_field_or(doc, "theta", 0.0),
                                           complex_field(doc, "alpha"));
  }
  if (kind == "two-mode-squeezed") {
    return make_two_mode_squeezed(number_field(doc, "r"));
  }
  if (kind == "explicit") {
    return parse_explicit_state(doc);
  }
  if (kind == "tensor") {
    const json& parts = require(doc, "parts");
    if (!parts.is_array() || parts.empty()) {
      fail("tensor \"parts\" must be a non-empty array");
    }
    GaussianState out = parse_state(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      out = tensor(out, parse_state(parts[i]));
    }
    return out;
  }
  fail("unknown state kind \"" + kind + "\"");
}

GaussianChannel parse_channel(const json& doc) {
  const std::string kind = kind_of(doc);
  if (kind == "loss") {
    const double eta = number_field(doc, "eta");
    if (eta < 0.0 || eta > 1.0) {
      fail("loss \"eta\" must lie in [0, 1]");
    }
    return make_loss(eta);
  }
  if (kind == "amplifier") {
    const double gain = number_field(doc, "gain");
    if (gain < 1.0) {
      fail("amplifier \"gain\" must be >= 1");
    }
    return make_amplifier(gain);
  }
  if (kind == "rotation") {
    return make_rotation(number_field(doc, "theta"));
  }
  if (kind == "incoherent") {
    const json& modes = require(doc, "modes");
    if (!modes.is_array() || modes.empty()) {
      fail("incoherent \"modes\" must be a non-empty array");
    }
    std::vector<IncoherentModeSpec> specs;
    specs.reserve(modes.size());
    for (const json& entry : modes) {
      IncoherentModeSpec spec;
      spec.t = number_field(entry, "t");
      spec.theta = number_field_or(entry, "theta", 0.0);
      spec.w = number_field(entry, "w");
      if (entry.contains("reflect")) {
        if (!entry.at("reflect").is_boolean()) {
          fail("\"reflect\" must be a boolean");
        }
        spec.reflect = entry.at("reflect").get<bool>();
      }
      specs.push_back(spec);
    }
    std::vector<int> perm;
    if (doc.contains("perm")) {
      const json& p = doc.at("perm");
      if (!p.is_array() || p.size() != specs.size()) {
        fail("\"perm\" must list each mode exactly once");
      }
      for (const json& entry : p) {
        if (!entry.is_number_integer()) {
          fail("\"perm\" entries must be integers");
        }
        perm.push_back(entry.get<int>());
      }
    }
    return make_incoherent_channel(specs, perm);
  }
  if (kind == "explicit") {
    Matrix t = matrix_field(doc, "T");
    Matrix n = matrix_field(doc, "N");
    Vector dbar = vector_field(doc, "dbar");
    if (t.rows() % 2 != 0 || n.rows() != t.rows() || dbar.size() != t.rows()) {
      fail("explicit channel needs 2m x 2m \"T\" and \"N\" and a length-2m "
           "\"dbar\"");
    }
    return make_channel(std::move(t), std::move(n), std::move(dbar));
  }
  fail("unknown channel kind \"" + kind + "\"");
}

json state_document(const GaussianState& s) {
  return json{{"kind", "explicit"},
              {"modes", s.modes},
              {"V", matrix_to_json(s.V)},
              {"d", vector_to_json(s.d)}};
}

json thermal_product_document(const std::vector<double>& nbars) {
  if (nbars.size() == 1) {
    return json{{"kind", "thermal"}, {"nbar", nbars[0]}};
  }
  json parts = json::array();
  for (double nbar : nbars) {
    parts.push_back(json{{"kind", "thermal"}, {"nbar", nbar}});
  }
  return json{{"kind", "tensor"}, {"parts", std::move(parts)}};
}

json validation_document(const ValidationReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(json{
        {"check", v.check}, {"measured", v.measured}, {"threshold", v.threshold}});
  }
  return json{{"ok", r.ok}, {"violations", std::move(violations)}};
}

json coherence_document(const CoherenceReport& r) {
  return json{{"coherence_bits", r.coherence_bits},
              {"entropy_bits", r.entropy_bits},
              {"mean_photons", r.mean_photons},
              {"symplectic_eigenvalues", r.symplectic.values},
              {"closest_incoherent", thermal_product_document(r.mean_photons)}};
}

json classification_document(const IncoherentClassification& c) {
  json doc{{"incoherent", c.incoherent()}};
  if (!c.incoherent()) {
    doc["rejection"] = c.rejection;
    return doc;
  }
  const IncoherentDecomposition& dec = *c.decomposition;
  doc["permutation"] = dec.permutation;
  json modes = json::array();
  for (const IncoherentModeFactor& f : dec.factors) {
    modes.push_back(json{{"t", f.t},
                         {"theta", f.theta},
                         {"reflect", f.reflect},
                         {"det_o", f.det_o},
                         {"w", f.w}});
  }
  doc["modes"] = std::move(modes);
  return doc;
}

json load_json(const std::string& path) {
  try {
    if (path == "-") {
      return json::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
      throw SpecParseError("cannot open \"" + path + "\"");
    }
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecParseError(e.what());
  }
}

}  // namespace gqc::io
