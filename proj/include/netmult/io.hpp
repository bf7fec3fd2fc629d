#pragma once

// Documents and reports. Node indices are 1-based everywhere outside the
// library; complex numbers are [re, im] pairs.

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netmult/admissible.hpp"
#include "netmult/error.hpp"
#include "netmult/multipliers.hpp"
#include "netmult/network.hpp"
#include "netmult/spectral.hpp"

namespace netmult {

using Json = nlohmann::ordered_json;

/// A network plus, when its arrows are keyed by monoid element names, the
/// reference network whose completion defines that monoid.
struct NetworkDocument {
  Network network;
  bool monoid_labels = false;
  std::optional<Network> monoid;

  friend bool operator==(const NetworkDocument&, const NetworkDocument&) = default;
};

struct QuotientEntry {
  std::vector<std::vector<std::size_t>> classes;  // 1-based node lists
  Network network;

  friend bool operator==(const QuotientEntry&, const QuotientEntry&) = default;
};

struct Report {
  std::optional<Network> network;
  std::vector<std::pair<std::string, std::string>> aliases;  // arrow label -> element name
  std::optional<Monoid> monoid;
  std::optional<MultiplierSet> multipliers;
  std::optional<MultiplicityVector> multiplicities;
  std::vector<SpectralReport> spectra;
  std::vector<QuotientEntry> quotients;
  std::vector<Check> checks;

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
  fail(ErrorCode::ParseError, "field '" + field + "': " + what);
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": malformed document");
  }
}

inline const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

inline long long integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) field_error(path, "expected an integer");
  return v.get<long long>();
}

inline double number(const Json& v, const std::string& path) {
  if (!v.is_number()) field_error(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(ErrorCode::NonFinite, "field '" + path + "' is not finite");
  return d;
}

inline Json complex_json(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(ErrorCode::NonFinite, "non-finite complex value");
  return Json::array({z.real(), z.imag()});
}

inline Json real_json(double v) {
  if (!std::isfinite(v)) fail(ErrorCode::NonFinite, "non-finite value");
  return v;
}

/// Accepts [re, im] or a bare real number.
inline Complex complex_value(const Json& v, const std::string& path) {
  if (v.is_number()) return {number(v, path), 0.0};
  if (!v.is_array() || v.size() != 2) field_error(path, "expected [re, im]");
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_value(const Json& v, Eigen::Index n, const std::string& path) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(n))
    field_error(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = v[static_cast<std::size_t>(i)];
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      field_error(rp, "expected " + std::to_string(n) + " entries");
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = complex_value(row[static_cast<std::size_t>(j)], rp + "[" + std::to_string(j) + "]");
  }
  return m;
}

inline Json complex_list_json(const std::vector<Complex>& v) {
  Json a = Json::array();
  for (auto z : v) a.push_back(complex_json(z));
  return a;
}

inline std::vector<Complex> complex_list(const Json& v, const std::string& path) {
  if (!v.is_array()) field_error(path, "expected an array");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(complex_value(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline Json network_json(const Network& net) {
  Json arrows = Json::object();
  for (const auto& a : net.arrows) arrows[a.label] = a.map.one_based();
  return Json{{"nodes", net.node_count}, {"arrows", std::move(arrows)}};
}

inline Network network_from_json(const Json& doc, const std::string& path = "") {
  using namespace detail;
  const long long nodes = integer(member(doc, "nodes", path), join(path, "nodes"));
  if (nodes < 1) field_error(join(path, "nodes"), "must be a positive integer");
  const Json& arrows = member(doc, "arrows", path);
  const std::string ap = join(path, "arrows");
  if (!arrows.is_object()) field_error(ap, "expected a map from label to node array");
  Network net;
  net.node_count = static_cast<std::size_t>(nodes);
  for (const auto& [label, entries] : arrows.items()) {
    const std::string fp = ap + "." + label;
    if (!entries.is_array() || entries.size() != net.node_count)
      field_error(fp, "expected an array of length " + std::to_string(nodes));
    std::vector<long long> one_based;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const long long v = integer(entries[i], fp + "[" + std::to_string(i) + "]");
      if (v < 1 || v > nodes) field_error(fp + "[" + std::to_string(i) + "]", "node index out of range 1.." + std::to_string(nodes));
      one_based.push_back(v);
    }
    net.arrows.push_back({label, InputMap::from_one_based(one_based)});
  }
  validate_network(net);
  return net;
}

inline Json network_document_json(const NetworkDocument& doc) {
  Json j = network_json(doc.network);
  if (doc.monoid_labels) j["monoid_labels"] = true;
  if (doc.monoid) j["monoid"] = network_json(*doc.monoid);
  return j;
}

inline NetworkDocument parse_network_document(const std::string& text) {
  const Json j = detail::parse_json(text);
  NetworkDocument doc;
  doc.network = network_from_json(j);
  if (auto it = j.find("monoid_labels"); it != j.end()) {
    if (!it->is_boolean()) detail::field_error("monoid_labels", "expected true or false");
    doc.monoid_labels = it->get<bool>();
  }
  if (auto it = j.find("monoid"); it != j.end()) doc.monoid = network_from_json(*it, "monoid");
  if (doc.monoid_labels && !doc.monoid)
    detail::field_error("monoid", "required when monoid_labels is true");
  return doc;
}

inline Network parse_network(const std::string& text) { return parse_network_document(text).network; }

inline std::string serialize_network(const NetworkDocument& doc) { return network_document_json(doc).dump(2) + "\n"; }

/// {"block_dim": m, "blocks": {label: m×m array of [re, im]}}. For m = 1 a
/// block may also be a bare number or a single [re, im] pair.
inline Coefficients parse_coefficients(const std::string& text) {
  using namespace detail;
  const Json j = parse_json(text);
  Coefficients c;
  c.block_dim = 1;
  if (j.contains("block_dim")) {
    const long long m = integer(j["block_dim"], "block_dim");
    if (m < 1) field_error("block_dim", "must be a positive integer");
    c.block_dim = m;
  }
  const Json& blocks = member(j, "blocks", "");
  if (!blocks.is_object()) field_error("blocks", "expected a map from label to matrix");
  for (const auto& [label, v] : blocks.items()) {
    const std::string path = "blocks." + label;
    const bool scalar = v.is_number() || (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number());
    if (c.block_dim == 1 && scalar)
      c.blocks[label] = Matrix::Constant(1, 1, complex_value(v, path));
    else
      c.blocks[label] = matrix_value(v, c.block_dim, path);
  }
  return c;
}

inline Json coefficients_json(const Coefficients& c) {
  Json blocks = Json::object();
  for (const auto& [label, m] : c.blocks) blocks[label] = detail::matrix_json(m);
  return Json{{"block_dim", c.block_dim}, {"blocks", std::move(blocks)}};
}

/// elements: name → 1-based map, in element order; table[a][b] names a∘b.
inline Json monoid_json(const Monoid& m) {
  Json elements = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) elements[m.names[i]] = m.elements[i].one_based();
  Json table = Json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m.size(); ++b) row.push_back(m.names[m.product(a, b)]);
    table.push_back(std::move(row));
  }
  return Json{{"unit", m.names[m.unit]}, {"elements", std::move(elements)}, {"table", std::move(table)}};
}

inline Monoid monoid_from_json(const Json& j) {
  using namespace detail;
  const Json& elements = member(j, "elements", "monoid");
  if (!elements.is_object() || elements.empty()) field_error("monoid.elements", "expected a non-empty map");
  Monoid m;
  std::size_t degree = 0;
  for (const auto& [name, v] : elements.items()) {
    const std::string path = "monoid.elements." + name;
    if (!v.is_array() || v.empty()) field_error(path, "expected a node array");
    if (degree == 0) degree = v.size();
    if (v.size() != degree) field_error(path, "expected an array of length " + std::to_string(degree));
    std::vector<long long> entries;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const long long x = integer(v[i], path + "[" + std::to_string(i) + "]");
      if (x < 1 || x > static_cast<long long>(degree)) field_error(path, "node index out of range");
      entries.push_back(x);
    }
    m.names.push_back(name);
    m.elements.push_back(InputMap::from_one_based(entries));
  }
  auto index_of = [&](const Json& v, const std::string& path) {
    if (!v.is_string()) field_error(path, "expected an element name");
    const auto it = std::find(m.names.begin(), m.names.end(), v.get<std::string>());
    if (it == m.names.end()) field_error(path, "unknown element '" + v.get<std::string>() + "'");
    return static_cast<std::size_t>(it - m.names.begin());
  };
  m.unit = index_of(member(j, "unit", "monoid"), "monoid.unit");
  const Json& table = member(j, "table", "monoid");
  const std::size_t n = m.size();
  if (!table.is_array() || table.size() != n) field_error("monoid.table", "expected " + std::to_string(n) + " rows");
  m.table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const std::string rp = "monoid.table[" + std::to_string(a) + "]";
    if (!table[a].is_array() || table[a].size() != n) field_error(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) {
      m.table[a * n + b] = index_of(table[a][b], rp + "[" + std::to_string(b) + "]");
      if (m.elements[m.table[a * n + b]] != m.elements[a].after(m.elements[b]))
        field_error(rp + "[" + std::to_string(b) + "]", "does not equal the composition of the element maps");
    }
  }
  if (!m.elements[m.unit].is_identity()) field_error("monoid.unit", "is not the identity map");
  return m;
}

inline Json multipliers_json(const MultiplierSet& ms) {
  Json sizes = Json::array();
  Json blocks = Json::array();
  Json chars = Json::array();
  for (const auto& b : ms.blocks) {
    sizes.push_back(b.size);
    Json images = Json::object();
    Json chi = Json::object();
    for (std::size_t s = 0; s < ms.monoid.size(); ++s) {
      images[ms.monoid.names[s]] = detail::matrix_json(b.images[s]);
      chi[ms.monoid.names[s]] = detail::complex_json(b.character[s]);
    }
    blocks.push_back(Json{{"size", b.size}, {"images", std::move(images)}});
    chars.push_back(std::move(chi));
  }
  return Json{{"sizes", std::move(sizes)}, {"blocks", std::move(blocks)}, {"characters", std::move(chars)}};
}

inline MultiplierSet multipliers_from_json(const Json& j, const Monoid& m) {
  using namespace detail;
  MultiplierSet ms;
  ms.monoid = m;
  const Json& blocks = member(j, "blocks", "multipliers");
  const Json& chars = member(j, "characters", "multipliers");
  if (!blocks.is_array()) field_error("multipliers.blocks", "expected an array");
  if (!chars.is_array() || chars.size() != blocks.size())
    field_error("multipliers.characters", "expected one entry per block");
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const std::string bp = "multipliers.blocks[" + std::to_string(l) + "]";
    const std::string cp = "multipliers.characters[" + std::to_string(l) + "]";
    SimpleBlock b;
    const long long size = integer(member(blocks[l], "size", bp), bp + ".size");
    if (size < 1) field_error(bp + ".size", "must be positive");
    b.size = static_cast<std::size_t>(size);
    const Json& images = member(blocks[l], "images", bp);
    for (const auto& name : m.names) {
      b.images.push_back(matrix_value(member(images, name, bp + ".images"), size, bp + ".images." + name));
      b.character.push_back(complex_value(member(chars[l], name, cp), cp + "." + name));
    }
    ms.blocks.push_back(std::move(b));
  }
  return ms;
}

inline Json check_json(const Check& c) {
  return Json{{"name", c.name}, {"pass", c.pass}, {"value", detail::real_json(c.value)}};
}

inline Check check_from_json(const Json& j, const std::string& path) {
  using namespace detail;
  Check c;
  const Json& name = member(j, "name", path);
  if (!name.is_string()) field_error(path + ".name", "expected a string");
  c.name = name.get<std::string>();
  const Json& pass = member(j, "pass", path);
  if (!pass.is_boolean()) field_error(path + ".pass", "expected true or false");
  c.pass = pass.get<bool>();
  c.value = number(member(j, "value", path), path + ".value");
  return c;
}

inline Json spectral_report_json(const SpectralReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return Json{{"label", r.label},
              {"trial", r.trial},
              {"block_dim", r.block_dim},
              {"multiplicities", r.multiplicities},
              {"predicted", detail::complex_list_json(r.predicted)},
              {"oracle", detail::complex_list_json(r.oracle)},
              {"max_distance", detail::real_json(r.max_match_distance)},
              {"pass", r.pass},
              {"checks", std::move(checks)}};
}

inline SpectralReport spectral_report_from_json(const Json& j, const std::string& path) {
  using namespace detail;
  SpectralReport r;
  const Json& label = member(j, "label", path);
  if (!label.is_string()) field_error(path + ".label", "expected a string");
  r.label = label.get<std::string>();
  r.trial = static_cast<std::size_t>(integer(member(j, "trial", path), path + ".trial"));
  r.block_dim = integer(member(j, "block_dim", path), path + ".block_dim");
  const Json& mult = member(j, "multiplicities", path);
  if (!mult.is_array()) field_error(path + ".multiplicities", "expected an array");
  for (std::size_t i = 0; i < mult.size(); ++i)
    r.multiplicities.push_back(integer(mult[i], path + ".multiplicities[" + std::to_string(i) + "]"));
  r.predicted = complex_list(member(j, "predicted", path), path + ".predicted");
  r.oracle = complex_list(member(j, "oracle", path), path + ".oracle");
  r.max_match_distance = number(member(j, "max_distance", path), path + ".max_distance");
  const Json& pass = member(j, "pass", path);
  if (!pass.is_boolean()) field_error(path + ".pass", "expected true or false");
  r.pass = pass.get<bool>();
  const Json& checks = member(j, "checks", path);
  if (!checks.is_array()) field_error(path + ".checks", "expected an array");
  for (std::size_t i = 0; i < checks.size(); ++i)
    r.checks.push_back(check_from_json(checks[i], path + ".checks[" + std::to_string(i) + "]"));
  return r;
}

inline Json report_json(const Report& r) {
  Json j = Json::object();
  if (r.network) j["network"] = network_json(*r.network);
  if (!r.aliases.empty()) {
    Json a = Json::object();
    for (const auto& [label, name] : r.aliases) a[label] = name;
    j["aliases"] = std::move(a);
  }
  if (r.multipliers && (!r.monoid || !(*r.monoid == r.multipliers->monoid)))
    fail(ErrorCode::InvalidArgument, "a report with multipliers must carry their monoid");
  if (r.monoid) j["monoid"] = monoid_json(*r.monoid);
  if (r.multipliers) j["multipliers"] = multipliers_json(*r.multipliers);
  if (r.multiplicities) j["multiplicities"] = *r.multiplicities;
  if (!r.spectra.empty()) {
    Json s = Json::array();
    for (const auto& sr : r.spectra) s.push_back(spectral_report_json(sr));
    j["spectra"] = std::move(s);
  }
  if (!r.quotients.empty()) {
    Json q = Json::array();
    for (const auto& e : r.quotients) q.push_back(Json{{"classes", e.classes}, {"network", network_json(e.network)}});
    j["quotients"] = std::move(q);
  }
  if (!r.checks.empty()) {
    Json c = Json::array();
    for (const auto& ch : r.checks) c.push_back(check_json(ch));
    j["checks"] = std::move(c);
  }
  return j;
}

/// Structured form: JSON with shortest round-trip number formatting.
inline std::string serialize_report(const Report& r) { return report_json(r).dump(2) + "\n"; }

inline Report parse_report(const std::string& text) {
  using namespace detail;
  const Json j = parse_json(text);
  if (!j.is_object()) fail(ErrorCode::ParseError, "report must be an object");
  Report r;
  if (j.contains("network")) r.network = network_from_json(j["network"], "network");
  if (j.contains("aliases")) {
    if (!j["aliases"].is_object()) field_error("aliases", "expected a map");
    for (const auto& [label, name] : j["aliases"].items()) {
      if (!name.is_string()) field_error("aliases." + label, "expected an element name");
      r.aliases.emplace_back(label, name.get<std::string>());
    }
  }
  if (j.contains("monoid")) r.monoid = monoid_from_json(j["monoid"]);
  if (j.contains("multipliers")) {
    if (!r.monoid) field_error("monoid", "required by the multipliers section");
    r.multipliers = multipliers_from_json(j["multipliers"], *r.monoid);
  }
  if (j.contains("multiplicities")) {
    const Json& m = j["multiplicities"];
    if (!m.is_array()) field_error("multiplicities", "expected an array");
    MultiplicityVector v;
    for (std::size_t i = 0; i < m.size(); ++i) v.push_back(integer(m[i], "multiplicities[" + std::to_string(i) + "]"));
    r.multiplicities = std::move(v);
  }
  if (j.contains("spectra")) {
    if (!j["spectra"].is_array()) field_error("spectra", "expected an array");
    for (std::size_t i = 0; i < j["spectra"].size(); ++i)
      r.spectra.push_back(spectral_report_from_json(j["spectra"][i], "spectra[" + std::to_string(i) + "]"));
  }
  if (j.contains("quotients")) {
    if (!j["quotients"].is_array()) field_error("quotients", "expected an array");
    for (std::size_t i = 0; i < j["quotients"].size(); ++i) {
      const std::string path = "quotients[" + std::to_string(i) + "]";
      const Json& e = j["quotients"][i];
      QuotientEntry q;
      const Json& classes = member(e, "classes", path);
      if (!classes.is_array()) field_error(path + ".classes", "expected an array of node lists");
      for (const auto& cls : classes) {
        if (!cls.is_array()) field_error(path + ".classes", "expected an array of node lists");
        std::vector<std::size_t> nodes;
        for (const auto& v : cls) nodes.push_back(static_cast<std::size_t>(integer(v, path + ".classes")));
        q.classes.push_back(std::move(nodes));
      }
      q.network = network_from_json(member(e, "network", path), path + ".network");
      r.quotients.push_back(std::move(q));
    }
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) field_error("checks", "expected an array");
    for (std::size_t i = 0; i < j["checks"].size(); ++i)
      r.checks.push_back(check_from_json(j["checks"][i], "checks[" + std::to_string(i) + "]"));
  }
  return r;
}

namespace detail {

inline bool plain_key(const std::string& k) {
  if (k.empty()) return false;
  for (char ch : k)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '\'')) return false;
  return true;
}

inline void flatten(const Json& v, const std::string& path, std::ostream& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, child] : v.items())
      flatten(child, path + (path.empty() ? "" : ".") + (plain_key(k) ? k : Json(k).dump()), out);
    return;
  }
  const bool records = v.is_array() && !v.empty() &&
                       std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object() && !e.empty(); });
  if (records) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
    return;
  }
  out << path << " = " << v.dump() << "\n";
}

}  // namespace detail

/// Text form: one `dotted.key = <JSON value>` line per leaf; arrays of
/// records are indexed by position.
inline std::string render_text(const Json& j) {
  std::ostringstream out;
  detail::flatten(j, "", out);
  return out.str();
}

inline std::string render_text(const Report& r) { return render_text(report_json(r)); }

}  // namespace netmult
