#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netmult/io.hpp"
#include "netmult/multipliers.hpp"
#include "netmult/network.hpp"
#include "netmult/spectral.hpp"

namespace netmult {

/// Environment variable that supplies the seed when --seed is not given.
inline constexpr const char* kSeedVariable = "NETMULT_SEED";

namespace cli {

enum Exit : int { kSuccess = 0, kVerificationFailed = 1, kInputError = 2, kInternalError = 3 };

inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconsistentTrace:
    case ErrorCode::DegenerateDraw:
    case ErrorCode::NonSquareBlockDim:
      return kInternalError;
    default:
      return kInputError;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 0);
    if (used == text.size() && text.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::InvalidArgument, origin + " is not an unsigned integer: '" + text + "'");
}

/// --seed wins, then the environment variable, then 0.
inline std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag, "--seed");
  if (const char* env = std::getenv(kSeedVariable); env && *env) return parse_seed(env, kSeedVariable);
  return 0;
}

/// The network with arrows keyed by element names, and the monoid those names refer to.
struct Labelled {
  Network network;
  Monoid monoid;
};

inline Labelled label_by_monoid(const NetworkDocument& doc) {
  if (doc.monoid_labels) return {doc.network, completion(*doc.monoid).monoid};
  Completion comp = completion(doc.network);
  return {std::move(comp.network), std::move(comp.monoid)};
}

/// Re-expresses doc's network over the element names of m.
inline Network label_with(const NetworkDocument& doc, const Monoid& m) {
  auto labels = doc.network.labels();
  auto names = m.names;
  std::sort(labels.begin(), labels.end());
  std::sort(names.begin(), names.end());
  if (doc.monoid_labels || labels == names) return doc.network;
  const Completion comp = completion(doc.network);
  if (comp.monoid.size() != m.size() || comp.monoid.degree() != m.degree())
    fail(ErrorCode::NotConstructible, "the network's completion is not the multipliers' monoid");
  Network out;
  out.node_count = doc.network.node_count;
  for (std::size_t s = 0; s < m.size(); ++s) {
    const auto& el = comp.monoid.elements;
    if (std::find(el.begin(), el.end(), m.elements[s]) == el.end())
      fail(ErrorCode::NotConstructible, "the network's completion is not the multipliers' monoid");
    out.arrows.push_back({m.names[s], m.elements[s]});
  }
  return out;
}

/// Coefficients keyed by element names, or by the original arrow labels of
/// doc (aliases of one element are summed, missing elements get zero).
inline Coefficients coefficients_for(const NetworkDocument& doc, const Monoid& m, const Coefficients& c) {
  bool by_name = c.blocks.size() == m.size();
  for (const auto& name : m.names) by_name = by_name && c.blocks.count(name);
  if (by_name) return c;
  if (doc.monoid_labels) fail(ErrorCode::LabelMismatch, "coefficients must be keyed by the monoid element names");
  detail::require_labels(doc.network, c);
  Coefficients out = Coefficients::zero(m.names, c.block_dim);
  for (const auto& a : doc.network.arrows) {
    const auto it = std::find(m.elements.begin(), m.elements.end(), a.map);
    if (it == m.elements.end()) fail(ErrorCode::NotConstructible, "arrow '" + a.label + "' is not a monoid element");
    out.blocks[m.names[static_cast<std::size_t>(it - m.elements.begin())]] += c.at(a.label);
  }
  return out;
}

inline std::vector<Eigen::Index> parse_dims(const std::string& text) {
  std::vector<Eigen::Index> dims;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      dims.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "--block-dims expects positive integers, got '" + item + "'");
    }
  }
  if (dims.empty()) fail(ErrorCode::InvalidArgument, "--block-dims is empty");
  return dims;
}

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const Json& j, std::ostream& out) const {
    const std::string text = format == "structured" ? j.dump(2) + "\n" : render_text(j);
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::Io, "cannot write '" + path + "'");
    f << text;
  }
};

}  // namespace cli

/// Runs one invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli;
  CLI::App app{"Network multipliers for homogeneous networks with asymmetric inputs", "netmult"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  app.add_option("--format", output.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--output", output.path, "write to this file instead of standard output");

  std::string net_path, mult_path, coeff_path, dims_text = "1,2";
  std::optional<std::string> seed_flag;
  std::size_t trials = 50, max_nodes = 12, ring = 1;
  double tol = 1e-6;

  auto* complete = app.add_subcommand("complete", "monoid closure and completed network");
  auto* fundamental = app.add_subcommand("fundamental", "fundamental network document");
  auto* mult = app.add_subcommand("multipliers", "compute the network multipliers");
  auto* counts = app.add_subcommand("multiplicities", "multiplicities against a multiplier report");
  auto* spectrum = app.add_subcommand("spectrum", "predicted spectrum for given coefficients");
  auto* verify = app.add_subcommand("verify", "oracle campaign against a dense eigensolver");
  auto* quotients = app.add_subcommand("quotients", "balanced partitions and quotient networks");
  auto* circulant = app.add_subcommand("circulant", "circulant network with closed-form multipliers");

  for (auto* sub : {complete, fundamental, mult, counts, spectrum, verify, quotients})
    sub->add_option("net", net_path, "network document")->required();
  for (auto* sub : {mult, spectrum, verify}) sub->add_option("--seed", seed_flag, "random seed");
  counts->add_option("--multipliers", mult_path, "multiplier report")->required();
  spectrum->add_option("--coeffs", coeff_path, "coefficient document")->required();
  spectrum->add_option("--multipliers", mult_path, "multiplier report");
  verify->add_option("--trials", trials, "random draws per block dimension");
  verify->add_option("--block-dims", dims_text, "comma-separated block dimensions");
  verify->add_option("--tol", tol, "spectrum match tolerance");
  quotients->add_option("--max-nodes", max_nodes, "enumeration limit");
  circulant->add_option("n", ring, "number of nodes")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error[Usage]: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const auto load_doc = [&] { return parse_network_document(read_file(net_path)); };
    const auto load_multipliers = [&] {
      Report r = parse_report(read_file(mult_path));
      if (!r.multipliers) fail(ErrorCode::ParseError, "'" + mult_path + "' has no multipliers section");
      return *r.multipliers;
    };

    if (complete->parsed()) {
      const NetworkDocument doc = load_doc();
      if (doc.monoid_labels) fail(ErrorCode::InvalidArgument, "complete expects a network with its own arrow labels");
      const Completion comp = completion(doc.network);
      Report r;
      r.network = comp.network;
      for (const auto& [label, element] : comp.aliases) r.aliases.emplace_back(label, comp.monoid.names[element]);
      r.monoid = comp.monoid;
      output.emit(report_json(r), out);
    } else if (fundamental->parsed()) {
      const Labelled l = label_by_monoid(load_doc());
      output.emit(network_json(fundamental_network(l.monoid)), out);
    } else if (mult->parsed()) {
      const Labelled l = label_by_monoid(load_doc());
      Report r;
      r.multipliers = multipliers(l.monoid, resolve_seed(seed_flag));
      r.monoid = r.multipliers->monoid;
      output.emit(report_json(r), out);
    } else if (counts->parsed()) {
      const MultiplierSet ms = load_multipliers();
      const Network net = label_with(load_doc(), ms.monoid);
      Report r;
      r.multiplicities = multiplicities(net, ms);
      output.emit(report_json(r), out);
    } else if (spectrum->parsed()) {
      const NetworkDocument doc = load_doc();
      const MultiplierSet ms =
          mult_path.empty() ? multipliers(label_by_monoid(doc).monoid, resolve_seed(seed_flag)) : load_multipliers();
      const Network net = label_with(doc, ms.monoid);
      const Coefficients c = coefficients_for(doc, ms.monoid, parse_coefficients(read_file(coeff_path)));
      Report r;
      r.multiplicities = multiplicities(net, ms);
      SpectralReport s;
      s.label = "predicted";
      s.block_dim = c.block_dim;
      s.multiplicities = *r.multiplicities;
      s.predicted = predicted_spectrum(net, ms, c, &*r.multiplicities);
      s.pass = true;
      r.spectra.push_back(std::move(s));
      output.emit(report_json(r), out);
    } else if (verify->parsed()) {
      const Labelled l = label_by_monoid(load_doc());
      VerificationOptions opt;
      opt.trials = trials;
      opt.block_dims = parse_dims(dims_text);
      opt.seed = resolve_seed(seed_flag);
      opt.tol = tol;
      const MultiplierSet ms = multipliers(l.monoid, opt.seed);
      const Verification v = verify_network(l.network, ms, opt);
      Report r;
      r.monoid = ms.monoid;
      r.multipliers = ms;
      r.multiplicities = v.multiplicities;
      r.spectra = v.reports;
      r.checks = v.checks;
      const bool pass = v.pass();
      r.checks.push_back({"all", pass, static_cast<double>(v.reports.size())});
      output.emit(report_json(r), out);
      if (!pass) {
        err << "error[VerificationFailed]: one or more checks failed\n";
        return kVerificationFailed;
      }
    } else if (quotients->parsed()) {
      const Network net = load_doc().network;
      Report r;
      for (const auto& p : enumerate_balanced_partitions(net, max_nodes)) {
        QuotientEntry e;
        e.classes.resize(p.class_count());
        for (std::size_t node = 0; node < p.class_of.size(); ++node) e.classes[p.class_of[node]].push_back(node + 1);
        e.network = quotient(net, p).first;
        r.quotients.push_back(std::move(e));
      }
      output.emit(report_json(r), out);
    } else if (circulant->parsed()) {
      Report r;
      r.network = circulant_network(ring);
      r.multipliers = circulant_multipliers(ring);
      r.monoid = r.multipliers->monoid;
      output.emit(report_json(r), out);
    }
  } catch (const Error& e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error[Internal]: " << e.what() << "\n";
    return kInternalError;
  }
  return kSuccess;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace netmult
