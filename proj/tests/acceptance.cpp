// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "properties.hpp"

using namespace netmult;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string show(const MultiplicityVector& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

/// True when the character rows of ms equal `rows` (given on element names) up to order.
bool same_characters(const MultiplierSet& ms, const std::vector<std::map<std::string, Complex>>& rows, double tol) {
  if (ms.count() != rows.size()) return false;
  std::vector<bool> used(rows.size(), false);
  for (const auto& blk : ms.blocks) {
    bool found = false;
    for (std::size_t r = 0; r < rows.size() && !found; ++r) {
      if (used[r]) continue;
      bool eq = true;
      for (std::size_t s = 0; s < ms.monoid.size(); ++s) {
        const auto it = rows[r].find(ms.monoid.names[s]);
        const Complex want = it == rows[r].end() ? Complex(0) : it->second;
        eq = eq && std::abs(blk.character[s] - want) <= tol;
      }
      if (eq) found = used[r] = true;
    }
    if (!found) return false;
  }
  return true;
}

std::map<std::string, Complex> all_ones(const Monoid& m) {
  std::map<std::string, Complex> out;
  for (const auto& n : m.names) out[n] = 1.0;
  return out;
}

/// Worst spectrum distance across a verification, and whether every check passed.
std::string summarize(const Verification& v) {
  double worst = 0;
  for (const auto& r : v.reports) worst = std::max(worst, r.max_match_distance);
  std::ostringstream s;
  s << v.reports.size() << " draws, worst distance " << std::setprecision(3) << worst;
  return s.str();
}

Verification campaign(const Network& net, const MultiplierSet& ms, std::size_t trials, std::vector<Eigen::Index> dims,
                      std::uint64_t seed) {
  VerificationOptions opt;
  opt.trials = trials;
  opt.block_dims = std::move(dims);
  opt.seed = seed;
  return verify_network(net, ms, opt);
}

struct Result {
  bool pass = false;
  std::string detail;
};

Result criterion1() {
  const auto t0 = Clock::now();
  const Network net = fig2x();
  const MultiplierSet ms = multipliers(completion(net).monoid, 0);
  const Verification v = campaign(net, ms, 50, {1}, 1);
  const double elapsed = seconds_since(t0);
  const bool chars = same_characters(ms, {all_ones(ms.monoid), {{"A", 1.0}}}, 1e-9);
  std::ostringstream s;
  s << "fig2x multiplicities " << show(v.multiplicities) << ", " << summarize(v) << ", " << std::setprecision(3)
    << elapsed << " s";
  return {chars && v.multiplicities == MultiplicityVector{1, 3} && v.pass() && elapsed < 1.0, s.str()};
}

Result criterion2() {
  const Monoid m = completion(fig3_left()).monoid;
  const MultiplierSet ms = multipliers(m, 0);
  const bool chars = same_characters(ms, {all_ones(m), {{"A", 1.0}, {"B", 1.0}}, {{"A", 1.0}, {"B", -1.0}}}, 1e-9);
  const auto net = multiplicities(fig3_left(), ms);
  const auto fund = multiplicities(fundamental_network(m), ms);
  std::ostringstream s;
  s << "closure size " << m.size() << ", gamma " << show(net) << ", Gamma " << show(fund);
  return {m.size() == 5 && chars && net == MultiplicityVector{1, 1, 1} && fund == MultiplicityVector{1, 2, 2}, s.str()};
}

Result criterion3() {
  const MultiplierSet ms = multipliers(completion(fig3_left()).monoid, 0);
  const auto mult = multiplicities(fig5_left(), ms);
  Rng rng(derive_seed(3, {}));
  double worst = 0;
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::string, Complex> v;
    for (const auto& n : ms.monoid.names) v[n] = complex_gaussian(rng);
    const Complex a = v["A"], b = v["B"];
    const Complex sum = a + b + v["C"] + v["D"] + v["E"];
    const std::vector<Complex> closed{sum, a + b, a + b, a + b, a - b};
    const auto match = match_spectra(closed, admissible_spectrum(fig5_left(), Coefficients::scalar(v)), 1e-6);
    ok = ok && match.pass;
    worst = std::max(worst, match.max_distance);
  }
  std::ostringstream s;
  s << "multiplicities " << show(mult) << ", 50 draws against the closed form, worst distance " << std::setprecision(3)
    << worst;
  return {ok && mult == MultiplicityVector{1, 3, 1}, s.str()};
}

Result criterion4() {
  const Monoid m = completion(exam44()).monoid;
  const MultiplierSet ms = multipliers(m, 0);
  const bool chars = same_characters(ms, {all_ones(m), {{"A", 1.0}, {"B", 1.0}}, {{"A", 1.0}}}, 1e-9);
  const auto fund = multiplicities(fundamental_network(m), ms);
  return {chars && fund == MultiplicityVector{1, 2, 2},
          std::string("multipliers {sum, A+B, A}: ") + (chars ? "yes" : "no") + ", Gamma " + show(fund)};
}

Result criterion5() {
  const Network net = exam49();
  const MultiplierSet ms = multipliers(completion(net).monoid, 0);
  const bool chars = same_characters(ms, {all_ones(ms.monoid), {{"A", 1.0}}}, 1e-9);
  const Verification v = campaign(net, ms, 50, {1, 2}, 5);
  return {chars && v.multiplicities == MultiplicityVector{1, 3} && v.pass(),
          "tau=[2,3,4,4] multiplicities " + show(v.multiplicities) + ", " + summarize(v)};
}

Result criterion6() {
  const Network net = exam410();
  const MultiplierSet ms = multipliers(completion(net).monoid, 0);
  const bool chars = same_characters(ms, {all_ones(ms.monoid), {{"A", 1.0}, {"B", 1.0}}, {{"A", 1.0}}}, 1e-9);
  const Verification v = campaign(net, ms, 50, {1, 2}, 6);
  // Scalar instance against the listed multiset {Σ, (A+B)×2, A×3}.
  Rng rng(derive_seed(6, {}));
  std::map<std::string, Complex> c;
  Complex sum = 0;
  for (const auto& n : ms.monoid.names) sum += (c[n] = complex_gaussian(rng));
  const std::vector<Complex> listed{sum, c["A"] + c["B"], c["A"] + c["B"], c["A"], c["A"], c["A"]};
  const bool instance = match_spectra(listed, admissible_spectrum(net, Coefficients::scalar(c)), 1e-6).pass;
  return {chars && instance && v.multiplicities == MultiplicityVector{1, 2, 3} && v.pass(),
          "tau=[2,2,2,5,5,6] multiplicities " + show(v.multiplicities) + ", " + summarize(v)};
}

Result criterion7() {
  const Monoid m = completion(exam612()).monoid;
  const MultiplierSet ms = multipliers(m, 0);
  const std::vector<double> expected{2, 0, 0, 1, 1, 0, 0, 0};
  bool chi_ok = ms.sizes() == std::vector<std::size_t>{1, 1, 2};
  if (chi_ok)
    for (std::size_t s = 0; s < expected.size(); ++s)
      chi_ok = chi_ok && std::abs(ms.blocks[2].character[*m.index_of(std::string(1, static_cast<char>('A' + s)))] -
                                  expected[s]) <= 1e-9;
  const Verification v = campaign(fundamental_network(m), ms, 50, {1, 2}, 7);
  std::ostringstream s;
  s << "block sizes (";
  for (std::size_t i = 0; i < ms.count(); ++i) s << (i ? "," : "") << ms.blocks[i].size;
  s << "), Gamma " << show(v.multiplicities) << ", chi_3 " << (chi_ok ? "matches" : "differs") << ", " << summarize(v);
  return {chi_ok && v.multiplicities == MultiplicityVector{1, 1, 3} && v.pass(), s.str()};
}

Result criterion8() {
  bool ok = true;
  double worst = 0;
  std::size_t draws = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const Network ring = circulant_network(n);
    const MultiplierSet ms = multipliers(completion(ring).monoid, 0);
    std::vector<std::map<std::string, Complex>> dft;
    for (std::size_t k = 0; k < n; ++k) {
      std::map<std::string, Complex> row;
      for (std::size_t j = 0; j < n; ++j)
        row["s" + std::to_string(j)] = std::polar(1.0, 2.0 * M_PI * static_cast<double>((j * k) % n) / static_cast<double>(n));
      dft.push_back(std::move(row));
    }
    ok = ok && same_characters(ms, dft, 1e-9);
    const Verification v = campaign(ring, ms, 5, {1, 2, 3}, 8 + n);
    ok = ok && v.pass();
    for (const auto& r : v.reports) worst = std::max(worst, r.max_match_distance);
    draws += v.reports.size();
  }
  std::ostringstream s;
  s << "n = 2..8, DFT characters and " << draws << " draws with m in {1,2,3}, worst distance " << std::setprecision(3)
    << worst;
  return {ok, s.str()};
}

Result criterion9() {
  bool ok = true;
  std::ostringstream s;
  s << "base seed " << properties::kBaseSeed << ";";
  for (const auto& o : properties::run_all()) {
    ok = ok && o.pass();
    s << " " << o.name << " " << (o.cases - o.failures) << "/" << o.cases;
    for (const auto& f : o.failed) std::cerr << "  " << o.name << " failed, seed " << f << "\n";
  }
  return {ok, s.str()};
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<Result (*)()> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                           criterion6, criterion7, criterion8, criterion9};
  std::vector<Result> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (i + 1 == 9) {
      const double total = seconds_since(t0);
      std::ostringstream s;
      s << ", total " << std::setprecision(3) << total << " s";
      r.detail += s.str();
      r.pass = r.pass && total < 120.0;
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << r.detail << std::endl;
    results.push_back(r);
  }
  return std::all_of(results.begin(), results.end(), [](const Result& r) { return r.pass; }) ? 0 : 1;
}
