#include "spectree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "spectree/enumerate.hpp"
#include "spectree/error.hpp"
#include "spectree/linalg.hpp"

namespace spectree {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

void sort_entries(std::vector<ReportEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ReportEntry& a, const ReportEntry& b) {
              if (a.code != b.code) return a.code < b.code;
              return a.detail < b.detail;
            });
}

void finish(VerificationReport& report, const Timer& timer) {
  sort_entries(report.witnesses);
  sort_entries(report.violations);
  report.elapsed_seconds = timer.elapsed();
}

std::string shard_suffix(const Shard& shard) {
  if (shard.count <= 1) return "";
  return " [shard " + std::to_string(shard.index) + "/" +
         std::to_string(shard.count) + "]";
}

// Sweeps one enumeration shard, handing each tree and its canonical code
// to the callback.
void sweep_order(int n, const Shard& shard, VerificationReport& report,
                 const std::function<void(const Tree&, const std::string&)>& fn) {
  TreeStream stream(n, shard.index, shard.count);
  while (auto t = stream.next()) {
    fn(*t, canonical_code(*t));
    ++report.checked;
  }
}

const RootInterval& theta_root() {
  static const std::vector<RootInterval> roots = isolate_roots(THETA_POLY());
  return roots[0];
}

const RootInterval& theta_bar_root() {
  static const std::vector<RootInterval> roots = isolate_roots(THETA_POLY());
  return roots[1];
}

const IntPoly& one_poly() {
  static const IntPoly p({Int(-1), Int(1)});  // x - 1
  return p;
}

int class_multiplicity(const FactoredSpectrum& s, const IntPoly& q) {
  const EigenClass* c = s.find_class(q);
  return c == nullptr ? 0 : c->multiplicity;
}

bool is_star_tree(const Tree& t) {
  if (t.order() < 2) return false;
  int max_deg = 0;
  for (int v = 0; v < t.order(); ++v) max_deg = std::max(max_deg, t.degree(v));
  return max_deg == t.order() - 1;
}

// Canonical codes of all spiders of order n, mapped to (s, k).
std::map<std::string, std::pair<int, int>> spider_codes(int n) {
  std::map<std::string, std::pair<int, int>> codes;
  for (int k = 1; 2 * k <= n - 1; ++k) {
    const int s = n - 1 - k;
    codes[canonical_code(spider(s, k))] = {s, k};
  }
  return codes;
}

std::string spider_name(std::pair<int, int> sk) {
  return "T(" + std::to_string(sk.first) + "," + std::to_string(sk.second) + ")";
}

IntPoly spider_charpoly_closed_form(int s, int k) {
  const IntPoly x = IntPoly::x();
  if (k == s) {
    const IntPoly quad({Int(2 * k + 1), Int(-(k + 3)), Int(1)});
    return x * pow(THETA_POLY(), k - 1) * quad;
  }
  const int n = s + k + 1;
  const IntPoly cubic({Int(-n), Int(3 * s + 4), Int(-(s + 4)), Int(1)});
  return x * pow(one_poly(), s - k - 1) * pow(THETA_POLY(), k - 1) * cubic;
}

}  // namespace

VerificationReport merge_reports(const std::vector<VerificationReport>& parts);

namespace {

// Global count assertions that only make sense on a full (merged) sweep.
void finalize_property_suite(VerificationReport& report) {
  const long long n = report.counters.count("order") ? report.counters.at("order") : 0;
  if (n < 6) return;
  for (long long v = 0; v <= n - 4; ++v) {
    std::string key = "m1=" + std::to_string(v);
    if (!report.counters.count(key) || report.counters.at(key) == 0) {
      std::string detail =
          "no tree of order " + std::to_string(n) + " attains m(1) = " + std::to_string(v);
      bool present = false;
      for (const auto& e : report.violations) present |= e.detail == detail;
      if (!present) report.violations.push_back({"", detail});
    }
  }
  std::string key = "m1=" + std::to_string(n - 2);
  if (!report.counters.count(key) || report.counters.at(key) == 0) {
    std::string detail = "no tree of order " + std::to_string(n) +
                         " attains m(1) = " + std::to_string(n - 2);
    bool present = false;
    for (const auto& e : report.violations) present |= e.detail == detail;
    if (!present) report.violations.push_back({"", detail});
  }
}

void finalize_counterexamples(VerificationReport& report) {
  auto expect = [&](const std::string& key, long long want,
                    const std::string& what) {
    const long long got = report.counters.count(key) ? report.counters.at(key) : 0;
    if (got != want) {
      std::string detail = "expected " + std::to_string(want) + " " + what +
                           ", found " + std::to_string(got);
      bool present = false;
      for (const auto& e : report.violations) present |= e.detail == detail;
      if (!present) report.violations.push_back({"", detail});
    }
  };
  expect("theta_mult2_mu2_below", 3,
         "trees with theta multiplicity 2 and mu_2 < theta");
  expect("tstar44_seen", 1, "copies of T*(4,4) among them");
  expect("class_x2_4x_1", 1, "trees with class x^2-4x+1 of multiplicity 2");
  expect("class_cubic", 1, "trees with class x^3-5x^2+6x-1 of multiplicity 2");
  expect("theta_spider_pattern", 1, "trees with m(theta) = 2 and mu_2 = theta");
}

}  // namespace

VerificationReport merge_reports(const std::vector<VerificationReport>& parts) {
  if (parts.empty())
    fail(ErrorKind::kInvalidArgument, "cannot merge zero reports");
  VerificationReport merged;
  merged.claim = parts[0].claim;
  merged.scope = parts[0].scope.substr(0, parts[0].scope.find(" [shard"));
  for (const VerificationReport& part : parts) {
    if (part.claim != merged.claim)
      fail(ErrorKind::kInvalidArgument, "cannot merge different claims");
    merged.checked += part.checked;
    merged.witnesses.insert(merged.witnesses.end(), part.witnesses.begin(),
                            part.witnesses.end());
    merged.violations.insert(merged.violations.end(), part.violations.begin(),
                             part.violations.end());
    for (const std::string& note : part.notes)
      if (std::find(merged.notes.begin(), merged.notes.end(), note) ==
          merged.notes.end())
        merged.notes.push_back(note);
    for (const auto& [key, value] : part.counters) {
      if (key == "order")
        merged.counters[key] = std::max(merged.counters[key], value);
      else
        merged.counters[key] += value;
    }
    merged.elapsed_seconds += part.elapsed_seconds;
  }
  sort_entries(merged.witnesses);
  sort_entries(merged.violations);
  if (merged.claim == "properties") finalize_property_suite(merged);
  if (merged.claim == "counterexamples10") finalize_counterexamples(merged);
  sort_entries(merged.violations);
  return merged;
}

VerificationReport verify_spider_spectra(int s_max) {
  if (s_max < 2) fail(ErrorKind::kPrecondition, "spider sweep needs s_max >= 2");
  Timer timer;
  VerificationReport report;
  report.claim = "spider-spectra";
  report.scope = "spiders T(s,k), 1 <= k <= s <= " + std::to_string(s_max);
  for (int s = 1; s <= s_max; ++s) {
    for (int k = 1; k <= s; ++k) {
      const Tree t = spider(s, k);
      const std::string code = canonical_code(t);
      const std::string name = spider_name({s, k});
      ++report.checked;
      const IntPoly cp = charpoly(laplacian(t));
      const IntPoly expected = spider_charpoly_closed_form(s, k);
      if (cp != expected) {
        report.violations.push_back(
            {code, name + ": characteristic polynomial differs from closed form"});
        continue;
      }
      const FactoredSpectrum spec = spectrum(t);
      const int m_theta = class_multiplicity(spec, THETA_POLY());
      if (m_theta != (k >= 2 ? k - 1 : 0)) {
        report.violations.push_back(
            {code, name + ": theta multiplicity " + std::to_string(m_theta) +
                       ", expected " + std::to_string(k >= 2 ? k - 1 : 0)});
        continue;
      }
      if (k < s) {
        const int m_one = class_multiplicity(spec, one_poly());
        if (m_one != s - k - 1) {
          report.violations.push_back(
              {code, name + ": m(1) = " + std::to_string(m_one) +
                         ", expected " + std::to_string(s - k - 1)});
          continue;
        }
      } else if (k >= 2 && class_multiplicity(spec, one_poly()) != 0) {
        report.violations.push_back({code, name + ": unexpected eigenvalue 1"});
        continue;
      }
      if (k >= 2) {
        const auto mu2 = algebraic_connectivity(spec);
        const auto mun1 = second_largest(spec);
        if (compare_roots(spec.root(mu2), theta_root()) != 0) {
          report.violations.push_back({code, name + ": mu_2 != theta"});
          continue;
        }
        if (compare_roots(spec.root(mun1), theta_bar_root()) != 0) {
          report.violations.push_back({code, name + ": mu_{n-1} != theta-bar"});
          continue;
        }
        report.witnesses.push_back(
            {code, name + ": mu_2 = theta, mu_{n-1} = theta-bar, m(theta) = " +
                       std::to_string(k - 1)});
      }
      if (k == s - 1) {
        // lambda_2 = 2 and the outer pair comes from x^2-(s+2)x+s.
        const IntPoly two({Int(-2), Int(1)});
        const IntPoly quad({Int(s), Int(-(s + 2)), Int(1)});
        if (class_multiplicity(spec, two) != 1 ||
            class_multiplicity(spec, quad) != 1) {
          report.violations.push_back(
              {code, name + ": k = s-1 special form violated"});
          continue;
        }
      }
    }
  }
  finish(report, timer);
  return report;
}

VerificationReport verify_h_tree(int s_max, int t_max) {
  if (s_max < 1 || t_max < 1)
    fail(ErrorKind::kPrecondition, "h-tree sweep needs positive bounds");
  Timer timer;
  VerificationReport report;
  report.claim = "h-tree";
  report.scope = "H(s,2,t), s <= " + std::to_string(s_max) +
                 ", t <= " + std::to_string(t_max);
  const IntPoly x = IntPoly::x();
  for (int s = 1; s <= s_max; ++s) {
    for (int tt = 1; tt <= t_max; ++tt) {
      const Tree t = h_tree(s, 2, tt);
      const int n = s + tt + 2;
      ++report.checked;
      const IntPoly cubic(
          {Int(-n), Int(2 * n + s * tt + 1), Int(-(n + 2)), Int(1)});
      const IntPoly expected = x * pow(one_poly(), n - 4) * cubic;
      if (charpoly(laplacian(t)) != expected) {
        report.violations.push_back(
            {canonical_code(t), "H(" + std::to_string(s) + ",2," +
                                    std::to_string(tt) +
                                    "): charpoly differs from closed form"});
      } else if (s == 2 && tt == 2) {
        report.witnesses.push_back(
            {canonical_code(t), "H(2,2,2): cubic factor " + to_string(cubic)});
      }
    }
  }
  finish(report, timer);
  return report;
}

VerificationReport verify_bound_km2(int n, Shard shard) {
  if (n < 6) fail(ErrorKind::kPrecondition, "km2 requires order n >= 6");
  Timer timer;
  VerificationReport report;
  report.claim = "km2";
  report.scope = "all trees of order " + std::to_string(n) + shard_suffix(shard);
  const bool odd = n % 2 == 1;
  const std::string expected_code =
      odd ? canonical_code(spider((n - 1) / 2, (n - 1) / 2)) : "";
  sweep_order(n, shard, report, [&](const Tree& t, const std::string& code) {
    const FactoredSpectrum spec = spectrum(t);
    bool attains = false;
    for (const EigenClass& c : spec.classes()) {
      if (c.min_poly == one_poly()) continue;
      if (2 * c.multiplicity > n - 3) {
        report.violations.push_back(
            {code, "multiplicity " + std::to_string(c.multiplicity) +
                       " of class " + to_string(c.min_poly) +
                       " exceeds (n-3)/2"});
      } else if (2 * c.multiplicity == n - 3) {
        attains = true;
        if (code != expected_code) {
          report.violations.push_back(
              {code, "equality tree is not T((n-1)/2,(n-1)/2)"});
        } else if (!(c.min_poly == THETA_POLY())) {
          report.violations.push_back(
              {code, "equality class is " + to_string(c.min_poly) +
                         ", expected x^2-3x+1"});
        } else {
          report.witnesses.push_back(
              {code, "m = (n-3)/2 attained with class x^2-3x+1"});
        }
      }
    }
    if (code == expected_code && !attains)
      report.violations.push_back(
          {code, "T((n-1)/2,(n-1)/2) does not attain (n-3)/2"});
  });
  finish(report, timer);
  return report;
}

namespace {

VerificationReport verify_unique_multiplicity(const std::string& claim, int n,
                                              int target, int s, int k,
                                              Shard shard) {
  Timer timer;
  VerificationReport report;
  report.claim = claim;
  report.scope = "all trees of order " + std::to_string(n) + shard_suffix(shard);
  const std::string expected_code = canonical_code(spider(s, k));
  const std::string expected_name = spider_name({s, k});
  sweep_order(n, shard, report, [&](const Tree& t, const std::string& code) {
    const FactoredSpectrum spec = spectrum(t);
    bool attains = false;
    for (const EigenClass& c : spec.classes()) {
      if (c.min_poly == one_poly()) continue;
      if (c.multiplicity != target) continue;
      attains = true;
      if (code != expected_code) {
        report.violations.push_back(
            {code, "tree with a class of multiplicity " +
                       std::to_string(target) + " is not " + expected_name});
      } else if (!(c.min_poly == THETA_POLY())) {
        report.violations.push_back(
            {code, "class of multiplicity " + std::to_string(target) +
                       " is " + to_string(c.min_poly) + ", expected x^2-3x+1"});
      } else {
        report.witnesses.push_back(
            {code, expected_name + " attains multiplicity " +
                       std::to_string(target) + " with class x^2-3x+1"});
      }
    }
    if (code == expected_code && !attains)
      report.violations.push_back(
          {code, expected_name + " does not attain multiplicity " +
                     std::to_string(target)});
  });
  finish(report, timer);
  return report;
}

}  // namespace

VerificationReport verify_thm_half_minus_2(int n, Shard shard) {
  if (n < 8 || n % 2 != 0)
    fail(ErrorKind::kPrecondition, "requires even order n >= 8");
  return verify_unique_multiplicity("uniq-even", n, n / 2 - 2, n / 2, n / 2 - 1,
                                    shard);
}

VerificationReport verify_thm_halfm1_minus_2(int n, Shard shard) {
  if (n < 9 || n % 2 != 1)
    fail(ErrorKind::kPrecondition, "requires odd order n >= 9");
  return verify_unique_multiplicity("uniq-odd", n, (n - 1) / 2 - 2, (n + 1) / 2,
                                    (n - 3) / 2, shard);
}

VerificationReport verify_counterexamples_10(Shard shard) {
  Timer timer;
  VerificationReport report;
  report.claim = "counterexamples10";
  report.scope = "all trees of order 10" + shard_suffix(shard);
  const int n = 10;
  const std::string tstar_code = canonical_code(t_star(4, 4));
  const std::string spider_code = canonical_code(spider(6, 3));
  const IntPoly quad({Int(1), Int(-4), Int(1)});        // x^2-4x+1
  const IntPoly cubic({Int(-1), Int(6), Int(-5), Int(1)});  // x^3-5x^2+6x-1
  sweep_order(n, shard, report, [&](const Tree& t, const std::string& code) {
    const FactoredSpectrum spec = spectrum(t);
    const auto mu2 = algebraic_connectivity(spec);
    for (const EigenClass& c : spec.classes()) {
      if (c.min_poly.degree() == 1) continue;  // rational eigenvalues
      if (c.multiplicity != 2) continue;
      if (c.min_poly == THETA_POLY()) {
        const int cmp = compare_roots(spec.root(mu2), theta_root());
        if (cmp == 0) {
          ++report.counters["theta_spider_pattern"];
          if (code != spider_code)
            report.violations.push_back(
                {code, "m(theta) = 2 with mu_2 = theta is not T(6,3)"});
        } else if (cmp < 0) {
          ++report.counters["theta_mult2_mu2_below"];
          const bool is_tstar = code == tstar_code;
          if (is_tstar) ++report.counters["tstar44_seen"];
          report.witnesses.push_back(
              {code, std::string("theta multiplicity 2 with mu_2 < theta") +
                         (is_tstar ? " (isomorphic to T*(4,4))" : "")});
        } else {
          report.violations.push_back({code, "mu_2 > theta with m(theta) = 2"});
        }
      } else if (c.min_poly == quad) {
        ++report.counters["class_x2_4x_1"];
        report.witnesses.push_back(
            {code, "class x^2-4x+1 (eigenvalues 2 +- sqrt(3)) with multiplicity 2"});
      } else if (c.min_poly == cubic) {
        ++report.counters["class_cubic"];
        report.witnesses.push_back(
            {code, "class x^3-5x^2+6x-1 with multiplicity 2"});
      } else {
        report.violations.push_back(
            {code, "unexpected class " + to_string(c.min_poly) +
                       " with multiplicity 2"});
      }
    }
  });
  if (shard.count == 1) finalize_counterexamples(report);
  finish(report, timer);
  return report;
}

VerificationReport verify_kho2(int n, Shard shard) {
  if (n < 2) fail(ErrorKind::kPrecondition, "kho2 needs order n >= 2");
  Timer timer;
  VerificationReport report;
  report.claim = "kho2";
  report.scope = "all trees of order " + std::to_string(n) + shard_suffix(shard);
  const auto spiders = spider_codes(n);
  const std::string h222 = n == 6 ? canonical_code(h_tree(2, 2, 2)) : "";
  const std::string h322 = n == 7 ? canonical_code(h_tree(3, 2, 2)) : "";
  sweep_order(n, shard, report, [&](const Tree& t, const std::string& code) {
    const FactoredSpectrum spec = spectrum(t);
    const auto mu2 = algebraic_connectivity(spec);
    const int cmp = compare_roots(spec.root(mu2), theta_root());
    const auto spider_it = spiders.find(code);
    const bool is_spider = spider_it != spiders.end();
    const bool is_wide_spider = is_spider && spider_it->second.second >= 2;
    const bool is_star = is_star_tree(t);
    const bool named_strict = is_star || (is_spider && !is_wide_spider) ||
                              (!h222.empty() && code == h222) ||
                              (!h322.empty() && code == h322);
    if (cmp > 0) {
      if (!named_strict && !is_wide_spider) {
        report.violations.push_back(
            {code, "mu_2 > theta outside star/spider/H(2,2,2)/H(3,2,2)"});
      } else if (is_wide_spider) {
        report.violations.push_back(
            {code, "spider with k >= 2 has mu_2 > theta"});
      } else {
        report.witnesses.push_back({code, "mu_2 > theta (strict member)"});
      }
    } else if (cmp == 0) {
      if (is_wide_spider) {
        report.witnesses.push_back(
            {code, "mu_2 = theta at " + spider_name(spider_it->second)});
      } else {
        report.violations.push_back(
            {code, "mu_2 = theta outside spiders with k >= 2"});
      }
    } else {
      if (is_wide_spider)
        report.violations.push_back(
            {code, "spider with k >= 2 has mu_2 < theta"});
      if (named_strict)
        report.violations.push_back(
            {code, "named strict member has mu_2 < theta"});
    }
  });
  finish(report, timer);
  return report;
}

VerificationReport verify_kho_trees(int n, Shard shard) {
  if (n < 2) fail(ErrorKind::kPrecondition, "kho needs order n >= 2");
  Timer timer;
  VerificationReport report;
  report.claim = "kho";
  report.scope = "all trees of order " + std::to_string(n) + shard_suffix(shard);
  const auto spiders = spider_codes(n);
  sweep_order(n, shard, report, [&](const Tree& t, const std::string& code) {
    const FactoredSpectrum spec = spectrum(t);
    const auto mun1 = second_largest(spec);
    const int cmp = compare_roots(spec.root(mun1), theta_bar_root());
    const auto spider_it = spiders.find(code);
    const bool is_spider = spider_it != spiders.end();
    const bool is_wide_spider = is_spider && spider_it->second.second >= 2;
    if (cmp == 0) {
      if (is_wide_spider) {
        report.witnesses.push_back(
            {code, "mu_{n-1} = theta-bar at " + spider_name(spider_it->second)});
      } else {
        report.violations.push_back(
            {code, "mu_{n-1} = theta-bar outside spiders with k >= 2"});
      }
    } else if (is_wide_spider) {
      report.violations.push_back(
          {code, "spider with k >= 2 has mu_{n-1} != theta-bar"});
    }
    if (cmp < 0 && !is_star_tree(t) && !is_spider) {
      report.violations.push_back(
          {code, "mu_{n-1} < theta-bar outside stars and spiders"});
    }
    if (cmp <= 0) ++report.counters["mu_n1_at_most_theta_bar"];
  });
  finish(report, timer);
  return report;
}

VerificationReport verify_tstar(int s_max) {
  if (s_max < 2) fail(ErrorKind::kPrecondition, "t_star sweep needs s_max >= 2");
  Timer timer;
  VerificationReport report;
  report.claim = "tstar";
  report.scope = "T*(s,k), 2 <= k <= s <= " + std::to_string(s_max);
  for (int s = 2; s <= s_max; ++s) {
    for (int k = 2; k <= s; ++k) {
      const Tree t = t_star(s, k);
      const std::string code = canonical_code(t);
      const std::string name =
          "T*(" + std::to_string(s) + "," + std::to_string(k) + ")";
      ++report.checked;
      const int m = multiplicity_class(t, THETA_POLY());
      if (m != k - 2) {
        report.violations.push_back(
            {code, name + ": theta multiplicity " + std::to_string(m) +
                       ", expected " + std::to_string(k - 2)});
        continue;
      }
      const FactoredSpectrum spec = spectrum(t);
      const auto mu2 = algebraic_connectivity(spec);
      if (compare_roots(spec.root(mu2), theta_root()) >= 0) {
        report.violations.push_back({code, name + ": mu_2 is not below theta"});
        continue;
      }
      report.witnesses.push_back(
          {code, name + ": m(theta) = " + std::to_string(k - 2) +
                     ", mu_2 < theta"});
    }
  }
  finish(report, timer);
  return report;
}

VerificationReport verify_thm_n2k_witness(int j, int n, int sweep_bound) {
  if (j < 2) fail(ErrorKind::kPrecondition, "requires j >= 2");
  const int k = n / 2 - j + 1;
  const int s = (n + 1) / 2 + j - 2;
  if (k < 2 || s < k)
    fail(ErrorKind::kPrecondition,
         "no spider witness for j = " + std::to_string(j) +
             ", n = " + std::to_string(n));
  Timer timer;
  VerificationReport report;
  report.claim = "n2k";
  report.scope = "j = " + std::to_string(j) + ", n = " + std::to_string(n);
  const int target = n / 2 - j;
  if (n <= 10 * j)
    report.notes.push_back(
        "theorem precondition n > 10j not met; witness direction checked anyway");
  const Tree t = spider(s, k);
  const std::string code = canonical_code(t);
  const std::string name = spider_name({s, k});
  ++report.checked;
  const FactoredSpectrum spec = spectrum(t);
  const auto mu2 = algebraic_connectivity(spec);
  const bool mu2_theta = compare_roots(spec.root(mu2), theta_root()) == 0;
  const int m = spec.multiplicity(mu2);
  if (!mu2_theta) {
    report.violations.push_back({code, name + ": mu_2 != theta"});
  } else if (m != target) {
    report.violations.push_back(
        {code, name + ": m(mu_2) = " + std::to_string(m) + ", expected " +
                   std::to_string(target)});
  } else {
    report.witnesses.push_back(
        {code, name + ": m(mu_2) = " + std::to_string(target) +
                   " with mu_2 = theta"});
  }
  if (j >= 3) {
    const int s_star = n % 2 == 0 ? n / 2 + j - 4 : (n - 1) / 2 + j - 3;
    const int k_star = n - 2 - s_star;
    if (k_star >= 2 && s_star >= k_star) {
      const Tree ts = t_star(s_star, k_star);
      ++report.checked;
      const int m_star = multiplicity_class(ts, THETA_POLY());
      const std::string ts_name =
          "T*(" + std::to_string(s_star) + "," + std::to_string(k_star) + ")";
      if (m_star != target) {
        report.violations.push_back(
            {canonical_code(ts), ts_name + ": m(theta) = " +
                                     std::to_string(m_star) + ", expected " +
                                     std::to_string(target)});
      } else {
        report.witnesses.push_back(
            {canonical_code(ts),
             ts_name + ": non-spider tree with m(theta) = " +
                 std::to_string(target) + " (restriction to mu_2 is necessary)"});
      }
    }
  }
  if (n > 10 * j && n <= sweep_bound) {
    Shard whole;
    sweep_order(n, whole, report, [&](const Tree& u, const std::string& ucode) {
      const FactoredSpectrum uspec = spectrum(u);
      const auto umu2 = algebraic_connectivity(uspec);
      const bool attains = uspec.multiplicity(umu2) == target;
      if (attains && ucode != code)
        report.violations.push_back(
            {ucode, "m(mu_2) = " + std::to_string(target) + " outside " + name});
      if (!attains && ucode == code)
        report.violations.push_back(
            {ucode, name + " fails to attain m(mu_2) = " + std::to_string(target)});
    });
  } else if (n > 10 * j) {
    report.notes.push_back("converse not swept (scale)");
  }
  finish(report, timer);
  return report;
}

VerificationReport verify_property_suite(int n, Shard shard) {
  if (n < 2) fail(ErrorKind::kPrecondition, "property suite needs order n >= 2");
  Timer timer;
  VerificationReport report;
  report.claim = "properties";
  report.scope = "all trees of order " + std::to_string(n) + shard_suffix(shard);
  report.counters["order"] = n;
  const IntPoly x_poly = IntPoly::x();
  sweep_order(n, shard, report, [&](const Tree& t, const std::string& code) {
    const FactoredSpectrum spec = spectrum(t);
    const TreeStats st = stats(t);
    auto violation = [&](const std::string& what) {
      report.violations.push_back({code, what});
    };

    // Trace, power-sum and product identities from the coefficients.
    IntPoly cp = IntPoly::constant(1);
    for (const EigenClass& c : spec.classes())
      cp = cp * pow(c.min_poly, c.multiplicity);
    ++report.counters["coefficient_identities"];
    if (cp.coeff(0) != 0) violation("constant coefficient nonzero");
    Int sum_deg_sq = 0;
    for (int d : st.degree_sequence) sum_deg_sq += Int(d) * d;
    if (n >= 2 && -cp.coeff(n - 1) != 2 * (n - 1))
      violation("eigenvalue sum differs from 2(n-1)");
    const Int mu_sq = cp.coeff(n - 1) * cp.coeff(n - 1) - 2 * cp.coeff(n - 2);
    if (n >= 2 && mu_sq != sum_deg_sq + 2 * (n - 1))
      violation("sum of squared eigenvalues differs from sum d^2 + 2m");
    const Int product_sign = (n - 1) % 2 == 0 ? Int(n) : Int(-n);
    if (cp.coeff(1) != product_sign)
      violation("product of nonzero eigenvalues differs from n");

    const int m1 = class_multiplicity(spec, one_poly());
    ++report.counters["pendant_lower_bound"];
    if (m1 < st.pendant_count - st.quasipendant_count)
      violation("m(1) < p - q");
    ++report.counters["m1_membership"];
    if (m1 == n - 3) violation("m(1) = n - 3 occurs");
    if (!((m1 >= 0 && m1 <= n - 4) || m1 == n - 2))
      violation("m(1) outside the admissible set");
    ++report.counters["m1=" + std::to_string(m1)];

    ++report.counters["pendant_upper_bound"];
    for (const EigenClass& c : spec.classes())
      if (c.multiplicity > st.pendant_count - 1)
        violation("class multiplicity exceeds p - 1");

    ++report.counters["conjugate_product"];
    for (const EigenClass& c : spec.classes())
      if (c.multiplicity > 1 && abs(c.min_poly.coeff(0)) != 1)
        violation("repeated class without unit constant term");

    ++report.counters["integer_eigenvalues"];
    for (const EigenClass& c : spec.classes()) {
      if (c.min_poly.degree() != 1) continue;
      // Monic charpoly: rational eigenvalues are integers c with class x - c.
      const Int value = -c.min_poly.coeff(0);
      if (value >= 2) {
        if (c.multiplicity != 1) violation("integer eigenvalue >= 2 repeated");
        if (Int(n) % value != 0) violation("integer eigenvalue does not divide n");
      }
    }

    ++report.counters["diameter_bound"];
    if (st.diameter > spec.distinct_count() - 1)
      violation("diameter exceeds distinct eigenvalue count - 1");

    ++report.counters["degree_bounds"];
    const auto mu_n = spec.value_at(n - 1);
    if (compare_root_rational(spec.root(mu_n), Rat(st.max_degree + 1)) < 0)
      violation("mu_n < Delta + 1");
    if (n >= 3) {
      const auto mu_n1 = second_largest(spec);
      if (compare_root_rational(spec.root(mu_n1), Rat(st.degree_sequence[1])) < 0)
        violation("mu_{n-1} < d_2");
    }

    if (n >= 3) {
      ++report.counters["mu2_max_degree_bound"];
      const auto mu2 = algebraic_connectivity(spec);
      if (spec.multiplicity(mu2) > st.max_degree - 1)
        violation("m(mu_2) > Delta - 1");
      if (n >= 6 && !is_star_tree(t) && 2 * spec.multiplicity(mu2) > n - 3)
        violation("m(mu_2) > (n-3)/2 for a non-star");
    }
    if (m1 == n - 2 && is_star_tree(t))
      report.witnesses.push_back({code, "star attains m(1) = n - 2"});
  });
  if (shard.count == 1) finalize_property_suite(report);
  finish(report, timer);
  return report;
}

VerificationReport verify_interlacing(int n, int samples, unsigned long seed) {
  if (n < 3) fail(ErrorKind::kPrecondition, "interlacing needs order n >= 3");
  if (samples < 1) fail(ErrorKind::kPrecondition, "needs at least one sample");
  Timer timer;
  VerificationReport report;
  report.claim = "interlacing";
  report.scope = "random trees of order " + std::to_string(n) + ", " +
                 std::to_string(samples) + " samples, seed " +
                 std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    std::vector<int> pruefer(static_cast<size_t>(n - 2));
    for (int& v : pruefer) v = static_cast<int>(rng() % static_cast<unsigned long>(n));
    const Tree t = tree_from_pruefer(pruefer);
    const std::string code = canonical_code(t);
    const std::vector<RootInterval> outer = spectrum(t).expand();

    // Pendant deletion: full interlacing.
    std::vector<int> pendants;
    for (int v = 0; v < n; ++v)
      if (t.degree(v) == 1) pendants.push_back(v);
    const int pv = pendants[static_cast<size_t>(rng() % pendants.size())];
    const Tree reduced = delete_pendant(t, pv);
    ++report.counters["pendant_deletions"];
    if (!interlaces(spectrum(reduced).expand(), outer))
      report.violations.push_back(
          {code, "pendant deletion at vertex " + std::to_string(pv) +
                     " breaks interlacing"});

    // Edge deletion: the n-1 largest eigenvalues interlace.
    const Edge e = t.edges()[static_cast<size_t>(rng() % t.edges().size())];
    const auto [left, right] = delete_edge(t, e);
    std::vector<RootInterval> forest;
    {
      const std::vector<RootInterval> a = spectrum(left).expand();
      const std::vector<RootInterval> b = spectrum(right).expand();
      forest.reserve(a.size() + b.size());
      size_t ia = 0, ib = 0;
      while (ia < a.size() && ib < b.size()) {
        if (compare_roots(a[ia], b[ib]) <= 0)
          forest.push_back(a[ia++]);
        else
          forest.push_back(b[ib++]);
      }
      while (ia < a.size()) forest.push_back(a[ia++]);
      while (ib < b.size()) forest.push_back(b[ib++]);
    }
    forest.erase(forest.begin());  // drop the smallest; keep the n-1 largest
    ++report.counters["edge_deletions"];
    if (!interlaces(forest, outer))
      report.violations.push_back(
          {code, "edge deletion at (" + std::to_string(e.first) + "," +
                     std::to_string(e.second) + ") breaks interlacing"});
    ++report.checked;
  }
  finish(report, timer);
  return report;
}

}  // namespace spectree
