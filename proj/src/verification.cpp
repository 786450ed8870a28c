#include "weylbool/verification.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "weylbool/boolean.hpp"
#include "weylbool/pattern.hpp"
#include "weylbool/permutation.hpp"
#include "weylbool/sub_root_system.hpp"

namespace weylbool {

void VerificationReport::fail(std::string description) {
  ++failure_count;
  if (failures.size() < kMaxListedFailures) failures.push_back(std::move(description));
}

nlohmann::json VerificationReport::to_json(bool with_elapsed) const {
  nlohmann::json j;
  j["claim"] = claim_id;
  j["system"] = system;
  j["total_cases"] = total_cases;
  j["passed"] = passed();
  j["gated"] = gated;
  j["failure_count"] = failure_count;
  j["failures"] = failures;
  j["tallies"] = tallies;
  j["details"] = details.is_null() ? nlohmann::json::object() : details;
  if (with_elapsed) j["elapsed_seconds"] = elapsed_seconds;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  const bool skipped = details.is_object() && details.contains("skipped");
  os << (skipped ? "SKIP" : passed() ? "PASS" : (gated ? "FAIL" : "INFO")) << "  " << std::left << std::setw(20) << claim_id << ' '
     << std::setw(5) << (system.empty() ? "-" : system) << ' ' << std::right << std::setw(9) << total_cases
     << " cases";
  if (!tallies.empty()) {
    os << "  (";
    bool first = true;
    for (const auto& [k, v] : tallies) {
      os << (first ? "" : ", ") << k << '=' << v;
      first = false;
    }
    os << ')';
  }
  os << "  " << std::fixed << std::setprecision(2) << elapsed_seconds << "s";
  if (skipped) os << "\n    " << details["skipped"].get<std::string>();
  if (failure_count) {
    os << "\n    " << failure_count << " failure(s)";
    for (const auto& f : failures) os << "\n    " << f;
  }
  return os.str();
}

bool all_gated_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return !r.gated || r.passed(); });
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string system_name(const RootSystem& rs) { return rs.label(); }

std::string element_ref(const WeylElement& w) {
  return w.system().label() + " \"" + format_word(w.canonical_word()) + "\"";
}

std::vector<std::string> root_strings(const RootSystem& rs, const RootSet& set) {
  std::vector<std::string> out;
  set.for_each([&](int i) { out.push_back(rs.root(i).to_string()); });
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

// Runs body(i, local) for i in [0, n) split round-robin over threads, then
// merges the per-thread results in index order.
template <typename Local, typename Body>
std::vector<Local> parallel_chunks(std::size_t n, int threads, Body body) {
  threads = static_cast<int>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, n)));
  std::vector<Local> locals(threads);
  auto work = [&](int t) {
    for (std::size_t i = t; i < n; i += threads) body(i, locals[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return locals;
}

}  // namespace

VerificationReport verify_root_decomposition(const RootSystemPtr& rsp) {
  Stopwatch clock;
  const RootSystem& rs = *rsp;
  VerificationReport rep;
  rep.claim_id = "root-decomposition";
  rep.system = system_name(rs);
  if (!rs.is_irreducible()) throw std::invalid_argument(rs.label() + " is not irreducible");

  const int np = rs.num_positive();
  auto pos = [&](const Root& r) { return r.is_positive() ? rs.index_of(r) : std::nullopt; };
  nlohmann::json pairs = nlohmann::json::array();
  rep.tallies = {{"case1", 0}, {"case2", 0}, {"case3", 0}};

  for (int a = 0; a < rs.rank(); ++a) {
    const Root& alpha = rs.simple_root(a);
    for (int b = 0; b < np; ++b) {
      if (b == a) continue;
      const Root& beta = rs.root(b);
      const Root sb = rs.reflect(a, beta);
      if (!sb.is_positive() || sb[a] <= 0) continue;
      ++rep.total_cases;
      int fired = 0;
      std::vector<int> gammas;
      if (rs.sum_index(b, a) >= 0) {
        fired = 1;
      }
      for (int g1 = 0; !fired && g1 < np; ++g1) {
        if (rs.sum_index(a, g1) < 0) continue;
        auto g2 = pos(beta - alpha - rs.root(g1));
        if (!g2 || *g2 < g1 || rs.sum_index(a, *g2) < 0) continue;
        fired = 2;
        gammas = {g1, *g2};
      }
      if (!fired && pos(beta - alpha)) {
        for (int g1 = 0; !fired && g1 < np; ++g1) {
          if (rs.sum_index(a, g1) < 0) continue;
          for (int g2 = g1; !fired && g2 < np; ++g2) {
            if (rs.sum_index(a, g2) < 0) continue;
            auto g3 = pos(beta - alpha * 2 - rs.root(g1) - rs.root(g2));
            if (!g3 || *g3 < g2 || rs.sum_index(a, *g3) < 0) continue;
            // alpha + gamma_i + gamma_j, where gamma_i + gamma_j itself need not be a root.
            auto triple = [&](int i, int j) { return rs.sum_index(rs.sum_index(a, i), j) >= 0; };
            if (!triple(g1, g2) || !triple(g1, *g3) || !triple(g2, *g3)) continue;
            fired = 3;
            gammas = {g1, g2, *g3};
          }
        }
      }
      nlohmann::json entry{{"alpha", a + 1}, {"beta", beta.to_string()}, {"case", fired}};
      if (!gammas.empty()) {
        std::vector<std::string> gs;
        for (int g : gammas) gs.push_back(rs.root(g).to_string());
        entry["gammas"] = gs;
      }
      pairs.push_back(std::move(entry));
      if (fired) {
        ++rep.tallies["case" + std::to_string(fired)];
      } else {
        rep.fail(rs.label() + ": alpha_" + std::to_string(a + 1) + ", beta = " + beta.to_string() +
                 " admits no decomposition");
      }
    }
  }
  rep.details["pairs"] = std::move(pairs);
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

VerificationReport verify_boolean_equivalence(const RootSystemPtr& rs, const VerifyOptions& opt) {
  Stopwatch clock;
  VerificationReport rep;
  rep.claim_id = "boolean-equivalence";
  rep.system = system_name(*rs);
  const auto& type = rs->cartan_type();
  if (type && type->weyl_order() > kMaxEnumeratedGroup) {
    rep.gated = false;
    rep.details["skipped"] = "|W| = " + std::to_string(type->weyl_order()) + " exceeds the enumeration bound " +
                             std::to_string(kMaxEnumeratedGroup);
    return rep;
  }
  const auto elements = enumerate_group(rs, kMaxEnumeratedGroup);

  struct Local {
    std::unique_ptr<BooleanAnalyzer> analyzer;
    std::map<std::string, std::uint64_t> tallies;
    std::vector<std::pair<std::size_t, std::string>> failures;
  };
  auto locals = parallel_chunks<Local>(elements.size(), opt.threads, [&](std::size_t i, Local& loc) {
    if (!loc.analyzer) loc.analyzer = std::make_unique<BooleanAnalyzer>();
    const WeylElement& w = elements[i];
    const BooleanVerdict v = loc.analyzer->verdict(w, opt.interval_bound);
    ++loc.tallies[v.via_word ? "boolean" : "non_boolean"];
    if (v.via_interval) ++loc.tallies["interval_checked"];
    if (v.consistent()) return;
    std::ostringstream os;
    os << element_ref(w) << ": word=" << v.via_word << " interval="
       << (v.via_interval ? std::to_string(*v.via_interval) : "-") << " bp=" << v.via_bp;
    if (v.bp_witness) os << " (contains " << v.bp_witness->literal() << ")";
    os << " linear=" << v.via_linear;
    if (v.linear_witness) os << " (contains " << v.linear_witness->literal() << ")";
    loc.failures.emplace_back(i, os.str());
  });

  std::vector<std::pair<std::size_t, std::string>> failures;
  for (auto& loc : locals) {
    for (const auto& [k, v] : loc.tallies) rep.tallies[k] += v;
    failures.insert(failures.end(), loc.failures.begin(), loc.failures.end());
  }
  std::sort(failures.begin(), failures.end());
  for (auto& f : failures) rep.fail(std::move(f.second));
  rep.total_cases = elements.size();
  rep.details["boolean_count"] = rep.tallies["boolean"];
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

namespace {

struct ElementClaim {
  const char* literal;
  std::vector<Root> inversions;  // empty: not asserted
  // Generators of a linear s1s2s1 from A2; empty means the element must avoid it.
  std::vector<Root> generated_at;
  const char* pattern = "A2:1 2 1";
};

std::vector<ElementClaim> small_rank_claims() {
  return {
      {"A2:1 2 1", {Root{1, 0}, Root{0, 1}, Root{1, 1}}, {Root{1, 0}, Root{0, 1}}},
      {"B2:1 2 1", {Root{1, 0}, Root{1, 1}, Root{1, 2}}, {}},
      {"B2:2 1 2", {Root{0, 1}, Root{1, 1}, Root{1, 2}}, {Root{0, 1}, Root{1, 1}}},
      {"B2:1 2 1 2", {Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{1, 2}}, {Root{1, 0}, Root{0, 1}}},
      {"G2:1 2 1", {Root{2, 3}, Root{1, 1}, Root{1, 0}}, {}},
      {"G2:2 1 2", {Root{1, 2}, Root{1, 3}, Root{0, 1}}, {Root{1, 2}, Root{0, 1}}},
      {"G2:1 2 1 2", {Root{2, 3}, Root{1, 2}, Root{1, 3}, Root{0, 1}}, {Root{1, 2}, Root{0, 1}}},
      {"G2:2 1 2 1", {Root{1, 2}, Root{2, 3}, Root{1, 1}, Root{1, 0}}, {Root{1, 2}, Root{1, 1}}},
      {"G2:1 2 1 2 1", {Root{1, 0}, Root{1, 1}, Root{1, 2}, Root{1, 3}, Root{2, 3}}, {Root{1, 2}, Root{1, 1}}},
      {"G2:2 1 2 1 2", {Root{0, 1}, Root{1, 1}, Root{1, 2}, Root{1, 3}, Root{2, 3}}, {Root{1, 2}, Root{1, 1}}},
      {"G2:1 2 1 2 1 2", {Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{1, 2}, Root{1, 3}, Root{2, 3}}, {Root{1, 0}, Root{0, 1}}},
      // s1s2s1 in B2 contains s2s1s3s2 of A3 through alpha_2, alpha_1, alpha_2.
      {"B2:1 2 1", {}, {Root{0, 1}, Root{1, 0}, Root{0, 1}}, "A3:2 1 3 2"},
      {"G2:1 2 1", {}, {}, "A3:2 1 3 2"},
  };
}

void diff_sets(VerificationReport& rep, const char* name, const PatternSet& got,
               const std::vector<const char*>& expected) {
  PatternSet want;
  for (const char* lit : expected) want.insert(Pattern::parse(lit));
  ++rep.total_cases;
  std::vector<std::string> lits;
  for (const auto& p : got) lits.push_back(p.literal());
  rep.details[name] = lits;
  rep.tallies[std::string(name) + "_size"] = got.size();
  for (const auto& p : want)
    if (!got.contains(p.key())) rep.fail(std::string(name) + " is missing " + p.literal());
  for (const auto& p : got)
    if (!want.contains(p.key())) rep.fail(std::string(name) + " has unexpected " + p.literal());
}

}  // namespace

VerificationReport verify_pattern_sets() {
  Stopwatch clock;
  VerificationReport rep;
  rep.claim_id = "pattern-sets";
  BpMatcher matcher;
  const auto pi = linear_boolean_patterns();

  const PatternSet p1 = compute_P(pi[0], 2);
  const PatternSet p_pi2 = compute_P(pi[1], 3);
  const PatternSet p2 = quotient(reduce(p_pi2, matcher), p1, matcher);
  const PatternSet p_pi3 = compute_P(pi[2], 4);
  const PatternSet p3 = quotient(reduce(p_pi3, matcher), p1.unite(p_pi2), matcher);

  diff_sets(rep, "P1", p1,
            {"A2:1 2 1", "B2:2 1 2", "B2:1 2 1 2", "G2:2 1 2", "G2:1 2 1 2", "G2:2 1 2 1", "G2:1 2 1 2 1",
             "G2:2 1 2 1 2", "G2:1 2 1 2 1 2"});
  diff_sets(rep, "P2", p2, {"B2:1 2 1", "A3:2 1 3 2", "C3:2 1 3 2"});
  diff_sets(rep, "P3", p3, {"G2:1 2 1", "B3:2 1 3 2", "D4:2 1 3 4 2"});

  // The union is the forbidden BP list.
  ++rep.total_cases;
  const PatternSet all = p1.unite(p2).unite(p3);
  if (all.keys() != forbidden_bp_patterns().keys()) rep.fail("P1 u P2 u P3 differs from the forbidden BP list");
  rep.tallies["union_size"] = all.size();

  for (const auto& c : small_rank_claims()) {
    const Pattern el = Pattern::parse(c.literal);
    const Pattern target = Pattern::parse(c.pattern);
    const RootSystem& rs = el.system();
    if (!c.inversions.empty()) {
      ++rep.total_cases;
      std::set<std::string> want, got;
      for (const auto& r : c.inversions) want.insert(r.to_string());
      for (const auto& s : root_strings(rs, el.element().inversions())) got.insert(s);
      if (want != got) {
        rep.fail(std::string(c.literal) + " has inversions {" + join({got.begin(), got.end()}) + "}, expected {" +
                 join({want.begin(), want.end()}) + "}");
      }
    }
    ++rep.total_cases;
    if (c.generated_at.empty()) {
      if (auto emb = linear_contains(el.element(), target)) {
        std::vector<std::string> at;
        for (const auto& r : emb->image_roots(rs)) at.push_back(r.to_string());
        rep.fail(std::string(c.literal) + " contains linear " + c.pattern + " at " + join(at));
      }
    } else if (auto err = check_linear_embedding(el.element(), target, c.generated_at)) {
      rep.fail(std::string(c.literal) + " is not generated as linear " + c.pattern + ": " + *err);
    }
  }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

VerificationReport verify_pattern_inversions() {
  Stopwatch clock;
  VerificationReport rep;
  rep.claim_id = "pattern-inversions";
  const std::vector<std::pair<const char*, std::vector<Root>>> rows = {
      {"A2:1 2 1", {Root{1, 0}, Root{0, 1}, Root{1, 1}}},
      {"A3:2 1 3 2", {Root{0, 1, 0}, Root{1, 1, 0}, Root{0, 1, 1}, Root{1, 1, 1}}},
      {"B3:2 1 3 2", {Root{0, 1, 0}, Root{1, 1, 0}, Root{0, 1, 1}, Root{1, 2, 2}}},
      {"C3:2 1 3 2", {Root{0, 1, 0}, Root{1, 1, 0}, Root{0, 2, 1}, Root{1, 2, 1}}},
      {"D4:2 1 3 4 2", {Root{0, 1, 0, 0}, Root{1, 1, 0, 0}, Root{0, 1, 1, 0}, Root{0, 1, 0, 1}, Root{1, 2, 1, 1}}},
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lit, roots] : rows) {
    ++rep.total_cases;
    const Pattern p = Pattern::parse(lit);
    const auto got = root_strings(p.system(), p.element().inversions());
    std::set<std::string> want;
    for (const auto& x : roots) want.insert(x.to_string());
    if (std::set<std::string>(got.begin(), got.end()) != want || got.size() != roots.size()) {
      rep.fail(std::string(lit) + ": got {" + join(got) + "}, expected {" + join({want.begin(), want.end()}) + "}");
    }
    out.push_back({{"pattern", lit}, {"inversions", got}});
  }
  rep.details["rows"] = std::move(out);
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

namespace {

template <typename F>
void for_each_permutation(int n, F f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do f(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

std::string big_string(const BigInt& x) { return x.str(); }

}  // namespace

std::vector<VerificationReport> verify_permutation_claims(int n_patterns, int n_count, int n_refined, int threads) {
  std::vector<VerificationReport> out;

  {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "two-boolean-patterns";
    for (int n = 1; n <= n_patterns; ++n) {
      std::uint64_t agree = 0;
      for_each_permutation(n, [&](const Permutation& w) {
        ++rep.total_cases;
        const bool by_patterns = is_2boolean_patterns(w);
        if (by_patterns == is_k_boolean(w, 2)) {
          agree += by_patterns;
        } else {
          rep.fail(w.to_string() + ": pattern avoidance says " + (by_patterns ? "2-boolean" : "not 2-boolean") +
                   ", letter multiplicities disagree");
        }
      });
      rep.details["two_boolean_by_n"].push_back(agree);
    }
    rep.elapsed_seconds = clock.seconds();
    out.push_back(std::move(rep));
  }

  {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "two-boolean-series";
    const auto rec = gf_coefficients(n_count);
    const auto div = gf_series_division(n_count);
    std::vector<std::uint64_t> counts;
    for (int n = 0; n <= n_count; ++n) {
      ++rep.total_cases;
      const std::uint64_t f = count_2boolean(n, threads);
      counts.push_back(f);
      if (BigInt(f) != rec[n] || rec[n] != div[n]) {
        rep.fail("n = " + std::to_string(n) + ": count " + std::to_string(f) + ", recurrence " + big_string(rec[n]) +
                 ", series " + big_string(div[n]));
      }
    }
    const std::uint64_t stated[] = {1, 1, 2, 6, 21, 78, 297};
    for (int n = 0; n < 7 && n <= n_count; ++n) {
      ++rep.total_cases;
      if (counts[n] != stated[n]) rep.fail("f(" + std::to_string(n) + ") = " + std::to_string(counts[n]));
    }
    rep.details["f"] = counts;
    rep.elapsed_seconds = clock.seconds();
    out.push_back(std::move(rep));
  }

  {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "refined-identities";
    for (int n = 4; n <= n_refined; ++n) {
      const auto r = refined_counts(n, threads);
      auto check = [&](const char* name, std::uint64_t lhs, std::int64_t rhs) {
        ++rep.total_cases;
        if (static_cast<std::int64_t>(lhs) != rhs) {
          rep.fail("n = " + std::to_string(n) + ": " + name + " = " + std::to_string(lhs) + ", expected " +
                   std::to_string(rhs));
        }
      };
      check("f0", r.f0, r.rhs_f0);
      check("f1", r.f1, r.rhs_f1);
      check("f00", r.f00, r.rhs_f00);
      check("f01", r.f01, r.rhs_f01);
      check("f11", r.f11, r.rhs_f11);
      check("both_large", r.both_large, 0);
      rep.details["by_n"].push_back(
          {{"n", n}, {"f0", r.f0}, {"f1", r.f1}, {"f00", r.f00}, {"f01", r.f01}, {"f11", r.f11}});
    }
    rep.elapsed_seconds = clock.seconds();
    out.push_back(std::move(rep));
  }

  {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "non-pattern-closure";
    const auto u = Permutation::parse("436512"), v = Permutation::parse("4357612");
    const auto gu = max_letter_multiplicity(u);
    rep.total_cases = 4;
    if (gu[2] != 4) rep.fail("g_3(436512) = " + std::to_string(gu[2]));
    if (is_k_boolean(u, 3)) rep.fail("436512 reported 3-boolean");
    if (!is_k_boolean(v, 3)) rep.fail("4357612 reported not 3-boolean");
    if (!contains_pattern(v, u)) rep.fail("4357612 does not contain 436512");
    rep.details["g_436512"] = gu;
    rep.details["g_4357612"] = max_letter_multiplicity(v);
    rep.elapsed_seconds = clock.seconds();
    out.push_back(std::move(rep));
  }

  {
    Stopwatch clock;
    VerificationReport rep;
    rep.claim_id = "one-boolean";
    const auto p321 = Permutation::parse("321"), p3412 = Permutation::parse("3412");
    for (int n = 2; n <= n_patterns; ++n) {
      std::uint64_t boolean = 0;
      for_each_permutation(n, [&](const Permutation& w) {
        ++rep.total_cases;
        const bool word = is_boolean_word(to_weyl_element(w));
        const bool avoids = !contains_pattern(w, p321) && !contains_pattern(w, p3412);
        const bool one = is_k_boolean(w, 1);
        boolean += word;
        if (word != avoids || word != one) {
          rep.fail(w.to_string() + ": boolean=" + std::to_string(word) + " avoids321,3412=" + std::to_string(avoids) +
                   " 1-boolean=" + std::to_string(one));
        }
      });
      rep.details["boolean_by_n"].push_back(boolean);
    }
    rep.elapsed_seconds = clock.seconds();
    out.push_back(std::move(rep));
  }
  return out;
}

VerificationReport verify_linear_vs_bp_AD(const RootSystemPtr& rs) {
  Stopwatch clock;
  VerificationReport rep;
  rep.claim_id = "linear-vs-bp";
  rep.system = system_name(*rs);
  rep.gated = false;
  const auto& t = rs->cartan_type();
  if (!t || (t->family != Family::A && t->family != Family::D)) {
    throw std::invalid_argument(rs->label() + " is not of type A or D");
  }
  std::vector<Pattern> patterns;
  for (const auto& p : linear_boolean_patterns())
    if (p.rank() <= rs->rank()) patterns.push_back(p);

  BpMatcher matcher;
  for (const auto& pi : patterns) {
    std::uint64_t both = 0;
    for_each_element(rs, [&](const WeylElement& w) {
      ++rep.total_cases;
      const bool lin = linear_contains(w, pi).has_value();
      const bool bp = matcher.contains(w, pi);
      both += lin && bp;
      if (lin != bp) {
        rep.fail(element_ref(w) + ": linear " + pi.literal() + " " + (lin ? "contained" : "avoided") + ", BP " +
                 (bp ? "contained" : "avoided"));
      }
    });
    rep.tallies["contain " + pi.literal()] = both;
  }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

namespace {

Word random_reduced_word(const WeylElement& w, std::mt19937& rng) {
  Word word;
  WeylElement x = w;
  while (!x.is_identity()) {
    const auto d = x.descents();
    const int letter = d[std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng)];
    word.push_back(letter);
    x = x.times_simple(letter);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

VerificationReport verify_properties(const RootSystemPtr& rsp) {
  Stopwatch clock;
  const RootSystem& rs = *rsp;
  VerificationReport rep;
  rep.claim_id = "properties";
  rep.system = system_name(rs);
  const int r = rs.rank(), np = rs.num_positive();

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < np; ++j) {
      ++rep.tallies["reflection"];
      const Root& beta = rs.root(j);
      const Root once = rs.reflect(i, beta);
      if (!(rs.reflect(i, once) == beta)) rep.fail("s_" + std::to_string(i + 1) + " twice moves " + beta.to_string());
      if (j == i) {
        if (!(once == -beta) || rs.reflect_index(i, j) != -1) rep.fail("s_" + std::to_string(i + 1) + " fixes alpha");
      } else if (!once.is_positive() || rs.reflect_index(i, j) != rs.index_of(once).value_or(-2)) {
        rep.fail("s_" + std::to_string(i + 1) + " sends " + beta.to_string() + " to " + once.to_string());
      }
    }
  }

  std::mt19937 rng(20261014);
  std::set<RootSet> seen;
  for_each_element(rsp, [&](const WeylElement& w) {
    const std::string ref = element_ref(w);
    ++rep.tallies["elements"];
    if (!seen.insert(w.inversions()).second) rep.fail(ref + " visited twice");
    if (!is_biconvex(rs, w.inversions())) rep.fail(ref + " has a non-biconvex inversion set");
    const Word cw = w.canonical_word();
    auto [back, reduced] = WeylElement::from_word(rsp, cw);
    if (!reduced || !(back == w) || static_cast<int>(cw.size()) != w.length()) rep.fail(ref + " word round trip");
    if (!(WeylElement::from_inversions(rsp, w.inversions()) == w)) rep.fail(ref + " inversion round trip");

    for (int i = 1; i <= r; ++i) {
      ++rep.tallies["update_law"];
      RootSet expect;
      w.inversions().for_each([&](int j) {
        if (j != i - 1) expect.set(rs.reflect_index(i - 1, j));
      });
      if (!w.has_descent(i)) expect.set(i - 1);
      if (!(w.times_simple(i).inversions() == expect)) rep.fail(ref + " times s_" + std::to_string(i));
    }

    std::vector<bool> supported(r, false);
    w.inversions().for_each([&](int j) {
      for (int s : rs.root(j).support()) supported[s - 1] = true;
    });
    std::vector<Word> words{cw};
    for (int k = 0; k < 10 && w.length() > 0; ++k) words.push_back(random_reduced_word(w, rng));
    for (const auto& word : words) {
      ++rep.tallies["support_law"];
      auto [x, ok] = WeylElement::from_word(rsp, word);
      if (!ok || !(x == w)) rep.fail(ref + " random word " + format_word(word) + " is not a reduced word of it");
      std::vector<bool> letters(r, false);
      for (int l : word) letters[l - 1] = true;
      if (letters != supported) rep.fail(ref + " letters of " + format_word(word) + " differ from inversion support");
    }
  });
  for (const auto& [k, v] : rep.tallies) rep.total_cases += v;
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

namespace {

std::vector<CartanType> parse_all(std::initializer_list<const char*> names) {
  std::vector<CartanType> out;
  for (const char* n : names) out.push_back(CartanType::parse(n));
  return out;
}

}  // namespace

std::vector<CartanType> equivalence_universe(bool include_e7e8) {
  auto u = parse_all({"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4"});
  if (include_e7e8) {
    for (const char* n : {"E6", "E7", "E8"}) u.push_back(CartanType::parse(n));
  }
  return u;
}

std::vector<CartanType> decomposition_universe() {
  std::vector<CartanType> u;
  for (int n = 1; n <= 8; ++n) u.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) u.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) u.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) u.push_back({Family::D, n});
  for (const char* n : {"G2", "F4", "E6", "E7", "E8"}) u.push_back(CartanType::parse(n));
  return u;
}

std::vector<CartanType> property_universe() {
  std::vector<CartanType> u;
  for (const auto& t : decomposition_universe())
    if (t.weyl_order() <= kEquivalenceGroupBound) u.push_back(t);
  return u;
}

std::vector<CartanType> linear_vs_bp_universe() { return parse_all({"A2", "A3", "A4", "D4", "D5"}); }

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {"pattern-inversions", "pattern-sets", "boolean-equivalence",
                                               "root-decomposition", "two-boolean", "properties",
                                               "linear-vs-bp"};
  return ids;
}

std::vector<VerificationReport> run_claim(const std::string& id, const VerifyOptions& opt) {
  auto systems = [&](std::vector<CartanType> u) {
    std::vector<RootSystemPtr> out;
    for (const auto& t : u)
      if (t.rank <= opt.max_rank) out.push_back(standard_system(t));
    return out;
  };
  std::vector<VerificationReport> out;
  if (id == "all") {
    for (const auto& c : claim_ids()) {
      auto part = run_claim(c, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else if (id == "pattern-inversions" || id == "table2") {
    out.push_back(verify_pattern_inversions());
  } else if (id == "pattern-sets") {
    out.push_back(verify_pattern_sets());
  } else if (id == "boolean-equivalence") {
    for (const auto& rs : systems(equivalence_universe(opt.include_e7e8)))
      out.push_back(verify_boolean_equivalence(rs, opt));
  } else if (id == "root-decomposition") {
    for (const auto& rs : systems(decomposition_universe())) out.push_back(verify_root_decomposition(rs));
  } else if (id == "two-boolean") {
    out = verify_permutation_claims(7, 10, 8, opt.threads);
  } else if (id == "properties") {
    for (const auto& rs : systems(property_universe())) out.push_back(verify_properties(rs));
  } else if (id == "linear-vs-bp") {
    for (const auto& rs : systems(linear_vs_bp_universe())) out.push_back(verify_linear_vs_bp_AD(rs));
  } else {
    throw std::invalid_argument("unknown claim '" + id + "'");
  }
  return out;
}

}  // namespace weylbool
