#include "weylbool/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weylbool/boolean.hpp"
#include "weylbool/pattern.hpp"
#include "weylbool/permutation.hpp"
#include "weylbool/verification.hpp"

namespace weylbool::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  int threads = 1;
  int max_rank = kMaxRank;
  bool include_e7e8 = false;
};

template <typename F>
auto parse_or_usage(F f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

RootSystemPtr system_arg(const std::string& s) {
  return standard_system(parse_or_usage([&] { return CartanType::parse(s); }));
}

Word word_arg(const std::string& s) {
  return parse_or_usage([&] { return parse_word(s); });
}

int int_arg(const std::string& s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

WeylElement element_arg(const RootSystemPtr& rs, const std::string& text, std::ostream& err) {
  const Word w = word_arg(text);
  for (int letter : w) {
    if (letter > rs->rank()) {
      throw UsageError("letter '" + std::to_string(letter) + "' exceeds the rank of " + rs->label());
    }
  }
  auto [e, reduced] = WeylElement::from_word(rs, w);
  if (!reduced) err << "note: \"" << text << "\" is not reduced; using its product\n";
  return e;
}

json roots_json(const RootSystem& rs, const RootSet& set) {
  json a = json::array();
  set.for_each([&](int i) {
    const auto c = rs.root(i).coeffs();
    a.push_back(std::vector<int>(c.begin(), c.end()));
  });
  return a;
}

json roots_json(std::span<const Root> roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back(std::vector<int>(r.coeffs().begin(), r.coeffs().end()));
  return a;
}

std::string roots_text(std::span<const Root> roots) {
  std::string s;
  for (const auto& r : roots) s += (s.empty() ? "" : "  ") + r.to_string();
  return s;
}

json element_json(const WeylElement& w) {
  return {{"system", w.system().label()},
          {"word", format_word(w.canonical_word())},
          {"length", w.length()},
          {"inversions", roots_json(w.system(), w.inversions())}};
}

void emit(std::ostream& out, const Options& opt, const json& j, const std::string& text) {
  if (opt.json) out << j.dump(2) << '\n';
  else out << text;
}

int cmd_roots(const Options& opt, const std::string& type, std::ostream& out) {
  auto rs = system_arg(type);
  json j{{"type", rs->label()}, {"rank", rs->rank()}, {"positive_roots", roots_json(rs->positive_roots())}};
  std::ostringstream os;
  os << rs->label() << ": rank " << rs->rank() << ", " << rs->num_positive() << " positive roots\n";
  for (const auto& r : rs->positive_roots()) os << "  " << std::setw(3) << r.height() << "  " << r.to_string() << '\n';
  emit(out, opt, j, os.str());
  return kExitOk;
}

int cmd_element(const Options& opt, const std::string& type, const std::string& word, std::ostream& out,
                std::ostream& err) {
  auto w = element_arg(system_arg(type), word, err);
  const auto inv = w.inversion_roots();
  std::ostringstream os;
  os << w.system().label() << " \"" << format_word(w.canonical_word()) << "\"  length " << w.length() << '\n'
     << "inversions: " << roots_text(inv) << '\n';
  emit(out, opt, element_json(w), os.str());
  return kExitOk;
}

int cmd_boolean(const Options& opt, const std::string& type, const std::string& word, std::ostream& out,
                std::ostream& err) {
  auto w = element_arg(system_arg(type), word, err);
  BooleanAnalyzer an;
  const auto v = an.verdict(w);
  json j = element_json(w);
  j["boolean"] = v.via_word;
  j["via_word"] = v.via_word;
  j["via_interval"] = v.via_interval ? json(*v.via_interval) : json(nullptr);
  j["via_bp"] = v.via_bp;
  j["via_linear"] = v.via_linear;
  j["bp_witness"] = v.bp_witness ? json(v.bp_witness->literal()) : json(nullptr);
  j["linear_witness"] = v.linear_witness ? json(v.linear_witness->literal()) : json(nullptr);
  j["linear_embedding"] =
      v.linear_embedding ? roots_json(v.linear_embedding->image_roots(w.system())) : json(nullptr);
  j["consistent"] = v.consistent();

  std::ostringstream os;
  os << w.system().label() << " \"" << format_word(w.canonical_word()) << "\": "
     << (v.via_word ? "boolean" : "not boolean") << '\n';
  os << "  word      " << v.via_word << '\n';
  os << "  interval  " << (v.via_interval ? std::to_string(*v.via_interval) : "-") << '\n';
  os << "  bp        " << v.via_bp;
  if (v.bp_witness) os << "  contains " << v.bp_witness->literal();
  os << '\n' << "  linear    " << v.via_linear;
  if (v.linear_witness) os << "  contains " << v.linear_witness->literal();
  if (v.linear_embedding) os << " at " << roots_text(v.linear_embedding->image_roots(w.system()));
  os << '\n';
  emit(out, opt, j, os.str());
  return v.consistent() ? kExitOk : kExitClaimFailed;
}

Pattern pattern_arg(const std::string& s) {
  return parse_or_usage([&] { return Pattern::parse(s); });
}

int cmd_bp_contains(const Options& opt, const std::string& type, const std::string& word, const std::string& pat,
                    std::ostream& out, std::ostream& err) {
  auto w = element_arg(system_arg(type), word, err);
  const Pattern pi = pattern_arg(pat);
  const auto wit = bp_contains(w, pi);
  json j{{"element", element_json(w)}, {"pattern", pi.literal()}, {"contains", wit.has_value()}};
  std::ostringstream os;
  os << w.system().label() << " \"" << format_word(w.canonical_word()) << "\" "
     << (wit ? "contains" : "avoids") << " BP pattern " << pi.literal() << '\n';
  if (wit) {
    const auto images = wit->simple_images();
    j["witness"] = {{"subsystem", wit->sub.label()}, {"simple_images", roots_json(images)}};
    os << "  subsystem " << wit->sub.label() << ", simple roots sent to " << roots_text(images) << '\n';
  } else {
    j["witness"] = nullptr;
  }
  emit(out, opt, j, os.str());
  return kExitOk;
}

int cmd_linear_contains(const Options& opt, const std::string& type, const std::string& word,
                        const std::string& pat, std::ostream& out, std::ostream& err) {
  auto w = element_arg(system_arg(type), word, err);
  const Pattern pi = pattern_arg(pat);
  const auto emb = linear_contains(w, pi);
  json j{{"element", element_json(w)}, {"pattern", pi.literal()}, {"contains", emb.has_value()}};
  std::ostringstream os;
  os << w.system().label() << " \"" << format_word(w.canonical_word()) << "\" " << (emb ? "contains" : "avoids")
     << " linear pattern " << pi.literal() << '\n';
  if (emb) {
    const auto images = emb->image_roots(w.system());
    j["images"] = roots_json(images);
    os << "  simple roots sent to " << roots_text(images) << '\n';
  } else {
    j["images"] = nullptr;
  }
  emit(out, opt, j, os.str());
  return kExitOk;
}

Permutation perm_arg(const std::string& s) {
  return parse_or_usage([&] { return Permutation::parse(s); });
}

int cmd_kboolean(const Options& opt, const std::string& ptext, const std::string& ktext, std::ostream& out) {
  const Permutation w = perm_arg(ptext);
  const int k = int_arg(ktext, "k");
  if (k < 0) throw UsageError("bad k '" + ktext + "'");
  const auto g = parse_or_usage([&] { return max_letter_multiplicity(w); });
  const bool ok = std::all_of(g.begin(), g.end(), [k](int x) { return x <= k; });
  json j{{"permutation", w.to_string()}, {"k", k}, {"k_boolean", ok}, {"multiplicities", g}};
  std::ostringstream os;
  os << w.to_string() << " is " << (ok ? "" : "not ") << k << "-boolean\n";
  os << "  g =";
  for (int x : g) os << ' ' << x;
  os << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > k) {
      os << "  g_" << i + 1 << " = " << g[i] << " > " << k << '\n';
      j["violations"].push_back({{"i", i + 1}, {"g", g[i]}});
    }
  }
  emit(out, opt, j, os.str());
  return kExitOk;
}

int cmd_count(const Options& opt, const std::string& ntext, std::ostream& out) {
  const int n = int_arg(ntext, "n");
  if (n < 0 || n > kMaxCountSize) throw UsageError("bad n '" + ntext + "'");
  const auto f = count_2boolean(n, opt.threads);
  json j{{"n", n}, {"f", f}, {"refined", nullptr}};
  std::ostringstream os;
  os << "f(" << n << ") = " << f << '\n';
  if (n >= 2) {
    const auto r = refined_counts(n, opt.threads);
    j["refined"] = {{"f0", r.f0},         {"f1", r.f1},         {"f00", r.f00},         {"f01", r.f01},
                    {"f11", r.f11},       {"rhs_f0", r.rhs_f0}, {"rhs_f1", r.rhs_f1},   {"rhs_f00", r.rhs_f00},
                    {"rhs_f01", r.rhs_f01}, {"rhs_f11", r.rhs_f11}, {"both_large", r.both_large},
                    {"holds", r.holds()}};
    auto line = [&](const char* name, std::uint64_t lhs, std::int64_t rhs) {
      os << "  " << std::left << std::setw(4) << name << std::right << std::setw(8) << lhs << std::setw(8) << rhs
         << '\n';
    };
    os << "  refined    count  formula\n";
    line("f0", r.f0, r.rhs_f0);
    line("f1", r.f1, r.rhs_f1);
    line("f00", r.f00, r.rhs_f00);
    line("f01", r.f01, r.rhs_f01);
    line("f11", r.f11, r.rhs_f11);
  }
  emit(out, opt, j, os.str());
  return kExitOk;
}

int cmd_series(const Options& opt, const std::string& ntext, std::ostream& out) {
  const int N = int_arg(ntext, "N");
  if (N < 0) throw UsageError("bad N '" + ntext + "'");
  const auto f = gf_coefficients(N);
  std::vector<std::string> digits;
  for (const auto& x : f) digits.push_back(x.str());
  std::string text;
  for (const auto& d : digits) text += (text.empty() ? "" : " ") + d;
  emit(out, opt, json{{"N", N}, {"coefficients", digits}}, text + '\n');
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& id, std::ostream& out) {
  if (id != "all" && id != "table2" && std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
    throw UsageError("unknown claim '" + id + "'");
  }
  VerifyOptions vo;
  vo.threads = opt.threads;
  vo.include_e7e8 = opt.include_e7e8;
  vo.max_rank = opt.max_rank;
  const auto reports = run_claim(id, vo);
  const bool ok = all_gated_passed(reports);
  if (opt.json) {
    json a = json::array();
    for (const auto& r : reports) a.push_back(r.to_json());
    out << json{{"passed", ok}, {"reports", a}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << r.to_text() << '\n';
    out << (ok ? "all gated claims verified" : "some gated claims FAILED") << '\n';
  }
  return ok ? kExitOk : kExitClaimFailed;
}

json forbidden_patterns_json() {
  json rows = json::array();
  const auto patterns = forbidden_bp_patterns();
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::string>> by_type;
  for (const auto& p : patterns) {
    const std::string t = p.system().label();
    if (!by_type.count(t)) order.push_back(t);
    by_type[t].push_back(format_word(p.element().canonical_word()));
  }
  for (const auto& t : order) rows.push_back({{"type", t}, {"patterns", by_type[t]}, {"count", by_type[t].size()}});
  return {{"table", 1}, {"rows", rows}, {"total", patterns.size()}};
}

json pattern_inversions_json() {
  json rows = json::array();
  for (const char* lit : {"A2:1 2 1", "A3:2 1 3 2", "B3:2 1 3 2", "C3:2 1 3 2", "D4:2 1 3 4 2"}) {
    const Pattern p = Pattern::parse(lit);
    rows.push_back({{"type", p.system().label()},
                    {"pattern", format_word(p.element().canonical_word())},
                    {"inversions", roots_json(p.system(), p.element().inversions())}});
  }
  return {{"table", 2}, {"rows", rows}};
}

int cmd_table(const Options& opt, const std::string& which, std::ostream& out) {
  std::ostringstream os;
  json j;
  if (which == "1") {
    j = forbidden_patterns_json();
    os << std::left << std::setw(6) << "type" << std::setw(4) << "#" << "patterns\n";
    for (const auto& row : j["rows"]) {
      os << std::setw(6) << row["type"].get<std::string>() << std::setw(4) << row["count"].get<int>();
      bool first = true;
      for (const auto& w : row["patterns"]) {
        os << (first ? "" : ", ") << '"' << w.get<std::string>() << '"';
        first = false;
      }
      os << '\n';
    }
    os << "total " << j["total"].get<int>() << '\n';
  } else if (which == "2") {
    j = pattern_inversions_json();
    os << std::left << std::setw(6) << "type" << std::setw(12) << "pattern" << "inversions\n";
    for (const auto& row : j["rows"]) {
      os << std::setw(6) << row["type"].get<std::string>() << std::setw(12) << row["pattern"].get<std::string>();
      bool first = true;
      for (const auto& r : row["inversions"]) {
        std::string c;
        for (int x : r) c += (c.empty() ? "" : ",") + std::to_string(x);
        os << (first ? "" : "  ") << c;
        first = false;
      }
      os << '\n';
    }
  } else {
    throw UsageError("unknown table '" + which + "'");
  }
  emit(out, opt, j, os.str());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, Weyl group elements and boolean pattern criteria", "weylbool"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON");
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--max-rank", opt.max_rank, "Largest rank in verification universes")->check(CLI::Range(1, kMaxRank));
  app.add_flag("--include-e7e8", opt.include_e7e8, "Add E6, E7, E8 to the boolean equivalence universe");

  std::string a1, a2, a3;
  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, std::vector<std::pair<const char*, std::string*>> pos,
                 std::function<int()> f) {
    auto* s = app.add_subcommand(name, help);
    for (auto& [pname, target] : pos) s->add_option(pname, *target)->required();
    s->callback([&action, f] { action = f; });
  };
  sub("roots", "Positive roots of a type", {{"type", &a1}}, [&] { return cmd_roots(opt, a1, out); });
  sub("element", "Inversion set of a word", {{"type", &a1}, {"word", &a2}},
      [&] { return cmd_element(opt, a1, a2, out, err); });
  sub("boolean", "All boolean verdicts for an element", {{"type", &a1}, {"word", &a2}},
      [&] { return cmd_boolean(opt, a1, a2, out, err); });
  sub("bp-contains", "BP pattern containment", {{"type", &a1}, {"word", &a2}, {"pattern", &a3}},
      [&] { return cmd_bp_contains(opt, a1, a2, a3, out, err); });
  sub("linear-contains", "Linear pattern containment", {{"type", &a1}, {"word", &a2}, {"pattern", &a3}},
      [&] { return cmd_linear_contains(opt, a1, a2, a3, out, err); });
  sub("kboolean", "Largest letter multiplicities of a permutation", {{"perm", &a1}, {"k", &a2}},
      [&] { return cmd_kboolean(opt, a1, a2, out); });
  sub("count", "Count 2-boolean permutations of size n", {{"n", &a1}}, [&] { return cmd_count(opt, a1, out); });
  sub("series", "Generating function coefficients f(0..N)", {{"N", &a1}}, [&] { return cmd_series(opt, a1, out); });
  sub("verify", "Run a verification claim or all of them", {{"claim", &a1}},
      [&] { return cmd_verify(opt, a1, out); });
  sub("table", "Emit table 1 or 2", {{"which", &a1}}, [&] { return cmd_table(opt, a1, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace weylbool::cli
