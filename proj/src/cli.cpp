#include "schemelab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "schemelab/capture.hpp"
#include "schemelab/error.hpp"
#include "schemelab/export.hpp"
#include "schemelab/gaps.hpp"
#include "schemelab/posets.hpp"
#include "schemelab/scheme.hpp"
#include "schemelab/typeseq.hpp"
#include "schemelab/verify.hpp"

namespace schemelab::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string type_text;
  std::string type_file;
  std::string format = "text";
  std::string out_file;
  std::string dump_file;
  std::uint64_t cap = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;

  // build / query
  std::string fn;
  std::vector<std::string> args;
  // capture
  std::string set;
  std::size_t n = 2;
  std::string levels;
  // gap
  std::string variant = "hausdorff";
  std::string p0;
  std::string diff;
  bool check = false;
  // poset
  std::string kind = "SEP";
  std::string action;
  std::string pregap = "diff";
  std::size_t max_size = 3;
  Natural max_value = 2;
  std::uint64_t budget = 1'000'000;
  // verify
  std::vector<std::string> suites;
  bool corrupt = false;
};

unsigned default_threads() {
  if (const char* env = std::getenv("SCHEMELAB_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<Ordinal> parse_naturals(const std::string& text) {
  std::string norm = text;
  for (char& c : norm) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(norm);
  std::vector<Ordinal> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-') throw Error(Errc::ParseError, "not a natural: '" + tok + "'");
    out.push_back(static_cast<Ordinal>(v));
  }
  return out;
}

FinSet parse_set(const std::string& text) { return FinSet::from_unsorted(parse_naturals(text)); }

std::set<Level> parse_levels(const std::string& text) {
  std::set<Level> out;
  for (Ordinal x : parse_naturals(text)) out.insert(static_cast<Level>(x));
  return out;
}

// "0:1 2:0" or "0=1,2=0".
SepCondition parse_sep(const std::string& text) {
  std::string norm = text;
  for (char& c : norm) {
    if (c == ',' || c == '{' || c == '}') c = ' ';
    if (c == '=') c = ':';
  }
  std::istringstream in(norm);
  SepCondition out;
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "SEP entries look like index:value, got '" + tok + "'");
    const auto key = parse_naturals(tok.substr(0, colon));
    const auto val = parse_naturals(tok.substr(colon + 1));
    if (key.size() != 1 || val.size() != 1) throw Error(Errc::ParseError, "bad SEP entry '" + tok + "'");
    if (!out.emplace(key[0], val[0]).second) throw Error(Errc::ParseError, "index repeated in SEP condition");
  }
  return out;
}

TypeSequence load_type(const Config& c) {
  if (!c.type_text.empty() && !c.type_file.empty()) throw Error(Errc::ParseError, "give --type or --type-file, not both");
  if (!c.type_file.empty()) {
    std::ifstream in(c.type_file);
    if (!in) throw Error(Errc::ParseError, "cannot read " + c.type_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return make_type_prefix(parse_type_text(buf.str()));
  }
  if (c.type_text.empty()) throw Error(Errc::ParseError, "a type prefix is required (--type or --type-file)");
  return make_type_prefix(parse_type_text(c.type_text));
}

std::string level_str(Level k) { return k == kTop ? std::string("top") : std::to_string(k); }

json set_json(const FinSet& F) { return json(std::vector<Ordinal>(F.begin(), F.end())); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write " + path);
  f << text;
}

// ---------------------------------------------------------------------------

void cmd_build(const Config& c, std::ostream& out) {
  const Scheme s = Scheme::build(load_type(c));
  std::vector<std::size_t> counts;
  for (Level k = s.K() + 1; k-- > 0;) counts.push_back(s.level(k).size());
  if (c.format == "json") {
    json j;
    j["type"] = json::parse(type_to_json(s.type()));
    j["K"] = s.K();
    j["domain"] = s.domain_size();
    j["members"] = counts;  // level K down to level 0
    out << j.dump(2) << "\n";
  } else {
    out << "type: " << s.type().str() << "\n";
    out << "K: " << s.K() << "\n";
    out << "domain: " << s.domain_size() << "\n";
    out << "levels: ";
    for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? "/" : "") << counts[i];
    out << " members\n";
  }
  if (!c.dump_file.empty()) write_file(c.dump_file, scheme_to_json(s, 2) + "\n");
}

void cmd_query(const Config& c, std::ostream& out) {
  const Scheme s = Scheme::build(load_type(c));
  const std::string& fn = c.fn;
  if (c.args.empty()) {
    if (fn == "rho") out << rho_csv(s);
    else if (fn == "xi") out << xi_csv(s);
    else if (fn == "norm") out << norm_csv(s);
    else throw Error(Errc::ParseError, "'" + fn + "' needs two arguments");
    return;
  }
  if (c.args.size() != 2) throw Error(Errc::ParseError, "'" + fn + "' takes exactly two arguments");
  const auto a = parse_naturals(c.args[0]);
  const auto b = parse_naturals(c.args[1]);
  if (a.size() != 1 || b.size() != 1) throw Error(Errc::ParseError, "arguments must be single naturals");
  const Ordinal x = a[0];
  const Ordinal y = b[0];
  const Level yk = static_cast<Level>(y);

  std::string text;
  json value;
  if (fn == "rho") {
    const Level v = s.rho(x, y);
    text = level_str(v);
    value = v == kTop ? json("top") : json(v);
  } else if (fn == "delta") {
    const Level v = s.delta(x, y);
    text = level_str(v);
    value = v == kTop ? json("top") : json(v);
  } else if (fn == "xi") {
    const int v = s.xi(x, yk);
    text = std::to_string(v);
    value = v;
  } else if (fn == "norm") {
    const Natural v = s.norm(x, yk);
    text = std::to_string(v);
    value = v;
  } else if (fn == "closure") {
    const FinSet v = s.closure(x, yk);
    text = v.str();
    value = set_json(v);
  } else if (fn == "bracket") {
    const Ordinal v = sq_bracket(s, x, y);
    text = std::to_string(v);
    value = v;
  } else {
    throw Error(Errc::ParseError, "unknown function '" + fn + "' (rho, delta, xi, norm, closure, bracket)");
  }
  if (c.format == "json") {
    json j;
    j["fn"] = fn;
    j["args"] = {x, y};
    j["value"] = value;
    out << j.dump() << "\n";
  } else if (c.format == "csv") {
    out << "fn,a,b,value\n" << fn << "," << x << "," << y << "," << text << "\n";
  } else {
    out << text << "\n";
  }
}

void cmd_capture(const Config& c, std::ostream& out) {
  const Scheme s = Scheme::build(load_type(c));
  const FinSet S = c.set.empty() ? s.domain() : parse_set(c.set);
  for (Ordinal x : S) {
    if (x >= s.domain_size()) throw Error(Errc::OutOfDomain, std::to_string(x) + " lies outside the domain");
  }
  CaptureSearchOptions opts;
  opts.cap = c.cap;
  opts.seed = c.seed;
  opts.threads = c.threads;
  const auto r = find_captured_tuples(s, S, c.n, parse_levels(c.levels), opts);

  auto tuple_of = [](const CaptureCertificate& cert) {
    std::vector<Ordinal> v;
    for (const FinSet& m : cert.members) v.insert(v.end(), m.begin(), m.end());
    return FinSet::from_unsorted(std::move(v));
  };
  std::ostringstream digest;
  digest << std::hex << std::setw(16) << std::setfill('0') << r.digest;

  if (c.format == "json") {
    json j;
    j["sampled"] = r.sampled;
    if (r.sampled) j["seed"] = r.seed;
    j["examined"] = r.examined;
    j["digest"] = digest.str();
    j["certificates"] = json::parse(certificates_json(r.certificates));
    out << j.dump(2) << "\n";
    return;
  }
  if (r.sampled) out << "SAMPLED(seed=" << r.seed << ") examined=" << r.examined << " digest=" << digest.str() << "\n";
  out << "level,tuple,bracket\n";
  for (const auto& cert : r.certificates) {
    const FinSet t = tuple_of(cert);
    out << cert.level << "," << t.str() << "," << sq_bracket(s, t(0), t(1)) << "\n";
  }
}

void cmd_gap(const Config& c, std::ostream& out, bool& failed) {
  const Scheme s = Scheme::build(load_type(c));
  Pregap g = hausdorff_gap(s);
  std::set<Level> p0, p1;
  if (c.variant == "todorcevic") {
    p0 = parse_levels(c.p0);
    for (Level k : p0) {
      if (k < 1 || k > s.K()) throw Error(Errc::OutOfDomain, "P0 levels lie in 1..K");
    }
    for (Level k = 1; k <= s.K(); ++k) {
      if (!p0.contains(k)) p1.insert(k);
    }
    g = todorcevic_restrict(s, g, p0);
  } else if (c.variant != "hausdorff") {
    throw Error(Errc::ParseError, "unknown gap variant '" + c.variant + "' (hausdorff, todorcevic)");
  }
  if (!c.diff.empty()) g = levelwise_diff(g, c.diff == "all" ? FinSet::range(0, static_cast<Ordinal>(g.size())) : parse_set(c.diff));

  if (c.check) {
    std::vector<GapViolation> vs;
    auto add = [&](std::vector<GapViolation> more) { vs.insert(vs.end(), more.begin(), more.end()); };
    if (g.provenance == Provenance::Hausdorff) {
      add(check_interhausdorff(s, g));
      add(check_hausdorff_condition(s, g));
      add(check_levelwise_even_odd(s, g));
      add(check_tower_and_capture(s, g));
    } else if (g.provenance == Provenance::TodorcevicRestricted) {
      add(check_todorcevic_capture_laws(s, g, p0, p1));
    } else {
      throw Error(Errc::ParseError, "--check applies to undifferenced gaps");
    }
    out << violations_json(vs) << "\n";
    failed = !vs.empty();
    return;
  }
  if (c.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      rows.push_back({{"alpha", g.index(i)}, {"L", set_json(g.left[i])}, {"R", set_json(g.right[i])}});
    }
    out << rows.dump(2) << "\n";
  } else {
    out << gap_csv(g);
  }
}

void cmd_poset(const Config& c, std::ostream& out) {
  auto s = std::make_shared<const Scheme>(Scheme::build(load_type(c)));
  const PosetKind kind = parse_poset_kind(c.kind);
  std::optional<PosetView> view;
  if (kind == PosetKind::DN) {
    std::set<Level> A = parse_levels(c.levels);
    view = PosetView::dn(s, c.n, std::move(A));
  } else {
    const Pregap h = hausdorff_gap(*s);
    if (c.pregap == "hausdorff") {
      view = PosetView::over_pregap(kind, h);
    } else if (c.pregap == "diff") {
      view = PosetView::over_pregap(kind, levelwise_diff(h, FinSet::range(0, static_cast<Ordinal>(h.size()))));
    } else {
      throw Error(Errc::ParseError, "unknown pregap '" + c.pregap + "' (hausdorff, diff)");
    }
  }
  const PosetView& v = *view;
  auto parse_condition = [&](const std::string& text) -> Condition {
    if (kind == PosetKind::SEP) return parse_sep(text);
    return parse_set(text);
  };

  json j;
  j["kind"] = poset_kind_name(kind);
  if (c.action == "check") {
    if (c.args.size() > 1) throw Error(Errc::ParseError, "check takes one condition");
    const Condition p = c.args.empty() ? v.empty_condition() : parse_condition(c.args[0]);
    j["condition"] = json::parse(condition_json(p));
    j["valid"] = is_condition(v, p);
  } else if (c.action == "compatible") {
    if (c.args.size() != 2) throw Error(Errc::ParseError, "compatible takes two conditions");
    const Condition p = parse_condition(c.args[0]);
    const Condition q = parse_condition(c.args[1]);
    j["p"] = json::parse(condition_json(p));
    j["q"] = json::parse(condition_json(q));
    j["compatible"] = compatible(v, p, q);
  } else if (c.action == "filter") {
    const Condition seed = c.args.empty() ? v.empty_condition() : parse_condition(c.args[0]);
    const FilterResult f = greedy_filter(v, dense_meet_targets(v, v.universe()), seed);
    j["complete"] = f.complete;
    if (!f.complete) {
      j["failed_target"] = *f.failed_target;
      j["failure"] = f.failure;
    }
    j["chain"] = json::parse(conditions_json(f.chain));
    if (kind == PosetKind::SEP && f.complete) {
      j["separating"] = json::parse(separating_json(v.pregap(), extract_separating(v, f)));
    }
  } else if (c.action == "antichain") {
    AntichainOptions opts;
    opts.max_size = c.max_size;
    opts.max_value = c.max_value;
    opts.budget = c.budget;
    const AntichainResult a = exhaustive_antichain(v, v.universe(), opts);
    j["status"] = a.budget_exceeded ? "BudgetExceeded" : "exact";
    j["size"] = a.antichain.size();
    j["steps"] = a.steps;
    j["candidates"] = a.candidates;
    j["antichain"] = json::parse(conditions_json(a.antichain));
  } else {
    throw Error(Errc::ParseError, "unknown poset action '" + c.action + "' (check, compatible, filter, antichain)");
  }
  out << j.dump(2) << "\n";
}

void cmd_verify(const Config& c, std::ostream& out, bool& failed) {
  std::vector<std::string> names = c.suites.empty() ? verify::suite_names() : c.suites;
  for (const auto& n : names) {
    if (!verify::is_suite(n)) throw CLI::ValidationError("--suite", "unknown suite '" + n + "'");
  }
  verify::Options opts;
  opts.seed = c.seed;
  opts.threads = c.threads;
  opts.corrupt = c.corrupt;

  json suites = json::array();
  std::size_t passed = 0;
  if (c.format != "json") out << "verify seed=" << c.seed << (c.corrupt ? " corrupt" : "") << "\n";
  for (const auto& n : names) {
    const auto r = verify::run_suite(n, opts);
    passed += r.passed;
    if (c.format == "json") {
      suites.push_back({{"suite", r.name},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"messages", r.messages}});
      continue;
    }
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.title << "): " << r.checks << " checks";
    if (!r.passed) out << ", " << r.failures << " failed";
    out << "\n";
    for (const auto& m : r.messages) out << "  " << m << "\n";
  }
  if (c.format == "json") {
    json j;
    j["seed"] = c.seed;
    j["corrupt"] = c.corrupt;
    j["suites"] = suites;
    j["passed"] = passed == names.size();
    out << j.dump(2) << "\n";
  } else {
    out << passed << "/" << names.size() << " suites passed\n";
  }
  failed = passed != names.size();
}

void add_type_options(CLI::App* sub, Config& c) {
  sub->add_option("--type", c.type_text, "Type prefix inline, \"1,2,0;2,2,1\" or [[1,2,0],[2,2,1]]");
  sub->add_option("--type-file", c.type_file, "File holding the type prefix (JSON or inline form)");
}

void add_output_options(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", c.out_file, "Write results to FILE instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  c.threads = default_threads();

  CLI::App app{"Desk-scale laboratory for construction schemes"};
  app.name("schemelab");
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build a scheme and print its summary");
  add_type_options(build, c);
  add_output_options(build, c);
  build->add_option("--dump", c.dump_file, "Write the full scheme as JSON to FILE");

  auto* query = app.add_subcommand("query", "Evaluate rho, delta, xi, norm, closure or bracket");
  add_type_options(query, c);
  add_output_options(query, c);
  query->add_option("fn", c.fn, "rho | delta | xi | norm | closure | bracket")->required();
  query->add_option("args", c.args, "Two naturals (ordinal pair, or ordinal and level); none for a full table");

  auto* capture = app.add_subcommand("capture", "Search for captured n-tuples");
  add_type_options(capture, c);
  add_output_options(capture, c);
  capture->add_option("--set", c.set, "Ordinals to search (default: the whole domain)");
  capture->add_option("--n", c.n, "Tuple size")->check(CLI::Range(2, 64));
  capture->add_option("--levels", c.levels, "Levels to accept (default: all)");
  capture->add_option("--cap", c.cap, "Exhaustive up to this many tuples, sampled beyond");
  capture->add_option("--seed", c.seed, "Sampling seed");
  capture->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 1024));

  auto* gap = app.add_subcommand("gap", "Emit a gap table or check its laws");
  add_type_options(gap, c);
  add_output_options(gap, c);
  gap->add_option("--variant", c.variant, "hausdorff | todorcevic");
  gap->add_option("--p0", c.p0, "Levels kept by the Todorcevic restriction");
  gap->add_option("--diff", c.diff, "Take successor differences over these positions (or \"all\")");
  gap->add_flag("--check", c.check, "Run the gap checks and report violations");

  auto* poset = app.add_subcommand("poset", "Condition checks, filters and antichains");
  add_type_options(poset, c);
  add_output_options(poset, c);
  poset->add_option("--kind", c.kind, "SEP | CHI0 | CHI1 | DN | BIORTH");
  poset->add_option("--pregap", c.pregap, "hausdorff | diff (difference pregap over all positions)");
  poset->add_option("--n", c.n, "DN: tuple size")->check(CLI::Range(2, 64));
  poset->add_option("--levels", c.levels, "DN: the level set A");
  poset->add_option("--max-size", c.max_size, "Antichain: largest condition support");
  poset->add_option("--max-value", c.max_value, "Antichain: largest SEP value");
  poset->add_option("--budget", c.budget, "Antichain: search step budget");
  poset->add_option("action", c.action, "check | compatible | filter | antichain")->required();
  poset->add_option("args", c.args, "Conditions: \"0:1 2:0\" for SEP, \"0 2\" otherwise");

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  add_output_options(verify, c);
  verify->add_option("--suite", c.suites, "Suites to run (default: all)");
  verify->add_option("--seed", c.seed, "Seed for the random prefixes and samples");
  verify->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 1024));
  verify->add_flag("--corrupt", c.corrupt, "Use deliberately broken fixtures");

  std::ostringstream result;
  bool failed = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (c.format == "csv" && (verify->parsed() || poset->parsed())) {
      throw CLI::ValidationError("--format", "csv is not available for this command");
    }
    if (build->parsed()) cmd_build(c, result);
    else if (query->parsed()) cmd_query(c, result);
    else if (capture->parsed()) cmd_capture(c, result);
    else if (gap->parsed()) cmd_gap(c, result, failed);
    else if (poset->parsed()) cmd_poset(c, result);
    else if (verify->parsed()) cmd_verify(c, result, failed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (c.out_file.empty()) {
    out << result.str();
  } else {
    try {
      write_file(c.out_file, result.str());
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return failed ? 1 : 0;
}

}  // namespace schemelab::cli
