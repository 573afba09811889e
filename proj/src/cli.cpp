#include "contentlab/cli.hpp"

#include <map>
#include <memory>

#include "CLI11.hpp"

#include "contentlab/descriptor.hpp"
#include "contentlab/harness.hpp"
#include "contentlab/report_io.hpp"

namespace contentlab {

namespace {

struct Options {
  std::string base, alg, elem, family = "all", property, predicate, expect;
  unsigned nmax = 8;
  std::size_t max_ring = 4096, max_alg = 4096;
  bool json = false;
  std::vector<std::size_t> moduli{2, 3, 4, 5, 6, 8, 9, 12};
  std::vector<std::size_t> depths{2, 3};
  std::vector<std::string> monoids;
  std::vector<unsigned> example_depths{4};
  unsigned seed = 0;
  unsigned threads = 0;
  bool no_composites = false;

  Limits limits() const {
    Limits l;
    l.max_ring = max_ring;
    l.max_alg = max_alg;
    return l;
  }
  ReportOptions report() const {
    ReportOptions r;
    r.n_max = nmax;
    r.limits = limits();
    r.sweep.seed = seed;
    return r;
  }
  CorpusParams corpus() const {
    CorpusParams p;
    p.moduli = moduli;
    p.depths = depths;
    p.monoid_paths = monoids;
    p.limits = limits();
    p.seed = seed;
    if (no_composites) p.composites.clear();
    return p;
  }
};

void add_caps(CLI::App* cmd, Options& o) {
  cmd->add_option("--nmax", o.nmax, "Dedekind-Mertens exponent bound")->capture_default_str();
  cmd->add_option("--max-ring", o.max_ring, "base ring size cap")->capture_default_str();
  cmd->add_option("--max-alg", o.max_alg, "algebra size cap")->capture_default_str();
  cmd->add_option("--seed", o.seed, "oracle sample seed for large algebras (0: canonical prefix)");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

void add_corpus(CLI::App* cmd, Options& o) {
  cmd->add_option("--moduli", o.moduli, "Z/n bases")->delimiter(',');
  cmd->add_option("--depths", o.depths, "truncation depths")->delimiter(',');
  cmd->add_option("--monoid", o.monoids, "monoid table files");
  cmd->add_flag("--no-composites", o.no_composites, "only Z/n bases");
  cmd->add_option("--threads", o.threads, "worker threads (0: hardware)");
}

struct Instance1 {
  RingPtr base;
  AlgebraPtr alg;
};

Instance1 load(const Options& o, bool need_alg = true) {
  Instance1 in;
  in.base = parse_ring(o.base, o.limits());
  if (need_alg || !o.alg.empty()) in.alg = parse_algebra(o.alg.empty() ? "id" : o.alg, in.base, o.limits());
  return in;
}

IdealFamily family_of(const std::string& name) {
  if (name == "all") return IdealFamily::all;
  if (name == "radical") return IdealFamily::radical;
  if (name == "prime") return IdealFamily::prime;
  throw Error(Errc::syntax, "unknown family '" + name + "'");
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Instance1 in = load(o);
  const PropertyReport r = full_report({in.base->descriptor(), in.alg->descriptor(), in.alg}, o.report());
  if (o.json)
    out << report_to_json(r).dump() << '\n';
  else
    out << report_table(r);
  if (r.error) return kExitUsage;
  return r.consistent() ? kExitOk : kExitViolation;
}

int cmd_content(const Options& o, std::ostream& out) {
  const Instance1 in = load(o);
  const AlgebraElement f = parse_element(o.elem, in.alg);
  const Ideal c = content(f);
  if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["descriptor"] = {{"base", in.base->descriptor()}, {"alg", in.alg->descriptor()}};
    j["element"] = in.alg->element_name(f.coords);
    j["content"] = to_string(c);
    j["oracle"] = to_string(content_oracle(f, o.limits()));
    out << j.dump() << '\n';
  } else {
    out << to_string(c) << '\n';
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto prop = property_from_name(o.property);
  if (!prop) throw Error(Errc::syntax, "unknown property '" + o.property + "'");
  const bool ring_only = *prop == Property::property_a || *prop == Property::fidel_a;
  const Instance1 in = load(o, !ring_only);
  const AlgebraPtr s = in.alg ? in.alg : alg_identity(in.base, o.limits());
  const Limits lim = o.limits();
  Verdict v;
  switch (*prop) {
    case Property::ohm_rush: {
      OracleSweep sweep;
      sweep.seed = o.seed;
      v = check_ohm_rush(s, sweep, lim);
      break;
    }
    case Property::mccoy: v = is_mccoy(s, lim); break;
    case Property::weak_content_radical: v = is_weak_content_radical(s, lim); break;
    case Property::weak_content_primes: v = is_weak_content_primes(s, lim); break;
    case Property::content_algebra: v = is_content_algebra(s, o.nmax, lim); break;
    case Property::semicontent: v = is_semicontent(s, lim); break;
    case Property::residually_mccoy: v = is_residually_mccoy(s, family_of(o.family), lim); break;
    case Property::property_a: v = has_property_A(in.base, lim); break;
    case Property::fidel_a: v = has_fidel_A(in.base, lim); break;
  }
  const std::string witness = v.witness ? describe_witness(*s, *v.witness) : "";
  if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["descriptor"] = {{"base", in.base->descriptor()}, {"alg", in.alg ? in.alg->descriptor() : ""}};
    j["property"] = property_name(*prop);
    if (*prop == Property::residually_mccoy) j["family"] = o.family;
    j["holds"] = v.holds;
    j["witness"] = v.witness ? nlohmann::ordered_json(witness) : nlohmann::ordered_json(nullptr);
    j["checked"] = v.checked_count;
    out << j.dump() << '\n';
  } else {
    out << (v.holds ? "true" : "false");
    if (v.witness) out << "; witness " << witness;
    out << '\n';
  }
  if (!o.expect.empty() && (o.expect == "true") != v.holds) return kExitViolation;
  return kExitOk;
}

int cmd_verify_theorems(const Options& o, std::ostream& out, std::ostream& err) {
  const Corpus corpus = generate_corpus(o.corpus());
  for (const auto& n : corpus.notices) err << "notice: " << n << '\n';
  SuiteSummary suite = verify_theorem_suite(corpus, o.report(), o.threads);
  const SuiteSummary local = verify_localization_lemmas(corpus, o.limits());
  suite.violations.insert(suite.violations.end(), local.violations.begin(), local.violations.end());
  if (o.json) {
    out << summary_to_json(suite).dump() << '\n';
  } else {
    for (const auto& v : suite.violations)
      out << "VIOLATION " << v.clause << " " << v.alg_descriptor << " over " << v.base_descriptor << ": " << v.detail
          << '\n';
    out << suite.violations.size() << " violations / " << suite.instances << " instances\n";
  }
  return suite.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_verify_example1(const Options& o, std::ostream& out) {
  bool ok = true;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (unsigned d : o.example_depths) {
    const Example1Report r = verify_example1(d, o.limits());
    ok = ok && r.passed();
    if (o.json)
      all.push_back(example1_to_json(r));
    else
      out << example1_table(r);
  }
  if (o.json) out << all.dump() << '\n';
  return ok ? kExitOk : kExitViolation;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const ReportPredicate pred = ReportPredicate::parse(o.predicate);
  const Corpus corpus = generate_corpus(o.corpus());
  for (const auto& n : corpus.notices) err << "notice: " << n << '\n';
  const SuiteSummary suite = verify_theorem_suite(corpus, o.report(), o.threads);
  const SearchResult found = search_counterexample(suite.reports, pred);
  if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["predicate"] = pred.text;
    j["instances"] = suite.instances;
    j["found"] = found.index.has_value();
    j["critical"] = found.critical;
    j["report"] = found.index ? report_to_json(suite.reports[*found.index]) : nlohmann::ordered_json(nullptr);
    out << j.dump() << '\n';
  } else if (found.index) {
    const PropertyReport& r = suite.reports[*found.index];
    out << (found.critical ? "CRITICAL found: " : "found: ") << r.alg_descriptor << " over " << r.base_descriptor
        << '\n';
    out << report_table(r);
  } else {
    out << "absent (" << suite.instances << " instances)\n";
  }
  return found.critical ? kExitViolation : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Content, McCoy and related properties of finite free algebras", "contentlab"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "full property report for one algebra");
  auto* content_cmd = app.add_subcommand("content", "content ideal of an element");
  auto* check = app.add_subcommand("check", "one property verdict with witness");
  auto* theorems = app.add_subcommand("verify-theorems", "theorem suite over a generated corpus");
  auto* example1 = app.add_subcommand("verify-example1", "content and McCoy checks on the cusp algebra k[x,y]/(y^2-x^3) truncated at depth N");
  auto* search = app.add_subcommand("search", "first corpus instance matching a predicate");

  for (auto* c : {analyze, content_cmd, check}) {
    c->add_option("--base", o.base, "base ring descriptor")->required();
    c->add_option("--alg", o.alg, "algebra descriptor");
    add_caps(c, o);
  }
  analyze->get_option("--alg")->required();
  content_cmd->get_option("--alg")->required();
  content_cmd->add_option("--elem", o.elem, "element expression")->required();
  check->add_option("property", o.property,
                    "ohm-rush|mccoy|weak-content|weak-content-primes|content-algebra|semicontent|"
                    "residually-mccoy|property-a|fidel-a")
      ->required();
  check->add_option("--family", o.family, "ideal family for residually-mccoy")
      ->check(CLI::IsMember({"all", "radical", "prime"}))
      ->capture_default_str();
  check->add_option("--expect", o.expect, "exit with status 1 unless the verdict is this value")
      ->check(CLI::IsMember({"true", "false"}));
  for (auto* c : {theorems, search}) {
    add_caps(c, o);
    add_corpus(c, o);
  }
  search->add_option("--predicate", o.predicate, "e.g. \"mccoy & !weak_content\"")->required();
  example1->add_option("--depth", o.example_depths, "truncation depth(s) N >= 4")->delimiter(',');
  add_caps(example1, o);

  std::vector<std::string> argv_store{"contentlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (content_cmd->parsed()) return cmd_content(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (theorems->parsed()) return cmd_verify_theorems(o, out, err);
    if (example1->parsed()) return cmd_verify_example1(o, out);
    if (search->parsed()) return cmd_search(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace contentlab
