#include "contentlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "contentlab/descriptor.hpp"
#include "contentlab/quotient.hpp"

namespace contentlab {

Corpus generate_corpus(const CorpusParams& params) {
  Corpus corpus;
  corpus.params = params;

  std::vector<RingPtr> bases;
  auto add_base = [&](const std::string& what, const std::function<RingPtr()>& make) {
    try {
      bases.push_back(make());
    } catch (const Error& e) {
      corpus.notices.push_back("skipped base " + what + ": " + e.what());
    }
  };
  for (std::size_t n : params.moduli)
    add_base("Z/" + std::to_string(n), [&] { return make_zmod(n, params.limits); });
  for (const auto& d : params.composites) add_base(d, [&] { return parse_ring(d, params.limits); });

  for (const RingPtr& base : bases) {
    auto add = [&](const std::string& what, const std::function<AlgebraPtr()>& make) {
      try {
        AlgebraPtr s = make();
        corpus.instances.push_back({base->descriptor(), s->descriptor(), std::move(s)});
      } catch (const Error& e) {
        corpus.notices.push_back("skipped " + what + " over " + base->descriptor() + ": " + e.what());
      }
    };
    add("id", [&] { return alg_identity(base, params.limits); });
    for (std::size_t d : params.depths)
      add("trunc(" + std::to_string(d) + ")", [&] { return alg_truncated(base, d, params.limits); });
    if (params.all_quadratic)
      for (Elem a = 0; a < base->size(); ++a)
        add("quad(" + base->name(a) + ")", [&] { return alg_quadratic(base, a, params.limits); });
    for (std::size_t k : params.group_orders)
      add("group(Z/" + std::to_string(k) + ")", [&] { return alg_group(base, k, params.limits); });
    for (const auto& path : params.monoid_paths)
      add("monoid(" + path + ")", [&] { return alg_monoid(base, MonoidTable::read(path), params.limits); });
  }
  return corpus;
}

std::vector<std::pair<std::string, const Verdict*>> report_fields(const PropertyReport& r) {
  return {{"ohm_rush", &r.ohm_rush},
          {"mccoy", &r.mccoy},
          {"mccoy_zero_ideal", &r.mccoy_zero_ideal},
          {"weak_content", &r.weak_content_radical},
          {"weak_content_primes", &r.weak_content_primes},
          {"content", &r.content_algebra},
          {"semicontent", &r.semicontent},
          {"rm_all", &r.rm_all},
          {"rm_radical", &r.rm_radical},
          {"rm_prime", &r.rm_prime},
          {"property_a", &r.property_a},
          {"fidel_a", &r.fidel_a}};
}

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

void check_consistency(PropertyReport& rep, const AlgebraPtr& s, const ReportOptions& opt) {
  auto witness_of = [&](const std::string& field) -> std::string {
    for (const auto& [k, v] : rep.witnesses)
      if (k == field) return v;
    return "";
  };
  auto holds = [&](const std::string& field) {
    for (const auto& [k, v] : report_fields(rep))
      if (k == field) return v->holds;
    return false;
  };
  auto state = [&](const std::string& field) {
    std::string out = field + "=" + yn(holds(field));
    const std::string w = witness_of(field);
    if (!w.empty()) out += " [" + w + "]";
    return out;
  };
  auto equivalent = [&](const std::string& clause, std::initializer_list<const char*> fields) {
    const bool first = holds(*fields.begin());
    bool same = true;
    for (const char* f : fields) same = same && holds(f) == first;
    if (same) return;
    std::string detail;
    for (const char* f : fields) detail += (detail.empty() ? "" : "; ") + state(f);
    rep.inconsistencies.push_back({clause, detail});
  };
  auto implies = [&](const std::string& clause, const char* a, const char* b) {
    if (holds(a) && !holds(b)) rep.inconsistencies.push_back({clause, state(a) + " but " + state(b)});
  };

  equivalent("weak-content-dual", {"weak_content", "weak_content_primes"});
  equivalent("weak-content-residual", {"weak_content", "rm_prime", "rm_radical"});
  equivalent("noetherian-equivalence", {"weak_content", "semicontent", "rm_all", "rm_radical", "rm_prime"});
  implies("implication-diagram", "content", "semicontent");
  implies("implication-diagram", "semicontent", "weak_content");
  implies("implication-diagram", "rm_all", "weak_content");
  implies("implication-diagram", "rm_all", "mccoy");
  implies("semicontent-residual", "semicontent", "rm_all");
  if (!rep.property_a.holds) rep.inconsistencies.push_back({"property-a", state("property_a")});
  if (!rep.fidel_a.holds) rep.inconsistencies.push_back({"property-a", state("fidel_a")});
  if (!rep.ohm_rush.holds) rep.inconsistencies.push_back({"ohm-rush", state("ohm_rush")});
  equivalent("mccoy-zero-ideal", {"mccoy", "mccoy_zero_ideal"});

  const std::pair<const char*, Property> algebra_checks[] = {
      {"ohm_rush", Property::ohm_rush},
      {"mccoy", Property::mccoy},
      {"mccoy_zero_ideal", Property::mccoy},
      {"weak_content", Property::weak_content_radical},
      {"weak_content_primes", Property::weak_content_primes},
      {"content", Property::content_algebra},
      {"semicontent", Property::semicontent},
      {"rm_all", Property::residually_mccoy},
      {"rm_radical", Property::residually_mccoy},
      {"rm_prime", Property::residually_mccoy},
  };
  for (const auto& [field, prop] : algebra_checks) {
    const Verdict* v = nullptr;
    for (const auto& [k, ptr] : report_fields(rep))
      if (k == field) v = ptr;
    if (!revalidate(s, prop, *v, opt.n_max, opt.limits))
      rep.inconsistencies.push_back({"witness", std::string(field) + " witness does not re-validate"});
  }
  if (!revalidate(s->base(), Property::property_a, rep.property_a, opt.limits))
    rep.inconsistencies.push_back({"witness", "property_a witness does not re-validate"});
  if (!revalidate(s->base(), Property::fidel_a, rep.fidel_a, opt.limits))
    rep.inconsistencies.push_back({"witness", "fidel_a witness does not re-validate"});
}

}  // namespace

PropertyReport full_report(const Instance& instance, const ReportOptions& opt) {
  const AlgebraPtr& s = instance.algebra;
  PropertyReport rep;
  rep.base_descriptor = instance.base_descriptor;
  rep.alg_descriptor = instance.alg_descriptor;
  rep.base_size = s->base()->size();
  rep.alg_size = s->size();
  rep.rank = s->rank();

  Analyzer an(s, opt.limits, opt.n_max);
  auto run = [&](const char* field, Verdict& slot, const std::function<Verdict()>& fn) {
    if (rep.error) return;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      slot = fn();
      if (!slot.holds && slot.witness) rep.witnesses.emplace_back(field, describe_witness(*s, *slot.witness));
    } catch (const Error& e) {
      rep.error = std::string(field) + ": " + e.what();
    }
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    rep.timings_ms.emplace_back(field, dt.count());
  };

  run("ohm_rush", rep.ohm_rush, [&] { return an.ohm_rush(opt.sweep); });
  if (!rep.error) {
    rep.ideal_count = an.lattice().size();
    rep.spectrum_size = an.lattice().primes().size();
  }
  run("mccoy", rep.mccoy, [&] { return an.mccoy(); });
  run("mccoy_zero_ideal", rep.mccoy_zero_ideal, [&] {
    const AlgebraMap q = base_change(s, Ideal::zero(s->base()), opt.limits);
    Verdict v = is_mccoy(q.target, opt.limits);
    if (v.witness) {
      v.witness->f = q.lift(*v.witness->f);
      v.witness->g = q.lift(*v.witness->g);
    }
    return v;
  });
  run("weak_content", rep.weak_content_radical, [&] { return an.weak_content_radical(); });
  run("weak_content_primes", rep.weak_content_primes, [&] { return an.weak_content_primes(); });
  run("content", rep.content_algebra, [&] { return an.content_algebra(); });
  run("semicontent", rep.semicontent, [&] { return an.semicontent(); });
  run("rm_all", rep.rm_all, [&] { return an.residually_mccoy(IdealFamily::all); });
  run("rm_radical", rep.rm_radical, [&] { return an.residually_mccoy(IdealFamily::radical); });
  run("rm_prime", rep.rm_prime, [&] { return an.residually_mccoy(IdealFamily::prime); });
  run("property_a", rep.property_a, [&] { return has_property_A(s->base(), opt.limits); });
  run("fidel_a", rep.fidel_a, [&] { return has_fidel_A(s->base(), opt.limits); });

  if (!rep.error) check_consistency(rep, s, opt);
  return rep;
}

std::size_t SuiteSummary::count(const std::string& clause) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.clause == clause; }));
}

SuiteSummary verify_theorem_suite(const Corpus& corpus, const ReportOptions& options, unsigned threads) {
  SuiteSummary out;
  out.instances = corpus.instances.size();
  out.reports.resize(corpus.instances.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, corpus.instances.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.instances.size(); i = next++)
      out.reports[i] = full_report(corpus.instances[i], options);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& rep : out.reports) {
    if (rep.error) out.violations.push_back({rep.base_descriptor, rep.alg_descriptor, "incomplete", *rep.error});
    for (const auto& inc : rep.inconsistencies)
      out.violations.push_back({rep.base_descriptor, rep.alg_descriptor, inc.clause, inc.detail});
  }
  return out;
}

SuiteSummary verify_localization_lemmas(const Corpus& corpus, const Limits& limits) {
  SuiteSummary out;
  out.instances = corpus.instances.size();
  for (const Instance& inst : corpus.instances) {
    const AlgebraPtr& s = inst.algebra;
    auto violation = [&](const std::string& clause, const std::string& detail) {
      out.violations.push_back({inst.base_descriptor, inst.alg_descriptor, clause, detail});
    };
    try {
      const bool global = is_mccoy(s, limits).holds;
      const IdealLattice lat(s->base(), limits);
      std::vector<Ideal> spectrum;
      for (auto id : lat.primes()) spectrum.push_back(lat.ideal(id));

      // W = complement of every prime = the units, the regular elements of a
      // finite ring.
      const auto units = SaturatedMultSet::make(s->base(), spectrum);
      const bool at_units = is_mccoy(localize_algebra(s, units, limits).target, limits).holds;
      if (at_units != global)
        violation("localization-units", std::string("mccoy=") + yn(global) + " but mccoy(W^-1 S)=" + yn(at_units));

      bool all_local = true;
      for (const Ideal& m : spectrum) {
        if (!is_maximal(m)) violation("prime-not-maximal", to_string(m));
        const auto w = SaturatedMultSet::make(s->base(), {m});
        if (!is_mccoy(localize_algebra(s, w, limits).target, limits).holds) all_local = false;
      }
      if (all_local && !global) violation("globalization", "McCoy at every maximal ideal but not globally");
    } catch (const Error& e) {
      violation("incomplete", e.what());
    }
  }
  return out;
}

Example1Report verify_example1(unsigned depth, const Limits& limits) {
  if (depth < 4)
    throw Error(Errc::degenerate_depth,
                "depth " + std::to_string(depth) + " is degenerate: x^3 = 0 in F2[x]/(x^" + std::to_string(depth) + ")");
  Example1Report rep;
  rep.depth = depth;
  const auto [base, xe] = make_truncated_poly_ring(make_zmod(2, limits), depth, limits);
  const Elem x = xe.index;
  const Elem x3 = base->pow(x, 3);
  const AlgebraPtr s = alg_quadratic(base, x3, limits);
  rep.base_descriptor = base->descriptor();
  rep.alg_descriptor = s->descriptor();

  const AlgebraElement y{s, s->basis(1)};
  const Ideal cy = content(y);
  const Ideal cy_sq = ideal_power(cy, 2);
  const Ideal cy2 = content(alg_arith(y, y, AlgOp::mul));
  const Ideal rad = radical(cy2);
  rep.content_y_squared = to_string(cy_sq);
  rep.content_y2 = to_string(cy2);
  rep.radical_content_y2 = to_string(rad);
  rep.content_y_squared_is_unit = cy_sq.is_unit();
  rep.content_y2_is_x_cubed = cy2 == ideal_generate(base, {x3});
  rep.radical_is_x_and_proper = rad == ideal_generate(base, {x}) && !rad.is_unit();

  Analyzer an(s, limits);
  rep.weak_content = an.weak_content_radical();
  rep.weak_content_primes = an.weak_content_primes();
  rep.mccoy = an.mccoy();
  rep.weak_content_fails = !rep.weak_content.holds && !rep.weak_content_primes.holds;
  if (rep.weak_content.witness) {
    rep.weak_content_witness = describe_witness(*s, *rep.weak_content.witness);
    rep.weak_content_witness_is_y_y = rep.weak_content.witness->f == y.coords && rep.weak_content.witness->g == y.coords;
  }
  if (rep.mccoy.witness) rep.mccoy_witness = describe_witness(*s, *rep.mccoy.witness);
  return rep;
}

ReportPredicate ReportPredicate::parse(std::string text) {
  static const std::set<std::string> known = [] {
    std::set<std::string> k;
    for (const auto& [name, v] : report_fields(PropertyReport{})) k.insert(name);
    return k;
  }();
  static const std::map<std::string, std::string> aliases{{"ohm_rush_consistency", "ohm_rush"},
                                                          {"weak_content_radical", "weak_content"},
                                                          {"content_algebra", "content"},
                                                          {"residually_mccoy", "rm_all"}};
  ReportPredicate p;
  p.text = text;
  for (const auto& [from, to] : {std::pair<std::string, std::string>{"\u2227", "&"}, {"\u00ac", "!"}}) {
    std::size_t at;
    while ((at = text.find(from)) != std::string::npos) text.replace(at, from.size(), to);
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('&', start);
    if (end == std::string::npos) end = text.size();
    std::string lit = text.substr(start, end - start);
    lit.erase(0, lit.find_first_not_of(" \t"));
    lit.erase(lit.find_last_not_of(" \t") + 1);
    bool want = true;
    if (!lit.empty() && lit[0] == '!') {
      want = false;
      lit.erase(0, 1);
      lit.erase(0, lit.find_first_not_of(" \t"));
    }
    if (auto a = aliases.find(lit); a != aliases.end()) lit = a->second;
    if (!known.count(lit))
      throw ParseError(Errc::syntax, start, "report field", "unknown report field '" + lit + "' in predicate");
    p.literals.emplace_back(lit, want);
    start = end + 1;
  }
  return p;
}

bool ReportPredicate::operator()(const PropertyReport& r) const {
  if (r.error) return false;
  const auto fields = report_fields(r);
  for (const auto& [name, want] : literals)
    for (const auto& [k, v] : fields)
      if (k == name && v->holds != want) return false;
  return true;
}

bool ReportPredicate::critical() const {
  const std::set<std::pair<std::string, bool>> lits(literals.begin(), literals.end());
  const std::set<std::pair<std::string, bool>> open1{{"semicontent", true}, {"content", false}};
  const std::set<std::pair<std::string, bool>> open2{{"weak_content", true}, {"semicontent", false}};
  return lits == open1 || lits == open2;
}

SearchResult search_counterexample(const std::vector<PropertyReport>& reports, const ReportPredicate& pred) {
  SearchResult out;
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (pred(reports[i])) {
      out.index = i;
      out.critical = pred.critical();
      break;
    }
  return out;
}

SearchResult search_counterexample(const Corpus& corpus, const ReportPredicate& pred, const ReportOptions& options) {
  const auto suite = verify_theorem_suite(corpus, options);
  return search_counterexample(suite.reports, pred);
}

}  // namespace contentlab
