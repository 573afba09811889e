#include <algorithm>

#include "doctest.h"

#include "contentlab/descriptor.hpp"
#include "contentlab/harness.hpp"
#include "contentlab/report_io.hpp"

using namespace contentlab;

namespace {

bool has_instance(const Corpus& c, const std::string& base, const std::string& alg) {
  return std::any_of(c.instances.begin(), c.instances.end(),
                     [&](const Instance& i) { return i.base_descriptor == base && i.alg_descriptor == alg; });
}

Instance instance(const char* base, const char* alg) {
  auto s = parse_algebra(alg, parse_ring(base));
  return {s->base()->descriptor(), s->descriptor(), s};
}

}  // namespace

TEST_CASE("corpus generation") {
  CorpusParams p;
  p.moduli = {2, 4};
  p.composites.clear();
  p.depths = {2};
  const Corpus c = generate_corpus(p);
  for (const char* a : {"quad(0)", "quad(1)", "quad(2)", "quad(3)"}) CHECK(has_instance(c, "Z/4", a));
  CHECK(has_instance(c, "Z/2", "id"));
  // per base: id, trunc(2), |R| quadratics, two group algebras
  CHECK(c.instances.size() == (1 + 1 + 2 + 2) + (1 + 1 + 4 + 2));

  const Corpus d = generate_corpus(CorpusParams{});
  CHECK(has_instance(d, "trunc(Z/2,4)", "quad(x^3)"));
  CHECK(d.notices.empty());
  CHECK(d.instances.size() == 181);
  for (const auto& inst : d.instances) {
    const auto s = parse_algebra(inst.alg_descriptor, parse_ring(inst.base_descriptor));
    CHECK(s->same_structure(*inst.algebra));
  }

  CorpusParams capped;
  capped.moduli = {2, 12};
  capped.composites.clear();
  capped.limits.max_alg = 200;
  const Corpus e = generate_corpus(capped);
  CHECK_FALSE(e.notices.empty());
  for (const auto& inst : e.instances) CHECK(inst.algebra->size() <= 200);
}

TEST_CASE("full reports") {
  const auto id = full_report(instance("Z/4", "id"));
  CHECK(id.consistent());
  for (const auto& [name, v] : report_fields(id)) {
    CAPTURE(name);
    CHECK(v->holds);
  }

  const auto tr = full_report(instance("Z/4", "trunc(2)"));
  CHECK(tr.consistent());
  CHECK_FALSE(tr.mccoy.holds);
  CHECK_FALSE(tr.weak_content());
  CHECK_FALSE(tr.semicontent.holds);
  CHECK_FALSE(tr.rm_all.holds);
  CHECK_FALSE(tr.rm_radical.holds);
  CHECK_FALSE(tr.rm_prime.holds);

  const auto e1 = full_report(instance("trunc(Z/2,4)", "quad(x^3)"));
  CHECK(e1.consistent());
  CHECK_FALSE(e1.weak_content());
  CHECK_FALSE(e1.rm_prime.holds);
  CHECK_FALSE(e1.mccoy.holds);  // brute-force reference value
  CHECK(e1.ideal_count == 5);
  CHECK(e1.spectrum_size == 1);

  ReportOptions tight;
  tight.limits.max_ideals = 3;
  const auto capped = full_report(instance("Z/12", "id"), tight);
  REQUIRE(capped.error.has_value());
  CHECK(capped.error->rfind("ohm_rush:", 0) == 0);
  CHECK_FALSE(capped.consistent());
}

TEST_CASE("reports are deterministic") {
  const auto inst = instance("prod(Z/2,Z/4)", "quad((1,2))");
  const auto a = report_to_json(full_report(inst), false).dump();
  const auto b = report_to_json(full_report(instance("prod(Z/2,Z/4)", "quad((1,2))")), false).dump();
  CHECK(a == b);
  const auto j = report_to_json(full_report(inst));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j.contains("timings"));
  CHECK(j["verdicts"].size() == report_fields(PropertyReport{}).size());
}

TEST_CASE("theorem suite") {
  CHECK(verify_theorem_suite(Corpus{}).instances == 0);
  CHECK(verify_theorem_suite(Corpus{}).violations.empty());

  CorpusParams p;
  p.moduli = {2, 3, 4, 6};
  p.composites = {"trunc(Z/2,3)", "prod(Z/2,Z/2)"};
  const Corpus c = generate_corpus(p);
  const auto serial = verify_theorem_suite(c, {}, 1);
  const auto parallel = verify_theorem_suite(c, {}, 4);
  CHECK(serial.violations.empty());
  REQUIRE(serial.reports.size() == parallel.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i)
    CHECK(report_to_json(serial.reports[i], false) == report_to_json(parallel.reports[i], false));
  for (const auto& r : serial.reports) CHECK(r.mccoy.holds == r.mccoy_zero_ideal.holds);

  Corpus ids;
  for (const char* b : {"Z/2", "Z/6", "Z/8", "trunc(Z/3,2)"}) ids.instances.push_back(instance(b, "id"));
  const auto s = verify_theorem_suite(ids);
  CHECK(s.violations.empty());
  for (const auto& r : s.reports)
    for (const auto& [name, v] : report_fields(r)) CHECK(v->holds);
}

TEST_CASE("localization lemmas") {
  Corpus c;
  c.instances.push_back(instance("Z/6", "trunc(2)"));
  c.instances.push_back(instance("Z/6", "id"));
  c.instances.push_back(instance("Z/12", "quad(5)"));
  c.instances.push_back(instance("prod(Z/2,Z/4)", "group(Z/2)"));
  const auto s = verify_localization_lemmas(c);
  CHECK(s.instances == 4);
  CHECK(s.violations.empty());
}

TEST_CASE("truncated cusp algebra") {
  for (unsigned n : {4U, 5U}) {
    CAPTURE(n);
    const auto r = verify_example1(n);
    CHECK(r.passed());
    CHECK(r.content_y_squared == "(1)");
    CHECK(r.content_y2 == "(x^3)");
    CHECK(r.radical_content_y2 == "(x)");
    CHECK(r.weak_content_witness_is_y_y);
    CHECK_FALSE(r.mccoy.holds);  // y * x^(N-3) y = 0 with c(y) = (1)
  }
  try {
    verify_example1(3);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_depth);
  }
  Limits small;
  small.max_alg = 300;
  CHECK_THROWS_AS(verify_example1(5, small), Error);
}

TEST_CASE("predicates") {
  const auto p = ReportPredicate::parse("mccoy & !weak_content");
  REQUIRE(p.literals.size() == 2);
  CHECK(p.literals[1] == std::pair<std::string, bool>{"weak_content", false});
  CHECK_FALSE(p.critical());
  CHECK(ReportPredicate::parse("semicontent&!content").critical());
  CHECK(ReportPredicate::parse("!semicontent & weak_content").critical());
  CHECK(ReportPredicate::parse("mccoy ∧ ¬weak_content").literals == p.literals);
  CHECK(ReportPredicate::parse("!ohm_rush_consistency").literals[0].first == "ohm_rush");
  CHECK_THROWS_AS(ReportPredicate::parse("mccoy & nonsense"), ParseError);
  CHECK_THROWS_AS(ReportPredicate::parse("mccoy &"), ParseError);

  std::vector<PropertyReport> reports{full_report(instance("Z/4", "id")), full_report(instance("Z/4", "trunc(2)"))};
  const auto r = search_counterexample(reports, ReportPredicate::parse("!mccoy"));
  CHECK(r.index == 1U);
  CHECK_FALSE(search_counterexample(reports, ReportPredicate::parse("weak_content & !semicontent")).index);
}
