#include "contentlab/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace contentlab {

using nlohmann::ordered_json;

ordered_json report_to_json(const PropertyReport& r, bool with_timings) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["descriptor"] = {{"base", r.base_descriptor}, {"alg", r.alg_descriptor}};
  j["sizes"] = {{"base", r.base_size},
                {"alg", r.alg_size},
                {"rank", r.rank},
                {"ideals", r.ideal_count},
                {"spectrum", r.spectrum_size}};
  ordered_json verdicts = ordered_json::object();
  for (const auto& [name, v] : report_fields(r)) verdicts[name] = v->holds;
  j["verdicts"] = verdicts;
  ordered_json witnesses = ordered_json::object();
  for (const auto& [name, w] : r.witnesses) witnesses[name] = w;
  j["witnesses"] = witnesses;
  if (with_timings) {
    ordered_json timings = ordered_json::object();
    for (const auto& [name, ms] : r.timings_ms) timings[name] = ms;
    j["timings"] = timings;
  }
  j["consistent"] = r.consistent();
  ordered_json inc = ordered_json::array();
  for (const auto& i : r.inconsistencies) inc.push_back({{"clause", i.clause}, {"detail", i.detail}});
  j["inconsistencies"] = inc;
  j["error"] = r.error ? ordered_json(*r.error) : ordered_json(nullptr);
  return j;
}

std::string report_table(const PropertyReport& r) {
  std::ostringstream out;
  out << "base " << r.base_descriptor << "  (|R|=" << r.base_size << ", " << r.ideal_count << " ideals, "
      << r.spectrum_size << " primes)\n";
  out << "alg  " << r.alg_descriptor << "  (|S|=" << r.alg_size << ", rank " << r.rank << ")\n";
  for (const auto& [name, v] : report_fields(r)) {
    out << "  " << std::left << std::setw(22) << name << (v->holds ? "true " : "false");
    for (const auto& [k, w] : r.witnesses)
      if (k == name) out << "  " << w;
    out << '\n';
  }
  for (const auto& i : r.inconsistencies) out << "INCONSISTENT " << i.clause << ": " << i.detail << '\n';
  if (r.error) out << "INCOMPLETE " << *r.error << '\n';
  return out.str();
}

ordered_json summary_to_json(const SuiteSummary& s, bool with_timings) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["instances"] = s.instances;
  ordered_json v = ordered_json::array();
  for (const auto& x : s.violations)
    v.push_back({{"base", x.base_descriptor}, {"alg", x.alg_descriptor}, {"clause", x.clause}, {"detail", x.detail}});
  j["violations"] = v;
  ordered_json reports = ordered_json::array();
  for (const auto& r : s.reports) reports.push_back(report_to_json(r, with_timings));
  j["reports"] = reports;
  return j;
}

ordered_json example1_to_json(const Example1Report& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["depth"] = r.depth;
  j["descriptor"] = {{"base", r.base_descriptor}, {"alg", r.alg_descriptor}};
  j["content_y_squared"] = r.content_y_squared;
  j["content_y2"] = r.content_y2;
  j["radical_content_y2"] = r.radical_content_y2;
  j["assertions"] = {{"content_y_squared_is_unit", r.content_y_squared_is_unit},
                     {"content_y2_is_x_cubed", r.content_y2_is_x_cubed},
                     {"radical_is_x_and_proper", r.radical_is_x_and_proper},
                     {"weak_content_fails", r.weak_content_fails}};
  j["weak_content_witness_is_y_y"] = r.weak_content_witness_is_y_y;
  j["verdicts"] = {{"weak_content", r.weak_content.holds},
                   {"weak_content_primes", r.weak_content_primes.holds},
                   {"mccoy", r.mccoy.holds}};
  j["witnesses"] = {{"weak_content", r.weak_content_witness}, {"mccoy", r.mccoy_witness}};
  j["passed"] = r.passed();
  return j;
}

std::string example1_table(const Example1Report& r) {
  auto mark = [](bool b) { return b ? "ok  " : "FAIL"; };
  std::ostringstream out;
  out << "cusp algebra at depth " << r.depth << ": " << r.alg_descriptor << " over " << r.base_descriptor << '\n';
  out << "  " << mark(r.content_y_squared_is_unit) << " c(y)^2 = " << r.content_y_squared << '\n';
  out << "  " << mark(r.content_y2_is_x_cubed) << " c(y^2) = " << r.content_y2 << '\n';
  out << "  " << mark(r.radical_is_x_and_proper) << " rad c(y^2) = " << r.radical_content_y2 << '\n';
  out << "  " << mark(r.weak_content_fails) << " weak content = " << (r.weak_content.holds ? "true" : "false");
  if (!r.weak_content_witness.empty()) out << "  (" << r.weak_content_witness << ")";
  out << '\n';
  out << "  mccoy = " << (r.mccoy.holds ? "true" : "false");
  if (!r.mccoy_witness.empty()) out << "  (" << r.mccoy_witness << ")";
  out << '\n';
  return out.str();
}

}  // namespace contentlab
