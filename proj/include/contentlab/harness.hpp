#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contentlab/algebra.hpp"
#include "contentlab/properties.hpp"

namespace contentlab {

struct CorpusParams {
  std::vector<std::size_t> moduli{2, 3, 4, 5, 6, 8, 9, 12};
  std::vector<std::string> composites{"trunc(Z/2,2)", "trunc(Z/2,3)", "trunc(Z/2,4)", "trunc(Z/3,2)",
                                      "prod(Z/2,Z/2)", "prod(Z/2,Z/4)", "quot(trunc(Z/4,2); 2*x)"};
  std::vector<std::size_t> depths{2, 3};
  bool all_quadratic = true;
  std::vector<std::size_t> group_orders{2, 3};
  std::vector<std::string> monoid_paths;
  Limits limits;
  unsigned seed = 0;
};

struct Instance {
  std::string base_descriptor;
  std::string alg_descriptor;
  AlgebraPtr algebra;
};

struct Corpus {
  CorpusParams params;
  std::vector<Instance> instances;
  std::vector<std::string> notices;  // skipped instances
};

/// Deterministic instance list: for every base (Z/n for n in moduli, then the
/// composites) the identity algebra, trunc(d) for each depth, quad(a) for
/// every base element a, the cyclic group algebras, then user monoids.
/// Instances over a cap are skipped with a notice.
Corpus generate_corpus(const CorpusParams& params);

struct ReportOptions {
  unsigned n_max = 8;
  OracleSweep sweep;
  Limits limits;
};

struct PropertyReport {
  std::string base_descriptor, alg_descriptor;
  std::size_t base_size = 0, alg_size = 0, rank = 0;
  std::size_t ideal_count = 0, spectrum_size = 0;

  Verdict ohm_rush, mccoy, mccoy_zero_ideal;
  Verdict weak_content_radical, weak_content_primes;
  Verdict content_algebra, semicontent;
  Verdict rm_all, rm_radical, rm_prime;
  Verdict property_a, fidel_a;

  // Witness descriptions rendered in x/y notation, keyed by field name.
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::pair<std::string, double>> timings_ms;

  struct Inconsistency {
    std::string clause;
    std::string detail;
  };
  std::vector<Inconsistency> inconsistencies;
  std::optional<std::string> error;  // incomplete report: names the failing checker

  bool consistent() const { return inconsistencies.empty() && !error; }
  bool weak_content() const { return weak_content_radical.holds; }
};

/// The report fields addressable by name, in serialization order.
std::vector<std::pair<std::string, const Verdict*>> report_fields(const PropertyReport& r);

PropertyReport full_report(const Instance& instance, const ReportOptions& options = {});

struct Violation {
  std::string base_descriptor, alg_descriptor;
  std::string clause;
  std::string detail;
};

struct SuiteSummary {
  std::size_t instances = 0;
  std::vector<Violation> violations;
  std::vector<PropertyReport> reports;

  std::size_t count(const std::string& clause) const;
};

/// full_report on every instance (in parallel when threads > 1) and collects
/// every inconsistency as a violation.
SuiteSummary verify_theorem_suite(const Corpus& corpus, const ReportOptions& options = {},
                                  unsigned threads = 0);

/// McCoy is unchanged by inverting the units, and McCoy at every maximal
/// ideal implies McCoy. Clauses "localization-units" and "globalization".
SuiteSummary verify_localization_lemmas(const Corpus& corpus, const Limits& limits = {});

struct Example1Report {
  unsigned depth = 0;
  std::string base_descriptor, alg_descriptor;
  std::string content_y_squared, content_y2, radical_content_y2;
  bool content_y_squared_is_unit = false;
  bool content_y2_is_x_cubed = false;
  bool radical_is_x_and_proper = false;
  bool weak_content_fails = false;
  bool weak_content_witness_is_y_y = false;
  Verdict weak_content, weak_content_primes, mccoy;
  std::string weak_content_witness, mccoy_witness;

  /// The four content/radical/weak-content assertions.
  bool passed() const {
    return content_y_squared_is_unit && content_y2_is_x_cubed && radical_is_x_and_proper && weak_content_fails;
  }
};

/// quad(trunc(Z/2,N), x^3), the finite stand-in for k[x] -> k[x,y]/(y^2 - x^3).
/// N < 4 is refused with a degenerate-depth error since x^3 = 0 there.
Example1Report verify_example1(unsigned depth, const Limits& limits = {});

/// Conjunction of literals over report fields, e.g. "mccoy & !weak_content".
struct ReportPredicate {
  std::vector<std::pair<std::string, bool>> literals;  // field, wanted value
  std::string text;

  static ReportPredicate parse(std::string text);
  bool operator()(const PropertyReport& r) const;
  /// True for the two predicates encoding open questions (semicontent but not
  /// content; weak content but not semicontent).
  bool critical() const;
};

struct SearchResult {
  std::optional<std::size_t> index;  // into the report list
  bool critical = false;
};

SearchResult search_counterexample(const std::vector<PropertyReport>& reports, const ReportPredicate& pred);
SearchResult search_counterexample(const Corpus& corpus, const ReportPredicate& pred,
                                   const ReportOptions& options = {});

}  // namespace contentlab
