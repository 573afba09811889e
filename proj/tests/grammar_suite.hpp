#pragma once

#include <string>
#include <vector>

#include "contentlab/descriptor.hpp"

namespace contentlab::testing {

struct GrammarCase {
  enum class Kind { ring, algebra, element } kind;
  std::string base, alg, text;
};

// 20 rings, 15 algebras, 15 elements.
inline std::vector<GrammarCase> grammar_suite() {
  using K = GrammarCase::Kind;
  std::vector<GrammarCase> out;
  for (const char* r : {"Z/1", "Z/2", "Z/7", "Z/12", "Z/97", " Z/5 ", "trunc(Z/2,1)", "trunc(Z/2,4)",
                        "trunc(Z/3,3)", "trunc(Z/4,2)", "trunc(trunc(Z/2,2),2)", "prod(Z/2,Z/3)", "prod(Z/4,Z/4)",
                        "prod(prod(Z/2,Z/2),Z/3)", "prod(trunc(Z/2,2),Z/3)", "quot(Z/12; 4)",
                        "quot(trunc(Z/4,2); 2*x)", "quot(trunc(Z/2,4); x^3)", "quot(trunc(Z/3,3); x^2, 3)",
                        "quot(prod(Z/4,Z/2); (2,0))"})
    out.push_back({K::ring, "", "", r});
  const std::pair<const char*, const char*> algs[] = {
      {"Z/4", "id"},          {"Z/4", "trunc(3)"},         {"trunc(Z/2,4)", "quad(x^3)"},
      {"trunc(Z/2,4)", "quad(1+x)"}, {"Z/5", "quad(2)"},   {"Z/3", "group(Z/3)"},
      {"prod(Z/2,Z/2)", "quad((1,0))"}, {"Z/6", "quad(-1)"}, {"trunc(Z/3,2)", "quad(2*x+1)"},
      {"Z/2", "group(Z/4)"},  {"Z/9", "quad(3)"},          {"quot(trunc(Z/4,2); 2*x)", "quad(x)"},
      {"Z/2", "trunc(1)"},    {"Z/4", "group(Z/1)"},       {"Z/7", "quad(3^2)"}};
  for (const auto& [b, a] : algs) out.push_back({K::algebra, b, "", a});
  struct E {
    const char *b, *a, *e;
  };
  const E elems[] = {{"trunc(Z/2,4)", "quad(x^3)", "y*y"},
                     {"trunc(Z/2,4)", "quad(x^3)", "x*y+1"},
                     {"trunc(Z/2,4)", "quad(x^3)", "(1+x)^3*y"},
                     {"trunc(Z/2,4)", "quad(x^3)", "x^3+x^2*y"},
                     {"Z/4", "trunc(3)", "2*x^2+3"},
                     {"Z/4", "trunc(3)", "(x+1)^2"},
                     {"Z/4", "trunc(3)", "-x"},
                     {"Z/3", "group(Z/3)", "t^2+2*t"},
                     {"Z/3", "group(Z/3)", "t^3"},
                     {"prod(Z/2,Z/4)", "group(Z/2)", "(1,3)*t+(0,2)"},
                     {"Z/5", "quad(2)", "y^3"},
                     {"trunc(Z/3,2)", "trunc(2)", "x*y+2"},
                     {"quot(trunc(Z/4,2); 2*x)", "id", "x+3"},
                     {"Z/8", "trunc(2)", "4*x - 3"},
                     {"Z/6", "quad(5)", "(y+1)*(y-1)"}};
  for (const auto& e : elems) out.push_back({K::element, e.b, e.a, e.e});
  return out;
}

/// parse(print(parse(text))) reproduces the object; returns an empty string
/// on success, otherwise what went wrong.
inline std::string round_trip(const GrammarCase& c) {
  try {
    switch (c.kind) {
      case GrammarCase::Kind::ring: {
        const auto r1 = parse_ring(c.text);
        const auto r2 = parse_ring(r1->descriptor());
        if (r2->descriptor() != r1->descriptor()) return "descriptor " + r1->descriptor() + " -> " + r2->descriptor();
        if (!r1->same_tables(*r2)) return "tables differ after reparsing " + r1->descriptor();
        for (Elem a = 0; a < r1->size(); ++a)
          if (parse_ring_element(r1->name(a), r1) != a) return "element name " + r1->name(a);
        return "";
      }
      case GrammarCase::Kind::algebra: {
        const auto base = parse_ring(c.base);
        const auto s1 = parse_algebra(c.text, base);
        const auto s2 = parse_algebra(s1->descriptor(), base);
        if (s2->descriptor() != s1->descriptor()) return "descriptor " + s1->descriptor() + " -> " + s2->descriptor();
        if (!s1->same_structure(*s2)) return "structure differs after reparsing " + s1->descriptor();
        return "";
      }
      case GrammarCase::Kind::element: {
        const auto s = parse_algebra(c.alg, parse_ring(c.base));
        const auto f = parse_element(c.text, s);
        const std::string name = s->element_name(f.coords);
        if (parse_element(name, s).coords != f.coords) return "element " + c.text + " printed as " + name;
        return "";
      }
    }
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  return "unreachable";
}

}  // namespace contentlab::testing
