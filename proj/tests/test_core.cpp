#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyl/coxeter.hpp"

using namespace weyl;

namespace {

CoxeterSystem parse(const std::string& s) { return CoxeterSystem::parse(s); }

const char* kDInf = R"({"generators":["s","t"],"labels":{"s,t":"inf"}})";
const char* kA2t =
    R"({"generators":["a","b","c"],"labels":{"a,b":3,"b,c":3,"a,c":3}})";

}  // namespace

TEST_CASE("parse basic systems") {
  auto dinf = parse(kDInf);
  CHECK(dinf.rank() == 2);
  CHECK(dinf.label(0, 1) == kInfLabel);
  CHECK(dinf.label(0, 0) == 1);

  auto a2t = parse(kA2t);
  CHECK(a2t.rank() == 3);
  CHECK(a2t.label(0, 2) == 3);
}

TEST_CASE("unspecified pairs default to 2") {
  auto sys = parse(R"({"generators":["a","b","c"],"labels":{"a,b":3}})");
  CHECK(sys.label(0, 1) == 3);
  CHECK(sys.label(0, 2) == 2);
  CHECK(sys.label(1, 2) == 2);
}

TEST_CASE("pair keys accepted in either order, duplicates rejected") {
  auto sys = parse(R"({"generators":["a","b"],"labels":{"b,a":5}})");
  CHECK(sys.label(0, 1) == 5);
  CHECK_THROWS_AS(
      parse(R"({"generators":["a","b"],"labels":{"a,b":3,"b,a":3}})"), Error);
}

TEST_CASE("validation errors carry the right codes") {
  auto code = [](const std::string& doc) {
    try {
      parse(doc);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code(R"({"generators":["a","a"]})") == ErrorCode::DuplicateGenerator);
  CHECK(code(R"({"generators":["a"],"labels":{"a,a":2}})") ==
        ErrorCode::InvalidLabel);
  CHECK(code(R"({"generators":["a","b"],"labels":{"a,b":1}})") ==
        ErrorCode::InvalidLabel);
  CHECK(code(R"({"generators":["a"],"labels":{"a,z":3}})") ==
        ErrorCode::UnknownGenerator);
  CHECK(code(R"(not json)") == ErrorCode::Malformed);
  CHECK(code(R"({"generators":[]})") == ErrorCode::Malformed);
}

TEST_CASE("parse then serialize round-trips") {
  for (const char* doc : {kDInf, kA2t}) {
    auto sys = parse(doc);
    auto again = parse(sys.serialize());
    CHECK(sys.same_matrix(again));
  }
}

TEST_CASE("diagram conventions") {
  auto dinf = parse(kDInf);
  CHECK(dinf.diagram(DiagramKind::Presentation).edges.empty());
  auto cox = dinf.diagram(DiagramKind::Coxeter);
  REQUIRE(cox.edges.size() == 1);
  CHECK(cox.edges[0].label == kInfLabel);

  auto a2t = parse(kA2t);
  CHECK(a2t.diagram(DiagramKind::Presentation).edges.size() == 3);
  CHECK(a2t.diagram(DiagramKind::Coxeter).edges.size() == 3);

  // complementarity: m=2 in neither, 2<m<inf in both
  auto sys = parse(R"({"generators":["a","b","c"],
                       "labels":{"a,b":3,"b,c":"inf"}})");
  auto pres = sys.diagram(DiagramKind::Presentation);
  auto coxd = sys.diagram(DiagramKind::Coxeter);
  CHECK(pres.edges.size() == 2);  // ab (3) and ac (2); bc is inf
  CHECK(coxd.edges.size() == 2);  // ab (3) and bc (inf); ac is 2
  for (const auto& e : coxd.edges) CHECK(sys.label(e.u, e.v) != 2);
}

TEST_CASE("presentation diagram includes m=2 edges") {
  auto sys = parse(R"({"generators":["a","b"]})");
  CHECK(sys.diagram(DiagramKind::Presentation).edges.size() == 1);
  CHECK(sys.diagram(DiagramKind::Coxeter).edges.empty());
}

TEST_CASE("irreducible components") {
  auto a1a1 = parse(R"({"generators":["s","t"]})");
  CHECK(a1a1.irreducible_components().size() == 2);

  auto a2t = parse(kA2t);
  CHECK(a2t.irreducible_components().size() == 1);

  auto sys = parse(R"({"generators":["a","b","c","d"],
                       "labels":{"a,b":"inf"}})");
  auto comps = sys.irreducible_components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == 0b0011u);
  CHECK(comps[1] == 0b0100u);
  CHECK(comps[2] == 0b1000u);
}

TEST_CASE("restrict") {
  auto a2t = parse(kA2t);
  auto sub = a2t.restrict_to(0b011);
  CHECK(sub.rank() == 2);
  CHECK(sub.label(0, 1) == 3);
  CHECK(sub.generators() == std::vector<std::string>{"a", "b"});

  auto empty = a2t.restrict_to(0);
  CHECK(empty.empty());
  CHECK(empty.rank() == 0);

  CHECK_THROWS_AS(a2t.restrict_to(0b1000), Error);
}

TEST_CASE("restrict then reassemble reproduces labels") {
  auto sys = parse(R"({"generators":["a","b","c","d"],
                       "labels":{"a,b":4,"c,d":5}})");
  for (GenSet comp : sys.irreducible_components()) {
    auto sub = sys.restrict_to(comp);
    std::vector<int> idx;
    for (int i = 0; i < sys.rank(); ++i)
      if ((comp >> i) & 1u) idx.push_back(i);
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b)
        CHECK(sub.label(static_cast<int>(a), static_cast<int>(b)) ==
              sys.label(idx[a], idx[b]));
  }
}

TEST_CASE("subset orderings") {
  CHECK(subset_lex_less(0b1001, 0b0110));  // {0,3} < {1,2}
  CHECK(!subset_lex_less(0b0110, 0b1001));
  CHECK(subset_size_lex_less(0b100, 0b011));  // size first
  CHECK(subset_lex_less(0b001, 0b011));       // prefix is smaller
}

TEST_CASE("perpendicular") {
  auto sys = parse(R"({"generators":["a","b","c","d"],
                       "labels":{"a,b":3,"c,d":3}})");
  CHECK(sys.perpendicular(0b0011, 0b1100));
  CHECK(!sys.perpendicular(0b0011, 0b0110));  // overlap
  auto sys2 = parse(R"({"generators":["a","b","c"],
                        "labels":{"a,b":3,"b,c":3}})");
  CHECK(!sys2.perpendicular(0b001, 0b010));
}
