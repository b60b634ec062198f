#include <doctest.h>

#include "dlexplain/expression.hpp"
#include "dlexplain/knowledge_base.hpp"
#include "dlexplain/reasoner.hpp"
#include "dlexplain/text.hpp"
#include "support.hpp"

using namespace dlx;
using E = ClassExpression;

namespace {

E A(const char* n) { return E::atomic(n); }

// Independent length measure over the rendered tree shape.
std::size_t count_length(const E& e) {
  switch (e.kind()) {
    case ExprKind::Not:
      return 1 + count_length(e.child());
    case ExprKind::And:
    case ExprKind::Or:
      return 1 + count_length(e.left()) + count_length(e.right());
    case ExprKind::Exists:
    case ExprKind::Forall:
      return 2 + count_length(e.child());
    default:
      return 1;
  }
}

KnowledgeBase kb_from(std::initializer_list<std::pair<const char*, const char*>> subs) {
  KnowledgeBase kb;
  for (const auto& [a, b] : subs) {
    kb.signature.classes.insert(a);
    kb.signature.classes.insert(b);
    kb.tbox.push_back({A(a), A(b)});
  }
  return kb;
}

}  // namespace

TEST_CASE("length examples") {
  CHECK(length(A("Window")) == 1);
  CHECK(length(E::exists("hasCar", E::conjunction(A("Closed"), A("Short")))) == 5);
  CHECK(length(E::forall("contains", E::negation(A("Floor")))) == 4);
  CHECK(length(E::top()) == 1);
  CHECK(length(E::bottom()) == 1);
}

TEST_CASE("length is positive, matches a recount and grows with every constructor") {
  test::ExpressionGenerator gen({"A", "B", "C"}, {"R", "S"}, 7);
  for (int i = 0; i < 1000; ++i) {
    const auto e = gen.generate(5);
    REQUIRE(length(e) > 0);
    CHECK(length(e) == count_length(e));
    CHECK(length(E::negation(e)) > length(e));
    CHECK(length(E::exists("R", e)) > length(e));
    CHECK(length(E::forall("R", e)) > length(e));
    CHECK(length(E::conjunction(e, A("A"))) > length(e));
    CHECK(length(E::disjunction(A("A"), e)) > length(e));
  }
}

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize(E::conjunction(A("Short"), A("Closed"))).text() == "Closed and Short");
  CHECK(canonicalize(E::negation(E::negation(A("Road")))) == A("Road"));
  CHECK(canonicalize(E::conjunction(A("A"), E::conjunction(A("A"), A("B")))).text() == "A and B");
}

TEST_CASE("canonicalize flattens, sorts and rebuilds right-leaning chains") {
  const auto left_nested = E::conjunction(E::conjunction(A("C"), A("A")), A("B"));
  const auto c = canonicalize(left_nested);
  CHECK(c.text() == "A and B and C");
  CHECK(c.is(ExprKind::And));
  CHECK(c.left() == A("A"));
  CHECK(c.right().text() == "B and C");
  // A double negation of a conjunction under a conjunction flattens too.
  const auto nested = E::conjunction(A("D"), E::negation(E::negation(E::conjunction(A("B"), A("A")))));
  CHECK(canonicalize(nested).text() == "A and B and D");
  CHECK(canonicalize(E::disjunction(A("B"), E::disjunction(A("A"), A("B")))).text() == "A or B");
}

TEST_CASE("canonicalize is idempotent and preserves extensions") {
  for (const auto& name : test::fixture_names()) {
    const auto fx = test::load_fixture(name);
    const auto mkb = materialize(fx.kb);
    test::ExpressionGenerator gen(fx.kb.signature, 11);
    for (int i = 0; i < 300; ++i) {
      const auto e = gen.generate(4);
      const auto c = canonicalize(e);
      CHECK(canonicalize(c).text() == c.text());
      CHECK(length(c) <= length(e));
      CHECK(retrieve(mkb, e) == retrieve(mkb, c));
    }
  }
}

TEST_CASE("expression text is the equality key") {
  const auto a = E::exists("R", E::conjunction(A("A"), A("B")));
  const auto b = E::exists("R", E::conjunction(A("A"), A("B")));
  CHECK(a == b);
  CHECK(std::hash<E>{}(a) == std::hash<E>{}(b));
  CHECK_FALSE(a == E::forall("R", E::conjunction(A("A"), A("B"))));
  CHECK(E() == E::top());
}

TEST_CASE("unicode rendering is display only") {
  const auto e = E::forall("contains", E::conjunction(E::negation(A("Furniture")), E::negation(A("IndustrialSupply"))));
  CHECK(render_unicode(e) == "∀contains.(¬Furniture ⊓ ¬IndustrialSupply)");
  CHECK(render_unicode(E::exists("R", E::top())) == "∃R.⊤");
}

TEST_CASE("check_well_formed examples") {
  KnowledgeBase kb;
  kb.signature.classes = {"Road"};
  kb.signature.roles = {"contains"};
  kb.signature.individuals = {"road1", "p1"};
  kb.abox.insert(Assertion::of_class("Road", "road1"));
  CHECK(check_well_formed(kb).empty());

  kb.abox.insert(Assertion::of_role("contains", "p1", "ghost"));
  const auto diags = check_well_formed(kb);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].name == "ghost");
  CHECK(diags[0].subject == "rel contains p1 ghost");

  CHECK(check_well_formed(test::load_fixture("warehouse").kb).empty());
}

TEST_CASE("check_well_formed reports wrong kinds and undeclared names in axioms") {
  KnowledgeBase kb;
  kb.signature.classes = {"A"};
  kb.signature.roles = {"R"};
  kb.signature.individuals = {"a"};
  kb.tbox.push_back({A("A"), A("R")});
  kb.tbox.push_back({A("A"), E::exists("A", A("Missing"))});
  kb.abox.insert(Assertion::of_class("R", "a"));
  const auto diags = check_well_formed(kb);
  std::set<std::string> names;
  for (const auto& d : diags) names.insert(d.name);
  CHECK(names == std::set<std::string>{"A", "Missing", "R"});
}

TEST_CASE("subclass_closure examples") {
  const auto kb = kb_from({{"Road", "Roadway"}, {"Roadway", "LandTransitway"}, {"LandTransitway", "Transitway"}});
  const auto closure = subclass_closure(kb);
  const auto& road = closure.of("Road");
  for (const char* c : {"Road", "Roadway", "LandTransitway", "Transitway"}) CHECK(road.contains(c));

  KnowledgeBase flat;
  flat.signature.classes = {"A", "B"};
  const auto reflexive = subclass_closure(flat);
  CHECK(reflexive.of("A") == std::set<std::string>{"A"});
  CHECK(reflexive.of("B") == std::set<std::string>{"B"});

  const auto prop = subclass_closure(kb_from({{"p1", "p"}, {"p2", "p"}}));
  CHECK(prop.of("p1") == std::set<std::string>{"p", "p1"});
}

TEST_CASE("subclass_closure reports cycles and complex axioms but still closes") {
  auto kb = kb_from({{"A", "B"}, {"B", "C"}, {"C", "A"}});
  kb.tbox.push_back({A("A"), E::exists("R", A("B"))});
  kb.signature.roles.insert("R");
  const auto closure = subclass_closure(kb);
  CHECK(closure.of("A") == std::set<std::string>{"A", "B", "C"});
  CHECK(closure.of("B") == std::set<std::string>{"A", "B", "C"});
  bool cycle = false;
  bool complex = false;
  for (const auto& d : closure.diagnostics) {
    cycle = cycle || d.message.find("cycle") != std::string::npos;
    complex = complex || d.message.find("complex") != std::string::npos;
  }
  CHECK(cycle);
  CHECK(complex);
}

TEST_CASE("subclass_closure matches the fixpoint oracle on every fixture") {
  for (const auto& name : test::fixture_names()) {
    const auto fx = test::load_fixture(name);
    const auto closure = subclass_closure(fx.kb);
    const auto oracle = test::closure_fixpoint(fx.kb);
    for (const auto& [cls, sups] : oracle) CHECK(closure.of(cls) == sups);
  }
  const auto sumo = parse_kb(test::read_file(test::fixture_path("warehouse/sumo_fragment.dlkb")));
  const auto closure = subclass_closure(sumo);
  for (const auto& [cls, sups] : test::closure_fixpoint(sumo)) CHECK(closure.of(cls) == sups);
  // SelfConnectedObject sits directly under Object.
  CHECK(closure.of("SelfConnectedObject") == std::set<std::string>{"Entity", "Object", "Physical", "SelfConnectedObject"});
}

TEST_CASE("names and reserved words") {
  CHECK(is_identifier("SelfConnectedObject"));
  CHECK(is_identifier("road1"));
  CHECK(is_identifier("a_b2"));
  CHECK_FALSE(is_identifier("1road"));
  CHECK_FALSE(is_identifier("_x"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("a-b"));
  for (const char* w : {"some", "only", "and", "or", "not", "Thing", "Nothing"}) CHECK(is_reserved_word(w));
  CHECK_FALSE(is_reserved_word("thing"));
}
