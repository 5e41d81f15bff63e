#include <catch2/catch_amalgamated.hpp>

#include "belab/corpus.hpp"
#include "test_util.hpp"

using namespace belab;

TEST_CASE("parsing the documented examples") {
  QuasiIdentity impl = parse_formula("(x -> y) -> x = x");
  REQUIRE(impl.premises.empty());
  REQUIRE(impl.variables == std::vector<std::string>{"x", "y"});
  REQUIRE(impl.conclusion.rel == Rel::Eq);

  QuasiIdentity be1 = parse_formula("x -> x = 1");
  REQUIRE(be1.variables == std::vector<std::string>{"x"});
  REQUIRE(be1.conclusion.rhs->kind == Term::Kind::Const);

  QuasiIdentity cond = parse_formula("x <=Q y => y -> x* = x*");
  REQUIRE(cond.premises.size() == 1);
  REQUIRE(cond.premises[0].rel == Rel::LeqQ);
}

TEST_CASE("grammar: precedence and associativity") {
  // -> is right-associative and loosest
  REQUIRE(print_formula(parse_formula("x -> y -> z = 1")) == "x -> y -> z = 1");
  REQUIRE(term_equal(parse_formula("x -> y -> z = 1").conclusion.lhs,
                     parse_formula("x -> (y -> z) = 1").conclusion.lhs));
  // product tier is left-associative
  REQUIRE(term_equal(parse_formula("x cap y cup z = 1").conclusion.lhs,
                     parse_formula("(x cap y) cup z = 1").conclusion.lhs));
  // star binds tightest and stacks
  REQUIRE(term_equal(parse_formula("x** -> y = 1").conclusion.lhs,
                     parse_formula("(x*)* -> y = 1").conclusion.lhs));
  REQUIRE_FALSE(term_equal(parse_formula("(x -> y)* = 1").conclusion.lhs,
                           parse_formula("x -> y* = 1").conclusion.lhs));
}

TEST_CASE("parse errors carry positions") {
  REQUIRE_THROWS_AS(parse_formula("x -> = y"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("x = y = z"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("x & y = z"), ParseError);  // '&' without '=>'
  REQUIRE_THROWS_AS(parse_formula("x $ y"), ParseError);
  try {
    parse_formula("x -> ?");
  } catch (const ParseError& e) {
    REQUIRE(e.position == 5);
  }
}

TEST_CASE("variable cap") {
  REQUIRE_THROWS_AS(parse_formula("a -> b -> c -> d -> e -> f -> g = 1"), ParseError);
  REQUIRE_NOTHROW(parse_formula("a -> b -> c -> d -> e -> f = 1"));
  REQUIRE_NOTHROW(parse_formula("a -> b -> c -> d -> e -> f -> g = 1", 7));
}

TEST_CASE("round-trip on the axiom catalog") {
  AxiomCatalog cat = AxiomCatalog::builtin();
  for (const auto& id : cat.ids())
    for (const auto& q : cat.get(id).formulas) {
      QuasiIdentity r = parse_formula(print_formula(q));
      REQUIRE(quasi_equal(q, r));
    }
}

TEST_CASE("round-trip on 1000 generated ASTs of depth <= 6") {
  std::mt19937 rng(20260823);
  for (int i = 0; i < 1000; ++i) {
    QuasiIdentity q = testutil::random_formula(rng, 6);
    std::string text = print_formula(q);
    QuasiIdentity r = parse_formula(text, /*max_vars=*/6);
    INFO(text);
    REQUIRE(quasi_equal(q, r));
  }
}

TEST_CASE("term evaluation on the bundled examples") {
  auto e414 = load_example("E4.14").algebra;
  // (a -> (c -> (a -> e)*)*)* evaluates to a
  TermPtr t = parse_formula("(x -> (y -> (x -> z)*)*)* = 1").conclusion.lhs;
  Elem a = *e414.base.elem_of("a"), c = *e414.base.elem_of("c"), e = *e414.base.elem_of("e");
  REQUIRE(eval_term(e414, t, {{"x", a}, {"y", c}, {"z", e}}) == a);

  // constants
  REQUIRE(eval_term(e414, Term::mkconst(true), {}) == e414.one());

  auto e422 = load_example("E4.22").algebra;
  TermPtr odot = parse_formula("x . x = 1").conclusion.lhs;
  Elem a22 = *e422.base.elem_of("a");
  REQUIRE(eval_term(e422, odot, {{"x", a22}}) == a22);
}

TEST_CASE("meet and join need a lattice context") {
  auto a = load_example("BOOL2").algebra;
  QuasiIdentity q = parse_formula("x /\\ y = x");
  REQUIRE_THROWS_AS(check_formula(a, q), EvalError);
  REQUIRE_THROWS_AS(check_formula(a, parse_formula("x \\/ y = x")), EvalError);
}

TEST_CASE("check_formula witnesses") {
  auto e515 = load_example("E5.15").algebra;
  CheckResult r = check_formula(e515, parse_formula("(x -> y) -> x = x"));
  REQUIRE_FALSE(r.holds);
  REQUIRE(*r.witness == std::vector<Elem>{*e515.base.elem_of("b"), e515.zero()});

  auto b2 = load_example("BOOL2").algebra;
  CheckResult ok = check_formula(b2, parse_formula("x -> x = 1"));
  REQUIRE(ok.holds);
  REQUIRE(ok.evaluations == 2);  // n^k with n=2, k=1
}

TEST_CASE("naive scan and early-exit scan agree (differential)") {
  AxiomCatalog cat = AxiomCatalog::builtin();
  std::vector<InvolutiveAlgebra> algebras;
  for (const auto& id : corpus_ids())
    if (id != "E4.14") algebras.push_back(load_example(id).algebra);  // keep n^k small
  std::mt19937 rng(7);
  std::vector<QuasiIdentity> formulas;
  for (const auto& id : cat.ids())
    if (cat.get(id).context == SignatureContext::Arrow)
      for (const auto& q : cat.get(id).formulas) formulas.push_back(q);
  for (int i = 0; i < 50; ++i) formulas.push_back(testutil::random_formula(rng, 4, false));

  for (const auto& a : algebras) {
    EvalContext ctx = EvalContext::of(a);
    for (const auto& q : formulas) {
      CheckResult fast = check_formula(ctx, q);
      CheckResult naive = testutil::naive_check(ctx, q);
      REQUIRE(fast.holds == naive.holds);
      REQUIRE(fast.witness == naive.witness);
      // the naive path examines exactly n^k assignments
      std::uint64_t nk = 1;
      for (std::size_t v = 0; v < q.variables.size(); ++v)
        nk *= static_cast<std::uint64_t>(a.size());
      REQUIRE(naive.evaluations == nk);
      if (fast.holds) REQUIRE(fast.evaluations == nk);
    }
  }
}

TEST_CASE("determinism: identical inputs give identical witnesses") {
  auto e414 = load_example("E4.14").algebra;
  QuasiIdentity q = parse_formula("(x -> (y -> (x -> z)*)*)* = (x -> y) -> (x -> z)*");
  CheckResult r1 = check_formula(e414, q);
  CheckResult r2 = check_formula(e414, q);
  REQUIRE(r1.holds == r2.holds);
  REQUIRE(r1.witness == r2.witness);
  REQUIRE(r1.evaluations == r2.evaluations);
}
