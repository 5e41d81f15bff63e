#include <catch2/catch_amalgamated.hpp>

#include "belab/metatheorems.hpp"
#include "belab/text.hpp"

using namespace belab;

namespace {

const AxiomCatalog& cat() {
  static AxiomCatalog c = AxiomCatalog::builtin();
  return c;
}

std::vector<InvolutiveAlgebra> small_universe() {
  std::vector<InvolutiveAlgebra> out;
  for (const auto& id : corpus_ids()) out.push_back(load_example(id).algebra);
  for (auto& m : enumerate_up_to(4, cat())) out.push_back(std::move(m.algebra));
  return out;
}

bool lattice_axiom(const LatticeAlgebra& l, const char* id) {
  return check_axiom_in(l.context(), cat().get(id)).holds;
}

bool product_axiom(const ProductAlgebra& p, const char* id) {
  return check_axiom_in(p.context(), cat().get(id)).holds;
}

}  // namespace

TEST_CASE("product images satisfy the product axioms") {
  for (const auto& a : small_universe()) {
    ProductAlgebra p = be_to_product(a);
    REQUIRE(validate_product(p, cat()).ok());
  }
}

TEST_CASE("product values on the bundled examples") {
  auto e422 = load_example("E4.22").algebra;
  ProductAlgebra p = be_to_product(e422);
  Elem a = *e422.base.elem_of("a");
  REQUIRE(p.prod(a, a) == a);

  auto e414 = load_example("E4.14").algebra;
  REQUIRE(product_axiom(be_to_product(e414), "Pom"));
}

TEST_CASE("product <-> arrow round trips are identities") {
  for (const auto& a : small_universe()) {
    ProductAlgebra p = be_to_product(a);
    TransformResult back = product_to_be(p, cat());
    REQUIRE(back.algebra.has_value());
    REQUIRE(back.algebra->base.arrow == a.base.arrow);
    REQUIRE(back.algebra->star_table == a.star_table);
    ProductAlgebra p2 = be_to_product(*back.algebra);
    REQUIRE(p2.odot == p.odot);
    REQUIRE(p2.star == p.star);
  }
}

TEST_CASE("invalid product inputs are rejected with witnesses") {
  ProductAlgebra p = be_to_product(load_example("E4.22").algebra);
  p.odot[1 * p.size + 2] = p.one;  // break commutativity/associativity
  TransformResult r = product_to_be(p, cat());
  REQUIRE_FALSE(r.algebra.has_value());
  REQUIRE_FALSE(r.report.violations.empty());
}

TEST_CASE("lattice transform requires the implicative axiom") {
  auto e515 = load_example("E5.15").algebra;
  LatticeTransformResult r = iol_to_lattice(e515, cat());
  REQUIRE_FALSE(r.lattice.has_value());
  REQUIRE(r.report.violations.size() == 1);
  REQUIRE(r.report.violations[0].axiom == "Impl");
  REQUIRE(r.report.violations[0].witness == std::vector<Elem>{2, 0});  // (b, 0)
}

TEST_CASE("lattice values on the bundled examples") {
  auto e422 = load_example("E4.22").algebra;
  LatticeTransformResult r = iol_to_lattice(e422, cat());
  REQUIRE(r.lattice.has_value());
  Elem a = *e422.base.elem_of("a"), c = *e422.base.elem_of("c");
  REQUIRE(r.lattice->meet[a * 6 + c] == e422.zero());

  auto e414 = load_example("E4.14").algebra;
  LatticeTransformResult l414 = iol_to_lattice(e414, cat());
  REQUIRE(l414.lattice.has_value());
  REQUIRE(lattice_axiom(*l414.lattice, "OM"));
  REQUIRE_FALSE(lattice_axiom(*l414.lattice, "Wmod"));

  LatticeTransformResult b2 = iol_to_lattice(load_example("BOOL2").algebra, cat());
  REQUIRE(b2.lattice.has_value());
  for (const char* id : {"L1", "L2", "L3", "L4", "L4'", "L5", "L6", "L7", "L8", "L9", "OM", "OM'",
                         "Wmod", "Vmod"})
    REQUIRE(lattice_axiom(*b2.lattice, id));
}

TEST_CASE("lattice images of implicative models satisfy L1-L9 and round-trip") {
  for (const auto& a : small_universe()) {
    if (!check_axiom(a, cat(), "Impl").holds) continue;
    LatticeTransformResult r = iol_to_lattice(a, cat());
    REQUIRE(r.lattice.has_value());
    REQUIRE(validate_lattice(*r.lattice, cat()).ok());
    TransformResult back = lattice_to_iol(*r.lattice, cat());
    REQUIRE(back.algebra.has_value());
    REQUIRE(back.algebra->base.arrow == a.base.arrow);
    LatticeTransformResult again = iol_to_lattice(*back.algebra, cat());
    REQUIRE(again.lattice.has_value());
    REQUIRE(again.lattice->meet == r.lattice->meet);
    REQUIRE(again.lattice->join == r.lattice->join);
    REQUIRE(again.lattice->complement == r.lattice->complement);
  }
}

TEST_CASE("axiom correspondences across the transforms") {
  for (const auto& a : small_universe()) {
    ProductAlgebra p = be_to_product(a);
    REQUIRE(check_axiom(a, cat(), "iG").holds == product_axiom(p, "G"));
    REQUIRE(check_axiom(a, cat(), "Iabs-i").holds == product_axiom(p, "m-Pabs-i"));
    if (!check_axiom(a, cat(), "Impl").holds) continue;
    LatticeTransformResult l = iol_to_lattice(a, cat());
    REQUIRE(l.lattice.has_value());
    REQUIRE(check_axiom(a, cat(), "QW2").holds == lattice_axiom(*l.lattice, "OM"));
    bool imod = check_axiom(a, cat(), "Imod").holds;
    REQUIRE(imod == lattice_axiom(*l.lattice, "Wmod"));
    REQUIRE(imod == product_axiom(p, "Pmod"));
  }
}

TEST_CASE("check_lattice_axioms and check_product_axioms") {
  LatticeTransformResult l = iol_to_lattice(load_example("E4.22").algebra, cat());
  auto res = check_lattice_axioms(*l.lattice, {"L1", "OM", "Wmod"}, cat());
  REQUIRE(res.size() == 3);
  for (const auto& r : res) REQUIRE(r.holds);
  REQUIRE_THROWS_AS(check_lattice_axioms(*l.lattice, {"Impl"}, cat()), EvalError);

  ProductAlgebra p = be_to_product(load_example("E4.22").algebra);
  auto pres = check_product_axioms(p, {"PU", "Pcomm", "Pass", "G"}, cat());
  for (const auto& r : pres) REQUIRE(r.holds);
}

// The idempotency laws follow from commutativity, associativity and
// absorption: property-tested over all commutative-associative table pairs on
// a 3-element carrier that satisfy absorption.
TEST_CASE("idempotency is derivable from L2-L4") {
  const int n = 3;
  QuasiIdentity comm = parse_formula("x /\\ y = y /\\ x");
  QuasiIdentity assoc = parse_formula("x /\\ (y /\\ z) = (x /\\ y) /\\ z");
  QuasiIdentity abs1 = parse_formula("x /\\ (x \\/ y) = x");
  QuasiIdentity abs2 = parse_formula("x \\/ (x /\\ y) = x");
  QuasiIdentity idem1 = parse_formula("x /\\ x = x");
  QuasiIdentity idem2 = parse_formula("x \\/ x = x");

  // collect all commutative, associative binary tables on {0,1,2}
  std::vector<std::vector<Elem>> ca;
  std::vector<Elem> tab(n * n, 0);
  // free cells: the upper triangle including diagonal (6 cells)
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  std::vector<Elem> fill(cells.size(), 0);
  auto as_meet_ctx = [&](const std::vector<Elem>& m, const std::vector<Elem>& j) {
    EvalContext c;
    c.size = n;
    c.meet = &m;
    c.join = &j;
    return c;
  };
  for (;;) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      tab[cells[i].first * n + cells[i].second] = fill[i];
      tab[cells[i].second * n + cells[i].first] = fill[i];
    }
    EvalContext c = as_meet_ctx(tab, tab);
    if (check_formula(c, comm).holds && check_formula(c, assoc).holds) ca.push_back(tab);
    std::size_t i = cells.size();
    while (i > 0) {
      if (++fill[i - 1] < n) break;
      fill[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  REQUIRE_FALSE(ca.empty());

  int absorbing_pairs = 0;
  for (const auto& m : ca)
    for (const auto& j : ca) {
      EvalContext c = as_meet_ctx(m, j);
      if (!check_formula(c, abs1).holds || !check_formula(c, abs2).holds) continue;
      ++absorbing_pairs;
      REQUIRE(check_formula(c, idem1).holds);
      REQUIRE(check_formula(c, idem2).holds);
    }
  REQUIRE(absorbing_pairs > 0);
}

TEST_CASE("serialized product and lattice files round-trip") {
  auto e422 = load_example("E4.22").algebra;
  ProductAlgebra p = be_to_product(e422);
  ProductLoadResult pl = load_product_text(product_to_text(p));
  REQUIRE(pl.algebra.has_value());
  REQUIRE(pl.algebra->odot == p.odot);
  REQUIRE(pl.algebra->star == p.star);
  REQUIRE(pl.algebra->zero == p.zero);

  LatticeTransformResult lt = iol_to_lattice(e422, cat());
  LatticeLoadResult ll = load_lattice_text(lattice_to_text(*lt.lattice));
  REQUIRE(ll.algebra.has_value());
  REQUIRE(ll.algebra->meet == lt.lattice->meet);
  REQUIRE(ll.algebra->join == lt.lattice->join);
  REQUIRE(ll.algebra->complement == lt.lattice->complement);
}
