#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "belab/corpus.hpp"
#include "belab/metatheorems.hpp"

using namespace belab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kRoot = BELAB_SOURCE_DIR;

}  // namespace

TEST_CASE("arrow files parse, serialize and round-trip") {
  for (const auto& id : corpus_ids()) {
    NamedExample ex = load_example(id);
    std::string text = algebra_to_text(ex.algebra);
    LoadResult again = load_involutive_text(text);
    REQUIRE(again.algebra.has_value());
    REQUIRE(again.algebra->base.arrow == ex.algebra.base.arrow);
    REQUIRE(again.algebra->names() == ex.algebra.names());
    REQUIRE(again.algebra->one() == ex.algebra.one());
    REQUIRE(again.algebra->zero() == ex.algebra.zero());
  }
}

TEST_CASE("comments and blank lines are ignored") {
  LoadResult r = load_involutive_text(
      "# a comment\n"
      "elements: 0 1  # trailing comment\n"
      "\n"
      "one: 1\n"
      "zero: 0\n"
      "arrow:\n"
      "1 1\n"
      "0 1  # last row\n");
  REQUIRE(r.algebra.has_value());
  REQUIRE(r.algebra->size() == 2);
}

TEST_CASE("structural problems are reported, not thrown") {
  // missing section
  REQUIRE_FALSE(load_involutive_text("elements: 0 1\none: 1\nzero: 0\n").algebra.has_value());
  // wrong row width
  LoadResult w = load_involutive_text("elements: 0 1\none: 1\nzero: 0\narrow:\n1 1 1\n0 1\n");
  REQUIRE_FALSE(w.algebra.has_value());
  REQUIRE_FALSE(w.report.structural.empty());
  // unknown element name
  LoadResult u = load_involutive_text("elements: 0 1\none: 1\nzero: 0\narrow:\n1 q\n0 1\n");
  REQUIRE_FALSE(u.report.structural.empty());
  // unknown section
  LoadResult s = load_involutive_text("elements: 0 1\none: 1\nzero: 0\nfrob:\n1 1\n0 1\n");
  REQUIRE_FALSE(s.report.structural.empty());
  // mixed signatures
  LoadResult m = load_involutive_text(
      "elements: 0 1\none: 1\nzero: 0\narrow:\n1 1\n0 1\nstar: 1 0\n");
  REQUIRE_FALSE(m.report.structural.empty());
}

TEST_CASE("axiom failures in a loaded file carry witnesses") {
  // valid BE table that is not involutive (e -> 0 = 1)
  LoadResult r = load_involutive_text(
      "elements: 0 e 1\none: 1\nzero: 0\narrow:\n1 1 1\n1 1 1\n0 e 1\n");
  REQUIRE_FALSE(r.algebra.has_value());
  REQUIRE(r.report.structural.empty());
  REQUIRE(r.report.violations.size() == 1);
  REQUIRE(r.report.violations[0].axiom == "Inv");
  REQUIRE(r.report.violations[0].witness == std::vector<Elem>{1});
}

TEST_CASE("product files") {
  ProductAlgebra p = be_to_product(load_example("BOOL2").algebra);
  std::string text = product_to_text(p);
  ProductLoadResult r = load_product_text(text);
  REQUIRE(r.algebra.has_value());
  REQUIRE(r.algebra->zero == p.zero);

  // zero line, when present, must agree with star(one)
  ProductLoadResult bad = load_product_text(
      "elements: 0 1\none: 1\nzero: 1\nodot:\n0 0\n0 1\nstar: 1 0\n");
  REQUIRE_FALSE(bad.algebra.has_value());
  // star section must cover the carrier
  ProductLoadResult shortstar = load_product_text(
      "elements: 0 1\none: 1\nodot:\n0 0\n0 1\nstar: 1\n");
  REQUIRE_FALSE(shortstar.algebra.has_value());
}

TEST_CASE("lattice files") {
  LatticeTransformResult lt = iol_to_lattice(load_example("E4.22").algebra,
                                             AxiomCatalog::builtin());
  REQUIRE(lt.lattice.has_value());
  LatticeLoadResult r = load_lattice_text(lattice_to_text(*lt.lattice));
  REQUIRE(r.algebra.has_value());
  REQUIRE(r.algebra->arrow == lt.lattice->arrow);

  LatticeLoadResult missing = load_lattice_text(
      "elements: 0 1\none: 1\nzero: 0\nmeet:\n0 0\n0 1\ncomplement: 1 0\n");
  REQUIRE_FALSE(missing.algebra.has_value());
}

TEST_CASE("shipped resource files equal the embedded corpus") {
  const std::map<std::string, std::string> files = {
      {"E4.14", "E4_14.alg"}, {"E4.22", "E4_22.alg"}, {"E5.15", "E5_15.alg"},
      {"BOOL2", "BOOL2.alg"}, {"TRIV1", "TRIV1.alg"},
  };
  for (const auto& [id, file] : files) {
    LoadResult r = load_involutive_text(slurp(kRoot + "/resources/" + file));
    REQUIRE(r.algebra.has_value());
    NamedExample ex = load_example(id);
    REQUIRE(r.algebra->base.arrow == ex.algebra.base.arrow);
    REQUIRE(r.algebra->names() == ex.algebra.names());
  }
}

TEST_CASE("shipped catalog file equals the builtin catalog") {
  AxiomCatalog from_file{slurp(kRoot + "/resources/axioms.cat")};
  AxiomCatalog builtin = AxiomCatalog::builtin();
  REQUIRE(from_file.ids() == builtin.ids());
  for (const auto& id : builtin.ids()) {
    REQUIRE(from_file.get(id).text == builtin.get(id).text);
    REQUIRE(from_file.get(id).context == builtin.get(id).context);
  }
}
