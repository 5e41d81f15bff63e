// Acceptance gate: one pass/fail line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "belab/metatheorems.hpp"
#include "belab/text.hpp"
#include "test_util.hpp"

using namespace belab;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const AxiomCatalog& cat() {
  static AxiomCatalog c = AxiomCatalog::builtin();
  return c;
}

// 1. Golden tables: the derived meet-like tables match the printed tables
//    cell-for-cell; < 0.1 s each.
void criterion1() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& id : {"E4.14", "E4.22", "E5.15"}) {
    auto t0 = std::chrono::steady_clock::now();
    NamedExample ex = load_example(id);
    auto capt = derived_table(ex.algebra, DerivedOp::Cap);
    double secs = seconds_since(t0);
    int n = ex.algebra.size();
    int match = 0;
    for (int i = 0; i < n * n; ++i)
      if (capt[i] == ex.expected_cap[i]) ++match;
    bool this_ok = match == n * n && secs < 0.1;
    detail << id << " " << match << "/" << n * n << " ";
    ok = ok && this_ok;
  }
  report(1, "golden tables", ok, detail.str());
}

// 2. Classification fidelity with exact witnesses; < 1 s total.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  NamedExample e414 = load_example("E4.14");
  ClassificationReport r414 = classify(e414.algebra, cat(), "E4.14");
  ok = ok && r414.member("IOML") && r414.member("QW") && r414.member("preW") &&
       r414.member("metaW") && !r414.member("IMOD");
  AxiomCheckResult imod = check_axiom(e414.algebra, cat(), "Imod");
  ok = ok && !imod.holds && *imod.witness == std::vector<Elem>{1, 3, 5};  // (a, c, e)

  ClassificationReport r422 = classify(load_example("E4.22").algebra, cat(), "E4.22");
  ok = ok && r422.member("IMOD");

  NamedExample e515 = load_example("E5.15");
  ClassificationReport r515 = classify(e515.algebra, cat(), "E5.15");
  ok = ok && r515.member("IOMWL") && r515.member("QW") && !r515.member("IOL");
  AxiomCheckResult impl = check_axiom(e515.algebra, cat(), "Impl");
  ok = ok && !impl.holds && *impl.witness == std::vector<Elem>{2, 0};  // (b, 0)

  double secs = seconds_since(t0);
  ok = ok && secs < 1.0;
  std::ostringstream d;
  d << secs << " s";
  report(2, "classification fidelity", ok, d.str());
}

// 3. Metatheorem suite: zero violations for every registered theorem and
//    class equation over the corpus + all models of sizes 1-4; < 5 min.
void criterion3(const ModelUniverse& u) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream d;
  for (const auto& id : all_verifiable_ids()) {
    MetatheoremReport rep = verify_metatheorem(id, u, cat());
    if (!rep.holds()) {
      ok = false;
      d << id << " violated ";
    }
  }
  double secs = seconds_since(t0);
  ok = ok && secs < 300.0;
  d << all_verifiable_ids().size() << " theorems, " << u.view().size() << " models, " << secs
    << " s";
  report(3, "metatheorem suite", ok, d.str());
}

// 4. Enumeration: size-2 count 1; size-3 pruned equals the unpruned oracle;
//    size 5 completes (< 10 min, 8 workers) identically for 1 vs 8 workers.
void criterion4() {
  bool ok = true;
  std::ostringstream d;

  EnumerationTask t2;
  t2.size = 2;
  ok = ok && enumerate_models(t2, cat()).size() == 1;

  EnumerationTask t3;
  t3.size = 3;
  t3.modulo_iso = false;
  auto pruned3 = enumerate_models(t3, cat());
  auto oracle3 = testutil::reference_models(3);
  std::set<std::vector<Elem>> ps, os;
  for (const auto& m : pruned3) ps.insert(m.algebra.base.arrow);
  for (const auto& t : oracle3) os.insert(t);
  ok = ok && ps == os;
  d << "size3 " << pruned3.size() << "=" << oracle3.size() << " ";

  auto t0 = std::chrono::steady_clock::now();
  EnumerationTask t5a;
  t5a.size = 5;
  t5a.workers = 8;
  auto w8 = enumerate_models(t5a, cat());
  double secs = seconds_since(t0);
  EnumerationTask t5b = t5a;
  t5b.workers = 1;
  auto w1 = enumerate_models(t5b, cat());
  bool identical = w1.size() == w8.size();
  std::string dump1, dump8;
  for (const auto& m : w1) dump1 += algebra_to_text(m.algebra);
  for (const auto& m : w8) dump8 += algebra_to_text(m.algebra);
  identical = identical && dump1 == dump8;
  ok = ok && identical && secs < 600.0;
  d << "size5 " << w8.size() << " models in " << secs << " s, dumps "
    << (identical ? "identical" : "DIFFER");
  report(4, "enumeration correctness", ok, d.str());
}

// 5. Transform round-trips and axiom correspondences; zero disagreements.
void criterion5(const ModelUniverse& u) {
  bool ok = true;
  int checked = 0;
  for (const auto& [id, a] : u.view()) {
    ++checked;
    ProductAlgebra p = be_to_product(*a);
    TransformResult back = product_to_be(p, cat());
    if (!back.algebra || back.algebra->base.arrow != a->base.arrow) ok = false;
    if (back.algebra) {
      ProductAlgebra p2 = be_to_product(*back.algebra);
      if (p2.odot != p.odot || p2.star != p.star) ok = false;
    }
    if (!check_axiom(*a, cat(), "Impl").holds) continue;
    LatticeTransformResult l = iol_to_lattice(*a, cat());
    if (!l.lattice || !validate_lattice(*l.lattice, cat()).ok()) {
      ok = false;
      continue;
    }
    TransformResult lb = lattice_to_iol(*l.lattice, cat());
    if (!lb.algebra || lb.algebra->base.arrow != a->base.arrow) ok = false;
    bool qw2 = check_axiom(*a, cat(), "QW2").holds;
    bool om = check_axiom_in(l.lattice->context(), cat().get("OM")).holds;
    if (qw2 != om) ok = false;
    bool imod = check_axiom(*a, cat(), "Imod").holds;
    bool wmod = check_axiom_in(l.lattice->context(), cat().get("Wmod")).holds;
    bool pmod = check_axiom_in(p.context(), cat().get("Pmod")).holds;
    if (imod != wmod || imod != pmod) ok = false;
  }
  std::ostringstream d;
  d << checked << " models";
  report(5, "transform round-trips", ok, d.str());
}

// 6. Identity suites: every applicable suite passes on every model.
void criterion6(const ModelUniverse& u) {
  bool ok = true;
  int applicable = 0;
  for (const auto& [id, a] : u.view())
    for (const auto& suite : builtin_suites()) {
      SuiteReport rep = run_identity_suite(*a, suite, cat());
      if (!rep.applicable) continue;
      ++applicable;
      if (!rep.all_hold()) ok = false;
    }
  std::ostringstream d;
  d << applicable << " applicable suite runs";
  report(6, "identity suites", ok, d.str());
}

// 7. Parser: parse(print(q)) == q on the full catalog + 1000 generated ASTs.
void criterion7() {
  bool ok = true;
  int count = 0;
  for (const auto& id : cat().ids())
    for (const auto& q : cat().get(id).formulas) {
      ++count;
      if (!quasi_equal(q, parse_formula(print_formula(q)))) ok = false;
    }
  std::mt19937 rng(20260823);
  for (int i = 0; i < 1000; ++i) {
    QuasiIdentity q = testutil::random_formula(rng, 6);
    ++count;
    if (!quasi_equal(q, parse_formula(print_formula(q)))) ok = false;
  }
  std::ostringstream d;
  d << count << " formulas round-tripped";
  report(7, "parser round-trip", ok, d.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  ModelUniverse u = build_universe(4, cat());
  criterion3(u);
  criterion4();
  criterion5(u);
  criterion6(u);
  criterion7();
  return failures == 0 ? 0 : 1;
}
