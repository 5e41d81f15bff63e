#pragma once

// Signature translations:
//   implication <-> product:  x . y := (x -> y*)*   /   x -> y := (x . y*)*
//   implication <-> lattice:  x /\ y := (x -> y*)*, x \/ y := x* -> y,
//                             x' := x*              /   x -> y := (x /\ y')'
// Transform outputs are always re-validated against the target signature's
// axioms rather than trusted.

#include <optional>
#include <string>
#include <vector>

#include "belab/catalog.hpp"

namespace belab {

struct ProductAlgebra {
  int size = 0;
  std::vector<std::string> names;
  std::vector<Elem> odot;   // size*size
  std::vector<Elem> star;   // size
  Elem one = 0;
  Elem zero = 0;            // = star(one)

  // derived arrow table, kept so the generic term evaluator can run
  std::vector<Elem> arrow;  // x -> y = (x . y*)*

  Elem prod(Elem x, Elem y) const { return odot[x * size + y]; }

  EvalContext context() const {
    EvalContext c;
    c.size = size;
    c.one = one;
    c.zero = zero;
    c.arrow = &arrow;
    c.star = &star;
    c.names = &names;
    return c;
  }
};

struct LatticeAlgebra {
  int size = 0;
  std::vector<std::string> names;
  std::vector<Elem> meet;        // size*size
  std::vector<Elem> join;        // size*size
  std::vector<Elem> complement;  // size
  Elem zero = 0;
  Elem one = 0;

  std::vector<Elem> arrow;       // derived, x -> y = (x /\ y')'

  EvalContext context() const {
    EvalContext c;
    c.size = size;
    c.one = one;
    c.zero = zero;
    c.arrow = &arrow;
    c.star = &complement;
    c.meet = &meet;
    c.join = &join;
    c.names = &names;
    return c;
  }
};

namespace detail {

inline bool tables_in_range(int size, const std::vector<Elem>& bin) {
  if (bin.size() != static_cast<std::size_t>(size) * size) return false;
  for (Elem v : bin)
    if (v < 0 || v >= size) return false;
  return true;
}

}  // namespace detail

inline void fill_product_arrow(ProductAlgebra& p) {
  p.arrow.assign(static_cast<std::size_t>(p.size) * p.size, 0);
  for (Elem x = 0; x < p.size; ++x)
    for (Elem y = 0; y < p.size; ++y)
      p.arrow[x * p.size + y] = p.star[p.prod(x, p.star[y])];
}

inline void fill_lattice_arrow(LatticeAlgebra& l) {
  l.arrow.assign(static_cast<std::size_t>(l.size) * l.size, 0);
  for (Elem x = 0; x < l.size; ++x)
    for (Elem y = 0; y < l.size; ++y)
      l.arrow[x * l.size + y] = l.complement[l.meet[x * l.size + l.complement[y]]];
}

// m-BE validation: (PU) (Pcomm) (Pass) (m-L) (m-Re) plus star involution.
inline ValidationReport validate_product(const ProductAlgebra& p, const AxiomCatalog& cat) {
  ValidationReport rep;
  if (p.size < 1 || !detail::tables_in_range(p.size, p.odot) ||
      p.star.size() != static_cast<std::size_t>(p.size)) {
    rep.structural.push_back("malformed product tables");
    return rep;
  }
  for (Elem v : p.star)
    if (v < 0 || v >= p.size) {
      rep.structural.push_back("star entry out of range");
      return rep;
    }
  if (p.zero != p.star[p.one]) rep.structural.push_back("zero must equal star(one)");
  for (Elem x = 0; x < p.size; ++x)
    if (p.star[p.star[x]] != x) {
      rep.violations.push_back({"Inv", {x}});
      break;
    }
  EvalContext ctx = p.context();
  for (const char* id : {"PU", "Pcomm", "Pass", "m-L", "m-Re"}) {
    AxiomCheckResult r = check_axiom_in(ctx, cat.get(id));
    if (!r.holds) rep.violations.push_back({r.axiom, *r.witness});
  }
  return rep;
}

// Ortholattice validation: (L1)-(L9).  Only one De Morgan law is needed as a
// primitive axiom, but the stored table must satisfy both (De Morgan
// coherence of the explicit join table).
inline ValidationReport validate_lattice(const LatticeAlgebra& l, const AxiomCatalog& cat) {
  ValidationReport rep;
  if (l.size < 1 || !detail::tables_in_range(l.size, l.meet) ||
      !detail::tables_in_range(l.size, l.join) ||
      l.complement.size() != static_cast<std::size_t>(l.size)) {
    rep.structural.push_back("malformed lattice tables");
    return rep;
  }
  for (Elem v : l.complement)
    if (v < 0 || v >= l.size) {
      rep.structural.push_back("complement entry out of range");
      return rep;
    }
  EvalContext ctx = l.context();
  for (const char* id : {"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9"}) {
    AxiomCheckResult r = check_axiom_in(ctx, cat.get(id));
    if (!r.holds) rep.violations.push_back({r.axiom, *r.witness});
  }
  return rep;
}

// Phi: involutive BE -> m-BE.
inline ProductAlgebra be_to_product(const InvolutiveAlgebra& a) {
  ProductAlgebra p;
  p.size = a.size();
  p.names = a.names();
  p.one = a.one();
  p.zero = a.zero();
  p.star = a.star_table;
  p.odot.assign(static_cast<std::size_t>(p.size) * p.size, 0);
  for (Elem x = 0; x < p.size; ++x)
    for (Elem y = 0; y < p.size; ++y) p.odot[x * p.size + y] = a.odot(x, y);
  fill_product_arrow(p);
  return p;
}

struct TransformResult {
  std::optional<InvolutiveAlgebra> algebra;
  ValidationReport report;  // of the input when rejected, of the output otherwise
};

// Psi: m-BE -> involutive BE.  Rejects inputs that fail the m-BE axioms.
inline TransformResult product_to_be(const ProductAlgebra& p, const AxiomCatalog& cat) {
  TransformResult out;
  out.report = validate_product(p, cat);
  if (!out.report.ok()) return out;
  std::vector<Elem> arrow(static_cast<std::size_t>(p.size) * p.size);
  for (Elem x = 0; x < p.size; ++x)
    for (Elem y = 0; y < p.size; ++y) arrow[x * p.size + y] = p.star[p.prod(x, p.star[y])];
  BuildResult b = build_algebra(p.size, std::move(arrow), p.one, p.zero, p.names);
  out.report = b.report;
  if (!b.algebra) return out;
  InvolutionResult ir = check_involutive(*b.algebra);
  if (!ir.algebra) {
    out.report.violations.push_back({"Inv", {*ir.witness}});
    return out;
  }
  out.algebra = std::move(*ir.algebra);
  return out;
}

struct LatticeTransformResult {
  std::optional<LatticeAlgebra> lattice;
  ValidationReport report;
};

// phi direction requires (Impl); rejection carries the Impl witness.
inline LatticeTransformResult iol_to_lattice(const InvolutiveAlgebra& a, const AxiomCatalog& cat) {
  LatticeTransformResult out;
  AxiomCheckResult impl = check_axiom(a, cat, "Impl");
  if (!impl.holds) {
    out.report.violations.push_back({"Impl", *impl.witness});
    return out;
  }
  LatticeAlgebra l;
  l.size = a.size();
  l.names = a.names();
  l.one = a.one();
  l.zero = a.zero();
  l.complement = a.star_table;
  l.meet.assign(static_cast<std::size_t>(l.size) * l.size, 0);
  l.join.assign(l.meet.size(), 0);
  for (Elem x = 0; x < l.size; ++x)
    for (Elem y = 0; y < l.size; ++y) {
      l.meet[x * l.size + y] = a.odot(x, y);           // (x -> y*)*
      l.join[x * l.size + y] = a.imp(a.star(x), y);    // x* -> y
    }
  fill_lattice_arrow(l);
  out.report = validate_lattice(l, cat);
  if (out.report.ok()) out.lattice = std::move(l);
  return out;
}

// psi direction requires (L1)-(L9).
inline TransformResult lattice_to_iol(const LatticeAlgebra& l, const AxiomCatalog& cat) {
  TransformResult out;
  out.report = validate_lattice(l, cat);
  if (!out.report.ok()) return out;
  std::vector<Elem> arrow(static_cast<std::size_t>(l.size) * l.size);
  for (Elem x = 0; x < l.size; ++x)
    for (Elem y = 0; y < l.size; ++y)
      arrow[x * l.size + y] = l.complement[l.meet[x * l.size + l.complement[y]]];
  BuildResult b = build_algebra(l.size, std::move(arrow), l.one, l.zero, l.names);
  out.report = b.report;
  if (!b.algebra) return out;
  InvolutionResult ir = check_involutive(*b.algebra);
  if (!ir.algebra) {
    out.report.violations.push_back({"Inv", {*ir.witness}});
    return out;
  }
  // the image must itself be implicative
  AxiomCheckResult impl = check_axiom(*ir.algebra, cat, "Impl");
  if (!impl.holds) {
    out.report.violations.push_back({"Impl", *impl.witness});
    return out;
  }
  out.algebra = std::move(*ir.algebra);
  return out;
}

inline std::vector<AxiomCheckResult> check_lattice_axioms(const LatticeAlgebra& l,
                                                          const std::vector<std::string>& which,
                                                          const AxiomCatalog& cat) {
  std::vector<AxiomCheckResult> out;
  EvalContext ctx = l.context();
  for (const auto& id : which) {
    const AxiomId& ax = cat.get(id);
    if (ax.context != SignatureContext::Lattice)
      throw EvalError("axiom '" + id + "' is not a lattice-context axiom");
    out.push_back(check_axiom_in(ctx, ax));
  }
  return out;
}

inline std::vector<AxiomCheckResult> check_product_axioms(const ProductAlgebra& p,
                                                          const std::vector<std::string>& which,
                                                          const AxiomCatalog& cat) {
  std::vector<AxiomCheckResult> out;
  EvalContext ctx = p.context();
  for (const auto& id : which) out.push_back(check_axiom_in(ctx, cat.get(id)));
  return out;
}

}  // namespace belab
