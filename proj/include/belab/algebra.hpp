#pragma once

// Finite bounded involutive BE algebras given by Cayley tables.
//
// An algebra is a carrier {0,...,size-1}, a total binary arrow table and two
// designated constants `one` and `zero`.  All computation is index-based;
// element names are display-only.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace belab {

using Elem = int;

struct AxiomViolation {
  std::string axiom;           // "BE1".."BE4", "Bound", "Inv", ...
  std::vector<Elem> witness;   // offending tuple, lexicographically first
};

struct ValidationReport {
  std::vector<std::string> structural;      // malformed input, not axiom failures
  std::vector<AxiomViolation> violations;   // one entry per violated axiom
  bool ok() const { return structural.empty() && violations.empty(); }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    std::ostringstream os;
    for (const auto& s : structural) os << "structural: " << s << '\n';
    for (const auto& v : violations) {
      os << "axiom " << v.axiom << " fails at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) os << ",";
        Elem e = v.witness[i];
        if (e >= 0 && static_cast<std::size_t>(e) < names.size()) os << names[e];
        else os << e;
      }
      os << ")\n";
    }
    return os.str();
  }
};

inline std::vector<std::string> default_names(int size, Elem one, Elem zero) {
  std::vector<std::string> names(size);
  char next = 'a';
  for (int i = 0; i < size; ++i) {
    if (i == one) names[i] = "1";
    else if (i == zero) names[i] = "0";
    else {
      names[i] = std::string(1, next);
      if (next == 'z') next = 'A'; else ++next;
    }
  }
  return names;
}

struct Algebra {
  int size = 0;
  std::vector<std::string> names;  // size entries, distinct
  std::vector<Elem> arrow;         // row-major size*size, row = left operand
  Elem one = 0;
  Elem zero = 0;

  Elem imp(Elem x, Elem y) const { return arrow[x * size + y]; }

  std::optional<Elem> elem_of(const std::string& name) const {
    for (int i = 0; i < size; ++i)
      if (names[i] == name) return i;
    return std::nullopt;
  }
};

struct BuildResult {
  std::optional<Algebra> algebra;  // present iff report.ok()
  ValidationReport report;
};

// Validates the BE axioms, boundedness and name-list well-formedness.
// Structural problems (bad dimensions, out-of-range indices) short-circuit
// the axiom checks; axiom failures are all collected, each with the
// lexicographically first witness.
inline BuildResult build_algebra(int size, std::vector<Elem> arrow, Elem one, Elem zero,
                                 std::vector<std::string> names = {}) {
  BuildResult r;
  auto& rep = r.report;
  if (size < 1) {
    rep.structural.push_back("size must be >= 1");
    return r;
  }
  if (arrow.size() != static_cast<std::size_t>(size) * size) {
    rep.structural.push_back("arrow table must have size*size entries");
    return r;
  }
  for (Elem v : arrow)
    if (v < 0 || v >= size) {
      rep.structural.push_back("arrow table entry out of range");
      return r;
    }
  if (one < 0 || one >= size || zero < 0 || zero >= size) {
    rep.structural.push_back("constant index out of range");
    return r;
  }
  if (names.empty()) names = default_names(size, one, zero);
  if (names.size() != static_cast<std::size_t>(size)) {
    rep.structural.push_back("name list must have size entries");
    return r;
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) {
        rep.structural.push_back("element names must be distinct");
        return r;
      }

  Algebra a{size, std::move(names), std::move(arrow), one, zero};
  auto first2 = [&](const char* ax, auto pred) {
    for (Elem x = 0; x < size; ++x)
      if (!pred(x)) {
        rep.violations.push_back({ax, {x}});
        return;
      }
  };
  first2("BE1", [&](Elem x) { return a.imp(x, x) == one; });
  first2("BE2", [&](Elem x) { return a.imp(x, one) == one; });
  first2("BE3", [&](Elem x) { return a.imp(one, x) == x; });
  [&] {
    for (Elem x = 0; x < size; ++x)
      for (Elem y = 0; y < size; ++y)
        for (Elem z = 0; z < size; ++z)
          if (a.imp(x, a.imp(y, z)) != a.imp(y, a.imp(x, z))) {
            rep.violations.push_back({"BE4", {x, y, z}});
            return;
          }
  }();
  first2("Bound", [&](Elem x) { return a.imp(zero, x) == one; });
  if (rep.ok()) r.algebra = std::move(a);
  return r;
}

struct InvolutiveAlgebra {
  Algebra base;
  std::vector<Elem> star_table;  // star(x) = arrow(x, zero)

  int size() const { return base.size; }
  Elem one() const { return base.one; }
  Elem zero() const { return base.zero; }
  const std::vector<std::string>& names() const { return base.names; }

  Elem imp(Elem x, Elem y) const { return base.imp(x, y); }
  Elem star(Elem x) const { return star_table[x]; }
  Elem cup(Elem x, Elem y) const { return imp(imp(x, y), y); }
  Elem cap(Elem x, Elem y) const { return star(imp(imp(star(x), star(y)), star(y))); }
  Elem odot(Elem x, Elem y) const { return star(imp(x, star(y))); }
  Elem oplus(Elem x, Elem y) const { return star(odot(star(x), star(y))); }
  bool leq(Elem x, Elem y) const { return imp(x, y) == one(); }
  bool leq_q(Elem x, Elem y) const { return x == cap(x, y); }
};

enum class DerivedOp { Cup, Cap, Odot, Oplus };

inline const char* derived_op_name(DerivedOp op) {
  switch (op) {
    case DerivedOp::Cup: return "cup";
    case DerivedOp::Cap: return "cap";
    case DerivedOp::Odot: return "odot";
    case DerivedOp::Oplus: return "oplus";
  }
  return "?";
}

inline std::optional<DerivedOp> derived_op_of(const std::string& s) {
  if (s == "cup") return DerivedOp::Cup;
  if (s == "cap") return DerivedOp::Cap;
  if (s == "odot" || s == ".") return DerivedOp::Odot;
  if (s == "oplus") return DerivedOp::Oplus;
  return std::nullopt;
}

inline Elem derived(const InvolutiveAlgebra& a, DerivedOp op, Elem x, Elem y) {
  switch (op) {
    case DerivedOp::Cup: return a.cup(x, y);
    case DerivedOp::Cap: return a.cap(x, y);
    case DerivedOp::Odot: return a.odot(x, y);
    case DerivedOp::Oplus: return a.oplus(x, y);
  }
  return -1;
}

inline std::vector<Elem> derived_table(const InvolutiveAlgebra& a, DerivedOp op) {
  std::vector<Elem> t(static_cast<std::size_t>(a.size()) * a.size());
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) t[x * a.size() + y] = derived(a, op, x, y);
  return t;
}

enum class OrderRel { Leq, LeqQ };

inline bool order(const InvolutiveAlgebra& a, OrderRel rel, Elem x, Elem y) {
  return rel == OrderRel::Leq ? a.leq(x, y) : a.leq_q(x, y);
}

// Full relation matrix, row-major; entry (x,y) is true iff x rel y.
inline std::vector<bool> order_matrix(const InvolutiveAlgebra& a, OrderRel rel) {
  std::vector<bool> m(static_cast<std::size_t>(a.size()) * a.size());
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) m[x * a.size() + y] = order(a, rel, x, y);
  return m;
}

struct InvolutionResult {
  std::optional<InvolutiveAlgebra> algebra;
  std::optional<Elem> witness;  // first x with star(star(x)) != x
};

inline InvolutionResult check_involutive(const Algebra& a) {
  std::vector<Elem> star(a.size);
  for (Elem x = 0; x < a.size; ++x) star[x] = a.imp(x, a.zero);
  for (Elem x = 0; x < a.size; ++x)
    if (star[star[x]] != x) return {std::nullopt, x};
  return {InvolutiveAlgebra{a, std::move(star)}, std::nullopt};
}

}  // namespace belab
