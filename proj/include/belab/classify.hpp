#pragma once

// Class membership and class-equation checking.  Every class is a conjunction
// of named axioms over the involutive BE base.

#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "belab/catalog.hpp"

namespace belab {

struct ClassDef {
  std::string id;
  std::vector<std::string> axioms;  // all must hold (on top of the InvBE base)
};

// Order matters for reports; keep base-first, then single-axiom classes,
// then conjunctions.
inline const std::vector<ClassDef>& class_definitions() {
  static const std::vector<ClassDef> defs = {
      {"InvBE", {}},
      {"IOM-alg", {"QW2"}},
      {"preW", {"QW1"}},
      {"metaW", {"QW3"}},
      {"QW", {"QW"}},
      {"IOL", {"Impl"}},
      {"IOSL", {"iG"}},
      {"IOWL", {"Iabs-i"}},
      {"IOML", {"Impl", "QW2"}},
      {"IMOD", {"Imod"}},
      {"IOMSL", {"QW2", "iG"}},
      {"IOMWL", {"QW2", "Iabs-i"}},
  };
  return defs;
}

inline const ClassDef& class_definition(const std::string& id) {
  for (const auto& d : class_definitions())
    if (d.id == id) return d;
  throw std::out_of_range("unknown class id '" + id + "'");
}

inline bool is_class_id(const std::string& id) {
  for (const auto& d : class_definitions())
    if (d.id == id) return true;
  return false;
}

struct ClassVerdict {
  std::string class_id;
  bool member = false;
  // every defining axiom that fails, each with its witness
  std::vector<AxiomCheckResult> failing_axioms;
};

struct ClassificationReport {
  std::string algebra_id;
  std::vector<ClassVerdict> verdicts;
  // raw per-axiom results the verdicts were derived from
  std::map<std::string, AxiomCheckResult> axiom_results;
  double seconds = 0.0;

  const ClassVerdict& verdict(const std::string& class_id) const {
    for (const auto& v : verdicts)
      if (v.class_id == class_id) return v;
    throw std::out_of_range("no verdict for class '" + class_id + "'");
  }
  bool member(const std::string& class_id) const { return verdict(class_id).member; }
};

inline ClassificationReport classify(const InvolutiveAlgebra& a, const AxiomCatalog& cat,
                                     const std::string& algebra_id = "") {
  auto t0 = std::chrono::steady_clock::now();
  ClassificationReport rep;
  rep.algebra_id = algebra_id;
  auto result_of = [&](const std::string& ax) -> const AxiomCheckResult& {
    auto it = rep.axiom_results.find(ax);
    if (it == rep.axiom_results.end())
      it = rep.axiom_results.emplace(ax, check_axiom(a, cat, ax)).first;
    return it->second;
  };
  for (const auto& def : class_definitions()) {
    ClassVerdict v;
    v.class_id = def.id;
    v.member = true;
    for (const auto& ax : def.axioms) {
      const AxiomCheckResult& r = result_of(ax);
      if (!r.holds) {
        v.member = false;
        v.failing_axioms.push_back(r);
      }
    }
    rep.verdicts.push_back(std::move(v));
  }
  // Redundancy guard: QW must coincide with QW1 & QW2.
  bool qw = result_of("QW").holds;
  bool qw12 = result_of("QW1").holds && result_of("QW2").holds;
  if (qw != qw12)
    throw std::logic_error("internal error: (QW) disagrees with (QW1) & (QW2) on '" + algebra_id +
                           "'");
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// --- class relations ---

enum class RelationKind { Equality, Inclusion, StrictInclusion };

struct ClassRelation {
  std::string id;
  RelationKind kind;
  std::vector<std::string> lhs;  // intersection of classes
  std::vector<std::string> rhs;  // intersection of classes
  std::string note;
};

inline const std::vector<ClassRelation>& class_relations() {
  static const std::vector<ClassRelation> rels = {
      {"QW=preW*IOM", RelationKind::Equality, {"QW"}, {"preW", "IOM-alg"}, ""},
      {"QW=metaW*IOM", RelationKind::Equality, {"QW"}, {"metaW", "IOM-alg"}, ""},
      {"preW<metaW", RelationKind::Inclusion, {"preW"}, {"metaW"}, ""},
      {"IOL=IOSL*IOWL", RelationKind::Equality, {"IOL"}, {"IOSL", "IOWL"}, ""},
      {"IOML=IOM*IOL", RelationKind::Equality, {"IOML"}, {"IOM-alg", "IOL"}, ""},
      {"IOML=preW*IOL", RelationKind::Equality, {"IOML"}, {"preW", "IOL"}, ""},
      {"IOML=QW*IOL", RelationKind::Equality, {"IOML"}, {"QW", "IOL"}, ""},
      {"IOML<metaW", RelationKind::Inclusion, {"IOML"}, {"metaW"}, ""},
      {"IMOD<IOML", RelationKind::StrictInclusion, {"IMOD"}, {"IOML"},
       "separation expected from the bundled 10-element example"},
      {"IOMSL=preW*IOSL", RelationKind::Equality, {"IOMSL"}, {"preW", "IOSL"}, ""},
      {"IOMSL=QW*IOSL", RelationKind::Equality, {"IOMSL"}, {"QW", "IOSL"}, ""},
      {"IOMSL=IOML", RelationKind::Equality, {"IOMSL"}, {"IOML"}, ""},
      {"IOMWL=QW*IOWL", RelationKind::Equality, {"IOMWL"}, {"QW", "IOWL"}, ""},
      {"IOMWL<metaW", RelationKind::Inclusion, {"IOMWL"}, {"metaW"}, ""},
  };
  return rels;
}

inline const ClassRelation& class_relation(const std::string& id) {
  for (const auto& r : class_relations())
    if (r.id == id) return r;
  throw std::out_of_range("unknown class relation '" + id + "'");
}

struct ClassRelationReport {
  std::string relation_id;
  int algebras_checked = 0;
  std::vector<std::string> violators;  // algebra ids violating the relation
  // for strict inclusions: an algebra in rhs \ lhs, if the corpus has one
  std::optional<std::string> separating_example;
  bool holds() const { return violators.empty(); }
};

namespace detail {

inline bool in_all(const ClassificationReport& rep, const std::vector<std::string>& classes) {
  for (const auto& c : classes)
    if (!rep.member(c)) return false;
  return true;
}

}  // namespace detail

// Check one relation against pre-computed classifications of a corpus.
inline ClassRelationReport check_class_relation(const std::vector<ClassificationReport>& corpus,
                                                const ClassRelation& rel) {
  ClassRelationReport out;
  out.relation_id = rel.id;
  out.algebras_checked = static_cast<int>(corpus.size());
  for (const auto& rep : corpus) {
    bool l = detail::in_all(rep, rel.lhs);
    bool r = detail::in_all(rep, rel.rhs);
    bool ok = rel.kind == RelationKind::Equality ? (l == r) : (!l || r);
    if (!ok) out.violators.push_back(rep.algebra_id);
    if (rel.kind == RelationKind::StrictInclusion && r && !l && !out.separating_example)
      out.separating_example = rep.algebra_id;
  }
  return out;
}

inline ClassRelationReport check_class_relation(const std::vector<InvolutiveAlgebra>& corpus,
                                                const ClassRelation& rel, const AxiomCatalog& cat) {
  std::vector<ClassificationReport> reps;
  reps.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    reps.push_back(classify(corpus[i], cat, "#" + std::to_string(i)));
  return check_class_relation(reps, rel);
}

}  // namespace belab
