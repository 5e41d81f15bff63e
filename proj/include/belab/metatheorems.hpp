#pragma once

// Registry of proved implications/equivalences between axiom sets, verified
// exhaustively over the bundled corpus and all enumerated models up to a
// given size.  Class equations from classify.hpp are verifiable under their
// relation ids through the same entry point.

#include <string>
#include <vector>

#include "belab/corpus.hpp"
#include "belab/enumerate.hpp"

namespace belab {

struct AxiomImplication {
  std::vector<std::string> hypotheses;   // axiom ids, conjunction
  std::vector<std::string> conclusions;  // axiom ids, conjunction
};

struct Metatheorem {
  std::string id;
  std::string statement;                  // human-readable gloss
  std::vector<AxiomImplication> clauses;  // all must hold on every model
};

inline const std::vector<Metatheorem>& metatheorem_registry() {
  static const std::vector<Metatheorem> reg = {
      {"T4.12", "under Impl, the axioms QW1, QW2 and QW are pairwise equivalent",
       {{{"Impl", "QW1"}, {"QW2"}},
        {{"Impl", "QW2"}, {"QW1"}},
        {{"Impl", "QW1"}, {"QW"}},
        {{"Impl", "QW"}, {"QW1"}}}},
      {"T5.6", "under iG, the axioms QW1 and QW2 are equivalent",
       {{{"iG", "QW1"}, {"QW2"}}, {{"iG", "QW2"}, {"QW1"}}}},
      {"T5.7", "QW2 with iG is equivalent to QW2 with Impl",
       {{{"QW2", "iG"}, {"Impl"}}, {{"Impl", "QW2"}, {"iG"}}}},
      {"T5.12", "QW2 with Iabs-i is equivalent to QW with Iabs-i",
       {{{"QW2", "Iabs-i"}, {"QW"}}, {{"QW", "Iabs-i"}, {"QW2"}}}},
      {"T4.18", "Imod implies Impl and QW2",
       {{{"Imod"}, {"Impl", "QW2"}}}},
      {"P3.5", "under QW1, the axioms Impl and Pimpl are equivalent",
       {{{"QW1", "Impl"}, {"Pimpl"}}, {{"QW1", "Pimpl"}, {"Impl"}}}},
      {"P3.6", "QW1 with iG implies Impl",
       {{{"QW1", "iG"}, {"Impl"}}}},
      {"P5.4", "QW2 with iG implies Impl",
       {{{"QW2", "iG"}, {"Impl"}}}},
      {"P5.11", "QW2 with Iabs-i implies QW1",
       {{{"QW2", "Iabs-i"}, {"QW1"}}}},
      {"C3.4", "Impl, iG & Iabs-i, and Pimpl & Iabs-i are pairwise equivalent",
       {{{"Impl"}, {"iG", "Iabs-i", "Pimpl"}},
        {{"iG", "Iabs-i"}, {"Impl"}},
        {{"Pimpl", "Iabs-i"}, {"Impl"}}}},
      {"L3.2", "Impl implies iG, Pimpl and Iabs-i",
       {{{"Impl"}, {"iG", "Pimpl", "Iabs-i"}}}},
      {"L4.3", "the axioms IOM, IOM' and IOM'' are pairwise equivalent",
       {{{"IOM"}, {"IOM'"}}, {{"IOM'"}, {"IOM''"}}, {{"IOM''"}, {"IOM"}}}},
      {"R4.16", "the axioms Imod and Imod' are equivalent",
       {{{"Imod"}, {"Imod'"}}, {{"Imod'"}, {"Imod"}}}},
      {"QW-split", "QW is equivalent to the conjunction of QW1 and QW2",
       {{{"QW"}, {"QW1", "QW2"}}, {{"QW1", "QW2"}, {"QW"}}}},
      {"QW3-alt", "the axioms QW3 and QW3' are equivalent",
       {{{"QW3"}, {"QW3'"}}, {{"QW3'"}, {"QW3"}}}},
      {"IOM-QW2", "QW2 is equivalent to IOM",
       {{{"QW2"}, {"IOM"}}, {{"IOM"}, {"QW2"}}}},
  };
  return reg;
}

inline bool is_metatheorem_id(const std::string& id) {
  for (const auto& m : metatheorem_registry())
    if (m.id == id) return true;
  return false;
}

inline const Metatheorem& metatheorem(const std::string& id) {
  for (const auto& m : metatheorem_registry())
    if (m.id == id) return m;
  throw std::out_of_range("unknown metatheorem id '" + id + "'");
}

struct MetatheoremViolation {
  std::string algebra_id;
  std::string detail;  // which clause / relation broke
};

struct MetatheoremReport {
  std::string id;
  std::string statement;
  int models_examined = 0;
  std::vector<MetatheoremViolation> violations;
  bool holds() const { return violations.empty(); }
};

namespace detail {

inline bool axioms_hold(const InvolutiveAlgebra& a, const std::vector<std::string>& axioms,
                        const AxiomCatalog& cat) {
  for (const auto& ax : axioms)
    if (!check_axiom(a, cat, ax).holds) return false;
  return true;
}

}  // namespace detail

// Check a registered implication metatheorem on an explicit model list.
inline MetatheoremReport verify_metatheorem_on(
    const Metatheorem& m, const std::vector<std::pair<std::string, const InvolutiveAlgebra*>>& models,
    const AxiomCatalog& cat) {
  MetatheoremReport rep;
  rep.id = m.id;
  rep.statement = m.statement;
  for (const auto& [mid, alg] : models) {
    ++rep.models_examined;
    for (std::size_t c = 0; c < m.clauses.size(); ++c) {
      const auto& cl = m.clauses[c];
      if (detail::axioms_hold(*alg, cl.hypotheses, cat) &&
          !detail::axioms_hold(*alg, cl.conclusions, cat))
        rep.violations.push_back({mid, "clause " + std::to_string(c + 1)});
    }
  }
  return rep;
}

// Check a class relation over the same model universe.
inline MetatheoremReport verify_class_relation_on(
    const ClassRelation& rel,
    const std::vector<std::pair<std::string, const InvolutiveAlgebra*>>& models,
    const AxiomCatalog& cat) {
  MetatheoremReport rep;
  rep.id = rel.id;
  rep.statement = "class relation";
  std::vector<ClassificationReport> reps;
  for (const auto& [mid, alg] : models) reps.push_back(classify(*alg, cat, mid));
  rep.models_examined = static_cast<int>(reps.size());
  ClassRelationReport rr = check_class_relation(reps, rel);
  for (const auto& v : rr.violators) rep.violations.push_back({v, "relation violated"});
  return rep;
}

// Model universe for verification: the bundled corpus plus every enumerated
// model (modulo isomorphism) of sizes 1..max_size.
struct ModelUniverse {
  std::vector<NamedExample> corpus;
  std::vector<EnumeratedModel> enumerated;

  std::vector<std::pair<std::string, const InvolutiveAlgebra*>> view() const {
    std::vector<std::pair<std::string, const InvolutiveAlgebra*>> v;
    for (const auto& ex : corpus) v.emplace_back(ex.id, &ex.algebra);
    for (std::size_t i = 0; i < enumerated.size(); ++i)
      v.emplace_back("model#" + std::to_string(i) + "(n=" +
                         std::to_string(enumerated[i].algebra.size()) + ")",
                     &enumerated[i].algebra);
    return v;
  }
};

inline ModelUniverse build_universe(int max_size, const AxiomCatalog& cat, int workers = 1) {
  ModelUniverse u;
  u.corpus = load_corpus();
  u.enumerated = enumerate_up_to(max_size, cat, /*modulo_iso=*/true, workers);
  return u;
}

// Entry point accepting either a metatheorem id or a class-relation id.
inline MetatheoremReport verify_metatheorem(const std::string& id, const ModelUniverse& u,
                                            const AxiomCatalog& cat) {
  auto models = u.view();
  if (is_metatheorem_id(id)) return verify_metatheorem_on(metatheorem(id), models, cat);
  return verify_class_relation_on(class_relation(id), models, cat);
}

inline std::vector<std::string> all_verifiable_ids() {
  std::vector<std::string> ids;
  for (const auto& m : metatheorem_registry()) ids.push_back(m.id);
  for (const auto& r : class_relations()) ids.push_back(r.id);
  return ids;
}

}  // namespace belab
