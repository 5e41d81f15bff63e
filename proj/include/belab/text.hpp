#pragma once

// Line-oriented text format for algebras.  Comments start with '#'.
//
//   elements: 0 a b c d 1
//   one: 1
//   zero: 0
//   arrow:
//   1 1 1 1 1 1
//   ...              (size rows of size names; row = left operand)
//
// Lattice files replace `arrow:` with `meet:`, `join:` and `complement:`
// (the complement section is a single row).  Product files use `odot:` and
// `star:`; their `zero:` line is optional and must equal star(one) if given.

#include <sstream>
#include <string>
#include <vector>

#include "belab/transforms.hpp"

namespace belab {

enum class AlgebraKind { Arrow, Product, Lattice };

struct ParsedAlgebraFile {
  AlgebraKind kind = AlgebraKind::Arrow;
  std::vector<std::string> names;
  std::string one, zero;                    // zero may be empty for product files
  std::vector<std::vector<std::string>> arrow, meet, join, odot;
  std::vector<std::string> complement, star;
  std::vector<std::string> errors;          // structural parse problems
  bool ok() const { return errors.empty(); }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace detail

inline ParsedAlgebraFile parse_algebra_text(const std::string& text) {
  ParsedAlgebraFile f;
  std::istringstream in(text);
  std::string line;
  std::string section;  // table currently being filled
  int row_count = 0;
  bool saw_arrow = false, saw_lattice = false, saw_product = false;
  auto table_of = [&](const std::string& s) -> std::vector<std::vector<std::string>>* {
    if (s == "arrow") return &f.arrow;
    if (s == "meet") return &f.meet;
    if (s == "join") return &f.join;
    if (s == "odot") return &f.odot;
    return nullptr;
  };
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto words = detail::split_ws(line);
    if (words.empty()) continue;
    std::string head = words[0];
    if (!head.empty() && head.back() == ':') {
      std::string key = head.substr(0, head.size() - 1);
      std::vector<std::string> rest(words.begin() + 1, words.end());
      if (key == "elements") { f.names = rest; section.clear(); continue; }
      if (key == "one") {
        if (rest.size() != 1) f.errors.push_back("line " + std::to_string(lineno) + ": one: needs one name");
        else f.one = rest[0];
        section.clear();
        continue;
      }
      if (key == "zero") {
        if (rest.size() != 1) f.errors.push_back("line " + std::to_string(lineno) + ": zero: needs one name");
        else f.zero = rest[0];
        section.clear();
        continue;
      }
      if (key == "complement" || key == "star") {
        // single row; may continue on the same line or the next
        section = key;
        row_count = 0;
        if (key == "complement") saw_lattice = true; else saw_product = true;
        if (!rest.empty()) {
          (key == "complement" ? f.complement : f.star) = rest;
          section.clear();
        }
        continue;
      }
      if (table_of(key)) {
        section = key;
        row_count = 0;
        if (key == "arrow") saw_arrow = true;
        if (key == "meet" || key == "join") saw_lattice = true;
        if (key == "odot") saw_product = true;
        continue;
      }
      f.errors.push_back("line " + std::to_string(lineno) + ": unknown section '" + key + "'");
      section.clear();
      continue;
    }
    if (section == "complement" || section == "star") {
      (section == "complement" ? f.complement : f.star) = words;
      section.clear();
      continue;
    }
    if (auto* tab = table_of(section)) {
      tab->push_back(words);
      ++row_count;
      continue;
    }
    f.errors.push_back("line " + std::to_string(lineno) + ": table row outside any section");
  }
  if (saw_arrow && (saw_lattice || saw_product))
    f.errors.push_back("file mixes arrow with lattice/product sections");
  if (saw_lattice && saw_product)
    f.errors.push_back("file mixes lattice with product sections");
  f.kind = saw_lattice ? AlgebraKind::Lattice
         : saw_product ? AlgebraKind::Product
                       : AlgebraKind::Arrow;
  if (f.names.empty()) f.errors.push_back("missing elements: line");
  if (f.one.empty()) f.errors.push_back("missing one: line");
  if (f.zero.empty() && f.kind != AlgebraKind::Product) f.errors.push_back("missing zero: line");
  return f;
}

namespace detail {

inline bool resolve_table(const ParsedAlgebraFile& f,
                          const std::vector<std::vector<std::string>>& rows, const char* what,
                          std::vector<Elem>& out, std::vector<std::string>& errors) {
  int n = static_cast<int>(f.names.size());
  auto index_of = [&](const std::string& name) -> Elem {
    for (int i = 0; i < n; ++i)
      if (f.names[i] == name) return i;
    return -1;
  };
  if (static_cast<int>(rows.size()) != n) {
    errors.push_back(std::string(what) + " table must have one row per element");
    return false;
  }
  out.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n) {
      errors.push_back(std::string(what) + " row " + std::to_string(x) + " has wrong width");
      return false;
    }
    for (int y = 0; y < n; ++y) {
      Elem e = index_of(rows[x][y]);
      if (e < 0) {
        errors.push_back(std::string(what) + " cell names unknown element '" + rows[x][y] + "'");
        return false;
      }
      out[x * n + y] = e;
    }
  }
  return true;
}

inline Elem resolve_name(const ParsedAlgebraFile& f, const std::string& name,
                         std::vector<std::string>& errors) {
  for (std::size_t i = 0; i < f.names.size(); ++i)
    if (f.names[i] == name) return static_cast<Elem>(i);
  errors.push_back("unknown element name '" + name + "'");
  return -1;
}

}  // namespace detail

struct LoadResult {
  std::optional<InvolutiveAlgebra> algebra;
  ValidationReport report;
};

// Parse + validate an arrow-signature file into an involutive algebra.
inline LoadResult load_involutive_text(const std::string& text) {
  LoadResult out;
  ParsedAlgebraFile f = parse_algebra_text(text);
  out.report.structural = f.errors;
  if (!f.ok()) return out;
  if (f.kind != AlgebraKind::Arrow) {
    out.report.structural.push_back("expected an arrow-signature file");
    return out;
  }
  std::vector<Elem> arrow;
  if (!detail::resolve_table(f, f.arrow, "arrow", arrow, out.report.structural)) return out;
  Elem one = detail::resolve_name(f, f.one, out.report.structural);
  Elem zero = detail::resolve_name(f, f.zero, out.report.structural);
  if (!out.report.structural.empty()) return out;
  BuildResult b = build_algebra(static_cast<int>(f.names.size()), std::move(arrow), one, zero, f.names);
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

struct ProductLoadResult {
  std::optional<ProductAlgebra> algebra;  // structurally sound (not yet axiom-validated)
  std::vector<std::string> errors;
};

inline ProductLoadResult load_product_text(const std::string& text) {
  ProductLoadResult out;
  ParsedAlgebraFile f = parse_algebra_text(text);
  out.errors = f.errors;
  if (!f.ok()) return out;
  if (f.kind != AlgebraKind::Product) {
    out.errors.push_back("expected a product-signature file");
    return out;
  }
  ProductAlgebra p;
  p.size = static_cast<int>(f.names.size());
  p.names = f.names;
  if (!detail::resolve_table(f, f.odot, "odot", p.odot, out.errors)) return out;
  if (static_cast<int>(f.star.size()) != p.size) {
    out.errors.push_back("star section must list one image per element");
    return out;
  }
  p.star.resize(p.size);
  for (int i = 0; i < p.size; ++i) p.star[i] = detail::resolve_name(f, f.star[i], out.errors);
  p.one = detail::resolve_name(f, f.one, out.errors);
  if (!out.errors.empty()) return out;
  p.zero = p.star[p.one];
  if (!f.zero.empty()) {
    Elem z = detail::resolve_name(f, f.zero, out.errors);
    if (out.errors.empty() && z != p.zero) out.errors.push_back("zero: must equal star(one)");
  }
  if (!out.errors.empty()) return out;
  fill_product_arrow(p);
  out.algebra = std::move(p);
  return out;
}

struct LatticeLoadResult {
  std::optional<LatticeAlgebra> algebra;
  std::vector<std::string> errors;
};

inline LatticeLoadResult load_lattice_text(const std::string& text) {
  LatticeLoadResult out;
  ParsedAlgebraFile f = parse_algebra_text(text);
  out.errors = f.errors;
  if (!f.ok()) return out;
  if (f.kind != AlgebraKind::Lattice) {
    out.errors.push_back("expected a lattice-signature file");
    return out;
  }
  LatticeAlgebra l;
  l.size = static_cast<int>(f.names.size());
  l.names = f.names;
  if (!detail::resolve_table(f, f.meet, "meet", l.meet, out.errors)) return out;
  if (!detail::resolve_table(f, f.join, "join", l.join, out.errors)) return out;
  if (static_cast<int>(f.complement.size()) != l.size) {
    out.errors.push_back("complement section must list one image per element");
    return out;
  }
  l.complement.resize(l.size);
  for (int i = 0; i < l.size; ++i)
    l.complement[i] = detail::resolve_name(f, f.complement[i], out.errors);
  l.one = detail::resolve_name(f, f.one, out.errors);
  l.zero = detail::resolve_name(f, f.zero, out.errors);
  if (!out.errors.empty()) return out;
  fill_lattice_arrow(l);
  out.algebra = std::move(l);
  return out;
}

// --- serialization ---

namespace detail {

inline void write_table(std::ostringstream& os, const std::vector<std::string>& names,
                        const std::vector<Elem>& tab) {
  int n = static_cast<int>(names.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) os << ' ';
      os << names[tab[x * n + y]];
    }
    os << '\n';
  }
}

inline void write_header(std::ostringstream& os, const std::vector<std::string>& names, Elem one,
                         Elem zero) {
  os << "elements:";
  for (const auto& nm : names) os << ' ' << nm;
  os << "\none: " << names[one] << "\nzero: " << names[zero] << '\n';
}

}  // namespace detail

inline std::string algebra_to_text(const InvolutiveAlgebra& a) {
  std::ostringstream os;
  detail::write_header(os, a.names(), a.one(), a.zero());
  os << "arrow:\n";
  detail::write_table(os, a.names(), a.base.arrow);
  return os.str();
}

inline std::string product_to_text(const ProductAlgebra& p) {
  std::ostringstream os;
  detail::write_header(os, p.names, p.one, p.zero);
  os << "odot:\n";
  detail::write_table(os, p.names, p.odot);
  os << "star:";
  for (Elem x = 0; x < p.size; ++x) os << ' ' << p.names[p.star[x]];
  os << '\n';
  return os.str();
}

inline std::string lattice_to_text(const LatticeAlgebra& l) {
  std::ostringstream os;
  detail::write_header(os, l.names, l.one, l.zero);
  os << "meet:\n";
  detail::write_table(os, l.names, l.meet);
  os << "join:\n";
  detail::write_table(os, l.names, l.join);
  os << "complement:";
  for (Elem x = 0; x < l.size; ++x) os << ' ' << l.names[l.complement[x]];
  os << '\n';
  return os.str();
}

}  // namespace belab
