#pragma once

// Bundled example algebras used as golden fixtures: three published
// 6/6/10-element tables plus the 2-element Boolean algebra and the trivial
// one-element algebra.  Expectations stored alongside each table are frozen
// regression values.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "belab/classify.hpp"
#include "belab/text.hpp"

namespace belab {

struct NamedExample {
  std::string id;
  std::string text;                           // algebra text format
  InvolutiveAlgebra algebra;
  std::vector<Elem> expected_cap;             // printed meet-like table (may be empty)
  std::vector<std::string> member_classes;    // expected positive verdicts
  std::vector<std::string> nonmember_classes; // expected negative verdicts
  // expected lexicographically-first witnesses for selected failing axioms
  std::map<std::string, std::vector<std::string>> expected_witnesses;
};

namespace corpus_detail {

inline const char* text_of(const std::string& id) {
  if (id == "E4.14")
    return R"(elements: 0 a b c d e f g h 1
one: 1
zero: 0
arrow:
1 1 1 1 1 1 1 1 1 1
b 1 b 1 1 h f f h 1
a a 1 1 1 a 1 a 1 1
d 1 1 1 d 1 1 1 1 1
c 1 1 c 1 1 1 1 1 1
f 1 f 1 1 1 f f 1 1
e a h 1 1 e 1 a h 1
h 1 h 1 1 h 1 1 h 1
g a f 1 1 a f g 1 1
0 a b c d e f g h 1
)";
  if (id == "E4.22")
    return R"(elements: 0 a b c d 1
one: 1
zero: 0
arrow:
1 1 1 1 1 1
b 1 b 1 1 1
a a 1 1 1 1
d 1 1 1 d 1
c 1 1 c 1 1
0 a b c d 1
)";
  if (id == "E5.15")
    return R"(elements: 0 a b c d 1
one: 1
zero: 0
arrow:
1 1 1 1 1 1
d 1 1 1 d 1
c 1 1 1 1 1
b 1 1 1 1 1
a a 1 1 1 1
0 a b c d 1
)";
  if (id == "BOOL2")
    return R"(elements: 0 1
one: 1
zero: 0
arrow:
1 1
0 1
)";
  if (id == "TRIV1")
    return R"(elements: 1
one: 1
zero: 1
arrow:
1
)";
  throw std::out_of_range("unknown example id '" + id + "'");
}

inline std::vector<Elem> cap_of(const std::string& id) {
  auto parse = [](const char* rows, int n) {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (const char* p = rows; *p; ++p) {
      if (*p == ' ' || *p == '\n') continue;
      if (*p == '0') out.push_back(0);
      else if (*p == '1') out.push_back(n - 1);
      else out.push_back(*p - 'a' + 1);
    }
    return out;
  };
  if (id == "E4.14")
    return parse(
        "0000000000 0a0cdegge a 00bcd0b0bb 0abc0efghc 0ab0defghd "
        "0e0cde00ee 0gbcd0fgbf 0g0cd0gg0g 0ebcdeb0hh 0abcdefgh1",
        10);
  if (id == "E4.22")
    return parse("000000 0a0cda 00bcdb 0abc0c 0ab0dd 0abcd1", 6);
  if (id == "E5.15")
    return parse("000000 0abc0a 0abcdb 0abcdc 00bcdd 0abcd1", 6);
  return {};
}

}  // namespace corpus_detail

inline std::vector<std::string> corpus_ids() {
  return {"E4.14", "E4.22", "E5.15", "BOOL2", "TRIV1"};
}

inline NamedExample load_example(const std::string& id) {
  NamedExample ex;
  ex.id = id;
  ex.text = corpus_detail::text_of(id);
  LoadResult lr = load_involutive_text(ex.text);
  if (!lr.algebra)
    throw std::logic_error("bundled example '" + id + "' failed validation:\n" +
                           lr.report.to_string());
  ex.algebra = std::move(*lr.algebra);
  ex.expected_cap = corpus_detail::cap_of(id);

  auto all = [] {
    std::vector<std::string> v;
    for (const auto& d : class_definitions()) v.push_back(d.id);
    return v;
  };
  if (id == "E4.14") {
    for (const auto& c : all())
      (c == "IMOD" ? ex.nonmember_classes : ex.member_classes).push_back(c);
    ex.expected_witnesses["Imod"] = {"a", "c", "e"};
  } else if (id == "E4.22" || id == "BOOL2" || id == "TRIV1") {
    ex.member_classes = all();
  } else if (id == "E5.15") {
    for (const auto& c : all()) {
      bool out = c == "IOL" || c == "IOSL" || c == "IOML" || c == "IMOD" || c == "IOMSL";
      (out ? ex.nonmember_classes : ex.member_classes).push_back(c);
    }
    ex.expected_witnesses["Impl"] = {"b", "0"};
  }
  return ex;
}

inline std::vector<NamedExample> load_corpus() {
  std::vector<NamedExample> out;
  for (const auto& id : corpus_ids()) out.push_back(load_example(id));
  return out;
}

}  // namespace belab
