// belab command-line front end: validation, axiom/formula checking,
// classification, derived tables, signature transforms, enumeration and
// metatheorem verification.
//
// Exit codes: 0 = all checks pass, 1 = a checked property fails (witness
// reported), 2 = usage / parse / structural error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "belab/report.hpp"

namespace {

using namespace belab;

constexpr const char* kResourceEnvVar = "BELAB_RESOURCE_DIR";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << content;
}

// Resolve the axiom catalog: an axioms.cat in the resource directory (env
// var) overrides the builtin catalog.
AxiomCatalog load_catalog() {
  if (const char* dir = std::getenv(kResourceEnvVar)) {
    std::string path = std::string(dir) + "/axioms.cat";
    std::ifstream in(path);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      return AxiomCatalog(ss.str());
    }
  }
  return AxiomCatalog::builtin();
}

struct InputOpts {
  std::string example;
  std::string file;
};

InvolutiveAlgebra load_input(const InputOpts& in) {
  if (!in.example.empty() && !in.file.empty())
    throw std::runtime_error("give either --example or --file, not both");
  if (!in.example.empty()) return load_example(in.example).algebra;
  if (in.file.empty()) throw std::runtime_error("an input is required: --example or --file");
  LoadResult lr = load_involutive_text(read_file(in.file));
  if (!lr.algebra)
    throw std::runtime_error("input rejected:\n" + lr.report.to_string());
  return std::move(*lr.algebra);
}

std::string witness_text(const std::vector<Elem>& w, const std::vector<std::string>& vars,
                         const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += (i < vars.size() ? vars[i] : "v" + std::to_string(i)) + "=" + names[w[i]];
  }
  return s;
}

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--example", in.example, "bundled example id (E4.14, E4.22, E5.15, BOOL2, TRIV1)");
  cmd->add_option("--file", in.file, "algebra text file");
}

int cmd_check(const InputOpts& in, const std::string& axiom, const std::string& formula,
              bool json, const std::string& out_path, const AxiomCatalog& cat) {
  if (axiom.empty() == formula.empty())
    throw std::runtime_error("give exactly one of --axiom or --formula");
  InvolutiveAlgebra a = load_input(in);

  AxiomCheckResult r;
  std::string what;
  if (!axiom.empty()) {
    const AxiomId& ax = cat.get(axiom);
    what = ax.id;
    if (ax.context == SignatureContext::Product) {
      ProductAlgebra p = be_to_product(a);
      r = check_axiom_in(p.context(), ax);
    } else if (ax.context == SignatureContext::Lattice) {
      LatticeTransformResult lt = iol_to_lattice(a, cat);
      if (!lt.lattice)
        throw std::runtime_error("lattice-context axiom needs an implicative algebra:\n" +
                                 lt.report.to_string(a.names()));
      r = check_axiom_in(lt.lattice->context(), ax);
    } else {
      r = check_axiom(a, ax);
    }
  } else {
    QuasiIdentity q = parse_formula(formula);
    what = print_formula(q);
    CheckResult c = check_formula(a, q);
    r.axiom = what;
    r.holds = c.holds;
    r.witness = c.witness;
    r.witness_variables = q.variables;
    r.evaluations = c.evaluations;
  }

  if (json) {
    Json j = report_envelope("check", {in.example.empty() ? in.file : in.example});
    j["result"] = axiom_result_json(r, a.names());
    write_output(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    if (r.holds) os << what << ": holds\n";
    else os << what << ": fails at (" << witness_text(*r.witness, r.witness_variables, a.names())
            << ")\n";
    write_output(out_path, os.str());
  }
  return r.holds ? 0 : 1;
}

int cmd_classify(const InputOpts& in, bool json, const std::string& out_path,
                 const AxiomCatalog& cat) {
  InvolutiveAlgebra a = load_input(in);
  std::string id = in.example.empty() ? in.file : in.example;
  ClassificationReport rep = classify(a, cat, id);
  if (json) {
    Json j = report_envelope("classify", {id});
    j["result"] = classification_json(rep, a.names());
    write_output(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& v : rep.verdicts) {
      os << v.class_id << ": " << (v.member ? "yes" : "no");
      if (!v.member) {
        os << "  (";
        for (std::size_t i = 0; i < v.failing_axioms.size(); ++i) {
          const auto& f = v.failing_axioms[i];
          if (i) os << "; ";
          os << f.axiom << " fails at "
             << witness_text(*f.witness, f.witness_variables, a.names());
        }
        os << ")";
      }
      os << '\n';
    }
    write_output(out_path, os.str());
  }
  return 0;
}

int cmd_tables(const InputOpts& in, const std::string& op, bool json,
               const std::string& out_path) {
  InvolutiveAlgebra a = load_input(in);
  int n = a.size();
  std::vector<Elem> table;
  std::vector<bool> rel;
  bool is_rel = op == "leq" || op == "leqQ";
  if (op == "arrow") {
    table = a.base.arrow;
  } else if (is_rel) {
    rel = order_matrix(a, op == "leq" ? OrderRel::Leq : OrderRel::LeqQ);
  } else {
    auto d = derived_op_of(op);
    if (!d) throw std::runtime_error("unknown op '" + op + "' (arrow, cup, cap, odot, oplus, leq, leqQ)");
    table = derived_table(a, *d);
  }
  std::ostringstream os;
  if (json) {
    Json j = report_envelope("tables", {in.example.empty() ? in.file : in.example});
    j["op"] = op;
    Json rows = Json::array();
    for (Elem x = 0; x < n; ++x) {
      Json row = Json::array();
      for (Elem y = 0; y < n; ++y) {
        if (is_rel) row.push_back(static_cast<bool>(rel[x * n + y]));
        else row.push_back(a.names()[table[x * n + y]]);
      }
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
  } else {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (y) os << ' ';
        if (is_rel) os << (rel[x * n + y] ? '1' : '.');
        else os << a.names()[table[x * n + y]];
      }
      os << '\n';
    }
  }
  write_output(out_path, os.str());
  return 0;
}

int cmd_transform(const InputOpts& in, const std::string& target, const std::string& out_path,
                  const AxiomCatalog& cat) {
  // arrow-signature targets accept product/lattice files; other targets take
  // an involutive algebra input.
  if (target == "arrow") {
    if (in.file.empty()) throw std::runtime_error("transform to arrow needs --file");
    std::string text = read_file(in.file);
    ParsedAlgebraFile pf = parse_algebra_text(text);
    if (!pf.ok()) throw std::runtime_error("input rejected: " + pf.errors.front());
    if (pf.kind == AlgebraKind::Product) {
      ProductLoadResult pl = load_product_text(text);
      if (!pl.algebra) throw std::runtime_error("input rejected: " + pl.errors.front());
      TransformResult tr = product_to_be(*pl.algebra, cat);
      if (!tr.algebra) {
        std::cerr << "rejected:\n" << tr.report.to_string(pl.algebra->names);
        return 1;
      }
      write_output(out_path, algebra_to_text(*tr.algebra));
      return 0;
    }
    if (pf.kind == AlgebraKind::Lattice) {
      LatticeLoadResult ll = load_lattice_text(text);
      if (!ll.algebra) throw std::runtime_error("input rejected: " + ll.errors.front());
      TransformResult tr = lattice_to_iol(*ll.algebra, cat);
      if (!tr.algebra) {
        std::cerr << "rejected:\n" << tr.report.to_string(ll.algebra->names);
        return 1;
      }
      write_output(out_path, algebra_to_text(*tr.algebra));
      return 0;
    }
    throw std::runtime_error("input is already in the arrow signature");
  }
  InvolutiveAlgebra a = load_input(in);
  if (target == "product") {
    write_output(out_path, product_to_text(be_to_product(a)));
    return 0;
  }
  if (target == "lattice") {
    LatticeTransformResult lt = iol_to_lattice(a, cat);
    if (!lt.lattice) {
      std::cerr << "rejected:\n" << lt.report.to_string(a.names());
      return 1;
    }
    write_output(out_path, lattice_to_text(*lt.lattice));
    return 0;
  }
  throw std::runtime_error("unknown target '" + target + "' (arrow, product, lattice)");
}

int cmd_enumerate(int size, const std::string& cls, bool labeled, int workers, int size_cap,
                  bool json, const std::string& out_path, const AxiomCatalog& cat) {
  EnumerationTask task;
  task.size = size;
  task.modulo_iso = !labeled;
  task.workers = workers;
  if (size_cap > 0) task.size_cap = size_cap;
  if (!cls.empty()) task.filter_axioms.push_back(cls);
  auto models = enumerate_models(task, cat);
  std::ostringstream os;
  if (json) {
    Json j = report_envelope("enumerate", {});
    j["size"] = size;
    j["modulo_iso"] = task.modulo_iso;
    j["count"] = models.size();
    Json dump = Json::array();
    for (const auto& m : models) dump.push_back(algebra_to_text(m.algebra));
    j["models"] = std::move(dump);
    os << j.dump(2) << '\n';
  } else {
    os << "# size " << size << (task.modulo_iso ? " modulo isomorphism" : " labeled") << ": "
       << models.size() << " model(s)\n";
    for (std::size_t i = 0; i < models.size(); ++i)
      os << "\n# model " << i << "\n" << algebra_to_text(models[i].algebra);
  }
  write_output(out_path, os.str());
  return 0;
}

int cmd_verify(const std::string& theorem, int max_size, int workers, bool json,
               const std::string& out_path, const AxiomCatalog& cat) {
  bool known = is_metatheorem_id(theorem);
  if (!known) {
    known = [&] {
      for (const auto& r : class_relations())
        if (r.id == theorem) return true;
      return false;
    }();
  }
  if (!known) throw std::runtime_error("unknown theorem id '" + theorem + "'");
  ModelUniverse u = build_universe(max_size, cat, workers);
  MetatheoremReport rep = verify_metatheorem(theorem, u, cat);
  if (json) {
    Json j = report_envelope("verify", {theorem});
    j["max_size"] = max_size;
    j["result"] = metatheorem_json(rep);
    write_output(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << rep.id << ": " << (rep.holds() ? "0 violations" : "VIOLATED") << " over "
       << rep.models_examined << " model(s)\n";
    for (const auto& v : rep.violations) os << "  " << v.algebra_id << ": " << v.detail << '\n';
    write_output(out_path, os.str());
  }
  return rep.holds() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for involutive BE algebras"};
  app.require_subcommand(1);

  InputOpts in;
  std::string axiom, formula, op, target, cls, theorem, out_path;
  int size = 2, max_size = 4, workers = 1, size_cap = 0;
  bool json = false, labeled = false;

  auto* check = app.add_subcommand("check", "check an axiom or formula on an algebra");
  add_input_flags(check, in);
  check->add_option("--axiom", axiom, "catalog axiom id");
  check->add_option("--formula", formula, "inline formula");
  check->add_flag("--json", json);
  check->add_option("--out", out_path);

  auto* classify_cmd = app.add_subcommand("classify", "class membership report");
  add_input_flags(classify_cmd, in);
  classify_cmd->add_flag("--json", json);
  classify_cmd->add_option("--out", out_path);

  auto* tables = app.add_subcommand("tables", "print a derived operation or order table");
  add_input_flags(tables, in);
  tables->add_option("--op", op, "arrow, cup, cap, odot, oplus, leq, leqQ")->required();
  tables->add_flag("--json", json);
  tables->add_option("--out", out_path);

  auto* transform = app.add_subcommand("transform", "translate between signatures");
  add_input_flags(transform, in);
  transform->add_option("--to", target, "target signature: arrow, product, lattice")->required();
  transform->add_option("--out", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate models of a given size");
  enumerate->add_option("--size", size)->required();
  enumerate->add_option("--class", cls, "class id or axiom id filter");
  enumerate->add_flag("--labeled", labeled, "emit labeled models instead of modulo isomorphism");
  enumerate->add_option("--workers", workers);
  enumerate->add_option("--size-cap", size_cap, "raise the enumeration size cap");
  enumerate->add_flag("--json", json);
  enumerate->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "verify a registered theorem exhaustively");
  verify->add_option("--theorem", theorem)->required();
  verify->add_option("--max-size", max_size);
  verify->add_option("--workers", workers);
  verify->add_flag("--json", json);
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    belab::AxiomCatalog cat = load_catalog();
    if (check->parsed()) return cmd_check(in, axiom, formula, json, out_path, cat);
    if (classify_cmd->parsed()) return cmd_classify(in, json, out_path, cat);
    if (tables->parsed()) return cmd_tables(in, op, json, out_path);
    if (transform->parsed()) return cmd_transform(in, target, out_path, cat);
    if (enumerate->parsed())
      return cmd_enumerate(size, cls, labeled, workers, size_cap, json, out_path, cat);
    if (verify->parsed()) return cmd_verify(theorem, max_size, workers, json, out_path, cat);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
