// lieforge.cpp -- command-line front end.
//
// Subcommands: dim, weights, tensor, decompose, enumerate, character-eq,
// rectangular, verify.  Exit code 0 = all pass, 1 = a check or comparison
// failed, 2 = usage error.

#include <CLI11.hpp>

#include "lieforge/caseengine.hpp"

#include <fstream>
#include <iostream>

using namespace lieforge;

namespace {

FormalCharacter load_character(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  return parse_character(in);
}

int emit_report(const CaseReport& r, bool json) {
  std::cout << (json ? render_json(r) : render_text(r));
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of low-dimensional semisimple subgroup combinatorics"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output, one record per check");

  std::string repspec_arg, repspec_b, filea, fileb, target;
  int dim_n = 8;
  int bound = 12;
  bool with_shifts = false, emit_witnesses = false;

  auto* cmd_dim = app.add_subcommand("dim", "dimension of an irreducible rep");
  cmd_dim->add_option("rep", repspec_arg, "rep spec, e.g. A1[6] or A1[1]*C2[1,0]")->required();

  auto* cmd_weights = app.add_subcommand("weights", "full weight multiset of a rep");
  cmd_weights->add_option("rep", repspec_arg)->required();

  auto* cmd_tensor = app.add_subcommand("tensor", "weight multiset of a tensor product");
  cmd_tensor->add_option("rep-a", repspec_arg)->required();
  cmd_tensor->add_option("rep-b", repspec_b)->required();

  auto* cmd_decompose =
      app.add_subcommand("decompose", "irreducible decomposition of a tensor product");
  cmd_decompose->add_option("rep-a", repspec_arg)->required();
  cmd_decompose->add_option("rep-b", repspec_b)->required();

  auto* cmd_enum = app.add_subcommand("enumerate", "all classes of a given dimension");
  cmd_enum->add_option("--dim", dim_n, "dimension (2..8)")->required();

  auto* cmd_eq = app.add_subcommand("character-eq", "formal character equivalence");
  cmd_eq->add_option("file-a", filea, "character file")->required();
  cmd_eq->add_option("file-b", fileb, "character file")->required();

  auto* cmd_rect = app.add_subcommand("rectangular", "grid witness for a weight multiset");
  cmd_rect->add_option("file", filea, "character file")->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "run a verification: table1|table2|rect|chromium|case ID|ht-lemma|sign-perm|all");
  cmd_verify->add_option("target", target)->required();
  cmd_verify->add_option("case-id", repspec_arg, "case id for 'verify case'");
  cmd_verify->add_option("--bound", bound, "scan bound for ht-lemma (default 12)");
  cmd_verify->add_flag("--with-shifts", with_shifts, "also check shifted instances");
  cmd_verify->add_flag("--emit-witnesses", emit_witnesses, "print per-solution witnesses");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_dim->parsed()) {
      std::cout << weyl_dim(parse_repspec(repspec_arg)) << "\n";
      return 0;
    }
    if (cmd_weights->parsed()) {
      std::cout << serialize(FormalCharacter(character(parse_repspec(repspec_arg))));
      return 0;
    }
    if (cmd_tensor->parsed() || cmd_decompose->parsed()) {
      IrreducibleRep a = parse_repspec(repspec_arg), b = parse_repspec(repspec_b);
      WeightMultiset prod;
      SemisimpleAlgebra alg = a.algebra;
      if (a.algebra == b.algebra) {
        prod = tensor(character(a), character(b));
      } else {
        prod = tensor_external(character(a), character(b));
        std::vector<SimpleType> types = a.algebra.factors;
        types.insert(types.end(), b.algebra.factors.begin(), b.algebra.factors.end());
        alg = SemisimpleAlgebra(types);
      }
      if (cmd_tensor->parsed()) {
        std::cout << serialize(FormalCharacter(prod));
      } else {
        for (const auto& [w, m] : decompose(prod, alg))
          std::cout << repspec(IrreducibleRep(alg, w)) << " * " << m << "\n";
      }
      return 0;
    }
    if (cmd_enum->parsed()) {
      for (const auto& cls : enumerate_composite(dim_n))
        std::cout << cls.label << "  " << repspec(cls.rep) << "  dim=" << cls.dim
                  << " rank=" << cls.rank << " " << to_string(cls.self_duality) << "\n";
      return 0;
    }
    if (cmd_eq->parsed()) {
      bool eq = equivalent(load_character(filea), load_character(fileb));
      std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
      return eq ? 0 : 1;
    }
    if (cmd_rect->parsed()) {
      WeightMultiset x = load_character(filea).multiset();
      auto w = is_rectangular(x);
      if (!w) {
        std::cout << "not rectangular\n";
        return 1;
      }
      std::cout << "rectangular; lengths {";
      for (size_t i = 0; i < w->shape.lengths.size(); ++i)
        std::cout << (i ? "," : "") << w->shape.lengths[i];
      std::cout << "}" << (w->shape.hypercubic() ? " hypercubic" : "") << "\n";
      auto dec = is_decomposable_rect(x);
      std::cout << (dec ? "decomposable" : "indecomposable") << "\n";
      return 0;
    }
    if (cmd_verify->parsed()) {
      if (target == "table1") return emit_report(verify_table1(), json);
      if (target == "table2") return emit_report(verify_table2(), json);
      if (target == "rect") return emit_report(verify_rect_classification(6), json);
      if (target == "chromium") return emit_report(chromium_verify(), json);
      if (target == "case") {
        if (repspec_arg.empty()) throw CLI::ValidationError("verify case needs an id");
        return emit_report(verify_case(repspec_arg), json);
      }
      if (target == "ht-lemma") {
        auto lr = lemma_search(bound, with_shifts, emit_witnesses);
        for (const auto& line : lr.witness_lines) std::cout << line << "\n";
        return emit_report(lr.report, json);
      }
      if (target == "sign-perm") {
        SignedPermReport rep = signed_perm_report();
        if (emit_witnesses)
          for (const auto& c : rep.cases) {
            std::cout << "signs=(" << c.signs[0] << "," << c.signs[1] << ","
                      << c.signs[2] << "," << c.signs[3] << ") perm=(" << c.perm[0]
                      << c.perm[1] << c.perm[2] << c.perm[3] << ") r=" << c.r
                      << " det(K)=" << c.det_K << " det(M)=" << c.det_M
                      << " N=" << c.order << " eps=" << c.eps << " h="
                      << c.h.numerator() << "/" << c.h.denominator() << "\n";
          }
        return emit_report(rep.report, json);
      }
      if (target == "all") {
        VerifyOptions opt;
        opt.ht_bound = bound;
        opt.with_shifts = with_shifts;
        opt.emit_witnesses = emit_witnesses;
        Summary s = verify_all(opt);
        std::cout << (json ? render_json(s) : render_text(s));
        return s.pass() ? 0 : 1;
      }
      throw CLI::ValidationError("unknown verify target: " + target);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
