#include "homcoh/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "homcoh/cochain_complex.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/errors.hpp"

namespace homcoh::cli {

std::optional<DeformAction> parse_deform_action(std::string_view s) {
  if (s == "check") return DeformAction::check;
  if (s == "obstruction") return DeformAction::obstruction;
  if (s == "extend") return DeformAction::extend;
  if (s == "poisson") return DeformAction::poisson;
  return std::nullopt;
}

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

json witness_json(const Witness& w) {
  json j;
  j["indices"] = json(w.indices);
  j["lhs"] = vector_json(w.lhs);
  j["rhs"] = vector_json(w.rhs);
  return j;
}

json check_json(const CheckResult& r) {
  json j;
  j["ok"] = r.ok;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

std::string_view flavor_name(Flavor f) { return f == Flavor::hom_assoc ? "hom-assoc" : "hom-lie"; }

CommandResult guarded(std::string_view command, const std::function<CommandResult()>& body) {
  auto failure = [&](int code, const std::string& msg) {
    CommandResult r;
    r.exit_code = code;
    r.report["command"] = std::string(command);
    r.report["result"] = code == kExitInputError ? "input-error" : "fail";
    r.report["error"] = msg;
    return r;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return failure(kExitInputError, e.what());
  } catch (const UsageError& e) {
    return failure(kExitInputError, e.what());
  } catch (const DimensionMismatch& e) {
    return failure(kExitInputError, e.what());
  } catch (const InternalError& e) {
    return failure(kExitMathFailure, std::string("internal error: ") + e.what());
  } catch (const Error& e) {
    return failure(kExitMathFailure, e.what());
  }
}

HomAlgebra require_single_algebra(const AlgebraDocument& doc, std::string_view what) {
  if (doc.kind == DocumentKind::hom_poisson)
    throw UsageError(std::string(what) + " needs a hom-associative or hom-lie document");
  return to_algebra(doc);
}

}  // namespace

CommandResult cmd_verify(const AlgebraDocument& input) {
  return guarded("verify", [&] {
    CommandResult r;
    r.report["command"] = "verify";
    r.report["kind"] = std::string(to_string(input.kind));
    r.report["dim"] = input.dim;
    json axioms;
    json mult;
    bool ok = true;
    auto record = [&](const char* name, const CheckResult& c) {
      axioms[name] = check_json(c);
      ok = ok && c.ok;
    };
    switch (input.kind) {
      case DocumentKind::hom_associative:
        record("hom_associativity", check_hom_associative(input.mu, input.alpha));
        mult["mu"] = check_json(check_multiplicative(input.mu, input.alpha));
        break;
      case DocumentKind::hom_lie:
        record("skew_symmetry", check_skew_symmetric(input.mu));
        record("hom_jacobi", check_hom_jacobi(input.mu, input.alpha));
        mult["bracket"] = check_json(check_multiplicative(input.mu, input.alpha));
        break;
      case DocumentKind::hom_poisson: {
        auto rep = check_hom_poisson(to_poisson(input));
        record("commutativity", rep.commutativity);
        record("hom_associativity", rep.hom_associativity);
        record("skew_symmetry", rep.skew_symmetry);
        record("hom_jacobi", rep.hom_jacobi);
        record("compatibility", rep.compatibility);
        mult["mu"] = check_json(rep.multiplicativity_mu);
        mult["bracket"] = check_json(rep.multiplicativity_bracket);
        break;
      }
    }
    r.report["axioms"] = std::move(axioms);
    r.report["multiplicativity"] = std::move(mult);
    r.report["result"] = ok ? "pass" : "fail";
    r.exit_code = ok ? kExitPass : kExitMathFailure;
    return r;
  });
}

CommandResult cmd_cohomology(const AlgebraDocument& input, std::size_t n, const Options& opts) {
  return guarded("cohomology", [&] {
    if (n < 1 || n > opts.arity_cap)
      throw UsageError("arity " + std::to_string(n) + " outside [1, " + std::to_string(opts.arity_cap) + "]");
    HomAlgebra a = require_single_algebra(input, "cohomology");
    CohomologyReport rep = cohomology(a, n);
    CommandResult r;
    r.report["command"] = "cohomology";
    r.report["flavor"] = std::string(flavor_name(rep.flavor));
    r.report["n"] = n;
    r.report["dimC"] = rep.dimC;
    r.report["dimZ"] = rep.dimZ;
    r.report["dimB"] = rep.dimB;
    r.report["dimH"] = rep.dimH;
    if (opts.representatives) {
      json reps = json::array();
      for (const auto& c : rep.representatives) reps.push_back(json{{"entries", cochain_entries(c)}});
      r.report["representatives"] = std::move(reps);
    }
    r.report["result"] = "pass";
    return r;
  });
}

CommandResult cmd_bracket(const AlgebraDocument& input, const CochainDocument& phi, const CochainDocument& psi,
                          BracketKind which, const Options& opts) {
  return guarded("bracket", [&] {
    const Cochain& x = phi.value;
    const Cochain& y = psi.value;
    if (x.dim() != input.dim || y.dim() != input.dim)
      throw UsageError("cochain dimension does not match the algebra dimension " + std::to_string(input.dim));
    if (x.arity() > opts.arity_cap || y.arity() > opts.arity_cap)
      throw UsageError("cochain arity exceeds the cap " + std::to_string(opts.arity_cap));
    if (which == BracketKind::wedge) {
      if (!x.is_alternating()) throw UsageError("wedge bracket needs alternating cochains; phi is not alternating");
      if (!y.is_alternating()) throw UsageError("wedge bracket needs alternating cochains; psi is not alternating");
    }
    auto res = bracket(which, x, y, input.alpha);
    CommandResult r;
    r.report["command"] = "bracket";
    r.report["which"] = which == BracketKind::delta ? "delta" : "wedge";
    r.report["left_degree"] = res.left_degree;
    r.report["right_degree"] = res.right_degree;
    r.report["arity"] = res.value.arity();
    r.report["zero"] = res.value.is_zero();
    r.report["entries"] = cochain_entries(res.value);
    r.report["result"] = "pass";
    r.document = to_json(CochainDocument{std::string(kSchemaVersion), res.value});
    return r;
  });
}

CommandResult cmd_deform(const DeformationDocument& input, DeformAction action, const Options&) {
  return guarded("deform", [&] {
    Deformation d = to_deformation(input);
    CommandResult r;
    r.report["command"] = "deform";
    r.report["order"] = d.order();
    switch (action) {
      case DeformAction::check: {
        r.report["action"] = "check";
        auto c = check_deformation(d);
        json orders = json::array();
        for (const auto& o : c.orders) {
          json e;
          e["order"] = o.order;
          e["ok"] = o.ok;
          if (o.witness) e["witness"] = witness_json(*o.witness);
          orders.push_back(std::move(e));
        }
        r.report["orders"] = std::move(orders);
        if (c.first_failure) r.report["first_failure"] = *c.first_failure;
        r.report["result"] = c.ok() ? "pass" : "fail";
        r.exit_code = c.ok() ? kExitPass : kExitMathFailure;
        break;
      }
      case DeformAction::obstruction:
      case DeformAction::extend: {
        r.report["action"] = action == DeformAction::obstruction ? "obstruction" : "extend";
        auto ob = obstruction(d);
        r.report["psi"] = cochain_entries(ob.psi);
        r.report["is_cocycle"] = ob.is_cocycle;
        r.report["is_coboundary"] = ob.is_coboundary;
        if (ob.extension_term) r.report["extension_term"] = bilinear_entries(*ob.extension_term);
        if (!ob.is_coboundary) {
          json coords = json::array();
          for (const auto& c : ob.class_coordinates) coords.push_back(c.str());
          r.report["class_coordinates"] = std::move(coords);
          r.report["class_representative"] = cochain_entries(*ob.class_representative);
        }
        if (action == DeformAction::obstruction) {
          r.report["result"] = "pass";
          break;
        }
        if (!ob.is_coboundary) {
          r.report["result"] = "obstructed";
          r.exit_code = kExitMathFailure;
          break;
        }
        Deformation next = d.extended(*ob.extension_term);
        auto c = check_deformation(next);
        if (!c.ok()) throw InternalError("extended deformation fails its equation at order " +
                                         std::to_string(*c.first_failure));
        r.report["result"] = "extended";
        r.report["new_order"] = next.order();
        r.document = to_json(document_from(next));
        break;
      }
      case DeformAction::poisson: {
        r.report["action"] = "poisson";
        HomPoissonAlgebra p = poisson_from_deformation(d);
        auto rep = check_hom_poisson(p);
        json axioms;
        axioms["commutativity"] = check_json(rep.commutativity);
        axioms["hom_associativity"] = check_json(rep.hom_associativity);
        axioms["skew_symmetry"] = check_json(rep.skew_symmetry);
        axioms["hom_jacobi"] = check_json(rep.hom_jacobi);
        axioms["compatibility"] = check_json(rep.compatibility);
        r.report["axioms"] = std::move(axioms);
        r.report["bracket"] = bilinear_entries(p.bracket().as_cochain());
        r.report["result"] = rep.ok() ? "pass" : "fail";
        r.exit_code = rep.ok() ? kExitPass : kExitMathFailure;
        r.document = to_json(document_from(p));
        break;
      }
    }
    return r;
  });
}

namespace {

void render(const json& v, const std::string& key, std::string& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) render(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
    return;
  }
  if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && !e.is_structured();
    if (flat) {
      out += key + ": " + v.dump() + "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) render(v[i], key + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw ParseError(path + ": cannot open for writing");
  f << doc.dump(2) << "\n";
}

}  // namespace

std::string render_text(const json& report) {
  std::string out;
  render(report, "", out);
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology, brackets and deformations of Hom-associative and Hom-Lie algebras"};
  app.name("homcoh");
  app.require_subcommand(1);

  bool as_json = false;
  Options opts;
  std::string output;
  app.add_flag("--json", as_json, "Emit the report as JSON");
  app.add_option("--arity-cap", opts.arity_cap, "Largest cochain arity accepted")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "Write the emitted tensor or document to this file");

  std::string input;
  auto* verify = app.add_subcommand("verify", "Check the axioms of an algebra document");
  verify->add_option("input", input, "Algebra document")->required();

  std::size_t n = 0;
  auto* cohom = app.add_subcommand("cohomology", "Cocycles, coboundaries and cohomology in one arity");
  cohom->add_option("input", input, "Algebra document")->required();
  cohom->add_option("-n,--arity", n, "Cochain arity")->required();
  cohom->add_flag("--representatives", opts.representatives, "Print coset representatives");

  std::string phi_path, psi_path, which = "delta";
  auto* br = app.add_subcommand("bracket", "Gerstenhaber (delta) or Nijenhuis-Richardson (wedge) bracket");
  br->add_option("input", input, "Algebra document supplying the twist")->required();
  br->add_option("--phi", phi_path, "Left cochain document")->required();
  br->add_option("--psi", psi_path, "Right cochain document")->required();
  br->add_option("--which", which, "delta or wedge")->check(CLI::IsMember({"delta", "wedge"}));

  std::string action;
  auto* deform = app.add_subcommand("deform", "Analyse a truncated formal deformation");
  deform->add_option("action", action, "check, obstruction, extend or poisson")
      ->required()
      ->check(CLI::IsMember({"check", "obstruction", "extend", "poisson"}));
  deform->add_option("input", input, "Deformation document")->required();

  for (auto* sub : {verify, cohom, br, deform}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  auto loaded = [&](const std::function<CommandResult()>& f) {
    try {
      return f();
    } catch (const ParseError& e) {
      CommandResult r;
      r.exit_code = kExitInputError;
      r.report["result"] = "input-error";
      r.report["error"] = e.what();
      return r;
    }
  };

  CommandResult result;
  if (*verify) {
    result = loaded([&] { return cmd_verify(load_algebra(input)); });
  } else if (*cohom) {
    result = loaded([&] { return cmd_cohomology(load_algebra(input), n, opts); });
  } else if (*br) {
    result = loaded([&] {
      return cmd_bracket(load_algebra(input), load_cochain(phi_path), load_cochain(psi_path),
                         which == "wedge" ? BracketKind::wedge : BracketKind::delta, opts);
    });
  } else {
    result = loaded([&] { return cmd_deform(load_deformation(input), *parse_deform_action(action), opts); });
  }

  if (result.document && !output.empty()) {
    try {
      write_file(output, *result.document);
      result.report["output"] = output;
    } catch (const ParseError& e) {
      err << e.what() << "\n";
      return kExitInputError;
    }
  } else if (result.document && as_json) {
    result.report["document"] = *result.document;
  }

  if (as_json) {
    out << result.report.dump(2) << "\n";
  } else {
    out << render_text(result.report);
    if (result.document && output.empty()) out << "document:\n" << result.document->dump(2) << "\n";
  }
  if (result.report.contains("error")) err << "error: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}

}  // namespace homcoh::cli
