#include "framelab/cli.hpp"

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "framelab/arrows.hpp"
#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"
#include "framelab/report.hpp"

namespace framelab {

namespace {

struct Config {
  std::string command;
  std::string family;
  std::string source, target, via;
  std::string left = "C", right = "E";
  std::string sig = "lambdaC";
  std::string type_expr;
  std::vector<std::string> type_exprs;
  int depth = -1;
  int max_order = 2;
  int skeleton_depth = 3;
  int or_counts = 0;
  long long budget = -1;
  int threads = 0;
  std::string term;
  std::string element;
  std::string out_path;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--budget", cfg.budget, "layer enumeration budget");
  cmd->add_option("--threads", cfg.threads, "worker thread cap (0 = default)");
  cmd->add_option("--out", cfg.out_path, "write the report to this file");
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
}

long long resolve_budget(const Config& cfg) {
  if (cfg.budget > 0) return cfg.budget;
  if (cfg.budget == 0 || cfg.budget < -1) fail(ErrorKind::Usage, "budget must be positive");
  if (const char* env = std::getenv("FRAMELAB_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (!end || *end != '\0' || v <= 0) {
      fail(ErrorKind::Usage, "FRAMELAB_BUDGET must be a positive integer");
    }
    return v;
  }
  return kDefaultBudget;
}

int depth_or(const Config& cfg, int fallback) {
  if (cfg.depth == -1) return fallback;
  if (cfg.depth < 0) fail(ErrorKind::Usage, "depth must be non-negative");
  return cfg.depth;
}

std::vector<TypeRef> resolve_types(const Config& cfg) {
  std::vector<TypeRef> types;
  if (!cfg.type_expr.empty()) types.push_back(Type::parse(cfg.type_expr));
  for (const auto& s : cfg.type_exprs) types.push_back(Type::parse(s));
  if (types.empty()) return default_frontier(cfg.max_order);
  return types;
}

Element parse_element(FrameStore& store, Family f, TypeRef t, const std::string& text) {
  const Layer& lay = store.layer(f, t);
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    int idx = std::atoi(text.c_str());
    if (idx < 0 || idx >= lay.size()) {
      fail(ErrorKind::NoSuchElement, "element index " + text + " out of range at " + t->str());
    }
    return Element{&lay, idx};
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) j = Json(text);  // bare literal name
  return element_from_json(lay, j);
}

int emit(const Config& cfg, const std::string& command, const Json& body, std::ostream& out,
         int code) {
  emit_report(report_envelope(command, body), cfg.format, cfg.out_path, out);
  return code;
}

int cmd_frame(const Config& cfg, bool enumerate, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  Family f = family_from_name(cfg.family);
  TypeRef t = Type::parse(cfg.type_expr);
  const Layer& lay = store.layer(f, t);
  Json body;
  body["family"] = family_name(f);
  body["type"] = t->str();
  body["count"] = lay.size();
  if (enumerate) {
    Json elems = Json::array();
    for (int i = 0; i < lay.size(); ++i) elems.push_back(element_to_json(Element{&lay, i}));
    body["elements"] = elems;
  }
  return emit(cfg, enumerate ? "frame enumerate" : "frame count", body, out, 0);
}

int cmd_collapse_certify(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  CollapseCertificate cert =
      certify_arrow(store, family_from_name(cfg.source), family_from_name(cfg.target),
                    cfg.max_order, depth_or(cfg, 5));
  return emit(cfg, "collapse certify", collapse_certificate_json(cert), out,
              cert.certified ? 0 : 1);
}

int cmd_collapse_compose(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  CollapseCertificate cert = certify_composed(store, family_from_name(cfg.source),
                                              family_from_name(cfg.via),
                                              family_from_name(cfg.target), cfg.max_order,
                                              depth_or(cfg, 5));
  return emit(cfg, "collapse compose", collapse_certificate_json(cert), out,
              cert.certified ? 0 : 1);
}

int cmd_iso(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  Family left = family_from_name(cfg.left);
  Family right = family_from_name(cfg.right);
  std::vector<std::pair<int32_t, int32_t>> pairs;
  if (left == Family::C && right == Family::E) {
    pairs = e_bool_pairs();
  } else if (left == Family::E && right == Family::C) {
    for (auto [x, y] : e_bool_pairs()) pairs.emplace_back(y, x);
  } else {
    fail(ErrorKind::Usage, "the ground bijection is between C and E");
  }
  IsoCertificate cert = certify_iso(store, left, right, pairs, resolve_types(cfg));
  return emit(cfg, "iso certify", iso_certificate_json(cert), out, cert.certified ? 0 : 1);
}

int cmd_interp(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  Family f = family_from_name(cfg.family);
  const Signature& sig = Signature::by_name(cfg.sig);
  TermPtr term = parse_term(cfg.term, sig);
  Interpreter interp(store);
  Element e = interp.interpret(term, f);
  Json body;
  body["family"] = family_name(f);
  body["signature"] = sig.name();
  body["term"] = print_term(term);
  body["type"] = term->type()->str();
  body["element"] = element_to_json(e);
  return emit(cfg, "interp", body, out, 0);
}

int cmd_synth(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  if (!cfg.family.empty() && family_from_name(cfg.family) != Family::S) {
    fail(ErrorKind::Usage, "synthesis targets the S family");
  }
  TypeRef t = Type::parse(cfg.type_expr);
  Element target = parse_element(store, Family::S, t, cfg.element);
  SynthesisResult res = synthesize_S(store, target);
  Json body;
  body["family"] = "S";
  body["type"] = t->str();
  body["element"] = element_to_json(res.target);
  body["term"] = print_term(res.term);
  body["verified"] = res.verified;
  return emit(cfg, "synth", body, out, 0);
}

int cmd_totality(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  TypeRef t = Type::parse(cfg.type_expr);
  TotalityReport report = totality_classes(store, t);
  Json body = totality_report_json(report);
  if (cfg.or_counts > 0) {
    body["disjunction_counts"] = disjunction_implementation_counts(store, cfg.or_counts);
  }
  return emit(cfg, "totality", body, out, 0);
}

int cmd_theory(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  TheoryReport report = compare_theories(store, Signature::by_name(cfg.sig),
                                         family_from_name(cfg.source),
                                         family_from_name(cfg.target), depth_or(cfg, 5),
                                         resolve_types(cfg));
  return emit(cfg, "theory compare", theory_report_json(report), out,
              report.inclusion_holds ? 0 : 1);
}

int cmd_delta(const Config& cfg, std::ostream& out) {
  FrameStore store(resolve_budget(cfg));
  DeltaReport report = validate_delta_soundness(store, Signature::by_name(cfg.sig),
                                                family_from_name(cfg.family));
  return emit(cfg, "delta check", delta_report_json(report), out, report.sound ? 0 : 1);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"finite type frames over the booleans: layers, calculi, collapses"};
  app.name("framelab");
  app.require_subcommand(1);

  auto* frame = app.add_subcommand("frame", "layer enumeration and cardinality");
  frame->require_subcommand(1);
  for (const char* name : {"enumerate", "count"}) {
    auto* sub = frame->add_subcommand(name, name[0] == 'e' ? "list the layer's elements"
                                                           : "print the layer's cardinality");
    sub->add_option("--family", cfg.family, "frame family S|C|E|L")->required();
    sub->add_option("--type", cfg.type_expr, "simple type expression")->required();
    add_common(sub, cfg);
    sub->callback([&cfg, name] { cfg.command = std::string("frame ") + name; });
  }

  auto* collapse = app.add_subcommand("collapse", "extensional collapse certificates");
  collapse->require_subcommand(1);
  auto* certify = collapse->add_subcommand("certify", "certify one collapse arrow");
  certify->add_option("--source", cfg.source, "source family")->required();
  certify->add_option("--target", cfg.target, "target family")->required();
  certify->add_option("--sig", cfg.sig, "signature (informational; the arrow fixes it)");
  certify->add_option("--max-order", cfg.max_order, "type frontier order cap");
  certify->add_option("--depth", cfg.depth, "corpus depth");
  add_common(certify, cfg);
  certify->callback([&cfg] { cfg.command = "collapse certify"; });

  auto* compose_cmd = collapse->add_subcommand("compose", "compose two arrows");
  compose_cmd->add_option("--source", cfg.source, "source family")->required();
  compose_cmd->add_option("--via", cfg.via, "intermediate family")->required();
  compose_cmd->add_option("--target", cfg.target, "target family")->required();
  compose_cmd->add_option("--max-order", cfg.max_order, "type frontier order cap");
  compose_cmd->add_option("--depth", cfg.depth, "corpus depth");
  add_common(compose_cmd, cfg);
  compose_cmd->callback([&cfg] { cfg.command = "collapse compose"; });

  auto* iso = app.add_subcommand("iso", "the C/E order-reversing bijection");
  iso->require_subcommand(1);
  auto* iso_certify = iso->add_subcommand("certify", "certify bijection and order reversal");
  iso_certify->add_option("--left", cfg.left, "left family (default C)");
  iso_certify->add_option("--right", cfg.right, "right family (default E)");
  iso_certify->add_option("--max-order", cfg.max_order, "type frontier order cap");
  iso_certify->add_option("--types", cfg.type_exprs, "explicit type list");
  add_common(iso_certify, cfg);
  iso_certify->callback([&cfg] { cfg.command = "iso certify"; });

  auto* interp = app.add_subcommand("interp", "interpret a closed term");
  interp->add_option("--family", cfg.family, "frame family")->required();
  interp->add_option("--term", cfg.term, "closed term in surface syntax")->required();
  interp->add_option("--sig", cfg.sig, "signature lambda|lambdaS|lambdaC");
  add_common(interp, cfg);
  interp->callback([&cfg] { cfg.command = "interp"; });

  auto* synth = app.add_subcommand("synth", "synthesize a defining term in S");
  synth->add_option("--family", cfg.family, "frame family (must be S)");
  synth->add_option("--type", cfg.type_expr, "simple type expression")->required();
  synth->add_option("--element", cfg.element, "element literal, JSON table, or index")
      ->required();
  add_common(synth, cfg);
  synth->callback([&cfg] { cfg.command = "synth"; });

  auto* totality = app.add_subcommand("totality", "totality classes and their lattices");
  totality->add_option("--type", cfg.type_expr, "simple type expression")->required();
  totality->add_option("--or-counts", cfg.or_counts,
                       "also report disjunction implementation counts up to this arity");
  add_common(totality, cfg);
  totality->callback([&cfg] { cfg.command = "totality"; });

  auto* theory = app.add_subcommand("theory", "equational theory comparison");
  theory->require_subcommand(1);
  auto* theory_compare = theory->add_subcommand("compare", "corpus inclusion check");
  theory_compare->add_option("--sig", cfg.sig, "signature")->required();
  theory_compare->add_option("--source", cfg.source, "source family")->required();
  theory_compare->add_option("--target", cfg.target, "target family")->required();
  theory_compare->add_option("--depth", cfg.depth, "corpus depth (default 5)");
  theory_compare->add_option("--type", cfg.type_expr, "single type");
  theory_compare->add_option("--types", cfg.type_exprs, "explicit type list");
  add_common(theory_compare, cfg);
  theory_compare->callback([&cfg] { cfg.command = "theory compare"; });

  auto* delta = app.add_subcommand("delta", "delta-rule soundness");
  delta->require_subcommand(1);
  auto* delta_check = delta->add_subcommand("check", "validate every rule denotationally");
  delta_check->add_option("--sig", cfg.sig, "signature")->required();
  delta_check->add_option("--family", cfg.family, "frame family")->required();
  add_common(delta_check, cfg);
  delta_check->callback([&cfg] { cfg.command = "delta check"; });

  std::vector<const char*> argv;
  argv.push_back("framelab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    par::set_thread_cap(cfg.threads);
    if (cfg.command == "frame enumerate") return cmd_frame(cfg, true, out);
    if (cfg.command == "frame count") return cmd_frame(cfg, false, out);
    if (cfg.command == "collapse certify") return cmd_collapse_certify(cfg, out);
    if (cfg.command == "collapse compose") return cmd_collapse_compose(cfg, out);
    if (cfg.command == "iso certify") return cmd_iso(cfg, out);
    if (cfg.command == "interp") return cmd_interp(cfg, out);
    if (cfg.command == "synth") return cmd_synth(cfg, out);
    if (cfg.command == "totality") return cmd_totality(cfg, out);
    if (cfg.command == "theory compare") return cmd_theory(cfg, out);
    if (cfg.command == "delta check") return cmd_delta(cfg, out);
    fail(ErrorKind::Usage, "no command selected");
  } catch (const Error& e) {
    err << "framelab: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded: return 3;
      case ErrorKind::MissingConstantInterpretation:
      case ErrorKind::ModelConditionFailed: return 1;
      default: return 2;
    }
  } catch (const std::exception& e) {
    err << "framelab: unexpected error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace framelab
