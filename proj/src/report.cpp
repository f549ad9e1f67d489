#include "framelab/report.hpp"

#include <ctime>
#include <fstream>
#include <ostream>

#include "framelab/errors.hpp"

namespace framelab {

namespace {

Json type_list(const std::vector<TypeRef>& types) {
  Json a = Json::array();
  for (TypeRef t : types) a.push_back(t->str());
  return a;
}

Json pf_json(const PartialFunctionVerdict& v) {
  Json j;
  j["ok"] = v.ok;
  if (v.counterexample) {
    auto [x, y1, y2] = *v.counterexample;
    j["counterexample"] = {{"source", x}, {"first", y1}, {"second", y2}};
  }
  return j;
}

Json surj_json(const SurjectiveVerdict& v) {
  Json j;
  j["verdict"] = surjectivity_name(v.verdict);
  j["hit"] = v.hit;
  j["total"] = v.total;
  if (!v.unhit.empty()) j["unhit_sample"] = v.unhit;
  return j;
}

}  // namespace

Json delta_report_json(const DeltaReport& r) {
  Json j;
  j["signature"] = r.signature;
  j["family"] = family_name(r.family);
  j["sound"] = r.sound;
  Json rules = Json::array();
  for (const auto& v : r.rules) {
    Json rj;
    rj["rule"] = v.rule;
    rj["instantiations"] = v.instantiations;
    rj["sound"] = v.sound;
    if (!v.counterexample.empty()) {
      Json cx = Json::array();
      for (const auto& e : v.counterexample) cx.push_back(element_to_json(e));
      rj["counterexample"] = cx;
      if (v.lhs_value) rj["lhs"] = element_to_json(*v.lhs_value);
      if (v.rhs_value) rj["rhs"] = element_to_json(*v.rhs_value);
    }
    rules.push_back(rj);
  }
  j["rules"] = rules;
  return j;
}

Json collapse_certificate_json(const CollapseCertificate& c) {
  Json j;
  j["source"] = family_name(c.source);
  j["target"] = family_name(c.target);
  j["method"] = c.method;
  j["certified"] = c.certified;
  j["budget"] = c.budget;
  Json types = Json::array();
  for (const auto& row : c.per_type) {
    Json tj;
    tj["type"] = row.type->str();
    tj["required"] = row.required;
    if (row.skipped) {
      tj["skipped"] = true;
      tj["reason"] = row.skip_reason;
    } else {
      tj["partial_function"] = pf_json(row.pf);
      tj["surjectivity"] = surj_json(row.surj);
    }
    types.push_back(tj);
  }
  j["types"] = types;
  j["notes"] = c.notes;
  return j;
}

Json iso_certificate_json(const IsoCertificate& c) {
  Json j;
  j["left"] = family_name(c.left);
  j["right"] = family_name(c.right);
  j["certified"] = c.certified;
  j["budget"] = c.budget;
  Json types = Json::array();
  for (const auto& row : c.per_type) {
    Json tj;
    tj["type"] = row.type->str();
    if (row.skipped) {
      tj["skipped"] = true;
      tj["reason"] = row.skip_reason;
    } else {
      tj["pairs"] = row.pairs;
      tj["bijection"] = row.bijection;
      tj["order_reversal"] = row.order_reversal;
      if (!row.failure.empty()) tj["failure"] = row.failure;
    }
    types.push_back(tj);
  }
  j["types"] = types;
  return j;
}

Json saturation_report_json(const SaturationReport& r) {
  Json j;
  j["signature"] = r.signature;
  j["family"] = family_name(r.family);
  j["target_type"] = r.target_type->str();
  j["skeleton_depth"] = r.skeleton_depth;
  j["passes"] = r.passes;
  j["fixpoint"] = r.fixpoint;
  Json types = Json::array();
  for (const auto& row : r.per_type) {
    Json tj;
    tj["type"] = row.type->str();
    tj["layer_size"] = row.layer_size;
    tj["defined_count"] = static_cast<long long>(row.defined.size());
    tj["full"] = row.full();
    tj["defined"] = row.defined;
    tj["undefined"] = row.undefined;
    Json ws = Json::object();
    for (const auto& [idx, w] : row.witnesses) ws[std::to_string(idx)] = print_term(w);
    tj["witnesses"] = ws;
    types.push_back(tj);
  }
  j["types"] = types;
  return j;
}

Json totality_report_json(const TotalityReport& r) {
  Json j;
  j["type"] = r.type->str();
  j["all_lattices"] = r.all_lattices;
  Json classes = Json::array();
  for (const auto& cls : r.classes) {
    Json cj;
    cj["base"] = cls.base;
    cj["size"] = static_cast<long long>(cls.members.size());
    cj["members"] = cls.members;
    Json lj;
    lj["is_lattice"] = cls.lattice.is_lattice;
    if (cls.lattice.is_lattice) {
      cj["laziest"] = cls.laziest;
      cj["most_eager"] = cls.most_eager;
    } else if (cls.lattice.witness) {
      lj["missing"] = cls.lattice.missing;
      lj["pair"] = {cls.lattice.witness->first, cls.lattice.witness->second};
    }
    cj["lattice"] = lj;
    classes.push_back(cj);
  }
  j["classes"] = classes;
  j["non_total"] = r.non_total;
  return j;
}

Json theory_report_json(const TheoryReport& r) {
  Json j;
  j["signature"] = r.signature;
  j["source"] = family_name(r.source);
  j["target"] = family_name(r.target);
  j["depth"] = r.depth;
  j["types"] = type_list(r.types);
  j["terms"] = r.terms;
  j["inclusion_holds"] = r.inclusion_holds;
  Json viols = Json::array();
  for (const auto& v : r.violations) {
    viols.push_back({{"type", v.type->str()},
                     {"left", print_term(v.left)},
                     {"right", print_term(v.right)},
                     {"source_value", v.source_value},
                     {"target_left", v.target_left},
                     {"target_right", v.target_right}});
  }
  j["violations"] = viols;
  Json strict = Json::array();
  for (const auto& w : r.strictness) {
    strict.push_back({{"type", w.type->str()},
                      {"left", print_term(w.left)},
                      {"right", print_term(w.right)},
                      {"target_value", w.target_value},
                      {"source_left", w.source_left},
                      {"source_right", w.source_right}});
  }
  j["strictness_witnesses"] = strict;
  return j;
}

Json fundamental_report_json(const FundamentalReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["constants_ok"] = r.constants_ok;
  j["terms_checked"] = r.terms_checked;
  Json viols = Json::array();
  for (const auto& v : r.violations) {
    viols.push_back({{"type", v.type->str()},
                     {"term", print_term(v.term)},
                     {"source_value", v.source_value},
                     {"target_value", v.target_value}});
  }
  j["violations"] = viols;
  return j;
}

Json report_envelope(const std::string& command, const Json& body) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["generated_at"] = current_timestamp();
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::string current_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

void write_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        write_text(os, value, indent + 1);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        write_text(os, value, indent + 1);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

void write_report(std::ostream& os, const Json& report, const std::string& format) {
  if (format == "text") {
    write_text(os, report, 0);
  } else {
    os << report.dump(2) << "\n";
  }
}

void emit_report(const Json& report, const std::string& format, const std::string& out_path,
                 std::ostream& fallback) {
  if (out_path.empty()) {
    write_report(fallback, report, format);
    return;
  }
  std::ofstream file(out_path);
  if (!file) fail(ErrorKind::Usage, "cannot open output file " + out_path);
  write_report(file, report, format);
}

}  // namespace framelab
