#pragma once

#include <iosfwd>
#include <string>

#include "framelab/definability.hpp"
#include "framelab/literals.hpp"
#include "framelab/relations.hpp"
#include "framelab/semantics.hpp"
#include "framelab/theory.hpp"

namespace framelab {

Json delta_report_json(const DeltaReport& r);
Json collapse_certificate_json(const CollapseCertificate& c);
Json iso_certificate_json(const IsoCertificate& c);
Json saturation_report_json(const SaturationReport& r);
Json totality_report_json(const TotalityReport& r);
Json theory_report_json(const TheoryReport& r);
Json fundamental_report_json(const FundamentalReport& r);

// {"schema": 1, "command": ..., "generated_at": ..., <body fields>}.
// Identical inputs give byte-identical output except for generated_at.
Json report_envelope(const std::string& command, const Json& body);

std::string current_timestamp();  // ISO 8601 UTC

// format "json" pretty-prints; "text" renders an indented key/value view.
void write_report(std::ostream& os, const Json& report, const std::string& format);

// Writes to the path, or to fallback when the path is empty.  Errors Usage
// when the file cannot be opened.
void emit_report(const Json& report, const std::string& format, const std::string& out_path,
                 std::ostream& fallback);

}  // namespace framelab
