// Serialization of analysis results.  JSON documents carry a top-level
// schemaVersion (currently 1) and, for per-modulus reports, a variant tag
// ("w" for sign=+1, "u" for sign=-1).  CSV is one row per modulus.  The
// fundamental-system dump is a plain text format: a header line with the
// modulus, q and the total term count, then one period per line with its
// residues comma-separated.  All output is deterministic byte-for-byte.

#pragma once

#include "rescomp/classify.hpp"
#include "rescomp/completeness.hpp"
#include "rescomp/core.hpp"
#include "rescomp/fs.hpp"

#include <string>
#include <vector>

namespace rescomp {

inline constexpr int kSchemaVersion = 1;

std::string variant_tag(const RecurrenceSpec& spec);  // "w" or "u"

// Single-modulus completeness report.
std::string report_json(const RecurrenceSpec& spec, const CompletenessReport& rep);

// Several moduli as one CSV table (header + one row per modulus).
std::string reports_csv(const RecurrenceSpec& spec,
                        const std::vector<CompletenessReport>& reps);

std::string classification_json(const ClassificationResult& result);
std::string classification_table(const ClassificationResult& result);

std::string fs_dump(const FundamentalSystem& fs);

}  // namespace rescomp
