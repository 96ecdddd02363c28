#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "coarse/inertness.hpp"
#include "coarse/ops.hpp"
#include "coarse/partition.hpp"
#include "coarse/stpetersburg.hpp"

namespace coarse {

using Json = nlohmann::ordered_json;

// {"kind": "fixed_width"|"fibonacci"|"epsilon"|"explicit"|"widths"|"singleton",
//  "width": int, "epsilon": "p/q", "bounds": [...], "widths": [...],
//  "step": "p/q", "domain": "int"|"real"}
// Integers are JSON integers, rationals "p/q" strings. "bounds" is either a
// flat boundary list or a list of [lo, hi] pairs.
Json spec_to_json(const PartitionSpec& spec);
// Throws ParseError / SpecError.
PartitionSpec spec_from_json(const Json& j);

// Rationals accept JSON integers or strings in any parse_number form.
Number number_from_json(const Json& j);

Json step_to_json(const FoldStep& step);
FoldStep step_from_json(const Json& j);

// One JSON object per line.
void write_trace_jsonl(std::ostream& os, const FoldTrace& trace);
FoldTrace read_trace_jsonl(std::istream& is);
// Header "n,x,x_cell,s,s_cell,absorbed".
void write_trace_csv(std::ostream& os, const FoldTrace& trace);

Json verdict_to_json(const InertVerdict& v);
InertVerdict verdict_from_json(const Json& j);

Json report_to_json(const ValuationReport& r);
Json sampled_to_json(const SampledValuation& s);

}  // namespace coarse
