#ifndef IWASAWA_REPORT_HPP
#define IWASAWA_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "iwasawa/class_data.hpp"
#include "iwasawa/deduction.hpp"

namespace iwasawa {

/// One record after deduction; `error` is set instead of `result` when the
/// engine rejected the data.
struct RecordOutcome {
    ExampleRecord const * record;
    std::optional<DeductionResult> result;
    std::string error;
};

/// Deduces every record (optionally only those labelled `label`) and sorts
/// the outcomes by (label, p).
std::vector<RecordOutcome> run_all(std::vector<ExampleRecord> const & records,
                                   std::optional<std::string> const & label = std::nullopt);

enum class Status { ok, weaker, mismatch, contradicted, not_applicable, error };

/// How a result relates to the record's expected values. `contradicted`
/// means some exact expected value is ruled out, `mismatch` that an
/// expected bound is.
Status compare(ExampleRecord const & rec, DeductionResult const & result);
std::string to_string(Status s);

/// "mu=2 lambda=0 nu=2" in the report's notation.
std::string render_invariants(DeductionResult const & r);

nlohmann::json to_json(ExampleRecord const & rec, DeductionResult const & r);
/// Key-sorted JSON array, two-space indent, trailing newline.
std::string render_json(std::vector<RecordOutcome> const & outcomes);

/// Text mode of `deduce`, with traces.
std::string render_text(std::vector<RecordOutcome> const & outcomes);

struct Report {
    std::string text;
    bool contradicted = false;
    bool errors = false;
};

Report build_report(std::vector<ExampleRecord> const & records);

} // namespace iwasawa

#endif /* IWASAWA_REPORT_HPP */
