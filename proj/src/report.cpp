#include "iwasawa/report.hpp"

#include <algorithm>
#include <sstream>

#include "iwasawa/errors.hpp"

namespace iwasawa {

using json = nlohmann::json;

std::vector<RecordOutcome> run_all(std::vector<ExampleRecord> const & records,
                                   std::optional<std::string> const & label)
{
    std::vector<RecordOutcome> out;
    for (auto const & rec : records) {
        if (label && rec.label != *label)
            continue;
        RecordOutcome o{&rec, std::nullopt, {}};
        try {
            o.result = deduce(rec);
        } catch (InconsistentInput const & e) {
            o.error = e.what();
        } catch (ValidationError const & e) {
            o.error = e.what();
        }
        out.push_back(std::move(o));
    }
    std::stable_sort(out.begin(), out.end(), [](RecordOutcome const & a, RecordOutcome const & b) {
        if (a.record->label != b.record->label)
            return a.record->label < b.record->label;
        return a.record->p < b.record->p;
    });
    return out;
}

namespace {

std::string join(std::vector<std::int64_t> const & v, char const * sep = ",")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

enum class Fit { disjoint, looser, tight };

// [lo, hi] with open ends as nullopt.
struct Interval {
    std::optional<std::int64_t> lo, hi;
};

Interval expected_interval(ExpectedValue const & v)
{
    return {v.min, v.max};
}

bool meets(Interval a, Interval b)
{
    if (a.lo && b.hi && *a.lo > *b.hi)
        return false;
    if (b.lo && a.hi && *b.lo > *a.hi)
        return false;
    return true;
}

Fit fit_mu(DeductionResult const & r, ExpectedValue const & v)
{
    if (v.kind == ExpectedValue::Kind::unknown)
        return Fit::tight;
    if (!meets({r.mu_min, r.mu_max}, expected_interval(v)))
        return Fit::disjoint;
    return v.kind == ExpectedValue::Kind::exact && !r.mu_exact() ? Fit::looser : Fit::tight;
}

Fit fit_lambda(DeductionResult const & r, ExpectedValue const & v)
{
    if (v.kind == ExpectedValue::Kind::unknown)
        return Fit::tight;
    std::int64_t lo = std::max<std::int64_t>(v.min.value_or(0), 0);
    // Past its largest excluded value the constraint is periodic, so a
    // window of a few periods decides whether an open range meets it.
    std::int64_t window = lo + 4 * r.lambda.modulus + 8;
    for (auto x : r.lambda.excluded)
        window = std::max(window, x + r.lambda.modulus + 1);
    std::int64_t hi = v.max ? *v.max : window;
    bool any = false;
    for (std::int64_t l = lo; l <= hi && !any; ++l)
        any = r.lambda.allows(l);
    if (!any)
        return Fit::disjoint;
    return v.kind == ExpectedValue::Kind::exact && !r.lambda.exact() ? Fit::looser : Fit::tight;
}

Fit fit_nu(DeductionResult const & r, ExpectedValue const & v)
{
    if (v.kind == ExpectedValue::Kind::unknown)
        return Fit::tight;
    Interval got;
    switch (r.nu.kind) {
    case NuValue::Kind::exact:
        got = {r.nu.value, r.nu.value};
        break;
    case NuValue::Kind::lower_bound:
        got = {r.nu.value, std::nullopt};
        break;
    case NuValue::Kind::unknown:
        break;
    }
    if (!meets(got, expected_interval(v)))
        return Fit::disjoint;
    return v.kind == ExpectedValue::Kind::exact && !r.nu.exact() ? Fit::looser : Fit::tight;
}

std::string lambda_text(LambdaConstraint const & l)
{
    if (l.value)
        return "λ=" + std::to_string(*l.value);
    std::vector<std::string> parts;
    if (l.modulus == 2)
        parts.push_back("λ even");
    else if (l.modulus > 1)
        parts.push_back("λ≡0 mod " + std::to_string(l.modulus));
    if (l.max)
        parts.push_back("λ≤" + std::to_string(*l.max));
    if (!l.excluded.empty())
        parts.push_back("λ∉{" + join(l.excluded) + "}");
    if (parts.empty())
        return "λ=?";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        s += ", " + parts[i];
    return s;
}

std::string nu_text(NuValue const & n)
{
    switch (n.kind) {
    case NuValue::Kind::exact:
        return "ν=" + std::to_string(n.value);
    case NuValue::Kind::lower_bound:
        return "ν≥" + std::to_string(n.value);
    case NuValue::Kind::unknown:
        break;
    }
    return "ν=?";
}

bool conditional(ExampleRecord const & rec)
{
    return rec.aux && rec.aux->conditional;
}

} // namespace

Status compare(ExampleRecord const & rec, DeductionResult const & result)
{
    if (!rec.expected)
        return Status::not_applicable;
    auto const & x = *rec.expected;
    std::pair<Fit, ExpectedValue const *> fits[] = {
        {fit_mu(result, x.mu), &x.mu}, {fit_lambda(result, x.lambda), &x.lambda}, {fit_nu(result, x.nu), &x.nu}};
    bool weaker = false, mismatch = false;
    for (auto [f, v] : fits) {
        if (f == Fit::disjoint) {
            if (v->kind == ExpectedValue::Kind::exact)
                return Status::contradicted;
            mismatch = true;
        }
        weaker |= f == Fit::looser;
    }
    if (mismatch)
        return Status::mismatch;
    return weaker ? Status::weaker : Status::ok;
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::ok:
        return "OK";
    case Status::weaker:
        return "WEAKER";
    case Status::mismatch:
        return "MISMATCH";
    case Status::contradicted:
        return "CONTRADICTED";
    case Status::not_applicable:
        return "n/a";
    case Status::error:
        return "ERROR";
    }
    return "?";
}

std::string render_invariants(DeductionResult const & r)
{
    std::string mu = r.mu_exact() ? "μ=" + std::to_string(r.mu_min)
                                  : "μ∈[" + std::to_string(r.mu_min) + "," + std::to_string(r.mu_max) + "]";
    return mu + " " + lambda_text(r.lambda) + " " + nu_text(r.nu);
}

json to_json(ExampleRecord const & rec, DeductionResult const & r)
{
    json j;
    j["label"] = rec.label;
    j["p"] = rec.p;
    j["e"] = rec.e_sequence();
    if (r.mu_exact())
        j["mu"] = r.mu_min;
    else
        j["mu"] = {{"min", r.mu_min}, {"max", r.mu_max}};

    if (r.lambda.value) {
        j["lambda"] = *r.lambda.value;
    } else {
        json l;
        l["modulus"] = r.lambda.modulus;
        l["excluded"] = r.lambda.excluded;
        if (r.lambda.max)
            l["max"] = *r.lambda.max;
        j["lambda"] = l;
    }

    switch (r.nu.kind) {
    case NuValue::Kind::exact:
        j["nu"] = r.nu.value;
        break;
    case NuValue::Kind::lower_bound:
        j["nu"] = {{"min", r.nu.value}};
        break;
    case NuValue::Kind::unknown:
        j["nu"] = "unknown";
        break;
    }

    json rows = json::array();
    for (auto const & row : r.residuals)
        rows.push_back({{"mu", row.mu}, {"values", row.values}, {"survived", row.survived}});
    j["residuals"] = rows;

    json trace = json::array();
    for (auto const & t : r.trace)
        trace.push_back({{"rule", t.rule}, {"theorem", t.theorem}, {"consequence", t.consequence}});
    j["trace"] = trace;
    j["asymptotic_levels"] = r.asymptotic_levels;
    return j;
}

std::string render_json(std::vector<RecordOutcome> const & outcomes)
{
    json arr = json::array();
    for (auto const & o : outcomes) {
        if (o.result)
            arr.push_back(to_json(*o.record, *o.result));
        else
            arr.push_back({{"label", o.record->label}, {"p", o.record->p}, {"error", o.error}});
    }
    return arr.dump(2) + "\n";
}

std::string render_text(std::vector<RecordOutcome> const & outcomes)
{
    std::ostringstream os;
    for (auto const & o : outcomes) {
        auto const & rec = *o.record;
        os << rec.label << " (p=" << rec.p << ", s=" << rec.s << ", e=[" << join(rec.e_sequence()) << "])\n";
        if (!o.result) {
            os << "  error: " << o.error << "\n\n";
            continue;
        }
        os << "  " << render_invariants(*o.result) << "\n";
        for (auto const & t : o.result->trace)
            os << "  " << t.rule << " [" << t.theorem << "] " << t.consequence << "\n";
        os << "\n";
    }
    return os.str();
}

Report build_report(std::vector<ExampleRecord> const & records)
{
    Report rep;
    auto outcomes = run_all(records);
    std::ostringstream os;
    os << "label | p | s | e | invariants | status\n";
    for (auto const & o : outcomes) {
        auto const & rec = *o.record;
        os << rec.label << " | " << rec.p << " | " << rec.s << " | [" << join(rec.e_sequence()) << "] | ";
        Status st = Status::error;
        if (o.result) {
            st = compare(rec, *o.result);
            os << render_invariants(*o.result);
        } else {
            os << o.error;
            rep.errors = true;
        }
        rep.contradicted |= st == Status::contradicted;
        os << " | " << to_string(st) << (conditional(rec) ? " (conditional)" : "") << "\n";
    }

    std::ostringstream hs;
    for (auto const & o : outcomes) {
        if (!o.result)
            continue;
        for (auto const & h : h_ratio_checks(*o.record, *o.result))
            hs << o.record->label << " | " << o.record->p << " | n=" << h.n << " | c"
               << (h.lower_bound ? "≥" : "=") << h.c << "\n";
    }
    if (!hs.str().empty())
        os << "\nh_n versus (h_n')^2, c = e(h_n) - 2 e(h_n')\n" << hs.str();
    rep.text = os.str();
    return rep;
}

} // namespace iwasawa
