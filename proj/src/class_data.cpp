#include "iwasawa/class_data.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "iwasawa/errors.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

using json = nlohmann::json;

AbelianGroupStructure::AbelianGroupStructure(std::vector<std::uint64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders))
{
    for (auto o : orders_)
        if (o < 2)
            throw ValidationError("cyclic order " + std::to_string(o) + " is not >= 2");
    std::sort(orders_.begin(), orders_.end(), std::greater<>());
}

namespace {

std::int64_t u64_valuation(std::uint64_t v, unsigned p)
{
    std::int64_t k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

int mod(std::int64_t a, int m)
{
    int r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

bool plus_minus_one_mod9(std::int64_t d)
{
    int r = mod(d, 9);
    return r == 1 || r == 8;
}

// Prime factorization of |d| as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t d)
{
    std::vector<std::pair<std::int64_t, int>> out;
    std::int64_t n = d < 0 ? -d : d;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e)
            out.emplace_back(q, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

} // namespace

std::int64_t p_exponent(AbelianGroupStructure const & g, unsigned p)
{
    std::int64_t e = 0;
    for (auto o : g.cyclic_orders())
        e += u64_valuation(o, p);
    return e;
}

std::vector<std::int64_t> higher_ambiguous_ranks(AbelianGroupStructure const & g, unsigned p)
{
    if (p != 2)
        throw DomainError("higher ambiguous ranks are only available for p = 2");
    std::vector<std::int64_t> vals;
    for (auto o : g.cyclic_orders())
        vals.push_back(u64_valuation(o, 2));
    std::int64_t top = vals.empty() ? 0 : *std::max_element(vals.begin(), vals.end());
    std::vector<std::int64_t> ranks;
    for (std::int64_t k = 1; k <= top; ++k)
        ranks.push_back(std::count_if(vals.begin(), vals.end(), [k](std::int64_t v) { return v >= k; }));
    return ranks;
}

P3Classification classify_ramification_p3(std::int64_t d)
{
    if (d == 0 || d == 1 || d == -1 || d == 3 || d == -3)
        throw DomainError("classify_ramification_p3: d must not be 0, +-1 or +-3");
    if (d % 9 == 0)
        throw DomainError("classify_ramification_p3: 9 divides d");
    for (auto [q, e] : factor(d))
        if (e >= 3)
            throw DomainError("classify_ramification_p3: d is not cubefree");

    // 3-adic discriminant valuations, from Dedekind's pure cubic
    // discriminants and the tower formula.
    bool three_divides = d % 3 == 0;
    int v1 = plus_minus_one_mod9(three_divides ? d / 3 : d) ? 33 : 37;
    int v0 = three_divides ? 11 : (plus_minus_one_mod9(d) ? 3 : 7);

    // K1/K0 has degree 3; it is unramified above 3 exactly when the
    // discriminant valuation triples.
    Ramification status = v1 > 3 * v0 ? Ramification::totally_ramified : Ramification::unramified;
    return {status, v1, v0};
}

P2Classification classify_ramification_p2(std::int64_t d)
{
    if (d % 2 == 0)
        throw DomainError("classify_ramification_p2: d must be odd");
    if (d == 1 || d == -1)
        throw DomainError("classify_ramification_p2: |d| must exceed 1");
    for (auto [q, e] : factor(d))
        if (e >= 2)
            throw DomainError("classify_ramification_p2: d is not squarefree");
    // 2 is inert in Q(sqrt(d*)) with d* = +-d = 1 mod 4 iff d* = 5 mod 8.
    std::int64_t dstar = mod(d, 4) == 1 ? d : -d;
    return {true, mod(dstar, 8) == 5};
}

std::int64_t check_h_ratio(std::int64_t e_hn, std::int64_t e_hn_prime, unsigned p)
{
    if (!is_prime(p))
        throw DomainError("check_h_ratio needs a prime");
    return e_hn - 2 * e_hn_prime;
}

std::int64_t inert_prime_count(unsigned p, std::int64_t d)
{
    std::int64_t count = 0;
    for (auto [q, e] : factor(d)) {
        if (p == 3 && q % 3 == 2)
            ++count;
        else if (p == 2 && q % 4 == 3)
            ++count;
    }
    if (p != 2 && p != 3)
        throw DomainError("inert_prime_count supports p = 2, 3");
    return count;
}

std::vector<std::int64_t> ExampleRecord::e_sequence() const
{
    std::vector<std::int64_t> e;
    for (auto const & g : levels)
        e.push_back(p_exponent(g, p));
    return e;
}

void validate(ExampleRecord const & rec)
{
    auto fail = [&](std::string const & why) { throw ValidationError(rec.label + ": " + why); };
    if (!is_prime(rec.p))
        fail("p = " + std::to_string(rec.p) + " is not prime");
    if (rec.label.empty())
        fail("empty label");
    if (rec.s < 0)
        fail("s must be nonnegative");
    if (rec.levels.empty())
        fail("at least one level is required");
    for (auto const & g : rec.levels)
        for (auto o : g.cyclic_orders())
            if (o < 2)
                fail("cyclic order below 2");
    if (rec.d && (rec.p == 2 || rec.p == 3)) {
        std::int64_t s = inert_prime_count(rec.p, *rec.d);
        if (s != rec.s)
            fail("s = " + std::to_string(rec.s) + " but d = " + std::to_string(*rec.d) + " has " +
                 std::to_string(s) + " inert prime factors");
        if (rec.p == 2) {
            auto c = classify_ramification_p2(*rec.d);
            if (rec.flags.totally_ramified != c.totally_ramified)
                fail("totally_ramified flag disagrees with the ramification classifier");
            if (rec.flags.single_ramified_prime != c.single_prime_above_2)
                fail("single_ramified_prime flag disagrees with d mod 8");
        } else {
            auto c = classify_ramification_p3(*rec.d);
            if (rec.flags.totally_ramified != (c.status == Ramification::totally_ramified))
                fail("totally_ramified flag disagrees with the ramification classifier");
        }
    }
    if (rec.aux)
        for (auto const & h : rec.aux->h_primes)
            if (h && *h < 0)
                fail("negative h' exponent");
    if (rec.expected) {
        for (auto const * v : {&rec.expected->mu, &rec.expected->lambda, &rec.expected->nu})
            if (v->kind == ExpectedValue::Kind::bounds && v->min && v->max && *v->min > *v->max)
                fail("expected bounds with min > max");
    }
}

namespace {

struct Parser {
    [[noreturn]] static void fail(std::string const & path, std::string const & why) { throw ParseError(path, why); }

    static void check_keys(json const & obj, std::string const & path, std::set<std::string> const & required,
                           std::set<std::string> const & optional)
    {
        if (!obj.is_object())
            fail(path, "expected an object");
        for (auto const & [k, v] : obj.items())
            if (!required.count(k) && !optional.count(k))
                fail(path + "/" + k, "unknown key");
        for (auto const & k : required)
            if (!obj.contains(k))
                fail(path + "/" + k, "missing key");
    }

    static std::int64_t integer(json const & v, std::string const & path)
    {
        if (!v.is_number_integer())
            fail(path, "expected an integer");
        return v.get<std::int64_t>();
    }

    static bool boolean(json const & v, std::string const & path)
    {
        if (!v.is_boolean())
            fail(path, "expected a boolean");
        return v.get<bool>();
    }

    static std::string string(json const & v, std::string const & path)
    {
        if (!v.is_string())
            fail(path, "expected a string");
        return v.get<std::string>();
    }

    static ExpectedValue expected_value(json const & v, std::string const & path)
    {
        if (v.is_string()) {
            if (v.get<std::string>() != "unknown")
                fail(path, "the only string value allowed is \"unknown\"");
            return ExpectedValue::unknown();
        }
        if (v.is_number_integer())
            return ExpectedValue::exact(v.get<std::int64_t>());
        if (v.is_object()) {
            check_keys(v, path, {}, {"min", "max"});
            if (v.empty())
                fail(path, "bound object needs min or max");
            std::optional<std::int64_t> lo, hi;
            if (v.contains("min"))
                lo = integer(v["min"], path + "/min");
            if (v.contains("max"))
                hi = integer(v["max"], path + "/max");
            return ExpectedValue::bounds(lo, hi);
        }
        fail(path, "expected an integer, a bound object or \"unknown\"");
    }

    static ExampleRecord record(json const & r, std::string const & path)
    {
        check_keys(r, path, {"p", "label", "s", "flags", "levels"}, {"d", "aux", "expected"});
        ExampleRecord rec;
        std::int64_t p = integer(r["p"], path + "/p");
        if (p < 2 || p > 1000000)
            fail(path + "/p", "out of range");
        rec.p = static_cast<unsigned>(p);
        rec.label = string(r["label"], path + "/label");
        rec.s = integer(r["s"], path + "/s");
        if (r.contains("d"))
            rec.d = integer(r["d"], path + "/d");

        auto const & f = r["flags"];
        std::string fp = path + "/flags";
        check_keys(f, fp, {"single_ramified_prime", "totally_ramified", "p_nmid_class_number_k0"}, {});
        rec.flags.single_ramified_prime = boolean(f["single_ramified_prime"], fp + "/single_ramified_prime");
        rec.flags.totally_ramified = boolean(f["totally_ramified"], fp + "/totally_ramified");
        rec.flags.p_nmid_class_number_k0 = boolean(f["p_nmid_class_number_k0"], fp + "/p_nmid_class_number_k0");

        auto const & lv = r["levels"];
        if (!lv.is_array())
            fail(path + "/levels", "expected an array");
        for (std::size_t n = 0; n < lv.size(); ++n) {
            std::string lp = path + "/levels/" + std::to_string(n);
            if (!lv[n].is_array())
                fail(lp, "expected an array of cyclic orders");
            std::vector<std::uint64_t> orders;
            for (std::size_t i = 0; i < lv[n].size(); ++i) {
                std::int64_t o = integer(lv[n][i], lp + "/" + std::to_string(i));
                if (o < 2)
                    throw ValidationError(rec.label + ": cyclic order " + std::to_string(o) + " at " + lp +
                                          " is not >= 2");
                orders.push_back(static_cast<std::uint64_t>(o));
            }
            rec.levels.emplace_back(std::move(orders));
        }

        if (r.contains("aux")) {
            auto const & a = r["aux"];
            std::string ap = path + "/aux";
            check_keys(a, ap, {}, {"h_primes", "unit_index_maximal", "conditional", "notes"});
            AuxData aux;
            if (a.contains("h_primes")) {
                if (!a["h_primes"].is_array())
                    fail(ap + "/h_primes", "expected an array");
                for (std::size_t n = 0; n < a["h_primes"].size(); ++n) {
                    auto const & h = a["h_primes"][n];
                    if (h.is_null())
                        aux.h_primes.emplace_back(std::nullopt);
                    else
                        aux.h_primes.emplace_back(integer(h, ap + "/h_primes/" + std::to_string(n)));
                }
            }
            if (a.contains("unit_index_maximal"))
                aux.unit_index_maximal = boolean(a["unit_index_maximal"], ap + "/unit_index_maximal");
            if (a.contains("conditional"))
                aux.conditional = boolean(a["conditional"], ap + "/conditional");
            if (a.contains("notes"))
                aux.notes = string(a["notes"], ap + "/notes");
            rec.aux = std::move(aux);
        }

        if (r.contains("expected")) {
            auto const & e = r["expected"];
            std::string ep = path + "/expected";
            check_keys(e, ep, {}, {"mu", "lambda", "nu"});
            Expected ex;
            if (e.contains("mu"))
                ex.mu = expected_value(e["mu"], ep + "/mu");
            if (e.contains("lambda"))
                ex.lambda = expected_value(e["lambda"], ep + "/lambda");
            if (e.contains("nu"))
                ex.nu = expected_value(e["nu"], ep + "/nu");
            rec.expected = ex;
        }
        return rec;
    }
};

std::vector<ExampleRecord> records_from(json const & doc)
{
    if (!doc.is_array())
        throw ParseError("", "top level must be an array of records");
    std::vector<ExampleRecord> out;
    std::set<std::pair<std::string, unsigned>> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        ExampleRecord rec = Parser::record(doc[i], "/" + std::to_string(i));
        validate(rec);
        if (!seen.emplace(rec.label, rec.p).second)
            throw ValidationError(rec.label + ": duplicate label for p = " + std::to_string(rec.p));
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace

std::vector<ExampleRecord> load_fixtures(std::istream & in)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (json::parse_error const & e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    return records_from(doc);
}

std::vector<ExampleRecord> load_fixtures(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return load_fixtures(in);
}

std::vector<ExampleRecord> load_fixture_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, "cannot open fixture file");
    return load_fixtures(in);
}

} // namespace iwasawa
