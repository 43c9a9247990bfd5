#ifndef IWASAWA_CLASS_DATA_HPP
#define IWASAWA_CLASS_DATA_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iwasawa {

/* A finite abelian group given by cyclic factor orders, e.g. 27 x 9^2 x 3^7
 * is {27, 9, 9, 3, 3, 3, 3, 3, 3, 3}. Stored sorted descending; the empty
 * list is the trivial group.
 */
class AbelianGroupStructure {
    std::vector<std::uint64_t> orders_;

  public:
    AbelianGroupStructure() = default;
    /// Throws ValidationError if some order is < 2.
    explicit AbelianGroupStructure(std::vector<std::uint64_t> cyclic_orders);

    std::vector<std::uint64_t> const & cyclic_orders() const { return orders_; }
    bool trivial() const { return orders_.empty(); }

    friend bool operator==(AbelianGroupStructure const &, AbelianGroupStructure const &) = default;
};

/// e with p^e exactly dividing the group order.
std::int64_t p_exponent(AbelianGroupStructure const & g, unsigned p);

/// rank_k = number of cyclic factors whose 2-valuation is >= k, k = 1..max.
/// Only p = 2 is supported.
std::vector<std::int64_t> higher_ambiguous_ranks(AbelianGroupStructure const & g, unsigned p);

enum class Ramification { totally_ramified, unramified };

struct P3Classification {
    Ramification status;
    int v3_disc_K1; // v_3 of disc Q(zeta_3, cbrt 3, cbrt d)
    int v3_disc_K0; // v_3 of disc Q(zeta_3, cbrt d)
    friend bool operator==(P3Classification const &, P3Classification const &) = default;
};

/// Ramification above 3 in Q(zeta_3, cbrt 3, cbrt d) / Q(zeta_3, cbrt d).
/// d must be cubefree, not divisible by 9, and not +-1 or +-3.
P3Classification classify_ramification_p3(std::int64_t d);

struct P2Classification {
    bool totally_ramified;
    bool single_prime_above_2;
    friend bool operator==(P2Classification const &, P2Classification const &) = default;
};

/// Q(i, sqrt d, sqrt 2) / Q(i, sqrt d) for odd squarefree d with |d| > 1.
P2Classification classify_ramification_p2(std::int64_t d);

/// c = e(h_n) - 2 e(h_n'); 0 means h_n = (h_n')^2 on p-parts.
std::int64_t check_h_ratio(std::int64_t e_hn, std::int64_t e_hn_prime, unsigned p);

/// Number of distinct primes dividing d that are inert in k_0: primes = 2
/// mod 3 for p = 3, primes = 3 mod 4 for p = 2.
std::int64_t inert_prime_count(unsigned p, std::int64_t d);

/// An expected invariant as recorded in a fixture: exact, bounded on
/// either side, or unknown.
struct ExpectedValue {
    enum class Kind { exact, bounds, unknown };
    Kind kind = Kind::unknown;
    std::int64_t value = 0;
    std::optional<std::int64_t> min;
    std::optional<std::int64_t> max;

    static ExpectedValue exact(std::int64_t v) { return {Kind::exact, v, v, v}; }
    static ExpectedValue bounds(std::optional<std::int64_t> lo, std::optional<std::int64_t> hi)
    {
        return {Kind::bounds, 0, lo, hi};
    }
    static ExpectedValue unknown() { return {}; }

    friend bool operator==(ExpectedValue const &, ExpectedValue const &) = default;
};

struct Expected {
    ExpectedValue mu, lambda, nu;
};

struct RecordFlags {
    bool single_ramified_prime = false;
    bool totally_ramified = false;
    bool p_nmid_class_number_k0 = false;
};

struct AuxData {
    /// p-exponent of h_n' by level; nullopt where not known.
    std::vector<std::optional<std::int64_t>> h_primes;
    bool unit_index_maximal = false;
    /// Expected values depend on an unproved conjecture.
    bool conditional = false;
    std::string notes;
};

struct ExampleRecord {
    unsigned p = 0;
    std::string label;
    std::optional<std::int64_t> d;
    std::int64_t s = 0;
    RecordFlags flags;
    std::vector<AbelianGroupStructure> levels;
    std::optional<AuxData> aux;
    std::optional<Expected> expected;

    /// e_n = p_exponent(levels[n]).
    std::vector<std::int64_t> e_sequence() const;
};

/// Throws ValidationError on an invariant violation.
void validate(ExampleRecord const & rec);

/// Parse and validate a fixture document (a JSON array of records).
/// Schema violations throw ParseError, invariant violations ValidationError.
std::vector<ExampleRecord> load_fixtures(std::istream & in);
std::vector<ExampleRecord> load_fixtures(std::string_view text);
std::vector<ExampleRecord> load_fixture_file(std::string const & path);

} // namespace iwasawa

#endif /* IWASAWA_CLASS_DATA_HPP */
