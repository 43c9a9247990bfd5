#include "iwasawa/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "iwasawa/ambiguous.hpp"
#include "iwasawa/class_data.hpp"
#include "iwasawa/elem_module.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/report.hpp"

namespace iwasawa::cli {

namespace {

struct RunConfig {
    std::string fixture_path;
    std::string label;
    std::string format = "text";

    // chevalley
    std::string h = "1";
    std::uint64_t degree = 0;
    std::vector<std::uint64_t> ram;
    std::string unit_index = "1";

    // quotient
    unsigned p = 0;
    std::string summands;
    unsigned level = 0;
    unsigned precision = default_precision;

    // ramify
    std::int64_t d = 0;
};

mpz_class big(std::string const & s, char const * what)
{
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw DomainError(std::string("--") + what + " expects an integer, got '" + s + "'");
    return v;
}

ElementaryModule parse_summands(unsigned p, unsigned digits, std::string const & spec)
{
    std::vector<unsigned> exps;
    std::vector<LambdaPoly> polys;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (item.rfind("p^", 0) == 0) {
            std::size_t used = 0;
            unsigned long k = 0;
            try {
                k = std::stoul(item.substr(2), &used);
            } catch (std::exception const &) {
                used = 0;
            }
            if (used == 0 || used != item.size() - 2)
                throw iwasawa::ParseError("summands", "bad p-power summand '" + item + "'");
            exps.push_back(static_cast<unsigned>(k));
        } else if (item.rfind("f:", 0) == 0) {
            polys.push_back(parse_poly(p, digits, item.substr(2)));
        } else {
            throw iwasawa::ParseError("summands", "expected 'p^k' or 'f:<poly>', got '" + item + "'");
        }
    }
    return ElementaryModule(p, digits, exps, polys);
}

int cmd_deduce(RunConfig const & cfg, std::ostream & out)
{
    auto records = load_fixture_file(cfg.fixture_path);
    std::optional<std::string> sel;
    if (!cfg.label.empty())
        sel = cfg.label;
    auto outcomes = run_all(records, sel);
    if (sel && outcomes.empty())
        throw iwasawa::ParseError(cfg.fixture_path, "no record labelled '" + cfg.label + "'");
    out << (cfg.format == "json" ? render_json(outcomes) : render_text(outcomes));
    for (auto const & o : outcomes)
        if (!o.result)
            return exit_fixture;
    return exit_ok;
}

int cmd_report(RunConfig const & cfg, std::ostream & out)
{
    auto records = load_fixture_file(cfg.fixture_path);
    Report rep = build_report(records);
    out << rep.text;
    if (rep.contradicted)
        return exit_contradiction;
    return rep.errors ? exit_fixture : exit_ok;
}

int cmd_chevalley(RunConfig const & cfg, std::ostream & out)
{
    ChevalleyInput in{big(cfg.h, "h"), cfg.degree, cfg.ram, big(cfg.unit_index, "unit-index")};
    out << ambiguous_count(in).get_str() << "\n";
    return exit_ok;
}

int cmd_quotient(RunConfig const & cfg, std::ostream & out)
{
    if (!is_prime(cfg.p))
        throw DomainError("--p must be prime");
    if (cfg.precision == 0 || cfg.precision > max_precision)
        throw DomainError("--precision must be in 1.." + std::to_string(max_precision));
    ElementaryModule e = parse_summands(cfg.p, cfg.precision, cfg.summands);
    out << to_string(quotient_order_nu(e, cfg.level)) << "\n";
    return exit_ok;
}

int cmd_ramify(RunConfig const & cfg, std::ostream & out)
{
    out << "d=" << cfg.d << " p=" << cfg.p << " ";
    if (cfg.p == 3) {
        auto c = classify_ramification_p3(cfg.d);
        out << (c.status == Ramification::totally_ramified ? "totally_ramified" : "unramified")
            << " v3_disc_K1=" << c.v3_disc_K1 << " v3_disc_K0=" << c.v3_disc_K0 << "\n";
    } else {
        auto c = classify_ramification_p2(cfg.d);
        out << (c.totally_ramified ? "totally_ramified" : "unramified")
            << " single_prime_above_2=" << (c.single_prime_above_2 ? "true" : "false") << "\n";
    }
    return exit_ok;
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    RunConfig cfg;
    CLI::App app{"Iwasawa invariant deductions from class group data", "iwasawa"};
    app.require_subcommand(1);

    auto * deduce_cmd = app.add_subcommand("deduce", "Deduce (mu, lambda, nu) for fixture records");
    deduce_cmd->add_option("--fixtures", cfg.fixture_path, "Fixture file")->required();
    deduce_cmd->add_option("--label", cfg.label, "Only the record with this label");
    deduce_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto * chev = app.add_subcommand("chevalley", "Number of ambiguous classes");
    chev->set_help_flag("--help", "Print this help message and exit"); // --h is the class number
    chev->add_option("--h", cfg.h, "Class number of the base field");
    chev->add_option("--deg", cfg.degree, "Degree of the cyclic extension")->required();
    chev->add_option("--ram", cfg.ram, "Ramification indices")->delimiter(',');
    chev->add_option("--unit-index", cfg.unit_index, "Norm index of the unit group");

    auto * quot = app.add_subcommand("quotient", "Exponent of #(E / nu_n E)");
    quot->add_option("--p", cfg.p, "Prime")->required();
    quot->add_option("--summands", cfg.summands, "e.g. \"p^1,f:T^2+3T+3\"")->required();
    quot->add_option("--level", cfg.level, "n")->required();
    quot->add_option("--precision", cfg.precision, "p-adic digits");

    auto * ram = app.add_subcommand("ramify", "Classify ramification in the first layer");
    ram->add_option("--p", cfg.p, "2 or 3")->required()->check(CLI::IsMember({2u, 3u}));
    ram->add_option("--d", cfg.d, "d")->required();

    auto * rep = app.add_subcommand("report", "Table of deductions against expected values");
    rep->add_option("--fixtures", cfg.fixture_path, "Fixture file")->required();

    std::vector<char const *> argv;
    for (auto const & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (*deduce_cmd)
            return cmd_deduce(cfg, out);
        if (*rep)
            return cmd_report(cfg, out);
        if (*chev)
            return cmd_chevalley(cfg, out);
        if (*quot)
            return cmd_quotient(cfg, out);
        return cmd_ramify(cfg, out);
    } catch (iwasawa::ParseError const & e) {
        err << "fixture error: " << e.what() << "\n";
        return *quot ? exit_usage : exit_fixture;
    } catch (iwasawa::ValidationError const & e) {
        err << "fixture error: " << cfg.fixture_path << ": " << e.what() << "\n";
        return exit_fixture;
    } catch (InconsistentInput const & e) {
        err << "inconsistent input: " << e.what() << "\n";
        return exit_fixture;
    } catch (std::domain_error const & e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace iwasawa::cli
