#include "ordinals/cli.hpp"

#include <cstdint>
#include <ostream>

#include "ordinals/carruth.hpp"
#include "ordinals/inf_ops.hpp"
#include "ordinals/parser.hpp"
#include "ordinals/rearrange.hpp"
#include "ordinals/selftest.hpp"

namespace ordinals::cli {

namespace {

struct Options {
    std::uint64_t seed = 0;
    std::uint64_t max_perms = kDefaultMaxPerms;
    std::size_t max_specials = kDefaultMaxItems;
};

const char* kUsage =
    "usage: ordinals VERB ARGS [--seed N] [--max-perms N] [--max-specials N]\n"
    "verbs:\n"
    "  eval EXPR                  evaluate an ordinal expression\n"
    "  infprod SEQ                infinite natural product\n"
    "  infsum SEQ                 infinite natural sum\n"
    "  oprod SEQ                  classical infinite product\n"
    "  osum SEQ                   classical infinite sum\n"
    "  classify SEQ               case split of the product rules\n"
    "  threshold SEQ              least cut where tail identities hold\n"
    "  rearrange-sum SEQ          values of rearranged infinite sums\n"
    "  rearrange-prod SEQ         values of rearranged infinite products\n"
    "  rearrange-finite-sum LIST  values of rearranged finite sums\n"
    "  rearrange-finite-prod LIST values of rearranged finite products\n"
    "  rank BOUNDS VEC            anti-lexicographic rank\n"
    "  unrank BOUNDS EXPR         inverse of rank\n"
    "  fcrank BOUNDS CUT VEC      finitely Carruth rank at the cut\n"
    "  nprank A B X Y             Carruth-max rank of (X, Y) in A x B\n"
    "  selftest                   run the seeded property suites\n"
    "literals: ordinal 'w^(w)*2 + 3', sequence '[a, b ; c]', vector '{0:w, 3:2}'\n";

void print_values(const ValueSet& values, std::ostream& out) {
    for (const Ordinal& v : values) out << v.str() << "\n";
}

int dispatch(const std::string& verb, const std::vector<std::string>& arg,
             const Options& opt, std::ostream& out, std::ostream& err) {
    auto arity = [&](std::size_t n) {
        if (arg.size() != n)
            throw std::domain_error("verb '" + verb + "' expects " + std::to_string(n)
                                    + " argument(s), got " + std::to_string(arg.size()));
    };
    if (verb == "eval") {
        arity(1);
        out << parse_ordinal(arg[0]).str() << "\n";
    } else if (verb == "infprod") {
        arity(1);
        out << infinite_nat_prod(parse_sequence(arg[0])).str() << "\n";
    } else if (verb == "infsum") {
        arity(1);
        out << infinite_nat_sum(parse_sequence(arg[0])).str() << "\n";
    } else if (verb == "oprod") {
        arity(1);
        out << infinite_ord_prod(parse_sequence(arg[0])).str() << "\n";
    } else if (verb == "osum") {
        arity(1);
        out << infinite_ord_sum(parse_sequence(arg[0])).str() << "\n";
    } else if (verb == "classify") {
        arity(1);
        out << classify(parse_sequence(arg[0])).str() << "\n";
    } else if (verb == "threshold") {
        arity(1);
        out << segue_threshold(parse_sequence(arg[0])) << "\n";
    } else if (verb == "rearrange-sum") {
        arity(1);
        print_values(inf_sum_values(parse_sequence(arg[0]), opt.max_specials), out);
    } else if (verb == "rearrange-prod") {
        arity(1);
        print_values(inf_prod_values(parse_sequence(arg[0]), opt.max_specials), out);
    } else if (verb == "rearrange-finite-sum") {
        arity(1);
        print_values(finite_sum_values(parse_ordinal_list(arg[0]), opt.max_specials), out);
    } else if (verb == "rearrange-finite-prod") {
        arity(1);
        print_values(finite_prod_values(parse_ordinal_list(arg[0]), opt.max_specials), out);
    } else if (verb == "rank") {
        arity(2);
        FinSupportVector v(parse_sequence(arg[0]), parse_vector(arg[1]));
        out << antilex_rank(v).str() << "\n";
    } else if (verb == "unrank") {
        arity(2);
        FinSupportVector v = antilex_unrank(parse_sequence(arg[0]), parse_ordinal(arg[1]));
        out << format_vector(v.entries()) << "\n";
    } else if (verb == "fcrank") {
        arity(3);
        OmegaSequence bounds = parse_sequence(arg[0]);
        FCDescriptor d = fc_descriptor(bounds, parse_index(arg[1]));
        FinSupportVector v(bounds, parse_vector(arg[2]));
        out << fc_rank(d, v).str() << "\n";
    } else if (verb == "nprank") {
        arity(4);
        PairRank pr(parse_ordinal(arg[0]), parse_ordinal(arg[1]));
        out << pr.rank(parse_ordinal(arg[2]), parse_ordinal(arg[3])).str() << "\n";
    } else if (verb == "selftest") {
        arity(0);
        selftest::Report report = selftest::run_selftest(opt.seed);
        out << report.str();
        if (!report.ok()) return 1;
    } else {
        err << "unknown verb '" << verb << "'\n" << kUsage;
        return 2;
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    std::string verb;
    std::vector<std::string> positional;
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto flag_value = [&](const char* name) {
                if (++i >= args.size())
                    throw std::domain_error(std::string(name) + " needs a value");
                return parse_index(args[i]);
            };
            if (a == "--seed") opt.seed = flag_value("--seed");
            else if (a == "--max-perms") opt.max_perms = flag_value("--max-perms");
            else if (a == "--max-specials") opt.max_specials = flag_value("--max-specials");
            else if (verb.empty()) verb = a;
            else positional.push_back(a);
        }
        if (verb.empty()) {
            err << kUsage;
            return 2;
        }
        return dispatch(verb, positional, opt, out, err);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ordinals::cli
