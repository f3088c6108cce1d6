#include "qrep/cli.hpp"

#include "qrep/catalog.hpp"
#include "qrep/errors.hpp"
#include "qrep/grid_store.hpp"
#include "qrep/product_identity.hpp"
#include "qrep/replication.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>

#ifndef QREP_DEFAULT_CONFIG
#define QREP_DEFAULT_CONFIG "config/hauptmoduls.conf"
#endif

namespace qrep {

namespace {

constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string config = QREP_DEFAULT_CONFIG;
    std::string cache;
    std::string format = "human";

    std::string name;
    std::int64_t order = 10;

    std::string check;
    std::optional<std::int64_t> level;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> p_order;
    std::optional<std::int64_t> q_order;
    std::optional<std::int64_t> n_max_opt;
    std::optional<std::int64_t> m_max_opt;
    std::optional<std::int64_t> r_max;
    std::optional<std::int64_t> k_max;
    std::string function;
    bool trivial_psi = false;
    std::string output;

    std::int64_t m_max = 0;
    std::int64_t n_max = 0;
    std::string export_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::int64_t require_level(const Options& o, std::initializer_list<std::int64_t> allowed)
{
    if (!o.level) throw UsageError(o.check + " needs --level");
    for (auto l : allowed)
        if (*o.level == l) return l;
    throw UsageError(o.check + " is not defined for level " + std::to_string(*o.level));
}

void require_positive(std::int64_t v, const char* what)
{
    if (v < 1) throw UsageError(std::string(what) + " must be positive");
}

void print_expansion(const LaurentSeries& f, const Options& o, std::ostream& out)
{
    if (o.format == "structured") {
        for (auto e = f.valuation(); e < f.order(); ++e) {
            nlohmann::ordered_json j;
            j["function"] = o.name;
            j["exponent"] = e;
            j["coefficient"] = to_string(f[e]);
            out << j.dump() << "\n";
        }
        return;
    }
    std::string line;
    for (auto e = f.valuation(); e < f.order(); ++e) {
        const Rational& c = f[e];
        if (e != 0 && sgn(c) == 0) continue;
        const Rational mag = abs(c);
        if (!line.empty()) line += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) line += "-";
        if (e == 0) {
            line += to_string(mag);
            continue;
        }
        const std::string var = e == 1 ? "q" : "q^" + std::to_string(e);
        line += mag == 1 ? var : to_string(mag) + " " + var;
    }
    out << line << "\n";
}

Report run_check(const Options& o, const Catalog& catalog, GridStore& store)
{
    const auto& c = o.check;
    if (c == "replicable") {
        std::string fn = o.function;
        if (fn.empty()) fn = o.level ? hauptmodul_name_gamma0(*o.level) : "bigJ";
        const auto bound = o.bound.value_or(40);
        require_positive(bound, "--bound");
        return replicable_check(*store.get(fn, bound, bound), bound);
    }
    if (c == "super" || c == "product2b" || c == "product2c") {
        const auto level = require_level(o, {5, 8, 10, 12});
        const auto psi = o.trivial_psi ? PsiCharacter::trivial(level) : PsiCharacter(level);
        const auto t_name = hauptmodul_name(level);
        const auto t0_name = hauptmodul_name_gamma0(level);
        if (c == "product2c") {
            const auto P = o.p_order.value_or(6), Q = o.q_order.value_or(6);
            require_positive(P, "--p-order");
            require_positive(Q, "--q-order");
            const auto B = product_family_bound(P, Q);
            std::int64_t root = 1;
            while ((root + 1) * (root + 1) <= B) ++root;
            const auto m_max = std::max(root, std::max(P, Q));
            const auto gt = store.get(t_name, m_max, B);
            const auto gt0 = store.get(t0_name, m_max, B);
            const auto ft = extract_replicates_bounded(FaberSource::super(*gt, *gt0, psi), B);
            const auto ft0 = extract_replicates_bounded(FaberSource::plain(*gt0), B);
            return super_product_check(*gt, *gt0, psi, ft, ft0, P, Q);
        }
        const auto bound = o.bound.value_or(40);
        require_positive(bound, "--bound");
        const auto gt = store.get(t_name, bound, bound);
        const auto gt0 = store.get(t0_name, bound, bound);
        if (c == "super") return super_check(*gt, *gt0, psi, bound);
        const auto ft = extract_replicates_bounded(FaberSource::super(*gt, *gt0, psi), bound);
        auto r = condition_b_check(*gt, *gt0, psi, ft, bound);
        if (level == 10 && ft.k_max(2) >= 1) {
            // Observational: compare F^(2) with 2 t2 - t02 of the level-5 pair.
            const auto t2 = catalog.expand("t1_5_as_t2_of_10", ft.k_max(2));
            const auto t02 = catalog.expand("t0_5_as_t2_of_10", ft.k_max(2));
            bool same = true, opposite = true;
            for (std::int64_t k = 1; k <= ft.k_max(2); ++k) {
                const Rational v = 2 * t2[k] - t02[k];
                same = same && ft.get(2, k) == v;
                opposite = opposite && ft.get(2, k) == -v;
            }
            r.notes.push_back(std::string("F^(2)_k versus 2 t2 - t02 for k <= ") + std::to_string(ft.k_max(2)) + ": " +
                              (same ? "equal" : opposite ? "equal up to sign" : "different"));
        }
        return r;
    }
    if (c == "lemma-aa") {
        if (!o.level || !o.p) throw UsageError("lemma-aa needs --level and --p");
        if (!lemma_aa_applies(*o.level, *o.p))
            throw UsageError("lemma-aa is not claimed for level " + std::to_string(*o.level) + " with p = " + std::to_string(*o.p) +
                             "; valid pairs are (5,5), (8,2), (10,5), (12,2), (12,3)");
        return lemma_aa_check(catalog, *o.level, *o.p, o.n_max_opt.value_or(6), o.q_order.value_or(30));
    }
    if (c == "lemma-ii") return lemma_ii_check(catalog, o.n_max_opt.value_or(6), o.q_order.value_or(30));
    if (c == "lemma-ff") return lemma_ff_check(store, o.m_max_opt.value_or(15), o.r_max.value_or(15), o.k_max.value_or(4));
    if (c == "lemma-jj") return lemma_jj_check(store, o.r_max.value_or(15), o.k_max.value_or(4), o.m_max_opt.value_or(15));
    if (c == "koike-vanishing")
        return koike_vanishing_check(store, o.r_max.value_or(9), o.k_max.value_or(3), o.m_max_opt.value_or(20));
    if (c == "product1") {
        std::string fn = o.function;
        if (fn.empty()) fn = o.level ? hauptmodul_name(*o.level) : "bigJ";
        const auto P = o.p_order.value_or(8), Q = o.q_order.value_or(8);
        require_positive(P, "--p-order");
        require_positive(Q, "--q-order");
        return faber_generating_check(fn, catalog.expand(fn, product_precision(P, Q)), P, Q);
    }
    throw UsageError("unknown check '" + c + "'");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact q-series verification of replication identities for genus-zero Hauptmoduls"};
    app.require_subcommand(1);
    app.add_option("--config", o.config, "Catalog configuration file");
    app.add_option("--cache", o.cache, "Directory for coefficient grid files");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "structured"}));

    auto* expand = app.add_subcommand("expand", "Print the normalized q-expansion of a catalog function");
    expand->add_option("name", o.name, "Catalog function")->required();
    expand->add_option("--order", o.order, "Highest q-exponent to print")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Run one identity check");
    verify->add_option("check", o.check, "Check id")
        ->required()
        ->check(CLI::IsMember({"replicable", "super", "lemma-aa", "lemma-ii", "lemma-ff", "lemma-jj", "koike-vanishing", "product1",
                               "product2b", "product2c"}));
    verify->add_option("--level", o.level, "Level N");
    verify->add_option("--p", o.p, "Prime for lemma-aa");
    verify->add_option("--bound", o.bound, "Bound on ab (replicable, super, product2b)");
    verify->add_option("--p-order", o.p_order, "Highest p-exponent (product checks)");
    verify->add_option("--q-order", o.q_order, "Highest q-exponent (product checks, lemma-aa, lemma-ii)");
    verify->add_option("--n-max", o.n_max_opt, "Largest Faber index n (lemma-aa, lemma-ii)");
    verify->add_option("--m-max", o.m_max_opt, "Largest m (lemma-ff, lemma-jj, koike-vanishing)");
    verify->add_option("--r-max", o.r_max, "Largest odd r (lemma-ff, lemma-jj, koike-vanishing)");
    verify->add_option("--k-max", o.k_max, "Largest power of two exponent k");
    verify->add_option("--function", o.function, "Catalog function (replicable, product1)");
    verify->add_flag("--trivial-psi", o.trivial_psi, "Replace psi by the constant 1");
    verify->add_option("--output", o.output, "Write the report to this file instead of stdout");

    auto* grid = app.add_subcommand("grid", "Build a coefficient grid and export it");
    grid->add_option("name", o.name, "Catalog function")->required();
    grid->add_option("--m-max", o.m_max, "Largest q-exponent m")->required();
    grid->add_option("--n-max", o.n_max, "Largest Faber index n")->required();
    grid->add_option("--export", o.export_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        const Catalog catalog = Catalog::load(o.config);
        std::optional<std::filesystem::path> cache;
        if (!o.cache.empty()) cache = o.cache;
        GridStore store(catalog, cache);

        if (*expand) {
            print_expansion(catalog.expand(o.name, o.order), o, out);
            return exit_pass;
        }
        if (*grid) {
            require_positive(o.m_max, "--m-max");
            require_positive(o.n_max, "--n-max");
            if (!catalog.contains(o.name)) throw UsageError("unknown function '" + o.name + "'");
            const auto g = store.get(o.name, o.m_max, o.n_max);
            // A covering grid from the cache is cut down to the requested bounds.
            std::vector<Rational> v;
            for (std::int64_t m = 1; m <= o.m_max; ++m)
                for (std::int64_t n = 1; n <= o.n_max; ++n) v.push_back(g->get(m, n));
            const CoefficientGrid exact(o.name, o.m_max, o.n_max, std::move(v));
            if (o.export_path.empty()) out << serialize_grid(exact);
            else save_grid(exact, o.export_path);
            return exit_pass;
        }

        const Report r = run_check(o, catalog, store);
        const std::string text = o.format == "structured" ? to_json(r) + "\n" : to_human(r);
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + o.output);
            f << text;
        }
        return r.passed() ? exit_pass : exit_violation;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << "\n";
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

} // namespace qrep
