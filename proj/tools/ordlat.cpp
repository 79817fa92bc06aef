// Command-line front end: order invariants, lattice inspection, identity
// verification, equality audits, bound tables, and catalog access.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ordlat/catalog.hpp"
#include "ordlat/corpus.hpp"
#include "ordlat/io.hpp"
#include "ordlat/mordell.hpp"
#include "ordlat/reduction.hpp"
#include "ordlat/sections.hpp"

using namespace ordlat;

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 enumeration budget exceeded.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string g_format = "text";

// --format accepts "md" as shorthand for "markdown".
const std::string& fmt() {
    static std::string md = "markdown";
    return g_format == "md" ? md : g_format;
}

std::uint64_t env_node_budget() {
    const char* s = std::getenv("ORDLAT_NODE_BUDGET");
    if (!s) return kDefaultNodeBudget;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != std::string(s).size() || v == 0)
            throw std::invalid_argument("not a positive integer");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("ORDLAT_NODE_BUDGET is not a positive "
                                                "integer: \"") + s + "\"");
    }
}

int fail(int code, const std::string& msg) {
    if (fmt() == "json")
        std::cerr << nlohmann::json{{"error", msg}, {"exitCode", code}}.dump() << "\n";
    else
        std::cerr << "error: " << msg << "\n";
    return code;
}

// Key/value document in the selected output format.
void emit_kv(const std::vector<std::pair<std::string, std::string>>& rows,
             const nlohmann::json& payload) {
    if (fmt() == "json") {
        std::cout << payload.dump() << "\n";
    } else if (fmt() == "csv") {
        std::cout << "field,value\n";
        for (const auto& [k, v] : rows) std::cout << k << "," << v << "\n";
    } else if (fmt() == "markdown") {
        std::cout << "| field | value |\n|---|---|\n";
        for (const auto& [k, v] : rows) std::cout << "| " << k << " | " << v << " |\n";
    } else {
        for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
    }
}

std::string gamma_decimal(const Rat& gamma_nth, std::size_t n) {
    return PowerProduct::from_rational(gamma_nth).pow(make_rat(1, (long)n)).to_decimal(6);
}

std::string order_label(const Order& o) {
    return o.name().empty() ? std::string("custom") : o.name();
}

std::string row_string(const QRow& row) {
    std::string s = "[";
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += ", ";
        s += to_string(row[i]);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// dinv

void cmd_dinv(const std::string& order_name) {
    const Order& o = builtin_order(order_name);
    std::string d = to_string(o.d_invariant());
    if (fmt() == "text") {
        std::cout << d << "\n";
        return;
    }
    emit_kv({{"order", order_name}, {"dInvariant", d}},
            {{"order", order_name}, {"dInvariant", d}});
}

// ---------------------------------------------------------------------------
// lattice info / dual

void cmd_lattice_info(const std::string& file, bool list_minvecs,
                      std::uint64_t node_budget) {
    OLattice L = load_lattice(file);
    HermiteData h = hermite(L, node_budget);

    // Large minimal shells (Z-rank >= 24) are enumerated only on request;
    // the certified minimum alone is the default there.
    bool want_kissing = list_minvecs || L.zrank() < 24;
    std::vector<QRow> minvecs;
    if (want_kissing) minvecs = minimal_vectors(L, node_budget);

    std::vector<std::pair<std::string, std::string>> rows = {
        {"order", order_label(L.order())},
        {"ambientDim", std::to_string(L.ambient_dim())},
        {"zrank", std::to_string(L.zrank())},
        {"det", to_string(L.determinant())},
        {"minNorm", to_string(h.min_norm)},
        {"gammaNth", to_string(h.gamma_nth)},
        {"gamma", gamma_decimal(h.gamma_nth, h.n)},
    };
    if (L.form_scale() != 1) rows.emplace_back("formScale", to_string(L.form_scale()));
    nlohmann::json payload = {{"order", order_to_json(L.order())},
                              {"ambientDim", L.ambient_dim()},
                              {"zrank", L.zrank()},
                              {"det", to_string(L.determinant())},
                              {"minNorm", to_string(h.min_norm)},
                              {"gammaNth", to_string(h.gamma_nth)},
                              {"gamma", gamma_decimal(h.gamma_nth, h.n)},
                              {"formScale", to_string(L.form_scale())}};
    if (want_kissing) {
        rows.emplace_back("kissing", std::to_string(minvecs.size()));
        payload["kissing"] = minvecs.size();
    } else {
        rows.emplace_back("kissing", "skipped (rank >= 24; pass --list-minvecs)");
        payload["kissing"] = nullptr;
    }
    if (list_minvecs) {
        nlohmann::json vecs = nlohmann::json::array();
        for (const auto& v : minvecs) {
            nlohmann::json jv = nlohmann::json::array();
            for (const auto& c : v) jv.push_back(to_string(c));
            vecs.push_back(std::move(jv));
        }
        payload["minimalVectors"] = std::move(vecs);
        if (fmt() == "text")
            for (const auto& v : minvecs) rows.emplace_back("minvec", row_string(v));
    }
    emit_kv(rows, payload);
}

void cmd_lattice_dual(const std::string& file, const std::string& out) {
    OLattice dual = load_lattice(file).o_dual();
    save_lattice(dual, out);
    emit_kv({{"written", out}, {"det", to_string(dual.determinant())}},
            {{"written", out}, {"det", to_string(dual.determinant())}});
}

// ---------------------------------------------------------------------------
// verify identities

struct Suite {
    std::string name;
    long trials = 0;
    long failures = 0;
};

void run_file_suites(std::vector<Suite>& suites, const OLattice& L, long trials,
                     std::mt19937_64& rng) {
    const Rat D = L.order().d_invariant();
    const std::size_t r = L.order().rank();

    Suite product{"product formula det * det(dual) = D^(2s)"};
    OLattice dual = L.o_dual();
    ++product.trials;
    if (L.determinant() * dual.determinant() != pow_rat(D, 2 * (L.zrank() / r)))
        ++product.failures;
    suites.push_back(product);

    Suite bidual{"biduality dual(dual) = lattice"};
    ++bidual.trials;
    if (!(dual.o_dual() == L)) ++bidual.failures;
    suites.push_back(bidual);

    if (L.full_rank() && L.ambient_dim() >= 2) {
        Suite det_split{"dual section determinant identity"};
        Suite proof_step{"dual of projection = section of dual"};
        for (long t = 0; t < trials; ++t) {
            std::size_t s = 1 + (std::size_t)(t % (long)(L.ambient_dim() - 1));
            Subspace f = random_lattice_subspace(L, s, rng);
            ++det_split.trials;
            DualSectionReport rep = dual_section_identity(L, f);
            if (!rep.identity_holds || !rep.rank_equivalence) ++det_split.failures;
            if (rep.section_full_rank) {
                ++proof_step.trials;
                if (!(project_perp(L, f).o_dual() == intersect(dual, perp(f))))
                    ++proof_step.failures;
            }
        }
        suites.push_back(det_split);
        suites.push_back(proof_step);
    }
}

void run_random_suites(std::vector<Suite>& suites, long trials, std::mt19937_64& rng) {
    Suite product{"random corpora: product formula"};
    Suite bidual{"random corpora: biduality"};
    Suite antitone{"random corpora: dual antitonicity"};
    Suite det_split{"random corpora: dual section determinant identity"};
    for (const auto& name : builtin_order_names()) {
        auto o = builtin_order_ptr(name);
        const Rat D = o->d_invariant();
        for (std::size_t m = 1; m <= 3; ++m) {
            for (long t = 0; t < trials; ++t) {
                OLattice L = random_olattice(o, m, rng);
                OLattice dual = L.o_dual();
                ++product.trials;
                if (L.determinant() * dual.determinant() != pow_rat(D, 2 * m))
                    ++product.failures;
                ++bidual.trials;
                if (!(dual.o_dual() == L)) ++bidual.failures;
                if (m == 2) {
                    ++det_split.trials;
                    Subspace f = random_lattice_subspace(L, 1, rng);
                    DualSectionReport rep = dual_section_identity(L, f);
                    if (!rep.identity_holds || !rep.rank_equivalence) ++det_split.failures;
                }
            }
        }
        for (long t = 0; t < trials / 4 + 1; ++t) {
            auto [sub, super] = random_nested_pair(o, 2, rng);
            ++antitone.trials;
            if (!sub.o_dual().contains_lattice(super.o_dual())) ++antitone.failures;
        }
    }
    suites.push_back(product);
    suites.push_back(bidual);
    suites.push_back(antitone);
    suites.push_back(det_split);
}

void cmd_verify(const std::string& file, long trials, unsigned long seed, bool with_random) {
    std::mt19937_64 rng(seed);
    std::vector<Suite> suites;
    run_file_suites(suites, load_lattice(file), trials, rng);
    if (with_random) run_random_suites(suites, trials, rng);

    bool pass = true;
    std::vector<std::pair<std::string, std::string>> rows;
    nlohmann::json jsuites = nlohmann::json::array();
    for (const auto& s : suites) {
        if (s.failures) pass = false;
        rows.emplace_back(s.name, std::to_string(s.trials - s.failures) + "/" +
                                      std::to_string(s.trials) + " pass");
        jsuites.push_back({{"name", s.name}, {"trials", s.trials}, {"failures", s.failures}});
    }
    rows.emplace_back("verdict", pass ? "pass" : "FAIL");
    emit_kv(rows, {{"suites", jsuites}, {"pass", pass}});
    if (!pass) throw VerificationFailure("identity verification failed");
}

// ---------------------------------------------------------------------------
// audit equality

void cmd_audit(const std::string& file, const std::string& reference, bool all_vectors,
               std::uint64_t node_budget) {
    OLattice L = load_lattice(file);
    PowerProduct ref = PowerProduct::parse(reference);
    EqualityAuditReport rep = equality_audit(L, ref, all_vectors, node_budget);

    nlohmann::json orbits = nlohmann::json::array();
    std::vector<std::pair<std::string, std::string>> rows = {
        {"latticeNorm", to_string(rep.lattice_norm)},
        {"dualNorm", to_string(rep.dual_norm)},
        {"dualGammaEqualsGamma", rep.dual_gamma_equals_gamma ? "true" : "false"},
        {"orbits", std::to_string(rep.orbits.size())},
    };
    for (const auto& o : rep.orbits) {
        nlohmann::json rep_vec = nlohmann::json::array();
        for (const auto& c : o.representative) rep_vec.push_back(to_string(c));
        orbits.push_back({{"representative", std::move(rep_vec)},
                          {"orbitSize", o.orbit_size},
                          {"sectionNorm", to_string(o.section_norm)},
                          {"conditions",
                           {{"normMatches", o.norm_matches},
                            {"dualLineIsOx", o.dual_line_is_ox},
                            {"gammaMatchesReference", o.gamma_matches_reference}}},
                          {"sectionDet", to_string(o.section_det)},
                          {"sectionKissing", o.section_kissing},
                          {"pass", o.pass}});
        rows.emplace_back("orbit size " + std::to_string(o.orbit_size),
                          std::string(o.pass ? "pass" : "FAIL") + " (section kissing " +
                              std::to_string(o.section_kissing) + ", det " +
                              to_string(o.section_det) + ")");
    }
    rows.emplace_back("verdict", rep.all_pass ? "pass" : "FAIL");
    emit_kv(rows, {{"latticeNorm", to_string(rep.lattice_norm)},
                   {"dualNorm", to_string(rep.dual_norm)},
                   {"dualGammaEqualsGamma", rep.dual_gamma_equals_gamma},
                   {"orbits", std::move(orbits)},
                   {"allPass", rep.all_pass}});
    if (!rep.all_pass) throw VerificationFailure("equality audit failed");
}

// ---------------------------------------------------------------------------
// mordell

void emit_powerproduct(const std::string& key, const PowerProduct& p) {
    emit_kv({{key, p.to_string()}, {"decimal", p.to_decimal(6)}},
            {{key, p.to_string()}, {"decimal", p.to_decimal(6)}});
}

BoundsConfig load_bounds(const std::string& path, const Order& o) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open", path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("invalid JSON (") + e.what() + ")", path);
    }
    BoundsConfig cfg = BoundsConfig::from_json(j);
    if (!cfg.order_name.empty() && !o.name().empty() && cfg.order_name != o.name())
        throw std::invalid_argument("bounds config is for order \"" + cfg.order_name +
                                    "\", not \"" + o.name() + "\"");
    return cfg;
}

std::string cell(const std::optional<PowerProduct>& p) {
    return p ? p->to_decimal(6) : std::string();
}

void cmd_mordell_table(const std::string& order_name, long max_dim,
                       const std::string& bounds_file, const std::string& conjectured_file) {
    const Order& o = builtin_order(order_name);
    BoundsConfig cfg = load_bounds(bounds_file, o);
    std::optional<BoundsConfig> conj;
    if (!conjectured_file.empty()) conj = load_bounds(conjectured_file, o);
    BoundTable t = build_table(o, max_dim, cfg, conj ? &*conj : nullptr);

    if (fmt() == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : t.rows) {
            nlohmann::json jr = {{"dimension", r.dim},
                                 {"inputSource", r.input_source},
                                 {"annotation", r.annotation}};
            if (r.best_known) {
                jr["bestKnown"] = r.best_known->to_string();
                jr["bestKnownDecimal"] = r.best_known->to_decimal(6);
                jr["bestKnownProvenance"] = provenance_name(*r.best_known_provenance);
            }
            if (r.bound) {
                jr["mordellBound"] = r.bound->to_string();
                jr["mordellBoundDecimal"] = r.bound->to_decimal(6);
            }
            if (r.conjectured) {
                jr["conjecturedMordellBound"] = r.conjectured->to_string();
                jr["conjecturedMordellBoundDecimal"] = r.conjectured->to_decimal(6);
            }
            rows.push_back(std::move(jr));
        }
        std::cout << nlohmann::json{{"order", order_name}, {"rows", std::move(rows)}}.dump()
                  << "\n";
        return;
    }
    if (fmt() == "csv") {
        std::cout << "dimension,best known,Mordell bound,conjectured Mordell bound,"
                     "annotation\n";
        for (const auto& r : t.rows)
            std::cout << r.dim << "," << cell(r.best_known) << "," << cell(r.bound) << ","
                      << cell(r.conjectured) << "," << r.annotation << "\n";
        return;
    }
    // markdown and text share the published column order.
    std::cout << "| dimension | best known | Mordell bound | conjectured Mordell bound |\n"
              << "|---:|---|---|---|\n";
    for (const auto& r : t.rows) {
        std::string bound = cell(r.bound);
        if (!r.annotation.empty()) bound += " (" + r.annotation + ")";
        std::cout << "| " << r.dim << " | " << cell(r.best_known) << " | " << bound << " | "
                  << cell(r.conjectured) << " |\n";
    }
}

void cmd_mordell_obstruct(const std::string& order_name, long m, const std::string& known,
                          const std::string& candidate) {
    ObstructionReport rep = structure_obstruction(builtin_order(order_name), m,
                                                  PowerProduct::parse(known),
                                                  PowerProduct::parse(candidate));
    emit_kv({{"obstructed", rep.obstructed ? "true" : "false"},
             {"rhs", rep.rhs.to_string()},
             {"rhsDecimal", rep.rhs.to_decimal(6)},
             {"claim", rep.claim},
             {"caveat", rep.caveat}},
            {{"obstructed", rep.obstructed},
             {"rhs", rep.rhs.to_string()},
             {"rhsDecimal", rep.rhs.to_decimal(6)},
             {"claim", rep.claim},
             {"caveat", rep.caveat}});
}

// ---------------------------------------------------------------------------
// catalog

void cmd_catalog_list() {
    auto names = list_entries();
    if (fmt() == "json") {
        std::cout << nlohmann::json{{"entries", names}}.dump() << "\n";
        return;
    }
    if (fmt() == "csv") {
        std::cout << "name\n";
        for (const auto& n : names) std::cout << n << "\n";
        return;
    }
    if (fmt() == "markdown") {
        std::cout << "| name |\n|---|\n";
        for (const auto& n : names) std::cout << "| " << n << " |\n";
        return;
    }
    for (const auto& n : names) std::cout << n << "\n";
}

void cmd_catalog_verify(const std::string& name, std::uint64_t node_budget) {
    CatalogVerification v = verify_entry(name, node_budget);
    std::vector<std::pair<std::string, std::string>> rows = {
        {"name", v.name},
        {"oInvariant", v.o_invariant ? "pass" : "FAIL"},
    };
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : v.checks) {
        rows.emplace_back(c.field, std::string(c.pass ? "pass" : "FAIL") + " (expected " +
                                       c.expected + ", computed " + c.computed + ")");
        checks.push_back({{"field", c.field},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
    }
    rows.emplace_back("verdict", v.pass ? "pass" : "FAIL");
    emit_kv(rows, {{"name", v.name},
                   {"oInvariant", v.o_invariant},
                   {"checks", std::move(checks)},
                   {"pass", v.pass}});
    if (!v.pass) throw VerificationFailure("catalog entry failed verification: " + v.name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for lattices over maximal orders"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g_format, "Output format: text | json | csv | markdown")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown", "md"}));

    std::string order_name, file, out, reference, bounds_file, conjectured_file;
    std::string known, candidate, gamma_text, entry_name;
    bool list_minvecs = false, all_vectors = false, with_random = false;
    long trials = 20, m_arg = 0, s_arg = 0, max_dim = 0;
    unsigned long seed = 1;
    std::uint64_t node_budget = 0;  // resolved after parsing

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--node-budget", node_budget,
                        "Enumeration node budget (default ORDLAT_NODE_BUDGET or 10^9)");
    };
    auto budget = [&] { return node_budget ? node_budget : env_node_budget(); };

    CLI::App* dinv = app.add_subcommand("dinv", "Print the order invariant D_O");
    dinv->add_option("--order", order_name, "Built-in order name")->required();
    dinv->callback([&] { cmd_dinv(order_name); });

    CLI::App* lattice = app.add_subcommand("lattice", "Inspect or transform lattice files");
    lattice->require_subcommand(1);
    CLI::App* info = lattice->add_subcommand("info", "det, minimum, gamma, kissing");
    info->add_option("file", file, "Lattice JSON file")->required();
    info->add_flag("--list-minvecs", list_minvecs,
                   "Enumerate and list the minimal vectors (required for rank >= 24)");
    add_budget(info);
    info->callback([&] { cmd_lattice_info(file, list_minvecs, budget()); });
    CLI::App* dual = lattice->add_subcommand("dual", "Write the O-dual lattice");
    dual->add_option("file", file, "Lattice JSON file")->required();
    dual->add_option("-o,--output", out, "Output file")->required();
    dual->callback([&] { cmd_lattice_dual(file, out); });

    CLI::App* verify = app.add_subcommand("verify", "Run the exact identity suites");
    verify->require_subcommand(1);
    CLI::App* identities = verify->add_subcommand("identities", "Duality and section identities");
    identities->add_option("file", file, "Lattice JSON file")->required();
    identities->add_option("--trials", trials, "Randomized trials per suite");
    identities->add_option("--seed", seed, "RNG seed");
    identities->add_flag("--random", with_random, "Also run the generated random corpora");
    identities->callback([&] { cmd_verify(file, trials, seed, with_random); });

    CLI::App* audit = app.add_subcommand("audit", "Optimality equality-condition audits");
    audit->require_subcommand(1);
    CLI::App* equality = audit->add_subcommand("equality", "Per-orbit equality conditions");
    equality->add_option("file", file, "Lattice JSON file")->required();
    equality->add_option("--reference", reference, "Reference gamma as a power product")
        ->required();
    equality->add_flag("--all-vectors", all_vectors, "Audit every minimal vector");
    add_budget(equality);
    equality->callback([&] { cmd_audit(file, reference, all_vectors, budget()); });

    CLI::App* mordell = app.add_subcommand("mordell", "Dimension-recursion bounds and tables");
    mordell->require_subcommand(1);
    CLI::App* step = mordell->add_subcommand("step", "One recursion step m-1 -> m");
    step->add_option("--order", order_name)->required();
    step->add_option("--m", m_arg, "Target K-dimension")->required();
    step->add_option("--gamma", gamma_text, "Input gamma at dimension r(m-1)")->required();
    step->callback([&] {
        emit_powerproduct("bound", mordell_step(builtin_order(order_name), m_arg,
                                                PowerProduct::parse(gamma_text)));
    });
    CLI::App* iterate = mordell->add_subcommand("iterate", "Folded recursion m -> s");
    iterate->add_option("--order", order_name)->required();
    iterate->add_option("--m", m_arg, "Base K-dimension")->required();
    iterate->add_option("--s", s_arg, "Target K-dimension")->required();
    iterate->add_option("--gamma", gamma_text, "Input gamma at dimension rm")->required();
    iterate->callback([&] {
        emit_powerproduct("bound", mordell_iterate(builtin_order(order_name), m_arg, s_arg,
                                                   PowerProduct::parse(gamma_text)));
    });
    CLI::App* table = mordell->add_subcommand("table", "Reproduce a published bound table");
    table->add_option("--order", order_name)->required();
    table->add_option("--max-dim", max_dim, "Largest Z-dimension")->required();
    table->add_option("--bounds", bounds_file, "Bounds config JSON")->required();
    table->add_option("--conjectured", conjectured_file, "Densest-known config JSON");
    table->callback(
        [&] { cmd_mordell_table(order_name, max_dim, bounds_file, conjectured_file); });
    CLI::App* obstruct = mordell->add_subcommand("obstruct", "Structure obstruction test");
    obstruct->add_option("--order", order_name)->required();
    obstruct->add_option("--m", m_arg, "K-dimension of the known invariant")->required();
    obstruct->add_option("--known", known, "Known gamma at dimension rm")->required();
    obstruct->add_option("--candidate", candidate, "Candidate gamma at r(m-1)")->required();
    obstruct->callback([&] { cmd_mordell_obstruct(order_name, m_arg, known, candidate); });

    CLI::App* catalog = app.add_subcommand("catalog", "Named lattice catalog");
    catalog->require_subcommand(1);
    CLI::App* clist = catalog->add_subcommand("list", "List catalog entries");
    clist->callback([&] { cmd_catalog_list(); });
    CLI::App* cverify = catalog->add_subcommand("verify", "Recompute and check an entry");
    cverify->add_option("name", entry_name, "Entry name (Λ16/hurwitz or L16/hurwitz)")
        ->required();
    add_budget(cverify);
    cverify->callback([&] { cmd_catalog_verify(entry_name, budget()); });
    CLI::App* cexport = catalog->add_subcommand("export", "Write an entry's lattice file");
    cexport->add_option("name", entry_name, "Entry name")->required();
    cexport->add_option("-o,--output", out, "Output file")->required();
    cexport->callback([&] {
        export_entry(entry_name, out);
        emit_kv({{"written", out}}, {{"written", out}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (g_format == "md") g_format = "markdown";
        return fail(2, e.what());
    } catch (const VerificationFailure& e) {
        return fail(1, e.what());
    } catch (const EnumerationBudgetError& e) {
        return fail(3, e.what());
    } catch (const std::exception& e) {
        return fail(2, e.what());
    }
    return 0;
}
