#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringlab/io.hpp"

namespace {

using namespace ringlab;

// exit codes: 0 ok / no failures, 1 claim failure, 2 usage or parse error,
// 3 construction error
constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;

struct CommonFlags {
    std::size_t max_order = kDefaultOrderCap;
    bool skip_expensive = false;
    std::string cache_dir;
    bool json_output = false;
};

std::filesystem::path default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "ringlab";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "ringlab";
    return std::filesystem::temp_directory_path() / "ringlab-cache";
}

Engine make_engine(const CommonFlags& flags) {
    EngineOptions opts;
    opts.limits.max_order = flags.max_order;
    if (flags.skip_expensive) opts.classify.expensive_order_threshold = 0;
    Engine engine(opts);
    std::filesystem::path dir =
        flags.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(flags.cache_dir);
    try {
        engine.set_record_store(make_disk_record_store(dir));
    } catch (const std::exception& e) {
        std::cerr << "warning: cache directory unusable (" << e.what() << "), caching disabled\n";
    }
    return engine;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--max-order", flags.max_order, "size cap for every construction")
        ->capture_default_str();
    cmd->add_flag("--skip-expensive", flags.skip_expensive,
                  "skip the cubic predicates (exchange, pi_regular, unit_regular) at any order");
    cmd->add_option("--cache-dir", flags.cache_dir,
                    "classification cache directory (default: user cache dir)");
    cmd->add_flag("--json", flags.json_output, "emit JSON instead of text");
}

std::string set_to_text(const ElemSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i)
        out += (i ? "," : "") + std::to_string(s.members[i]);
    return out + "}";
}

int cmd_describe(const CommonFlags& flags, const std::string& expr) {
    Engine engine = make_engine(flags);
    FiniteRing r = eval_ring(engine, expr);
    const RingAnalysis& a = engine.analyze(r);
    const bool show_sets = r.order() <= 64;
    if (flags.json_output) {
        std::ostringstream out;
        out << "{\n  \"expression\": \"" << r.label() << "\",\n  \"order\": " << r.order()
            << ",\n  \"characteristic\": " << characteristic(r);
        auto emit = [&](const char* name, const ElemSet& s) {
            out << ",\n  \"" << name << "_size\": " << s.size();
            if (show_sets) {
                out << ",\n  \"" << name << "\": [";
                for (std::size_t i = 0; i < s.members.size(); ++i)
                    out << (i ? "," : "") << s.members[i];
                out << "]";
            }
        };
        emit("units", a.unit_group.members);
        emit("jacobson", a.jacobson.members);
        emit("sqrt_jacobson", a.sqrt_j);
        emit("idempotents", a.sets.idempotents);
        emit("nilpotents", a.sets.nilpotents);
        emit("center", a.sets.center);
        out << "\n}\n";
        std::cout << out.str();
    } else {
        std::cout << "expression:     " << r.label() << "\n";
        std::cout << "order:          " << r.order() << "\n";
        std::cout << "characteristic: " << characteristic(r) << "\n";
        auto emit = [&](const char* name, const ElemSet& s) {
            std::cout << name << s.size();
            if (show_sets) std::cout << ": " << set_to_text(s);
            std::cout << "\n";
        };
        emit("|U|      = ", a.unit_group.members);
        emit("|J|      = ", a.jacobson.members);
        emit("|sqrtJ|  = ", a.sqrt_j);
        emit("|Id|     = ", a.sets.idempotents);
        emit("|Nil|    = ", a.sets.nilpotents);
        emit("|C|      = ", a.sets.center);
    }
    return kExitOk;
}

int cmd_classify(const CommonFlags& flags, const std::string& expr, const std::string& only) {
    Engine engine = make_engine(flags);
    FiniteRing r = eval_ring(engine, expr);
    const ClassificationRecord& rec = engine.classify(r);
    if (!only.empty()) {
        const VerdictField* f = find_verdict_field(only);
        if (!f) {
            std::cerr << "error: unknown class name '" << only << "'\n";
            return kExitUsage;
        }
        Verdict v = rec.*(f->member);
        std::cout << (is_skipped(v) ? "skipped" : is_yes(v) ? "true" : "false") << "\n";
        return kExitOk;
    }
    std::cout << record_to_json(rec, r.label());
    return kExitOk;
}

int cmd_census(const CommonFlags& flags, const std::string& seed_catalog) {
    Engine engine = make_engine(flags);
    CatalogConfig cfg;
    cfg.max_order = flags.max_order;
    if (!seed_catalog.empty()) {
        std::ifstream in(seed_catalog);
        if (!in) {
            std::cerr << "error: cannot read " << seed_catalog << "\n";
            return kExitUsage;
        }
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) cfg.extra_exprs.push_back(line);
    }
    Catalog catalog = build_catalog(engine, cfg);
    std::cout << (flags.json_output ? census_json(engine, catalog) : census_csv(engine, catalog));
    return kExitOk;
}

int cmd_verify(const CommonFlags& flags, const std::string& claims_arg,
               const std::string& seed_catalog) {
    Engine engine = make_engine(flags);
    std::vector<std::string> ids;
    if (!claims_arg.empty() && claims_arg != "all") {
        std::stringstream ss(claims_arg);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            if (!is_known_claim(id)) {
                std::cerr << "error: unknown claim id '" << id << "'\n";
                return kExitUsage;
            }
            ids.push_back(id);
        }
    }
    CatalogConfig cfg;
    cfg.max_order = flags.max_order;
    if (!seed_catalog.empty()) {
        std::ifstream in(seed_catalog);
        if (!in) {
            std::cerr << "error: cannot read " << seed_catalog << "\n";
            return kExitUsage;
        }
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) cfg.extra_exprs.push_back(line);
    }
    Catalog catalog = build_catalog(engine, cfg);
    Report report = run_suite(engine, catalog, ids);
    std::cout << (flags.json_output ? report_to_json(report) : report_to_table(report));
    return report.any_fail() ? kExitClaimFailure : kExitOk;
}

int cmd_save(const CommonFlags& flags, const std::string& expr, const std::string& path) {
    Engine engine = make_engine(flags);
    ExprAst ast = parse_expr(expr);
    Evaluated v = eval_expr(engine, ast);
    if (auto* r = std::get_if<FiniteRing>(&v))
        save_ring(*r, path);
    else
        save_group(std::get<FiniteGroup>(v), path);
    return kExitOk;
}

int cmd_load(const CommonFlags& flags, const std::string& path) {
    Engine engine = make_engine(flags);
    RingLimits lim;
    lim.max_order = flags.max_order;
    std::ifstream probe(path);
    if (!probe) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitUsage;
    }
    std::stringstream ss;
    ss << probe.rdbuf();
    const std::string text = ss.str();
    if (text.find("\"cayley\"") != std::string::npos) {
        FiniteGroup g = group_from_json(text, lim);
        std::cout << "group of order " << g.order() << ", identity " << g.identity() << "\n";
        return kExitOk;
    }
    FiniteRing r = ring_from_json(text, lim);
    const ClassificationRecord& rec = engine.classify(r);
    std::cout << record_to_json(rec, r.label());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ring classification and claim-audit toolkit"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string expr, path, only, claims_arg = "all", seed_catalog;

    CLI::App* describe = app.add_subcommand("describe", "order, characteristic and element sets");
    describe->add_option("expression", expr, "ring expression, e.g. GR(Z(3),C(3))")->required();
    add_common(describe, flags);

    CLI::App* classify = app.add_subcommand("classify", "class verdicts as JSON");
    classify->add_option("expression", expr)->required();
    classify->add_option("--only", only, "print a single class verdict (synonyms accepted)");
    add_common(classify, flags);

    CLI::App* verify = app.add_subcommand("verify", "audit the claim register over the catalog");
    verify->add_option("--claims", claims_arg, "comma-separated claim ids, or 'all'")
        ->capture_default_str();
    verify->add_option("--seed-catalog", seed_catalog,
                       "file with one extra catalog expression per line");
    add_common(verify, flags);

    CLI::App* census = app.add_subcommand("census", "one classification row per catalog ring");
    census->add_option("--seed-catalog", seed_catalog,
                       "file with one extra catalog expression per line");
    add_common(census, flags);

    CLI::App* save = app.add_subcommand("save", "evaluate an expression and write it as JSON");
    save->add_option("expression", expr)->required();
    save->add_option("path", path)->required();
    add_common(save, flags);

    CLI::App* load = app.add_subcommand("load", "read a ring file, revalidate and classify it");
    load->add_option("path", path)->required();
    add_common(load, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(describe)) return cmd_describe(flags, expr);
        if (app.got_subcommand(classify)) return cmd_classify(flags, expr, only);
        if (app.got_subcommand(verify)) return cmd_verify(flags, claims_arg, seed_catalog);
        if (app.got_subcommand(census)) return cmd_census(flags, seed_catalog);
        if (app.got_subcommand(save)) return cmd_save(flags, expr, path);
        if (app.got_subcommand(load)) return cmd_load(flags, path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownClaim& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        // construction failures (caps, axioms, bad element arguments)
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
    return kExitUsage;
}
