// swcli: predictors for a tame type, exhaustive scans, corpus replay and
// digit witnesses. Exit codes: 0 pass, 1 violation, 2 input error,
// 3 unsupported, 4 internal error.

#include "sw/corpus.hpp"
#include "sw/digit_witness.hpp"
#include "sw/json_io.hpp"
#include "sw/parallel.hpp"
#include "sw/scan.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace sw;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << j.dump(2) << "\n";
}

// Fills one predictor into the result; false if the context does not support it.
bool add_set(Json& res, const std::string& name, const TameType& t, bool strict) {
    try {
        if (name == "obv") {
            res["w_obv"] = weight_set_json(w_obv(t));
        } else if (name == "closure") {
            res["closure"] = weight_set_json(closure_C(w_obv(t), t.ctx));
        } else if (name == "expl") {
            res["w_expl"] = weight_set_json(w_expl(t));
        } else if (name == "wq") {
            const bool gl3 = t.ctx.n == 3 && t.ctx.f == 1 && t.ctx.e == 1;
            res["w_q"] = weight_set_json(gl3 ? w_q_gl3(t) : w_q_generic(t));
        } else if (name == "wq-generic") {
            res["w_q_generic"] = weight_set_json(w_q_generic(t));
        } else if (name == "adp") {
            res["adp"] = weight_set_json(adp_weights(t));
        } else if (name == "classify") {
            const auto obv = w_obv(t);
            const auto cl = closure_C(obv, t.ctx);
            const auto ex = w_expl(t);
            WeightSet shadow, obscure;
            std::set_difference(cl.begin(), cl.end(), obv.begin(), obv.end(), std::inserter(shadow, shadow.end()));
            std::set_difference(ex.begin(), ex.end(), cl.begin(), cl.end(), std::inserter(obscure, obscure.end()));
            res["shadow"] = weight_set_json(shadow);
            res["obscure"] = weight_set_json(obscure);
        }
        return true;
    } catch (const Unsupported&) {
        if (strict) throw;
        return false;
    }
}

int cmd_compute(const std::string& file, const std::string& set, std::int64_t delta) {
    const TameType t = type_from_json(parse_json_text(read_input(file), file));
    Json res{{"type", type_json(t)}};
    if (set == "all") {
        Json skipped = Json::array();
        for (const char* name : {"obv", "closure", "expl", "wq", "wq-generic", "adp", "classify"})
            if (!add_set(res, name, t, false)) skipped.push_back(name);
        if (!skipped.empty()) res["unsupported"] = skipped;
    } else {
        add_set(res, set, t, true);
    }
    const std::int64_t d = delta < 0 ? t.ctx.n : delta;
    try {
        res["genericity"] = Json{{"delta", d}, {"is_generic", is_delta_generic(t, d)}, {"depth", genericity(t)}};
    } catch (const Unsupported&) {
    }
    std::cout << res.dump(2) << "\n";
    return 0;
}

int cmd_scan(const ScanSpec& spec, const std::string& out) {
    const ScanReport rep = run_scan(spec, [](const Json& cx) { std::cerr << cx.dump() << "\n"; });
    emit(rep.to_json(), out);
    std::cerr << spec.check << ": " << rep.checked << " checked, " << rep.violations << " violations\n";
    return rep.ok() ? 0 : 1;
}

int cmd_verify_corpus(const std::vector<int>& ps, const std::string& out) {
    Json report{{"tables", Json::object()}};
    std::size_t bad = 0;
    auto list = [&](const CorpusReport& r) {
        Json m = Json::array();
        for (const auto& x : r.mismatches) {
            std::cerr << x.where << ": " << x.detail << "\n";
            m.push_back(Json{{"where", x.where}, {"detail", x.detail}});
        }
        bad += r.mismatches.size();
        return Json{{"checked", r.checked}, {"mismatches", m}};
    };
    for (int p : ps) report["tables"]["p=" + std::to_string(p)] = list(verify_irregular_tables(p));
    report["examples"] = list(verify_examples());
    report["ok"] = bad == 0;
    emit(report, out);
    return bad == 0 ? 0 : 1;
}

int cmd_digits(int d, int f, int p, std::int64_t N) {
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
    if (d < 1 || f < 1) throw InputError("d and f must be positive");
    const auto w = construct(d, f, p, N);
    if (!verify(w, N)) {
        std::cerr << "constructed digits fail verification\n";
        return 1;
    }
    std::cout << Json{{"d", d}, {"f", f}, {"p", p}, {"N", N}, {"x", w.x}, {"chains", w.chains}}.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serre weight predictors for tame types"};
    app.require_subcommand(1);

    std::string type_file, set = "all", out;
    std::int64_t delta = -1;
    auto* compute = app.add_subcommand("compute", "predicted weight sets for a type given as JSON");
    compute->add_option("type", type_file, "type JSON file, - for stdin")->required();
    compute->add_option("--set", set, "predictor subset")
        ->check(CLI::IsMember({"obv", "closure", "expl", "wq", "wq-generic", "adp", "all"}));
    compute->add_option("--delta", delta, "genericity threshold (default n)");

    ScanSpec spec;
    auto* scan = app.add_subcommand("scan", "exhaustive check over every type in range");
    scan->add_option("--check", spec.check, "check name")->required()->check(CLI::IsMember(scan_checks()));
    scan->add_option("--p", spec.ps, "primes")->delimiter(',');
    scan->add_option("--n", spec.n, "dimension, or largest niveau for digits");
    scan->add_option("--f", spec.f, "residue degree, or largest one for digits");
    scan->add_option("--e", spec.e, "ramification index");
    scan->add_option("--delta", spec.delta, "genericity threshold (default n)");
    scan->add_option("--max-d", spec.max_d, "largest alcove index for yewang");
    scan->add_option("--jobs", spec.jobs, "worker threads (default SW_JOBS, then all cores)");
    scan->add_option("--out", out, "report file (default stdout)");

    std::vector<int> corpus_ps{5};
    auto* corpus = app.add_subcommand("verify-corpus", "replay the irregular tables and the worked examples");
    corpus->add_option("--p", corpus_ps, "primes for the tables")->delimiter(',');
    corpus->add_option("--out", out, "report file (default stdout)");

    int d = 1, f = 1, p = 5;
    std::int64_t N = 0;
    auto* digits = app.add_subcommand("digits", "digit witnesses");
    digits->require_subcommand(1);
    auto* witness = digits->add_subcommand("witness", "digits with strict chains of gaps at most p for a class");
    witness->add_option("--d", d)->required();
    witness->add_option("--f", f)->required();
    witness->add_option("--p", p)->required();
    witness->add_option("--n", N, "the residue class N")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*compute) return cmd_compute(type_file, set, delta);
        if (*scan) {
            if (spec.jobs > 0) set_default_jobs(spec.jobs);
            return cmd_scan(spec, out);
        }
        if (*corpus) return cmd_verify_corpus(corpus_ps, out);
        if (*witness) return cmd_digits(d, f, p, N);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
