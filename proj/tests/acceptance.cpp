// Acceptance run: one PASS/FAIL line per criterion. Optional arguments pick
// criteria by number, e.g. `acceptance 1 4 7`.

#include "sw/corpus.hpp"
#include "sw/scan.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace sw;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Runs one scan and folds it into the outcome; counterexamples go to stderr.
ScanReport run(const ScanSpec& s, Outcome& out) {
    const auto rep = run_scan(s, [](const Json& cx) { std::cerr << cx.dump() << "\n"; });
    if (!rep.ok()) out.pass = false;
    return rep;
}

ScanSpec spec(const std::string& check, std::vector<int> ps, int n = 3, int f = 1, int e = 1) {
    ScanSpec s;
    s.check = check;
    s.ps = std::move(ps);
    s.n = n;
    s.f = f;
    s.e = e;
    return s;
}

Outcome gl3_comparison() {
    Outcome o;
    const auto r = run(spec("gl3-comparison", {5, 7}), o);
    o.detail = std::to_string(r.checked) + " types at p = 5, 7, " + std::to_string(r.violations) + " mismatches";
    return o;
}

Outcome irregular_tables() {
    Outcome o;
    const auto r = run(spec("tables", {5, 7}), o);
    o.detail = std::to_string(r.checked) + " shape instances at p = 5, 7, " + std::to_string(r.violations) +
               " mismatches";
    return o;
}

Outcome nonempty() {
    Outcome o;
    std::size_t types = 0, witness_only = 0;
    for (int p : {3, 5})
        for (int n = 1; n <= 4; ++n)
            for (int f = 1; f <= 2; ++f)
                for (int e = 1; e <= 2; ++e) {
                    const auto r = run(spec("nonempty", {p}, n, f, e), o);
                    types += r.checked;
                    for (const auto& [k, v] : r.info.items())
                        for (const auto& [c, m] : v.items()) witness_only += m.at("mode") == "witness";
                }
    auto d = spec("digits", {3, 5, 7}, 4, 2);
    const auto r = run(d, o);
    o.detail = std::to_string(types) + " types (" + std::to_string(witness_only) +
               " contexts checked by verified witness only); " + std::to_string(r.checked) +
               " digit classes d <= 4, f <= 2, p = 3, 5, 7; " + std::to_string(r.violations) + " digit failures";
    return o;
}

Outcome yewang() {
    Outcome o;
    auto s = spec("yewang", {5});
    s.max_d = 6;
    const auto r = run(s, o);
    const auto& info = r.info.at("p=5");
    const std::size_t related = info.at("related_pairs").get<std::size_t>();
    if (related == 0) o.pass = false;
    o.detail = std::to_string(info.at("points").get<std::size_t>()) + " dominant alcoves with d <= 6, " +
               std::to_string(related) + " related pairs, " + std::to_string(r.violations) + " failures";
    return o;
}

Outcome main_result() {
    Outcome o;
    auto s = spec("main-result", {37});
    s.delta = 6;
    const auto r = run(s, o);
    const auto& info = r.info.at("p=37");
    const auto generic = info.at("generic_types").get<std::size_t>();
    if (generic == 0) o.pass = false;
    o.detail = std::to_string(generic) + " of " + std::to_string(info.at("types").get<std::size_t>()) +
               " types are 6-generic, " + std::to_string(r.violations) +
               " failures; identity holds for every type of genericity > " +
               std::to_string(info.at("minimal_delta").get<std::int64_t>());
    return o;
}

Outcome adp_subset() {
    Outcome o;
    auto s = spec("adp-subset", {37});
    s.delta = 6;
    const auto r = run(s, o);
    const auto generic = r.info.at("p=37").at("generic_types").get<std::size_t>();
    if (generic == 0) o.pass = false;
    o.detail = std::to_string(generic) + " 6-generic types at p = 37, " + std::to_string(r.violations) + " failures";
    return o;
}

Outcome fixtures() {
    Outcome o;
    const auto r = verify_examples();
    for (const auto& m : r.mismatches) std::cerr << m.where << ": " << m.detail << "\n";
    o.pass = r.ok() && r.checked > 0;
    o.detail = std::to_string(r.checked) + " fixture checks, " + std::to_string(r.mismatches.size()) + " mismatches";
    return o;
}

Outcome structural() {
    Outcome o;
    std::size_t checked = 0, bad = 0;
    for (const Context& c : {Context{5, 1, 1, 3}, Context{7, 1, 1, 3}, Context{3, 2, 1, 3}, Context{3, 1, 2, 3},
                             Context{5, 1, 2, 2}, Context{5, 2, 1, 2}, Context{5, 1, 1, 2}}) {
        const auto r = run(spec("structural", {c.p}, c.n, c.f, c.e), o);
        checked += r.checked;
        bad += r.violations;
    }
    o.detail = std::to_string(checked) + " property instances over 7 contexts, " + std::to_string(bad) + " failures";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"GL3 comparison: regular explicit weights equal W? (p = 5, 7)", gl3_comparison},
        {"irregular tables equal the explicit weights (p = 5, 7)", irregular_tables},
        {"obvious weights exist for every type; digit witnesses", nonempty},
        {"up-related dominant alcoves: unit chains and up = double up", yewang},
        {"generic agreement W?_generic = W_expl = C(W_obv) at p = 37, delta = 6", main_result},
        {"ADP weights lie in W_expl at p = 37, delta = 6", adp_subset},
        {"worked example fixtures", fixtures},
        {"structural properties", structural},
    };
    std::set<int> pick;
    for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        if (!pick.empty() && !pick.count(k)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (o.pass ? "PASS" : "FAIL") << " [" << k << "] " << criteria[i].first << " -- " << o.detail << " ("
             << secs << " s)";
        std::cout << line.str() << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
