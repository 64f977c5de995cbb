// Command-line front end: variety queries, projection verbs, pair calculus
// and batch files, with aligned text or JSON output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "secant/report.hpp"

namespace {

const char* kUsage = R"(secant -- dimensions, defects and degrees of higher secant varieties

usage: secant <subcommand> [args...] [flags...]

subcommands
  dim <variety> --k K            dimension record of S^K
  profile <variety> [--kmax K]   full defect profile up to K (default: to fill)
  degree <variety> --k K         degree bound report for S^K
  bound --h H --k K [--l L]      degree bound binom(H+K+1, K+1) [and multiplicity bound]
  project <kind> <variety> [--steps N]   kind: internal | tangential | ruling
  classify <variety> --k K       secant-class decision with evidence chain
  verify kl <variety> --k K --i I        projection-invariant check
  pair eval --model M --class C          lattice data for a divisor class
  pair classify --model M --class C      extremal-pair classification
  pair sweep [--model M] [--bound B]     extremal + almost-extremal sweeps
  sweep [--model M] [--bound B]          alias for pair sweep
  batch <file>                   newline-delimited queries, '#' comments

variety mini-language
  veronese n d | segre m1,...,mh | scroll a1,...,an
  bundle a1,...,an alpha beta | cone <expr> l | rnc r

models: p2, p2+t, f<a>, f<a>+t (t blown-up general points, t <= 8)
classes: comma-separated coefficients in the model basis
         (L;e1..et) on p2+t, (E,F;e1..et) on f<a>+t

flags: --k --kmax --i --steps --h --l --model --class --bound
       --prime P --seed S --trials N --backend fp|rational --json
env:   SECANT_PRIME, SECANT_SEED override the defaults
exit:  0 ok, 1 error, 2 result gated on absent metadata
)";

secant::EngineConfig base_config() {
    secant::EngineConfig cfg;
    if (const char* p = std::getenv("SECANT_PRIME")) cfg.prime = std::strtoull(p, nullptr, 10);
    if (const char* s = std::getenv("SECANT_SEED")) cfg.seed = std::strtoull(s, nullptr, 10);
    return cfg;
}

void emit(const secant::cli::RunResult& rr, bool json) {
    if (json) std::cout << rr.report.dump(2) << "\n";
    else std::cout << secant::cli::render_text(rr.report);
}

int run_batch(const std::string& path, const secant::EngineConfig& cfg, bool json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "batch: cannot open '" << path << "'\n";
        return secant::cli::kExitError;
    }
    auto rr = secant::cli::run_batch(in, path, cfg);
    if (json) {
        std::cout << rr.report.dump(2) << "\n";
        return rr.exit_code;
    }
    for (const auto& entry : rr.report["lines"]) {
        std::cout << "# line " << entry["line"] << ": " << entry["query"].get<std::string>()
                  << (entry.contains("error") ? "  [error: " + entry["error"].get<std::string>() + "]"
                                              : "")
                  << "\n";
        if (entry.contains("report")) std::cout << secant::cli::render_text(entry["report"]);
    }
    const auto& s = rr.report["summary"];
    std::cout << "summary: ok=" << s["ok"] << " failed=" << s["failed"]
              << " verify_pass=" << s["verify_pass"] << " verify_fail=" << s["verify_fail"] << "\n";
    return rr.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> tokens(argv + 1, argv + argc);
    if (tokens.empty() || tokens[0] == "--help" || tokens[0] == "-h" || tokens[0] == "help") {
        std::cout << kUsage;
        return 0;
    }
    bool json = false;
    for (auto it = tokens.begin(); it != tokens.end();)
        if (*it == "--json") {
            json = true;
            it = tokens.erase(it);
        } else {
            ++it;
        }

    try {
        if (tokens[0] == "batch") {
            if (tokens.size() < 2) {
                std::cerr << "batch: missing file path\n";
                return secant::cli::kExitError;
            }
            return run_batch(tokens[1], base_config(), json);
        }
        auto rr = secant::cli::run_query(tokens, base_config());
        emit(rr, json);
        return rr.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return secant::cli::kExitError;
    }
}
