// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 6 (determinism across --jobs) drives the installed CLI
// binary through the MZV_CLI environment variable.
#include "mzv/basis.hpp"
#include "mzv/linalg.hpp"
#include "mzv/operators.hpp"
#include "mzv/parse.hpp"
#include "mzv/relations.hpp"
#include "mzv/table.hpp"
#include "mzv/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace mzv;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int idx, const std::string& label, bool pass, double secs) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", idx, label.c_str(),
                secs);
    for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
    g_notes.clear();
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void note(const std::string& s) { g_notes.push_back(s); }

std::map<std::pair<Family, int>, RelationSet> g_sets;

const RelationSet& rel(Family f, int k) {
    auto key = std::make_pair(f, k);
    auto it = g_sets.find(key);
    if (it == g_sets.end()) it = g_sets.emplace(key, generate(f, k)).first;
    return it->second;
}

// --------------------------------------------------------------- criteria

void criterion1_table() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::size_t> want_dn = {1, 2, 5, 10, 22, 44, 90, 181};
    const std::vector<std::size_t> want_dnc = {1, 2, 5, 10, 23, 46, 98, 200};
    const std::vector<std::size_t> want_ohno = {1, 2, 5, 10, 23, 46, 98, 199};
    const std::vector<std::size_t> want_link = {1, 2, 5, 10, 23, 46, 98, 200};
    bool pass = true;
    for (int k = 3; k <= 10; ++k) {
        std::size_t idx = static_cast<std::size_t>(k - 3);
        struct FamRow {
            Family fam;
            std::size_t want;
            const char* name;
        } fams[] = {{Family::Derivation, want_dn[idx], "dn"},
                    {Family::QuasiDerivation, want_dnc[idx], "dnc"},
                    {Family::Ohno, want_ohno[idx], "ohno"},
                    {Family::KawashimaLinear, want_link[idx], "link"}};
        std::size_t link_rank = 0;
        for (const auto& f : fams) {
            QMatrix m = relation_matrix(rel(f.fam, k));
            RankReport certified = rank(m);
            std::size_t ff = rank_fraction_free(m);
            if (certified.rank != f.want || ff != f.want) {
                pass = false;
                note(std::string(f.name) + " rank at weight " + std::to_string(k) + ": certified " +
                     std::to_string(certified.rank) + ", fraction-free " + std::to_string(ff) +
                     ", expected " + std::to_string(f.want));
            }
            if (f.fam == Family::KawashimaLinear) link_rank = certified.rank;
        }
        QMatrix dual = relation_matrix(rel(Family::Duality, k));
        RankReport dual_certified = rank(dual);
        std::size_t dual_ff = rank_fraction_free(dual);
        if (dual_certified.rank != dual_ff) {
            pass = false;
            note("duality rank paths disagree at weight " + std::to_string(k));
        }
        if (dual_certified.rank > link_rank) {
            pass = false;
            note("duality rank " + std::to_string(dual_certified.rank) + " exceeds linK rank at " +
                 std::to_string(k));
        }
    }
    report(1, "table reproduction, weights 3-10, both rank paths", pass, elapsed(t0));
}

void criterion2_unions() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (int k = 3; k <= 10; ++k) {
        std::size_t link_rank = rank(relation_matrix(rel(Family::KawashimaLinear, k))).rank;
        std::size_t u1 = rank_union({&rel(Family::QuasiDerivation, k), &rel(Family::Ohno, k)}).rank;
        std::size_t u2 =
            rank_union({&rel(Family::QuasiDerivation, k), &rel(Family::KawashimaLinear, k)}).rank;
        std::size_t u3 = rank_union({&rel(Family::Ohno, k), &rel(Family::KawashimaLinear, k)}).rank;
        if (!(u1 == link_rank && u2 == link_rank && u3 == link_rank)) {
            pass = false;
            note("union ranks at weight " + std::to_string(k) + ": " + std::to_string(u1) + "," +
                 std::to_string(u2) + "," + std::to_string(u3) + " vs linK " +
                 std::to_string(link_rank));
        }
        if (k <= 9) {
            std::size_t rq = rank(relation_matrix(rel(Family::QuasiDerivation, k))).rank;
            std::size_t ro = rank(relation_matrix(rel(Family::Ohno, k))).rank;
            if (!(rq == link_rank && ro == link_rank)) {
                pass = false;
                note("family ranks differ at weight " + std::to_string(k));
            }
        }
    }
    { // weight 10: membership of both families in the lin-K span, Ohno gap by rank
        const RelationSet& link10 = rel(Family::KawashimaLinear, 10);
        SpanChecker span(link10.vectors, 10);
        std::size_t outside = 0;
        for (const auto& v : rel(Family::QuasiDerivation, 10).vectors)
            if (!span.contains(v)) ++outside;
        for (const auto& v : rel(Family::Ohno, 10).vectors)
            if (!span.contains(v)) ++outside;
        if (outside != 0) {
            pass = false;
            note(std::to_string(outside) + " vectors fall outside the lin-K span at weight 10");
        }
        std::size_t ro = rank(relation_matrix(rel(Family::Ohno, 10))).rank;
        if (!(ro == 199 && span.rank() == 200)) {
            pass = false;
            note("weight-10 gap: ohno " + std::to_string(ro) + ", linK " +
                 std::to_string(span.rank()));
        }
    }
    report(2, "union experiments and weight-10 containment", pass, elapsed(t0));
}

void criterion3_identities() {
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_weight = 8;
    opts.n_max = 5;
    opts.comm_output_cap = 12;
    opts.keyprop_weight = 5;
    opts.keyprop_nmax = 4;
    bool pass = true;
    for (const auto& r : suite_operators(opts)) {
        if (!r.pass) {
            pass = false;
            note(r.name + ": " + r.detail);
        }
    }
    for (const auto& r : suite_keyprop(opts)) {
        if (!r.pass) {
            pass = false;
            note(r.name + ": " + r.detail);
        }
    }
    note("commutator and ad-power cross-checks scheduled with composite output weight <= " +
         std::to_string(opts.comm_output_cap) + "; raise via `mzv verify --comm-cap`");
    report(3, "identity suite, weight <= 8, indices <= 5, symbolic c and c'", pass, elapsed(t0));
}

void criterion4_appendix() {
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_weight = 8;
    bool pass = true;
    for (const auto& r : suite_appendix(opts)) {
        if (!r.pass) {
            pass = false;
            note(r.name + ": " + r.detail);
        }
    }
    report(4, "appendix suite truncated at W = 8, span equalities to weight 9", pass, elapsed(t0));
}

void criterion5_numeric() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    const long long N = 100000;
    const double tol = 1e-3;
    int flagged_total = 0;
    double worst = 0.0;
    bool all_within_tail = true;
    for (int k = 3; k <= 6; ++k) {
        for (Family f : {Family::Duality, Family::Derivation, Family::QuasiDerivation,
                         Family::Ohno, Family::KawashimaLinear}) {
            const RelationSet& rs = rel(f, k);
            NumericReport rep = numeric_check(rs, N, tol);
            if (rep.ok) continue;
            pass = false;
            flagged_total += static_cast<int>(rep.flagged.size());
            // attribute every flagged residual to the truncation tail
            for (std::size_t i = 0; i < rs.vectors.size(); ++i) {
                long double acc = 0.0L, bound = 0.0L;
                for (const auto& t : rs.vectors[i].terms()) {
                    ZetaApprox z = zeta_numeric(t.word, N);
                    acc += static_cast<long double>(t.coeff.rat().get_d()) * z.value;
                    bound += std::fabs(static_cast<long double>(t.coeff.rat().get_d())) *
                             z.tail_bound;
                }
                double v = std::fabs(static_cast<double>(acc));
                if (v > worst) worst = v;
                if (v > tol && v > static_cast<double>(bound)) all_within_tail = false;
            }
        }
    }
    { // corrupted-vector negative control
        RelationSet bad{Family::Duality, 3, {parse_element("xxy + xyy")}, {"control"}};
        NumericReport rep = numeric_check(bad, N, 1.0);
        if (rep.ok) {
            pass = false;
            note("corrupted control was not flagged above 1.0");
        }
    }
    if (!pass) {
        note(std::to_string(flagged_total) + " vectors exceed tol=1e-3 at N=1e5; worst |value| = " +
             std::to_string(worst));
        note(std::string("every flagged residual lies inside its a-priori truncation tail bound: ") +
             (all_within_tail ? "yes" : "NO"));
        note("the m1 <= 1e5 truncation deficit of depth >= 4 indices (leading exponent 2) is");
        note("~(log N)^{depth-1}/N = 3.7e-3 at weight 5 and 1.2e-2 at weight 6, so the stated");
        note("tolerance cannot be met by the truncated series itself at these weights");
    }
    report(5, "numeric sanity at weights 3-6, N = 1e5, tol 1e-3", pass, elapsed(t0));
}

std::string run_cli(const std::string& cli, const std::string& args, const std::string& outfile,
                    bool& ok) {
    std::string cmd = cli + " " + args + " > " + outfile + " 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) ok = false;
    std::ifstream f(outfile, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion6_determinism() {
    auto t0 = std::chrono::steady_clock::now();
    const char* cli = std::getenv("MZV_CLI");
    bool pass = true;
    if (cli == nullptr || std::string(cli).empty()) {
        pass = false;
        note("MZV_CLI is not set; run through ctest");
    } else {
        const std::vector<std::string> commands = {
            "rank-table --min-weight 3 --max-weight 7",
            "rank-table --min-weight 3 --max-weight 6 --format json",
            "relations dnc -k 6",
            "verify appendix --max-weight 5",
            "verify core",
        };
        for (std::size_t i = 0; i < commands.size(); ++i) {
            bool ok = true;
            std::string a = run_cli(cli, "--jobs 1 " + commands[i],
                                    "det_a_" + std::to_string(i) + ".txt", ok);
            std::string b = run_cli(cli, "--jobs 2 " + commands[i],
                                    "det_b_" + std::to_string(i) + ".txt", ok);
            std::string c = run_cli(cli, "--jobs 4 " + commands[i],
                                    "det_c_" + std::to_string(i) + ".txt", ok);
            if (!ok) {
                pass = false;
                note("command failed: " + commands[i]);
            } else if (a != b || b != c) {
                pass = false;
                note("outputs differ across --jobs for: " + commands[i]);
            }
        }
    }
    report(6, "byte-identical outputs across --jobs values", pass, elapsed(t0));
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1_table();
    criterion2_unions();
    criterion3_identities();
    criterion4_appendix();
    criterion5_numeric();
    criterion6_determinism();
    std::printf("acceptance: %d/6 criteria passed (%.1fs total)\n", 6 - g_failures, elapsed(t0));
    return g_failures == 0 ? 0 : 1;
}
