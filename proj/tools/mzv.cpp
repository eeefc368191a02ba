#include "mzv/basis.hpp"
#include "mzv/operators.hpp"
#include "mzv/parallel.hpp"
#include "mzv/parse.hpp"
#include "mzv/products.hpp"
#include "mzv/relations.hpp"
#include "mzv/table.hpp"
#include "mzv/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace mzv;

// "d3", "d3c", "dhat3c", "tau", "eps", "theta", "thetac", "thetahatc", "H",
// "phi2", "psi2", "sigma1", "Delta@6", "Deltainv@6", "Phi@6", "sigma@6",
// "sigmabar@6", "sigmainv@6", "D2", "Dbar2", "Lx", "Ly", "Rx", "Ry",
// "L:<word>", "R:<word>"
LinearOperator operator_from_descriptor(const std::string& desc) {
    auto starts = [&](const char* p) { return desc.rfind(p, 0) == 0; };
    auto num_after = [&](std::size_t off) { return std::stoi(desc.substr(off)); };

    if (desc == "tau") return tau_op();
    if (desc == "eps") return epsilon_op();
    if (desc == "theta") return theta_op();
    if (desc == "thetac") return theta_twisted_op(ThetaVariant::Standard);
    if (desc == "thetahatc") return theta_twisted_op(ThetaVariant::Hat);
    if (desc == "H") return degree_op();
    if (desc == "Lx") return mul_op(Side::Left, Word::letter_x());
    if (desc == "Ly") return mul_op(Side::Left, Word::letter_y());
    if (desc == "Rx") return mul_op(Side::Right, Word::letter_x());
    if (desc == "Ry") return mul_op(Side::Right, Word::letter_y());
    if (starts("L:")) return mul_op(Side::Left, parse_word(desc.substr(2)));
    if (starts("R:")) return mul_op(Side::Right, parse_word(desc.substr(2)));

    auto at = desc.find('@');
    if (at != std::string::npos) {
        std::string base = desc.substr(0, at);
        int W = std::stoi(desc.substr(at + 1));
        if (base == "Delta") return delta_endo(W);
        if (base == "Deltainv") return delta_inv_endo(W);
        if (base == "Phi") return cap_phi_endo(W);
        if (base == "sigma") return sigma_endo(W);
        if (base == "sigmainv") return sigma_inv_endo(W);
        if (base == "sigmabar") return sigma_bar_endo(W);
        throw DomainError("unknown truncated operator: " + base);
    }
    if (starts("dhat") && desc.back() == 'c')
        return quasi_derivation(ThetaVariant::Hat, std::stoi(desc.substr(4, desc.size() - 5)));
    if (starts("Dbar")) return derivation_Dbar(num_after(4));
    if (starts("D")) return derivation_Dn(num_after(1));
    if (starts("phi")) return phi_op(num_after(3));
    if (starts("psi")) return psi_op(num_after(3));
    if (starts("sigma")) {
        int l = num_after(5);
        return LinearOperator::from_elem_action(
            desc, [l](const Element& e) { return sigma_l_direct(l, e); });
    }
    if (starts("d") && desc.back() == 'c')
        return quasi_derivation(ThetaVariant::Standard,
                                std::stoi(desc.substr(1, desc.size() - 2)));
    if (starts("d")) return derivation_dn(num_after(1));
    throw DomainError("unknown operator descriptor: " + desc);
}

int cmd_rank_table(const TableSpec& spec, const std::string& format) {
    TableResult t = compute_rank_table(spec);
    std::cout << (format == "json" ? render_json(t) : render_tsv(t));
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CheckResult> results = run_suite(suite, opts);
    int failures = 0;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << r.name << " -- " << r.detail << "\n";
        }
    }
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
              << " (" << results.size() << " total)\n";
    return failures == 0 ? 0 : 1;
}

int cmd_apply(const std::string& desc, const std::string& input,
              const std::optional<std::string>& cvalue) {
    LinearOperator op = operator_from_descriptor(desc);
    Element image = op.apply(parse_element(input));
    if (cvalue) {
        Rat c(cvalue->c_str());
        c.canonicalize();
        image = image.eval_c(c);
    }
    std::cout << format_element(image) << "\n";
    return 0;
}

int cmd_relations(const std::string& family, int k, const std::string& out_path,
                  std::uint64_t seed, int jobs) {
    RelationSet rs = generate(family_from_name(family), k);
    std::string dump = dump_relations(rs);
    if (out_path.empty() || out_path == "-") {
        std::cout << dump;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << dump;
    }
    RankReport rep = rank(relation_matrix(rs), seed, jobs);
    std::cout << "family " << family_name(rs.family) << " weight " << k << ": " << rs.vectors.size()
              << " vectors, rank " << rep.rank << "\n";
    return 0;
}

int cmd_zeta(const std::string& word_text, long long N) {
    Word w = parse_word(word_text);
    ZetaApprox z = zeta_numeric(w, N);
    std::printf("%.12Lf (N=%lld, tail bound %.3Le)\n", z.value, z.terms, z.tail_bound);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact word-algebra toolkit for multiple zeta value relations"};
    app.require_subcommand(1);

    int jobs = 0;
    std::uint64_t seed = 0;
    app.add_option("--jobs", jobs, "worker threads (0 = hardware)");
    app.add_option("--seed", seed, "seed for randomized property subsets and modular primes");

    // rank-table
    auto* tbl = app.add_subcommand("rank-table", "ranks of the relation families per weight");
    TableSpec spec;
    std::string format = "tsv";
    std::string rows_csv;
    tbl->add_option("--rows", rows_csv, "comma-separated rows (default: all families)");
    tbl->add_option("--min-weight", spec.kmin, "first weight column (>= 3)");
    tbl->add_option("--max-weight", spec.kmax, "last weight column");
    tbl->add_flag("--allow-heavy", spec.allow_heavy, "allow weights 11-12 (long runtime)");
    tbl->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    // verify
    auto* ver = app.add_subcommand("verify", "run an identity suite, nonzero exit on failure");
    std::string suite = "all";
    VerifyOptions vopts;
    int single_weight = 0;
    ver->add_option("suite", suite, "core|operators|keyprop|inclusion|appendix|all");
    ver->add_option("--max-weight", vopts.max_weight, "exhaustive word-weight bound");
    ver->add_option("--n-max", vopts.n_max, "operator index bound");
    ver->add_option("--weight", single_weight, "run the inclusion suite at this single weight");
    ver->add_option("--comm-cap", vopts.comm_output_cap,
                    "composite output-weight cap for commutator/ad cross-checks");
    ver->add_option("--keyprop-weight", vopts.keyprop_weight, "key-proposition weight bound");
    ver->add_option("--keyprop-n-max", vopts.keyprop_nmax, "key-proposition index bound");

    // apply
    auto* ap = app.add_subcommand("apply", "apply an operator to an element");
    std::string desc, input;
    ap->add_option("operator", desc, "operator descriptor, e.g. d2c, tau, sigma1, Delta@6")
        ->required();
    ap->add_option("element", input, "element in the standard grammar")->required();
    std::string cvalue_raw;
    auto* copt = ap->add_option("--c", cvalue_raw, "evaluate the Q[c] output at this rational");

    // relations
    auto* rel = app.add_subcommand("relations", "dump a relation family and its rank");
    std::string family;
    int rel_weight = 3;
    std::string out_path;
    bool rel_heavy = false;
    rel->add_option("family", family, "duality|dn|dnc|ohno|link")->required();
    rel->add_option("-k,--weight", rel_weight, "weight")->required();
    rel->add_option("-o,--out", out_path, "output path (default stdout)");
    rel->add_flag("--allow-heavy", rel_heavy, "allow weights 11-12");

    // zeta
    auto* zt = app.add_subcommand("zeta", "truncated numeric value of an admissible word");
    std::string zword;
    long long terms = 100000;
    zt->add_option("word", zword, "admissible word, e.g. xxy")->required();
    zt->add_option("-N,--terms", terms, "truncation limit");

    CLI11_PARSE(app, argc, argv);
    mzv::set_default_jobs(jobs);

    try {
        if (*tbl) {
            spec.seed = seed;
            spec.jobs = jobs;
            spec.rows = default_table_rows();
            if (!rows_csv.empty()) {
                spec.rows.clear();
                std::string cur;
                for (char ch : rows_csv + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) spec.rows.push_back(cur);
                        cur.clear();
                    } else {
                        cur.push_back(ch);
                    }
                }
            }
            return cmd_rank_table(spec, format);
        }
        if (*ver) {
            vopts.jobs = jobs;
            vopts.seed = seed;
            if (single_weight > 0 && suite == "inclusion") {
                std::vector<CheckResult> results = suite_inclusion(vopts, {single_weight});
                int failures = 0;
                for (const auto& r : results) {
                    if (r.pass)
                        std::cout << "PASS " << r.name << "\n";
                    else {
                        ++failures;
                        std::cout << "FAIL " << r.name << " -- " << r.detail << "\n";
                    }
                }
                return failures == 0 ? 0 : 1;
            }
            return cmd_verify(suite, vopts);
        }
        if (*ap) return cmd_apply(desc, input, copt->count() ? std::optional(cvalue_raw) : std::nullopt);
        if (*rel) {
            int cap = rel_heavy ? 12 : 10;
            if (rel_weight < 3 || rel_weight > cap)
                throw DomainError("weight " + std::to_string(rel_weight) +
                                  " out of range; pass --allow-heavy for weights 11-12");
            return cmd_relations(family, rel_weight, out_path, seed, jobs);
        }
        if (*zt) return cmd_zeta(zword, terms);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
