// Command-line front end: parsing, Zhu-algebra products, reduction, membership
// certificates, the verification registry, and the conjecture probe.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fbzhu/verify.hpp"

using namespace fbz;

namespace {

constexpr int EXIT_UNKNOWN = 2;
constexpr int EXIT_FAILED = 3;

struct Common {
    int level = 2;
    int max_weight = -1;
    int ceiling = 64;
    bool as_json = false;
    std::string cache_dir;
    unsigned seed = 12345;
    std::string only;
    int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--level", c.level, "Zhu algebra level n");
    cmd->add_option("--max-weight", c.max_weight, "generator cutoff M");
    cmd->add_option("--ceiling", c.ceiling, "escalation ceiling for cutoffs");
    cmd->add_flag("--json", c.as_json, "emit JSON");
    cmd->add_option("--cache-dir", c.cache_dir, "span cache directory");
    cmd->add_option("--seed", c.seed, "seed for randomized sampling");
    cmd->add_option("--only", c.only, "restrict verification to one section");
    cmd->add_option("--jobs", c.jobs, "parallel verification jobs");
}

std::string cache_path(const Common& c, int level) {
    if (c.cache_dir.empty()) return "";
    std::filesystem::create_directories(c.cache_dir);
    return c.cache_dir + "/span_n" + std::to_string(level) + "_v1.txt";
}

void load_cache(const Common& c, int level) {
    std::string p = cache_path(c, level);
    if (!p.empty()) shared_engine(level).load(p);
}
void save_cache(const Common& c, int level) {
    std::string p = cache_path(c, level);
    if (!p.empty()) shared_engine(level).save(p);
}

std::string write_certificate(const Common& c, const Certificate& cert,
                              const std::string& stem) {
    std::string dir = c.cache_dir.empty() ? "." : c.cache_dir;
    std::filesystem::create_directories(dir);
    std::string path = dir + "/" + stem + ".cert.json";
    std::string tmp = path + ".tmp";
    std::ofstream f(tmp);
    f << certificate_json(cert) << "\n";
    f.close();
    std::filesystem::rename(tmp, path);
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact level-n Zhu algebra calculator for the rank-one free boson"};
    app.require_subcommand(1);

    Common c;

    auto* cmd_parse = app.add_subcommand("parse", "parse and reprint an element");
    std::string parse_text;
    cmd_parse->add_option("element", parse_text)->required();
    add_common(cmd_parse, c);

    auto* cmd_mul = app.add_subcommand("mul", "star product u *_n v");
    std::string mul_lhs, mul_rhs;
    cmd_mul->add_option("lhs", mul_lhs)->required();
    cmd_mul->add_option("rhs", mul_rhs)->required();
    add_common(cmd_mul, c);

    auto* cmd_circ = app.add_subcommand("circ", "circle product u o_n v");
    std::string circ_lhs, circ_rhs;
    cmd_circ->add_option("lhs", circ_lhs)->required();
    cmd_circ->add_option("rhs", circ_rhs)->required();
    add_common(cmd_circ, c);

    auto* cmd_reduce = app.add_subcommand("reduce", "rewrite modulo O_2 in the five generators");
    std::string reduce_text;
    cmd_reduce->add_option("element", reduce_text)->required();
    add_common(cmd_reduce, c);

    auto* cmd_member = app.add_subcommand("member", "membership certificate for O_n");
    std::string member_text;
    int member_filtration = -1;
    cmd_member->add_option("element", member_text)->required();
    cmd_member->add_option("--plus-filtration", member_filtration,
                           "adjoin the F_r(|0>) span for the given r");
    add_common(cmd_member, c);

    auto* cmd_witness = app.add_subcommand("witness", "zero-mode non-membership witness");
    std::string witness_text;
    cmd_witness->add_option("expr", witness_text)->required();
    add_common(cmd_witness, c);

    auto* cmd_verify = app.add_subcommand("verify", "run registry checks");
    std::string verify_id;
    bool verify_all_flag = false;
    int verify_budget = 64;
    cmd_verify->add_flag("--all", verify_all_flag);
    cmd_verify->add_option("id", verify_id);
    cmd_verify->add_option("--budget", verify_budget, "cutoff ceiling for memberships");
    add_common(cmd_verify, c);

    auto* cmd_conj = app.add_subcommand("conjecture", "graded corank probe");
    int conj_n = 2, conj_M = 6;
    cmd_conj->add_option("n", conj_n)->required();
    cmd_conj->add_option("M", conj_M)->required();
    add_common(cmd_conj, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            std::cout << print_element(parse_element(parse_text)) << "\n";
            return 0;
        }
        if (*cmd_mul) {
            FockVec u = parse_element(mul_lhs), v = parse_element(mul_rhs);
            std::cout << print_element(star_n(u, v, c.level)) << "\n";
            return 0;
        }
        if (*cmd_circ) {
            FockVec u = parse_element(circ_lhs), v = parse_element(circ_rhs);
            std::cout << print_element(circ_n(u, v, c.level)) << "\n";
            return 0;
        }
        if (*cmd_reduce) {
            load_cache(c, 2);
            FockVec v = parse_element(reduce_text);
            Reduction red = reduce_level2(v, c.ceiling);
            std::string path = write_certificate(c, red.cert, "reduce");
            if (c.as_json) {
                std::cout << "{\"poly\": \"" << red.poly.str() << "\", \"certificate\": \""
                          << path << "\"}\n";
            } else {
                std::cout << red.poly.str() << "\n";
                std::cout << "certificate: " << path << "\n";
            }
            save_cache(c, 2);
            return 0;
        }
        if (*cmd_member) {
            load_cache(c, c.level);
            FockVec v = parse_element(member_text);
            int M = c.max_weight > 0 ? c.max_weight : v.top_weight() + 2 * c.level + 2;
            std::vector<FockVec> extras;
            if (member_filtration >= 0)
                extras = filtration_basis(member_filtration, FockVec::vacuum(), v.top_weight());
            MembershipOutcome out = membership(v, c.level, M, extras);
            save_cache(c, c.level);
            if (!out.proven) {
                std::cout << "unknown\n";
                std::cerr << "no certificate within cutoff " << M
                          << "; a nonzero class may be witnessed via the witness command\n";
                return EXIT_UNKNOWN;
            }
            std::string path = write_certificate(c, out.cert, "member");
            if (c.as_json) std::cout << certificate_json(out.cert) << "\n";
            else std::cout << "proven, cutoff " << out.cutoff << ", certificate: " << path << "\n";
            return 0;
        }
        if (*cmd_witness) {
            GenPoly p = parse_genpoly(witness_text);
            auto w = nonmembership_witness(p, c.level);
            if (!w) {
                std::cout << "NotFound\n";
                return EXIT_UNKNOWN;
            }
            std::cout << w->text << "\n";
            return 0;
        }
        if (*cmd_verify) {
            Budget b;
            b.ceiling = verify_budget;
            b.seed = c.seed;
            load_cache(c, 1);
            load_cache(c, 2);
            Report rep;
            if (verify_all_flag) {
                rep = verify_all(b, c.only, c.jobs);
            } else {
                if (verify_id.empty()) {
                    std::cerr << "verify: need an id or --all\n";
                    return EXIT_FAILED;
                }
                rep.entries.push_back(verify(verify_id, b));
                switch (rep.entries[0].status) {
                    case Status::Proven: rep.proven = 1; break;
                    case Status::Reproduced: rep.reproduced = 1; break;
                    case Status::Unknown: rep.unknown = 1; break;
                    case Status::Failed: rep.failed = 1; break;
                }
            }
            save_cache(c, 1);
            save_cache(c, 2);
            std::cout << (c.as_json ? report_json(rep) : report_text(rep));
            return rep.failed ? EXIT_FAILED : 0;
        }
        if (*cmd_conj) {
            ProbeReport r = conjecture_probe(conj_n, conj_M);
            std::cout << (c.as_json ? probe_json(r) : probe_text(r));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_FAILED;
    }
    return 0;
}
