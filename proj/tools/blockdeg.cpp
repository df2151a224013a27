// blockdeg: exact character tables, principal p-blocks, and the prime-power
// degree classification scans, from permutation generators alone.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "blockdeg/blocks.hpp"
#include "blockdeg/chartable.hpp"
#include "blockdeg/classifier.hpp"
#include "blockdeg/fixtures.hpp"
#include "blockdeg/json_io.hpp"
#include "blockdeg/numtheory.hpp"
#include "blockdeg/partitions.hpp"

using namespace blockdeg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    require(out.good(), "cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

void print_table(const chartable::CharacterTable& t) {
    const auto& cd = *t.classes;
    std::cout << "order: " << t.order << "\n";
    std::cout << "exponent: " << t.exponent << "  (dixon prime " << t.dixon_prime << ")\n";
    std::cout << "classes (" << cd.num_classes() << "):\n";
    std::cout << "  sizes:";
    for (auto s : cd.sizes) std::cout << " " << s;
    std::cout << "\n  orders:";
    for (auto o : cd.orders) std::cout << " " << o;
    std::cout << "\n  representatives:";
    for (unsigned k = 0; k < cd.num_classes(); ++k)
        std::cout << " " << permgroup::perm_to_cycles(cd.rep(k));
    std::cout << "\ndegrees:";
    for (auto d : t.degrees) std::cout << " " << d;
    std::cout << "\n";
}

void print_blocks(const chartable::CharacterTable& t, const blocks::BlockPartition& bp) {
    std::cout << "p = " << bp.p << ", " << bp.blocks.size() << " blocks\n";
    for (std::size_t b = 0; b < bp.blocks.size(); ++b) {
        std::cout << (b == bp.principal ? "B0 " : "   ") << "block " << b << ": degrees";
        for (unsigned c : bp.blocks[b])
            std::cout << " " << t.degrees[c] << "(d" << bp.defects[c] << ")";
        std::cout << "\n";
    }
    std::vector<u_int64_t> cd;
    for (unsigned c : bp.blocks[bp.principal]) cd.push_back(t.degrees[c]);
    std::sort(cd.begin(), cd.end());
    cd.erase(std::unique(cd.begin(), cd.end()), cd.end());
    std::cout << "cd(B0) = {";
    for (std::size_t i = 0; i < cd.size(); ++i) std::cout << (i ? ", " : " ") << cd[i];
    std::cout << " }\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-table and principal-block calculator"};
    app.require_subcommand(1);

    unsigned threads = 1;
    if (const char* env = std::getenv("BLOCKDEG_THREADS")) threads = std::strtoul(env, nullptr, 10);
    app.add_option("--threads", threads, "worker threads for table computation");

    std::string group_name, json_path;
    std::uint64_t prime = 2, bound = permgroup::kDefaultEnumerationBound;

    auto* cmd_table = app.add_subcommand("table", "character table of a named or file group");
    cmd_table->add_option("group", group_name, "fixture name or generator file")->required();
    cmd_table->add_option("--json", json_path, "write the full table as JSON");
    cmd_table->add_option("--bound", bound, "enumeration bound");

    auto* cmd_blocks = app.add_subcommand("blocks", "p-block partition and cd(B0)");
    cmd_blocks->add_option("group", group_name, "fixture name or generator file")->required();
    cmd_blocks->add_option("-p,--prime", prime, "the prime p")->required();
    cmd_blocks->add_option("--json", json_path, "write the block report as JSON");
    cmd_blocks->add_option("--bound", bound, "enumeration bound");

    std::uint64_t qmax = 9;
    bool with_oracle = false;
    auto* cmd_scan = app.add_subcommand("verify-theorem-a",
                                        "scan and verify the prime-power-degree pairs");
    cmd_scan->add_option("--qmax", qmax, "bound on the field size q")->required();
    cmd_scan->add_flag("--oracle", with_oracle, "confirm each pair with the block oracle");
    cmd_scan->add_option("--json", json_path, "write the verdicts as JSON");
    cmd_scan->add_option("--bound", bound, "enumeration bound for the oracle");

    std::uint64_t zs_q = 2, zs_n = 2;
    std::string zs_sign = "-";
    auto* cmd_zs = app.add_subcommand("zsigmondy", "smallest primitive prime divisor");
    cmd_zs->add_option("q", zs_q, "base")->required();
    cmd_zs->add_option("n", zs_n, "exponent")->required();
    cmd_zs->add_option("sign", zs_sign, "+ for q^n+1, - for q^n-1")->required();

    std::string part_str;
    std::uint64_t ecore_e = 1;
    auto* cmd_ecore = app.add_subcommand("ecore", "e-core of a partition");
    cmd_ecore->add_option("partition", part_str, "e.g. 4,2,1")->required();
    cmd_ecore->add_option("e", ecore_e, "hook length to strip")->required();

    std::uint64_t uni_q = 2;
    std::string uni_eps = "+";
    auto* cmd_uni = app.add_subcommand("unideg", "unipotent character degree (type A/2A)");
    cmd_uni->add_option("partition", part_str, "partition label")->required();
    cmd_uni->add_option("--q", uni_q, "field size")->required();
    cmd_uni->add_option("--eps", uni_eps, "+ for linear, - for unitary")->required();

    unsigned neigh_bound = 2;
    auto* cmd_neigh = app.add_subcommand("scan-neighbors",
                                         "powers of two with prime-power neighbors");
    cmd_neigh->add_option("exp_bound", neigh_bound, "largest exponent k of q = 2^k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInput;
    }

    set_thread_count(threads == 0 ? 1 : threads);

    try {
        if (*cmd_table) {
            auto g = fixtures::resolve_group(group_name);
            chartable::CharTableOptions opts;
            opts.bound = bound;
            auto t = chartable::character_table(g, opts);
            print_table(t);
            if (!json_path.empty()) write_json(json_path, json_io::table_to_json(t));
        } else if (*cmd_blocks) {
            auto g = fixtures::resolve_group(group_name);
            chartable::CharTableOptions opts;
            opts.bound = bound;
            auto t = chartable::character_table(g, opts);
            auto bp = blocks::block_partition(t, prime);
            print_blocks(t, bp);
            if (!json_path.empty()) write_json(json_path, json_io::blocks_to_json(t, bp));
        } else if (*cmd_scan) {
            classifier::ScanOptions opts;
            opts.qmax = qmax;
            opts.oracle = with_oracle;
            opts.bound = bound;
            auto verdicts = classifier::scan_theorem_a(opts);
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& v : verdicts) {
                std::cout << (v.accepted ? "accept " : "REJECT ") << v.group << "  p=" << v.p
                          << "  case " << (v.theorem_a_case ? *v.theorem_a_case : "-")
                          << "  method " << v.method << "  cd(B0)";
                if (v.method == "closed-form") std::cout << " within";
                std::cout << " {";
                for (std::size_t i = 0; i < v.cd_b0.size(); ++i)
                    std::cout << (i ? ", " : " ") << v.cd_b0[i];
                std::cout << " }  primes {";
                for (std::size_t i = 0; i < v.prime_divisors.size(); ++i)
                    std::cout << (i ? ", " : " ") << v.prime_divisors[i];
                std::cout << " }\n";
                arr.push_back(json_io::verdict_to_json(v));
            }
            std::cout << verdicts.size() << " pairs verified against the expected list\n";
            if (!json_path.empty()) write_json(json_path, arr);
        } else if (*cmd_zs) {
            require(zs_sign == "+" || zs_sign == "-", "sign must be + or -");
            auto sign = zs_sign == "+" ? numtheory::Sign::Plus : numtheory::Sign::Minus;
            auto z = numtheory::zsigmondy_prime(zs_q, zs_n, sign);
            if (z)
                std::cout << *z << "\n";
            else
                std::cout << "none (exception)\n";
        } else if (*cmd_ecore) {
            auto p = partitions::parse_partition(part_str);
            std::cout << partitions::partition_to_string(partitions::e_core(p, ecore_e)) << "\n";
        } else if (*cmd_uni) {
            require(uni_eps == "+" || uni_eps == "-" || uni_eps == "+1" || uni_eps == "-1",
                    "eps must be + or -");
            int eps = (uni_eps[0] == '-') ? -1 : 1;
            auto p = partitions::parse_partition(part_str);
            std::cout << partitions::unipotent_degree_A(p, uni_q, eps) << "\n";
        } else if (*cmd_neigh) {
            auto qs = numtheory::scan_even_neighbors(neigh_bound);
            std::cout << "{";
            for (std::size_t i = 0; i < qs.size(); ++i) std::cout << (i ? ", " : " ") << qs[i];
            std::cout << " }\n";
        }
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}
