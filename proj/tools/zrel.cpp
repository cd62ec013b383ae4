// zrel -- Z-relation toolkit for subsets of Z_N.
//
// Subcommands: ivec, zcheck, construct, enumerate, table, autgrp, export.
// Exit codes: 0 ok, 2 usage error, 3 domain error (precondition violated),
// 4 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zrel/constructors.hpp"
#include "zrel/enumeration.hpp"
#include "zrel/errors.hpp"
#include "zrel/homometry.hpp"
#include "zrel/json_out.hpp"
#include "zrel/levi.hpp"
#include "zrel/setlit.hpp"
#include "zrel/table1.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;
constexpr int exit_internal = 4;

struct Options {
    std::string command;
    std::string format = "text";
    int modulus = 0;
    int cardinality = -1;
    int workers = 1;
    std::string set_a, set_b, set_main;
    std::string rule;
    long long mult = 0;
    int param_n = 0, param_a = 0, param_k = 0;
    std::string n_range, k_range;
    std::string blocks_file;
    std::string what;
    std::string key = "ic";
};

std::pair<int, int> parse_range(const std::string& text) {
    auto parse_int = [](const std::string& tok) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw zrel::precondition_error("bad range component '" + tok +
                                           "'; expected lo:hi or a single value");
        return std::stoi(tok);
    };
    const size_t colon = text.find(':');
    if (colon == std::string::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
}

std::vector<zrel::PcSet> read_blocks_file(const std::string& path, int modulus) {
    std::ifstream in(path);
    if (!in)
        throw zrel::precondition_error("cannot open blocks file: " + path);
    std::vector<zrel::PcSet> blocks;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        line.erase(0, start);
        if (line.empty()) continue;
        blocks.push_back(zrel::parse_set(line, modulus));
    }
    if (blocks.empty())
        throw zrel::precondition_error("blocks file has no sets: " + path);
    return blocks;
}

void print_set_line(std::ostream& os, const char* label, const zrel::PcSet& s) {
    os << label << "{" << zrel::format_set(s) << "}  (Z_" << s.modulus() << ")\n";
}

int run_ivec(const Options& opt) {
    const zrel::PcSet a = zrel::parse_set(opt.set_main, opt.modulus);
    if (opt.format == "json") {
        std::cout << zrel::ivec_json(a).dump(2) << "\n";
        return exit_ok;
    }
    print_set_line(std::cout, "set:       ", a);
    std::cout << "iv:        " << zrel::format_counts(zrel::interval_vector(a).counts) << "\n";
    if (a.modulus() >= 2) {
        const zrel::IntervalContent ic = zrel::interval_content(a);
        std::cout << "ic:        " << zrel::format_ic(ic);
        const std::string compact = zrel::format_ic_compact(ic);
        if (!compact.empty()) std::cout << "  [" << compact << "]";
        std::cout << "\n";
    }
    std::cout << "patterson: " << zrel::to_string(zrel::patterson(a)) << "\n";
    std::cout << "canonical: {" << zrel::format_set(a.canonical()) << "}\n";
    return exit_ok;
}

int run_zcheck(const Options& opt) {
    const zrel::PcSet a = zrel::parse_set(opt.set_a, opt.modulus);
    const zrel::PcSet b = zrel::parse_set(opt.set_b, opt.modulus);
    if (opt.format == "json") {
        std::cout << zrel::zcheck_json(a, b).dump(2) << "\n";
        return exit_ok;
    }
    const zrel::HomometryVerdict v = zrel::classify(a, b);
    print_set_line(std::cout, "a: ", a);
    print_set_line(std::cout, "b: ", b);
    const char* kind = v.kind == zrel::HomometryKind::strict    ? "strict"
                       : v.kind == zrel::HomometryKind::trivial ? "trivial"
                                                                : "not-related";
    std::cout << "homometry:  " << kind << "\n";
    std::cout << "Z-related (strict reading): " << (v.strictly_related ? "yes" : "no") << "\n";
    if (v.related) {
        const zrel::IntervalContent ic = zrel::interval_content(a);
        std::cout << "ic:         " << zrel::format_ic(ic);
        const std::string compact = zrel::format_ic_compact(ic);
        if (!compact.empty()) std::cout << "  [" << compact << "]";
        std::cout << "\n";
    }
    return exit_ok;
}

int run_construct(const Options& opt) {
    std::optional<zrel::ZPair> pair;
    auto input_pair = [&] {
        const zrel::PcSet a = zrel::parse_set(opt.set_a, opt.modulus);
        const zrel::PcSet b = zrel::parse_set(opt.set_b, opt.modulus);
        return zrel::ZPair::checked(a, b);
    };
    if (opt.rule == "complement") {
        pair = zrel::complement_pair(input_pair());
    } else if (opt.rule == "multiply") {
        pair = zrel::multiply_pair(input_pair(), opt.mult);
    } else if (opt.rule == "replicate") {
        pair = zrel::replicate(input_pair(), static_cast<int>(opt.mult));
    } else if (opt.rule == "multiply-replicate") {
        pair = zrel::multiply_replicate(input_pair(), static_cast<int>(opt.mult));
    } else if (opt.rule == "rosenblatt-i") {
        pair = zrel::rosenblatt(zrel::RosenblattType::i, opt.param_n, opt.param_a);
    } else if (opt.rule == "rosenblatt-ii") {
        pair = zrel::rosenblatt(zrel::RosenblattType::ii, opt.param_n);
    } else if (opt.rule == "interlaced") {
        pair = zrel::interlaced_family(opt.param_k);
    } else if (opt.rule == "empirical-1") {
        pair = zrel::empirical_family(1, opt.param_n);
    } else if (opt.rule == "empirical-2") {
        pair = zrel::empirical_family(2, opt.param_n);
    } else {
        throw CLI::ValidationError("--rule", "unknown rule '" + opt.rule + "'");
    }
    if (opt.format == "json") {
        std::cout << zrel::pair_json(*pair).dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "rule:   " << pair->provenance().rule;
    for (const auto& [k, v] : pair->provenance().params) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    print_set_line(std::cout, "first:  ", pair->first());
    print_set_line(std::cout, "second: ", pair->second());
    const zrel::IntervalContent ic = zrel::interval_content(pair->first());
    std::cout << "ic:     " << zrel::format_ic(ic);
    const std::string compact = zrel::format_ic_compact(ic);
    if (!compact.empty()) std::cout << "  [" << compact << "]";
    std::cout << "\n";
    const zrel::HomometryVerdict v = zrel::classify(pair->first(), pair->second());
    std::cout << "kind:   " << (v.kind == zrel::HomometryKind::strict ? "strict" : "trivial")
              << "\n";
    return exit_ok;
}

int run_enumerate(const Options& opt) {
    const zrel::CensusKey key = opt.key == "patterson" ? zrel::CensusKey::patterson
                                                       : zrel::CensusKey::interval_content;
    const zrel::TupleCensus c = zrel::census(opt.modulus, opt.cardinality, opt.workers, key);
    if (opt.format == "json") {
        std::cout << zrel::census_json(c).dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "Z_" << c.modulus << ", " << c.cardinality << "-note classes: "
              << zrel::enum_classes(opt.modulus, opt.cardinality, opt.workers).size() << "\n";
    std::cout << "vectors with tuples: " << c.vectors_with_tuples << "\n";
    std::cout << "spectrum:";
    for (const auto& [t, count] : c.spectrum) std::cout << " " << t << ":" << count;
    std::cout << "\n";
    for (const zrel::HomometryTuple& t : c.tuples) {
        std::cout << "  ic " << zrel::format_ic(t.content) << " x" << t.multiplicity() << ":";
        for (const zrel::PcSet& s : t.classes) std::cout << " {" << zrel::format_set(s) << "}";
        std::cout << "\n";
    }
    return exit_ok;
}

int run_table(const Options& opt) {
    const auto [n_lo, n_hi] = parse_range(opt.n_range);
    const auto [k_lo, k_hi] = parse_range(opt.k_range);
    const zrel::CensusTable table = zrel::build_table(n_lo, n_hi, k_lo, k_hi, opt.workers);
    if (opt.format == "json") {
        std::cout << zrel::table_json(table).dump(2) << "\n";
    } else {
        // text and csv coincide: the CSV is the table
        std::cout << zrel::to_csv(table);
    }
    return exit_ok;
}

std::vector<zrel::PcSet> blocks_for(const Options& opt) {
    if (!opt.blocks_file.empty()) return read_blocks_file(opt.blocks_file, opt.modulus);
    if (opt.cardinality < 0)
        throw CLI::ValidationError("autgrp", "need --k or --blocks-file");
    const zrel::TupleCensus c = zrel::census(opt.modulus, opt.cardinality, opt.workers);
    std::vector<zrel::PcSet> blocks;
    for (const zrel::HomometryTuple& t : c.tuples)
        for (const zrel::PcSet& s : t.classes) blocks.push_back(s);
    if (blocks.empty())
        throw zrel::precondition_error("no homometric tuples in Z_" + std::to_string(opt.modulus) +
                                       " at cardinality " + std::to_string(opt.cardinality));
    return blocks;
}

int run_autgrp(const Options& opt) {
    const zrel::AutResult r = zrel::z_automorphism_group(opt.modulus, blocks_for(opt));
    if (opt.format == "json") {
        std::cout << zrel::autgrp_json(r).dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "points:        " << r.points << "\n";
    std::cout << "blocks:        " << r.blocks.size() << "\n";
    std::cout << "group order:   " << r.point_group.order() << "\n";
    std::cout << "generators (" << r.point_generators.size() << "):\n";
    for (const zrel::Permutation& p : r.point_generators) std::cout << "  " << p.cycles() << "\n";
    std::cout << "point orbits (" << r.point_orbits.size() << "):";
    for (const auto& orbit : r.point_orbits) {
        std::cout << " {";
        for (size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? "," : "") << orbit[i];
        std::cout << "}";
    }
    std::cout << "\n";
    std::cout << "block orbits:  " << r.block_orbits.size() << ", sizes";
    for (const auto& orbit : r.block_orbits) std::cout << " " << orbit.size();
    std::cout << "\n";
    return exit_ok;
}

int run_export(const Options& opt) {
    if (opt.what == "levi-dot") {
        std::vector<zrel::PcSet> blocks = blocks_for(opt);
        std::vector<zrel::PcSet> closed;
        for (const zrel::PcSet& b : blocks)
            for (const zrel::PcSet& img : zrel::dihedral_orbit(b)) closed.push_back(img);
        std::sort(closed.begin(), closed.end());
        closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
        std::cout << zrel::to_dot(zrel::build_levi(opt.modulus, closed));
        return exit_ok;
    }
    if (opt.what == "table1-report") {
        std::cout << zrel::to_string(zrel::verify_table1());
        return exit_ok;
    }
    throw CLI::ValidationError("--what", "unknown export '" + opt.what + "'");
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Z-relation toolkit for subsets of Z_N"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd, bool with_csv = false) {
        auto values = with_csv ? std::vector<std::string>{"text", "json", "csv"}
                               : std::vector<std::string>{"text", "json"};
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(values));
    };

    CLI::App* ivec = app.add_subcommand("ivec", "interval vector / content / Patterson of a set");
    ivec->add_option("--n", opt.modulus, "modulus N")->required();
    ivec->add_option("--set", opt.set_main, "set literal")->required();
    add_format(ivec);

    CLI::App* zcheck = app.add_subcommand("zcheck", "classify the homometry of two sets");
    zcheck->add_option("--n", opt.modulus, "modulus N")->required();
    zcheck->add_option("--a", opt.set_a, "first set")->required();
    zcheck->add_option("--b", opt.set_b, "second set")->required();
    add_format(zcheck);

    CLI::App* construct = app.add_subcommand("construct", "run a Z-pair constructor");
    construct->add_option("--rule", opt.rule,
                          "complement | multiply | replicate | multiply-replicate | "
                          "rosenblatt-i | rosenblatt-ii | interlaced | empirical-1 | empirical-2")
        ->required();
    construct->add_option("--n", opt.modulus, "modulus of input pair");
    construct->add_option("--a", opt.set_a, "input pair, first set");
    construct->add_option("--b", opt.set_b, "input pair, second set");
    construct->add_option("--m", opt.mult, "multiplier / replication count");
    construct->add_option("--nn", opt.param_n, "parameter n (rosenblatt, empirical)");
    construct->add_option("--aa", opt.param_a, "parameter a (rosenblatt type i)");
    construct->add_option("--k", opt.param_k, "parameter k (interlaced)");
    add_format(construct);

    CLI::App* enumerate = app.add_subcommand("enumerate", "census of homometric tuples at (N, k)");
    enumerate->add_option("--n", opt.modulus, "modulus N")->required();
    enumerate->add_option("--k", opt.cardinality, "cardinality k")->required();
    enumerate->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 64));
    enumerate->add_option("--key", opt.key, "grouping key: ic | patterson")
        ->check(CLI::IsMember({"ic", "patterson"}));
    add_format(enumerate);

    CLI::App* table = app.add_subcommand("table", "census table over N and k ranges");
    table->add_option("--n", opt.n_range, "modulus range lo:hi")->required();
    table->add_option("--k", opt.k_range, "cardinality range lo:hi")->required();
    table->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 64));
    add_format(table, true);

    CLI::App* autgrp = app.add_subcommand("autgrp", "automorphism group of a block family");
    autgrp->add_option("--n", opt.modulus, "modulus N")->required();
    autgrp->add_option("--k", opt.cardinality, "use the homometric family at cardinality k");
    autgrp->add_option("--blocks-file", opt.blocks_file, "file of set literals, one per line");
    autgrp->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 64));
    add_format(autgrp);

    CLI::App* exporter = app.add_subcommand("export", "emit auxiliary artifacts");
    exporter->add_option("--what", opt.what, "levi-dot | table1-report")->required();
    exporter->add_option("--n", opt.modulus, "modulus N");
    exporter->add_option("--k", opt.cardinality, "cardinality k");
    exporter->add_option("--blocks-file", opt.blocks_file, "file of set literals");
    exporter->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (ivec->parsed()) return run_ivec(opt);
        if (zcheck->parsed()) return run_zcheck(opt);
        if (construct->parsed()) return run_construct(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (table->parsed()) return run_table(opt);
        if (autgrp->parsed()) return run_autgrp(opt);
        if (exporter->parsed()) return run_export(opt);
        std::cerr << "no subcommand\n";
        return exit_usage;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const zrel::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const zrel::invariant_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
