#include "combrank/cli.hpp"

#include <array>
#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "combrank/composition.hpp"
#include "combrank/ksubset.hpp"
#include "combrank/numerics.hpp"
#include "combrank/permutation.hpp"
#include "combrank/setpartition.hpp"
#include "combrank/subset.hpp"

namespace combrank {

namespace {

enum class Family { permutation, composition, setpartition, ksubset, subset };

const std::vector<std::string> kFamilyNames = {"permutation", "composition",
                                               "setpartition", "ksubset", "subset"};

Family family_from(const std::string& name) {
    if (name == "permutation") return Family::permutation;
    if (name == "composition") return Family::composition;
    if (name == "setpartition") return Family::setpartition;
    if (name == "ksubset") return Family::ksubset;
    if (name == "subset") return Family::subset;
    throw std::invalid_argument("unknown family '" + name + "'");
}

bool family_takes_k(Family f) {
    return f == Family::composition || f == Family::ksubset;
}

int to_int(const std::string& flag, long long value) {
    if (value < 0 || value > std::numeric_limits<int>::max())
        throw std::invalid_argument(flag + ": value out of range");
    return static_cast<int>(value);
}

Serial parse_serial_text(const std::string& flag, const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(flag + ": expected an unsigned decimal integer, got '" +
                                    text + "'");
    return Serial(text);
}

// Wire format: decimal integers joined by commas, no spaces.
std::vector<int> parse_vector_text(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string token =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        std::size_t digits = token.size();
        if (!token.empty() && token[0] == '-') --digits;
        if (digits == 0 ||
            token.find_first_not_of("0123456789", token[0] == '-' ? 1 : 0) != std::string::npos)
            throw std::invalid_argument("--vector: bad component '" + token + "'");
        try {
            const long long v = std::stoll(token);
            out.push_back(to_int("--vector", v));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("--vector: component '" + token + "' out of range");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join_vector(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

Count family_count(Family f, int n, int k) {
    switch (f) {
        case Family::permutation: return count_permutations(n);
        case Family::composition: return count_compositions(n, k);
        case Family::setpartition: return count_setpartitions(n);
        case Family::ksubset: return count_ksubsets(n, k);
        case Family::subset: return count_subsets(n);
    }
    throw std::logic_error("unreachable");
}

std::vector<int> family_unrank(Family f, const Serial& s, int n, int k) {
    switch (f) {
        case Family::permutation: return unrank_permutation(s, n);
        case Family::composition: return unrank_composition(s, n, k);
        case Family::setpartition: return unrank_setpartition(s, n);
        case Family::ksubset: return unrank_ksubset(s, n, k);
        case Family::subset: return unrank_subset(s, n);
    }
    throw std::logic_error("unreachable");
}

// One JSON object per output line; serial as a decimal string so arbitrary
// precision survives any parser.
nlohmann::ordered_json make_object(const std::string& family, int n, int k,
                                   const Serial& serial, const std::vector<int>& vec,
                                   bool with_stylized, const std::string& stylized_text) {
    nlohmann::ordered_json obj;
    obj["family"] = family;
    obj["n"] = n;
    if (k >= 0) obj["k"] = k;
    obj["serial"] = serial.str();
    obj["vector"] = vec;
    if (with_stylized) obj["stylized"] = stylized_text;
    return obj;
}

void emit_unranked(std::ostream& out, const std::string& format, Family f,
                   const std::string& family, int n, int k, const Serial& serial,
                   const std::vector<int>& vec, bool stylized) {
    const bool is_partition = f == Family::setpartition;
    if (format == "json") {
        out << make_object(family, n, is_partition ? -1 : k, serial, vec, is_partition,
                           is_partition ? stylize(vec) : std::string())
                   .dump()
            << "\n";
    } else if (is_partition && stylized) {
        out << stylize(vec) << "\n";
    } else {
        out << join_vector(vec) << "\n";
    }
}

// ---------------------------------------------------------------------------
// Self-test fixtures: the golden rows the library must reproduce exactly.

struct PermRow {
    std::array<int, 4> p;
    std::array<int, 3> d;
};

constexpr std::array<PermRow, 24> kPermTable4 = {{
    {{1, 2, 3, 4}, {0, 0, 0}}, {{2, 1, 3, 4}, {1, 0, 0}}, {{3, 1, 2, 4}, {1, 1, 0}},
    {{1, 3, 2, 4}, {0, 1, 0}}, {{2, 3, 1, 4}, {0, 2, 0}}, {{3, 2, 1, 4}, {1, 2, 0}},
    {{4, 2, 1, 3}, {1, 2, 1}}, {{2, 4, 1, 3}, {0, 2, 1}}, {{1, 4, 2, 3}, {0, 1, 1}},
    {{4, 1, 2, 3}, {1, 1, 1}}, {{2, 1, 4, 3}, {1, 0, 1}}, {{1, 2, 4, 3}, {0, 0, 1}},
    {{1, 3, 4, 2}, {0, 0, 2}}, {{3, 1, 4, 2}, {1, 0, 2}}, {{4, 1, 3, 2}, {1, 1, 2}},
    {{1, 4, 3, 2}, {0, 1, 2}}, {{3, 4, 1, 2}, {0, 2, 2}}, {{4, 3, 1, 2}, {1, 2, 2}},
    {{4, 3, 2, 1}, {1, 2, 3}}, {{3, 4, 2, 1}, {0, 2, 3}}, {{2, 4, 3, 1}, {0, 1, 3}},
    {{4, 2, 3, 1}, {1, 1, 3}}, {{3, 2, 4, 1}, {1, 0, 3}}, {{2, 3, 4, 1}, {0, 0, 3}},
}};

const std::vector<std::vector<long long>> kDTable6 = {
    {203, 151, 77, 26, 6, 1}, {52, 37, 17, 5, 1}, {15, 10, 4, 1}, {5, 3, 1}, {2, 1}, {1}};

bool check_permutation_table() {
    for (int s = 1; s <= 24; ++s) {
        const PermRow& row = kPermTable4[s - 1];
        const std::vector<int> p(row.p.begin(), row.p.end());
        const std::vector<int> d(row.d.begin(), row.d.end());
        if (unrank_permutation(s, 4) != p) return false;
        if (serial_to_offset(s, 4) != d) return false;
        if (rank_permutation(p) != s) return false;
        if (offset_to_serial(d) != s) return false;
        if (permutation_to_offset(p) != d) return false;
        if (offset_to_permutation(d) != p) return false;
    }
    return true;
}

bool check_permutation_serial32() {
    const std::vector<int> p = {3, 5, 1, 2, 4};
    const std::vector<int> d = {0, 2, 2, 1};
    return unrank_permutation(32, 5) == p && serial_to_offset(32, 5) == d &&
           rank_permutation(p) == 32 && permutation_to_offset(p) == d;
}

bool check_offset_serial23() {
    const std::vector<int> d = {1, 0, 3};
    const std::vector<int> p = {3, 2, 4, 1};
    return offset_to_serial(d) == 23 && offset_to_permutation(d) == p;
}

bool check_composition_serial283() {
    const std::vector<int> c = {1, 0, 2, 1, 3};
    return unrank_composition(283, 7, 5) == c && rank_composition(c) == 283;
}

bool check_d_matrix6() {
    const DMatrix d(6);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v + u <= 5; ++v)
            if (d.entry(u, v) != kDTable6[u][v]) return false;
    return true;
}

bool check_setpartition_serial26() {
    const std::vector<int> blocks = {0, 1, 1, 0, 0};
    return unrank_setpartition(26, 5) == blocks && rank_setpartition(blocks) == 26 &&
           stylize(blocks) == "(1, 4, 5)(2, 3)";
}

bool check_roundtrip_permutations() {
    for (int m = 1; m <= 5; ++m) {
        const Count total = count_permutations(m);
        for (Serial s = 1; s <= total; ++s)
            if (rank_permutation(unrank_permutation(s, m)) != s) return false;
    }
    return true;
}

bool check_roundtrip_compositions() {
    for (int n = 0; n <= 7; ++n)
        for (int k = 1; n + k <= 8; ++k) {
            const Count total = count_compositions(n, k);
            for (Serial s = 1; s <= total; ++s)
                if (rank_composition(unrank_composition(s, n, k)) != s) return false;
        }
    return true;
}

bool check_roundtrip_setpartitions() {
    for (int n = 1; n <= 6; ++n) {
        const DMatrix d(n);
        const Count total = count_setpartitions(n);
        for (Serial s = 1; s <= total; ++s)
            if (rank_setpartition(unrank_setpartition(s, d), d) != s) return false;
    }
    return true;
}

bool check_roundtrip_ksubsets() {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            const Count total = count_ksubsets(n, k);
            for (Serial s = 1; s <= total; ++s)
                if (rank_ksubset(unrank_ksubset(s, n, k), n) != s) return false;
        }
    return true;
}

bool check_roundtrip_subsets() {
    for (int n = 0; n <= 10; ++n) {
        const Count total = count_subsets(n);
        for (Serial s = 1; s <= total; ++s)
            if (rank_subset(unrank_subset(s, n)) != s) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

struct CliOptions {
    std::string family;
    long long n = 0;
    long long k = 0;
    std::string serial;
    std::string vector_text;
    std::string from;
    std::string to;
    std::string format = "text";
    bool stylized = false;
};

void cmd_count(const CliOptions& opt, std::ostream& out) {
    const Family f = family_from(opt.family);
    const int n = to_int("--n", opt.n);
    const int k = family_takes_k(f) ? to_int("--k", opt.k) : 0;
    const Count total = family_count(f, n, k);
    if (opt.format == "json") {
        nlohmann::ordered_json obj;
        obj["family"] = opt.family;
        obj["n"] = n;
        if (family_takes_k(f)) obj["k"] = k;
        obj["count"] = total.str();
        out << obj.dump() << "\n";
    } else {
        out << total.str() << "\n";
    }
}

void cmd_unrank(const CliOptions& opt, std::ostream& out) {
    const Family f = family_from(opt.family);
    const int n = to_int("--n", opt.n);
    const int k = family_takes_k(f) ? to_int("--k", opt.k) : -1;
    const Serial s = parse_serial_text("--serial", opt.serial);
    const std::vector<int> vec = family_unrank(f, s, n, k);
    emit_unranked(out, opt.format, f, opt.family, n, k, s, vec, opt.stylized);
}

void cmd_rank(const CliOptions& opt, std::ostream& out, bool have_n, bool have_k) {
    const Family f = family_from(opt.family);
    const std::vector<int> vec = parse_vector_text(opt.vector_text);

    int n = have_n ? to_int("--n", opt.n) : -1;
    int k = -1;
    Serial s;
    switch (f) {
        case Family::permutation: {
            const int len = static_cast<int>(vec.size());
            if (have_n && n != len)
                throw std::invalid_argument("--n does not match the vector length");
            n = len;
            s = rank_permutation(vec);
            break;
        }
        case Family::composition: {
            k = static_cast<int>(vec.size());
            if (have_k && to_int("--k", opt.k) != k)
                throw std::invalid_argument("--k does not match the vector length");
            long long sum = 0;
            for (int part : vec) sum += part;
            if (have_n && n != sum)
                throw std::invalid_argument("--n does not match the sum of the parts");
            s = rank_composition(vec);
            n = to_int("parts sum", sum);
            break;
        }
        case Family::setpartition: {
            const int len = static_cast<int>(vec.size());
            if (have_n && n != len)
                throw std::invalid_argument("--n does not match the vector length");
            n = len;
            s = rank_setpartition(vec);
            break;
        }
        case Family::ksubset: {
            if (!have_n) throw std::invalid_argument("--n is required for family ksubset");
            k = static_cast<int>(vec.size());
            if (have_k && to_int("--k", opt.k) != k)
                throw std::invalid_argument("--k does not match the vector length");
            s = rank_ksubset(vec, n);
            break;
        }
        case Family::subset: {
            const int len = static_cast<int>(vec.size());
            if (have_n && n != len)
                throw std::invalid_argument("--n does not match the vector length");
            n = len;
            s = rank_subset(vec);
            break;
        }
    }

    if (opt.format == "json") {
        const bool is_partition = f == Family::setpartition;
        out << make_object(opt.family, n, k, s, vec, is_partition,
                           is_partition ? stylize(vec) : std::string())
                   .dump()
            << "\n";
    } else {
        out << s.str() << "\n";
    }
}

void cmd_range(const CliOptions& opt, std::ostream& out) {
    const Family f = family_from(opt.family);
    const int n = to_int("--n", opt.n);
    const int k = family_takes_k(f) ? to_int("--k", opt.k) : -1;
    const Serial from = parse_serial_text("--from", opt.from);
    const Serial to = parse_serial_text("--to", opt.to);
    const Count total = family_count(f, n, family_takes_k(f) ? k : 0);
    if (from < 1 || from > to || to > total)
        throw std::out_of_range("range: need 1 <= from <= to <= " + total.str());

    if (f == Family::setpartition) {
        const DMatrix d(n);  // shared across the whole range
        for (Serial s = from; s <= to; ++s)
            emit_unranked(out, opt.format, f, opt.family, n, k, s,
                          unrank_setpartition(s, d), opt.stylized);
        return;
    }
    for (Serial s = from; s <= to; ++s)
        emit_unranked(out, opt.format, f, opt.family, n, k, s, family_unrank(f, s, n, k),
                      opt.stylized);
}

}  // namespace

int run_selftest(std::ostream& out) {
    struct Check {
        const char* name;
        bool (*fn)();
    };
    const Check checks[] = {
        {"permutation table n=4", check_permutation_table},
        {"permutation n=5 serial 32", check_permutation_serial32},
        {"offset vector (1,0,3) serial 23", check_offset_serial23},
        {"composition n=7 k=5 serial 283", check_composition_serial283},
        {"d-matrix n=6", check_d_matrix6},
        {"set partition n=5 serial 26", check_setpartition_serial26},
        {"round trips: permutations m<=5", check_roundtrip_permutations},
        {"round trips: compositions n+k<=8", check_roundtrip_compositions},
        {"round trips: set partitions n<=6", check_roundtrip_setpartitions},
        {"round trips: k-subsets n<=8", check_roundtrip_ksubsets},
        {"round trips: subsets n<=10", check_roundtrip_subsets},
    };

    int failures = 0;
    for (const Check& check : checks) {
        bool ok = false;
        try {
            ok = check.fn();
        } catch (const std::exception&) {
            ok = false;
        }
        out << (ok ? "PASS " : "FAIL ") << check.name << "\n";
        if (!ok) ++failures;
    }
    if (failures == 0) {
        out << "all checks passed\n";
        return 0;
    }
    out << failures << " check(s) failed\n";
    return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank/unrank toolkit for combinatorial families"};
    app.name("combrank");
    app.require_subcommand(1);

    CliOptions opt;

    const auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", opt.family,
                        "one of permutation, composition, setpartition, ksubset, subset")
            ->required()
            ->check(CLI::IsMember(kFamilyNames));
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* count = app.add_subcommand("count", "print how many objects the family has");
    add_family(count);
    count->add_option("--n", opt.n)->required();
    CLI::Option* count_k = count->add_option("--k", opt.k);
    add_format(count);

    CLI::App* unrank = app.add_subcommand("unrank", "serial number -> object");
    add_family(unrank);
    unrank->add_option("--n", opt.n)->required();
    CLI::Option* unrank_k = unrank->add_option("--k", opt.k);
    unrank->add_option("--serial", opt.serial)->required();
    unrank->add_flag("--stylized", opt.stylized, "block notation (setpartition only)");
    add_format(unrank);

    CLI::App* rank = app.add_subcommand("rank", "object -> serial number");
    add_family(rank);
    CLI::Option* rank_n = rank->add_option("--n", opt.n);
    CLI::Option* rank_k = rank->add_option("--k", opt.k);
    rank->add_option("--vector", opt.vector_text)->required();
    add_format(rank);

    CLI::App* range = app.add_subcommand("range", "print objects from --from to --to");
    add_family(range);
    range->add_option("--n", opt.n)->required();
    CLI::Option* range_k = range->add_option("--k", opt.k);
    range->add_option("--from", opt.from)->required();
    range->add_option("--to", opt.to)->required();
    range->add_flag("--stylized", opt.stylized, "block notation (setpartition only)");
    add_format(range);

    CLI::App* selftest = app.add_subcommand("selftest", "run the embedded golden checks");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("combrank");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(selftest)) return run_selftest(out);

        const Family f = family_from(opt.family);
        const auto enforce_k = [&](const CLI::Option* k_opt, bool required) {
            if (family_takes_k(f)) {
                if (required && k_opt->count() == 0)
                    throw std::invalid_argument("--k is required for family " + opt.family);
            } else if (k_opt->count() > 0) {
                throw std::invalid_argument("--k is not accepted for family " + opt.family);
            }
        };

        if (opt.stylized && f != Family::setpartition)
            throw std::invalid_argument("--stylized applies to family setpartition only");

        if (app.got_subcommand(count)) {
            enforce_k(count_k, true);
            cmd_count(opt, out);
        } else if (app.got_subcommand(unrank)) {
            enforce_k(unrank_k, true);
            cmd_unrank(opt, out);
        } else if (app.got_subcommand(rank)) {
            enforce_k(rank_k, false);  // derivable from the vector; checked if given
            cmd_rank(opt, out, rank_n->count() > 0, rank_k->count() > 0);
        } else if (app.got_subcommand(range)) {
            enforce_k(range_k, true);
            cmd_range(opt, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace combrank
