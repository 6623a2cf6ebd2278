#include "succinct_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "succinct/corpus.hpp"
#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"
#include "succinct/structure_file.hpp"
#include "succinct_cli/verify.hpp"

namespace succinct::cli {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t effective_seed(uint64_t seed) {
    char const* env = std::getenv("SUCCINCT_SEED");
    if (env == nullptr || *env == '\0') return seed;
    char* end = nullptr;
    errno = 0;
    unsigned long long const v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0') throw usage_error(std::string("SUCCINCT_SEED is not an integer: ") + env);
    return v;
}

struct structure_options {
    std::string backend;
    unsigned ell = 4;
    uint64_t block = 0;
    std::string mode = "select";
    unsigned f = 4;
    unsigned base_width = 16;
    uint64_t leaf_capacity = 64;
    uint64_t threshold = 64;
    uint64_t max_classes = 16;

    void add_to(CLI::App* app) {
        app->add_option("--ell", ell, "wavelet digit width (2..8)");
        app->add_option("--block", block, "wavelet rank block in positions (0 = default)");
        app->add_option("--mode", mode, "golynski mode")->check(CLI::IsMember({"select", "access"}));
        app->add_option("--f", f, "golynski shortcut period and sampling exponent");
        app->add_option("--base-width", base_width, "predecessor leaf key width");
        app->add_option("--leaf-capacity", leaf_capacity, "predecessor leaf key capacity");
        app->add_option("--threshold", threshold, "apcompress golynski threshold");
        app->add_option("--max-classes", max_classes, "apcompress class limit");
    }

    build_options options() const {
        build_options o;
        o.wavelet = {ell, block};
        o.golynski.mode = mode == "access" ? golynski_mode::constant_access : golynski_mode::constant_select;
        o.golynski.f = f;
        o.predecessor = {base_width, leaf_capacity};
        o.apcompress.golynski_threshold = threshold;
        o.apcompress.max_classes = max_classes;
        o.apcompress.wavelet = o.wavelet;
        o.apcompress.golynski = o.golynski;
        return o;
    }
};

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

// --- gen ---------------------------------------------------------------

struct gen_args {
    std::string dist = "uniform";
    uint64_t n = 0;
    uint64_t sigma = 0;
    double zipf_s = 1.0;
    uint64_t seed = 1;
    std::string from_text;
    std::string out;
};

int do_gen(gen_args const& g, std::ostream& out) {
    sequence seq;
    if (!g.from_text.empty()) {
        seq = sequence_from_bytes(read_file(g.from_text));
        if (seq.empty()) throw validation_error("gen: text file is empty");
    } else {
        if (g.n < 1) throw usage_error("gen: --n must be at least 1");
        if (g.sigma < 2) throw usage_error("gen: --sigma must be at least 2");
        uint64_t const seed = effective_seed(g.seed);
        seq = g.dist == "zipf" ? generate_zipf(g.n, g.sigma, g.zipf_s, seed) : generate_uniform(g.n, g.sigma, seed);
    }
    write_file(g.out, encode_sequence(seq));
    out << "wrote " << g.out << ": n=" << seq.size() << " sigma=" << seq.sigma()
        << " H0=" << fixed(zeroth_order_entropy(seq), 4) << "\n";
    return exit_ok;
}

// --- build -------------------------------------------------------------

void print_breakdown(std::ostream& out, encoded_structure const& e, uint64_t n) {
    double const dn = static_cast<double>(std::max<uint64_t>(n, 1));
    out << std::left << std::setw(40) << "component" << std::right << std::setw(16) << "bits" << std::setw(14)
        << "bits/symbol" << "\n";
    uint64_t sum = 0;
    for (auto const& c : e.components) {
        out << std::left << std::setw(40) << c.name << std::right << std::setw(16) << c.bits << std::setw(14)
            << fixed(static_cast<double>(c.bits) / dn, 4) << "\n";
        sum += c.bits;
    }
    out << std::left << std::setw(40) << "total" << std::right << std::setw(16) << sum << std::setw(14)
        << fixed(static_cast<double>(sum) / dn, 4) << "\n";
}

int do_build(std::string const& input, structure_options const& s, std::string const& output, std::ostream& out,
             std::ostream& err) {
    sequence const seq = decode_sequence(read_file(input));
    if (seq.empty()) throw validation_error("build: input sequence is empty");
    backend_tag const tag = parse_backend(s.backend);
    auto const t0 = std::chrono::steady_clock::now();
    encoded_structure e;
    if (tag == backend_tag::predecessor) {
        std::vector<uint64_t> keys(seq.symbols().begin(), seq.symbols().end());
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        e = encode_predecessor(predecessor_set(keys, seq.sigma(), s.options().predecessor));
    } else {
        if (tag == backend_tag::golynski && seq.sigma() > seq.size()) {
            err << "warning: sigma > n, golynski uses a single chunk\n";
        }
        auto index = build_index(tag, seq, s.options());
        e = encode_structure(*index);
    }
    double const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_file(output, e.bytes);
    out << "backend: " << s.backend << "\n"
        << "n: " << seq.size() << "\nsigma: " << seq.sigma() << "\n"
        << "build_ms: " << fixed(ms, 2) << "\n";
    print_breakdown(out, e, seq.size());
    return exit_ok;
}

// --- verify / bench ----------------------------------------------------

std::unique_ptr<sequence_index> obtain_index(sequence const& seq, std::string const& backend,
                                             std::string const& structure, structure_options const& s) {
    if (!structure.empty()) return decode_structure(read_file(structure));
    if (backend.empty()) throw usage_error("one of --backend or --structure is required");
    structure_options o = s;
    o.backend = backend;
    return build_index(parse_backend(backend), seq, o.options());
}

int do_verify(std::string const& input, std::string const& backend, std::string const& structure,
              structure_options const& s, uint64_t queries, uint64_t seed, std::ostream& out) {
    if (queries < 1) throw usage_error("verify: --queries must be at least 1");
    sequence const seq = decode_sequence(read_file(input));
    auto index = obtain_index(seq, backend, structure, s);
    verify_report const r = verify_index(seq, *index, queries, effective_seed(seed));
    out << "backend: " << to_string(index->tag()) << " [" << index->params() << "]\n"
        << "queries: " << r.queries << (r.exhaustive ? " (including exhaustive suite)" : "") << "\n"
        << "mismatches: " << r.mismatches << "\n";
    if (!r.ok()) {
        out << "first mismatch: " << r.first_mismatch << "\n";
        return exit_mismatch;
    }
    return exit_ok;
}

uint64_t below(std::mt19937_64& rng, uint64_t bound) { return uniform_below(rng, bound); }

int do_bench(std::string const& input, std::string const& backend, std::string const& structure,
             structure_options const& s, std::string const& ops, uint64_t queries, std::string const& format,
             uint64_t seed, bool header, std::ostream& out) {
    if (queries < 1) throw usage_error("bench: --queries must be at least 1");
    std::vector<std::string> op_list;
    {
        std::stringstream ss(ops);
        std::string op;
        while (std::getline(ss, op, ',')) {
            if (op != "access" && op != "rank" && op != "select") throw usage_error("bench: unknown op '" + op + "'");
            op_list.push_back(op);
        }
    }
    if (op_list.empty()) throw usage_error("bench: no ops given");
    char const sep = format == "tsv" ? '\t' : ',';

    sequence const seq = decode_sequence(read_file(input));
    if (seq.empty()) throw validation_error("bench: input sequence is empty");
    auto index = obtain_index(seq, backend, structure, s);
    occurrence_oracle const oracle(seq);
    double const bits = static_cast<double>(encode_structure(*index).payload_bits) / static_cast<double>(seq.size());

    if (header) {
        out << "backend" << sep << "op" << sep << "n" << sep << "sigma" << sep << "params" << sep << "ns_median"
            << sep << "ns_p99" << sep << "bits_per_symbol" << "\n";
    }
    uint64_t const n = seq.size();
    std::mt19937_64 rng(effective_seed(seed));
    volatile uint64_t sink = 0;
    for (auto const& op : op_list) {
        std::vector<std::pair<uint64_t, uint64_t>> args(queries);
        for (auto& a : args) {
            uint64_t const sym = seq[below(rng, n) + 1];
            if (op == "access") a = {0, below(rng, n) + 1};
            if (op == "rank") a = {sym, below(rng, n + 1)};
            if (op == "select") a = {sym, below(rng, oracle.count(sym)) + 1};
        }
        std::vector<double> ns(queries);
        for (uint64_t q = 0; q < queries; ++q) {
            auto const [x, y] = args[q];
            auto const t0 = std::chrono::steady_clock::now();
            uint64_t v = 0;
            if (op == "access") v = index->access(y);
            if (op == "rank") v = index->rank(x, y);
            if (op == "select") v = index->select(x, y);
            auto const t1 = std::chrono::steady_clock::now();
            sink = sink + v;
            ns[q] = std::chrono::duration<double, std::nano>(t1 - t0).count();
        }
        std::sort(ns.begin(), ns.end());
        double const median = ns[(queries - 1) / 2];
        double const p99 = ns[std::min<uint64_t>(queries - 1, queries * 99 / 100)];
        out << to_string(index->tag()) << sep << op << sep << n << sep << seq.sigma() << sep << index->params()
            << sep << fixed(median, 1) << sep << fixed(p99, 1) << sep << fixed(bits, 4) << "\n";
    }
    return exit_ok;
}

// --- info --------------------------------------------------------------

int do_info(std::string const& path, std::ostream& out, std::ostream& err) {
    auto const bytes = read_file(path);
    structure_header const h = peek_structure(bytes);
    uint64_t const file_bits = structure_payload_bits(bytes);
    encoded_structure e;
    uint64_t n = 0;
    out << "backend: " << to_string(h.tag) << "\n" << "version: " << int{h.version} << "\n";
    if (h.tag == backend_tag::predecessor) {
        predecessor_set const set = decode_predecessor(bytes);
        e = encode_predecessor(set);
        n = set.size();
        out << "n: " << n << "\nuniverse: " << set.universe() << "\n"
            << "params: base=" << set.params().base_width << ";leaf=" << set.params().leaf_capacity << "\n"
            << "nodes: " << set.node_count() << "\n";
        if (n > 0 && set.universe() > n) {
            double const ideal = static_cast<double>(n) *
                                 std::log2(static_cast<double>(set.universe()) / static_cast<double>(n));
            out << "bits / (n lg(u/n)): " << fixed(static_cast<double>(e.payload_bits) / ideal, 4) << "\n";
        }
    } else {
        auto index = decode_structure(bytes);
        e = encode_structure(*index);
        n = index->size();
        out << "n: " << n << "\nsigma: " << index->sigma() << "\nparams: " << index->params() << "\n";
    }
    print_breakdown(out, e, n);
    out << "file payload bits: " << file_bits << "\n";
    if (e.payload_bits != file_bits) {
        err << "error: component bits (" << e.payload_bits << ") differ from file payload (" << file_bits << ")\n";
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"succinct sequence harness"};
    app.name("succinct");
    app.require_subcommand(1);

    gen_args g;
    auto* gen = app.add_subcommand("gen", "generate a sequence file");
    gen->add_option("--dist", g.dist, "distribution")->check(CLI::IsMember({"uniform", "zipf"}));
    gen->add_option("--n", g.n, "length");
    gen->add_option("--sigma", g.sigma, "alphabet size");
    gen->add_option("--zipf-s", g.zipf_s, "zipf exponent");
    gen->add_option("--seed", g.seed, "random seed (SUCCINCT_SEED overrides)");
    gen->add_option("--from-text", g.from_text, "ingest a file, bytes become symbols 1..256");
    gen->add_option("--out", g.out, "output sequence file")->required();

    structure_options bs;
    std::string build_in, build_out;
    auto* build = app.add_subcommand("build", "build and serialize a structure");
    build->add_option("--input", build_in, "sequence file")->required();
    build->add_option("--backend", bs.backend, "wavelet|golynski|rankreduce|apcompress|predecessor")->required();
    build->add_option("--out", build_out, "output structure file")->required();
    bs.add_to(build);

    structure_options vs;
    std::string v_in, v_backend, v_structure;
    uint64_t v_queries = 10000, v_seed = 1;
    auto* verify = app.add_subcommand("verify", "check a structure against the oracle");
    verify->add_option("--input", v_in, "sequence file")->required();
    verify->add_option("--backend", v_backend, "build this backend in memory");
    verify->add_option("--structure", v_structure, "load this structure file");
    verify->add_option("--queries", v_queries, "random queries per operation");
    verify->add_option("--seed", v_seed, "random seed (SUCCINCT_SEED overrides)");
    vs.add_to(verify);

    structure_options bes;
    std::string b_in, b_backend, b_structure, b_ops = "access,rank,select", b_format = "csv";
    uint64_t b_queries = 10000, b_seed = 1;
    bool b_no_header = false;
    auto* bench = app.add_subcommand("bench", "measure query latency");
    bench->add_option("--input", b_in, "sequence file")->required();
    bench->add_option("--backend", b_backend, "build this backend in memory");
    bench->add_option("--structure", b_structure, "load this structure file");
    bench->add_option("--ops", b_ops, "comma-separated subset of access,rank,select");
    bench->add_option("--queries", b_queries, "queries per operation");
    bench->add_option("--format", b_format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
    bench->add_option("--seed", b_seed, "random seed (SUCCINCT_SEED overrides)");
    bench->add_flag("--no-header", b_no_header, "omit the header row");
    bes.add_to(bench);

    std::string info_path;
    auto* info = app.add_subcommand("info", "print the space breakdown of a structure file");
    info->add_option("file", info_path, "structure file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed()) return do_gen(g, out);
        if (build->parsed()) return do_build(build_in, bs, build_out, out, err);
        if (verify->parsed()) return do_verify(v_in, v_backend, v_structure, vs, v_queries, v_seed, out);
        if (bench->parsed()) {
            return do_bench(b_in, b_backend, b_structure, bes, b_ops, b_queries, b_format, b_seed, !b_no_header,
                            out);
        }
        if (info->parsed()) return do_info(info_path, out, err);
    } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace succinct::cli
