#include "dupcode/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dupcode/capacity.hpp"
#include "dupcode/channel.hpp"
#include "dupcode/codebook.hpp"
#include "dupcode/core.hpp"
#include "dupcode/decoder.hpp"
#include "dupcode/oracle.hpp"
#include "dupcode/transform.hpp"

namespace dupcode::cli {

namespace {

std::string fmt_real(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12Lg", v);
    return buf;
}

struct ParamFlags {
    std::uint32_t q = 2;
    std::uint32_t ell = 1;
    std::string r = "1";

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "alphabet size");
        cmd->add_option("--ell", ell, "duplication length");
        cmd->add_option("--r", r, "repetition bound (integer or 'inf')");
    }
    ChannelParams make() const { return ChannelParams(q, ell, Repetition::parse(r)); }
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep))
        if (!token.empty()) parts.push_back(token);
    return parts;
}

std::vector<std::uint32_t> parse_u32_list(const std::string& text) {
    std::vector<std::uint32_t> values;
    for (const std::string& token : split(text, ',')) {
        const auto dash = token.find('-');
        if (dash != std::string::npos) {
            const std::uint32_t a = static_cast<std::uint32_t>(std::stoul(token.substr(0, dash)));
            const std::uint32_t b = static_cast<std::uint32_t>(std::stoul(token.substr(dash + 1)));
            for (std::uint32_t v = a; v <= b; ++v) values.push_back(v);
        } else {
            values.push_back(static_cast<std::uint32_t>(std::stoul(token)));
        }
    }
    if (values.empty()) throw std::invalid_argument("empty list: " + text);
    return values;
}

std::vector<Repetition> parse_rep_list(const std::string& text) {
    std::vector<Repetition> values;
    for (const std::string& token : split(text, ',')) {
        const auto dash = token.find('-');
        if (token != "inf" && dash != std::string::npos) {
            const std::uint64_t a = std::stoull(token.substr(0, dash));
            const std::uint64_t b = std::stoull(token.substr(dash + 1));
            for (std::uint64_t v = a; v <= b; ++v) values.push_back(Repetition::finite(v));
        } else {
            values.push_back(Repetition::parse(token));
        }
    }
    if (values.empty()) throw std::invalid_argument("empty list: " + text);
    return values;
}

// Stream selection: a path opens a file, otherwise the process stream is used.
std::istream& open_input(const std::string& path, std::istream& fallback, std::unique_ptr<std::ifstream>& holder) {
    if (path.empty()) return fallback;
    holder = std::make_unique<std::ifstream>(path);
    if (!*holder) throw std::invalid_argument("cannot open input file: " + path);
    return *holder;
}

std::ostream& open_output(const std::string& path, std::ostream& fallback, std::unique_ptr<std::ofstream>& holder) {
    if (path.empty()) return fallback;
    holder = std::make_unique<std::ofstream>(path);
    if (!*holder) throw std::invalid_argument("cannot open output file: " + path);
    return *holder;
}

void for_each_word_line(std::istream& in, std::uint32_t q, const std::function<void(const Word&)>& fn) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        fn(parse_word(line, q));
    }
}

void emit_capacity_rows(const std::vector<CapacityRow>& rows, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << "q,ell,r,rho,c0,c0_inf,penalty\n";
        for (const auto& row : rows)
            out << row.q << ',' << row.ell << ',' << row.r.to_string() << ',' << fmt_real(row.rho) << ','
                << fmt_real(row.c0) << ',' << fmt_real(row.c0_inf) << ',' << fmt_real(row.penalty) << "\n";
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows)
            j.push_back({{"q", row.q},
                         {"ell", row.ell},
                         {"r", row.r.to_string()},
                         {"rho", static_cast<double>(row.rho)},
                         {"c0", static_cast<double>(row.c0)},
                         {"c0_inf", static_cast<double>(row.c0_inf)},
                         {"penalty", static_cast<double>(row.penalty)}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& row : rows)
            out << "q=" << row.q << " ell=" << row.ell << " r=" << row.r.to_string() << " rho=" << fmt_real(row.rho)
                << " c0=" << fmt_real(row.c0) << " c0_inf=" << fmt_real(row.c0_inf)
                << " penalty=" << fmt_real(row.penalty) << "\n";
    }
}

struct CodeFile {
    ChannelParams params;
    std::uint64_t n;
    std::optional<std::uint64_t> w;
    std::vector<Word> words;
};

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    std::string header;
    if (!std::getline(in, header) || header.empty() || header[0] != '#')
        throw std::invalid_argument("code file must start with a '# q=.. ell=.. r=.. n=..' header");
    std::optional<std::uint32_t> q, ell;
    std::optional<std::string> r;
    std::optional<std::uint64_t> n, w;
    std::istringstream hs(header.substr(1));
    std::string token;
    while (hs >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "q") q = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "ell") ell = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "r") r = value;
        else if (key == "n") n = std::stoull(value);
        else if (key == "w") w = std::stoull(value);
    }
    if (!q || !ell || !r || !n) throw std::invalid_argument("code file header is missing q/ell/r/n");
    CodeFile file{ChannelParams(*q, *ell, Repetition::parse(*r)), *n, w, {}};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        file.words.push_back(parse_word(line, *q));
    }
    return file;
}

void write_code_header(std::ostream& out, const ChannelParams& params, std::uint64_t n,
                       const std::optional<std::uint64_t>& w) {
    out << "# q=" << params.q << " ell=" << params.ell << " r=" << params.r.to_string() << " n=" << n;
    if (w) out << " w=" << *w;
    out << "\n";
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) {
    return seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"optimal zero-error codes for duplication / 0-insertion channels"};
    app.require_subcommand(1);

    // ---- blocks ----
    auto* cmd_blocks = app.add_subcommand("blocks", "list the block alphabet B up to length n");
    ParamFlags blocks_params;
    blocks_params.attach(cmd_blocks);
    std::uint64_t blocks_n = 0;
    bool blocks_table = false;
    cmd_blocks->add_option("--n", blocks_n, "maximum block length")->required();
    cmd_blocks->add_flag("--table", blocks_table, "emit CSV sigma,i,j,run,length");

    // ---- enumerate ----
    auto* cmd_enumerate = app.add_subcommand("enumerate", "list all codewords of C(n) in canonical order");
    ParamFlags enum_params;
    enum_params.attach(cmd_enumerate);
    std::uint64_t enum_n = 0;
    std::int64_t enum_w = -1;
    std::string enum_out;
    std::uint64_t enum_budget = 1'000'000;
    bool enum_prime = false;
    cmd_enumerate->add_option("--n", enum_n, "maximum codeword length")->required();
    cmd_enumerate->add_option("--w", enum_w, "restrict to Hamming weight w");
    cmd_enumerate->add_option("--out", enum_out, "output file (default stdout)");
    cmd_enumerate->add_option("--budget", enum_budget, "maximum number of words");
    cmd_enumerate->add_flag("--prime", enum_prime, "enumerate the Remark-2 variant C'(n)");

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "count codewords of C(n) (or C(n;w), or C'(n))");
    ParamFlags count_params;
    count_params.attach(cmd_count);
    std::uint64_t count_n = 0;
    std::int64_t count_w = -1;
    bool count_prime_flag = false;
    cmd_count->add_option("--n", count_n, "maximum codeword length")->required();
    cmd_count->add_option("--w", count_w, "restrict to Hamming weight w");
    cmd_count->add_flag("--prime", count_prime_flag, "count the Remark-2 variant C'(n)");

    // ---- rank ----
    auto* cmd_rank = app.add_subcommand("rank", "rank of a codeword under the canonical order");
    ParamFlags rank_params;
    rank_params.attach(cmd_rank);
    std::uint64_t rank_n = 0;
    std::string rank_word;
    cmd_rank->add_option("--n", rank_n, "codebook length bound")->required();
    cmd_rank->add_option("--word", rank_word, "codeword (default: read words from stdin)");

    // ---- unrank / encode ----
    auto* cmd_unrank = app.add_subcommand("unrank", "codeword at a given rank");
    ParamFlags unrank_params;
    unrank_params.attach(cmd_unrank);
    std::uint64_t unrank_n = 0;
    std::string unrank_k;
    cmd_unrank->add_option("--n", unrank_n, "codebook length bound")->required();
    cmd_unrank->add_option("--k", unrank_k, "rank (default: read ranks from stdin)");

    auto* cmd_encode = app.add_subcommand("encode", "encode a message index as a codeword (alias of unrank)");
    ParamFlags encode_params;
    encode_params.attach(cmd_encode);
    std::uint64_t encode_n = 0;
    std::string encode_message;
    cmd_encode->add_option("--n", encode_n, "codebook length bound")->required();
    cmd_encode->add_option("--message", encode_message, "message index (default: read from stdin)");

    // ---- decode ----
    auto* cmd_decode = app.add_subcommand("decode", "decode received words, one per line");
    ParamFlags decode_params;
    decode_params.attach(cmd_decode);
    bool decode_prime_flag = false;
    std::string decode_in, decode_out;
    cmd_decode->add_flag("--prime", decode_prime_flag, "decode the Remark-2 variant (length-ell prefix kept)");
    cmd_decode->add_option("--in", decode_in, "input file (default stdin)");
    cmd_decode->add_option("--out", decode_out, "output file (default stdout)");

    // ---- transform ----
    auto* cmd_transform = app.add_subcommand("transform", "apply phi_ell (duplication <-> 0-insertion)");
    ParamFlags transform_params;
    transform_params.attach(cmd_transform);
    bool transform_inverse = false;
    std::string transform_in, transform_out;
    cmd_transform->add_flag("--inverse", transform_inverse, "apply the inverse map");
    cmd_transform->add_option("--in", transform_in, "input file (default stdin)");
    cmd_transform->add_option("--out", transform_out, "output file (default stdout)");

    // ---- simulate ----
    auto* cmd_simulate = app.add_subcommand("simulate", "sample channel outputs for words, one per line");
    ParamFlags simulate_params;
    simulate_params.attach(cmd_simulate);
    std::string simulate_model = "zero-insertion";
    std::uint64_t simulate_seed = 0;
    std::uint64_t simulate_samples = 1;
    std::int64_t simulate_cap = -1;
    std::string simulate_pmf, simulate_in, simulate_out;
    cmd_simulate->add_option("--model", simulate_model, "duplication | zero-insertion");
    cmd_simulate->add_option("--seed", simulate_seed, "RNG seed");
    cmd_simulate->add_option("--samples", simulate_samples, "samples per input word");
    cmd_simulate->add_option("--cap", simulate_cap, "per-position cap (required for r=inf)");
    cmd_simulate->add_option("--pmf", simulate_pmf, "comma-separated insertion-count probabilities");
    cmd_simulate->add_option("--in", simulate_in, "input file (default stdin)");
    cmd_simulate->add_option("--out", simulate_out, "output file (default stdout)");

    // ---- capacity ----
    auto* cmd_capacity = app.add_subcommand("capacity", "zero-error capacity C0 = -log2(rho)");
    ParamFlags capacity_params;
    capacity_params.attach(cmd_capacity);
    double capacity_tol = 1e-12;
    std::string capacity_format = "text";
    bool capacity_table_mode = false;
    std::string capacity_qs = "2,4", capacity_ells = "1-4", capacity_rs = "1-12";
    cmd_capacity->add_option("--tol", capacity_tol, "root tolerance");
    cmd_capacity->add_option("--format", capacity_format, "text | csv | json");
    cmd_capacity->add_flag("--table", capacity_table_mode, "emit a grid of rows");
    cmd_capacity->add_option("--q-list", capacity_qs, "grid q values, e.g. 2,4");
    cmd_capacity->add_option("--ell-list", capacity_ells, "grid ell values, e.g. 1-4");
    cmd_capacity->add_option("--r-list", capacity_rs, "grid r values, e.g. 1-12 or 1,2,inf");

    // ---- cw-capacity ----
    auto* cmd_cw = app.add_subcommand("cw-capacity", "constant-weight zero-error capacity C0(omega)");
    ParamFlags cw_params;
    cw_params.attach(cmd_cw);
    double cw_omega = -1;
    std::uint32_t cw_grid = 0;
    double cw_tol = 1e-12;
    std::string cw_format = "text";
    bool cw_star = false;
    cmd_cw->add_option("--omega", cw_omega, "relative weight in [0,1]");
    cmd_cw->add_option("--grid", cw_grid, "evaluate K interior grid points k/(K+1)");
    cmd_cw->add_flag("--star", cw_star, "evaluate at the optimal weight omega*");
    cmd_cw->add_option("--tol", cw_tol, "root tolerance");
    cmd_cw->add_option("--format", cw_format, "text | csv | json");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "brute-force certification checks");
    cmd_verify->require_subcommand(1);
    auto* cmd_verify_ze = cmd_verify->add_subcommand("zero-error", "pairwise non-confusability of a code");
    ParamFlags verify_ze_params;
    verify_ze_params.attach(cmd_verify_ze);
    std::string verify_ze_code;
    std::uint64_t verify_ze_n = 0;
    std::int64_t verify_ze_w = -1;
    std::string verify_ze_model = "zero-insertion";
    cmd_verify_ze->add_option("--code", verify_ze_code, "code file (header + one word per line)");
    cmd_verify_ze->add_option("--n", verify_ze_n, "build C(n) for the given parameters");
    cmd_verify_ze->add_option("--w", verify_ze_w, "restrict built code to weight w");
    cmd_verify_ze->add_option("--model", verify_ze_model, "duplication | zero-insertion");

    auto* cmd_verify_opt = cmd_verify->add_subcommand("optimal", "exact MIS of the confusability graph vs DP count");
    ParamFlags verify_opt_params;
    verify_opt_params.attach(cmd_verify_opt);
    std::uint64_t verify_opt_n = 0;
    std::string verify_opt_model = "zero-insertion";
    std::uint64_t verify_opt_vertex_budget = 20'000;
    std::uint64_t verify_opt_mis_budget = 2'000;
    cmd_verify_opt->add_option("--n", verify_opt_n, "space length bound")->required();
    cmd_verify_opt->add_option("--model", verify_opt_model, "duplication | zero-insertion");
    cmd_verify_opt->add_option("--vertex-budget", verify_opt_vertex_budget, "graph vertex budget");
    cmd_verify_opt->add_option("--mis-budget", verify_opt_mis_budget, "exact-MIS vertex budget");

    // ---- figure ----
    auto* cmd_figure = app.add_subcommand("figure", "regenerate figure data as CSV");
    std::uint32_t figure_which = 0;
    std::string figure_out;
    cmd_figure->add_option("--which", figure_which, "1 (greedy construction), 2 (weight-2 code), 3 (capacity curves)")
        ->required();
    cmd_figure->add_option("--out", figure_out, "output file (default stdout)");

    // CLI11 wants argv with the program name in front
    std::vector<const char*> argv;
    argv.push_back("dupcode");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_blocks->parsed()) {
            const ChannelParams params = blocks_params.make();
            const auto blocks = blocks_up_to(params, blocks_n);
            if (blocks_table) {
                out << "sigma,i,j,run,length\n";
                for (const BlockId& b : blocks)
                    out << b.sigma << ',' << b.i << ',' << b.j << ',' << (b.length - 1) << ',' << b.length << "\n";
            } else {
                for (const BlockId& b : blocks) {
                    Word w{b.sigma};
                    w.insert(w.end(), b.length - 1, Symbol{0});
                    out << format_word(w, params.q) << "\n";
                }
            }
            return 0;
        }

        if (cmd_enumerate->parsed()) {
            const ChannelParams params = enum_params.make();
            std::unique_ptr<std::ofstream> holder;
            std::ostream& sink = open_output(enum_out, out, holder);
            const std::optional<std::uint64_t> w =
                enum_w >= 0 ? std::optional<std::uint64_t>(enum_w) : std::nullopt;
            std::vector<Word> words;
            if (enum_prime) {
                if (w) throw std::invalid_argument("--w is not supported with --prime");
                words = enumerate_prime(code_prime(params, enum_n), {enum_budget});
            } else {
                words = enumerate_codewords(Codebook(params, enum_n), w, {enum_budget});
            }
            write_code_header(sink, params, enum_n, w);
            for (const Word& word : words) sink << format_word(word, params.q) << "\n";
            return 0;
        }

        if (cmd_count->parsed()) {
            const ChannelParams params = count_params.make();
            if (count_prime_flag) {
                if (count_w >= 0) throw std::invalid_argument("--w is not supported with --prime");
                out << count_prime(code_prime(params, count_n)).str() << "\n";
            } else if (count_w >= 0) {
                out << count_weight(params, count_n, static_cast<std::uint64_t>(count_w)).str() << "\n";
            } else {
                out << count(params, count_n).code_size().str() << "\n";
            }
            return 0;
        }

        if (cmd_rank->parsed()) {
            const ChannelParams params = rank_params.make();
            const Codebook cb(params, rank_n);
            if (!rank_word.empty()) {
                out << rank(cb, parse_word(rank_word, params.q)).str() << "\n";
            } else {
                for_each_word_line(in, params.q, [&](const Word& w) { out << rank(cb, w).str() << "\n"; });
            }
            return 0;
        }

        if (cmd_unrank->parsed() || cmd_encode->parsed()) {
            const bool is_encode = cmd_encode->parsed();
            const ChannelParams params = is_encode ? encode_params.make() : unrank_params.make();
            const Codebook cb(params, is_encode ? encode_n : unrank_n);
            const std::string& index_text = is_encode ? encode_message : unrank_k;
            if (!index_text.empty()) {
                out << format_word(unrank(cb, BigInt(index_text)), params.q) << "\n";
            } else {
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    out << format_word(unrank(cb, BigInt(line)), params.q) << "\n";
                }
            }
            return 0;
        }

        if (cmd_decode->parsed()) {
            const ChannelParams params = decode_params.make();
            std::unique_ptr<std::ifstream> in_holder;
            std::unique_ptr<std::ofstream> out_holder;
            std::istream& source = open_input(decode_in, in, in_holder);
            std::ostream& sink = open_output(decode_out, out, out_holder);
            for_each_word_line(source, params.q, [&](const Word& w) {
                sink << format_word(decode_prime_flag ? decode_prime(params, w) : decode(params, w), params.q)
                     << "\n";
            });
            return 0;
        }

        if (cmd_transform->parsed()) {
            const ChannelParams params = transform_params.make();
            std::unique_ptr<std::ifstream> in_holder;
            std::unique_ptr<std::ofstream> out_holder;
            std::istream& source = open_input(transform_in, in, in_holder);
            std::ostream& sink = open_output(transform_out, out, out_holder);
            for_each_word_line(source, params.q, [&](const Word& w) {
                sink << format_word(transform_inverse ? phi_inverse(params, w) : phi(params, w), params.q) << "\n";
            });
            return 0;
        }

        if (cmd_simulate->parsed()) {
            const ChannelParams params = simulate_params.make();
            const Model model = parse_model(simulate_model);
            SamplingOptions options;
            if (simulate_cap >= 0) options.cap = static_cast<std::uint64_t>(simulate_cap);
            if (!simulate_pmf.empty()) {
                std::vector<double> pmf;
                for (const std::string& token : split(simulate_pmf, ',')) pmf.push_back(std::stod(token));
                options.pmf = std::move(pmf);
            }
            std::unique_ptr<std::ifstream> in_holder;
            std::unique_ptr<std::ofstream> out_holder;
            std::istream& source = open_input(simulate_in, in, in_holder);
            std::ostream& sink = open_output(simulate_out, out, out_holder);
            std::uint64_t counter = 0;
            for_each_word_line(source, params.q, [&](const Word& w) {
                for (std::uint64_t s = 0; s < simulate_samples; ++s)
                    sink << format_word(sample_output(params, w, model, derived_seed(simulate_seed, counter++), options),
                                        params.q)
                         << "\n";
            });
            return 0;
        }

        if (cmd_capacity->parsed()) {
            const Real tol = static_cast<Real>(capacity_tol);
            std::vector<CapacityRow> rows;
            if (capacity_table_mode) {
                rows = capacity_table(parse_u32_list(capacity_qs), parse_u32_list(capacity_ells),
                                      parse_rep_list(capacity_rs), tol);
            } else {
                const ChannelParams params = capacity_params.make();
                const CapacityResult inf = solve_rho(ChannelParams(params.q, params.ell, Repetition::unbounded()), tol);
                const CapacityResult res = solve_rho(params, tol);
                rows.push_back({params.q, params.ell, params.r, res.rho, res.c0, inf.c0, res.c0 - inf.c0});
                if (res.degenerate && capacity_format == "text") out << "# degenerate: rho = 1, C0 = 0\n";
            }
            emit_capacity_rows(rows, capacity_format, out);
            return 0;
        }

        if (cmd_cw->parsed()) {
            const ChannelParams params = cw_params.make();
            const Real tol = static_cast<Real>(cw_tol);
            std::vector<CWCapacityResult> results;
            if (cw_star) {
                const OmegaStarResult star = omega_star(params, tol);
                if (cw_format == "text")
                    out << "omega_star = " << fmt_real(star.omega) << (star.degenerate ? " (degenerate)" : "") << "\n";
                results.push_back(cw_capacity(params, star.omega, tol));
            } else if (cw_grid > 0) {
                for (std::uint32_t k = 1; k <= cw_grid; ++k)
                    results.push_back(cw_capacity(params, static_cast<Real>(k) / (cw_grid + 1), tol));
            } else {
                if (cw_omega < 0) throw std::invalid_argument("cw-capacity needs --omega, --grid, or --star");
                results.push_back(cw_capacity(params, static_cast<Real>(cw_omega), tol));
            }
            if (cw_format == "csv") {
                out << "q,ell,r,omega,rho_omega,c0_omega\n";
                for (const auto& res : results)
                    out << params.q << ',' << params.ell << ',' << params.r.to_string() << ',' << fmt_real(res.omega)
                        << ',' << fmt_real(res.rho_omega) << ',' << fmt_real(res.c0_omega) << "\n";
            } else if (cw_format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& res : results)
                    j.push_back({{"q", params.q},
                                 {"ell", params.ell},
                                 {"r", params.r.to_string()},
                                 {"omega", static_cast<double>(res.omega)},
                                 {"rho_omega", static_cast<double>(res.rho_omega)},
                                 {"c0_omega", static_cast<double>(res.c0_omega)},
                                 {"degenerate", res.degenerate}});
                out << j.dump(2) << "\n";
            } else {
                for (const auto& res : results)
                    out << "omega=" << fmt_real(res.omega) << " rho_omega=" << fmt_real(res.rho_omega)
                        << " c0_omega=" << fmt_real(res.c0_omega) << (res.degenerate ? " (boundary)" : "") << "\n";
            }
            return 0;
        }

        if (cmd_verify_ze->parsed()) {
            ChannelParams params = verify_ze_params.make();
            std::vector<Word> code;
            Model model = parse_model(verify_ze_model);
            if (!verify_ze_code.empty()) {
                CodeFile file = read_code_file(verify_ze_code);
                params = file.params;
                code = std::move(file.words);
            } else {
                if (verify_ze_n == 0) throw std::invalid_argument("verify zero-error needs --code or --n");
                const std::optional<std::uint64_t> w =
                    verify_ze_w >= 0 ? std::optional<std::uint64_t>(verify_ze_w) : std::nullopt;
                code = enumerate_codewords(Codebook(params, verify_ze_n), w);
            }
            const ZeroErrorReport report = brute_zero_error_check(params, code, model);
            if (report.zero_error) {
                out << "PASS zero-error: " << code.size() << " codewords pairwise non-confusable\n";
                return 0;
            }
            out << "FAIL zero-error: confusable pair " << format_word(report.witness->first, params.q) << " , "
                << format_word(report.witness->second, params.q) << "\n";
            return 1;
        }

        if (cmd_verify_opt->parsed()) {
            const ChannelParams params = verify_opt_params.make();
            const Model model = parse_model(verify_opt_model);
            const ConfusabilityGraph graph = build_graph(params, verify_opt_n, model, {verify_opt_vertex_budget});
            const MisResult mis = max_independent_set(graph, {verify_opt_mis_budget});
            const BigInt dp = count(params, verify_opt_n).code_size();
            out << "mis=" << mis.size << " dp=" << dp.str() << "\n";
            if (BigInt(mis.size) == dp) {
                out << "PASS optimal: construction size equals the exact maximum\n";
                return 0;
            }
            out << "FAIL optimal: construction does not match the exact maximum\n";
            return 1;
        }

        if (cmd_figure->parsed()) {
            std::unique_ptr<std::ofstream> holder;
            std::ostream& sink = open_output(figure_out, out, holder);
            if (figure_which == 1) {
                // greedy picks for (2,1,1): runs, lengths, and channel fan-out
                const ChannelParams params(2, 1, Repetition::finite(1));
                sink << "class_i,level_j,run,length,reach_max_run\n";
                for (std::uint64_t run : greedy_block_construction(params, 31)) {
                    const std::uint32_t i = static_cast<std::uint32_t>(run % params.ell) + 1;
                    std::uint64_t j = 0, L = i;
                    while (L < run + 1) {
                        L = L * (params.r.value() * params.ell + 1) + params.ell;
                        ++j;
                    }
                    sink << i << ',' << j << ',' << run << ',' << (run + 1) << ',' << max_reachable_run(params, run)
                         << "\n";
                }
            } else if (figure_which == 2) {
                // the space S_2(19;2): point (u,v) is the word 1 0^(u-1) 1 0^(v-1)
                const std::uint64_t n = 19;
                const ChannelParams r1(2, 1, Repetition::finite(1));
                const ChannelParams rinf(2, 1, Repetition::unbounded());
                const Codebook cb1(r1, n);
                const Codebook cbinf(rinf, n);
                sink << "u,v,length,codeword,codeword_rinf\n";
                for (std::uint64_t u = 1; u <= n - 1; ++u) {
                    for (std::uint64_t v = 1; u + v <= n; ++v) {
                        Word w{1};
                        w.insert(w.end(), u - 1, Symbol{0});
                        w.push_back(1);
                        w.insert(w.end(), v - 1, Symbol{0});
                        sink << u << ',' << v << ',' << (u + v) << ',' << (is_codeword(cb1, w) ? 1 : 0) << ','
                             << (is_codeword(cbinf, w) ? 1 : 0) << "\n";
                    }
                }
            } else if (figure_which == 3) {
                emit_capacity_rows(capacity_table({2, 4}, {1, 2, 3, 4}, parse_rep_list("1-12"), 1e-12L), "csv", sink);
            } else {
                throw std::invalid_argument("figure --which must be 1, 2, or 3");
            }
            return 0;
        }

        throw std::invalid_argument("no subcommand given");
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace dupcode::cli
