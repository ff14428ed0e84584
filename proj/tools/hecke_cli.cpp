#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <hecke/acceptance.hpp>
#include <hecke/certify.hpp>

using namespace hecke;
using nlohmann::json;

namespace {

enum Exit { ok = 0, domain = 1, budget = 2, unverified = 3 };

size_t g_budget = 0; // partition budget; set in main

struct BlockArgs {
    int e = 0;
    std::string core = "-";
    int weight = -1;
};

void add_block_options(CLI::App* app, BlockArgs& a, bool weight_required) {
    app->add_option("--e", a.e, "modulus e")->required();
    app->add_option("--core", a.core, "e-core, e.g. 3,1^2 or - for empty")->required();
    auto w = app->add_option("--weight", a.weight, "block weight");
    if (weight_required) w->required();
}

BlockId block_from(const BlockArgs& a) { return make_block(a.e, parse_partition(a.core), std::max(a.weight, 0)); }

std::vector<Partition> parse_list(const std::string& s) {
    std::vector<Partition> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ';'))
        if (!item.empty()) out.push_back(parse_partition(item));
    return out;
}

std::string csv_cell(const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; }

// ---- block info ----------------------------------------------------------

int run_block_info(const BlockArgs& a, bool as_json) {
    auto core = parse_partition(a.core);
    auto blk = make_block(a.e, core, std::max(a.weight, 0));
    auto p = runner_positions(core, a.e);
    auto pyr = pyramid(core, a.e);
    json j{{"e", a.e}, {"core", to_string(core)}, {"p", p}, {"conjugate_core", to_string(conjugate(core))}};
    if (a.weight >= 0) j["weight"] = a.weight, j["n"] = blk.n();
    std::vector<std::string> rows;
    for (int i = 0; i < a.e; ++i) {
        std::string row;
        for (int k = i; k < a.e; ++k) row += std::to_string(pyr.bit(i, k));
        rows.push_back(row);
    }
    j["pyramid"] = rows;
    if (a.e == 3 && a.weight >= 1) j["scopes_triple"] = scopes_triple(core, a.weight);
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << "e = " << a.e << "\ncore = " << to_string(core) << "\n";
    if (a.weight >= 0) std::cout << "weight = " << a.weight << "\nn = " << blk.n() << "\n";
    std::cout << "p =";
    for (int x : p) std::cout << " " << x;
    std::cout << "\npyramid (row i lists bits i..e-1):\n";
    for (int i = 0; i < a.e; ++i) std::cout << "  " << std::string(i, ' ') << rows[i] << "\n";
    if (j.contains("scopes_triple")) {
        auto t = j["scopes_triple"].get<std::vector<int>>();
        std::cout << "scopes triple = [" << t[0] << "," << t[1] << "," << t[2] << "]\n";
    }
    std::cout << "conjugate core = " << to_string(conjugate(core)) << "\n";
    return ok;
}

// ---- decomp ----------------------------------------------------------------

int run_decomp(const BlockArgs& a, int p, const std::string& rows_s, const std::string& cols_s, const std::string& format) {
    auto blk = block_from(a);
    if (blk.e < 3) throw std::domain_error("decomposition numbers are only computed for e >= 3");
    Engine eng(g_budget);
    check_block_budget(blk, eng.budget());
    auto rows = rows_s.empty() ? block_partitions(blk) : parse_list(rows_s);
    std::vector<Partition> cols;
    if (cols_s == "same") {
        for (auto& r : rows)
            if (is_e_regular(r, blk.e)) cols.push_back(r);
        if (cols.size() != rows.size()) throw std::invalid_argument("--cols same needs every row to be e-regular");
    } else {
        cols = cols_s.empty() ? block_regular_partitions(blk) : parse_list(cols_s);
    }
    for (auto& r : rows)
        if (!in_block(r, blk)) throw std::invalid_argument(to_string(r) + " is not in " + to_string(blk));
    for (auto& c : cols) {
        if (!in_block(c, blk)) throw std::invalid_argument(to_string(c) + " is not in " + to_string(blk));
        if (!is_e_regular(c, blk.e)) throw std::invalid_argument("column " + to_string(c) + " is not e-regular");
    }
    std::vector<std::vector<DecompEntry>> cells(rows.size(), std::vector<DecompEntry>(cols.size()));
    if (p == 0) {
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) cells[i][j] = {eng.llt(blk.e).d(rows[i], cols[j]), EntryStatus::exact};
    } else {
        auto dm = decomp_char_p(blk, p, eng.llt(blk.e));
        EvidenceEngine ev(eng);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) {
                cells[i][j] = dm.at(rows[i], cols[j]);
                // An entry proved equal at v = 1 equals the char-0 polynomial.
                if (cells[i][j].status != EntryStatus::exact && ev.pair(blk.e, rows[i], cols[j], p).ok)
                    cells[i][j] = {eng.llt(blk.e).d(rows[i], cols[j]), EntryStatus::exact};
            }
    }
    if (format == "json") {
        json j{{"block", to_json(blk)}, {"p", p}};
        for (auto& r : rows) j["rows"].push_back(to_string(r));
        for (auto& c : cols) j["cols"].push_back(to_string(c));
        j["entries"] = json::array();
        for (auto& row : cells) {
            json jr = json::array();
            for (auto& x : row) jr.push_back({{"value", x.value.str()}, {"status", to_string(x.status)}});
            j["entries"].push_back(jr);
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "lambda\\mu";
        for (auto& c : cols) std::cout << "," << csv_cell(to_string(c));
        std::cout << "\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            std::cout << csv_cell(to_string(rows[i]));
            for (auto& x : cells[i]) std::cout << "," << csv_cell(x.value.str());
            std::cout << "\n";
        }
    } else {
        size_t lw = 0, cw = 1;
        for (auto& r : rows) lw = std::max(lw, to_string(r).size());
        for (auto& c : cols) cw = std::max(cw, to_string(c).size());
        for (auto& row : cells)
            for (auto& x : row) cw = std::max(cw, x.value.str().size() + (x.status == EntryStatus::exact ? 0 : 2));
        std::cout << to_string(blk) << ", p = " << p << "\n" << std::setw(lw) << "";
        for (auto& c : cols) std::cout << "  " << std::setw(cw) << to_string(c);
        std::cout << "\n";
        bool marked = false;
        for (size_t i = 0; i < rows.size(); ++i) {
            std::cout << std::setw(lw) << to_string(rows[i]);
            for (auto& x : cells[i]) {
                std::string s = x.value.is_zero() ? "." : x.value.str();
                if (x.status == EntryStatus::lower_bound) s = ">=" + s, marked = true;
                if (x.status == EntryStatus::unknown) s = "?" + s, marked = true;
                std::cout << "  " << std::setw(cw) << s;
            }
            std::cout << "\n";
        }
        if (marked) std::cout << "(>= lower bound, ? unknown)\n";
    }
    return ok;
}

// ---- scopes ----------------------------------------------------------------

int run_scopes(const BlockArgs& a, bool with_trace) {
    auto blk = block_from(a);
    auto red = scopes_reduce(blk);
    json j{{"block", to_json(blk)}, {"representative", to_json(red.representative)}};
    if (blk.e == 3) j["triple"] = scopes_triple(blk.core, blk.w);
    if (with_trace) {
        j["trace"] = json::array();
        for (auto& s : red.trace)
            j["trace"].push_back({{"r", s.r}, {"runner", s.i}, {"k", s.k}, {"from_core", to_string(s.from_core)}, {"to_core", to_string(s.to_core)}});
    }
    std::cout << j.dump(2) << "\n";
    return ok;
}

// ---- classify / verify -------------------------------------------------------

int run_classify(const BlockArgs& a, int p, bool search, bool as_json) {
    auto blk = block_from(a);
    Engine eng(g_budget);
    ClassifyOptions opt;
    opt.search = search;
    auto cl = classify(eng, blk, p, opt);
    if (as_json) {
        json j = cl.certificate ? to_json(*cl.certificate) : json{{"block", to_json(blk)}, {"p", p}};
        j["verdict"] = to_string(cl.verdict);
        j["reason"] = cl.reason;
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << to_string(blk) << ", p = " << p << ": " << to_string(cl.verdict) << "\n  " << cl.reason << "\n";
    if (auto& c = cl.certificate) {
        if (c->kind == CertKind::paper_external) {
            std::cout << "  evidence: paper_external\n  " << c->citation << "\n";
        } else {
            std::cout << "  target " << to_string(c->target) << " in " << to_string(c->witness_block) << (c->heuristic ? " (heuristic)" : "") << "\n";
            for (auto& w : c->witnesses) std::cout << "    " << to_string(w) << "\n";
            std::cout << "  evidence kind: " << to_string(c->kind) << ", " << c->evidence.size() << " items\n";
        }
    }
    return ok;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed certificate JSON: ") + ex.what());
    }
    Certificate c;
    try {
        c = certificate_from_json(j);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("certificate is missing fields: ") + ex.what());
    }
    auto r = verify_certificate(c);
    for (auto& m : r.messages) std::cout << m << "\n";
    std::cout << (r.ok ? "OK" : "FAILED") << "\n";
    return r.ok ? ok : unverified;
}

int run_verify_paper() {
    Engine eng(g_budget);
    bool all = true;
    for (auto& run : acceptance::all_criteria()) {
        auto r = run(eng);
        all = all && r.pass;
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
        for (auto& d : r.details) std::cout << "    " << d << "\n";
    }
    return all ? ok : unverified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded decomposition numbers and Schurian-infiniteness certificates for Hecke algebra blocks"};
    app.require_subcommand(1);
    g_budget = default_budget();
    app.add_option("--budget", g_budget, "largest block (in partitions) to compute; HECKE_BLOCKS_BUDGET sets the default")
        ->check(CLI::PositiveNumber);

    BlockArgs info_args, decomp_args, scopes_args, classify_args;
    bool info_json = false, with_trace = false, search = false, classify_json = false;
    int decomp_p = 0, classify_p = 0;
    std::string rows, cols, format = "text", cert;

    auto block = app.add_subcommand("block", "block data");
    block->require_subcommand(1);
    auto info = block->add_subcommand("info", "n, p-vector, pyramid, Scopes triple and conjugate core");
    add_block_options(info, info_args, false);
    info->add_flag("--json", info_json);

    auto decomp = app.add_subcommand("decomp", "graded decomposition matrix (or submatrix)");
    add_block_options(decomp, decomp_args, true);
    decomp->add_option("--p", decomp_p, "characteristic (0 by default)")->check(CLI::NonNegativeNumber);
    decomp->add_option("--rows", rows, "semicolon-separated row partitions");
    decomp->add_option("--cols", cols, "semicolon-separated e-regular columns, or 'same'");
    decomp->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto scopes = app.add_subcommand("scopes", "Scopes representative of a block");
    add_block_options(scopes, scopes_args, true);
    scopes->add_flag("--trace", with_trace, "include the replayable runner-swap trace");

    auto cls = app.add_subcommand("classify", "Schurian-finite / infinite verdict with certificate");
    add_block_options(cls, classify_args, true);
    cls->add_option("--p", classify_p, "characteristic")->required()->check(CLI::NonNegativeNumber);
    cls->add_flag("--search", search, "fall back to a bounded search over witness subsets");
    cls->add_flag("--json", classify_json);

    auto verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("--cert", cert, "certificate JSON file")->required();

    auto paper = app.add_subcommand("verify-paper", "run the reproduction checks and property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return domain;
    }

    try {
        if (*info) return run_block_info(info_args, info_json);
        if (*decomp) return run_decomp(decomp_args, decomp_p, rows, cols, format);
        if (*scopes) return run_scopes(scopes_args, with_trace);
        if (*cls) return run_classify(classify_args, classify_p, search, classify_json);
        if (*verify) return run_verify(cert);
        if (*paper) return run_verify_paper();
    } catch (const BudgetExceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << " (raise --budget or HECKE_BLOCKS_BUDGET)\n";
        return budget;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return domain;
    }
    return domain;
}
