#pragma once

// Command-line front door. Every subcommand is deterministic for fixed
// flags and seeds; exit codes are 0 on success, 1 when a verification
// fails, 2 on usage errors.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cardgeom/analysis.hpp"
#include "cardgeom/capsearch.hpp"
#include "cardgeom/decks.hpp"
#include "cardgeom/io.hpp"
#include "cardgeom/sim.hpp"
#include "cardgeom/verify.hpp"
#include "cardgeom/xmap.hpp"

namespace cardgeom {

namespace cli_detail {

inline int parse_bits(const std::string& bits) {
    if (bits.size() != 6) fail(errc::invalid_code, "expected 6 binary digits");
    int code = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') fail(errc::invalid_code, "expected 6 binary digits");
        code = code << 1 | (ch - '0');
    }
    return code;
}

inline Game parse_game(const std::string& name) {
    if (name == "set") return Game::set;
    if (name == "socks") return Game::socks;
    if (name == "quads") return Game::quads;
    if (name == "spotit") return Game::spotit;
    fail(errc::out_of_range, "unknown game: " + name);
}

inline void print_prob_table(std::ostream& os, int max, bool closed_form, bool all_rows) {
    Rational anchor(BigInt(1), BigInt(64));
    os << std::left << std::setw(4) << "n" << std::setw(30) << "P(n)" << std::setw(15)
       << "decimal" << "P(n)-1/64" << "\n";
    for (int n = all_rows ? 0 : 1; n <= max; all_rows ? ++n : n += 2) {
        Rational p = closed_form && n % 2 == 1 && n >= 1 && n <= 61
                         ? match_probability_closed(n)
                         : match_probability(n);
        Rational diff = p - anchor;
        os << std::left << std::setw(4) << n << std::setw(30) << p.str() << std::setw(15)
           << p.decimal(11) << diff.decimal(11) << "\n";
    }
}

inline void print_grid(std::ostream& os, int code) {
    auto [row, col] = card_to_grid(code);
    os << "code " << code_digits(2, 6, code) << " -> row " << row << ", col " << col
       << "\n";
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) os << (r == row && c == col ? '#' : '.');
        os << "\n";
    }
}

inline void print_correspond(std::ostream& os, int code, int origin) {
    os << "code:   " << code_digits(2, 6, code) << "\n";
    os << "quads:  " << card_label(DeckKind::quads(), code).text() << "\n";
    if (code == 0)
        os << "socks:  (empty card, not in the deck)\n";
    else
        os << "socks:  " << card_label(DeckKind::socks(), code).text() << "\n";
    if (origin != 0) {
        int translated = code ^ origin;
        os << "origin: " << code_digits(2, 6, origin) << " ("
           << card_label(DeckKind::quads(), origin).text() << ")\n";
        os << "relative to the origin card the code reads " << code_digits(2, 6, translated)
           << ":\n";
        os << "  quads:  " << card_label(DeckKind::quads(), translated).text() << "\n";
        if (translated == 0)
            os << "  socks:  (the origin itself)\n";
        else
            os << "  socks:  " << card_label(DeckKind::socks(), translated).text() << "\n";
    }
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"finite-geometry card game engine"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for batch runs")
        ->default_val(1);

    // deck gen
    CLI::App* deck_cmd = app.add_subcommand("deck", "deck construction and export");
    CLI::App* deck_gen = deck_cmd->add_subcommand("gen", "generate a full deck");
    std::string deck_game = "set", deck_format = "text", deck_out;
    int deck_q = 7;
    deck_gen->add_option("--game", deck_game, "set|socks|quads|spotit")->required();
    deck_gen->add_option("--q", deck_q, "plane order for spotit decks");
    deck_gen->add_option("--format", deck_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    deck_gen->add_option("--out", deck_out, "write to a file instead of stdout");

    // prob table
    CLI::App* prob_cmd = app.add_subcommand("prob", "exact probability tables");
    CLI::App* prob_table = prob_cmd->add_subcommand("table", "matched-sock probabilities");
    int prob_max = 31;
    bool prob_closed = false, prob_all = false;
    prob_table->add_option("--max", prob_max, "largest n to print")
        ->check(CLI::Range(0, 63));
    prob_table->add_flag("--closed-form", prob_closed, "compute odd rows via the closed form");
    prob_table->add_flag("--all", prob_all, "include even n");

    // verify
    CLI::App* verify_cmd = app.add_subcommand("verify", "run invariant suites");
    std::string verify_what = "all";
    verify_cmd
        ->add_option("suite", verify_what, "all|probability|planes|rules|correspondence")
        ->required()
        ->check(CLI::IsMember({"all", "probability", "planes", "rules", "correspondence"}));

    // search cap / noquad
    CLI::App* search_cmd = app.add_subcommand("search", "cap searches with certificates");
    CLI::App* search_cap = search_cmd->add_subcommand("cap", "noset search in Z_3^dim");
    int cap_dim = 4;
    double cap_budget = 60.0, noquad_budget = 60.0;
    search_cap->add_option("--dim", cap_dim, "dimension 1..4")->check(CLI::Range(1, 4));
    search_cap->add_option("--budget", cap_budget, "time budget in seconds");
    CLI::App* search_noquad = search_cmd->add_subcommand("noquad", "9-card noquad search");
    search_noquad->add_option("--budget", noquad_budget, "time budget in seconds");

    // estimate noquad
    CLI::App* estimate_cmd = app.add_subcommand("estimate", "Monte Carlo estimates");
    CLI::App* estimate_noquad =
        estimate_cmd->add_subcommand("noquad", "probability that a pile is quad-free");
    int est_size = 9;
    long long est_samples = 1000000;
    std::uint64_t est_seed = 0;
    estimate_noquad->add_option("--size", est_size, "pile size")->check(CLI::Range(1, 64));
    estimate_noquad->add_option("--samples", est_samples, "sample count (>= 10^4)");
    estimate_noquad->add_option("--seed", est_seed, "PRNG seed");

    // correspond
    CLI::App* correspond_cmd =
        app.add_subcommand("correspond", "read a code as both a quads and a socks card");
    std::string corr_code, corr_origin;
    correspond_cmd->add_option("--code", corr_code, "6-bit code")->required();
    correspond_cmd->add_option("--origin", corr_origin, "origin card for the translation");

    // simulate
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "deterministic game simulation");
    std::string sim_game, sim_variant;
    std::uint64_t sim_seed = 0;
    int sim_runs = 1, sim_players = 2, sim_table = 9, sim_q = 7;
    simulate_cmd->add_option("--game", sim_game, "set|socks|quads|spotit")->required();
    simulate_cmd->add_option("--variant", sim_variant,
                             "socks: official|extended; spotit: tower|well");
    simulate_cmd->add_option("--seed", sim_seed, "shuffle seed");
    simulate_cmd->add_option("--runs", sim_runs, "simulate a seeded batch")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--players", sim_players, "player count")
        ->check(CLI::Range(1, 8));
    simulate_cmd->add_option("--table-size", sim_table, "quads table size (6..9)");
    simulate_cmd->add_option("--q", sim_q, "spotit plane order");

    // grid
    CLI::App* grid_cmd = app.add_subcommand("grid", "8x8 position of a 6-bit code");
    std::string grid_code;
    grid_cmd->add_option("--code", grid_code, "6-bit code")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (deck_gen->parsed()) {
            Game game = cli_detail::parse_game(deck_game);
            Deck deck = build_deck(game == Game::spotit ? DeckKind::spotit(deck_q)
                                                        : DeckKind{game, 0});
            std::string payload = deck_format == "json" ? deck_to_json(deck).dump(2) + "\n"
                                  : deck_format == "csv" ? deck_to_csv(deck)
                                                         : deck_to_text(deck);
            if (deck_out.empty()) {
                out << payload;
            } else {
                std::ofstream file(deck_out);
                if (!file) fail(errc::out_of_range, "cannot open " + deck_out);
                file << payload;
                out << "wrote " << deck.size() << " cards to " << deck_out << "\n";
            }
            return 0;
        }
        if (prob_table->parsed()) {
            cli_detail::print_prob_table(out, prob_max, prob_closed, prob_all);
            return 0;
        }
        if (verify_cmd->parsed()) {
            std::vector<CheckResult> results;
            if (verify_what == "all") results = verify_all();
            else if (verify_what == "probability") results = verify_probability();
            else if (verify_what == "planes") results = verify_planes();
            else if (verify_what == "rules") results = verify_rules();
            else results = verify_correspondence();
            return print_results(results, out) == 0 ? 0 : 1;
        }
        if (search_cap->parsed()) {
            out << certificate_to_json(find_max_cap(cap_dim, cap_budget)).dump(2) << "\n";
            return 0;
        }
        if (search_noquad->parsed()) {
            out << certificate_to_json(find_noquad(noquad_budget)).dump(2) << "\n";
            return 0;
        }
        if (estimate_noquad->parsed()) {
            out << estimate_to_json(noquad_probability_estimate(est_size, est_samples,
                                                                est_seed))
                       .dump(2)
                << "\n";
            return 0;
        }
        if (correspond_cmd->parsed()) {
            int code = cli_detail::parse_bits(corr_code);
            int origin = corr_origin.empty() ? 0 : cli_detail::parse_bits(corr_origin);
            cli_detail::print_correspond(out, code, origin);
            return 0;
        }
        if (simulate_cmd->parsed()) {
            GameConfig config;
            config.game = cli_detail::parse_game(sim_game);
            if (sim_variant.empty()) {
                if (config.game == Game::socks) sim_variant = "extended";
                if (config.game == Game::spotit) sim_variant = "tower";
            }
            config.variant = sim_variant;
            config.players = sim_players;
            config.seed = sim_seed;
            config.quads_table_size = sim_table;
            config.spotit_q = sim_q;
            if (sim_runs == 1)
                out << gamelog_to_json(simulate(config)).dump(2) << "\n";
            else
                out << batch_to_json(simulate_batch(config, sim_runs, threads)).dump(2)
                    << "\n";
            return 0;
        }
        if (grid_cmd->parsed()) {
            cli_detail::print_grid(out, cli_detail::parse_bits(grid_code));
            return 0;
        }
    } catch (const game_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace cardgeom
