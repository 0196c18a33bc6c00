#pragma once

// JSON and CSV serialization for decks, cap certificates, and game logs.
// Key order and spacing come from nlohmann::json's sorted-object dump, so
// identical inputs always serialize to identical bytes.

#include <istream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cardgeom/capsearch.hpp"
#include "cardgeom/decks.hpp"
#include "cardgeom/sim.hpp"

namespace cardgeom {

using nlohmann::json;

/// Base-p digit string of a card code, most significant digit first.
inline std::string code_digits(int p, int n, int code) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = n - 1; i >= 0; --i) {
        s[static_cast<size_t>(i)] = static_cast<char>('0' + code % p);
        code /= p;
    }
    return s;
}

inline json deck_to_json(const Deck& deck) {
    json j;
    j["kind"] = game_name(deck.kind.game);
    if (deck.kind.game == Game::spotit)
        j["geometry"] = {{"q", deck.kind.q}};
    else
        j["geometry"] = {{"p", deck.p}, {"n", deck.n}};
    j["cards"] = json::array();
    for (int code : deck.cards) {
        json card;
        card["code"] = code;
        if (deck.kind.game == Game::spotit) {
            card["symbols"] = deck.symbols->cards[static_cast<size_t>(code)];
        } else {
            card["bits"] = code_digits(deck.p, deck.n, code);
            card["label"] = card_label(deck.kind, code).text();
        }
        j["cards"].push_back(card);
    }
    return j;
}

inline std::string deck_to_csv(const Deck& deck) {
    std::ostringstream os;
    if (deck.kind.game == Game::spotit) {
        os << "code,symbols\n";
        for (int code : deck.cards) {
            os << code << ",";
            const auto& symbols = deck.symbols->cards[static_cast<size_t>(code)];
            for (size_t i = 0; i < symbols.size(); ++i)
                os << (i ? " " : "") << symbols[i];
            os << "\n";
        }
    } else {
        os << "code,bits,label\n";
        for (int code : deck.cards)
            os << code << "," << code_digits(deck.p, deck.n, code) << ","
               << card_label(deck.kind, code).text() << "\n";
    }
    return os.str();
}

inline std::string deck_to_text(const Deck& deck) {
    std::ostringstream os;
    os << game_name(deck.kind.game) << " deck, " << deck.size() << " cards\n";
    for (int code : deck.cards) {
        if (deck.kind.game == Game::spotit) {
            os << code << ":";
            for (int s : deck.symbols->cards[static_cast<size_t>(code)]) os << " " << s;
            os << "\n";
        } else {
            os << code_digits(deck.p, deck.n, code) << "  "
               << card_label(deck.kind, code).text() << "\n";
        }
    }
    return os.str();
}

inline json certificate_to_json(const CapCertificate& cert) {
    json j;
    j["space"] = {{"p", cert.p}, {"dim", cert.dim}};
    j["pile"] = cert.pile;
    j["internal_count"] = cert.internal_count;
    j["extension_blocked"] = cert.extension_blocked;
    j["elapsed_ms"] = cert.elapsed_ms;
    return j;
}

inline json gamelog_to_json(const GameLog& log) {
    json config;
    config["game"] = game_name(log.config.game);
    config["players"] = log.config.players;
    config["seed"] = log.config.seed;
    if (!log.config.variant.empty()) config["variant"] = log.config.variant;
    if (log.config.game == Game::quads) config["table_size"] = log.config.quads_table_size;
    if (log.config.game == Game::spotit) config["q"] = log.config.spotit_q;

    json events = json::array();
    for (const GameEvent& ev : log.events) {
        json e;
        e["type"] = event_type_name(ev.type);
        e["cards"] = ev.cards;
        if (ev.player >= 0) e["player"] = ev.player;
        if (ev.type == GameEvent::Type::turn) {
            e["symbol"] = ev.symbol;
            e["symbols"] = ev.symbols;
        }
        events.push_back(e);
    }

    json scores;
    for (size_t p = 0; p < log.scores.size(); ++p)
        scores[std::to_string(p)] = log.scores[p];

    json j;
    j["config"] = config;
    j["shuffle"] = log.shuffle;
    j["events"] = events;
    j["final_table"] = log.final_table;
    j["scores"] = scores;
    return j;
}

inline GameLog gamelog_from_json(const json& j) {
    GameLog log;
    const json& config = j.at("config");
    std::string game = config.at("game");
    log.config.game = game == "set"     ? Game::set
                      : game == "socks" ? Game::socks
                      : game == "quads" ? Game::quads
                                        : Game::spotit;
    log.config.players = config.at("players");
    log.config.seed = config.at("seed");
    if (config.contains("variant")) log.config.variant = config.at("variant");
    if (config.contains("table_size")) log.config.quads_table_size = config.at("table_size");
    if (config.contains("q")) log.config.spotit_q = config.at("q");
    log.shuffle = j.at("shuffle").get<std::vector<int>>();
    for (const json& e : j.at("events")) {
        GameEvent ev;
        std::string type = e.at("type");
        ev.type = type == "deal"    ? GameEvent::Type::deal
                  : type == "extra" ? GameEvent::Type::extra
                  : type == "claim" ? GameEvent::Type::claim
                                    : GameEvent::Type::turn;
        ev.cards = e.at("cards").get<std::vector<int>>();
        if (e.contains("player")) ev.player = e.at("player");
        if (e.contains("symbol")) ev.symbol = e.at("symbol");
        if (e.contains("symbols")) ev.symbols = e.at("symbols").get<std::vector<int>>();
        log.events.push_back(std::move(ev));
    }
    log.final_table = j.at("final_table").get<std::vector<int>>();
    const json& scores = j.at("scores");
    log.scores.assign(static_cast<size_t>(log.config.players), 0);
    for (auto it = scores.begin(); it != scores.end(); ++it)
        log.scores[static_cast<size_t>(std::stoul(it.key()))] = it.value();
    return log;
}

inline json batch_to_json(const BatchSummary& summary) {
    json j;
    j["runs"] = summary.runs;
    j["total_claims"] = summary.total_claims;
    j["total_claimed_cards"] = summary.total_claimed_cards;
    j["mean_leftover"] = summary.mean_leftover;
    j["stranded_runs"] = summary.stranded_runs;
    json hist;
    for (const auto& [leftover, count] : summary.leftover_histogram)
        hist[std::to_string(leftover)] = count;
    j["leftover_histogram"] = hist;
    return j;
}

inline json estimate_to_json(const NoquadEstimate& est) {
    json j;
    j["pile_size"] = est.pile_size;
    j["samples"] = est.samples;
    j["hits"] = est.hits;
    j["seed"] = est.seed;
    j["fraction"] = est.fraction;
    j["std_error"] = est.std_error;
    return j;
}

/// Optional symbol-name table: plain "id: name" lines, '#' comments.
inline std::map<int, std::string> load_symbol_names(std::istream& in) {
    std::map<int, std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t colon = line.find(':');
        if (colon == std::string::npos) continue;
        int id = std::stoi(line.substr(0, colon));
        std::string name = line.substr(colon + 1);
        size_t begin = name.find_first_not_of(" \t");
        size_t end = name.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        names[id] = name.substr(begin, end - begin + 1);
    }
    return names;
}

} // namespace cardgeom
