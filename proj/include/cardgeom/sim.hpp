#pragma once

// Deterministic game simulations with greedy machine players. The shuffle
// is a pinned Fisher-Yates over the canonical deck, the scanner claims the
// first valid group in lexicographic order each turn, and the dealer
// refills and adds cards per each game's stated rules, so a (config, seed)
// pair fully determines the transcript. A separate replayer re-applies a
// transcript against the rules predicates without any search logic, which
// is the independent legality check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cardgeom/decks.hpp"
#include "cardgeom/errors.hpp"
#include "cardgeom/projective.hpp"
#include "cardgeom/rng.hpp"
#include "cardgeom/rules.hpp"

namespace cardgeom {

struct GameConfig {
    Game game = Game::socks;
    std::string variant; // socks: official|extended; spotit: tower|well
    int players = 2;
    std::uint64_t seed = 0;
    int quads_table_size = 9; // x, recommended range 6..9
    int spotit_q = 7;
};

struct GameEvent {
    enum class Type { deal, extra, claim, turn };
    Type type = Type::deal;
    int player = -1;
    std::vector<int> cards;   // dealt cards, claimed cards, or the turn's card
    std::vector<int> symbols; // spotit turns: common symbol per player
    int symbol = -1;          // spotit turns: the winning symbol
};

inline const char* event_type_name(GameEvent::Type t) {
    switch (t) {
    case GameEvent::Type::deal: return "deal";
    case GameEvent::Type::extra: return "extra";
    case GameEvent::Type::claim: return "claim";
    case GameEvent::Type::turn: return "turn";
    }
    return "?";
}

struct GameLog {
    GameConfig config;
    std::vector<int> shuffle; // post-shuffle deck order, dealt front to back
    std::vector<GameEvent> events;
    std::vector<int> final_table;
    std::vector<long long> scores; // cards collected (or shed, spotit well)
};

namespace detail {

inline void validate_config(const GameConfig& config) {
    if (config.players < 1 || config.players > 8)
        fail(errc::out_of_range, "player count must be 1..8");
    if (config.game == Game::quads &&
        (config.quads_table_size < 6 || config.quads_table_size > 9))
        fail(errc::out_of_range, "quads table size must be 6..9");
    if (config.game == Game::socks && config.variant != "official" &&
        config.variant != "extended")
        fail(errc::out_of_range, "socks variant must be official|extended");
    if (config.game == Game::spotit && config.variant != "tower" && config.variant != "well")
        fail(errc::out_of_range, "spotit variant must be tower|well");
    if ((config.game == Game::set || config.game == Game::quads) && !config.variant.empty())
        fail(errc::out_of_range, "this game has no rule variants");
}

/// First k-subset of the sorted table, in lexicographic order, passing the
/// predicate; nullopt when none does.
template <typename Pred>
std::optional<std::vector<int>> first_subset(const std::vector<int>& table, int k,
                                             Pred&& pred) {
    int n = static_cast<int>(table.size());
    if (k > n) return std::nullopt;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    std::vector<int> pick(static_cast<size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i)
            pick[static_cast<size_t>(i)] = table[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        if (pred(pick)) return pick;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

struct VectorGameRules {
    int initial = 0;      // cards on the table to start
    int extra = 0;        // cards added when no claim exists
    bool refill_to_start = false; // refill the table up to `initial` after a claim
    int refill_fixed = 0;         // or draw exactly this many
};

inline VectorGameRules table_rules(const GameConfig& config) {
    switch (config.game) {
    case Game::set: return {12, 3, true, 0};
    case Game::socks: return {config.variant == "official" ? 12 : 9, 3, true, 0};
    case Game::quads: return {config.quads_table_size, 1, false, 4};
    default: fail(errc::out_of_range, "not a table game");
    }
}

inline std::optional<std::vector<int>> find_claim(const GameConfig& config,
                                                  const std::vector<int>& table) {
    std::vector<int> sorted = table;
    std::sort(sorted.begin(), sorted.end());
    switch (config.game) {
    case Game::set:
        return first_subset(sorted, 3,
                            [](const std::vector<int>& c) { return is_set(c[0], c[1], c[2]); });
    case Game::quads:
        return first_subset(sorted, 4, [](const std::vector<int>& c) {
            return (c[0] ^ c[1] ^ c[2] ^ c[3]) == 0;
        });
    case Game::socks: {
        if (config.variant == "official")
            return first_subset(sorted, 3, [](const std::vector<int>& c) {
                return (c[0] ^ c[1] ^ c[2]) == 0;
            });
        // extended: smallest matches first, so every claim is minimal
        for (int size = 3; size <= 7; ++size) {
            auto claim = first_subset(sorted, size, [](const std::vector<int>& c) {
                return xor_all(c) == 0;
            });
            if (claim) return claim;
        }
        return std::nullopt;
    }
    default: fail(errc::out_of_range, "not a table game");
    }
}

inline GameLog simulate_table_game(const GameConfig& config) {
    GameLog log;
    log.config = config;
    Deck deck = build_deck(config.game == Game::set ? DeckKind::set()
                           : config.game == Game::socks ? DeckKind::socks()
                                                        : DeckKind::quads());
    log.shuffle = deck.cards;
    Xoshiro256ss rng(config.seed);
    shuffle(log.shuffle, rng);
    log.scores.assign(static_cast<size_t>(config.players), 0);

    VectorGameRules rules = table_rules(config);
    size_t cursor = 0;
    std::vector<int> table;
    auto draw = [&](int want, GameEvent::Type type) {
        std::vector<int> dealt;
        while (static_cast<int>(dealt.size()) < want && cursor < log.shuffle.size())
            dealt.push_back(log.shuffle[cursor++]);
        if (!dealt.empty()) {
            table.insert(table.end(), dealt.begin(), dealt.end());
            log.events.push_back({type, -1, dealt, {}, -1});
        }
        return !dealt.empty();
    };

    draw(rules.initial, GameEvent::Type::deal);
    long long claims = 0;
    while (true) {
        auto claim = find_claim(config, table);
        if (claim) {
            int player = static_cast<int>(claims % config.players);
            log.events.push_back({GameEvent::Type::claim, player, *claim, {}, -1});
            log.scores[static_cast<size_t>(player)] += static_cast<long long>(claim->size());
            for (int c : *claim)
                table.erase(std::find(table.begin(), table.end(), c));
            ++claims;
            if (rules.refill_to_start)
                draw(rules.initial - static_cast<int>(table.size()), GameEvent::Type::deal);
            else
                draw(rules.refill_fixed, GameEvent::Type::deal);
            continue;
        }
        if (cursor >= log.shuffle.size()) break; // deck empty and no claim: game over
        draw(rules.extra, GameEvent::Type::extra);
    }
    log.final_table = table;
    std::sort(log.final_table.begin(), log.final_table.end());
    return log;
}

inline GameLog simulate_spotit(const GameConfig& config) {
    GameLog log;
    log.config = config;
    SpotItDeck deck = build_spotit_deck(config.spotit_q);
    log.shuffle.resize(static_cast<size_t>(deck.size()));
    for (int i = 0; i < deck.size(); ++i) log.shuffle[static_cast<size_t>(i)] = i;
    Xoshiro256ss rng(config.seed);
    shuffle(log.shuffle, rng);
    log.scores.assign(static_cast<size_t>(config.players), 0);
    if (deck.size() < config.players + 2)
        fail(errc::out_of_range, "deck too small for that many players");

    const int players = config.players;
    size_t cursor = 0;
    auto card_of = [&](int id) -> const std::vector<int>& {
        return deck.cards[static_cast<size_t>(id)];
    };

    if (config.variant == "tower") {
        // one card per player, the rest is the face-up center pile
        std::vector<int> hand;
        for (int p = 0; p < players; ++p) hand.push_back(log.shuffle[cursor++]);
        log.events.push_back({GameEvent::Type::deal, -1, hand, {}, -1});
        while (cursor < log.shuffle.size()) {
            int center = log.shuffle[cursor++];
            GameEvent turn{GameEvent::Type::turn, -1, {center}, {}, -1};
            for (int p = 0; p < players; ++p) {
                int s = common_symbol(card_of(hand[static_cast<size_t>(p)]), card_of(center));
                turn.symbols.push_back(s);
                if (turn.player < 0 || s < turn.symbol) {
                    turn.player = p;
                    turn.symbol = s;
                }
            }
            hand[static_cast<size_t>(turn.player)] = center;
            ++log.scores[static_cast<size_t>(turn.player)];
            log.events.push_back(std::move(turn));
        }
        // players keep their last card; the won piles are the score
        log.final_table = {};
    } else { // well
        int center = log.shuffle[cursor++];
        std::vector<std::vector<int>> hands(static_cast<size_t>(players));
        for (int p = 0; cursor < log.shuffle.size(); ++cursor, p = (p + 1) % players)
            hands[static_cast<size_t>(p)].push_back(log.shuffle[cursor]);
        for (int p = 0; p < players; ++p)
            log.events.push_back({GameEvent::Type::deal, p, hands[static_cast<size_t>(p)], {}, -1});
        while (true) {
            GameEvent turn{GameEvent::Type::turn, -1, {}, {}, -1};
            for (int p = 0; p < players; ++p) {
                int s = common_symbol(card_of(hands[static_cast<size_t>(p)].front()),
                                      card_of(center));
                turn.symbols.push_back(s);
                if (turn.player < 0 || s < turn.symbol) {
                    turn.player = p;
                    turn.symbol = s;
                }
            }
            auto& hand = hands[static_cast<size_t>(turn.player)];
            center = hand.front();
            hand.erase(hand.begin());
            turn.cards = {center};
            ++log.scores[static_cast<size_t>(turn.player)];
            log.events.push_back(std::move(turn));
            if (hand.empty()) break; // that player shed every card and wins
        }
        for (const auto& hand : hands)
            log.final_table.insert(log.final_table.end(), hand.begin(), hand.end());
    }
    return log;
}

} // namespace detail

inline GameLog simulate(const GameConfig& config) {
    detail::validate_config(config);
    return config.game == Game::spotit ? detail::simulate_spotit(config)
                                       : detail::simulate_table_game(config);
}

// ------------------------------------------------------------------ replay

struct ReplayResult {
    bool legal = true;
    std::string message;
    std::vector<int> final_table;
    std::vector<long long> scores;
};

/// Re-apply a transcript with no search logic: deals must follow the
/// shuffle order, every claim must pass the game's own predicate, and the
/// final state must match the log.
inline ReplayResult replay(const GameLog& log) {
    detail::validate_config(log.config);
    ReplayResult result;
    result.scores.assign(static_cast<size_t>(log.config.players), 0);
    auto reject = [&](const std::string& why) {
        result.legal = false;
        if (result.message.empty()) result.message = why;
    };

    if (log.config.game == Game::spotit) {
        SpotItDeck deck = build_spotit_deck(log.config.spotit_q);
        const int players = log.config.players;
        auto card_of = [&](int id) -> const std::vector<int>& {
            return deck.cards[static_cast<size_t>(id)];
        };
        size_t cursor = 0;
        bool tower = log.config.variant == "tower";
        std::vector<std::vector<int>> hands(static_cast<size_t>(players));
        int center = -1;
        if (tower) {
            for (int p = 0; p < players && cursor < log.shuffle.size(); ++p)
                hands[static_cast<size_t>(p)] = {log.shuffle[cursor++]};
        } else {
            center = log.shuffle[cursor++];
            for (int p = 0; cursor < log.shuffle.size(); ++cursor, p = (p + 1) % players)
                hands[static_cast<size_t>(p)].push_back(log.shuffle[cursor]);
        }
        for (const GameEvent& ev : log.events) {
            if (ev.type != GameEvent::Type::turn) continue;
            if (ev.cards.size() != 1 || ev.symbols.size() != static_cast<size_t>(players) ||
                ev.player < 0 || ev.player >= players) {
                reject("malformed turn event");
                break;
            }
            if (tower) center = log.shuffle[cursor++];
            int winner = -1, winning = -1;
            for (int p = 0; p < players; ++p) {
                // throws unless the pair shares exactly one symbol
                int s = common_symbol(card_of(hands[static_cast<size_t>(p)].front()),
                                      card_of(center));
                if (s != ev.symbols[static_cast<size_t>(p)]) reject("logged symbol is wrong");
                if (winner < 0 || s < winning) {
                    winner = p;
                    winning = s;
                }
            }
            if (winner != ev.player || winning != ev.symbol) reject("wrong turn winner");
            auto& hand = hands[static_cast<size_t>(winner)];
            if (tower) {
                if (ev.cards[0] != center) reject("turn card is not the center card");
                hand.front() = center;
            } else {
                if (ev.cards[0] != hand.front()) reject("turn card is not the player's top");
                center = hand.front();
                hand.erase(hand.begin());
            }
            ++result.scores[static_cast<size_t>(ev.player)];
            if (!result.legal) break;
        }
        if (!tower)
            for (const auto& hand : hands)
                result.final_table.insert(result.final_table.end(), hand.begin(), hand.end());
        if (result.legal && result.final_table != log.final_table)
            reject("final table does not replay");
        if (result.legal && result.scores != log.scores) reject("scores do not replay");
        return result;
    }

    size_t cursor = 0;
    std::vector<int> table;
    for (const GameEvent& ev : log.events) {
        switch (ev.type) {
        case GameEvent::Type::deal:
        case GameEvent::Type::extra:
            for (int c : ev.cards) {
                if (cursor >= log.shuffle.size() || log.shuffle[cursor] != c) {
                    reject("deal does not follow the shuffle");
                    break;
                }
                ++cursor;
                table.push_back(c);
            }
            break;
        case GameEvent::Type::claim: {
            if (ev.player < 0 || ev.player >= log.config.players) {
                reject("claim player out of range");
                break;
            }
            for (int c : ev.cards)
                if (std::count(table.begin(), table.end(), c) != 1) reject("claimed card not on table");
            if (!result.legal) break;
            bool ok = false;
            const auto& cards = ev.cards;
            switch (log.config.game) {
            case Game::set:
                ok = cards.size() == 3 && is_set(cards[0], cards[1], cards[2]);
                break;
            case Game::quads:
                ok = cards.size() == 4 && is_quad(cards[0], cards[1], cards[2], cards[3]);
                break;
            case Game::socks:
                ok = log.config.variant == "official"
                         ? cards.size() == 3 && is_match(cards)
                         : is_match(cards) && is_minimal_match(cards);
                break;
            default: break;
            }
            if (!ok) {
                reject("claim fails the rules predicate");
                break;
            }
            for (int c : cards) table.erase(std::find(table.begin(), table.end(), c));
            result.scores[static_cast<size_t>(ev.player)] +=
                static_cast<long long>(cards.size());
            break;
        }
        case GameEvent::Type::turn: reject("turn event in a table game"); break;
        }
        if (!result.legal) break;
    }
    std::sort(table.begin(), table.end());
    result.final_table = table;
    if (result.legal && table != log.final_table) reject("final table does not replay");
    if (result.legal && result.scores != log.scores) reject("scores do not replay");
    return result;
}

// ------------------------------------------------------------------- batch

struct BatchSummary {
    int runs = 0;
    long long total_claims = 0;
    long long total_claimed_cards = 0;
    double mean_leftover = 0.0;
    int stranded_runs = 0; // games ending with a nonempty table
    std::map<int, int> leftover_histogram;
};

/// Seeds seed, seed+1, ..., seed+runs-1; results are merged in seed order,
/// so the summary is identical no matter how many threads run the batch.
inline BatchSummary simulate_batch(const GameConfig& config, int runs, int threads = 1) {
    if (runs < 1) fail(errc::out_of_range, "need at least one run");
    detail::validate_config(config);
    std::vector<GameLog> logs(static_cast<size_t>(runs));
    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            GameConfig cfg = config;
            cfg.seed = config.seed + static_cast<std::uint64_t>(i);
            logs[static_cast<size_t>(i)] = simulate(cfg);
        }
    };
    if (threads <= 1) {
        work(0, runs);
    } else {
        std::vector<std::thread> pool;
        int chunk = (runs + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int begin = t * chunk;
            if (begin >= runs) break;
            pool.emplace_back(work, begin, std::min(runs, begin + chunk));
        }
        for (auto& th : pool) th.join();
    }
    BatchSummary summary;
    summary.runs = runs;
    long long leftover_sum = 0;
    for (const GameLog& log : logs) {
        for (const GameEvent& ev : log.events)
            if (ev.type == GameEvent::Type::claim) {
                ++summary.total_claims;
                summary.total_claimed_cards += static_cast<long long>(ev.cards.size());
            }
        int leftover = static_cast<int>(log.final_table.size());
        leftover_sum += leftover;
        ++summary.leftover_histogram[leftover];
        if (leftover > 0) ++summary.stranded_runs;
    }
    summary.mean_leftover = static_cast<double>(leftover_sum) / static_cast<double>(runs);
    return summary;
}

} // namespace cardgeom
