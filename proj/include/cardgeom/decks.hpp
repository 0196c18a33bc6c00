#pragma once

// Full mathematical decks for the four games, human-readable labels, the
// 8x8 grid layout of the 64 binary cards, and the 27-card crossover
// subdecks shared between the ternary and binary games.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cardgeom/errors.hpp"
#include "cardgeom/fp_vector.hpp"
#include "cardgeom/projective.hpp"

namespace cardgeom {

enum class Game { set, socks, quads, spotit };

inline std::string game_name(Game g) {
    switch (g) {
    case Game::set: return "set";
    case Game::socks: return "socks";
    case Game::quads: return "quads";
    case Game::spotit: return "spotit";
    }
    return "?";
}

struct DeckKind {
    Game game = Game::set;
    int q = 7; // plane order, spotit only

    static DeckKind set() { return {Game::set, 0}; }
    static DeckKind socks() { return {Game::socks, 0}; }
    static DeckKind quads() { return {Game::quads, 0}; }
    static DeckKind spotit(int q) { return {Game::spotit, q}; }
};

struct Deck {
    DeckKind kind;
    int p = 0; // field order for the vector-space games, 0 for spotit
    int n = 0; // dimension
    std::vector<int> cards;            // canonical ascending codes (or card ids)
    std::optional<SpotItDeck> symbols; // spotit only

    int size() const { return static_cast<int>(cards.size()); }
};

inline Deck build_deck(DeckKind kind) {
    Deck deck;
    deck.kind = kind;
    switch (kind.game) {
    case Game::set:
        deck.p = 3;
        deck.n = 4;
        for (int c = 0; c < 81; ++c) deck.cards.push_back(c);
        break;
    case Game::socks:
        deck.p = 2;
        deck.n = 6;
        for (int c = 1; c < 64; ++c) deck.cards.push_back(c); // no empty card
        break;
    case Game::quads:
        deck.p = 2;
        deck.n = 6;
        for (int c = 0; c < 64; ++c) deck.cards.push_back(c);
        break;
    case Game::spotit: {
        SpotItDeck sd = build_spotit_deck(kind.q); // UnsupportedOrder if q not prime
        for (int c = 0; c < sd.size(); ++c) deck.cards.push_back(c);
        deck.symbols = std::move(sd);
        break;
    }
    }
    return deck;
}

// ------------------------------------------------------------------ labels

namespace label_names {
inline constexpr std::array<const char*, 3> set_colors = {"Green", "Red", "Purple"};
inline constexpr std::array<const char*, 3> set_shadings = {"Empty", "Striped", "Solid"};
inline constexpr std::array<const char*, 3> set_shapes = {"Oval", "Diamond", "Squiggle"};
inline constexpr std::array<const char*, 4> quad_colors = {"Red", "Green", "Yellow", "Blue"};
inline constexpr std::array<const char*, 4> quad_shapes = {"Square", "Icosahedron", "Circle",
                                                           "Spiral"};
// sock positions in card order, most significant bit first
inline constexpr std::array<const char*, 6> sock_colors = {"red",    "blue",   "green",
                                                           "pink",   "purple", "yellow"};
} // namespace label_names

struct CardLabel {
    Game game = Game::set;
    std::vector<std::string> parts; // per-attribute values (socks: colors present)

    /// Rendered human string, e.g. "2 Yellow Circles" or "blue green purple".
    std::string text() const {
        std::ostringstream os;
        if (game == Game::set || game == Game::quads) {
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) os << ' ';
                os << parts[i];
            }
            if (parts[0] != "1") os << 's'; // pluralize the shape
        } else {
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) os << ' ';
                os << parts[i];
            }
        }
        return os.str();
    }
};

inline void check_code(DeckKind kind, int code) {
    switch (kind.game) {
    case Game::set:
        if (code < 0 || code >= 81) fail(errc::invalid_code, "set code out of range");
        break;
    case Game::socks:
        if (code == 0) fail(errc::invalid_code, "the empty card is not in the socks deck");
        if (code < 0 || code >= 64) fail(errc::invalid_code, "socks code out of range");
        break;
    case Game::quads:
        if (code < 0 || code >= 64) fail(errc::invalid_code, "quads code out of range");
        break;
    case Game::spotit: {
        int n = kind.q * kind.q + kind.q + 1;
        if (code < 0 || code >= n) fail(errc::invalid_code, "spotit card id out of range");
        break;
    }
    }
}

inline CardLabel card_label(DeckKind kind, int code) {
    check_code(kind, code);
    CardLabel label;
    label.game = kind.game;
    switch (kind.game) {
    case Game::set: {
        int number = code / 27, color = code / 9 % 3, shading = code / 3 % 3,
            shape = code % 3;
        label.parts = {std::to_string(number + 1), label_names::set_colors[color],
                       label_names::set_shadings[shading], label_names::set_shapes[shape]};
        break;
    }
    case Game::quads: {
        int number = code >> 4, color = (code >> 2) & 3, shape = code & 3;
        label.parts = {std::to_string(number + 1), label_names::quad_colors[color],
                       label_names::quad_shapes[shape]};
        break;
    }
    case Game::socks:
        for (int bit = 0; bit < 6; ++bit)
            if (code >> (5 - bit) & 1) label.parts.push_back(label_names::sock_colors[bit]);
        break;
    case Game::spotit: {
        SpotItDeck sd = build_spotit_deck(kind.q);
        for (int s : sd.cards[static_cast<size_t>(code)])
            label.parts.push_back(std::to_string(s));
        break;
    }
    }
    return label;
}

inline int label_to_code(DeckKind kind, const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> words;
    for (std::string w; is >> w;) words.push_back(w);
    auto find = [&](const auto& table, std::string w) -> int {
        for (size_t i = 0; i < table.size(); ++i)
            if (w == table[i]) return static_cast<int>(i);
        fail(errc::invalid_label, "unknown attribute value '" + w + "'");
    };
    switch (kind.game) {
    case Game::set: {
        if (words.size() != 4) fail(errc::invalid_label, "expected 4 words: " + text);
        int number = std::stoi(words[0]) - 1;
        if (number < 0 || number > 2) fail(errc::invalid_label, "bad count " + words[0]);
        std::string shape = words[3];
        if (number > 0 && !shape.empty() && shape.back() == 's') shape.pop_back();
        return number * 27 + find(label_names::set_colors, words[1]) * 9 +
               find(label_names::set_shadings, words[2]) * 3 +
               find(label_names::set_shapes, shape);
    }
    case Game::quads: {
        if (words.size() != 3) fail(errc::invalid_label, "expected 3 words: " + text);
        int number = std::stoi(words[0]) - 1;
        if (number < 0 || number > 3) fail(errc::invalid_label, "bad count " + words[0]);
        std::string shape = words[2];
        if (number > 0 && !shape.empty() && shape.back() == 's') shape.pop_back();
        return number << 4 | find(label_names::quad_colors, words[1]) << 2 |
               find(label_names::quad_shapes, shape);
    }
    case Game::socks: {
        int code = 0;
        for (const std::string& w : words)
            code |= 1 << (5 - find(label_names::sock_colors, w));
        if (code == 0) fail(errc::invalid_label, "empty sock list");
        return code;
    }
    case Game::spotit: {
        SpotItDeck sd = build_spotit_deck(kind.q);
        std::vector<int> symbols;
        for (const std::string& w : words) symbols.push_back(std::stoi(w));
        std::sort(symbols.begin(), symbols.end());
        for (int c = 0; c < sd.size(); ++c)
            if (sd.cards[static_cast<size_t>(c)] == symbols) return c;
        fail(errc::invalid_label, "no card with symbols: " + text);
    }
    }
    fail(errc::invalid_label, text);
}

// ------------------------------------------------------------------ 8x8 grid

/// Position of a 6-bit card b1..b6 in the 8x8 layout: the bit pairs
/// (b1,b2), (b3,b4), (b5,b6) pick the quadrant at each of the three scales
/// (00 top-left, 01 top-right, 10 bottom-left, 11 bottom-right), which
/// collapses to row = 4*b1 + 2*b3 + b5, col = 4*b2 + 2*b4 + b6.
inline std::pair<int, int> card_to_grid(int code) {
    if (code < 0 || code >= 64) fail(errc::invalid_code, "grid code out of range");
    int b1 = code >> 5 & 1, b2 = code >> 4 & 1, b3 = code >> 3 & 1, b4 = code >> 2 & 1,
        b5 = code >> 1 & 1, b6 = code & 1;
    return {4 * b1 + 2 * b3 + b5, 4 * b2 + 2 * b4 + b6};
}

inline int grid_to_card(int row, int col) {
    if (row < 0 || row >= 8 || col < 0 || col >= 8)
        fail(errc::invalid_code, "grid cell out of range");
    int b1 = row >> 2 & 1, b3 = row >> 1 & 1, b5 = row & 1;
    int b2 = col >> 2 & 1, b4 = col >> 1 & 1, b6 = col & 1;
    return b1 << 5 | b2 << 4 | b3 << 3 | b4 << 2 | b5 << 1 | b6;
}

// --------------------------------------------------------- 27-card subdecks

/// The all-red ternary subdeck and the binary subdeck left after removing
/// all red cards, all icosahedrons, and all 4-symbol cards. Both have 27
/// cards with three free attributes of three values each, and the bijection
/// maps attribute values positionally.
struct SubdeckIso {
    std::vector<int> qset;   // set codes, ascending
    std::vector<int> squads; // quads codes, ascending

    // surviving quads attribute values, indexed by the ternary digit
    static constexpr std::array<int, 3> color_of = {1, 2, 3};  // Green, Yellow, Blue
    static constexpr std::array<int, 3> shape_of = {0, 2, 3};  // Square, Circle, Spiral

    static int to_squads(int set_code) {
        if (set_code / 9 % 3 != 1) fail(errc::invalid_code, "not a red set card");
        int number = set_code / 27, shading = set_code / 3 % 3, shape = set_code % 3;
        return number << 4 | color_of[static_cast<size_t>(shading)] << 2 |
               shape_of[static_cast<size_t>(shape)];
    }

    static int to_qset(int quad_code) {
        int number = quad_code >> 4, color = (quad_code >> 2) & 3, shape = quad_code & 3;
        int shading = -1, set_shape = -1;
        for (int i = 0; i < 3; ++i) {
            if (color_of[static_cast<size_t>(i)] == color) shading = i;
            if (shape_of[static_cast<size_t>(i)] == shape) set_shape = i;
        }
        if (number > 2 || shading < 0 || set_shape < 0)
            fail(errc::invalid_code, "not an s-quads card");
        return number * 27 + 1 * 9 + shading * 3 + set_shape;
    }
};

inline SubdeckIso subdeck_isomorphism() {
    SubdeckIso iso;
    for (int c = 0; c < 81; ++c)
        if (c / 9 % 3 == 1) iso.qset.push_back(c);
    for (int c = 0; c < 64; ++c) {
        int number = c >> 4, color = (c >> 2) & 3, shape = c & 3;
        if (number != 3 && color != 0 && shape != 1) iso.squads.push_back(c);
    }
    return iso;
}

} // namespace cardgeom
