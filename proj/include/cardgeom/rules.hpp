#pragma once

// Game predicates and completion operations. Ternary cards are codes in
// [0,81) over F_3^4; binary cards are codes in [0,64) over F_2^6; spotit
// cards are sorted symbol-id vectors.

#include <algorithm>
#include <array>
#include <bit>
#include <span>
#include <string>
#include <vector>

#include "cardgeom/errors.hpp"
#include "cardgeom/fp_vector.hpp"

namespace cardgeom {

inline void require_distinct(std::span<const int> cards) {
    std::vector<int> sorted(cards.begin(), cards.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(errc::duplicate_cards, "duplicate cards in input");
}

// ------------------------------------------------------------------- ternary

/// Three cards form a set iff their vectors sum to zero mod 3.
inline bool is_set(int a, int b, int c) {
    if (a == b || a == c || b == c) fail(errc::duplicate_cards, "is_set needs distinct cards");
    for (int shift = 1; shift <= 27; shift *= 3)
        if ((a / shift % 3 + b / shift % 3 + c / shift % 3) % 3 != 0) return false;
    return true;
}

/// The unique third card completing {a, b}; digitwise -(a+b) mod 3.
inline int complete_set(int a, int b) {
    if (a == b) fail(errc::duplicate_cards, "complete_set needs distinct cards");
    return static_cast<int>(code_neg_sum(3, 4, a, b));
}

// -------------------------------------------------------------------- binary

inline int xor_all(std::span<const int> cards) {
    int x = 0;
    for (int c : cards) x ^= c;
    return x;
}

inline void require_sock_cards(std::span<const int> cards) {
    for (int c : cards) {
        if (c == 0) fail(errc::zero_card, "the empty card is not in the socks deck");
        if (c < 0 || c >= 64) fail(errc::invalid_code, "socks code out of range");
    }
    require_distinct(cards);
}

/// A matched set of socks: at least 3 cards whose codes XOR to zero
/// (1- and 2-card matches are impossible among distinct nonzero cards).
inline bool is_match(std::span<const int> cards) {
    require_sock_cards(cards);
    return cards.size() >= 3 && xor_all(cards) == 0;
}

struct CompletionResult {
    enum class Kind { add, remove, already_matched };
    Kind kind = Kind::already_matched;
    int card = 0; // the card to add or remove

    bool operator==(const CompletionResult&) const = default;
};

/// XOR of the pile decides: zero means matched, a present card must be
/// removed, an absent card must be added.
inline CompletionResult complete_match(std::span<const int> cards) {
    require_sock_cards(cards);
    int x = xor_all(cards);
    if (x == 0) return {CompletionResult::Kind::already_matched, 0};
    if (std::find(cards.begin(), cards.end(), x) != cards.end())
        return {CompletionResult::Kind::remove, x};
    return {CompletionResult::Kind::add, x};
}

/// True iff no proper subset of size >= 3 is matched. Matched sets larger
/// than 7 cards always contain a smaller matched subset.
inline bool is_minimal_match(std::span<const int> cards) {
    if (!is_match(cards)) fail(errc::not_a_match, "is_minimal_match requires a matched set");
    size_t n = cards.size();
    if (n > 7) return false;
    for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
        if (std::popcount(mask) < 3) continue;
        int x = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) x ^= cards[i];
        if (x == 0) return false;
    }
    return true;
}

/// Minimal matched set of size n in 3..7: n-1 distinct single-sock cards
/// plus the card bearing exactly those socks.
inline std::vector<int> construct_minimal_match(int n) {
    if (n < 3 || n > 7) fail(errc::out_of_range, "minimal matches have 3 to 7 cards");
    std::vector<int> cards;
    int all = 0;
    for (int i = 0; i < n - 1; ++i) {
        int single = 1 << (5 - i);
        cards.push_back(single);
        all ^= single;
    }
    cards.push_back(all);
    return cards;
}

/// Four cards form a quad iff their codes XOR to zero.
inline bool is_quad(int a, int b, int c, int d) {
    std::array<int, 4> cards{a, b, c, d};
    require_distinct(cards);
    return (a ^ b ^ c ^ d) == 0;
}

/// The unique fourth card completing {a, b, c}; distinct inputs force the
/// result to differ from all three.
inline int complete_quad(int a, int b, int c) {
    std::array<int, 3> cards{a, b, c};
    require_distinct(cards);
    return a ^ b ^ c;
}

// --------------------------------------------------------------- quad types

/// Per-attribute shape of a quad: S = one value, H = two values twice each,
/// D = all four distinct. Canonical form sorts the letters S < H < D;
/// SSS and SSH cannot occur among distinct cards.
struct QuadType {
    std::array<char, 3> letters{};

    std::string str() const { return std::string(letters.begin(), letters.end()); }
    bool operator==(const QuadType&) const = default;
};

inline QuadType quad_type(int a, int b, int c, int d) {
    if (!is_quad(a, b, c, d)) fail(errc::not_a_quad, "quad_type requires a quad");
    auto rank = [](char ch) { return ch == 'S' ? 0 : ch == 'H' ? 1 : 2; };
    QuadType type;
    for (int attr = 0; attr < 3; ++attr) {
        int shift = 4 - 2 * attr;
        std::array<int, 4> values{a >> shift & 3, b >> shift & 3, c >> shift & 3,
                                  d >> shift & 3};
        std::sort(values.begin(), values.end());
        int distinct = 1;
        for (int i = 1; i < 4; ++i)
            if (values[static_cast<size_t>(i)] != values[static_cast<size_t>(i - 1)]) ++distinct;
        type.letters[static_cast<size_t>(attr)] = distinct == 1 ? 'S' : distinct == 2 ? 'H' : 'D';
    }
    std::sort(type.letters.begin(), type.letters.end(),
              [&](char x, char y) { return rank(x) < rank(y); });
    return type;
}

// ------------------------------------------------------------------- spotit

/// The unique symbol shared by two distinct cards of a generated plane deck.
/// Zero or multiple shared symbols indicate a corrupted deck.
inline int common_symbol(const std::vector<int>& c1, const std::vector<int>& c2) {
    if (c1 == c2) fail(errc::duplicate_cards, "common_symbol needs distinct cards");
    int found = -1;
    for (int s : c1)
        if (std::find(c2.begin(), c2.end(), s) != c2.end()) {
            if (found >= 0)
                fail(errc::multiple_common_symbols, "cards share more than one symbol");
            found = s;
        }
    if (found < 0) fail(errc::no_common_symbol, "cards share no symbol");
    return found;
}

} // namespace cardgeom
