#pragma once

// The correspondence between the 63-card sock deck and the 64-card quads
// deck: both live in F_2^6, each quads attribute covering two sock
// positions. Playing the matching game with quads cards requires setting
// one card aside as the origin; a pile is a matched set exactly when the
// origin-translated codes XOR to zero, and per attribute the cards then
// partition into single-zero / double-same / triple-diff-nonzero groups.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cardgeom/decks.hpp"
#include "cardgeom/errors.hpp"
#include "cardgeom/rules.hpp"

namespace cardgeom {

/// Quads reading of a binary code. The zero code is the origin card
/// ("1 Red Square"), which corresponds to the empty sock card and is only
/// legal when explicitly enabled.
inline CardLabel socks_to_quads(int code, bool allow_zero = false) {
    if (code == 0 && !allow_zero)
        fail(errc::zero_card, "the empty card has no socks counterpart");
    return card_label(DeckKind::quads(), code);
}

/// Sock reading of a binary code (same code, other deck).
inline CardLabel quads_to_socks(int code, bool allow_zero = false) {
    if (code == 0) {
        if (!allow_zero) fail(errc::zero_card, "the origin card has no socks counterpart");
        return CardLabel{Game::socks, {}};
    }
    return card_label(DeckKind::socks(), code);
}

/// Normalized group counts for one attribute of a card pile: at most one
/// single-zero (two of them merge into a double-same) and at most one
/// triple-diff-nonzero (two of them trade for three double-sames).
struct GroupPartition {
    int single_zero = 0;
    int double_same = 0;
    int triple_diff = 0;

    bool operator==(const GroupPartition&) const = default;
};

/// Greedy partition of one attribute: peel zero-valued cards, peel
/// equal-value pairs, and the remainder must be the three distinct nonzero
/// values. Returns nullopt exactly when the attribute values do not XOR
/// to zero.
inline std::optional<GroupPartition> classify_attribute(std::span<const int> cards,
                                                        int attribute) {
    if (attribute < 0 || attribute > 2) fail(errc::out_of_range, "attribute must be 0..2");
    require_distinct(cards);
    int shift = 4 - 2 * attribute;
    std::array<int, 4> value_count{};
    for (int c : cards) ++value_count[static_cast<size_t>(c >> shift & 3)];

    int zeros = value_count[0];
    GroupPartition part;
    part.double_same = zeros / 2;
    part.single_zero = zeros % 2;
    int leftover_distinct = 0;
    for (int v = 1; v < 4; ++v) {
        part.double_same += value_count[static_cast<size_t>(v)] / 2;
        leftover_distinct += value_count[static_cast<size_t>(v)] % 2;
    }
    if (leftover_distinct == 0) return part;
    if (leftover_distinct == 3) { // necessarily the values 01, 10, 11
        part.triple_diff = 1;
        return part;
    }
    return std::nullopt; // attribute XOR is nonzero
}

struct MatchReport {
    bool matched = false;
    bool minimal = false;
    // per-attribute normalized groups, present when matched and minimal
    std::optional<std::array<GroupPartition, 3>> rows;
};

/// Does a pile of quads cards correspond to a matched set of socks, with
/// the given card playing the origin? True iff the origin-translated codes
/// XOR to zero. Minimal matches of 3..7 cards also report the
/// per-attribute group distribution.
inline MatchReport is_socks_match(std::span<const int> cards, int origin = 0) {
    require_distinct(cards);
    for (int c : cards) {
        if (c < 0 || c >= 64) fail(errc::invalid_code, "quads code out of range");
        if (c == origin) fail(errc::origin_in_set, "the origin card is set aside from play");
    }
    std::vector<int> translated;
    translated.reserve(cards.size());
    for (int c : cards) translated.push_back(c ^ origin);

    MatchReport report;
    report.matched = cards.size() >= 3 && xor_all(translated) == 0;
    if (report.matched && cards.size() <= 7) {
        report.minimal = is_minimal_match(translated);
        if (report.minimal) {
            std::array<GroupPartition, 3> rows{};
            for (int attr = 0; attr < 3; ++attr) {
                auto part = classify_attribute(translated, attr);
                rows[static_cast<size_t>(attr)] = *part; // matched => partition exists
            }
            report.rows = rows;
        }
    }
    return report;
}

/// All normalized (single-zero, double-same, triple-diff) rows with
/// s + 2d + 3t = n, s <= 1, t <= 1, in ascending order.
inline std::vector<GroupPartition> enumerate_table3(int n) {
    if (n < 3 || n > 7) fail(errc::out_of_range, "distribution rows cover 3..7 cards");
    std::vector<GroupPartition> rows;
    for (int s = 0; s <= 1; ++s)
        for (int t = 0; t <= 1; ++t) {
            int rest = n - s - 3 * t;
            if (rest >= 0 && rest % 2 == 0) rows.push_back({s, rest / 2, t});
        }
    std::sort(rows.begin(), rows.end(), [](const GroupPartition& a, const GroupPartition& b) {
        return std::array{a.single_zero, a.double_same, a.triple_diff} <
               std::array{b.single_zero, b.double_same, b.triple_diff};
    });
    return rows;
}

} // namespace cardgeom
