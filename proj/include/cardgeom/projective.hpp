#pragma once

// PG(2,q) for prime q, the Spot It!-style decks it induces, and the
// correspondence between the 7-card binary-sock deck and the Fano plane.
//
// Points are projective classes of nonzero F_q^3 vectors with the canonical
// representative scaled so the first nonzero coordinate is 1; lines use the
// same representatives by duality. Point and line ids are the lexicographic
// ranks of those representatives, which keeps symbol ids stable across runs.

#include <algorithm>
#include <array>
#include <vector>

#include "cardgeom/errors.hpp"

namespace cardgeom {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

struct IncidencePlane {
    int q = 0;
    std::vector<std::array<int, 3>> points; // canonical representatives
    std::vector<std::array<int, 3>> lines;
    std::vector<std::vector<int>> line_points; // line id -> sorted point ids
    std::vector<std::vector<int>> point_lines; // point id -> sorted line ids

    int size() const { return q * q + q + 1; }
};

inline IncidencePlane build_projective_plane(int q) {
    if (!is_prime(q))
        fail(errc::unsupported_order, "projective plane order must be prime, got " +
                                          std::to_string(q));
    IncidencePlane plane;
    plane.q = q;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
                std::array<int, 3> v{x, y, z};
                int first = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
                if (first != 1) continue; // not the canonical representative
                plane.points.push_back(v);
            }
    plane.lines = plane.points; // duality: same representatives
    const int n = plane.size();
    plane.line_points.resize(static_cast<size_t>(n));
    plane.point_lines.resize(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
        const auto& u = plane.lines[static_cast<size_t>(l)];
        for (int p = 0; p < n; ++p) {
            const auto& v = plane.points[static_cast<size_t>(p)];
            if ((u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q == 0) {
                plane.line_points[static_cast<size_t>(l)].push_back(p);
                plane.point_lines[static_cast<size_t>(p)].push_back(l);
            }
        }
    }
    return plane;
}

struct SpotItDeck {
    int q = 0;
    std::vector<std::vector<int>> cards; // card id -> sorted symbol ids

    int size() const { return static_cast<int>(cards.size()); }
    int symbols_per_card() const { return q + 1; }
    int symbol_universe() const { return q * q + q + 1; }
};

/// One card per line of PG(2,q), carrying the incident point ids as symbols.
inline SpotItDeck build_spotit_deck(int q) {
    IncidencePlane plane = build_projective_plane(q);
    SpotItDeck deck;
    deck.q = q;
    deck.cards = std::move(plane.line_points);
    return deck;
}

struct PlaneReport {
    bool pair_property_ok = true;  // every pair of cards shares exactly one symbol
    bool multiplicity_ok = true;   // every symbol appears on exactly q+1 cards
    bool counts_ok = true;         // q^2+q+1 cards of q+1 symbols each
    // offending card pairs: (card a, card b, number of shared symbols)
    std::vector<std::array<int, 3>> bad_pairs;
    std::vector<int> bad_symbols;

    bool all_ok() const { return pair_property_ok && multiplicity_ok && counts_ok; }
};

inline int shared_symbol_count(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted
    int count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

inline PlaneReport verify_plane(const SpotItDeck& deck) {
    PlaneReport report;
    const int n = deck.size();
    const int expected = deck.symbol_universe();
    if (n != expected) report.counts_ok = false;
    for (const auto& card : deck.cards)
        if (static_cast<int>(card.size()) != deck.symbols_per_card())
            report.counts_ok = false;

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int shared = shared_symbol_count(deck.cards[static_cast<size_t>(a)],
                                             deck.cards[static_cast<size_t>(b)]);
            if (shared != 1) {
                report.pair_property_ok = false;
                report.bad_pairs.push_back({a, b, shared});
            }
        }

    std::vector<int> multiplicity(static_cast<size_t>(expected), 0);
    for (const auto& card : deck.cards)
        for (int s : card)
            if (0 <= s && s < expected) ++multiplicity[static_cast<size_t>(s)];
    for (int s = 0; s < expected; ++s)
        if (multiplicity[static_cast<size_t>(s)] != deck.q + 1) {
            report.multiplicity_ok = false;
            report.bad_symbols.push_back(s);
        }
    return report;
}

/// The 7 nonzero vectors of F_2^3 (a 3-sock deck) are the Fano points, and
/// the 7 matched triples {a, b, a^b} are exactly the Fano lines.
struct FanoCorrespondence {
    IncidencePlane plane;                        // PG(2,2)
    std::array<int, 8> card_to_point{};          // index by 3-bit card code; [0] unused
    std::array<int, 7> point_to_card{};          // point id -> card code
    std::vector<std::array<int, 3>> triples;     // matched triples, sorted
    std::vector<int> triple_to_line;             // triple index -> line id
};

inline FanoCorrespondence fano_socks_correspondence() {
    FanoCorrespondence fc;
    fc.plane = build_projective_plane(2);
    fc.card_to_point.fill(-1);
    for (int p = 0; p < 7; ++p) {
        const auto& v = fc.plane.points[static_cast<size_t>(p)];
        int code = 4 * v[0] + 2 * v[1] + v[2];
        fc.card_to_point[static_cast<size_t>(code)] = p;
        fc.point_to_card[static_cast<size_t>(p)] = code;
    }
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) {
            int c = a ^ b;
            if (c > b) fc.triples.push_back({a, b, c});
        }
    for (const auto& t : fc.triples) {
        std::vector<int> pts = {fc.card_to_point[static_cast<size_t>(t[0])],
                                fc.card_to_point[static_cast<size_t>(t[1])],
                                fc.card_to_point[static_cast<size_t>(t[2])]};
        std::sort(pts.begin(), pts.end());
        int line = -1;
        for (int l = 0; l < 7; ++l)
            if (fc.plane.line_points[static_cast<size_t>(l)] == pts) line = l;
        fc.triple_to_line.push_back(line);
    }
    return fc;
}

} // namespace cardgeom
