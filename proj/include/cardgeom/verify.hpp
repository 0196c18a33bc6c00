#pragma once

// Invariant suites behind `verify`: every structural property the library
// promises, re-checked from scratch against brute force. Randomized checks
// draw from fixed seeds so output is identical run to run.

#include <array>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cardgeom/analysis.hpp"
#include "cardgeom/capsearch.hpp"
#include "cardgeom/decks.hpp"
#include "cardgeom/io.hpp"
#include "cardgeom/projective.hpp"
#include "cardgeom/rng.hpp"
#include "cardgeom/rules.hpp"
#include "cardgeom/sim.hpp"
#include "cardgeom/xmap.hpp"

namespace cardgeom {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verify_detail {

inline void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
                const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

template <typename Fn>
void guarded(std::vector<CheckResult>& out, const std::string& name, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        add(out, name, false, std::string("exception: ") + e.what());
    }
}

} // namespace verify_detail

// ----------------------------------------------------------------- algebra

inline std::vector<CheckResult> verify_algebra() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    {
        bool ok = true;
        for (auto [p, n] : {std::pair{2, 6}, std::pair{3, 4}}) {
            long m = space_size(p, n);
            for (long a = 0; a < m && ok; ++a) {
                FpVector va = decode(p, n, a);
                std::vector<FpVector> single{va, negate(va)};
                if (group_sum(single) != zero_vector(p, n)) ok = false;
                for (long b = 0; b < m && ok; ++b) {
                    FpVector vb = decode(p, n, b);
                    std::vector<FpVector> ab{va, vb}, ba{vb, va};
                    if (group_sum(ab) != group_sum(ba)) ok = false;
                }
            }
            // associativity over a deterministic stride of triples
            for (long a = 0; a < m && ok; a += 7)
                for (long b = 0; b < m && ok; b += 5)
                    for (long c = 0; c < m && ok; c += 3) {
                        FpVector va = decode(p, n, a), vb = decode(p, n, b),
                                 vc = decode(p, n, c);
                        std::vector<FpVector> left{group_sum(std::vector{va, vb}), vc};
                        std::vector<FpVector> right{va, group_sum(std::vector{vb, vc})};
                        if (group_sum(left) != group_sum(right)) ok = false;
                    }
        }
        add(out, "algebra: group sum commutes, associates, cancels negation", ok);
    }
    {
        bool ok = true;
        for (auto [p, n] : {std::pair{2, 6}, std::pair{3, 4}})
            for (long code = 0; code < space_size(p, n); ++code)
                if (encode(decode(p, n, code)) != code) ok = false;
        add(out, "algebra: integer encoding round-trips every code", ok);
    }
    {
        // oracle: compare against naive cross-multiplication on big integers
        bool ok = true;
        Xoshiro256ss gen(0xa15eb);
        auto draw = [&]() {
            BigInt num = static_cast<long long>(gen.next() % 2000001) - 1000000;
            BigInt den = static_cast<long long>(gen.next() % 1000000) + 1;
            return Rational(num, den);
        };
        for (int i = 0; i < 1000 && ok; ++i) {
            Rational a = draw(), b = draw();
            // unreduced cross-multiplied expectations
            BigInt an = a.num(), ad = a.den(), bn = b.num(), bd = b.den();
            auto same = [](const Rational& r, const BigInt& n, const BigInt& d) {
                return r.num() * d == n * r.den();
            };
            if (!same(a + b, an * bd + bn * ad, ad * bd)) ok = false;
            if (!same(a - b, an * bd - bn * ad, ad * bd)) ok = false;
            if (!same(a * b, an * bn, ad * bd)) ok = false;
            if (bn != 0 && !same(a / b, an * bd, ad * bn)) ok = false;
            if (a.den() <= 0) ok = false;
        }
        add(out, "algebra: rational arithmetic matches cross-multiplication oracle", ok);
    }
    return out;
}

// ------------------------------------------------------------------- decks

inline std::vector<CheckResult> verify_decks() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    {
        Deck socks = build_deck(DeckKind::socks());
        Deck quads = build_deck(DeckKind::quads());
        std::set<int> s(socks.cards.begin(), socks.cards.end());
        std::set<int> q(quads.cards.begin(), quads.cards.end());
        q.erase(0);
        add(out, "decks: sock deck equals quads deck minus the zero card", s == q);
    }
    {
        bool ok = true;
        std::set<std::pair<int, int>> cells;
        for (int code = 0; code < 64; ++code) {
            auto cell = card_to_grid(code);
            cells.insert(cell);
            if (grid_to_card(cell.first, cell.second) != code) ok = false;
        }
        add(out, "decks: 8x8 grid layout is a bijection", ok && cells.size() == 64);
    }
    {
        bool ok = true;
        for (DeckKind kind : {DeckKind::set(), DeckKind::socks(), DeckKind::quads(),
                              DeckKind::spotit(7)}) {
            Deck deck = build_deck(kind);
            for (int code : deck.cards)
                if (label_to_code(kind, card_label(kind, code).text()) != code) ok = false;
        }
        add(out, "decks: labels round-trip for every card of every kind", ok);
    }
    return out;
}

// ------------------------------------------------------------------- rules

inline std::vector<CheckResult> verify_rules() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    {
        bool ok = true;
        for (int a = 0; a < 81 && ok; ++a)
            for (int b = 0; b < 81; ++b) {
                if (a == b) continue;
                int c = complete_set(a, b);
                if (c == a || c == b || !is_set(a, b, c)) { ok = false; break; }
            }
        for (int a = 0; a < 64 && ok; ++a)
            for (int b = a + 1; b < 64 && ok; ++b)
                for (int c = b + 1; c < 64; ++c) {
                    int d = complete_quad(a, b, c);
                    if (d == a || d == b || d == c) { ok = false; break; }
                }
        add(out, "rules: completions never return an input card", ok);
    }
    {
        // every quad, translated so one card is the origin, closes under XOR
        long long quads = 0;
        bool ok = true;
        for (int a = 0; a < 64; ++a)
            for (int b = a + 1; b < 64; ++b)
                for (int c = b + 1; c < 64; ++c) {
                    int d = a ^ b ^ c;
                    if (d > c) {
                        ++quads;
                        if (((b ^ a) ^ (c ^ a)) != (d ^ a)) ok = false;
                    }
                }
        add(out, "rules: all 10416 quads are coplanar after translation",
            ok && quads == 10416, "quads=" + std::to_string(quads));
    }
    {
        // six cards all bearing a blue sock can never split into two matches
        Xoshiro256ss rng(0xb1ce);
        std::vector<int> blue;
        for (int c = 1; c < 64; ++c)
            if (c & 16) blue.push_back(c);
        bool ok = true;
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            std::vector<int> pick = sample_without_replacement(
                static_cast<int>(blue.size()), 6, rng);
            std::array<int, 6> pile{};
            for (int i = 0; i < 6; ++i)
                pile[static_cast<size_t>(i)] = blue[static_cast<size_t>(pick[static_cast<size_t>(i)])];
            for (int i = 1; i < 6 && ok; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    // triple containing pile[0] vs the complementary triple
                    int t1 = pile[0] ^ pile[static_cast<size_t>(i)] ^ pile[static_cast<size_t>(j)];
                    int t2 = 0;
                    for (int k = 1; k < 6; ++k)
                        if (k != i && k != j) t2 ^= pile[static_cast<size_t>(k)];
                    if (t1 == 0 && t2 == 0) { ok = false; break; }
                }
        }
        add(out, "rules: no blue-sock 6-pile splits into two matched triples", ok);
    }
    {
        // minimal matched subsets of random matched sets have 3..7 cards
        Xoshiro256ss rng(0x3117);
        bool ok = true;
        for (int trial = 0; trial < 500 && ok; ++trial) {
            int size = 4 + static_cast<int>(rng.bounded(6)); // 4..9 before completion
            std::vector<int> cards = sample_without_replacement(63, size, rng);
            for (int& c : cards) ++c; // codes 1..63
            auto completion = complete_match(cards);
            if (completion.kind == CompletionResult::Kind::add)
                cards.push_back(completion.card);
            else if (completion.kind == CompletionResult::Kind::remove)
                cards.erase(std::find(cards.begin(), cards.end(), completion.card));
            if (!is_match(cards)) { ok = false; break; }
            // smallest matched subset, by ascending subset size
            size_t n = cards.size();
            int smallest = 0;
            for (int want = 3; want <= static_cast<int>(n) && smallest == 0; ++want)
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    if (std::popcount(mask) != want) continue;
                    int x = 0;
                    for (size_t i = 0; i < n; ++i)
                        if (mask >> i & 1) x ^= cards[i];
                    if (x == 0) { smallest = want; break; }
                }
            if (smallest < 3 || smallest > 7) ok = false;
        }
        add(out, "rules: minimal matched subsets always have 3..7 cards", ok);
    }
    return out;
}

// -------------------------------------------------------------- probability

inline std::vector<CheckResult> verify_probability() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    {
        bool ok = true;
        for (int n = 1; n <= 61; n += 2)
            if (match_probability(n) != match_probability_closed(n)) ok = false;
        add(out, "probability: closed form equals the recursion for odd n in 1..61", ok);
    }
    SubsetSumCounts counts63(build_deck(DeckKind::socks()), 63);
    {
        bool ok = counts63.count(0, 0) == 1 && match_probability(0) == Rational(0);
        for (int n = 1; n <= 63; ++n)
            if (Rational(counts63.count(n, 0), binomial(63, n)) != match_probability(n))
                ok = false;
        add(out, "probability: recursion equals the subset-sum oracle for n in 1..63", ok,
            "n=0 endpoint: the empty subset counts as sum zero while P(0)=0 by convention");
    }
    {
        bool ok = match_probability(63) == Rational(1);
        for (int n = 1; n <= 62; ++n)
            if (match_probability(n) != match_probability(63 - n)) ok = false;
        for (int n = 1; n <= 31; ++n)
            if (match_probability(2 * n) != match_probability(2 * n - 1)) ok = false;
        add(out, "probability: P(n)=P(63-n) on 1..62, P(2n)=P(2n-1), P(63)=1", ok);
    }
    {
        SubsetSumCounts counts64(build_deck(DeckKind::quads()), 64);
        Rational anchor(BigInt(1), BigInt(64));
        bool ok = true;
        for (int n = 1; n <= 63; n += 2)
            if (Rational(counts64.count(n, 0), binomial(64, n)) != anchor) ok = false;
        // even sizes genuinely deviate: two distinct cards never XOR to zero,
        // and the full 64-card deck always sums to zero
        if (counts64.count(2, 0) != 0 || counts64.count(64, 0) != 1) ok = false;
        add(out, "probability: 1/64 anchor holds for every odd draw of the 64-card deck",
            ok, "even draws deviate by construction (counts(2,0)=0, counts(64,0)=1)");
    }
    {
        Xoshiro256ss rng(0xc0ffee);
        Deck deck = build_deck(DeckKind::set());
        bool ok = true;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int size_a = std::array{10, 20, 27, 40}[static_cast<size_t>(trial % 4)];
            std::vector<int> pick = sample_without_replacement(81, size_a, rng);
            std::set<int> in_a(pick.begin(), pick.end());
            std::vector<int> a, b;
            for (int c = 0; c < 81; ++c)
                (in_a.count(c) ? a : b).push_back(c);
            if (count_sets(a) + count_sets(b) != complementary_identity(size_a)) ok = false;
        }
        add(out, "probability: complementary piles satisfy the set-count identity", ok);
    }
    {
        Rational anchor(BigInt(1), BigInt(64));
        bool ok = true;
        int prev = 0;
        for (int n = 1; n <= 61; n += 2) {
            int sign = (match_probability(n) - anchor).sign();
            if (sign == 0 || (prev != 0 && sign == prev)) ok = false;
            prev = sign;
        }
        add(out, "probability: P(n)-1/64 alternates in sign down the odd rows", ok);
    }
    return out;
}

// ------------------------------------------------------------------- planes

inline std::vector<CheckResult> verify_planes() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    {
        bool ok = true;
        std::string sizes;
        for (int q : {2, 3, 5, 7}) {
            SpotItDeck deck = build_spotit_deck(q);
            PlaneReport report = verify_plane(deck);
            if (!report.all_ok()) ok = false;
            sizes += (sizes.empty() ? "" : ", ") + std::to_string(deck.size()) + "x" +
                     std::to_string(deck.symbols_per_card());
        }
        add(out, "planes: generated decks pass verification for q in {2,3,5,7}", ok, sizes);
    }
    {
        bool ok = true;
        for (int q : {2, 3, 5, 7}) {
            IncidencePlane plane = build_projective_plane(q);
            SpotItDeck transpose;
            transpose.q = q;
            transpose.cards = plane.point_lines; // swap the roles of points and lines
            if (!verify_plane(transpose).all_ok()) ok = false;
        }
        add(out, "planes: point/line duality passes verification", ok);
    }
    {
        FanoCorrespondence fc = fano_socks_correspondence();
        bool ok = fc.triples.size() == 7;
        std::set<int> lines(fc.triple_to_line.begin(), fc.triple_to_line.end());
        ok = ok && lines.size() == 7 && !lines.count(-1);
        std::array<int, 8> per_card{};
        for (const auto& t : fc.triples)
            for (int c : t) ++per_card[static_cast<size_t>(c)];
        for (int c = 1; c <= 7; ++c)
            if (per_card[static_cast<size_t>(c)] != 3) ok = false;
        add(out, "planes: binary-sock triples are exactly the Fano lines", ok);
    }
    return out;
}

// ----------------------------------------------------------- correspondence

inline std::vector<CheckResult> verify_correspondence() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    {
        Xoshiro256ss rng(0x7ab1e);
        bool ok = true;
        for (int trial = 0; trial < 2000 && ok; ++trial) {
            int size = 1 + static_cast<int>(rng.bounded(7));
            std::vector<int> cards = sample_without_replacement(64, size, rng);
            for (int attr = 0; attr < 3; ++attr) {
                int shift = 4 - 2 * attr, x = 0;
                for (int c : cards) x ^= c >> shift & 3;
                auto part = classify_attribute(cards, attr);
                if (part.has_value() != (x == 0)) ok = false;
                if (part &&
                    part->single_zero + 2 * part->double_same + 3 * part->triple_diff !=
                        static_cast<int>(cards.size()))
                    ok = false;
                if (part && (part->single_zero > 1 || part->triple_diff > 1)) ok = false;
            }
        }
        add(out, "correspondence: attribute partitions exist exactly when the attribute XORs to zero",
            ok);
    }
    {
        Xoshiro256ss rng(0x0515);
        bool ok = true;
        for (int trial = 0; trial < 2000 && ok; ++trial) {
            int size = 1 + static_cast<int>(rng.bounded(8));
            std::vector<int> cards = sample_without_replacement(63, size, rng);
            for (int& c : cards) ++c;
            if (is_socks_match(cards, 0).matched != is_match(cards)) ok = false;
        }
        add(out, "correspondence: zero origin makes the match test the identity on codes", ok);
    }
    {
        Xoshiro256ss rng(0x0516);
        bool ok = true;
        for (int trial = 0; trial < 2000 && ok; ++trial) {
            int origin = static_cast<int>(rng.bounded(64));
            int size = 1 + static_cast<int>(rng.bounded(8));
            std::vector<int> pool = sample_without_replacement(63, size, rng);
            std::vector<int> cards, translated;
            for (int c : pool) {
                int card = c + 1 <= origin ? c : c + 1; // skip the origin card
                cards.push_back(card);
                translated.push_back(card ^ origin);
            }
            if (is_socks_match(cards, origin).matched != is_match(translated)) ok = false;
        }
        add(out, "correspondence: match test is covariant under origin translation", ok);
    }
    {
        bool ok = true;
        std::array<size_t, 5> expected_rows{2, 2, 2, 2, 2};
        for (int n = 3; n <= 7; ++n) {
            auto rows = enumerate_table3(n);
            if (rows.size() != expected_rows[static_cast<size_t>(n - 3)]) ok = false;
            for (const auto& row : rows) {
                if (row.single_zero + 2 * row.double_same + 3 * row.triple_diff != n) ok = false;
                if (row.single_zero > 1 || row.triple_diff > 1) ok = false;
            }
        }
        add(out, "correspondence: distribution rows satisfy s+2d+3t=n with s,t in {0,1}", ok);
    }
    return out;
}

// ------------------------------------------------------------------- search

inline std::vector<CheckResult> verify_search() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    {
        // unpruned oracle: enumerate every subset of the tiny spaces
        auto brute_max = [](int dim) {
            int n = static_cast<int>(space_size(3, dim));
            int best = 0;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> pile;
                for (int c = 0; c < n; ++c)
                    if (mask >> c & 1) pile.push_back(c);
                if (static_cast<int>(pile.size()) <= best) continue;
                bool cap = true;
                for (size_t i = 0; i < pile.size() && cap; ++i)
                    for (size_t j = i + 1; j < pile.size() && cap; ++j) {
                        int third = static_cast<int>(code_neg_sum(3, dim, pile[i], pile[j]));
                        if (third > pile[j] &&
                            std::find(pile.begin(), pile.end(), third) != pile.end())
                            cap = false;
                    }
                if (cap) best = static_cast<int>(pile.size());
            }
            return best;
        };
        bool ok = true;
        for (int dim : {1, 2}) {
            CapCertificate cert = find_max_cap(dim, 10.0);
            if (static_cast<int>(cert.pile.size()) != brute_max(dim)) ok = false;
            if (!cert.exhausted) ok = false;
        }
        add(out, "search: pruned DFS matches the unpruned subset oracle on tiny spaces", ok);
    }
    {
        bool ok = true;
        for (int dim : {1, 2, 3}) {
            CapCertificate cert = find_max_cap(dim, 30.0);
            if (!verify_certificate(cert)) ok = false;
            if (cert.internal_count != 0 || !cert.extension_blocked) ok = false;
        }
        CapCertificate noquad = find_noquad(30.0);
        if (!verify_certificate(noquad) || noquad.pile.size() != 9) ok = false;
        add(out, "search: every certificate re-verifies from scratch", ok);
    }
    {
        NoquadEstimate a = noquad_probability_estimate(9, 20000, 99);
        NoquadEstimate b = noquad_probability_estimate(9, 20000, 99);
        add(out, "search: fixed seeds reproduce Monte Carlo estimates bit-exactly",
            a.hits == b.hits && a.fraction == b.fraction,
            "fraction=" + std::to_string(a.fraction));
    }
    return out;
}

// --------------------------------------------------------------- simulation

inline std::vector<CheckResult> verify_simulation() {
    using verify_detail::add;
    std::vector<CheckResult> out;

    auto configs = [] {
        std::vector<GameConfig> cs;
        cs.push_back({Game::set, "", 2, 7, 9, 7});
        cs.push_back({Game::socks, "official", 3, 11, 9, 7});
        cs.push_back({Game::socks, "extended", 2, 13, 9, 7});
        cs.push_back({Game::quads, "", 2, 17, 8, 7});
        cs.push_back({Game::spotit, "tower", 3, 19, 9, 7});
        cs.push_back({Game::spotit, "well", 4, 23, 9, 2});
        return cs;
    }();

    {
        bool ok = true;
        for (const GameConfig& config : configs) {
            GameLog a = simulate(config), b = simulate(config);
            if (gamelog_to_json(a).dump() != gamelog_to_json(b).dump()) ok = false;
            GameLog c = gamelog_from_json(gamelog_to_json(a));
            ReplayResult replayed = replay(c);
            if (!replayed.legal || replayed.final_table != a.final_table ||
                replayed.scores != a.scores)
                ok = false;
        }
        add(out, "simulation: transcripts replay to the identical final state", ok);
    }
    {
        bool ok = true;
        for (const GameConfig& base : configs)
            for (std::uint64_t seed = 100; seed < 120; ++seed) {
                GameConfig config = base;
                config.seed = seed;
                if (!replay(simulate(config)).legal) ok = false;
            }
        add(out, "simulation: every logged claim passes its rules predicate", ok);
    }
    {
        bool ok = true;
        GameConfig config{Game::socks, "extended", 2, 0, 9, 7};
        for (std::uint64_t seed = 0; seed < 1000 && ok; ++seed) {
            config.seed = seed;
            GameLog log = simulate(config);
            if (!log.final_table.empty() && xor_all(log.final_table) != 0) ok = false;
            // the table right after the last deal is itself a matched set
            std::vector<int> table;
            size_t dealt = 0;
            for (const GameEvent& ev : log.events) {
                if (ev.type == GameEvent::Type::deal || ev.type == GameEvent::Type::extra)
                    dealt += ev.cards.size();
                if (ev.type == GameEvent::Type::claim)
                    for (int c : ev.cards) table.push_back(c);
            }
            if (dealt == 63) {
                int x = 0;
                for (int c : table) x ^= c; // claims all matched
                for (int c : log.final_table) x ^= c;
                // claims ^ final table = whole deck, so the final table XORs to 0
                if ((x ^ xor_all(log.shuffle)) != 0) ok = false;
            }
        }
        add(out, "simulation: extended sock games always end on a matched (or empty) table",
            ok);
    }
    {
        bool ok = true;
        GameConfig config{Game::socks, "official", 2, 0, 9, 7};
        for (std::uint64_t seed = 2000; seed < 2300 && ok; ++seed) {
            config.seed = seed;
            GameLog log = simulate(config);
            for (const GameEvent& ev : log.events) {
                if (ev.type != GameEvent::Type::claim) continue;
                if (ev.cards.size() != 3) { ok = false; break; }
                for (int sock = 0; sock < 6; ++sock) {
                    int count = 0;
                    for (int c : ev.cards)
                        if (c >> (5 - sock) & 1) ++count;
                    if (count != 0 && count != 2) { ok = false; break; }
                }
            }
        }
        add(out, "simulation: official sock claims carry zero or two of each sock", ok);
    }
    return out;
}

// --------------------------------------------------------------------- all

inline std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> out;
    for (auto* suite : {verify_algebra, verify_decks, verify_rules, verify_probability,
                        verify_planes, verify_correspondence, verify_search,
                        verify_simulation}) {
        std::vector<CheckResult> results = suite();
        out.insert(out.end(), results.begin(), results.end());
    }
    return out;
}

inline int print_results(const std::vector<CheckResult>& results, std::ostream& os) {
    int failures = 0;
    for (const CheckResult& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        os << "\n";
        if (!r.pass) ++failures;
    }
    os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
       << " (" << results.size() << " total)\n";
    return failures;
}

} // namespace cardgeom
