#pragma once

// Exact probability and counting machinery: the matched-set probability
// table P(0..63) with its closed form, a subset-sum dynamic program that
// counts k-subsets by group sum (the brute-force oracle for every
// probability claim), set/quad census routines, and the complementary-pile
// identity.

#include <span>
#include <vector>

#include "cardgeom/decks.hpp"
#include "cardgeom/errors.hpp"
#include "cardgeom/fp_vector.hpp"
#include "cardgeom/rational.hpp"
#include "cardgeom/rules.hpp"

namespace cardgeom {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact at every step
    }
    return r;
}

/// n!! = n(n-2)(n-4)...; (-1)!! = 0!! = 1!! = 1.
inline BigInt double_factorial(int n) {
    if (n < -1) fail(errc::out_of_range, "double factorial needs n >= -1");
    BigInt r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

// ------------------------------------------------------- probability table

/// Exact P(n) for the 63-card deck: the probability that n random distinct
/// cards have an even number of each sock. Built from the recursion
/// P(n+1) = (1 - P(n) - n P(n-1)) / (63 - n) seeded P(0)=P(1)=P(2)=0,
/// mirrored by P(n) = P(63-n) above the midpoint, and anchored P(63)=1
/// (the whole deck is matched; its empty complement is the one index the
/// mirror identity does not cover).
class ProbabilityTable {
public:
    static const ProbabilityTable& socks() {
        static const ProbabilityTable table;
        return table;
    }

    const Rational& at(int n) const {
        if (n < 0 || n > 63) fail(errc::out_of_range, "P(n) defined for n in 0..63");
        return values_[static_cast<size_t>(n)];
    }

private:
    ProbabilityTable() {
        values_.assign(64, Rational(0));
        for (int n = 2; n < 31; ++n)
            values_[static_cast<size_t>(n + 1)] =
                (Rational(1) - values_[static_cast<size_t>(n)] -
                 Rational(n) * values_[static_cast<size_t>(n - 1)]) /
                Rational(63 - n);
        for (int n = 32; n < 63; ++n)
            values_[static_cast<size_t>(n)] = values_[static_cast<size_t>(63 - n)];
        values_[63] = Rational(1);
    }

    std::vector<Rational> values_;
};

inline Rational match_probability(int n) { return ProbabilityTable::socks().at(n); }

/// Closed form for odd n = 2k+1 in 1..61:
/// P(2k+1) = 1/64 - (-1)^k (2k+1)!!(61-2k)!! / (64 * 61!!).
inline Rational match_probability_closed(int n) {
    if (n < 1 || n > 61) fail(errc::out_of_range, "closed form defined for odd n in 1..61");
    if (n % 2 == 0) fail(errc::even_index, "closed form defined for odd n only");
    int k = (n - 1) / 2;
    Rational term(double_factorial(2 * k + 1) * double_factorial(61 - 2 * k),
                  64 * double_factorial(61));
    Rational base(BigInt(1), BigInt(64));
    return k % 2 == 0 ? base - term : base + term;
}

// --------------------------------------------------------- subset-sum oracle

/// counts(k, t) = number of k-subsets of the deck whose group sum is t,
/// computed by dynamic programming over cards x group elements. Exact for
/// every k up to the requested bound.
class SubsetSumCounts {
public:
    SubsetSumCounts(const Deck& deck, int kmax) {
        if (deck.kind.game == Game::spotit)
            fail(errc::unsupported_deck, "subset sums need a vector-space deck");
        p_ = deck.p;
        n_ = deck.n;
        order_ = static_cast<int>(space_size(p_, n_));
        kmax_ = kmax < 0 || kmax > deck.size() ? deck.size() : kmax;
        counts_.assign(static_cast<size_t>(kmax_ + 1),
                       std::vector<BigInt>(static_cast<size_t>(order_), 0));
        counts_[0][0] = 1;
        // addition table for the group; XOR when p = 2
        std::vector<int> add;
        if (p_ != 2) {
            add.resize(static_cast<size_t>(order_ * order_));
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b)
                    add[static_cast<size_t>(a * order_ + b)] =
                        static_cast<int>(code_add(p_, n_, a, b));
        }
        for (int card : deck.cards) {
            int neg_card = static_cast<int>(code_neg_sum(p_, n_, card, 0));
            for (int k = std::min(kmax_, processed_ + 1); k >= 1; --k) {
                auto& row = counts_[static_cast<size_t>(k)];
                const auto& prev = counts_[static_cast<size_t>(k - 1)];
                for (int t = 0; t < order_; ++t) {
                    // previous sum s with s + card = t
                    int s = p_ == 2 ? (t ^ card)
                                    : add[static_cast<size_t>(t * order_ + neg_card)];
                    row[static_cast<size_t>(t)] += prev[static_cast<size_t>(s)];
                }
            }
            ++processed_;
        }
    }

    const BigInt& count(int k, int target) const {
        if (k < 0 || k > kmax_ || target < 0 || target >= order_)
            fail(errc::out_of_range, "subset-sum query out of range");
        return counts_[static_cast<size_t>(k)][static_cast<size_t>(target)];
    }

    int group_order() const { return order_; }
    int kmax() const { return kmax_; }

private:
    int p_ = 2, n_ = 0, order_ = 0, kmax_ = 0, processed_ = 0;
    std::vector<std::vector<BigInt>> counts_;
};

inline SubsetSumCounts subset_sum_counts(const Deck& deck, int k = -1) {
    return SubsetSumCounts(deck, k);
}

// ------------------------------------------------------------------ censuses

/// Exact number of sets inside a pile of ternary cards, by enumerating
/// pairs and testing membership of the unique completion.
inline long long count_sets(std::span<const int> pile) {
    require_distinct(pile);
    std::array<bool, 81> present{};
    for (int c : pile) present[static_cast<size_t>(c)] = true;
    std::vector<int> cards(pile.begin(), pile.end());
    std::sort(cards.begin(), cards.end());
    long long count = 0;
    for (size_t i = 0; i < cards.size(); ++i)
        for (size_t j = i + 1; j < cards.size(); ++j) {
            int third = complete_set(cards[i], cards[j]);
            if (third > cards[j] && present[static_cast<size_t>(third)]) ++count;
        }
    return count;
}

/// Exact number of quads inside a pile of binary cards, by exhaustive
/// enumeration of 4-subsets.
inline long long count_quads(std::span<const int> pile) {
    require_distinct(pile);
    std::vector<int> cards(pile.begin(), pile.end());
    std::sort(cards.begin(), cards.end());
    size_t n = cards.size();
    long long count = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int ij = cards[i] ^ cards[j];
            for (size_t k = j + 1; k < n; ++k) {
                int ijk = ij ^ cards[k];
                for (size_t l = k + 1; l < n; ++l)
                    if ((ijk ^ cards[l]) == 0) ++count;
            }
        }
    return count;
}

/// S_A + S_B for complementary piles of the 81-card deck depends only on
/// |A|: (|A|^2 - 81|A| + 2160)/2, equivalently (2160 - |A||B|)/2.
inline long long complementary_identity(int size_a) {
    if (size_a < 0 || size_a > 81) fail(errc::out_of_range, "pile size must be 0..81");
    long long a = size_a, b = 81 - a;
    long long form1 = (a * a - 81 * a + 2160) / 2;
    long long form2 = (2160 - a * b) / 2;
    if (form1 != form2) fail(errc::out_of_range, "identity forms disagree"); // unreachable
    return form1;
}

/// Probability that four cards of a 4^m-card deck form a quad: 1/(4^m - 3).
inline Rational quad_probability(int m) {
    if (m < 1) fail(errc::out_of_range, "attribute count must be >= 1");
    BigInt cards = 1;
    for (int i = 0; i < m; ++i) cards *= 4;
    return Rational(BigInt(1), cards - 3);
}

/// Total number of quads in a 4^m-card deck: C(4^m, 4) / (4^m - 3).
inline BigInt total_quads(int m) {
    if (m < 1) fail(errc::out_of_range, "attribute count must be >= 1");
    BigInt cards = 1;
    for (int i = 0; i < m; ++i) cards *= 4;
    BigInt numer = 1;
    for (int i = 0; i < 4; ++i) numer *= cards - i;
    numer /= 24;
    BigInt denom = cards - 3;
    if (numer % denom != 0) fail(errc::out_of_range, "census not divisible"); // unreachable
    return numer / denom;
}

/// Probability that three random ternary cards form a set.
inline Rational set_probability() { return Rational(BigInt(1), BigInt(79)); }

} // namespace cardgeom
