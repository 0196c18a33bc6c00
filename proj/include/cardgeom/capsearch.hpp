#pragma once

// Depth-first search for nosets (caps) in Z_3^dim and noquads (2-caps) in
// Z_2^6, with verifiable certificates: the returned pile is re-checked to
// contain zero sets/quads, and the extension report states for every card
// outside the pile whether adding it would create one.
//
// Symmetry handling is deliberately plain: candidates are tried in
// ascending code order, so every pile is generated once, smallest codes
// first. Dimensions up to 3 exhaust the space; dimension 4 is best-effort
// within the budget and stops early once a 20-card cap (the known maximum)
// is on hand.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "cardgeom/analysis.hpp"
#include "cardgeom/errors.hpp"
#include "cardgeom/fp_vector.hpp"
#include "cardgeom/rng.hpp"

namespace cardgeom {

struct CapCertificate {
    int p = 3;
    int dim = 4;
    std::vector<int> pile;
    long long internal_count = -1;  // sets/quads inside the pile; 0 for a valid cap
    bool extension_blocked = false; // every outside card creates a set/quad
    std::vector<int> extendable_by; // outside cards that do not (empty when blocked)
    std::int64_t elapsed_ms = 0;
    bool exhausted = false; // search space fully explored within the budget
};

namespace detail {

/// Number of sets (p=3, any dim) or quads (p=2, dim 6) inside a pile.
inline long long internal_count(int p, int dim, std::span<const int> pile) {
    if (p == 2) return count_quads(pile);
    std::vector<int> cards(pile.begin(), pile.end());
    std::sort(cards.begin(), cards.end());
    std::vector<bool> present(static_cast<size_t>(space_size(3, dim)), false);
    for (int c : cards) present[static_cast<size_t>(c)] = true;
    long long count = 0;
    for (size_t i = 0; i < cards.size(); ++i)
        for (size_t j = i + 1; j < cards.size(); ++j) {
            int third = static_cast<int>(code_neg_sum(3, dim, cards[i], cards[j]));
            if (third > cards[j] && present[static_cast<size_t>(third)]) ++count;
        }
    return count;
}

/// Would adding `card` to a clean pile create a set/quad?
inline bool creates_group(int p, int dim, std::span<const int> pile, int card) {
    if (p == 2) {
        // card completes a quad iff some pair XOR equals an existing pair XOR
        // involving card, i.e. a ^ b == c ^ card for distinct a,b,c in pile
        std::vector<bool> seen(64, false);
        for (size_t i = 0; i < pile.size(); ++i)
            for (size_t j = i + 1; j < pile.size(); ++j)
                seen[static_cast<size_t>(pile[i] ^ pile[j])] = true;
        for (int c : pile)
            if (seen[static_cast<size_t>(c ^ card)]) return true;
        return false;
    }
    for (size_t i = 0; i < pile.size(); ++i)
        for (size_t j = i + 1; j < pile.size(); ++j)
            if (static_cast<int>(code_neg_sum(3, dim, pile[i], pile[j])) == card) return true;
    return false;
}

class CapSearch {
public:
    CapSearch(int dim, double budget_seconds, int target)
        : dim_(dim), target_(target),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget_seconds))) {
        n_ = static_cast<int>(space_size(3, dim));
        third_.assign(static_cast<size_t>(n_ * n_), 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                third_[static_cast<size_t>(a * n_ + b)] =
                    static_cast<int>(code_neg_sum(3, dim, a, b));
        blocked_.assign(static_cast<size_t>(n_), false);
    }

    bool run() { // returns true when the space was exhausted
        stopped_ = false;
        dfs(0);
        return !stopped_;
    }

    std::vector<int> best() const { return best_; }

private:
    void dfs(int start) {
        if (static_cast<int>(pile_.size()) > static_cast<int>(best_.size())) {
            best_ = pile_;
            if (static_cast<int>(best_.size()) >= target_) {
                stopped_ = true;
                return;
            }
        }
        if (++nodes_ % 256 == 0 && std::chrono::steady_clock::now() > deadline_) {
            stopped_ = true;
            return;
        }
        int unblocked_after = 0;
        for (int c = start; c < n_; ++c)
            if (!blocked_[static_cast<size_t>(c)]) ++unblocked_after;
        for (int c = start; c < n_; ++c) {
            if (blocked_[static_cast<size_t>(c)]) continue;
            if (static_cast<int>(pile_.size()) + unblocked_after <=
                static_cast<int>(best_.size()))
                return; // even taking every remaining candidate cannot improve
            --unblocked_after;
            newly_.clear();
            const int* row = third_.data() + static_cast<size_t>(c) * static_cast<size_t>(n_);
            for (int a : pile_) {
                int t = row[a];
                if (!blocked_[static_cast<size_t>(t)]) {
                    blocked_[static_cast<size_t>(t)] = true;
                    newly_.push_back(t);
                }
            }
            pile_.push_back(c);
            blocked_[static_cast<size_t>(c)] = true;
            dfs(c + 1);
            pile_.pop_back();
            blocked_[static_cast<size_t>(c)] = false;
            for (int t : newly_) blocked_[static_cast<size_t>(t)] = false;
            if (stopped_) return;
        }
    }

    int dim_, n_ = 0, target_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<int> third_;
    std::vector<bool> blocked_;
    std::vector<int> pile_, best_, newly_;
    long nodes_ = 0;
    bool stopped_ = false;
};

inline CapCertificate finish_certificate(int p, int dim, std::vector<int> pile,
                                         bool exhausted,
                                         std::chrono::steady_clock::time_point t0) {
    // greedily absorb any card that still extends the pile, so the
    // certificate is always non-extendable by construction
    int n = static_cast<int>(space_size(p, dim));
    bool grew = true;
    while (grew) {
        grew = false;
        for (int c = 0; c < n; ++c) {
            if (std::find(pile.begin(), pile.end(), c) != pile.end()) continue;
            if (!creates_group(p, dim, pile, c)) {
                pile.push_back(c);
                std::sort(pile.begin(), pile.end());
                grew = true;
                exhausted = false; // the DFS best was not maximal after all
            }
        }
    }
    CapCertificate cert;
    cert.p = p;
    cert.dim = dim;
    cert.pile = std::move(pile);
    cert.internal_count = internal_count(p, dim, cert.pile);
    cert.extension_blocked = true;
    for (int c = 0; c < n; ++c) {
        if (std::find(cert.pile.begin(), cert.pile.end(), c) != cert.pile.end()) continue;
        if (!creates_group(p, dim, cert.pile, c)) {
            cert.extension_blocked = false;
            cert.extendable_by.push_back(c);
        }
    }
    cert.exhausted = exhausted;
    cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return cert;
}

} // namespace detail

/// Best noset found in Z_3^dim within the budget; exhaustively optimal for
/// dim <= 3. The certificate is always a verified, non-extendable cap.
inline CapCertificate find_max_cap(int dim, double budget_seconds) {
    if (dim < 1 || dim > 4) fail(errc::out_of_range, "cap search supports dim 1..4");
    if (budget_seconds <= 0) fail(errc::budget_too_small, "budget must be positive");
    auto t0 = std::chrono::steady_clock::now();
    // stop early at the known maximum: 2, 4, 9 for dims 1-3, 20 for dim 4.
    // Dims <= 3 run to exhaustion instead, proving their optimum.
    int target = dim == 4 ? 20 : space_size(3, dim) + 1;
    detail::CapSearch search(dim, budget_seconds, target);
    bool exhausted = search.run();
    std::vector<int> pile = search.best();
    if (static_cast<int>(pile.size()) < dim + 1)
        fail(errc::budget_too_small, "budget expired before any cap was found");
    return detail::finish_certificate(3, dim, std::move(pile), exhausted, t0);
}

/// A 9-card quad-free pile in Z_2^6 whose extension report shows that every
/// 10th card creates a quad.
inline CapCertificate find_noquad(double budget_seconds) {
    if (budget_seconds <= 0) fail(errc::budget_too_small, "budget must be positive");
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(budget_seconds));
    // quad-free <=> all pairwise XORs distinct; depth-first with that filter
    std::vector<int> pile;
    std::vector<bool> used_xor(64, false);
    auto dfs = [&](auto&& self, int start) -> bool {
        if (pile.size() == 9) return true;
        if (std::chrono::steady_clock::now() > deadline) return false;
        for (int c = start; c < 64; ++c) {
            bool ok = true;
            for (int a : pile)
                if (used_xor[static_cast<size_t>(a ^ c)]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int a : pile) used_xor[static_cast<size_t>(a ^ c)] = true;
            pile.push_back(c);
            if (self(self, c + 1)) return true;
            pile.pop_back();
            for (int a : pile) used_xor[static_cast<size_t>(a ^ c)] = false;
        }
        return false;
    };
    if (!dfs(dfs, 0))
        fail(errc::budget_too_small, "budget expired before a 9-card noquad was found");
    return detail::finish_certificate(2, 6, std::move(pile), false, t0);
}

/// Re-check a certificate from scratch: clean pile and truthful extension
/// report.
inline bool verify_certificate(const CapCertificate& cert) {
    if (detail::internal_count(cert.p, cert.dim, cert.pile) != cert.internal_count)
        return false;
    if (cert.internal_count != 0) return false;
    int n = static_cast<int>(space_size(cert.p, cert.dim));
    std::vector<int> extendable;
    for (int c = 0; c < n; ++c) {
        if (std::find(cert.pile.begin(), cert.pile.end(), c) != cert.pile.end()) continue;
        if (!detail::creates_group(cert.p, cert.dim, cert.pile, c)) extendable.push_back(c);
    }
    return cert.extension_blocked == extendable.empty() && cert.extendable_by == extendable;
}

enum class GroupKind { set, quad };

/// Census re-export used when validating certificates by hand.
inline long long count_internal(std::span<const int> pile, GroupKind kind) {
    return kind == GroupKind::set ? count_sets(pile) : count_quads(pile);
}

// ------------------------------------------------------------- monte carlo

struct NoquadEstimate {
    int pile_size = 9;
    long long samples = 0;
    long long hits = 0; // piles containing zero quads
    std::uint64_t seed = 0;
    double fraction = 0.0;
    double std_error = 0.0;
};

/// Fraction of uniformly random `pile_size`-card piles with no quad;
/// bit-exact reproducible for a fixed seed.
inline NoquadEstimate noquad_probability_estimate(int pile_size, long long samples,
                                                  std::uint64_t seed) {
    if (pile_size < 1 || pile_size > 64) fail(errc::out_of_range, "pile size must be 1..64");
    if (samples < 10000) fail(errc::out_of_range, "need at least 10^4 samples");
    Xoshiro256ss rng(seed);
    long long hits = 0;
    std::vector<bool> seen(64, false);
    for (long long s = 0; s < samples; ++s) {
        std::vector<int> pile = sample_without_replacement(64, pile_size, rng);
        bool quad_free = true;
        std::vector<int> marked;
        for (size_t i = 0; i < pile.size() && quad_free; ++i)
            for (size_t j = i + 1; j < pile.size(); ++j) {
                int x = pile[i] ^ pile[j];
                if (seen[static_cast<size_t>(x)]) {
                    quad_free = false;
                    break;
                }
                seen[static_cast<size_t>(x)] = true;
                marked.push_back(x);
            }
        for (int x : marked) seen[static_cast<size_t>(x)] = false;
        if (quad_free) ++hits;
    }
    NoquadEstimate est;
    est.pile_size = pile_size;
    est.samples = samples;
    est.hits = hits;
    est.seed = seed;
    est.fraction = static_cast<double>(hits) / static_cast<double>(samples);
    est.std_error =
        std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(samples));
    return est;
}

} // namespace cardgeom
