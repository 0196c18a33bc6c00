#pragma once

#include <stdexcept>
#include <string>

namespace cardgeom {

enum class errc {
    mixed_spaces,
    division_by_zero,
    duplicate_cards,
    zero_card,
    out_of_range,
    not_a_match,
    not_a_quad,
    invalid_code,
    invalid_label,
    unsupported_order,
    unsupported_deck,
    even_index,
    origin_in_set,
    budget_too_small,
    no_common_symbol,
    multiple_common_symbols,
};

/// Single exception type for all contract violations; `kind()` carries the
/// specific failure so callers and tests can match on it.
class game_error : public std::runtime_error {
public:
    game_error(errc kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) {
    throw game_error(kind, what);
}

} // namespace cardgeom
