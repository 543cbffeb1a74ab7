#pragma once

#include "doxastic.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace doxa
{

enum class operator_id
{
    natural,
    lexicographic,
    restrained,
    radical,
    very_radical,
    full_meet,
    severe,
    moderate_severe,
    deep_severe,
    plain_severe,
    natural_forgetful,
    natural_true_flatten
};

inline constexpr std::array all_operators = {
    operator_id::natural,         operator_id::lexicographic,   operator_id::restrained,
    operator_id::radical,         operator_id::very_radical,    operator_id::full_meet,
    operator_id::severe,          operator_id::moderate_severe, operator_id::deep_severe,
    operator_id::plain_severe,    operator_id::natural_forgetful, operator_id::natural_true_flatten,
};

// The ten operators without the two natural-revision variants.
inline constexpr std::array base_operators = {
    operator_id::natural,      operator_id::lexicographic, operator_id::restrained, operator_id::radical,
    operator_id::very_radical, operator_id::full_meet,     operator_id::severe,     operator_id::moderate_severe,
    operator_id::deep_severe,  operator_id::plain_severe,
};

[[nodiscard]] std::string_view to_string( operator_id op );
[[nodiscard]] std::optional< operator_id > parse_operator_id( std::string_view name );

// natural_forgetful and natural_true_flatten.
[[nodiscard]] bool is_experimental( operator_id op );

// Every operator takes a nonempty formula and throws precondition_error
// otherwise. Results are canonical.
[[nodiscard]] doxastic_state revise( operator_id op, const doxastic_state& c, const world_set& a );

namespace revision
{

doxastic_state natural( const doxastic_state& c, const world_set& a );
doxastic_state lexicographic( const doxastic_state& c, const world_set& a );
doxastic_state restrained( const doxastic_state& c, const world_set& a );
doxastic_state radical( const doxastic_state& c, const world_set& a );
doxastic_state very_radical( const doxastic_state& c, const world_set& a );
doxastic_state full_meet( const doxastic_state& c, const world_set& a );
doxastic_state severe( const doxastic_state& c, const world_set& a );
doxastic_state moderate_severe( const doxastic_state& c, const world_set& a );
doxastic_state deep_severe( const doxastic_state& c, const world_set& a );
doxastic_state plain_severe( const doxastic_state& c, const world_set& a );

// Natural revision that flattens when the current top class is a strict
// subset of the formula.
doxastic_state natural_forgetful( const doxastic_state& c, const world_set& a );
// Natural revision that flattens when revising by true.
doxastic_state natural_true_flatten( const doxastic_state& c, const world_set& a );

} // namespace revision

} // namespace doxa
