#include "doxa/operators.hpp"

#include <algorithm>
#include <utility>

namespace doxa
{

namespace
{

constexpr std::array< std::pair< operator_id, std::string_view >, 12 > operator_names = { {
        { operator_id::natural, "natural" },
        { operator_id::lexicographic, "lexicographic" },
        { operator_id::restrained, "restrained" },
        { operator_id::radical, "radical" },
        { operator_id::very_radical, "very_radical" },
        { operator_id::full_meet, "full_meet" },
        { operator_id::severe, "severe" },
        { operator_id::moderate_severe, "moderate_severe" },
        { operator_id::deep_severe, "deep_severe" },
        { operator_id::plain_severe, "plain_severe" },
        { operator_id::natural_forgetful, "natural_forgetful" },
        { operator_id::natural_true_flatten, "natural_true_flatten" },
} };

void require_consistent( const world_set& a )
{
    if ( a.empty() )
        throw precondition_error{ "revision by an inconsistent formula" };
}

// C(first) | ... | C(last), clamped to the existing classes.
world_set union_of( const doxastic_state& c, std::size_t first, std::size_t last )
{
    world_set result = world_set::none( c.world_count() );
    for ( std::size_t i = first; i <= std::min( last, c.last() ); ++i )
        result |= c[ i ];
    return result;
}

doxastic_state make( const std::vector< world_set >& raw, const doxastic_state& c )
{
    return doxastic_state::canonicalize( raw, c.world_count() );
}

} // namespace

std::string_view to_string( operator_id op )
{
    for ( auto [ id, name ] : operator_names )
        if ( id == op )
            return name;
    return "?";
}

std::optional< operator_id > parse_operator_id( std::string_view name )
{
    for ( auto [ id, text ] : operator_names )
        if ( text == name )
            return id;
    return std::nullopt;
}

bool is_experimental( operator_id op )
{
    return op == operator_id::natural_forgetful || op == operator_id::natural_true_flatten;
}

namespace revision
{

doxastic_state natural( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    world_set top = c.min_models( a );
    std::vector< world_set > raw{ top };
    for ( const auto& cls : c.classes() )
        raw.push_back( cls - top );
    return make( raw, c );
}

doxastic_state lexicographic( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    std::vector< world_set > raw;
    for ( const auto& cls : c.classes() )
        raw.push_back( cls & a );
    for ( const auto& cls : c.classes() )
        raw.push_back( cls - a );
    return make( raw, c );
}

doxastic_state restrained( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    world_set top = c.min_models( a );
    std::vector< world_set > raw{ top };
    for ( const auto& cls : c.classes() )
    {
        raw.push_back( ( cls & a ) - top );
        raw.push_back( cls - a );
    }
    return make( raw, c );
}

doxastic_state radical( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    // Worlds of the last class are impossible, unless the last class is also
    // the first one.
    world_set impossible = c[ c.last() ] - c[ 0 ];
    std::vector< world_set > raw;
    for ( std::size_t i = c.imin( a ); i <= c.imax( a ); ++i )
        raw.push_back( ( c[ i ] & a ) - impossible );
    raw.push_back( a.complement() | impossible );
    return make( raw, c );
}

doxastic_state very_radical( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    std::vector< world_set > raw;
    for ( std::size_t i = c.imin( a ); i <= c.imax( a ); ++i )
        raw.push_back( c[ i ] & a );
    raw.push_back( a.complement() );
    return make( raw, c );
}

doxastic_state full_meet( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    world_set top = c.min_models( a );
    return make( { top, top.complement() }, c );
}

doxastic_state severe( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    std::size_t lo = c.imin( a );
    std::vector< world_set > raw{ c.min_models( a ), union_of( c, 0, lo ) - a };
    for ( std::size_t i = lo + 1; i <= c.last(); ++i )
        raw.push_back( c[ i ] );
    return make( raw, c );
}

doxastic_state moderate_severe( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    std::size_t lo = c.imin( a );
    std::size_t hi = c.imax( a );
    std::vector< world_set > raw;
    for ( std::size_t i = lo; i <= hi; ++i )
        raw.push_back( c[ i ] & a );
    raw.push_back( union_of( c, 0, lo ) - a );
    for ( std::size_t i = lo + 1; i <= c.last(); ++i )
        raw.push_back( c[ i ] - a );
    return make( raw, c );
}

doxastic_state deep_severe( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    std::size_t lo = c.imin( a );
    std::size_t hi = c.imax( a );
    std::vector< world_set > raw;
    for ( std::size_t i = lo; i <= hi; ++i )
        raw.push_back( c[ i ] & a );
    raw.push_back( union_of( c, 0, hi ) - a );
    for ( std::size_t i = hi + 1; i <= c.last(); ++i )
        raw.push_back( c[ i ] );
    return make( raw, c );
}

doxastic_state plain_severe( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    std::size_t lo = c.imin( a );
    world_set top = c.min_models( a );
    std::vector< world_set > raw{ top, union_of( c, 0, lo + 1 ) - top };
    for ( std::size_t i = lo + 2; i <= c.last(); ++i )
        raw.push_back( c[ i ] );
    return make( raw, c );
}

doxastic_state natural_forgetful( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    if ( c[ 0 ].subset_of( a ) && c[ 0 ] != a )
        return doxastic_state::flat( c.world_count() );
    return natural( c, a );
}

doxastic_state natural_true_flatten( const doxastic_state& c, const world_set& a )
{
    require_consistent( a );
    if ( a.is_all() )
        return doxastic_state::flat( c.world_count() );
    return natural( c, a );
}

} // namespace revision

doxastic_state revise( operator_id op, const doxastic_state& c, const world_set& a )
{
    switch ( op )
    {
    case operator_id::natural: return revision::natural( c, a );
    case operator_id::lexicographic: return revision::lexicographic( c, a );
    case operator_id::restrained: return revision::restrained( c, a );
    case operator_id::radical: return revision::radical( c, a );
    case operator_id::very_radical: return revision::very_radical( c, a );
    case operator_id::full_meet: return revision::full_meet( c, a );
    case operator_id::severe: return revision::severe( c, a );
    case operator_id::moderate_severe: return revision::moderate_severe( c, a );
    case operator_id::deep_severe: return revision::deep_severe( c, a );
    case operator_id::plain_severe: return revision::plain_severe( c, a );
    case operator_id::natural_forgetful: return revision::natural_forgetful( c, a );
    case operator_id::natural_true_flatten: return revision::natural_true_flatten( c, a );
    }
    throw precondition_error{ "unknown operator" };
}

} // namespace doxa
