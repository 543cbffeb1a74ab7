#include "doxa/doxastic.hpp"

#include <algorithm>
#include <cassert>

namespace doxa
{

doxastic_state doxastic_state::canonicalize( std::span< const world_set > raw, std::size_t world_count )
{
    world_set seen = world_set::none( world_count );
    std::vector< world_set > classes;
    for ( const auto& cls : raw )
    {
        if ( cls.world_count() != world_count )
            throw state_error{ "class width does not match the alphabet" };
        if ( seen.intersects( cls ) )
            throw state_error{ "classes overlap" };
        seen |= cls;
        if ( !cls.empty() )
            classes.push_back( cls );
    }
    if ( !seen.is_all() )
        throw state_error{ "classes do not cover all worlds" };
    return doxastic_state{ std::move( classes ) };
}

doxastic_state doxastic_state::flat( std::size_t world_count )
{
    return doxastic_state{ { world_set::all( world_count ) } };
}

doxastic_state doxastic_state::formula_order( const world_set& a )
{
    if ( a.empty() )
        throw precondition_error{ "the order of an inconsistent formula is undefined" };
    if ( a.is_all() )
        return flat( a.world_count() );
    return doxastic_state{ { a, a.complement() } };
}

std::size_t doxastic_state::class_index( world w ) const
{
    for ( std::size_t i = 0; i < _classes.size(); ++i )
        if ( _classes[ i ].contains( w ) )
            return i;
    assert( false && "partition does not cover the world" );
    return _classes.size();
}

order_relation doxastic_state::compare( world i, world j ) const
{
    auto ci = class_index( i );
    auto cj = class_index( j );
    if ( ci < cj )
        return order_relation::less;
    if ( ci == cj )
        return order_relation::equal;
    return order_relation::greater;
}

std::size_t doxastic_state::imin( const world_set& a ) const
{
    if ( a.empty() )
        throw precondition_error{ "imin of an empty set" };
    for ( std::size_t i = 0; i < _classes.size(); ++i )
        if ( _classes[ i ].intersects( a ) )
            return i;
    return last();
}

std::size_t doxastic_state::imax( const world_set& a ) const
{
    if ( a.empty() )
        throw precondition_error{ "imax of an empty set" };
    for ( std::size_t i = _classes.size(); i-- > 0; )
        if ( _classes[ i ].intersects( a ) )
            return i;
    return 0;
}

world_set doxastic_state::min_models( const world_set& a ) const
{
    return _classes[ imin( a ) ] & a;
}

doxastic_state doxastic_state::reverse() const
{
    return doxastic_state{ { _classes.rbegin(), _classes.rend() } };
}

bool doxastic_state::refines( const doxastic_state& coarse ) const
{
    return std::ranges::all_of( _classes, [ & ]( const world_set& fine ) {
        return std::ranges::any_of( coarse._classes, [ & ]( const world_set& c ) { return fine.subset_of( c ); } );
    } );
}

bool doxastic_state::is_single_class( const world_set& a ) const
{
    if ( a.empty() )
        throw precondition_error{ "single-class test of an empty set" };
    return a.subset_of( _classes[ imin( a ) ] );
}

std::uint64_t doxastic_state::fingerprint() const
{
    std::uint64_t result = 0;
    for ( std::size_t i = 0; i < _classes.size(); ++i )
        for ( world w : _classes[ i ].members() )
            result |= std::uint64_t{ i } << ( 4 * w.mask );
    return result;
}

doxastic_state doxastic_state::from_fingerprint( std::uint64_t fingerprint, std::size_t world_count )
{
    std::vector< world_set > classes( world_count, world_set::none( world_count ) );
    for ( std::uint32_t w = 0; w < world_count; ++w )
        classes[ ( fingerprint >> ( 4 * w ) ) & 0xF ].insert( world{ w } );
    return canonicalize( classes, world_count );
}

doxastic_state parse_state( std::string_view text, const alphabet& sigma )
{
    std::vector< world_set > classes;
    std::size_t pos = 0;
    while ( true )
    {
        std::size_t start = pos;
        world_set cls = detail::read_formula( text, pos, sigma );
        if ( cls.empty() )
            throw parse_error{ "class " + std::to_string( classes.size() ) + " starting at position "
                                       + std::to_string( start ) + " has no models",
                               start };
        classes.push_back( cls );
        detail::skip_spaces( text, pos );
        if ( pos == text.size() )
            break;
        if ( text[ pos ] != '>' )
            throw parse_error{ "syntax error at position " + std::to_string( pos ) + ": expected '>'", pos };
        ++pos;
    }
    return doxastic_state::canonicalize( classes, sigma.world_count() );
}

std::string format_state( const doxastic_state& state, const alphabet& sigma )
{
    std::string result;
    for ( std::size_t i = 0; i < state.class_count(); ++i )
    {
        if ( i > 0 )
            result += " > ";
        result += format_formula( state[ i ], sigma );
    }
    return result;
}

} // namespace doxa
