#pragma once

// Helpers and independent oracles for the test suites. Nothing here calls the
// library's operators, state enumeration or reachability code.

#include "doxa/abilities.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace doxa::test
{

inline const alphabet& ab()
{
    static const alphabet sigma{ { "a", "b" } };
    return sigma;
}

inline const alphabet& a_only()
{
    static const alphabet sigma{ { "a" } };
    return sigma;
}

// Set from printed worlds, e.g. ws({"11", "10"}).
inline world_set ws( std::initializer_list< const char* > worlds, const alphabet& sigma = ab() )
{
    world_set s = world_set::none( sigma.world_count() );
    for ( const char* w : worlds )
        s.insert( parse_world( w, sigma ) );
    return s;
}

// State from classes of printed worlds, e.g. st({{"11"}, {"10", "01"}, {"00"}}).
inline doxastic_state st( std::initializer_list< std::initializer_list< const char* > > classes,
                          const alphabet& sigma = ab() )
{
    std::vector< world_set > raw;
    for ( auto cls : classes )
        raw.push_back( ws( cls, sigma ) );
    return doxastic_state::canonicalize( raw, sigma.world_count() );
}

// C* = [{11},{10,01},{00}] and A* = {01,00}.
inline doxastic_state c_star()
{
    return st( { { "11" }, { "10", "01" }, { "00" } } );
}

inline world_set a_star()
{
    return ws( { "01", "00" } );
}

// Ordered set partitions of m elements: a(m) = sum_{k=1..m} C(m,k) a(m-k).
inline std::uint64_t fubini( unsigned m )
{
    std::vector< std::uint64_t > a( m + 1, 0 );
    a[ 0 ] = 1;
    for ( unsigned n = 1; n <= m; ++n )
    {
        std::uint64_t binom = 1;
        for ( unsigned k = 1; k <= n; ++k )
        {
            binom = binom * ( n - k + 1 ) / k;
            a[ n ] += binom * a[ n - k ];
        }
    }
    return a[ m ];
}

// Every ordered partition of the worlds, built class by class: choose the
// first class as any nonempty subset of what is left, recurse on the rest.
inline void ordered_partitions( std::uint32_t remaining, std::size_t world_count, std::vector< world_set >& prefix,
                                std::vector< std::vector< world_set > >& out )
{
    if ( remaining == 0 )
    {
        out.push_back( prefix );
        return;
    }
    for ( std::uint32_t sub = remaining; sub != 0; sub = ( sub - 1 ) & remaining )
    {
        prefix.push_back( world_set{ sub, world_count } );
        ordered_partitions( remaining & ~sub, world_count, prefix, out );
        prefix.pop_back();
    }
}

inline std::vector< std::vector< world_set > > all_partitions( std::size_t world_count )
{
    std::vector< std::vector< world_set > > out;
    std::vector< world_set > prefix;
    ordered_partitions( world_set::all( world_count ).bits(), world_count, prefix, out );
    return out;
}

inline std::vector< doxastic_state > all_states( std::size_t world_count )
{
    std::vector< doxastic_state > out;
    for ( const auto& p : all_partitions( world_count ) )
        out.push_back( doxastic_state::canonicalize( p, world_count ) );
    return out;
}

inline std::vector< world_set > nonempty_sets( std::size_t world_count )
{
    std::vector< world_set > out;
    for ( std::uint32_t bits = 1; bits < ( std::uint32_t{ 1 } << world_count ); ++bits )
        out.push_back( world_set{ bits, world_count } );
    return out;
}

// Rank of each world (class index), computed without doxastic_state queries.
inline std::vector< int > ranks( const doxastic_state& c )
{
    std::vector< int > r( c.world_count(), -1 );
    for ( std::size_t i = 0; i < c.class_count(); ++i )
        for ( std::uint32_t w = 0; w < c.world_count(); ++w )
            if ( ( c[ i ].bits() >> w ) & 1U )
                r[ w ] = static_cast< int >( i );
    return r;
}

// Builds the canonical state whose strict order is `less(i, j)`, which must be
// a strict weak order.
template < typename Less >
doxastic_state from_pairwise( std::size_t world_count, Less less )
{
    std::vector< int > level( world_count, 0 );
    for ( std::uint32_t i = 0; i < world_count; ++i )
        for ( std::uint32_t j = 0; j < world_count; ++j )
            if ( less( j, i ) )
                ++level[ i ];
    // Worlds with the same number of strict predecessors are equivalent.
    std::vector< world_set > raw( world_count + 1, world_set::none( world_count ) );
    for ( std::uint32_t w = 0; w < world_count; ++w )
        raw[ level[ w ] ].insert( world{ w } );
    return doxastic_state::canonicalize( raw, world_count );
}

// Pairwise characterizations of three operators, as oracles.
inline doxastic_state natural_pairwise( const doxastic_state& c, const world_set& a )
{
    auto r = ranks( c );
    int best = 1 << 20;
    for ( std::uint32_t w = 0; w < c.world_count(); ++w )
        if ( a.contains( world{ w } ) )
            best = std::min( best, r[ w ] );
    auto top = [ & ]( std::uint32_t w ) { return a.contains( world{ w } ) && r[ w ] == best; };
    return from_pairwise( c.world_count(), [ & ]( std::uint32_t i, std::uint32_t j ) {
        if ( top( i ) != top( j ) )
            return top( i );
        return r[ i ] < r[ j ];
    } );
}

inline doxastic_state lexicographic_pairwise( const doxastic_state& c, const world_set& a )
{
    auto r = ranks( c );
    return from_pairwise( c.world_count(), [ & ]( std::uint32_t i, std::uint32_t j ) {
        bool ai = a.contains( world{ i } );
        bool aj = a.contains( world{ j } );
        if ( ai != aj )
            return ai;
        return r[ i ] < r[ j ];
    } );
}

inline doxastic_state restrained_pairwise( const doxastic_state& c, const world_set& a )
{
    auto r = ranks( c );
    int best = 1 << 20;
    for ( std::uint32_t w = 0; w < c.world_count(); ++w )
        if ( a.contains( world{ w } ) )
            best = std::min( best, r[ w ] );
    auto top = [ & ]( std::uint32_t w ) { return a.contains( world{ w } ) && r[ w ] == best; };
    return from_pairwise( c.world_count(), [ & ]( std::uint32_t i, std::uint32_t j ) {
        if ( top( i ) != top( j ) )
            return top( i );
        if ( r[ i ] != r[ j ] )
            return r[ i ] < r[ j ];
        return a.contains( world{ i } ) && !a.contains( world{ j } );
    } );
}

// Reachable states by plain BFS over revise(), keyed by printed state.
inline std::set< std::vector< std::uint32_t > > reachable_oracle( operator_id op, const doxastic_state& start )
{
    auto key = []( const doxastic_state& s ) {
        std::vector< std::uint32_t > k;
        for ( const auto& cls : s.classes() )
            k.push_back( cls.bits() );
        return k;
    };
    std::set< std::vector< std::uint32_t > > seen{ key( start ) };
    std::vector< doxastic_state > queue{ start };
    for ( std::size_t head = 0; head < queue.size(); ++head )
        for ( const auto& a : nonempty_sets( start.world_count() ) )
        {
            auto next = revise( op, queue[ head ], a );
            if ( seen.insert( key( next ) ).second )
                queue.push_back( next );
        }
    return seen;
}

// Reachability between all states of one alphabet, by BFS over revise() from
// every state. States are indexed in all_states() order.
struct reach_oracle
{
    std::vector< doxastic_state > states;
    std::map< std::vector< std::uint32_t >, std::size_t > index;
    std::vector< std::vector< bool > > reach;

    static std::vector< std::uint32_t > key( const doxastic_state& s )
    {
        std::vector< std::uint32_t > k;
        for ( const auto& cls : s.classes() )
            k.push_back( cls.bits() );
        return k;
    }

    reach_oracle( operator_id op, std::size_t world_count ) : states{ all_states( world_count ) }
    {
        for ( std::size_t i = 0; i < states.size(); ++i )
            index[ key( states[ i ] ) ] = i;
        reach.assign( states.size(), std::vector< bool >( states.size(), false ) );
        for ( std::size_t i = 0; i < states.size(); ++i )
            for ( const auto& k : reachable_oracle( op, states[ i ] ) )
                reach[ i ][ index.at( k ) ] = true;
    }

    [[nodiscard]] std::size_t id( const doxastic_state& s ) const { return index.at( key( s ) ); }
    [[nodiscard]] bool reaches( const doxastic_state& from, const doxastic_state& to ) const
    {
        return reach[ id( from ) ][ id( to ) ];
    }
    [[nodiscard]] bool some_reachable( std::size_t from, auto pred ) const
    {
        for ( std::size_t j = 0; j < states.size(); ++j )
            if ( reach[ from ][ j ] && pred( states[ j ] ) )
                return true;
        return false;
    }
};

// Each ability checked straight from its definition over the reachability
// matrix; believer and dogmatic range over nonempty proper classes.
inline bool oracle_verdict( const reach_oracle& r, ability which )
{
    const auto& states = r.states;
    const std::size_t m = states.front().world_count();
    const std::size_t n = states.size();
    std::size_t flat = r.id( doxastic_state::flat( m ) );
    auto all_pairs = [ & ]( auto ok ) {
        for ( std::size_t i = 0; i < n; ++i )
            for ( std::size_t j = 0; j < n; ++j )
                if ( !ok( i, j ) )
                    return false;
        return true;
    };
    auto for_all = [ & ]( auto ok ) {
        for ( std::size_t i = 0; i < n; ++i )
            if ( !ok( i ) )
                return false;
        return true;
    };
    auto proper_classes = [ & ]( std::size_t i, auto ok ) {
        for ( std::uint32_t bits = 1; bits + 1 < ( std::uint32_t{ 1 } << m ); ++bits )
            if ( !ok( i, world_set{ bits, m } ) )
                return false;
        return true;
    };
    switch ( which )
    {
    case ability::fully_plastic:
        return all_pairs( [ & ]( std::size_t i, std::size_t j ) { return r.reach[ i ][ j ]; } );
    case ability::plastic:
        return all_pairs( [ & ]( std::size_t i, std::size_t j ) { return j == flat || r.reach[ i ][ j ]; } );
    case ability::learnable:
        return for_all( [ & ]( std::size_t j ) { return r.reach[ flat ][ j ]; } );
    case ability::amnesic:
        return for_all( [ & ]( std::size_t i ) { return r.reach[ i ][ flat ]; } );
    case ability::damascan:
        return for_all( [ & ]( std::size_t i ) { return r.reaches( states[ i ], states[ i ].reverse() ); } );
    case ability::equating:
    case ability::correcting:
        return for_all( [ & ]( std::size_t i ) {
            for ( std::uint32_t a = 0; a < m; ++a )
                for ( std::uint32_t b = 0; b < m; ++b )
                {
                    if ( a == b )
                        continue;
                    bool ok = r.some_reachable( i, [ & ]( const doxastic_state& s ) {
                        auto ra = ranks( s );
                        return which == ability::equating ? ra[ a ] == ra[ b ] : ra[ a ] < ra[ b ];
                    } );
                    if ( !ok )
                        return false;
                }
            return true;
        } );
    case ability::believer:
        return for_all( [ & ]( std::size_t i ) {
            return proper_classes( i, [ & ]( std::size_t from, const world_set& f ) {
                return r.some_reachable( from, [ & ]( const doxastic_state& s ) { return s[ 0 ] == f; } );
            } );
        } );
    case ability::dogmatic:
        return for_all( [ & ]( std::size_t i ) {
            return proper_classes( i, [ & ]( std::size_t from, const world_set& f ) {
                return r.reach[ from ][ r.id( doxastic_state::formula_order( f ) ) ];
            } );
        } );
    }
    return false;
}

inline bool is_partition( const doxastic_state& s )
{
    std::uint32_t seen = 0;
    for ( const auto& cls : s.classes() )
    {
        if ( cls.empty() || ( seen & cls.bits() ) != 0 )
            return false;
        seen |= cls.bits();
    }
    return seen == world_set::all( s.world_count() ).bits();
}

} // namespace doxa::test
