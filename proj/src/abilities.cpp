#include "doxa/abilities.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <thread>
#include <utility>

namespace doxa
{

namespace
{

using ability_mask = std::bitset< 256 >;

constexpr std::array< std::pair< ability, std::string_view >, 9 > ability_names = { {
        { ability::fully_plastic, "fully_plastic" },
        { ability::plastic, "plastic" },
        { ability::learnable, "learnable" },
        { ability::amnesic, "amnesic" },
        { ability::equating, "equating" },
        { ability::correcting, "correcting" },
        { ability::damascan, "damascan" },
        { ability::believer, "believer" },
        { ability::dogmatic, "dogmatic" },
} };

void require_exhaustive( const alphabet& sigma )
{
    if ( sigma.size() > max_exhaustive_variables )
        throw resource_error{ "exhaustive analysis supports at most " + std::to_string( max_exhaustive_variables )
                              + " variables, got " + std::to_string( sigma.size() ) };
}

std::uint32_t formula_count( std::size_t world_count )
{
    return ( std::uint32_t{ 1 } << world_count ) - 1;
}

} // namespace

// --- state space -----------------------------------------------------------

state_space::state_space( alphabet sigma, std::vector< doxastic_state > states )
        : _sigma{ std::move( sigma ) }, _states{ std::move( states ) }
{
    _index.reserve( _states.size() );
    for ( state_id id = 0; id < _states.size(); ++id )
        _index.emplace( _states[ id ].fingerprint(), id );
}

std::optional< state_id > state_space::find( const doxastic_state& state ) const
{
    if ( state.world_count() != world_count() )
        return std::nullopt;
    auto it = _index.find( state.fingerprint() );
    if ( it == _index.end() )
        return std::nullopt;
    return it->second;
}

state_id state_space::id_of( const doxastic_state& state ) const
{
    auto id = find( state );
    if ( !id )
        throw precondition_error{ "state does not belong to this state space" };
    return *id;
}

state_space enumerate_states( const alphabet& sigma )
{
    require_exhaustive( sigma );
    const std::size_t m = sigma.world_count();

    // Ordered partitions are the surjections from the worlds onto {0..k-1}.
    // Counting with world 0 as the least significant digit visits them in
    // ascending fingerprint order.
    std::vector< std::uint32_t > digit( m, 0 );
    std::vector< doxastic_state > states;
    while ( true )
    {
        std::uint32_t used = 0;
        std::uint32_t top = 0;
        std::uint64_t fingerprint = 0;
        for ( std::size_t w = 0; w < m; ++w )
        {
            used |= std::uint32_t{ 1 } << digit[ w ];
            top = std::max( top, digit[ w ] );
            fingerprint |= std::uint64_t{ digit[ w ] } << ( 4 * w );
        }
        if ( used == ( std::uint32_t{ 1 } << ( top + 1 ) ) - 1 )
            states.push_back( doxastic_state::from_fingerprint( fingerprint, m ) );

        std::size_t w = 0;
        while ( w < m && ++digit[ w ] == m )
            digit[ w++ ] = 0;
        if ( w == m )
            break;
    }
    return state_space{ sigma, std::move( states ) };
}

// --- move graph ------------------------------------------------------------

move_graph build_move_graph( const state_space& space, operator_id op, unsigned workers )
{
    const std::size_t count = space.size();
    const std::size_t m = space.world_count();
    const std::uint32_t moves = formula_count( m );
    workers = std::max( 1U, std::min< unsigned >( workers, static_cast< unsigned >( count ) ) );

    struct chunk
    {
        std::vector< std::uint32_t > degree;
        std::vector< state_id > targets;
    };
    std::vector< chunk > chunks( workers );

    auto work = [ & ]( unsigned k ) {
        std::size_t first = count * k / workers;
        std::size_t last = count * ( k + 1 ) / workers;
        chunk& out = chunks[ k ];
        std::vector< std::uint32_t > stamp( count, 0 );
        for ( std::size_t s = first; s < last; ++s )
        {
            std::uint32_t degree = 0;
            for ( std::uint32_t bits = 1; bits <= moves; ++bits )
            {
                auto next = revise( op, space[ static_cast< state_id >( s ) ], world_set{ bits, m } );
                state_id t = space.id_of( next );
                if ( stamp[ t ] == s + 1 )
                    continue;
                stamp[ t ] = static_cast< std::uint32_t >( s + 1 );
                out.targets.push_back( t );
                ++degree;
            }
            out.degree.push_back( degree );
        }
    };

    if ( workers == 1 )
        work( 0 );
    else
    {
        std::vector< std::jthread > threads;
        for ( unsigned k = 0; k < workers; ++k )
            threads.emplace_back( work, k );
    }

    move_graph graph;
    graph._op = op;
    graph._offsets.reserve( count + 1 );
    graph._offsets.push_back( 0 );
    for ( auto& c : chunks )
    {
        for ( auto d : c.degree )
            graph._offsets.push_back( graph._offsets.back() + d );
        graph._targets.insert( graph._targets.end(), c.targets.begin(), c.targets.end() );
        c = {};
    }
    return graph;
}

std::vector< state_id > reachable( const move_graph& graph, state_id from )
{
    std::vector< bool > seen( graph.state_count(), false );
    std::vector< state_id > queue{ from };
    seen[ from ] = true;
    for ( std::size_t head = 0; head < queue.size(); ++head )
        for ( state_id t : graph.successors( queue[ head ] ) )
            if ( !seen[ t ] )
            {
                seen[ t ] = true;
                queue.push_back( t );
            }
    std::ranges::sort( queue );
    return queue;
}

scc_decomposition strongly_connected_components( const move_graph& graph )
{
    constexpr std::uint32_t unvisited = ~std::uint32_t{ 0 };
    const std::size_t count = graph.state_count();

    std::vector< std::uint32_t > index( count, unvisited );
    std::vector< std::uint32_t > low( count, 0 );
    std::vector< bool > on_stack( count, false );
    std::vector< state_id > stack;
    // (node, next successor position)
    std::vector< std::pair< state_id, std::uint32_t > > calls;

    scc_decomposition result;
    result.component_of.assign( count, 0 );
    std::uint32_t next_index = 0;

    for ( state_id root = 0; root < count; ++root )
    {
        if ( index[ root ] != unvisited )
            continue;
        calls.emplace_back( root, 0 );
        while ( !calls.empty() )
        {
            auto& [ v, pos ] = calls.back();
            if ( pos == 0 && index[ v ] == unvisited )
            {
                index[ v ] = low[ v ] = next_index++;
                stack.push_back( v );
                on_stack[ v ] = true;
            }
            auto succ = graph.successors( v );
            if ( pos < succ.size() )
            {
                state_id w = succ[ pos++ ];
                if ( index[ w ] == unvisited )
                    calls.emplace_back( w, 0 );
                else if ( on_stack[ w ] )
                    low[ v ] = std::min( low[ v ], index[ w ] );
                continue;
            }

            state_id done = v;
            if ( low[ done ] == index[ done ] )
            {
                state_id w;
                do
                {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[ w ] = false;
                    result.component_of[ w ] = static_cast< std::uint32_t >( result.count );
                } while ( w != done );
                ++result.count;
            }
            calls.pop_back();
            if ( !calls.empty() )
            {
                state_id parent = calls.back().first;
                low[ parent ] = std::min( low[ parent ], low[ done ] );
            }
        }
    }
    return result;
}

// --- abilities -------------------------------------------------------------

std::string_view to_string( ability a )
{
    for ( auto [ id, name ] : ability_names )
        if ( id == a )
            return name;
    return "?";
}

std::optional< ability > parse_ability( std::string_view name )
{
    for ( auto [ id, text ] : ability_names )
        if ( text == name )
            return id;
    return std::nullopt;
}

ability_goal ability_goal::reach( doxastic_state target )
{
    ability_goal goal;
    goal.type = kind::exact_state;
    goal.state = std::move( target );
    return goal;
}

ability_goal ability_goal::equal( world i, world j )
{
    ability_goal goal;
    goal.type = kind::equal_worlds;
    goal.first = i;
    goal.second = j;
    return goal;
}

ability_goal ability_goal::less( world i, world j )
{
    ability_goal goal;
    goal.type = kind::less_world;
    goal.first = i;
    goal.second = j;
    return goal;
}

ability_goal ability_goal::top_class( world_set f )
{
    ability_goal goal;
    goal.type = kind::first_class;
    goal.worlds = f;
    return goal;
}

bool ability_goal::satisfied_by( const doxastic_state& s ) const
{
    switch ( type )
    {
    case kind::exact_state: return s == *state;
    case kind::equal_worlds: return s.compare( first, second ) == order_relation::equal;
    case kind::less_world: return s.compare( first, second ) == order_relation::less;
    case kind::first_class: return s[ 0 ] == worlds;
    }
    return false;
}

std::optional< revision_sequence > shortest_witness( operator_id op, const doxastic_state& start,
                                                     const ability_goal& goal )
{
    const std::size_t m = start.world_count();
    const std::uint32_t moves = formula_count( m );

    struct visit
    {
        doxastic_state state;
        std::size_t parent;
        std::uint32_t formula;
    };
    std::vector< visit > visits{ { start, 0, 0 } };
    std::unordered_map< std::uint64_t, std::size_t > seen{ { start.fingerprint(), 0 } };

    for ( std::size_t head = 0; head < visits.size(); ++head )
    {
        if ( goal.satisfied_by( visits[ head ].state ) )
        {
            revision_sequence seq{ op, {} };
            for ( std::size_t at = head; at != 0; at = visits[ at ].parent )
                seq.formulas.push_back( world_set{ visits[ at ].formula, m } );
            std::ranges::reverse( seq.formulas );
            return seq;
        }
        for ( std::uint32_t bits = 1; bits <= moves; ++bits )
        {
            auto next = revise( op, visits[ head ].state, world_set{ bits, m } );
            auto [ it, fresh ] = seen.emplace( next.fingerprint(), visits.size() );
            if ( fresh )
                visits.push_back( { std::move( next ), head, bits } );
        }
    }
    return std::nullopt;
}

operator_analysis::operator_analysis( const state_space& space, operator_id op, unsigned workers )
        : _space{ &space }, _op{ op }, _graph{ build_move_graph( space, op, workers ) },
          _scc{ strongly_connected_components( _graph ) }
{}

namespace
{

// For every component, the union of `local` over all states reachable from it.
template < typename Local >
std::vector< ability_mask > propagate( const move_graph& graph, const scc_decomposition& scc, Local local )
{
    const std::size_t count = graph.state_count();
    std::vector< ability_mask > mask( scc.count );
    std::vector< std::uint32_t > start( scc.count + 1, 0 );
    for ( state_id s = 0; s < count; ++s )
    {
        mask[ scc.component_of[ s ] ] |= local( s );
        ++start[ scc.component_of[ s ] + 1 ];
    }
    for ( std::size_t k = 0; k < scc.count; ++k )
        start[ k + 1 ] += start[ k ];
    std::vector< state_id > members( count );
    {
        auto fill = start;
        for ( state_id s = 0; s < count; ++s )
            members[ fill[ scc.component_of[ s ] ]++ ] = s;
    }
    for ( std::uint32_t k = 0; k < scc.count; ++k )
        for ( std::uint32_t p = start[ k ]; p < start[ k + 1 ]; ++p )
            for ( state_id t : graph.successors( members[ p ] ) )
                if ( scc.component_of[ t ] != k )
                    mask[ k ] |= mask[ scc.component_of[ t ] ];
    return mask;
}

std::size_t pair_bit( world i, world j, std::size_t world_count )
{
    return i.mask * world_count + j.mask;
}

} // namespace

std::optional< ability_instance > operator_analysis::failing_to( state_id target ) const
{
    auto mask = propagate( _graph, _scc, [ & ]( state_id s ) { return ability_mask{ s == target ? 1U : 0U }; } );
    for ( state_id s = 0; s < _space->size(); ++s )
        if ( !mask[ _scc.component_of[ s ] ].test( 0 ) )
            return ability_instance{ ( *_space )[ s ], ability_goal::reach( ( *_space )[ target ] ) };
    return std::nullopt;
}

std::optional< ability_instance > operator_analysis::failing_amnesic() const
{
    return failing_to( state_space::flat_id );
}

std::optional< ability_instance > operator_analysis::failing_from( state_id source, bool include_flat_targets ) const
{
    auto reached = reachable( _graph, source );
    std::vector< bool > hit( _space->size(), false );
    for ( state_id s : reached )
        hit[ s ] = true;
    for ( state_id s = include_flat_targets ? 0 : 1; s < _space->size(); ++s )
        if ( !hit[ s ] )
            return ability_instance{ ( *_space )[ source ], ability_goal::reach( ( *_space )[ s ] ) };
    return std::nullopt;
}

std::optional< ability_instance > operator_analysis::failing_mask( ability which ) const
{
    const std::size_t m = _space->world_count();
    const auto& space = *_space;
    const std::uint32_t proper_sets = formula_count( m );

    ability_mask required;
    std::vector< ability_mask > mask;
    switch ( which )
    {
    case ability::equating:
        for ( std::uint32_t i = 0; i < m; ++i )
            for ( std::uint32_t j = i + 1; j < m; ++j )
                required.set( pair_bit( world{ i }, world{ j }, m ) );
        mask = propagate( _graph, _scc, [ & ]( state_id s ) {
            ability_mask local;
            for ( const auto& cls : space[ s ].classes() )
            {
                auto members = cls.members();
                for ( std::size_t a = 0; a < members.size(); ++a )
                    for ( std::size_t b = a + 1; b < members.size(); ++b )
                        local.set( pair_bit( members[ a ], members[ b ], m ) );
            }
            return local;
        } );
        break;
    case ability::correcting:
        for ( std::uint32_t i = 0; i < m; ++i )
            for ( std::uint32_t j = 0; j < m; ++j )
                if ( i != j )
                    required.set( pair_bit( world{ i }, world{ j }, m ) );
        mask = propagate( _graph, _scc, [ & ]( state_id s ) {
            ability_mask local;
            const auto& state = space[ s ];
            for ( std::size_t hi = 0; hi < state.class_count(); ++hi )
                for ( std::size_t lo = hi + 1; lo < state.class_count(); ++lo )
                    for ( world i : state[ hi ].members() )
                        for ( world j : state[ lo ].members() )
                            local.set( pair_bit( i, j, m ) );
            return local;
        } );
        break;
    case ability::believer:
    case ability::dogmatic:
        for ( std::uint32_t f = 1; f < proper_sets; ++f )
            required.set( f );
        mask = propagate( _graph, _scc, [ & ]( state_id s ) {
            ability_mask local;
            const auto& state = space[ s ];
            if ( which == ability::believer || state.class_count() == 2 )
                local.set( state[ 0 ].bits() );
            return local;
        } );
        break;
    default:
        throw precondition_error{ "not a mask ability" };
    }

    for ( state_id s = 0; s < space.size(); ++s )
    {
        auto missing = required & ~mask[ _scc.component_of[ s ] ];
        if ( missing.none() )
            continue;
        std::size_t bit = 0;
        while ( !missing.test( bit ) )
            ++bit;
        world i{ static_cast< std::uint32_t >( bit / m ) };
        world j{ static_cast< std::uint32_t >( bit % m ) };
        world_set f{ static_cast< std::uint32_t >( bit ), m };
        switch ( which )
        {
        case ability::equating: return ability_instance{ space[ s ], ability_goal::equal( i, j ) };
        case ability::correcting: return ability_instance{ space[ s ], ability_goal::less( i, j ) };
        case ability::believer: return ability_instance{ space[ s ], ability_goal::top_class( f ) };
        default: return ability_instance{ space[ s ], ability_goal::reach( doxastic_state::formula_order( f ) ) };
        }
    }
    return std::nullopt;
}

std::optional< ability_instance > operator_analysis::failing_damascan() const
{
    const auto& space = *_space;
    std::vector< std::uint32_t > stamp( space.size(), 0 );
    std::vector< state_id > queue;
    for ( state_id s = 0; s < space.size(); ++s )
    {
        state_id target = space.id_of( space[ s ].reverse() );
        if ( _scc.component_of[ s ] == _scc.component_of[ target ] )
            continue;
        // Components only lead to smaller numbers, so the search can skip
        // everything numbered below the target's component.
        const std::uint32_t floor = _scc.component_of[ target ];
        bool found = false;
        queue.assign( 1, s );
        stamp[ s ] = s + 1;
        for ( std::size_t head = 0; head < queue.size() && !found; ++head )
            for ( state_id t : _graph.successors( queue[ head ] ) )
            {
                if ( t == target )
                {
                    found = true;
                    break;
                }
                if ( stamp[ t ] == s + 1 || _scc.component_of[ t ] < floor )
                    continue;
                stamp[ t ] = s + 1;
                queue.push_back( t );
            }
        if ( !found )
            return ability_instance{ space[ s ], ability_goal::reach( space[ target ] ) };
    }
    return std::nullopt;
}

ability_instance operator_analysis::spot_instance( ability which ) const
{
    const auto& space = *_space;
    const std::size_t m = space.world_count();
    const doxastic_state flat = doxastic_state::flat( m );

    // First total order in id order.
    state_id spot = 0;
    while ( space[ spot ].class_count() != m )
        ++spot;
    const doxastic_state& total = space[ spot ];
    world top = total[ 0 ].least();
    world bottom = total[ total.last() ].least();
    world_set rest = total[ 0 ].complement();

    switch ( which )
    {
    case ability::fully_plastic:
    case ability::amnesic: return { total, ability_goal::reach( flat ) };
    case ability::plastic:
    case ability::damascan: return { total, ability_goal::reach( total.reverse() ) };
    case ability::learnable: return { flat, ability_goal::reach( total ) };
    case ability::equating: return { total, ability_goal::equal( top, bottom ) };
    case ability::correcting: return { total, ability_goal::less( bottom, top ) };
    case ability::believer: return { total, ability_goal::top_class( rest ) };
    case ability::dogmatic: return { total, ability_goal::reach( doxastic_state::formula_order( rest ) ) };
    }
    throw precondition_error{ "unknown ability" };
}

ability_report operator_analysis::positive( ability which, ability_instance spot ) const
{
    ability_report report{ _op, _space->sigma().size(), which, true, std::nullopt, std::nullopt, std::nullopt };
    report.witness = shortest_witness( _op, spot.start, spot.goal );
    if ( !report.witness )
        throw error{ "internal error: no witness for a positive " + std::string{ to_string( which ) } + " verdict" };
    report.instance = std::move( spot );
    return report;
}

ability_report operator_analysis::negative( ability which, ability_instance failing ) const
{
    return { _op, _space->sigma().size(), which, false, std::move( failing ), std::nullopt, std::nullopt };
}

ability_report operator_analysis::check( ability which ) const
{
    std::optional< ability_instance > failing;
    switch ( which )
    {
    case ability::fully_plastic:
        failing = failing_amnesic();
        if ( !failing )
            failing = failing_from( state_space::flat_id, true );
        break;
    case ability::plastic:
        // Every state reaches the first non-flat state, which reaches every
        // non-flat state.
        failing = failing_to( 1 );
        if ( !failing )
            failing = failing_from( 1, false );
        break;
    case ability::learnable: failing = failing_from( state_space::flat_id, true ); break;
    case ability::amnesic: failing = failing_amnesic(); break;
    case ability::damascan: failing = failing_damascan(); break;
    default: failing = failing_mask( which ); break;
    }

    ability_report report = failing ? negative( which, std::move( *failing ) ) : positive( which, spot_instance( which ) );
    if ( which == ability::believer || which == ability::dogmatic )
        report.all_worlds_corner = !failing_amnesic().has_value();
    return report;
}

ability_report check_ability( const state_space& space, operator_id op, ability which )
{
    return operator_analysis{ space, op }.check( which );
}

const ability_report* ability_table::find( operator_id op, ability which ) const
{
    for ( const auto& r : reports )
        if ( r.op == op && r.which == which )
            return &r;
    return nullptr;
}

std::optional< bool > ability_table::verdict( operator_id op, ability which ) const
{
    if ( const auto* r = find( op, which ) )
        return r->verdict;
    return std::nullopt;
}

ability_table build_ability_table( const state_space& space, std::span< const operator_id > ops, unsigned workers )
{
    ability_table table{ space.sigma().size(), {} };
    for ( operator_id op : ops )
    {
        operator_analysis analysis{ space, op, workers };
        for ( ability which : all_abilities )
            table.reports.push_back( analysis.check( which ) );
    }
    return table;
}

operator_premises check_operator_premises( const state_space& space, operator_id op )
{
    const std::size_t m = space.world_count();
    operator_premises result{ true, true, true };
    for ( const auto& c : space.states() )
    {
        if ( revise( op, c, world_set::all( m ) ) != c )
            result.vacuity = false;
        for ( std::uint32_t bits = 1; bits <= formula_count( m ); ++bits )
        {
            world_set a{ bits, m };
            auto next = revise( op, c, a );
            if ( !next[ 0 ].subset_of( a ) )
                result.success = false;
            if ( !next.refines( c ) )
                result.refinement = false;
        }
    }
    return result;
}

const std::vector< implication >& ability_implications()
{
    using enum ability;
    static const std::vector< implication > rules = {
            { { fully_plastic }, amnesic, 1 },
            { { fully_plastic }, plastic, 1 },
            { { plastic }, learnable, 1 },
            { { plastic }, damascan, 1 },
            { { plastic }, dogmatic, 1 },
            { { plastic }, believer, 1 },
            { { plastic }, correcting, 1 },
            // Merging two models needs a third one to separate them from.
            { { plastic }, equating, 2 },
            { { amnesic, learnable }, fully_plastic, 1 },
            { { amnesic }, equating, 1 },
            { { dogmatic }, believer, 1 },
            { { believer }, correcting, 1 },
            { { believer }, equating, 2 },
    };
    return rules;
}

std::vector< implication_violation > check_implications( const ability_table& table )
{
    std::vector< operator_id > ops;
    for ( const auto& r : table.reports )
        if ( std::ranges::find( ops, r.op ) == ops.end() )
            ops.push_back( r.op );

    std::vector< implication_violation > violations;
    for ( operator_id op : ops )
    {
        for ( ability which : all_abilities )
            if ( !table.verdict( op, which ) )
                throw precondition_error{ "ability table lacks " + std::string{ to_string( which ) } + " for "
                                          + std::string{ to_string( op ) } };
        for ( const auto& rule : ability_implications() )
        {
            if ( table.variable_count < rule.min_variables )
                continue;
            bool premises = std::ranges::all_of( rule.premises, [ & ]( ability a ) { return *table.verdict( op, a ); } );
            if ( premises && !*table.verdict( op, rule.conclusion ) )
                violations.push_back( { op, rule } );
        }
    }
    return violations;
}

} // namespace doxa
