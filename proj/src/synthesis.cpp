#include "doxa/synthesis.hpp"

#include <algorithm>
#include <string>

namespace doxa
{

namespace
{

void require_operator( operator_id op, std::initializer_list< operator_id > allowed, const char* construction )
{
    if ( std::ranges::find( allowed, op ) == allowed.end() )
        throw precondition_error{ std::string{ "the " } + construction + " construction does not apply to "
                                  + std::string{ to_string( op ) } + " revision" };
}

void require_non_flat( const doxastic_state& g )
{
    if ( g.is_flat() )
        throw precondition_error{ "the target state must not be flat" };
}

} // namespace

bool replay_trace::all_single_class() const
{
    return std::ranges::all_of( steps, []( const replay_step& s ) { return s.single_class; } );
}

replay_trace replay( const revision_sequence& seq, const doxastic_state& start )
{
    replay_trace trace{ start, {} };
    trace.steps.reserve( seq.formulas.size() );
    for ( const auto& formula : seq.formulas )
    {
        const doxastic_state& current = trace.final_state();
        if ( formula.world_count() != current.world_count() )
            throw precondition_error{ "sequence and start state use different alphabets" };
        bool single = current.is_single_class( formula );
        trace.steps.push_back( { formula, revise( seq.op, current, formula ), single } );
    }
    return trace;
}

revision_sequence synth_subclass_sequence( const doxastic_state& c, const doxastic_state& g )
{
    if ( c.world_count() != g.world_count() )
        throw precondition_error{ "states use different alphabets" };
    if ( !g.refines( c ) )
        throw precondition_error{ "some class of the target is not contained in a class of the start state" };
    revision_sequence seq{ operator_id::natural, {} };
    for ( std::size_t i = g.class_count(); i-- > 0; )
        seq.formulas.push_back( g[ i ] );
    return seq;
}

revision_sequence synth_learnable( operator_id op, const doxastic_state& g )
{
    require_operator( op, { operator_id::natural, operator_id::lexicographic, operator_id::restrained }, "learnable" );
    if ( g.is_flat() )
        return { op, {} };
    auto seq = synth_subclass_sequence( doxastic_state::flat( g.world_count() ), g );
    seq.op = op;
    return seq;
}

revision_sequence synth_damascan( operator_id op, const doxastic_state& c )
{
    require_operator( op, { operator_id::natural, operator_id::lexicographic, operator_id::restrained }, "damascan" );
    auto seq = synth_subclass_sequence( c, c.reverse() );
    seq.op = op;
    return seq;
}

revision_sequence synth_veryradical_plastic( const doxastic_state& g )
{
    require_non_flat( g );
    revision_sequence seq{ operator_id::very_radical, {} };
    std::size_t n = g.world_count();
    seq.formulas.push_back( world_set::single( g[ 0 ].complement().least(), n ) );
    world_set prefix = world_set::none( n );
    for ( std::size_t i = 0; i < g.last(); ++i )
    {
        prefix |= g[ i ];
        seq.formulas.push_back( prefix );
    }
    return seq;
}

revision_sequence synth_severe_plastic( operator_id op, const doxastic_state& c, const doxastic_state& g )
{
    require_operator( op, { operator_id::severe, operator_id::moderate_severe, operator_id::deep_severe },
                      "severe plastic" );
    require_non_flat( g );
    if ( c.world_count() != g.world_count() )
        throw precondition_error{ "states use different alphabets" };
    std::size_t n = g.world_count();
    revision_sequence seq{ op, {} };
    seq.formulas.push_back( world_set::single( c[ c.last() ].least(), n ) );
    seq.formulas.push_back( world_set::single( g[ g.last() ].least(), n ) );
    seq.formulas.push_back( g[ g.last() ].complement() );
    for ( std::size_t k = g.last(); k-- > 0; )
    {
        world_set prefix = world_set::none( n );
        for ( std::size_t i = 0; i <= k; ++i )
            prefix |= g[ i ];
        seq.formulas.push_back( prefix );
    }
    return seq;
}

revision_sequence synth_radical_flatten( const doxastic_state& c )
{
    revision_sequence seq{ operator_id::radical, {} };
    if ( !c.is_flat() )
        seq.formulas.push_back( world_set::single( c[ c.last() ].least(), c.world_count() ) );
    return seq;
}

revision_sequence synth_dogmatic( operator_id op, const doxastic_state& c, const world_set& f )
{
    require_operator( op, { operator_id::radical, operator_id::full_meet, operator_id::plain_severe }, "dogmatic" );
    if ( f.world_count() != c.world_count() )
        throw precondition_error{ "class and state use different alphabets" };
    if ( f.empty() || f.is_all() )
        throw precondition_error{ "the target class must be a nonempty proper subset of the worlds" };
    std::size_t n = c.world_count();
    revision_sequence seq{ op, {} };
    switch ( op )
    {
    case operator_id::radical:
        seq = synth_radical_flatten( c );
        break;
    case operator_id::full_meet:
        seq.formulas.push_back( world_set::single( f.complement().least(), n ) );
        break;
    default:
        seq.formulas.push_back( world_set::single( c[ c.last() ].least(), n ) );
        seq.formulas.push_back( world_set::single( f.complement().least(), n ) );
        break;
    }
    seq.formulas.push_back( f );
    return seq;
}

} // namespace doxa
