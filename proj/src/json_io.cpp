#include "doxa/json_io.hpp"

#include <algorithm>

namespace doxa
{

json world_set_to_json( const world_set& s, const alphabet& sigma )
{
    json out = json::array();
    auto worlds = s.members();
    for ( auto it = worlds.rbegin(); it != worlds.rend(); ++it )
        out.push_back( format_world( *it, sigma ) );
    return out;
}

json state_to_json( const doxastic_state& state, const alphabet& sigma )
{
    json classes = json::array();
    for ( const auto& cls : state.classes() )
        classes.push_back( world_set_to_json( cls, sigma ) );
    return json{ { "vars", sigma.names() }, { "classes", std::move( classes ) } };
}

std::pair< alphabet, doxastic_state > state_from_json( const json& j )
{
    try
    {
        alphabet sigma{ j.at( "vars" ).get< std::vector< std::string > >() };
        std::vector< world_set > classes;
        for ( const auto& cls : j.at( "classes" ) )
        {
            world_set s = world_set::none( sigma.world_count() );
            for ( const auto& w : cls )
            {
                world parsed = parse_world( w.get< std::string >(), sigma );
                if ( s.contains( parsed ) )
                    throw state_error{ "world " + w.get< std::string >() + " listed twice" };
                s.insert( parsed );
            }
            if ( s.empty() )
                throw state_error{ "empty class in state" };
            classes.push_back( s );
        }
        auto state = doxastic_state::canonicalize( classes, sigma.world_count() );
        return { std::move( sigma ), std::move( state ) };
    }
    catch ( const json::exception& e )
    {
        throw parse_error{ std::string{ "malformed state JSON: " } + e.what() };
    }
}

json sequence_to_json( const revision_sequence& seq, const alphabet& sigma )
{
    json formulas = json::array();
    for ( const auto& f : seq.formulas )
        formulas.push_back( format_formula( f, sigma ) );
    return json{ { "operator", to_string( seq.op ) }, { "formulas", std::move( formulas ) } };
}

json trace_to_json( const revision_sequence& seq, const replay_trace& trace, const alphabet& sigma )
{
    json steps = json::array();
    for ( const auto& step : trace.steps )
        steps.push_back( json{ { "formula", format_formula( step.formula, sigma ) },
                               { "single_class", step.single_class },
                               { "state", state_to_json( step.result, sigma ) } } );
    json out{ { "operator", to_string( seq.op ) },
              { "start", state_to_json( trace.start, sigma ) },
              { "steps", std::move( steps ) },
              { "final", state_to_json( trace.final_state(), sigma ) } };
    if ( is_experimental( seq.op ) )
        out[ "experimental" ] = true;
    return out;
}

json goal_to_json( const ability_goal& goal, const alphabet& sigma )
{
    switch ( goal.type )
    {
    case ability_goal::kind::exact_state:
        return json{ { "kind", "state" }, { "state", format_state( *goal.state, sigma ) } };
    case ability_goal::kind::equal_worlds:
        return json{ { "kind", "equal" },
                     { "worlds", { format_world( goal.first, sigma ), format_world( goal.second, sigma ) } } };
    case ability_goal::kind::less_world:
        return json{ { "kind", "less" },
                     { "worlds", { format_world( goal.first, sigma ), format_world( goal.second, sigma ) } } };
    case ability_goal::kind::first_class:
        return json{ { "kind", "first_class" }, { "class", format_formula( goal.worlds, sigma ) } };
    }
    return {};
}

json report_to_json( const ability_report& report, const alphabet& sigma )
{
    json out{ { "operator", to_string( report.op ) },
              { "variables", report.variable_count },
              { "ability", to_string( report.which ) },
              { "verdict", report.verdict } };
    if ( report.instance )
    {
        json instance{ { "start", format_state( report.instance->start, sigma ) },
                       { "goal", goal_to_json( report.instance->goal, sigma ) } };
        out[ report.verdict ? "instance" : "counterexample" ] = std::move( instance );
    }
    if ( report.witness )
        out[ "witness" ] = sequence_to_json( *report.witness, sigma )[ "formulas" ];
    if ( report.all_worlds_corner )
    {
        out[ "all_worlds_corner" ] = *report.all_worlds_corner;
        out[ "start_states" ] = "universal";
    }
    if ( is_experimental( report.op ) )
        out[ "experimental" ] = true;
    return out;
}

json table_to_json( const ability_table& table, const alphabet& sigma, bool with_reports )
{
    std::vector< operator_id > ops;
    for ( const auto& r : table.reports )
        if ( std::ranges::find( ops, r.op ) == ops.end() )
            ops.push_back( r.op );

    json op_names = json::array();
    json ability_list = json::array();
    json verdicts = json::object();
    for ( ability a : all_abilities )
        ability_list.push_back( to_string( a ) );
    for ( operator_id op : ops )
    {
        op_names.push_back( to_string( op ) );
        json row = json::object();
        for ( ability a : all_abilities )
            if ( auto v = table.verdict( op, a ) )
                row[ std::string{ to_string( a ) } ] = *v;
        verdicts[ std::string{ to_string( op ) } ] = std::move( row );
    }

    json out{ { "variables", table.variable_count },
              { "operators", std::move( op_names ) },
              { "abilities", std::move( ability_list ) },
              { "verdicts", std::move( verdicts ) } };
    if ( with_reports )
    {
        json reports = json::array();
        for ( const auto& r : table.reports )
            reports.push_back( report_to_json( r, sigma ) );
        out[ "reports" ] = std::move( reports );
    }
    return out;
}

json premises_to_json( operator_id op, std::size_t variable_count, const operator_premises& premises )
{
    return json{ { "operator", to_string( op ) },
                 { "variables", variable_count },
                 { "success", premises.success },
                 { "vacuity", premises.vacuity },
                 { "refinement", premises.refinement } };
}

} // namespace doxa
