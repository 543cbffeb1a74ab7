// doxa - iterated belief revision workbench.
//
// Subcommands: apply, trace, reach, abilities, table, premises, synthesize.
// Exit codes: 0 ok, 2 parse/usage error, 3 invariant or replay failure,
// 4 resource limit. Verdicts are payload, never exit codes.

#include "doxa/abilities.hpp"
#include "doxa/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <iostream>
#include <set>

namespace
{

using namespace doxa;

enum exit_code
{
    exit_ok = 0,
    exit_usage = 2,
    exit_invariant = 3,
    exit_resource = 4
};

struct usage_error : error
{
    using error::error;
};

struct replay_failure : error
{
    using error::error;
};

operator_id require_operator( const std::string& name )
{
    if ( auto op = parse_operator_id( name ) )
        return *op;
    throw usage_error{ "unknown operator '" + name + "'" };
}

void note_experimental( operator_id op )
{
    if ( is_experimental( op ) )
        std::cerr << "note: " << to_string( op ) << " is an experimental operator\n";
}

// Identifiers used in formula or state texts, sorted.
bool is_json_text( const std::string& text )
{
    auto first = text.find_first_not_of( " \t\n" );
    return first != std::string::npos && text[ first ] == '{';
}

json parse_json_text( const std::string& text )
{
    try
    {
        return json::parse( text );
    }
    catch ( const json::exception& e )
    {
        throw parse_error{ std::string{ "malformed state JSON: " } + e.what() };
    }
}

std::vector< std::string > identifiers_in( const std::vector< std::string >& texts )
{
    std::set< std::string > names;
    for ( const auto& text : texts )
    {
        if ( is_json_text( text ) )
            continue;
        for ( std::size_t i = 0; i < text.size(); )
        {
            if ( text[ i ] >= 'a' && text[ i ] <= 'z' )
            {
                std::size_t start = i;
                while ( i < text.size()
                        && ( std::islower( static_cast< unsigned char >( text[ i ] ) )
                             || std::isdigit( static_cast< unsigned char >( text[ i ] ) ) || text[ i ] == '_' ) )
                    ++i;
                auto name = text.substr( start, i - start );
                if ( name != "true" && name != "false" )
                    names.insert( name );
            }
            else
                ++i;
        }
    }
    return { names.begin(), names.end() };
}

// --vars names the variables; --vars-count generates x0..x(n-1). When a
// generated alphabet does not cover the names used in the given texts and
// exactly n distinct names appear, those names (sorted) form the alphabet.
// A state given as JSON brings its own names.
alphabet resolve_alphabet( const std::string& vars, int vars_count, const std::vector< std::string >& texts )
{
    if ( !vars.empty() )
    {
        alphabet sigma = alphabet::parse( vars );
        if ( vars_count > 0 && static_cast< std::size_t >( vars_count ) != sigma.size() )
            throw usage_error{ "--vars and --vars-count disagree" };
        return sigma;
    }
    for ( const auto& text : texts )
    {
        if ( !is_json_text( text ) )
            continue;
        alphabet sigma = state_from_json( parse_json_text( text ) ).first;
        if ( vars_count > 0 && static_cast< std::size_t >( vars_count ) != sigma.size() )
            throw usage_error{ "--vars-count disagrees with the state JSON" };
        return sigma;
    }
    if ( vars_count <= 0 )
        throw usage_error{ "either --vars or --vars-count is required" };
    auto count = static_cast< std::size_t >( vars_count );
    if ( count > max_variables )
        throw resource_error{ "at most " + std::to_string( max_variables ) + " variables are supported" };
    alphabet generated = alphabet::generated( count );
    auto used = identifiers_in( texts );
    bool covered = std::ranges::all_of( used, [ & ]( const std::string& n ) { return generated.index_of( n ).has_value(); } );
    if ( covered || used.size() != count )
        return generated;
    return alphabet{ used };
}

doxastic_state read_state( const std::string& text, const alphabet& sigma )
{
    if ( is_json_text( text ) )
    {
        auto [ json_sigma, state ] = state_from_json( parse_json_text( text ) );
        if ( json_sigma != sigma )
            throw usage_error{ "state JSON uses a different alphabet" };
        return state;
    }
    return parse_state( text, sigma );
}

std::vector< std::string > split_formulas( const std::string& list )
{
    std::vector< std::string > result;
    std::size_t start = 0;
    while ( start <= list.size() )
    {
        auto end = list.find( ';', start );
        auto piece = list.substr( start, end == std::string::npos ? std::string::npos : end - start );
        if ( piece.find_first_not_of( " \t" ) != std::string::npos )
            result.push_back( piece );
        if ( end == std::string::npos )
            break;
        start = end + 1;
    }
    return result;
}

void print_json( const json& j )
{
    std::cout << j.dump( 2 ) << '\n';
}

void print_trace( const revision_sequence& seq, const replay_trace& trace, const alphabet& sigma )
{
    std::cout << "start: " << format_state( trace.start, sigma ) << '\n';
    for ( std::size_t i = 0; i < trace.steps.size(); ++i )
        std::cout << "step " << i + 1 << ": revise by " << format_formula( seq.formulas[ i ], sigma ) << ": "
                  << format_state( trace.steps[ i ].result, sigma ) << '\n';
    std::cout << "final: " << format_state( trace.final_state(), sigma ) << '\n';
}

std::string describe_goal( const ability_goal& goal, const alphabet& sigma )
{
    switch ( goal.type )
    {
    case ability_goal::kind::exact_state: return "reach " + format_state( *goal.state, sigma );
    case ability_goal::kind::equal_worlds:
        return "make " + format_world( goal.first, sigma ) + " equivalent to " + format_world( goal.second, sigma );
    case ability_goal::kind::less_world:
        return "make " + format_world( goal.first, sigma ) + " more believed than "
               + format_world( goal.second, sigma );
    case ability_goal::kind::first_class: return "first class " + format_formula( goal.worlds, sigma );
    }
    return {};
}

void print_report( const ability_report& report, const alphabet& sigma )
{
    std::cout << to_string( report.which ) << ": " << ( report.verdict ? "yes" : "no" ) << '\n';
    if ( report.instance )
    {
        std::cout << ( report.verdict ? "  instance: from " : "  counterexample: from " )
                  << format_state( report.instance->start, sigma ) << ", "
                  << describe_goal( report.instance->goal, sigma ) << '\n';
    }
    if ( report.witness )
    {
        std::cout << "  witness:";
        if ( report.witness->formulas.empty() )
            std::cout << " (empty sequence)";
        for ( const auto& f : report.witness->formulas )
            std::cout << " [" << format_formula( f, sigma ) << "]";
        std::cout << '\n';
    }
    if ( report.all_worlds_corner )
        std::cout << "  all-worlds corner (amnesic): " << ( *report.all_worlds_corner ? "yes" : "no" ) << '\n';
}

void print_table( const ability_table& table )
{
    std::vector< operator_id > ops;
    for ( const auto& r : table.reports )
        if ( std::ranges::find( ops, r.op ) == ops.end() )
            ops.push_back( r.op );

    std::cout << std::left << std::setw( 22 ) << "operator";
    for ( ability a : all_abilities )
        std::cout << ' ' << std::setw( static_cast< int >( to_string( a ).size() ) ) << to_string( a );
    std::cout << '\n';
    bool any_experimental = false;
    for ( operator_id op : ops )
    {
        std::string name{ to_string( op ) };
        if ( is_experimental( op ) )
        {
            name += " *";
            any_experimental = true;
        }
        std::cout << std::setw( 22 ) << name;
        for ( ability a : all_abilities )
            std::cout << ' ' << std::setw( static_cast< int >( to_string( a ).size() ) )
                      << ( table.verdict( op, a ).value_or( false ) ? "yes" : "no" );
        std::cout << '\n';
    }
    if ( any_experimental )
        std::cout << "* experimental operator\n";
}

state_space exhaustive_space( const alphabet& sigma )
{
    return enumerate_states( sigma );
}

struct options
{
    std::string op;
    std::string vars;
    int vars_count = 0;
    std::string state;
    std::string formula;
    std::string formulas;
    std::string ability_name;
    std::string construction;
    std::string from;
    std::string to;
    std::string target_class;
    bool as_json = false;
    bool count_only = false;
    bool with_reports = false;
    unsigned parallel = 1;
};

int run_apply( const options& o )
{
    operator_id op = require_operator( o.op );
    alphabet sigma = resolve_alphabet( o.vars, o.vars_count, { o.state, o.formula } );
    auto state = read_state( o.state, sigma );
    auto formula = parse_formula( o.formula, sigma );
    auto result = revise( op, state, formula );
    note_experimental( op );
    if ( o.as_json )
    {
        json out = state_to_json( result, sigma );
        if ( is_experimental( op ) )
            out[ "experimental" ] = true;
        print_json( out );
    }
    else
        std::cout << format_state( result, sigma ) << '\n';
    return exit_ok;
}

int run_trace( const options& o )
{
    operator_id op = require_operator( o.op );
    auto texts = split_formulas( o.formulas );
    auto all_texts = texts;
    all_texts.push_back( o.state );
    alphabet sigma = resolve_alphabet( o.vars, o.vars_count, all_texts );
    auto state = read_state( o.state, sigma );
    revision_sequence seq{ op, {} };
    for ( const auto& t : texts )
        seq.formulas.push_back( parse_formula( t, sigma ) );
    auto trace = replay( seq, state );
    note_experimental( op );
    if ( o.as_json )
        print_json( trace_to_json( seq, trace, sigma ) );
    else
        print_trace( seq, trace, sigma );
    return exit_ok;
}

int run_reach( const options& o )
{
    operator_id op = require_operator( o.op );
    alphabet sigma = resolve_alphabet( o.vars, o.vars_count, { o.state } );
    auto state = read_state( o.state, sigma );
    auto space = exhaustive_space( sigma );
    auto graph = build_move_graph( space, op, o.parallel );
    auto ids = reachable( graph, space.id_of( state ) );
    note_experimental( op );
    if ( o.as_json )
    {
        json states = json::array();
        if ( !o.count_only )
            for ( state_id id : ids )
                states.push_back( format_state( space[ id ], sigma ) );
        json out{ { "operator", to_string( op ) }, { "start", format_state( state, sigma ) }, { "count", ids.size() } };
        if ( !o.count_only )
            out[ "states" ] = std::move( states );
        print_json( out );
    }
    else if ( o.count_only )
        std::cout << ids.size() << '\n';
    else
        for ( state_id id : ids )
            std::cout << format_state( space[ id ], sigma ) << '\n';
    return exit_ok;
}

int run_abilities( const options& o )
{
    operator_id op = require_operator( o.op );
    alphabet sigma = resolve_alphabet( o.vars, o.vars_count, {} );
    std::vector< ability > which( all_abilities.begin(), all_abilities.end() );
    if ( !o.ability_name.empty() )
    {
        auto a = parse_ability( o.ability_name );
        if ( !a )
            throw usage_error{ "unknown ability '" + o.ability_name + "'" };
        which = { *a };
    }
    auto space = exhaustive_space( sigma );
    operator_analysis analysis{ space, op, o.parallel };
    note_experimental( op );
    json reports = json::array();
    for ( ability a : which )
    {
        auto report = analysis.check( a );
        if ( o.as_json )
            reports.push_back( report_to_json( report, sigma ) );
        else
            print_report( report, sigma );
    }
    if ( o.as_json )
        print_json( which.size() == 1 ? reports[ 0 ] : reports );
    return exit_ok;
}

int run_table( const options& o )
{
    alphabet sigma = resolve_alphabet( o.vars, o.vars_count, {} );
    auto space = exhaustive_space( sigma );
    auto table = build_ability_table( space, all_operators, o.parallel );
    if ( o.as_json )
        print_json( table_to_json( table, sigma, o.with_reports ) );
    else
        print_table( table );
    return exit_ok;
}

int run_premises( const options& o )
{
    operator_id op = require_operator( o.op );
    alphabet sigma = resolve_alphabet( o.vars, o.vars_count, {} );
    auto space = exhaustive_space( sigma );
    auto premises = check_operator_premises( space, op );
    note_experimental( op );
    if ( o.as_json )
        print_json( premises_to_json( op, sigma.size(), premises ) );
    else
        std::cout << "success: " << ( premises.success ? "yes" : "no" ) << '\n'
                  << "vacuity: " << ( premises.vacuity ? "yes" : "no" ) << '\n'
                  << "refinement: " << ( premises.refinement ? "yes" : "no" ) << '\n';
    return exit_ok;
}

int run_synthesize( const options& o )
{
    alphabet sigma = resolve_alphabet( o.vars, o.vars_count, { o.from, o.to, o.target_class } );
    auto require = [ & ]( const std::string& value, const char* flag ) {
        if ( value.empty() )
            throw usage_error{ std::string{ "construction '" } + o.construction + "' requires " + flag };
        return value;
    };
    auto state_or_flat = [ & ]( const std::string& text ) {
        return text.empty() ? doxastic_state::flat( sigma.world_count() ) : read_state( text, sigma );
    };
    auto op_or = [ & ]( operator_id fallback ) { return o.op.empty() ? fallback : require_operator( o.op ); };

    doxastic_state start = state_or_flat( o.from );
    std::optional< doxastic_state > target;
    revision_sequence seq;
    const std::string& c = o.construction;
    if ( c == "subclass" )
    {
        target = read_state( require( o.to, "--to" ), sigma );
        seq = synth_subclass_sequence( start, *target );
        seq.op = op_or( operator_id::natural );
    }
    else if ( c == "learnable" )
    {
        start = doxastic_state::flat( sigma.world_count() );
        target = read_state( require( o.to, "--to" ), sigma );
        seq = synth_learnable( op_or( operator_id::natural ), *target );
    }
    else if ( c == "damascan" )
    {
        start = read_state( require( o.from, "--from" ), sigma );
        target = start.reverse();
        seq = synth_damascan( op_or( operator_id::natural ), start );
    }
    else if ( c == "veryradical-plastic" )
    {
        target = read_state( require( o.to, "--to" ), sigma );
        seq = synth_veryradical_plastic( *target );
        if ( !o.op.empty() && require_operator( o.op ) != operator_id::very_radical )
            throw usage_error{ "the veryradical-plastic construction uses very_radical revision" };
    }
    else if ( c == "severe-plastic" )
    {
        start = read_state( require( o.from, "--from" ), sigma );
        target = read_state( require( o.to, "--to" ), sigma );
        seq = synth_severe_plastic( op_or( operator_id::severe ), start, *target );
    }
    else if ( c == "radical-flatten" )
    {
        start = read_state( require( o.from, "--from" ), sigma );
        target = doxastic_state::flat( sigma.world_count() );
        seq = synth_radical_flatten( start );
    }
    else if ( c == "dogmatic" )
    {
        start = read_state( require( o.from, "--from" ), sigma );
        auto f = parse_formula( require( o.target_class, "--target-class" ), sigma );
        seq = synth_dogmatic( op_or( operator_id::radical ), start, f );
        target = doxastic_state::formula_order( f );
    }
    else
        throw usage_error{ "unknown construction '" + c + "'" };

    auto trace = replay( seq, start );
    bool ok = trace.final_state() == *target;
    if ( o.as_json )
    {
        json out{ { "construction", c },
                  { "sequence", sequence_to_json( seq, sigma ) },
                  { "target", state_to_json( *target, sigma ) },
                  { "replay", trace_to_json( seq, trace, sigma ) },
                  { "replay_matches_target", ok } };
        print_json( out );
    }
    else
    {
        std::cout << "operator: " << to_string( seq.op ) << '\n' << "sequence:";
        if ( seq.formulas.empty() )
            std::cout << " (empty)";
        for ( const auto& f : seq.formulas )
            std::cout << " [" << format_formula( f, sigma ) << "]";
        std::cout << '\n';
        print_trace( seq, trace, sigma );
        std::cout << "target: " << format_state( *target, sigma ) << '\n'
                  << "replay: " << ( ok ? "ok" : "MISMATCH" ) << '\n';
    }
    if ( !ok )
        throw replay_failure{ "replay of the synthesized sequence does not reach the target" };
    return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Iterated belief revision: operators, ability checks and revision sequences" };
    app.require_subcommand( 1 );
    options o;

    auto add_op = [ & ]( CLI::App* cmd, bool required ) {
        auto* opt = cmd->add_option( "--op", o.op, "Revision operator" );
        if ( required )
            opt->required();
    };
    auto add_vars = [ & ]( CLI::App* cmd ) {
        cmd->add_option( "--vars", o.vars, "Comma-separated variable names, e.g. a,b" );
        cmd->add_option( "--vars-count", o.vars_count, "Number of variables (names x0, x1, ...)" );
    };
    auto add_json = [ & ]( CLI::App* cmd ) { cmd->add_flag( "--json", o.as_json, "JSON output" ); };
    auto add_parallel = [ & ]( CLI::App* cmd ) {
        cmd->add_option( "--parallel", o.parallel, "Worker threads for the move graph" )->check( CLI::Range( 1, 256 ) );
    };

    auto* apply = app.add_subcommand( "apply", "Revise a state by one formula" );
    add_op( apply, true );
    add_vars( apply );
    apply->add_option( "--state", o.state, "State, e.g. \"a&b > !a\"" )->required();
    apply->add_option( "--formula", o.formula, "Revision formula" )->required();
    add_json( apply );

    auto* trace = app.add_subcommand( "trace", "Revise a state by a sequence of formulas" );
    add_op( trace, true );
    add_vars( trace );
    trace->add_option( "--state", o.state, "Start state" )->required();
    trace->add_option( "--formulas", o.formulas, "Formulas separated by ';'" )->required();
    add_json( trace );

    auto* reach = app.add_subcommand( "reach", "States reachable from a state" );
    add_op( reach, true );
    add_vars( reach );
    reach->add_option( "--state", o.state, "Start state" )->required();
    reach->add_flag( "--count", o.count_only, "Only print the number of reachable states" );
    add_json( reach );
    add_parallel( reach );

    auto* abilities = app.add_subcommand( "abilities", "Decide the abilities of an operator" );
    add_op( abilities, true );
    add_vars( abilities );
    abilities->add_option( "--ability", o.ability_name, "Single ability to check" );
    add_json( abilities );
    add_parallel( abilities );

    auto* table = app.add_subcommand( "table", "Ability table of every operator" );
    add_vars( table );
    table->add_flag( "--reports", o.with_reports, "Include witnesses and counterexamples in JSON" );
    add_json( table );
    add_parallel( table );

    auto* premises = app.add_subcommand( "premises", "Success, vacuity and refinement of an operator" );
    add_op( premises, true );
    add_vars( premises );
    add_json( premises );

    auto* synthesize = app.add_subcommand( "synthesize", "Constructive revision sequences" );
    synthesize
            ->add_option( "--construction", o.construction,
                          "subclass, learnable, damascan, veryradical-plastic, severe-plastic, radical-flatten, "
                          "dogmatic" )
            ->required();
    add_op( synthesize, false );
    add_vars( synthesize );
    synthesize->add_option( "--from", o.from, "Start state" );
    synthesize->add_option( "--to", o.to, "Target state" );
    synthesize->add_option( "--target-class", o.target_class, "First class F of the target [F, !F]" );
    add_json( synthesize );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        int code = app.exit( e );
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if ( *apply )
            return run_apply( o );
        if ( *trace )
            return run_trace( o );
        if ( *reach )
            return run_reach( o );
        if ( *abilities )
            return run_abilities( o );
        if ( *table )
            return run_table( o );
        if ( *premises )
            return run_premises( o );
        return run_synthesize( o );
    }
    catch ( const parse_error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch ( const usage_error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch ( const precondition_error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch ( const resource_error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_resource;
    }
    catch ( const error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invariant;
    }
}
