#pragma once

#include "synthesis.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace doxa
{

using state_id = std::uint32_t;

// Ability checks enumerate every state; beyond three variables the state
// count is out of reach.
inline constexpr std::size_t max_exhaustive_variables = 3;

// Every doxastic state of an alphabet, ordered by ascending fingerprint. The
// flat state always has id 0.
class state_space
{
    alphabet _sigma;
    std::vector< doxastic_state > _states;
    std::unordered_map< std::uint64_t, state_id > _index;

    state_space( alphabet sigma, std::vector< doxastic_state > states );

    friend state_space enumerate_states( const alphabet& sigma );

public:
    [[nodiscard]] const alphabet& sigma() const { return _sigma; }
    [[nodiscard]] std::size_t size() const { return _states.size(); }
    [[nodiscard]] std::size_t world_count() const { return _sigma.world_count(); }
    [[nodiscard]] const doxastic_state& operator[]( state_id id ) const { return _states[ id ]; }
    [[nodiscard]] std::span< const doxastic_state > states() const { return _states; }

    [[nodiscard]] std::optional< state_id > find( const doxastic_state& state ) const;
    // Throws precondition_error for states of another alphabet.
    [[nodiscard]] state_id id_of( const doxastic_state& state ) const;

    static constexpr state_id flat_id = 0;
};

// Throws resource_error above max_exhaustive_variables.
[[nodiscard]] state_space enumerate_states( const alphabet& sigma );

// Successors of each state under one operator: revise(op, s, A) for every
// nonempty A, deduplicated, in order of first occurrence with A ascending.
class move_graph
{
    operator_id _op;
    std::vector< std::uint64_t > _offsets;
    std::vector< state_id > _targets;

    friend move_graph build_move_graph( const state_space& space, operator_id op, unsigned workers );

public:
    [[nodiscard]] operator_id op() const { return _op; }
    [[nodiscard]] std::size_t state_count() const { return _offsets.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const { return _targets.size(); }
    [[nodiscard]] std::span< const state_id > successors( state_id s ) const
    {
        return { _targets.data() + _offsets[ s ], _targets.data() + _offsets[ s + 1 ] };
    }
};

// The state range is split among `workers` threads; the result does not
// depend on the worker count.
[[nodiscard]] move_graph build_move_graph( const state_space& space, operator_id op, unsigned workers = 1 );

// Reflexive-transitive closure from `from`, ascending ids.
[[nodiscard]] std::vector< state_id > reachable( const move_graph& graph, state_id from );

// Strongly connected components, numbered in reverse topological order: every
// edge leaving component k ends in a component with a smaller number.
struct scc_decomposition
{
    std::vector< std::uint32_t > component_of;
    std::size_t count = 0;
};

[[nodiscard]] scc_decomposition strongly_connected_components( const move_graph& graph );

enum class ability
{
    fully_plastic,
    plastic,
    learnable,
    amnesic,
    equating,
    correcting,
    damascan,
    believer,
    dogmatic
};

inline constexpr std::array all_abilities = {
    ability::fully_plastic, ability::plastic,    ability::learnable, ability::amnesic,  ability::equating,
    ability::correcting,    ability::damascan,   ability::believer,  ability::dogmatic,
};

[[nodiscard]] std::string_view to_string( ability a );
[[nodiscard]] std::optional< ability > parse_ability( std::string_view name );

// What a sequence of revisions has to achieve for one instance of an ability.
struct ability_goal
{
    enum class kind
    {
        exact_state,  // reach `state`
        equal_worlds, // first and second end up in the same class
        less_world,   // first ends up strictly more believed than second
        first_class   // class 0 equals `worlds`
    };

    kind type = kind::exact_state;
    std::optional< doxastic_state > state;
    world first{};
    world second{};
    world_set worlds;

    static ability_goal reach( doxastic_state target );
    static ability_goal equal( world i, world j );
    static ability_goal less( world i, world j );
    static ability_goal top_class( world_set f );

    [[nodiscard]] bool satisfied_by( const doxastic_state& s ) const;
};

struct ability_instance
{
    doxastic_state start;
    ability_goal goal;
};

struct ability_report
{
    operator_id op = operator_id::natural;
    std::size_t variable_count = 0;
    ability which = ability::fully_plastic;
    bool verdict = false;
    // Positive verdict: a fixed representative instance, solved by `witness`.
    // Negative verdict: an instance no sequence solves.
    std::optional< ability_instance > instance;
    std::optional< revision_sequence > witness;
    // Believer and dogmatic exclude F = all worlds; reaching it from every
    // state is the amnesic ability, reported here.
    std::optional< bool > all_worlds_corner;
};

// Shortest sequence, moves tried in ascending formula order.
[[nodiscard]] std::optional< revision_sequence > shortest_witness( operator_id op, const doxastic_state& start,
                                                                   const ability_goal& goal );

// Move graph plus its condensation for one operator; answers every ability
// query over the same graph.
class operator_analysis
{
    const state_space* _space;
    operator_id _op;
    move_graph _graph;
    scc_decomposition _scc;

    [[nodiscard]] ability_report positive( ability which, ability_instance spot ) const;
    [[nodiscard]] ability_report negative( ability which, ability_instance failing ) const;

    [[nodiscard]] std::optional< ability_instance > failing_amnesic() const;
    [[nodiscard]] std::optional< ability_instance > failing_from( state_id source,
                                                                  bool include_flat_targets ) const;
    [[nodiscard]] std::optional< ability_instance > failing_to( state_id target ) const;
    [[nodiscard]] std::optional< ability_instance > failing_mask( ability which ) const;
    [[nodiscard]] std::optional< ability_instance > failing_damascan() const;

    [[nodiscard]] ability_instance spot_instance( ability which ) const;

public:
    operator_analysis( const state_space& space, operator_id op, unsigned workers = 1 );

    [[nodiscard]] const move_graph& graph() const { return _graph; }
    [[nodiscard]] const scc_decomposition& components() const { return _scc; }
    [[nodiscard]] ability_report check( ability which ) const;
};

[[nodiscard]] ability_report check_ability( const state_space& space, operator_id op, ability which );

struct ability_table
{
    std::size_t variable_count = 0;
    // Row-major: operators in the order given, abilities in all_abilities order.
    std::vector< ability_report > reports;

    [[nodiscard]] const ability_report* find( operator_id op, ability which ) const;
    [[nodiscard]] std::optional< bool > verdict( operator_id op, ability which ) const;
};

[[nodiscard]] ability_table build_ability_table( const state_space& space,
                                                 std::span< const operator_id > ops = all_operators,
                                                 unsigned workers = 1 );

struct operator_premises
{
    bool success = false;    // result(0) is contained in A
    bool vacuity = false;    // revising by true changes nothing
    bool refinement = false; // every result class lies inside an input class
};

[[nodiscard]] operator_premises check_operator_premises( const state_space& space, operator_id op );

struct implication
{
    std::vector< ability > premises;
    ability conclusion;
    // Smallest alphabet on which the implication holds.
    std::size_t min_variables = 1;
};

[[nodiscard]] const std::vector< implication >& ability_implications();

struct implication_violation
{
    operator_id op;
    implication rule;
};

// Throws precondition_error when an operator in the table lacks an ability.
[[nodiscard]] std::vector< implication_violation > check_implications( const ability_table& table );

} // namespace doxa
