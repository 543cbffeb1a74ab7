#pragma once

#include "abilities.hpp"

#include <json.hpp>

namespace doxa
{

using json = nlohmann::ordered_json;

// {"vars":["a","b"],"classes":[["11"],["10","01"],["00"]]}
[[nodiscard]] json state_to_json( const doxastic_state& state, const alphabet& sigma );
// Returns the alphabet from "vars" alongside the state.
[[nodiscard]] std::pair< alphabet, doxastic_state > state_from_json( const json& j );

[[nodiscard]] json world_set_to_json( const world_set& s, const alphabet& sigma );
[[nodiscard]] json sequence_to_json( const revision_sequence& seq, const alphabet& sigma );
[[nodiscard]] json trace_to_json( const revision_sequence& seq, const replay_trace& trace, const alphabet& sigma );
[[nodiscard]] json goal_to_json( const ability_goal& goal, const alphabet& sigma );
[[nodiscard]] json report_to_json( const ability_report& report, const alphabet& sigma );
// {"variables": n, "operators": [...], "abilities": [...], "verdicts": {op: {ability: bool}}, "reports": [...]}
[[nodiscard]] json table_to_json( const ability_table& table, const alphabet& sigma, bool with_reports = false );
[[nodiscard]] json premises_to_json( operator_id op, std::size_t variable_count, const operator_premises& premises );

} // namespace doxa
