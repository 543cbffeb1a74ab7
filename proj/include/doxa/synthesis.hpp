#pragma once

#include "operators.hpp"

#include <vector>

namespace doxa
{

struct revision_sequence
{
    operator_id op = operator_id::natural;
    std::vector< world_set > formulas;

    friend bool operator==( const revision_sequence&, const revision_sequence& ) = default;
};

struct replay_step
{
    world_set formula;
    doxastic_state result;
    // The formula lay inside one class of the state it was applied to.
    bool single_class = false;
};

struct replay_trace
{
    doxastic_state start;
    std::vector< replay_step > steps;

    [[nodiscard]] const doxastic_state& final_state() const { return steps.empty() ? start : steps.back().result; }
    [[nodiscard]] bool all_single_class() const;
};

// Left fold of revise() over the formulas, recording every intermediate state.
[[nodiscard]] replay_trace replay( const revision_sequence& seq, const doxastic_state& start );

// Natural revisions by G(last), ..., G(0); turns `c` into `g` whenever every
// class of `g` lies inside a class of `c`. Each step is single-class.
[[nodiscard]] revision_sequence synth_subclass_sequence( const doxastic_state& c, const doxastic_state& g );

// From the flat state to `g` for natural, lexicographic or restrained
// revision. Empty when `g` is flat.
[[nodiscard]] revision_sequence synth_learnable( operator_id op, const doxastic_state& g );

// From `c` to its reverse for natural, lexicographic or restrained revision.
[[nodiscard]] revision_sequence synth_damascan( operator_id op, const doxastic_state& c );

// Very radical revisions turning any state into the non-flat `g`:
// {I}, G(0), G(0)|G(1), ..., G(0)|...|G(last-1), with I the least world
// outside G(0).
[[nodiscard]] revision_sequence synth_veryradical_plastic( const doxastic_state& g );

// Severe-family revisions turning `c` into the non-flat `g`:
// {I}, {J}, true\G(last), G(0)|...|G(last-1), ..., G(0)|G(1), G(0),
// with I the least world of C(last) and J the least world of G(last).
// Every step is single-class, so the sequence is shared by severe,
// moderate_severe and deep_severe.
[[nodiscard]] revision_sequence synth_severe_plastic( operator_id op, const doxastic_state& c,
                                                      const doxastic_state& g );

// One radical revision by the least world of the last class; empty for the
// flat state, which needs no revision.
[[nodiscard]] revision_sequence synth_radical_flatten( const doxastic_state& c );

// Turns `c` into [F, true\F] with radical, full meet or plain severe revision.
[[nodiscard]] revision_sequence synth_dogmatic( operator_id op, const doxastic_state& c, const world_set& f );

} // namespace doxa
