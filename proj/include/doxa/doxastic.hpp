#pragma once

#include "logic.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace doxa
{

enum class order_relation
{
    less,
    equal,
    greater
};

// A connected preorder over all worlds, stored as its ordered partition into
// equivalence classes. Class 0 holds the most believed worlds, the last class
// (index last()) the least believed ones. Every instance satisfies the
// partition invariants: classes nonempty, pairwise disjoint, jointly covering
// all worlds.
class doxastic_state
{
    std::vector< world_set > _classes;

    explicit doxastic_state( std::vector< world_set > classes ) : _classes{ std::move( classes ) } {}

public:
    // Drops empty classes and keeps the relative order of the others.
    // Throws state_error on overlapping classes or uncovered worlds.
    static doxastic_state canonicalize( std::span< const world_set > raw, std::size_t world_count );

    static doxastic_state flat( std::size_t world_count );

    // [A, true \ A]; a single class when A is all worlds.
    static doxastic_state formula_order( const world_set& a );

    [[nodiscard]] std::size_t world_count() const { return _classes.front().world_count(); }
    [[nodiscard]] std::size_t class_count() const { return _classes.size(); }
    [[nodiscard]] std::size_t last() const { return _classes.size() - 1; }
    [[nodiscard]] bool is_flat() const { return _classes.size() == 1; }
    [[nodiscard]] std::span< const world_set > classes() const { return _classes; }
    [[nodiscard]] const world_set& operator[]( std::size_t i ) const { return _classes[ i ]; }

    [[nodiscard]] std::size_t class_index( world w ) const;
    [[nodiscard]] order_relation compare( world i, world j ) const;

    // Index of the first / last class meeting `a`; `a` must be nonempty.
    [[nodiscard]] std::size_t imin( const world_set& a ) const;
    [[nodiscard]] std::size_t imax( const world_set& a ) const;
    // Most believed worlds of `a`.
    [[nodiscard]] world_set min_models( const world_set& a ) const;

    [[nodiscard]] doxastic_state reverse() const;

    // Every class of *this lies inside some class of `coarse`.
    [[nodiscard]] bool refines( const doxastic_state& coarse ) const;

    [[nodiscard]] bool is_single_class( const world_set& a ) const;

    // World -> class index, four bits per world, world w at bits [4w, 4w+4).
    // Unique per state within one alphabet.
    [[nodiscard]] std::uint64_t fingerprint() const;
    static doxastic_state from_fingerprint( std::uint64_t fingerprint, std::size_t world_count );

    friend bool operator==( const doxastic_state&, const doxastic_state& ) = default;
};

// "a&b > a&!b | !a&b > !a&!b": one formula per class, most believed first.
[[nodiscard]] doxastic_state parse_state( std::string_view text, const alphabet& sigma );
[[nodiscard]] std::string format_state( const doxastic_state& state, const alphabet& sigma );

} // namespace doxa

template <>
struct std::hash< doxa::doxastic_state >
{
    std::size_t operator()( const doxa::doxastic_state& state ) const noexcept
    {
        return std::hash< std::uint64_t >{}( state.fingerprint() );
    }
};
