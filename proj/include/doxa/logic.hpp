#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace doxa
{

// Base of every error raised by the library. The CLI maps the subclasses to
// exit codes.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed formula, state literal, world string or alphabet.
class parse_error : public error
{
    std::size_t _position;

public:
    parse_error( const std::string& message, std::size_t position = 0 )
            : error{ message }, _position{ position }
    {}

    [[nodiscard]] std::size_t position() const { return _position; }
};

// A call whose precondition does not hold (empty revision formula, flat target
// for a construction that needs a non-flat one, ...).
class precondition_error : public error
{
public:
    using error::error;
};

// Class lists that do not partition the worlds.
class state_error : public error
{
public:
    using error::error;
};

// Exhaustive analysis requested for an alphabet that is too large.
class resource_error : public error
{
public:
    using error::error;
};

inline constexpr std::size_t max_variables = 4;
inline constexpr std::size_t max_worlds = std::size_t{ 1 } << max_variables;

// One propositional interpretation. The printed bitstring of a world is its
// mask written in binary with exactly n digits, so the leftmost character is
// the value of the first variable of the alphabet.
struct world
{
    std::uint32_t mask = 0;

    friend auto operator<=>( const world&, const world& ) = default;
};

class world_set
{
    std::uint32_t _bits = 0;
    std::uint32_t _width = 0;

public:
    world_set() = default;
    world_set( std::uint32_t bits, std::size_t world_count );

    static world_set none( std::size_t world_count ) { return { 0, world_count }; }
    static world_set all( std::size_t world_count );
    static world_set single( world w, std::size_t world_count );

    [[nodiscard]] std::uint32_t bits() const { return _bits; }
    [[nodiscard]] std::size_t world_count() const { return _width; }

    [[nodiscard]] bool empty() const { return _bits == 0; }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool contains( world w ) const { return ( ( _bits >> w.mask ) & 1U ) != 0; }
    [[nodiscard]] bool is_all() const { return *this == all( _width ); }
    [[nodiscard]] bool subset_of( const world_set& other ) const;
    [[nodiscard]] bool intersects( const world_set& other ) const { return ( _bits & other._bits ) != 0; }

    // Least world by mask; the set must be nonempty.
    [[nodiscard]] world least() const;

    // Members in ascending mask order.
    [[nodiscard]] std::vector< world > members() const;

    void insert( world w ) { _bits |= std::uint32_t{ 1 } << w.mask; }

    [[nodiscard]] world_set complement() const;

    world_set& operator|=( const world_set& other );
    world_set& operator&=( const world_set& other );
    world_set& operator-=( const world_set& other );

    friend world_set operator|( world_set lhs, const world_set& rhs ) { return lhs |= rhs; }
    friend world_set operator&( world_set lhs, const world_set& rhs ) { return lhs &= rhs; }
    friend world_set operator-( world_set lhs, const world_set& rhs ) { return lhs -= rhs; }

    friend bool operator==( const world_set&, const world_set& ) = default;
};

class alphabet
{
    std::vector< std::string > _names;

public:
    // Throws parse_error on invalid, duplicate or too many names.
    explicit alphabet( std::vector< std::string > names );

    // x0, ..., x(count-1)
    static alphabet generated( std::size_t count );

    // "a,b,c"
    static alphabet parse( std::string_view comma_separated );

    [[nodiscard]] std::size_t size() const { return _names.size(); }
    [[nodiscard]] std::size_t world_count() const { return std::size_t{ 1 } << _names.size(); }
    [[nodiscard]] const std::vector< std::string >& names() const { return _names; }
    [[nodiscard]] std::optional< std::size_t > index_of( std::string_view name ) const;

    // Truth value of variable `var` in `w`.
    [[nodiscard]] bool holds( world w, std::size_t var ) const
    {
        return ( ( w.mask >> ( _names.size() - 1 - var ) ) & 1U ) != 0;
    }

    // Worlds where variable `var` is true.
    [[nodiscard]] world_set models_of( std::size_t var ) const;

    [[nodiscard]] world_set all() const { return world_set::all( world_count() ); }

    friend bool operator==( const alphabet&, const alphabet& ) = default;
};

[[nodiscard]] bool is_valid_variable_name( std::string_view name );

// All 2^n worlds in ascending mask order.
[[nodiscard]] std::vector< world > enumerate_worlds( const alphabet& sigma );

[[nodiscard]] world_set complement( const world_set& s );

[[nodiscard]] std::string format_world( world w, const alphabet& sigma );
[[nodiscard]] world parse_world( std::string_view text, const alphabet& sigma );

// Grammar:
//   formula := or ; or := and ("|" and)* ; and := not ("&" not)* ;
//   not := "!" not | atom ; atom := var | "true" | "false" | "(" formula ")"
[[nodiscard]] world_set parse_formula( std::string_view text, const alphabet& sigma );

// Canonical DNF: "true", "false", or the minterms in descending world order
// joined by " | ", literals joined by "&" in alphabet order.
[[nodiscard]] std::string format_formula( const world_set& s, const alphabet& sigma );

namespace detail
{

// Recursive-descent formula reader shared with the state-literal parser.
// Reads one formula starting at `pos` and leaves `pos` at the first
// unconsumed non-space character.
world_set read_formula( std::string_view text, std::size_t& pos, const alphabet& sigma );
void skip_spaces( std::string_view text, std::size_t& pos );

} // namespace detail

} // namespace doxa
