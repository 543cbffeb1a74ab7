#include "doxa/logic.hpp"

#include <bit>
#include <cassert>
#include <cctype>

namespace doxa
{

world_set::world_set( std::uint32_t bits, std::size_t world_count )
        : _bits{ bits }, _width{ static_cast< std::uint32_t >( world_count ) }
{
    assert( world_count >= 1 && world_count <= max_worlds );
    assert( ( bits & ~all( world_count )._bits ) == 0 );
}

world_set world_set::all( std::size_t world_count )
{
    world_set result;
    result._width = static_cast< std::uint32_t >( world_count );
    result._bits = world_count >= 32 ? ~std::uint32_t{ 0 } : ( std::uint32_t{ 1 } << world_count ) - 1;
    return result;
}

world_set world_set::single( world w, std::size_t world_count )
{
    return { std::uint32_t{ 1 } << w.mask, world_count };
}

std::size_t world_set::size() const
{
    return static_cast< std::size_t >( std::popcount( _bits ) );
}

bool world_set::subset_of( const world_set& other ) const
{
    return ( _bits & ~other._bits ) == 0;
}

world world_set::least() const
{
    assert( !empty() );
    return world{ static_cast< std::uint32_t >( std::countr_zero( _bits ) ) };
}

std::vector< world > world_set::members() const
{
    std::vector< world > result;
    for ( std::uint32_t rest = _bits; rest != 0; rest &= rest - 1 )
        result.push_back( world{ static_cast< std::uint32_t >( std::countr_zero( rest ) ) } );
    return result;
}

world_set world_set::complement() const
{
    return all( _width ) - *this;
}

world_set& world_set::operator|=( const world_set& other )
{
    assert( _width == other._width );
    _bits |= other._bits;
    return *this;
}

world_set& world_set::operator&=( const world_set& other )
{
    assert( _width == other._width );
    _bits &= other._bits;
    return *this;
}

world_set& world_set::operator-=( const world_set& other )
{
    assert( _width == other._width );
    _bits &= ~other._bits;
    return *this;
}

bool is_valid_variable_name( std::string_view name )
{
    if ( name.empty() || name[ 0 ] < 'a' || name[ 0 ] > 'z' )
        return false;
    for ( char c : name )
    {
        bool ok = ( c >= 'a' && c <= 'z' ) || ( c >= '0' && c <= '9' ) || c == '_';
        if ( !ok )
            return false;
    }
    return name != "true" && name != "false";
}

alphabet::alphabet( std::vector< std::string > names ) : _names{ std::move( names ) }
{
    if ( _names.empty() )
        throw parse_error{ "alphabet must contain at least one variable" };
    if ( _names.size() > max_variables )
        throw parse_error{ "alphabet has " + std::to_string( _names.size() ) + " variables, at most "
                           + std::to_string( max_variables ) + " are supported" };
    for ( std::size_t i = 0; i < _names.size(); ++i )
    {
        if ( !is_valid_variable_name( _names[ i ] ) )
            throw parse_error{ "invalid variable name '" + _names[ i ] + "'" };
        for ( std::size_t j = 0; j < i; ++j )
            if ( _names[ j ] == _names[ i ] )
                throw parse_error{ "duplicate variable name '" + _names[ i ] + "'" };
    }
}

alphabet alphabet::generated( std::size_t count )
{
    std::vector< std::string > names;
    for ( std::size_t i = 0; i < count; ++i )
        names.push_back( "x" + std::to_string( i ) );
    return alphabet{ std::move( names ) };
}

alphabet alphabet::parse( std::string_view comma_separated )
{
    std::vector< std::string > names;
    std::size_t start = 0;
    while ( true )
    {
        auto comma = comma_separated.find( ',', start );
        auto piece = comma_separated.substr( start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start );
        while ( !piece.empty() && std::isspace( static_cast< unsigned char >( piece.front() ) ) )
            piece.remove_prefix( 1 );
        while ( !piece.empty() && std::isspace( static_cast< unsigned char >( piece.back() ) ) )
            piece.remove_suffix( 1 );
        names.emplace_back( piece );
        if ( comma == std::string_view::npos )
            break;
        start = comma + 1;
    }
    return alphabet{ std::move( names ) };
}

std::optional< std::size_t > alphabet::index_of( std::string_view name ) const
{
    for ( std::size_t i = 0; i < _names.size(); ++i )
        if ( _names[ i ] == name )
            return i;
    return std::nullopt;
}

world_set alphabet::models_of( std::size_t var ) const
{
    world_set result = world_set::none( world_count() );
    for ( std::uint32_t m = 0; m < world_count(); ++m )
        if ( holds( world{ m }, var ) )
            result.insert( world{ m } );
    return result;
}

std::vector< world > enumerate_worlds( const alphabet& sigma )
{
    std::vector< world > result;
    result.reserve( sigma.world_count() );
    for ( std::uint32_t m = 0; m < sigma.world_count(); ++m )
        result.push_back( world{ m } );
    return result;
}

world_set complement( const world_set& s )
{
    return s.complement();
}

std::string format_world( world w, const alphabet& sigma )
{
    std::string result;
    for ( std::size_t var = 0; var < sigma.size(); ++var )
        result += sigma.holds( w, var ) ? '1' : '0';
    return result;
}

world parse_world( std::string_view text, const alphabet& sigma )
{
    if ( text.size() != sigma.size() )
        throw parse_error{ "world '" + std::string{ text } + "' must have " + std::to_string( sigma.size() )
                           + " digits" };
    std::uint32_t mask = 0;
    for ( std::size_t i = 0; i < text.size(); ++i )
    {
        if ( text[ i ] != '0' && text[ i ] != '1' )
            throw parse_error{ "world '" + std::string{ text } + "' contains a non-binary digit", i };
        mask = ( mask << 1 ) | ( text[ i ] == '1' ? 1U : 0U );
    }
    return world{ mask };
}

namespace detail
{

namespace
{

bool is_identifier_char( char c )
{
    return ( c >= 'a' && c <= 'z' ) || ( c >= '0' && c <= '9' ) || c == '_';
}

class formula_reader
{
    std::string_view _text;
    std::size_t& _pos;
    const alphabet& _sigma;

    [[noreturn]] void fail( const std::string& what ) const
    {
        throw parse_error{ "syntax error at position " + std::to_string( _pos ) + ": " + what, _pos };
    }

    char peek()
    {
        skip_spaces( _text, _pos );
        return _pos < _text.size() ? _text[ _pos ] : '\0';
    }

    world_set read_or()
    {
        world_set result = read_and();
        while ( peek() == '|' )
        {
            ++_pos;
            result |= read_and();
        }
        return result;
    }

    world_set read_and()
    {
        world_set result = read_not();
        while ( peek() == '&' )
        {
            ++_pos;
            result &= read_not();
        }
        return result;
    }

    world_set read_not()
    {
        if ( peek() == '!' )
        {
            ++_pos;
            return read_not().complement();
        }
        return read_atom();
    }

    world_set read_atom()
    {
        char c = peek();
        if ( c == '(' )
        {
            ++_pos;
            world_set inner = read_or();
            if ( peek() != ')' )
                fail( "expected ')'" );
            ++_pos;
            return inner;
        }
        if ( c >= 'a' && c <= 'z' )
        {
            std::size_t start = _pos;
            while ( _pos < _text.size() && is_identifier_char( _text[ _pos ] ) )
                ++_pos;
            auto name = _text.substr( start, _pos - start );
            if ( name == "true" )
                return _sigma.all();
            if ( name == "false" )
                return world_set::none( _sigma.world_count() );
            auto var = _sigma.index_of( name );
            if ( !var )
            {
                _pos = start;
                throw parse_error{ "unknown variable '" + std::string{ name } + "' at position "
                                           + std::to_string( start ),
                                   start };
            }
            return _sigma.models_of( *var );
        }
        if ( c == '\0' )
            fail( "unexpected end of input" );
        fail( std::string{ "unexpected character '" } + c + "'" );
    }

public:
    formula_reader( std::string_view text, std::size_t& pos, const alphabet& sigma )
            : _text{ text }, _pos{ pos }, _sigma{ sigma }
    {}

    world_set read() { return read_or(); }
};

} // namespace

void skip_spaces( std::string_view text, std::size_t& pos )
{
    while ( pos < text.size() && std::isspace( static_cast< unsigned char >( text[ pos ] ) ) )
        ++pos;
}

world_set read_formula( std::string_view text, std::size_t& pos, const alphabet& sigma )
{
    return formula_reader{ text, pos, sigma }.read();
}

} // namespace detail

world_set parse_formula( std::string_view text, const alphabet& sigma )
{
    std::size_t pos = 0;
    world_set result = detail::read_formula( text, pos, sigma );
    detail::skip_spaces( text, pos );
    if ( pos != text.size() )
        throw parse_error{ "syntax error at position " + std::to_string( pos ) + ": unexpected '"
                                   + std::string{ text.substr( pos, 1 ) } + "'",
                           pos };
    return result;
}

std::string format_formula( const world_set& s, const alphabet& sigma )
{
    if ( s.empty() )
        return "false";
    if ( s.is_all() )
        return "true";

    auto worlds = s.members();
    std::string result;
    for ( auto it = worlds.rbegin(); it != worlds.rend(); ++it )
    {
        if ( !result.empty() )
            result += " | ";
        for ( std::size_t var = 0; var < sigma.size(); ++var )
        {
            if ( var > 0 )
                result += '&';
            if ( !sigma.holds( *it, var ) )
                result += '!';
            result += sigma.names()[ var ];
        }
    }
    return result;
}

} // namespace doxa
