#include "support.hpp"

#include <doctest.h>

using namespace doxa;
using namespace doxa::test;

TEST_CASE( "alphabet validation" )
{
    CHECK( alphabet{ { "a", "b", "c" } }.world_count() == 8 );
    CHECK( alphabet::parse( "a, b" ).names() == std::vector< std::string >{ "a", "b" } );
    CHECK( alphabet::generated( 3 ).names() == std::vector< std::string >{ "x0", "x1", "x2" } );
    CHECK_THROWS_AS( alphabet{ {} }, parse_error );
    CHECK_THROWS_AS( ( alphabet{ { "a", "a" } } ), parse_error );
    CHECK_THROWS_AS( alphabet{ { "A" } }, parse_error );
    CHECK_THROWS_AS( alphabet{ { "1a" } }, parse_error );
    CHECK_THROWS_AS( alphabet{ { "true" } }, parse_error );
    CHECK_THROWS_AS( ( alphabet{ { "a", "b", "c", "d", "e" } } ), parse_error );
    CHECK_NOTHROW( ( alphabet{ { "a", "b", "c", "d" } } ) );
    CHECK_NOTHROW( alphabet{ { "x_1" } } );
}

TEST_CASE( "enumerate_worlds lists every world in ascending order" )
{
    auto one = enumerate_worlds( a_only() );
    REQUIRE( one.size() == 2 );
    CHECK( format_world( one[ 0 ], a_only() ) == "0" );
    CHECK( format_world( one[ 1 ], a_only() ) == "1" );

    std::vector< std::string > printed;
    for ( world w : enumerate_worlds( ab() ) )
        printed.push_back( format_world( w, ab() ) );
    CHECK( printed == std::vector< std::string >{ "00", "01", "10", "11" } );

    CHECK( enumerate_worlds( alphabet{ { "a", "b", "c" } } ).size() == 8 );
}

TEST_CASE( "world strings put the first variable leftmost" )
{
    world w = parse_world( "10", ab() );
    CHECK( ab().holds( w, 0 ) );
    CHECK_FALSE( ab().holds( w, 1 ) );
    CHECK_THROWS_AS( (void)parse_world( "1", ab() ), parse_error );
    CHECK_THROWS_AS( (void)parse_world( "1x", ab() ), parse_error );
}

TEST_CASE( "parse_formula" )
{
    CHECK( parse_formula( "a & !b", ab() ) == ws( { "10" } ) );
    CHECK( parse_formula( "true", ab() ) == ws( { "11", "10", "01", "00" } ) );
    CHECK( parse_formula( "false", ab() ).empty() );
    CHECK( parse_formula( "a | b", ab() ) == ws( { "11", "10", "01" } ) );
    CHECK( parse_formula( "!!a", ab() ) == ws( { "11", "10" } ) );
    CHECK( parse_formula( "  ( a|b )&!( a&b ) ", ab() ) == ws( { "10", "01" } ) );

    SUBCASE( "precedence: ! binds tighter than &, which binds tighter than |" )
    {
        CHECK( parse_formula( "a | b & !a", ab() ) == parse_formula( "a | (b & (!a))", ab() ) );
        CHECK( parse_formula( "!a & b", ab() ) == ws( { "01" } ) );
    }

    SUBCASE( "errors" )
    {
        CHECK_THROWS_AS( (void)parse_formula( "a &", ab() ), parse_error );
        CHECK_THROWS_AS( (void)parse_formula( "a b", ab() ), parse_error );
        CHECK_THROWS_AS( (void)parse_formula( "", ab() ), parse_error );
        CHECK_THROWS_AS( (void)parse_formula( "(a", ab() ), parse_error );
        CHECK_THROWS_AS( (void)parse_formula( "a # b", ab() ), parse_error );
        try
        {
            (void)parse_formula( "a & c", ab() );
            FAIL( "unknown variable accepted" );
        }
        catch ( const parse_error& e )
        {
            CHECK( e.position() == 4 );
            CHECK( std::string{ e.what() }.find( "unknown variable 'c'" ) != std::string::npos );
        }
        try
        {
            (void)parse_formula( "a & | b", ab() );
            FAIL( "syntax error accepted" );
        }
        catch ( const parse_error& e )
        {
            CHECK( e.position() == 4 );
        }
    }
}

TEST_CASE( "complement" )
{
    CHECK( complement( ws( { "11", "10" } ) ) == ws( { "01", "00" } ) );
    CHECK( complement( ab().all() ).empty() );
    CHECK( complement( world_set::none( 4 ) ) == ab().all() );
    for ( const auto& s : nonempty_sets( 4 ) )
        CHECK( complement( complement( s ) ) == s );
}

TEST_CASE( "format_formula is a canonical DNF that parses back" )
{
    CHECK( format_formula( ab().all(), ab() ) == "true" );
    CHECK( format_formula( world_set::none( 4 ), ab() ) == "false" );
    CHECK( format_formula( ws( { "11", "10" } ), ab() ) == "a&b | a&!b" );
    CHECK( format_formula( ws( { "01" } ), ab() ) == "!a&b" );

    for ( const auto* sigma : { &a_only(), &ab() } )
        for ( std::uint32_t bits = 0; bits < ( 1U << sigma->world_count() ); ++bits )
        {
            world_set s{ bits, sigma->world_count() };
            CHECK( parse_formula( format_formula( s, *sigma ), *sigma ) == s );
        }

    alphabet four{ { "p", "q", "r", "s" } };
    for ( std::uint32_t bits : { 0x1U, 0x8001U, 0x1234U, 0xFFFEU, 0xFFFFU } )
    {
        world_set s{ bits, 16 };
        CHECK( parse_formula( format_formula( s, four ), four ) == s );
    }
}

TEST_CASE( "parse_formula is deterministic" )
{
    alphabet three{ { "p", "q", "r" } };
    auto first = parse_formula( "p & !q | r", three );
    for ( int i = 0; i < 3; ++i )
        CHECK( parse_formula( "p & !q | r", three ) == first );
}
