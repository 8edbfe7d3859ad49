#include "setlab/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace setlab;

namespace
{

namespace fs = std::filesystem;

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome invoke( std::vector<std::string> args )
{
    std::ostringstream out, err;
    const int code = cli::run( args, out, err );
    return { code, out.str(), err.str() };
}

class Cli : public ::testing::Test
{
protected:
    void SetUp() override
    {
        _dir = fs::temp_directory_path() / ( "setlab_cli_test_" + std::to_string( ::testing::UnitTest::GetInstance()->random_seed() ) +
                                             ::testing::UnitTest::GetInstance()->current_test_info()->name() );
        fs::create_directories( _dir );
    }
    void TearDown() override { fs::remove_all( _dir ); }

    std::string file( const std::string& name, const std::string& text )
    {
        const auto p = _dir / name;
        std::ofstream( p ) << text;
        return p.string();
    }

    fs::path _dir;
};

} // namespace

TEST_F( Cli, VerifySucceeds )
{
    const auto r = invoke( { "verify", file( "qe.uni", "q = {q}\ne = {}\n" ) } );
    EXPECT_EQ( r.code, 0 );
    EXPECT_NE( r.out.find( "exit: 0" ), std::string::npos );
}

TEST_F( Cli, ParseErrorIsUsageExit )
{
    const auto r = invoke( { "check", file( "bad.uni", "a = {b\n" ) } );
    EXPECT_EQ( r.code, 2 );
    EXPECT_NE( r.err.find( "1:7" ), std::string::npos );
    EXPECT_EQ( invoke( { "check", ( _dir / "missing.uni" ).string() } ).code, 2 );
    EXPECT_EQ( invoke( { "bogus" } ).code, 2 );
    EXPECT_EQ( invoke( { "enumerate", "--size", "2", "--filter", "nope" } ).code, 2 );
    EXPECT_EQ( invoke( { "--format", "xml", "check", file( "e.uni", "e = {}\n" ) } ).code, 2 );
}

TEST_F( Cli, RequireUnmetExitsOne )
{
    const auto e = file( "e.uni", "e = {}\n" );
    EXPECT_EQ( invoke( { "--require", "successor", "check", e } ).code, 1 );
    EXPECT_EQ( invoke( { "--require", "predecessor", "check", e } ).code, 0 );
    const auto j = nlohmann::json::parse( invoke( { "--format", "json", "--require", "successor", "check", e } ).out );
    EXPECT_EQ( j[ "exit_code" ], 1 );
    EXPECT_EQ( j[ "require" ][ "successor" ], false );
}

TEST_F( Cli, JsonOutputIsValid )
{
    const auto qe = file( "qe.uni", "q = {q}\ne = {}\n" );
    const std::vector<std::vector<std::string>> commands{
            { "check", qe },
            { "classify", qe },
            { "verify", qe },
            { "chains", qe, "--from", "q", "--dir", "asc" },
            { "enumerate", "--size", "2", "--filter", "has-upper", "--dedupe" },
            { "interp", "--demo", "forster" },
            { "interp", "--demo", "quine" },
            { "interp", "--demo", "upperchain", "--k", "2" },
    };
    for ( auto args : commands )
    {
        args.insert( args.begin(), { "--format", "json" } );
        const auto r = invoke( args );
        EXPECT_EQ( r.code, 0 ) << args[ 2 ] << r.err;
        const auto j = nlohmann::json::parse( r.out );
        EXPECT_TRUE( j.contains( "command" ) );
        EXPECT_EQ( j[ "exit_code" ], 0 );
    }
}

TEST_F( Cli, CheckJsonContent )
{
    const auto j = nlohmann::json::parse( invoke( { "--format", "json", "check", file( "qe.uni", "q = {q}\ne = {}\n" ) } ).out );
    EXPECT_EQ( j[ "size" ], 2 );
    EXPECT_EQ( j[ "axioms" ][ 0 ][ "axiom" ], "successor" );
    EXPECT_EQ( j[ "axioms" ][ 0 ][ "satisfied" ], false );
    EXPECT_EQ( j[ "axioms" ][ 1 ][ "satisfied" ], true );
    EXPECT_EQ( j[ "axioms" ][ 1 ][ "per_element" ][ 1 ][ "candidates" ], nlohmann::json::array( { "e" } ) );
}

TEST_F( Cli, EnumerateCensus )
{
    const auto j = nlohmann::json::parse(
            invoke( { "--format", "json", "enumerate", "--size", "1", "--filter", "satisfies-both" } ).out );
    EXPECT_EQ( j[ "total" ], 2 );
    EXPECT_EQ( j[ "matching" ], 0 );
}

TEST_F( Cli, InterpWithModelFile )
{
    const auto model = file( "demo.model", "h0 = {}\n"
                                           "urelement U index ({0rep}, {})\n"
                                           "urelement A\n"
                                           "urelement B\n" );
    const auto r = invoke( { "interp", "--demo", "forster", "--model", model, "--m", "A", "--n", "B" } );
    EXPECT_EQ( r.code, 0 ) << r.out << r.err;
    EXPECT_EQ( invoke( { "interp", "--demo", "forster", "--model", model, "--m", "A", "--n", "A" } ).code, 2 );
}

TEST_F( Cli, OutputIsDeterministic )
{
    const auto qe = file( "qe.uni", "q = {q}\ne = {}\n" );
    for ( const auto& format : { "text", "json" } )
    {
        const std::vector<std::string> args{ "--format", format, "enumerate", "--size", "3", "--threads", "2", "--audit" };
        EXPECT_EQ( invoke( args ).out, invoke( args ).out );
        const std::vector<std::string> cls{ "--format", format, "classify", qe };
        EXPECT_EQ( invoke( cls ).out, invoke( cls ).out );
    }
}
