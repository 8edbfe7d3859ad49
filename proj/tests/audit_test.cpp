#include "oracle.hpp"

#include "setlab/audit.hpp"
#include "setlab/dsl.hpp"
#include "setlab/enumerator.hpp"
#include "setlab/interp.hpp"

#include <gtest/gtest.h>

using namespace setlab;

namespace
{

Universe make( std::vector<std::pair<std::string, std::vector<std::string>>> defs )
{
    return Universe::from_definitions( defs );
}

using Status = LemmaVerdict::Status;

} // namespace

TEST( Audit, CheckAxiomQuine )
{
    auto q = make( { { "q", { "q" } } } );
    const auto succ = check_axiom( q, Axiom::Successor );
    EXPECT_TRUE( succ.satisfied );
    ASSERT_EQ( succ.per_element.size(), 1u );
    EXPECT_EQ( succ.per_element[ 0 ].second, LookupResult::unique( q.id( "q" ) ) );

    const auto pred = check_axiom( q, Axiom::Predecessor );
    EXPECT_FALSE( pred.satisfied );
    EXPECT_TRUE( pred.per_element[ 0 ].second.is_absent() );
}

TEST( Audit, CheckAxiomEmptySet )
{
    auto e = make( { { "e", {} } } );
    EXPECT_TRUE( check_axiom( e, Axiom::Predecessor ).satisfied );
    EXPECT_FALSE( check_axiom( e, Axiom::Successor ).satisfied );
}

TEST( Audit, CheckAxiomEmptyUniverse )
{
    Universe u;
    EXPECT_TRUE( check_axiom( u, Axiom::Successor ).satisfied );
    EXPECT_TRUE( check_axiom( u, Axiom::Predecessor ).satisfied );
}

TEST( Audit, SatisfiedIffAllUnique )
{
    oracle::for_each_matrix( 2, [ & ]( const oracle::Matrix& m ) {
        const auto u = m.to_universe();
        for ( auto axiom : { Axiom::Successor, Axiom::Predecessor } )
        {
            const auto r = check_axiom( u, axiom );
            bool all = true;
            for ( const auto& [ x, l ] : r.per_element )
                all = all && l.is_unique();
            ASSERT_EQ( r.satisfied, all );
        }
    } );
}

TEST( Audit, LemmaSuiteEmptyUniverseAllVacuous )
{
    const auto report = verify_lemma_suite( Universe{} );
    ASSERT_EQ( report.per_lemma.size(), all_lemmas.size() );
    for ( const auto& [ tag, v ] : report.per_lemma )
    {
        EXPECT_EQ( v.status, Status::Vacuous ) << to_string( tag );
        EXPECT_EQ( v.checked, 0u );
    }
}

TEST( Audit, LemmaSuiteQuineWithEmptySet )
{
    auto u = make( { { "q", { "q" } }, { "e", {} } } );
    const auto report = verify_lemma_suite( u );
    EXPECT_FALSE( report.any_violated() );
    // q-- = e and q is not in ext(e) = {}.
    EXPECT_EQ( report.at( LemmaTag::PredNotSelf ).status, Status::Holds );
    EXPECT_EQ( report.at( LemmaTag::Restated ).status, Status::Vacuous );
}

TEST( Audit, LemmaTagsAreStable )
{
    std::vector<std::string> tags;
    for ( auto t : all_lemmas )
        tags.emplace_back( to_string( t ) );
    EXPECT_EQ( tags, ( std::vector<std::string>{ "L-lower-not-self", "L-upper-self", "C-not-both", "C-stoppage",
                                                  "L-pred-not-self", "L-succ-self", "A", "B", "C2", "D", "E",
                                                  "main-result", "restated" } ) );
}

// Never violated, and the number of instances checked for the conditional
// lemmas equals the oracle's count of hypotheses, on every universe n <= 3.
TEST( Audit, LemmaSuiteMatchesOracleExhaustively )
{
    for ( std::size_t n = 0; n <= 3; ++n )
        oracle::for_each_matrix( n, [ & ]( const oracle::Matrix& m ) {
            const auto u = m.to_universe();
            const auto report = verify_lemma_suite( u );
            ASSERT_FALSE( report.any_violated() ) << print_universe( u );

            std::size_t lowers = 0, uppers = 0, succ = 0, pred = 0, lower_succ = 0, upper_pred = 0;
            for ( std::size_t x = 0; x < n; ++x )
            {
                const bool s = m.successors( x ).size() == 1;
                const bool p = m.predecessors( x ).size() == 1;
                lowers += m.lower( x );
                uppers += m.upper( x );
                succ += s;
                pred += p;
                lower_succ += m.lower( x ) && s;
                upper_pred += m.upper( x ) && p;
            }
            ASSERT_EQ( report.at( LemmaTag::LowerNotSelf ).checked, lowers );
            ASSERT_EQ( report.at( LemmaTag::UpperSelf ).checked, uppers );
            ASSERT_EQ( report.at( LemmaTag::NotBoth ).checked, n );
            ASSERT_EQ( report.at( LemmaTag::SuccSelf ).checked, succ );
            ASSERT_EQ( report.at( LemmaTag::PredNotSelf ).checked, pred );
            for ( auto t : { LemmaTag::A, LemmaTag::B } )
                ASSERT_EQ( report.at( t ).checked, lower_succ );
            for ( auto t : { LemmaTag::C2, LemmaTag::D, LemmaTag::E } )
                ASSERT_EQ( report.at( t ).checked, upper_pred );
            ASSERT_EQ( report.at( LemmaTag::A ).status, lower_succ ? Status::Holds : Status::Vacuous );
        } );
}

TEST( Audit, TraceChainHfAscending )
{
    const auto u = hf_universe( 3 );
    const auto chain = trace_chain( u, u.id( "h0" ), Direction::Ascending, 64 );
    // {} -> {{}} -> {{}, {{}}}; the next successor has rank 4.
    ASSERT_EQ( chain.nodes.size(), 3u );
    EXPECT_EQ( u.name( chain.nodes[ 0 ] ), "h0" );
    EXPECT_EQ( u.name( chain.nodes[ 1 ] ), "h1" );
    EXPECT_EQ( u.name( chain.nodes[ 2 ] ), "h3" );
    EXPECT_EQ( chain.terminated_by, Chain::Termination::Absent );
    EXPECT_EQ( chain.tracked_property, "lower" );
    EXPECT_TRUE( chain.property_held );
    for ( std::size_t i = 1; i < chain.nodes.size(); ++i )
    {
        EXPECT_NE( chain.nodes[ i ], chain.nodes[ i - 1 ] );
        EXPECT_TRUE( is_member( u, chain.nodes[ i - 1 ], chain.nodes[ i ] ) );
        EXPECT_TRUE( is_lower( u, chain.nodes[ i ] ) );
    }
}

TEST( Audit, TraceChainQuineCycles )
{
    auto q = make( { { "q", { "q" } } } );
    const auto chain = trace_chain( q, q.id( "q" ), Direction::Ascending, 10 );
    EXPECT_EQ( chain.nodes, std::vector<ElementId>{ q.id( "q" ) } );
    EXPECT_EQ( chain.terminated_by, Chain::Termination::Cycle );
    EXPECT_EQ( chain.repeated, q.id( "q" ) );
    EXPECT_FALSE( chain.tracked_property );
}

TEST( Audit, TraceChainStopsAtMultiple )
{
    auto u = make( { { "e", {} }, { "s", { "e" } }, { "t", { "e" } } } );
    const auto chain = trace_chain( u, u.id( "e" ), Direction::Ascending, 10 );
    EXPECT_EQ( chain.terminated_by, Chain::Termination::Multiple );
    EXPECT_EQ( chain.ambiguous, ( std::vector<ElementId>{ u.id( "s" ), u.id( "t" ) } ) );
}

TEST( Audit, TraceChainLengthCap )
{
    const auto u = hf_universe( 4 );
    const auto chain = trace_chain( u, u.id( "h00" ), Direction::Ascending, 2 );
    EXPECT_EQ( chain.nodes.size(), 2u );
    EXPECT_EQ( chain.terminated_by, Chain::Termination::LengthCap );
}

TEST( Audit, TraceChainErrors )
{
    auto e = make( { { "e", {} } } );
    EXPECT_THROW( (void)trace_chain( e, ElementId{ 4 }, Direction::Ascending, 3 ), UnknownElement );
    EXPECT_THROW( (void)trace_chain( e, e.id( "e" ), Direction::Ascending, 0 ), Error );
}

// Descending from the universal urelement in the materialized demo model
// after building an upper chain: each step is a distinct upper inside the
// previous one.
TEST( Audit, TraceChainUpperDescending )
{
    const auto chain = upper_chain_interp( default_demo_model(), 3 );
    const auto u = materialize( chain.model );
    const auto start = u.id( chain.model.name( chain.universal ) );
    const auto traced = trace_chain( u, start, Direction::Descending, 100 );
    EXPECT_EQ( traced.tracked_property, "upper" );
    EXPECT_TRUE( traced.property_held );
    ASSERT_EQ( traced.nodes.size(), 4u );
    EXPECT_EQ( traced.terminated_by, Chain::Termination::Absent );
    for ( std::size_t i = 1; i < traced.nodes.size(); ++i )
    {
        EXPECT_TRUE( is_upper( u, traced.nodes[ i ] ) );
        EXPECT_TRUE( is_member( u, traced.nodes[ i ], traced.nodes[ i - 1 ] ) );
    }
}

// Ascending chains from a lower never revisit: each step is again a lower
// with exactly one more member. This holds in every universe, not only those
// satisfying the successor axiom; the latter never contain a lower at all
// when finite, since the chain would have to go on forever.
TEST( Audit, AscendingChainsFromLowersNeverCycle )
{
    std::size_t successor_with_lower = 0;
    for ( std::size_t n = 1; n <= 3; ++n )
        oracle::for_each_matrix( n, [ & ]( const oracle::Matrix& m ) {
            const auto u = m.to_universe();
            const bool successor = check_axiom( u, Axiom::Successor ).satisfied;
            for ( auto x : u.elements() )
            {
                if ( !is_lower( u, x ) )
                    continue;
                successor_with_lower += successor;
                const auto chain = trace_chain( u, x, Direction::Ascending, n + 1 );
                ASSERT_NE( chain.terminated_by, Chain::Termination::Cycle );
                ASSERT_NE( chain.terminated_by, Chain::Termination::LengthCap );
                ASSERT_TRUE( chain.property_held );
                for ( std::size_t i = 1; i < chain.nodes.size(); ++i )
                    ASSERT_EQ( u.members( chain.nodes[ i ] ).count(), u.members( chain.nodes[ i - 1 ] ).count() + 1 );
            }
        } );
    EXPECT_EQ( successor_with_lower, 0u );
}
