#include "setlab/audit.hpp"
#include "setlab/classifier.hpp"
#include "setlab/enumerator.hpp"
#include "setlab/interp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace setlab;

namespace
{

std::vector<std::string> names( const BaseModel& model, const std::vector<Entity>& es )
{
    std::vector<std::string> out;
    for ( auto e : es )
        out.push_back( model.name( e ) );
    return out;
}

std::vector<Entity> all_except( const BaseModel& model, std::initializer_list<Entity> drop )
{
    std::vector<Entity> out;
    for ( auto e : model.entities() )
        if ( std::find( drop.begin(), drop.end(), e ) == drop.end() )
            out.push_back( e );
    return out;
}

BaseModel swapped_demo()
{
    const auto base = default_demo_model();
    return upsilon_swap( base, base.entity( "M" ), base.entity( "N" ) );
}

} // namespace

TEST( Interp, JRep )
{
    const Entity x{ 3 };
    EXPECT_EQ( j_rep( Level::Zero, x ), RepToken{ ZeroRep{} } );
    EXPECT_EQ( j_rep( Level::Zero, Entity{ 5 } ), j_rep( Level::Zero, x ) );
    EXPECT_EQ( j_rep( Level::Mu, x ), RepToken{ MuRep{ x } } );
    EXPECT_NE( j_rep( Level::Mu, x ), j_rep( Level::Mu, Entity{ 4 } ) );
}

TEST( Interp, DemoModelLayout )
{
    const auto model = default_demo_model();
    EXPECT_EQ( model.entity_count(), 10u );
    EXPECT_EQ( names( model, model.entities() ),
               ( std::vector<std::string>{ "h0", "h1", "U", "M", "N", "ur3", "ur4", "ur5", "ur6", "ur7" } ) );
    EXPECT_FALSE( model.is_urelement( model.entity( "h1" ) ) );
    EXPECT_TRUE( model.is_urelement( model.entity( "U" ) ) );
    EXPECT_EQ( model.universal(), model.entity( "U" ) );
    EXPECT_TRUE( model.tagging_bijective() );
    EXPECT_FALSE( model.swapped() );
    EXPECT_EQ( names( model, model.untagged_urelements() ), ( std::vector<std::string>{ "ur5", "ur6", "ur7" } ) );
}

TEST( Interp, SprigAndMembership )
{
    const auto model = default_demo_model();
    const auto u = model.entity( "U" );
    const auto x = model.entity( "h0" );
    const auto universal = *model.index_of( u );

    const auto s = sprig( model, x, universal );
    ASSERT_EQ( s.size(), 1u );
    EXPECT_EQ( s.pairs[ 0 ].first, Level::Zero );
    EXPECT_TRUE( member_interp( model, x, u ) );

    // ({0rep}, {x}): both pairs present, even size, so x is not a member.
    const auto both = Index::make( true, { x } );
    EXPECT_EQ( sprig( model, x, both ).size(), 2u );
    // ({}, {x}): only the mu pair.
    EXPECT_EQ( sprig( model, x, Index::make( false, { x } ) ).size(), 1u );
    EXPECT_EQ( sprig( model, x, Index::make( false, {} ) ).size(), 0u );
}

TEST( Interp, MembershipOnHfAndUntagged )
{
    const auto model = default_demo_model();
    const auto h0 = model.entity( "h0" );
    const auto h1 = model.entity( "h1" );
    EXPECT_TRUE( member_interp( model, h0, h1 ) );
    EXPECT_FALSE( member_interp( model, h1, h0 ) );
    EXPECT_FALSE( member_interp( model, h0, h0 ) );
    // Urelements never belong to hf sets, and untagged urelements are empty.
    EXPECT_FALSE( member_interp( model, model.entity( "U" ), h1 ) );
    EXPECT_TRUE( extension_interp( model, model.entity( "ur5" ) ).empty() );
}

TEST( Interp, ExtensionInterp )
{
    const auto model = default_demo_model();
    const auto u = model.entity( "U" );
    const auto m = model.entity( "M" );
    EXPECT_EQ( extension_interp( model, u ), model.entities() );
    // M is tagged ({}, {U}) before the swap.
    EXPECT_EQ( extension_interp( model, m ), std::vector<Entity>{ u } );
    EXPECT_TRUE( extension_interp( model, model.entity( "N" ) ).empty() );
    EXPECT_EQ( extension_interp( model, model.entity( "h1" ) ), std::vector<Entity>{ model.entity( "h0" ) } );
}

TEST( Interp, UpsilonSwapTargets )
{
    const auto base = default_demo_model();
    const auto m = base.entity( "M" );
    const auto n = base.entity( "N" );
    const auto swapped = upsilon_swap( base, m, n );
    EXPECT_EQ( swapped.tagged( forster_index_n( m ) ), n );
    EXPECT_EQ( swapped.tagged( forster_index_m( m, n ) ), m );
    EXPECT_TRUE( swapped.tagging_bijective() );
    EXPECT_EQ( swapped.swapped(), std::make_pair( m, n ) );
    EXPECT_EQ( swapped.tagging().size(), base.tagging().size() );
    // N's old index moves to the urelement that used to carry n, and M's old
    // index to the former carrier of m.
    EXPECT_EQ( swapped.tagged( *base.index_of( n ) ), base.entity( "ur3" ) );
    EXPECT_EQ( swapped.tagged( *base.index_of( m ) ), base.entity( "ur4" ) );
    EXPECT_EQ( swapped.universal(), base.entity( "U" ) );
}

TEST( Interp, UpsilonSwapIdempotent )
{
    const auto once = swapped_demo();
    const auto m = once.entity( "M" );
    const auto n = once.entity( "N" );
    const auto twice = upsilon_swap( once, m, n );
    EXPECT_EQ( twice.tagging(), once.tagging() );
}

TEST( Interp, UpsilonSwapOnFreshPool )
{
    BaseModel model( hf_universe( 1 ), { "A", "M", "N" } );
    const auto a = model.entity( "A" );
    const auto m = model.entity( "M" );
    const auto n = model.entity( "N" );
    // n was on A: after the swap N holds n and A holds nothing.
    model = model.with_tag( a, forster_index_n( m ) );
    const auto swapped = upsilon_swap( model, m, n );
    EXPECT_EQ( swapped.tagged( forster_index_n( m ) ), n );
    EXPECT_EQ( swapped.tagged( forster_index_m( m, n ) ), m );
    EXPECT_FALSE( swapped.index_of( a ) );
    EXPECT_TRUE( swapped.tagging_bijective() );
}

TEST( Interp, UpsilonSwapErrors )
{
    const auto model = default_demo_model();
    EXPECT_THROW( (void)upsilon_swap( model, model.entity( "M" ), model.entity( "M" ) ), CollisionError );
    EXPECT_THROW( (void)upsilon_swap( model, model.entity( "h0" ), model.entity( "N" ) ), CollisionError );
}

// Random taggings over a small pool stay bijective under any swap.
TEST( Interp, UpsilonSwapPreservesBijectionRandomly )
{
    std::mt19937 rng( 2024 );
    for ( int round = 0; round < 200; ++round )
    {
        BaseModel model( hf_universe( 1 ), { "a", "b", "c", "d", "e" } );
        auto pool = model.urelements();
        std::shuffle( pool.begin(), pool.end(), rng );
        const auto m = pool[ 0 ];
        const auto n = pool[ 1 ];
        std::vector<Index> candidates{ forster_index_n( m ), forster_index_m( m, n ), Index::make( true, {} ),
                                       Index::make( false, { m } ), Index::make( false, {} ) };
        std::shuffle( candidates.begin(), candidates.end(), rng );
        std::shuffle( pool.begin(), pool.end(), rng );
        const auto tags = std::uniform_int_distribution<std::size_t>( 0, pool.size() )( rng );
        for ( std::size_t i = 0; i < tags; ++i )
            model = model.with_tag( pool[ i ], candidates[ i ] );

        const auto swapped = upsilon_swap( model, m, n );
        ASSERT_TRUE( swapped.tagging_bijective() );
        ASSERT_EQ( swapped.tagged( forster_index_n( m ) ), n );
        ASSERT_EQ( swapped.tagged( forster_index_m( m, n ) ), m );
        // Urelements other than M, N and the former carriers of n and m keep
        // their index.
        const auto carrier_n = model.tagged( forster_index_n( m ) );
        const auto carrier_m = model.tagged( forster_index_m( m, n ) );
        for ( const auto& [ index, who ] : model.tagging() )
            if ( who != m && who != n && who != carrier_n && who != carrier_m )
                ASSERT_EQ( swapped.index_of( who ), index ) << round;
    }
}

TEST( Interp, WithTagErrors )
{
    const auto model = default_demo_model();
    EXPECT_THROW( (void)model.with_tag( model.entity( "ur5" ), Index::make( true, {} ) ), CollisionError );
    EXPECT_THROW( (void)model.with_tag( model.entity( "U" ), Index::make( false, { Entity{ 0 } } ) ),
                  CollisionError );
    EXPECT_THROW( (void)model.with_tag( model.entity( "h0" ), Index::make( false, { Entity{ 0 } } ) ), ModelError );
    EXPECT_THROW( (void)model.with_tag( model.entity( "ur5" ), Index::make( false, { Entity{ 99 } } ) ), Error );
}

TEST( Interp, BaseModelErrors )
{
    EXPECT_THROW( BaseModel( hf_universe( 2 ), { "a", "a" } ), ModelError );
    EXPECT_THROW( BaseModel( hf_universe( 2 ), { "h0" } ), ModelError );
    const auto q = Universe::from_definitions( { { "q", { "q" } } } );
    EXPECT_THROW( BaseModel( q, { "a" } ), ModelError );
}

TEST( Interp, ForsterExtensions )
{
    const auto model = swapped_demo();
    const auto m = model.entity( "M" );
    const auto n = model.entity( "N" );
    EXPECT_EQ( extension_interp( model, n ), all_except( model, { m } ) );
    EXPECT_EQ( extension_interp( model, m ), all_except( model, { m, n } ) );
    EXPECT_TRUE( member_interp( model, n, n ) );
    EXPECT_FALSE( member_interp( model, m, m ) );
}

TEST( Interp, ForsterReportPasses )
{
    const auto report = verify_forster_counterexample( swapped_demo() );
    EXPECT_FALSE( report.unmet_precondition );
    EXPECT_EQ( report.checks.size(), 7u );
    for ( const auto& c : report.checks )
        EXPECT_TRUE( c.passed ) << c.name << ": " << c.detail;
    EXPECT_TRUE( report.passed() );
}

TEST( Interp, ForsterNeedsSwapAndUniversal )
{
    const auto unswapped = verify_forster_counterexample( default_demo_model() );
    EXPECT_TRUE( unswapped.unmet_precondition );
    EXPECT_FALSE( unswapped.passed() );

    BaseModel bare( hf_universe( 1 ), { "M", "N" } );
    const auto no_universal = upsilon_swap( bare, bare.entity( "M" ), bare.entity( "N" ) );
    EXPECT_TRUE( verify_forster_counterexample( no_universal ).unmet_precondition );
}

// N = U - {N--}: on the materialized universe N-- is M and M is not in N.
TEST( Interp, ForsterOnMaterializedUniverse )
{
    const auto model = swapped_demo();
    const auto u = materialize( model );
    const auto n = u.id( "N" );
    const auto m = u.id( "M" );
    EXPECT_EQ( predecessor_in( u, n ), LookupResult::unique( m ) );
    EXPECT_TRUE( self_membered( u, n ) );
    EXPECT_FALSE( self_membered( u, m ) );
    // M is not self-membered and missing from N, so N is not an upper; U is.
    EXPECT_FALSE( is_upper( u, n ) );
    EXPECT_TRUE( is_upper( u, u.id( "U" ) ) );
    EXPECT_FALSE( verify_lemma_suite( u ).any_violated() );
}

TEST( Interp, Quine )
{
    const auto report = verify_quine_counterexample();
    EXPECT_EQ( report.checks.size(), 3u );
    EXPECT_TRUE( report.passed() );
}

TEST( Interp, UpperChain )
{
    for ( std::size_t k : { 1u, 3u } )
    {
        const auto chain = upper_chain_interp( default_demo_model(), k );
        ASSERT_EQ( chain.nodes.size(), k );
        const auto u = materialize( chain.model );
        auto prev = u.id( chain.model.name( chain.universal ) );
        for ( auto node : chain.nodes )
        {
            const auto x = u.id( chain.model.name( node ) );
            EXPECT_TRUE( is_upper( u, x ) );
            EXPECT_TRUE( self_membered( u, x ) );
            EXPECT_NE( x, prev );
            EXPECT_TRUE( is_member( u, x, prev ) );
            EXPECT_EQ( predecessor_in( u, prev ), LookupResult::unique( x ) );
            prev = x;
        }
        const auto report = verify_upper_chain( chain );
        EXPECT_TRUE( report.passed() );
        EXPECT_EQ( report.chain.size(), k + 1 );
    }
}

TEST( Interp, UpperChainErrors )
{
    EXPECT_THROW( (void)upper_chain_interp( default_demo_model(), 0 ), Error );
    EXPECT_THROW( (void)upper_chain_interp( default_demo_model(), 50 ), PoolExhausted );
    BaseModel bare( hf_universe( 1 ), { "a" } );
    EXPECT_THROW( (void)upper_chain_interp( bare, 1 ), ModelError );
}

// The XOR rule and the odd-sprig rule agree for every pair of entities and
// every index over a small model.
TEST( Interp, XorMatchesSprigParity )
{
    for ( const auto& model : { default_demo_model(), swapped_demo(), upper_chain_interp( default_demo_model(), 3 ).model } )
        for ( auto u : model.urelements() )
        {
            const auto index = model.index_of( u );
            if ( !index )
                continue;
            for ( auto x : model.entities() )
            {
                const bool zero = index->level0.count( RepToken{ ZeroRep{} } ) > 0;
                const bool mu = index->level_mu.count( RepToken{ MuRep{ x } } ) > 0;
                ASSERT_EQ( member_interp( model, x, u ), zero != mu );
                ASSERT_EQ( member_interp( model, x, u ), sprig( model, x, *index ).size() % 2 == 1 );
            }
        }
}

// An index with 0rep lists the non-members; without it, the members.
TEST( Interp, ComplementAndListingReadings )
{
    const auto model = swapped_demo();
    for ( auto u : model.urelements() )
    {
        const auto index = model.index_of( u );
        if ( !index )
            continue;
        std::vector<Entity> listed;
        for ( const auto& t : index->level_mu )
            listed.push_back( std::get<MuRep>( t ).entity );
        std::sort( listed.begin(), listed.end() );
        const auto ext = extension_interp( model, u );
        if ( index->level0.empty() )
            EXPECT_EQ( ext, listed );
        else
            for ( auto x : model.entities() )
                EXPECT_EQ( std::binary_search( ext.begin(), ext.end(), x ),
                           !std::binary_search( listed.begin(), listed.end(), x ) );
    }
}
