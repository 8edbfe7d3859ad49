#include "setlab/enumerator.hpp"

#include "setlab/audit.hpp"
#include "setlab/classifier.hpp"
#include "setlab/dsl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace setlab
{

std::size_t max_n_from_env()
{
    const char* raw = std::getenv( "SETLAB_MAX_N" );
    if ( raw == nullptr || *raw == '\0' )
        return default_max_n;
    char* end = nullptr;
    const auto value = std::strtoul( raw, &end, 10 );
    if ( *end != '\0' )
        throw Error( "SETLAB_MAX_N must be a non-negative integer" );
    return std::min<std::size_t>( value, hard_max_n );
}

std::string_view to_string( UniverseFilter filter )
{
    switch ( filter )
    {
    case UniverseFilter::SatisfiesSuccessor: return "satisfies-successor";
    case UniverseFilter::SatisfiesPredecessor: return "satisfies-predecessor";
    case UniverseFilter::SatisfiesBoth: return "satisfies-both";
    case UniverseFilter::HasUpper: return "has-upper";
    case UniverseFilter::HasLower: return "has-lower";
    case UniverseFilter::HasStrictlyRussellian: return "has-strictly-russellian";
    }
    return "?";
}

const std::vector<std::string>& filter_names()
{
    static const std::vector<std::string> names{
        "satisfies-successor", "satisfies-predecessor", "satisfies-both",
        "has-upper",           "has-lower",             "has-strictly-russellian",
    };
    return names;
}

UniverseFilter parse_filter( std::string_view name )
{
    for ( auto f : { UniverseFilter::SatisfiesSuccessor, UniverseFilter::SatisfiesPredecessor,
                     UniverseFilter::SatisfiesBoth, UniverseFilter::HasUpper, UniverseFilter::HasLower,
                     UniverseFilter::HasStrictlyRussellian } )
        if ( to_string( f ) == name )
            return f;
    throw Error( "unknown filter '" + std::string( name ) + "'" );
}

namespace
{

bool any_element( const Universe& u, bool ( *pred )( const Universe&, ElementId ) )
{
    for ( auto x : u.elements() )
        if ( pred( u, x ) )
            return true;
    return false;
}

} // namespace

bool matches( const Universe& u, UniverseFilter filter )
{
    switch ( filter )
    {
    case UniverseFilter::SatisfiesSuccessor: return check_axiom( u, Axiom::Successor ).satisfied;
    case UniverseFilter::SatisfiesPredecessor: return check_axiom( u, Axiom::Predecessor ).satisfied;
    case UniverseFilter::SatisfiesBoth:
        return check_axiom( u, Axiom::Successor ).satisfied && check_axiom( u, Axiom::Predecessor ).satisfied;
    case UniverseFilter::HasUpper: return any_element( u, is_upper );
    case UniverseFilter::HasLower: return any_element( u, is_lower );
    case UniverseFilter::HasStrictlyRussellian: return any_element( u, is_strictly_russellian );
    }
    return false;
}

std::shared_ptr<const std::vector<std::string>> enumeration_names( std::size_t n )
{
    const auto width = std::to_string( n == 0 ? 0 : n - 1 ).size();
    std::vector<std::string> names;
    names.reserve( n );
    for ( std::size_t i = 0; i < n; ++i )
    {
        auto digits = std::to_string( i );
        names.push_back( "e" + std::string( width - digits.size(), '0' ) + digits );
    }
    return std::make_shared<const std::vector<std::string>>( std::move( names ) );
}

Universe universe_from_code( std::size_t n, std::uint64_t code, std::shared_ptr<const std::vector<std::string>> names )
{
    if ( n > hard_max_n )
        throw CapExceeded( "universe_from_code: n = " + std::to_string( n ) + " exceeds " + std::to_string( hard_max_n ) );
    if ( !names )
        names = enumeration_names( n );

    std::vector<ElementSet> ext( n, ElementSet( n ) );
    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = 0; j < n; ++j )
            if ( ( code >> ( i * n + j ) ) & 1u )
                ext[ i ].insert( ElementId{ static_cast<std::uint32_t>( j ) } );
    return Universe( std::move( names ), std::move( ext ) );
}

std::uint64_t code_of( const Universe& u )
{
    const auto n = u.size();
    if ( n > hard_max_n )
        throw CapExceeded( "code_of: universe of " + std::to_string( n ) + " elements exceeds " +
                           std::to_string( hard_max_n ) );
    std::uint64_t code = 0;
    for ( std::uint32_t i = 0; i < n; ++i )
        u.members( ElementId{ i } ).for_each( [ & ]( ElementId j ) { code |= std::uint64_t{ 1 } << ( i * n + j.index ); } );
    return code;
}

namespace
{

std::uint64_t canonical_code_raw( std::size_t n, std::uint64_t code )
{
    std::vector<std::size_t> perm( n );
    std::iota( perm.begin(), perm.end(), 0 );
    std::uint64_t best = code;
    do
    {
        std::uint64_t permuted = 0;
        for ( std::size_t i = 0; i < n; ++i )
            for ( std::size_t j = 0; j < n; ++j )
                if ( ( code >> ( i * n + j ) ) & 1u )
                    permuted |= std::uint64_t{ 1 } << ( perm[ i ] * n + perm[ j ] );
        best = std::min( best, permuted );
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
    return best;
}

} // namespace

std::uint64_t canonical_code( const Universe& u, std::size_t max_n )
{
    if ( u.size() > std::min( max_n, hard_max_n ) )
        throw CapExceeded( "canonical_form: universe of " + std::to_string( u.size() ) + " elements exceeds cap " +
                           std::to_string( std::min( max_n, hard_max_n ) ) );
    return canonical_code_raw( u.size(), code_of( u ) );
}

std::string canonical_form( const Universe& u, std::size_t max_n )
{
    const auto n = u.size();
    const auto code = canonical_code( u, max_n );
    std::string out = std::to_string( n ) + ":";
    for ( std::size_t k = 0; k < n * n; ++k )
        out.push_back( ( ( code >> k ) & 1u ) ? '1' : '0' );
    return out;
}

namespace
{

struct WorkerResult
{
    std::uint64_t total = 0;
    std::uint64_t matching = 0;
    std::vector<std::string> samples;
};

void run_range( const EnumSpec& spec, const std::shared_ptr<const std::vector<std::string>>& names,
                std::uint64_t first, std::uint64_t last, const UniverseVisitor& visit, WorkerResult& out )
{
    for ( std::uint64_t code = first; code < last; ++code )
    {
        if ( spec.dedupe && canonical_code_raw( spec.n, code ) != code )
            continue;
        ++out.total;
        const auto u = universe_from_code( spec.n, code, names );
        if ( spec.filter && !matches( u, *spec.filter ) )
            continue;
        ++out.matching;
        if ( out.samples.size() < spec.max_samples )
            out.samples.push_back( print_universe( u ) );
        if ( visit )
            visit( u );
    }
}

} // namespace

EnumStats enumerate( const EnumSpec& spec, const UniverseVisitor& visit )
{
    const auto cap = std::min( spec.max_n, hard_max_n );
    if ( spec.n > cap )
        throw CapExceeded( "enumerate: n = " + std::to_string( spec.n ) + " exceeds cap " + std::to_string( cap ) );

    const std::uint64_t count = std::uint64_t{ 1 } << ( spec.n * spec.n );
    const auto names = enumeration_names( spec.n );
    const auto workers = static_cast<std::uint64_t>( std::clamp<std::size_t>( spec.threads, 1, 256 ) );

    std::vector<WorkerResult> results( static_cast<std::size_t>( std::min( workers, count ) ) );
    const std::uint64_t chunk = ( count + results.size() - 1 ) / results.size();
    {
        std::vector<std::jthread> pool;
        for ( std::size_t w = 0; w < results.size(); ++w )
        {
            const auto first = w * chunk;
            const auto last = std::min( count, first + chunk );
            if ( results.size() == 1 )
                run_range( spec, names, first, last, visit, results[ w ] );
            else
                pool.emplace_back( [ &, w, first, last ] { run_range( spec, names, first, last, visit, results[ w ] ); } );
        }
    }

    EnumStats stats;
    for ( auto& r : results )
    {
        stats.total += r.total;
        stats.matching += r.matching;
        for ( auto& s : r.samples )
            if ( stats.sample_witnesses.size() < spec.max_samples )
                stats.sample_witnesses.push_back( std::move( s ) );
    }
    return stats;
}

Universe hf_universe( std::size_t rank, std::size_t max_rank )
{
    const auto cap = std::min( max_rank, hard_max_hf_rank );
    if ( rank > cap )
        throw CapExceeded( "hf_universe: rank " + std::to_string( rank ) + " exceeds cap " + std::to_string( cap ) );

    // |V_0| = 0, |V_{k+1}| = 2^|V_k|. Ackermann codes of V_k are exactly
    // 0 .. |V_k| - 1, with i in j iff bit i of j is set.
    std::size_t size = 0;
    for ( std::size_t k = 0; k < rank; ++k )
        size = std::size_t{ 1 } << size;

    const auto width = std::to_string( size == 0 ? 0 : size - 1 ).size();
    std::vector<std::string> names;
    names.reserve( size );
    for ( std::size_t i = 0; i < size; ++i )
    {
        auto digits = std::to_string( i );
        names.push_back( "h" + std::string( width - digits.size(), '0' ) + digits );
    }

    std::vector<ElementSet> ext( size, ElementSet( size ) );
    for ( std::size_t j = 0; j < size; ++j )
        for ( std::size_t i = 0; i < size && i < 64; ++i )
            if ( ( j >> i ) & 1u )
                ext[ j ].insert( ElementId{ static_cast<std::uint32_t>( i ) } );
    return Universe( std::make_shared<const std::vector<std::string>>( std::move( names ) ), std::move( ext ) );
}

} // namespace setlab
