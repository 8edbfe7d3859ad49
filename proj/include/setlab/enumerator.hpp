#pragma once

#include "setlab/universe.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace setlab
{

// Default largest enumerable size (2^25 universes at n = 5).
inline constexpr std::size_t default_max_n = 5;
// Hard ceiling for any override: n^2 bits must fit the 64-bit counter with
// room to spare, and 2^49 is already far beyond desk scale.
inline constexpr std::size_t hard_max_n = 7;

// The enumeration cap: SETLAB_MAX_N when set (clamped to hard_max_n),
// default_max_n otherwise.
std::size_t max_n_from_env();

enum class UniverseFilter
{
    SatisfiesSuccessor,
    SatisfiesPredecessor,
    SatisfiesBoth,
    HasUpper,
    HasLower,
    HasStrictlyRussellian,
};

std::string_view to_string( UniverseFilter filter );
const std::vector<std::string>& filter_names();
// Throws Error for names outside the registry.
UniverseFilter parse_filter( std::string_view name );
bool matches( const Universe& u, UniverseFilter filter );

struct EnumSpec
{
    std::size_t n = 0;
    std::optional<UniverseFilter> filter;
    // Visit one representative per isomorphism class: the universe whose code
    // is least among all relabelings.
    bool dedupe = false;
    std::size_t max_n = default_max_n;
    // Workers partitioning the counter range. With more than one, the visitor
    // is called concurrently.
    std::size_t threads = 1;
    std::size_t max_samples = 4;
};

struct EnumStats
{
    std::uint64_t total = 0;
    std::uint64_t matching = 0;
    // DSL text of the first matching universes in counter order.
    std::vector<std::string> sample_witnesses;
};

using UniverseVisitor = std::function<void( const Universe& )>;

// Visits every n-element universe (each of the n^2 membership bits
// independently set) that passes the filter. Throws CapExceeded when
// spec.n > spec.max_n.
EnumStats enumerate( const EnumSpec& spec, const UniverseVisitor& visit = {} );

// Names e0 .. e{n-1}, zero-padded so byte order is numeric order.
std::shared_ptr<const std::vector<std::string>> enumeration_names( std::size_t n );

// Bit (i*n + j) of code set means element j is a member of element i (row i
// is the extension of element i), counted little-endian.
Universe universe_from_code( std::size_t n, std::uint64_t code,
                             std::shared_ptr<const std::vector<std::string>> names = nullptr );
// Inverse of universe_from_code over the universe's canonical order.
std::uint64_t code_of( const Universe& u );
// Least code over all relabelings of u. Throws CapExceeded above max_n.
std::uint64_t canonical_code( const Universe& u, std::size_t max_n = default_max_n );
// "n:" followed by the n^2 bits of canonical_code, bit 0 first. Equal for
// two universes iff they are isomorphic membership digraphs.
std::string canonical_form( const Universe& u, std::size_t max_n = default_max_n );

// Largest rank hf_universe builds unless told otherwise (16 elements).
inline constexpr std::size_t default_max_hf_rank = 4;
// |V_5| = 65536 elements; the bitset representation needs 512 MiB there.
inline constexpr std::size_t hard_max_hf_rank = 5;

// The hereditarily finite sets V_rank, with V_0 = {} and V_{k+1} the
// powerset of V_k; sizes are 0, 1, 2, 4, 16, 65536. Membership is actual
// set membership. Elements are named by Ackermann code: h<k> is the set
// whose members are the h<i> with bit i of k set, zero-padded.
Universe hf_universe( std::size_t rank, std::size_t max_rank = default_max_hf_rank );

} // namespace setlab
