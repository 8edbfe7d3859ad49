#pragma once

// Interpreted membership over a base model of hereditarily finite sets plus
// a pool of urelements. Each tagged urelement u carries an Index (L0, Lmu)
// of representative tokens, and x is a member of u when the sprig of x for
// u's Index has odd size. Only the two trivial equivalence relations are
// modelled: level 0 (everything equivalent, one representative ZeroRep) and
// level mu (equality, each entity represents itself), so mu is 1 and the only
// odd sprig size is 1.

#include "setlab/audit.hpp"
#include "setlab/universe.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace setlab
{

// An entity of a base model: hf sets first (in the hf part's canonical
// order), then urelements in pool order.
struct Entity
{
    std::uint32_t index = 0;

    auto operator<=>( const Entity& ) const = default;
};

struct ZeroRep
{
    auto operator<=>( const ZeroRep& ) const = default;
};

struct MuRep
{
    Entity entity;

    auto operator<=>( const MuRep& ) const = default;
};

using RepToken = std::variant<ZeroRep, MuRep>;

enum class Level
{
    Zero,
    Mu
};

struct Index
{
    std::set<RepToken> level0;
    std::set<RepToken> level_mu;

    // (zero ? {ZeroRep} : {}, {MuRep(e) : e in mu})
    static Index make( bool zero, const std::vector<Entity>& mu );

    auto operator<=>( const Index& ) const = default;
};

struct Sprig
{
    std::vector<std::pair<Level, RepToken>> pairs;

    [[nodiscard]] std::size_t size() const { return pairs.size(); }
};

class BaseModel
{
public:
    // hf_part must be well-founded; urelement names must be distinct from
    // each other and from the hf names. Throws ModelError.
    BaseModel( Universe hf_part, std::vector<std::string> urelements );

    [[nodiscard]] const Universe& hf_part() const { return _hf; }
    [[nodiscard]] std::size_t entity_count() const { return _hf.size() + _urelements.size(); }
    [[nodiscard]] std::vector<Entity> entities() const;
    [[nodiscard]] std::vector<Entity> urelements() const;
    [[nodiscard]] bool contains( Entity e ) const { return e.index < entity_count(); }
    [[nodiscard]] bool is_urelement( Entity e ) const;

    [[nodiscard]] const std::string& name( Entity e ) const;
    [[nodiscard]] std::optional<Entity> find( std::string_view name ) const;
    // Throws UnknownElement.
    [[nodiscard]] Entity entity( std::string_view name ) const;
    // The hf element behind a non-urelement entity.
    [[nodiscard]] ElementId hf_element( Entity e ) const;

    [[nodiscard]] const std::map<Index, Entity>& tagging() const { return _tagging; }
    [[nodiscard]] std::optional<Index> index_of( Entity u ) const;
    [[nodiscard]] std::optional<Entity> tagged( const Index& index ) const;
    [[nodiscard]] std::vector<Entity> untagged_urelements() const;

    // Returns a copy with u tagged by index. Throws CollisionError when index
    // is already used or u already tagged, ModelError when u is not an
    // urelement or index is malformed.
    [[nodiscard]] BaseModel with_tag( Entity u, Index index ) const;
    // Returns a copy whose tagging is replaced wholesale, after checking that
    // it is a bijection onto urelements. Throws CollisionError otherwise.
    [[nodiscard]] BaseModel with_tagging( std::map<Index, Entity> tagging ) const;

    // Exhaustive check that the tagging and its inverse agree.
    [[nodiscard]] bool tagging_bijective() const;

    // The urelement tagged ({ZeroRep}, {}), if any.
    [[nodiscard]] std::optional<Entity> universal() const;

    // (M, N) of the last upsilon_swap applied, if any.
    [[nodiscard]] std::optional<std::pair<Entity, Entity>> swapped() const { return _swapped; }

    void require( Entity e ) const;

private:
    void validate( const Index& index ) const;

    friend BaseModel upsilon_swap( const BaseModel&, Entity, Entity );

    Universe _hf;
    std::vector<std::string> _urelements;
    std::map<Index, Entity> _tagging;
    std::map<Entity, Index> _inverse;
    std::optional<std::pair<Entity, Entity>> _swapped;
};

RepToken j_rep( Level j, Entity x );

// Pairs (j, j-rep(x)) with j-rep(x) in the j-th component of index.
Sprig sprig( const BaseModel& model, Entity x, const Index& index );

// x in u under the interpretation. Non-urelement u: base membership.
// Tagged urelement: [ZeroRep in L0] xor [MuRep(x) in Lmu], the odd-sprig rule
// for mu = 1. Untagged urelement: false (see untagged_urelements()).
bool member_interp( const BaseModel& model, Entity x, Entity u );

// Indexes of the counterexample: n = ({ZeroRep}, {MuRep(M)}) and
// m = ({ZeroRep}, {MuRep(M), MuRep(N)}).
Index forster_index_n( Entity m_entity );
Index forster_index_m( Entity m_entity, Entity n_entity );

// Retags so that n maps to N and m maps to M. Whatever index previously
// mapped to N takes n's former image, and likewise for M and m, so the
// tagging stays a bijection. Throws CollisionError when M == N or either is
// not an urelement.
BaseModel upsilon_swap( const BaseModel& model, Entity m_entity, Entity n_entity );

// {x : member_interp(x, u)} in entity order.
std::vector<Entity> extension_interp( const BaseModel& model, Entity u );

// The interpreted membership relation as a Universe over all entities, named
// by entity name.
Universe materialize( const BaseModel& model );

struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct InterpReport
{
    std::string demo;
    std::optional<std::string> unmet_precondition;
    std::vector<Check> checks;
    // Entity names of a constructed chain (upper chain demo only).
    std::vector<std::string> chain;
    std::vector<std::string> warnings;

    [[nodiscard]] bool passed() const;
};

// Checks, on a model prepared by upsilon_swap with a universal urelement U:
// ext(N) = All - {M}; ext(M) = All - {M, N}; N in N; M not in M;
// ext(M) = ext(N) - {N}; plus N = U - {N--} and N in N but N-- not in N--
// on the materialized universe.
InterpReport verify_forster_counterexample( const BaseModel& model );

// The Quine atom q = {q} next to e = {}: q in q, q-- = e, e not in e.
InterpReport verify_quine_counterexample();

// HF rank 2 plus urelements U, M, N, ur3 .. ur7, with U universal and
// M, N tagged elsewhere so that upsilon_swap has to fix up collisions.
BaseModel default_demo_model();
inline constexpr std::size_t default_demo_rank = 2;
inline constexpr std::size_t default_demo_pool = 8;

struct UpperChain
{
    BaseModel model;
    Entity universal;
    // U--, (U--)--, ... each tagged on a fresh urelement unless the index
    // was already in use.
    std::vector<Entity> nodes;
};

// Builds k successive predecessors of the universal urelement by tagging
// ({ZeroRep}, {MuRep(U)}), ({ZeroRep}, {MuRep(U), MuRep(c1)}), ... Throws
// PoolExhausted when untagged urelements run out and ModelError when no
// universal urelement is tagged.
UpperChain upper_chain_interp( const BaseModel& model, std::size_t k );

// Re-checks a constructed chain on the materialized universe: each node is
// an upper, self-membered, distinct from and a member of its predecessor
// (U for the first), and agrees with trace_chain descending from U.
InterpReport verify_upper_chain( const UpperChain& chain );

} // namespace setlab
