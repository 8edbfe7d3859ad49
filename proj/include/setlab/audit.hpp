#pragma once

#include "setlab/classifier.hpp"
#include "setlab/universe.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace setlab
{

enum class Axiom
{
    Successor,
    Predecessor
};

std::string to_string( Axiom axiom );

struct AxiomReport
{
    Axiom axiom;
    // Indexed by element, canonical order.
    std::vector<std::pair<ElementId, LookupResult>> per_element;
    bool satisfied = true;
};

AxiomReport check_axiom( const Universe& u, Axiom which );

enum class LemmaTag
{
    LowerNotSelf,    // a lower is not a member of itself
    UpperSelf,       // an upper is a member of itself
    NotBoth,         // nothing is both upper and lower
    Stoppage,        // lower ~ its predecessor, upper ~ its successor
    PredNotSelf,     // x not in x--
    SuccSelf,        // x in x++
    A,               // lower x: x++ != x
    B,               // lower x: x++ is a lower
    C2,              // upper x: x-- != x
    D,               // upper x: x-- is an upper
    E,               // upper x: x-- in x
    MainResult,      // lower/upper links are disjoint; x,x++ and x,x-- links
    Restated,        // a strictly Russellian R would have R++ = R = R--
};

inline constexpr std::array<LemmaTag, 13> all_lemmas{
    LemmaTag::LowerNotSelf, LemmaTag::UpperSelf, LemmaTag::NotBoth, LemmaTag::Stoppage, LemmaTag::PredNotSelf,
    LemmaTag::SuccSelf,     LemmaTag::A,         LemmaTag::B,       LemmaTag::C2,       LemmaTag::D,
    LemmaTag::E,            LemmaTag::MainResult, LemmaTag::Restated,
};

// Stable tag used in reports, e.g. "L-lower-not-self".
std::string_view to_string( LemmaTag tag );
std::string_view describe( LemmaTag tag );

struct LemmaVerdict
{
    enum class Status
    {
        Holds,
        Vacuous,
        Violated
    };

    Status status = Status::Vacuous;
    // Number of hypothesis instances that were evaluated.
    std::size_t checked = 0;
    // Set when violated: the element (or pair) that breaks the statement.
    std::vector<ElementId> witness;
};

std::string to_string( LemmaVerdict::Status status );

struct LemmaReport
{
    std::vector<std::pair<LemmaTag, LemmaVerdict>> per_lemma;

    [[nodiscard]] bool any_violated() const;
    [[nodiscard]] const LemmaVerdict& at( LemmaTag tag ) const;
};

// Evaluates every lemma over u. Statements about x++ or x-- are checked only
// at elements where the lookup is Unique; a lemma with no applicable
// instance is Vacuous.
LemmaReport verify_lemma_suite( const Universe& u );

enum class Direction
{
    Ascending,
    Descending
};

std::string to_string( Direction direction );

struct Chain
{
    enum class Termination
    {
        Absent,
        Multiple,
        Cycle,
        LengthCap
    };

    Direction direction = Direction::Ascending;
    std::vector<ElementId> nodes;
    Termination terminated_by = Termination::Absent;
    // Cycle: the id the next step would have revisited.
    std::optional<ElementId> repeated;
    // Multiple: the ambiguous candidates.
    std::vector<ElementId> ambiguous;

    // Set when the start is a lower (ascending) or upper (descending): every
    // step must keep the property, differ from its predecessor, and be linked
    // to it (contains it ascending, is contained descending).
    std::optional<std::string> tracked_property;
    bool property_held = true;
    // First step (index into nodes) that broke the tracked property.
    std::optional<std::size_t> property_failure;
};

std::string to_string( Chain::Termination termination );

// Follows successor (ascending) or predecessor (descending) lookups from
// start. cap is the maximum number of nodes and must be >= 1.
Chain trace_chain( const Universe& u, ElementId start, Direction direction, std::size_t cap );

} // namespace setlab
