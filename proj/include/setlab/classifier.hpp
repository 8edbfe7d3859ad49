#pragma once

#include "setlab/universe.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace setlab
{

// A total boolean predicate over the elements of one universe.
using Predicate = std::function<bool( ElementId )>;

struct Classification
{
    ElementId element;
    bool lower = false;
    bool upper = false;
    bool self_membered = false;

    [[nodiscard]] bool strictly_russellian() const { return lower && upper; }
};

// Link relation between two distinct elements. A 2-cycle is both ascending
// and descending; a link with neither flag set is never returned.
struct LinkKind
{
    bool ascending = false;  // x in y
    bool descending = false; // y in x
    // Name of the predicate both endpoints satisfy, for phi-links.
    std::optional<std::string> phi;

    friend bool operator==( const LinkKind&, const LinkKind& ) = default;
};

// Every member is non-self-membered.
bool is_lower( const Universe& u, ElementId x );
// Contains every non-self-membered element of u.
bool is_upper( const Universe& u, ElementId x );
// Both lower and upper: z in x <=> z not in z for every z.
bool is_strictly_russellian( const Universe& u, ElementId x );

Classification classify( const Universe& u, ElementId x );
std::vector<Classification> classify_all( const Universe& u );

std::optional<LinkKind> link( const Universe& u, ElementId x, ElementId y );
std::optional<LinkKind> phi_link( const Universe& u, ElementId x, ElementId y, const Predicate& phi,
                                  std::string phi_name = "phi" );

// Least element y with z in y <=> z not in z for all z.
std::optional<ElementId> russell_witness( const Universe& u );
// Least element whose extension is exactly {x : phi(x)}.
std::optional<ElementId> comprehension_witness( const Universe& u, const Predicate& phi );

// Built-in predicate vocabulary: "nonself", "lower", "upper", "all", "none".
const std::vector<std::string>& predicate_names();
// Throws Error for names outside the vocabulary. The returned predicate
// refers to u, which must outlive it.
Predicate named_predicate( const Universe& u, std::string_view name );

} // namespace setlab
