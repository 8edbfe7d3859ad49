#pragma once

#include "setlab/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace setlab
{

// Position of an element in its universe's canonical (name-sorted) order.
// Comparing ids compares names.
struct ElementId
{
    std::uint32_t index = 0;

    auto operator<=>( const ElementId& ) const = default;
};

// A finite set of elements of one universe, stored as a bitset over the
// canonical order. Two sets are only comparable when they have the same
// capacity, i.e. belong to the same universe.
class ElementSet
{
public:
    ElementSet() = default;
    explicit ElementSet( std::size_t capacity ) : _bits( capacity ) {}

    [[nodiscard]] std::size_t capacity() const { return _bits.size(); }
    [[nodiscard]] std::size_t count() const { return _bits.count(); }
    [[nodiscard]] bool empty() const { return _bits.none(); }

    [[nodiscard]] bool contains( ElementId x ) const { return x.index < _bits.size() && _bits.test( x.index ); }
    void insert( ElementId x ) { _bits.set( x.index ); }
    void erase( ElementId x ) { _bits.reset( x.index ); }

    [[nodiscard]] bool is_subset_of( const ElementSet& other ) const { return _bits.is_subset_of( other._bits ); }
    [[nodiscard]] bool intersects( const ElementSet& other ) const { return _bits.intersects( other._bits ); }

    ElementSet& operator|=( const ElementSet& o ) { _bits |= o._bits; return *this; }
    ElementSet& operator&=( const ElementSet& o ) { _bits &= o._bits; return *this; }
    ElementSet& operator^=( const ElementSet& o ) { _bits ^= o._bits; return *this; }
    ElementSet& operator-=( const ElementSet& o ) { _bits -= o._bits; return *this; }

    friend ElementSet operator|( ElementSet a, const ElementSet& b ) { return a |= b; }
    friend ElementSet operator&( ElementSet a, const ElementSet& b ) { return a &= b; }
    friend ElementSet operator^( ElementSet a, const ElementSet& b ) { return a ^= b; }
    friend ElementSet operator-( ElementSet a, const ElementSet& b ) { return a -= b; }

    friend bool operator==( const ElementSet& a, const ElementSet& b ) { return a._bits == b._bits; }
    friend bool operator<( const ElementSet& a, const ElementSet& b ) { return a._bits < b._bits; }

    // Members in canonical order.
    [[nodiscard]] std::vector<ElementId> to_vector() const;

    template <typename F>
    void for_each( F&& f ) const
    {
        for ( auto i = _bits.find_first(); i != Bits::npos; i = _bits.find_next( i ) )
            f( ElementId{ static_cast<std::uint32_t>( i ) } );
    }

    static ElementSet singleton( std::size_t capacity, ElementId x )
    {
        ElementSet s( capacity );
        s.insert( x );
        return s;
    }

private:
    using Bits = boost::dynamic_bitset<std::uint64_t>;
    Bits _bits;
};

// A finite membership digraph. Self-membership and cycles are allowed and
// extensionality is not assumed: distinct elements may be coextensive.
// Immutable after construction.
class Universe
{
public:
    Universe() : _names{ std::make_shared<const std::vector<std::string>>() } {}

    // names must be strictly increasing; extensions[i] is the extension of
    // names[i] and must have capacity names->size().
    Universe( std::shared_ptr<const std::vector<std::string>> names, std::vector<ElementSet> extensions );

    // Builds from (name, member names) pairs in any order. Throws
    // UnknownElement for members that are not defined and Error for
    // duplicate names.
    static Universe from_definitions( const std::vector<std::pair<std::string, std::vector<std::string>>>& defs );

    [[nodiscard]] std::size_t size() const { return _extensions.size(); }
    [[nodiscard]] bool empty() const { return _extensions.empty(); }

    [[nodiscard]] std::vector<ElementId> elements() const;
    [[nodiscard]] bool contains( ElementId x ) const { return x.index < _extensions.size(); }

    [[nodiscard]] std::optional<ElementId> find( std::string_view name ) const;
    // Throws UnknownElement.
    [[nodiscard]] ElementId id( std::string_view name ) const;
    [[nodiscard]] const std::string& name( ElementId x ) const;
    [[nodiscard]] const std::vector<std::string>& names() const { return *_names; }

    // Throws UnknownElement.
    [[nodiscard]] const ElementSet& members( ElementId x ) const;

    // Elements z with z in z.
    [[nodiscard]] const ElementSet& self_membered_set() const { return _self_membered; }
    [[nodiscard]] ElementSet empty_set() const { return ElementSet( size() ); }
    [[nodiscard]] ElementSet all() const;

    void require( ElementId x ) const;

private:
    std::shared_ptr<const std::vector<std::string>> _names;
    std::vector<ElementSet> _extensions;
    ElementSet _self_membered;
};

// Outcome of looking up the element with a prescribed extension.
class LookupResult
{
public:
    enum class Kind
    {
        Unique,
        Absent,
        Multiple
    };

    static LookupResult unique( ElementId y ) { return LookupResult{ Kind::Unique, { y } }; }
    static LookupResult absent() { return LookupResult{ Kind::Absent, {} }; }
    // ids must hold at least two distinct elements; they are sorted.
    static LookupResult multiple( std::vector<ElementId> ids );

    [[nodiscard]] Kind kind() const { return _kind; }
    [[nodiscard]] bool is_unique() const { return _kind == Kind::Unique; }
    [[nodiscard]] bool is_absent() const { return _kind == Kind::Absent; }
    [[nodiscard]] bool is_multiple() const { return _kind == Kind::Multiple; }

    // Precondition: is_unique().
    [[nodiscard]] ElementId value() const { return _ids.front(); }
    [[nodiscard]] std::optional<ElementId> get() const
    {
        return is_unique() ? std::optional<ElementId>{ _ids.front() } : std::nullopt;
    }
    // Unique: the one match; Multiple: all matches; Absent: empty.
    [[nodiscard]] const std::vector<ElementId>& candidates() const { return _ids; }

    friend bool operator==( const LookupResult&, const LookupResult& ) = default;

private:
    LookupResult( Kind kind, std::vector<ElementId> ids ) : _kind{ kind }, _ids{ std::move( ids ) } {}

    Kind _kind;
    std::vector<ElementId> _ids;
};

std::string to_string( LookupResult::Kind kind );

// The members of x.
const ElementSet& extension( const Universe& u, ElementId x );
// x in y.
bool is_member( const Universe& u, ElementId x, ElementId y );
bool coextensive( const Universe& u, ElementId x, ElementId y );
bool self_membered( const Universe& u, ElementId x );

// All elements whose extension equals target, in canonical order.
LookupResult lookup_extension( const Universe& u, const ElementSet& target );

// The element with extension ext(x) + {x}.
LookupResult successor_in( const Universe& u, ElementId x );
// The element with extension ext(x) - {x}.
LookupResult predecessor_in( const Universe& u, ElementId x );

// ext(x) + {x} and ext(x) - {x}, the sets the two lookups search for.
ElementSet successor_target( const Universe& u, ElementId x );
ElementSet predecessor_target( const Universe& u, ElementId x );

// ext(x) symmetric-difference {x}: the successor target when x is not
// self-membered, the predecessor target when it is.
ElementSet sym_diff_singleton( const Universe& u, ElementId x );

} // namespace setlab
