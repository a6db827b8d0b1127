#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multiseg {

/// A labeled cuspidal line. Exponents of segments on distinct lines never
/// interact; the label is an opaque identifier.
struct Line {
    std::string label = "rho";

    auto operator<=>(const Line&) const = default;
};

/// Throws std::invalid_argument if the label is empty, contains whitespace,
/// or contains a character reserved by the text grammar (`[],+@;`).
void validate_line(const Line& line);

/// Toggles the reserved "~" suffix on the label. dual(dual(l)) == l.
Line dual(const Line& line);

/// Integer interval [b, e] on a line, b <= e.
struct Segment {
    Line line;
    int b = 0;
    int e = 0;

    Segment() = default;
    Segment(Line l, int begin, int end);
    Segment(int begin, int end) : Segment(Line{}, begin, end) {}

    int length() const { return e - b + 1; }

    auto operator<=>(const Segment&) const = default;
};

/// Union is a segment distinct from both operands (same line required).
bool is_linked(const Segment& s1, const Segment& s2);

/// Linked and b(s1) < b(s2): s1 starts the union.
bool precedes(const Segment& s1, const Segment& s2);

/// Finite multiset of segments kept in canonical order (line label, b, e).
/// Equality is sequence equality of the canonical item lists. Immutable
/// after construction.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> items);

    const std::vector<Segment>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    /// Multiset sum.
    Multisegment operator+(const Multisegment& other) const;

    /// Total exponent count, with multiplicity.
    long cardinality() const;

    /// Shift every endpoint by k (same lines).
    Multisegment shifted(int k) const;

    auto operator<=>(const Multisegment&) const = default;

private:
    std::vector<Segment> items_;
};

/// Multiset of exponent points, keyed by line label then exponent.
using Support = std::map<std::string, std::map<int, int>>;

Support support(const Multisegment& a);

/// The set version of the support, returned as maximal disjoint segments
/// per line.
Multisegment underlying_support(const Multisegment& a);

/// [b,e]@L -> [-e,-b]@dual(L). An involution.
Multisegment contragredient(const Multisegment& a);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

/// Grammar: term ('+' term)* with term = '[' int ',' int ']', optional
/// trailing '@label' applying to all terms (default "rho"). Multi-line
/// multisegments are chunks of that grammar joined by ';'.
Multisegment parse_multisegment(std::string_view text);

/// Canonical text form; parse(format(a)) == a.
std::string format_multisegment(const Multisegment& a);

/// JSON form: {"line": "rho", "segments": [[0,1],[1,2]]}, or an array of
/// such objects for multi-line multisegments. Canonical (sorted) output.
std::string to_json(const Multisegment& a);
Multisegment multisegment_from_json(std::string_view json_text);

}  // namespace multiseg
