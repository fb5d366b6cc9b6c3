#ifndef KERIND_RING_HPP
#define KERIND_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kerind {

// Ring elements are indices into the carrier's canonical order
// (lexicographic on the concatenated coefficient tuples).
using Elem = std::uint32_t;

class Ideal;
struct QuotientRing;
struct MaximalIdealData;

// One factor (Z/m)[x]/(f) of a presented ring; poly holds all monic
// coefficients c0..cd with cd == 1, d >= 1.  Z/m itself is f = x.
struct RingAtom {
    std::uint32_t modulus = 0;
    std::vector<std::uint32_t> poly;
    std::size_t degree() const { return poly.size() - 1; }
    std::uint64_t size() const;
};

// Finite commutative unital ring, immutable after construction.  Copies
// share the underlying carrier; lazily computed caches (units, nilradical,
// maximal ideals) are write-once and safe under concurrent reads.
class Ring {
public:
    Ring() = default;

    // Throws std::invalid_argument on m < 2, non-monic f, or size bound.
    static Ring make(std::vector<RingAtom> atoms, std::uint64_t size_bound = 65536);
    // Descriptor grammar: atoms joined by "x", each "Z/m", "(Z/m)[x]/(f)",
    // or "Fq" for a prime power q.  E.g. "Z/3 x (Z/3)[x]/(x^2)".
    static Ring parse(const std::string& descriptor, std::uint64_t size_bound = 65536);
    static Ring zero_ring();

    bool valid() const { return impl_ != nullptr; }
    std::uint64_t size() const;
    bool is_zero_ring() const { return size() == 1; }
    const std::vector<RingAtom>& atoms() const;  // empty for quotient-backed rings
    bool is_presented() const;

    Elem zero() const { return 0; }
    Elem one() const;
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t k) const;
    Elem of_int(long v) const;  // v * 1

    bool is_unit(Elem a) const;
    std::optional<Elem> inverse(Elem a) const;
    bool is_nilpotent(Elem a) const;

    const std::vector<Elem>& units() const;  // cached, sorted
    // Materialized from cached element data on each call; the caches live
    // inside the carrier without owning back-references.
    Ideal nilradical() const;
    // Throws std::domain_error for the zero ring (no maximal ideals).
    std::vector<MaximalIdealData> maximal_ideals() const;

    QuotientRing quotient(const Ideal& i) const;

    // Additive coordinates (presented rings only): per-coordinate moduli,
    // with elem <-> coords converting through the coefficient tuples.
    const std::vector<long>& additive_moduli() const;
    std::vector<long> elem_coords(Elem a) const;
    Elem coords_elem(const std::vector<long>& c) const;

    // Coefficient tuples of presented elements, one vector per atom.
    std::vector<std::vector<std::uint32_t>> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<std::vector<std::uint32_t>>& c) const;

    std::string elem_str(Elem a) const;
    std::string descriptor() const;

    bool same_as(const Ring& o) const { return impl_ == o.impl_; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// Ideal given by generators and materialized as a sorted element set,
// closed under addition and multiplication by arbitrary ring elements.
class Ideal {
public:
    Ideal() = default;
    Ideal(Ring ring, std::vector<Elem> generators);

    const Ring& ring() const { return ring_; }
    const std::vector<Elem>& elements() const { return elems_; }
    const std::vector<Elem>& generators() const { return gens_; }
    bool contains(Elem x) const;
    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return elems_.size() == 1; }
    bool operator==(const Ideal& o) const { return elems_ == o.elems_; }

    static Ideal intersect(const Ideal& a, const Ideal& b);
    // Image under an element permutation (used for the G-action on Max S).
    Ideal map_through(const std::vector<Elem>& perm) const;

private:
    Ring ring_;
    std::vector<Elem> gens_;
    std::vector<Elem> elems_;

    // trusted path for already-closed sorted element sets
    Ideal(Ring ring, std::vector<Elem> gens, std::vector<Elem> elems)
        : ring_(std::move(ring)), gens_(std::move(gens)), elems_(std::move(elems)) {}
    friend class Ring;
};

struct QuotientRing {
    Ring ring;
    std::vector<Elem> proj;     // S elem -> quotient elem
    std::vector<Elem> section;  // quotient elem -> least coset representative
};

struct MaximalIdealData {
    Ideal ideal;
    std::uint64_t residue_size = 0;
};

}  // namespace kerind

#endif
