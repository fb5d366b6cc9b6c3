#ifndef KERIND_ACTION_HPP
#define KERIND_ACTION_HPP

#include <memory>
#include <optional>
#include <vector>

#include "kerind/group.hpp"
#include "kerind/matrix.hpp"
#include "kerind/ring.hpp"

namespace kerind {

struct InertiaData {
    Ideal maximal_ideal;
    Subgroup decomposition;  // G^Z = stabilizer of the ideal
    Subgroup inertia;        // G^T = elements congruent to the identity mod the ideal
};

struct ResidualRing {
    QuotientRing quotient;  // S_H = S / J(H); the induced H-action is trivial
    Ideal j_ideal;
};

// A finite group acting on a finite commutative ring by verified
// automorphisms.  The standing trace hypothesis (*) -- some x has tr(x) = 1
// -- is enforced at construction unless the caller opts out for diagnostics.
class Action {
public:
    Action() = default;

    // generator_tables[i] is the element permutation of ring effected by
    // group.generators()[i]; tables for all other elements are derived and
    // the homomorphism property is verified.
    static Action make(Group group, Ring ring, std::vector<std::vector<Elem>> generator_tables,
                       bool require_star = true);
    static Action trivial(Group group, Ring ring, bool require_star = true);

    bool valid() const { return impl_ != nullptr; }
    const Group& group() const;
    const Ring& ring() const;

    Elem act(GElem g, Elem s) const;
    const std::vector<Elem>& table(GElem g) const;
    Matrix act_matrix(GElem g, const Matrix& m) const;

    Elem trace(Elem s) const;
    bool has_star() const;
    // Least x with tr(x) = 1; throws std::domain_error listing the trace
    // image when (*) fails.
    Elem trace_witness() const;

    const std::vector<Elem>& invariant_subring() const;  // sorted, verified closed

    const std::vector<InertiaData>& inertia_table() const;  // one per maximal ideal
    Subgroup decomposition_group(const Ideal& m) const;
    Subgroup inertia_group(const Ideal& m) const;

    // J(H) = intersection of all maximal ideals whose inertia contains H;
    // the empty intersection is the unit ideal.
    Ideal j_ideal(const Subgroup& h) const;
    ResidualRing residual(const Subgroup& h) const;

    bool is_galois() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Action(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

}  // namespace kerind

#endif
