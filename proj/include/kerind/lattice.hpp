#ifndef KERIND_LATTICE_HPP
#define KERIND_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kerind/group.hpp"
#include "kerind/zlin.hpp"

namespace kerind {

// Finite group acting on Z^r by integer matrices, on row vectors from the
// right: a |-> a * M_g.
class LatticeAction {
public:
    LatticeAction() = default;
    // generator_mats[i] acts for group.generators()[i]; extended to all of G
    // and verified (M_0 = 1, M_g M_h = M_{gh}, det = +-1).
    static LatticeAction make(Group group, std::uint32_t rank, std::vector<ZMat> generator_mats);

    const Group& group() const { return group_; }
    std::uint32_t rank() const { return rank_; }
    const ZMat& mat(GElem g) const { return mats_[g]; }

    LatticeAction restrict_to(const SubgroupEmbedding& sub) const;

private:
    Group group_;
    std::uint32_t rank_ = 0;
    std::vector<ZMat> mats_;
};

// Finitely generated abelian group by invariant factors plus free rank.
struct AbelianGroup {
    std::vector<mpz_class> factors;  // each >= 2, divisibility chain
    std::size_t free_rank = 0;
    bool trivial() const { return factors.empty() && free_rank == 0; }
    mpz_class order() const;  // requires free_rank == 0
    std::string str() const;
    bool operator==(const AbelianGroup& o) const = default;
};

// Cocycles live in ambient coordinates Z^{r|G|}: one Z^r block per group
// element in label order, block g holding d(g).
struct LatticeH1 {
    AbelianGroup group;
    ZMat z1_basis;      // columns span Z^1 inside Z^{r|G|}
    ZMat b1_columns;    // coboundary generators as ambient columns
    std::vector<std::vector<mpz_class>> gens;  // ambient torsion generators
};

// Z^1 cut out by the cocycle identity over all pairs, modulo coboundaries;
// asserts |G| annihilates the result.
LatticeH1 h1_lattice(const LatticeAction& act);

// ker(sum_i M_c^i) / im(M_c - 1) for the cyclic subgroup generated by c.
AbelianGroup h1_cyclic_lattice(const LatticeAction& act, GElem c);

// Coboundaries of the restricted action, as ambient columns in Z^{r|C|},
// blocks ordered by ascending parent label of the elements of c.
ZMat coboundary_columns(const LatticeAction& act, const Subgroup& c);
// Restriction of an ambient cocycle vector to the blocks of c.
std::vector<mpz_class> restrict_cocycle(const LatticeAction& act,
                                        const std::vector<mpz_class>& z, const Subgroup& c);

struct PicResult {
    AbelianGroup group;
    std::vector<std::vector<mpz_class>> generator_cocycles;  // ambient coords
};

// Intersection over cyclic subgroups of the kernels of restriction,
// modulo coboundaries: the Picard group of multiplicative invariants.
PicResult pic_multiplicative(const LatticeAction& act);

struct CoinvariantsResult {
    AbelianGroup group;  // A_H = A / [A,H]
    std::vector<mpz_class> torsion_factors;
    bool torsion_order_h_primary = false;  // every prime factor divides |H|
};

CoinvariantsResult coinvariants(const LatticeAction& act, const Subgroup& h);

// Injectivity of H^1(C,A) -> H^1(C,A_C) ~ Hom(C,A_C) for C = <c>.
bool mono_check(const LatticeAction& act, GElem c);

}  // namespace kerind

#endif
