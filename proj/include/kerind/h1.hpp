#ifndef KERIND_H1_HPP
#define KERIND_H1_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kerind/gview.hpp"

namespace kerind {

// Search/enumeration caps.  Exact verdicts never depend on these: searches
// that hit a cap report Capped instead of deciding.
struct H1Caps {
    std::uint64_t x_cap = 1000000;         // coefficient-group enumeration
    std::uint64_t solution_cap = 1 << 20;  // witness-solver solution subgroup
    std::uint32_t level_bound = 3;         // stable_equal padding bound
};

// A 1-cocycle: value table over the whole acting group, satisfying
// d(gh) = d(g)^h d(h); always verified on construction paths.
struct Cocycle {
    CoeffGroup view;
    std::vector<XElem> values;
    bool operator==(const Cocycle& o) const { return values == o.values; }
};

Cocycle unit_cocycle(const CoeffGroup& view);
bool is_cocycle(const Cocycle& c);
bool is_unit_table(const Cocycle& c);

// g -> x^g e(g) x^{-1}; realizes the cohomologous relation d ~ e.
Cocycle twisted_conjugate(const XElem& x, const Cocycle& e);

// Backtracking over generator values with norm prefilter; complete Z^1.
std::vector<Cocycle> enumerate_cocycles(const CoeffGroup& view, const H1Caps& caps = {});
// Cyclic fast path through the twisted norm condition
// x^{g^{m-1}} ... x^g x = 1; must agree with enumerate_cocycles as a set.
std::vector<Cocycle> cocycles_cyclic(const CoeffGroup& view, const H1Caps& caps = {});

enum class SearchStatus { Found, None, Capped };

struct WitnessResult {
    SearchStatus status = SearchStatus::Capped;
    XElem witness;
};

// Twisted-conjugacy witness search: candidate witnesses from hints first,
// then the linear congruence solver over the additive group of M_n(S) when
// available, exhaustive scan otherwise.
WitnessResult cohomologous(const Cocycle& d, const Cocycle& e, const H1Caps& caps = {},
                           const std::vector<XElem>* hints = nullptr);

struct CohClass {
    Cocycle rep;
    bool canonical = false;
    std::optional<bool> neutral;
    // witness carrying the cocycle make_class received onto rep; for sums
    // built by add_classes it carries the literal block cocycle onto rep
    std::optional<XElem> canon_witness;
    std::uint32_t level() const { return rep.view.level(); }
};

// Lexicographically minimal orbit representative when the coefficient group
// enumerates under the cap; otherwise a raw (non-canonical) class.
CohClass make_class(const Cocycle& c, const H1Caps& caps = {});

// Orbit partition of Z^1 under twisted conjugation, canonical reps,
// deterministic order, neutral class flagged.
std::vector<CohClass> h1_classes(const CoeffGroup& view, const H1Caps& caps = {});

SearchStatus class_neutral(CohClass& a, const H1Caps& caps = {});
// Class equality at equal levels (canonical compare or witness search).
SearchStatus class_equal(const CohClass& a, const CohClass& b, const H1Caps& caps = {});

CohClass restrict_class(const CohClass& a, const Subgroup& h, const H1Caps& caps = {});

// Inflation along proj : G ->> G/N; a lives over G/N, the result over G.
// Throws std::invalid_argument when a's values are not N-fixed.
CohClass inflate_class(const CohClass& a, const CoeffGroup& target_view,
                       const std::vector<GElem>& proj, const H1Caps& caps = {});

struct RhoResult {
    CohClass image;
    SearchStatus status = SearchStatus::Found;  // Capped when neutrality undecided
    bool neutral = false;                       // valid when status == Found/None... see neutral
};

// Restriction to H with reduction mod J(H); the target H-action is trivial,
// so neutrality is the exact identity test.
RhoResult rho_subgroup(const CohClass& a, const Subgroup& h, const H1Caps& caps = {});

enum class RhoVariant { Inertia, Decomposition };
// Restriction to G^T(M) (or G^Z(M)) with entrywise reduction mod M.
RhoResult rho_maximal(const CohClass& a, std::size_t maximal_index, RhoVariant variant,
                      const H1Caps& caps = {});

// d(g) == 1 mod J(<g>) for every g; exact and representative-independent.
bool congruence_kernel_test(const CohClass& a);

CohClass det_push(const CohClass& a, const H1Caps& caps = {});
CohClass unit_embed(const CohClass& a, const H1Caps& caps = {});

// Entrywise reduction mod the nilradical, with the induced G-action.
RhoResult radical_push(const CohClass& a, const H1Caps& caps = {});

// Block-diagonal sum; same designation (GL with GL, SL with SL) required.
CohClass add_classes(const CohClass& a, const CohClass& b, const H1Caps& caps = {});

enum class StableVerdict { Equal, NotEqualUpToBound, SearchCapped };

struct StableResult {
    StableVerdict verdict = StableVerdict::SearchCapped;
    std::uint32_t level = 0;  // witness level when Equal
    XElem witness;
};

// Pads both classes to each common level up to caps.level_bound and looks
// for a twisted-conjugacy witness; hints supply candidate witnesses (e.g.
// s-matrix certificates) tried before any search, verified exactly.
StableResult stable_equal(const CohClass& a, const CohClass& b, const H1Caps& caps = {},
                          const std::vector<XElem>* hints = nullptr);

struct UnitVerdict {
    bool star = false;        // whether (*) holds for the underlying action
    bool congruence = false;  // verdict (i), exact (meaningful under (*))
    SearchStatus inverse_search = SearchStatus::Capped;  // verdict (ii)
    std::optional<CohClass> inverse;
};

// Both unit verdicts; candidates are scanned as potential inverses.
UnitVerdict is_unit_class(const CohClass& a, const std::vector<CohClass>& candidates,
                          const H1Caps& caps = {});

}  // namespace kerind

#endif
