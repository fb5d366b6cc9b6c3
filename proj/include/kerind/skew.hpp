#ifndef KERIND_SKEW_HPP
#define KERIND_SKEW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kerind/action.hpp"
#include "kerind/matrix.hpp"

// The skew group ring T = S*G and the twisted modules (S^n)_d, with the
// add(S_T)-membership criteria.  This module is the independent oracle for
// kernel-of-induction membership: it never calls into the cohomology code,
// sharing only ring/group/matrix arithmetic.

namespace kerind {

// Element of T: one S-coefficient per group basis element, u = sum_g g*a_g.
using TElem = std::vector<Elem>;

class SkewRing {
public:
    // Requires hypothesis (*); throws std::domain_error otherwise.
    explicit SkewRing(Action act);

    const Action& action() const { return act_; }
    const Ring& coeff_ring() const { return act_.ring(); }
    const Group& group() const { return act_.group(); }

    TElem zero() const;
    TElem one() const;
    TElem basis(GElem g, Elem a) const;  // g * a
    TElem add(const TElem& u, const TElem& v) const;
    // Bilinear extension of ga * hb = gh * a^h b.
    TElem mul(const TElem& u, const TElem& v) const;

    const TElem& trace_element() const { return t_; }     // t = sum_g g
    Elem star_witness() const { return x_; }              // tr(x) = 1
    const TElem& trace_idempotent() const { return e_; }  // e = t x

    std::string str(const TElem& u) const;

private:
    Action act_;
    Elem x_ = 0;
    TElem t_, e_;
};

// Right T-module (S^n)_d for a value table d : G -> GL_n(S); the module
// structure is x * gs = x^g d(g) s on row vectors.
class TwistedModule {
public:
    TwistedModule(Action act, std::uint32_t n, std::vector<Matrix> values);

    std::uint32_t rank() const { return n_; }
    const Action& action() const { return act_; }

    std::vector<Elem> act_basis(const std::vector<Elem>& v, GElem g, Elem a) const;
    std::vector<Elem> act_elem(const std::vector<Elem>& v, const TElem& u) const;

    struct PiReport {
        bool equals_p = false;
        std::size_t closure_size = 0;
    };
    // P*I = P test via the additive closure of the basis images of I = TeT.
    PiReport pi_equals_p(const SkewRing& t) const;

    struct FiberReport {
        bool all_pass = false;
        std::vector<bool> per_ideal;
    };
    // Fiberwise test: for each maximal ideal, an invertible
    // intertwiner between the reduced twisted module and the untwisted one.
    FiberReport fiber_criterion() const;

    struct FixedReport {
        std::size_t q_size = 0;      // |P^G|
        bool spans = false;          // Q * S = S^n
        std::size_t span_size = 0;
    };
    FixedReport fixed_points() const;

private:
    Action act_;
    std::uint32_t n_ = 0;
    std::vector<Matrix> d_;
};

struct OracleReport {
    bool pi_equals_p = false;
    bool fiber = false;
    bool span = false;
    std::size_t pi_closure = 0, q_size = 0, span_size = 0;
    bool criteria_agree = false;   // pi_equals_p == fiber
    bool span_consistent = false;  // pi_equals_p implies span
};

OracleReport kernel_oracle(const SkewRing& t, std::uint32_t n, const std::vector<Matrix>& values);

}  // namespace kerind

#endif
