#ifndef KERIND_TEST_FIXTURES_HPP
#define KERIND_TEST_FIXTURES_HPP

#include "kerind/action.hpp"

namespace kerind::testfix {

inline std::vector<Elem> frobenius_table(const Ring& s, std::uint32_t p) {
    std::vector<Elem> t(s.size());
    for (Elem e = 0; e < s.size(); ++e) t[e] = s.pow(e, p);
    return t;
}

inline std::vector<Elem> neg_x_table(const Ring& s) {
    std::vector<Elem> t(s.size());
    for (Elem e = 0; e < s.size(); ++e) {
        auto c = s.coeffs(e);
        for (std::size_t a = 0; a < c.size(); ++a) {
            const std::uint32_t m = s.atoms()[a].modulus;
            for (std::size_t j = 1; j < c[a].size(); j += 2) c[a][j] = (m - c[a][j]) % m;
        }
        t[e] = s.from_coeffs(c);
    }
    return t;
}

inline std::vector<Elem> rotate_atoms_table(const Ring& s) {
    std::vector<Elem> t(s.size());
    for (Elem e = 0; e < s.size(); ++e) {
        auto c = s.coeffs(e);
        std::vector<std::vector<std::uint32_t>> out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[(i + 1) % c.size()];
        t[e] = s.from_coeffs(out);
    }
    return t;
}

// F_4 with the Frobenius involution.
inline Action f4_frobenius() {
    Ring s = Ring::parse("F4");
    return Action::make(Group::cyclic(2), s, {frobenius_table(s, 2)});
}

// F_9 with the Frobenius involution.
inline Action f9_frobenius() {
    Ring s = Ring::parse("F9");
    return Action::make(Group::cyclic(2), s, {frobenius_table(s, 3)});
}

// (Z/3)[x]/(x^2) with x -> -x; the running non-Galois example.
inline Action dual_f3() {
    Ring s = Ring::parse("(Z/3)[x]/(x^2)");
    return Action::make(Group::cyclic(2), s, {neg_x_table(s)});
}

// (Z/5)[x]/(x^2) with x -> -x.
inline Action dual_f5() {
    Ring s = Ring::parse("(Z/5)[x]/(x^2)");
    return Action::make(Group::cyclic(2), s, {neg_x_table(s)});
}

// F_2 x F_2 with the swap; Galois with trivial decomposition groups.
inline Action f2f2_swap() {
    Ring s = Ring::parse("Z/2 x Z/2");
    return Action::make(Group::cyclic(2), s, {rotate_atoms_table(s)});
}

// (F_2)^3 with the cyclic rotation.
inline Action f2cube_rotate() {
    Ring s = Ring::parse("Z/2 x Z/2 x Z/2");
    return Action::make(Group::cyclic(3), s, {rotate_atoms_table(s)});
}

// Z/3 x (Z/3)[x]/(x^2) with x -> -x on the second factor.
inline Action mixed_f3_dual() {
    Ring s = Ring::parse("Z/3 x (Z/3)[x]/(x^2)");
    return Action::make(Group::cyclic(2), s, {neg_x_table(s)});
}

}  // namespace kerind::testfix

#endif
