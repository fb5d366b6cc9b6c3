#include "kerind/ring.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kerind {

namespace {

using Coeffs = std::vector<std::uint32_t>;

Coeffs atom_add(const RingAtom& at, const Coeffs& a, const Coeffs& b) {
    const std::size_t d = at.degree();
    Coeffs r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = (a[i] + b[i]) % at.modulus;
    return r;
}

Coeffs atom_neg(const RingAtom& at, const Coeffs& a) {
    const std::size_t d = at.degree();
    Coeffs r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = (at.modulus - a[i]) % at.modulus;
    return r;
}

Coeffs atom_mul(const RingAtom& at, const Coeffs& a, const Coeffs& b) {
    const std::size_t d = at.degree();
    const std::uint64_t m = at.modulus;
    std::vector<std::uint64_t> t(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) t[i + j] = (t[i + j] + std::uint64_t(a[i]) * b[j]) % m;
    }
    // reduce by the monic modulus: x^d == -(f_0 + ... + f_{d-1} x^{d-1})
    for (std::size_t k = 2 * d - 2; k + 1 > d; --k) {
        const std::uint64_t c = t[k];
        if (c == 0) continue;
        t[k] = 0;
        for (std::size_t j = 0; j < d; ++j)
            t[k - d + j] = (t[k - d + j] + (m - c) * at.poly[j]) % m;
    }
    Coeffs r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = std::uint32_t(t[i]);
    return r;
}

std::uint64_t atom_local_size(const RingAtom& at) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < at.degree(); ++i) s *= at.modulus;
    return s;
}

// Local index <-> coefficient vector; c0 is the most significant digit so
// index order is lexicographic on (c0, .., c_{d-1}).
Coeffs atom_decode(const RingAtom& at, std::uint64_t idx) {
    const std::size_t d = at.degree();
    Coeffs c(d);
    for (std::size_t i = d; i-- > 0;) {
        c[i] = std::uint32_t(idx % at.modulus);
        idx /= at.modulus;
    }
    return c;
}

std::uint64_t atom_encode(const RingAtom& at, const Coeffs& c) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < at.degree(); ++i) idx = idx * at.modulus + c[i];
    return idx;
}

std::string atom_elem_str(const Coeffs& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) {
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string atom_str(const RingAtom& at) {
    std::ostringstream os;
    if (at.degree() == 1) {
        os << "Z/" << at.modulus;
    } else {
        os << "(Z/" << at.modulus << ")[x]/(";
        bool first = true;
        for (std::size_t i = at.poly.size(); i-- > 0;) {
            if (at.poly[i] == 0) continue;
            if (!first) os << "+";
            if (i == 0 || at.poly[i] != 1) os << at.poly[i];
            if (i >= 1) {
                os << "x";
                if (i >= 2) os << "^" << i;
            }
            first = false;
        }
        os << ")";
    }
    return os.str();
}

constexpr std::uint64_t kTableCap = 1024;
constexpr Elem kNoInverse = UINT32_MAX;

}  // namespace

std::uint64_t RingAtom::size() const { return atom_local_size(*this); }

struct Ring::Impl {
    bool presented = true;
    std::vector<RingAtom> atoms;
    std::uint64_t size = 1;
    Elem one = 0;

    // quotient-backed rings
    Ring parent;
    std::vector<Elem> reps;  // quotient elem -> least parent representative
    std::vector<Elem> proj;  // parent elem -> quotient elem

    bool tables = false;
    std::vector<Elem> add_tab, mul_tab, neg_tab;

    std::vector<long> add_moduli;  // presented only

    mutable std::once_flag units_flag, nil_flag, max_flag;
    mutable std::vector<Elem> units_list;
    mutable std::vector<Elem> inv_table;
    // raw cached data; Ideal values are materialized per call so the cache
    // never holds an owning reference back to this carrier
    mutable std::vector<Elem> nil_elems;
    mutable std::vector<std::pair<std::vector<Elem>, std::uint64_t>> max_cache;

    Elem add(Elem a, Elem b) const { return tables ? add_tab[a * size + b] : add_raw(a, b); }
    Elem mul(Elem a, Elem b) const { return tables ? mul_tab[a * size + b] : mul_raw(a, b); }
    Elem neg(Elem a) const { return tables ? neg_tab[a] : neg_raw(a); }

    Elem add_raw(Elem a, Elem b) const;
    Elem mul_raw(Elem a, Elem b) const;
    Elem neg_raw(Elem a) const;
    std::vector<Coeffs> decode(Elem a) const;
    Elem encode(const std::vector<Coeffs>& c) const;

    void build_tables();
    void verify_axioms() const;
    void compute_units() const;
};

std::vector<Coeffs> Ring::Impl::decode(Elem a) const {
    std::vector<Coeffs> out(atoms.size());
    std::uint64_t idx = a;
    for (std::size_t i = atoms.size(); i-- > 0;) {
        const std::uint64_t ls = atom_local_size(atoms[i]);
        out[i] = atom_decode(atoms[i], idx % ls);
        idx /= ls;
    }
    return out;
}

Elem Ring::Impl::encode(const std::vector<Coeffs>& c) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        idx = idx * atom_local_size(atoms[i]) + atom_encode(atoms[i], c[i]);
    return Elem(idx);
}

Elem Ring::Impl::add_raw(Elem a, Elem b) const {
    if (presented) {
        auto ca = decode(a), cb = decode(b);
        for (std::size_t i = 0; i < atoms.size(); ++i) ca[i] = atom_add(atoms[i], ca[i], cb[i]);
        return encode(ca);
    }
    return proj[parent.add(reps[a], reps[b])];
}

Elem Ring::Impl::mul_raw(Elem a, Elem b) const {
    if (presented) {
        auto ca = decode(a), cb = decode(b);
        for (std::size_t i = 0; i < atoms.size(); ++i) ca[i] = atom_mul(atoms[i], ca[i], cb[i]);
        return encode(ca);
    }
    return proj[parent.mul(reps[a], reps[b])];
}

Elem Ring::Impl::neg_raw(Elem a) const {
    if (presented) {
        auto ca = decode(a);
        for (std::size_t i = 0; i < atoms.size(); ++i) ca[i] = atom_neg(atoms[i], ca[i]);
        return encode(ca);
    }
    return proj[parent.neg(reps[a])];
}

void Ring::Impl::build_tables() {
    if (size > kTableCap) return;
    const std::size_t n = size;
    add_tab.resize(n * n);
    mul_tab.resize(n * n);
    neg_tab.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        neg_tab[a] = neg_raw(Elem(a));
        for (std::size_t b = 0; b < n; ++b) {
            add_tab[a * n + b] = add_raw(Elem(a), Elem(b));
            mul_tab[a * n + b] = mul_raw(Elem(a), Elem(b));
        }
    }
    tables = true;
}

void Ring::Impl::verify_axioms() const {
    auto check = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("ring axiom failed: ") + what);
    };
    if (size > 1) check(one != 0, "1 != 0");
    check(add(one, neg(one)) == 0, "1 + (-1) = 0");

    auto check_triple = [&](Elem a, Elem b, Elem c) {
        check(add(add(a, b), c) == add(a, add(b, c)), "additive associativity");
        check(mul(mul(a, b), c) == mul(a, mul(b, c)), "multiplicative associativity");
        check(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "distributivity");
    };
    auto check_pair = [&](Elem a, Elem b) {
        check(add(a, b) == add(b, a), "additive commutativity");
        check(mul(a, b) == mul(b, a), "multiplicative commutativity");
    };
    auto check_single = [&](Elem a) {
        check(add(a, 0) == a, "0 neutral");
        check(mul(a, one) == a, "1 neutral");
        check(add(a, neg(a)) == 0, "negation");
    };

    if (size <= 256) {
        for (Elem a = 0; a < size; ++a) {
            check_single(a);
            for (Elem b = 0; b < size; ++b) {
                check_pair(a, b);
                for (Elem c = 0; c < size; ++c) check_triple(a, b, c);
            }
        }
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
        for (int i = 0; i < 2000; ++i) {
            Elem a = Elem(pick(rng)), b = Elem(pick(rng)), c = Elem(pick(rng));
            check_single(a);
            check_pair(a, b);
            check_triple(a, b, c);
        }
    }
}

void Ring::Impl::compute_units() const {
    inv_table.assign(size, kNoInverse);
    if (presented) {
        // Componentwise: a is a unit iff every atom component is.
        std::vector<std::vector<Elem>> atom_inv(atoms.size());
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const std::uint64_t ls = atom_local_size(atoms[i]);
            atom_inv[i].assign(ls, kNoInverse);
            Coeffs unit(atoms[i].degree(), 0);
            unit[0] = 1 % atoms[i].modulus;
            for (std::uint64_t a = 0; a < ls; ++a) {
                if (atom_inv[i][a] != kNoInverse) continue;
                const Coeffs ca = atom_decode(atoms[i], a);
                for (std::uint64_t b = a; b < ls; ++b) {
                    if (atom_mul(atoms[i], ca, atom_decode(atoms[i], b)) == unit) {
                        atom_inv[i][a] = Elem(b);
                        atom_inv[i][b] = Elem(a);
                        break;
                    }
                }
            }
        }
        for (std::uint64_t a = 0; a < size; ++a) {
            std::uint64_t idx = a, rebuilt = 0;
            std::vector<std::uint64_t> comp(atoms.size());
            for (std::size_t i = atoms.size(); i-- > 0;) {
                const std::uint64_t ls = atom_local_size(atoms[i]);
                comp[i] = idx % ls;
                idx /= ls;
            }
            bool unit = true;
            for (std::size_t i = 0; i < atoms.size() && unit; ++i)
                unit = atom_inv[i][comp[i]] != kNoInverse;
            if (!unit) continue;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                rebuilt = rebuilt * atom_local_size(atoms[i]) + atom_inv[i][comp[i]];
            inv_table[a] = Elem(rebuilt);
            units_list.push_back(Elem(a));
        }
        if (atoms.empty()) {  // zero ring: 0 == 1 is invertible
            inv_table[0] = 0;
            units_list.assign(1, 0);
        }
    } else {
        for (Elem a = 0; a < size; ++a) {
            if (inv_table[a] != kNoInverse) continue;
            for (Elem b = a; b < size; ++b) {
                if (mul(a, b) == one) {
                    inv_table[a] = b;
                    inv_table[b] = a;
                    break;
                }
            }
        }
        for (Elem a = 0; a < size; ++a)
            if (inv_table[a] != kNoInverse) units_list.push_back(a);
    }
}

Ring Ring::make(std::vector<RingAtom> atoms, std::uint64_t size_bound) {
    auto im = std::make_shared<Impl>();
    std::uint64_t size = 1;
    for (auto& at : atoms) {
        if (at.modulus < 2) throw std::invalid_argument("ring atom modulus must be >= 2");
        if (at.poly.size() < 2) throw std::invalid_argument("ring atom polynomial must have degree >= 1");
        for (auto& c : at.poly) c %= at.modulus;
        if (at.poly.back() != 1) throw std::invalid_argument("ring atom polynomial must be monic");
        const std::uint64_t ls = atom_local_size(at);
        if (size > size_bound / ls) throw std::invalid_argument("ring size bound exceeded");
        size *= ls;
    }
    if (size > size_bound) throw std::invalid_argument("ring size bound exceeded");
    im->atoms = std::move(atoms);
    im->size = size;
    for (const auto& at : im->atoms)
        for (std::size_t i = 0; i < at.degree(); ++i) im->add_moduli.push_back(long(at.modulus));
    {
        std::vector<Coeffs> c;
        for (const auto& at : im->atoms) {
            Coeffs u(at.degree(), 0);
            u[0] = 1 % at.modulus;
            c.push_back(u);
        }
        im->one = im->encode(c);
    }
    im->build_tables();
    im->verify_axioms();
    return Ring(std::move(im));
}

Ring Ring::zero_ring() { return make({}); }

std::uint64_t Ring::size() const { return impl_->size; }
const std::vector<RingAtom>& Ring::atoms() const { return impl_->atoms; }
bool Ring::is_presented() const { return impl_->presented; }
Elem Ring::one() const { return impl_->one; }
Elem Ring::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem Ring::sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg(b)); }
Elem Ring::neg(Elem a) const { return impl_->neg(a); }
Elem Ring::mul(Elem a, Elem b) const { return impl_->mul(a, b); }

Elem Ring::pow(Elem a, std::uint64_t k) const {
    Elem r = one(), base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

Elem Ring::of_int(long v) const {
    const bool negv = v < 0;
    unsigned long k = negv ? -(unsigned long)v : (unsigned long)v;
    // double-and-add on the additive group
    Elem acc = zero(), base = one();
    while (k) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return negv ? neg(acc) : acc;
}

bool Ring::is_unit(Elem a) const { return inverse(a).has_value(); }

std::optional<Elem> Ring::inverse(Elem a) const {
    units();
    Elem v = impl_->inv_table[a];
    if (v == kNoInverse) return std::nullopt;
    return v;
}

bool Ring::is_nilpotent(Elem a) const {
    Elem x = a;
    std::uint64_t reach = 1;
    while (true) {
        if (x == zero()) return true;
        if (reach >= size()) return false;
        x = mul(x, x);
        reach *= 2;
    }
}

const std::vector<Elem>& Ring::units() const {
    std::call_once(impl_->units_flag, [&] { impl_->compute_units(); });
    return impl_->units_list;
}

Ideal Ring::nilradical() const {
    std::call_once(impl_->nil_flag, [&] {
        std::vector<Elem> nilp;
        for (Elem a = 0; a < size(); ++a)
            if (is_nilpotent(a)) nilp.push_back(a);
        impl_->nil_elems = std::move(nilp);
    });
    return Ideal(*this, impl_->nil_elems, impl_->nil_elems);
}

std::vector<MaximalIdealData> Ring::maximal_ideals() const {
    if (is_zero_ring()) throw std::domain_error("the zero ring has no maximal ideals");
    std::call_once(impl_->max_flag, [&] {
        QuotientRing q = quotient(nilradical());
        const Ring& qr = q.ring;
        // Primitive idempotents of the semisimple quotient S/nil.
        std::vector<Elem> idem;
        for (Elem e = 0; e < qr.size(); ++e)
            if (qr.mul(e, e) == e && e != qr.zero()) idem.push_back(e);
        std::vector<Elem> prim;
        for (Elem e : idem) {
            bool primitive = true;
            for (Elem f : idem)
                if (f != e && qr.mul(e, f) == f) { primitive = false; break; }
            if (primitive) prim.push_back(e);
        }
        std::vector<std::pair<std::vector<Elem>, std::uint64_t>> out;
        for (Elem e : prim) {
            // Maximal ideal = preimage of the annihilator of the field factor e*Q.
            std::vector<Elem> elems;
            for (Elem s = 0; s < size(); ++s)
                if (qr.mul(q.proj[s], e) == qr.zero()) elems.push_back(s);
            const std::uint64_t residue = size() / elems.size();
            out.emplace_back(std::move(elems), residue);
        }
        std::sort(out.begin(), out.end());
        impl_->max_cache = std::move(out);
    });
    std::vector<MaximalIdealData> out;
    for (const auto& [elems, residue] : impl_->max_cache) {
        MaximalIdealData d;
        d.ideal = Ideal(*this, elems, elems);
        d.residue_size = residue;
        out.push_back(std::move(d));
    }
    return out;
}

QuotientRing Ring::quotient(const Ideal& i) const {
    if (!i.ring().same_as(*this)) throw std::invalid_argument("ideal belongs to a different ring");
    const auto& ideal_elems = i.elements();
    std::vector<Elem> proj(size(), kNoInverse);
    std::vector<Elem> reps;
    for (Elem s = 0; s < size(); ++s) {
        if (proj[s] != kNoInverse) continue;
        const Elem cls = Elem(reps.size());
        reps.push_back(s);
        for (Elem t : ideal_elems) proj[add(s, t)] = cls;
    }
    auto im = std::make_shared<Impl>();
    im->presented = false;
    im->parent = *this;
    im->size = reps.size();
    im->reps = reps;
    im->proj = proj;
    im->one = proj[one()];
    im->build_tables();
    im->verify_axioms();
    // the projection must be a ring homomorphism
    Ring qring(im);
    auto check = [&](bool ok) {
        if (!ok) throw std::logic_error("quotient projection is not a ring homomorphism");
    };
    if (size() <= 256) {
        for (Elem a = 0; a < size(); ++a)
            for (Elem b = 0; b < size(); ++b) {
                check(proj[add(a, b)] == qring.add(proj[a], proj[b]));
                check(proj[mul(a, b)] == qring.mul(proj[a], proj[b]));
            }
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::uint64_t> pick(0, size() - 1);
        for (int k = 0; k < 2000; ++k) {
            Elem a = Elem(pick(rng)), b = Elem(pick(rng));
            check(proj[add(a, b)] == qring.add(proj[a], proj[b]));
            check(proj[mul(a, b)] == qring.mul(proj[a], proj[b]));
        }
    }
    QuotientRing out;
    out.ring = qring;
    out.proj = std::move(proj);
    out.section = std::move(reps);
    return out;
}

const std::vector<long>& Ring::additive_moduli() const {
    if (!impl_->presented) throw std::domain_error("additive coordinates need a presented ring");
    return impl_->add_moduli;
}

std::vector<long> Ring::elem_coords(Elem a) const {
    if (!impl_->presented) throw std::domain_error("additive coordinates need a presented ring");
    std::vector<long> out;
    for (const auto& c : impl_->decode(a))
        for (auto v : c) out.push_back(long(v));
    return out;
}

Elem Ring::coords_elem(const std::vector<long>& c) const {
    if (!impl_->presented) throw std::domain_error("additive coordinates need a presented ring");
    std::vector<Coeffs> per;
    std::size_t k = 0;
    for (const auto& at : impl_->atoms) {
        Coeffs cc(at.degree());
        for (std::size_t i = 0; i < at.degree(); ++i, ++k) {
            long v = c[k] % long(at.modulus);
            if (v < 0) v += long(at.modulus);
            cc[i] = std::uint32_t(v);
        }
        per.push_back(std::move(cc));
    }
    return impl_->encode(per);
}

std::vector<std::vector<std::uint32_t>> Ring::coeffs(Elem a) const {
    if (!impl_->presented) throw std::domain_error("coefficients need a presented ring");
    return impl_->decode(a);
}

Elem Ring::from_coeffs(const std::vector<std::vector<std::uint32_t>>& c) const {
    if (!impl_->presented) throw std::domain_error("coefficients need a presented ring");
    auto cc = c;
    for (std::size_t i = 0; i < cc.size(); ++i)
        for (auto& v : cc[i]) v %= impl_->atoms[i].modulus;
    return impl_->encode(cc);
}

std::string Ring::elem_str(Elem a) const {
    if (!impl_->presented) return impl_->parent.elem_str(impl_->reps[a]) + "~";
    if (impl_->atoms.empty()) return "0";
    auto c = impl_->decode(a);
    if (c.size() == 1) return atom_elem_str(c[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ", ";
        s += atom_elem_str(c[i]);
    }
    return s + ")";
}

std::string Ring::descriptor() const {
    if (!impl_->presented) {
        std::ostringstream os;
        os << impl_->parent.descriptor() << " mod ideal (" << impl_->size << " classes)";
        return os.str();
    }
    if (impl_->atoms.empty()) return "0-ring";
    std::string s;
    for (std::size_t i = 0; i < impl_->atoms.size(); ++i) {
        if (i) s += " x ";
        s += atom_str(impl_->atoms[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// descriptor parsing

namespace {

struct PolyParse {
    std::vector<long> coeffs;  // ascending powers
};

void poly_accumulate(PolyParse& p, long coeff, std::size_t power) {
    if (p.coeffs.size() <= power) p.coeffs.resize(power + 1, 0);
    p.coeffs[power] += coeff;
}

PolyParse parse_poly(const std::string& s) {
    PolyParse p;
    std::size_t i = 0;
    const auto n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace((unsigned char)s[i])) ++i; };
    bool expect_term = true;
    long sign = 1;
    while (true) {
        skip_ws();
        if (i >= n) break;
        if (!expect_term) {
            if (s[i] == '+') { sign = 1; ++i; }
            else if (s[i] == '-') { sign = -1; ++i; }
            else throw std::invalid_argument("polynomial parse error near '" + s.substr(i) + "'");
            expect_term = true;
            continue;
        }
        if (s[i] == '-') { sign = -sign; ++i; continue; }
        if (s[i] == '+') { ++i; continue; }
        long coeff = 1;
        bool saw_digits = false;
        if (std::isdigit((unsigned char)s[i])) {
            coeff = 0;
            while (i < n && std::isdigit((unsigned char)s[i])) coeff = coeff * 10 + (s[i++] - '0');
            saw_digits = true;
        }
        skip_ws();
        std::size_t power = 0;
        if (i < n && s[i] == 'x') {
            ++i;
            power = 1;
            if (i < n && s[i] == '^') {
                ++i;
                if (i >= n || !std::isdigit((unsigned char)s[i]))
                    throw std::invalid_argument("polynomial exponent expected");
                power = 0;
                while (i < n && std::isdigit((unsigned char)s[i])) power = power * 10 + (s[i++] - '0');
            }
        } else if (!saw_digits) {
            throw std::invalid_argument("polynomial term expected in '" + s + "'");
        }
        poly_accumulate(p, sign * coeff, power);
        sign = 1;
        expect_term = false;
    }
    if (p.coeffs.empty()) throw std::invalid_argument("empty polynomial");
    return p;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomial arithmetic over F_p for the irreducible search.
using FPoly = std::vector<std::uint32_t>;  // ascending, trailing zeros trimmed

FPoly fp_mod(FPoly a, const FPoly& b, std::uint32_t p) {
    auto deg = [](const FPoly& f) { return f.empty() ? -1 : int(f.size()) - 1; };
    while (deg(a) >= deg(b)) {
        std::uint32_t lead = a.back();
        // b monic
        int shift = deg(a) - deg(b);
        for (std::size_t i = 0; i < b.size(); ++i) {
            auto& t = a[i + shift];
            t = (t + p - std::uint32_t((std::uint64_t(lead) * b[i]) % p)) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool fp_irreducible(const FPoly& f, std::uint32_t p) {
    const int d = int(f.size()) - 1;
    // trial division by all monic polynomials of degree 1..d/2
    for (int k = 1; 2 * k <= d; ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            FPoly g(k + 1, 0);
            std::uint64_t t = idx;
            for (int i = 0; i < k; ++i) { g[i] = std::uint32_t(t % p); t /= p; }
            g[k] = 1;
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

RingAtom field_atom(std::uint64_t q) {
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    if (p == 0) p = q;  // q prime
    if (!is_prime(p)) throw std::invalid_argument("field size is not a prime power");
    std::size_t deg = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument("field size is not a prime power");
        t /= p;
        ++deg;
    }
    RingAtom at;
    at.modulus = std::uint32_t(p);
    if (deg == 1) {
        at.poly = {0, 1};  // Z/p = (Z/p)[x]/(x)
        return at;
    }
    // lexicographically first monic irreducible of the right degree
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FPoly f(deg + 1, 0);
        std::uint64_t u = idx;
        for (std::size_t i = 0; i < deg; ++i) { f[i] = std::uint32_t(u % p); u /= p; }
        f[deg] = 1;
        if (f[0] == 0) continue;  // divisible by x
        if (fp_irreducible(f, std::uint32_t(p))) {
            at.poly.assign(f.begin(), f.end());
            return at;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

RingAtom parse_atom(const std::string& tok) {
    std::string s;
    for (char c : tok)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("empty ring atom");
    if (s[0] == 'F' || s[0] == 'f') {
        std::string digits = s.substr(1);
        if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                return std::isdigit((unsigned char)c);
            }))
            throw std::invalid_argument("bad field descriptor: " + tok);
        return field_atom(std::stoull(digits));
    }
    if (s.rfind("Z/", 0) == 0 && s.find('[') == std::string::npos) {
        RingAtom at;
        at.modulus = std::uint32_t(std::stoul(s.substr(2)));
        at.poly = {0, 1};
        return at;
    }
    // (Z/m)[x]/(f)
    auto close1 = s.find(')');
    if (s.rfind("(Z/", 0) == 0 && close1 != std::string::npos) {
        RingAtom at;
        at.modulus = std::uint32_t(std::stoul(s.substr(3, close1 - 3)));
        auto bracket = s.find("[x]/(", close1);
        if (bracket == std::string::npos || s.back() != ')')
            throw std::invalid_argument("bad ring atom: " + tok);
        std::string poly = s.substr(bracket + 5, s.size() - bracket - 6);
        PolyParse pp = parse_poly(poly);
        at.poly.resize(pp.coeffs.size());
        for (std::size_t i = 0; i < pp.coeffs.size(); ++i) {
            long v = pp.coeffs[i] % long(at.modulus);
            if (v < 0) v += long(at.modulus);
            at.poly[i] = std::uint32_t(v);
        }
        if (at.poly.size() < 2) throw std::invalid_argument("polynomial degree must be >= 1");
        if (at.poly.back() != 1) throw std::invalid_argument("polynomial must be monic: " + tok);
        return at;
    }
    throw std::invalid_argument("unrecognized ring atom: " + tok);
}

}  // namespace

Ring Ring::parse(const std::string& descriptor, std::uint64_t size_bound) {
    // atoms are separated by a standalone 'x' token
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(descriptor);
    std::string word;
    while (is >> word) {
        if (word == "x" || word == "X" || word == "*") {
            parts.push_back(cur);
            cur.clear();
        } else {
            if (!cur.empty()) cur += " ";
            cur += word;
        }
    }
    parts.push_back(cur);
    std::vector<RingAtom> atoms;
    for (const auto& p : parts) atoms.push_back(parse_atom(p));
    return make(std::move(atoms), size_bound);
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(Ring ring, std::vector<Elem> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
    std::vector<char> in(ring_.size(), 0);
    std::vector<Elem> work;
    auto push = [&](Elem e) {
        if (!in[e]) {
            in[e] = 1;
            work.push_back(e);
        }
    };
    push(ring_.zero());
    for (Elem g : gens_) push(g);
    while (!work.empty()) {
        Elem u = work.back();
        work.pop_back();
        for (Elem s = 0; s < ring_.size(); ++s) {
            push(ring_.mul(u, s));
            if (in[s]) push(ring_.add(u, s));
        }
    }
    for (Elem e = 0; e < ring_.size(); ++e)
        if (in[e]) elems_.push_back(e);
}

bool Ideal::contains(Elem x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool Ideal::is_unit_ideal() const { return contains(ring_.one()); }

Ideal Ideal::intersect(const Ideal& a, const Ideal& b) {
    std::vector<Elem> common;
    std::set_intersection(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                          std::back_inserter(common));
    return Ideal(a.ring_, common);
}

Ideal Ideal::map_through(const std::vector<Elem>& perm) const {
    std::vector<Elem> img;
    img.reserve(elems_.size());
    for (Elem e : elems_) img.push_back(perm[e]);
    return Ideal(ring_, img);
}

}  // namespace kerind
