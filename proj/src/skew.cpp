#include "kerind/skew.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace kerind {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Elem>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Elem e : v) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Additive closure of a generating set inside a finite abelian group of
// vectors.  The subgroup generated is the orbit of 0 under translation by
// the generators, so a BFS adding one generator at a time reaches it all.
std::size_t additive_closure_size(const Ring& s, std::vector<std::vector<Elem>> gens,
                                  std::uint64_t space_size) {
    std::unordered_set<std::vector<Elem>, VecHash> gset(gens.begin(), gens.end());
    std::vector<std::vector<Elem>> uniq(gset.begin(), gset.end());
    if (uniq.empty()) return 1;
    std::unordered_set<std::vector<Elem>, VecHash> in;
    std::vector<std::vector<Elem>> work;
    auto push = [&](std::vector<Elem> v) {
        if (in.insert(v).second) work.push_back(std::move(v));
    };
    push(std::vector<Elem>(uniq[0].size(), s.zero()));
    while (!work.empty()) {
        auto u = work.back();
        work.pop_back();
        for (const auto& g : uniq) {
            std::vector<Elem> w(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) w[i] = s.add(u[i], g[i]);
            push(std::move(w));
            if (in.size() == space_size) return in.size();
        }
    }
    return in.size();
}

}  // namespace

SkewRing::SkewRing(Action act) : act_(std::move(act)) {
    x_ = act_.trace_witness();  // throws when (*) fails
    const Group& g = act_.group();
    const Ring& s = act_.ring();
    t_.assign(g.size(), s.one());
    e_ = mul(t_, basis(0, x_));
    // the defining identities of the trace idempotent
    if (!(mul(mul(t_, basis(0, x_)), t_) == t_)) throw std::logic_error("t x t != t");
    if (!(mul(e_, e_) == e_)) throw std::logic_error("e^2 != e");
    // eT = tS is a copy of S_T: s -> t*s must be injective and G-equivariant
    for (Elem a = 0; a < s.size(); ++a) {
        TElem ta = mul(t_, basis(0, a));
        if (a != s.zero() && ta == zero()) throw std::logic_error("t*S degenerates");
        for (GElem h = 0; h < g.size(); ++h)
            if (!(mul(ta, basis(h, s.one())) == mul(t_, basis(0, act_.act(h, a)))))
                throw std::logic_error("eT is not S_T on basis images");
    }
}

TElem SkewRing::zero() const { return TElem(act_.group().size(), act_.ring().zero()); }

TElem SkewRing::one() const {
    TElem u = zero();
    u[0] = act_.ring().one();
    return u;
}

TElem SkewRing::basis(GElem g, Elem a) const {
    TElem u = zero();
    u[g] = a;
    return u;
}

TElem SkewRing::add(const TElem& u, const TElem& v) const {
    const Ring& s = act_.ring();
    TElem w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = s.add(u[i], v[i]);
    return w;
}

TElem SkewRing::mul(const TElem& u, const TElem& v) const {
    const Group& g = act_.group();
    const Ring& s = act_.ring();
    TElem w = zero();
    for (GElem a = 0; a < g.size(); ++a) {
        if (u[a] == s.zero()) continue;
        for (GElem b = 0; b < g.size(); ++b) {
            if (v[b] == s.zero()) continue;
            const GElem ab = g.op(a, b);
            w[ab] = s.add(w[ab], s.mul(act_.act(b, u[a]), v[b]));
        }
    }
    return w;
}

std::string SkewRing::str(const TElem& u) const {
    const Ring& s = act_.ring();
    std::ostringstream os;
    bool first = true;
    for (GElem g = 0; g < u.size(); ++g) {
        if (u[g] == s.zero()) continue;
        if (!first) os << " + ";
        os << "g" << g << "*(" << s.elem_str(u[g]) << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------

TwistedModule::TwistedModule(Action act, std::uint32_t n, std::vector<Matrix> values)
    : act_(std::move(act)), n_(n), d_(std::move(values)) {
    const Group& g = act_.group();
    if (d_.size() != g.size()) throw std::invalid_argument("one matrix per group element expected");
    for (const auto& m : d_)
        if (m.dim() != n_ || !m.invertible())
            throw std::invalid_argument("twisted module needs GL_n values");
    if (!(d_[0] == Matrix::identity(act_.ring(), n_)))
        throw std::invalid_argument("twisted module needs d(1) = 1");
    // spot-check associativity of the module action
    std::mt19937_64 rng(0x5eed);
    const Ring& s = act_.ring();
    std::uniform_int_distribution<std::uint64_t> se(0, s.size() - 1);
    std::uniform_int_distribution<std::uint32_t> ge(0, g.size() - 1);
    for (int i = 0; i < 50; ++i) {
        std::vector<Elem> v(n_);
        for (auto& e : v) e = Elem(se(rng));
        GElem g1 = ge(rng), g2 = ge(rng);
        Elem a1 = Elem(se(rng)), a2 = Elem(se(rng));
        auto lhs = act_basis(act_basis(v, g1, a1), g2, a2);
        // (g1 a1)(g2 a2) = g1g2 * a1^{g2} a2
        auto rhs = act_basis(v, g.op(g1, g2), s.mul(act_.act(g2, a1), a2));
        if (lhs != rhs) throw std::logic_error("module action is not associative");
    }
}

std::vector<Elem> TwistedModule::act_basis(const std::vector<Elem>& v, GElem g, Elem a) const {
    const Ring& s = act_.ring();
    const Matrix& dg = d_[g];
    std::vector<Elem> w(n_, s.zero());
    for (std::uint32_t j = 0; j < n_; ++j) {
        Elem acc = s.zero();
        for (std::uint32_t i = 0; i < n_; ++i)
            acc = s.add(acc, s.mul(act_.act(g, v[i]), dg.at(i, j)));
        w[j] = s.mul(acc, a);
    }
    return w;
}

std::vector<Elem> TwistedModule::act_elem(const std::vector<Elem>& v, const TElem& u) const {
    const Ring& s = act_.ring();
    std::vector<Elem> acc(n_, s.zero());
    for (GElem g = 0; g < u.size(); ++g) {
        if (u[g] == s.zero()) continue;
        auto term = act_basis(v, g, u[g]);
        for (std::uint32_t i = 0; i < n_; ++i) acc[i] = s.add(acc[i], term[i]);
    }
    return acc;
}

TwistedModule::PiReport TwistedModule::pi_equals_p(const SkewRing& t) const {
    const Ring& s = act_.ring();
    const Group& g = act_.group();
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (space > (1ull << 24) / std::max<std::uint64_t>(s.size(), 1))
            throw std::length_error("module space too large for closure");
        space *= s.size();
    }
    // P I = additive span of e_k * (g a) e (h b) over basis vectors e_k.
    const TElem& e = t.trace_idempotent();
    std::vector<std::vector<Elem>> gens;
    for (std::uint32_t k = 0; k < n_; ++k) {
        std::vector<Elem> ek(n_, s.zero());
        ek[k] = s.one();
        for (GElem ga = 0; ga < g.size(); ++ga)
            for (Elem a = 0; a < s.size(); ++a) {
                auto v1 = act_elem(ek, t.mul(t.basis(ga, a), e));
                for (GElem h = 0; h < g.size(); ++h)
                    for (Elem b = 0; b < s.size(); ++b)
                        gens.push_back(act_basis(v1, h, b));
            }
    }
    PiReport r;
    r.closure_size = additive_closure_size(s, std::move(gens), space);
    r.equals_p = (r.closure_size == space);
    return r;
}

TwistedModule::FixedReport TwistedModule::fixed_points() const {
    const Ring& s = act_.ring();
    const Group& g = act_.group();
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (space > (1ull << 24) / std::max<std::uint64_t>(s.size(), 1))
            throw std::length_error("module space too large for scan");
        space *= s.size();
    }
    const auto& gens = g.generators();
    std::vector<std::vector<Elem>> q;
    std::vector<Elem> v(n_, s.zero());
    for (std::uint64_t it = 0; it < space; ++it) {
        bool fixed = true;
        for (GElem gg : gens) {
            if (act_basis(v, gg, s.one()) != v) {
                fixed = false;
                break;
            }
        }
        if (fixed) q.push_back(v);
        for (std::size_t k = n_; k-- > 0;) {
            if (++v[k] < s.size()) break;
            v[k] = 0;
        }
    }
    FixedReport r;
    r.q_size = q.size();
    // Q * S: additive span of q scaled by ring elements
    std::vector<std::vector<Elem>> gens2;
    for (const auto& qq : q)
        for (Elem a = 0; a < s.size(); ++a) {
            std::vector<Elem> w(n_);
            for (std::uint32_t i = 0; i < n_; ++i) w[i] = s.mul(qq[i], a);
            gens2.push_back(std::move(w));
        }
    r.span_size = additive_closure_size(s, std::move(gens2), space);
    r.spans = (r.span_size == space);
    return r;
}

// ---------------------------------------------------------------------------
// fiber criterion: F_p-linear solve over each residue field

namespace {

struct PrimeCoords {
    std::uint64_t p = 0;
    std::uint32_t dim = 0;
    std::vector<Elem> basis;
    std::vector<std::vector<std::uint32_t>> coords;  // per element
    std::vector<Elem> of_coords;                     // dense decode table
};

PrimeCoords prime_coords(const Ring& k) {
    PrimeCoords pc;
    // characteristic = additive order of 1
    Elem acc = k.one();
    pc.p = 1;
    while (acc != k.zero()) {
        acc = k.add(acc, k.one());
        ++pc.p;
    }
    std::vector<std::vector<std::uint32_t>> coords(k.size());
    std::vector<char> seen(k.size(), 0);
    seen[k.zero()] = 1;
    coords[k.zero()] = {};
    std::vector<Elem> span{k.zero()};
    for (Elem e = 0; e < k.size(); ++e) {
        if (seen[e]) continue;
        pc.basis.push_back(e);
        std::vector<Elem> grown;
        for (Elem old : span) {
            Elem cur = old;
            for (std::uint64_t j = 1; j < pc.p; ++j) {
                cur = k.add(cur, e);
                if (seen[cur]) throw std::logic_error("additive basis collision");
                seen[cur] = 1;
                coords[cur] = coords[old];
                coords[cur].push_back(std::uint32_t(j));
                grown.push_back(cur);
            }
        }
        for (Elem old : span) coords[old].push_back(0);
        span.insert(span.end(), grown.begin(), grown.end());
    }
    pc.dim = std::uint32_t(pc.basis.size());
    for (auto& c : coords) c.resize(pc.dim, 0);
    pc.coords = std::move(coords);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < pc.dim; ++i) total *= pc.p;
    pc.of_coords.assign(total, k.zero());
    for (Elem e = 0; e < k.size(); ++e) {
        std::uint64_t idx = 0;
        for (std::uint32_t i = pc.dim; i-- > 0;) idx = idx * pc.p + pc.coords[e][i];
        pc.of_coords[idx] = e;
    }
    return pc;
}

// Gauss-Jordan kernel basis of an r x c matrix over F_p.
std::vector<std::vector<std::uint64_t>> fp_kernel(std::vector<std::vector<std::uint64_t>> m,
                                                  std::uint32_t cols, std::uint64_t p) {
    std::vector<std::int64_t> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::uint32_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][c] % p == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        // normalize pivot to 1 (field: brute-force inverse is fine here)
        std::uint64_t inv = 1;
        for (std::uint64_t t = 1; t < p; ++t)
            if ((m[rank][c] * t) % p == 1) {
                inv = t;
                break;
            }
        for (auto& x : m[rank]) x = (x * inv) % p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] % p == 0) continue;
            const std::uint64_t f = m[r][c] % p;
            for (std::uint32_t j = 0; j < cols; ++j)
                m[r][j] = (m[r][j] + (p - f) * m[rank][j]) % p;
        }
        pivot_of_col[c] = std::int64_t(rank);
        ++rank;
    }
    std::vector<std::vector<std::uint64_t>> kernel;
    for (std::uint32_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[c] = 1;
        for (std::uint32_t c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = (p - m[pivot_of_col[c2]][c] % p) % p;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

TwistedModule::FiberReport TwistedModule::fiber_criterion() const {
    const Ring& s = act_.ring();
    FiberReport out;
    out.all_pass = true;
    for (const auto& data : act_.inertia_table()) {
        QuotientRing q = s.quotient(data.maximal_ideal);
        const Ring& k = q.ring;
        PrimeCoords pc = prime_coords(k);
        const auto& gz = data.decomposition;

        // solve dbar(g) x = x^g for x in M_n(k), entries over F_p coords
        const std::uint32_t cols = n_ * n_ * pc.dim;
        std::vector<std::vector<std::uint64_t>> rows;
        for (GElem g : gz) {
            Matrix db = d_[g].map_ring(k, q.proj);
            std::vector<Elem> gtab(k.size());
            for (Elem e = 0; e < k.size(); ++e) gtab[e] = q.proj[act_.act(g, q.section[e])];
            for (std::uint32_t i = 0; i < n_; ++i)
                for (std::uint32_t j = 0; j < n_; ++j)
                    for (std::uint32_t w = 0; w < pc.dim; ++w) {
                        std::vector<std::uint64_t> row(cols, 0);
                        // columns: coordinate u of entry (a,b)
                        for (std::uint32_t a = 0; a < n_; ++a)
                            for (std::uint32_t b = 0; b < n_; ++b)
                                for (std::uint32_t u = 0; u < pc.dim; ++u) {
                                    // contribution of x_{ab} = basis_u to the
                                    // (i,j) entry of dbar(g) x - x^g
                                    Elem lhs = k.zero();
                                    if (b == j) lhs = k.mul(db.at(i, a), pc.basis[u]);
                                    Elem rhs = (a == i && b == j) ? gtab[pc.basis[u]] : k.zero();
                                    Elem diff = k.sub(lhs, rhs);
                                    row[(std::size_t(a) * n_ + b) * pc.dim + u] =
                                        pc.coords[diff][w] % pc.p;
                                }
                        rows.push_back(std::move(row));
                    }
        }
        auto kernel = fp_kernel(std::move(rows), cols, pc.p);

        // scan the solution subspace for an invertible intertwiner
        bool found = false;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < kernel.size(); ++i) {
            count *= pc.p;
            if (count > (1ull << 22)) throw std::length_error("fiber solution space too large");
        }
        std::vector<std::uint64_t> digits(kernel.size(), 0);
        for (std::uint64_t it = 0; it < count && !found; ++it) {
            Matrix x(k, n_);
            for (std::uint32_t a = 0; a < n_; ++a)
                for (std::uint32_t b = 0; b < n_; ++b) {
                    std::uint64_t idx = 0;
                    for (std::uint32_t u = pc.dim; u-- > 0;) {
                        std::uint64_t coord = 0;
                        for (std::size_t kv = 0; kv < kernel.size(); ++kv)
                            coord +=
                                (digits[kv] * kernel[kv][(std::size_t(a) * n_ + b) * pc.dim + u]) %
                                pc.p;
                        idx = idx * pc.p + (coord % pc.p);
                    }
                    x.at(a, b) = pc.of_coords[idx];
                }
            if (k.is_unit(x.det())) found = true;
            for (std::size_t kv = kernel.size(); kv-- > 0;) {
                if (++digits[kv] < pc.p) break;
                digits[kv] = 0;
            }
        }
        out.per_ideal.push_back(found);
        out.all_pass = out.all_pass && found;
    }
    return out;
}

OracleReport kernel_oracle(const SkewRing& t, std::uint32_t n, const std::vector<Matrix>& values) {
    TwistedModule p(t.action(), n, values);
    OracleReport r;
    auto pi = p.pi_equals_p(t);
    auto fib = p.fiber_criterion();
    auto fix = p.fixed_points();
    r.pi_equals_p = pi.equals_p;
    r.pi_closure = pi.closure_size;
    r.fiber = fib.all_pass;
    r.span = fix.spans;
    r.q_size = fix.q_size;
    r.span_size = fix.span_size;
    r.criteria_agree = (r.pi_equals_p == r.fiber);
    r.span_consistent = !r.pi_equals_p || r.span;
    return r;
}

}  // namespace kerind
