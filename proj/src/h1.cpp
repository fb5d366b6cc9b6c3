#include "kerind/h1.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "kerind/zlin.hpp"

namespace kerind {

namespace {

std::vector<Elem> table_key(const Cocycle& c) {
    std::vector<Elem> key;
    for (const auto& v : c.values) key.insert(key.end(), v.begin(), v.end());
    return key;
}

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

// Full value table from values on the generators, extended along a BFS
// spanning tree by d(p g_i) = d(p)^{g_i} d(g_i).
Cocycle extend_from_generators(const CoeffGroup& view, const std::vector<XElem>& gen_values) {
    const Group& g = view.acting_group();
    const auto& gens = g.generators();
    Cocycle c{view, std::vector<XElem>(g.size())};
    c.values[0] = view.identity();
    std::vector<char> known(g.size(), 0);
    known[0] = 1;
    std::vector<GElem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        GElem p = queue[head];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            GElem q = g.op(p, gens[i]);
            if (known[q]) continue;
            known[q] = 1;
            c.values[q] = view.mul(view.act(gens[i], c.values[p]), gen_values[i]);
            queue.push_back(q);
        }
    }
    return c;
}

// Twisted norm along a cyclic group: x^{g^{m-1}} ... x^g x.
XElem twisted_norm(const CoeffGroup& view, GElem g, std::uint32_t m, const XElem& x) {
    const Group& grp = view.acting_group();
    XElem acc = view.identity();
    for (std::uint32_t i = m; i-- > 0;) acc = view.mul(acc, view.act(grp.pow(g, i), x));
    return acc;
}

}  // namespace

Cocycle unit_cocycle(const CoeffGroup& view) {
    Cocycle c{view, std::vector<XElem>(view.acting_group().size(), view.identity())};
    return c;
}

bool is_cocycle(const Cocycle& c) {
    const Group& g = c.view.acting_group();
    if (c.values.size() != g.size()) return false;
    if (!(c.values[0] == c.view.identity())) return false;
    for (GElem a = 0; a < g.size(); ++a)
        for (GElem b = 0; b < g.size(); ++b) {
            XElem rhs = c.view.mul(c.view.act(b, c.values[a]), c.values[b]);
            if (!(c.values[g.op(a, b)] == rhs)) return false;
        }
    return true;
}

bool is_unit_table(const Cocycle& c) {
    const XElem id = c.view.identity();
    return std::all_of(c.values.begin(), c.values.end(), [&](const XElem& v) { return v == id; });
}

Cocycle twisted_conjugate(const XElem& x, const Cocycle& e) {
    Cocycle d{e.view, std::vector<XElem>(e.values.size())};
    const XElem xinv = e.view.inv(x);
    for (GElem g = 0; g < e.values.size(); ++g)
        d.values[g] = e.view.mul(e.view.mul(e.view.act(g, x), e.values[g]), xinv);
    return d;
}

std::vector<Cocycle> cocycles_cyclic(const CoeffGroup& view, const H1Caps& caps) {
    const Group& g = view.acting_group();
    GElem c = g.canonical_generator();
    if (g.order(c) != g.size()) throw std::invalid_argument("cocycles_cyclic needs a cyclic group");
    const auto* xs = view.enumerate(caps.x_cap);
    if (!xs) throw std::length_error("coefficient group enumeration cap exceeded");
    const std::uint32_t m = g.order(c);
    std::vector<Cocycle> out;
    const XElem id = view.identity();
    for (const XElem& x : *xs) {
        if (!(twisted_norm(view, c, m, x) == id)) continue;
        // expand to the full table: d(c^k) = d(c^{k-1})^c d(c)
        Cocycle co{view, std::vector<XElem>(g.size())};
        co.values[0] = id;
        XElem acc = id;
        GElem e = 0;
        for (std::uint32_t k = 1; k < m; ++k) {
            acc = view.mul(view.act(c, acc), x);
            e = g.op(e, c);
            co.values[e] = acc;
        }
        out.push_back(std::move(co));
    }
    return out;
}

std::vector<Cocycle> enumerate_cocycles(const CoeffGroup& view, const H1Caps& caps) {
    const Group& g = view.acting_group();
    const auto& gens = g.generators();
    const auto* xs = view.enumerate(caps.x_cap);
    if (!xs) throw std::length_error("coefficient group enumeration cap exceeded");

    // Norm prefilter per generator: d(g_i) must satisfy the cyclic condition
    // along <g_i> because d(g_i^{ord}) = d(1) = 1.
    std::vector<std::vector<XElem>> eligible(gens.size());
    const XElem id = view.identity();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::uint32_t m = g.order(gens[i]);
        for (const XElem& x : *xs)
            if (twisted_norm(view, gens[i], m, x) == id) eligible[i].push_back(x);
    }

    std::vector<Cocycle> out;
    for (const auto& e : eligible)
        if (e.empty()) return out;
    std::vector<std::size_t> pick(gens.size(), 0);
    for (;;) {
        std::vector<XElem> gv(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) gv[i] = eligible[i][pick[i]];
        Cocycle c = extend_from_generators(view, gv);
        if (is_cocycle(c)) out.push_back(std::move(c));
        bool done = true;
        std::size_t k = gens.size();
        while (k-- > 0) {
            if (++pick[k] < eligible[k].size()) {
                done = false;
                break;
            }
            pick[k] = 0;
        }
        if (done) return out;
    }
}

// ---------------------------------------------------------------------------
// witness search

namespace {

// Additive endomorphism matrices on the coordinate representation of S.
ZMat mul_matrix(const Ring& ring, Elem s) {
    const auto& mods = ring.additive_moduli();
    const std::size_t c = mods.size();
    ZMat m(c, c);
    for (std::size_t u = 0; u < c; ++u) {
        std::vector<long> basis(c, 0);
        basis[u] = 1;
        auto col = ring.elem_coords(ring.mul(s, ring.coords_elem(basis)));
        for (std::size_t w = 0; w < c; ++w) m.at(w, u) = col[w];
    }
    return m;
}

ZMat aut_matrix(const Ring& ring, const std::vector<Elem>& table) {
    const auto& mods = ring.additive_moduli();
    const std::size_t c = mods.size();
    ZMat m(c, c);
    for (std::size_t u = 0; u < c; ++u) {
        std::vector<long> basis(c, 0);
        basis[u] = 1;
        auto col = ring.elem_coords(table[ring.coords_elem(basis)]);
        for (std::size_t w = 0; w < c; ++w) m.at(w, u) = col[w];
    }
    return m;
}

bool witness_ok(const CoeffGroup& view, const Matrix& x) {
    switch (view.kind()) {
        case CoeffKind::SL:
            return x.det() == view.ring().one();
        case CoeffKind::GL:
        case CoeffKind::U:
            return view.ring().is_unit(x.det());
        default:
            return false;
    }
}

// Solve d(g) x = x^g e(g) on the generators as an additive congruence
// system; scan the finite solution subgroup for a group-member witness.
WitnessResult cohomologous_linear(const Cocycle& d, const Cocycle& e, const H1Caps& caps) {
    const CoeffGroup& view = d.view;
    const Ring& ring = view.ring();
    const Action& act = view.action();
    const Group& grp = act.group();
    const auto& gens = grp.generators();
    const auto& mods = ring.additive_moduli();
    const std::size_t cs = mods.size();
    const std::uint32_t n = view.level();
    const std::size_t ncols = std::size_t(n) * n * cs;
    const std::size_t nrows = gens.size() * std::size_t(n) * n * cs;

    ZMat a(nrows, ncols);
    std::vector<long> row_mods(nrows), col_mods(ncols);
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t l = 0; l < n; ++l)
            for (std::size_t u = 0; u < cs; ++u) col_mods[(std::size_t(k) * n + l) * cs + u] = mods[u];

    for (std::size_t t = 0; t < gens.size(); ++t) {
        const GElem g = gens[t];
        const Matrix dg = view.to_matrix(d.values[g]);
        const Matrix eg = view.to_matrix(e.values[g]);
        const ZMat ag = aut_matrix(ring, act.table(g));
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                const std::size_t row0 = ((t * n + i) * n + j) * cs;
                for (std::size_t w = 0; w < cs; ++w) row_mods[row0 + w] = mods[w];
                // + sum_k Mul(d(g)_{ik}) x_{kj}
                for (std::uint32_t k = 0; k < n; ++k) {
                    const ZMat mm = mul_matrix(ring, dg.at(i, k));
                    const std::size_t col0 = (std::size_t(k) * n + j) * cs;
                    for (std::size_t w = 0; w < cs; ++w)
                        for (std::size_t u = 0; u < cs; ++u) a.at(row0 + w, col0 + u) += mm.at(w, u);
                }
                // - sum_k Mul(e(g)_{kj}) Aut(g) x_{ik}
                for (std::uint32_t k = 0; k < n; ++k) {
                    const ZMat mm = mul_matrix(ring, eg.at(k, j)) * ag;
                    const std::size_t col0 = (std::size_t(i) * n + k) * cs;
                    for (std::size_t w = 0; w < cs; ++w)
                        for (std::size_t u = 0; u < cs; ++u) a.at(row0 + w, col0 + u) -= mm.at(w, u);
                }
            }
    }

    FiniteSolutionGroup sol = solve_congruence_kernel(a, row_mods, col_mods);
    if (sol.size > caps.solution_cap) return {SearchStatus::Capped, {}};

    // enumerate sum t_i gen_i with digits t_i < ord_i
    const std::size_t k = sol.gens.size();
    std::vector<std::uint64_t> digits(k, 0);
    std::vector<long> cur(ncols, 0);
    auto coords_to_matrix = [&](const std::vector<long>& co) {
        Matrix x(ring, n);
        std::vector<long> ec(cs);
        for (std::uint32_t kk = 0; kk < n; ++kk)
            for (std::uint32_t l = 0; l < n; ++l) {
                for (std::size_t u = 0; u < cs; ++u) ec[u] = co[(std::size_t(kk) * n + l) * cs + u];
                x.at(kk, l) = ring.coords_elem(ec);
            }
        return x;
    };
    auto recompute = [&] {
        std::fill(cur.begin(), cur.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (digits[i] == 0) continue;
            for (std::size_t c = 0; c < ncols; ++c) {
                long g = long(mpz_class(sol.gens[i][c] * digits[i] % col_mods[c]).get_si());
                cur[c] = (cur[c] + g) % col_mods[c];
            }
        }
    };
    for (;;) {
        Matrix x = coords_to_matrix(cur);
        if (witness_ok(view, x) && twisted_conjugate(x.entries(), e) == d)
            return {SearchStatus::Found, x.entries()};
        // increment
        std::size_t p = k;
        bool done = true;
        while (p-- > 0) {
            if (++digits[p] < sol.orders[p]) {
                if (p == k - 1) {
                    for (std::size_t c = 0; c < ncols; ++c)
                        cur[c] = (cur[c] + long(sol.gens[p][c].get_si())) % col_mods[c];
                } else {
                    recompute();
                }
                done = false;
                break;
            }
            digits[p] = 0;
        }
        if (done) break;
    }
    return {SearchStatus::None, {}};
}

}  // namespace

WitnessResult cohomologous(const Cocycle& d, const Cocycle& e, const H1Caps& caps,
                           const std::vector<XElem>* hints) {
    if (d.values == e.values) return {SearchStatus::Found, d.view.identity()};
    const CoeffGroup& view = d.view;
    if (hints) {
        for (const XElem& x : *hints) {
            if (x.size() != view.identity().size() || !view.is_member(x)) continue;
            if (twisted_conjugate(x, e).values == d.values) return {SearchStatus::Found, x};
        }
    }
    if (view.matrix_kind() && view.ring().is_presented() && !view.ring().is_zero_ring()) {
        WitnessResult r = cohomologous_linear(d, e, caps);
        if (r.status != SearchStatus::Capped) return r;
    }
    const auto* xs = view.enumerate(caps.x_cap);
    if (xs) {
        for (const XElem& x : *xs)
            if (twisted_conjugate(x, e) == d) return {SearchStatus::Found, x};
        return {SearchStatus::None, {}};
    }
    return {SearchStatus::Capped, {}};
}

// ---------------------------------------------------------------------------
// classes

CohClass make_class(const Cocycle& c, const H1Caps& caps) {
    const auto* xs = c.view.enumerate(caps.x_cap);
    if (!xs) return {c, false, std::nullopt, c.view.identity()};
    Cocycle best = c;
    auto best_key = table_key(c);
    XElem best_witness = c.view.identity();
    bool neutral = is_unit_table(c);
    for (const XElem& x : *xs) {
        Cocycle t = twisted_conjugate(x, c);
        if (is_unit_table(t)) neutral = true;
        auto key = table_key(t);
        if (key < best_key) {
            best = std::move(t);
            best_key = std::move(key);
            best_witness = x;
        }
    }
    return {std::move(best), true, neutral, std::move(best_witness)};
}

std::vector<CohClass> h1_classes(const CoeffGroup& view, const H1Caps& caps) {
    std::vector<Cocycle> zs = view.acting_group().is_cyclic() ? cocycles_cyclic(view, caps)
                                                              : enumerate_cocycles(view, caps);
    const auto* xs = view.enumerate(caps.x_cap);
    if (!xs) throw std::length_error("coefficient group enumeration cap exceeded");

    std::unordered_map<std::vector<Elem>, std::size_t, VecHash> index;
    index.reserve(zs.size() * 2);
    for (std::size_t i = 0; i < zs.size(); ++i) index.emplace(table_key(zs[i]), i);

    std::vector<char> visited(zs.size(), 0);
    std::vector<CohClass> out;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (visited[i]) continue;
        Cocycle best = zs[i];
        auto best_key = table_key(best);
        bool neutral = is_unit_table(zs[i]);
        for (const XElem& x : *xs) {
            Cocycle t = twisted_conjugate(x, zs[i]);
            auto key = table_key(t);
            auto it = index.find(key);
            if (it == index.end()) throw std::logic_error("twisted conjugate left Z^1");
            visited[it->second] = 1;
            if (is_unit_table(t)) neutral = true;
            if (key < best_key) {
                best = std::move(t);
                best_key = std::move(key);
            }
        }
        out.push_back(CohClass{std::move(best), true, neutral, std::nullopt});
    }
    std::sort(out.begin(), out.end(), [](const CohClass& a, const CohClass& b) {
        return table_key(a.rep) < table_key(b.rep);
    });
    return out;
}

SearchStatus class_neutral(CohClass& a, const H1Caps& caps) {
    if (a.neutral) return SearchStatus::Found;
    if (a.rep.view.action_is_trivial()) {
        // under a trivial action the neutral class consists of the unit
        // cocycle alone, so any representative decides exactly
        a.neutral = is_unit_table(a.rep);
        return SearchStatus::Found;
    }
    WitnessResult r = cohomologous(a.rep, unit_cocycle(a.rep.view), caps);
    if (r.status == SearchStatus::Capped) return SearchStatus::Capped;
    a.neutral = (r.status == SearchStatus::Found);
    return SearchStatus::Found;
}

SearchStatus class_equal(const CohClass& a, const CohClass& b, const H1Caps& caps) {
    if (a.level() != b.level()) throw std::invalid_argument("class_equal needs equal levels");
    if (a.canonical && b.canonical)
        return table_key(a.rep) == table_key(b.rep) ? SearchStatus::Found : SearchStatus::None;
    WitnessResult r = cohomologous(a.rep, b.rep, caps);
    return r.status;
}

CohClass restrict_class(const CohClass& a, const Subgroup& h, const H1Caps& caps) {
    const CoeffGroup& view = a.rep.view;
    auto sub = view.acting_group().as_group(h);
    CoeffGroup target = view.restricted(sub);
    Cocycle c{target, {}};
    c.values.reserve(h.size());
    for (GElem i = 0; i < sub.group.size(); ++i) c.values.push_back(a.rep.values[sub.embed[i]]);
    if (!is_cocycle(c)) throw std::logic_error("restricted table is not a cocycle");
    return make_class(c, caps);
}

CohClass inflate_class(const CohClass& a, const CoeffGroup& target_view,
                       const std::vector<GElem>& proj, const H1Caps& caps) {
    const Group& g = target_view.acting_group();
    if (proj.size() != g.size()) throw std::invalid_argument("projection table size");
    Cocycle c{target_view, std::vector<XElem>(g.size())};
    for (GElem e = 0; e < g.size(); ++e) c.values[e] = a.rep.values[proj[e]];
    // the coefficients must be fixed by the kernel of the projection
    for (GElem e = 0; e < g.size(); ++e)
        if (proj[e] == 0)
            for (const XElem& v : c.values)
                if (!(target_view.act(e, v) == v))
                    throw std::invalid_argument("inflation coefficients are not N-fixed");
    if (!is_cocycle(c)) throw std::invalid_argument("inflated table is not a cocycle");
    return make_class(c, caps);
}

RhoResult rho_subgroup(const CohClass& a, const Subgroup& h, const H1Caps& caps) {
    const CoeffGroup& view = a.rep.view;
    const Action& act = view.action();
    auto sub = act.group().as_group(h);
    ResidualRing res = act.residual(h);
    Action tact = Action::trivial(sub.group, res.quotient.ring, false);
    CoeffGroup target = (view.kind() == CoeffKind::U) ? CoeffGroup::units(tact)
                                                      : CoeffGroup::gl(tact, view.level());
    Cocycle c{target, {}};
    bool neutral = true;
    const Matrix id = Matrix::identity(res.quotient.ring, view.level());
    for (GElem i = 0; i < sub.group.size(); ++i) {
        Matrix m = view.to_matrix(a.rep.values[sub.embed[i]])
                       .map_ring(res.quotient.ring, res.quotient.proj);
        if (!(m == id)) neutral = false;
        c.values.push_back(m.entries());
    }
    if (!is_cocycle(c)) throw std::logic_error("rho_subgroup image is not a cocycle");
    RhoResult out;
    out.image = make_class(c, caps);
    out.image.neutral = neutral;  // exact: trivial target action
    out.status = SearchStatus::Found;
    out.neutral = neutral;
    return out;
}

RhoResult rho_maximal(const CohClass& a, std::size_t maximal_index, RhoVariant variant,
                      const H1Caps& caps) {
    const CoeffGroup& view = a.rep.view;
    const Action& act = view.action();
    const auto& data = act.inertia_table().at(maximal_index);
    const Subgroup& hsub = (variant == RhoVariant::Inertia) ? data.inertia : data.decomposition;
    auto sub = act.group().as_group(hsub);
    QuotientRing q = act.ring().quotient(data.maximal_ideal);

    std::vector<std::vector<Elem>> tabs;
    for (GElem hg : sub.group.generators()) {
        const GElem parent = sub.embed[hg];
        std::vector<Elem> t(q.ring.size());
        for (Elem e = 0; e < q.ring.size(); ++e) t[e] = q.proj[act.act(parent, q.section[e])];
        tabs.push_back(std::move(t));
    }
    Action tact = Action::make(sub.group, q.ring, std::move(tabs), false);
    CoeffGroup target = (view.kind() == CoeffKind::U) ? CoeffGroup::units(tact)
                                                      : CoeffGroup::gl(tact, view.level());
    Cocycle c{target, {}};
    for (GElem i = 0; i < sub.group.size(); ++i)
        c.values.push_back(
            view.to_matrix(a.rep.values[sub.embed[i]]).map_ring(q.ring, q.proj).entries());
    if (!is_cocycle(c)) throw std::logic_error("rho_maximal image is not a cocycle");

    RhoResult out;
    out.image = make_class(c, caps);
    SearchStatus st = class_neutral(out.image, caps);
    out.status = st == SearchStatus::Capped ? SearchStatus::Capped : SearchStatus::Found;
    out.neutral = out.image.neutral.value_or(false);
    return out;
}

bool congruence_kernel_test(const CohClass& a) {
    const CoeffGroup& view = a.rep.view;
    const Action& act = view.action();
    const Group& g = act.group();
    const Ring& s = act.ring();
    const std::uint32_t n = view.level();
    for (GElem e = 0; e < g.size(); ++e) {
        Ideal j = act.j_ideal(g.closure({e}));
        const Matrix m = view.to_matrix(a.rep.values[e]);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t k = 0; k < n; ++k) {
                Elem diff = s.sub(m.at(i, k), i == k ? s.one() : s.zero());
                if (!j.contains(diff)) return false;
            }
    }
    return true;
}

CohClass det_push(const CohClass& a, const H1Caps& caps) {
    const CoeffGroup& view = a.rep.view;
    CoeffGroup target = CoeffGroup::units(view.action());
    Cocycle c{target, {}};
    for (const XElem& v : a.rep.values) c.values.push_back({view.to_matrix(v).det()});
    if (!is_cocycle(c)) throw std::logic_error("determinant image is not a cocycle");
    return make_class(c, caps);
}

CohClass unit_embed(const CohClass& a, const H1Caps& caps) {
    const CoeffGroup& view = a.rep.view;
    if (view.kind() != CoeffKind::U) throw std::invalid_argument("unit_embed expects a U-class");
    CoeffGroup target = CoeffGroup::gl(view.action(), 1);
    Cocycle c{target, a.rep.values};
    return make_class(c, caps);
}

RhoResult radical_push(const CohClass& a, const H1Caps& caps) {
    const CoeffGroup& view = a.rep.view;
    const Action& act = view.action();
    QuotientRing q = act.ring().quotient(act.ring().nilradical());
    std::vector<std::vector<Elem>> tabs;
    for (GElem gg : act.group().generators()) {
        std::vector<Elem> t(q.ring.size());
        for (Elem e = 0; e < q.ring.size(); ++e) t[e] = q.proj[act.act(gg, q.section[e])];
        tabs.push_back(std::move(t));
    }
    Action tact = Action::make(act.group(), q.ring, std::move(tabs), false);
    CoeffGroup target = (view.kind() == CoeffKind::U) ? CoeffGroup::units(tact)
                                                      : CoeffGroup::gl(tact, view.level());
    Cocycle c{target, {}};
    for (const XElem& v : a.rep.values)
        c.values.push_back(view.to_matrix(v).map_ring(q.ring, q.proj).entries());
    if (!is_cocycle(c)) throw std::logic_error("radical reduction is not a cocycle");
    RhoResult out;
    out.image = make_class(c, caps);
    SearchStatus st = class_neutral(out.image, caps);
    out.status = st == SearchStatus::Capped ? SearchStatus::Capped : SearchStatus::Found;
    out.neutral = out.image.neutral.value_or(false);
    return out;
}

CohClass add_classes(const CohClass& a, const CohClass& b, const H1Caps& caps) {
    const CoeffGroup& va = a.rep.view;
    const CoeffGroup& vb = b.rep.view;
    if (va.kind() != vb.kind() || (va.kind() != CoeffKind::GL && va.kind() != CoeffKind::SL))
        throw std::invalid_argument("add_classes needs two GL-type (or two SL-type) classes");
    if (!va.ring().same_as(vb.ring()))
        throw std::invalid_argument("add_classes needs classes over the same ring");
    CoeffGroup target = va.at_level(va.level() + vb.level());
    Cocycle c{target, {}};
    for (GElem g = 0; g < va.acting_group().size(); ++g)
        c.values.push_back(
            Matrix::diag_blocks(va.to_matrix(a.rep.values[g]), vb.to_matrix(b.rep.values[g]))
                .entries());
    if (!is_cocycle(c)) throw std::logic_error("block sum is not a cocycle");
    return make_class(c, caps);
}

StableResult stable_equal(const CohClass& a, const CohClass& b, const H1Caps& caps,
                          const std::vector<XElem>* hints) {
    if (a.rep.view.kind() == CoeffKind::U && b.rep.view.kind() == CoeffKind::U)
        return stable_equal(unit_embed(a, caps), unit_embed(b, caps), caps, hints);
    const CoeffGroup& va = a.rep.view;
    const CoeffGroup& vb = b.rep.view;
    if (va.kind() != vb.kind()) throw std::invalid_argument("stable_equal designation mismatch");
    bool capped = false;
    const std::uint32_t lo = std::max(a.level(), b.level());
    for (std::uint32_t L = lo; L <= std::max(lo, caps.level_bound); ++L) {
        CoeffGroup view = va.at_level(L);
        auto padded = [&](const CohClass& c) {
            Cocycle p{view, {}};
            for (const XElem& v : c.rep.values)
                p.values.push_back(c.rep.view.to_matrix(v).pad(L).entries());
            return p;
        };
        Cocycle pa = padded(a), pb = padded(b);
        WitnessResult r = cohomologous(pa, pb, caps, hints);
        if (r.status == SearchStatus::Found) return {StableVerdict::Equal, L, r.witness};
        if (r.status == SearchStatus::Capped) capped = true;
    }
    return {capped ? StableVerdict::SearchCapped : StableVerdict::NotEqualUpToBound, 0, {}};
}

UnitVerdict is_unit_class(const CohClass& a, const std::vector<CohClass>& candidates,
                          const H1Caps& caps) {
    const CoeffGroup& view = a.rep.view;
    if (!view.matrix_kind()) throw std::invalid_argument("is_unit_class expects a GL-type class");
    UnitVerdict out;
    out.star = view.action().has_star();
    CohClass ga = (view.kind() == CoeffKind::U) ? unit_embed(a, caps) : a;
    out.congruence = congruence_kernel_test(ga);

    CohClass neutral1 = make_class(unit_cocycle(ga.rep.view.at_level(1)), caps);
    bool capped = false;
    for (const CohClass& b : candidates) {
        CohClass gb = (b.rep.view.kind() == CoeffKind::U) ? unit_embed(b, caps) : b;
        CohClass sum = add_classes(ga, gb, caps);
        StableResult r = stable_equal(sum, neutral1, caps);
        if (r.verdict == StableVerdict::Equal) {
            out.inverse_search = SearchStatus::Found;
            out.inverse = b;
            return out;
        }
        if (r.verdict == StableVerdict::SearchCapped) capped = true;
    }
    out.inverse_search = capped ? SearchStatus::Capped : SearchStatus::None;
    return out;
}

}  // namespace kerind
