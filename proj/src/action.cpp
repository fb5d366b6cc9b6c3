#include "kerind/action.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kerind {

struct Action::Impl {
    Group group;
    Ring ring;
    std::vector<std::vector<Elem>> tables;  // per group element
    std::vector<Elem> trace_table;
    std::optional<Elem> witness;

    mutable std::once_flag inv_flag, inertia_flag;
    mutable std::vector<Elem> invariants;
    mutable std::vector<InertiaData> inertia;
};

namespace {

void verify_automorphism(const Ring& s, const std::vector<Elem>& t) {
    auto fail = [](const char* what) {
        throw std::invalid_argument(std::string("action table is not a ring automorphism: ") + what);
    };
    if (t.size() != s.size()) fail("wrong carrier size");
    std::vector<char> seen(s.size(), 0);
    for (Elem a = 0; a < s.size(); ++a) {
        if (t[a] >= s.size()) fail("out of range");
        if (seen[t[a]]) fail("not a bijection");
        seen[t[a]] = 1;
    }
    if (t[s.one()] != s.one()) fail("does not fix 1");
    if (t[s.zero()] != s.zero()) fail("does not fix 0");
    auto check_pair = [&](Elem a, Elem b) {
        if (t[s.add(a, b)] != s.add(t[a], t[b])) fail("not additive");
        if (t[s.mul(a, b)] != s.mul(t[a], t[b])) fail("not multiplicative");
    };
    if (s.size() <= 256) {
        for (Elem a = 0; a < s.size(); ++a)
            for (Elem b = 0; b < s.size(); ++b) check_pair(a, b);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
        for (int i = 0; i < 4000; ++i) check_pair(Elem(pick(rng)), Elem(pick(rng)));
    }
}

}  // namespace

Action Action::make(Group group, Ring ring, std::vector<std::vector<Elem>> generator_tables,
                    bool require_star) {
    const auto& gens = group.generators();
    if (generator_tables.size() != gens.size())
        throw std::invalid_argument("one action table per group generator expected");
    for (const auto& t : generator_tables) verify_automorphism(ring, t);

    auto im = std::make_shared<Impl>();
    im->group = group;
    im->ring = ring;
    im->tables.assign(group.size(), {});

    // identity table, then BFS over right multiplication by generators;
    // right action means sigma_{p*g} = sigma_g o sigma_p
    std::vector<Elem> id(ring.size());
    for (Elem s = 0; s < ring.size(); ++s) id[s] = s;
    im->tables[0] = id;
    std::vector<char> known(group.size(), 0);
    known[0] = 1;
    std::deque<GElem> queue{0};
    while (!queue.empty()) {
        GElem p = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            GElem q = group.op(p, gens[i]);
            if (known[q]) continue;
            known[q] = 1;
            std::vector<Elem> t(ring.size());
            for (Elem s = 0; s < ring.size(); ++s) t[s] = generator_tables[i][im->tables[p][s]];
            im->tables[q] = std::move(t);
            queue.push_back(q);
        }
    }
    if (std::find(known.begin(), known.end(), 0) != known.end())
        throw std::logic_error("generators do not generate the group");

    // homomorphism check on the whole multiplication table
    const bool sample = ring.size() > 256;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> pick(0, ring.size() - 1);
    for (GElem g = 0; g < group.size(); ++g)
        for (GElem h = 0; h < group.size(); ++h) {
            const auto& tg = im->tables[g];
            const auto& th = im->tables[h];
            const auto& tgh = im->tables[group.op(g, h)];
            auto check_at = [&](Elem s) {
                if (tgh[s] != th[tg[s]])
                    throw std::invalid_argument(
                        "action tables do not define a group homomorphism");
            };
            if (sample) {
                for (int i = 0; i < 64; ++i) check_at(Elem(pick(rng)));
            } else {
                for (Elem s = 0; s < ring.size(); ++s) check_at(s);
            }
        }

    im->trace_table.resize(ring.size());
    for (Elem s = 0; s < ring.size(); ++s) {
        Elem acc = ring.zero();
        for (GElem g = 0; g < group.size(); ++g) acc = ring.add(acc, im->tables[g][s]);
        im->trace_table[s] = acc;
    }
    for (Elem s = 0; s < ring.size(); ++s)
        if (im->trace_table[s] == ring.one()) {
            im->witness = s;
            break;
        }
    if (require_star && !im->witness) {
        std::vector<Elem> image(im->trace_table.begin(), im->trace_table.end());
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        std::ostringstream os;
        os << "hypothesis (*) violated: no element of trace 1; trace image = {";
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (i) os << ", ";
            os << ring.elem_str(image[i]);
        }
        os << "}";
        throw std::domain_error(os.str());
    }
    return Action(std::move(im));
}

Action Action::trivial(Group group, Ring ring, bool require_star) {
    std::vector<Elem> id(ring.size());
    for (Elem s = 0; s < ring.size(); ++s) id[s] = s;
    std::vector<std::vector<Elem>> tables(group.generators().size(), id);
    return make(std::move(group), std::move(ring), std::move(tables), require_star);
}

const Group& Action::group() const { return impl_->group; }
const Ring& Action::ring() const { return impl_->ring; }
Elem Action::act(GElem g, Elem s) const { return impl_->tables[g][s]; }
const std::vector<Elem>& Action::table(GElem g) const { return impl_->tables[g]; }

Matrix Action::act_matrix(GElem g, const Matrix& m) const {
    return m.map_entries(impl_->tables[g]);
}

Elem Action::trace(Elem s) const { return impl_->trace_table[s]; }
bool Action::has_star() const { return impl_->witness.has_value(); }

Elem Action::trace_witness() const {
    if (!impl_->witness) throw std::domain_error("hypothesis (*) violated: no trace witness");
    return *impl_->witness;
}

const std::vector<Elem>& Action::invariant_subring() const {
    std::call_once(impl_->inv_flag, [&] {
        const Ring& s = impl_->ring;
        std::vector<Elem> inv;
        const auto& gens = impl_->group.generators();
        for (Elem a = 0; a < s.size(); ++a) {
            bool fixed = true;
            for (GElem g : gens)
                if (impl_->tables[g][a] != a) {
                    fixed = false;
                    break;
                }
            if (fixed) inv.push_back(a);
        }
        // closure sanity: R is a subring
        auto in = [&](Elem x) { return std::binary_search(inv.begin(), inv.end(), x); };
        for (Elem a : inv)
            for (Elem b : inv)
                if (!in(s.add(a, b)) || !in(s.mul(a, b)))
                    throw std::logic_error("invariants not closed under ring operations");
        impl_->invariants = std::move(inv);
    });
    return impl_->invariants;
}

const std::vector<InertiaData>& Action::inertia_table() const {
    std::call_once(impl_->inertia_flag, [&] {
        std::vector<InertiaData> out;
        if (!impl_->ring.is_zero_ring()) {
            for (const auto& md : impl_->ring.maximal_ideals()) {
                InertiaData d;
                d.maximal_ideal = md.ideal;
                d.decomposition = decomposition_group(md.ideal);
                d.inertia = inertia_group(md.ideal);
                out.push_back(std::move(d));
            }
        }
        impl_->inertia = std::move(out);
    });
    return impl_->inertia;
}

Subgroup Action::decomposition_group(const Ideal& m) const {
    Subgroup out;
    for (GElem g = 0; g < impl_->group.size(); ++g)
        if (m.map_through(impl_->tables[g]) == m) out.push_back(g);
    return out;
}

Subgroup Action::inertia_group(const Ideal& m) const {
    const Ring& s = impl_->ring;
    Subgroup out;
    for (GElem g = 0; g < impl_->group.size(); ++g) {
        bool inert = true;
        for (Elem a = 0; a < s.size() && inert; ++a)
            inert = m.contains(s.sub(impl_->tables[g][a], a));
        if (inert) out.push_back(g);
    }
    return out;
}

Ideal Action::j_ideal(const Subgroup& h) const {
    const auto& table = inertia_table();
    std::optional<Ideal> acc;
    for (const auto& d : table) {
        if (!std::includes(d.inertia.begin(), d.inertia.end(), h.begin(), h.end())) continue;
        acc = acc ? Ideal::intersect(*acc, d.maximal_ideal) : d.maximal_ideal;
    }
    if (!acc) {
        // empty family: unit ideal, so the residual ring is the zero ring
        return Ideal(impl_->ring, {impl_->ring.one()});
    }
    return *acc;
}

ResidualRing Action::residual(const Subgroup& h) const {
    ResidualRing out;
    out.j_ideal = j_ideal(h);
    out.quotient = impl_->ring.quotient(out.j_ideal);
    // the induced H-action on S_H must be trivial
    for (GElem g : h)
        for (Elem s = 0; s < impl_->ring.size(); ++s)
            if (out.quotient.proj[impl_->tables[g][s]] != out.quotient.proj[s])
                throw std::logic_error("induced action on S_H is not trivial");
    return out;
}

bool Action::is_galois() const {
    for (const auto& d : inertia_table())
        if (d.inertia.size() != 1) return false;
    return true;
}

}  // namespace kerind
