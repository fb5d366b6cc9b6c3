#include "kerind/gview.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kerind {

struct CoeffGroup::Impl {
    CoeffKind kind = CoeffKind::GL;
    std::uint32_t n = 1;

    // matrix kinds
    Action action;

    // abstract kind
    Group acting;
    Group x;
    std::vector<std::vector<GElem>> xact;  // per acting-group element

    mutable std::mutex enum_mutex;
    mutable std::optional<std::vector<XElem>> enum_cache;
    mutable bool enum_done = false;
    mutable std::uint64_t enum_cap_tried = 0;
};

namespace {

void extend_xaction(const Group& g, const Group& x, const std::vector<std::vector<GElem>>& gen_tables,
                    std::vector<std::vector<GElem>>& out) {
    const auto& gens = g.generators();
    if (gen_tables.size() != gens.size())
        throw std::invalid_argument("one coefficient action table per generator expected");
    for (const auto& t : gen_tables) {
        if (t.size() != x.size()) throw std::invalid_argument("coefficient action table size");
        std::vector<char> seen(x.size(), 0);
        for (GElem a = 0; a < x.size(); ++a) {
            if (t[a] >= x.size() || seen[t[a]])
                throw std::invalid_argument("coefficient action table is not a bijection");
            seen[t[a]] = 1;
        }
        for (GElem a = 0; a < x.size(); ++a)
            for (GElem b = 0; b < x.size(); ++b)
                if (t[x.op(a, b)] != x.op(t[a], t[b]))
                    throw std::invalid_argument("coefficient action is not an automorphism");
    }
    out.assign(g.size(), {});
    std::vector<GElem> id(x.size());
    for (GElem a = 0; a < x.size(); ++a) id[a] = a;
    out[0] = id;
    std::vector<char> known(g.size(), 0);
    known[0] = 1;
    std::deque<GElem> queue{0};
    while (!queue.empty()) {
        GElem p = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            GElem q = g.op(p, gens[i]);
            if (known[q]) continue;
            known[q] = 1;
            std::vector<GElem> t(x.size());
            for (GElem a = 0; a < x.size(); ++a) t[a] = gen_tables[i][out[p][a]];
            out[q] = std::move(t);
            queue.push_back(q);
        }
    }
    for (GElem g1 = 0; g1 < g.size(); ++g1)
        for (GElem g2 = 0; g2 < g.size(); ++g2) {
            const auto& t1 = out[g1];
            const auto& t2 = out[g2];
            const auto& t12 = out[g.op(g1, g2)];
            for (GElem a = 0; a < x.size(); ++a)
                if (t12[a] != t2[t1[a]])
                    throw std::invalid_argument("coefficient action tables are not a homomorphism");
        }
}

}  // namespace

CoeffGroup CoeffGroup::gl(Action act, std::uint32_t n) {
    auto im = std::make_shared<Impl>();
    im->kind = CoeffKind::GL;
    im->n = n;
    im->action = std::move(act);
    return CoeffGroup(std::move(im));
}

CoeffGroup CoeffGroup::sl(Action act, std::uint32_t n) {
    auto im = std::make_shared<Impl>();
    im->kind = CoeffKind::SL;
    im->n = n;
    im->action = std::move(act);
    return CoeffGroup(std::move(im));
}

CoeffGroup CoeffGroup::units(Action act) {
    auto im = std::make_shared<Impl>();
    im->kind = CoeffKind::U;
    im->n = 1;
    im->action = std::move(act);
    return CoeffGroup(std::move(im));
}

CoeffGroup CoeffGroup::abstract(Group g, Group x, std::vector<std::vector<GElem>> gen_tables) {
    auto im = std::make_shared<Impl>();
    im->kind = CoeffKind::Abstract;
    im->n = 0;
    im->acting = std::move(g);
    im->x = std::move(x);
    extend_xaction(im->acting, im->x, gen_tables, im->xact);
    return CoeffGroup(std::move(im));
}

CoeffKind CoeffGroup::kind() const { return impl_->kind; }
std::uint32_t CoeffGroup::level() const { return impl_->n; }

const Group& CoeffGroup::acting_group() const {
    return impl_->kind == CoeffKind::Abstract ? impl_->acting : impl_->action.group();
}

const Action& CoeffGroup::action() const {
    if (impl_->kind == CoeffKind::Abstract) throw std::domain_error("abstract coefficients have no ring action");
    return impl_->action;
}

const Ring& CoeffGroup::ring() const { return action().ring(); }

XElem CoeffGroup::identity() const {
    if (impl_->kind == CoeffKind::Abstract) return {0};
    return from_matrix(Matrix::identity(ring(), impl_->n));
}

XElem CoeffGroup::mul(const XElem& a, const XElem& b) const {
    if (impl_->kind == CoeffKind::Abstract) return {impl_->x.op(a[0], b[0])};
    return from_matrix(to_matrix(a) * to_matrix(b));
}

XElem CoeffGroup::inv(const XElem& a) const {
    if (impl_->kind == CoeffKind::Abstract) return {impl_->x.inv(a[0])};
    return from_matrix(to_matrix(a).inverse());
}

XElem CoeffGroup::act(GElem g, const XElem& a) const {
    if (impl_->kind == CoeffKind::Abstract) return {impl_->xact[g][a[0]]};
    XElem out(a.size());
    const auto& t = impl_->action.table(g);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = t[a[i]];
    return out;
}

bool CoeffGroup::is_member(const XElem& a) const {
    switch (impl_->kind) {
        case CoeffKind::Abstract:
            return a.size() == 1 && a[0] < impl_->x.size();
        case CoeffKind::SL:
            return to_matrix(a).det() == ring().one();
        case CoeffKind::GL:
        case CoeffKind::U:
            return ring().is_unit(to_matrix(a).det());
    }
    return false;
}

bool CoeffGroup::action_is_trivial() const {
    if (impl_->kind == CoeffKind::Abstract) {
        for (const auto& t : impl_->xact)
            for (GElem a = 0; a < impl_->x.size(); ++a)
                if (t[a] != a) return false;
        return true;
    }
    const Action& act = impl_->action;
    for (GElem g = 0; g < act.group().size(); ++g)
        for (Elem s = 0; s < act.ring().size(); ++s)
            if (act.act(g, s) != s) return false;
    return true;
}

const std::vector<XElem>* CoeffGroup::enumerate(std::uint64_t cap) const {
    std::lock_guard<std::mutex> lock(impl_->enum_mutex);
    // a failed attempt is retried when a later caller allows a larger cap
    if (!impl_->enum_done || (!impl_->enum_cache && cap > impl_->enum_cap_tried)) {
        impl_->enum_done = true;
        impl_->enum_cap_tried = cap;
        try {
            std::vector<XElem> out;
            if (impl_->kind == CoeffKind::Abstract) {
                for (GElem a = 0; a < impl_->x.size(); ++a) out.push_back({a});
            } else {
                auto mats = (impl_->kind == CoeffKind::SL) ? enumerate_sl(ring(), impl_->n, cap)
                                                           : enumerate_gl(ring(), impl_->n, cap);
                out.reserve(mats.size());
                for (const auto& m : mats) out.push_back(m.entries());
            }
            impl_->enum_cache = std::move(out);
        } catch (const std::length_error&) {
            impl_->enum_cache = std::nullopt;
        }
    }
    if (!impl_->enum_cache) return nullptr;
    return &*impl_->enum_cache;
}

Matrix CoeffGroup::to_matrix(const XElem& a) const {
    return Matrix(ring(), impl_->n, a);
}

XElem CoeffGroup::from_matrix(const Matrix& m) const { return m.entries(); }

std::string CoeffGroup::x_str(const XElem& a) const {
    if (impl_->kind == CoeffKind::Abstract) {
        std::ostringstream os;
        os << "x" << a[0];
        return os.str();
    }
    if (impl_->kind == CoeffKind::U) return ring().elem_str(a[0]);
    return to_matrix(a).str();
}

CoeffGroup CoeffGroup::at_level(std::uint32_t n) const {
    switch (impl_->kind) {
        case CoeffKind::GL:
            return gl(impl_->action, n);
        case CoeffKind::SL:
            return sl(impl_->action, n);
        default:
            throw std::domain_error("only GL/SL views stabilize across levels");
    }
}

CoeffGroup CoeffGroup::restricted(const SubgroupEmbedding& sub) const {
    if (impl_->kind == CoeffKind::Abstract) {
        std::vector<std::vector<GElem>> tabs;
        for (GElem hg : sub.group.generators()) tabs.push_back(impl_->xact[sub.embed[hg]]);
        return abstract(sub.group, impl_->x, std::move(tabs));
    }
    const Action& act = impl_->action;
    std::vector<std::vector<Elem>> tabs;
    for (GElem hg : sub.group.generators()) tabs.push_back(act.table(sub.embed[hg]));
    Action sact = Action::make(sub.group, act.ring(), std::move(tabs), false);
    switch (impl_->kind) {
        case CoeffKind::GL:
            return gl(sact, impl_->n);
        case CoeffKind::SL:
            return sl(sact, impl_->n);
        default:
            return units(sact);
    }
}

}  // namespace kerind
