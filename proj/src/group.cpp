#include "kerind/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kerind {

struct Group::Impl {
    std::uint32_t n = 0;
    std::vector<GElem> table;  // n x n
    std::vector<GElem> inv;
    std::vector<std::uint32_t> orders;

    mutable std::once_flag gens_flag, sub_flag;
    mutable std::vector<GElem> gens;
    mutable std::vector<Subgroup> subs, cyclics;

    GElem op(GElem a, GElem b) const { return table[std::size_t(a) * n + b]; }
};

namespace {

void verify_group(const Group::Impl& im) {
    const std::uint32_t n = im.n;
    auto fail = [](const char* what) {
        throw std::invalid_argument(std::string("group table invalid: ") + what);
    };
    for (GElem a = 0; a < n; ++a) {
        if (im.op(0, a) != a || im.op(a, 0) != a) fail("0 is not an identity");
        bool has_inv = false;
        for (GElem b = 0; b < n; ++b) {
            if (im.op(a, b) >= n) fail("entry out of range");
            if (im.op(a, b) == 0 && im.op(b, a) == 0) has_inv = true;
        }
        if (!has_inv) fail("missing inverse");
    }
    for (GElem a = 0; a < n; ++a)
        for (GElem b = 0; b < n; ++b)
            for (GElem c = 0; c < n; ++c)
                if (im.op(im.op(a, b), c) != im.op(a, im.op(b, c))) fail("associativity");
}

std::shared_ptr<Group::Impl> finish(std::shared_ptr<Group::Impl> im) {
    verify_group(*im);
    im->inv.resize(im->n);
    for (GElem a = 0; a < im->n; ++a)
        for (GElem b = 0; b < im->n; ++b)
            if (im->op(a, b) == 0) {
                im->inv[a] = b;
                break;
            }
    im->orders.resize(im->n);
    for (GElem a = 0; a < im->n; ++a) {
        std::uint32_t k = 1;
        GElem x = a;
        while (x != 0) {
            x = im->op(x, a);
            ++k;
        }
        im->orders[a] = k;
    }
    return im;
}

}  // namespace

Group Group::cyclic(std::uint32_t m) {
    auto im = std::make_shared<Impl>();
    im->n = m;
    im->table.resize(std::size_t(m) * m);
    for (GElem a = 0; a < m; ++a)
        for (GElem b = 0; b < m; ++b) im->table[std::size_t(a) * m + b] = (a + b) % m;
    return Group(finish(std::move(im)));
}

Group Group::product(const std::vector<std::uint32_t>& orders) {
    std::uint32_t n = 1;
    for (auto m : orders) n *= m;
    auto decode = [&](GElem x) {
        std::vector<GElem> c(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) {
            c[i] = x % orders[i];
            x /= orders[i];
        }
        return c;
    };
    auto encode = [&](const std::vector<GElem>& c) {
        GElem x = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + c[i];
        return x;
    };
    auto im = std::make_shared<Impl>();
    im->n = n;
    im->table.resize(std::size_t(n) * n);
    for (GElem a = 0; a < n; ++a)
        for (GElem b = 0; b < n; ++b) {
            auto ca = decode(a), cb = decode(b);
            for (std::size_t i = 0; i < orders.size(); ++i) ca[i] = (ca[i] + cb[i]) % orders[i];
            im->table[std::size_t(a) * n + b] = encode(ca);
        }
    return Group(finish(std::move(im)));
}

Group Group::symmetric(std::uint32_t k) {
    if (k > 5) throw std::invalid_argument("symmetric group bound");
    std::vector<std::vector<GElem>> perms;
    std::vector<GElem> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::uint32_t n = std::uint32_t(perms.size());
    auto rank = [&](const std::vector<GElem>& q) {
        return GElem(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    auto im = std::make_shared<Impl>();
    im->n = n;
    im->table.resize(std::size_t(n) * n);
    for (GElem a = 0; a < n; ++a)
        for (GElem b = 0; b < n; ++b) {
            // right action convention: (a*b)(i) = b(a(i))
            std::vector<GElem> c(k);
            for (std::uint32_t i = 0; i < k; ++i) c[i] = perms[b][perms[a][i]];
            im->table[std::size_t(a) * n + b] = rank(c);
        }
    return Group(finish(std::move(im)));
}

Group Group::from_table(std::uint32_t n, std::vector<GElem> table, std::uint32_t order_bound) {
    if (n > order_bound) throw std::invalid_argument("group order above configured bound");
    if (table.size() != std::size_t(n) * n) throw std::invalid_argument("group table size");
    auto im = std::make_shared<Impl>();
    im->n = n;
    im->table = std::move(table);
    return Group(finish(std::move(im)));
}

std::uint32_t Group::size() const { return impl_->n; }
GElem Group::op(GElem a, GElem b) const { return impl_->op(a, b); }
GElem Group::inv(GElem a) const { return impl_->inv[a]; }
std::uint32_t Group::order(GElem a) const { return impl_->orders[a]; }

GElem Group::pow(GElem a, std::uint64_t k) const {
    GElem r = 0;
    k %= order(a);
    while (k--) r = op(r, a);
    return r;
}

Subgroup Group::closure(std::vector<GElem> gens) const {
    std::vector<char> in(size(), 0);
    std::vector<GElem> work;
    auto push = [&](GElem e) {
        if (!in[e]) {
            in[e] = 1;
            work.push_back(e);
        }
    };
    push(0);
    for (GElem g : gens) push(g);
    while (!work.empty()) {
        GElem u = work.back();
        work.pop_back();
        push(impl_->inv[u]);
        for (GElem v = 0; v < size(); ++v)
            if (in[v]) {
                push(op(u, v));
                push(op(v, u));
            }
    }
    Subgroup out;
    for (GElem e = 0; e < size(); ++e)
        if (in[e]) out.push_back(e);
    return out;
}

const std::vector<GElem>& Group::generators() const {
    std::call_once(impl_->gens_flag, [&] {
        std::vector<GElem> gens;
        Subgroup cl{0};
        while (cl.size() < size()) {
            for (GElem g = 1; g < size(); ++g)
                if (!std::binary_search(cl.begin(), cl.end(), g)) {
                    gens.push_back(g);
                    break;
                }
            cl = closure(gens);
        }
        if (gens.empty()) gens.push_back(0);  // trivial group: the identity generates
        impl_->gens = std::move(gens);
    });
    return impl_->gens;
}

const std::vector<Subgroup>& Group::subgroups() const {
    std::call_once(impl_->sub_flag, [&] {
        std::set<Subgroup> cyc;
        for (GElem g = 0; g < size(); ++g) cyc.insert(closure({g}));
        std::set<Subgroup> all(cyc.begin(), cyc.end());
        // every subgroup is a join of cyclic subgroups
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Subgroup> snapshot(all.begin(), all.end());
            for (const auto& h : snapshot)
                for (const auto& c : cyc) {
                    std::vector<GElem> gens = h;
                    gens.insert(gens.end(), c.begin(), c.end());
                    Subgroup j = closure(gens);
                    if (all.insert(j).second) grew = true;
                }
        }
        impl_->subs.assign(all.begin(), all.end());
        std::sort(impl_->subs.begin(), impl_->subs.end(),
                  [](const Subgroup& a, const Subgroup& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a < b;
                  });
        impl_->cyclics.assign(cyc.begin(), cyc.end());
        std::sort(impl_->cyclics.begin(), impl_->cyclics.end(),
                  [](const Subgroup& a, const Subgroup& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a < b;
                  });
    });
    return impl_->subs;
}

const std::vector<Subgroup>& Group::cyclic_subgroups() const {
    subgroups();
    return impl_->cyclics;
}

bool Group::is_normal(const Subgroup& h) const {
    for (GElem g = 0; g < size(); ++g)
        for (GElem x : h) {
            GElem conj = op(op(inv(g), x), g);
            if (!std::binary_search(h.begin(), h.end(), conj)) return false;
        }
    return true;
}

GElem Group::canonical_generator() const {
    GElem best = 0;
    for (GElem g = 0; g < size(); ++g)
        if (order(g) > order(best)) best = g;
    return best;
}

GroupQuotient Group::quotient(const Subgroup& nsub) const {
    if (!is_normal(nsub)) throw std::invalid_argument("quotient by a non-normal subgroup");
    std::vector<GElem> proj(size(), UINT32_MAX);
    std::vector<GElem> reps;
    for (GElem g = 0; g < size(); ++g) {
        if (proj[g] != UINT32_MAX) continue;
        GElem cls = GElem(reps.size());
        reps.push_back(g);
        for (GElem x : nsub) proj[op(g, x)] = cls;
    }
    const std::uint32_t qn = std::uint32_t(reps.size());
    std::vector<GElem> table(std::size_t(qn) * qn);
    for (GElem a = 0; a < qn; ++a)
        for (GElem b = 0; b < qn; ++b) table[std::size_t(a) * qn + b] = proj[op(reps[a], reps[b])];
    GroupQuotient out;
    out.group = from_table(qn, std::move(table));
    out.proj = std::move(proj);
    return out;
}

SubgroupEmbedding Group::as_group(const Subgroup& h) const {
    const std::uint32_t hn = std::uint32_t(h.size());
    std::vector<GElem> index(size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < hn; ++i) index[h[i]] = i;
    std::vector<GElem> table(std::size_t(hn) * hn);
    for (std::uint32_t a = 0; a < hn; ++a)
        for (std::uint32_t b = 0; b < hn; ++b) {
            GElem prod = op(h[a], h[b]);
            if (index[prod] == UINT32_MAX) throw std::invalid_argument("set is not a subgroup");
            table[std::size_t(a) * hn + b] = index[prod];
        }
    SubgroupEmbedding out;
    out.group = from_table(hn, std::move(table));
    out.embed = h;
    return out;
}

}  // namespace kerind
