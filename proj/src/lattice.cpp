#include "kerind/lattice.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace kerind {

namespace {

// Basis of the column lattice of gens (n x m): columns Uinv_i * d_i.
ZMat image_basis(std::size_t n, const ZMat& gens) {
    if (gens.cols() == 0) return ZMat(n, 0);
    SmithResult s = smith_normal_form(gens);
    ZMat b(n, s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < n; ++i) b.at(i, j) = s.uinv.at(i, j) * s.d.at(j, j);
    return b;
}

}  // namespace

LatticeAction LatticeAction::make(Group group, std::uint32_t rank,
                                  std::vector<ZMat> generator_mats) {
    const auto& gens = group.generators();
    if (generator_mats.size() != gens.size())
        throw std::invalid_argument("one matrix per group generator expected");
    for (const auto& m : generator_mats)
        if (m.rows() != rank || m.cols() != rank)
            throw std::invalid_argument("lattice generator matrix shape");

    LatticeAction act;
    act.group_ = group;
    act.rank_ = rank;
    act.mats_.assign(group.size(), ZMat());
    act.mats_[0] = ZMat::identity(rank);
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
            // right action: row * M_p * M_gen
            act.mats_[q] = act.mats_[p] * generator_mats[i];
            queue.push_back(q);
        }
    }
    for (GElem a = 0; a < group.size(); ++a)
        for (GElem b = 0; b < group.size(); ++b)
            if (!(act.mats_[a] * act.mats_[b] == act.mats_[group.op(a, b)]))
                throw std::invalid_argument("matrices do not define a group homomorphism");
    for (const auto& m : act.mats_) {
        // det = +-1 follows from finite order, but verify via SNF: all
        // invariant factors must be 1
        SmithResult s = smith_normal_form(m);
        if (s.rank != rank || !s.invariants().empty())
            throw std::invalid_argument("lattice matrix is not unimodular");
    }
    return act;
}

LatticeAction LatticeAction::restrict_to(const SubgroupEmbedding& sub) const {
    std::vector<ZMat> gens;
    for (GElem hg : sub.group.generators()) gens.push_back(mats_[sub.embed[hg]]);
    return make(sub.group, rank_, std::move(gens));
}

mpz_class AbelianGroup::order() const {
    if (free_rank != 0) throw std::domain_error("infinite abelian group");
    mpz_class n = 1;
    for (const auto& f : factors) n *= f;
    return n;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    if (trivial()) return "0";
    bool first = true;
    for (const auto& f : factors) {
        if (!first) os << " x ";
        os << "Z/" << f;
        first = false;
    }
    for (std::size_t i = 0; i < free_rank; ++i) {
        if (!first) os << " x ";
        os << "Z";
        first = false;
    }
    return os.str();
}

LatticeH1 h1_lattice(const LatticeAction& act) {
    const Group& g = act.group();
    const std::uint32_t r = act.rank();
    const std::size_t n = std::size_t(r) * g.size();

    // cocycle identity d(ab) - d(a) M_b - d(b) = 0, coordinates row-wise:
    // d(a)_i are unknowns z[a*r + i]; the term d(a) M_b contributes with
    // coefficient M_b[i][j] to coordinate j.
    ZMat sys(std::size_t(g.size()) * g.size() * r, n);
    std::size_t row = 0;
    for (GElem a = 0; a < g.size(); ++a)
        for (GElem b = 0; b < g.size(); ++b) {
            const GElem ab = g.op(a, b);
            const ZMat& mb = act.mat(b);
            for (std::uint32_t j = 0; j < r; ++j, ++row) {
                sys.at(row, std::size_t(ab) * r + j) += 1;
                sys.at(row, std::size_t(b) * r + j) -= 1;
                for (std::uint32_t i = 0; i < r; ++i)
                    sys.at(row, std::size_t(a) * r + i) -= mb.at(i, j);
            }
        }
    ZMat z1 = kernel_basis(sys);

    // coboundaries (a M_g - a)_g for the standard basis rows a = e_i
    ZMat b1(n, r);
    for (std::uint32_t i = 0; i < r; ++i)
        for (GElem e = 0; e < g.size(); ++e) {
            const ZMat& mg = act.mat(e);
            for (std::uint32_t j = 0; j < r; ++j) {
                mpz_class v = mg.at(i, j) - (i == j ? 1 : 0);
                b1.at(std::size_t(e) * r + j, i) = v;
            }
        }

    // express B^1 in Z^1 coordinates and read the quotient structure
    ZMat y(z1.cols(), b1.cols());
    for (std::size_t c = 0; c < b1.cols(); ++c) {
        std::vector<mpz_class> sol;
        if (!lattice_contains(z1, b1.col(c), &sol))
            throw std::logic_error("coboundary outside Z^1");
        for (std::size_t i = 0; i < z1.cols(); ++i) y.at(i, c) = sol[i];
    }
    QuotientStructure q = quotient_structure(z1.cols(), y);
    if (q.free_rank != 0) throw std::logic_error("lattice H^1 must be finite");

    LatticeH1 out;
    out.group.factors = q.factors;
    out.group.free_rank = 0;
    out.z1_basis = z1;
    out.b1_columns = b1;
    for (const auto& gen : q.torsion_gens) {
        std::vector<mpz_class> ambient(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < z1.cols(); ++k) ambient[i] += z1.at(i, k) * gen[k];
        out.gens.push_back(std::move(ambient));
    }

    // |G| annihilates H^1: |G| * gen must be a coboundary combination
    for (const auto& gen : out.gens) {
        ZMat v(n, 1);
        for (std::size_t i = 0; i < n; ++i) v.at(i, 0) = gen[i] * g.size();
        if (!lattice_contains(b1, v)) throw std::logic_error("|G| does not annihilate H^1");
    }
    return out;
}

AbelianGroup h1_cyclic_lattice(const LatticeAction& act, GElem c) {
    const Group& g = act.group();
    const std::uint32_t r = act.rank();
    const std::uint32_t m = g.order(c);

    ZMat norm(r, r);
    GElem e = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        const ZMat& mi = act.mat(e);
        for (std::uint32_t a = 0; a < r; ++a)
            for (std::uint32_t b = 0; b < r; ++b) norm.at(a, b) += mi.at(a, b);
        e = g.op(e, c);
    }
    // row vectors: a * N = 0  <=>  N^T a^T = 0
    ZMat ker = kernel_basis(norm.transpose());
    ZMat diff(r, r);
    const ZMat& mc = act.mat(c);
    for (std::uint32_t a = 0; a < r; ++a)
        for (std::uint32_t b = 0; b < r; ++b) diff.at(a, b) = mc.at(a, b) - (a == b ? 1 : 0);
    // image of a -> a (M_c - 1): row space = column space of (M_c - 1)^T
    ZMat imgb = image_basis(r, diff.transpose());

    ZMat y(ker.cols(), imgb.cols());
    for (std::size_t col = 0; col < imgb.cols(); ++col) {
        std::vector<mpz_class> sol;
        if (!lattice_contains(ker, imgb.col(col), &sol))
            throw std::logic_error("im(M - 1) outside ker(N)");
        for (std::size_t i = 0; i < ker.cols(); ++i) y.at(i, col) = sol[i];
    }
    QuotientStructure q = quotient_structure(ker.cols(), y);
    AbelianGroup out;
    out.factors = q.factors;
    out.free_rank = q.free_rank;
    if (out.free_rank != 0) throw std::logic_error("cyclic lattice H^1 must be finite");
    return out;
}

ZMat coboundary_columns(const LatticeAction& act, const Subgroup& c) {
    const std::uint32_t r = act.rank();
    ZMat b(std::size_t(r) * c.size(), r);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::size_t e = 0; e < c.size(); ++e) {
            const ZMat& mg = act.mat(c[e]);
            for (std::uint32_t j = 0; j < r; ++j)
                b.at(e * r + j, i) = mg.at(i, j) - (i == j ? 1 : 0);
        }
    return b;
}

std::vector<mpz_class> restrict_cocycle(const LatticeAction& act,
                                        const std::vector<mpz_class>& z, const Subgroup& c) {
    const std::uint32_t r = act.rank();
    std::vector<mpz_class> out(std::size_t(r) * c.size());
    for (std::size_t e = 0; e < c.size(); ++e)
        for (std::uint32_t j = 0; j < r; ++j) out[e * r + j] = z[std::size_t(c[e]) * r + j];
    return out;
}

PicResult pic_multiplicative(const LatticeAction& act) {
    const Group& g = act.group();
    const std::uint32_t r = act.rank();
    const std::size_t n = std::size_t(r) * g.size();
    LatticeH1 h1 = h1_lattice(act);

    // iteratively cut the Z^1 lattice by "restriction lands in B^1(C)"
    ZMat cur = h1.z1_basis;
    for (const auto& c : g.cyclic_subgroups()) {
        if (c.size() == 1) continue;  // restriction to 1 is always trivial
        ZMat bc = coboundary_columns(act, c);
        // rows select the blocks of C from the ambient coordinates
        ZMat res(std::size_t(r) * c.size(), cur.cols());
        for (std::size_t e = 0; e < c.size(); ++e)
            for (std::uint32_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < cur.cols(); ++k)
                    res.at(e * r + j, k) = cur.at(std::size_t(c[e]) * r + j, k);
        ZMat sys = res.hstack(bc);  // res * y + bc * w = 0 has solutions (y, w)
        for (std::size_t i = 0; i < sys.rows(); ++i)
            for (std::size_t j = cur.cols(); j < sys.cols(); ++j) sys.at(i, j) = -sys.at(i, j);
        ZMat kb = kernel_basis(sys);
        ZMat ygens(cur.cols(), kb.cols());
        for (std::size_t i = 0; i < cur.cols(); ++i)
            for (std::size_t j = 0; j < kb.cols(); ++j) ygens.at(i, j) = kb.at(i, j);
        cur = image_basis(n, cur * ygens);
    }

    // quotient the cut lattice by the coboundaries
    ZMat y(cur.cols(), h1.b1_columns.cols());
    for (std::size_t col = 0; col < h1.b1_columns.cols(); ++col) {
        std::vector<mpz_class> sol;
        if (!lattice_contains(cur, h1.b1_columns.col(col), &sol))
            throw std::logic_error("coboundary escaped the restriction kernel");
        for (std::size_t i = 0; i < cur.cols(); ++i) y.at(i, col) = sol[i];
    }
    QuotientStructure q = quotient_structure(cur.cols(), y);
    PicResult out;
    out.group.factors = q.factors;
    out.group.free_rank = q.free_rank;
    if (out.group.free_rank != 0) throw std::logic_error("Pic of invariants must be finite here");
    for (const auto& gen : q.torsion_gens) {
        std::vector<mpz_class> ambient(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < cur.cols(); ++k) ambient[i] += cur.at(i, k) * gen[k];
        out.generator_cocycles.push_back(std::move(ambient));
    }
    return out;
}

CoinvariantsResult coinvariants(const LatticeAction& act, const Subgroup& h) {
    const std::uint32_t r = act.rank();
    // [A,H]: row lattice of the stacked (M_h - 1), i.e. column lattice of
    // the transposes
    ZMat gens(r, std::size_t(r) * h.size());
    for (std::size_t e = 0; e < h.size(); ++e) {
        const ZMat& mh = act.mat(h[e]);
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j)
                gens.at(j, e * r + i) = mh.at(i, j) - (i == j ? 1 : 0);
    }
    QuotientStructure q = quotient_structure(r, gens);
    CoinvariantsResult out;
    out.group.factors = q.factors;
    out.group.free_rank = q.free_rank;
    out.torsion_factors = q.factors;
    out.torsion_order_h_primary = true;
    for (const auto& f : q.factors) {
        mpz_class rem = f;
        for (;;) {
            mpz_class d = gcd(rem, mpz_class(h.size()));
            if (d == 1) break;
            while (rem % d == 0) rem /= d;
        }
        if (rem != 1) out.torsion_order_h_primary = false;
    }
    return out;
}

bool mono_check(const LatticeAction& act, GElem c) {
    const Group& g = act.group();
    const std::uint32_t r = act.rank();
    const std::uint32_t m = g.order(c);

    ZMat norm(r, r);
    GElem e = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        const ZMat& mi = act.mat(e);
        for (std::uint32_t a = 0; a < r; ++a)
            for (std::uint32_t b = 0; b < r; ++b) norm.at(a, b) += mi.at(a, b);
        e = g.op(e, c);
    }
    ZMat ker = kernel_basis(norm.transpose());  // columns a^T with a N = 0

    Subgroup csub = g.closure({c});
    // [A,C] lattice as columns
    ZMat ac(r, std::size_t(r) * csub.size());
    for (std::size_t t = 0; t < csub.size(); ++t) {
        const ZMat& mh = act.mat(csub[t]);
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j)
                ac.at(j, t * r + i) = mh.at(i, j) - (i == j ? 1 : 0);
    }
    ZMat acb = image_basis(r, ac);

    // intersection ker(N) cap [A,C]: solve ker * u = acb * v
    ZMat sys = ker.hstack(acb);
    for (std::size_t i = 0; i < sys.rows(); ++i)
        for (std::size_t j = ker.cols(); j < sys.cols(); ++j) sys.at(i, j) = -sys.at(i, j);
    ZMat kb = kernel_basis(sys);
    ZMat ugens(ker.cols(), kb.cols());
    for (std::size_t i = 0; i < ker.cols(); ++i)
        for (std::size_t j = 0; j < kb.cols(); ++j) ugens.at(i, j) = kb.at(i, j);
    ZMat inter = image_basis(r, ker * ugens);

    // im(M_c - 1) as columns
    ZMat diff(r, r);
    const ZMat& mc = act.mat(c);
    for (std::uint32_t a = 0; a < r; ++a)
        for (std::uint32_t b = 0; b < r; ++b) diff.at(a, b) = mc.at(a, b) - (a == b ? 1 : 0);
    ZMat imgb = image_basis(r, diff.transpose());

    for (std::size_t col = 0; col < inter.cols(); ++col)
        if (!lattice_contains(imgb, inter.col(col))) return false;
    return true;
}

}  // namespace kerind
