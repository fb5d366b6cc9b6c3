// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// nonzero exit when anything fails.  Run from the repository root so the
// fixture files resolve.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kerind/h1.hpp"
#include "kerind/lattice.hpp"
#include "kerind/runner.hpp"
#include "kerind/scenario.hpp"
#include "kerind/skew.hpp"

using namespace kerind;

namespace {

int failures = 0;

Scenario load(const std::string& name) {
    return parse_scenario_file("fixtures/" + name + ".scn");
}

std::vector<Matrix> class_values(const CohClass& c) {
    std::vector<Matrix> out;
    for (const auto& v : c.rep.values) out.push_back(c.rep.view.to_matrix(v));
    return out;
}

struct Check {
    bool ok = true;
    std::string detail;
    void fail(const std::string& what) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

void run_criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("criterion %d: %s  [%s] (%.2fs)%s%s\n", id, title.c_str(),
                c.ok ? "PASS" : "FAIL", secs, c.detail.empty() ? "" : "  -- ",
                c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
}

const std::vector<std::string> kGaloisFixtures = {"galois-f4", "galois-f9", "galois-f2f2-swap",
                                                  "galois-f2cube-rot"};
const std::vector<std::string> kAgreementFixtures = {
    "galois-f4", "galois-f9", "galois-f2f2-swap", "galois-f2cube-rot",
    "dual-f3",   "dual-f5",   "mixed-f3-dual"};
const std::vector<std::string> kRadicalFixtures = {"dual-f3", "dual-f5", "mixed-f3-dual",
                                                   "inflres-klein-dual", "inflres-z4-dual"};
const std::vector<std::string> kLatticeFixtures = {
    "lat-sign", "lat-swap",  "lat-rot4",  "lat-neg2",
    "lat-klein", "lat-perm3", "lat-rank4", "lat-a3-klein"};

// --------------------------------------------------------------------------

void criterion1(Check& c) {
    for (const auto& name : kGaloisFixtures) {
        Scenario sc = load(name);
        c.expect(sc.action.is_galois(), name + ": fixture must be Galois");
        for (std::uint32_t n : {1u, 2u}) {
            auto classes = h1_classes(CoeffGroup::gl(sc.action, n));
            c.expect(classes.size() == 1, name + ": H^1 at n=" + std::to_string(n) + " has " +
                                              std::to_string(classes.size()) + " classes");
            for (const auto& cl : classes)
                c.expect(cl.neutral.value_or(false), name + ": non-neutral class survived");
        }
    }
}

void criterion2(Check& c) {
    for (const auto& name : kAgreementFixtures) {
        Scenario sc = load(name);
        SkewRing skew(sc.action);
        for (std::uint32_t n : {1u, 2u}) {
            auto classes = h1_classes(CoeffGroup::gl(sc.action, n));
            for (auto& cl : classes) {
                const bool cong = congruence_kernel_test(cl);
                OracleReport orc = kernel_oracle(skew, n, class_values(cl));
                if (cong != orc.fiber || cong != orc.pi_equals_p)
                    c.fail(name + " n=" + std::to_string(n) + ": disagreement (congruence=" +
                           std::to_string(cong) + ", fiber=" + std::to_string(orc.fiber) +
                           ", pi=" + std::to_string(orc.pi_equals_p) + ")");
                if (!orc.span_consistent) c.fail(name + ": PI=P without spanning fixed points");
            }
        }
    }
}

void criterion3(Check& c) {
    Scenario sc = load("dual-f3");
    c.expect(sc.ring.units().size() == 6, "|units| != 6");
    CoeffGroup uview = CoeffGroup::units(sc.action);
    auto zs = cocycles_cyclic(uview);
    c.expect(zs.size() == 6, "eligible cyclic cocycles != 6");
    auto classes = h1_classes(uview);
    c.expect(classes.size() == 2, "|H^1(G, U(S))| != 2");

    std::size_t units = 0;
    SkewRing skew(sc.action);
    for (auto& cl : classes) {
        UnitVerdict v = is_unit_class(cl, classes);
        const bool unit = v.congruence && v.inverse_search == SearchStatus::Found;
        if (unit) ++units;
        OracleReport orc = kernel_oracle(skew, 1, class_values(cl));
        if (!cl.neutral.value_or(false)) {
            c.expect(!orc.pi_equals_p, "oracle accepted the nontrivial class");
            c.expect(!v.congruence, "congruence accepted the nontrivial class");
        }
    }
    c.expect(units == 1, "unit classes != 1");
}

void criterion4(Check& c) {
    H1Caps caps;
    for (const auto& name : kAgreementFixtures) {
        Scenario sc = load(name);
        const Ring& s = sc.ring;

        std::vector<CohClass> cls;
        for (auto& u : h1_classes(CoeffGroup::units(sc.action))) cls.push_back(unit_embed(u));
        for (auto& m : h1_classes(CoeffGroup::gl(sc.action, 2))) cls.push_back(m);

        // cache sums; add_classes records the witness back to the literal blocks
        std::vector<std::vector<CohClass>> sum(cls.size(), std::vector<CohClass>(cls.size()));
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = 0; j < cls.size(); ++j) sum[i][j] = add_classes(cls[i], cls[j]);

        CohClass neutral1 = make_class(unit_cocycle(CoeffGroup::gl(sc.action, 1)));

        for (std::size_t i = 0; i < cls.size(); ++i) {
            // neutrality: a + [1] is stably a
            const CohClass& a = cls[i];
            CohClass an = add_classes(a, neutral1);
            std::vector<XElem> hint{*an.canon_witness};
            StableResult rn = stable_equal(an, a, caps, &hint);
            c.expect(rn.verdict == StableVerdict::Equal, name + ": neutrality failed");

            for (std::size_t j = 0; j < cls.size(); ++j) {
                const CohClass& b = cls[j];
                const std::uint32_t m = a.level(), n = b.level();

                // padding independence: d +_{m+t} e equals the conjugate of
                // the padded d +_m e by s_{t,n}[m], as an exact identity
                const std::uint32_t t = 1;
                Matrix stn = s_matrix(s, t, n).shift(m);
                bool pad_ok = true;
                for (std::size_t g = 0; g < a.rep.values.size(); ++g) {
                    Matrix da = a.rep.view.to_matrix(a.rep.values[g]);
                    Matrix db = b.rep.view.to_matrix(b.rep.values[g]);
                    Matrix lhs = Matrix::diag_blocks(da.pad(m + t), db);
                    Matrix rhs = stn.inverse() * Matrix::diag_blocks(da, db).pad(m + t + n) * stn;
                    pad_ok = pad_ok && lhs == rhs;
                }
                c.expect(pad_ok, name + ": padding independence failed");

                // commutativity through the s-matrix certificate
                const CohClass& ab = sum[i][j];
                const CohClass& ba = sum[j][i];
                XElem sinv = s_matrix(s, m, n).inverse().entries();
                XElem comm = ab.rep.view.mul(ab.rep.view.mul(*ab.canon_witness, sinv),
                                             ab.rep.view.inv(*ba.canon_witness));
                std::vector<XElem> chint{comm};
                StableResult rc = stable_equal(ab, ba, caps, &chint);
                c.expect(rc.verdict == StableVerdict::Equal, name + ": commutativity failed");

                // determinant additivity: det(a + b) = det(a) det(b)
                CohClass da = det_push(a), db = det_push(b), dab = det_push(ab);
                Cocycle prod{da.rep.view, {}};
                for (std::size_t g = 0; g < da.rep.values.size(); ++g)
                    prod.values.push_back({s.mul(da.rep.values[g][0], db.rep.values[g][0])});
                c.expect(class_equal(dab, make_class(prod)) == SearchStatus::Found,
                         name + ": determinant additivity failed");
            }
        }

        // associativity on all triples, certificate-first
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = 0; j < cls.size(); ++j)
                for (std::size_t k = 0; k < cls.size(); ++k) {
                    CohClass lhs = add_classes(sum[i][j], cls[k]);
                    CohClass rhs = add_classes(cls[i], sum[j][k]);
                    const CoeffGroup& v = lhs.rep.view;
                    // lhs.rep = w2 (u + 1) D and rhs.rep = w3 (1 + v) D for the
                    // literal D = d_i + d_j + d_k, so a witness is the quotient
                    Matrix u = sum[i][j].rep.view.to_matrix(*sum[i][j].canon_witness);
                    Matrix vv = sum[j][k].rep.view.to_matrix(*sum[j][k].canon_witness);
                    XElem wl = v.mul(*lhs.canon_witness, u.pad(v.level()).entries());
                    XElem wr = v.mul(*rhs.canon_witness, vv.shift(cls[i].level()).entries());
                    std::vector<XElem> hint{v.mul(wl, v.inv(wr))};
                    StableResult r = stable_equal(lhs, rhs, caps, &hint);
                    c.expect(r.verdict == StableVerdict::Equal, name + ": associativity failed");
                }
    }
}

void criterion5(Check& c) {
    // units lemma on trivial-action fixtures: U(H^1) is the neutral class
    {
        Scenario sc = load("units-z8");  // no (*): cancellation route only
        auto classes = h1_classes(CoeffGroup::units(sc.action));
        c.expect(classes.size() == 4, "Z/8: |Hom(Z/2, U)| != 4");
        CohClass neutral1 = make_class(unit_cocycle(CoeffGroup::gl(sc.action, 1)));
        for (const auto& a : classes)
            for (const auto& b : classes) {
                CohClass s = add_classes(unit_embed(a), unit_embed(b));
                const bool cancels = stable_equal(s, neutral1).verdict == StableVerdict::Equal;
                c.expect(cancels == (a.neutral.value() && b.neutral.value()),
                         "Z/8: additive cancellation failed");
            }
    }
    {
        Scenario sc = load("units-z7-z3");
        auto classes = h1_classes(CoeffGroup::units(sc.action));
        c.expect(classes.size() == 3, "Z/7: |Hom(Z/3, U)| != 3");
        std::size_t units = 0;
        for (auto& a : classes) {
            UnitVerdict v = is_unit_class(a, classes);
            if (v.congruence && v.inverse_search == SearchStatus::Found) ++units;
        }
        c.expect(units == 1, "Z/7: unit classes != 1");
    }
    {
        Scenario sc = load("units-s3gl");  // GL_2(F_2) is S_3
        auto classes = h1_classes(CoeffGroup::gl(sc.action, 2));
        c.expect(classes.size() == 2, "S_3 realization: class count != 2");
        std::size_t units = 0;
        for (auto& a : classes) {
            UnitVerdict v = is_unit_class(a, classes);
            if (v.congruence && v.inverse_search == SearchStatus::Found) ++units;
        }
        c.expect(units == 1, "S_3 realization: unit classes != 1");
    }
    {
        // abstract S_3 cross-checks the realization count
        Scenario sc = load("abstract-s3-z2");
        c.expect(h1_classes(sc.abstract_view).size() == 2, "abstract S_3: class count != 2");
    }
    // Schur-Zassenhaus: coprime |X| and |G| collapse H^1
    for (const char* name : {"abstract-z5-inv", "abstract-z7-dbl"}) {
        Scenario sc = load(name);
        auto classes = h1_classes(sc.abstract_view);
        c.expect(classes.size() == 1, std::string(name) + ": H^1 not a point");
        c.expect(classes[0].neutral.value_or(false), std::string(name) + ": class not neutral");
    }
}

void criterion6(Check& c) {
    for (const auto& name : kRadicalFixtures) {
        Scenario sc = load(name);
        c.expect(!sc.ring.nilradical().is_zero_ideal(), name + ": fixture has zero nilradical");
        for (std::uint32_t n : {1u, 2u}) {
            auto classes = h1_classes(CoeffGroup::gl(sc.action, n));
            for (auto& cl : classes) {
                RhoResult r = radical_push(cl);
                c.expect(r.status == SearchStatus::Found, name + ": radical push undecided");
                c.expect(r.neutral == cl.neutral.value_or(false),
                         name + " n=" + std::to_string(n) + ": radical kernel not trivial");
            }
        }
    }
}

void criterion7(Check& c) {
    {
        Scenario sc = load("lat-sign");
        LatticeH1 h = h1_lattice(sc.lattice);
        c.expect(h.group.str() == "Z/2", "H^1(<-1>, Z) != Z/2");
        c.expect(pic_multiplicative(sc.lattice).group.trivial(), "Pic(<-1> on Z) != 0");
    }
    {
        Scenario sc = load("lat-swap");
        c.expect(h1_lattice(sc.lattice).group.trivial(), "H^1(swap, Z^2) != 0");
        c.expect(pic_multiplicative(sc.lattice).group.trivial(), "Pic(swap) != 0");
    }
    {
        // the frozen nontrivial-Picard regression case
        Scenario sc = load("lat-a3-klein");
        PicResult pic = pic_multiplicative(sc.lattice);
        c.expect(pic.group.str() == "Z/2", "A_3 Klein fixture: Pic != Z/2");
    }
    for (const auto& name : kLatticeFixtures) {
        Scenario sc = load(name);
        const LatticeAction& act = sc.lattice;
        const Group& g = act.group();
        for (GElem e = 0; e < g.size(); ++e) {
            AbelianGroup fast = h1_cyclic_lattice(act, e);
            AbelianGroup slow = h1_lattice(act.restrict_to(g.as_group(g.closure({e})))).group;
            c.expect(fast == slow, name + ": cyclic H^1 route disagreement");
            c.expect(mono_check(act, e), name + ": mono_check failed");
        }
        for (const auto& h : g.subgroups())
            c.expect(coinvariants(act, h).torsion_order_h_primary,
                     name + ": coinvariant torsion not |H|-primary");
    }
}

void criterion8(Check& c) {
    std::mt19937_64 rng(0);
    for (const auto& name : kAgreementFixtures) {
        Scenario sc = load(name);
        SkewRing t(sc.action);  // txt = t, e^2 = e, eT = S_T checked here
        const Ring& s = sc.ring;
        const Group& g = sc.group;
        std::uniform_int_distribution<std::uint64_t> pick(0, s.size() - 1);
        auto rnd = [&] {
            TElem u = t.zero();
            for (GElem e = 0; e < g.size(); ++e) u[e] = Elem(pick(rng));
            return u;
        };
        for (int i = 0; i < 500; ++i) {
            TElem u = rnd(), v = rnd(), w = rnd();
            if (!(t.mul(t.mul(u, v), w) == t.mul(u, t.mul(v, w)))) {
                c.fail(name + ": associativity failed");
                break;
            }
        }
    }
}

void exactness_case(Check& c, const std::string& label, const CoeffGroup& big,
                    const Subgroup& nsub, const CoeffGroup& small,
                    const std::vector<GElem>& proj) {
    auto below = h1_classes(small);
    std::vector<CohClass> gimage;
    for (const auto& a : below) gimage.push_back(inflate_class(a, big, proj));
    // injectivity
    for (std::size_t i = 0; i < gimage.size(); ++i)
        for (std::size_t j = i + 1; j < gimage.size(); ++j)
            c.expect(class_equal(gimage[i], gimage[j]) == SearchStatus::None,
                     label + ": inflation not injective");
    // image = kernel of restriction to N
    auto above = h1_classes(big);
    std::size_t kernel = 0;
    for (auto& a : above) {
        CohClass res = restrict_class(a, nsub);
        if (!res.neutral.value_or(false)) continue;
        ++kernel;
        bool hit = false;
        for (auto& i : gimage) hit = hit || class_equal(a, i) == SearchStatus::Found;
        c.expect(hit, label + ": kernel class outside the inflation image");
    }
    c.expect(kernel == gimage.size(), label + ": image does not fill the kernel");
}

void criterion9(Check& c) {
    {
        // abstract Klein coefficients: three nontrivial proper N
        Scenario sc = load("abstract-klein-z2");
        const Group& g = sc.group;
        for (GElem gen : {1u, 2u, 3u}) {
            Subgroup n = g.closure({gen});
            GroupQuotient q = g.quotient(n);
            std::vector<GElem> id2{0, 1};
            CoeffGroup small = CoeffGroup::abstract(q.group, Group::cyclic(2), {id2});
            exactness_case(c, "klein-abstract N=<" + std::to_string(gen) + ">", sc.abstract_view,
                           n, small, q.proj);
        }
    }
    for (const char* name : {"inflres-klein-dual", "inflres-z4-dual"}) {
        Scenario sc = load(name);
        const Group& g = sc.group;
        Subgroup n = g.closure({2});  // the trivially-acting normal subgroup
        for (GElem e : n)
            for (Elem s = 0; s < sc.ring.size(); ++s)
                c.expect(sc.action.act(e, s) == s, std::string(name) + ": N acts nontrivially");
        GroupQuotient q = g.quotient(n);
        std::vector<std::vector<Elem>> tabs;
        for (GElem qg : q.group.generators()) {
            GElem lift = 0;
            for (GElem e = 0; e < g.size(); ++e)
                if (q.proj[e] == qg) {
                    lift = e;
                    break;
                }
            tabs.push_back(sc.action.table(lift));
        }
        Action qact = Action::make(q.group, sc.ring, std::move(tabs), false);
        exactness_case(c, name, CoeffGroup::units(sc.action), n, CoeffGroup::units(qact),
                       q.proj);
    }
}

}  // namespace

int main() {
    run_criterion(1, "Hilbert 90 / Galois triviality at n=1,2", criterion1);
    run_criterion(2, "congruence = fiber = PI=P agreement on all classes", criterion2);
    run_criterion(3, "worked fixture numbers for (Z/3)[x]/(x^2)", criterion3);
    run_criterion(4, "monoid laws and determinant additivity", criterion4);
    run_criterion(5, "units lemma and Schur-Zassenhaus", criterion5);
    run_criterion(6, "radical reduction has trivial kernel", criterion6);
    run_criterion(7, "lattice suite: H^1, Pic, coinvariants, mono", criterion7);
    run_criterion(8, "skew group ring algebra", criterion8);
    run_criterion(9, "inflation-restriction exactness", criterion9);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
