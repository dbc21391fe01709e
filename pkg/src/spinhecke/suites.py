"""Named verification suites.

Every defining relation is stored as a formal sum (coefficient, generator
sequence) so the same table can be checked inside an algebra (substituting
the generators themselves) or under a generator map (substituting images).
Each suite returns a report dict with one {relation, status, millis} entry
per check; failures never raise, they show up as status "fail".
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from .coeff import EPS, EPS2, HALF, L_ONE, Laurent, as_laurent, laurent
from .engine import Element, element_str, mul, normalize
from .finite import cover_ops, spin_ops, thecke_ops, cover_quotient
from .affine import (cover_aff_ops, cover_aff_quotient, elementary_symmetric,
                     odd_center_candidate, pq_aff_ops, recursion_images,
                     spin_aff_ops)
from .heckecliff import hc_aff_ops, hc_ops, hecke_aff_ops
from .tensor import tensor_ops
from .maps import (GeneratorMap, affine_involution, phi_affine, phi_finite,
                   psi_affine, psi_finite, spin_involution)
from .localization import delta, intertwiner_checks, pmul_left
from .matrices import identity, mat_add, mat_mul, mat_scale, rank
from .reps import (act, clifford_matrices, clifford_relations_hold,
                   gamma_span_rank, generated_algebra_rank, pi_q,
                   spin_relations_hold)
from .jm import (classify_ideal, cyclotomic_dim, jm_hc_route, jm_images,
                 jm_paper_formulas, jm_relation_checks, theorem63_map, UPoly,
                 LFrac)

DEFAULT_SEED = 20060515

MQ2 = laurent({2: -1, -2: -1})        # -(q^2 + q^-2)
TSQ = laurent({2: 1, -2: 1, 0: 2})    # q^2 + q^-2 + 2
ZSQ = laurent({2: 1, -2: 1, 0: 1})    # q^2 + q^-2 + 1


# -- formal sums ---------------------------------------------------------------


def fs_eval(fs, img, ops) -> Element:
    total = ops.zero()
    for c, atoms in fs:
        e = ops.scalar(c)
        for a in atoms:
            e = e * img(a)
        total = total + e
    return total


def check_relations(rels, img, ops, prefix="") -> list:
    out = []
    for name, lhs, rhs in rels:
        out.append((prefix + name,
                    lambda lhs=lhs, rhs=rhs:
                    fs_eval(lhs, img, ops) == fs_eval(rhs, img, ops)))
    return out


def self_img(ops):
    return lambda atom: ops.atom_element(atom)


def _one(*atoms):
    return [(L_ONE, tuple(atoms))]


def _fs(*terms):
    return [(as_laurent(c), tuple(atoms)) for c, atoms in terms]


# -- relation tables --------------------------------------------------------------


def staircase_relations(letter: str, n: int, square_rhs, swap_rhs) -> list:
    """The square/distant/braid triple shared by the staircase families."""
    rels = []
    for i in range(1, n):
        gi = (letter, i)
        rels.append((f"({letter}{i})^2", _one(gi, gi), square_rhs))
    for i in range(1, n):
        for j in range(i + 2, n):
            gi, gj = (letter, i), (letter, j)
            rels.append((f"{letter}{i} {letter}{j} distant",
                         _one(gi, gj), swap_rhs(gj, gi)))
    for i in range(1, n - 1):
        gi, gj = (letter, i), (letter, i + 1)
        rels.append((f"braid defect i={i}",
                     _fs((1, (gi, gj, gi)), (-1, (gj, gi, gj))),
                     _fs((EPS2, (gj,)), (-EPS2, (gi,)))))
    return rels


def spin_relations(n: int) -> list:
    return staircase_relations(
        "R", n, _fs((MQ2, ())), lambda a, b: _fs((-1, (a, b))))


def thecke_relations(n: int) -> list:
    return staircase_relations(
        "Tc", n, _fs((TSQ, ())), lambda a, b: _fs((1, (a, b))))


def cover_relations(n: int) -> list:
    rels = staircase_relations(
        "Tt", n, _fs((ZSQ, (("z",),)), (1, ())),
        lambda a, b: _fs((1, (("z",), a, b))))
    rels.append(("z^2 = 1", _one(("z",), ("z",)), _one()))
    if n >= 2:
        rels.append(("z central", _one(("z",), ("Tt", 1)),
                     _one(("Tt", 1), ("z",))))
    return rels


def hc_relations(n: int, affine: bool = False) -> list:
    rels = []
    for i in range(1, n):
        t = ("T", i)
        rels.append((f"(hecke) i={i}",
                     _fs((1, (t, t)), (-EPS, (t,)), (-1, ())), []))
    for i in range(1, n - 1):
        t, u = ("T", i), ("T", i + 1)
        rels.append((f"(braid) i={i}", _one(t, u, t), _one(u, t, u)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((f"T{i} T{j} commute", _one(("T", i), ("T", j)),
                         _one(("T", j), ("T", i))))
    for i in range(1, n):
        t = ("T", i)
        rels.append((f"(tici) T{i} c{i}", _one(t, ("c", i)),
                     _one(("c", i + 1), t)))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            rels.append((f"T{i} c{j} commute", _one(t, ("c", j)),
                         _one(("c", j), t)))
    for i in range(1, n + 1):
        rels.append((f"c{i}^2 = 1", _one(("c", i), ("c", i)), _one()))
        for j in range(i + 1, n + 1):
            rels.append((f"c{i} c{j} anticommute",
                         _one(("c", i), ("c", j)),
                         _fs((-1, (("c", j), ("c", i))))))
    if affine:
        for i in range(1, n):
            t = ("T", i)
            xi, xi1 = ("X", i, 1), ("X", i + 1, 1)
            mi, mi1 = ("X", i, -1), ("X", i + 1, -1)
            ci, ci1 = ("c", i), ("c", i + 1)
            rels.append((f"(txt) i={i}",
                         _fs((1, (t, xi, t)), (EPS, (ci, ci1, xi, t))),
                         _one(xi1)))
            rels.append((f"T{i} X{i} useful", _one(t, xi),
                         _fs((1, (xi1, t)), (-EPS, (xi1,)),
                             (-EPS, (ci, ci1, xi)))))
            rels.append((f"T{i} X{i+1} useful", _one(t, xi1),
                         _fs((1, (xi, t)), (EPS, (xi1,)),
                             (-EPS, (ci, ci1, xi1)))))
            rels.append((f"T{i} Xi{i} derived back-check",
                         _one(t, mi, xi), _one(t)))
            rels.append((f"T{i} Xi{i+1} derived back-check",
                         _one(t, mi1, xi1), _one(t)))
            for j in range(1, n + 1):
                if j in (i, i + 1):
                    continue
                rels.append((f"T{i} X{j} commute",
                             _one(t, ("X", j, 1)), _one(("X", j, 1), t)))
        for i in range(1, n + 1):
            xi, mi = ("X", i, 1), ("X", i, -1)
            rels.append((f"X{i} X{i}^-1 = 1", _one(xi, mi), _one()))
            rels.append((f"(xc) X{i} c{i}", _one(xi, ("c", i)),
                         _one(("c", i), mi)))
            for j in range(1, n + 1):
                if j == i:
                    continue
                rels.append((f"X{i} X{j} commute",
                             _one(xi, ("X", j, 1)), _one(("X", j, 1), xi)))
                rels.append((f"X{i} c{j} commute", _one(xi, ("c", j)),
                             _one(("c", j), xi)))
    return rels


def hc_identity_relations(n: int) -> list:
    """The derived Hecke-Clifford identities (skew products, triples,
    quadratic inverses)."""
    rels = []
    for i in range(1, n):
        t, ci, ci1 = ("T", i), ("c", i), ("c", i + 1)
        rels.append((f"(ticiplus1) i={i}", _one(t, ci1),
                     _fs((1, (ci, t)), (-EPS, (ci,)), (EPS, (ci1,)))))
        rels.append((f"(skew) i={i}",
                     _fs((1, (t, ci, t)), (-1, (t, ci1, t))),
                     _fs((1, (ci1,)), (-1, (ci,)))))
        rels.append((f"quadratic inverse i={i}",
                     _fs((1, (t, t)), (EPS, (t, ci, ci1)), (EPS, (ci, ci1, t)),
                         (EPS2, (ci, ci1, ci, ci1)), (-EPS, (t,)),
                         (-EPS2, (ci, ci1))),
                     _one()))
    idx = range(1, n + 1)
    for i in idx:
        for j in idx:
            for k in idx:
                if len({i, j, k}) < 3:
                    continue
                ci, cj, ck = ("c", i), ("c", j), ("c", k)
                lhs = []
                for s1, a in ((1, ci), (-1, cj)):
                    for s2, b in ((1, cj), (-1, ck)):
                        for s3, c in ((1, ci), (-1, cj)):
                            lhs.append((as_laurent(s1 * s2 * s3), (a, b, c)))
                rels.append((f"(ijk) ({i},{j},{k})", lhs,
                             _fs((2, (ck,)), (-2, (ci,)))))
    return rels


def pq_layer_relations(p: str, q: str, t: str, n: int, zeta) -> list:
    """Loop-generator relations for the three affine families.

    zeta is a formal-sum factory: zeta(sign, atoms) produces the term with
    the family's unit (a sign, or an inserted z letter).
    """
    rels = []
    for i in range(1, n + 1):
        pi, qi = (p, i), (q, i)
        for j in range(i + 1, n + 1):
            pj, qj = (p, j), (q, j)
            rels.append((f"{p}{i} {p}{j} commute", _one(pi, pj), _one(pj, pi)))
            rels.append((f"{q}{i} {q}{j}", _one(qi, qj), zeta(1, (qj, qi))))
        for j in range(1, n + 1):
            rels.append((f"{p}{i} {q}{j} commute", _one(pi, (q, j)),
                         _one((q, j), pi)))
        rels.append((f"{p}{i}^2 - zeta {q}{i}^2 = 1",
                     _fs((1, (pi, pi))) + [(-c, atoms)
                                           for c, atoms in zeta(1, (qi, qi))],
                     _one()))
    for i in range(1, n):
        ti = (t, i)
        pi, pi1 = (p, i), (p, i + 1)
        qi, qi1 = (q, i), (q, i + 1)
        rels.append((f"{t}{i} {p}{i}", _one(ti, pi),
                     _fs((1, (pi1, ti)), (-EPS, (qi1,)))
                     + [(-c * EPS, atoms) for c, atoms in zeta(1, (qi,))]))
        rels.append((f"{t}{i} {p}{i+1}", _one(ti, pi1),
                     _fs((1, (pi, ti)), (EPS, (qi1,)))
                     + [(c * EPS, atoms) for c, atoms in zeta(1, (qi,))]))
        rels.append((f"{t}{i} {q}{i}", _one(ti, qi),
                     zeta(1, (qi1, ti)) + _fs((-EPS, (pi,)), (-EPS, (pi1,)))))
        rels.append((f"{t}{i} {q}{i+1}", _one(ti, qi1),
                     zeta(1, (qi, ti))
                     + [(c * EPS, atoms) for c, atoms in zeta(1, (pi,))]
                     + [(c * EPS, atoms) for c, atoms in zeta(1, (pi1,))]))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            rels.append((f"{t}{i} {p}{j} commute", _one(ti, (p, j)),
                         _one((p, j), ti)))
            rels.append((f"{t}{i} {q}{j}", _one(ti, (q, j)),
                         zeta(1, ((q, j), ti))))
    return rels


def _zeta_minus(sign, atoms):
    return [(as_laurent(-sign), tuple(atoms))]


def _zeta_plus(sign, atoms):
    return [(as_laurent(sign), tuple(atoms))]


def _zeta_z(sign, atoms):
    return [(as_laurent(sign), (("z",),) + tuple(atoms))]


def spin_aff_relations(n: int) -> list:
    return spin_relations(n) + pq_layer_relations("p", "q", "R", n, _zeta_minus)


def pq_aff_relations(n: int) -> list:
    return thecke_relations(n) + pq_layer_relations("P", "Q", "Tc", n, _zeta_plus)


def cover_aff_relations(n: int) -> list:
    rels = cover_relations(n) + pq_layer_relations("Pt", "Qt", "Tt", n, _zeta_z)
    # the (3 - z)/8 recursions for the covering loop generators
    f38, f18 = Fraction(3, 8), Fraction(1, 8)
    for i in range(1, n):
        ti, pi, qi = ("Tt", i), ("Pt", i), ("Qt", i)
        z = ("z",)
        body_p = _fs((1, (z, ti, pi, ti)), (EPS, (ti, qi)), (EPS, (qi, ti)),
                     (EPS2, (pi,)))
        body_q = _fs((1, (ti, qi, ti)), (EPS, (ti, pi)), (EPS, (pi, ti)),
                     (EPS2, (z, qi)))
        rhs_p = [(c * f38, atoms) for c, atoms in body_p] \
            + [(-(c * f18), (z,) + atoms) for c, atoms in body_p]
        rhs_q = [(c * f38, atoms) for c, atoms in body_q] \
            + [(-(c * f18), (z,) + atoms) for c, atoms in body_q]
        rels.append((f"covering recursion Pt{i+1}", _one(("Pt", i + 1)), rhs_p))
        rels.append((f"covering recursion Qt{i+1}", _one(("Qt", i + 1)), rhs_q))
    return rels


FAMILY_RELATIONS = {
    "spin": spin_relations,
    "thecke": thecke_relations,
    "cover": cover_relations,
    "hc": lambda n: hc_relations(n) + hc_identity_relations(n),
    "hc-aff": lambda n: hc_relations(n, affine=True),
    "spin-aff": spin_aff_relations,
    "pq-aff": pq_aff_relations,
    "cover-aff": cover_aff_relations,
}

_FAMILY_OPS = {
    "spin": spin_ops,
    "thecke": thecke_ops,
    "cover": cover_ops,
    "hc": hc_ops,
    "hc-aff": hc_aff_ops,
    "spin-aff": spin_aff_ops,
    "pq-aff": pq_aff_ops,
    "cover-aff": cover_aff_ops,
}


# -- report plumbing ------------------------------------------------------------------


def _run_checks(checks) -> list:
    out = []
    for name, thunk in checks:
        t0 = time.perf_counter()
        try:
            ok = bool(thunk())
            detail = None
        except Exception as exc:  # a crash is a failure with a reason
            ok = False
            detail = f"{type(exc).__name__}: {exc}"
        ms = int((time.perf_counter() - t0) * 1000)
        entry = {"relation": name, "status": "pass" if ok else "fail",
                 "millis": ms}
        if detail:
            entry["detail"] = detail
        out.append(entry)
    return out


def _report(suite: str, checks, n=None, seed=None) -> dict:
    entries = _run_checks(checks)
    report = {"suite": suite, "checks": entries,
              "passed": all(e["status"] == "pass" for e in entries)}
    if n is not None:
        report["n"] = n
    if seed is not None:
        report["seed"] = seed
    return report


def random_element(ops, rng, nterms: int = 3) -> Element:
    terms = {}
    for _ in range(nterms):
        w = ops.random_word(rng)
        c = laurent({rng.randint(-2, 2): Fraction(rng.randint(-6, 6) or 1,
                                                  rng.randint(1, 3)),
                     rng.randint(-2, 2): rng.randint(-2, 2)})
        if c:
            terms[w] = c
    return Element(ops, terms)


# -- suites ------------------------------------------------------------------------------


def suite_relations(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    checks = []
    ranks = {"spin": 3, "thecke": 3, "cover": 3, "hc": 3, "hc-aff": 3,
             "spin-aff": 3, "pq-aff": 2, "cover-aff": 2}
    for family, builder in FAMILY_RELATIONS.items():
        nn = ranks[family] if n is None else min(n, ranks[family] + 1)
        ops = _FAMILY_OPS[family](nn)
        checks.extend(check_relations(builder(nn), self_img(ops), ops,
                                      prefix=f"{family}(n={nn}): "))
    # spin affine at n=2 as well (the rank the quotients are checked at)
    ops2 = spin_aff_ops(2)
    checks.extend(check_relations(spin_aff_relations(2), self_img(ops2), ops2,
                                  prefix="spin-aff(n=2): "))

    # recursions reproduce the next loop generators
    for nn, i in ((2, 1), (3, 1), (3, 2)):
        ops = spin_aff_ops(nn)

        def recur_ok(nn=nn, i=i, ops=ops):
            pn, qn = recursion_images(i, nn)
            return pn == ops.gen(f"p{i+1}") and qn == ops.gen(f"q{i+1}")
        checks.append((f"spin-aff(n={nn}): recursions give p{i+1}, q{i+1}",
                       recur_ok))

    # the symmetrized generators realized inside an independent Hecke algebra
    hk3 = hecke_aff_ops(3)
    timg = {("Tc", i): hk3.gen(f"T{i}").scale(2) - hk3.scalar(EPS)
            for i in (1, 2)}
    checks.extend(check_relations(
        thecke_relations(3), lambda a: timg[a], hk3,
        prefix="thecke realized in hecke(3): "))

    # the P/Q presentation realized inside an independent affine Hecke algebra
    ha2 = hecke_aff_ops(2)
    pq_img = {}
    for i in (1,):
        pq_img[("Tc", i)] = ha2.gen(f"T{i}").scale(2) - ha2.scalar(EPS)
    for i in (1, 2):
        xi, mi = ha2.gen(f"X{i}"), ha2.gen(f"Xi{i}")
        pq_img[("P", i)] = (xi + mi).scale(HALF)
        pq_img[("Q", i)] = (xi - mi).scale(HALF)
    checks.extend(check_relations(
        pq_aff_relations(2), lambda a: pq_img[a], ha2,
        prefix="pq-aff realized in hecke-aff(2): "))

    # quotients of the covering algebras
    c2 = cover_ops(2)
    tt = c2.gen("Tt1")

    def quot_plus():
        return cover_quotient(1, tt * tt) == thecke_ops(2).scalar(TSQ)

    def quot_minus():
        return cover_quotient(-1, tt * tt) == spin_ops(2).scalar(MQ2)

    def quot_z():
        x = c2.gen("z") * tt
        return cover_quotient(1, x) == cover_quotient(1, tt)

    checks.append(("cover(2): z=+1 quotient matches symmetrized square", quot_plus))
    checks.append(("cover(2): z=-1 quotient matches spin square", quot_minus))
    checks.append(("cover(2): z acts as 1 under the +1 quotient", quot_z))

    ca2 = cover_aff_ops(2)

    def quot_aff(sign):
        rels = cover_aff_relations(2)
        img = self_img(ca2)
        for name, lhs, rhs in rels:
            l1 = cover_aff_quotient(sign, fs_eval(lhs, img, ca2))
            r1 = cover_aff_quotient(sign, fs_eval(rhs, img, ca2))
            if l1 != r1:
                return False
        return True

    checks.append(("cover-aff(2): z=+1 quotient is consistent",
                   lambda: quot_aff(1)))
    checks.append(("cover-aff(2): z=-1 quotient is consistent",
                   lambda: quot_aff(-1)))
    return _report("relations", checks)


def suite_dims(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    import math
    checks = []
    top = 5 if n is None else n
    for nn in range(2, top + 1):
        fact = math.factorial(nn)
        checks.append((f"dim spin({nn}) = {nn}!",
                       lambda nn=nn, f=fact: len(spin_ops(nn).basis()) == f))
        checks.append((f"dim cover({nn}) = 2*{nn}!",
                       lambda nn=nn, f=fact: len(cover_ops(nn).basis()) == 2 * f))
        checks.append((f"dim thecke({nn}) = {nn}!",
                       lambda nn=nn, f=fact: len(thecke_ops(nn).basis()) == f))
        checks.append((f"even spin({nn}) = {nn}!/2",
                       lambda nn=nn, f=fact:
                       len(spin_ops(nn).even_basis()) == f // 2))
        checks.append((f"even cover({nn}) = {nn}!",
                       lambda nn=nn, f=fact:
                       len(cover_ops(nn).even_basis()) == f))
        checks.append((f"dim hc({nn}) = 2^{nn} {nn}!",
                       lambda nn=nn, f=fact:
                       len(hc_ops(nn).basis()) == (1 << nn) * f))

    def closure(ops):
        words = ops.basis()
        allowed = set(words)
        for wa in words:
            ea = ops.element(wa)
            for wb in words:
                prod = mul(ea, ops.element(wb))
                if not set(prod.terms) <= allowed:
                    return False
        return True

    checks.append(("closure spin(4): all basis pair products stay standard",
                   lambda: closure(spin_ops(4))))
    checks.append(("closure spin(3)", lambda: closure(spin_ops(3))))
    checks.append(("closure cover(3)", lambda: closure(cover_ops(3))))
    checks.append(("closure hc(3)", lambda: closure(hc_ops(3))))
    checks.append(("closure thecke(3)", lambda: closure(thecke_ops(3))))
    return _report("dims", checks, n=top)


def suite_engine(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    rng = random.Random(seed)
    checks = []
    families = [("spin", spin_ops, 3), ("thecke", thecke_ops, 3),
                ("cover", cover_ops, 3), ("hc", hc_ops, 3),
                ("hc-aff", hc_aff_ops, 3), ("spin-aff", spin_aff_ops, 3),
                ("pq-aff", pq_aff_ops, 3), ("cover-aff", cover_aff_ops, 3),
                ("tensor", lambda k: tensor_ops(spin_ops(k)), 3),
                ("tensor-aff", lambda k: tensor_ops(spin_aff_ops(k)), 2)]

    def assoc(ops, count=200):
        for _ in range(count):
            x = Element(ops, {ops.random_word(rng): L_ONE})
            y = Element(ops, {ops.random_word(rng): L_ONE})
            z = Element(ops, {ops.random_word(rng): L_ONE})
            if mul(mul(x, y), z) != mul(x, mul(y, z)):
                return False
        return True

    def idem(ops, count=60):
        words = list(ops.basis()) if hasattr(ops, "basis") and \
            not getattr(ops, "affine", False) else None
        if words is None or len(words) > 400:
            words = [ops.random_word(rng) for _ in range(count)]
        for w in words:
            e = normalize(ops, ops.word_atoms(w))
            if e.terms != {w: L_ONE}:
                return False
        return True

    def parity_mult(ops, count=80):
        for _ in range(count):
            wx, wy = ops.random_word(rng), ops.random_word(rng)
            x, y = ops.element(wx), ops.element(wy)
            p = mul(x, y).parity()
            expect = (ops.word_parity(wx) + ops.word_parity(wy)) % 2
            if p == "mixed" or (p == "odd") != bool(expect):
                return False
        return True

    for fam, mk, nn in families:
        ops = mk(nn)
        checks.append((f"associativity {fam}(n={nn}) 200 triples",
                       lambda ops=ops: assoc(ops)))
        checks.append((f"normalize idempotent {fam}(n={nn})",
                       lambda ops=ops: idem(ops)))
        checks.append((f"parity multiplicative {fam}(n={nn})",
                       lambda ops=ops: parity_mult(ops)))

    def delta_regular(nn, dbound=4):
        ops = spin_aff_ops(nn)
        dpoly = delta(nn)
        # one block: pure p-monomials of degree <= dbound; multiplication by
        # delta preserves and acts identically on every (q, staircase) block
        monos = [w for w in ops.basis_truncated(dbound)
                 if ops._dec(w)[2] == 0 and not any(ops._dec(w)[3])]
        rows = []
        cols = {}
        images = []
        for w in monos:
            img = pmul_left(dpoly, ops.element(w))
            images.append(img)
            for w2 in img.terms:
                if w2 not in cols:
                    cols[w2] = len(cols)
        for img in images:
            row = [Laurent()] * len(cols)
            for w2, c in img.terms.items():
                row[cols[w2]] = c
            rows.append(row)
        blocks = (1 << nn) * len(list(ops._staircases()))
        return rank(rows) * blocks == len(rows) * blocks

    checks.append(("delta regular on truncated basis n=2 (degree <= 4)",
                   lambda: delta_regular(2)))
    checks.append(("delta regular on truncated basis n=3 (degree <= 4)",
                   lambda: delta_regular(3)))
    return _report("engine", checks, seed=seed)


def suite_involutions(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    rng = random.Random(seed)
    nn = 3 if n is None else n
    checks = []

    def inv_checks(maps, ops, prefix):
        for name, f in maps.items():
            def order2(f=f):
                for _ in range(8):
                    x = random_element(ops, rng)
                    if f(f(x)) != x:
                        return False
                return True

            def morphism(f=f):
                for _ in range(8):
                    x = random_element(ops, rng)
                    y = random_element(ops, rng)
                    fx, fy = f(x), f(y)
                    want = fy * fx if f.kind == "antihom" else fx * fy
                    if f(x * y) != want:
                        return False
                return True
            checks.append((f"{prefix}{name} has order 2", order2))
            kind = "anti-homomorphism" if f.kind == "antihom" else "homomorphism"
            checks.append((f"{prefix}{name} is a {kind}", morphism))
        names = list(maps)
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                f, g = maps[names[a]], maps[names[b]]

                def commute(f=f, g=g):
                    for gen in ops.gen_atoms().values():
                        x = ops.atom_element(gen)
                        if f(g(x)) != g(f(x)):
                            return False
                    return True
                checks.append((f"{prefix}{names[a]} and {names[b]} commute "
                               "on generators", commute))

    fmaps = {name: spin_involution(name, nn)
             for name in ("sigma", "s", "bar", "tau")}
    inv_checks(fmaps, spin_ops(nn), f"spin(n={nn}): ")
    amaps = {name: affine_involution(name, 2)
             for name in ("sigma+", "sigma-", "sp", "sq", "barp", "barq", "tau")}
    inv_checks(amaps, spin_aff_ops(2), "spin-aff(n=2): ")

    s3 = spin_ops(3)
    checks.append(("spin(3): sigma(R1) = R2",
                   lambda: fmaps["sigma"](s3.gen("R1")) == s3.gen("R2")
                   if nn == 3 else True))
    a3 = spin_aff_ops(3)
    checks.append(("spin-aff(3): sigma+(p1) = p3",
                   lambda: affine_involution("sigma+", 3)(a3.gen("p1"))
                   == a3.gen("p3")))
    checks.append(("spin-aff(2): tau(p1 q1) = -p1 q1",
                   lambda: affine_involution("tau", 2)(
                       spin_aff_ops(2).gen("p1") * spin_aff_ops(2).gen("q1"))
                   == -(spin_aff_ops(2).gen("p1") * spin_aff_ops(2).gen("q1"))))
    return _report("involutions", checks, n=nn, seed=seed)


def suite_finite_iso(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    nn = 3 if n is None else n
    rng = random.Random(seed)
    hc = hc_ops(nn)
    tens = tensor_ops(spin_ops(nn))
    phi, psi = phi_finite(nn), psi_finite(nn)
    checks = []
    checks.extend(check_relations(
        spin_relations(nn), lambda a: psi.images[a], hc,
        prefix="psi images satisfy "))
    for j in range(1, nn + 1):
        cj = hc.gen(f"c{j}")
        for i in range(1, nn):
            ri = psi.images[("R", i)]
            checks.append((f"psi(R{i}) supercommutes with c{j}",
                           lambda ri=ri, cj=cj: ri * cj == -(cj * ri)))
    checks.extend(check_relations(
        hc_relations(nn), lambda a: phi.images[a], tens,
        prefix="phi images satisfy "))
    for gname in hc.gen_atoms():
        checks.append((f"psi(phi({gname})) = {gname}",
                       lambda g=gname: psi(phi(hc.gen(g))) == hc.gen(g)))
    for gname in tens.gen_atoms():
        checks.append((f"phi(psi({gname})) = {gname}",
                       lambda g=gname: phi(psi(tens.gen(g))) == tens.gen(g)))

    def roundtrip(count=100):
        for _ in range(count):
            x = random_element(hc, rng)
            if psi(phi(x)) != x:
                return False
            y = random_element(tens, rng)
            if phi(psi(y)) != y:
                return False
        return True

    def multiplicative(count=200):
        for _ in range(count):
            x, y = random_element(hc, rng, 2), random_element(hc, rng, 2)
            if phi(x * y) != phi(x) * phi(y):
                return False
            u, v = random_element(tens, rng, 2), random_element(tens, rng, 2)
            if psi(u * v) != psi(u) * psi(v):
                return False
        return True

    def parity_preserved():
        for w in hc.basis():
            x = hc.element(w)
            img = phi(x)
            if img.parity() == "mixed":
                return False
            if (img.parity() == "odd") != bool(hc.word_parity(w)):
                return False
        return True

    def dimension_rank():
        words = tens.basis()
        cols = {w: k for k, w in enumerate(words)}
        rows = []
        for w in hc.basis():
            img = phi(hc.element(w))
            row = [Laurent()] * len(cols)
            for w2, c in img.terms.items():
                row[cols[w2]] = c
            rows.append(row)
        return rank(rows) == len(rows)

    checks.append(("roundtrips on 100 seeded random elements", roundtrip))
    checks.append(("multiplicativity on 200 seeded random pairs", multiplicative))
    checks.append(("phi preserves parity on the standard basis", parity_preserved))
    checks.append((f"phi maps the basis to {1 << nn}*{nn}! independent "
                   "elements", dimension_rank))
    return _report("finite-iso", checks, n=nn, seed=seed)


def suite_affine_iso(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    nn = 2 if n is None else n
    rng = random.Random(seed)
    hca = hc_aff_ops(nn)
    tens = tensor_ops(spin_aff_ops(nn))
    phi, psi = phi_affine(nn), psi_affine(nn)
    checks = []
    checks.extend(check_relations(
        spin_aff_relations(nn), lambda a: psi.images[a], hca,
        prefix="psi images satisfy "))
    for j in range(1, nn + 1):
        cj = hca.gen(f"c{j}")
        for i in range(1, nn + 1):
            pi = psi.images[("p", i)]
            qi = psi.images[("q", i)]
            checks.append((f"psi(p{i}) commutes with c{j}",
                           lambda pi=pi, cj=cj: pi * cj == cj * pi))
            checks.append((f"psi(q{i}) supercommutes with c{j}",
                           lambda qi=qi, cj=cj: qi * cj == -(cj * qi)))
    checks.extend(check_relations(
        hc_relations(nn, affine=True), lambda a: phi.images[a], tens,
        prefix="phi images satisfy "))
    for gname in hca.gen_atoms():
        checks.append((f"psi(phi({gname})) = {gname}",
                       lambda g=gname: psi(phi(hca.gen(g))) == hca.gen(g)))
    for gname in tens.gen_atoms():
        checks.append((f"phi(psi({gname})) = {gname}",
                       lambda g=gname: phi(psi(tens.gen(g))) == tens.gen(g)))

    def roundtrip(count=100):
        for _ in range(count):
            x = random_element(hca, rng)
            if psi(phi(x)) != x:
                return False
            y = random_element(tens, rng)
            if phi(psi(y)) != y:
                return False
        return True

    def multiplicative(count=200):
        for _ in range(count):
            x, y = random_element(hca, rng, 2), random_element(hca, rng, 2)
            if phi(x * y) != phi(x) * phi(y):
                return False
            u, v = random_element(tens, rng, 2), random_element(tens, rng, 2)
            if psi(u * v) != psi(u) * psi(v):
                return False
        return True

    def parity_preserved(count=80):
        for _ in range(count):
            w = hca.random_word(rng)
            img = phi(hca.element(w))
            if img.parity() == "mixed":
                return False
            if (img.parity() == "odd") != bool(hca.word_parity(w)):
                return False
        return True

    checks.append(("roundtrips on 100 seeded random elements", roundtrip))
    checks.append(("multiplicativity on 200 seeded random pairs", multiplicative))
    checks.append(("phi preserves parity on random standard words",
                   parity_preserved))
    return _report("affine-iso", checks, n=nn, seed=seed)


def suite_jm(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    checks = []

    def formulas_byte_exact():
        ps, qs = jm_images(3)
        paper = jm_paper_formulas()
        return (element_str(ps[2]) == element_str(paper["p2"])
                and element_str(qs[2]) == element_str(paper["q2"])
                and element_str(ps[3]) == element_str(paper["p3"])
                and element_str(qs[3]) == element_str(paper["q3"]))

    checks.append(("printed JM elements match the displayed formulas "
                   "byte-exactly (n=3)", formulas_byte_exact))
    for nn in (2, 3):
        def rel_ok(nn=nn):
            return all(ok for _, ok in jm_relation_checks(nn))
        checks.append((f"JM images satisfy every loop relation (n={nn})", rel_ok))

    def cross(nn):
        hp, hq = jm_hc_route(nn)
        pp, qq = jm_images(nn)
        return all(hp[i] == pp[i] and hq[i] == qq[i]
                   for i in range(1, nn + 1))

    for nn in (1, 2, 3):
        checks.append((f"Hecke-Clifford route agrees exactly (n={nn})",
                       lambda nn=nn: cross(nn)))
    return _report("jm", checks)


def suite_rep(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    rng = random.Random(seed)
    top = 5 if n is None else n
    checks = []
    for nn in range(1, top + 1):
        checks.append((f"clifford model relations + oddness (n={nn})",
                       lambda nn=nn: clifford_relations_hold(
                           clifford_matrices(nn))))
    for nn in range(2, top + 1):
        checks.append((f"pi_q satisfies all spin relations (n={nn})",
                       lambda nn=nn: spin_relations_hold(pi_q(nn))))
        checks.append((f"gamma span has rank n-1 (n={nn})",
                       lambda nn=nn: gamma_span_rank(pi_q(nn)) == nn - 1))

    def triple():
        rep = pi_q(3)
        g1, g2 = rep.gamma(1), rep.gamma(2)
        lhs = mat_mul(mat_mul(g1, g2), g1)
        rhs = mat_add(mat_scale(g1, 2), mat_scale(g2, laurent({2: 1, -2: 1})))
        return lhs == rhs

    checks.append(("gamma1 gamma2 gamma1 = 2 gamma1 + (q^2+q^-2) gamma2",
                   triple))

    def homomorphism(count=50):
        ops = spin_ops(4)
        rep = pi_q(4)
        for _ in range(count):
            x = random_element(ops, rng, 2)
            y = random_element(ops, rng, 2)
            if act(x * y, rep) != mat_mul(act(x, rep), act(y, rep)):
                return False
        return act(ops.one(), rep) == identity(rep.dim)

    checks.append(("act is an algebra homomorphism on 50 random pairs (n=4)",
                   homomorphism))
    for nn in range(2, min(top, 4) + 1):
        checks.append((f"gammas generate an algebra of rank 2^(n-1) (n={nn})",
                       lambda nn=nn:
                       generated_algebra_rank(pi_q(nn), nn - 1)
                       == 1 << (nn - 1)))
    return _report("rep", checks, n=top, seed=seed)


def suite_center(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    checks = []
    ops3 = spin_aff_ops(3)
    gens3 = [ops3.gen(name) for name in ops3.gen_atoms()]
    for k in (1, 2, 3):
        ek = elementary_symmetric(ops3, k)
        checks.append((f"e_{k}(p) is central (n=3)",
                       lambda ek=ek: all(ek * g == g * ek for g in gens3)))
    ops2 = spin_aff_ops(2)
    gens2 = [ops2.gen(name) for name in ops2.gen_atoms()]
    e12 = elementary_symmetric(ops2, 1)
    checks.append(("e_1(p) is central (n=2)",
                   lambda: all(e12 * g == g * e12 for g in gens2)))
    p1 = ops2.gen("p1")
    checks.append(("p1 alone fails centrality (n=2, expected failure)",
                   lambda: p1 * ops2.gen("R1") != ops2.gen("R1") * p1))

    cand3 = odd_center_candidate(ops3)
    checks.append(("q1 q2 q3 is odd central (n=3)",
                   lambda: cand3.parity() == "odd"
                   and all(cand3 * g == g * cand3 for g in gens3)))
    ops1 = spin_aff_ops(1)
    cand1 = odd_center_candidate(ops1)
    gens1 = [ops1.gen(name) for name in ops1.gen_atoms()]
    checks.append(("q1 is central (n=1)",
                   lambda: all(cand1 * g == g * cand1 for g in gens1)))
    cand2 = odd_center_candidate(ops2)
    checks.append(("q1 q2 fails centrality (n=2, expected failure)",
                   lambda: any(cand2 * g != g * cand2 for g in gens2)))
    return _report("center", checks)


def suite_intertwine(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    top = 4 if n is None else n
    checks = []
    for nn in range(2, top + 1):
        for name, thunk in intertwiner_checks(nn):
            if "braidgimel" in name and nn != 3:
                continue  # the braid check is pinned at n=3
            checks.append((f"n={nn}: {name}", thunk))

    def cofactor_identity(nn, i):
        from .localization import invert_p_diff, p_diff, LocElement
        ops = spin_aff_ops(nn)
        inv = invert_p_diff(i, nn)
        lhs = p_diff(ops, i, i + 1) * inv
        return lhs == LocElement(ops.one(), 0)

    for nn, i in ((2, 1), (3, 1), (3, 2)):
        checks.append((f"(p{i}-p{i+1}) * cofactor = delta identity (n={nn})",
                       lambda nn=nn, i=i: cofactor_identity(nn, i)))
    return _report("intertwine", checks, n=top)


def suite_cyclotomic(n: int | None = None, seed: int = DEFAULT_SEED) -> dict:
    import math
    checks = []
    samples = [
        ("X^2 + 5 X + 1 (even, a0=+1)", {2: L_ONE, 1: laurent({0: 5}),
                                         0: L_ONE}, 1),
        ("X^2 - 1 (even, a0=-1)", {2: L_ONE, 0: laurent({0: -1})}, 2),
        ("X + 1 (odd, a0=+1)", {1: L_ONE, 0: L_ONE}, 3),
        ("X - 1 (odd, a0=-1)", {1: L_ONE, 0: laurent({0: -1})}, 4),
        ("X^3 + e X^2 + e X + 1 (odd cubic)", {3: L_ONE, 2: EPS, 1: EPS,
                                               0: L_ONE}, 3),
    ]
    for name, coeffs, want in samples:
        checks.append((f"theorem-6.3 case for {name} -> {want}",
                       lambda coeffs=coeffs, want=want:
                       theorem63_map(coeffs).case == want))

    def smallest_ideal_dims():
        res = theorem63_map({1: L_ONE, 0: laurent({0: -1})})
        ideal = res.ideal()
        return all(cyclotomic_dim(ideal, nn) == math.factorial(nn)
                   for nn in (1, 2, 3, 4))

    checks.append(("dim of the quotient at <p1-1, q1> is n! for n <= 4",
                   smallest_ideal_dims))

    def degree_table():
        # case degrees: (1) deg f = k; (2) deg g = k-1; (3)/(4) deg g = k
        r1 = theorem63_map({2: L_ONE, 1: laurent({0: 3}), 0: L_ONE})
        r2 = theorem63_map({2: L_ONE, 0: laurent({0: -1})})
        r3 = theorem63_map({3: L_ONE, 2: laurent({0: 2}), 1: laurent({0: 2}),
                            0: L_ONE})
        return (r1.f.degree() == 1 and r2.g.degree() == 0
                and r3.g.degree() == 1)

    checks.append(("theorem-6.3 degree bookkeeping", degree_table))

    def classify_samples():
        one = UPoly.constant(1)
        pm1 = UPoly([LFrac(laurent({0: -1})), LFrac(L_ONE)])
        p23 = UPoly([LFrac(laurent({0: -3})), LFrac(Laurent()), LFrac(L_ONE)])
        i1 = classify_ideal([(pm1, 0), (one, 1)])
        i2 = classify_ideal([(p23, 0)])
        i3 = classify_ideal([(one, 1)])
        return (i1.case == 4 and i1.g.degree() == 0
                and i2.case == 1 and i2.f == i2.g
                and i3.case == 2 and i3.f.degree() == 2)

    checks.append(("ideal classifier on the three displayed examples",
                   classify_samples))
    return _report("cyclotomic", checks)


SUITES = {
    "relations": suite_relations,
    "dims": suite_dims,
    "engine": suite_engine,
    "involutions": suite_involutions,
    "finite-iso": suite_finite_iso,
    "affine-iso": suite_affine_iso,
    "jm": suite_jm,
    "rep": suite_rep,
    "center": suite_center,
    "intertwine": suite_intertwine,
    "cyclotomic": suite_cyclotomic,
}


def run_suite(name: str, n: int | None = None,
              seed: int = DEFAULT_SEED) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choices: "
                       + ", ".join(sorted(SUITES)))
    return SUITES[name](n=n, seed=seed)
