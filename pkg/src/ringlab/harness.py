"""Machine-checkable rule catalog over a corpus of small finite rings.

Each structural fact about NJ-symmetric rings and its neighbors is encoded
as a rule (implication, equivalence, or witness exhibit) and evaluated over
the default corpus; a failing rule always means an implementation bug.
"""

from __future__ import annotations

import concurrent.futures
import json
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import (MAX_ORDER, FiniteRing, LatticeTruncatedError, SizeError,
                   canonical_fingerprint, mask_contains, mask_from_indices,
                   mask_indices, serialize_ring)
from . import constructions as cons
from . import invariants as inv
from . import properties as props

#: Largest derived ring (T_k, CD_k of a corpus ring) the equivalence rules
#: will scan; keeps the full verify run inside its time budget.
DERIVED_SCAN_MAX_ORDER = 256


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

@dataclass
class Corpus:
    rings: list
    skipped: list = field(default_factory=list)   # (name, reason)

    def __iter__(self):
        return iter(self.rings)

    def __len__(self):
        return len(self.rings)


def _swap_map(n: int) -> np.ndarray:
    """The coordinate-swap automorphism of R x R with |R| = n."""
    idx = np.arange(n * n)
    return (idx % n) * n + idx // n


def _reduction_map(n: int, m: int) -> np.ndarray:
    """Index map Z(n) -> Z(m) for m dividing n."""
    return np.arange(n) % m


def two_z4_bimodule() -> cons.Bimodule:
    """The ideal 2Z4 of Z(4) as a (Z4,Z4)-bimodule and general ring."""
    return cons.ideal_bimodule(cons.zmod(4), mask_from_indices([0, 2]),
                               name="2Z4")


def two_z4_over_z2_bimodule() -> cons.Bimodule:
    """2Z4 as a (Z2,Z2)-bimodule (0 acts as zero, 1 as identity)."""
    return cons.Bimodule(
        add=np.array([[0, 1], [1, 0]]),
        left_act=np.array([[0, 0], [0, 1]]),
        right_act=np.array([[0, 0], [0, 1]]),
        internal_mul=np.zeros((2, 2), dtype=int),
        name="2Z4/Z2")


def default_corpus(max_order: int = MAX_ORDER) -> Corpus:
    """The deterministic ring list every catalog rule is evaluated on."""
    rings: list[FiniteRing] = []
    skipped: list[tuple[str, str]] = []
    seen: set[str] = set()

    def put(builder: Callable[[], FiniteRing], name: str = "?"):
        try:
            R = builder()
        except SizeError as e:
            skipped.append((name, str(e)))
            return None
        fp = canonical_fingerprint(R)
        if fp not in seen:
            seen.add(fp)
            rings.append(R)
        return R

    z = {n: cons.zmod(n) for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16)}
    bases: list[FiniteRing] = []

    def base(builder, name="?"):
        R = put(builder, name)
        if R is not None:
            bases.append(R)
        return R

    for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16):
        base(lambda n=n: z[n])
    base(lambda: cons.matrix_ring(z[2], 2))
    base(lambda: cons.matrix_ring(z[3], 2))
    base(lambda: cons.upper_triangular(z[2], 2))
    base(lambda: cons.upper_triangular(z[3], 2))
    base(lambda: cons.upper_triangular(z[4], 2))
    base(lambda: cons.upper_triangular(z[2], 3))
    base(lambda: cons.constant_diagonal(z[2], 2))
    base(lambda: cons.constant_diagonal(z[2], 3))
    base(lambda: cons.constant_diagonal(z[4], 2))
    base(lambda: cons.constant_diagonal(z[4], 3))
    base(lambda: cons.direct_product(z[2], z[3]))
    base(lambda: cons.direct_product(z[4], z[2]))
    base(lambda: cons.direct_product(z[2], z[2]))
    base(lambda: cons.example_weak_symmetric_component(0), "WSC(0)")
    base(lambda: cons.dorroh(z[4], two_z4_bimodule()).ring, "Dorroh(Z(4), 2Z4)")
    base(lambda: cons.trivial_morita(z[2], z[2], cons.ring_bimodule(z[2]),
                                     cons.ring_bimodule(z[2])))
    base(lambda: cons.formal_triangular(z[2], z[2], cons.ring_bimodule(z[2])))
    base(lambda: cons.formal_triangular(
        z[4], z[2], cons.hom_bimodule(z[2], _reduction_map(4, 2),
                                      np.arange(2), name="Z2")))
    base(lambda: cons.truncated_skew_poly(z[2], np.arange(2), 2, hom_name="id"))
    base(lambda: cons.truncated_skew_poly(z[2], np.arange(2), 3, hom_name="id"))
    base(lambda: cons.truncated_skew_poly(z[4], np.arange(4), 2, hom_name="id"))
    z2xz2 = cons.direct_product(z[2], z[2])
    base(lambda: cons.truncated_skew_poly(z2xz2, _swap_map(2), 2,
                                          hom_name="swap"))

    # corners at every nonzero idempotent, quotients by J and both
    # nilradicals, of every base ring above (deduplicated by fingerprint)
    for R in list(bases):
        for e in mask_indices(inv.idempotents(R)):
            if e == R.zero and R.order > 1:
                continue
            put(lambda R=R, e=e: cons.corner(R, e), f"Corner({R.name}, {e})")
    for R in list(bases):
        for spec, mask_fn in (("J", inv.jacobson_radical),
                              ("Nstar", inv.upper_nilradical),
                              ("Nlower", inv.lower_nilradical)):
            put(lambda R=R, s=spec, f=mask_fn:
                cons.quotient(R, f(R), ideal_name=s)[0],
                f"Quo({R.name}, {spec})")
    return Corpus(rings, skipped)


def random_corpus(seed: int, count: int,
                  max_order: int = MAX_ORDER) -> list[FiniteRing]:
    """Seeded random compositions of constructions over small bases."""
    import random
    rng = random.Random(seed)
    pool = [cons.zmod(n) for n in (2, 3, 4, 5, 6, 8, 9)]
    out = []
    guard = 0
    while len(out) < count and guard < count * 20:
        guard += 1
        op = rng.choice(["prod", "t2", "cd2", "skew", "tri", "dorroh_nil"])
        A = rng.choice(pool)
        B = rng.choice(pool)
        try:
            if op == "prod":
                R = cons.direct_product(A, B, max_order=max_order)
            elif op == "t2":
                R = cons.upper_triangular(A, 2, max_order=max_order)
            elif op == "cd2":
                R = cons.constant_diagonal(A, 2, max_order=max_order)
            elif op == "skew":
                R = cons.truncated_skew_poly(A, np.arange(A.order), 2,
                                             max_order=max_order,
                                             hom_name="id")
            elif op == "tri":
                R = cons.formal_triangular(A, A, cons.ring_bimodule(A),
                                           max_order=max_order)
            else:
                nilmask = inv.upper_nilradical(A)
                R = cons.dorroh(A, cons.ideal_bimodule(A, nilmask),
                                max_order=max_order).ring
        except SizeError:
            continue
        if R.order <= DERIVED_SCAN_MAX_ORDER:
            out.append(R)
    return out


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

@dataclass
class Rule:
    id: str
    description: str
    kind: str                       # implication | equivalence | witness
    per_ring: bool
    check: Callable                 # per_ring: (ring)->(status, detail)
                                    # else:     ()->(status, detail)


@dataclass
class RuleEntry:
    rule_id: str
    ring_name: str
    fingerprint: str
    status: str                     # pass | fail | vacuous | skipped
    detail: Optional[dict] = None

    def to_dict(self) -> dict:
        return {"rule": self.rule_id, "ring": self.ring_name,
                "fingerprint": self.fingerprint, "status": self.status,
                "detail": self.detail}


@dataclass
class RuleReport:
    entries: list
    corpus_skipped: list = field(default_factory=list)

    VERSION = "report v1"

    def summary(self) -> dict:
        out: dict[str, str] = {}
        order = {"fail": 3, "pass": 2, "skipped": 1, "vacuous": 0}
        for e in self.entries:
            cur = out.get(e.rule_id)
            if cur is None or order[e.status] > order[cur]:
                out[e.rule_id] = e.status
        return out

    def failures(self) -> list:
        return [e for e in self.entries if e.status == "fail"]

    def to_dict(self) -> dict:
        return {"format": self.VERSION,
                "entries": [e.to_dict() for e in self.entries],
                "summary": self.summary(),
                "corpus_skipped": [list(s) for s in self.corpus_skipped]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "RuleReport":
        if d.get("format") != cls.VERSION:
            raise ValueError(f"unsupported report format: {d.get('format')}")
        entries = [RuleEntry(e["rule"], e["ring"], e["fingerprint"],
                             e["status"], e.get("detail"))
                   for e in d["entries"]]
        return cls(entries, [tuple(s) for s in d.get("corpus_skipped", [])])

    def table(self) -> str:
        lines = []
        width = max((len(e.rule_id) for e in self.entries), default=4)
        for rid, status in sorted(self.summary().items(),
                                  key=lambda kv: int(kv[0][1:])):
            lines.append(f"{rid:<{width}}  {status}")
        return "\n".join(lines)


def _holds(R: FiniteRing, name: str) -> bool:
    return props.check_property(R, name).holds


def _implication(rule_id, description, hyp_names, concl_names,
                 structural_hyp=None):
    """Rule: conjunction of named hypotheses implies named conclusions."""

    def check(R: FiniteRing):
        try:
            if not all(_holds(R, h) for h in hyp_names):
                return "vacuous", None
            if structural_hyp is not None and not structural_hyp(R):
                return "vacuous", None
            for c in concl_names:
                v = props.check_property(R, c)
                if not v.holds:
                    return "fail", {"conclusion": c, "witness": v.witness}
            return "pass", None
        except LatticeTruncatedError as e:
            return "skipped", {"reason": str(e)}

    return Rule(rule_id, description, "implication", True, check)


def _nil_index_at_most_two(R: FiniteRing) -> bool:
    nil = inv.nilpotents_bool(R)
    idx = np.flatnonzero(nil)
    return bool((R.mul[idx, idx] == R.zero).all())


def _quotient_by_jacobson(R: FiniteRing) -> FiniteRing:
    def compute():
        return cons.quotient(R, inv.jacobson_radical(R), ideal_name="J")[0]
    return inv._cached(R, "quot_J", compute)


def _rule_r1(R: FiniteRing):
    forms = props.nj_symmetric_forms(R)
    if len({w is None for w in forms}) == 1:
        return "pass", None
    return "fail", {"forms": list(forms)}


def _rule_r22(R: FiniteRing):
    w_acb, w_bac = props.weak_symmetric_forms(R)
    if (w_acb is None) == (w_bac is None):
        return "pass", None
    return "fail", {"acb": w_acb, "bac": w_bac}


def _rule_r10(R: FiniteRing):
    try:
        if not _holds(R, "nj_symmetric"):
            return "vacuous", None
        maximal = inv.maximal_left_ideals(R)
    except LatticeTruncatedError as e:
        return "skipped", {"reason": str(e)}
    applicable = False
    for m in maximal:
        if inv.is_essential_left_ideal(R, m):
            continue
        applicable = True
        w = props._two_sided_witness(R, m, right_mult=True)
        if w is not None:
            return "fail", {"witness": w}
    return ("pass", None) if applicable else ("vacuous", None)


def _rule_r12(R: FiniteRing):
    Q = _quotient_by_jacobson(R)
    if not _holds(Q, "nj_symmetric"):
        return "vacuous", None
    v = props.check_property(R, "nj_symmetric")
    if v.holds:
        return "pass", None
    return "fail", {"witness": v.witness}


def _rule_r13(R: FiniteRing):
    try:
        nil_ideal = inv.upper_nilradical(R)
    except LatticeTruncatedError as e:
        return "skipped", {"reason": str(e)}
    Q, _ = cons.quotient(R, nil_ideal, ideal_name="Nstar")
    if not _holds(Q, "nj_symmetric"):
        return "vacuous", None
    v = props.check_property(R, "nj_symmetric")
    if v.holds:
        return "pass", None
    return "fail", {"ideal": mask_indices(nil_ideal), "witness": v.witness}


def _rule_r14(R: FiniteRing):
    lhs = _holds(R, "nj_symmetric")
    for e in mask_indices(inv.idempotents(R)):
        if e == R.zero and R.order > 1:
            continue
        C = cons.corner(R, e)
        ok = _holds(C, "nj_symmetric")
        if lhs and not ok:
            return "fail", {"direction": "ring->corner", "e": e}
    # converse: all corners NJ (e = 1 gives R itself) implies R NJ
    all_corners_nj = all(
        _holds(cons.corner(R, e), "nj_symmetric")
        for e in mask_indices(inv.idempotents(R))
        if not (e == R.zero and R.order > 1))
    if all_corners_nj and not lhs:
        return "fail", {"direction": "corners->ring"}
    return "pass", None


def _equiv_under_construction(rule_id, description, builder, ks):
    """NJ-symmetry transfers both ways across a matrix-shaped construction."""

    def check(R: FiniteRing):
        applicable = False
        lhs = None
        for k in ks:
            try:
                D = builder(R, k, max_order=DERIVED_SCAN_MAX_ORDER)
            except SizeError:
                continue
            applicable = True
            if lhs is None:
                lhs = _holds(R, "nj_symmetric")
            rhs = _holds(D, "nj_symmetric")
            if lhs != rhs:
                return "fail", {"k": k, "base": lhs, "derived": rhs}
        if not applicable:
            return "skipped", {"reason": "all derived rings exceed scan bound"}
        return "pass", None

    return Rule(rule_id, description, "equivalence", True, check)


def _rule_r17():
    z2, z3, z4 = cons.zmod(2), cons.zmod(3), cons.zmod(4)
    m2z2 = cons.matrix_ring(z2, 2)
    samples = [
        (z2, z2, cons.ring_bimodule(z2), cons.ring_bimodule(z2)),
        (z2, z3, cons.zero_bimodule(z2, z3), cons.zero_bimodule(z3, z2)),
        (z4, z2,
         cons.hom_bimodule(z2, _reduction_map(4, 2), np.arange(2), name="Z2"),
         cons.hom_bimodule(z2, np.arange(2), _reduction_map(4, 2), name="Z2")),
        (m2z2, z2, cons.zero_bimodule(m2z2, z2), cons.zero_bimodule(z2, m2z2)),
    ]
    for R1, R2, M, P in samples:
        S = cons.trivial_morita(R1, R2, M, P)
        lhs = _holds(S, "nj_symmetric")
        rhs = _holds(R1, "nj_symmetric") and _holds(R2, "nj_symmetric")
        if lhs != rhs:
            return "fail", {"sample": S.name, "ring": lhs, "components": rhs}
    return "pass", None


def _rule_r18():
    z2, z4 = cons.zmod(2), cons.zmod(4)
    m2z2 = cons.matrix_ring(z2, 2)
    samples = [
        (z2, z2, cons.ring_bimodule(z2)),
        (z4, z2, cons.hom_bimodule(z2, _reduction_map(4, 2), np.arange(2),
                                   name="Z2")),
        (z4, z4, cons.ring_bimodule(z4)),
        (m2z2, z2, cons.zero_bimodule(m2z2, z2)),
    ]
    for R1, R2, M in samples:
        S = cons.formal_triangular(R1, R2, M)
        lhs = _holds(S, "nj_symmetric")
        rhs = _holds(R1, "nj_symmetric") and _holds(R2, "nj_symmetric")
        if lhs != rhs:
            return "fail", {"sample": S.name, "ring": lhs, "components": rhs}
    return "pass", None


def _rule_r19():
    z2, z4 = cons.zmod(2), cons.zmod(4)
    m2z2 = cons.matrix_ring(z2, 2)
    samples = [
        (z4, two_z4_bimodule()),
        (z2, two_z4_over_z2_bimodule()),
        (m2z2, cons.zero_bimodule(m2z2, m2z2)),
    ]
    for R, A in samples:
        ext = cons.dorroh(R, A)
        if not ext.quasi_regular:
            return "fail", {"sample": ext.ring.name,
                            "reason": "quasi-regularity hypothesis expected"}
        lhs = _holds(ext.ring, "nj_symmetric")
        rhs = _holds(R, "nj_symmetric")
        if lhs != rhs:
            return "fail", {"sample": ext.ring.name, "extension": lhs,
                            "base": rhs}
    return "pass", None


def _rule_r23(R: FiniteRing):
    if not _holds(R, "nj_symmetric"):
        return "vacuous", None
    jac = inv.jacobson_bool(R)
    neg = R.neg_table()
    one_minus = R.add[R.one, neg]
    for e in mask_indices(inv.idempotents(R)):
        f = int(one_minus[e])
        er = R.mul[e]                       # e*r over r
        erf = R.mul[er, f]                  # e*r*(1-e)
        fre = R.mul[R.mul[f], e]            # (1-e)*r*e
        if not (jac[erf].all() and jac[fre].all()):
            r = int(np.argmax(~(jac[erf] & jac[fre])))
            return "fail", {"e": e, "r": r}
    return "pass", None


def _m2z2_example_triple() -> tuple[FiniteRing, int, int, int]:
    R = cons.matrix_ring(cons.zmod(2), 2)
    a = cons.matrix_index(2, 2, [[1, 0], [1, 0]])   # E11 + E21
    b = cons.matrix_unit(2, 2, 1, 1)                # E22
    c = cons.matrix_index(2, 2, [[0, 1], [0, 1]])   # E12 + E22
    return R, a, b, c


def _rule_r24():
    R, a, b, c = _m2z2_example_triple()
    abc = int(R.mul[R.mul[a, b], c])
    bac = int(R.mul[R.mul[b, a], c])
    e22 = cons.matrix_unit(2, 2, 1, 1)
    jac = inv.jacobson_radical(R)
    ok = (abc == R.zero and bac == e22 and not mask_contains(jac, bac)
          and not _holds(R, "nj_symmetric"))
    if ok:
        return "pass", {"a": a, "b": b, "c": c}
    return "fail", {"abc": abc, "bac": bac}


def _rule_r25():
    R = cons.matrix_ring(cons.zmod(3), 2)
    x = cons.matrix_unit(3, 2, 0, 1)                      # E12
    y = cons.matrix_index(3, 2, [[0, 0], [1, 1]])         # E21 + E22
    yxx = int(R.mul[R.mul[y, x], x])
    xyx = int(R.mul[R.mul[x, y], x])
    jac = inv.jacobson_radical(R)
    nil = inv.nilpotents_bool(R)
    ok = (bool(nil[yxx]) and not mask_contains(jac, xyx)
          and jac == mask_from_indices([R.zero]))
    if ok:
        return "pass", {"x": x, "y": y}
    return "fail", {"yxx": yxx, "xyx": xyx, "J": mask_indices(jac)}


def _rule_r26():
    R = cons.matrix_ring(cons.zmod(2), 2)
    gws = props.check_property(R, "gws")
    if gws.holds:
        return "fail", {"reason": "expected GWS to fail"}
    if not _nil_index_at_most_two(R):
        return "fail", {"reason": "expected nilpotents of square zero"}
    return "pass", {"gws_witness": gws.witness}


def _rule_r27():
    R = cons.matrix_ring(cons.zmod(2), 2)
    if _holds(R, "nj_symmetric"):
        return "fail", {"reason": "expected full ring to fail"}
    for e in mask_indices(inv.idempotents(R)):
        if e in (R.zero, R.one):
            continue
        C = cons.corner(R, e)
        if not _holds(C, "nj_symmetric"):
            return "fail", {"e": e}
    return "pass", None


def rule_catalog() -> list[Rule]:
    rules = [
        Rule("R1", "the three NJ-symmetry formulations agree",
             "equivalence", True, _rule_r1),
        _implication("R2", "symmetric implies NJ-symmetric",
                     ["symmetric"], ["nj_symmetric"]),
        _implication("R3", "semicommutative implies NJ-symmetric",
                     ["semicommutative"], ["nj_symmetric"]),
        _implication("R4", "weak symmetric implies NJ-symmetric",
                     ["weak_symmetric"], ["nj_symmetric"]),
        _implication("R5", "one-sided quasi-duo implies NJ-symmetric",
                     [], ["nj_symmetric"],
                     structural_hyp=lambda R: (_holds(R, "left_quasi_duo")
                                               or _holds(R, "right_quasi_duo"))),
        _implication("R6", "abelian J-clean implies NJ-symmetric",
                     ["abelian", "j_clean"], ["nj_symmetric"]),
        _implication("R7", "abelian J-quasipolar implies NJ-symmetric",
                     ["abelian", "j_quasipolar"], ["nj_symmetric"]),
        _implication("R8", "GWS with nilpotency index <= 2 implies NJ-symmetric",
                     ["gws"], ["nj_symmetric"],
                     structural_hyp=_nil_index_at_most_two),
        _implication("R9", "NJ-symmetric MELT implies left quasi-duo",
                     ["nj_symmetric", "melt"], ["left_quasi_duo"]),
        Rule("R10", "in an NJ-symmetric ring, non-essential maximal left "
             "ideals are two-sided", "implication", True, _rule_r10),
        _implication("R11", "NJ-symmetric exchange implies clean and quasi-duo",
                     ["nj_symmetric", "exchange"],
                     ["clean", "left_quasi_duo", "right_quasi_duo"]),
        Rule("R12", "R/J NJ-symmetric implies R NJ-symmetric",
             "implication", True, _rule_r12),
        Rule("R13", "R/I NJ-symmetric for a nil ideal I implies R NJ-symmetric",
             "implication", True, _rule_r13),
        Rule("R14", "NJ-symmetry is equivalent to NJ-symmetry of all corners",
             "equivalence", True, _rule_r14),
        _equiv_under_construction(
            "R15", "NJ-symmetry transfers both ways to upper triangular rings",
            cons.upper_triangular, (2, 3)),
        _equiv_under_construction(
            "R16", "NJ-symmetry transfers both ways to constant-diagonal rings",
            cons.constant_diagonal, (2, 3)),
        Rule("R17", "a trivial Morita context ring is NJ-symmetric iff both "
             "diagonal components are", "equivalence", False, _rule_r17),
        Rule("R18", "a formal triangular matrix ring is NJ-symmetric iff both "
             "diagonal components are", "equivalence", False, _rule_r18),
        Rule("R19", "a Dorroh extension with quasi-regular module is "
             "NJ-symmetric iff the base ring is", "equivalence", False,
             _rule_r19),
        Rule("R20", "NJ-symmetric semiperiodic implies R/J reduced",
             "implication", True,
             lambda R: _quotient_conclusion(R, "reduced")),
        Rule("R21", "NJ-symmetric semiperiodic implies R/J commutative",
             "implication", True,
             lambda R: _quotient_conclusion(R, "commutative")),
        Rule("R22", "the two weak-symmetry formulations agree",
             "equivalence", True, _rule_r22),
        Rule("R23", "in NJ-symmetric rings e*r*(1-e) and (1-e)*r*e lie in J",
             "implication", True, _rule_r23),
        Rule("R24", "the standard triple breaks NJ-symmetry in M2(Z2)",
             "witness", False, _rule_r24),
        Rule("R25", "in M2(Z3): y*x*x nilpotent, x*y*x outside J, J = 0",
             "witness", False, _rule_r25),
        Rule("R26", "M2(Z2) is not GWS and its nilpotents square to zero",
             "witness", False, _rule_r26),
        Rule("R27", "all proper corners of M2(Z2) are NJ-symmetric, "
             "the ring is not", "witness", False, _rule_r27),
    ]
    return rules


def _quotient_conclusion(R: FiniteRing, concl: str):
    if not (_holds(R, "nj_symmetric") and _holds(R, "semiperiodic")):
        return "vacuous", None
    Q = _quotient_by_jacobson(R)
    v = props.check_property(Q, concl)
    if v.holds:
        return "pass", None
    return "fail", {"conclusion": concl, "witness": v.witness}


def run_rules(corpus: Corpus, rules: Optional[list] = None,
              threads: int = 1) -> RuleReport:
    """Evaluate every rule on every applicable corpus ring."""
    if rules is None:
        rules = rule_catalog()
    jobs = []
    for rule in rules:
        if rule.per_ring:
            for i, R in enumerate(corpus.rings):
                jobs.append((rule, i, R))
        else:
            jobs.append((rule, -1, None))

    def run(job):
        rule, i, R = job
        if R is None:
            status, detail = rule.check()
            return RuleEntry(rule.id, "-", "-", status, detail)
        status, detail = rule.check(R)
        return RuleEntry(rule.id, R.name, canonical_fingerprint(R),
                         status, detail)

    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(run, jobs))
    else:
        results = [run(j) for j in jobs]
    # canonical order: catalog order, then corpus order (map preserves it)
    return RuleReport(results, corpus_skipped=list(corpus.skipped))


def diagnostic_dump(corpus: Corpus, entry: RuleEntry) -> str:
    """Ring serialization + witness for a failing rule entry."""
    parts = [f"rule {entry.rule_id} FAILED on {entry.ring_name}",
             f"detail: {entry.detail}"]
    for R in corpus.rings:
        if canonical_fingerprint(R) == entry.fingerprint:
            parts.append(serialize_ring(R))
            break
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# Counterexample search and full analysis
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    ring: Optional[FiniteRing]
    verdicts: Optional[dict] = None
    examined: int = 0

    @property
    def exhausted(self) -> bool:
        return self.ring is None


def search_counterexample(hypotheses: list, negated_conclusion: str,
                          corpus: Optional[Corpus] = None,
                          budget: Optional[int] = None,
                          seed: int = 0) -> SearchResult:
    """First corpus ring satisfying the hypotheses but not the conclusion.

    If the budget exceeds the corpus size, seeded random constructions fill
    the remainder.
    """
    for name in list(hypotheses) + [negated_conclusion]:
        if name not in props.PROPERTY_CHECKS:
            raise props.UnknownPropertyError(f"unknown property: {name!r}")
    if corpus is None:
        corpus = default_corpus()
    rings = list(corpus.rings)
    if budget is None:
        budget = len(rings)
    if budget > len(rings):
        rings.extend(random_corpus(seed, budget - len(rings)))
    examined = 0
    for R in rings[:budget]:
        examined += 1
        try:
            if not all(_holds(R, h) for h in hypotheses):
                continue
            v = props.check_property(R, negated_conclusion)
        except LatticeTruncatedError:
            continue
        if not v.holds:
            verdicts = {h: props.check_property(R, h)
                        for h in hypotheses}
            verdicts[negated_conclusion] = v
            return SearchResult(R, verdicts, examined)
    return SearchResult(None, None, examined)


def analyze(R: FiniteRing, cache=None,
            cap: int = inv.DEFAULT_LATTICE_CAP) -> dict:
    """Full report: radicals plus every property verdict.

    ``cache`` is an optional ReportCache; results are keyed by the table
    fingerprint, so cache hits and misses agree.
    """
    fp = canonical_fingerprint(R)
    if cache is not None:
        hit = cache.get(fp)
        if hit is not None:
            return hit
    report = {
        "format": "analysis v1",
        "ring": R.name,
        "order": R.order,
        "fingerprint": fp,
        "radicals": inv.radical_report(R, cap).to_dict(),
        "properties": {name: props.check_property(R, name).to_dict()
                       for name in sorted(props.PROPERTY_CHECKS)},
    }
    if cache is not None:
        cache.put(fp, report)
    return report
