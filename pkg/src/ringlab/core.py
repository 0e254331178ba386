"""Finite unital rings as explicit operation tables.

Elements of a ring of order n are the dense indices 0..n-1; addition and
multiplication are n x n lookup tables.  Everything downstream (radicals,
predicates, the rule harness) works against this one representation.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

#: Hard cap on ring order accepted from constructions.  Keeps the table
#: memory bounded; raise at your own risk.
MAX_ORDER = 4096


class RingError(Exception):
    """Base class for all ringlab errors."""


class StructureError(RingError):
    """Malformed tables (wrong shape, out-of-range entries).

    Distinct from an axiom violation: a structurally broken table cannot
    even be interpreted as a binary operation.
    """


class SizeError(RingError):
    """A construction would exceed the maximum supported order."""


class LatticeTruncatedError(RingError):
    """An ideal-lattice computation hit its cap; raise the cap to proceed."""


# ---------------------------------------------------------------------------
# Subset masks
#
# A subset of ring elements is a Python int used as a bit-vector: bit i set
# iff element i is a member.  Ints are hashable (ideal dedup), support O(1)
# membership, and convert cheaply to numpy boolean arrays for vector scans.
# ---------------------------------------------------------------------------

def mask_from_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_contains(mask: int, i: int) -> bool:
    return bool((mask >> int(i)) & 1)


def mask_from_bool(arr: np.ndarray) -> int:
    m = 0
    for i in np.flatnonzero(arr):
        m |= 1 << int(i)
    return m


def mask_to_bool(mask: int, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=bool)
    for i in mask_indices(mask):
        out[i] = True
    return out


def mask_size(mask: int) -> int:
    return int(mask).bit_count()


class FiniteRing:
    """A finite associative unital ring given by explicit tables.

    Immutable after construction; all tables are read-only numpy arrays.
    Safe to share across threads.
    """

    __slots__ = ("order", "add", "mul", "zero", "one", "labels", "name",
                 "_neg", "_fingerprint", "_cache")

    def __init__(self, add, mul, zero: int, one: int, name: str = "",
                 labels: Optional[Sequence[str]] = None):
        add = np.ascontiguousarray(add, dtype=np.int32)
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        if add.ndim != 2 or add.shape[0] != add.shape[1]:
            raise StructureError(f"add table is not square: shape {add.shape}")
        n = add.shape[0]
        if n == 0:
            raise StructureError("empty carrier")
        if mul.shape != (n, n):
            raise StructureError(
                f"mul table shape {mul.shape} does not match order {n}")
        if add.min() < 0 or add.max() >= n:
            raise StructureError("add table entry out of range")
        if mul.min() < 0 or mul.max() >= n:
            raise StructureError("mul table entry out of range")
        if not (0 <= zero < n) or not (0 <= one < n):
            raise StructureError("zero/one index out of range")
        if zero == one and n > 1:
            raise StructureError("zero == one in a ring of order > 1")
        if labels is not None and len(labels) != n:
            raise StructureError("label count does not match order")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.order = n
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.labels = list(labels) if labels is not None else None
        self.name = name
        self._neg = None
        self._fingerprint = None
        self._cache = {}

    def __repr__(self) -> str:
        return f"FiniteRing({self.name or '?'}, order={self.order})"

    def elements(self) -> range:
        return range(self.order)

    def neg_table(self) -> np.ndarray:
        """Per-element additive inverse, as a lookup vector."""
        if self._neg is None:
            neg = np.argmax(self.add == self.zero, axis=1).astype(np.int32)
            neg.setflags(write=False)
            self._neg = neg
        return self._neg

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def same_tables(self, other: "FiniteRing") -> bool:
        """Table-level equality (not isomorphism)."""
        return (self.order == other.order and self.zero == other.zero
                and self.one == other.one
                and bool(np.array_equal(self.add, other.add))
                and bool(np.array_equal(self.mul, other.mul)))


def neg(R: FiniteRing, a: int) -> int:
    return int(R.neg_table()[a])


def sub(R: FiniteRing, a: int, b: int) -> int:
    return int(R.add[a, R.neg_table()[b]])


def power(R: FiniteRing, a: int, k: int) -> int:
    """a**k with a**0 = 1."""
    if k < 0:
        raise ValueError("negative exponent")
    acc = R.one
    for _ in range(k):
        acc = int(R.mul[acc, a])
    return acc


@dataclass
class AxiomReport:
    ok: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def _first_true(mask2d: np.ndarray) -> tuple:
    """Lexicographically least True coordinate of a boolean array."""
    flat = int(np.argmax(mask2d.reshape(-1)))
    return tuple(int(x) for x in np.unravel_index(flat, mask2d.shape))


def verify_axioms(R: FiniteRing, sample_triples: Optional[int] = None,
                  seed: int = 0) -> AxiomReport:
    """Check the ring axioms, returning the first violated axiom.

    Pairwise axioms (identities, commutativity, inverses) are always checked
    exhaustively.  The O(n^3) triple axioms (associativity, distributivity)
    are exhaustive by default; pass ``sample_triples`` to check that many
    seeded random triples instead (for large orders).

    The reported witness is the lexicographically least violating tuple.
    """
    n = R.order
    add, mul = R.add, R.mul
    idx = np.arange(n)

    # Identities first: a broken identity should be named as such even when
    # it also breaks associativity downstream.
    bad = add[R.zero] != idx
    if bad.any():
        return AxiomReport(False, "additive identity", (int(np.argmax(bad)),))
    bad = add != add.T
    if bad.any():
        return AxiomReport(False, "additive commutativity", _first_true(bad))
    bad = ~(add == R.zero).any(axis=1)
    if bad.any():
        return AxiomReport(False, "additive inverse", (int(np.argmax(bad)),))
    bad = (mul[R.one] != idx) | (mul[:, R.one] != idx)
    if bad.any():
        return AxiomReport(False, "multiplicative identity",
                           (int(np.argmax(bad)),))

    if sample_triples is None:
        for a in range(n):
            bad = add[add[a]] != add[a][add]
            if bad.any():
                b, c = _first_true(bad)
                return AxiomReport(False, "additive associativity", (a, b, c))
        for a in range(n):
            bad = mul[mul[a]] != mul[a][mul]
            if bad.any():
                b, c = _first_true(bad)
                return AxiomReport(False, "multiplicative associativity",
                                   (a, b, c))
        for a in range(n):
            row = mul[a]
            bad = row[add] != add[row[:, None], row[None, :]]
            if bad.any():
                b, c = _first_true(bad)
                return AxiomReport(False, "left distributivity", (a, b, c))
        for a in range(n):
            col = mul[:, a]
            bad = col[add] != add[col[:, None], col[None, :]]
            if bad.any():
                b, c = _first_true(bad)
                return AxiomReport(False, "right distributivity", (a, b, c))
    else:
        rng = np.random.default_rng(seed)
        t = rng.integers(0, n, size=(int(sample_triples), 3))
        a, b, c = t[:, 0], t[:, 1], t[:, 2]
        checks = [
            ("additive associativity", add[add[a, b], c] != add[a, add[b, c]]),
            ("multiplicative associativity",
             mul[mul[a, b], c] != mul[a, mul[b, c]]),
            ("left distributivity",
             mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]),
            ("right distributivity",
             mul[add[b, c], a] != add[mul[b, a], mul[c, a]]),
        ]
        for axiom, bad in checks:
            if bad.any():
                hits = np.flatnonzero(bad)
                triples = sorted((int(a[i]), int(b[i]), int(c[i]))
                                 for i in hits)
                return AxiomReport(False, axiom, triples[0])
    return AxiomReport(True)


def canonical_fingerprint(R: FiniteRing) -> str:
    """Deterministic digest of the tables (not isomorphism-invariant).

    Equal tables give equal digests; labels and the display name do not
    contribute.
    """
    if R._fingerprint is None:
        h = hashlib.sha256()
        h.update(f"ring-fp-v1 {R.order} {R.zero} {R.one}".encode())
        h.update(R.add.astype("<i4").tobytes())
        h.update(R.mul.astype("<i4").tobytes())
        R._fingerprint = h.hexdigest()
    return R._fingerprint


# ---------------------------------------------------------------------------
# Ring homomorphisms
# ---------------------------------------------------------------------------

@dataclass
class RingHom:
    """A ring homomorphism given by its per-element value table."""

    domain: FiniteRing
    codomain: FiniteRing
    map: np.ndarray

    def __post_init__(self):
        m = np.ascontiguousarray(self.map, dtype=np.int32)
        if m.shape != (self.domain.order,):
            raise StructureError("hom table length does not match domain")
        if m.min() < 0 or m.max() >= self.codomain.order:
            raise StructureError("hom table entry out of range")
        m.setflags(write=False)
        self.map = m

    def __call__(self, a: int) -> int:
        return int(self.map[a])

    def violation(self) -> Optional[tuple]:
        """First witness that this is not a homomorphism, or None."""
        f = self.map
        if f[self.domain.one] != self.codomain.one:
            return ("one", self.domain.one)
        bad = f[self.domain.add] != self.codomain.add[f[:, None], f[None, :]]
        if bad.any():
            return ("add",) + _first_true(bad)
        bad = f[self.domain.mul] != self.codomain.mul[f[:, None], f[None, :]]
        if bad.any():
            return ("mul",) + _first_true(bad)
        return None

    def is_hom(self) -> bool:
        return self.violation() is None

    def is_surjective(self) -> bool:
        return len(set(self.map.tolist())) == self.codomain.order

    def kernel(self) -> int:
        return mask_from_bool(self.map == self.codomain.zero)


# ---------------------------------------------------------------------------
# Serialization: the `ring v1` text record
# ---------------------------------------------------------------------------

def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _unquote(s: str) -> str:
    if len(s) < 2 or s[0] != '"' or s[-1] != '"':
        raise ValueError("expected quoted name")
    out, i, body = [], 0, s[1:-1]
    while i < len(body):
        ch = body[i]
        if ch == "\\" and i + 1 < len(body):
            out.append(body[i + 1])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def serialize_ring(R: FiniteRing) -> str:
    """Write a ring as a `ring v1` text record (bit-exact round trip)."""
    lines = [f"ring v1 {R.order} {R.zero} {R.one} {_quote(R.name)}"]
    for table in (R.add, R.mul):
        for row in table:
            lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_ring(text: str) -> FiniteRing:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty ring record")
    head = lines[0].split(None, 5)
    if len(head) < 5 or head[0] != "ring" or head[1] != "v1":
        raise ValueError(f"bad ring header: {lines[0]!r}")
    n = int(head[2])
    zero = int(head[3])
    one = int(head[4])
    name = _unquote(head[5].strip()) if len(head) > 5 else ""
    if len(lines) != 1 + 2 * n:
        raise ValueError(f"expected {2 * n} table rows, got {len(lines) - 1}")
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    add = np.array(rows[:n], dtype=np.int32)
    mul = np.array(rows[n:], dtype=np.int32)
    return FiniteRing(add, mul, zero, one, name=name)
