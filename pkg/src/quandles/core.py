"""Finite quandles as immutable left-translation tables.

A quandle is stored as a square tuple-of-tuples: table[a][b] is a > b, so row
a is the left translation L_a.  The three axioms (a > a = a, every L_a is a
permutation, a > (b > c) = (a > b) > (a > c)) are enforced by validate(),
which every constructor goes through.  Elements are 0-based indices; the
file format used by the command line shifts to 1-based on the way out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import grouptables, permgroup
from .errors import AxiomViolation, NotACongruence, NotAUnit, NotClosed

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Quandle:
    """An immutable quandle; equality and hashing look at the table only."""

    table: Table
    label: str | None = field(default=None, compare=False)
    _ldiv: Table = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self):
        object.__setattr__(
            self, "_ldiv", tuple(permgroup.inverse(row) for row in self.table)
        )

    @property
    def order(self) -> int:
        return len(self.table)

    def left(self, a: int, b: int) -> int:
        """a > b."""
        return self.table[a][b]

    def ldiv(self, a: int, c: int) -> int:
        """The unique x with a > x = c."""
        return self._ldiv[a][c]

    def row(self, a: int) -> tuple[int, ...]:
        """The left translation L_a as an image tuple."""
        return self.table[a]

    def relabel(self, label: str | None) -> "Quandle":
        return Quandle(self.table, label)

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"<Quandle{tag} of order {self.order}>"


def validate(table: Sequence[Sequence[int]], label: str | None = None) -> Quandle:
    """Build a Quandle after checking all three axioms.

    Axioms are checked in order (idempotence, row bijectivity, left
    self-distributivity) and the first failure is reported with its witness.
    """
    t = tuple(tuple(row) for row in table)
    n = len(t)
    if n == 0:
        raise ValueError("a quandle needs at least one element")
    for a, row in enumerate(t):
        if len(row) != n:
            raise AxiomViolation(2, (a,))
    for a in range(n):
        if not (0 <= t[a][a] < n) or t[a][a] != a:
            raise AxiomViolation(1, (a,))
    full = set(range(n))
    for a in range(n):
        if set(t[a]) != full:
            raise AxiomViolation(2, (a,))
    for a in range(n):
        ta = t[a]
        for b in range(n):
            tab = ta[b]
            tb = t[b]
            tabrow = t[tab]
            for c in range(n):
                if ta[tb[c]] != tabrow[ta[c]]:
                    raise AxiomViolation(3, (a, b, c))
    return Quandle(t, label)


def trivial(n: int) -> Quandle:
    """x > y = y on n elements."""
    if n < 1:
        raise ValueError("order must be positive")
    row = tuple(range(n))
    return validate(tuple(row for _ in range(n)), label=f"trivial({n})")


def affine(n: int, t: int) -> Quandle:
    """x > y = t(y - x) + x on Z_n; t must be a unit mod n."""
    if n < 1:
        raise ValueError("order must be positive")
    t %= n
    if math.gcd(t, n) != 1:
        raise NotAUnit(n, t)
    table = tuple(
        tuple((t * (b - a) + a) % n for b in range(n)) for a in range(n)
    )
    return validate(table, label=f"affine({n},{t})")


def dihedral(n: int) -> Quandle:
    """x > y = 2x - y on Z_n (the affine quandle with multiplier -1)."""
    return affine(n, n - 1).relabel(f"dihedral({n})")


def conj(group: Sequence[Sequence[int]], exponent: int = 1,
         label: str | None = None) -> Quandle:
    """Conjugation quandle x > y = x^{-k} y x^k on a whole group."""
    g = grouptables.validate_group(group)
    m = len(g)
    inv = grouptables.inverses_of(g)
    table = []
    for x in range(m):
        xk = grouptables.power(g, x, exponent)
        xki = inv[xk]
        table.append(tuple(g[g[xki][y]][xk] for y in range(m)))
    return validate(tuple(table), label=label or f"conj(order {m}, k={exponent})")


def conj_subset(group: Sequence[Sequence[int]], subset: Sequence[int],
                exponent: int = 1, label: str | None = None) -> Quandle:
    """Conjugation quandle on a conjugation-closed subset of a group."""
    g = grouptables.validate_group(group)
    members = grouptables.check_conjugation_closed(g, subset, exponent)
    index = {x: i for i, x in enumerate(members)}
    inv = grouptables.inverses_of(g)
    table = []
    for x in members:
        xk = grouptables.power(g, x, exponent)
        xki = inv[xk]
        table.append(tuple(index[g[g[xki][y]][xk]] for y in members))
    return validate(tuple(table), label=label or f"conj-subset(order {len(members)})")


def disjoint_union(*quandles: Quandle) -> Quandle:
    """Disjoint union; across blocks x > y = y."""
    if not quandles:
        raise ValueError("need at least one quandle")
    if len(quandles) == 1:
        return quandles[0]
    n = sum(q.order for q in quandles)
    offsets = []
    acc = 0
    for q in quandles:
        offsets.append(acc)
        acc += q.order
    table = []
    for qi, q in enumerate(quandles):
        oi = offsets[qi]
        for a in range(q.order):
            row = []
            for qj, r in enumerate(quandles):
                oj = offsets[qj]
                if qi == qj:
                    row.extend(oi + v for v in q.table[a])
                else:
                    row.extend(range(oj, oj + r.order))
            table.append(tuple(row))
    label = " + ".join(q.label or "?" for q in quandles)
    return validate(tuple(table), label=label)


def direct_product(*quandles: Quandle) -> Quandle:
    """Componentwise product; pairs are flattened in row-major order."""
    if not quandles:
        raise ValueError("need at least one quandle")
    result = quandles[0]
    for q in quandles[1:]:
        n1, n2 = result.order, q.order
        t1, t2 = result.table, q.table
        table = tuple(
            tuple(t1[a1][b1] * n2 + t2[a2][b2]
                  for b1 in range(n1) for b2 in range(n2))
            for a1 in range(n1) for a2 in range(n2)
        )
        result = Quandle(table)
    label = " x ".join(q.label or "?" for q in quandles)
    return validate(result.table, label=label)


def subquandle_closure(q: Quandle, seed: Sequence[int]) -> tuple[int, ...]:
    """Smallest subset containing the seed closed under >, returned sorted.

    In a finite quandle closure under > alone suffices: each L_a restricts to
    an injection of the closed set into itself, hence a bijection, so left
    division never escapes.
    """
    members = set(seed)
    if not members:
        raise ValueError("seed must be nonempty")
    if not all(0 <= x < q.order for x in members):
        raise ValueError("seed contains elements outside the carrier")
    table = q.table
    grew = True
    while grew:
        grew = False
        for a in tuple(members):
            row = table[a]
            for b in tuple(members):
                v = row[b]
                if v not in members:
                    members.add(v)
                    grew = True
    return tuple(sorted(members))


def induced_subquandle(q: Quandle, subset: Sequence[int]) -> Quandle:
    """The quandle structure on a closed subset, reindexed along sorted order."""
    members = tuple(sorted(set(subset)))
    index = {x: i for i, x in enumerate(members)}
    table = []
    for a in members:
        row = []
        for b in members:
            v = q.table[a][b]
            if v not in index:
                raise NotClosed((a, b))
            row.append(index[v])
        table.append(tuple(row))
    return Quandle(tuple(table))


def congruence_witness(q: Quandle, class_of: Sequence[int]) -> Optional[tuple[int, ...]]:
    """First violation of the two congruence conditions, or None.

    A witness (a, b, c, d, 1) means (a>c, b>d) split although a ~ b and
    c ~ d; (a, b, c, d, 2) means the left divisions split.
    """
    n = q.order
    if len(class_of) != n:
        raise ValueError("partition size differs from quandle order")
    related = [[x for x in range(n) if class_of[x] == class_of[y]] for y in range(n)]
    for a in range(n):
        for b in related[a]:
            for c in range(n):
                for d in related[c]:
                    if class_of[q.table[a][c]] != class_of[q.table[b][d]]:
                        return (a, b, c, d, 1)
                    if class_of[q.ldiv(a, c)] != class_of[q.ldiv(b, d)]:
                        return (a, b, c, d, 2)
    return None


def _classes_to_class_of(n: int, classes: Sequence[Sequence[int]]) -> list[int]:
    class_of = [-1] * n
    for i, cls in enumerate(classes):
        for x in cls:
            if not 0 <= x < n or class_of[x] != -1:
                raise ValueError("not a partition of the carrier")
            class_of[x] = i
    if -1 in class_of:
        raise ValueError("not a partition of the carrier")
    return class_of


def quotient(q: Quandle, partition: Sequence[Sequence[int]],
             label: str | None = None) -> tuple[Quandle, tuple[int, ...]]:
    """Quotient by a congruence partition, with the projection map.

    The partition is given as blocks; they are renumbered by smallest member.
    Raises NotACongruence if the partition fails either congruence condition.
    """
    n = q.order
    blocks = sorted((tuple(sorted(cls)) for cls in partition), key=min)
    class_of = _classes_to_class_of(n, blocks)
    witness = congruence_witness(q, class_of)
    if witness is not None:
        raise NotACongruence(witness)
    reps = [cls[0] for cls in blocks]
    table = tuple(
        tuple(class_of[q.table[a][b]] for b in reps) for a in reps
    )
    return validate(table, label=label), tuple(class_of)


def iso_signature(q: Quandle) -> tuple:
    """A cheap isomorphism invariant used for bucketing and pruning."""
    orbit_parts = permgroup.orbits(q.table)
    sizes = tuple(sorted(len(p) for p in orbit_parts))
    types = tuple(sorted(permgroup.cycle_type(row) for row in q.table))
    return (q.order, sizes, types)


def _element_invariants(q: Quandle) -> list[tuple]:
    orbit_parts = permgroup.orbits(q.table)
    orbit_size = [0] * q.order
    for part in orbit_parts:
        for x in part:
            orbit_size[x] = len(part)
    return [
        (permgroup.cycle_type(q.table[a]), orbit_size[a]) for a in range(q.order)
    ]


def is_isomorphic(q1: Quandle, q2: Quandle) -> Optional[tuple[int, ...]]:
    """An isomorphism q1 -> q2 as an image tuple, or None.

    Backtracking over images, pruned by per-element invariants (cycle type of
    the translation, orbit size); a pair (x, y) is rechecked as soon as the
    last of x, y, x > y receives an image, so a completed map is a bijective
    homomorphism.
    """
    n = q1.order
    if n != q2.order:
        return None
    inv1 = _element_invariants(q1)
    inv2 = _element_invariants(q2)
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [
        tuple(b for b in range(n) if inv2[b] == inv1[a]) for a in range(n)
    ]
    # Positions where each value occurs, to finish deferred homomorphism checks.
    positions: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            positions[q1.table[x][y]].append((x, y))
    order = sorted(range(n), key=lambda a: (len(candidates[a]), a))
    image = [-1] * n
    used = [False] * n
    t1, t2 = q1.table, q2.table

    def consistent(a: int, b: int) -> bool:
        # a's image is tentatively b while we check, so pairs whose value is
        # a itself are not silently skipped.
        def img(z: int) -> int:
            return b if z == a else image[z]

        for x in range(n):
            px = img(x)
            if px == -1:
                continue
            iv = img(t1[a][x])
            if iv != -1 and t2[b][px] != iv:
                return False
            iv = img(t1[x][a])
            if iv != -1 and t2[px][b] != iv:
                return False
        for (x, y) in positions[a]:
            ix, iy = img(x), img(y)
            if ix != -1 and iy != -1 and t2[ix][iy] != b:
                return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        a = order[k]
        for b in candidates[a]:
            if not used[b] and consistent(a, b):
                image[a] = b
                used[b] = True
                if extend(k + 1):
                    return True
                image[a] = -1
                used[b] = False
        return False

    return tuple(image) if extend(0) else None
