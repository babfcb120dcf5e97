"""Congruences of finite quandles and the chains built from them.

A congruence is an equivalence relation compatible with the operation in
both directions: related arguments give related products, and related
products with related left factors force related right factors.  Quotients
by congruences are again quandles (see core.quotient).  This module also
builds the inner and transvection groups, the orbit congruence of a normal
subgroup, the congruence identifying equal rows, and the two descending
chains derived from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from . import core, permgroup
from .core import Quandle
from .errors import CapExceeded, NotACongruence, NotNormal
from .permgroup import PermGroup

DEFAULT_CONGRUENCE_CAP = 100_000


@dataclass(frozen=True)
class Congruence:
    """A partition of 0..n-1 in canonical form.

    Classes are sorted tuples ordered by smallest member, and class ids in
    class_of follow that order, so equal partitions compare equal.
    """

    n: int
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_class_of(labels: Sequence[int]) -> "Congruence":
        n = len(labels)
        first_seen: dict[int, int] = {}
        buckets: list[list[int]] = []
        for x, lab in enumerate(labels):
            if lab not in first_seen:
                first_seen[lab] = len(buckets)
                buckets.append([])
            buckets[first_seen[lab]].append(x)
        classes = tuple(tuple(b) for b in buckets)
        class_of = [0] * n
        for i, cls in enumerate(classes):
            for x in cls:
                class_of[x] = i
        return Congruence(n, tuple(class_of), classes)

    @staticmethod
    def from_classes(n: int, classes: Iterable[Sequence[int]]) -> "Congruence":
        class_of = [-1] * n
        for i, cls in enumerate(classes):
            for x in cls:
                if not 0 <= x < n or class_of[x] != -1:
                    raise ValueError("not a partition of the carrier")
                class_of[x] = i
        if -1 in class_of:
            raise ValueError("not a partition of the carrier")
        return Congruence.from_class_of(class_of)

    @staticmethod
    def zero(n: int) -> "Congruence":
        """The identity relation: all classes singletons."""
        return Congruence.from_class_of(tuple(range(n)))

    @staticmethod
    def one(n: int) -> "Congruence":
        """The full relation: a single class."""
        return Congruence.from_class_of((0,) * n)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def is_zero(self) -> bool:
        return len(self.classes) == self.n

    @property
    def is_one(self) -> bool:
        return len(self.classes) == 1

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def refines(self, other: "Congruence") -> bool:
        """True when every class of self sits inside a class of other."""
        if self.n != other.n:
            raise ValueError("partitions of different carriers")
        oc = other.class_of
        return all(oc[cls[0]] == oc[x] for cls in self.classes for x in cls)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All related pairs (a, b) with a < b."""
        for cls in self.classes:
            for i, a in enumerate(cls):
                for b in cls[i + 1:]:
                    yield (a, b)


def join(a: Congruence, b: Congruence) -> Congruence:
    """Smallest congruence containing both.

    For congruences the equivalence-relation join (transitive closure of the
    union) is already compatible both ways: any chain witnessing a join
    relation maps through the operation one step at a time.
    """
    if a.n != b.n:
        raise ValueError("partitions of different carriers")
    parent = list(range(a.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cong in (a, b):
        for cls in cong.classes:
            root = find(cls[0])
            for x in cls[1:]:
                parent[find(x)] = root
    return Congruence.from_class_of(tuple(find(x) for x in range(a.n)))


def is_congruence(q: Quandle, partition) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Check both compatibility conditions; returns (ok, witness).

    The witness is (a, b, c, d, direction) with direction 1 for products
    and 2 for left divisions, as produced by core.congruence_witness.
    """
    cong = _coerce(q.order, partition)
    witness = core.congruence_witness(q, cong.class_of)
    return (witness is None, witness)


def _coerce(n: int, partition) -> Congruence:
    if isinstance(partition, Congruence):
        if partition.n != n:
            raise ValueError("partition size differs from quandle order")
        return partition
    return Congruence.from_classes(n, partition)


def congruence_generated(q: Quandle, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing the given pairs.

    Fixed-point closure: merge the seed pairs, then repeatedly merge the
    one-sided images of every merged pair until a full pass stays clean.
    For a class pair (r, b) and every carrier element c, the instances
    r>c ~ b>c, c>r ~ c>b and their left-division twins are unioned; the
    two-sided instances a>c ~ b>d then follow by transitivity through b>c,
    so the fixed point satisfies both congruence conditions in full.  Each
    merge drops the class count, so at most n - 1 passes run.
    """
    n = q.order
    table = q.table
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[ry] = rx
        return True

    for a, b in pairs:
        union(a, b)
    dirty = True
    while dirty:
        dirty = False
        roots = [find(x) for x in range(n)]
        members: dict[int, list[int]] = {}
        for x, r in enumerate(roots):
            members.setdefault(r, []).append(x)
        for cls in members.values():
            base = cls[0]
            for b in cls[1:]:
                for c in range(n):
                    if union(table[base][c], table[b][c]):
                        dirty = True
                    if union(q.ldiv(base, c), q.ldiv(b, c)):
                        dirty = True
                    if union(table[c][base], table[c][b]):
                        dirty = True
                    if union(q.ldiv(c, base), q.ldiv(c, b)):
                        dirty = True
    return Congruence.from_class_of(tuple(find(x) for x in range(n)))


def all_congruences(q: Quandle, cap: int = DEFAULT_CONGRUENCE_CAP) -> tuple[Congruence, ...]:
    """The whole congruence lattice, via join closure of principal congruences.

    Every congruence is the join of the principal congruences of its related
    pairs, so closing the principal ones under binary joins is exhaustive.
    Results are sorted finest first (descending class count breaks no
    refinement order).  Raises CapExceeded if the lattice outgrows cap.
    """
    n = q.order
    found: set[Congruence] = {Congruence.zero(n)}
    work: list[Congruence] = []
    for a in range(n):
        for b in range(a + 1, n):
            cong = congruence_generated(q, [(a, b)])
            if cong not in found:
                found.add(cong)
                work.append(cong)
    while work:
        x = work.pop()
        for y in tuple(found):
            j = join(x, y)
            if j not in found:
                if len(found) >= cap:
                    raise CapExceeded("congruence enumeration", cap)
                found.add(j)
                work.append(j)
    return tuple(sorted(found, key=lambda c: (-c.num_classes, c.class_of)))


def _set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of 0..n-1 as restricted growth strings."""
    labels = [0] * n

    def grow(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for lab in range(top + 2):
            labels[i] = lab
            yield from grow(i + 1, max(top, lab))

    if n == 0:
        yield ()
    else:
        yield from grow(1, 0)


def all_congruences_scan(q: Quandle, max_order: int = 8) -> tuple[Congruence, ...]:
    """Independent oracle: test every set partition of the carrier.

    Bell numbers explode, so this refuses orders above max_order; it exists
    to cross-validate the join-closure enumeration on small quandles.
    """
    n = q.order
    if n > max_order:
        raise CapExceeded("partition scan", max_order)
    out = []
    for labels in _set_partitions(n):
        if core.congruence_witness(q, labels) is None:
            out.append(Congruence.from_class_of(labels))
    return tuple(sorted(out, key=lambda c: (-c.num_classes, c.class_of)))


def inn(q: Quandle, cap: int = permgroup.DEFAULT_CLOSURE_CAP) -> PermGroup:
    """Inner group: closure of all left translations."""
    return permgroup.closure(q.table, degree=q.order, cap=cap)


def trans(q: Quandle, cap: int = permgroup.DEFAULT_CLOSURE_CAP) -> PermGroup:
    """Transvection group: closure of all L_a L_b^{-1}."""
    return trans_rel(q, Congruence.one(q.order), cap=cap)


def trans_rel(q: Quandle, cong: Congruence,
              cap: int = permgroup.DEFAULT_CLOSURE_CAP) -> PermGroup:
    """Transvection group relative to a congruence: <L_a L_b^{-1} : a ~ b>.

    Within each class all pairs reduce to pairs against the class base,
    since L_a L_b^{-1} = (L_a L_e^{-1})(L_b L_e^{-1})^{-1}.
    """
    if cong.n != q.order:
        raise ValueError("congruence size differs from quandle order")
    gens = []
    for cls in cong.classes:
        base_inv = permgroup.inverse(q.table[cls[0]])
        for a in cls[1:]:
            gens.append(permgroup.compose(q.table[a], base_inv))
    return permgroup.closure(gens, degree=q.order, cap=cap)


def orbit_congruence(q: Quandle, group: PermGroup) -> Congruence:
    """Orbit partition of a subgroup normal in the inner group.

    Normality is rechecked here (conjugates of the subgroup's generators by
    the rows of q must land back in the subgroup), and the orbit partition
    is rechecked to be a congruence; both are cheap at this scale and catch
    misuse early.
    """
    if group.degree != q.order:
        raise ValueError("group degree differs from quandle order")
    for row in q.table:
        for gen in group.generators:
            if permgroup.conjugate(gen, row) not in group:
                raise NotNormal((gen, row))
    parts = permgroup.orbits(group, range(q.order))
    cong = Congruence.from_classes(q.order, parts)
    witness = core.congruence_witness(q, cong.class_of)
    if witness is not None:
        raise NotACongruence(witness)
    return cong


def lambda_congruence(q: Quandle) -> Congruence:
    """The congruence relating elements whose rows coincide.

    Q is faithful exactly when this is the identity partition.
    """
    seen: dict[tuple[int, ...], int] = {}
    labels = []
    for row in q.table:
        if row not in seen:
            seen[row] = len(seen)
        labels.append(seen[row])
    return Congruence.from_class_of(tuple(labels))


def l_chain(q: Quandle) -> list[Quandle]:
    """Iterated quotients by the row-equality congruence.

    Stops when the congruence is trivial, i.e. when the order stabilizes;
    a faithful quandle returns just [q].
    """
    chain = [q]
    current = q
    step = 0
    while True:
        lam = lambda_congruence(current)
        if lam.is_zero:
            return chain
        step += 1
        base = q.label or f"order{q.order}"
        current, _ = core.quotient(current, lam.classes, label=f"L{step}({base})")
        chain.append(current)


@dataclass(frozen=True)
class OChain:
    """The descending chain 1_Q = O^0, O^1, ... up to its first repeat.

    Each term is the orbit congruence of the transvection group relative to
    the previous term; reaching the identity partition is exactly
    reductivity, and the index of that term is the reductive degree.
    """

    terms: tuple[Congruence, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i: int) -> Congruence:
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].is_zero

    @property
    def degree(self) -> Optional[int]:
        """Index of the first identity-partition term, if any."""
        for i, term in enumerate(self.terms):
            if term.is_zero:
                return i
        return None


def o_chain(q: Quandle, cap: int = permgroup.DEFAULT_CLOSURE_CAP) -> OChain:
    """Compute the O-chain of q, stopping at the first repeated term."""
    terms = [Congruence.one(q.order)]
    while True:
        nxt = orbit_congruence(q, trans_rel(q, terms[-1], cap=cap))
        if nxt == terms[-1]:
            return OChain(tuple(terms))
        terms.append(nxt)
