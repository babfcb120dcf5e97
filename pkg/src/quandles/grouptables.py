"""Finite groups as raw multiplication tables.

A group table is a square tuple-of-tuples over 0..m-1 with table[a][b] the
product a*b.  Nothing here assumes which element is the identity; validation
finds it.  Tables double as their own left regular permutation representation
(row a is the permutation x -> a*x), which is how the nilpotency and derived
computations below reuse the permutation-group machinery.
"""

from __future__ import annotations

from typing import Sequence

from . import permgroup
from .errors import NotAGroup, NotClosed

GroupTable = tuple[tuple[int, ...], ...]


def validate_group(table: Sequence[Sequence[int]]) -> GroupTable:
    """Check the group axioms and return the table as nested tuples."""
    t = tuple(tuple(row) for row in table)
    m = len(t)
    if m == 0:
        raise NotAGroup("empty table")
    for a, row in enumerate(t):
        if len(row) != m:
            raise NotAGroup(f"row {a} has length {len(row)}, expected {m}")
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < m:
                raise NotAGroup(f"entry at ({a}, {b}) is not an element index")
    for a in range(m):
        for b in range(m):
            ab = t[a][b]
            for c in range(m):
                if t[ab][c] != t[a][t[b][c]]:
                    raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
    e = None
    for cand in range(m):
        if all(t[cand][x] == x == t[x][cand] for x in range(m)):
            e = cand
            break
    if e is None:
        raise NotAGroup("no identity element")
    for a in range(m):
        if not any(t[a][b] == e for b in range(m)):
            raise NotAGroup(f"element {a} has no inverse")
    return t


def identity_of(table: GroupTable) -> int:
    m = len(table)
    for e in range(m):
        if all(table[e][x] == x for x in range(m)):
            return e
    raise NotAGroup("no identity element")


def inverses_of(table: GroupTable) -> tuple[int, ...]:
    m = len(table)
    e = identity_of(table)
    inv = [-1] * m
    for a in range(m):
        for b in range(m):
            if table[a][b] == e:
                inv[a] = b
                break
    return tuple(inv)


def power(table: GroupTable, a: int, k: int) -> int:
    """a**k, k may be negative."""
    if k < 0:
        return power(table, inverses_of(table)[a], -k)
    acc = identity_of(table)
    for _ in range(k):
        acc = table[acc][a]
    return acc


def commutator(table: GroupTable, x: int, y: int,
               inv: tuple[int, ...] | None = None) -> int:
    """[x, y] = x^{-1} y^{-1} x y."""
    if inv is None:
        inv = inverses_of(table)
    return table[table[table[inv[x]][inv[y]]][x]][y]


def engel_bracket(table: GroupTable, a: int, b: int, n: int) -> int:
    """[b,_n a] with [b,_0 a] = a and [b,_{k+1} a] = [b, [b,_k a]]."""
    inv = inverses_of(table)
    c = a
    for _ in range(n):
        c = commutator(table, b, c, inv)
    return c


def is_n_engel_subset(table: GroupTable, subset: Sequence[int], n: int) -> bool:
    """Whether [b,_n a] = 1 for all a, b in the subset (brackets in the group)."""
    e = identity_of(table)
    inv = inverses_of(table)
    for a in subset:
        for b in subset:
            c = a
            for _ in range(n):
                c = commutator(table, b, c, inv)
            if c != e:
                return False
    return True


def conjugacy_classes(table: GroupTable) -> tuple[tuple[int, ...], ...]:
    """Classes as sorted tuples, ordered by smallest member."""
    m = len(table)
    inv = inverses_of(table)
    seen = [False] * m
    classes = []
    for a in range(m):
        if seen[a]:
            continue
        cls = set()
        for g in range(m):
            cls.add(table[table[inv[g]][a]][g])
        for x in cls:
            seen[x] = True
        classes.append(tuple(sorted(cls)))
    return tuple(sorted(classes, key=min))


def subgroup_generated(table: GroupTable, subset: Sequence[int]) -> tuple[int, ...]:
    """Elements of the subgroup generated by the subset, sorted."""
    e = identity_of(table)
    members = {e}
    frontier = [e]
    gens = sorted(set(subset))
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = table[x][g]
            if y not in members:
                members.add(y)
                frontier.append(y)
    return tuple(sorted(members))


def center(table: GroupTable) -> tuple[int, ...]:
    m = len(table)
    return tuple(a for a in range(m)
                 if all(table[a][b] == table[b][a] for b in range(m)))


def is_abelian(table: GroupTable) -> bool:
    return len(center(table)) == len(table)


def regular_representation(table: GroupTable) -> permgroup.PermGroup:
    """The left regular representation; rows of the table are its elements."""
    rows = tuple(tuple(row) for row in table)
    e = identity_of(table)
    ordered = (rows[e],) + tuple(r for i, r in enumerate(rows) if i != e)
    gens = tuple(r for i, r in enumerate(rows) if i != e)
    return permgroup.PermGroup(len(table), gens, ordered)


def nilpotency_class(table: GroupTable) -> int | None:
    return permgroup.nilpotency_class(regular_representation(table))


def derived_length(table: GroupTable) -> int | None:
    return permgroup.derived_length(regular_representation(table))


def check_conjugation_closed(table: GroupTable, subset: Sequence[int],
                             exponent: int = 1) -> tuple[int, ...]:
    """Verify a^{-k} b a^k stays in the subset for a, b in it; return it sorted.

    Raises NotClosed with the first escaping pair as witness.
    """
    members = sorted(set(subset))
    member_set = set(members)
    inv = inverses_of(table)
    for a in members:
        ak = power(table, a, exponent)
        for b in members:
            c = table[table[inv[ak]][b]][ak]
            if c not in member_set:
                raise NotClosed((a, b), f"conjugate of {b} by element {a} leaves the subset")
    return tuple(members)


# Builders for the small groups used throughout the test corpus.

def from_perm_generators(gens: Sequence[permgroup.Perm]) -> GroupTable:
    """Multiplication table of the group generated by the given permutations."""
    group = permgroup.closure(gens)
    elements = group.elements
    index = {p: i for i, p in enumerate(elements)}
    return tuple(
        tuple(index[permgroup.compose(p, q)] for q in elements)
        for p in elements
    )


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("order must be positive")
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def direct_product(t1: GroupTable, t2: GroupTable) -> GroupTable:
    m1, m2 = len(t1), len(t2)
    return tuple(
        tuple(t1[a1][b1] * m2 + t2[a2][b2] for b1 in range(m1) for b2 in range(m2))
        for a1 in range(m1) for a2 in range(m2)
    )


def dihedral_group(m: int) -> GroupTable:
    """The dihedral group of order 2m: r of order m, s of order 2, s r s = r^{-1}.

    Element i < m is r^i, element m + i is s r^i.
    """
    if m < 1:
        raise ValueError("m must be positive")

    def mul(x: int, y: int) -> int:
        xs, xi = divmod(x, m)
        ys, yi = divmod(y, m)
        i = (yi - xi) % m if ys else (xi + yi) % m
        return ((xs + ys) % 2) * m + i

    return tuple(tuple(mul(x, y) for y in range(2 * m)) for x in range(2 * m))


def symmetric_group(n: int) -> GroupTable:
    if n == 1:
        return cyclic(1)
    transposition = (1, 0) + tuple(range(2, n))
    cycle = tuple(range(1, n)) + (0,)
    return from_perm_generators([transposition, cycle])


def alternating_group_4() -> GroupTable:
    return from_perm_generators([(1, 2, 0, 3), (1, 0, 3, 2)])


def quaternion_8() -> GroupTable:
    """The quaternion units; element 2k is the unit u_k, 2k+1 is -u_k."""
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def mul(x: int, y: int) -> int:
        sx, ux = (-1 if x % 2 else 1), x // 2
        sy, uy = (-1 if y % 2 else 1), y // 2
        s, u = unit_mul[(ux, uy)]
        s *= sx * sy
        return 2 * u + (0 if s == 1 else 1)

    return tuple(tuple(mul(x, y) for y in range(8)) for x in range(8))


def heisenberg_3() -> GroupTable:
    """Upper unitriangular 3x3 matrices over F_3; order 27, class 2, exponent 3."""
    elems = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    index = {x: i for i, x in enumerate(elems)}

    def mul(x: tuple[int, int, int], y: tuple[int, int, int]) -> int:
        a, b, c = x
        d, e, f = y
        return index[((a + d) % 3, (b + e) % 3, (c + f + a * e) % 3)]

    return tuple(tuple(mul(x, y) for y in elems) for x in elems)
