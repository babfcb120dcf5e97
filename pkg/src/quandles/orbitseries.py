"""Orbit trees, descent degrees, principal series, and subquandle scans.

Repeatedly splitting a finite quandle into the orbits of its inner group
builds a tree: the root is the whole carrier, the children of a node are the
orbits of the induced operation on it, and a node with a single orbit is a
leaf.  The depth of the deepest leaf measures how many splits the quandle
survives, and whether every leaf is a singleton decides whether the descent
trivializes.  Both numbers are read off the tree here; classify turns them
into membership predicates.

Nodes are occurrences, not deduplicated subsets: the same subset reached
along two different branches appears twice, once per path, so branch depth
statements stay directly computable.  The set of distinct subsets is
recoverable by collecting ``node.subset`` over ``nodes()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import Quandle, subquandle_closure
from .errors import CapExceeded, DepthCapExceeded

#: Largest number of subsets the exhaustive scans will walk (2**20 masks).
DEFAULT_SUBSET_CAP = 2 ** 20


def _orbits_within(table: tuple[tuple[int, ...], ...],
                   subset: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Orbits of the induced quandle on a closed subset.

    Union-find over the edges b -> a |> b for a, b in the subset.  Each
    restricted translation is a bijection of the subset, so the undirected
    components are exactly the orbits of the generated group.  Returned as
    sorted tuples ordered by smallest member.
    """
    index = {x: i for i, x in enumerate(subset)}
    parent = list(range(len(subset)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in subset:
        row = table[a]
        for i, b in enumerate(subset):
            ri, rj = find(i), find(index[row[b]])
            if ri != rj:
                parent[ri] = rj
    buckets: dict[int, list[int]] = {}
    for i, x in enumerate(subset):
        buckets.setdefault(find(i), []).append(x)
    return sorted((tuple(xs) for xs in buckets.values()), key=lambda t: t[0])


@dataclass(frozen=True)
class OrbitTreeNode:
    """One occurrence of a closed subset along a splitting path.

    children holds one node per orbit of the induced quandle when there are
    at least two orbits; a node whose induced quandle is connected keeps no
    children and is a leaf.  depth counts the splits from the root.
    """

    subset: tuple[int, ...]
    depth: int
    children: tuple["OrbitTreeNode", ...]

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def size(self) -> int:
        return len(self.subset)

    def nodes(self) -> Iterator["OrbitTreeNode"]:
        """All nodes of the subtree in preorder."""
        yield self
        for child in self.children:
            yield from child.nodes()

    def leaves(self) -> Iterator["OrbitTreeNode"]:
        for node in self.nodes():
            if not node.children:
                yield node

    def branches(self) -> Iterator[list["OrbitTreeNode"]]:
        """Every root-to-leaf path of the subtree, as a list of nodes."""
        if not self.children:
            yield [self]
            return
        for child in self.children:
            for tail in child.branches():
                yield [self, *tail]


def orbit_tree(q: Quandle, depth_cap: int | None = None) -> OrbitTreeNode:
    """Build the full splitting tree of a quandle.

    Every split replaces a subset by strictly smaller orbits, so the depth
    never reaches q.order and the default cap is unreachable; it exists so a
    corrupted table cannot recurse forever.
    """
    if depth_cap is None:
        depth_cap = q.order

    def build(subset: tuple[int, ...], depth: int) -> OrbitTreeNode:
        orbs = _orbits_within(q.table, subset)
        if len(orbs) == 1:
            return OrbitTreeNode(subset, depth, ())
        if depth >= depth_cap:
            raise DepthCapExceeded(f"orbit tree deeper than {depth_cap}")
        return OrbitTreeNode(
            subset, depth, tuple(build(o, depth + 1) for o in orbs))

    return build(tuple(range(q.order)), 0)


@dataclass(frozen=True)
class SeriesDegrees:
    """Depth summary of the orbit tree.

    os_degree is the depth of the deepest leaf, the number of splits after
    which every branch has stabilized.  tos_degree is the same number when
    every leaf is a singleton and None when some branch stabilizes on a
    connected subquandle with more than one element.  A connected quandle
    has os_degree 0 (the root is already a leaf) and T_1 is the only
    connected quandle whose descent trivializes.
    """

    os_degree: int
    tos_degree: int | None


def degrees(q: Quandle) -> SeriesDegrees:
    """Compute both descent degrees from one tree traversal."""
    deepest = 0
    trivializes = True
    for leaf in orbit_tree(q).leaves():
        deepest = max(deepest, leaf.depth)
        if len(leaf.subset) > 1:
            trivializes = False
    return SeriesDegrees(deepest, deepest if trivializes else None)


def _orbit_of(table: tuple[tuple[int, ...], ...],
              subset: tuple[int, ...], x: int) -> tuple[int, ...]:
    """Orbit of x in the induced quandle on a closed subset.

    Forward reachability is enough: the restricted translations are
    bijections of a finite set, so the monoid they generate is a group.
    """
    members = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for a in subset:
            z = table[a][y]
            if z not in members:
                members.add(z)
                stack.append(z)
    return tuple(sorted(members))


def principal_series(q: Quandle, x: int) -> list[tuple[int, ...]]:
    """Descending series of the orbits of one element.

    Starts at the whole carrier and repeatedly takes the orbit of x inside
    the previous term; stops once the term repeats, without appending the
    repeat.  The result is exactly the subset path of the tree branch whose
    leaf contains x.
    """
    n = q.order
    if not 0 <= x < n:
        raise ValueError(f"element {x} out of range for order {n}")
    current = tuple(range(n))
    series = [current]
    while True:
        nxt = _orbit_of(q.table, current, x)
        if nxt == current:
            return series
        series.append(nxt)
        current = nxt


def _closed_subsets(table: tuple[tuple[int, ...], ...],
                    n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty closed subsets by increasing bitmask value."""
    for mask in range(1, 1 << n):
        members = tuple(i for i in range(n) if mask >> i & 1)
        if all(mask >> table[a][b] & 1 for a in members for b in members):
            yield members


def all_subquandles(q: Quandle,
                    cap: int = DEFAULT_SUBSET_CAP) -> list[tuple[int, ...]]:
    """Every nonempty closed subset, found by scanning all 2**n bitmasks.

    Exhaustive by construction and therefore capped: raises CapExceeded when
    2**q.order exceeds cap rather than silently degrading.  For quandles too
    large to scan, generated_subquandles gives a lower approximation.
    """
    if 1 << q.order > cap:
        raise CapExceeded("subquandle scan over 2**order subsets", cap)
    return list(_closed_subsets(q.table, q.order))


def generated_subquandles(q: Quandle, max_seed: int = 3) -> list[tuple[int, ...]]:
    """Closed subsets generated by at most max_seed elements.

    An incomplete substitute for all_subquandles on quandles past the
    exhaustive cap: any subquandle needing more than max_seed generators is
    missed, and callers that need exactness must not use this.  Results are
    deduplicated and ordered by size, then lexicographically.
    """
    seen: set[tuple[int, ...]] = set()
    for size in range(1, max_seed + 1):
        for seed in combinations(range(q.order), size):
            seen.add(subquandle_closure(q, seed))
    return sorted(seen, key=lambda s: (len(s), s))


def is_ncs(q: Quandle, cap: int = DEFAULT_SUBSET_CAP) -> bool:
    """True when no closed subset of size two or more is connected.

    Decided by exhaustive scan, independently of the orbit tree; for finite
    quandles this predicate holds exactly when the tree's descent
    trivializes, and the test suite checks the two code paths against each
    other.  Raises CapExceeded when 2**q.order exceeds cap.
    """
    if 1 << q.order > cap:
        raise CapExceeded("connected subquandle scan over 2**order subsets", cap)
    for members in _closed_subsets(q.table, q.order):
        if len(members) >= 2 and len(_orbits_within(q.table, members)) == 1:
            return False
    return True
