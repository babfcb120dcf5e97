"""Family membership, minimal degrees, and the corpus-wide theorem suite.

Each degree implemented here has at least two independent computations
behind it.  The folded-product identity, the descending orbit-congruence
chain, the nilpotency class of the inner group and the stabilizer-collapse
chain all measure reductivity, and reductive_degree insists they agree;
classify() additionally enforces the ordering between the three families on
every report it emits.  A disagreement is never a property of the input
quandle, only of this package, so it surfaces as
InconsistentCharacterizations rather than as a value.

verify_suite() is the falsification harness: given a corpus (and optionally
a set of group tables), it reruns every structural fact the package relies
on and reports pass or fail per fact, with concrete witnesses on failure.
Failures are data, not exceptions, so a broken invariant shows up in the
report instead of aborting the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from . import congruence, core, grouptables, orbitseries, permgroup
from .core import Quandle
from .errors import InconsistentCharacterizations, QuandleError, WorkCapExceeded
from .grouptables import GroupTable
from .permgroup import PermGroup

#: Table-lookup budget for the folded-product reductivity check.
DEFAULT_WORK_CAP = 10 ** 8


def _first_constant_layer(q: Quandle, work_cap: int = DEFAULT_WORK_CAP,
                          max_layer: int | None = None) -> int | None:
    """Minimal k such that every k-fold composite of right translations is constant.

    Layer 1 holds the columns of the table; layer k+1 composes one more
    right translation onto each member of layer k.  A quandle is n-reductive
    exactly when layer n contains only constant maps, and an all-constant
    layer stays all-constant, so the first such k is the minimal degree.
    Layers are deduplicated sets, and once a layer set repeats the sequence
    has entered a cycle of non-constant layers: no degree exists and the
    function returns None.  With max_layer set, gives up (returns None) past
    that layer instead of iterating to the cycle.

    Every produced map entry counts one table lookup against work_cap;
    overdraft raises WorkCapExceeded before the offending layer is built.
    """
    size = q.order
    table = q.table
    layer = {tuple(table[a][c] for a in range(size)) for c in range(size)}
    work = size * size
    seen = {frozenset(layer)}
    k = 1
    while True:
        if all(len(set(m)) == 1 for m in layer):
            return k
        if max_layer is not None and k >= max_layer:
            return None
        cost = len(layer) * size * size
        if work + cost > work_cap:
            raise WorkCapExceeded(work_cap)
        work += cost
        nxt = set()
        for m in layer:
            for c in range(size):
                nxt.add(tuple(table[m[a]][c] for a in range(size)))
        key = frozenset(nxt)
        if key in seen:
            return None
        seen.add(key)
        layer = nxt
        k += 1


def is_n_reductive(q: Quandle, n: int, work_cap: int = DEFAULT_WORK_CAP) -> bool:
    """Whether (a > c_1) > c_2 ... > c_n is independent of a for all choices of c.

    Checked through the layer construction of _first_constant_layer rather
    than by enumerating the |Q|^(n+1) folded products directly; the two are
    the same identity, but deduplicating composite maps keeps the work
    proportional to the number of distinct maps.  n = 0 asks a itself to be
    independent of a, which only the one-element quandle satisfies.
    """
    if n < 0:
        raise ValueError(f"reductivity degree must be >= 0, got {n}")
    if n == 0:
        return q.order == 1
    return _first_constant_layer(q, work_cap, max_layer=n) is not None


def reductive_degree(q: Quandle, cap: int = permgroup.DEFAULT_CLOSURE_CAP,
                     work_cap: int = DEFAULT_WORK_CAP) -> int | None:
    """Minimal n making the quandle n-reductive, or None when none exists.

    Four routes are computed and compared: the index of the first zero term
    of the descending orbit-congruence chain, the first all-constant
    composite layer, the nilpotency class of the inner group (degree n pairs
    with class n-1, with the one-element quandle as the class-0 floor), and
    the number of steps the iterated stabilizer-collapse quotient takes to
    reach the one-element quandle.  Any disagreement raises
    InconsistentCharacterizations, since the four are provably equal for
    finite quandles.
    """
    deg = congruence.o_chain(q, cap).degree
    ident = 0 if q.order == 1 else _first_constant_layer(q, work_cap)
    cls = permgroup.nilpotency_class(congruence.inn(q, cap), cap)
    lam = congruence.l_chain(q)
    steps = len(lam) - 1 if lam[-1].order == 1 else None
    expected_cls = None if deg is None else max(deg - 1, 0)
    if ident != deg or cls != expected_cls or steps != deg:
        raise InconsistentCharacterizations(
            f"reductivity routes disagree on {q.label or f'order {q.order}'}: "
            f"chain={deg} identity={ident} inner-class={cls} "
            f"collapse-steps={steps}")
    return deg


def _constant_power(table: tuple[tuple[int, ...], ...], size: int,
                    b: int) -> int | None:
    """Minimal k with the k-th power of x -> x > b constant at b, else None."""
    current = tuple(range(size))
    seen = {current}
    k = 0
    while True:
        if all(x == b for x in current):
            return k
        nxt = tuple(table[x][b] for x in current)
        if nxt in seen:
            return None
        seen.add(nxt)
        current = nxt
        k += 1


def is_n_locally_reductive(q: Quandle, n: int) -> bool:
    """Whether (...((a > b) > b)...) > b with n factors of b equals b, always.

    Direct exhaustive check over all pairs.  The property is monotone in n
    because b > b = b, so the minimal degree from
    locally_reductive_degree() splits True from False; the two code paths
    are kept separate on purpose and tested against each other.
    """
    if n < 0:
        raise ValueError(f"local reductivity degree must be >= 0, got {n}")
    if n == 0:
        return q.order == 1
    table = q.table
    for b in range(q.order):
        for a in range(q.order):
            x = a
            for _ in range(n):
                x = table[x][b]
            if x != b:
                return False
    return True


def locally_reductive_degree(q: Quandle) -> int | None:
    """Minimal n with every n-fold right multiplication collapsing to b.

    Per fixed b the iterated map x -> x > b either reaches the constant map
    at b (within fewer than |Q| steps, since every element must walk into
    the fixed point) or enters a cycle that never does; repeat detection on
    the iterated maps decides which.  The degree is the worst b, absent as
    soon as one b never collapses.
    """
    worst = 0
    for b in range(q.order):
        k = _constant_power(q.table, q.order, b)
        if k is None:
            return None
        worst = max(worst, k)
    return worst


def is_medial(q: Quandle) -> bool:
    """Exhaustive check of (a>b) > (c>d) = (a>c) > (b>d)."""
    t = q.table
    r = range(q.order)
    for a in r:
        for b in r:
            ab = t[a][b]
            for c in r:
                ac = t[a][c]
                rb = t[b]
                rc = t[c]
                for d in r:
                    if t[ab][rc[d]] != t[ac][rb[d]]:
                        return False
    return True


def is_connected(q: Quandle) -> bool:
    """Whether the carrier is a single orbit of the translation group."""
    return len(permgroup.orbits(q.table)) == 1


def is_faithful(q: Quandle) -> bool:
    """Whether distinct elements always have distinct translations."""
    return congruence.lambda_congruence(q).is_zero


def is_abelian_quandle(q: Quandle,
                       cap: int = permgroup.DEFAULT_CLOSURE_CAP) -> bool:
    """Whether the transvection group is abelian and semiregular."""
    group = congruence.trans(q, cap)
    return group.is_abelian() and permgroup.is_semiregular(group)


def is_nilpotent_quandle(q: Quandle,
                         cap: int = permgroup.DEFAULT_CLOSURE_CAP) -> bool:
    """Whether the transvection group is nilpotent."""
    return permgroup.nilpotency_class(congruence.trans(q, cap), cap) is not None


def is_solvable_quandle(q: Quandle,
                        cap: int = permgroup.DEFAULT_CLOSURE_CAP) -> bool:
    """Whether the transvection group is solvable."""
    return permgroup.derived_length(congruence.trans(q, cap), cap) is not None


def conj_two_engel_check(table: GroupTable, subset: Sequence[int]) -> bool:
    """Whether the conjugation quandle on the subset trivializes in two splits.

    Decided by the bracket identity: every member of the subset must be a
    2-Engel element of the subgroup the subset generates.  The verdict is
    cross-checked against the orbit-tree degrees of the class quandle built
    on the same subset; the two computations share nothing, so a mismatch
    raises InconsistentCharacterizations.
    """
    closed = grouptables.check_conjugation_closed(table, subset)
    if not closed:
        raise ValueError("subset must be nonempty")
    hull = grouptables.subgroup_generated(table, closed)
    e = grouptables.identity_of(table)
    by_bracket = all(
        grouptables.engel_bracket(table, x, h, 2) == e
        for x in closed for h in hull)
    sd = orbitseries.degrees(core.conj_subset(table, closed))
    by_tree = sd.tos_degree is not None and sd.tos_degree <= 2
    if by_bracket != by_tree:
        raise InconsistentCharacterizations(
            f"two-split verdicts disagree on a subset of size {len(closed)}: "
            f"bracket={by_bracket} tree={by_tree}")
    return by_bracket


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the package can say about one finite quandle.

    Absent degrees are None: for finite quandles the three degree fields are
    always either all present or all absent, and when present they satisfy
    locally_reductive_degree <= tos_degree <= reductive_degree.  ncs is None
    when the quandle was too large for the exhaustive subquandle scan, not a
    verdict.
    """

    order: int
    label: str | None
    orbit_sizes: tuple[int, ...]
    connected: bool
    faithful: bool
    medial: bool
    abelian: bool
    nilpotent_quandle: bool
    solvable_quandle: bool
    trans_derived_length: int | None
    reductive_degree: int | None
    locally_reductive_degree: int | None
    os_degree: int
    tos_degree: int | None
    ncs: bool | None
    inn_order: int
    trans_order: int
    inn_nilpotency_class: int | None


def _enforce_degree_chain(report: ClassificationReport) -> None:
    degs = (report.locally_reductive_degree, report.tos_degree,
            report.reductive_degree)
    present = [d is not None for d in degs]
    if any(present) and not all(present):
        raise InconsistentCharacterizations(
            f"degree existence split on {report.label or report.order}: "
            f"lr={degs[0]} tos={degs[1]} red={degs[2]}")
    if all(present) and not degs[0] <= degs[1] <= degs[2]:
        raise InconsistentCharacterizations(
            f"degree ordering violated on {report.label or report.order}: "
            f"lr={degs[0]} tos={degs[1]} red={degs[2]}")


def classify(q: Quandle, *, closure_cap: int = permgroup.DEFAULT_CLOSURE_CAP,
             work_cap: int = DEFAULT_WORK_CAP,
             ncs_max_order: int = 12) -> ClassificationReport:
    """Aggregate every predicate and degree into one report.

    Cap parameters propagate to the group closures and the folded-product
    check.  The exhaustive subquandle scan behind ncs only runs when the
    order is at most ncs_max_order; above that the field is None.
    """
    inn_group = congruence.inn(q, closure_cap)
    trans_group = congruence.trans(q, closure_cap)
    orbit_sizes = tuple(sorted(
        (len(o) for o in permgroup.orbits(inn_group)), reverse=True))
    sd = orbitseries.degrees(q)
    dl = permgroup.derived_length(trans_group, closure_cap)
    report = ClassificationReport(
        order=q.order,
        label=q.label,
        orbit_sizes=orbit_sizes,
        connected=len(orbit_sizes) == 1,
        faithful=congruence.lambda_congruence(q).is_zero,
        medial=is_medial(q),
        abelian=trans_group.is_abelian() and permgroup.is_semiregular(trans_group),
        nilpotent_quandle=permgroup.nilpotency_class(
            trans_group, closure_cap) is not None,
        solvable_quandle=dl is not None,
        trans_derived_length=dl,
        reductive_degree=reductive_degree(q, closure_cap, work_cap),
        locally_reductive_degree=locally_reductive_degree(q),
        os_degree=sd.os_degree,
        tos_degree=sd.tos_degree,
        ncs=orbitseries.is_ncs(q) if q.order <= ncs_max_order else None,
        inn_order=inn_group.order,
        trans_order=trans_group.order,
        inn_nilpotency_class=permgroup.nilpotency_class(inn_group, closure_cap),
    )
    _enforce_degree_chain(report)
    return report


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named fact over the corpus."""

    name: str
    passed: bool
    witnesses: tuple[str, ...]
    checked: int


@dataclass(frozen=True)
class SuiteReport:
    """All named facts with their verdicts, in a fixed order."""

    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def summary(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status} {r.name} (checked {r.checked})")
            for w in r.witnesses:
                lines.append(f"     counterexample: {w}")
        return "\n".join(lines)


@dataclass
class _Facts:
    """Per-quandle raw material shared by the suite checks."""

    q: Quandle
    name: str
    red: int | None
    ident: int | None
    inn_cls: int | None
    collapse_steps: int | None
    lr: int | None
    os: int
    tos: int | None
    medial: bool
    faithful: bool
    connected: bool
    inn_group: PermGroup
    trans_group: PermGroup
    dl: int | None
    ncs: bool | None
    tree: orbitseries.OrbitTreeNode
    congruences: tuple[congruence.Congruence, ...] | None


def _gather(q: Quandle, closure_cap: int, work_cap: int,
            congruence_max_order: int, ncs_max_order: int) -> _Facts:
    inn_group = congruence.inn(q, closure_cap)
    trans_group = congruence.trans(q, closure_cap)
    lam = congruence.l_chain(q)
    sd = orbitseries.degrees(q)
    return _Facts(
        q=q,
        name=q.label or f"order-{q.order} table",
        red=congruence.o_chain(q, closure_cap).degree,
        ident=0 if q.order == 1 else _first_constant_layer(q, work_cap),
        inn_cls=permgroup.nilpotency_class(inn_group, closure_cap),
        collapse_steps=len(lam) - 1 if lam[-1].order == 1 else None,
        lr=locally_reductive_degree(q),
        os=sd.os_degree,
        tos=sd.tos_degree,
        medial=is_medial(q),
        faithful=congruence.lambda_congruence(q).is_zero,
        connected=len(permgroup.orbits(inn_group)) == 1,
        inn_group=inn_group,
        trans_group=trans_group,
        dl=permgroup.derived_length(trans_group, closure_cap),
        ncs=orbitseries.is_ncs(q) if q.order <= ncs_max_order else None,
        tree=orbitseries.orbit_tree(q),
        congruences=(congruence.all_congruences(q)
                     if q.order <= congruence_max_order else None),
    )


def _tos_of(q: Quandle) -> int | None:
    return orbitseries.degrees(q).tos_degree


def _series_image(series: Sequence[tuple[int, ...]],
                  proj: Sequence[int]) -> list[tuple[int, ...]]:
    return [tuple(sorted({proj[x] for x in subset})) for subset in series]


def _padded_equal(left: Sequence[tuple[int, ...]],
                  right: Sequence[tuple[int, ...]]) -> bool:
    """Memberwise equality after extending the shorter series by its last term."""
    for i in range(max(len(left), len(right))):
        if left[min(i, len(left) - 1)] != right[min(i, len(right) - 1)]:
            return False
    return True


def verify_suite(corpus: Iterable[Quandle],
                 groups: Iterable[tuple[str, GroupTable]] | None = None, *,
                 closure_cap: int = permgroup.DEFAULT_CLOSURE_CAP,
                 work_cap: int = DEFAULT_WORK_CAP,
                 congruence_max_order: int = 8,
                 subquandle_max_order: int = 10,
                 ncs_max_order: int = 12,
                 product_max_order: int = 12,
                 engel_max_n: int = 4) -> SuiteReport:
    """Re-check every structural fact on the given corpus.

    Checks that quantify over all congruences, all subquandles, or all
    products are limited to members under the corresponding max-order
    parameter, since their cost grows exponentially; the checked counts in
    the report show how many instances each fact actually saw.  Group-level
    facts run only when group tables are supplied as (name, table) pairs.
    """
    quandles = sorted(corpus, key=lambda q: (q.order, q.label or ""))
    results: list[CheckResult] = []
    facts: list[_Facts] = []
    broken: list[str] = []
    for q in quandles:
        try:
            facts.append(_gather(q, closure_cap, work_cap,
                                 congruence_max_order, ncs_max_order))
        except QuandleError as exc:
            broken.append(f"{q.label or q.order}: {exc}")
    results.append(CheckResult("classification-completes", not broken,
                               tuple(broken), len(quandles)))

    def run(name: str, instances: Iterator[tuple[bool, str]]) -> None:
        witnesses = []
        count = 0
        for ok, witness in instances:
            count += 1
            if not ok:
                witnesses.append(witness)
        results.append(CheckResult(name, not witnesses, tuple(witnesses), count))

    def reductivity_routes() -> Iterator[tuple[bool, str]]:
        for f in facts:
            expected_cls = None if f.red is None else max(f.red - 1, 0)
            ok = (f.ident == f.red and f.inn_cls == expected_cls
                  and f.collapse_steps == f.red)
            yield ok, (f"{f.name}: chain={f.red} identity={f.ident} "
                       f"inner-class={f.inn_cls} collapse={f.collapse_steps}")
    run("reductivity-routes-agree", reductivity_routes())

    def faithful_or_connected() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.red is not None and (f.faithful or f.connected):
                yield f.q.order == 1, f"{f.name}: reductive but order {f.q.order}"
    run("reductive-faithful-or-connected-is-trivial", faithful_or_connected())

    def existence_and_order() -> Iterator[tuple[bool, str]]:
        for f in facts:
            present = [d is not None for d in (f.lr, f.tos, f.red)]
            if any(present) != all(present):
                yield False, f"{f.name}: lr={f.lr} tos={f.tos} red={f.red}"
            elif all(present):
                yield (f.lr <= f.tos <= f.red,
                       f"{f.name}: lr={f.lr} tos={f.tos} red={f.red}")
            else:
                yield True, f.name
    run("degree-existence-and-ordering", existence_and_order())

    def medial_equal() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.medial and f.red is not None:
                yield (f.lr == f.tos == f.red,
                       f"{f.name}: lr={f.lr} tos={f.tos} red={f.red}")
    run("medial-degrees-equal", medial_equal())

    def medial_vs_trans() -> Iterator[tuple[bool, str]]:
        for f in facts:
            yield (f.medial == f.trans_group.is_abelian(),
                   f"{f.name}: medial={f.medial} "
                   f"abelian transvections={f.trans_group.is_abelian()}")
    run("medial-iff-abelian-transvections", medial_vs_trans())

    def orbit_agreement() -> Iterator[tuple[bool, str]]:
        for f in facts:
            same = (permgroup.orbits(f.inn_group)
                    == permgroup.orbits(f.trans_group))
            yield same, f"{f.name}: inner and transvection orbits differ"
    run("orbits-inner-equal-transvection", orbit_agreement())

    def tos_iff_ncs() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.ncs is not None:
                yield ((f.tos is not None) == f.ncs,
                       f"{f.name}: tos={f.tos} ncs={f.ncs}")
    run("tos-existence-iff-ncs", tos_iff_ncs())

    def solvable_bound() -> Iterator[tuple[bool, str]]:
        # The trivial transvection group counts as derived length one here:
        # the bound multiplies by the solvable length of the quandle, and a
        # quandle with abelian (possibly trivial) transvections has length 1.
        for f in facts:
            if f.dl is not None and f.lr is not None:
                factor = max(f.dl, 1)
                ok = f.tos is not None and f.tos <= factor * f.lr
                yield ok, (f"{f.name}: tos={f.tos} bound={factor}*{f.lr}")
    run("solvable-tos-bound", solvable_bound())

    def ochain_descending() -> Iterator[tuple[bool, str]]:
        for f in facts:
            chain = congruence.o_chain(f.q, closure_cap)
            ok = len(chain) <= f.q.order + 1 and all(
                chain[i + 1].refines(chain[i]) for i in range(len(chain) - 1))
            yield ok, f"{f.name}: chain of {len(chain)} terms not descending"
    run("orbit-chain-descends", ochain_descending())

    def branch_principal() -> Iterator[tuple[bool, str]]:
        for f in facts:
            for branch in f.tree.branches():
                path = [node.subset for node in branch]
                meet = set(path[0])
                for subset in path[1:]:
                    meet &= set(subset)
                if tuple(sorted(meet)) != branch[-1].subset:
                    yield False, f"{f.name}: branch meet is not the leaf"
                    continue
                ok = all(orbitseries.principal_series(f.q, x) == path
                         for x in branch[-1].subset)
                yield ok, (f"{f.name}: branch to {branch[-1].subset} is not "
                           f"the principal series of its members")
    run("branches-are-principal-series", branch_principal())

    def classes_closed() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.congruences is None:
                continue
            for cong in f.congruences:
                for cls in cong.classes:
                    members = set(cls)
                    ok = all(f.q.table[a][b] in members
                             for a in cls for b in cls)
                    yield ok, f"{f.name}: class {cls} is not closed"
    run("congruence-classes-are-subquandles", classes_closed())

    def trans_rel_triviality() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.congruences is None:
                continue
            lam = congruence.lambda_congruence(f.q)
            for cong in f.congruences:
                relative = congruence.trans_rel(f.q, cong, closure_cap)
                yield (relative.is_trivial() == cong.refines(lam),
                       f"{f.name}: relative transvection triviality "
                       f"disagrees with translation-kernel refinement")
    run("relative-transvections-trivial-iff-kernel", trans_rel_triviality())

    def quotient_tos() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.congruences is None or f.tos is None:
                continue
            for cong in f.congruences:
                quot, _ = core.quotient(f.q, cong.classes)
                qt = _tos_of(quot)
                yield (qt is not None and qt <= f.tos,
                       f"{f.name}: quotient tos {qt} exceeds {f.tos}")
    run("quotient-tos-bounded", quotient_tos())

    def subquandle_tos() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.tos is None or f.q.order > subquandle_max_order:
                continue
            for subset in orbitseries.all_subquandles(f.q):
                st = _tos_of(core.induced_subquandle(f.q, subset))
                yield (st is not None and st <= f.tos,
                       f"{f.name}: subquandle {subset} tos {st} exceeds {f.tos}")
    run("subquandle-tos-bounded", subquandle_tos())

    def product_tos() -> Iterator[tuple[bool, str]]:
        for fa, fb in combinations_with_replacement(facts, 2):
            if fa.q.order * fb.q.order > product_max_order:
                continue
            pt = _tos_of(core.direct_product(fa.q, fb.q))
            if fa.tos is None or fb.tos is None:
                yield (pt is None,
                       f"{fa.name} x {fb.name}: product tos {pt} without factors")
            else:
                yield (pt == max(fa.tos, fb.tos),
                       f"{fa.name} x {fb.name}: product tos {pt} "
                       f"!= max({fa.tos},{fb.tos})")
    run("product-tos-is-max", product_tos())

    def lr_extension() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.congruences is None or f.lr is None:
                continue
            for cong in f.congruences:
                quot, _ = core.quotient(f.q, cong.classes)
                outer = locally_reductive_degree(quot)
                inner = [locally_reductive_degree(
                    core.induced_subquandle(f.q, cls)) for cls in cong.classes]
                if outer is None or any(v is None for v in inner):
                    continue
                yield (f.lr <= outer + max(inner),
                       f"{f.name}: lr {f.lr} exceeds {outer}+{max(inner)}")
    run("locally-reductive-extension-bound", lr_extension())

    def tos_extension() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.congruences is None or f.tos is None:
                continue
            for cong in f.congruences:
                quot, _ = core.quotient(f.q, cong.classes)
                outer = _tos_of(quot)
                inner = [_tos_of(core.induced_subquandle(f.q, cls))
                         for cls in cong.classes]
                if outer is None or any(v is None for v in inner):
                    continue
                yield (f.tos <= outer + max(inner),
                       f"{f.name}: tos {f.tos} exceeds {outer}+{max(inner)}")
    run("tos-extension-bound", tos_extension())

    def quotient_series() -> Iterator[tuple[bool, str]]:
        for f in facts:
            if f.congruences is None:
                continue
            for cong in f.congruences:
                quot, proj = core.quotient(f.q, cong.classes)
                for x in range(f.q.order):
                    image = _series_image(
                        orbitseries.principal_series(f.q, x), proj)
                    direct = orbitseries.principal_series(quot, proj[x])
                    yield (_padded_equal(image, direct),
                           f"{f.name}: projected series of {x} differs "
                           f"from the quotient series")
    run("quotient-series-memberwise", quotient_series())

    if groups is not None:
        named = list(groups)

        def engel_bridge() -> Iterator[tuple[bool, str]]:
            for gname, table in named:
                subsets = [tuple(range(len(table)))]
                subsets.extend(grouptables.conjugacy_classes(table))
                for subset in subsets:
                    quandle = core.conj_subset(table, subset)
                    for n in range(1, engel_max_n + 1):
                        lhs = is_n_locally_reductive(quandle, n)
                        rhs = grouptables.is_n_engel_subset(table, subset, n)
                        yield (lhs == rhs,
                               f"{gname}, subset {subset}, n={n}: "
                               f"local reductivity {lhs} vs bracket {rhs}")
        run("conjugation-engel-subset-bridge", engel_bridge())

        def two_engel_red3() -> Iterator[tuple[bool, str]]:
            for gname, table in named:
                if len(table) > 32:
                    continue
                everything = tuple(range(len(table)))
                two_engel = grouptables.is_n_engel_subset(table, everything, 2)
                crossed = conj_two_engel_check(table, everything)
                if crossed != two_engel:
                    yield False, f"{gname}: two-split check disagrees"
                    continue
                if two_engel:
                    red = reductive_degree(core.conj(table), closure_cap,
                                           work_cap)
                    yield (red is not None and red <= 3,
                           f"{gname}: 2-Engel but reductive degree {red}")
                else:
                    yield True, gname
        run("two-engel-conjugation-reductive-by-3", two_engel_red3())

    return SuiteReport(tuple(results))
