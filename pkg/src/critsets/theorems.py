"""The nucleus/diadem - alpha - corona/core - odd-cycle inequality chain and
the executable checks of the lemmas behind it.

A violated inequality is never reported as a finding: every check here is a
theorem, so a failure raises :class:`~critsets.errors.InvariantViolation`.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from functools import reduce
from itertools import combinations, product
from typing import Callable, Sequence

from ._bits import members
from .critical import (
    CriticalReport,
    critical_summary,
    enumerate_critical_independent_sets,
    extend_to_maximum,
    family_decomposition,
    set_difference_value,
    swap_decomposition,
    critical_difference,
)
from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .graph import Graph, VertexSet, encode_graph6, is_independent, neighborhood
from .independence import (
    OmegaSummary,
    enumerate_maximum_independent_sets,
    is_koenig_egervary,
    omega_summary,
)
from .matching import HallViolator, Matching, exists_matching_into
from .odd_cycles import CycleInventory, cycle_inventory

__all__ = [
    "TAGS",
    "Budgets",
    "ChainReport",
    "Analysis",
    "analyze",
    "chain_report",
    "classify_equalities",
    "LemmaReport",
    "verify_constructive_lemmas",
]

LOWER_EQ = "LOWER_EQ"
UPPER_EQ_MID = "UPPER_EQ_MID"
UPPER_EQ_BOUND = "UPPER_EQ_BOUND"
ALL_STRICT = "ALL_STRICT"
ORDER_TIGHT = "ORDER_TIGHT"
TAGS = (LOWER_EQ, UPPER_EQ_MID, UPPER_EQ_BOUND, ALL_STRICT, ORDER_TIGHT)

EXHAUSTIVE_LIMIT = 10_000


@dataclass(frozen=True)
class Budgets:
    """Enumeration caps for maximum independent sets, critical independent
    sets and cycles."""

    mis: int = 10**6
    critical: int = 10**6
    cycles: int = 10**6

    def __post_init__(self):
        if min(self.mis, self.critical, self.cycles) < 1:
            raise PreconditionError("budgets must be positive")


@dataclass(frozen=True)
class ChainReport:
    """Every quantity of the chain

        nucleus + diadem <= 2 alpha <= corona + core <= 2 alpha + k

    with ``lower``, ``mid``, ``upper`` and ``bound`` naming the four terms.
    Fields that depend on an enumeration that ran out of budget are ``None``
    and ``partial`` is set; ``equality_tags`` is then ``None`` as well.
    """

    n: int
    alpha: int
    core_size: int
    corona_size: int
    ker_size: int | None
    diadem_size: int | None
    nucleus_size: int | None
    k_distinct: int | None
    odd_cycle_total: int | None
    lower: int | None
    mid: int
    upper: int
    bound: int | None
    is_ke: bool
    equality_tags: frozenset[str] | None
    partial: bool = False

    def to_json(self) -> dict:
        out = asdict(self)
        out["equality_tags"] = None if self.equality_tags is None else sorted(self.equality_tags)
        return out

    @classmethod
    def from_json(cls, data: dict) -> ChainReport:
        data = dict(data)
        tags = data.get("equality_tags")
        data["equality_tags"] = None if tags is None else frozenset(tags)
        return cls(**data)


@dataclass(frozen=True)
class Analysis:
    """All per-graph results: independence, critical sets, cycles, chain."""

    omega: OmegaSummary
    critical: CriticalReport
    cycles: CycleInventory
    chain: ChainReport

    def to_json(self) -> dict:
        return {
            "omega": self.omega.to_json(),
            "critical": self.critical.to_json(),
            "cycles": self.cycles.to_json(),
            "chain": self.chain.to_json(),
        }


def _equality_tags(lower: int, mid: int, upper: int, bound: int, n: int) -> frozenset[str]:
    tags = set()
    if lower == mid:
        tags.add(LOWER_EQ)
    if upper == mid:
        tags.add(UPPER_EQ_MID)
    if upper == bound:
        tags.add(UPPER_EQ_BOUND)
    if lower < mid < upper < bound:
        tags.add(ALL_STRICT)
    if n == bound:
        tags.add(ORDER_TIGHT)
    return frozenset(tags)


def classify_equalities(report: ChainReport) -> frozenset[str]:
    """Which of the chain inequalities are tight.

    ``ORDER_TIGHT`` marks ``n == 2 alpha + k``. Partial reports are refused.
    """
    if report.partial or report.lower is None or report.bound is None:
        raise PreconditionError("cannot classify a partial chain report")
    return _equality_tags(report.lower, report.mid, report.upper, report.bound, report.n)


def _fail(g: Graph, message: str, **data) -> InvariantViolation:
    witness = {"graph6": encode_graph6(g)}
    witness.update(data)
    return InvariantViolation(message, witness)


def analyze(g: Graph, budgets: Budgets = Budgets(), count_mis: bool = False) -> Analysis:
    """Compute everything the chain needs and check the proven relations.

    ``count_mis`` additionally enumerates the maximum independent sets (up
    to ``budgets.mis``) to fill ``omega.mis_count``.
    """
    om = omega_summary(g, budgets.mis if count_mis else None)
    cr = critical_summary(g, budgets.critical)
    cyc = cycle_inventory(g, budgets.cycles)
    is_ke = is_koenig_egervary(g)

    if not om.core <= om.corona:
        raise _fail(g, "core is not inside corona")
    mid = 2 * om.alpha
    upper = len(om.corona) + len(om.core)
    if upper < mid:
        raise _fail(g, "corona + core < 2 alpha", upper=upper, mid=mid)
    if is_ke and upper != mid:
        raise _fail(g, "Koenig-Egervary graph with corona + core != 2 alpha", upper=upper, mid=mid)

    lower = None
    if not cr.partial:
        if not (cr.ker <= cr.nucleus <= cr.diadem):
            raise _fail(g, "ker, nucleus, diadem are not nested")
        if not cr.ker <= om.core:
            raise _fail(g, "ker is not inside core", ker=sorted(cr.ker), core=sorted(om.core))
        if not cr.diadem <= om.corona:
            raise _fail(g, "diadem is not inside corona")
        lower = len(cr.nucleus) + len(cr.diadem)
        if lower > mid:
            raise _fail(g, "nucleus + diadem > 2 alpha", lower=lower, mid=mid)

    bound = None
    if cyc.exhausted:
        bound = mid + cyc.k_distinct
        if upper > bound:
            raise _fail(g, "corona + core > 2 alpha + k", upper=upper, bound=bound)
        if g.n > bound:
            raise _fail(g, "n > 2 alpha + k", bound=bound)

    partial = lower is None or bound is None
    tags = None if partial else _equality_tags(lower, mid, upper, bound, g.n)

    def size(s):
        return None if s is None else len(s)

    chain = ChainReport(
        n=g.n,
        alpha=om.alpha,
        core_size=len(om.core),
        corona_size=len(om.corona),
        ker_size=size(cr.ker),
        diadem_size=size(cr.diadem),
        nucleus_size=size(cr.nucleus),
        k_distinct=cyc.k_distinct if cyc.exhausted else None,
        odd_cycle_total=cyc.odd_cycle_total if cyc.exhausted else None,
        lower=lower,
        mid=mid,
        upper=upper,
        bound=bound,
        is_ke=is_ke,
        equality_tags=tags,
        partial=partial,
    )
    return Analysis(om, cr, cyc, chain)


def chain_report(g: Graph, budgets: Budgets = Budgets()) -> ChainReport:
    return analyze(g, budgets).chain


# --- constructive lemma sweep ---------------------------------------------------


@dataclass
class LemmaReport:
    """Outcome of :func:`verify_constructive_lemmas`.

    ``pairs_checked`` counts (critical, maximum) pairs pushed through the
    swap decomposition; ``checks`` counts every individual check by name.
    """

    pairs_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    checks: dict[str, int] = field(default_factory=dict)
    exhaustive: bool = True
    partial: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "failures": self.failures,
            "checks": dict(sorted(self.checks.items())),
            "exhaustive": self.exhaustive,
            "partial": self.partial,
        }


def _pick(items: Sequence, k: int, rng: random.Random, exhaustive: bool) -> Sequence:
    if exhaustive or len(items) <= k:
        return items
    return [items[rng.randrange(len(items))] for _ in range(k)]


def _pairs(a: Sequence, b: Sequence, k: int, rng: random.Random, exhaustive: bool):
    if exhaustive or len(a) * len(b) <= k:
        return list(product(a, b))
    return [(a[rng.randrange(len(a))], b[rng.randrange(len(b))]) for _ in range(k)]


def _independent_within(adj: Sequence[int], allowed: int, cap: int) -> list[int] | None:
    """All independent subsets of ``allowed`` as masks, or None past ``cap``."""
    out: list[int] = []

    def rec(chosen: int, cand: int) -> bool:
        out.append(chosen)
        if len(out) > cap:
            return False
        while cand:
            bit = cand & -cand
            cand ^= bit
            if not rec(chosen | bit, cand & ~adj[bit.bit_length() - 1]):
                return False
        return True

    return out if rec(0, allowed) else None


def _random_independent(adj: Sequence[int], allowed: int, rng: random.Random) -> int:
    verts = [v for v in range(len(adj)) if allowed >> v & 1]
    rng.shuffle(verts)
    chosen = 0
    stop = rng.randint(0, len(verts))
    for v in verts[:stop]:
        if not adj[v] & chosen:
            chosen |= 1 << v
    return chosen


def verify_constructive_lemmas(
    g: Graph, sample: int = 64, seed: int = 0, budgets: Budgets = Budgets()
) -> LemmaReport:
    """Run the swap, extension and matching lemmas on ``g``.

    When ``|critical sets| * |maximum sets| <= 10_000`` every pair is
    checked; otherwise ``sample`` random instances per check are drawn from
    a ``random.Random(seed)`` stream. Failures are recorded with a full
    witness rather than raised.
    """
    if sample < 1:
        raise PreconditionError("sample must be at least 1")
    report = LemmaReport()
    rng = random.Random(seed)
    g6 = encode_graph6(g)
    try:
        d = critical_difference(g)
        crit = list(enumerate_critical_independent_sets(g, budgets.critical, d=d))
        omega = list(enumerate_maximum_independent_sets(g, budgets.mis))
    except BudgetExceeded:
        report.partial = True
        report.exhaustive = False
        return report
    a = len(omega[0])
    exhaustive = len(crit) * len(omega) <= EXHAUSTIVE_LIMIT
    report.exhaustive = exhaustive

    def check(name: str, fn: Callable[[], str | None], **context) -> None:
        report.checks[name] = report.checks.get(name, 0) + 1
        try:
            problem = fn()
        except InvariantViolation as exc:
            report.failures.append({"lemma": name, "message": str(exc), "witness": exc.witness})
            return
        if problem:
            witness = {"graph6": g6}
            witness.update({k: _jsonable(v) for k, v in context.items()})
            report.failures.append({"lemma": name, "message": problem, "witness": witness})

    # a critical set swapped into a maximum one
    for i_c, i_m in _pairs(crit, omega, sample, rng, exhaustive):
        report.pairs_checked += 1
        check("swap", lambda: _silent(swap_decomposition, g, i_c, i_m, d=d, alpha_value=a))

    # the same with a whole family of maximum sets
    n_pairs = len(omega) * (len(omega) - 1) // 2
    if exhaustive and n_pairs <= sample:
        families = [omega] + [list(p) for p in combinations(omega, 2)]
    else:
        families = [omega] + [rng.sample(omega, rng.randint(1, len(omega))) for _ in range(sample)]
    for i_c, fam in _pairs(crit, families, sample, rng, exhaustive and len(crit) * len(families) <= EXHAUSTIVE_LIMIT):
        check("family_swap", lambda: _silent(family_decomposition, g, i_c, fam, d=d, alpha_value=a))

    # unions and intersections of critical sets stay critical
    for i, j in _pairs(crit, crit, sample, rng, len(crit) ** 2 <= EXHAUSTIVE_LIMIT):
        check(
            "critical_union_intersection",
            lambda: None
            if set_difference_value(g, i | j) == d and set_difference_value(g, i & j) == d
            else "union or intersection of critical sets is not critical",
            i=i, j=j, d=d,
        )

    for i_c in _pick(crit, sample, rng, exhaustive):
        # N(I) can be matched into I
        nb = neighborhood(g, i_c)
        check(
            "critical_neighborhood_matching",
            lambda: None if isinstance(exists_matching_into(g, nb, i_c), Matching)
            else "N(I) cannot be matched into the critical set I",
            i_c=i_c,
        )

        def extension() -> str | None:
            big = extend_to_maximum(g, i_c, d=d)
            if not (i_c <= big and len(big) == a and is_independent(g, big)):
                return "extension is not a maximum independent set containing I_c"
            return None

        check("extension", extension, i_c=i_c)

    # maximum iff every disjoint independent set matches into it
    adj = g.adj
    full = (1 << g.n) - 1
    for s in _pick(omega, sample, rng, exhaustive):
        smask = sum(1 << v for v in s)
        pool = _independent_within(adj, full & ~smask, sample if not exhaustive else EXHAUSTIVE_LIMIT)
        if pool is None:
            pool = [_random_independent(adj, full & ~smask, rng) for _ in range(sample)]
        for jm in pool:
            j = members(jm)
            check(
                "maximum_matching_criterion",
                lambda: None if isinstance(exists_matching_into(g, j, s), Matching)
                else "independent set disjoint from a maximum set does not match into it",
                s=s, j=j,
            )
    for _ in range(min(sample, 8)):
        s = members(_random_independent(adj, full, rng))
        if len(s) == a:
            continue
        t = omega[rng.randrange(len(omega))]
        check(
            "maximum_matching_criterion",
            lambda: None if isinstance(exists_matching_into(g, t - s, s), HallViolator)
            else "non-maximum independent set absorbs T - S",
            s=s, t=t,
        )

    # Koenig-Egervary iff V - (S1 | S2) matches into S1 & S2
    ke = is_koenig_egervary(g)
    everything = frozenset(range(g.n))
    for s1, s2 in _pairs(omega, omega, sample, rng, len(omega) ** 2 <= EXHAUSTIVE_LIMIT):
        rest = everything - (s1 | s2)
        check(
            "ke_matching",
            lambda: None
            if isinstance(exists_matching_into(g, rest, s1 & s2), Matching) == ke
            else f"matching from V - (S1 | S2) into S1 & S2 disagrees with KE={ke}",
            s1=s1, s2=s2, is_ke=ke,
        )

    ker = reduce(frozenset.intersection, crit)
    diadem = frozenset().union(*crit)
    core = reduce(frozenset.intersection, omega)
    corona = frozenset().union(*omega)
    check(
        "ker_in_every_maximum",
        lambda: None if all(ker <= s for s in omega) else "ker missing from some maximum set",
        ker=ker,
    )
    check("ker_in_core", lambda: None if ker <= core else "ker not inside core", ker=ker, core=core)
    check("diadem_in_corona", lambda: None if diadem <= corona else "diadem not inside corona",
          diadem=diadem, corona=corona)
    return report


def _silent(fn, *args, **kwargs) -> None:
    fn(*args, **kwargs)


def _jsonable(v):
    if isinstance(v, (frozenset, set)):
        return sorted(v)
    return v
