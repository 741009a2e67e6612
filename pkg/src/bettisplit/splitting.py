"""Betti splittings of monomial ideals.

A partition of the minimal generators of I into two nonempty parts J, K is a
Betti splitting over a field k when

    beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K)

holds for every homological index i and every multidegree j.  This module
verifies that identity from computed tables, checks the sufficient condition
that the intersection's Betti support avoids both parts, searches for
Eliahou-Kervaire splitting functions by exhaustive backtracking, derives the
regularity / projective-dimension consequences, and scans an ideal for
variable-induced splittings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable, betti_table
from .homology import FieldSpec
from .ideals import Monomial, MonomialIdeal, intersect, monomial_lcm


class DegeneratePartitionError(ValueError):
    """A variable partition whose parts are not both nonempty."""


class Partition:
    """G(I) split into two nonempty parts: G(J) disjoint-union G(K).

    Build through :meth:`variable_partition` or :meth:`from_parts`; both
    guarantee that J + K regenerates I with the union of the parts' minimal
    generators being exactly G(I).
    """

    __slots__ = ("I", "J", "K", "variable", "_meet")

    def __init__(self, I, J, K, variable=None):
        self.I = I
        self.J = J
        self.K = K
        self.variable = variable
        self._meet = None

    @classmethod
    def variable_partition(cls, I: MonomialIdeal, var: int) -> "Partition":
        """Split G(I) by divisibility by x<var> (1-based label).

        J takes the generators divisible by the variable, K the rest; raises
        DegeneratePartitionError when either side would be empty.
        """
        if not 1 <= var <= I.n:
            raise ValueError(f"variable label {var} outside 1..{I.n}")
        pos = var - 1
        gj = [g for g in I.gens if g.exps[pos] > 0]
        gk = [g for g in I.gens if g.exps[pos] == 0]
        if not gj or not gk:
            raise DegeneratePartitionError(
                f"all or none of the generators are divisible by x{var}"
            )
        return cls(I, MonomialIdeal(I.n, gj), MonomialIdeal(I.n, gk), variable=var)

    @classmethod
    def from_parts(cls, J: MonomialIdeal, K: MonomialIdeal) -> "Partition":
        """Partition with user-chosen parts; validates minimality and disjointness."""
        if J.n != K.n:
            raise ValueError("parts live in different rings")
        if J.is_zero() or K.is_zero():
            raise DegeneratePartitionError("both parts must be nonzero")
        if set(J.gens) & set(K.gens):
            raise ValueError("parts share a generator")
        I = MonomialIdeal(J.n, J.gens + K.gens)
        if len(I.gens) != len(J.gens) + len(K.gens):
            raise ValueError("union of the parts' generators is not minimal")
        return cls(I, J, K)

    @property
    def meet(self) -> MonomialIdeal:
        """The intersection J cap K (cached)."""
        if self._meet is None:
            self._meet = intersect(self.J, self.K)
        return self._meet

    def swapped(self) -> "Partition":
        return Partition(self.I, self.K, self.J, variable=None)

    def is_variable_partition(self, var: int) -> bool:
        pos = var - 1
        return all(g.exps[pos] > 0 for g in self.J.gens) and all(
            g.exps[pos] == 0 for g in self.K.gens
        )

    def __repr__(self):
        return f"Partition(|G(J)|={len(self.J.gens)}, |G(K)|={len(self.K.gens)})"


def variable_partition(I: MonomialIdeal, var: int) -> Partition:
    return Partition.variable_partition(I, var)


def is_betti_splitting(p: Partition, field: FieldSpec) -> bool:
    """Check the splitting identity entrywise on full multigraded tables."""
    tI = betti_table(p.I, field)
    tJ = betti_table(p.J, field)
    tK = betti_table(p.K, field)
    tM = betti_table(p.meet, field)
    keys = set(tI.entries) | set(tJ.entries) | set(tK.entries)
    keys.update((i + 1, b) for i, b in tM.entries)
    return all(
        tI.get(i, b) == tJ.get(i, b) + tK.get(i, b) + tM.get(i - 1, b)
        for i, b in keys
    )


def disjoint_support_condition(p: Partition, field: FieldSpec) -> bool:
    """Sufficient condition: wherever the intersection has a nonzero Betti
    number, both parts have none.  Implies a Betti splitting."""
    tJ = betti_table(p.J, field)
    tK = betti_table(p.K, field)
    tM = betti_table(p.meet, field)
    return all(tJ.get(i, b) == 0 and tK.get(i, b) == 0 for i, b in tM.entries)


def one_sided_support_condition(p: Partition, var: int, field: FieldSpec) -> bool:
    """Variant for variable partitions: only the J side must avoid the
    intersection's Betti support (the K side avoids it automatically, since
    K's multidegrees never involve the splitting variable).  A linear
    resolution of J forces this condition."""
    if not p.is_variable_partition(var):
        raise ValueError(f"not a partition by divisibility by x{var}")
    tJ = betti_table(p.J, field)
    tM = betti_table(p.meet, field)
    return all(tJ.get(i, b) == 0 for i, b in tM.entries)


def mapping_cone_bound(p: Partition, field: FieldSpec) -> bool:
    """Entrywise inequality beta(I) <= beta(J) + beta(K) + shifted beta(J cap K).

    Holds for every partition of every monomial ideal; returning False would
    indicate a computation bug rather than a mathematical possibility.
    """
    tI = betti_table(p.I, field)
    tJ = betti_table(p.J, field)
    tK = betti_table(p.K, field)
    tM = betti_table(p.meet, field)
    return all(
        v <= tJ.get(i, b) + tK.get(i, b) + tM.get(i - 1, b)
        for (i, b), v in tI.entries.items()
    )


def reg_pd_via_splitting(tJ: BettiTable, tK: BettiTable, tJK: BettiTable):
    """(regularity, projective dimension) of I from a verified splitting:

        reg I = max(reg J, reg K, reg(J cap K) - 1)
        pd  I = max(pd J,  pd K,  pd(J cap K) + 1)

    An empty intersection table contributes nothing to either maximum.
    """
    regs = [tJ.regularity(), tK.regularity()]
    pds = [tJ.proj_dim(), tK.proj_dim()]
    if not tJK.is_empty():
        regs.append(tJK.regularity() - 1)
        pds.append(tJK.proj_dim() + 1)
    return max(regs), max(pds)


# --- Eliahou-Kervaire splitting functions ------------------------------------


@dataclass(frozen=True)
class SplittingFunction:
    """Assignment w -> (phi(w), psi(w)) in G(J) x G(K) for w in G(J cap K),
    with lcm(phi(w), psi(w)) = w and, for every nonempty subset S of
    G(J cap K), lcm(phi(S)) and lcm(psi(S)) strictly dividing lcm(S)."""

    assignment: tuple  # ((w, (phi, psi)), ...) sorted by w

    def as_dict(self) -> dict:
        return dict(self.assignment)

    def verify(self, p: Partition) -> bool:
        """Re-check both defining conditions from scratch."""
        amap = self.as_dict()
        ws = list(p.meet.gens)
        if set(amap) != set(ws):
            return False
        for w, (phi, psi) in amap.items():
            if phi not in p.J.gens or psi not in p.K.gens:
                return False
            if monomial_lcm(phi, psi) != w:
                return False
        m = len(ws)
        for S in range(1, 1 << m):
            picked = [ws[t] for t in range(m) if S >> t & 1]
            lw = picked[0]
            lp = amap[picked[0]][0]
            ls = amap[picked[0]][1]
            for w in picked[1:]:
                lw = monomial_lcm(lw, w)
                lp = monomial_lcm(lp, amap[w][0])
                ls = monomial_lcm(ls, amap[w][1])
            if lp == lw or ls == lw:
                return False
        return True


@dataclass(frozen=True)
class SplittingFunctionSearch:
    """Outcome of the exhaustive search: found / absent / capped.

    ``capped`` means the intersection had too many generators or the node
    budget ran out -- never a wrong answer.  For ``absent`` on a fully
    forced assignment, ``witness`` records the violating subset.
    """

    status: str  # 'found' | 'absent' | 'capped'
    function: SplittingFunction | None = None
    witness: dict | None = None


def find_splitting_function(
    p: Partition, cap: int = 16, node_budget: int = 500_000
) -> SplittingFunctionSearch:
    """Search for an Eliahou-Kervaire splitting function by backtracking.

    Candidate pairs for each w are the (g_J, g_K) with lcm exactly w, tried
    in lexicographic order.  The strict-divisibility condition over subsets
    reduces to lcm inequality (phi(w) divides w divides lcm(S)), and is
    checked incrementally: each new assignment validates every subset that
    contains it, pruning the branch on the first violation.
    """
    ws = list(p.meet.gens)
    m = len(ws)
    if m == 0:
        return SplittingFunctionSearch("found", SplittingFunction(()))
    if m > cap:
        return SplittingFunctionSearch(
            "capped", witness={"kind": "size", "generators": m, "cap": cap}
        )

    cands = []
    for w in ws:
        cw = [
            (gj, gk)
            for gj in p.J.gens
            for gk in p.K.gens
            if monomial_lcm(gj, gk) == w
        ]
        if not cw:
            return SplittingFunctionSearch(
                "absent", witness={"kind": "no_candidates", "w": w}
            )
        cands.append(cw)

    # fail-first: assign the most constrained generators first
    order = sorted(range(m), key=lambda t: (len(cands[t]), ws[t].exps))
    ws_o = [ws[t] for t in order]
    cands_o = [cands[t] for t in order]

    # per-subset lcms over the assigned prefix: mask -> (lcm w, lcm phi, lcm psi)
    state = {0: (None, None, None)}
    chosen: list[tuple] = []
    last_violation: dict | None = None
    budget = node_budget

    def extend(t: int) -> str | None:
        nonlocal last_violation, budget
        if t == m:
            return "found"
        w = ws_o[t]
        bit = 1 << t
        for phi, psi in cands_o[t]:
            added = []
            ok = True
            for mask, (lw, lp, ls) in list(state.items()):
                budget -= 1
                if budget < 0:
                    return "capped"
                if mask == 0:
                    nw, np_, ns = w, phi, psi
                else:
                    nw = monomial_lcm(lw, w)
                    np_ = monomial_lcm(lp, phi)
                    ns = monomial_lcm(ls, psi)
                if np_ == nw or ns == nw:
                    subset = [ws_o[u] for u in range(t) if mask >> u & 1] + [w]
                    last_violation = {
                        "kind": "subset",
                        "subset": subset,
                        "side": "phi" if np_ == nw else "psi",
                        "lcm": nw,
                        "assignment": dict(chosen + [(w, (phi, psi))]),
                    }
                    ok = False
                    break
                state[mask | bit] = (nw, np_, ns)
                added.append(mask | bit)
            if ok:
                chosen.append((w, (phi, psi)))
                res = extend(t + 1)
                if res == "found" or res == "capped":
                    return res
                chosen.pop()
            for mask in added:
                del state[mask]
        return None

    outcome = extend(0)
    if outcome == "found":
        assignment = tuple(sorted(chosen, key=lambda kv: kv[0].exps))
        return SplittingFunctionSearch("found", SplittingFunction(assignment))
    if outcome == "capped":
        return SplittingFunctionSearch(
            "capped", witness={"kind": "budget", "node_budget": node_budget}
        )
    return SplittingFunctionSearch("absent", witness=last_violation)


# --- reports and scans --------------------------------------------------------


@dataclass(frozen=True)
class SplitReport:
    """Verdicts for one partition over one field."""

    variable: int | None  # None for user-supplied partitions
    field: FieldSpec
    betti_splitting: bool
    disjoint_support: bool
    ek: str  # 'found' | 'absent' | 'capped'

    def to_dict(self) -> dict:
        return {
            "variable": self.variable if self.variable is not None else "user",
            "field": self.field.characteristic,
            "betti_splitting": self.betti_splitting,
            "disjoint_support": self.disjoint_support,
            "ek": self.ek,
        }


def partition_report(
    p: Partition, field: FieldSpec, *, ek_cap: int = 16, ek_budget: int = 500_000
) -> SplitReport:
    return SplitReport(
        variable=p.variable,
        field=field,
        betti_splitting=is_betti_splitting(p, field),
        disjoint_support=disjoint_support_condition(p, field),
        ek=find_splitting_function(p, cap=ek_cap, node_budget=ek_budget).status,
    )


def scan_variable_splittings(
    I: MonomialIdeal, field: FieldSpec, *, ek_cap: int = 16, ek_budget: int = 500_000
) -> list[SplitReport]:
    """One report per variable admitting a (nondegenerate) partition,
    sorted by variable label."""
    out = []
    for var in range(1, I.n + 1):
        try:
            p = Partition.variable_partition(I, var)
        except DegeneratePartitionError:
            continue
        out.append(partition_report(p, field, ek_cap=ek_cap, ek_budget=ek_budget))
    return out
