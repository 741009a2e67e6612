"""Multigraded Betti numbers of monomial ideals.

The main path computes beta_{i,b}(I) = dim H~_{i-1} of the Koszul
subcomplex at b (faces tau inside the support of b with x^(b-tau) in I),
over every multidegree b in the lcm lattice.  This formula is valid for
arbitrary monomial ideals, squarefree or not.  An independent cross-check
restricts the Taylor complex on the generators instead: beta_{i,b}(I) =
dim H~_{i-1} of { S subset of G(I) : lcm(S) strictly divides x^b }.

The convention throughout resolves the ideal itself (not the quotient), so
beta_0 counts minimal generators.  Tables are exact over QQ and over F_p.
"""

from __future__ import annotations

from functools import lru_cache

from .homology import FieldSpec, SimplicialComplex, reduced_homology_ranks
from .ideals import (
    Monomial,
    MonomialIdeal,
    format_monomial,
    lcm_lattice,
)

TAYLOR_GENERATOR_CAP = 20


class CapacityError(RuntimeError):
    """An enumeration cap (2^generators) would be exceeded."""


class BettiTable:
    """Multigraded Betti numbers: map (index i, multidegree b) -> rank > 0.

    Absent keys mean rank zero.  Treat instances as immutable; they are
    shared through a cache.
    """

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries: dict):
        self.field = field
        self.entries = {k: v for k, v in entries.items() if v}
        for (i, b), v in self.entries.items():
            if i < 0 or v < 0 or not isinstance(b, Monomial):
                raise ValueError(f"bad Betti entry {((i, b), v)!r}")

    def get(self, i: int, b: Monomial) -> int:
        return self.entries.get((i, b), 0)

    def is_empty(self) -> bool:
        return not self.entries

    def items_sorted(self) -> list:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].exps))

    def total_betti(self) -> list[int]:
        """Total Betti numbers: beta_i summed over all multidegrees."""
        if not self.entries:
            return []
        out = [0] * (max(i for i, _ in self.entries) + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def graded_betti(self) -> dict[tuple[int, int], int]:
        """Ranks summed over multidegrees of equal total degree."""
        out: dict[tuple[int, int], int] = {}
        for (i, b), v in self.entries.items():
            key = (i, b.total_degree())
            out[key] = out.get(key, 0) + v
        return out

    def regularity(self) -> int:
        """max over nonzero entries of total degree of b minus i."""
        if not self.entries:
            raise ValueError("regularity of an empty Betti table is undefined")
        return max(b.total_degree() - i for i, b in self.entries)

    def proj_dim(self) -> int:
        """Largest homological index with a nonzero entry."""
        if not self.entries:
            raise ValueError("projective dimension of an empty Betti table is undefined")
        return max(i for i, _ in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, BettiTable)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"BettiTable({self.field}, {len(self.entries)} entries)"


def total_betti(t: BettiTable) -> list[int]:
    return t.total_betti()


def graded_betti(t: BettiTable) -> dict[tuple[int, int], int]:
    return t.graded_betti()


def regularity(t: BettiTable) -> int:
    return t.regularity()


def proj_dim(t: BettiTable) -> int:
    return t.proj_dim()


def upper_koszul(I: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """Koszul subcomplex of I at multidegree b.

    Vertices are the support positions of b (in ascending order); a subset
    tau is a face iff x^(b-tau) lies in I.  Void when x^b is not in I.
    """
    supp = b.support()
    s = len(supp)
    faces = []
    if b.is_squarefree() and all(g.is_squarefree() for g in I.gens):
        gmasks = [g.support_mask() for g in I.gens]
        bmask = b.support_mask()
        spread = [1 << v for v in supp]
        for tau in range(1 << s):
            rem = bmask
            t = tau
            while t:
                low = t & -t
                rem ^= spread[low.bit_length() - 1]
                t ^= low
            if any(g & ~rem == 0 for g in gmasks):
                faces.append(tau)
    else:
        gexps = [g.exps for g in I.gens]
        bexps = b.exps
        for tau in range(1 << s):
            rem = list(bexps)
            t = tau
            while t:
                low = t & -t
                rem[supp[low.bit_length() - 1]] -= 1
                t ^= low
            if any(all(ge <= re for ge, re in zip(g, rem)) for g in gexps):
                faces.append(tau)
    return SimplicialComplex(s, faces, _closed=True)


def _table_from_degree_homology(field, degree_ranks):
    entries = {}
    for b, ranks in degree_ranks:
        for d, r in ranks.items():
            if r:
                entries[(d + 1, b)] = r
    return BettiTable(field, entries)


@lru_cache(maxsize=None)
def _betti_table_cached(I: MonomialIdeal, field: FieldSpec) -> BettiTable:
    per_degree = []
    for b in lcm_lattice(I):
        per_degree.append((b, reduced_homology_ranks(upper_koszul(I, b), field)))
    return _table_from_degree_homology(field, per_degree)


def betti_table(I: MonomialIdeal, field: FieldSpec) -> BettiTable:
    """Complete multigraded Betti table of I over the given field.

    Entries live only at lcm-lattice degrees; the zero ideal gives an empty
    table and the unit ideal the single entry beta_{0,1} = 1.  Results are
    cached per (ideal, field).
    """
    return _betti_table_cached(I, field)


def clear_cache():
    _betti_table_cached.cache_clear()


def betti_table_taylor(I: MonomialIdeal, field: FieldSpec) -> BettiTable:
    """Independent Betti computation through the restricted Taylor complex.

    For each lattice degree b, the complex on the generator set whose faces
    are the subsets S with lcm(S) strictly dividing x^b has H~_{i-1} of
    dimension beta_{i,b}(I).  Enumerates all 2^|G(I)| subsets, so the
    generator count is capped at TAYLOR_GENERATOR_CAP.
    """
    m = len(I.gens)
    if m > TAYLOR_GENERATOR_CAP:
        raise CapacityError(f"{m} generators exceed the Taylor cap {TAYLOR_GENERATOR_CAP}")
    if I.is_zero():
        return BettiTable(field, {})
    if I.is_unit():
        return BettiTable(field, {(0, Monomial.one(I.n)): 1})
    gens = [g.exps for g in I.gens]
    n = I.n
    sub_lcm = [None] * (1 << m)
    sub_lcm[0] = (0,) * n
    for S in range(1, 1 << m):
        low = S & -S
        prev = sub_lcm[S ^ low]
        g = gens[low.bit_length() - 1]
        sub_lcm[S] = tuple(max(a, c) for a, c in zip(prev, g))
    per_degree = []
    for bexps in sorted(set(sub_lcm[1:])):
        faces = [
            S
            for S in range(1 << m)
            if sub_lcm[S] != bexps and all(a <= c for a, c in zip(sub_lcm[S], bexps))
        ]
        C = SimplicialComplex(m, faces, _closed=True)
        per_degree.append((Monomial(bexps), reduced_homology_ranks(C, field)))
    return _table_from_degree_homology(field, per_degree)


def has_linear_resolution(I: MonomialIdeal, field: FieldSpec) -> bool:
    """True iff all generators share one degree d and every nonzero
    beta_{i,b} sits in total degree d + i."""
    if I.is_zero():
        raise ValueError("the zero ideal has no resolution to test")
    degs = set(I.generator_degrees())
    if len(degs) != 1:
        return False
    d = degs.pop()
    t = betti_table(I, field)
    return all(b.total_degree() == d + i for i, b in t.entries)


def k_polynomial_check(I: MonomialIdeal, field: FieldSpec) -> bool:
    """Euler-characteristic consistency test.

    For every multidegree b, the alternating sum of beta_{i,b} must equal
    the inclusion-exclusion count over generator subsets with lcm exactly
    x^b.  Both sides are field-independent, so this must hold over every
    field.
    """
    m = len(I.gens)
    if m > TAYLOR_GENERATOR_CAP:
        raise CapacityError(f"{m} generators exceed the cap {TAYLOR_GENERATOR_CAP}")
    gens = [g.exps for g in I.gens]
    n = I.n
    inc_exc: dict[tuple, int] = {}
    sub_lcm = [None] * (1 << m)
    sub_lcm[0] = (0,) * n
    for S in range(1, 1 << m):
        low = S & -S
        prev = sub_lcm[S ^ low]
        g = gens[low.bit_length() - 1]
        l = tuple(max(a, c) for a, c in zip(prev, g))
        sub_lcm[S] = l
        inc_exc[l] = inc_exc.get(l, 0) + (1 if S.bit_count() % 2 else -1)
    t = betti_table(I, field)
    beta_side: dict[tuple, int] = {}
    for (i, b), v in t.entries.items():
        key = b.exps
        beta_side[key] = beta_side.get(key, 0) + (v if i % 2 == 0 else -v)
    keys = set(inc_exc) | set(beta_side)
    return all(inc_exc.get(k, 0) == beta_side.get(k, 0) for k in keys)


def char_scan(I: MonomialIdeal, primes) -> dict[int, list[tuple[int, Monomial, int, int]]]:
    """Compare the Betti table over QQ with the table over F_p for each p.

    Returns {p: [(i, b, rank over QQ, rank over F_p), ...]} listing every
    entry where the two tables differ; an empty list means the tables are
    identical for that prime.
    """
    fields = [FieldSpec(p) for p in primes]  # validates primality
    t0 = betti_table(I, FieldSpec(0))
    report = {}
    for fs in fields:
        tp = betti_table(I, fs)
        keys = set(t0.entries) | set(tp.entries)
        diffs = [
            (i, b, t0.get(i, b), tp.get(i, b))
            for (i, b) in keys
            if t0.get(i, b) != tp.get(i, b)
        ]
        diffs.sort(key=lambda row: (row[0], row[1].exps))
        report[fs.characteristic] = diffs
    return report


# --- text renderers ----------------------------------------------------------


def format_betti_table(t: BettiTable) -> str:
    """Versioned key-value serialization: one line per nonzero entry."""
    lines = [f"betti field={t.field.characteristic} convention=ideal"]
    for (i, b), v in t.items_sorted():
        lines.append(f"{i} {format_monomial(b)} {v}")
    return "\n".join(lines) + "\n"


def betti_diagram(t: BettiTable) -> str:
    """Standard graded Betti diagram: rows j - i, columns i."""
    if t.is_empty():
        return "(empty Betti table)\n"
    graded = t.graded_betti()
    cols = range(0, max(i for i, _ in graded) + 1)
    rows = range(
        min(j - i for i, j in graded),
        max(j - i for i, j in graded) + 1,
    )
    totals = t.total_betti()
    width = max(
        len(str(v)) for v in list(graded.values()) + totals + [max(cols, default=0)]
    )
    width = max(width, 1)
    label_w = max(len(f"{r}:") for r in rows) if rows else 2
    label_w = max(label_w, len("total:"))

    def fmt_row(label, cells):
        return label.rjust(label_w) + " " + " ".join(c.rjust(width) for c in cells)

    out = [fmt_row("", [str(i) for i in cols])]
    out.append(fmt_row("total:", [str(totals[i]) if i < len(totals) else "0" for i in cols]))
    for r in rows:
        cells = []
        for i in cols:
            v = graded.get((i, i + r), 0)
            cells.append(str(v) if v else ".")
        out.append(fmt_row(f"{r}:", cells))
    return "\n".join(out) + "\n"
