"""Simplicial complexes and reduced homology over the rationals and F_p.

Faces are bitmasks over a local vertex set 0..vertex_count-1.  Boundary
ranks are computed by exact sparse Gaussian elimination: arbitrary-precision
integer arithmetic in characteristic 0 (pivoting prefers unit entries and
sparse rows, with fraction-free updates), bitmask elimination over F_2, and
modular elimination for other primes.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin for p < 3.3e24 with these bases
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field, given by its characteristic: 0 or a prime."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c == 0:
            return
        if not (2 <= c < 2**31 and _is_prime(c)):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31: {c}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"F{self.characteristic}"


QQ = FieldSpec(0)
F2 = FieldSpec(2)


def _downward_closure(masks: Iterable[int]) -> frozenset[int]:
    out = set()
    for f in masks:
        if f in out:
            continue
        sub = f
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return frozenset(out)


class SimplicialComplex:
    """Abstract simplicial complex on vertices 0..vertex_count-1.

    The face family is stored explicitly (each face a bitmask) and is always
    downward closed.  The void complex (no faces at all) is distinct from
    the irrelevant complex whose only face is the empty one.
    """

    __slots__ = ("vertex_count", "faces")

    def __init__(self, vertex_count: int, faces: Iterable = (), *, _closed: bool = False):
        masks = []
        for f in faces:
            if isinstance(f, int):
                mask = f
            else:
                mask = 0
                for v in f:
                    mask |= 1 << v
            if mask >> vertex_count:
                raise ValueError(f"face {mask:b} exceeds vertex count {vertex_count}")
            masks.append(mask)
        self.vertex_count = vertex_count
        self.faces = frozenset(masks) if _closed else _downward_closure(masks)

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Iterable) -> "SimplicialComplex":
        return cls(vertex_count, facets)

    def is_void(self) -> bool:
        return not self.faces

    def is_irrelevant(self) -> bool:
        return self.faces == frozenset((0,))

    def dim(self) -> int:
        """Dimension of the largest face; -1 for {empty face} only."""
        if self.is_void():
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.faces) - 1

    def facets(self) -> list[int]:
        """Maximal faces, as sorted bitmasks."""
        out = []
        for f in self.faces:
            if not any(f != g and f & g == f for g in self.faces):
                out.append(f)
        return sorted(out)

    def faces_by_dim(self) -> dict[int, list[int]]:
        """Faces grouped by dimension (popcount - 1), each group sorted."""
        by_dim: dict[int, list[int]] = {}
        for f in self.faces:
            by_dim.setdefault(f.bit_count() - 1, []).append(f)
        for group in by_dim.values():
            group.sort()
        return by_dim

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertex_count == other.vertex_count
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.vertex_count, self.faces))

    def __repr__(self):
        return f"SimplicialComplex({self.vertex_count} vertices, {len(self.faces)} faces)"


# --- exact rank computations ------------------------------------------------


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank


def _rank_modp(rows: list[dict[int, int]], p: int) -> int:
    rows = [r for r in (dict(r) for r in rows) if r]
    rank = 0
    while rows:
        # shortest row, smallest column label inside it
        ri = min(range(len(rows)), key=lambda i: len(rows[i]))
        prow = rows.pop(ri)
        pc = min(prow)
        inv = pow(prow[pc], -1, p)
        rank += 1
        survivors = []
        for r in rows:
            v = r.get(pc)
            if v:
                f = v * inv % p
                for c, w in prow.items():
                    nv = (r.get(c, 0) - f * w) % p
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            if r:
                survivors.append(r)
        rows = survivors
    return rank


def _rank_exact(rows: list[dict[int, int]]) -> int:
    """Rank over the rationals by fraction-free sparse elimination.

    Pivots prefer +-1 entries with low fill-in, so the arithmetic stays on
    small integers for the near-unimodular boundary matrices this module
    produces; non-unit pivots fall back to cross-multiplication with gcd
    reduction, which is still exact.
    """
    rows = [r for r in (dict(r) for r in rows) if r]
    rank = 0
    while rows:
        col_count: dict[int, int] = {}
        for r in rows:
            for c in r:
                col_count[c] = col_count.get(c, 0) + 1
        best = None
        for i, r in enumerate(rows):
            rl = len(r) - 1
            for c, v in r.items():
                score = (abs(v) != 1, rl * (col_count[c] - 1), rl, c)
                if best is None or score < best[0]:
                    best = (score, i, c)
        _, pi, pc = best
        prow = rows.pop(pi)
        pv = prow[pc]
        rank += 1
        survivors = []
        for r in rows:
            v = r.get(pc)
            if v:
                if pv == 1 or pv == -1:
                    f = v * pv
                    for c, w in prow.items():
                        nv = r.get(c, 0) - f * w
                        if nv:
                            r[c] = nv
                        else:
                            r.pop(c, None)
                else:
                    merged = {}
                    for c, w in r.items():
                        merged[c] = w * pv
                    for c, w in prow.items():
                        nv = merged.get(c, 0) - v * w
                        if nv:
                            merged[c] = nv
                        else:
                            merged.pop(c, None)
                    g = 0
                    for w in merged.values():
                        g = gcd(g, w)
                    r = {c: w // g for c, w in merged.items()} if g > 1 else merged
            if r:
                survivors.append(r)
        rows = survivors
    return rank


def matrix_rank(rows: list[dict[int, int]], field: FieldSpec) -> int:
    """Exact rank of a sparse integer matrix given as row dicts col -> coeff."""
    p = field.characteristic
    if p == 0:
        return _rank_exact(rows)
    if p == 2:
        packed = []
        for r in rows:
            mask = 0
            for c, v in r.items():
                if v % 2:
                    mask |= 1 << c
            packed.append(mask)
        return _rank_gf2(packed)
    reduced = []
    for r in rows:
        rr = {c: v % p for c, v in r.items() if v % p}
        reduced.append(rr)
    return _rank_modp(reduced, p)


def _boundary_rows(faces: list[int], below_index: dict[int, int]) -> list[dict[int, int]]:
    """One row per d-face: its boundary with alternating signs over (d-1)-faces."""
    rows = []
    for f in faces:
        row = {}
        sign = 1
        m = f
        while m:
            low = m & -m
            row[below_index[f ^ low]] = sign
            sign = -sign
            m ^= low
        if not f:
            row = {}
        rows.append(row)
    return rows


def reduced_homology_ranks(C: SimplicialComplex, field: FieldSpec) -> dict[int, int]:
    """Dimensions of the reduced homology of C over the given field.

    Returns {d: dim H~_d} for d from -1 up to dim(C), computed from boundary
    ranks: dim H~_d = #d-faces - rank(bd_d) - rank(bd_{d+1}).  The void
    complex yields {} (all groups zero); the irrelevant complex {empty face}
    has H~_{-1} of rank 1.
    """
    if C.is_void():
        return {}
    by_dim = C.faces_by_dim()
    top = max(by_dim)
    boundary_rank = {}
    for d in range(0, top + 1):
        below = {g: i for i, g in enumerate(by_dim[d - 1])}
        if field.characteristic == 2:
            rows = []
            for f in by_dim[d]:
                mask, m = 0, f
                while m:
                    low = m & -m
                    mask |= 1 << below[f ^ low]
                    m ^= low
                rows.append(mask)
            boundary_rank[d] = _rank_gf2(rows)
        else:
            rows = _boundary_rows(by_dim[d], below)
            boundary_rank[d] = matrix_rank(rows, field)
    out = {}
    for d in range(-1, top + 1):
        out[d] = len(by_dim.get(d, ())) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
    return out
