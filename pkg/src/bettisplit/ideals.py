"""Monomials and monomial ideals.

Monomials are exponent vectors over a fixed variable count n; ideals are
stored by their unique minimal generating set.  This module provides the
arithmetic every other module consumes: lcm, divisibility, minimalization,
ideal intersection and membership, lcm lattices, strongly stable (Borel)
closures, and the plain-text ideal format used by the command line tools.

Variable labels are 1-based in all textual surfaces (``x1 .. xn``); exponent
vectors are plain Python tuples, with position ``k`` holding the exponent of
``x{k+1}``.
"""

from __future__ import annotations

import re
from typing import Iterable


class DimensionMismatchError(ValueError):
    """Two monomials or ideals live in rings with different variable counts."""


class IdealFormatError(ValueError):
    """Ideal text input could not be parsed."""


def _check_same_ring(n, m):
    if n != m:
        raise DimensionMismatchError(f"ambient variable counts differ: {n} != {m}")


class Monomial:
    """A monomial x1^e1 * ... * xn^en stored as its exponent vector.

    Immutable and hashable.  The unit monomial is the all-zeros vector; the
    total degree is the sum of the exponents.
    """

    __slots__ = ("exps",)

    def __init__(self, exps: Iterable[int]):
        exps = tuple(exps)
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers: {exps!r}")
        self.exps = exps

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, label: int, n: int) -> "Monomial":
        """The monomial x<label> (1-based label) in n variables."""
        if not 1 <= label <= n:
            raise ValueError(f"variable label {label} outside 1..{n}")
        return cls(tuple(1 if i == label - 1 else 0 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.exps)

    def total_degree(self) -> int:
        return sum(self.exps)

    def is_unit(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def support(self) -> tuple[int, ...]:
        """0-based positions of variables appearing in this monomial."""
        return tuple(i for i, e in enumerate(self.exps) if e > 0)

    def support_mask(self) -> int:
        mask = 0
        for i, e in enumerate(self.exps):
            if e:
                mask |= 1 << i
        return mask

    def divides(self, other: "Monomial") -> bool:
        _check_same_ring(self.n, other.n)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def strictly_divides(self, other: "Monomial") -> bool:
        return self.divides(other) and self.exps != other.exps

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self.n, other.n)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self.n, other.n)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        # lexicographic on exponent vectors; the canonical sort everywhere
        return self.exps < other.exps

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r}, n={self.n})"

    def __str__(self):
        return format_monomial(self)


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise maximum of the exponent vectors."""
    return a.lcm(b)


def divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b (componentwise <=)."""
    return a.divides(b)


def strictly_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b and a != b."""
    return a.strictly_divides(b)


def _minimal_subset(gens):
    """Drop duplicates and any monomial divisible by another one."""
    by_degree = sorted(set(gens), key=lambda m: (m.total_degree(), m.exps))
    kept = []
    for m in by_degree:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return kept


class MonomialIdeal:
    """A monomial ideal, stored by its unique minimal generating set.

    The constructor minimalizes: duplicates and generators divisible by
    another generator are dropped, and the survivors are sorted
    lexicographically.  The zero ideal has an empty generator tuple; the
    unit ideal is generated by the unit monomial.
    """

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        gens = tuple(gens)
        for g in gens:
            _check_same_ring(n, g.n)
        self.n = n
        self.gens = tuple(sorted(_minimal_subset(gens)))
        self._hash = None

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def contains(self, m: Monomial) -> bool:
        """Membership: true iff some generator divides m."""
        _check_same_ring(self.n, m.n)
        return any(g.divides(m) for g in self.gens)

    def scale(self, m: Monomial) -> "MonomialIdeal":
        """The ideal m * I, generated by m*g over the generators g."""
        _check_same_ring(self.n, m.n)
        return MonomialIdeal(self.n, (m * g for g in self.gens))

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(g.total_degree() for g in self.gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.gens))
        return self._hash

    def __repr__(self):
        body = ", ".join(format_monomial(g) for g in self.gens) or "0"
        return f"MonomialIdeal({body}; n={self.n})"


def minimalize(gens: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Build the ideal generated by gens, as its minimal generating set.

    Idempotent.  For an empty generator collection the ambient variable
    count n must be supplied (the result is the zero ideal).
    """
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("empty generator set needs an explicit variable count")
        n = gens[0].n
    return MonomialIdeal(n, gens)


def membership(I: MonomialIdeal, m: Monomial) -> bool:
    """True iff m lies in I, i.e. some minimal generator divides m."""
    return I.contains(m)


def intersect(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    """Intersection of two monomial ideals.

    Computed as the minimalization of all pairwise lcms of the two
    generating sets; a monomial lies in the result iff it lies in both
    inputs.
    """
    _check_same_ring(J.n, K.n)
    return MonomialIdeal(J.n, (gj.lcm(gk) for gj in J.gens for gk in K.gens))


class LcmLattice:
    """All lcms of nonempty subsets of an ideal's minimal generators.

    Closed under pairwise lcm and containing every generator; iteration is
    in lexicographic order.
    """

    __slots__ = ("n", "degrees")

    def __init__(self, n: int, degrees: Iterable[Monomial]):
        self.n = n
        self.degrees = tuple(sorted(set(degrees)))

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __contains__(self, m):
        return m in set(self.degrees)

    def __repr__(self):
        return f"LcmLattice({len(self.degrees)} degrees, n={self.n})"


def lcm_lattice(I: MonomialIdeal) -> LcmLattice:
    """Closure of the generator set under pairwise lcm.

    Contains the lcm of every nonempty subset of generators; the zero ideal
    yields an empty lattice.
    """
    found = set(I.gens)
    frontier = list(I.gens)
    while frontier:
        fresh = []
        for m in frontier:
            for g in I.gens:
                l = g.lcm(m)
                if l not in found:
                    found.add(l)
                    fresh.append(l)
        frontier = fresh
    return LcmLattice(I.n, found)


def borel_closure(seeds: Iterable[Monomial]) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the seed monomials.

    Closes the seed set under every exchange replacing one factor x_j by
    x_i with i < j, then minimalizes.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("borel_closure needs at least one seed monomial")
    n = seeds[0].n
    for s in seeds:
        _check_same_ring(n, s.n)
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        e = stack.pop().exps
        for j in range(n):
            if e[j] == 0:
                continue
            for i in range(j):
                f = list(e)
                f[j] -= 1
                f[i] += 1
                m = Monomial(f)
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
    return MonomialIdeal(n, seen)


# ---------------------------------------------------------------------------
# Plain-text ideal format.
#
#   line 1:            vars <n>
#   following lines:   one generator each, e.g.  x1*x3^2*x6
#
# The token `1` denotes the unit monomial; a file with no generator lines is
# the zero ideal.  Blank lines and lines starting with `#` are skipped.
# ---------------------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(token: str, n: int) -> Monomial:
    token = token.strip()
    if token == "1":
        return Monomial.one(n)
    exps = [0] * n
    for part in token.split("*"):
        m = _FACTOR.match(part.strip())
        if m is None:
            raise IdealFormatError(f"bad monomial factor {part.strip()!r} in {token!r}")
        idx, exp = int(m.group(1)), int(m.group(2) or 1)
        if not 1 <= idx <= n:
            raise IdealFormatError(f"variable x{idx} outside x1..x{n} in {token!r}")
        if exp < 1:
            raise IdealFormatError(f"exponent must be positive in {part.strip()!r}")
        exps[idx - 1] += exp
    return Monomial(exps)


def format_monomial(m: Monomial) -> str:
    if m.is_unit():
        return "1"
    parts = []
    for i, e in enumerate(m.exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def parse_ideal(text: str) -> MonomialIdeal:
    header = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            fields = line.split()
            if len(fields) != 2 or fields[0] != "vars" or not fields[1].isdigit():
                raise IdealFormatError(f"line {lineno}: expected 'vars <n>', got {line!r}")
            header = int(fields[1])
            continue
        try:
            gens.append(parse_monomial(line, header))
        except IdealFormatError as exc:
            raise IdealFormatError(f"line {lineno}: {exc}") from None
    if header is None:
        raise IdealFormatError("missing 'vars <n>' header line")
    return MonomialIdeal(header, gens)


def format_ideal(I: MonomialIdeal) -> str:
    lines = [f"vars {I.n}"]
    lines.extend(format_monomial(g) for g in I.gens)
    return "\n".join(lines) + "\n"
