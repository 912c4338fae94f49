"""Graded Betti tables of monomial ideals by three routes: a definitional
oracle (multigraded Koszul strands over the lcm lattice), Hochster's
formula for squarefree ideals, and the closed binomial formula for
bounded-stable ideals; plus every resolution statistic derived from them.

Tables come in two views: over the quotient S/I (entries b_{i,j}(S/I),
with (0,0) = 1) and over the ideal (entries b_{i,j}(I)); the views are
related by b_{i,j}(S/I) = b_{i-1,j}(I) for i >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import hilbert
from .homology import (
    ExactMatrix,
    FiniteChainComplex,
    homology_dims,
    reduced_simplicial_homology,
)
from .monomials import (
    BoundVector,
    Monomial,
    MonomialIdeal,
    is_stable,
    saturation_count,
)
from .simplicial import SimplicialComplex

SUBJECT_QUOTIENT = "quotient"
SUBJECT_IDEAL = "ideal"

NEG_INFINITY = float("-inf")  # regularity of the zero module


class OracleCapError(RuntimeError):
    """Raised when the definitional oracle would enumerate too many
    generator subsets; use the closed formula or the Hochster route."""


@dataclass
class BettiTable:
    subject: str
    n: int
    entries: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        if self.subject not in (SUBJECT_QUOTIENT, SUBJECT_IDEAL):
            raise ValueError(f"unknown subject {self.subject!r}")
        for (i, j), v in self.entries.items():
            if v <= 0:
                raise ValueError("stored multiplicities must be positive")
            if i < 0:
                raise ValueError("homological index must be non-negative")
        if self.subject == SUBJECT_QUOTIENT:
            if self.entries.get((0, 0)) != 1 or any(
                i == 0 and j != 0 for (i, j) in self.entries
            ):
                raise ValueError("a quotient table has exactly the entry (0,0) = 1 in column 0")

    def entry(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def to_ideal(self) -> BettiTable:
        if self.subject == SUBJECT_IDEAL:
            return self
        return BettiTable(
            SUBJECT_IDEAL,
            self.n,
            {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1},
        )

    def to_quotient(self) -> BettiTable:
        if self.subject == SUBJECT_QUOTIENT:
            return self
        entries = {(i + 1, j): v for (i, j), v in self.entries.items()}
        entries[(0, 0)] = 1
        return BettiTable(SUBJECT_QUOTIENT, self.n, entries)

    @property
    def max_index(self) -> int:
        """Largest homological index with a nonzero entry."""
        return max((i for (i, _) in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)

    def format_grid(self) -> str:
        """Fixed text layout: columns are homological indices, rows are
        degree slopes j - i, plus a totals row; zero entries print as dots."""
        table = self.to_quotient()
        pdim = table.max_index
        reg = max((j - i for (i, j) in table.entries), default=0)
        cols = list(range(pdim + 1))
        rows = list(range(reg + 1))
        cells = [[table.entry(i, i + d) for i in cols] for d in rows]
        totals = [table.total(i) for i in cols]
        rendered = [[str(v) if v else "." for v in row] for row in cells]
        rendered_totals = [str(v) for v in totals]
        widths = [
            max(len(str(c)), len(rendered_totals[c]), *(len(r[c]) for r in rendered))
            for c in cols
        ]
        label_width = max(len("total:"), *(len(f"{d}:") for d in rows))
        lines = [
            " " * label_width + " " + " ".join(str(c).rjust(widths[c]) for c in cols),
            "total:".rjust(label_width) + " " + " ".join(rendered_totals[c].rjust(widths[c]) for c in cols),
        ]
        for d in rows:
            lines.append(
                f"{d}:".rjust(label_width) + " " + " ".join(rendered[d][c].rjust(widths[c]) for c in cols)
            )
        return "\n".join(lines)


def _strand_homology(
    ideal: MonomialIdeal,
    multidegree: tuple[int, ...],
    standard: dict[tuple[int, ...], bool],
    modulus: int | None = None,
) -> dict[int, int]:
    """Homology dimensions of the multigraded Koszul strand at one
    multidegree.  The basis of level i is the set of i-subsets F of the
    support with x^(a - 1_F) a standard monomial of S/I."""
    supp = [k for k, e in enumerate(multidegree) if e]
    s = len(supp)

    def is_standard(mask: int) -> bool:
        e = list(multidegree)
        for t in range(s):
            if mask >> t & 1:
                e[supp[t]] -= 1
        key = tuple(e)
        hit = standard.get(key)
        if hit is None:
            hit = not ideal.contains(Monomial(key))
            standard[key] = hit
        return hit

    levels: list[list[int]] = [[] for _ in range(s + 1)]
    for mask in range(1 << s):
        if is_standard(mask):
            levels[bin(mask).count("1")].append(mask)
    index = [{mask: pos for pos, mask in enumerate(level)} for level in levels]
    boundaries = []
    for i in range(1, s + 1):
        entries: dict[tuple[int, int], int] = {}
        for col, mask in enumerate(levels[i]):
            sign = 1
            for t in range(s):
                if mask >> t & 1:
                    row = index[i - 1].get(mask ^ (1 << t))
                    if row is not None:
                        entries[(row, col)] = sign
                    sign = -sign
        boundaries.append(ExactMatrix(len(levels[i - 1]), len(levels[i]), entries))
    chain = FiniteChainComplex(tuple(len(level) for level in levels), tuple(boundaries))
    dims = homology_dims(chain, modulus)
    return {i: d for i, d in enumerate(dims) if d}


def betti_oracle(
    ideal: MonomialIdeal, cap: int = 18, modulus: int | None = None
) -> BettiTable:
    """Exact graded Betti numbers of S/I from the definition.

    Candidate multidegrees are the lcms of generator subsets; for each one
    the Koszul strand in that multidegree is assembled and its homology
    dimensions are summed by total degree.  Raises OracleCapError above the
    generator cap (subset lcms grow exponentially).
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Betti table")
    if len(ideal.gens) > cap:
        raise OracleCapError(
            f"{len(ideal.gens)} generators exceed the oracle cap {cap}; "
            "use the bounded-stable formula or the Hochster route"
        )
    lcms: set[tuple[int, ...]] = {(0,) * ideal.n}
    for g in ideal.gens:
        lcms |= {tuple(map(max, m, g.exponents)) for m in lcms}
    entries: dict[tuple[int, int], int] = {}
    standard: dict[tuple[int, ...], bool] = {}
    for a in sorted(lcms):
        degree = sum(a)
        for i, d in _strand_homology(ideal, a, standard, modulus).items():
            key = (i, degree)
            entries[key] = entries.get(key, 0) + d
    return BettiTable(SUBJECT_QUOTIENT, ideal.n, entries)


def betti_hochster(
    complex_: SimplicialComplex, modulus: int | None = None
) -> BettiTable:
    """Betti table of the Stanley-Reisner quotient via reduced homology of
    vertex-restricted subcomplexes."""
    if complex_.is_void:
        raise ValueError("the void complex corresponds to the unit ideal")
    n = complex_.n
    entries: dict[tuple[int, int], int] = {}
    for size in range(1, n + 1):
        for w in combinations(range(1, n + 1), size):
            h = reduced_simplicial_homology(complex_.restriction(w), modulus)
            for k, d in h.items():
                if not d:
                    continue
                i = size - k - 2  # ideal-view homological index
                if i >= 0:
                    key = (i, size)
                    entries[key] = entries.get(key, 0) + d
    return BettiTable(SUBJECT_IDEAL, n, entries).to_quotient()


def betti_stable_formula(ideal: MonomialIdeal, bounds: BoundVector) -> BettiTable:
    """Closed binomial formula for the Betti numbers of a bounded-stable
    ideal: b_{i,i+j}(I) counts generators of degree j weighted by
    C(top(u) - 1 - saturation(u), i).  Characteristic independent."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Betti table")
    if not is_stable(ideal, bounds):
        raise ValueError("the closed formula requires a bounded-stable ideal")
    entries: dict[tuple[int, int], int] = {}
    for g in ideal.gens:
        width = g.top_index - 1 - saturation_count(g, bounds)
        for i in range(width + 1):
            key = (i, i + g.degree)
            entries[key] = entries.get(key, 0) + comb(width, i)
    return BettiTable(SUBJECT_IDEAL, ideal.n, entries)


@dataclass(frozen=True)
class ResolutionStats:
    """Shift data of the minimal free resolution of S/I.

    max_shifts[i-1] and min_shifts[i-1] are the extreme degrees at
    homological step i; corner is the largest step whose shift reaches the
    regularity row; initial_degree is the least generator degree of I.
    """

    pdim: int
    reg: int
    max_shifts: tuple[int, ...]
    min_shifts: tuple[int, ...]
    initial_degree: int | None
    corner: int
    pure: bool
    quasipure: bool
    pure_degrees: tuple[int, ...] | None

    def max_shift(self, i: int) -> int:
        return self.max_shifts[i - 1]

    def min_shift(self, i: int) -> int:
        return self.min_shifts[i - 1]


def stats(table: BettiTable) -> ResolutionStats:
    t = table.to_quotient()
    pdim = t.max_index
    reg = max((j - i for (i, j) in t.entries), default=0)
    shifts: dict[int, list[int]] = {}
    for (i, j) in t.entries:
        shifts.setdefault(i, []).append(j)
    max_shifts = tuple(max(shifts[i]) for i in range(1, pdim + 1))
    min_shifts = tuple(min(shifts[i]) for i in range(1, pdim + 1))
    initial = min(shifts[1]) if 1 in shifts else None
    corner = max(i for (i, j) in t.entries if j - i == reg)
    pure = all(len(set(shifts[i])) == 1 for i in range(1, pdim + 1))
    quasipure = all(min_shifts[i - 1] >= max_shifts[i - 2] for i in range(2, pdim + 1))
    return ResolutionStats(
        pdim=pdim,
        reg=reg,
        max_shifts=max_shifts,
        min_shifts=min_shifts,
        initial_degree=initial,
        corner=corner,
        pure=pure,
        quasipure=quasipure,
        pure_degrees=max_shifts if pure else None,
    )


def regularity(table: BettiTable) -> int | float:
    """Castelnuovo-Mumford regularity of the table's subject; the zero
    module (an empty ideal-view table) regularizes to minus infinity."""
    if not table.entries:
        return NEG_INFINITY
    return max(j - i for (i, j) in table.entries)


def stable_regularity(ideal: MonomialIdeal, bounds: BoundVector) -> int | float:
    """Regularity of a bounded-stable ideal: the maximal generator degree."""
    if not is_stable(ideal, bounds):
        raise ValueError("requires a bounded-stable ideal")
    if ideal.is_zero:
        return NEG_INFINITY
    return ideal.max_gen_degree


def is_componentwise_linear(ideal: MonomialIdeal, cap: int = 18) -> bool:
    """Truncation criterion: I is componentwise linear iff the ideal
    generated in degrees <= k has regularity <= k for every k.  Only
    k up to the maximal generator degree are informative."""
    if ideal.is_unit:
        raise ValueError("the unit ideal is not graded")
    if ideal.is_zero:
        return True
    for k in range(ideal.min_gen_degree, ideal.max_gen_degree + 1):
        truncated = ideal.truncate(k)
        if truncated.is_zero:
            continue
        reg_ideal = regularity(betti_oracle(truncated, cap).to_ideal())
        if reg_ideal > k:
            return False
    return True


def is_cohen_macaulay(ideal: MonomialIdeal, cap: int = 18) -> bool:
    """True iff the projective dimension of S/I equals its codimension."""
    return stats(betti_oracle(ideal, cap)).pdim == hilbert.summarize(ideal).codim
