"""Exact linear algebra over the rationals and homology of finite chain
complexes.

Matrices carry arbitrary-precision integer entries; ranks over Q are
computed by fraction-free (Bareiss) elimination so no rational arithmetic
ever occurs.  An optional prime-field mode is available for speed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .simplicial import SimplicialComplex


@dataclass
class ExactMatrix:
    """Sparse integer matrix; immutable by convention after construction."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) outside a {self.rows}x{self.cols} matrix")
            if not isinstance(v, int) or v == 0:
                raise ValueError("entries must be nonzero integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> ExactMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, {})

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def compose(self, other: ExactMatrix) -> ExactMatrix:
        """Matrix product self * other (self applied after other)."""
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for composition")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                s = out.get(key, 0) + v * w
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return ExactMatrix(self.rows, other.cols, out)

    def rank(self, modulus: int | None = None) -> int:
        """Rank over Q (default) or over F_p when a prime modulus is given."""
        if not self.entries:
            return 0
        m = self.to_rows()
        if modulus is None:
            return _rank_bareiss(m)
        return _rank_mod_p(m, modulus)


def _rank_bareiss(m: list[list[int]]) -> int:
    nrows = len(m)
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col + 1, ncols):
                # exact by the Bareiss determinant identity
                row[c] = (lead * row[c] - f * top[c]) // prev
            row[col] = 0
        prev = lead
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_mod_p(m: list[list[int]], p: int) -> int:
    nrows = len(m)
    ncols = len(m[0])
    m = [[v % p for v in row] for row in m]
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        for r in range(rank + 1, nrows):
            f = m[r][col] * inv % p
            if f:
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass
class FiniteChainComplex:
    """A finite chain complex of finite-dimensional vector spaces.

    ``boundaries[k]`` is the matrix of the differential C_{k+1} -> C_k;
    the composition of consecutive differentials must vanish.
    """

    dims: tuple[int, ...]
    boundaries: tuple[ExactMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.boundaries) != max(len(self.dims) - 1, 0):
            raise ValueError("need exactly one boundary map between consecutive groups")
        for k, b in enumerate(self.boundaries):
            if b.rows != self.dims[k] or b.cols != self.dims[k + 1]:
                raise ValueError(
                    f"boundary {k} has shape {b.rows}x{b.cols}, expected {self.dims[k]}x{self.dims[k + 1]}"
                )
        for k in range(len(self.boundaries) - 1):
            if not self.boundaries[k].compose(self.boundaries[k + 1]).is_zero:
                raise ValueError("consecutive boundary maps do not compose to zero")


def homology_dims(complex_: FiniteChainComplex, modulus: int | None = None) -> tuple[int, ...]:
    """dim H_k = dim C_k - rank d_k - rank d_{k+1} for each k."""
    dims = complex_.dims
    ranks = [b.rank(modulus) for b in complex_.boundaries]
    out = []
    for k in range(len(dims)):
        rank_out = ranks[k - 1] if k >= 1 else 0
        rank_in = ranks[k] if k < len(ranks) else 0
        out.append(dims[k] - rank_out - rank_in)
    return tuple(out)


def _simplicial_chain_complex(faces_by_dim: dict[int, list[tuple[int, ...]]]) -> FiniteChainComplex:
    top = max(faces_by_dim)
    levels = [faces_by_dim.get(k, []) for k in range(-1, top + 1)]
    index = [{f: i for i, f in enumerate(level)} for level in levels]
    dims = tuple(len(level) for level in levels)
    boundaries = []
    for k in range(len(levels) - 1):
        entries: dict[tuple[int, int], int] = {}
        for col, face in enumerate(levels[k + 1]):
            for t in range(len(face)):
                sub = face[:t] + face[t + 1:]
                entries[(index[k][sub], col)] = -1 if t % 2 else 1
        boundaries.append(ExactMatrix(dims[k], dims[k + 1], entries))
    return FiniteChainComplex(dims, tuple(boundaries))


def reduced_simplicial_homology(
    complex_: SimplicialComplex, modulus: int | None = None
) -> dict[int, int]:
    """Reduced homology dimensions {k: dim H_k} for k = -1 .. dim.

    The VOID complex has no homology at all (empty dict); the complex {∅}
    has H_{-1} of dimension one.
    """
    if complex_.is_void:
        return {}
    faces = complex_.faces_by_dimension()
    chain = _simplicial_chain_complex(faces)
    h = homology_dims(chain, modulus)
    return {k - 1: h[k] for k in range(len(h))}
