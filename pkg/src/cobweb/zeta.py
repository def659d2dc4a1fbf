"""Dense 0/1 incidence matrix of a cobweb poset, with CSV round-trip.

The matrix is indexed by the poset's canonical vertex order (level-major,
index-minor).  Under that order the matrix is upper triangular with unit
diagonal and shows the staircase of zero blocks: one identity block per
level on the diagonal, all-ones blocks above, zeros below.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .poset import CobwebPoset

__all__ = [
    "DEFAULT_DIM_CAP",
    "IncidenceMatrix",
    "MatrixSizeError",
    "zeta_matrix",
    "staircase_check",
    "cobweb_from_matrix",
]

DEFAULT_DIM_CAP = 10_000


class MatrixSizeError(Exception):
    """Dense materialization refused: the matrix would exceed the row cap."""

    def __init__(self, dim: int, cap: int) -> None:
        super().__init__(f"incidence matrix would be {dim}x{dim}; cap is {cap} rows")
        self.dim = dim
        self.cap = cap


class IncidenceMatrix:
    """Immutable square 0/1 matrix, one compact bytes row per vertex."""

    __slots__ = ("dim", "_rows")

    def __init__(self, rows: Iterable[bytes | Sequence[int]]) -> None:
        packed = tuple(bytes(r) for r in rows)
        dim = len(packed)
        for r in packed:
            if len(r) != dim:
                raise ValueError(f"matrix must be square; got a row of length {len(r)} in a {dim}-row matrix")
            if any(b not in (0, 1) for b in r):
                raise ValueError("entries must be 0 or 1")
        self.dim = dim
        self._rows = packed

    def entry(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self._rows[i])

    def to_csv(self) -> str:
        """One comma-separated 0/1 row per line, newline-terminated, no header."""
        return "".join(
            ",".join("1" if b else "0" for b in r) + "\n" for r in self._rows
        )

    @classmethod
    def from_csv(cls, text: str) -> "IncidenceMatrix":
        """Strict inverse of to_csv; rejects anything but a square 0/1 body."""
        if not text or not text.endswith("\n"):
            raise ValueError("CSV body must be nonempty and newline-terminated")
        rows = []
        for line in text.splitlines():
            row = []
            for cell in line.split(","):
                if cell == "0":
                    row.append(0)
                elif cell == "1":
                    row.append(1)
                else:
                    raise ValueError(f"bad CSV cell {cell!r}; expected '0' or '1'")
            rows.append(row)
        return cls(rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IncidenceMatrix(dim={self.dim})"


def zeta_matrix(P: CobwebPoset, dim_cap: int = DEFAULT_DIM_CAP) -> IncidenceMatrix:
    """Incidence matrix over the canonical order: entry(i, j) = 1 iff v_i <= v_j.

    Refuses construction when the dimension exceeds `dim_cap` (dense storage
    is quadratic).  Rows are filled level block by level block, which is the
    order relation evaluated in bulk: a vertex is below exactly itself and
    every vertex of the later levels.
    """
    dim = P.vertex_count
    if dim > dim_cap:
        raise MatrixSizeError(dim, dim_cap)
    rows = []
    offset = 0
    for size in P.level_sizes:
        block_end = offset + size
        ones_tail = b"\x01" * (dim - block_end)
        for i in range(offset, block_end):
            row = bytearray(dim)
            row[i] = 1
            row[block_end:] = ones_tail
            rows.append(bytes(row))
        offset = block_end
    return IncidenceMatrix(rows)


def staircase_check(M: IncidenceMatrix, P: CobwebPoset) -> bool:
    """Verify the staircase of zeros above the diagonal.

    For every pair i < j in canonical order the entry must be 1 exactly when
    v_j sits on a strictly higher level, and 0 when the two vertices share a
    level.  Raises ValueError on a dimension mismatch between M and P.
    """
    if M.dim != P.vertex_count:
        raise ValueError(f"dimension mismatch: matrix is {M.dim}, poset has {P.vertex_count} vertices")
    verts = P.vertices()
    for i in range(M.dim):
        level_i = verts[i].level
        for j in range(i + 1, M.dim):
            expected = 1 if verts[j].level > level_i else 0
            if M.entry(i, j) != expected:
                return False
    return True


def cobweb_from_matrix(M: IncidenceMatrix) -> CobwebPoset:
    """Rebuild the poset a zeta matrix encodes; reject non-cobweb matrices.

    Levels are read off as maximal contiguous runs of vertices incomparable
    with the run's first vertex.  The run sizes must form an initial segment
    of the Fibonacci numbers, and the whole matrix must then agree with the
    rebuilt poset's order relation entry for entry.
    """
    if M.dim == 0:
        raise ValueError("empty matrix encodes no poset")
    sizes = []
    start = 0
    for j in range(1, M.dim):
        if M.entry(start, j):
            sizes.append(j - start)
            start = j
    sizes.append(M.dim - start)
    P = CobwebPoset(len(sizes))
    if tuple(sizes) != P.level_sizes:
        raise ValueError(f"level sizes {sizes} are not an initial Fibonacci segment")
    verts = P.vertices()
    for i, vi in enumerate(verts):
        for j, vj in enumerate(verts):
            if M.entry(i, j) != (1 if P.leq(vi, vj) else 0):
                raise ValueError(f"entry ({i}, {j}) inconsistent with the cobweb order")
    return P
