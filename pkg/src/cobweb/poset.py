"""The cobweb poset: level s holds F(s) vertices, consecutive levels fully linked."""

from __future__ import annotations

from typing import NamedTuple

from .fibcalc import fib

__all__ = ["Vertex", "CobwebPoset", "build_cobweb"]


class Vertex(NamedTuple):
    """A poset element addressed by (level, index within level); index is 0-based."""

    level: int
    index: int

    def node_id(self) -> str:
        """Stable textual identifier, shared by the DOT export and chain listings."""
        return f"v{self.level}_{self.index}"


class CobwebPoset:
    """Finite truncation of the cobweb poset with levels 1..depth.

    Level s contains exactly fib(s) vertices.  Every vertex of level s lies
    below every vertex of level s+1, and the order relation is the transitive
    closure of those links, which collapses to plain level comparison:
    x <= y iff x == y or x.level < y.level.

    Only the level sizes are stored; relations are computed from levels on
    demand, so construction is cheap even at depths where materializing all
    vertices would not be.  Operations that do materialize vertices grow as
    F(depth + 2).  Instances are immutable and safe to share across threads
    (the per-level vertex cache is filled idempotently).
    """

    __slots__ = ("depth", "level_sizes", "_levels")

    def __init__(self, depth: int) -> None:
        if depth < 1:
            raise ValueError(f"depth must be >= 1, got {depth}")
        self.depth = depth
        self.level_sizes = tuple(fib(s) for s in range(1, depth + 1))
        self._levels: dict[int, tuple[Vertex, ...]] = {}

    def _check_level(self, level: int) -> None:
        if not 1 <= level <= self.depth:
            raise ValueError(f"level must be in 1..{self.depth}, got {level}")

    def check_vertex(self, v: Vertex) -> None:
        """Reject vertices that do not belong to this poset."""
        self._check_level(v.level)
        size = self.level_sizes[v.level - 1]
        if not 0 <= v.index < size:
            raise ValueError(f"vertex {v!r} invalid: level {v.level} has {size} vertices")

    def level_size(self, level: int) -> int:
        """Number of vertices at one level; always fib(level)."""
        self._check_level(level)
        return self.level_sizes[level - 1]

    @property
    def vertex_count(self) -> int:
        return sum(self.level_sizes)

    @property
    def root(self) -> Vertex:
        return Vertex(1, 0)

    def level_vertices(self, level: int) -> tuple[Vertex, ...]:
        """All vertices of one level in ascending index order (cached)."""
        self._check_level(level)
        got = self._levels.get(level)
        if got is None:
            got = tuple(Vertex(level, i) for i in range(self.level_sizes[level - 1]))
            self._levels[level] = got
        return got

    def vertices(self) -> tuple[Vertex, ...]:
        """Canonical ordering: ascending level, then ascending index."""
        return tuple(
            v for s in range(1, self.depth + 1) for v in self.level_vertices(s)
        )

    def leq(self, x: Vertex, y: Vertex) -> bool:
        """Order relation; same-level vertices are incomparable unless equal."""
        self.check_vertex(x)
        self.check_vertex(y)
        return x == y or x.level < y.level

    def is_cover(self, x: Vertex, y: Vertex) -> bool:
        """True iff y covers x, i.e. sits exactly one level higher."""
        self.check_vertex(x)
        self.check_vertex(y)
        return y.level == x.level + 1

    def covers_above(self, x: Vertex) -> tuple[Vertex, ...]:
        """Every vertex covering x: the whole next level (empty at the top)."""
        self.check_vertex(x)
        if x.level == self.depth:
            return ()
        return self.level_vertices(x.level + 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CobwebPoset):
            return NotImplemented
        return self.depth == other.depth

    def __hash__(self) -> int:
        return hash(("CobwebPoset", self.depth))

    def __repr__(self) -> str:
        return f"CobwebPoset(depth={self.depth})"


def build_cobweb(depth: int) -> CobwebPoset:
    """Construct the cobweb poset truncated at `depth` levels (depth >= 1)."""
    return CobwebPoset(depth)
