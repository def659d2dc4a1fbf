"""Maximal-chain counting: closed-form counts and brute-force DFS oracles.

Each closed-form counter has an enumeration twin that walks the poset's
cover relation chain by chain and never consults the formula.  A guard
refuses enumerations whose predicted size exceeds a limit, so sweeps stay
desk-scale by default; the limit can be raised deliberately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal, Sequence

from .fibcalc import fib, fib_factorial, falling_f_factorial, fibonomial
from .poset import CobwebPoset, Vertex, build_cobweb

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "EnumerationGuardError",
    "ChainVerificationError",
    "LayerSpec",
    "VerificationCase",
    "VerificationReport",
    "count_from_root_formula",
    "enumerate_from_root",
    "count_layer_chains_formula",
    "enumerate_layer_chains",
    "iter_chains",
    "obs3_quotient",
    "induced_copy_count",
    "verify_observation",
]

DEFAULT_ENUMERATION_LIMIT = 10**8

# Per-level subset counting switches from explicit enumeration to math.comb
# once a factor would exceed this many subsets.
_ENUMERATE_SUBSETS_MAX = 10**6


class EnumerationGuardError(RuntimeError):
    """Enumeration refused: the predicted chain count exceeds the guard limit."""

    def __init__(self, predicted: int, limit: int) -> None:
        super().__init__(
            f"enumeration would visit {predicted} chains, over the limit of {limit}; "
            "use the closed-form counter or raise the limit explicitly"
        )
        self.predicted = predicted
        self.limit = limit


class ChainVerificationError(RuntimeError):
    """The chain-quotient identity failed; carries every number involved.

    `quotient` is None when the division itself was not exact.
    """

    def __init__(self, k: int, n: int, layer_chains: int, per_copy_chains: int, expected: int) -> None:
        quotient, remainder = divmod(layer_chains, per_copy_chains)
        self.k = k
        self.n = n
        self.layer_chains = layer_chains
        self.per_copy_chains = per_copy_chains
        self.expected = expected
        self.quotient = quotient if remainder == 0 else None
        super().__init__(
            f"quotient identity failed at k={k}, n={n}: layer chains {layer_chains}, "
            f"per-copy chains {per_copy_chains}, quotient "
            f"{quotient if remainder == 0 else f'{layer_chains}/{per_copy_chains} (inexact)'}, "
            f"expected fibonomial {expected}"
        )


@dataclass(frozen=True)
class LayerSpec:
    """A fixed start vertex at level k and a target level n > k."""

    from_vertex: Vertex
    to_level: int

    @property
    def m(self) -> int:
        """Number of levels climbed: n = k + m."""
        return self.to_level - self.from_vertex.level

    def validate(self, P: CobwebPoset) -> None:
        P.check_vertex(self.from_vertex)
        if not self.from_vertex.level < self.to_level <= P.depth:
            raise ValueError(
                f"to_level must be in {self.from_vertex.level + 1}..{P.depth}, got {self.to_level}"
            )


def count_from_root_formula(n: int) -> int:
    """Closed-form count of maximal chains from the root to level n: the n-th F-factorial."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return fib_factorial(n)


def count_layer_chains_formula(k: int, n: int) -> int:
    """Closed-form count of chains from one fixed level-k vertex up to level n.

    Equals the falling F-factorial with n - k descending factors.
    """
    if k < 1 or n <= k:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    return falling_f_factorial(n, n - k)


def _guard(predicted: int, limit: int) -> None:
    if predicted > limit:
        raise EnumerationGuardError(predicted, limit)


def _dfs_count(P: CobwebPoset, start: Vertex, stop_level: int) -> int:
    # Exhaustive walk along cover edges, counting one leaf per chain.  No
    # closed form anywhere in here: this is the independent oracle.  Counting
    # mode allocates nothing per chain.
    if start.level == stop_level:
        return 1
    count = 0
    stack = [iter(P.covers_above(start))]
    while stack:
        v = next(stack[-1], None)
        if v is None:
            stack.pop()
        elif v.level == stop_level:
            count += 1
        else:
            stack.append(iter(P.covers_above(v)))
    return count


def enumerate_from_root(P: CobwebPoset, n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Count maximal chains from the root to any vertex of level n by DFS.

    Refuses (EnumerationGuardError) when the predicted count exceeds `limit`.
    """
    if not 1 <= n <= P.depth:
        raise ValueError(f"n must be in 1..{P.depth}, got {n}")
    _guard(count_from_root_formula(n), limit)
    return _dfs_count(P, P.root, n)


def enumerate_layer_chains(P: CobwebPoset, spec: LayerSpec, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Count chains from spec.from_vertex up to spec.to_level by DFS.

    The count is the same for every start vertex of the same level; sweeps
    assert that start-invariance explicitly.
    """
    spec.validate(P)
    _guard(count_layer_chains_formula(spec.from_vertex.level, spec.to_level), limit)
    return _dfs_count(P, spec.from_vertex, spec.to_level)


def iter_chains(P: CobwebPoset, start: Vertex, stop_level: int) -> Iterator[tuple[Vertex, ...]]:
    """Stream every maximal chain from `start` up to `stop_level`, in DFS order.

    Chains are yielded as vertex tuples, one vertex per level, next vertex
    chosen by ascending index.  Lazy: intended for export and debugging; use
    the counters when only the number of chains matters.
    """
    P.check_vertex(start)
    if not start.level <= stop_level <= P.depth:
        raise ValueError(f"stop_level must be in {start.level}..{P.depth}, got {stop_level}")

    path: list[Vertex] = []

    def walk(v: Vertex) -> Iterator[tuple[Vertex, ...]]:
        path.append(v)
        if v.level == stop_level:
            yield tuple(path)
        else:
            for w in P.covers_above(v):
                yield from walk(w)
        path.pop()

    yield from walk(start)


Obs3Mode = Literal["formula", "enumerate"]


def obs3_quotient(k: int, n: int, mode: Obs3Mode = "formula", limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Layer-chain count divided by the per-copy chain count; equals the Fibonomial.

    Counts the chains from one fixed level-k vertex up to level n (closed
    form or DFS oracle, per `mode`), divides by the (n-k)-level F-factorial
    (the number of maximal chains each rooted copy carries on its own), and
    checks the quotient against fibonomial(n, k).  Raises
    ChainVerificationError, carrying all the numbers, when the division is
    not exact or the quotient disagrees.
    """
    if k < 1 or n <= k:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if mode == "formula":
        layer = count_layer_chains_formula(k, n)
    elif mode == "enumerate":
        P = build_cobweb(n)
        layer = enumerate_layer_chains(P, LayerSpec(Vertex(k, 0), n), limit)
    else:
        raise ValueError(f"mode must be 'formula' or 'enumerate', got {mode!r}")
    per_copy = fib_factorial(n - k)
    expected = fibonomial(n, k)
    quotient, remainder = divmod(layer, per_copy)
    if remainder or quotient != expected:
        raise ChainVerificationError(k, n, layer, per_copy, expected)
    return quotient


def induced_copy_count(k: int, n: int, profile: Sequence[int]) -> int:
    """Ways to choose one subset per level k+1..n with sizes given by `profile`.

    Diagnostic counter for the literal subposet-copy reading: the product of
    ordinary binomials C(level size, profile entry).  Each factor is counted
    by explicit subset enumeration when small enough, by math.comb otherwise;
    the routes agree and tests cross-check them.  Probing different profiles
    shows which copy shapes do or do not reproduce the Fibonomial.
    """
    if k < 1 or n <= k:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    m = n - k
    if len(profile) != m:
        raise ValueError(f"profile must have {m} entries for levels {k + 1}..{n}, got {len(profile)}")
    total = 1
    for j, want in enumerate(profile):
        ambient = fib(k + 1 + j)
        if not 0 <= want <= ambient:
            raise ValueError(
                f"profile[{j}] = {want} out of range: level {k + 1 + j} has {ambient} vertices"
            )
        if math.comb(ambient, want) <= _ENUMERATE_SUBSETS_MAX:
            total *= sum(1 for _ in combinations(range(ambient), want))
        else:
            total *= math.comb(ambient, want)
    return total


@dataclass(frozen=True)
class VerificationCase:
    """One formula-vs-oracle comparison; `start` is set when a start vertex was fixed."""

    k: int
    n: int
    formula: int
    oracle: int
    passed: bool
    start: Vertex | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one observation sweep; failures are data, never exceptions."""

    observation: int
    max_n: int
    cases: tuple[VerificationCase, ...]

    @property
    def counterexamples(self) -> tuple[VerificationCase, ...]:
        return tuple(c for c in self.cases if not c.passed)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_text(self) -> str:
        """Line-oriented schema: observation= k= n= formula= oracle= status=."""
        lines = []
        for c in self.cases:
            status = "pass" if c.passed else "fail"
            lines.append(
                f"observation={self.observation} k={c.k} n={c.n} "
                f"formula={c.formula} oracle={c.oracle} status={status}"
            )
        return "".join(line + "\n" for line in lines)


def _compare_case(k: int, n: int, formula: int, oracle: int, start: Vertex | None = None) -> VerificationCase:
    return VerificationCase(k=k, n=n, formula=formula, oracle=oracle, passed=formula == oracle, start=start)


def _obs3_case(k: int, n: int, mode: Obs3Mode, limit: int) -> VerificationCase:
    expected = fibonomial(n, k)
    try:
        quotient = obs3_quotient(k, n, mode, limit)
    except ChainVerificationError as exc:
        # Inexact division reports the raw layer count so the line cannot
        # masquerade as a pass.
        oracle = exc.quotient if exc.quotient is not None else exc.layer_chains
        return VerificationCase(k=k, n=n, formula=expected, oracle=oracle, passed=False)
    return _compare_case(k, n, expected, quotient)


def verify_observation(observation: int, max_n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> VerificationReport:
    """Sweep one observation, comparing closed forms against enumeration oracles.

    Observation 1: chains from the root to level n, for n = 1..max_n.
    Observation 2: chains from every fixed start vertex at level k to level n,
    for all 1 <= k < n <= max_n (one case per start vertex, so start-invariance
    is visible in the report).
    Observation 3: the chain-quotient identity, oracle-backed for n <= max_n
    and closed-form for n <= 3 * max_n.

    Mismatches become counterexample cases in the report; only guard refusals
    and invalid arguments raise.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    cases: list[VerificationCase] = []
    if observation == 1:
        P = build_cobweb(max_n)
        for n in range(1, max_n + 1):
            formula = count_from_root_formula(n)
            oracle = enumerate_from_root(P, n, limit)
            cases.append(_compare_case(1, n, formula, oracle))
    elif observation == 2:
        P = build_cobweb(max_n)
        for k in range(1, max_n):
            for n in range(k + 1, max_n + 1):
                formula = count_layer_chains_formula(k, n)
                for start in P.level_vertices(k):
                    oracle = enumerate_layer_chains(P, LayerSpec(start, n), limit)
                    cases.append(_compare_case(k, n, formula, oracle, start=start))
    elif observation == 3:
        for n in range(2, max_n + 1):
            for k in range(1, n):
                cases.append(_obs3_case(k, n, "enumerate", limit))
        for n in range(2, 3 * max_n + 1):
            for k in range(1, n):
                cases.append(_obs3_case(k, n, "formula", limit))
    else:
        raise ValueError(f"observation must be 1, 2 or 3, got {observation}")
    return VerificationReport(observation=observation, max_n=max_n, cases=tuple(cases))
