"""Connections on a word and the minimum-norm solver.

A connection pairs positions of a word by non-crossing arcs, each arc
joining a letter to its exact inverse; letters of the distinguished
generator ``d`` may stay unconnected.  Its norm is the number of
unconnected letters.  The minimum over all connections equals the number
of conjugates of g_d^{+-1} needed to write the word.

Three independent routes compute that minimum:

* :func:`min_norm`: interval DP, O(L^3), with a witness connection;
* :func:`enumerate_connections`: explicit backtracking over all connections;
* :func:`subset_oracle`: delete subsets of g_d letters, free-reduce, test
  for the empty word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

from .words import Word, _reduce_codes

INFINITY = math.inf

# saturating int32 cells; anything >= _INF means "no connection"
_INF = np.int32(1 << 30)

MAX_SUBSET_LETTERS = 22


class ConnectionCapExceeded(RuntimeError):
    """More connections exist than the caller's cap allows."""


class OracleTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Connection:
    word_length: int
    distinguished: int
    arcs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(sorted((int(i), int(j)) for i, j in self.arcs)))

    @property
    def norm(self) -> int:
        return connection_norm(self)

    def unconnected(self) -> list[int]:
        covered = {p for arc in self.arcs for p in arc}
        return [p for p in range(1, self.word_length + 1) if p not in covered]

    def to_dict(self) -> dict:
        return {
            "word_length": self.word_length,
            "distinguished": self.distinguished,
            "arcs": [list(a) for a in self.arcs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Connection":
        return cls(
            word_length=int(data["word_length"]),
            distinguished=int(data["distinguished"]),
            arcs=tuple(tuple(a) for a in data["arcs"]),
        )


@dataclass(frozen=True)
class NormResult:
    value: int | float
    witness: Connection | None = None

    @property
    def finite(self) -> bool:
        return self.value != INFINITY


def connection_norm(c: Connection) -> int:
    return c.word_length - 2 * len(c.arcs)


def validate_connection(w: Word, c: Connection) -> list[str]:
    """Return the list of violations; an empty list means the connection is valid."""
    if c.word_length != len(w):
        raise ValueError(f"connection is for length {c.word_length}, word has {len(w)}")
    codes = w.codes
    d = c.distinguished
    problems: list[str] = []
    seen: dict[int, tuple[int, int]] = {}
    for arc in c.arcs:
        i, j = arc
        if not (1 <= i < j <= len(w)):
            problems.append(f"arc {arc}: endpoints out of order or out of range")
            continue
        for p in arc:
            if p in seen:
                problems.append(f"arc {arc}: position {p} already used by arc {seen[p]}")
            else:
                seen[p] = arc
        if codes[i - 1] != -codes[j - 1]:
            problems.append(f"arc {arc}: letters at {i} and {j} are not inverse")
    good = [a for a in c.arcs if 1 <= a[0] < a[1] <= len(w)]
    for x in range(len(good)):
        i, j = good[x]
        for k, l in good[x + 1:]:
            if i < k < j < l or k < i < l < j:
                problems.append(f"arcs {(i, j)} and {(k, l)} cross")
    for p in range(1, len(w) + 1):
        if p not in seen and abs(codes[p - 1]) != d:
            problems.append(f"position {p}: unconnected letter is not g{d}^+-1")
    return problems


def _norm_table(codes: tuple[int, ...], d: int) -> np.ndarray:
    # table[i, j] = minimal norm of the half-open slice codes[i:j], 0-based
    n = len(codes)
    table = np.full((n + 1, n + 1), _INF, dtype=np.int32)
    table[n, n] = 0
    for i in range(n - 1, -1, -1):
        row = table[i]
        below = table[i + 1]
        row[i] = 0
        c = codes[i]
        if c == d or c == -d:
            row[i + 1:] = np.minimum(below[i + 1:] + 1, _INF)
        for k in range(i + 1, n):
            if codes[k] != -c:
                continue
            inner = below[k]
            if inner >= _INF:
                continue
            cand = np.minimum(table[k + 1, k + 1:] + inner, _INF)
            np.minimum(row[k + 1:], cand, out=row[k + 1:])
    return table


def _trace(codes: tuple[int, ...], d: int, table: np.ndarray) -> list[tuple[int, int]]:
    arcs: list[tuple[int, int]] = []
    todo = [(0, len(codes))]
    while todo:
        i, j = todo.pop()
        if i >= j:
            continue
        target = table[i, j]
        c = codes[i]
        # tie-break: leave letter i unconnected first, then the smallest partner
        if (c == d or c == -d) and table[i + 1, j] + 1 == target:
            todo.append((i + 1, j))
            continue
        for k in range(i + 1, j):
            if codes[k] == -c and int(table[i + 1, k]) + int(table[k + 1, j]) == target:
                arcs.append((i + 1, k + 1))
                todo.append((k + 1, j))
                todo.append((i + 1, k))
                break
        else:  # pragma: no cover - table and trace disagree
            raise AssertionError(f"no argmin for cell ({i}, {j})")
    return arcs


def min_norm(w: Word, d: int) -> NormResult:
    """Minimum connection norm of ``w`` with distinguished generator ``d``."""
    if d < 1:
        raise ValueError("distinguished generator must be >= 1")
    codes = w.codes
    if not codes:
        return NormResult(0, Connection(0, d, ()))
    table = _norm_table(codes, d)
    best = int(table[0, len(codes)])
    if best >= _INF:
        return NormResult(INFINITY, None)
    arcs = _trace(codes, d, table)
    return NormResult(best, Connection(len(codes), d, tuple(arcs)))


def _connections(codes, d, i, j) -> Iterator[list[tuple[int, int]]]:
    if i >= j:
        yield []
        return
    c = codes[i]
    if c == d or c == -d:
        yield from _connections(codes, d, i + 1, j)
    for k in range(i + 1, j):
        if codes[k] != -c:
            continue
        for inner in _connections(codes, d, i + 1, k):
            for outer in _connections(codes, d, k + 1, j):
                yield [(i + 1, k + 1), *inner, *outer]


def enumerate_connections(w: Word, d: int, cap: int = 100_000) -> Iterator[Connection]:
    """Yield every valid connection on ``w`` exactly once.

    Order is depth first: the leftmost open letter is left unconnected before
    it is matched, and nearer partners come first.  If more than ``cap``
    connections exist, :class:`ConnectionCapExceeded` is raised after the
    first ``cap`` have been yielded.
    """
    n = len(w)
    for count, arcs in enumerate(_connections(w.codes, d, 0, n)):
        if count >= cap:
            raise ConnectionCapExceeded(f"more than {cap} connections on a word of length {n}")
        yield Connection(n, d, tuple(arcs))


def brute_force_norm(w: Word, d: int, cap: int = 1_000_000) -> int | float:
    return min((connection_norm(c) for c in enumerate_connections(w, d, cap)), default=INFINITY)


def subset_oracle(w: Word, d: int) -> int | float:
    """Fewest g_d letters whose deletion leaves a freely trivial word.

    Exhaustive search in increasing subset size; shares nothing with the
    connection machinery.
    """
    codes = w.codes
    spots = [p for p, c in enumerate(codes) if c == d or c == -d]
    if len(spots) > MAX_SUBSET_LETTERS:
        raise OracleTooLarge(f"{len(spots)} letters of g{d}; limit is {MAX_SUBSET_LETTERS}")
    for size in range(len(spots) + 1):
        for subset in combinations(spots, size):
            gone = set(subset)
            if not _reduce_codes(c for p, c in enumerate(codes) if p not in gone):
                return size
    return INFINITY
