"""The arc word a_n of the n-column Chinese Rings and its basic statistics."""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    EMPTY,
    Word,
    count_letters,
    erase_generator,
    is_reduced,
)

MAX_ARC_N = 22
MAX_CHECK_N = 16
MAX_COMPLEXITY_N = 62


def _check_range(n: int, lo: int, hi: int, what: str) -> None:
    if not isinstance(n, int) or not lo <= n <= hi:
        raise ValueError(f"{what}: n must be in {lo}..{hi}, got {n!r}")


def substitute_conjugate(w: Word, k: int) -> Word:
    """Replace every g_k^{+-1} by the block g_{k+1} g_k^{+-1} g_{k+1}^-1."""
    up = k + 1
    out: list[int] = []
    append, extend = out.append, out.extend
    for c in w.codes:
        if c == k or c == -k:
            extend((up, c, -up))
        else:
            append(c)
    return Word(tuple(out)) if up > 65535 else Word._trusted(tuple(out))


def arc_word(n: int) -> Word:
    """a_1 = g1, a_{n+1} = a_n with g_n conjugated by g_{n+1}.

    The leading letter is g_n (anticlockwise orientation), so
    ``arc_word(3)`` is ``g3 g2 g3^-1 g1 g3 g2^-1 g3^-1``.
    """
    _check_range(n, 1, MAX_ARC_N, "arc_word")
    w = Word._trusted((1,))
    for k in range(1, n):
        w = substitute_conjugate(w, k)
    return w


def complexity(n: int) -> int:
    """Minimal number of passes of the loose ring through the arc: 2^(n-1)."""
    _check_range(n, 1, MAX_COMPLEXITY_N, "complexity")
    return 1 << (n - 1)


@dataclass(frozen=True)
class RingsReport:
    n: int
    arc_length: int
    g_n_count: int
    reduced: bool
    projection_matches_previous: bool

    @property
    def ok(self) -> bool:
        return (
            self.reduced
            and self.projection_matches_previous
            and self.g_n_count == 1 << (self.n - 1)
            and self.arc_length == (1 << self.n) - 1
        )


def _delete_generator(w: Word, d: int) -> Word:
    # letter-for-letter deletion, deliberately without free reduction
    return Word._trusted(tuple(c for c in w.codes if c != d and c != -d))


def check_arc_word(n: int) -> RingsReport:
    """Recompute a_n and a_{n-1} and measure the reducedness/count claims.

    For n = 1 the previous word is taken to be the empty word, so erasing g1
    from a_1 = g1 matches it.
    """
    _check_range(n, 1, MAX_CHECK_N, "check_arc_word")
    a = arc_word(n)
    prev = arc_word(n - 1) if n > 1 else EMPTY
    deleted = _delete_generator(a, n)
    matches = deleted == prev and erase_generator(a, n) == prev
    return RingsReport(
        n=n,
        arc_length=len(a),
        g_n_count=count_letters(a, n),
        reduced=is_reduced(a),
        projection_matches_previous=matches,
    )


def untangle_witness(n: int) -> list[int]:
    """1-based positions of the g_n letters in a_n.

    Deleting exactly these letters turns a_n into a_{n-1}; there are 2^(n-1)
    of them, one per pass of the ring through a strand of the arc.
    """
    _check_range(n, 2, MAX_CHECK_N, "untangle_witness")
    a = arc_word(n)
    return [i for i, c in enumerate(a.codes, start=1) if c == n or c == -n]


def g_n_exponents(n: int) -> list[int]:
    """Exponents alpha_0..alpha_k with a_n = g_n^{alpha_0} b_1 ... b_k g_n^{alpha_k}.

    Here b_1 ... b_k = a_{n-1}, which is what the metric identity check needs.
    """
    _check_range(n, 2, MAX_CHECK_N, "g_n_exponents")
    alphas = [0]
    for c in arc_word(n).codes:
        if c == n:
            alphas[-1] += 1
        elif c == -n:
            alphas[-1] -= 1
        else:
            alphas.append(0)
    return alphas
