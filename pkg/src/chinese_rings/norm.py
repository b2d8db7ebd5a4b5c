"""The conjugate-counting norm and metric on a free group.

``relator_norm(w, d)`` is the least number of conjugates of g_d^{+-1} whose
product is ``w`` (infinite when ``w`` does not die after erasing g_d).
``metric(x, y, d)`` is the least number of elementary operations, insertions
or deletions of one such conjugate, turning ``x`` into ``y``; it equals the
norm of ``x y^-1``.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Literal

from .connection import INFINITY, Connection, min_norm
from .words import (
    EMPTY,
    Word,
    _reduce_codes,
    concat,
    erase_generator,
    free_reduce,
    generator_power,
    invert,
    is_reduced,
    parse,
    format_word,
)

log = logging.getLogger(__name__)


class InfiniteNorm(ValueError):
    """The word is not a product of conjugates of the distinguished generator."""


class VerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class ElementaryOp:
    """Insert or delete one conjugate ``conjugator * g_d^sign * conjugator^-1``.

    ``position`` is a cut index 0..len(w) for inserts and a 1-based letter
    position for deletes.  A delete removes a single g_d letter; its
    conjugator is the prefix before that letter and is bookkeeping only.
    """

    kind: Literal["insert", "delete"]
    position: int
    sign: int
    conjugator: Word = EMPTY

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "position": self.position,
            "sign": self.sign,
            "conjugator": format_word(self.conjugator),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ElementaryOp":
        if data["kind"] not in ("insert", "delete") or data["sign"] not in (1, -1):
            raise ValueError(f"bad elementary op {data!r}")
        return cls(data["kind"], int(data["position"]), int(data["sign"]), parse(data["conjugator"]))


@dataclass(frozen=True)
class MetricResult:
    value: int | float
    witness_ops: list[ElementaryOp] | None = None
    connection: Connection | None = None
    word: Word | None = None  # the word the witness refers to

    @property
    def finite(self) -> bool:
        return self.value != INFINITY


def apply_op(w: Word, op: ElementaryOp, d: int) -> Word:
    """Apply one elementary operation; the result is not reduced."""
    codes = w.codes
    if op.kind == "insert":
        if not 0 <= op.position <= len(codes):
            raise IndexError(f"cut {op.position} outside 0..{len(codes)}")
        block = op.conjugator.codes + (op.sign * d,) + invert(op.conjugator).codes
        return Word(codes[: op.position] + block + codes[op.position:])
    if op.kind == "delete":
        if not 1 <= op.position <= len(codes):
            raise IndexError(f"position {op.position} outside 1..{len(codes)}")
        if abs(codes[op.position - 1]) != d:
            raise ValueError(f"letter at {op.position} is not g{d}^+-1")
        return Word._trusted(codes[: op.position - 1] + codes[op.position:])
    raise ValueError(f"unknown op kind {op.kind!r}")


def _deletions(w: Word, positions: list[int]) -> list[ElementaryOp]:
    codes = w.codes
    return [
        ElementaryOp("delete", p, 1 if codes[p - 1] > 0 else -1, Word._trusted(codes[: p - 1]))
        for p in sorted(positions, reverse=True)
    ]


def witness_ops(w: Word, d: int) -> list[ElementaryOp]:
    """Single-letter deletions, right to left, that kill ``w``.

    The deleted letters are the unconnected ones of a minimal connection, so
    the list is as long as the norm.
    """
    res = min_norm(w, d)
    if res.witness is None:
        raise InfiniteNorm(f"{format_word(w)} has no connection for g{d}")
    return _deletions(w, res.witness.unconnected())


def relator_norm(w: Word, d: int) -> MetricResult:
    value = min_norm(free_reduce(w), d).value
    if value == INFINITY:
        return MetricResult(INFINITY)
    res = min_norm(w, d)
    assert res.value == value and res.witness is not None
    return MetricResult(value, _deletions(w, res.witness.unconnected()), res.witness, w)


def metric(x: Word, y: Word, d: int) -> MetricResult:
    """Distance ``(x, y)``; the witness acts on the reduced word ``x y^-1``."""
    return relator_norm(concat(x, invert(y), reduce=True), d)


def verify_witness(w: Word, ops: list[ElementaryOp], target: Word, d: int) -> bool:
    cur = w
    for n, op in enumerate(ops):
        try:
            cur = apply_op(cur, op, d)
        except (IndexError, ValueError) as exc:
            log.warning("op %d (%s) failed: %s", n, op, exc)
            return False
    return free_reduce(cur) == free_reduce(target)


def block_exponent_distance(alphas: list[int], b: Word, d: int) -> int:
    """Distance between g_d^{a_0} b_1 g_d^{a_1} ... b_k g_d^{a_k} and b.

    Raises unless the computed distance equals ``sum(|a_i|)``.
    """
    if len(alphas) != len(b) + 1:
        raise ValueError(f"need {len(b) + 1} exponents, got {len(alphas)}")
    if not is_reduced(b):
        raise ValueError("b must be reduced")
    if any(abs(c) == d for c in b.codes):
        raise ValueError(f"b must not contain g{d}")
    codes: list[int] = list(generator_power(d, alphas[0]).codes)
    for c, a in zip(b.codes, alphas[1:]):
        codes.append(c)
        codes.extend(generator_power(d, a).codes)
    w = Word(tuple(codes))
    expected = sum(abs(a) for a in alphas)
    got = metric(w, b, d).value
    if got != expected:
        raise VerificationError(f"metric({format_word(w)}, {format_word(b)}) = {got}, expected {expected}")
    return expected


def random_word(rng: random.Random, length: int, generators: int) -> Word:
    return Word._trusted(tuple(rng.choice((1, -1)) * rng.randint(1, generators) for _ in range(length)))


def random_kernel_word(rng: random.Random, max_len: int, generators: int, d: int) -> Word:
    """A reduced word that erasing g_d sends to the identity: r * erase(r)^-1."""
    r = random_word(rng, rng.randint(0, max_len), generators)
    return concat(r, invert(erase_generator(r, d)), reduce=True)


def oracle_sample_word(rng: random.Random, max_len: int, generators: int = 3) -> Word:
    """Half uniform words, half (often unreduced) words with finite norm."""
    if rng.random() < 0.5:
        return random_word(rng, rng.randint(0, max_len), generators)
    r = random_word(rng, rng.randint(0, max_len // 2), generators)
    w = concat(r, invert(erase_generator(r, generators)), reduce=rng.random() < 0.5)
    return w


@dataclass
class AxiomReport:
    seed: int
    samples: int
    checks: dict[str, int] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def _tick(self, name: str, holds: bool, detail: str) -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if not holds:
            self.counterexamples.append(f"{name}: {detail}")


def check_norm_axioms(sample_count: int, max_len: int, seed: int, generators: int = 3) -> AxiomReport:
    """Seeded random check of the norm and metric axioms.

    Per sample: norm zero iff trivial, invariance under inversion,
    finiteness iff the erased word is trivial, subadditivity on kernel pairs,
    and symmetry plus the triangle inequality on a same-fiber triple.
    """
    rng = random.Random(seed)
    d = generators
    rep = AxiomReport(seed=seed, samples=sample_count)
    norm = lambda w: relator_norm(w, d).value  # noqa: E731
    for _ in range(sample_count):
        w = random_word(rng, rng.randint(0, max_len), generators)
        nw = norm(w)
        s = format_word(w)
        rep._tick("zero_iff_trivial", (nw == 0) == (not free_reduce(w)), s)
        rep._tick("inverse", norm(invert(w)) == nw, s)
        rep._tick("finite_iff_kernel", (nw != INFINITY) == (not erase_generator(w, d)), s)

        u = random_kernel_word(rng, max_len, generators, d)
        v = random_kernel_word(rng, max_len, generators, d)
        nu, nv = norm(u), norm(v)
        rep._tick("kernel_finite", nu != INFINITY and nv != INFINITY, f"{u} / {v}")
        rep._tick("subadditive", norm(concat(u, v)) <= nu + nv, f"u={u} v={v}")
        rep._tick("zero_iff_trivial", (nu == 0) == (not u), str(u))

        x = random_word(rng, rng.randint(0, max_len), generators)
        y = concat(x, random_kernel_word(rng, max_len, generators, d))
        z = concat(x, random_kernel_word(rng, max_len, generators, d))
        dxy, dyx = metric(x, y, d).value, metric(y, x, d).value
        dxz, dyz = metric(x, z, d).value, metric(y, z, d).value
        rep._tick("symmetry", dxy == dyx, f"x={x} y={y}")
        rep._tick("triangle", dxz <= dxy + dyz, f"x={x} y={y} z={z}")
        rep._tick("same_fiber_finite", dxy != INFINITY and dxz != INFINITY, f"x={x}")
        other = random_word(rng, rng.randint(0, max_len), generators)
        same_fiber = erase_generator(other, d) == erase_generator(x, d)
        rep._tick("finite_iff_same_fiber", (metric(x, other, d).value != INFINITY) == same_fiber, f"x={x} y={other}")
    return rep


@dataclass(frozen=True)
class ProbeResult:
    distance: int | None  # None: not found within the caps
    status: Literal["found", "not_found", "budget_exceeded"]
    states: int


def _conjugators(generators: int, max_len: int) -> list[tuple[int, ...]]:
    letters = [s * g for g in range(1, generators + 1) for s in (1, -1)]
    out: list[tuple[int, ...]] = [()]
    for n in range(1, max_len + 1):
        out.extend(c for c in product(letters, repeat=n) if _reduce_codes(c) == list(c))
    return out


def bounded_insert_probe(
    w: Word,
    d: int,
    max_word_len: int,
    max_conj_len: int,
    max_depth: int | None = None,
    budget: int = 200_000,
) -> ProbeResult:
    """Breadth-first search over elementary operations, inserts included.

    States are reduced words of length at most ``max_word_len``.  Moves are
    single-letter deletions of g_d and insertions of ``c g_d^{+-1} c^-1`` at
    any cut with ``|c| <= max_conj_len``.  Returns the depth at which the
    empty word is first reached.  The caps make this an upper bound on the
    true norm, never a proof of a lower one.
    """
    start = tuple(_reduce_codes(w.codes))
    gens = max(d, w.max_generator)
    blocks = []
    for c in _conjugators(gens, max_conj_len):
        inv = tuple(-x for x in reversed(c))
        blocks.append(c + (d,) + inv)
        blocks.append(c + (-d,) + inv)
    if len(start) > max_word_len:
        return ProbeResult(None, "not_found", 0)
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        state, depth = frontier.popleft()
        if not state:
            return ProbeResult(depth, "found", len(seen))
        if max_depth is not None and depth >= max_depth:
            continue
        nxt: list[tuple[int, ...]] = []
        for p, c in enumerate(state):
            if c == d or c == -d:
                nxt.append(state[:p] + state[p + 1:])
        for cut in range(len(state) + 1):
            head, tail = state[:cut], state[cut:]
            for blk in blocks:
                nxt.append(head + blk + tail)
        for cand in nxt:
            red = tuple(_reduce_codes(cand))
            if len(red) > max_word_len or red in seen:
                continue
            if not red:
                return ProbeResult(depth + 1, "found", len(seen) + 1)
            seen.add(red)
            if len(seen) > budget:
                log.warning("probe budget of %d states exhausted at depth %d", budget, depth)
                return ProbeResult(None, "budget_exceeded", len(seen))
            frontier.append((red, depth + 1))
    return ProbeResult(None, "not_found", len(seen))
