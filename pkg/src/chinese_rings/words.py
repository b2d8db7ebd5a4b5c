"""Words in a free group on generators g1, g2, ...

A letter is stored internally as a nonzero signed integer: ``k`` for g_k and
``-k`` for g_k^-1.  :class:`Word` wraps an immutable tuple of such codes, so
long words (a_22 has about four million letters) stay cheap.  Python
indexing on a word is 0-based; every *position* exposed by the public API
(arcs, witnesses, elementary operations) is 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_GENERATOR = 65535
MAX_LENGTH = 1 << 22


class WordSyntaxError(ValueError):
    pass


class Letter(NamedTuple):
    generator: int
    sign: int = 1

    @property
    def code(self) -> int:
        return self.sign * self.generator

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(abs(code), 1 if code > 0 else -1)

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        return f"g{self.generator}" if self.sign > 0 else f"g{self.generator}^-1"


def _check_codes(codes: tuple[int, ...]) -> None:
    if len(codes) > MAX_LENGTH:
        raise ValueError(f"word length {len(codes)} exceeds {MAX_LENGTH}")
    if not codes:
        return
    if 0 in codes:
        raise ValueError("letter code 0 is not a generator")
    if max(codes) > MAX_GENERATOR or min(codes) < -MAX_GENERATOR:
        raise ValueError(f"generator index exceeds {MAX_GENERATOR}")


@dataclass(frozen=True)
class Word:
    """An immutable, possibly unreduced, sequence of letters."""

    codes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.codes, tuple):
            object.__setattr__(self, "codes", tuple(self.codes))
        _check_codes(self.codes)

    @classmethod
    def _trusted(cls, codes: tuple[int, ...]) -> "Word":
        # skips validation; only for codes derived from already valid words
        w = object.__new__(cls)
        object.__setattr__(w, "codes", codes)
        return w

    @classmethod
    def from_letters(cls, letters: Iterable[Letter | tuple[int, int]]) -> "Word":
        codes = []
        for gen, sign in letters:
            if gen < 1 or sign not in (1, -1):
                raise ValueError(f"bad letter ({gen}, {sign})")
            codes.append(sign * gen)
        return cls(tuple(codes))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter.from_code(c) for c in self.codes)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word._trusted(self.codes[index])
        return Letter.from_code(self.codes[index])

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other, reduce=True)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    @property
    def max_generator(self) -> int:
        return max(map(abs, self.codes), default=0)


EMPTY = Word()

_TOKEN = re.compile(r"g(\d+)(?:\^([+-]?\d+))?")
_SEP = re.compile(r"(?:\s*\*\s*|\s+)")


def parse(text: str) -> Word:
    """Parse ``"g2 g1 g2^-1"``-style text into a word, without reducing it.

    Tokens are separated by whitespace or ``*``; ``g2^-3`` expands to three
    copies of g2^-1 and ``e`` is the empty word.
    """
    s = text.strip()
    if s == "e":
        return EMPTY
    if not s:
        raise WordSyntaxError("empty input (use 'e' for the identity)")
    codes: list[int] = []
    pos = 0
    while True:
        m = _TOKEN.match(s, pos)
        if m is None:
            raise WordSyntaxError(f"bad token at offset {pos}: {s[pos:pos + 12]!r}")
        gen = int(m.group(1))
        if not 1 <= gen <= MAX_GENERATOR:
            raise WordSyntaxError(f"generator index {gen} out of range 1..{MAX_GENERATOR}")
        exp = 1 if m.group(2) is None else int(m.group(2))
        if exp == 0:
            raise WordSyntaxError(f"zero exponent in {m.group(0)!r}")
        if len(codes) + abs(exp) > MAX_LENGTH:
            raise WordSyntaxError(f"word longer than {MAX_LENGTH} letters")
        codes.extend([gen if exp > 0 else -gen] * abs(exp))
        pos = m.end()
        if pos == len(s):
            break
        sep = _SEP.match(s, pos)
        if sep is None or sep.end() == pos:
            raise WordSyntaxError(f"expected separator at offset {pos}: {s[pos:pos + 12]!r}")
        pos = sep.end()
        if pos == len(s):
            raise WordSyntaxError("trailing separator")
    return Word._trusted(tuple(codes))


def format_word(w: Word) -> str:
    if not w.codes:
        return "e"
    return " ".join(f"g{c}" if c > 0 else f"g{-c}^-1" for c in w.codes)


def _reduce_codes(codes: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return stack


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs with one left-to-right stack pass."""
    return Word._trusted(tuple(_reduce_codes(w.codes)))


def is_reduced(w: Word) -> bool:
    c = w.codes
    return all(c[i] != -c[i + 1] for i in range(len(c) - 1))


def invert(w: Word) -> Word:
    return Word._trusted(tuple(-c for c in reversed(w.codes)))


def concat(u: Word, v: Word, reduce: bool = True) -> Word:
    w = Word(u.codes + v.codes) if len(u) + len(v) > MAX_LENGTH else Word._trusted(u.codes + v.codes)
    return free_reduce(w) if reduce else w


def erase_generator(w: Word, d: int) -> Word:
    """The projection that sends g_d to the identity, as a reduced word."""
    if d < 1:
        raise ValueError("generator index must be >= 1")
    return Word._trusted(tuple(_reduce_codes(c for c in w.codes if c != d and c != -d)))


def count_letters(w: Word, d: int) -> int:
    return w.codes.count(d) + w.codes.count(-d)


def exponent_sum(w: Word, d: int) -> int:
    return w.codes.count(d) - w.codes.count(-d)


def generator_power(d: int, exponent: int) -> Word:
    return Word._trusted((d if exponent > 0 else -d,) * abs(exponent))
