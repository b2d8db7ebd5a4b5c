import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from chinese_rings.words import Word, concat, erase_generator, invert

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

FIG10 = "g1 g2 g1^-1 g2 g1 g2^-1 g1^-1"


def words(max_len=12, generators=3, min_len=0):
    letter = st.integers(1, generators).flatmap(lambda g: st.sampled_from((g, -g)))
    return st.lists(letter, min_size=min_len, max_size=max_len).map(lambda c: Word(tuple(c)))


def kernel_words(max_len=12, generators=3):
    """Words (unreduced allowed) that die when g_d, d = generators, is erased."""

    def build(args):
        r, reduce = args
        return concat(r, invert(erase_generator(r, generators)), reduce=reduce)

    return st.tuples(words(max_len // 2, generators), st.booleans()).map(build)


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}: {detail}")
