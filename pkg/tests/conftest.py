"""Shared hypothesis strategies and brute-force oracles."""

from __future__ import annotations

from hypothesis import settings, strategies as st

from schubfock.permcore import Permutation, product_word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

letters = st.integers(min_value=-3, max_value=4)
words = st.lists(letters, max_size=6)
perms = words.map(product_word)
small_perms = st.lists(letters, max_size=4).map(product_word)


@st.composite
def partitions_st(draw, max_size: int = 6):
    parts = draw(st.lists(st.integers(min_value=1, max_value=4), max_size=4))
    lam = tuple(sorted(parts, reverse=True))
    while sum(lam) > max_size:
        lam = lam[:-1]
    return lam


def as_dict(p: Permutation, lo: int = -8, hi: int = 12) -> dict[int, int]:
    """Permutation as an explicit finite map on a generous window."""
    return {i: p(i) for i in range(lo, hi)}


def inversions(p: Permutation, lo: int = -8, hi: int = 12) -> int:
    return sum(1 for i in range(lo, hi) for j in range(i + 1, hi) if p(i) > p(j))
