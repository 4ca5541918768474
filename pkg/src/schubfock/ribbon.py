"""Weak ribbons, k-strong ribbons and their spins.

These are the combinatorial kernels behind the bosonic operators in
:mod:`schubfock.fock`: ``alpha_n`` strips a weak ribbon of size ``n`` off the
left of a permutation, ``alpha_{-n,k}`` grows a ``k``-strong ribbon of size
``n`` on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import NotReduced, NotStrongRibbon
from .permcore import Permutation, a_reduced_word, is_reduced, kbruhat_cocovers, kbruhat_covers


@dataclass(frozen=True)
class SignedNeighbor:
    target: Permutation
    sign: int


def word_spin(word: Sequence[int]) -> int:
    """Number of letters ``k`` such that some ``k`` occurs before some ``k+1``."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, a in enumerate(word):
        first.setdefault(a, pos)
        last[a] = pos
    return sum(1 for a in first if a + 1 in last and first[a] < last[a + 1])


def _has_interval_support(word: Sequence[int]) -> bool:
    letters = set(word)
    return not letters or max(letters) - min(letters) + 1 == len(letters)


def contains_forbidden_pattern(word: Sequence[int]) -> bool:
    """Whether ``word`` contains 2132 or 2312 on neighbouring letters.

    An occurrence is ``a ... a-1 ... a+1 ... a`` (2132) or
    ``a ... a+1 ... a-1 ... a`` (2312).  Middle letters that are not
    neighbours of ``a`` commute past it and do not count; with the looser
    reading the verdict would depend on the chosen reduced word.
    """
    n = len(word)
    for i in range(n):
        a = word[i]
        for m in range(i + 3, n):
            if word[m] != a:
                continue
            seen_lower = seen_higher = False
            for x in word[i + 1 : m]:
                if x == a + 1:
                    if seen_lower:
                        return True
                    seen_higher = True
                elif x == a - 1:
                    if seen_higher:
                        return True
                    seen_lower = True
    return False


def is_weak_ribbon_word(word: Sequence[int]) -> bool:
    if not is_reduced(word):
        raise NotReduced(f"{tuple(word)} is not reduced")
    return _has_interval_support(word) and not contains_forbidden_pattern(word)


@lru_cache(maxsize=None)
def is_weak_ribbon(v: Permutation) -> int | None:
    """The spin of ``v`` if it is a weak ribbon, else ``None``.

    Only one reduced word is inspected; all reduced words of a weak ribbon
    agree (checked exhaustively in the test-suite).
    """
    word = a_reduced_word(v)
    if not word:
        return None
    if _has_interval_support(word) and not contains_forbidden_pattern(word):
        return word_spin(word)
    return None


def is_hook_word(word: Sequence[int]) -> bool:
    """``a_1 > ... > a_r < b_1 <= ... <= b_l`` with interval support."""
    if not word or not _has_interval_support(word):
        return False
    j = 0
    while j + 1 < len(word) and word[j] > word[j + 1]:
        j += 1
    return all(word[t] <= word[t + 1] for t in range(j, len(word) - 1))


def _right_weak_lower(w: Permutation, n: int) -> set[Permutation]:
    """All ``u`` with ``w = u v`` length-additively and ``l(v) = n``."""
    level = {w}
    for _ in range(n):
        level = {x.right_swap(i) for x in level for i in x.right_descents()}
    return level


@lru_cache(maxsize=None)
def _right_ribbon_strip(w: Permutation, n: int) -> tuple[SignedNeighbor, ...]:
    out = []
    for u in _right_weak_lower(w, n):
        spin = is_weak_ribbon(u.inverse() * w)
        if spin is not None:
            out.append(SignedNeighbor(u, -1 if spin % 2 else 1))
    return tuple(sorted(out, key=lambda s: s.target))


def right_ribbon_strip(w: Permutation, n: int) -> list[SignedNeighbor]:
    if n <= 0 or n > w.length:
        return []
    return list(_right_ribbon_strip(w, n))


def _left_weak_lower(w: Permutation, n: int) -> set[Permutation]:
    level = {w}
    for _ in range(n):
        level = {x.left_swap(i) for x in level for i in x.left_descents()}
    return level


@lru_cache(maxsize=None)
def _left_ribbon_strip(w: Permutation, n: int) -> tuple[SignedNeighbor, ...]:
    out = []
    for u in _left_weak_lower(w, n):
        spin = is_weak_ribbon(w * u.inverse())
        if spin is not None:
            out.append(SignedNeighbor(u, -1 if spin % 2 else 1))
    return tuple(sorted(out, key=lambda s: s.target))


def left_ribbon_strip(w: Permutation, n: int) -> list[SignedNeighbor]:
    """All ``u`` with ``w = v u`` length-additively and ``v`` a weak ribbon of length ``n``.

    This is the side on which stripping commutes correctly with strong-ribbon
    growth (which multiplies transpositions on the right).
    """
    if n <= 0 or n > w.length:
        return []
    return list(_left_ribbon_strip(w, n))


def cycle_type(p: Permutation) -> list[int]:
    seen = set()
    out = []
    for i in p.window:
        if i in seen or p(i) == i:
            continue
        n = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = p(j)
            n += 1
        out.append(n)
    return sorted(out, reverse=True)


def _strong_spin(w: Permutation, u: Permutation, k: int) -> int | None:
    """Spin of ``u / w`` if ``w^{-1} u`` is one cycle, else ``None``."""
    d = w.inverse() * u
    if len(cycle_type(d)) != 1:
        return None
    return sum(1 for i in d.support() if i <= k) - 1


@lru_cache(maxsize=None)
def _strong_ribbon_grow(w: Permutation, k: int, n: int) -> tuple[SignedNeighbor, ...]:
    level = {w}
    for _ in range(n):
        level = {u for x in level for u, _, _ in kbruhat_covers(x, k)}
    out = []
    for u in level:
        spin = _strong_spin(w, u, k)
        if spin is not None and len((w.inverse() * u).support()) == n + 1:
            out.append(SignedNeighbor(u, -1 if spin % 2 else 1))
    return tuple(sorted(out, key=lambda s: s.target))


def strong_ribbon_grow(w: Permutation, k: int, n: int) -> list[SignedNeighbor]:
    """All ``u`` above ``w`` by ``n`` k-Bruhat covers with ``w^{-1} u`` an ``(n+1)``-cycle."""
    if n <= 0:
        return []
    return list(_strong_ribbon_grow(w, k, n))


@lru_cache(maxsize=None)
def _strong_ribbon_shrink(w: Permutation, k: int, n: int) -> tuple[Permutation, ...]:
    level = {w}
    for _ in range(n):
        level = {u for x in level for u, _, _ in kbruhat_cocovers(x, k)}
    out = []
    for u in level:
        if _strong_spin(u, w, k) is not None and len((u.inverse() * w).support()) == n + 1:
            out.append(u)
    return tuple(sorted(out))


def strong_ribbon_shrink(w: Permutation, k: int, n: int) -> list[Permutation]:
    """All ``u`` such that ``w`` appears in ``strong_ribbon_grow(u, k, n)``."""
    if n <= 0:
        return []
    return list(_strong_ribbon_shrink(w, k, n))


def is_primitive(w: Permutation, u: Permutation, k: int) -> bool:
    r = u.length - w.length
    if r <= 0 or all(s.target != u for s in strong_ribbon_grow(w, k, r)):
        raise NotStrongRibbon(f"{u} is not a {k}-strong ribbon over {w}")
    return _is_weak_ribbon_factor(u, w)


def _is_weak_ribbon_factor(u: Permutation, w: Permutation) -> bool:
    """Whether ``u = v w`` length-additively with ``v`` a weak ribbon."""
    v = u * w.inverse()
    return v.length == u.length - w.length and is_weak_ribbon(v) is not None


def primitive_count_delta(w: Permutation, k: int, r: int) -> int:
    """Primitive growths of size ``r`` above ``w`` minus primitive strips below it."""
    up = sum(1 for s in strong_ribbon_grow(w, k, r) if _is_weak_ribbon_factor(s.target, w))
    down = sum(1 for u in strong_ribbon_shrink(w, k, r) if _is_weak_ribbon_factor(w, u))
    return up - down
