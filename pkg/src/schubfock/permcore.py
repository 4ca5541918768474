"""Finitely supported permutations of the integers.

A :class:`Permutation` is stored as a minimal window ``offset .. offset+len-1``
that it maps onto itself, together with the one-line images on that window.
Outside the window every integer is fixed.

Multiplication is functional composition, ``(p * q)(i) == p(q(i))``, so
``w * simple(i)`` swaps the one-line entries at positions ``i`` and ``i+1``
and a word ``a_1 ... a_n`` multiplies out left to right.

>>> w = product_word((1, 2))
>>> w
w[1: 2 3 1]
>>> w.length
2
>>> sorted(reduced_words(product_word((1, 2, 1))))
[(1, 2, 1), (2, 1, 2)]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itperms
from typing import Iterable, Iterator, Sequence

from . import config
from .errors import BoundExceeded, MalformedMaya, NotGrassmannian, ParseError

Word = tuple[int, ...]
Partition = tuple[int, ...]


class Permutation:
    """A bijection of Z with finite support, in canonical window form."""

    __slots__ = ("offset", "images", "_hash", "_length")

    def __init__(self, offset: int, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(offset, offset + len(images))):
            raise ValueError(f"images {images} do not permute the window starting at {offset}")
        lo, hi = 0, len(images)
        while lo < hi and images[lo] == offset + lo:
            lo += 1
        while hi > lo and images[hi - 1] == offset + hi - 1:
            hi -= 1
        if lo == hi:
            offset, images = 0, ()
        else:
            offset, images = offset + lo, images[lo:hi]
        self.offset = offset
        self.images = images
        self._hash = hash((offset, images))
        self._length = None

    # construction helpers -------------------------------------------------

    @classmethod
    def identity(cls) -> Permutation:
        return _IDENTITY

    @classmethod
    def from_one_line(cls, values: Sequence[int], offset: int = 1) -> Permutation:
        return cls(offset, values)

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> Permutation:
        moved = {i: j for i, j in mapping.items() if i != j}
        if not moved:
            return _IDENTITY
        lo, hi = min(moved), max(moved)
        return cls(lo, [moved.get(i, i) for i in range(lo, hi + 1)])

    # basic protocol -------------------------------------------------------

    def __call__(self, i: int) -> int:
        j = i - self.offset
        if 0 <= j < len(self.images):
            return self.images[j]
        return i

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._hash == other._hash and self.offset == other.offset and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        # an arbitrary but deterministic total order, used to sort outputs
        return (self.length, self.offset, self.images) < (other.length, other.offset, other.images)

    def __repr__(self) -> str:
        return format_perm(self)

    def __bool__(self) -> bool:
        return True

    @property
    def is_identity(self) -> bool:
        return not self.images

    @property
    def window(self) -> range:
        return range(self.offset, self.offset + len(self.images))

    @property
    def end(self) -> int:
        """Last index of the window (``offset - 1`` for the identity)."""
        return self.offset + len(self.images) - 1

    def support(self) -> frozenset[int]:
        return frozenset(i for i in self.window if self(i) != i)

    def one_line(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self(i) for i in range(lo, hi + 1))

    # group structure ------------------------------------------------------

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for j, v in enumerate(self.images):
            inv[v - self.offset] = self.offset + j
        return Permutation(self.offset, inv)

    @property
    def length(self) -> int:
        if self._length is None:
            im = self.images
            n = len(im)
            self._length = sum(1 for a in range(n) for b in range(a + 1, n) if im[a] > im[b])
        return self._length

    def right_swap(self, i: int) -> Permutation:
        """Return ``self * s_i`` (swap one-line positions ``i`` and ``i+1``)."""
        lo = min(self.offset, i) if self.images else i
        hi = max(self.end, i + 1) if self.images else i + 1
        vals = [self(j) for j in range(lo, hi + 1)]
        vals[i - lo], vals[i + 1 - lo] = vals[i + 1 - lo], vals[i - lo]
        return Permutation(lo, vals)

    def left_swap(self, i: int) -> Permutation:
        """Return ``s_i * self`` (swap the values ``i`` and ``i+1``)."""
        lo = min(self.offset, i) if self.images else i
        hi = max(self.end, i + 1) if self.images else i + 1
        vals = []
        for j in range(lo, hi + 1):
            v = self(j)
            vals.append(i + 1 if v == i else i if v == i + 1 else v)
        return Permutation(lo, vals)

    def right_descents(self) -> list[int]:
        """Positions ``i`` with ``w(i) > w(i+1)``, i.e. ``l(w s_i) < l(w)``."""
        im = self.images
        return [self.offset + j for j in range(len(im) - 1) if im[j] > im[j + 1]]

    def left_descents(self) -> list[int]:
        """Values ``i`` with ``l(s_i w) < l(w)``."""
        return self.inverse().right_descents()

    def shift(self, m: int) -> Permutation:
        return tau(self, m)


_IDENTITY = Permutation(0, ())


def identity() -> Permutation:
    return _IDENTITY


def simple(i: int) -> Permutation:
    """The simple reflection ``s_i`` swapping ``i`` and ``i+1``."""
    return Permutation(i, (i + 1, i))


def transposition(a: int, b: int) -> Permutation:
    """The reflection ``t_{a,b}``."""
    if a == b:
        return _IDENTITY
    a, b = min(a, b), max(a, b)
    vals = list(range(a, b + 1))
    vals[0], vals[-1] = b, a
    return Permutation(a, vals)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``(p * q)(i) = p(q(i))``."""
    if not p.images:
        return q
    if not q.images:
        return p
    lo = min(p.offset, q.offset)
    hi = max(p.end, q.end)
    return Permutation(lo, [p(q(i)) for i in range(lo, hi + 1)])


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def length(p: Permutation) -> int:
    return p.length


def product_word(word: Iterable[int]) -> Permutation:
    w = _IDENTITY
    for a in word:
        w = w.right_swap(a)
    return w


def is_reduced(word: Sequence[int]) -> bool:
    return product_word(word).length == len(word)


def tau(p: Permutation, m: int) -> Permutation:
    """Conjugate shift: ``tau(p, m)(i + m) == p(i) + m``."""
    if not p.images:
        return p
    return Permutation(p.offset + m, [v + m for v in p.images])


def a_reduced_word(p: Permutation) -> Word:
    """One reduced word, obtained by repeatedly stripping the first right descent."""
    letters = []
    w = p
    while w.images:
        i = w.right_descents()[0]
        letters.append(i)
        w = w.right_swap(i)
    return tuple(reversed(letters))


def reduced_words(p: Permutation, max_length: int | None = None) -> frozenset[Word]:
    """All reduced words of ``p``.

    Raises :class:`BoundExceeded` when ``l(p)`` exceeds the configured cap.
    """
    cap = config.LIMITS.max_length if max_length is None else max_length
    if p.length > cap:
        raise BoundExceeded(f"length {p.length} exceeds reduced-word cap {cap}")
    return _reduced_words(p)


@lru_cache(maxsize=None)
def _reduced_words(p: Permutation) -> frozenset[Word]:
    if not p.images:
        return frozenset({()})
    out = set()
    for i in p.right_descents():
        for word in _reduced_words(p.right_swap(i)):
            out.add(word + (i,))
    return frozenset(out)


# Bruhat orders ---------------------------------------------------------------


def _is_cover_swap(p: Permutation, a: int, b: int) -> bool:
    """Whether ``p * t_{a,b}`` covers ``p`` in the strong order (``a < b``)."""
    pa, pb = p(a), p(b)
    if pa > pb:
        return False
    return not any(pa < p(c) < pb for c in range(a + 1, b))


def kbruhat_covers(p: Permutation, k: int) -> list[tuple[Permutation, int, int]]:
    """All ``(p * t_{a,b}, a, b)`` with ``a <= k < b`` and length one more than ``p``."""
    if p.images:
        a_lo = min(p.offset - 1, k)
        b_hi = max(p.end + 1, k + 1)
    else:
        a_lo, b_hi = k, k + 1
    out = []
    for a in range(k, a_lo - 1, -1):
        for b in range(k + 1, b_hi + 1):
            if _is_cover_swap(p, a, b):
                out.append((p * transposition(a, b), a, b))
    return out


def kbruhat_cocovers(p: Permutation, k: int) -> list[tuple[Permutation, int, int]]:
    """All ``(p * t_{a,b}, a, b)`` with ``a <= k < b`` and length one less than ``p``."""
    if not p.images:
        return []
    out = []
    for a in range(min(k, p.end), p.offset - 1, -1):
        for b in range(max(k + 1, p.offset), p.end + 1):
            if a < b and p(a) > p(b):
                lo, hi = p(b), p(a)
                if not any(lo < p(c) < hi for c in range(a + 1, b)):
                    out.append((p * transposition(a, b), a, b))
    return out


def is_strong_cover(v: Permutation, w: Permutation) -> bool:
    d = v.inverse() * w
    return w.length == v.length + 1 and len(d.support()) == 2


# Grassmannian permutations and partitions ------------------------------------


def as_partition(parts: Iterable[int]) -> Partition:
    return tuple(sorted((int(x) for x in parts if x), reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_grassmannian(p: Permutation, k: int) -> bool:
    return all(d == k for d in p.right_descents())


def grassmannian_sort(p: Permutation, k: int) -> Permutation:
    """Sort the values at positions ``<= k`` and at positions ``> k`` separately."""
    if not p.images:
        return p
    lo = min(p.offset, k)
    hi = max(p.end, k + 1)
    left = sorted(p(i) for i in range(lo, k + 1))
    right = sorted(p(i) for i in range(k + 1, hi + 1))
    return Permutation(lo, left + right)


def grassmannian_partition(u: Permutation, k: int) -> Partition:
    """The partition of a ``k``-Grassmannian permutation: ``lambda_j = u(k+1-j) - (k+1-j)``."""
    if not is_grassmannian(u, k):
        raise NotGrassmannian(f"{u} has descents {u.right_descents()}, not only at {k}")
    parts = []
    j = 1
    while True:
        i = k + 1 - j
        part = u(i) - i
        if part <= 0 and i < u.offset:
            break
        parts.append(part)
        j += 1
    return as_partition(parts)


def grassmannian_from_partition(lam: Sequence[int], k: int) -> Permutation:
    """Inverse of :func:`grassmannian_partition`."""
    lam = as_partition(lam)
    if not lam:
        return _IDENTITY
    n = len(lam)
    left = [lam[j - 1] + k + 1 - j for j in range(n, 0, -1)]  # values at k+1-n .. k
    lo = k + 1 - n
    hi = max(left[-1], k + 1)
    used = set(left)
    right = [v for v in range(lo, hi + 1) if v not in used]
    return Permutation(lo, left + right)


def pi_k(w: Permutation, k: int) -> Partition:
    return grassmannian_partition(grassmannian_sort(w.inverse(), k), k)


# Maya diagrams ---------------------------------------------------------------


@dataclass(frozen=True)
class MayaDiagram:
    """A black/white colouring of Z.

    Positions below ``first`` are black, positions at or beyond
    ``first + len(bits)`` are white; ``bits`` holds the colours in between
    (1 = black).  ``center`` must balance white nodes at or below it against
    black nodes above it.
    """

    first: int
    bits: tuple[int, ...]
    center: int

    @classmethod
    def from_occupied(cls, occupied: Iterable[int], below: int, center: int | None = None) -> MayaDiagram:
        """Build from the black positions ``>= below`` (everything below is black)."""
        occ = set(occupied)
        hi = max(occ, default=below - 1)
        bits = tuple(1 if i in occ else 0 for i in range(below, hi + 1))
        first = below
        while bits and bits[0] == 1:
            bits, first = bits[1:], first + 1
        while bits and bits[-1] == 0:
            bits = bits[:-1]
        c = _balance_center(first, bits)
        if center is not None and center != c:
            raise MalformedMaya(f"center {center} does not balance the diagram (expected {c})")
        return cls(first, bits, c)

    def __post_init__(self):
        if _balance_center(self.first, self.bits) != self.center:
            raise MalformedMaya("balance condition fails")

    def is_black(self, i: int) -> bool:
        j = i - self.first
        if j < 0:
            return True
        if j >= len(self.bits):
            return False
        return bool(self.bits[j])

    def occupied(self, lo: int, hi: int) -> list[int]:
        return [i for i in range(lo, hi + 1) if self.is_black(i)]

    def labels(self, k: int, lo: int, hi: int) -> list[int]:
        """Label black nodes ``..., k-1, k`` and white nodes ``k+1, ...`` left to right.

        ``lo`` must lie at or left of every white node of the window.
        """
        lo = min(lo, self.first)
        n_black_from = sum(self.bits) + max(0, self.first - lo)
        nxt_black = k - n_black_from + 1
        n_white_before = 0
        out = []
        for i in range(lo, hi + 1):
            if self.is_black(i):
                out.append(nxt_black)
                nxt_black += 1
            else:
                n_white_before += 1
                out.append(k + n_white_before)
        return out

    def __str__(self) -> str:
        body = "".join("●" if b else "○" for b in self.bits)
        return f"…●|{self.first}:{body}|○… (center {self.center})"


def _balance_center(first: int, bits: tuple[int, ...]) -> int:
    # the centre c satisfies #{white <= c} == #{black > c}
    black_total = sum(bits)
    c = first - 1
    whites_le = 0
    black_gt = black_total
    while whites_le != black_gt:
        c += 1
        if c - first < len(bits) and bits[c - first]:
            black_gt -= 1
        else:
            whites_le += 1
        if whites_le > black_gt:
            raise MalformedMaya("no balancing center")
    return c


def maya_from_partition(lam: Sequence[int], k: int) -> MayaDiagram:
    """Black nodes at ``lambda_j - j + k + 1`` for ``j >= 1``."""
    lam = as_partition(lam)
    n = len(lam)
    occ = [lam[j - 1] - j + k + 1 for j in range(1, n + 1)]
    below = k + 1 - n
    return MayaDiagram.from_occupied(occ, below, k)


def partition_from_maya(f: MayaDiagram) -> tuple[Partition, int]:
    c = f.center
    below = min(f.first, c + 1)
    occ = sorted(f.occupied(below, f.first + len(f.bits)), reverse=True)
    parts = [o + j - c - 1 for j, o in enumerate(occ, start=1)]
    return as_partition(parts), c


def maya_of_grassmannian(u: Permutation, k: int) -> MayaDiagram:
    """The Maya diagram with black nodes ``{u(j) : j <= k}``."""
    below = min(u.offset, k + 1) if u.images else k + 1
    occ = [u(j) for j in range(below, k + 1)]
    return MayaDiagram.from_occupied(occ, below, k)


# text / JSON formats ----------------------------------------------------------

_PERM_RE = re.compile(r"^\s*w\[\s*(-?\d+)\s*:\s*((?:-?\d+\s*)*)\]\s*$")


def format_perm(p: Permutation) -> str:
    if not p.images:
        return "w[0: ]"
    return f"w[{p.offset}: {' '.join(map(str, p.images))}]"


def parse_perm(text: str) -> Permutation:
    """Parse ``w[offset: v0 v1 ...]`` or a word ``s1 s2 s-1``."""
    m = _PERM_RE.match(text)
    if m:
        offset = int(m.group(1))
        images = [int(x) for x in m.group(2).split()]
        try:
            return Permutation(offset, images)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    try:
        return product_word(parse_word(text))
    except ParseError:
        raise ParseError(f"cannot parse permutation {text!r}") from None


def parse_word(text: str) -> Word:
    tokens = text.replace(",", " ").split()
    letters = []
    for tok in tokens:
        if not re.fullmatch(r"s-?\d+", tok):
            raise ParseError(f"bad word letter {tok!r}")
        letters.append(int(tok[1:]))
    return tuple(letters)


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"s{a}" for a in word)


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"cannot parse partition {text!r}") from None
    if any(x < 0 for x in parts) or parts != sorted(parts, reverse=True):
        raise ParseError(f"not a partition: {text!r}")
    return as_partition(parts)


def perm_to_json(p: Permutation) -> dict:
    return {"offset": p.offset, "images": list(p.images)}


def perm_from_json(data: dict) -> Permutation:
    return Permutation(int(data["offset"]), [int(x) for x in data["images"]])


# pools ------------------------------------------------------------------------


def window_pool(lo: int, hi: int, max_len: int) -> list[Permutation]:
    """All permutations supported in ``[lo, hi]`` with length at most ``max_len``."""
    width = hi - lo + 1
    if width > config.LIMITS.max_width:
        raise BoundExceeded(f"window width {width} exceeds cap {config.LIMITS.max_width}")
    # grow by right multiplication with simple reflections inside the window
    seen = {_IDENTITY}
    frontier = [_IDENTITY]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for i in range(lo, hi):
                if w(i) < w(i + 1):
                    u = w.right_swap(i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return sorted(seen)


def all_perms(n: int) -> list[Permutation]:
    """S_n acting on ``1..n``."""
    return sorted(Permutation(1, p) for p in _itperms(range(1, n + 1)))
