"""Exact sparse polynomials and symmetric functions.

``MPoly`` holds a polynomial in variables ``x_i`` indexed by arbitrary
integers.  A monomial is a sorted tuple of ``(index, exponent)`` pairs with
positive exponents; coefficients are :class:`fractions.Fraction`.

``SymP`` holds a symmetric function in the power-sum basis, keyed by
partitions.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itperms
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotContained, NotSymmetric
from .permcore import Partition, as_partition, partitions

Monomial = tuple[tuple[int, int], ...]
ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_from_exps(exps: Mapping[int, int]) -> Monomial:
    return tuple(sorted((int(v), int(e)) for v, e in exps.items() if e))


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class MPoly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = _frac(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> MPoly:
        p = cls.__new__(cls)
        p.terms = {m: c for m, c in terms.items() if c}
        return p

    @classmethod
    def const(cls, c) -> MPoly:
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, i: int, power: int = 1) -> MPoly:
        if power == 0:
            return cls.const(1)
        return cls({((i, power),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[int, int], coeff=1) -> MPoly:
        return cls({mono_from_exps(exps): coeff})

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> MPoly:
        other = _as_mpoly(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        return self + (-_as_mpoly(other))

    def __rsub__(self, other) -> MPoly:
        return _as_mpoly(other) - self

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            c = _frac(other)
            return MPoly._raw({m: v * c for m, v in self.terms.items()})
        out: dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[mono_mul(m1, m2)] += c1 * c2
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> MPoly:
        c = _frac(c)
        return MPoly._raw({m: v / c for m, v in self.terms.items()})

    def __pow__(self, n: int) -> MPoly:
        out = MPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> MPoly:
        return self * _frac(c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MPoly({format_mpoly(self)})"

    def __str__(self) -> str:
        return format_mpoly(self)

    # queries --------------------------------------------------------------

    def coeff(self, exps: Mapping[int, int] | Monomial) -> Fraction:
        m = exps if isinstance(exps, tuple) else mono_from_exps(exps)
        return self.terms.get(m, Fraction(0))

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {mono_degree(m) for m in self.terms}
        if d is not None:
            return degs <= {d}
        return len(degs) <= 1

    # transformations ------------------------------------------------------

    def substitute_zero(self, kill: Iterable[int]) -> MPoly:
        kill = set(kill)
        return MPoly._raw({m: c for m, c in self.terms.items() if not any(v in kill for v, _ in m)})

    def restrict(self, lo: int, hi: int) -> MPoly:
        """Set every variable outside ``[lo, hi]`` to zero."""
        return MPoly._raw({m: c for m, c in self.terms.items() if all(lo <= v <= hi for v, _ in m)})

    def truncate_degree(self, d: int) -> MPoly:
        return MPoly._raw({m: c for m, c in self.terms.items() if mono_degree(m) <= d})

    def relabel(self, f) -> MPoly:
        """Rename variables by ``x_i -> x_{f(i)}`` (``f`` must be injective on the support)."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            nm = tuple(sorted((f(v), e) for v, e in m))
            out[nm] = out.get(nm, 0) + c
        return MPoly._raw(out)

    def swap(self, i: int, j: int) -> MPoly:
        return self.relabel(lambda v: j if v == i else i if v == j else v)


def _as_mpoly(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    return MPoly.const(x)


ZERO = MPoly()
ONE = MPoly.const(1)


def format_mpoly(p: MPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for m, c in sorted(p.terms.items(), key=lambda t: (-mono_degree(t[0]), t[0])):
        mono = "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def mpoly_to_json(p: MPoly) -> list[dict]:
    return [
        {"coeff": str(c), "exps": {str(v): e for v, e in m}}
        for m, c in sorted(p.terms.items(), key=lambda t: (-mono_degree(t[0]), t[0]))
    ]


def mpoly_from_json(data: list[dict]) -> MPoly:
    return MPoly({mono_from_exps({int(v): e for v, e in t["exps"].items()}): Fraction(t["coeff"]) for t in data})


def xvars(n: int) -> list[int]:
    return list(range(1, n + 1))


# divided differences ---------------------------------------------------------


def divided_difference(f: MPoly, i: int) -> MPoly:
    """``(f - s_i f) / (x_i - x_{i+1})`` computed monomial by monomial."""
    out: dict[Monomial, Fraction] = defaultdict(Fraction)
    for m, c in f.terms.items():
        d = dict(m)
        a = d.pop(i, 0)
        b = d.pop(i + 1, 0)
        if a == b:
            continue
        sign = 1
        if a < b:
            a, b, sign = b, a, -1
        # (x^a y^b - x^b y^a) / (x - y) = sum_{j=0}^{a-b-1} x^{a-1-j} y^{b+j}
        for j in range(a - b):
            e = dict(d)
            if a - 1 - j:
                e[i] = a - 1 - j
            if b + j:
                e[i + 1] = b + j
            out[mono_from_exps(e)] += sign * c
    return MPoly._raw(out)


# power sums and friends ------------------------------------------------------


def z(alpha: Sequence[int]) -> int:
    """Centraliser size ``prod_i i^{m_i} m_i!``."""
    out = 1
    for part, mult in Counter(alpha).items():
        out *= part**mult * factorial(mult)
    return out


class SymP:
    """Symmetric function as a rational combination of power sums ``p_alpha``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        self.terms: dict[Partition, Fraction] = {}
        if terms:
            for a, c in terms.items():
                c = _frac(c)
                if c:
                    key = as_partition(a)
                    self.terms[key] = self.terms.get(key, 0) + c
            self.terms = {a: c for a, c in self.terms.items() if c}

    @classmethod
    def p(cls, *parts: int) -> SymP:
        return cls({tuple(parts): 1})

    def __add__(self, other: SymP) -> SymP:
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return SymP(out)

    def __neg__(self) -> SymP:
        return SymP({a: -c for a, c in self.terms.items()})

    def __sub__(self, other: SymP) -> SymP:
        return self + (-other)

    def __mul__(self, other) -> SymP:
        if not isinstance(other, SymP):
            c = _frac(other)
            return SymP({a: v * c for a, v in self.terms.items()})
        out: dict[Partition, Fraction] = defaultdict(Fraction)
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out[as_partition(a + b)] += c * d
        return SymP(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymP):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "SymP(0)"
        body = " + ".join(f"{c}*p{list(a)}" for a, c in sorted(self.terms.items()))
        return f"SymP({body})"


def symp_to_json(f: SymP) -> list[dict]:
    return [{"p": list(a), "coeff": str(c)} for a, c in sorted(f.terms.items())]


def symp_from_json(data: list[dict]) -> SymP:
    return SymP({tuple(t["p"]): Fraction(t["coeff"]) for t in data})


def h_to_p(m: int) -> SymP:
    """``h_m = sum_{alpha |- m} p_alpha / z_alpha``."""
    return SymP({a: Fraction(1, z(a)) for a in partitions(m)})


@lru_cache(maxsize=None)
def power_sum(n: int, vars: tuple[int, ...]) -> MPoly:
    return MPoly({((v, n),): 1 for v in vars})


def p_expansion_to_poly(f: SymP, vars: Sequence[int]) -> MPoly:
    """Evaluate ``p_n -> sum_{i in vars} x_i^n``."""
    vars = tuple(vars)
    out = ZERO
    for alpha, c in f.terms.items():
        term = MPoly.const(c)
        for part in alpha:
            term = term * power_sum(part, vars)
        out = out + term
    return out


# Schur polynomials -------------------------------------------------------------


def _skew_cells(lam: Partition, mu: Partition) -> list[tuple[int, int]]:
    mu = tuple(mu) + (0,) * (len(lam) - len(mu))
    return [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def skew_ssyt(lam: Sequence[int], mu: Sequence[int], nvars: int) -> Iterator[dict[tuple[int, int], int]]:
    """Semistandard fillings of ``lam / mu`` with entries in ``1..nvars``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    cells = _skew_cells(lam, mu)
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        low = 1
        if (r, c - 1) in filling:
            low = filling[(r, c - 1)]
        if (r - 1, c) in filling:
            low = max(low, filling[(r - 1, c)] + 1)
        for v in range(low, nvars + 1):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def skew_schur_ssyt(lam: Partition, mu: Partition, nvars: int) -> MPoly:
    out: dict[Monomial, Fraction] = defaultdict(Fraction)
    for t in skew_ssyt(lam, mu, nvars):
        out[mono_from_exps(Counter(t.values()))] += 1
    return MPoly._raw(out)


def schur_ssyt(lam: Sequence[int], nvars: int) -> MPoly:
    """Sum of ``x^wt(T)`` over semistandard tableaux of shape ``lam`` with entries ``<= nvars``."""
    return skew_schur_ssyt(as_partition(lam), (), nvars)


@lru_cache(maxsize=None)
def complete_homogeneous(m: int, nvars: int) -> MPoly:
    """``h_m(x_1..x_n)`` by enumerating multisets."""
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    out: dict[Monomial, Fraction] = {}

    def rec(start: int, left: int, exps: dict[int, int]):
        if left == 0:
            out[mono_from_exps(exps)] = Fraction(1)
            return
        for v in range(start, nvars + 1):
            exps[v] = exps.get(v, 0) + 1
            rec(v, left - 1, exps)
            exps[v] -= 1

    rec(1, m, {})
    return MPoly._raw(out)


def _sign(perm: Sequence[int]) -> int:
    s = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                s = -s
    return s


def jacobi_trudi(lam: Sequence[int], nvars: int) -> MPoly:
    """``det(h_{lam_i - i + j})`` expanded by the Leibniz formula."""
    lam = as_partition(lam)
    n = len(lam)
    if n == 0:
        return ONE
    out = ZERO
    for perm in _itperms(range(n)):
        term = MPoly.const(_sign(perm))
        for i in range(n):
            term = term * complete_homogeneous(lam[i] - i + perm[i], nvars)
            if not term:
                break
        out = out + term
    return out


def exponent_vector(m: Monomial, nvars: int) -> tuple[int, ...]:
    d = dict(m)
    return tuple(d.get(v, 0) for v in range(1, nvars + 1))


def is_symmetric(f: MPoly, nvars: int) -> bool:
    if any(v < 1 or v > nvars for v in f.variables()):
        return False
    return all(f.swap(i, i + 1) == f for i in range(1, nvars))


def schur_expand(f: MPoly, nvars: int) -> dict[Partition, Fraction]:
    """Coefficients ``c`` with ``f = sum c_lam s_lam(x_1..x_n)``.

    Peels off the graded-lex leading monomial, whose exponent vector is a
    partition for a symmetric polynomial.
    """
    if not is_symmetric(f, nvars):
        raise NotSymmetric("polynomial is not symmetric in the given variables")
    out: dict[Partition, Fraction] = {}
    rest = f
    while rest.terms:
        lead = max(rest.terms, key=lambda m: (mono_degree(m), exponent_vector(m, nvars)))
        lam = as_partition(exponent_vector(lead, nvars))
        c = rest.terms[lead]
        out[lam] = out.get(lam, 0) + c
        rest = rest - schur_ssyt(lam, nvars) * c
    return {lam: c for lam, c in out.items() if c}
