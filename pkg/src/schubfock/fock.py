"""Fermionic Fock spaces and the Heisenberg operators acting on them.

``FockVector`` spans the permutations of Z; ``YoungVector`` spans partitions
(the classical fermionic space).  Operators are plain functions taking and
returning vectors; all coefficients are exact rationals.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Generic, Hashable, Iterable, Mapping, TypeVar

from .errors import NonGrassmannianSupport, NonIntegralCoefficient, NotContained, SizeMismatch
from .permcore import (
    Partition,
    Permutation,
    as_partition,
    grassmannian_partition,
    identity,
    is_grassmannian,
    partitions,
    perm_from_json,
    perm_to_json,
)
from .poly import ONE, ZERO, MPoly, contains, z
from .ribbon import left_ribbon_strip, strong_ribbon_grow

K = TypeVar("K", bound=Hashable)


class LinComb(Generic[K]):
    """Finite rational linear combination of hashable basis labels."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[K, object] | None = None):
        self.terms: dict[K, Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    self.terms[key] = c

    @classmethod
    def basis(cls, key: K, coeff=1):
        return cls({key: coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return type(self)(out)

    def __neg__(self):
        return type(self)({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        return type(self)({key: v * c for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, key: K) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}|{key}>" for key, c in self.items())


class FockVector(LinComb[Permutation]):
    pass


class YoungVector(LinComb[Partition]):
    pass


def vac(w: Permutation | None = None) -> FockVector:
    return FockVector.basis(identity() if w is None else w)


def apply_linear(f: Callable[[K], Iterable[tuple[K, object]]], v: LinComb) -> LinComb:
    """Extend a basis map ``key -> [(key', coeff)]`` linearly."""
    out: dict = defaultdict(Fraction)
    for key, c in v.terms.items():
        for key2, d in f(key):
            out[key2] += c * d
    return type(v)(out)


def fock_to_json(v: FockVector) -> list[dict]:
    return [{"perm": perm_to_json(w), "coeff": str(c)} for w, c in v.items()]


def fock_from_json(data: list[dict]) -> FockVector:
    return FockVector({perm_from_json(t["perm"]): Fraction(t["coeff"]) for t in data})


# the operators on span(S_Z) ---------------------------------------------------


def alpha_plus(n: int, v: FockVector) -> FockVector:
    """Strip weak ribbons of size ``n``, weighted by ``(-1)^spin``."""
    if n == 0:
        return v
    return apply_linear(lambda w: ((s.target, s.sign) for s in left_ribbon_strip(w, n)), v)


def alpha_minus(n: int, k: int, v: FockVector) -> FockVector:
    """Grow ``k``-strong ribbons of size ``n``, weighted by ``(-1)^spin``."""
    if n == 0:
        return v
    return apply_linear(lambda w: ((s.target, s.sign) for s in strong_ribbon_grow(w, k, n)), v)


def alpha_seq_plus(sigma: Iterable[int], v: FockVector) -> FockVector:
    """``alpha_{sigma_1} ... alpha_{sigma_l} v`` (rightmost applied first)."""
    for part in reversed(tuple(sigma)):
        v = alpha_plus(part, v)
    return v


def alpha_seq_minus(sigma: Iterable[int], k: int, v: FockVector) -> FockVector:
    for part in reversed(tuple(sigma)):
        v = alpha_minus(part, k, v)
    return v


# the classical space span(partitions) -----------------------------------------


def _cells(lam: Partition) -> set[tuple[int, int]]:
    return {(r, c) for r, part in enumerate(lam) for c in range(part)}


def ribbon_height(cells: set[tuple[int, int]]) -> int | None:
    """Number of rows of ``cells`` if it is a ribbon (connected, no 2x2 block)."""
    if not cells:
        return None
    for r, c in cells:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
            return None
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if seen != cells:
        return None
    return len({r for r, _ in cells})


def _sub_partitions(lam: Partition, size: int) -> Iterable[Partition]:
    """Partitions ``mu`` inside ``lam`` with ``|mu| = size``."""

    def rec(i: int, cap: int, left: int):
        if i == len(lam):
            if left == 0:
                yield ()
            return
        for part in range(min(cap, lam[i], left), -1, -1):
            for rest in rec(i + 1, part, left - part):
                yield (part,) + rest

    if size < 0:
        return
    for mu in rec(0, lam[0] if lam else 0, size):
        yield as_partition(mu)


def _sup_partitions(lam: Partition, size: int) -> Iterable[Partition]:
    """Partitions ``mu`` containing ``lam`` with ``|mu| = |lam| + size``."""
    for mu in partitions(sum(lam) + size):
        if contains(mu, lam):
            yield mu


@lru_cache(maxsize=None)
def _young_remove(lam: Partition, m: int) -> tuple[tuple[Partition, int], ...]:
    out = []
    big = _cells(lam)
    for mu in _sub_partitions(lam, sum(lam) - m):
        ht = ribbon_height(big - _cells(mu))
        if ht is not None:
            out.append((mu, -1 if (ht - 1) % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _young_add(lam: Partition, m: int) -> tuple[tuple[Partition, int], ...]:
    out = []
    small = _cells(lam)
    for mu in _sup_partitions(lam, m):
        ht = ribbon_height(_cells(mu) - small)
        if ht is not None:
            out.append((mu, -1 if (ht - 1) % 2 else 1))
    return tuple(out)


def young_alpha(m: int, v: YoungVector) -> YoungVector:
    """Remove (``m > 0``) or add (``m < 0``) ``|m|``-ribbons with sign ``(-1)^(height-1)``."""
    if m == 0:
        return v
    if m > 0:
        return apply_linear(lambda lam: _young_remove(lam, m), v)
    return apply_linear(lambda lam: _young_add(lam, -m), v)


def horizontal_strip_lowerings(lam: Partition) -> list[Partition]:
    """All ``mu`` inside ``lam`` with ``lam / mu`` a horizontal strip."""
    lam = as_partition(lam)
    out = []

    def rec(i: int, acc: list[int]):
        if i == len(lam):
            out.append(as_partition(acc))
            return
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        for part in range(lam[i], nxt - 1, -1):
            acc.append(part)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return out


def schur_via_fermions(lam: Partition, mu: Partition, nvars: int) -> MPoly:
    """``<mu| T(x_n) ... T(x_1) |lam>`` for the horizontal-strip transfer matrix."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    state: dict[Partition, MPoly] = {lam: ONE}
    for i in range(1, nvars + 1):
        nxt: dict[Partition, MPoly] = defaultdict(MPoly)
        for nu, poly in state.items():
            for nu2 in horizontal_strip_lowerings(nu):
                if contains(nu2, mu):
                    nxt[nu2] = nxt[nu2] + poly * MPoly.var(i, sum(nu) - sum(nu2))
        state = dict(nxt)
    return state.get(mu, ZERO)


def young_exp_phi(lam: Partition, var: int) -> dict[Partition, MPoly]:
    """``exp(sum_j x^j/j alpha_j) |lam>`` on the classical space, exactly."""
    return _exp_phi({as_partition(lam): ONE}, var, lambda key, j: _young_remove(key, j), lambda key: sum(key))


# transfer matrix and Hamiltonian on span(S_Z) ----------------------------------


def is_increasing_perm(v: Permutation) -> bool:
    """Whether ``v`` has a strictly decreasing reduced word."""
    w = v
    last = None
    # strip the smallest letter from the right each time
    while w.images:
        cands = [i for i in w.right_descents() if last is None or i > last]
        if not cands:
            return False
        last = min(cands)
        w = w.right_swap(last)
    return True


@lru_cache(maxsize=None)
def increasing_left_factors(w: Permutation, floor: int | None = None) -> tuple[tuple[Permutation, int], ...]:
    """Pairs ``(u, l(v))`` with ``w = v u`` length-additively and ``v`` increasing.

    With ``floor`` set, only factors whose letters are all ``>= floor`` count.
    Each ``u`` arises from exactly one increasing ``v``.
    """
    out: dict[Permutation, int] = {}

    def rec(x: Permutation, ceiling: int | None, depth: int):
        if x in out:
            raise AssertionError(f"{x} reached twice below {w}")
        out[x] = depth
        for i in x.left_descents():
            if (ceiling is None or i < ceiling) and (floor is None or i >= floor):
                rec(x.left_swap(i), i, depth + 1)

    rec(w, None, 0)
    return tuple(sorted(out.items()))


def transfer_row(w: Permutation) -> dict[tuple[Permutation, int], int]:
    """Entries ``(u, d) -> 1`` where ``w = v u`` with ``v`` increasing of length ``d``."""
    return {(u, d): 1 for u, d in increasing_left_factors(w)}


def transfer_row_poly(w: Permutation, var: int) -> dict[Permutation, MPoly]:
    return {u: MPoly.var(var, d) for u, d in increasing_left_factors(w)}


def skew_stanley_via_transfer(w: Permutation, u: Permutation, nvars: int) -> MPoly:
    """``<u| T(x_n) ... T(x_1) |w>``."""
    target_len = u.length
    state: dict[Permutation, MPoly] = {w: ONE}
    for i in range(1, nvars + 1):
        nxt: dict[Permutation, MPoly] = defaultdict(MPoly)
        for x, poly in state.items():
            for y, d in increasing_left_factors(x):
                if y.length >= target_len:
                    nxt[y] = nxt[y] + poly * MPoly.var(i, d)
        state = dict(nxt)
    return state.get(u, ZERO)


def _exp_phi(state: dict, var: int, strip, size) -> dict:
    # exp(phi) = sum_r phi^r / r!; phi lowers degree by at least one, so the
    # series stops after max-degree terms
    total: dict = defaultdict(MPoly)
    for key, poly in state.items():
        total[key] = total[key] + poly
    power = dict(state)
    r = 0
    while power:
        r += 1
        nxt: dict = defaultdict(MPoly)
        for key, poly in power.items():
            for j in range(1, size(key) + 1):
                xj = MPoly.var(var, j) * Fraction(1, j)
                for key2, sign in strip(key, j):
                    nxt[key2] = nxt[key2] + poly * xj * sign
        power = {key: p for key, p in nxt.items() if p}
        for key, poly in power.items():
            total[key] = total[key] + poly * Fraction(1, factorial(r))
    return {key: p for key, p in total.items() if p}


def exp_hamiltonian_apply(w: Permutation, nvars: int) -> dict[Permutation, MPoly]:
    """``exp(phi(x_n)) ... exp(phi(x_1)) |w>`` with ``phi(x) = sum_i x^i/i alpha_i``."""
    state: dict[Permutation, MPoly] = {w: ONE}
    strip = lambda key, j: ((s.target, s.sign) for s in left_ribbon_strip(key, j))  # noqa: E731
    for i in range(1, nvars + 1):
        state = _exp_phi(state, i, strip, lambda key: key.length)
    return state


# characters, Stanley operators and Edelman-Greene coefficients ------------------


@lru_cache(maxsize=None)
def chi(w: Permutation, alpha: Partition) -> int:
    """Signed count of weak-ribbon factorisations of ``w`` with sizes ``alpha``."""
    alpha = as_partition(alpha)
    if sum(alpha) != w.length:
        raise SizeMismatch(f"|{alpha}| != l({w}) = {w.length}")
    c = alpha_seq_plus(alpha, vac(w)).coeff(identity())
    assert c.denominator == 1
    return int(c)


def chi_table(w: Permutation) -> dict[Partition, int]:
    return {a: chi(w, a) for a in partitions(w.length)}


@lru_cache(maxsize=None)
def _alpha_minus_sigma_basis(sigma: Partition, k: int, u: Permutation) -> FockVector:
    return alpha_seq_minus(sigma, k, vac(u))


def stanley_op_apply(w: Permutation, k: int, v: FockVector) -> FockVector:
    """``F_w^{(k)} v = sum_sigma chi_w^sigma / z_sigma alpha_{-sigma,k} v``."""
    out = FockVector()
    for sigma, c in chi_table(w).items():
        if not c:
            continue
        coeff = Fraction(c, z(sigma))
        for u, d in v.terms.items():
            out = out + _alpha_minus_sigma_basis(sigma, k, u) * (coeff * d)
    return out


def stanley_adjoint_apply(w: Permutation, v: FockVector) -> FockVector:
    """``F_w^perp v = sum_sigma chi_w^sigma / z_sigma alpha_sigma v``."""
    out = FockVector()
    for sigma, c in chi_table(w).items():
        if c:
            out = out + alpha_seq_plus(sigma, v) * Fraction(c, z(sigma))
    return out


def eg_coeffs(w: Permutation, k: int) -> dict[Partition, int]:
    """Schur coefficients of ``F_w`` read off ``F_w^{(k)} |id>``."""
    out: dict[Partition, int] = {}
    for u, c in stanley_op_apply(w, k, vac()).terms.items():
        if not is_grassmannian(u, k):
            raise NonGrassmannianSupport(f"{u} is not {k}-Grassmannian")
        if c.denominator != 1 or c < 0:
            raise NonIntegralCoefficient(f"coefficient {c} at {u}")
        out[grassmannian_partition(u, k)] = int(c)
    return dict(sorted(out.items()))
