"""Schubert, Stanley and back-stable Schubert polynomials.

Back-stable Schubert polynomials live in ``Lambda^{<=0} (x) Q[x_Z]``; a
:class:`BSym` stores them in the basis ``p_alpha^{<=0} (x) x^m``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import NoConvergence, NotInSNeq0, UnsupportedWindow
from .fock import FockVector, alpha_minus, alpha_plus, chi_table, increasing_left_factors, vac
from .permcore import Partition, Permutation, as_partition, tau
from .poly import ONE, ZERO, Monomial, MPoly, SymP, mono_degree, mono_from_exps, mono_mul, p_expansion_to_poly, z
from .ribbon import strong_ribbon_grow


@lru_cache(maxsize=None)
def _schubert(w: Permutation, i: int) -> MPoly:
    if not w.images:
        return ONE
    if w.offset < i:
        # later factors only use letters >= i and cannot move anything below i
        return ZERO
    out = ZERO
    for u, d in increasing_left_factors(w, i):
        out = out + MPoly.var(i, d) * _schubert(u, i + 1)
    return out


def schubert_poly(w: Permutation) -> MPoly:
    """Sum over increasing factorisations ``v_1 v_2 ...`` with ``v_i`` fixing every ``j < i``."""
    if w.images and w.offset < 1:
        raise UnsupportedWindow(f"{w} moves a nonpositive integer")
    return _schubert(w, 1)


@lru_cache(maxsize=None)
def _stanley(w: Permutation, i: int, n: int) -> MPoly:
    if i > n:
        return ONE if not w.images else ZERO
    out = ZERO
    for u, d in increasing_left_factors(w):
        out = out + MPoly.var(i, d) * _stanley(u, i + 1, n)
    return out


def stanley_trunc(w: Permutation, nvars: int) -> MPoly:
    """``F_w(x_1, ..., x_n)`` from increasing factorisations into ``n`` (possibly empty) factors."""
    return _stanley(w, 1, nvars)


@lru_cache(maxsize=None)
def stanley_p(w: Permutation) -> SymP:
    """``F_w = sum_alpha chi_w^alpha / z_alpha p_alpha``."""
    return SymP({a: Fraction(c, z(a)) for a, c in chi_table(w).items() if c})


def stanley_poly(w: Permutation, nvars: int) -> MPoly:
    return p_expansion_to_poly(stanley_p(w), range(1, nvars + 1))


def dual_mn_check(w: Permutation, m: int, k: int, nvars: int) -> bool:
    """``p_m F_w == sum (-1)^spin F_u`` over ``k``-strong ribbons ``u / w`` of size ``m``."""
    xs = range(1, nvars + 1)
    lhs = p_expansion_to_poly(SymP.p(m), xs) * stanley_trunc(w, nvars)
    rhs = ZERO
    for s in strong_ribbon_grow(w, k, m):
        rhs = rhs + stanley_trunc(s.target, nvars) * s.sign
    return lhs == rhs


# S_{!=0} and back-stable Schubert polynomials ------------------------------------------


def split_s_neq0(v: Permutation) -> tuple[Permutation, Permutation]:
    """Factor ``v = v_minus * v_plus`` with ``v_minus`` moving only ``<= 0`` and ``v_plus`` only ``>= 1``."""
    if any((i <= 0) != (v(i) <= 0) for i in v.window):
        raise NotInSNeq0(f"{v} uses s_0")
    minus = Permutation.from_mapping({i: v(i) for i in v.window if i <= 0})
    plus = Permutation.from_mapping({i: v(i) for i in v.window if i >= 1})
    return minus, plus


def mirror(v: Permutation) -> Permutation:
    """Conjugation by ``i -> 1 - i``."""
    return Permutation.from_mapping({1 - i: 1 - v(i) for i in v.window})


def schubert_neq0(v: Permutation) -> MPoly:
    """Polynomial factor of a back-stable Schubert polynomial for ``v`` in ``S_{!=0}``.

    The negative half is the Schubert polynomial of the mirrored permutation with
    ``x_j -> x_{1-j}`` and sign ``(-1)^l(v_minus)``.
    """
    minus, plus = split_s_neq0(v)
    neg = schubert_poly(mirror(minus)).relabel(lambda j: 1 - j)
    if minus.length % 2:
        neg = -neg
    return schubert_poly(plus) * neg


class BSym:
    """Element of ``Lambda^{<=0} (x) Q[x_Z]`` in the basis ``p_alpha^{<=0} (x) x^m``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Partition, Monomial], object] | None = None):
        self.terms: dict[tuple[Partition, Monomial], Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    self.terms[key] = c

    @classmethod
    def one(cls) -> BSym:
        return cls({((), ()): 1})

    @classmethod
    def tensor(cls, f: SymP, g: MPoly) -> BSym:
        return cls({(a, m): c * d for a, c in f.terms.items() for m, d in g.terms.items()})

    def __add__(self, other: BSym) -> BSym:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BSym(out)

    def __neg__(self) -> BSym:
        return BSym({key: -c for key, c in self.terms.items()})

    def __sub__(self, other: BSym) -> BSym:
        return self + (-other)

    def __mul__(self, c) -> BSym:
        c = Fraction(c)
        return BSym({key: v * c for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BSym):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "BSym(0)"
        parts = []
        for (a, m), c in sorted(self.terms.items()):
            mono = "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m) or "1"
            parts.append(f"{c}*p{list(a)}(x){mono}")
        return "BSym(" + " + ".join(parts) + ")"


def bsym_to_json(f: BSym) -> list[dict]:
    return [
        {"p": list(a), "exps": {str(v): e for v, e in m}, "coeff": str(c)}
        for (a, m), c in sorted(f.terms.items())
    ]


def bsym_from_json(data: list[dict]) -> BSym:
    return BSym(
        {
            (as_partition(t["p"]), mono_from_exps({int(v): e for v, e in t["exps"].items()})): Fraction(t["coeff"])
            for t in data
        }
    )


@lru_cache(maxsize=None)
def s_neq0_right_cofactors(w: Permutation) -> tuple[Permutation, ...]:
    """All ``u`` with ``w = u v`` length-additively and ``v`` in ``S_{!=0}``."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for i in x.right_descents():
                if i != 0:
                    u = x.right_swap(i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def backstable(w: Permutation) -> BSym:
    """``sum_{w = u v, v in S_{!=0}} F_u^{<=0} (x) S_v``.

    The ``S_{!=0}`` factor sits on the right; this is the placement that agrees
    with the shift-limit of Schubert polynomials.
    """
    out = BSym()
    for u in s_neq0_right_cofactors(w):
        v = u.inverse() * w
        out = out + BSym.tensor(stanley_p(u), schubert_neq0(v))
    return out


def backstable_vector(v: FockVector) -> BSym:
    out = BSym()
    for w, c in v.terms.items():
        out = out + backstable(w) * c
    return out


def eval_window(f: BSym, N: int, M: int) -> MPoly:
    """Set every variable outside ``[-N, M]`` to zero."""
    neg = list(range(-N, 1))
    out: dict[Monomial, Fraction] = defaultdict(Fraction)
    cache: dict[Partition, MPoly] = {}
    for (a, m), c in f.terms.items():
        if not all(-N <= v <= M for v, _ in m):
            continue
        if a not in cache:
            cache[a] = p_expansion_to_poly(SymP.p(*a), neg)
        for m2, d in cache[a].terms.items():
            out[mono_mul(m, m2)] += c * d
    return MPoly(out)


def backstable_window_oracle(w: Permutation, N: int, M: int) -> MPoly:
    """Stable limit of shifted Schubert polynomials, restricted to ``[-N, M]``."""
    start = max(N + 1, 1 - w.offset if w.images else 0)
    cutoff = max(N + w.length + 4, start + 2)
    prev = None
    m = start
    while m <= cutoff:
        poly = schubert_poly(tau(w, m)).restrict(1, m + M).relabel(lambda j: j - m).restrict(-N, M)
        if poly == prev:
            return poly
        prev = poly
        m += 1
    raise NoConvergence(f"shift limit of {w} did not stabilise by m = {cutoff}")


def eta0(f: BSym) -> SymP:
    """Keep the purely symmetric part."""
    return SymP({a: c for (a, m), c in f.terms.items() if not m})


def b_alpha_plus(n: int, f: BSym) -> BSym:
    """``n * d/dp_n^{<=0}``."""
    out: dict = defaultdict(Fraction)
    for (a, m), c in f.terms.items():
        mult = a.count(n)
        if mult:
            rest = list(a)
            rest.remove(n)
            out[(tuple(rest), m)] += c * n * mult
    return BSym(out)


def p_leq_k(n: int, k: int) -> BSym:
    """``p_n^{<=k}`` written over ``Lambda^{<=0}``."""
    terms: dict = {((n,), ()): Fraction(1)}
    if k > 0:
        for i in range(1, k + 1):
            terms[((), ((i, n),))] = Fraction(1)
    else:
        for i in range(k + 1, 1):
            terms[((), ((i, n),))] = Fraction(-1)
    return BSym(terms)


def bsym_mul(f: BSym, g: BSym) -> BSym:
    out: dict = defaultdict(Fraction)
    for (a, m), c in f.terms.items():
        for (b, n), d in g.terms.items():
            out[(as_partition(a + b), mono_mul(m, n))] += c * d
    return BSym(out)


def b_alpha_minus(n: int, k: int, f: BSym) -> BSym:
    """Multiplication by ``p_n^{<=k}``."""
    return bsym_mul(p_leq_k(n, k), f)


def psi_check(w: Permutation, n: int, k: int) -> bool:
    """Both intertwining identities of ``w -> backstable(w)`` for ``alpha_n`` and ``alpha_{-n,k}``."""
    bw = backstable(w)
    plus_ok = backstable_vector(alpha_plus(n, vac(w))) == b_alpha_plus(n, bw)
    minus_ok = backstable_vector(alpha_minus(n, k, vac(w))) == b_alpha_minus(n, k, bw)
    return plus_ok and minus_ok


def bsym_degree(f: BSym) -> int:
    return max((sum(a) + mono_degree(m) for a, m in f.terms), default=0)

