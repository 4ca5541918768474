"""Named verification sweeps over desk-scale pools.

Every sweep returns a :class:`SweepResult` holding the number of identities
checked and a witness string for each one that failed.  Work fans out over a
thread pool (``PoolConfig.jobs``); results are merged in input order, so the
report is identical for every job count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .backstable import (
    backstable,
    backstable_window_oracle,
    dual_mn_check,
    eta0,
    eval_window,
    psi_check,
    schubert_poly,
    stanley_p,
    stanley_trunc,
)
from .config import PoolConfig
from .fock import (
    FockVector,
    YoungVector,
    alpha_minus,
    alpha_plus,
    eg_coeffs,
    exp_hamiltonian_apply,
    schur_via_fermions,
    skew_stanley_via_transfer,
    stanley_op_apply,
    transfer_row_poly,
    vac,
    young_alpha,
)
from .permcore import (
    Partition,
    Permutation,
    all_perms,
    format_perm,
    grassmannian_from_partition,
    grassmannian_partition,
    grassmannian_sort,
    identity,
    is_grassmannian,
    maya_from_partition,
    partitions,
    product_word,
    reduced_words,
    simple,
    window_pool,
)
from .poly import (
    MPoly,
    SymP,
    contains,
    divided_difference,
    p_expansion_to_poly,
    schur_expand,
    schur_ssyt,
    skew_schur_ssyt,
)
from .ribbon import (
    is_hook_word,
    is_weak_ribbon,
    is_weak_ribbon_word,
    primitive_count_delta,
    word_spin,
)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, checked: int, failures: Iterable[str]) -> None:
        self.checked += checked
        self.failures.extend(failures)

    def to_json(self, max_witnesses: int = 20) -> dict:
        return {
            "sweep": self.name,
            "status": "ok" if self.ok else "fail",
            "checked": self.checked,
            "failed": len(self.failures),
            "witnesses": self.failures[:max_witnesses],
        }


Check = Callable[[object], tuple[int, list[str]]]


def _fan(name: str, items: Sequence, check: Check, jobs: int) -> SweepResult:
    result = SweepResult(name)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            outcomes = list(ex.map(check, items))
    else:
        outcomes = [check(item) for item in items]
    for checked, failures in outcomes:
        result.merge(checked, failures)
    return result


def main_pool(cfg: PoolConfig) -> list[Permutation]:
    return window_pool(cfg.window[0], cfg.window[1], cfg.max_len)


def backstable_pool(cfg: PoolConfig) -> list[Permutation]:
    return window_pool(cfg.bs_window[0], cfg.bs_window[1], cfg.bs_max_len)


def _p(w: Permutation) -> str:
    return format_perm(w)


# Heisenberg relations -------------------------------------------------------------


def heisenberg(cfg: PoolConfig) -> SweepResult:
    ns, ks = cfg.n_values, cfg.k_values

    def check(w: Permutation):
        v = vac(w)
        bad: list[str] = []
        count = 0
        for m in ns:
            for n in ns:
                if m < n:
                    count += 1
                    if alpha_plus(m, alpha_plus(n, v)) != alpha_plus(n, alpha_plus(m, v)):
                        bad.append(f"[a_{m}, a_{n}] != 0 at {_p(w)}")
                for k in ks:
                    if m < n:
                        count += 1
                        lhs = alpha_minus(m, k, alpha_minus(n, k, v))
                        if lhs != alpha_minus(n, k, alpha_minus(m, k, v)):
                            bad.append(f"[a_-{m}, a_-{n}] != 0 at {_p(w)}, k={k}")
                    count += 1
                    comm = alpha_plus(n, alpha_minus(m, k, v)) - alpha_minus(m, k, alpha_plus(n, v))
                    expected = v * n if m == n else FockVector()
                    if comm != expected:
                        bad.append(f"[a_{n}, a_-{m}] != {n if m == n else 0} at {_p(w)}, k={k}")
        return count, bad

    return _fan("heisenberg", main_pool(cfg), check, cfg.jobs)


# Hamiltonian, transfer matrix and the Stanley routes --------------------------------


def exp_transfer(cfg: PoolConfig) -> SweepResult:
    def check(w: Permutation):
        ok = exp_hamiltonian_apply(w, 1) == transfer_row_poly(w, 1)
        return 1, [] if ok else [f"exp(phi) != T at {_p(w)}"]

    return _fan("exp-transfer", main_pool(cfg), check, cfg.jobs)


def stanley_routes(cfg: PoolConfig) -> SweepResult:
    n = cfg.nvars
    xs = list(range(1, n + 1))

    def check(w: Permutation):
        bad = []
        trunc = stanley_trunc(w, n)
        if skew_stanley_via_transfer(w, identity(), n) != trunc:
            bad.append(f"transfer route != factorisations at {_p(w)}")
        if p_expansion_to_poly(stanley_p(w), xs) != trunc:
            bad.append(f"character route != factorisations at {_p(w)}")
        if exp_hamiltonian_apply(w, n).get(identity(), MPoly()) != trunc:
            bad.append(f"Hamiltonian route != factorisations at {_p(w)}")
        # with l(w) variables the truncation determines the symmetric function
        full = w.length or 1
        if p_expansion_to_poly(stanley_p(w), range(1, full + 1)) != stanley_trunc(w, full):
            bad.append(f"character expansion != F_w in {full} variables at {_p(w)}")
        return 4, bad

    return _fan("stanley", main_pool(cfg), check, cfg.jobs)


def dual_mn(cfg: PoolConfig) -> SweepResult:
    def check(w: Permutation):
        bad = []
        count = 0
        for m in cfg.n_values:
            for k in cfg.k_values:
                count += 1
                if not dual_mn_check(w, m, k, cfg.nvars):
                    bad.append(f"p_{m} F_w != strong-ribbon sum at {_p(w)}, k={k}")
        return count, bad

    return _fan("mn", main_pool(cfg), check, cfg.jobs)


# Edelman-Greene coefficients and structure constants -----------------------------------


def eg(cfg: PoolConfig) -> SweepResult:
    ks = [k for k in cfg.k_values if k >= 0]

    def check(w: Permutation):
        bad = []
        try:
            tables = {k: eg_coeffs(w, k) for k in ks}
        except Exception as exc:  # noqa: BLE001 - reported as a witness
            return 1, [f"eg_coeffs raised {type(exc).__name__} at {_p(w)}: {exc}"]
        first = tables[ks[0]]
        if any(t != first for t in tables.values()):
            bad.append(f"EG table depends on k at {_p(w)}")
        nv = w.length + 1
        expected = {lam: c for lam, c in schur_expand(stanley_trunc(w, nv), nv).items() if c}
        if first != expected:
            bad.append(f"EG table != Schur expansion of F_w at {_p(w)}")
        count = 2
        for k in ks:
            if is_grassmannian(w, k):
                count += 1
                if tables[k] != {grassmannian_partition(w, k): 1}:
                    bad.append(f"Grassmannian table wrong at {_p(w)}, k={k}")
        return count, bad

    return _fan("eg", main_pool(cfg), check, cfg.jobs)


def structure(cfg: PoolConfig) -> SweepResult:
    ks = [k for k in cfg.k_values if k >= 0]
    pool = [w for w in main_pool(cfg) if w.length <= 3]
    seeds = [(lam, k) for k in ks for size in range(3) for lam in partitions(size)]

    def check(w: Permutation):
        bad = []
        for lam, k in seeds:
            u = grassmannian_from_partition(lam, k)
            nv = len(lam) + w.length or 1
            product = schur_ssyt(lam, nv) * stanley_trunc(w, nv)
            expected = {mu: c for mu, c in schur_expand(product, nv).items() if c}
            got: dict[Partition, object] = {}
            for x, c in stanley_op_apply(w, k, vac(u)).terms.items():
                if not is_grassmannian(x, k):
                    bad.append(f"non-Grassmannian {_p(x)} in F_w|u> at w={_p(w)}, lambda={lam}, k={k}")
                    break
                got[grassmannian_partition(x, k)] = c
            else:
                if got != expected:
                    bad.append(f"F_w|u> != s_lambda F_w at w={_p(w)}, lambda={lam}, k={k}")
        return len(seeds), bad

    return _fan("structure", pool, check, cfg.jobs)


# ribbon lemmas ---------------------------------------------------------------------


def ribbon_lemmas(cfg: PoolConfig) -> SweepResult:
    pool = window_pool(cfg.window[0], cfg.window[1], cfg.ribbon_max_len)

    def check(v: Permutation):
        if v.is_identity:
            return 0, []
        words = reduced_words(v, cfg.limits.max_length)
        verdicts = {(is_weak_ribbon_word(a), word_spin(a) if is_weak_ribbon_word(a) else None) for a in words}
        bad = []
        if len(verdicts) != 1:
            bad.append(f"reduced words of {_p(v)} disagree: {sorted(verdicts, key=str)}")
        ribbon = next(iter(verdicts))[0] if len(verdicts) == 1 else None
        hook = any(is_hook_word(a) for a in words)
        if ribbon is not None and hook != ribbon:
            bad.append(f"hook-word criterion disagrees at {_p(v)}")
        return 2, bad

    return _fan("ribbon", pool, check, cfg.jobs)


def uddu(cfg: PoolConfig) -> SweepResult:
    pool = window_pool(cfg.window[0], cfg.window[1], cfg.uddu_max_len)

    def check(w: Permutation):
        bad = []
        count = 0
        for k in cfg.k_values:
            for r in cfg.uddu_r_values:
                count += 1
                got = primitive_count_delta(w, k, r)
                if got != r:
                    bad.append(f"primitive delta {got} != {r} at {_p(w)}, k={k}")
        return count, bad

    return _fan("uddu", pool, check, cfg.jobs)


# classical side -----------------------------------------------------------------------


def classical(cfg: PoolConfig) -> SweepResult:
    top = cfg.classical_max_size
    shapes = [lam for size in range(top + 1) for lam in partitions(size)]
    n = cfg.nvars

    def check(lam: Partition):
        bad = []
        count = 0
        for mu in shapes:
            if contains(lam, mu):
                count += 1
                if schur_via_fermions(lam, mu, n) != skew_schur_ssyt(lam, mu, n):
                    bad.append(f"fermionic s_{lam}/{mu} != SSYT")
        v = YoungVector.basis(lam)
        for a in range(1, top + 1):
            for b in range(1, top + 1):
                for sa, sb in ((a, b), (a, -b), (-a, -b)):
                    count += 1
                    comm = young_alpha(sa, young_alpha(sb, v)) - young_alpha(sb, young_alpha(sa, v))
                    expected = v * sa if sa + sb == 0 else YoungVector()
                    if comm != expected:
                        bad.append(f"[a_{sa}, a_{sb}] wrong on |{lam}>")
        # Murnaghan-Nakayama: p_m s_lambda from ribbon additions
        nv = sum(lam) + top
        if nv <= 6:
            for m in range(1, top - sum(lam) + 1):
                count += 1
                lhs = p_expansion_to_poly(SymP.p(m), range(1, nv + 1)) * schur_ssyt(lam, nv)
                rhs = MPoly()
                for mu, c in young_alpha(-m, v).terms.items():
                    rhs = rhs + schur_ssyt(mu, nv) * c
                if lhs != rhs:
                    bad.append(f"MN rule fails for p_{m} s_{lam}")
        return count, bad

    return _fan("classical", shapes, check, cfg.jobs)


# back-stable side -------------------------------------------------------------------


def psi(cfg: PoolConfig) -> SweepResult:
    N, M = cfg.bs_N, cfg.bs_M

    def check(w: Permutation):
        bad = []
        count = 2
        for n in cfg.n_values:
            for k in cfg.k_values:
                count += 1
                if not psi_check(w, n, k):
                    bad.append(f"Psi fails to intertwine a_{n}/a_-{n},{k} at {_p(w)}")
        if eval_window(backstable(w), N, M) != backstable_window_oracle(w, N, M):
            bad.append(f"coproduct != shift limit at {_p(w)}")
        if eta0(backstable(w)) != stanley_p(w):
            bad.append(f"eta0 != F_w at {_p(w)}")
        return count, bad

    return _fan("psi", backstable_pool(cfg), check, cfg.jobs)


def schubert(cfg: PoolConfig) -> SweepResult:
    result = SweepResult("schubert")
    perms = all_perms(4)
    for w in perms:
        f = schubert_poly(w)
        result.merge(1, [] if f.is_homogeneous(w.length) else [f"S_w not homogeneous at {_p(w)}"])
        if w.is_identity:
            result.merge(1, [] if f == 1 else ["S_id != 1"])
        for i in range(1, 5):
            expected = schubert_poly(w * simple(i)) if i in w.right_descents() else MPoly()
            ok = divided_difference(f, i) == expected
            result.merge(1, [] if ok else [f"d_{i} S_w wrong at {_p(w)}"])
        for k in range(1, 4):
            if is_grassmannian(w, k):
                lam = grassmannian_partition(w, k)
                ok = f == schur_ssyt(lam, k)
                result.merge(1, [] if ok else [f"S_w != s_{lam}(x_1..x_{k}) at {_p(w)}"])
    for k in range(1, 4):
        for size in range(5):
            for lam in partitions(size):
                if len(lam) <= k:
                    u = grassmannian_from_partition(lam, k)
                    ok = schubert_poly(u) == schur_ssyt(lam, k)
                    result.merge(1, [] if ok else [f"Grassmannian Schubert != Schur for {lam}, k={k}"])
    return result


# printed micro-examples ----------------------------------------------------------------


def examples(cfg: PoolConfig) -> SweepResult:
    result = SweepResult("examples")

    def expect(label: str, got, want):
        result.merge(1, [] if got == want else [f"{label}: got {got!r}, want {want!r}"])

    expect("spin of 12143", word_spin([1, 2, 1, 4, 3]), 2)
    expect("spin of 32541", word_spin([3, 2, 5, 4, 1]), 1)
    expect("12143 is a weak ribbon", is_weak_ribbon_word([1, 2, 1, 4, 3]), True)
    expect("32541 is a weak ribbon", is_weak_ribbon_word([3, 2, 5, 4, 1]), True)
    expect("1241 is not a weak ribbon", is_weak_ribbon_word([1, 2, 4, 1]), False)
    expect("312143 is not a weak ribbon", is_weak_ribbon_word([3, 1, 2, 1, 4, 3]), False)
    expect("spin via permutation", is_weak_ribbon(product_word([1, 2, 1, 4, 3])), 2)
    g = grassmannian_sort(Permutation.from_one_line([4, 2, 3, 5, 6, 1]), 3)
    expect("G_3(423561)", g, Permutation.from_one_line([2, 3, 4, 1, 5, 6]))
    labels = maya_from_partition((3, 1), 3).labels(3, -1, 8)
    expect("Maya labels of (3,1), k=3", labels, [-1, 0, 1, 4, 2, 5, 6, 3, 7, 8])
    # the printed permutation is the inverse of the 3-Grassmannian one
    inv = grassmannian_from_partition((3, 1), 3).inverse()
    expect("Maya labels are the inverse Grassmannian", tuple(labels), inv.one_line(-1, 8))
    return result


SWEEPS: dict[str, Callable[[PoolConfig], SweepResult]] = {
    "heisenberg": heisenberg,
    "exp-transfer": exp_transfer,
    "stanley": stanley_routes,
    "mn": dual_mn,
    "classical": classical,
    "eg": eg,
    "structure": structure,
    "ribbon": ribbon_lemmas,
    "uddu": uddu,
    "psi": psi,
    "schubert": schubert,
    "examples": examples,
}


def run(name: str, cfg: PoolConfig | None = None) -> list[SweepResult]:
    """Run one named sweep, or every sweep for ``"all"``."""
    cfg = cfg or PoolConfig()
    if name == "all":
        return [fn(cfg) for fn in SWEEPS.values()]
    try:
        fn = SWEEPS[name]
    except KeyError:
        raise ValueError(f"unknown sweep {name!r}; choose from {', '.join(['all', *SWEEPS])}") from None
    return [fn(cfg)]

