"""Cross-checks between independent computations of the same invariants.

Every check returns a CheckReport; a failure is data, not an exception.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import betti, chains, euler
from .lengths import (
    LengthVector,
    enumerate_chambers,
    is_generic,
    morse_numbers,
    require_generic,
    short_set_stats,
)
from .poly import IntPolynomial, to_plain

SCOPES = ("p3", "p5", "pair", "chi", "generators", "bounds")


@dataclass
class CheckReport:
    name: str
    inputs: dict
    expected: Any
    actual: Any
    passed: bool
    details: str = ""

    def to_json_obj(self) -> dict:
        return {
            "check": self.name,
            "inputs": self.inputs,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "pass": self.passed,
            "details": self.details,
        }


def _jsonable(v):
    if isinstance(v, IntPolynomial):
        return to_plain(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _ell_inputs(ell: LengthVector, **extra) -> dict:
    return {"ell": str(ell), **extra}


# --- individual checks ---------------------------------------------------------

def check_p3_agreement(ell: LengthVector) -> CheckReport:
    """The four d = 3 formulas (plus the R-polynomial form) must coincide."""
    require_generic(ell)
    ref = betti.p3_recursive(ell)
    others = {
        "klyachko": betti.p3_klyachko(ell),
        "hausmann_knutson": betti.p3_hausmann_knutson(ell),
        "closed": betti.p3_closed(ell),
        "r_form": betti.p3_r_form(ell),
    }
    bad = [k for k, v in others.items() if v != ref]
    total = sum(morse_numbers(ell).mu)
    if ref(1) != total:
        bad.append("total_rank")
    return CheckReport("p3_agreement", _ell_inputs(ell), ref, others, not bad,
                       "mismatch: " + ", ".join(bad) if bad else "")


def check_p5_agreement(ell: LengthVector) -> CheckReport:
    """``p5_closed`` against the Morse assembly, plus connectivity and top class."""
    require_generic(ell)
    closed = betti.p5_closed(ell)
    assembled = betti.poincare_odd(ell, 5)
    problems = []
    if closed != assembled:
        problems.append("closed != assembled")
    if closed.coeff(0) != 1:
        problems.append("constant term != 1")
    if any(closed.coeff(i) for i in range(1, 9)):
        problems.append("nonzero coefficient in degrees 1..8")
    n = ell.n
    if n >= 6:
        top = betti.dim_and_connectivity(n, 5).dimension
        if closed.degree != top or closed.coeff(top) != 1:
            problems.append(f"top class not Z in degree {top}")
    return CheckReport("p5_agreement", _ell_inputs(ell), assembled, closed, not problems, "; ".join(problems))


def check_pair_vs_snf(d: int, k: int) -> CheckReport:
    """Rational homology of the shifted E complexes against ``pair_poincare``."""
    formula = betti.pair_poincare(d, k)
    snf = chains.relative_homology(d, k).rational_poincare()
    problems = []
    if snf != formula:
        problems.append("SNF != formula")
    if d in (4, 5, 6, 7):
        closed = betti.pair_poincare_closed(d, k)
        if closed != formula:
            problems.append(f"closed form differs: {to_plain(closed)}")
    if k >= d - 2:
        for s in chains.build_relative(d, k):
            s.complex.check()
    return CheckReport("pair_vs_snf", {"d": d, "k": k}, formula, snf, not problems, "; ".join(problems))


def check_chi(ell: LengthVector, d: int, expected: int | None = None) -> CheckReport:
    """Closed Euler characteristic against the filtration sum (and a known value)."""
    require_generic(ell)
    closed = euler.chi_m4(ell) if d == 4 else euler.chi_m6(ell)
    filt = euler.chi_filtration(ell, d)
    problems = []
    if closed != filt:
        problems.append(f"filtration sum {filt}")
    if expected is not None and closed != expected:
        problems.append(f"expected {expected}")
    return CheckReport(f"chi_m{d}", _ell_inputs(ell, d=d),
                       filt if expected is None else expected, closed, not problems, "; ".join(problems))


def expected_e1_homology(j: int) -> dict[int, tuple[int, tuple[int, ...]]]:
    """H(E(1, j)): Z in degree j-1 for odd j, Z/2 in the other even degrees below j."""
    out: dict[int, tuple[int, tuple[int, ...]]] = {}
    for q in range(0, j, 2):
        if j % 2 and q == j - 1:
            out[q] = (1, ())
        else:
            out[q] = (0, (2,))
    return out


def check_generators(m: int, j: int) -> CheckReport:
    """Free ranks of H(E(m, j)) against the explicit basis; torsion only Z/2."""
    H = chains.homology(chains.build_E(m, j))
    counts: dict[int, int] = {}
    for _, q in chains.rational_basis_generators(m, j):
        counts[q] = counts.get(q, 0) + 1
    free = {q: r for q, (r, _) in H.groups.items() if r}
    problems = []
    if free != counts:
        problems.append("free ranks differ from basis count")
    if H.torsion_primes() - {2}:
        problems.append(f"torsion {sorted(H.torsion_primes())}")
    if m == 1 and H.groups != expected_e1_homology(j):
        problems.append("E(1, j) table mismatch")
    return CheckReport("generators", {"m": m, "j": j}, counts, H.to_json_obj(), not problems, "; ".join(problems))


def check_bounds(ell: LengthVector, d: int, min_b: dict[int, int] | None = None) -> CheckReport:
    bounds = euler.betti_bounds(ell, d)
    problems = [f"degree {b.degree}: {b.lower} > {b.upper}" for b in bounds if b.lower > b.upper]
    for deg, lo in (min_b or {}).items():
        got = next((b.lower for b in bounds if b.degree == deg), None)
        if got is None or got < lo:
            problems.append(f"b_{deg} lower bound {got} < {lo}")
    actual = [{"degree": b.degree, "lower": b.lower, "upper": b.upper, "difference": b.exact_difference}
              for b in bounds]
    return CheckReport(f"betti_bounds_d{d}", _ell_inputs(ell, d=d), min_b or {}, actual, not problems,
                       "; ".join(problems))


# --- corpora -------------------------------------------------------------------

def random_corpus(n: int, count: int, seed: int) -> list[LengthVector]:
    """Seeded integer vectors in [1, 50]^n that are generic with a_0 = 1."""
    rng = random.Random(f"{seed}:{n}")
    out: list[LengthVector] = []
    while len(out) < count:
        ell = LengthVector([rng.randint(1, 50) for _ in range(n)])
        if is_generic(ell)[0] and short_set_stats(ell).a0_nonempty:
            out.append(ell)
    return out


def chamber_corpus(ns: Iterable[int] = (4, 5, 6, 7)) -> list[LengthVector]:
    return [c.witness for n in ns for c in enumerate_chambers(n, require_nonempty=True)]


def full_corpus(seed: int, per_n: int = 200, ns: Iterable[int] = range(4, 10)) -> list[LengthVector]:
    return chamber_corpus() + [ell for n in ns for ell in random_corpus(n, per_n, seed)]


WORKED_CHI = [
    (LengthVector([1] * 7 + [6]), 4, 3),
    (LengthVector([1] * 7 + [6]), 6, 0),
    (LengthVector([1, 1, 1, 1, 1, 3, 3, 6]), 4, 3),
    (LengthVector([1, 1, 1, 1, 1, 3, 3, 6]), 6, 5),
] + [(LengthVector([1] * (2 * m + 1)), 4, euler.kamiyama_equilateral(m)) for m in range(2, 9)]


# --- suite ---------------------------------------------------------------------

def thread_count() -> int:
    raw = os.environ.get("LINKHOM_THREADS", "")
    try:
        val = int(raw)
    except ValueError:
        val = os.cpu_count() or 1
    return max(1, val)


def run_parallel(fn: Callable, items: list, threads: int | None = None) -> list:
    """``[fn(x) for x in items]`` on a thread pool; output order matches input order."""
    threads = threads or thread_count()
    if threads == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


@dataclass
class SuiteResult:
    reports: list[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def failures(self) -> list[CheckReport]:
        return [r for r in self.reports if not r.passed]


def _scope_tasks(scope: str, seed: int) -> list[tuple[Callable, tuple]]:
    tasks: list[tuple[Callable, tuple]] = []
    if scope == "p3":
        tasks += [(check_p3_agreement, (ell,)) for ell in full_corpus(seed)]
    elif scope == "p5":
        corpus = [e for e in full_corpus(seed) if e.n >= 5]
        corpus += [e for n in range(10, 13) for e in random_corpus(n, 20, seed)]
        tasks += [(check_p5_agreement, (ell,)) for ell in corpus]
    elif scope == "pair":
        tasks += [(check_pair_vs_snf, (d, k)) for d in range(4, 10) for k in range(0, 9)]
    elif scope == "chi":
        tasks += [(check_chi, w) for w in WORKED_CHI]
        for n in range(5, 13):
            for ell in random_corpus(n, 40, seed):
                tasks.append((check_chi, (ell, 4)))
                if n >= 7:
                    tasks.append((check_chi, (ell, 6)))
    elif scope == "generators":
        tasks += [(check_generators, (1, j)) for j in range(1, 13)]
        tasks += [(check_generators, (m, j)) for m in range(0, 6) for j in range(1, 9) if m != 1]
    elif scope == "bounds":
        tasks.append((check_bounds, (LengthVector([1, 1, 1, 1, 1, 3, 3, 6]), 4, {11: 5})))
        for n in range(6, 13):
            for ell in random_corpus(n, 40, seed):
                tasks.append((check_bounds, (ell, 4)))
                if n >= 9:
                    tasks.append((check_bounds, (ell, 6)))
    else:
        raise ValueError(f"unknown scope {scope!r}")
    return tasks


def run_suite(scope: str = "all", seed: int = 0, threads: int | None = None) -> SuiteResult:
    scopes = SCOPES if scope == "all" else (scope,)
    tasks = [t for s in scopes for t in _scope_tasks(s, seed)]
    reports = run_parallel(lambda t: t[0](*t[1]), tasks, threads)
    return SuiteResult(reports)
