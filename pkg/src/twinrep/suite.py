"""Aggregate verification of the main claims, for 2 <= n <= n_max."""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

from . import analysis, reps
from .freegroup import FreeWord, GroupRingElt, fox_derivative, jacobian_matrix, magnus_specialize
from .matrix import Matrix
from .presentations import build_presentation, s_word
from .ring import LaurentPoly, T

DEFAULT_SEED = 20261018


def seed_from_env() -> int:
    raw = os.environ.get("TWINREP_SEED")
    return int(raw) if raw not in (None, "") else DEFAULT_SEED


@dataclass
class CheckResult:
    check_id: str
    reference: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"id": self.check_id, "reference": self.reference, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    n_max: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def corrupted_eta1(n: int) -> reps.MatrixRep:
    """eta_1 with the lower-left block entry 2 - t replaced by 3 - t (fault injection)."""
    good = reps.eta1_matrix(n)
    block = ((1 - T, T), (3 - T, T - 1))
    images = {g: Matrix.embed(n, block, g[1] - 1) for g in good.images}
    return reps.MatrixRep("T", n, n, images, {"rep": "eta1", "n": n, "params": {"corrupted": True}})


# -- individual checks ------------------------------------------------------

def check_jacobian(n_max: int, eta1=reps.eta1_matrix) -> dict:
    bad = []
    for n in range(2, n_max + 1):
        rep = eta1(n)
        for i in range(1, n):
            spec = magnus_specialize(jacobian_matrix(reps.eta1_automorphism(n, i)))
            if Matrix(spec) != rep.images[("s", i)]:
                bad.append(f"n={n} s{i}")
    return {"passed": not bad, "mismatches": bad}


def check_relations(n_max: int, eta1=reps.eta1_matrix) -> dict:
    failures = []
    cases = []
    for n in range(2, n_max + 1):
        cases.append((f"eta1 n={n}", eta1(n), "T"))
        for f in ("1", "t", "1 + t"):
            cases.append((f"eta2(f={f}) n={n}", reps.eta2_matrix(n, f), "T"))
    for n in range(3, n_max + 1):
        for b in ("1", "t", "t^-1"):
            cases.append((f"vt1(b={b}) n={n}", reps.vt_extension_eta1(n, b), "VT"))
        for f, g in (("1", "1"), ("t", "1"), ("t", "1 + t")):
            cases.append((f"vtwt2(f={f},g={g}) n={n}", reps.vt_wt_extension_eta2(n, f, g, "WT"), "WT"))
    for name, rep, kind in cases:
        report = analysis.verify_relations(rep, build_presentation(kind, rep.n))
        for v in report.violations:
            failures.append(f"{name}: {v.label}")
    return {"passed": not failures, "cases": len(cases), "violations": failures}


def check_reducibility(n_max: int, eta1=reps.eta1_matrix) -> dict:
    missing = []
    for n in range(2, n_max + 1):
        for t0 in (Fraction(3), Fraction(1, 2)):
            ones = [1] * n
            basis = analysis.common_fixed_vectors(eta1(n), t0)
            if ones not in basis:
                missing.append(f"n={n} t={t0}")
    return {"passed": not missing, "missing": missing}


IRREDUCIBILITY_GRID = tuple(Fraction(x) for x in (-3, -2, -1, Fraction(1, 2), 1, Fraction(3, 2), 2, 3, 4, 5))


def check_irreducibility(n_max: int) -> dict:
    rows = []
    ok = True
    for n in range(3, n_max + 1):
        grid = sorted(set(IRREDUCIBILITY_GRID) | {Fraction(2 * n - 2, n - 2)})
        for t0 in grid:
            try:
                v = analysis.check_irreducibility_criterion(n, t0)
                good = v.irreducible == analysis.irreducibility_predicate(n, t0) and (
                    not v.irreducible or v.dim == (n - 1) ** 2)
                rows.append({"n": n, "t": str(t0), "dim": v.dim, "verdict": v.verdict})
            except analysis.CriterionMismatch as exc:
                good = False
                rows.append({"n": n, "t": str(t0), "error": str(exc)})
            ok = ok and good
    return {"passed": ok, "grid": rows}


def check_faithfulness(eta1=reps.eta1_matrix) -> dict:
    ker2 = analysis.kernel_search(eta1(2), 8)
    ker3 = analysis.kernel_search(eta1(3), 14)
    rep3 = eta1(3)
    powers_nontrivial = [not reps.evaluate_word(rep3, s_word(3, 1, 2) * r).is_identity() for r in range(1, 8)]
    return {
        "passed": not ker2 and not ker3 and all(powers_nontrivial),
        "kernel_n2_maxlen8": [str(w) for w in ker2],
        "kernel_n3_maxlen14": [str(w) for w in ker3],
        "(s1 s2)^r != I for r=1..7": all(powers_nontrivial),
    }


def check_eta2_unfaithful(n_max: int) -> dict:
    bad = []
    for n in range(3, max(4, n_max) + 1):
        for f in ("1", "t", "2*t^2"):
            rep = reps.eta2_matrix(n, f)
            for i in range(1, n - 1):
                if not reps.evaluate_word(rep, s_word(n, i, i + 1) * 3).is_identity():
                    bad.append(f"n={n} f={f} i={i}")
    kernel = analysis.kernel_search(reps.eta2_matrix(3, 1), 6)
    return {"passed": not bad and bool(kernel), "failures": bad, "kernel_n3_maxlen6": [str(w) for w in kernel]}


def random_laurent(rng: random.Random, max_terms: int = 3, span: int = 2, coeff: int = 3) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randint(-span, span)] = rng.randint(-coeff, coeff)
    return LaurentPoly(terms)


def random_nonzero_laurent(rng: random.Random, **kw) -> LaurentPoly:
    while True:
        p = random_laurent(rng, **kw)
        if not p.is_zero():
            return p


def check_t2_roundtrip(seed: int, cases: int = 100) -> dict:
    rng = random.Random(seed)
    bad = []
    for k in range(cases):
        family = k % 5 + 1
        a = random_laurent(rng)
        b = random_nonzero_laurent(rng)
        c = random_laurent(rng)
        rep = reps.two_local_family_T2(family, a=a, b=b, c=c)
        rho = rep.images[("r", 1)]
        if not (rho @ rho).is_identity() or analysis.classify_involution_2x2(rho) != family:
            bad.append({"family": family, "a": str(a), "b": str(b), "c": str(c)})
    return {"passed": not bad, "cases": cases, "seed": seed, "failures": bad}


def check_wt_obstruction(n_max: int) -> dict:
    rows = []
    for n in range(3, n_max + 1):
        for b in ("1", "t", "1 + t"):
            res = analysis.wt_obstruction_check(n, b)
            rows.append({"n": n, "b": b, "obstructed": res.obstructed and res.witness is not None})
    return {"passed": all(r["obstructed"] for r in rows), "cases": rows}


def random_word(rng: random.Random, rank: int, maxlen: int = 12) -> FreeWord:
    letters = [rng.choice([1, -1]) * rng.randint(1, rank) for _ in range(rng.randint(0, maxlen))]
    return FreeWord(rank, letters)


def fox_identity_holds(w: FreeWord) -> bool:
    total = GroupRingElt(w.rank)
    for k in range(1, w.rank + 1):
        total = total + fox_derivative(w, k) * (FreeWord.gen(w.rank, k) - GroupRingElt.scalar(w.rank, 1))
    return total == GroupRingElt.from_word(w) - 1


def check_fox_identity(seed: int, cases: int = 500) -> dict:
    rng = random.Random(seed)
    bad = []
    for k in range(cases):
        rank = k % 5 + 1
        w = random_word(rng, rank)
        if not fox_identity_holds(w):
            bad.append(str(w))
    return {"passed": not bad, "cases": cases, "seed": seed, "failures": bad}


CHECKS = (
    ("jacobian", "eta_1 Jacobian specializes to the 2-local block [[1-t, t], [2-t, t-1]]"),
    ("relations", "eta_1, eta_2 and their VT/WT extensions preserve the defining relations"),
    ("reducibility", "eta_1 is reducible: (1, ..., 1) is fixed"),
    ("irreducibility", "eta_1' irreducible iff t != 2 and t != (2n-2)/(n-2)"),
    ("faithfulness", "eta_1 faithful for n = 2, 3 (bounded evidence)"),
    ("eta2-unfaithful", "eta_2((s_i s_{i+1})^3) = I for n >= 3"),
    ("t2-classification", "rho_1 of a VT_2 extension falls in one of five families"),
    ("wt-obstruction", "eta_1 has no 2-local extension to WT_n, n >= 3"),
    ("fox-identity", "sum_k (dw/dx_k)(x_k - 1) = w - 1"),
)


def verify_paper_suite(n_max: int, seed: Optional[int] = None, corrupt: bool = False,
                       progress: Callable[[CheckResult], None] = None) -> SuiteReport:
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    seed = seed_from_env() if seed is None else seed
    eta1 = corrupted_eta1 if corrupt else reps.eta1_matrix
    runners = {
        "jacobian": lambda: check_jacobian(n_max, eta1),
        "relations": lambda: check_relations(n_max, eta1),
        "reducibility": lambda: check_reducibility(n_max, eta1),
        "irreducibility": lambda: check_irreducibility(n_max),
        "faithfulness": lambda: check_faithfulness(eta1),
        "eta2-unfaithful": lambda: check_eta2_unfaithful(n_max),
        "t2-classification": lambda: check_t2_roundtrip(seed),
        "wt-obstruction": lambda: check_wt_obstruction(n_max),
        "fox-identity": lambda: check_fox_identity(seed),
    }
    results = []
    for check_id, reference in CHECKS:
        start = time.perf_counter()
        try:
            detail = runners[check_id]()
            passed = bool(detail.pop("passed"))
        except Exception as exc:  # a crashing check is a failing check
            detail, passed = {"error": f"{type(exc).__name__}: {exc}"}, False
        res = CheckResult(check_id, reference, passed, detail, time.perf_counter() - start)
        results.append(res)
        if progress:
            progress(res)
    return SuiteReport(n_max, results)
