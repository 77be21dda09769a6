"""Decision procedures and witnesses for the twin-group representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    CriterionMismatch,
    DegreeMismatch,
    KindMismatch,
    NotInvolution,
    UnclassifiableInvolution,
)
from .matrix import (
    Matrix,
    QMatrix,
    integer_vector,
    intersect,
    nullspace,
    q_identity,
    q_matmul,
    q_sub,
    q_transpose,
)
from .presentations import Presentation, TwinWord, build_presentation, enumerate_T_elements
from .reps import MatrixRep, eta1_composition_factor, evaluate_word, vt_extension_eta1
from .ring import RAT_ONE, RAT_ZERO, format_rational, parse_rational

__all__ = [
    "RelationResult",
    "RelationReport",
    "IrreducibilityVerdict",
    "InvariantLine",
    "verify_relations",
    "common_fixed_vectors",
    "invariant_line_search",
    "algebra_dimension",
    "irreducibility_predicate",
    "check_irreducibility_criterion",
    "kernel_search",
    "classify_involution_2x2",
    "wt_obstruction_check",
]


# ---------------------------------------------------------------------------
# relations

@dataclass(frozen=True)
class RelationResult:
    label: str
    lhs_word: TwinWord
    rhs_word: TwinWord
    holds: bool
    lhs: Matrix
    rhs: Matrix

    def to_json(self) -> dict:
        return {
            "relation": f"{self.label}: {self.lhs_word or '1'} = {self.rhs_word or '1'}",
            "holds": self.holds,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }


@dataclass(frozen=True)
class RelationReport:
    presentation: str
    results: Tuple[RelationResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results)

    @property
    def violations(self) -> List[RelationResult]:
        return [r for r in self.results if not r.holds]

    def to_json(self) -> dict:
        return {"presentation": self.presentation, "ok": self.ok,
                "relations": [r.to_json() for r in self.results]}


def verify_relations(rep: MatrixRep, p: Presentation) -> RelationReport:
    if rep.n != p.n:
        raise KindMismatch(f"representation of {rep.kind}_{rep.n} checked against {p.name}")
    missing = [g for g in p.generators if (g[0], int(g[1:])) not in rep.images]
    if missing:
        raise KindMismatch(f"{p.name} needs images for {', '.join(missing)}")
    cache: Dict[Tuple, Matrix] = {}

    def ev(w: TwinWord) -> Matrix:
        if w.letters not in cache:
            cache[w.letters] = evaluate_word(rep, w)
        return cache[w.letters]

    results = []
    for rel in p.relations:
        lhs, rhs = ev(rel.lhs), ev(rel.rhs)
        results.append(RelationResult(rel.label, rel.lhs, rel.rhs, lhs == rhs, lhs, rhs))
    return RelationReport(p.name, tuple(results))


# ---------------------------------------------------------------------------
# specialization helpers

def _specialized(rep: MatrixRep, t0) -> List[Tuple[str, QMatrix]]:
    t0 = parse_rational(t0)
    return [(f"{g}{i}", rep.images[(g, i)].specialize(t0)) for g, i in rep.generators()]


def _eigenspace(m: QMatrix, sign: int) -> QMatrix:
    d = len(m)
    shifted = q_sub(m, [[Fraction(sign) * x for x in row] for row in q_identity(d)])
    return nullspace(shifted, d)


def common_fixed_vectors(rep: MatrixRep, t0) -> List[List[int]]:
    """Basis of the vectors fixed by every generator image at t = t0."""
    mats = _specialized(rep, t0)
    d = rep.degree
    rows: QMatrix = []
    for _, m in mats:
        rows.extend(q_sub(m, q_identity(d)))
    return [integer_vector(v) for v in nullspace(rows, d)]


@dataclass(frozen=True)
class InvariantLine:
    vector: Tuple[int, ...]
    signs: Dict[str, int]
    side: str  # "column": M v = +-v ; "row": v M = +-v

    def to_json(self) -> dict:
        return {"vector": list(self.vector), "signs": dict(self.signs), "side": self.side}


def invariant_line_search(rep: MatrixRep, t0) -> Optional[InvariantLine]:
    """First common eigenvector (eigenvalues +-1) of all images at t0.

    Sign patterns are tried in lexicographic order (+1 before -1,
    generators in index order); for each pattern the column action is
    tried before the row action (transposed matrices).
    """
    mats = _specialized(rep, t0)
    d = rep.degree
    for label, m in mats:
        if q_matmul(m, m) != q_identity(d):
            raise NotInvolution(f"image of {label} at t = {format_rational(parse_rational(t0))} is not an involution")
    full = q_identity(d)
    spaces = {
        "column": [(_eigenspace(m, 1), _eigenspace(m, -1)) for _, m in mats],
        "row": [(_eigenspace(q_transpose(m), 1), _eigenspace(q_transpose(m), -1)) for _, m in mats],
    }
    labels = [label for label, _ in mats]

    def dfs(k: int, col: QMatrix, row: QMatrix, signs: List[int]):
        if k == len(mats):
            for side, sub in (("column", col), ("row", row)):
                if sub:
                    return InvariantLine(tuple(integer_vector(sub[0])), dict(zip(labels, signs)), side)
            return None
        for idx, sign in enumerate((1, -1)):
            c = intersect(col, spaces["column"][k][idx], d) if col else []
            r = intersect(row, spaces["row"][k][idx], d) if row else []
            if c or r:
                found = dfs(k + 1, c, r, signs + [sign])
                if found:
                    return found
        return None

    return dfs(0, full, full, [])


# ---------------------------------------------------------------------------
# generated algebra

def algebra_dimension(matrices: Sequence[QMatrix]) -> int:
    """Dimension of the algebra spanned by all products of the matrices (and I)."""
    mats = [[[Fraction(x) for x in row] for row in m] for m in matrices]
    if not mats:
        raise DegreeMismatch("need at least one matrix")
    d = len(mats[0])
    if any(len(m) != d or any(len(r) != d for r in m) for m in mats):
        raise DegreeMismatch("matrices must share one square degree")

    # incremental echelon basis on flattened matrices: pivot column -> row
    echelon: Dict[int, List[Fraction]] = {}

    def insert(m: QMatrix) -> bool:
        v = [x for row in m for x in row]
        for p in sorted(echelon):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, echelon[p])]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        for p, row in echelon.items():
            if row[piv]:
                f = row[piv]
                echelon[p] = [a - f * b for a, b in zip(row, v)]
        echelon[piv] = v
        return True

    queue = [q_identity(d)]
    insert(queue[0])
    while queue:
        b = queue.pop()
        for g in mats:
            prod = q_matmul(b, g)
            if insert(prod):
                queue.append(prod)
                if len(echelon) == d * d:
                    return d * d
    return len(echelon)


def irreducibility_predicate(n: int, t0) -> bool:
    """True when t0 is neither 2 nor (2n-2)/(n-2)."""
    t0 = parse_rational(t0)
    return t0 != 2 and t0 != Fraction(2 * n - 2, n - 2)


@dataclass(frozen=True)
class IrreducibilityVerdict:
    n: int
    t0: Fraction
    dim: int
    verdict: str  # "absolutely-irreducible" | "reducible"
    witness: Optional[InvariantLine] = None

    @property
    def irreducible(self) -> bool:
        return self.verdict == "absolutely-irreducible"

    def to_json(self) -> dict:
        return {"n": self.n, "t": format_rational(self.t0), "dim": self.dim,
                "verdict": self.verdict,
                "witness": self.witness.to_json() if self.witness else None}


def check_irreducibility_criterion(n: int, t0, rep: MatrixRep = None) -> IrreducibilityVerdict:
    """Decide irreducibility of the specialized composition factor from the
    dimension of the algebra its images generate, and compare with the
    predicate t0 not in {2, (2n-2)/(n-2)}."""
    if n < 3:
        raise ValueError("the criterion is stated for n >= 3")
    t0 = parse_rational(t0)
    if rep is None:
        rep = eta1_composition_factor(n)
    mats = [m for _, m in _specialized(rep, t0)]
    dim = algebra_dimension(mats)
    irreducible = dim == (n - 1) ** 2
    witness = None if irreducible else invariant_line_search(rep, t0)
    verdict = IrreducibilityVerdict(n, t0, dim, "absolutely-irreducible" if irreducible else "reducible", witness)
    if irreducible != irreducibility_predicate(n, t0):
        raise CriterionMismatch(
            f"n={n}, t={format_rational(t0)}: algebra dimension {dim} "
            f"but predicate says {'irreducible' if irreducibility_predicate(n, t0) else 'reducible'}")
    return verdict


# ---------------------------------------------------------------------------
# kernels

def kernel_search(rep: MatrixRep, maxlen: int) -> List[TwinWord]:
    """Nontrivial elements of T_n of length <= maxlen mapped to the identity."""
    if rep.kind != "T":
        raise KindMismatch("kernel search enumerates T_n only")
    products: Dict[Tuple, Matrix] = {(): Matrix.identity(rep.degree)}
    hits = []
    for w in enumerate_T_elements(rep.n, maxlen):
        if not w.letters:
            continue
        # normal forms are prefix-closed under the (length, lex) enumeration
        prefix = w.letters[:-1]
        base = products.get(prefix)
        m = evaluate_word(rep, w) if base is None else base @ rep.images[w.letters[-1]]
        products[w.letters] = m
        if m.is_identity():
            hits.append(w)
    return hits


# ---------------------------------------------------------------------------
# T_2 classification

def classify_involution_2x2(m: Matrix) -> int:
    """Which of the five rho_1 families a 2x2 involution belongs to."""
    if m.degree != 2:
        raise DegreeMismatch("expected a 2x2 matrix")
    if not (m @ m).is_identity():
        raise NotInvolution("matrix does not square to the identity")
    if m.is_identity():
        return 5
    if (-m).is_identity():
        return 4
    a, b = m[0, 0], m[0, 1]
    if a + m[1, 1] != RAT_ZERO:
        raise UnclassifiableInvolution(f"trace {a + m[1, 1]} is nonzero")
    if b != RAT_ZERO:
        return 1
    if a == RAT_ONE:
        return 2
    if a == -RAT_ONE:
        return 3
    raise UnclassifiableInvolution(f"upper-left entry {a} is not +-1")


# ---------------------------------------------------------------------------
# WT_n obstruction

@dataclass(frozen=True)
class WTObstruction:
    n: int
    b: str
    obstructed: bool
    witness: Optional[dict]
    checks: Tuple[dict, ...] = field(default=())

    def to_json(self) -> dict:
        return {"n": self.n, "b": self.b, "obstructed": self.obstructed,
                "witness": self.witness, "checks": list(self.checks)}


def wt_obstruction_check(n: int, b=1) -> WTObstruction:
    """Test the WT_n relations (8), (8') and the variant
    rho_i s_{i+1} s_i = s_{i+1} rho_i rho_{i+1} on the VT_n extension of eta_1."""
    rep = vt_extension_eta1(n, b)
    pres = build_presentation("WT", n)
    checks = []
    witness = None
    variants = [rel for rel in pres.relations if rel.label.startswith(("(8)", "(8')"))]
    for i in range(1, n - 1):
        lhs = TwinWord("WT", n, (("r", i), ("s", i + 1), ("s", i)))
        rhs = TwinWord("WT", n, (("s", i + 1), ("r", i), ("r", i + 1)))
        variants.append(type(variants[0])(f"(8*) i={i}", lhs, rhs))
    for rel in variants:
        lhs, rhs = evaluate_word(rep, rel.lhs), evaluate_word(rep, rel.rhs)
        diff = lhs.first_difference(rhs)
        entry = None
        if diff is not None:
            r, c = diff
            entry = {"row": r + 1, "col": c + 1, "lhs": str(lhs[r, c]), "rhs": str(rhs[r, c])}
        checks.append({"relation": str(rel), "holds": diff is None, "entry": entry})
        # the obstruction is relation (8) itself
        if witness is None and diff is not None and rel.label.startswith("(8)"):
            witness = {"relation": str(rel), **entry}
    return WTObstruction(n, str(rep.descriptor["params"]["b"]), witness is not None, witness, tuple(checks))
