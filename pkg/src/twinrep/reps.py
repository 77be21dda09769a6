"""Constructions of the representations eta_1, eta_1', eta_2 and their
2-local extensions to VT_n and WT_n."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from .errors import (
    BadFamilyTag,
    BadStrandCount,
    BlockStructureViolation,
    DegreeMismatch,
    IndexOutOfRange,
    KindMismatch,
    ZeroScalar,
)
from .freegroup import FreeAut, FreeWord
from .matrix import Matrix
from .presentations import Letter, TwinWord
from .ring import RAT_ONE, RAT_ZERO, T, RatFunc, as_ratfunc

__all__ = [
    "MatrixRep",
    "eta1_automorphism",
    "eta1_matrix",
    "eta1_composition_factor",
    "eta2_matrix",
    "vt_extension_eta1",
    "two_local_family_T2",
    "vt_wt_extension_eta2",
    "evaluate_word",
    "from_descriptor",
    "ETA1_BLOCK",
]

ETA1_BLOCK = ((1 - T, T), (2 - T, T - 1))


@dataclass(frozen=True)
class MatrixRep:
    kind: str
    n: int
    degree: int
    images: Dict[Letter, Matrix]
    descriptor: dict = field(default_factory=dict, compare=False)
    two_local: bool = False

    def __post_init__(self):
        for letter, m in self.images.items():
            if m.degree != self.degree:
                raise DegreeMismatch(f"image of {letter} has degree {m.degree}, expected {self.degree}")
            if m.det().is_zero():
                raise ValueError(f"image of {letter[0]}{letter[1]} is singular")
        if self.two_local:
            for (g, i), m in self.images.items():
                if not is_two_local(m, i):
                    raise BlockStructureViolation(f"{g}{i} image is not 2-local at block ({i}, {i + 1})")

    def generators(self):
        return sorted(self.images, key=lambda x: (x[0] != "s", x[1]))

    def image(self, letter: Letter) -> Matrix:
        return self.images[letter]

    def specialize(self, t0):
        return {g: self.images[g].specialize(t0) for g in self.generators()}

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "kind": self.kind,
            "n": self.n,
            "degree": self.degree,
            "images": {f"{g}{i}": self.images[(g, i)].to_json() for g, i in self.generators()},
        }


def is_two_local(m: Matrix, i: int) -> bool:
    """Differs from the identity only inside rows/columns i, i+1 (1-based)."""
    block = {i - 1, i}
    for r, row in enumerate(m.rows):
        for c, x in enumerate(row):
            if r in block and c in block:
                continue
            if x != (RAT_ONE if r == c else RAT_ZERO):
                return False
    return True


def _check_n(n: int, least: int = 2):
    if not isinstance(n, int) or n < least:
        raise BadStrandCount(f"need n >= {least}, got {n}")


def _nonzero(x, name: str) -> RatFunc:
    x = as_ratfunc(x)
    if x.is_zero():
        raise ZeroScalar(f"parameter {name} must be nonzero")
    return x


def _homogeneous(kind, n, blocks: Dict[str, tuple], descriptor) -> MatrixRep:
    images = {}
    for g, block in blocks.items():
        for i in range(1, n):
            images[(g, i)] = Matrix.embed(n, block, i - 1)
    return MatrixRep(kind, n, n, images, descriptor, two_local=True)


# ---------------------------------------------------------------------------
# eta_1

def eta1_automorphism(n: int, i: int) -> FreeAut:
    """The automorphism eta_1(s_i) of F_n:

    x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i x_{i+1}^-1 x_i x_{i+1} x_i^-1,
    every other generator fixed.
    """
    _check_n(n)
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} not in 1..{n - 1}")
    images = [FreeWord.gen(n, k) for k in range(1, n + 1)]
    images[i - 1] = FreeWord(n, [i, i + 1, -i])
    images[i] = FreeWord(n, [i, -(i + 1), i, i + 1, -i])
    phi = FreeAut(images)
    if not phi.compose(phi).is_identity():
        raise AssertionError(f"eta_1(s_{i}) is not an involution")
    return phi


def eta1_matrix(n: int) -> MatrixRep:
    _check_n(n)
    return _homogeneous("T", n, {"s": ETA1_BLOCK}, {"rep": "eta1", "n": n, "params": {}})


def _basis_change(n: int):
    # columns v_1..v_n with v_j = e_j (j < n) and v_n = e_1 + ... + e_n
    p = [[RAT_ONE if (r == c or c == n - 1) else RAT_ZERO for c in range(n)] for r in range(n)]
    p_inv = [[RAT_ONE if r == c else (-RAT_ONE if (c == n - 1 and r < n - 1) else RAT_ZERO)
              for c in range(n)] for r in range(n)]
    return Matrix(p), Matrix(p_inv)


def eta1_composition_factor(n: int, form: str = "display") -> MatrixRep:
    """Degree n-1 factor of eta_1 obtained from the invariant all-ones vector.

    Each eta_1(s_i) is conjugated into the basis e_1, ..., e_{n-1},
    (1, ..., 1); the last column of the result must be e_n, and dropping
    the last row and column gives the action on the quotient by the
    all-ones line.  On the quotient, s_{n-1} is the identity except for
    the last *column* (t-2, ..., t-2, -1).

    ``form="quotient"`` returns exactly these matrices.  ``form="display"``
    (the default) agrees on s_1..s_{n-2} but puts that vector in the last
    *row* of s_{n-1}, i.e. transposes it.  The irreducibility criterion in
    :mod:`twinrep.analysis` is checked against the ``"display"`` matrices;
    for n >= 4 they no longer satisfy the commutation relations of T_n.
    """
    _check_n(n)
    if form not in ("display", "quotient"):
        raise ValueError(f"form must be 'display' or 'quotient', got {form!r}")
    p, p_inv = _basis_change(n)
    if not (p @ p_inv).is_identity():
        raise BlockStructureViolation("basis change is not invertible")
    base = eta1_matrix(n)
    d = n - 1
    images = {}
    for i in range(1, n):
        q = p_inv @ base.images[("s", i)] @ p
        last_col = [q[r, n - 1] for r in range(n)]
        if last_col != [RAT_ZERO] * (n - 1) + [RAT_ONE]:
            raise BlockStructureViolation(f"s{i}: all-ones vector not fixed after basis change")
        a = q.minor(d)
        if i <= n - 2:
            expected = Matrix.embed(d, ETA1_BLOCK, i - 1)
        else:
            expected = Matrix([[RAT_ONE if r == c else RAT_ZERO for c in range(d - 1)]
                               + [as_ratfunc(T - 2) if r < d - 1 else -RAT_ONE]
                               for r in range(d)])
        if a != expected:
            raise BlockStructureViolation(f"s{i}: quotient matrix\n{a}\ndoes not match\n{expected}")
        if form == "display" and i == n - 1:
            a = a.transpose()
        images[("s", i)] = a
    return MatrixRep("T", n, d, images, {"rep": "eta1p", "n": n, "params": {"form": form}})


# ---------------------------------------------------------------------------
# eta_2 and the extensions

def eta2_matrix(n: int, f=1) -> MatrixRep:
    _check_n(n)
    f = _nonzero(f, "f")
    block = ((RAT_ZERO, f), (f.inv(), RAT_ZERO))
    return _homogeneous("T", n, {"s": block}, {"rep": "eta2", "n": n, "params": {"f": str(f)}})


def vt_extension_eta1(n: int, b=1) -> MatrixRep:
    """The 2-local extension of eta_1 to VT_n with rho-block [[0, b], [1/b, 0]]."""
    _check_n(n, 3)
    b = _nonzero(b, "b")
    rho = ((RAT_ZERO, b), (b.inv(), RAT_ZERO))
    return _homogeneous("VT", n, {"s": ETA1_BLOCK, "r": rho},
                        {"rep": "vt1", "n": n, "params": {"b": str(b)}})


def t2_family_block(family: int, a=None, b=None, c=None):
    if family == 1:
        if a is None or b is None:
            raise ValueError("family 1 needs parameters a and b")
        a = as_ratfunc(a)
        b = _nonzero(b, "b")
        return ((a, b), ((1 - a * a) / b, -a))
    if family in (2, 3):
        c = as_ratfunc(0 if c is None else c)
        sign = 1 if family == 2 else -1
        return ((as_ratfunc(sign), RAT_ZERO), (c, as_ratfunc(-sign)))
    if family == 4:
        return ((-RAT_ONE, RAT_ZERO), (RAT_ZERO, -RAT_ONE))
    if family == 5:
        return ((RAT_ONE, RAT_ZERO), (RAT_ZERO, RAT_ONE))
    raise BadFamilyTag(f"family must be 1..5, got {family!r}")


def two_local_family_T2(family: int, a=None, b=None, c=None) -> MatrixRep:
    """Extension of eta_1 to VT_2 (= WT_2) with rho_1 from one of the five families."""
    rho = t2_family_block(family, a, b, c)
    params = {"family": family}
    for name, val in (("a", a), ("b", b), ("c", c)):
        if val is not None:
            params[name] = str(as_ratfunc(val))
    images = {("s", 1): Matrix(ETA1_BLOCK), ("r", 1): Matrix(rho)}
    return MatrixRep("VT", 2, 2, images, {"rep": "t2fam", "n": 2, "params": params}, two_local=True)


def vt_wt_extension_eta2(n: int, f=1, g=1, kind: str = "VT") -> MatrixRep:
    _check_n(n, 3)
    kind = kind.upper()
    if kind not in ("VT", "WT"):
        raise KindMismatch(f"extension target must be VT or WT, got {kind}")
    f = _nonzero(f, "f")
    g = _nonzero(g, "g")
    return _homogeneous(
        kind, n,
        {"s": ((RAT_ZERO, f), (f.inv(), RAT_ZERO)), "r": ((RAT_ZERO, g), (g.inv(), RAT_ZERO))},
        {"rep": "vtwt2", "n": n, "params": {"f": str(f), "g": str(g), "kind": kind}},
    )


# ---------------------------------------------------------------------------

def evaluate_word(rep: MatrixRep, w: TwinWord) -> Matrix:
    """Ordered product of generator images.  Every generator is an
    involution, so no inverse letters arise."""
    if w.n != rep.n:
        raise KindMismatch(f"word over {w.kind}_{w.n} given to a representation of {rep.kind}_{rep.n}")
    out: Optional[Matrix] = None
    for letter in w.letters:
        m = rep.images.get(letter)
        if m is None:
            raise KindMismatch(f"no image for {letter[0]}{letter[1]} in a {rep.kind}_{rep.n} representation")
        out = m if out is None else out @ m
    return Matrix.identity(rep.degree) if out is None else out


_BUILDERS = {
    "eta1": lambda n, p: eta1_matrix(n),
    "eta1p": lambda n, p: eta1_composition_factor(n, p.get("form", "display")),
    "eta2": lambda n, p: eta2_matrix(n, p.get("f", "1")),
    "vt1": lambda n, p: vt_extension_eta1(n, p.get("b", "1")),
    "t2fam": lambda n, p: two_local_family_T2(int(p.get("family", 0)), p.get("a"), p.get("b"), p.get("c")),
    "vtwt2": lambda n, p: vt_wt_extension_eta2(n, p.get("f", "1"), p.get("g", "1"), p.get("kind", "VT")),
}

REP_NAMES = tuple(_BUILDERS)


def from_descriptor(desc: dict) -> MatrixRep:
    """Build a representation from ``{"rep": name, "n": int, "params": {...}}``."""
    name = desc.get("rep")
    if name not in _BUILDERS:
        raise ValueError(f"unknown representation {name!r}; expected one of {REP_NAMES}")
    n = int(desc.get("n", 2))
    params = desc.get("params") or {}
    if name == "t2fam" and n != 2:
        raise BadStrandCount("the T_2 families live on n = 2")
    return _BUILDERS[name](n, params)
