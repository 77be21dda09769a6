"""Small immutable square matrices over Q(t) and exact rational linear algebra."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DegreeMismatch
from .ring import RAT_ONE, RAT_ZERO, RatFunc, as_ratfunc


class Matrix:
    """Square matrix with RatFunc entries."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_ratfunc(x) for x in row) for row in rows)
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise DegreeMismatch("matrix must be square")
        self.rows = rows
        self._hash = None

    @classmethod
    def identity(cls, d: int) -> "Matrix":
        return cls([[RAT_ONE if i == j else RAT_ZERO for j in range(d)] for i in range(d)])

    @classmethod
    def embed(cls, d: int, block: Sequence[Sequence], at: int) -> "Matrix":
        """Identity of size d with ``block`` placed with its corner at (at, at), 0-based."""
        rows = [[RAT_ONE if i == j else RAT_ZERO for j in range(d)] for i in range(d)]
        for a, brow in enumerate(block):
            for b, x in enumerate(brow):
                rows[at + a][at + b] = x
        return cls(rows)

    @property
    def degree(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        d = self.degree
        if other.degree != d:
            raise DegreeMismatch(f"{d}x{d} times {other.degree}x{other.degree}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if x]
            out_row = []
            for col in cols:
                acc = RAT_ZERO
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix._trusted(tuple(out))

    @classmethod
    def _trusted(cls, rows) -> "Matrix":
        obj = object.__new__(cls)
        obj.rows = rows
        obj._hash = None
        return obj

    def __neg__(self):
        return Matrix._trusted(tuple(tuple(-x for x in r) for r in self.rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix._trusted(tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def transpose(self) -> "Matrix":
        return Matrix._trusted(tuple(zip(*self.rows)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_identity(self) -> bool:
        return all(x == (RAT_ONE if i == j else RAT_ZERO)
                   for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def minor(self, keep: int) -> "Matrix":
        """Leading keep x keep submatrix."""
        return Matrix._trusted(tuple(r[:keep] for r in self.rows[:keep]))

    def det(self) -> RatFunc:
        """Determinant by Gaussian elimination over Q(t)."""
        a = [list(r) for r in self.rows]
        d = len(a)
        det = RAT_ONE
        for c in range(d):
            p = next((r for r in range(c, d) if a[r][c]), None)
            if p is None:
                return RAT_ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            piv = a[c][c]
            det = det * piv
            inv = piv.inv()
            for r in range(c + 1, d):
                if a[r][c]:
                    f = a[r][c] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def specialize(self, t0) -> List[List[Fraction]]:
        return [[x.eval(t0) for x in r] for r in self.rows]

    def first_difference(self, other: "Matrix") -> Optional[Tuple[int, int]]:
        for i, (r, s) in enumerate(zip(self.rows, other.rows)):
            for j, (x, y) in enumerate(zip(r, s)):
                if x != y:
                    return i, j
        return None

    def to_json(self) -> dict:
        return {"degree": self.degree, "entries": [[str(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data) -> "Matrix":
        if isinstance(data, dict):
            m = cls(data["entries"])
            if "degree" in data and data["degree"] != m.degree:
                raise DegreeMismatch(f"declared degree {data['degree']} but got {m.degree}")
            return m
        return cls(data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def format(self) -> str:
        cells = [[str(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]})"


# ---------------------------------------------------------------------------
# exact linear algebra over Q on lists of Fractions

QMatrix = List[List[Fraction]]


def q_identity(d: int) -> QMatrix:
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def q_matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)) for c in cols] for r in a]


def q_sub(a: QMatrix, b: QMatrix) -> QMatrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def q_transpose(a: QMatrix) -> QMatrix:
    return [list(c) for c in zip(*a)]


def rref(rows: QMatrix) -> Tuple[QMatrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(map(Fraction, r)) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows: QMatrix, ncols: int) -> QMatrix:
    """Basis of {v : A v = 0}, one vector per free column in increasing order."""
    if not rows:
        return q_identity(ncols)
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def rank(rows: QMatrix) -> int:
    return len(rref(rows)[1]) if rows else 0


def intersect(basis_a: QMatrix, basis_b: QMatrix, dim: int) -> QMatrix:
    """Basis (in RREF) of span(basis_a) & span(basis_b)."""
    if not basis_a or not basis_b:
        return []
    # v in both spans iff v is orthogonal to both annihilators
    ann_a = nullspace(basis_a, dim)
    ann_b = nullspace(basis_b, dim)
    out = nullspace(ann_a + ann_b, dim)
    return rref(out)[0] if out else []


def integer_vector(v: Sequence[Fraction]) -> List[int]:
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    from math import gcd

    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    first = next(x for x in ints if x)
    if first < 0:
        g = -g
    return [x // g for x in ints]
