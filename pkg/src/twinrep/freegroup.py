"""Free groups F_n, their automorphisms, the group ring Z[F_n] and Fox calculus.

A letter is a nonzero int: ``k`` stands for x_k and ``-k`` for x_k^-1.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .errors import IndexOutOfRange, ParseError, RankMismatch
from .ring import LaurentPoly

__all__ = [
    "FreeWord",
    "FreeAut",
    "GroupRingElt",
    "reduce_word",
    "fox_derivative",
    "jacobian_matrix",
    "magnus_specialize",
    "parse_word",
    "parse_automorphism",
]


def _letter_key(a: int) -> Tuple[int, int]:
    # x1 < x1^-1 < x2 < x2^-1 < ...
    return (abs(a), 0 if a > 0 else 1)


def reduce_word(letters: Iterable[int], rank: int) -> "FreeWord":
    """Freely reduce a raw letter sequence."""
    stack: List[int] = []
    for a in letters:
        a = int(a)
        if a == 0 or abs(a) > rank:
            raise IndexOutOfRange(f"generator index {abs(a)} not in 1..{rank}")
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return FreeWord._raw(rank, tuple(stack))


class FreeWord:
    """Freely reduced word in x_1, ..., x_rank."""

    __slots__ = ("rank", "letters")

    def __init__(self, rank: int, letters: Iterable[int] = ()):
        if rank < 1:
            raise ValueError("rank must be positive")
        w = reduce_word(letters, rank)
        self.rank = rank
        self.letters = w.letters

    @classmethod
    def _raw(cls, rank: int, letters: Tuple[int, ...]) -> "FreeWord":
        obj = object.__new__(cls)
        obj.rank = rank
        obj.letters = letters
        return obj

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls._raw(rank, ())

    @classmethod
    def gen(cls, rank: int, k: int, exp: int = 1) -> "FreeWord":
        if not 1 <= k <= rank:
            raise IndexOutOfRange(f"generator index {k} not in 1..{rank}")
        return cls._raw(rank, (k if exp > 0 else -k,) * abs(exp))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def _check(self, other: "FreeWord"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")

    def __mul__(self, other):
        if isinstance(other, GroupRingElt):
            return GroupRingElt.from_word(self) * other
        if not isinstance(other, FreeWord):
            return NotImplemented
        self._check(other)
        a, b = self.letters, other.letters
        k = 0
        while k < len(a) and k < len(b) and a[-1 - k] == -b[k]:
            k += 1
        return FreeWord._raw(self.rank, a[: len(a) - k] + b[k:])

    def inverse(self) -> "FreeWord":
        return FreeWord._raw(self.rank, tuple(-a for a in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = FreeWord.identity(self.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def sort_key(self):
        return (len(self.letters), tuple(_letter_key(a) for a in self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        # group runs into powers
        parts = []
        i = 0
        while i < len(self.letters):
            a = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == a:
                j += 1
            e = (j - i) * (1 if a > 0 else -1)
            parts.append(f"x{abs(a)}" if e == 1 else f"x{abs(a)}^{e}")
            i = j
        return "*".join(parts)

    def __repr__(self):
        return f"FreeWord({self.rank}, {str(self)!r})"


_FACTOR = re.compile(r"\s*x(\d+)(?:\s*\^\s*(-?\d+))?\s*")


def parse_word(s: str, rank: int) -> FreeWord:
    """Parse ``"x1*x2^-1*x1"``; ``"1"`` is the identity."""
    text = s.strip()
    if text in ("1", ""):
        return FreeWord.identity(rank)
    letters: List[int] = []
    pos = 0
    for chunk in s.split("*"):
        m = _FACTOR.fullmatch(chunk)
        if not m:
            raise ParseError("expected a factor like x3 or x3^-2", s, pos)
        k, e = int(m.group(1)), int(m.group(2) or 1)
        if not 1 <= k <= rank:
            raise IndexOutOfRange(f"generator index {k} not in 1..{rank}")
        letters.extend([k if e > 0 else -k] * abs(e))
        pos += len(chunk) + 1
    return reduce_word(letters, rank)


class FreeAut:
    """Endomorphism of F_n given by the images of x_1, ..., x_n."""

    __slots__ = ("rank", "images")

    def __init__(self, images: Sequence[FreeWord]):
        images = tuple(images)
        if not images:
            raise ValueError("need at least one generator image")
        rank = len(images)
        for w in images:
            if w.rank != rank:
                raise RankMismatch(f"image {w} has rank {w.rank}, expected {rank}")
        self.rank = rank
        self.images = images

    @classmethod
    def identity(cls, rank: int) -> "FreeAut":
        return cls([FreeWord.gen(rank, k) for k in range(1, rank + 1)])

    def __call__(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise RankMismatch(f"word of rank {w.rank} given to automorphism of rank {self.rank}")
        out = FreeWord.identity(self.rank)
        for a in w.letters:
            img = self.images[abs(a) - 1]
            out = out * (img if a > 0 else img.inverse())
        return out

    def compose(self, other: "FreeAut") -> "FreeAut":
        """``self.compose(other)`` is the map w -> self(other(w))."""
        if other.rank != self.rank:
            raise RankMismatch("ranks differ")
        return FreeAut([self(img) for img in other.images])

    def is_identity(self) -> bool:
        return all(img.letters == (k,) for k, img in enumerate(self.images, 1))

    def __eq__(self, other):
        if not isinstance(other, FreeAut):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return "\n".join(f"x{k} -> {img}" for k, img in enumerate(self.images, 1))

    def __repr__(self):
        return f"FreeAut({[str(w) for w in self.images]})"


def parse_automorphism(text: str, rank: int = None) -> FreeAut:
    """Read lines ``xi -> word``; the rank defaults to the number of lines."""
    rows: Dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"x(\d+)\s*->\s*(.+)", line)
        if not m:
            raise ParseError(f"line {lineno}: expected 'xi -> word'", raw, 0)
        k = int(m.group(1))
        if k in rows:
            raise ParseError(f"line {lineno}: duplicate image for x{k}", raw, 0)
        rows[k] = m.group(2)
    if rank is None:
        rank = max(len(rows), max(rows, default=0))
    for k in range(1, rank + 1):
        rows.setdefault(k, f"x{k}")
    if max(rows) > rank:
        raise IndexOutOfRange(f"image given for x{max(rows)} but rank is {rank}")
    return FreeAut([parse_word(rows[k], rank) for k in range(1, rank + 1)])


class GroupRingElt:
    """Finite Z-linear combination of reduced words in F_n."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Union[Dict[FreeWord, int], Iterable[Tuple[FreeWord, int]]] = ()):
        acc: Dict[FreeWord, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            if w.rank != rank:
                raise RankMismatch(f"word {w} has rank {w.rank}, expected {rank}")
            acc[w] = acc.get(w, 0) + c
        self.rank = rank
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def from_word(cls, w: FreeWord, c: int = 1) -> "GroupRingElt":
        return cls(w.rank, {w: c})

    @classmethod
    def scalar(cls, rank: int, c: int) -> "GroupRingElt":
        return cls(rank, {FreeWord.identity(rank): c})

    def _coerce(self, other):
        if isinstance(other, GroupRingElt):
            if other.rank != self.rank:
                raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")
            return other
        if isinstance(other, FreeWord):
            if other.rank != self.rank:
                raise RankMismatch(f"rank {self.rank} vs rank {other.rank}")
            return GroupRingElt.from_word(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElt.scalar(self.rank, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElt(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElt(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[FreeWord, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u * v
                out[w] = out.get(w, 0) + a * b
        return GroupRingElt(self.rank, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, GroupRingElt) else other
        if other is NotImplemented:
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, w in enumerate(sorted(self.terms)):
            c = self.terms[w]
            mag = abs(c)
            if w.is_identity():
                body = str(mag)
            else:
                body = str(w) if mag == 1 else f"{mag}*{w}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"GroupRingElt({self.rank}, {str(self)!r})"


def fox_derivative(w: Union[FreeWord, GroupRingElt], k: int) -> GroupRingElt:
    """Fox derivative of a word (or group-ring element) with respect to x_k.

    For a word a_1 ... a_m the product rule unrolls to a sum over the
    positions j: a letter x_k contributes the prefix a_1 ... a_{j-1}, a
    letter x_k^-1 contributes minus the prefix a_1 ... a_j.
    """
    if not 1 <= k <= w.rank:
        raise IndexOutOfRange(f"generator index {k} not in 1..{w.rank}")
    if isinstance(w, GroupRingElt):
        out: Dict[FreeWord, int] = {}
        for word, c in w.terms.items():
            for u, d in fox_derivative(word, k).terms.items():
                out[u] = out.get(u, 0) + c * d
        return GroupRingElt(w.rank, out)
    acc: Dict[FreeWord, int] = {}
    letters = w.letters
    for j, a in enumerate(letters):
        if a == k:
            u = FreeWord._raw(w.rank, letters[:j])
            acc[u] = acc.get(u, 0) + 1
        elif a == -k:
            u = FreeWord._raw(w.rank, letters[: j + 1])
            acc[u] = acc.get(u, 0) - 1
    return GroupRingElt(w.rank, acc)


def jacobian_matrix(phi: FreeAut) -> List[List[GroupRingElt]]:
    """Entry (r, k) is the Fox derivative of phi(x_r) with respect to x_k."""
    return [[fox_derivative(img, k) for k in range(1, phi.rank + 1)] for img in phi.images]


def magnus_specialize(e):
    """Send every x_k to t: a word goes to t^(exponent sum).

    Accepts a FreeWord, a GroupRingElt, or a (nested) list of them.
    """
    if isinstance(e, FreeWord):
        return LaurentPoly.monomial(e.exponent_sum())
    if isinstance(e, GroupRingElt):
        out: Dict[int, int] = {}
        for w, c in e.terms.items():
            s = w.exponent_sum()
            out[s] = out.get(s, 0) + c
        return LaurentPoly(out)
    if isinstance(e, (list, tuple)):
        return [magnus_specialize(x) for x in e]
    raise TypeError(f"cannot specialize {type(e).__name__}")
