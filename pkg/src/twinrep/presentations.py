"""Presentations of the twin group T_n, the virtual twin group VT_n and the
welded twin group WT_n, plus a normal form for T_n.

T_n is the right-angled Coxeter group on s_1..s_{n-1} in which s_i and s_j
commute exactly when |i - j| >= 2.  Its word problem is solved by
cancelling s_i ... s_i pairs whose middle commutes with s_i, then taking
the lexicographically least word of the commutation class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .errors import BadStrandCount, IndexOutOfRange, KindMismatch, ParseError

KINDS = ("T", "VT", "WT")

Letter = Tuple[str, int]  # ("s", i) or ("r", i)


def _check_kind(kind: str) -> str:
    kind = kind.upper()
    if kind not in KINDS:
        raise ValueError(f"unknown group kind {kind!r}; expected one of {KINDS}")
    return kind


@dataclass(frozen=True)
class TwinWord:
    kind: str
    n: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", _check_kind(self.kind))
        if self.n < 2:
            raise BadStrandCount(f"need n >= 2, got {self.n}")
        letters = tuple((str(g), int(i)) for g, i in self.letters)
        for g, i in letters:
            if g not in ("s", "r"):
                raise ValueError(f"unknown generator {g!r}")
            if g == "r" and self.kind == "T":
                raise KindMismatch("rho letters are not allowed in T_n")
            if not 1 <= i <= self.n - 1:
                raise IndexOutOfRange(f"generator index {i} not in 1..{self.n - 1}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, kind: str, n: int, text: str) -> "TwinWord":
        """Whitespace-separated letters, e.g. ``"s1 s2 r1"``; ``r`` is rho."""
        letters = []
        pos = 0
        for tok in text.split():
            pos = text.index(tok, pos)
            if len(tok) < 2 or tok[0] not in "sr" or not tok[1:].isdigit():
                raise ParseError(f"bad letter {tok!r}", text, pos)
            letters.append((tok[0], int(tok[1:])))
            pos += len(tok)
        return cls(kind, n, tuple(letters))

    @classmethod
    def from_json(cls, kind: str, n: int, data: Sequence[dict]) -> "TwinWord":
        return cls(kind, n, tuple((d["gen"], d["i"]) for d in data))

    def to_json(self) -> List[dict]:
        return [{"gen": g, "i": i} for g, i in self.letters]

    def __add__(self, other: "TwinWord") -> "TwinWord":
        if (self.kind, self.n) != (other.kind, other.n):
            raise KindMismatch(f"{self.kind}_{self.n} vs {other.kind}_{other.n}")
        return TwinWord(self.kind, self.n, self.letters + other.letters)

    def __mul__(self, k: int) -> "TwinWord":
        return TwinWord(self.kind, self.n, self.letters * k)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"{g}{i}" for g, i in self.letters)


def s_word(n: int, *indices: int, kind: str = "T") -> TwinWord:
    return TwinWord(kind, n, tuple(("s", i) for i in indices))


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: TwinWord
    rhs: TwinWord

    def __str__(self):
        return f"{self.label}: {self.lhs or '1'} = {self.rhs or '1'}"


@dataclass(frozen=True)
class Presentation:
    kind: str
    n: int
    generators: Tuple[str, ...]
    relations: Tuple[Relation, ...] = field(default=())

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.n}"


def build_presentation(kind: str, n: int) -> Presentation:
    """Full relation list of T_n, VT_n or WT_n.

    Besides relations (1)-(8) the list carries the alternative forms of
    (7) and (8) that are quoted next to them, labelled ``(7')``/``(8')``.
    """
    kind = _check_kind(kind)
    if n < 2:
        raise BadStrandCount(f"need n >= 2, got {n}")

    def w(*letters):
        return TwinWord(kind, n, letters)

    s = lambda i: ("s", i)
    r = lambda i: ("r", i)
    m = n - 1
    rels: List[Relation] = []
    for i in range(1, m + 1):
        rels.append(Relation(f"(1) i={i}", w(s(i), s(i)), w()))
    for i in range(1, m + 1):
        for j in range(i + 2, m + 1):
            rels.append(Relation(f"(2) i={i},j={j}", w(s(i), s(j)), w(s(j), s(i))))
    gens = [f"s{i}" for i in range(1, m + 1)]
    if kind in ("VT", "WT"):
        gens += [f"r{i}" for i in range(1, m + 1)]
        for i in range(1, m):
            rels.append(Relation(f"(3) i={i}", w(r(i), r(i + 1), r(i)), w(r(i + 1), r(i), r(i + 1))))
        for i in range(1, m + 1):
            for j in range(i + 2, m + 1):
                rels.append(Relation(f"(4) i={i},j={j}", w(r(i), r(j)), w(r(j), r(i))))
        for i in range(1, m + 1):
            rels.append(Relation(f"(5) i={i}", w(r(i), r(i)), w()))
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if abs(i - j) >= 2:
                    rels.append(Relation(f"(6) i={i},j={j}", w(s(i), r(j)), w(r(j), s(i))))
        for i in range(1, m):
            rels.append(Relation(f"(7) i={i}", w(r(i), r(i + 1), s(i)), w(s(i + 1), r(i), r(i + 1))))
            rels.append(Relation(f"(7') i={i}", w(r(i + 1), r(i), s(i + 1)), w(s(i), r(i + 1), r(i))))
    if kind == "WT":
        for i in range(1, m):
            rels.append(Relation(f"(8) i={i}", w(r(i), s(i + 1), s(i)), w(s(i + 1), s(i), r(i + 1))))
            rels.append(Relation(f"(8') i={i}", w(s(i + 1), r(i), r(i + 1)), w(r(i), r(i + 1), s(i))))
    return Presentation(kind, n, tuple(gens), tuple(rels))


# ---------------------------------------------------------------------------
# word problem in T_n

def _commute(i: int, j: int) -> bool:
    return abs(i - j) >= 2


def _reduce_indices(indices: Iterable[int]) -> List[int]:
    """Geodesic word for the element: each new s_i cancels the last s_i
    it can be shuffled next to, otherwise it is appended."""
    out: List[int] = []
    for i in indices:
        k = len(out) - 1
        while k >= 0 and out[k] != i and _commute(out[k], i):
            k -= 1
        if k >= 0 and out[k] == i:
            del out[k]
        else:
            out.append(i)
    return out


def _lex_least(indices: List[int]) -> List[int]:
    # greedy: repeatedly emit the least letter that can be moved to the front
    rest = list(indices)
    out: List[int] = []
    while rest:
        best = None
        for pos, i in enumerate(rest):
            if all(_commute(j, i) for j in rest[:pos]) and (best is None or i < rest[best]):
                best = pos
        out.append(rest.pop(best))
    return out


def normal_form_T(w: TwinWord) -> TwinWord:
    if w.kind != "T":
        raise KindMismatch(f"normal form only defined for T_n, got {w.kind}_{w.n}")
    idx = _lex_least(_reduce_indices(i for _, i in w.letters))
    return TwinWord("T", w.n, tuple(("s", i) for i in idx))


def words_equal_in_T(u: TwinWord, v: TwinWord) -> bool:
    if u.kind != "T" or v.kind != "T" or u.n != v.n:
        raise KindMismatch(f"{u.kind}_{u.n} vs {v.kind}_{v.n}")
    return normal_form_T(u) == normal_form_T(v)


def enumerate_T_elements(n: int, maxlen: int) -> List[TwinWord]:
    """One normal form per element of T_n of length <= maxlen, sorted by
    (length, lexicographic)."""
    if n < 2:
        raise BadStrandCount(f"need n >= 2, got {n}")
    if maxlen < 0:
        raise ValueError("maxlen must be >= 0")
    layer = {()}
    found = [()]
    for length in range(1, maxlen + 1):
        nxt = set()
        for word in layer:
            for i in range(1, n):
                cand = tuple(_lex_least(_reduce_indices(word + (i,))))
                if len(cand) == length:
                    nxt.add(cand)
        if not nxt:
            break
        found.extend(sorted(nxt))
        layer = nxt
    return [TwinWord("T", n, tuple(("s", i) for i in word)) for word in found]
