"""Permutation groups on {1..d}: stabilizer chains, classification, centralizers.

Permutations are stored 0-based as image tuples; the text form uses the
usual 1-based cycle notation ``(1 2 3)(4 5)``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_CHAIN_DEGREE = 16
MAX_CENTRALIZER_DEGREE = 8


class PermutationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise PermutationError(f"not a bijection: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], d: int) -> "Permutation":
        """Build from 1-based cycles."""
        img = list(range(d))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [c - 1 for c in cyc]
            if any(c < 0 or c >= d for c in cyc) or seen & set(cyc) or len(set(cyc)) != len(cyc):
                raise PermutationError(f"bad cycle {cyc} for degree {d}")
            seen |= set(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, d: int) -> "Permutation":
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(d)
        if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\))+", text.replace(",", " ")):
            raise PermutationError(f"bad cycle notation {text!r}")
        cycles = [[int(k) for k in c.replace(",", " ").split()] for c in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(cycles, d)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest element."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(c + 1 for c in cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self):
        return f"Permutation({self})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a * b``: apply ``b`` first, then ``a``."""
    if a.degree != b.degree:
        raise PermutationError("degree mismatch")
    return Permutation(tuple(a.images[i] for i in b.images))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, j in enumerate(a.images):
        inv[j] = i
    return Permutation(tuple(inv))


def cycle_type(a: Permutation) -> list[int]:
    """Cycle lengths (fixed points included), descending."""
    seen = set()
    lengths = []
    for i in range(a.degree):
        if i in seen:
            continue
        n = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = a.images[j]
            n += 1
        lengths.append(n)
    return sorted(lengths, reverse=True)


def parity(a: Permutation) -> int:
    return -1 if (a.degree - len(cycle_type(a))) % 2 else 1


def is_transposition(a: Permutation) -> bool:
    return sum(1 for i, j in enumerate(a.images) if i != j) == 2


def is_transitive(gens: Sequence[Permutation], d: int | None = None) -> bool:
    if d is None:
        if not gens:
            raise PermutationError("degree needed for an empty generating set")
        d = gens[0].degree
    orbit = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for g in gens:
            j = g.images[i]
            if j not in orbit:
                orbit.add(j)
                frontier.append(j)
    return len(orbit) == d


def jordan_symmetric_check(gens: Sequence[Permutation], d: int | None = None) -> bool:
    """Sufficient test for the full symmetric group: transitive and all transpositions."""
    gens = list(gens)
    return is_transitive(gens, d) and all(is_transposition(g) for g in gens)


class GroupHandle:
    """Permutation group given by generators, with a Schreier-Sims chain.

    ``base`` and ``transversals`` form a stabilizer chain: level ``i`` holds
    coset representatives of the stabilizer of ``base[:i+1]`` in the
    stabilizer of ``base[:i]``.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise PermutationError("degree needed for an empty generating set")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise PermutationError("degree mismatch")
        if degree > MAX_CHAIN_DEGREE:
            raise PermutationError(f"degree {degree} exceeds the exact-chain cap {MAX_CHAIN_DEGREE}")
        self.degree = degree
        self.generators = gens
        self.base: list[int] = []
        self.strong: list[Permutation] = []
        self.transversals: list[dict[int, Permutation]] = []
        self._build()

    def _level_gens(self, i: int) -> list[Permutation]:
        fixed = self.base[:i]
        return [s for s in self.strong if all(s.images[b] == b for b in fixed)]

    def _transversal(self, i: int) -> dict[int, Permutation]:
        b = self.base[i]
        gens = self._level_gens(i)
        trans = {b: Permutation.identity(self.degree)}
        frontier = [b]
        while frontier:
            p = frontier.pop(0)
            for g in gens:
                q = g.images[p]
                if q not in trans:
                    trans[q] = compose(g, trans[p])
                    frontier.append(q)
        return trans

    def _sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for k in range(start, len(self.base)):
            b = g.images[self.base[k]]
            if b not in self.transversals[k]:
                return g, k
            g = compose(inverse(self.transversals[k][b]), g)
        return g, len(self.base)

    def _add_strong(self, h: Permutation) -> None:
        self.strong.append(h)
        if all(h.images[b] == b for b in self.base):
            self.base.append(next(i for i, x in enumerate(h.images) if i != x))
        self.transversals = [self._transversal(i) for i in range(len(self.base))]

    def _build(self) -> None:
        for g in self.generators:
            if not g.is_identity() and g not in self.strong:
                self._add_strong(g)
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            gens = self._level_gens(i)
            for p, u in list(self.transversals[i].items()):
                for s in gens:
                    w = self.transversals[i][s.images[p]]
                    sch = compose(inverse(w), compose(s, u))
                    h, j = self._sift(sch, i + 1)
                    if not h.is_identity():
                        self._add_strong(h)
                        restart = j
                        break
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, _ = self._sift(g)
        return h.is_identity()

    def elements(self) -> list[Permutation]:
        """All elements, sorted (small groups only)."""
        if self.order > 50_000:
            raise PermutationError("group too large to enumerate")
        elems = [Permutation.identity(self.degree)]
        for trans in reversed(self.transversals):
            elems = [compose(u, e) for u in trans.values() for e in elems]
        return sorted(elems)


@dataclass(frozen=True)
class Classification:
    kind: str  # "Symmetric" | "Alternating" | "Other"
    order: int
    degree: int
    transitive: bool

    def __str__(self):
        if self.kind == "Other":
            return f"Other({self.order})"
        return f"{self.kind}({self.degree})"


def group_order_and_classify(gens: Sequence[Permutation], d: int | None = None) -> Classification:
    G = GroupHandle(gens, d)
    d = G.degree
    n = G.order
    if n == math.factorial(d):
        kind = "Symmetric"
    elif d >= 2 and n == math.factorial(d) // 2 and all(parity(g) == 1 for g in G.generators):
        kind = "Alternating"
    else:
        kind = "Other"
    return Classification(kind, n, d, is_transitive(G.generators, d))


def centralizer_in_sd(gens: Sequence[Permutation], d: int | None = None) -> GroupHandle:
    """Elements of S_d commuting with every generator (brute force)."""
    gens = list(gens)
    if d is None:
        if not gens:
            raise PermutationError("degree needed for an empty generating set")
        d = gens[0].degree
    if d > MAX_CENTRALIZER_DEGREE:
        raise PermutationError(f"degree {d} too large for the brute-force centralizer")
    comm = [
        p for p in map(Permutation, itertools.permutations(range(d)))
        if all(compose(p, g) == compose(g, p) for g in gens)
    ]
    return GroupHandle(comm, d)


def symmetric_generators(d: int) -> list[Permutation]:
    if d < 2:
        return []
    return [Permutation.from_cycles([(1, 2)], d), Permutation.from_cycles([tuple(range(1, d + 1))], d)]
