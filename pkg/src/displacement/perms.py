"""Finite permutations, the first concrete realization.

Points are 1-based in the public API (cycle notation) and 0-based
internally.  Canonical form is the image tuple; the printed form is the
cycle decomposition sorted by least moved point.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .core import ContextMismatchError, FgSubgroup


class SymmetricGroupContext:
    """Ambient Sym(degree)."""

    _cache: dict = {}

    def __new__(cls, degree: int):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        if degree not in cls._cache:
            obj = super().__new__(cls)
            obj.degree = degree
            cls._cache[degree] = obj
        return cls._cache[degree]

    def __repr__(self):
        return f"Sym({self.degree})"

    def __eq__(self, other):
        return isinstance(other, SymmetricGroupContext) and self.degree == other.degree

    def __hash__(self):
        return hash(("sym", self.degree))

    @property
    def identity(self) -> "Permutation":
        return Permutation(self, tuple(range(self.degree)))


class Permutation:
    """A bijection of {1..degree}, stored as a 0-based image tuple."""

    __slots__ = ("context", "images")

    def __init__(self, context: SymmetricGroupContext, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(context.degree)):
            raise ValueError(f"not a bijection of degree {context.degree}: {images}")
        self.context = context
        self.images = images

    @staticmethod
    def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 1-based cycles, e.g. from_cycles(4, [(1, 2), (3, 4)])."""
        images = list(range(degree))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            for i, pt in enumerate(cycle):
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                images[pt - 1] = cycle[(i + 1) % len(cycle)] - 1
        p = Permutation(SymmetricGroupContext(degree), images)
        return p

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.context != other.context:
            raise ContextMismatchError("permutations of different degrees")
        return Permutation(
            self.context, tuple(self.images[i] for i in other.images)
        )

    def inverse(self) -> "Permutation":
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Permutation(self.context, tuple(images))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.context == other.context and self.images == other.images

    def __hash__(self):
        return hash((self.context.degree, self.images))

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """Nontrivial cycles (1-based), each starting at its least point,
        sorted by least moved point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(p + 1 for p in cyc))
        return tuple(out)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def extend(self, degree: int) -> "Permutation":
        """The same permutation inside a larger Sym(degree)."""
        if degree < self.context.degree:
            raise ValueError("cannot shrink a permutation")
        images = self.images + tuple(range(self.context.degree, degree))
        return Permutation(SymmetricGroupContext(degree), images)


def symmetric_group(degree: int) -> FgSubgroup:
    """Sym(degree) as a subgroup of itself, generated by (1 2) and an n-cycle."""
    if degree == 1:
        return FgSubgroup(f"S{degree}", [], context=SymmetricGroupContext(1))
    gens = [Permutation.from_cycles(degree, [(1, 2)])]
    if degree > 2:
        gens.append(Permutation.from_cycles(degree, [tuple(range(1, degree + 1))]))
    return FgSubgroup(f"S{degree}", gens)
