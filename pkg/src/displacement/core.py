"""Realization-independent group algebra.

Every concrete realization (permutations, rational matrices, wreath
elements, PL homeomorphisms, Britton words) exposes the same small
element interface:

  * ``elem.context``  -- hashable descriptor of the ambient group
  * ``elem * other``  -- group product
  * ``elem.inverse()``
  * ``elem.is_identity()``
  * equality and hashing by canonical form

The free functions here (``mul``, ``conj``, ``commutator``,
``subgroups_commute``) work uniformly over any of them and enforce that
both operands live in the same ambient group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence, Tuple


class ContextMismatchError(ValueError):
    """An operation mixed elements of different ambient groups."""


class BudgetExceededError(RuntimeError):
    """An enumeration or search would exceed its configured budget."""


def _require_same_context(a, b) -> None:
    if a.context != b.context:
        raise ContextMismatchError(
            f"elements live in different groups: {a.context!r} vs {b.context!r}"
        )


def mul(a, b):
    """Group product a*b (same ambient group required)."""
    _require_same_context(a, b)
    return a * b


def inv(a):
    return a.inverse()


def conj(t, g):
    """Conjugate t*g*t^-1."""
    _require_same_context(t, g)
    return t * g * t.inverse()


def commutator(a, b):
    """[a, b] = a*b*a^-1*b^-1; identity iff a and b commute."""
    _require_same_context(a, b)
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class PropertyReport:
    """Structured pass/fail outcome of a property check.

    ``verdict`` is one of "pass", "fail", "bounded-pass" or
    "not-applicable".  On failure ``counterexample`` holds a re-checkable
    witness (typically a pair of elements whose commutator is
    nontrivial).
    """

    description: str
    verdict: str
    checks: Tuple[str, ...] = ()
    counterexample: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.verdict in ("pass", "bounded-pass")

    @staticmethod
    def passing(description: str, checks: Sequence[str] = ()) -> "PropertyReport":
        return PropertyReport(description, "pass", tuple(checks))

    @staticmethod
    def bounded(description: str, checks: Sequence[str] = ()) -> "PropertyReport":
        return PropertyReport(description, "bounded-pass", tuple(checks))

    @staticmethod
    def failing(
        description: str,
        reason: str,
        counterexample: Optional[tuple] = None,
        checks: Sequence[str] = (),
    ) -> "PropertyReport":
        return PropertyReport(
            description, "fail", tuple(checks) + (reason,), counterexample
        )


class FgSubgroup:
    """A named finite generator list for a subgroup.

    Identity generators are dropped and duplicates removed (order of
    first occurrence is kept).  The list may normalize to empty; such a
    subgroup is trivial and commutes with everything.
    """

    def __init__(self, label: str, generators: Iterable[Any], context=None):
        gens = []
        seen = []
        for g in generators:
            if g.is_identity():
                continue
            if any(g == h for h in seen):
                continue
            seen.append(g)
            gens.append(g)
        if gens:
            ctx = gens[0].context
            for g in gens[1:]:
                if g.context != ctx:
                    raise ContextMismatchError(
                        f"generators of {label!r} live in different groups"
                    )
            if context is not None and context != ctx:
                raise ContextMismatchError(
                    f"declared context of {label!r} does not match its generators"
                )
            context = ctx
        self.label = label
        self.generators: Tuple[Any, ...] = tuple(gens)
        self.context = context

    def __repr__(self):
        return f"FgSubgroup({self.label!r}, {len(self.generators)} generators)"

    def __iter__(self):
        return iter(self.generators)

    def is_trivial(self) -> bool:
        return not self.generators

    def is_abelian(self) -> bool:
        return all(
            commutator(a, b).is_identity()
            for i, a in enumerate(self.generators)
            for b in self.generators[i + 1 :]
        )

    def conjugate(self, t) -> "FgSubgroup":
        """The subgroup t H t^-1, generator by generator."""
        return FgSubgroup(
            f"^({self.label})",
            [conj(t, g) for g in self.generators],
            context=self.context,
        )


def subgroups_commute(H: FgSubgroup, K: FgSubgroup) -> PropertyReport:
    """Check [H, K] = 1 on generator pairs.

    Generator level suffices: the centralizer of K is a subgroup, so if
    every generator of H centralizes every generator of K then <H> and
    <K> commute elementwise.
    """
    desc = f"[{H.label}, {K.label}] = 1"
    if H.is_trivial() or K.is_trivial():
        return PropertyReport.passing(desc, ["trivial factor"])
    if H.context != K.context:
        raise ContextMismatchError("subgroups live in different groups")
    for h in H.generators:
        for k in K.generators:
            if not commutator(h, k).is_identity():
                return PropertyReport.failing(
                    desc, f"generators do not commute", counterexample=(h, k)
                )
    n = len(H.generators) * len(K.generators)
    return PropertyReport.passing(desc, [f"{n} generator pairs checked"])


def enumerate_subgroup(generators: Sequence[Any], budget: int = 10**7) -> list:
    """Full enumeration of <generators> by breadth-first closure.

    Deterministic: elements appear in BFS order seeded by the identity
    and the given generator order.  Raises BudgetExceededError if the
    subgroup has more than ``budget`` elements.
    """
    if not generators:
        raise ValueError("cannot enumerate subgroup without a context-bearing generator")
    identity = generators[0].context.identity
    gens = list(generators) + [g.inverse() for g in generators]
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    if len(elems) >= budget:
                        raise BudgetExceededError(
                            f"subgroup enumeration exceeded budget {budget}"
                        )
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def element_order(g, budget: int = 10**6) -> int:
    """Order of g in a realization where powers eventually cycle."""
    p = g
    n = 1
    while not p.is_identity():
        p = p * g
        n += 1
        if n > budget:
            raise BudgetExceededError(f"element order exceeds budget {budget}")
    return n


class ProductContext:
    """Direct product of two ambient groups."""

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __eq__(self, other):
        return (
            isinstance(other, ProductContext)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash(("product", self.left, self.right))

    def __repr__(self):
        return f"ProductContext({self.left!r}, {self.right!r})"

    @property
    def identity(self) -> "ProductElement":
        return ProductElement(self, self.left.identity, self.right.identity)

    def pair(self, a, b) -> "ProductElement":
        if a.context != self.left or b.context != self.right:
            raise ContextMismatchError("components live in the wrong factors")
        return ProductElement(self, a, b)


class ProductElement:
    """Element (a, b) of a direct product, componentwise operations."""

    __slots__ = ("context", "a", "b")

    def __init__(self, context: ProductContext, a, b):
        self.context = context
        self.a = a
        self.b = b

    def __mul__(self, other: "ProductElement") -> "ProductElement":
        _require_same_context(self, other)
        return ProductElement(self.context, self.a * other.a, self.b * other.b)

    def inverse(self) -> "ProductElement":
        return ProductElement(self.context, self.a.inverse(), self.b.inverse())

    def is_identity(self) -> bool:
        return self.a.is_identity() and self.b.is_identity()

    def __eq__(self, other):
        if not isinstance(other, ProductElement):
            return NotImplemented
        return self.context == other.context and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a!r}, {self.b!r})"


def product_subgroup(label: str, H: FgSubgroup, K: FgSubgroup) -> FgSubgroup:
    """H x K inside the direct product of the ambient groups."""
    if H.context is None or K.context is None:
        raise ValueError("both factors need a context")
    ctx = ProductContext(H.context, K.context)
    gens = [ctx.pair(h, K.context.identity) for h in H.generators]
    gens += [ctx.pair(H.context.identity, k) for k in K.generators]
    return FgSubgroup(label, gens, context=ctx)
