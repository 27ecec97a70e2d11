"""Restricted wreath products with cyclic tops and their iterated towers.

Level 0 of a tower is a finite permutation group given by generators;
level i+1 is (level i) wr Z/n_{i+1} with the top group acting by
translating coordinates: (f, k)(g, l) = (f . k|>g, k+l) where
(k|>g)(x) = g(x - k).  Only finite levels are ever materialized; the
sequence of top orders comes from a lazy rule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .core import (
    BudgetExceededError,
    ContextMismatchError,
    FgSubgroup,
    PropertyReport,
    commutator,
    conj,
    element_order,
    enumerate_subgroup,
    subgroups_commute,
)
from .perms import Permutation, SymmetricGroupContext

SEARCH_BUDGET = 10**7


def _primes():
    n = 2
    while True:
        if all(n % p for p in range(2, int(n**0.5) + 1)):
            yield n
        n += 1


class TowerSpec:
    """Base group plus the sequence of cyclic top orders.

    ``rule`` is one of:
      ("prefix", (n1, n2, ...))      -- explicit finite prefix
      ("constant", c)                -- n_i = c for all i
      ("primes",)                    -- n_i = i-th prime (increasing primes)
      ("prime-products", (p1, ...))  -- n_i = p1 * ... * p_i for the given
                                        increasing primes, cycled as needed
    """

    def __init__(self, base: FgSubgroup, rule: tuple, label: str = ""):
        if base.context is None:
            raise ValueError("tower base needs a context")
        self.base = base
        self.rule = rule
        self.label = label or f"{base.label} tower {rule!r}"
        self._contexts: Dict[int, "WreathContext"] = {}
        self._base_elems: Optional[List[Permutation]] = None

    def n(self, i: int) -> int:
        """Top order of level i (1-based)."""
        if i < 1:
            raise ValueError("levels are 1-based")
        kind = self.rule[0]
        if kind == "prefix":
            seq = self.rule[1]
            if i > len(seq):
                raise ValueError(f"prefix of length {len(seq)} has no n_{i}")
            value = seq[i - 1]
        elif kind == "constant":
            value = self.rule[1]
        elif kind == "primes":
            value = next(itertools.islice(_primes(), i - 1, None))
        elif kind == "prime-products":
            ps = self.rule[1]
            value = 1
            for j in range(i):
                value *= ps[j % len(ps)]
        else:
            raise ValueError(f"unknown rule {kind!r}")
        if value < 2:
            raise ValueError(f"n_{i} = {value} < 2")
        return value

    def context(self, level: int) -> "WreathContext":
        if level < 1:
            raise ValueError("wreath levels start at 1")
        if level not in self._contexts:
            self.n(level)  # validate early
            self._contexts[level] = WreathContext(self, level)
        return self._contexts[level]

    def base_elements(self, budget: int = SEARCH_BUDGET) -> List[Permutation]:
        """Deterministic full enumeration of the base group."""
        if self._base_elems is None:
            elems = enumerate_subgroup(list(self.base.generators), budget)
            self._base_elems = sorted(elems, key=lambda p: p.images)
        return self._base_elems

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"TowerSpec({self.label})"


class WreathContext:
    """Level i of a tower: (level i-1) wr Z/n_i."""

    def __init__(self, tower: TowerSpec, level: int):
        self.tower = tower
        self.level = level
        self.top_order = tower.n(level)

    def __eq__(self, other):
        return (
            isinstance(other, WreathContext)
            and self.tower is other.tower
            and self.level == other.level
        )

    def __hash__(self):
        return hash((id(self.tower), self.level))

    def __repr__(self):
        return f"{self.tower.label}[level {self.level}]"

    @property
    def identity(self) -> "WreathElement":
        return WreathElement(self, 0, ())

    def lower_identity(self):
        if self.level == 1:
            return self.tower.base.context.identity
        return self.tower.context(self.level - 1).identity

    def shift_generator(self) -> "WreathElement":
        return WreathElement(self, 1, ())


class ZWreathContext:
    """A restricted wreath product (lower group) wr Z: unbounded integer
    shifts, finite support maps.  Not enumerable; not tied to a tower."""

    top_order = None

    def __init__(self, lower, label: str = ""):
        self.lower = lower
        self.label = label or f"{lower!r} wr Z"

    def __eq__(self, other):
        return isinstance(other, ZWreathContext) and self.lower == other.lower

    def __hash__(self):
        return hash(("z-wreath", self.lower))

    def __repr__(self):
        return self.label

    @property
    def identity(self) -> "WreathElement":
        return WreathElement(self, 0, ())

    def lower_identity(self):
        return self.lower.identity

    def shift_generator(self) -> "WreathElement":
        return WreathElement(self, 1, ())


class WreathElement:
    """(support function, shift) at some level of a tower.

    The support is a sorted tuple of (index, lower-level element) with
    indices in Z/n and no identity values; the shift is reduced mod n.
    """

    __slots__ = ("context", "shift", "support")

    def __init__(self, context: WreathContext, shift: int, support):
        n = context.top_order
        merged: Dict[int, object] = {}
        for idx, val in support:
            if n is not None:
                idx %= n
            if idx in merged:
                raise ValueError(f"duplicate support index {idx}")
            if not val.is_identity():
                merged[idx] = val
        self.context = context
        self.shift = shift % n if n is not None else shift
        self.support = tuple(sorted(merged.items(), key=lambda kv: kv[0]))

    def value_at(self, idx: int):
        if self.context.top_order is not None:
            idx %= self.context.top_order
        for i, v in self.support:
            if i == idx:
                return v
        return self.context.lower_identity()

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if not isinstance(other, WreathElement):
            return NotImplemented
        if self.context != other.context:
            raise ContextMismatchError("wreath elements of different levels/towers")
        n = self.context.top_order
        k = self.shift
        indices = {i for i, _ in self.support}
        if n is None:
            indices.update(i + k for i, _ in other.support)
        else:
            indices.update((i + k) % n for i, _ in other.support)
        support = []
        for m in indices:
            v = self.value_at(m) * other.value_at(m - k)
            support.append((m, v))
        return WreathElement(self.context, k + other.shift, support)

    def inverse(self) -> "WreathElement":
        k = self.shift
        support = [(i - k, v.inverse()) for i, v in self.support]
        return WreathElement(self.context, -k, support)

    def is_identity(self) -> bool:
        return self.shift == 0 and not self.support

    def __eq__(self, other):
        if not isinstance(other, WreathElement):
            return NotImplemented
        return (
            self.context == other.context
            and self.shift == other.shift
            and self.support == other.support
        )

    def __hash__(self):
        return hash((self.context, self.shift, self.support))

    def __repr__(self):
        sup = ", ".join(f"{v!r}@{i}" for i, v in self.support)
        return f"W(shift={self.shift}; {sup})"


def embed_level(x, context) -> WreathElement:
    """Standard embedding of a lower-level element at coordinate 0."""
    if isinstance(context, ZWreathContext):
        expected = context.lower
    elif context.level == 1:
        expected = context.tower.base.context
    else:
        expected = context.tower.context(context.level - 1)
    if x.context != expected:
        raise ContextMismatchError("element does not live one level below")
    return WreathElement(context, 0, [(0, x)])


def embed_to_level(x, tower: TowerSpec, level: int) -> WreathElement:
    """Iterate the standard embeddings from the base (or a lower level)
    up to the requested level."""
    current = x
    start = current.context.level if isinstance(current, WreathElement) else 0
    for i in range(start + 1, level + 1):
        current = embed_level(current, tower.context(i))
    return current


def embed_subgroup(H: FgSubgroup, tower: TowerSpec, level: int) -> FgSubgroup:
    gens = [embed_to_level(g, tower, level) for g in H.generators]
    return FgSubgroup(f"{H.label}@{level}", gens, context=tower.context(level))


def level_order(tower: TowerSpec, level: int, budget: int = SEARCH_BUDGET) -> int:
    size = len(tower.base_elements(budget))
    for i in range(1, level + 1):
        n = tower.n(i)
        size = size**n * n
        if size > budget:
            raise BudgetExceededError(f"level {level} order exceeds budget {budget}")
    return size


def enumerate_level(tower: TowerSpec, level: int, budget: int = SEARCH_BUDGET):
    """Yield every element of a finite wreath level in canonical order
    (lexicographic in the support tuple, then by shift)."""
    level_order(tower, level, budget)
    if level == 0:
        yield from tower.base_elements(budget)
        return
    ctx = tower.context(level)
    n = ctx.top_order
    lower = list(enumerate_level(tower, level - 1, budget))
    for values in itertools.product(lower, repeat=n):
        for shift in range(n):
            yield WreathElement(ctx, shift, list(enumerate(values)))


def realize_permutation(w: WreathElement) -> Permutation:
    """The imprimitive permutation realization of a finite wreath level.

    A level-i element acts on blocks of the level-(i-1) realization:
    point (j, x) maps to (j + k, f_{j+k}(x))."""
    ctx = w.context
    n = ctx.top_order
    if n is None:
        raise ValueError("Z-top wreath elements have no finite realization")
    if ctx.level == 1:
        lower_degree = ctx.tower.base.context.degree
        realize_lower = lambda p: p
    else:
        sample = realize_permutation(ctx.lower_identity())
        lower_degree = sample.context.degree
        realize_lower = realize_permutation
    degree = n * lower_degree
    images = [0] * degree
    k = w.shift
    for j in range(n):
        target_block = (j + k) % n
        f = realize_lower(w.value_at(target_block))
        for x in range(lower_degree):
            images[j * lower_degree + x] = target_block * lower_degree + f.images[x]
    return Permutation(SymmetricGroupContext(degree), images)


def _zn_conditions(H: FgSubgroup, t, p: int) -> PropertyReport:
    """The Z/p-conjugates conditions on generators: [H, t^q H t^-q] = 1
    for 1 <= q < p and [H, t^p] = 1."""
    desc = f"Z/{p}-conjugate conditions for {H.label}"
    checks = []
    tq = t
    for q in range(1, p):
        rep = subgroups_commute(H, H.conjugate(tq))
        if not rep.ok:
            return PropertyReport.failing(
                desc, f"[H, t^{q} H t^-{q}] != 1", counterexample=rep.counterexample
            )
        checks.append(f"power {q}: commutes")
        tq = tq * t
    # tq is now t^p
    for h in H.generators:
        if not commutator(h, tq).is_identity():
            return PropertyReport.failing(
                desc, f"[h, t^{p}] != 1", counterexample=(h, tq)
            )
    checks.append(f"t^{p} centralizes the generators")
    return PropertyReport.passing(desc, checks)


def zn_witness(tower: TowerSpec, H: FgSubgroup, i: int, p: int):
    """The constructive Z/p witness at level i: with n_i = k*p, the k-th
    power of the level-i shift generator displaces everything below it
    q times for 1 <= q < p, and its p-th power is trivial."""
    from .checkers import WitnessCertificate

    n_i = tower.n(i)
    if n_i % p != 0:
        raise ValueError(f"p = {p} does not divide n_{i} = {n_i}")
    k = n_i // p
    ctx = tower.context(i)
    t = WreathElement(ctx, k, ())
    H_up = embed_subgroup(H, tower, i)
    report = _zn_conditions(H_up, t, p)
    cert = WitnessCertificate(
        property="CZNC", subject=H_up, payload={"t": t, "n": p}, bounds={"level": i}
    )
    return cert, report


def brute_search_zp_witness(
    tower: TowerSpec,
    level: int,
    H: FgSubgroup,
    p: int,
    budget: int = SEARCH_BUDGET,
) -> Optional[WreathElement]:
    """Exhaustive search of a finite wreath level for a Z/p witness for H.

    Returns the first witness in canonical enumeration order, or None
    once the whole level has been exhausted.  Errors (rather than
    subsampling) if the level is larger than the budget."""
    if H.context != tower.context(level):
        raise ContextMismatchError("H must live at the searched level")
    for t in enumerate_level(tower, level, budget):
        if _zn_conditions(H, t, p).ok:
            return t
    return None


def torsion_obstruction_check(H: FgSubgroup, t) -> PropertyReport:
    """Confirm that a finite-order t fails the Z-conjugates conditions
    for a non-abelian H: at p = ord(t) the conjugate is H itself."""
    desc = f"torsion obstruction for {H.label} with ord(t) witness"
    if H.is_abelian():
        return PropertyReport(desc, "not-applicable", ("H is abelian",))
    p = element_order(t)
    # t^p is the identity, so [H, t^p H t^-p] = [H, H] != 1
    tp = t
    for _ in range(p - 1):
        tp = tp * t
    if not tp.is_identity():
        raise ValueError("order computation failed")
    rep = subgroups_commute(H, H.conjugate(tp))
    if rep.ok:
        return PropertyReport.failing(
            desc, f"[H, t^{p} H t^-{p}] = 1 despite non-abelian H"
        )
    return PropertyReport.passing(
        desc, [f"fails at p = ord(t) = {p}", "counterexample re-verified"]
    )


def sym_zn_witness(H: FgSubgroup, n: int):
    """Z/n witness inside Sym(k*n) for H <= Sym(k): t is the product of
    the n-cycles (j, j+k, ..., j+(n-1)k)."""
    from .checkers import WitnessCertificate

    if n < 2:
        raise ValueError("n must be at least 2")
    if H.is_trivial():
        k = 1
    else:
        k = H.context.degree
    degree = k * n
    big = SymmetricGroupContext(degree)
    images = [((x + k) % degree) for x in range(degree)]
    t = Permutation(big, images)
    H_big = FgSubgroup(
        f"{H.label} in Sym({degree})",
        [g.extend(degree) for g in H.generators],
        context=big,
    )
    report = _zn_conditions(H_big, t, n)
    cert = WitnessCertificate(
        property="CZNC", subject=H_big, payload={"t": t, "n": n}, bounds={}
    )
    return cert, report
