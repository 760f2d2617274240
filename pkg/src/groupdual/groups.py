"""Finite abelian groups presented as explicit products of cyclic groups.

A group is a fixed sequence of cyclic orders (d_1, ..., d_k); the order
sequence is never normalized, so the generator basis g_1, ..., g_k is part
of the data.  Elements are residue tuples, homomorphisms are integer
matrices acting on row vectors (row i = image of g_i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterable, Iterator, Sequence

from .limits import Limits, check_enumeration


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group prod Z/d_i with a fixed factor basis."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        if not self.orders:
            raise ValueError("a group needs at least one cyclic factor")
        if any(d < 2 for d in self.orders):
            raise ValueError("every cyclic order must be at least 2")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.orders)

    @property
    def cardinality(self) -> int:
        return math.prod(self.orders)

    @property
    def weights(self) -> tuple[int, ...]:
        """w_i = exponent / d_i, the pairing weight of each factor."""
        m = self.exponent
        return tuple(m // d for d in self.orders)

    def element(self, coords: Sequence[int]) -> "GroupElement":
        return GroupElement(self, tuple(coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def generator(self, i: int) -> "GroupElement":
        coords = [0] * self.rank
        coords[i] = 1
        return GroupElement(self, tuple(coords))

    def generators(self) -> list["GroupElement"]:
        return [self.generator(i) for i in range(self.rank)]

    def elements(self) -> Iterator["GroupElement"]:
        """All elements in canonical (lexicographic coordinate) order."""
        for coords in product(*(range(d) for d in self.orders)):
            yield GroupElement(self, coords)

    def primes(self) -> list[int]:
        return sorted(_prime_factors(self.cardinality))

    def is_p_group(self) -> bool:
        return len(self.primes()) == 1

    def format_element(self, a: "GroupElement") -> str:
        if all(d <= 10 for d in self.orders):
            return "".join(str(c) for c in a.coords)
        return ",".join(str(c) for c in a.coords)

    def parse_element(self, text: str) -> "GroupElement":
        if all(d <= 10 for d in self.orders):
            digits = [int(ch) for ch in text.strip()]
        else:
            digits = [int(part) for part in text.strip().split(",")]
        if len(digits) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates in {text!r}")
        return self.element(digits)


def make_group(orders: Sequence[int]) -> GroupSpec:
    return GroupSpec(tuple(orders))


@dataclass(frozen=True)
class GroupElement:
    parent: GroupSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.parent.rank:
            raise ValueError("coordinate count does not match group rank")
        reduced = tuple(c % d for c, d in zip(self.coords, self.parent.orders))
        object.__setattr__(self, "coords", reduced)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_parent(other)
        return GroupElement(
            self.parent, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.parent, tuple(-c for c in self.coords))

    def __rmul__(self, n: int) -> "GroupElement":
        return GroupElement(self.parent, tuple(n * c for c in self.coords))

    def __mul__(self, n: int) -> "GroupElement":
        return self.__rmul__(n)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def order(self) -> int:
        return reduce(
            math.lcm,
            (d // math.gcd(c, d) for c, d in zip(self.coords, self.parent.orders)),
        )

    def _check_parent(self, other: "GroupElement") -> None:
        if self.parent != other.parent:
            raise ValueError("elements belong to different groups")

    def __str__(self) -> str:
        return self.parent.format_element(self)


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup stored as its full, canonically sorted element set."""

    parent: GroupSpec
    generators: tuple[GroupElement, ...]
    elements: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(e.coords for e in self.elements)

    def __contains__(self, a: GroupElement) -> bool:
        return a.parent == self.parent and a.coords in self.element_set()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.element_set() == other.element_set()

    def __hash__(self) -> int:
        return hash((self.parent, self.element_set()))

    def is_whole_group(self) -> bool:
        return self.order == self.parent.cardinality

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def subgroup_closure(
    parent: GroupSpec, gens: Iterable[GroupElement]
) -> Subgroup:
    """Smallest subgroup of `parent` containing `gens`."""
    gens = tuple(gens)
    for g in gens:
        if g.parent != parent:
            raise ValueError("generator does not belong to the given group")
    seen = {parent.zero().coords}
    frontier = [parent.zero()]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y.coords not in seen:
                seen.add(y.coords)
                frontier.append(y)
    # Adding the generators repeatedly reaches inverses because every
    # element has finite order.
    elements = tuple(
        parent.element(c) for c in sorted(seen)
    )
    return Subgroup(parent, gens, elements)


def subgroup_from_elements(
    parent: GroupSpec, elements: Iterable[GroupElement]
) -> Subgroup:
    """Wrap an already-closed element set as a Subgroup (closure re-checked)."""
    elems = sorted({e.coords for e in elements})
    sub = subgroup_closure(parent, [parent.element(c) for c in elems])
    if len(sub.elements) != len(elems):
        raise ValueError("element set is not closed under addition")
    return sub


def trivial_subgroup(parent: GroupSpec) -> Subgroup:
    return subgroup_closure(parent, [])


def full_subgroup(parent: GroupSpec) -> Subgroup:
    return subgroup_closure(parent, parent.generators())


def all_subgroups(
    A: GroupSpec, limits: Limits | None = None
) -> list[Subgroup]:
    """Every subgroup of A, by breadth-first closure of one-element extensions."""
    check_enumeration(A.cardinality, limits)
    found: dict[frozenset[tuple[int, ...]], Subgroup] = {}
    triv = trivial_subgroup(A)
    found[triv.element_set()] = triv
    frontier = [triv]
    all_elems = list(A.elements())
    while frontier:
        next_frontier = []
        for sub in frontier:
            inside = sub.element_set()
            for x in all_elems:
                if x.coords in inside:
                    continue
                bigger = subgroup_closure(A, sub.generators + (x,))
                key = bigger.element_set()
                if key not in found:
                    found[key] = bigger
                    next_frontier.append(bigger)
        frontier = next_frontier
    return sorted(
        found.values(), key=lambda s: (s.order, [e.coords for e in s.elements])
    )


@dataclass(frozen=True)
class Homomorphism:
    """Matrix of a homomorphism: row i is the image of source generator g_i."""

    source: GroupSpec
    target: GroupSpec
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = []
        if len(self.matrix) != self.source.rank:
            raise ValueError("matrix row count does not match source rank")
        for i, row in enumerate(self.matrix):
            if len(row) != self.target.rank:
                raise ValueError("matrix column count does not match target rank")
            d_i = self.source.orders[i]
            reduced = tuple(
                t % d_j for t, d_j in zip(row, self.target.orders)
            )
            for t, d_j in zip(reduced, self.target.orders):
                if (d_i * t) % d_j != 0:
                    raise ValueError(
                        f"entry {t} maps an order-{d_i} generator outside "
                        f"its admissible image in Z/{d_j}"
                    )
            rows.append(reduced)
        object.__setattr__(self, "matrix", tuple(rows))

    def apply(self, a: GroupElement) -> GroupElement:
        if a.parent != self.source:
            raise ValueError("element does not belong to the source group")
        coords = [0] * self.target.rank
        for a_i, row in zip(a.coords, self.matrix):
            for j, t in enumerate(row):
                coords[j] += a_i * t
        return self.target.element(coords)

    def compose(self, then: "Homomorphism") -> "Homomorphism":
        """The map a -> then(self(a))."""
        if self.target != then.source:
            raise ValueError("homomorphisms are not composable")
        rows = tuple(
            then.apply(self.apply(g)).coords for g in self.source.generators()
        )
        cls = (
            Automorphism
            if isinstance(self, Automorphism) and isinstance(then, Automorphism)
            else Homomorphism
        )
        return cls(self.source, then.target, rows)

    def is_bijective(self) -> bool:
        if self.source.cardinality != self.target.cardinality:
            return False
        image = {self.apply(a).coords for a in self.source.elements()}
        return len(image) == self.source.cardinality

    def map_subgroup(self, H: Subgroup) -> Subgroup:
        if H.parent != self.source:
            raise ValueError("subgroup does not live in the source group")
        return subgroup_from_elements(
            self.target, [self.apply(h) for h in H.elements]
        )


@dataclass(frozen=True)
class Automorphism(Homomorphism):
    """A bijective endomorphism; bijectivity checked at construction."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.source != self.target:
            raise ValueError("an automorphism needs source = target")
        if not self.is_bijective():
            raise ValueError("matrix does not define a bijection")

    @property
    def parent(self) -> GroupSpec:
        return self.source

    def inverse(self) -> "Automorphism":
        lookup = {self.apply(a).coords: a for a in self.parent.elements()}
        rows = tuple(lookup[g.coords].coords for g in self.parent.generators())
        return Automorphism(self.source, self.target, rows)

    @property
    def order(self) -> int:
        ident = identity_automorphism(self.parent)
        power = self
        n = 1
        while power != ident:
            power = power.compose(self)
            n += 1
        return n


def identity_automorphism(A: GroupSpec) -> Automorphism:
    rows = tuple(g.coords for g in A.generators())
    return Automorphism(A, A, rows)


def scalar_automorphism(A: GroupSpec, n: int) -> Automorphism:
    """Multiplication by n; valid only when gcd(n, |A|) makes it bijective."""
    rows = tuple((n * g).coords for g in A.generators())
    return Automorphism(A, A, rows)


def automorphism_group(
    A: GroupSpec, limits: Limits | None = None
) -> list[Automorphism]:
    """All automorphisms, in lexicographic matrix order."""
    check_enumeration(A.cardinality, limits)
    # Row i may be any element killed by d_i; bijectivity is tested by
    # image cardinality, which is correct for mixed moduli.
    row_candidates: list[list[tuple[int, ...]]] = []
    for d_i in A.orders:
        cands = [
            x.coords
            for x in A.elements()
            if all((d_i * c) % d_j == 0 for c, d_j in zip(x.coords, A.orders))
        ]
        row_candidates.append(sorted(cands))
    auts = []
    for rows in product(*row_candidates):
        hom = Homomorphism(A, A, rows)
        if hom.is_bijective():
            auts.append(Automorphism(A, A, rows))
    return auts


def stabilizer(
    H: Subgroup, limits: Limits | None = None
) -> list[Automorphism]:
    target = H.element_set()
    return [
        tau
        for tau in automorphism_group(H.parent, limits)
        if {tau.apply(h).coords for h in H.elements} == target
    ]


def is_characteristic(H: Subgroup, limits: Limits | None = None) -> bool:
    return len(stabilizer(H, limits)) == len(automorphism_group(H.parent, limits))


def primary_decomposition(A: GroupSpec) -> dict[int, GroupSpec]:
    """The p-part presentations: p-power part of each order, 1s dropped."""
    parts: dict[int, GroupSpec] = {}
    for p in A.primes():
        orders = []
        for d in A.orders:
            q = 1
            while d % p == 0:
                q *= p
                d //= p
            if q > 1:
                orders.append(q)
        parts[p] = GroupSpec(tuple(orders))
    return parts


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out
