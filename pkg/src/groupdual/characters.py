"""Characters of finite abelian groups and the pairing <pi, a>.

A character is an exponent tuple e against the fixed weights w_i = m/d_i:
the character e sends b to zeta_m^(sum_i w_i e_i b_i).  The character
group therefore carries the same order sequence as the group itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CycInt, root_power
from .groups import (
    GroupElement,
    GroupSpec,
    Homomorphism,
    Subgroup,
    subgroup_from_elements,
)


@dataclass(frozen=True)
class Character:
    parent: GroupSpec
    etuple: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.etuple) != self.parent.rank:
            raise ValueError("exponent tuple length does not match group rank")
        reduced = tuple(e % d for e, d in zip(self.etuple, self.parent.orders))
        object.__setattr__(self, "etuple", reduced)

    def __mul__(self, other: "Character") -> "Character":
        if self.parent != other.parent:
            raise ValueError("characters of different groups")
        return Character(
            self.parent, tuple(a + b for a, b in zip(self.etuple, other.etuple))
        )

    def inverse(self) -> "Character":
        return Character(self.parent, tuple(-e for e in self.etuple))

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.etuple)


def trivial_character(A: GroupSpec) -> Character:
    return Character(A, (0,) * A.rank)


def all_characters(A: GroupSpec) -> list[Character]:
    return [Character(A, a.coords) for a in A.elements()]


def pairing_exponent(pi: Character, a: GroupElement) -> int:
    """e with <pi, a> = zeta_m^e, m the group exponent."""
    if pi.parent != a.parent:
        raise ValueError("character and element belong to different groups")
    A = pi.parent
    m = A.exponent
    return sum(w * e * c for w, e, c in zip(A.weights, pi.etuple, a.coords)) % m


def evaluate(pi: Character, a: GroupElement) -> CycInt:
    return root_power(pi.parent.exponent, pairing_exponent(pi, a))


def annihilator(H: Subgroup) -> Subgroup:
    """(A-hat : H), returned as a subgroup of exponent tuples.

    The character group shares the order sequence of A, so the annihilator
    is represented as a Subgroup of the same GroupSpec whose elements are
    exponent tuples.
    """
    A = H.parent
    gens = H.generators if H.generators else ()
    members = []
    for pi_elem in A.elements():
        pi = Character(A, pi_elem.coords)
        if all(pairing_exponent(pi, h) == 0 for h in gens):
            members.append(pi_elem)
    return subgroup_from_elements(A, members)


def double_annihilator_check(H: Subgroup) -> bool:
    """(A : (A-hat : H)) = H, with A identified with its double dual."""
    A = H.parent
    ann = annihilator(H)
    back = [
        a
        for a in A.elements()
        if all(
            pairing_exponent(Character(A, pi.coords), a) == 0
            for pi in ann.generators
        )
    ]
    return subgroup_from_elements(A, back) == H


def _solve_congruence(k: int, s: int, m: int) -> int:
    """Smallest t >= 0 with k*t = s (mod m)."""
    g = math.gcd(k, m)
    if s % g != 0:
        raise ValueError("congruence has no solution")
    mm = m // g
    t = (s // g) * pow(k // g, -1, mm) % mm if mm > 1 else 0
    return t


def extend_character(
    H: Subgroup, theta_exponents: Sequence[int], A: GroupSpec | None = None
) -> Character:
    """Extend a character of H (given by exponents of zeta_m on H's
    generators) to a character of A, choosing the smallest admissible
    exponent at each step."""
    A = A or H.parent
    if H.parent != A:
        raise ValueError("subgroup does not live in the given group")
    m = A.exponent
    if len(theta_exponents) != len(H.generators):
        raise ValueError("need one exponent per subgroup generator")

    # Propagate theta over all of H; any conflict means theta was not a
    # homomorphism on H.
    values: dict[tuple[int, ...], int] = {A.zero().coords: 0}
    frontier = [A.zero()]
    while frontier:
        x = frontier.pop()
        for g, e in zip(H.generators, theta_exponents):
            y = x + g
            val = (values[x.coords] + e) % m
            if y.coords in values:
                if values[y.coords] != val:
                    raise ValueError("exponents do not define a homomorphism on H")
            else:
                values[y.coords] = val
                frontier.append(y)
    if len(values) != H.order:
        raise ValueError("generators do not generate the given subgroup")

    current = list(H.elements)
    while len(values) < A.cardinality:
        g = next(a for a in A.elements() if a.coords not in values)
        k = 1
        while (k * g).coords not in values:
            k += 1
        s = values[(k * g).coords]
        t = _solve_congruence(k, s, m)
        for x in list(current):
            for j in range(1, k):
                y = x + j * g
                values[y.coords] = (values[x.coords] + j * t) % m
        current = [A.element(c) for c in values]

    # Convert the value map to an exponent tuple against the weights.
    etuple = []
    for i, (w, d) in enumerate(zip(A.weights, A.orders)):
        v = values[A.generator(i).coords]
        if v % w != 0:
            raise AssertionError("character value has impossible order")
        etuple.append((v // w) % d)
    pi = Character(A, tuple(etuple))
    for h, c in values.items():
        if pairing_exponent(pi, A.element(h)) != c % m:
            raise AssertionError("extension failed to restrict correctly")
    return pi


def induced_hom(alpha: Homomorphism, verify: bool = True) -> Homomorphism:
    """alpha*: characters of the target pull back to characters of the
    source; returned as a matrix on exponent tuples."""
    A1, A2 = alpha.source, alpha.target
    m1, m2 = A1.exponent, A2.exponent
    M = math.lcm(m1, m2)
    rows = []
    for j in range(A2.rank):
        w2j = A2.weights[j]
        row = []
        for i in range(A1.rank):
            # Value of the j-th basis character at alpha(g_i), rescaled to
            # an exponent of zeta_m1 on g_i.
            c = (w2j * alpha.apply(A1.generator(i)).coords[j]) % m2
            t = _solve_congruence(A1.weights[i] * (M // m1), c * (M // m2), M)
            row.append(t % A1.orders[i])
        rows.append(tuple(row))
    star = Homomorphism(A2, A1, tuple(rows))
    if verify and A1.cardinality * A2.cardinality <= 65536:
        for a1 in A1.elements():
            for pi2_elem in A2.elements():
                pi2 = Character(A2, pi2_elem.coords)
                pulled = Character(A1, star.apply(pi2_elem).coords)
                lhs = pairing_exponent(pulled, a1) * (M // m1)
                rhs = pairing_exponent(pi2, alpha.apply(a1)) * (M // m2)
                if lhs % M != rhs % M:
                    raise AssertionError("induced map fails its defining identity")
    return star
