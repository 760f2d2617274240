"""Additive codes C in A^n and their left/right dual codes.

Dual codes are computed by a full scan of the ambient group filtered by
generator constraints; no linear-algebra shortcuts, so the golden tables
cannot be contaminated by solver bugs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .cyclotomic import CycInt
from .characters import Character, pairing_exponent
from .dualities import (
    Duality,
    adjoint,
    all_dualities,
    inner_product_exponent,
    inner_product_value,
    is_symmetric,
)
from .groups import (
    Automorphism,
    GroupElement,
    GroupSpec,
    Subgroup,
    all_subgroups,
    automorphism_group,
    is_characteristic,
    make_group,
    stabilizer,
    subgroup_closure,
    subgroup_from_elements,
)
from .limits import Limits, check_scan


@dataclass(frozen=True)
class PowerGroup:
    """A^n, realized as the GroupSpec with the base orders repeated n times."""

    base: GroupSpec
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("length must be at least 1")

    @property
    def spec(self) -> GroupSpec:
        return make_group(self.base.orders * self.n)

    def word(self, blocks: Sequence[GroupElement]) -> GroupElement:
        if len(blocks) != self.n:
            raise ValueError(f"expected {self.n} blocks")
        coords: list[int] = []
        for b in blocks:
            if b.parent != self.base:
                raise ValueError("block belongs to a different base group")
            coords.extend(b.coords)
        return self.spec.element(coords)

    def blocks(self, x: GroupElement) -> list[GroupElement]:
        k = self.base.rank
        return [
            self.base.element(x.coords[i * k : (i + 1) * k]) for i in range(self.n)
        ]


@dataclass(frozen=True, eq=False)
class AdditiveCode:
    power: PowerGroup
    subgroup: Subgroup

    def __post_init__(self) -> None:
        if self.subgroup.parent != self.power.spec:
            raise ValueError("subgroup does not live in the power group")

    @property
    def order(self) -> int:
        return self.subgroup.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return self.power == other.power and self.subgroup == other.subgroup

    def __hash__(self) -> int:
        return hash((self.power, self.subgroup))

    def __str__(self) -> str:
        return str(self.subgroup)


def code_from_generators(
    base: GroupSpec, n: int, gens: Iterable[GroupElement]
) -> AdditiveCode:
    power = PowerGroup(base, n)
    return AdditiveCode(power, subgroup_closure(power.spec, tuple(gens)))


def code_from_subgroup(base: GroupSpec, n: int, H: Subgroup) -> AdditiveCode:
    return AdditiveCode(PowerGroup(base, n), H)


def extend_duality(phi: Duality, n: int) -> Duality:
    """The coordinatewise extension of phi to A^n (block-diagonal tau)."""
    if n == 1:
        return phi
    A = phi.parent
    spec = PowerGroup(A, n).spec
    k = A.rank
    rows = []
    for block in range(n):
        for i in range(k):
            row = [0] * spec.rank
            for j in range(k):
                row[block * k + j] = phi.tau.matrix[i][j]
            rows.append(tuple(row))
    return Duality(Automorphism(spec, spec, tuple(rows)))


def _extended(phi: Duality, C: AdditiveCode) -> Duality:
    if phi.parent == C.power.spec:
        return phi
    if phi.parent != C.power.base:
        raise ValueError("duality is neither over the base nor the power group")
    return extend_duality(phi, C.power.n)


def left_dual(
    C: AdditiveCode, phi: Duality, limits: Limits | None = None
) -> AdditiveCode:
    """L_phi(C) = {x : Phi(x, c) = 1 for all c in C}."""
    ext = _extended(phi, C)
    spec = C.power.spec
    check_scan(spec.cardinality, limits)
    gens = C.subgroup.generators
    members = [
        x
        for x in spec.elements()
        if all(inner_product_exponent(ext, x, c) == 0 for c in gens)
    ]
    return AdditiveCode(C.power, subgroup_from_elements(spec, members))


def right_dual(
    C: AdditiveCode, phi: Duality, limits: Limits | None = None
) -> AdditiveCode:
    """R_phi(C) = {x : Phi(c, x) = 1 for all c in C}."""
    ext = _extended(phi, C)
    spec = C.power.spec
    check_scan(spec.cardinality, limits)
    gens = C.subgroup.generators
    members = [
        x
        for x in spec.elements()
        if all(inner_product_exponent(ext, c, x) == 0 for c in gens)
    ]
    return AdditiveCode(C.power, subgroup_from_elements(spec, members))


class DualKind(Enum):
    NONE = "none"
    SELF_ORTHOGONAL = "self_orthogonal"
    SELF_DUAL = "self_dual"


def self_dual_kind(C: AdditiveCode, phi: Duality) -> DualKind:
    left = left_dual(C, phi)
    right = right_dual(C, phi)
    cset = C.subgroup.element_set()
    left_orth = cset <= left.subgroup.element_set()
    right_orth = cset <= right.subgroup.element_set()
    if left_orth != right_orth:
        raise AssertionError("left/right self-orthogonality must agree")
    left_sd = C == left
    right_sd = C == right
    if left_sd != right_sd:
        raise AssertionError("left/right self-duality must agree")
    if left_sd:
        return DualKind.SELF_DUAL
    if left_orth:
        return DualKind.SELF_ORTHOGONAL
    return DualKind.NONE


def dual_sum_check(
    C: AdditiveCode, phi: Duality, x: GroupElement
) -> CycInt:
    """sum_{y in C} Phi(x, y), exactly; equals |C| or 0 by membership."""
    ext = _extended(phi, C)
    total = CycInt.zero(C.power.spec.exponent)
    for y in C.subgroup.elements:
        total = total + inner_product_value(ext, x, y)
    return total


class UnsupportedPairError(ValueError):
    """The size condition alone does not guarantee a duality exists."""


def construct_duality_for_pair(
    H: Subgroup, K: Subgroup, limits: Limits | None = None
) -> Duality:
    """A symmetric duality making H and K mutual left/right duals.

    Supported cases: the parent is elementary abelian (basis completion),
    or A = H (+) K (factorwise inner products).  Anything else raises
    UnsupportedPairError: with only the size condition such a duality can
    fail to exist.
    """
    A = H.parent
    if K.parent != A:
        raise ValueError("subgroups of different groups")
    if H.order * K.order != A.cardinality:
        raise ValueError("size condition |H| * |K| = |A| fails")
    if _is_elementary_abelian(A):
        phi = _pair_duality_elementary(A, H, K)
    elif _is_direct_sum(A, H, K):
        phi = _pair_duality_direct_sum(A, H, K)
    else:
        raise UnsupportedPairError(
            "pair is neither in an elementary abelian group nor a direct sum; "
            "a suitable duality may not exist"
        )
    _assert_pair_duality(phi, H, K)
    return phi


def search_duality_for_pair(
    H: Subgroup, K: Subgroup, limits: Limits | None = None
) -> Optional[Duality]:
    """Exhaustive fallback: scan all dualities for one pairing H with K."""
    A = H.parent
    for phi in all_dualities(A, limits):
        if _pair_holds(phi, H, K):
            return phi
    return None


def _pair_holds(phi: Duality, H: Subgroup, K: Subgroup) -> bool:
    A = H.parent
    CH = code_from_subgroup(A, 1, H)
    CK = code_from_subgroup(A, 1, K)
    return (
        left_dual(CH, phi).subgroup == K
        and right_dual(CH, phi).subgroup == K
        and left_dual(CK, phi).subgroup == H
        and right_dual(CK, phi).subgroup == H
    )


def _assert_pair_duality(phi: Duality, H: Subgroup, K: Subgroup) -> None:
    if not is_symmetric(phi):
        raise AssertionError("constructed duality is not symmetric")
    if not _pair_holds(phi, H, K):
        raise AssertionError("constructed duality does not pair H with K")


def _is_elementary_abelian(A: GroupSpec) -> bool:
    p = A.orders[0]
    return all(d == p for d in A.orders) and _is_prime(p)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def _is_direct_sum(A: GroupSpec, H: Subgroup, K: Subgroup) -> bool:
    inter = H.element_set() & K.element_set()
    return len(inter) == 1 and H.order * K.order == A.cardinality


def _greedy_extend_basis(
    A: GroupSpec, basis: list[GroupElement], pool: Iterable[GroupElement]
) -> None:
    """Extend `basis` in place with pool vectors independent of it, taking
    the first admissible vector in canonical element order each time."""
    for v in pool:
        if v.is_zero():
            continue
        span = subgroup_closure(A, basis)
        if v in span:
            continue
        basis.append(v)


def _pair_duality_elementary(
    A: GroupSpec, H: Subgroup, K: Subgroup
) -> Duality:
    p = A.orders[0]
    n = A.rank
    inter = sorted(H.element_set() & K.element_set())
    inter_elems = [A.element(c) for c in inter]

    basis: list[GroupElement] = []
    _greedy_extend_basis(A, basis, inter_elems)
    i = len(basis)
    _greedy_extend_basis(A, basis, H.elements)
    h = len(basis)
    _greedy_extend_basis(A, basis, K.elements)
    c = len(basis)  # = h + dim K - i
    _greedy_extend_basis(A, basis, A.elements())
    if len(basis) != n:
        raise AssertionError("basis completion failed")

    E = [list(e.coords) for e in basis]
    Einv = _invert_mod_p(E, p)

    # Index swap: the first i basis vectors (H cap K) pair with the final
    # i completion vectors; the middle block pairs with itself.
    def sigma(j: int) -> int:
        if j < i:
            return c + j
        if j < c:
            return j
        return j - c

    # Dual-basis character t_j is column j of Einv; phi(e_j) = t_{sigma(j)}.
    s_rows = [
        [Einv[r][sigma(l)] for r in range(n)] for l in range(n)
    ]
    tau_rows = []
    for r in range(n):
        row = [0] * n
        for l in range(n):
            for jj in range(n):
                row[jj] = (row[jj] + Einv[r][l] * s_rows[l][jj]) % p
        tau_rows.append(tuple(row))
    return Duality(Automorphism(A, A, tuple(tau_rows)))


def _invert_mod_p(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    aug = [
        [mat[r][j] % p for j in range(n)]
        + [1 if j == r else 0 for j in range(n)]
        for r in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _cyclic_decomposition(
    A: GroupSpec, H: Subgroup
) -> list[GroupElement]:
    """Independent generators h_1, ..., h_r of H with H = (+) <h_i>,
    found by backtracking with maximal-order elements first."""
    candidates = sorted(H.elements, key=lambda x: (-x.order, x.coords))

    def recurse(basis: list[GroupElement], size: int) -> Optional[list[GroupElement]]:
        if size == H.order:
            return basis
        for x in candidates:
            if x.is_zero():
                continue
            bigger = subgroup_closure(A, basis + [x])
            if bigger.order == size * x.order:
                out = recurse(basis + [x], bigger.order)
                if out is not None:
                    return out
        return None

    result = recurse([], 1)
    if result is None:
        raise AssertionError("cyclic decomposition not found")
    return result


def _factor_coordinates(
    A: GroupSpec, basis: list[GroupElement]
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Coordinates of each element of (+) <h_i> against the cyclic basis."""
    from itertools import product as iproduct

    coords = {}
    ranges = [range(b.order) for b in basis]
    for tup in iproduct(*ranges):
        x = A.zero()
        for ci, b in zip(tup, basis):
            x = x + ci * b
        coords[x.coords] = tup
    return coords


def _pair_duality_direct_sum(
    A: GroupSpec, H: Subgroup, K: Subgroup
) -> Duality:
    m = A.exponent
    basis_h = _cyclic_decomposition(A, H)
    basis_k = _cyclic_decomposition(A, K)
    coords_h = _factor_coordinates(A, basis_h)
    coords_k = _factor_coordinates(A, basis_k)

    decomp: dict[tuple[int, ...], tuple[GroupElement, GroupElement]] = {}
    for hc in coords_h:
        for kc in coords_k:
            s = A.element(hc) + A.element(kc)
            decomp[s.coords] = (A.element(hc), A.element(kc))
    if len(decomp) != A.cardinality:
        raise AssertionError("H and K do not decompose A")

    def factor_exp(
        x: GroupElement, y: GroupElement, basis: list[GroupElement], coords
    ) -> int:
        cx, cy = coords[x.coords], coords[y.coords]
        return sum(
            (m // b.order) * a * bb for a, bb, b in zip(cx, cy, basis)
        ) % m

    def iexp(a: GroupElement, b: GroupElement) -> int:
        ha, ka = decomp[a.coords]
        hb, kb = decomp[b.coords]
        return (
            factor_exp(ha, hb, basis_h, coords_h)
            + factor_exp(ka, kb, basis_k, coords_k)
        ) % m

    from .dualities import _duality_from_iexp_on_generators

    gens = A.generators()
    exps = [[iexp(gi, gj) for gj in gens] for gi in gens]
    return _duality_from_iexp_on_generators(A, exps)


def mult_by_p_filtration(
    A: GroupSpec, p: int, limits: Limits | None = None
) -> list[tuple[Subgroup, Subgroup]]:
    """(ker f^j, im f^j) for f(a) = p a, j = 0..N with f^N = 0.

    Each subgroup is checked to be characteristic."""
    if A.primes() != [p]:
        raise ValueError(f"group is not a {p}-group")
    N = 0
    m = A.exponent
    while m % p == 0:
        m //= p
        N += 1
    pairs = []
    for j in range(N + 1):
        q = p**j
        ker = subgroup_from_elements(
            A, [a for a in A.elements() if (q * a).is_zero()]
        )
        im = subgroup_from_elements(A, [q * a for a in A.elements()])
        for sub in (ker, im):
            if not is_characteristic(sub, limits):
                raise AssertionError("filtration subgroup is not characteristic")
        pairs.append((ker, im))
    return pairs


def verify_filtration_duality(
    A: GroupSpec, p: int | None = None, limits: Limits | None = None
) -> bool:
    """im f^j = L_phi(ker f^j) = R_phi(ker f^j) (and the mirrored pair)
    for every duality phi and every level j."""
    if p is None:
        primes = A.primes()
        if len(primes) != 1:
            raise ValueError("group is not a p-group")
        p = primes[0]
    pairs = mult_by_p_filtration(A, p, limits)
    dualities = all_dualities(A, limits)
    for phi in dualities:
        for ker, im in pairs:
            cker = code_from_subgroup(A, 1, ker)
            cim = code_from_subgroup(A, 1, im)
            if left_dual(cker, phi).subgroup != im:
                return False
            if right_dual(cker, phi).subgroup != im:
                return False
            if left_dual(cim, phi).subgroup != ker:
                return False
            if right_dual(cim, phi).subgroup != ker:
                return False
    return True


@dataclass(frozen=True)
class DependenceReport:
    """How the duals of a fixed subgroup vary with the duality."""

    subgroup: Subgroup
    left_classes: tuple[tuple[Subgroup, tuple[int, ...]], ...]
    right_classes: tuple[tuple[Subgroup, tuple[int, ...]], ...]
    characteristic: bool


def duality_dependence(
    H: Subgroup, limits: Limits | None = None
) -> DependenceReport:
    A = H.parent
    dualities = all_dualities(A, limits)
    CH = code_from_subgroup(A, 1, H)

    def partition(side) -> list[tuple[Subgroup, tuple[int, ...]]]:
        buckets: dict[frozenset, tuple[Subgroup, list[int]]] = {}
        for idx, phi in enumerate(dualities):
            dual = side(CH, phi).subgroup
            key = dual.element_set()
            buckets.setdefault(key, (dual, []))[1].append(idx)
        return [
            (sub, tuple(ids)) for sub, ids in sorted(
                buckets.values(), key=lambda t: t[1][0]
            )
        ]

    left = partition(left_dual)
    right = partition(right_dual)
    char = is_characteristic(H, limits)

    stab = stabilizer(H, limits)
    auts = automorphism_group(A, limits)
    expected_classes = len(auts) // len(stab)
    if len(right) != expected_classes or len(left) != expected_classes:
        raise AssertionError("dual-value classes do not match stabilizer cosets")
    stab_set = {t.matrix for t in stab}
    for _, ids in right:
        # Every class of equal right duals must be a coset phi_1 o stab(H).
        base = dualities[ids[0]].tau
        base_inv = base.inverse()
        for idx in ids[1:]:
            witness = dualities[idx].tau.compose(base_inv)
            if witness.matrix not in stab_set:
                raise AssertionError("right-dual class is not a stabilizer coset")
    if char != (len(right) == 1):
        raise AssertionError("characteristic test disagrees with dual dependence")
    return DependenceReport(
        subgroup=H,
        left_classes=tuple(left),
        right_classes=tuple(right),
        characteristic=char,
    )


def duals_table(
    A: GroupSpec,
    subgroups: Sequence[Subgroup],
    dualities: Sequence[Duality] | None = None,
    limits: Limits | None = None,
) -> list[dict]:
    """One row per duality: its tau matrix and the left/right dual of each
    selected subgroup, in the order given."""
    dualities = list(dualities) if dualities is not None else all_dualities(A, limits)
    rows = []
    for phi in dualities:
        entry = {"tau": [list(r) for r in phi.tau.matrix], "duals": []}
        for H in subgroups:
            CH = code_from_subgroup(A, 1, H)
            entry["duals"].append(
                {
                    "left": left_dual(CH, phi).subgroup,
                    "right": right_dual(CH, phi).subgroup,
                }
            )
        rows.append(entry)
    return rows
