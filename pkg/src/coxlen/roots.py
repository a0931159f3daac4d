"""Root systems for the classical types and inversion-set length functions.

A root is a plain tuple ``(a, b)``: the vector sign(a)·e_|a| + sign(b)·e_|b|,
with ``b = 0`` for the short roots ±e_i and |a| < |b| for the long roots
±e_i ± e_j.  A root is positive exactly when ``a > 0``.

Inversion sets are dense bitmasks over the rank-n positive-root table,
ordered short roots first (e_1 … e_n), then differences e_i − e_j in
lexicographic order, then sums e_i + e_j.  The unsigned (type A) and
long-roots-only (type D) computations reuse the same index space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotInSubgroupError
from .signedperm import SignedPermutation

Root = tuple[int, int]

FLAVORS = ("A", "B", "D")


def root_is_positive(r: Root) -> bool:
    return r[0] > 0


def root_negate(r: Root) -> Root:
    return (-r[0], -r[1])


def root_is_long(r: Root) -> bool:
    return r[1] != 0


def act(w: SignedPermutation, r: Root) -> Root:
    """Linear action w(e_i) = sign(w(i))·e_|w(i)|, recanonicalized."""
    a, b = r
    if b == 0:
        return (w(a), 0)
    u, v = w(a), w(b)
    if abs(u) > abs(v):
        u, v = v, u
    return (u, v)


def positive_roots(flavor: str, n: int) -> list[Root]:
    """Positive roots in dense index order for the given flavor."""
    shorts = [(i, 0) for i in range(1, n + 1)]
    diffs = [(i, -j) for i in range(1, n) for j in range(i + 1, n + 1)]
    sums = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    if flavor == "A":
        return diffs
    if flavor == "B":
        return shorts + diffs + sums
    if flavor == "D":
        return diffs + sums
    raise ValueError(f"unknown flavor {flavor!r}")


@dataclass(frozen=True)
class RootSystemView:
    """A flavor tag plus rank, with the standard positive-root count."""

    flavor: str
    n: int

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.n < 1:
            raise ValueError("rank must be positive")

    @property
    def num_positive(self) -> int:
        n = self.n
        return {"A": n * (n - 1) // 2, "B": n * n, "D": n * n - n}[self.flavor]

    def positive_roots(self) -> list[Root]:
        roots = positive_roots(self.flavor, self.n)
        assert len(roots) == self.num_positive
        return roots


def root_index(n: int, r: Root) -> int:
    """Dense index of a positive root in the rank-n table."""
    a, b = r
    if a <= 0:
        raise ValueError(f"not a positive root: {r}")
    if b == 0:
        return a - 1
    i, j = a, abs(b)
    pair = (i - 1) * (2 * n - i) // 2 + (j - i - 1)
    base = n if b < 0 else n + n * (n - 1) // 2
    return base + pair


def root_from_index(n: int, idx: int) -> Root:
    for r in positive_roots("B", n):
        if root_index(n, r) == idx:
            return r
    raise ValueError(f"index {idx} out of range")


# ---------------------------------------------------------------------------
# Inversion counting.  The direct counters avoid materializing bitsets and
# carry all length computations; the bitset builders feed the set-identity
# checks and factorization certificates.
# ---------------------------------------------------------------------------


def sigma_size(w: SignedPermutation) -> int:
    """|Σ(w)|: number of short positive roots sent negative."""
    return sum(1 for v in w.window if v < 0)


def lambda_size(w: SignedPermutation) -> int:
    """|Λ(w)|: number of long positive roots sent negative."""
    win = w.window
    n = w.n
    total = 0
    for i in range(n - 1):
        u = win[i]
        au = abs(u)
        for j in range(i + 1, n):
            v = win[j]
            if au < abs(v):
                if u < 0:
                    total += 2
            else:
                total += 1
    return total


def length_B(w: SignedPermutation) -> int:
    """Coxeter length in the full signed group: |Λ(w)| + |Σ(w)|."""
    return lambda_size(w) + sigma_size(w)


def length_D(w: SignedPermutation) -> int:
    """|Λ(w)|; the Coxeter length of w in the even subgroup when w lies there."""
    return lambda_size(w)


def length_A(w: SignedPermutation) -> int:
    """Inversion count of an unsigned window."""
    if not w.is_unsigned():
        raise ValueError("type-A length needs an unsigned window")
    win = w.window
    return sum(
        1
        for i in range(w.n - 1)
        for j in range(i + 1, w.n)
        if win[i] > win[j]
    )


def length(w: SignedPermutation, flavor: str) -> int:
    if flavor == "A":
        return length_A(w)
    if flavor == "B":
        return length_B(w)
    if flavor == "D":
        return length_D(w)
    raise ValueError(f"unknown flavor {flavor!r}")


def inversion_bitset(w: SignedPermutation, flavor: str) -> int:
    """Bitmask of the flavor's positive roots sent negative by w."""
    if flavor == "A" and not w.is_unsigned():
        raise ValueError("type-A inversion set needs an unsigned window")
    n = w.n
    bits = 0
    for r in positive_roots(flavor, n):
        if not root_is_positive(act(w, r)):
            bits |= 1 << root_index(n, r)
    return bits


def inversion_set_A(w: SignedPermutation) -> int:
    """N(w) for an unsigned window, as a bitmask of difference roots."""
    return inversion_bitset(w, "A")


def lambda_set(w: SignedPermutation) -> int:
    """Λ(w) as a bitmask."""
    return inversion_bitset(w, "D")


def sigma_set(w: SignedPermutation) -> int:
    """Σ(w) as a bitmask: bit i-1 set exactly when w(i) < 0."""
    bits = 0
    for i, v in enumerate(w.window):
        if v < 0:
            bits |= 1 << i
    return bits


def bitset_roots(bits: int, n: int) -> list[Root]:
    table = positive_roots("B", n)
    return [table[i] for i in range(n * n) if bits >> i & 1]


def transport_bitset(w: SignedPermutation, bits: int) -> tuple[int, int]:
    """Apply w to a set of positive roots.

    Returns ``(pos, neg)``: images that stay positive, and images that went
    negative recorded by their negatives.  Both are bitmasks.
    """
    n = w.n
    pos = neg = 0
    for r in bitset_roots(bits, n):
        img = act(w, r)
        if root_is_positive(img):
            pos |= 1 << root_index(n, img)
        else:
            neg |= 1 << root_index(n, root_negate(img))
    return pos, neg


def format_bitset(bits: int, n: int) -> str:
    """Human form of an inversion set, e.g. ``e1-e3, e2+e5, e4``."""

    def one(r: Root) -> str:
        a, b = r
        if b == 0:
            return f"e{a}"
        return f"e{a}-e{-b}" if b < 0 else f"e{a}+e{b}"

    return ", ".join(one(r) for r in bitset_roots(bits, n))


# ---------------------------------------------------------------------------
# Length and inversion-set identities.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LengthIdentityReport:
    """ℓ(gh) = ℓ(g) + ℓ(h) − 2·overlap, with the three terms recorded."""

    flavor: str
    len_g: int
    len_h: int
    len_gh: int
    overlap: int

    @property
    def holds(self) -> bool:
        return self.len_gh == self.len_g + self.len_h - 2 * self.overlap


def verify_length_identity(
    g: SignedPermutation, h: SignedPermutation, flavor: str = "B"
) -> LengthIdentityReport:
    """Check the product-length identity for the chosen flavor."""
    overlap = bin(inversion_bitset(g, flavor) & inversion_bitset(h.inverse(), flavor)).count("1")
    return LengthIdentityReport(
        flavor=flavor,
        len_g=length(g, flavor),
        len_h=length(h, flavor),
        len_gh=length(g * h, flavor),
        overlap=overlap,
    )


@dataclass(frozen=True)
class DisjointUnionReport:
    """Outcome of an inversion-set union check.

    ``hypothesis_met`` distinguishes inputs outside the statement's scope
    from genuine equality failures.
    """

    hypothesis_met: bool
    equality_holds: bool
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.hypothesis_met and self.equality_holds


def check_product_inversions(
    g: SignedPermutation, h: SignedPermutation, flavor: str = "B"
) -> DisjointUnionReport:
    """When N(g) ∩ N(h⁻¹) = ∅, confirm N(gh) = N(h) ∪̇ h⁻¹(N(g))."""
    ng = inversion_bitset(g, flavor)
    nh_inv = inversion_bitset(h.inverse(), flavor)
    if ng & nh_inv:
        return DisjointUnionReport(False, False, "N(g) meets N(h^-1)")
    nh = inversion_bitset(h, flavor)
    moved_pos, moved_neg = transport_bitset(h.inverse(), ng)
    if moved_neg:
        return DisjointUnionReport(False, False, "h^-1(N(g)) left the positive roots")
    if nh & moved_pos:
        return DisjointUnionReport(True, False, "union is not disjoint")
    ngh = inversion_bitset(g * h, flavor)
    if ngh != nh | moved_pos:
        return DisjointUnionReport(True, False, "set equality fails")
    return DisjointUnionReport(True, True)


def check_involution_product(
    factors: Sequence[SignedPermutation], flavor: str = "B"
) -> DisjointUnionReport:
    """For involutions t_i with t_i(N(t_j)) = N(t_j) (i ≠ j), confirm
    that N(t_1⋯t_m) is the disjoint union of the N(t_i)."""
    if not factors:
        return DisjointUnionReport(False, False, "no factors")
    sets = []
    for t in factors:
        if not t.is_involution():
            return DisjointUnionReport(False, False, "factor is not an involution")
        sets.append(inversion_bitset(t, flavor))
    for i, t in enumerate(factors):
        for j, bits in enumerate(sets):
            if i == j:
                continue
            pos, neg = transport_bitset(t, bits)
            if neg or pos != bits:
                return DisjointUnionReport(
                    False, False, f"factor {i} does not stabilize N(factor {j})"
                )
    union = 0
    for bits in sets:
        if union & bits:
            return DisjointUnionReport(True, False, "inversion sets overlap")
        union |= bits
    product = factors[0]
    for t in factors[1:]:
        product = product * t
    if inversion_bitset(product, flavor) != union:
        return DisjointUnionReport(True, False, "set equality fails")
    return DisjointUnionReport(True, True)


def require_type_d(w: SignedPermutation) -> None:
    if w.parity_negative_entries() != 0:
        raise NotInSubgroupError(
            "element has odd sign-change parity, not in the type-D subgroup"
        )
