"""Involution enumeration, exact excess, and conjugacy-class censuses for
the classical types.

The excess of w is the minimum of ℓ(σ) + ℓ(τ) − ℓ(w) over factorizations
w = στ into two involutions.  Every candidate σ satisfies σwσ = w⁻¹ (then
τ = σw is automatically an involution), so the scan enumerates involutions
once and filters by that reversal property.  Since the minimum can never
be negative, stopping at zero still returns the exact value.

Censuses materialize whole conjugacy classes, so every count here is an
exact integer; enumerations that would exceed the configured ceiling
raise ResourceBudgetError rather than truncating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import _kernels as K
from . import roots, reps
from .errors import ResourceBudgetError
from .signedperm import SignedCycleType, SignedPermutation, all_cycle_types

DEFAULT_MAX_GROUP_ORDER = 10**6

Partition = tuple[int, ...]


def group_order(flavor: str, n: int) -> int:
    fact = math.factorial(n)
    if flavor == "A":
        return fact
    if flavor == "B":
        return fact << n
    if flavor == "D":
        return fact << (n - 1)
    raise ValueError(f"unknown flavor {flavor!r}")


def _check_budget(flavor: str, n: int, budget: int) -> None:
    order = group_order(flavor, n)
    if order > budget:
        raise ResourceBudgetError(
            f"group of type {flavor} rank {n} has order {order}, "
            f"over the ceiling {budget}; raise --max-group-order to proceed"
        )


def generators(flavor: str, n: int) -> list[SignedPermutation]:
    """Simple reflections as window elements."""
    gens = []
    for i in range(1, n):
        win = list(range(1, n + 1))
        win[i - 1], win[i] = i + 1, i
        gens.append(SignedPermutation(win))
    if flavor == "B":
        gens.append(SignedPermutation(list(range(1, n)) + [-n]))
    elif flavor == "D":
        if n < 2:
            raise ValueError("type D needs rank at least 2")
        win = list(range(1, n + 1))
        win[n - 2], win[n - 1] = -n, -(n - 1)
        gens.append(SignedPermutation(win))
    return gens


# ---------------------------------------------------------------------------
# Involution enumeration: built directly as partial matchings (pairs carry
# ++ or -- signs, unmatched letters stay fixed or flip), far sparser than
# the full group.
# ---------------------------------------------------------------------------


def _involution_windows(letters: tuple[int, ...], images: dict[int, int], signed: bool):
    if not letters:
        yield dict(images)
        return
    a, rest = letters[0], letters[1:]
    images[a] = a
    yield from _involution_windows(rest, images, signed)
    if signed:
        images[a] = -a
        yield from _involution_windows(rest, images, signed)
    for k, b in enumerate(rest):
        sub = rest[:k] + rest[k + 1 :]
        images[a], images[b] = b, a
        yield from _involution_windows(sub, images, signed)
        if signed:
            images[a], images[b] = -b, -a
            yield from _involution_windows(sub, images, signed)
        del images[b]
    del images[a]


def involutions(flavor: str, n: int) -> Iterator[SignedPermutation]:
    """All elements of order dividing 2 (identity included), flavor-filtered."""
    letters = tuple(range(1, n + 1))
    for images in _involution_windows(letters, {}, flavor != "A"):
        w = SignedPermutation(tuple(images[i] for i in letters))
        if flavor == "D" and w.parity_negative_entries() != 0:
            continue
        yield w


def count_involutions(flavor: str, n: int) -> int:
    return sum(1 for _ in involutions(flavor, n))


# ---------------------------------------------------------------------------
# Shared per-group context for the kernel-driven scans.
# ---------------------------------------------------------------------------


@dataclass
class _GroupContext:
    flavor: str
    n: int
    length_map: dict[bytes, int]
    invs: list[bytes]
    inv_lengths: list[int]


@lru_cache(maxsize=16)
def _context(flavor: str, n: int) -> _GroupContext:
    from .signedperm import all_elements

    length_map: dict[bytes, int] = {}
    for w in all_elements(n, unsigned=(flavor == "A")):
        if flavor == "D" and w.parity_negative_entries() != 0:
            continue
        length_map[w.to_codes()] = roots.length(w, flavor)
    invs = []
    inv_lengths = []
    for w in involutions(flavor, n):
        codes = w.to_codes()
        invs.append(codes)
        inv_lengths.append(length_map[codes])
    return _GroupContext(flavor, n, length_map, invs, inv_lengths)


def _context_checked(flavor: str, n: int, budget: int) -> _GroupContext:
    _check_budget(flavor, n, budget)
    return _context(flavor, n)


# ---------------------------------------------------------------------------
# Excess.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExcessReport:
    """Exact excess with a witnessing involution pair."""

    w: SignedPermutation
    flavor: str
    excess: int
    sigma: SignedPermutation
    tau: SignedPermutation
    reversing_examined: int

    def witness_valid(self) -> bool:
        return (
            self.sigma.is_involution()
            and self.tau.is_involution()
            and self.sigma * self.tau == self.w
            and roots.length(self.sigma, self.flavor)
            + roots.length(self.tau, self.flavor)
            - roots.length(self.w, self.flavor)
            == self.excess
        )


def reversing_involutions(
    w: SignedPermutation, flavor: str = "B", budget: int = DEFAULT_MAX_GROUP_ORDER
) -> Iterator[SignedPermutation]:
    """All involutions σ (identity included) with σwσ = w⁻¹.

    Each yields the factorization w = σ·(σw) into involutions.
    """
    _check_budget(flavor, n := w.n, budget)
    if flavor == "A" and not w.is_unsigned():
        raise ValueError("type-A excess needs an unsigned element")
    if flavor == "D":
        roots.require_type_d(w)
    w_inv = w.inverse()
    for s in involutions(flavor, n):
        if s * w * s == w_inv:
            yield s


def excess(
    w: SignedPermutation, flavor: str = "B", budget: int = DEFAULT_MAX_GROUP_ORDER
) -> ExcessReport:
    """Exact excess of w, scanning reversing involutions with early exit at 0."""
    if flavor == "A" and not w.is_unsigned():
        raise ValueError("type-A excess needs an unsigned element")
    if flavor == "D":
        roots.require_type_d(w)
    ctx = _context_checked(flavor, w.n, budget)
    codes = w.to_codes()
    w_inv = K.inverse(codes)
    l_w = ctx.length_map[codes]
    best, idx, examined = K.reversing_excess(
        codes, w_inv, ctx.invs, ctx.inv_lengths, ctx.length_map, l_w
    )
    if best < 0:
        raise RuntimeError("no involution factorization found (should not happen)")
    sigma = SignedPermutation.from_codes(ctx.invs[idx])
    return ExcessReport(
        w=w,
        flavor=flavor,
        excess=best,
        sigma=sigma,
        tau=sigma * w,
        reversing_examined=examined,
    )


def involution_pair_count(
    w: SignedPermutation, flavor: str = "B", budget: int = DEFAULT_MAX_GROUP_ORDER
) -> tuple[int, int]:
    """(number of involution pairs (x, y) with xy = w, number additive)."""
    ctx = _context_checked(flavor, w.n, budget)
    codes = w.to_codes()
    return K.reversing_stats(
        codes, K.inverse(codes), ctx.invs, ctx.inv_lengths, ctx.length_map,
        ctx.length_map[codes],
    )


# ---------------------------------------------------------------------------
# Conjugacy classes and censuses.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassDescriptor:
    """A conjugacy-class label.

    ``n`` is the window size (the letter count; for flavor A this is the
    number of permuted letters).  ``label`` is a signed cycle type for
    flavors B/D and a decreasing partition for flavor A.  ``split`` tags
    the two halves of a type that separates in the even subgroup.
    """

    flavor: str
    n: int
    label: SignedCycleType | Partition
    split: str | None = None

    def __post_init__(self):
        if self.flavor in ("B", "D"):
            if not isinstance(self.label, SignedCycleType) or self.label.n != self.n:
                raise ValueError("label must be a signed cycle type of the full rank")
        else:
            if sum(self.label) != self.n:
                raise ValueError("label must be a partition of the letter count")
        if self.split is not None:
            if self.flavor != "D" or not self.label.splits_in_d():
                raise ValueError("split tag only applies to splitting D types")
            if self.split not in ("plus", "minus"):
                raise ValueError("split tag must be 'plus' or 'minus'")

    def label_str(self) -> str:
        if self.flavor == "A":
            return ",".join(map(str, self.label))
        base = str(self.label)
        return base + {"plus": "+", "minus": "-", None: ""}[self.split]


def all_class_descriptors(flavor: str, n: int) -> list[ClassDescriptor]:
    """Every conjugacy-class label of the group, deterministically ordered."""
    if flavor == "A":
        from .signedperm import _partitions

        return [ClassDescriptor("A", n, parts) for parts in _partitions(n)]
    out = []
    for ct in all_cycle_types(n):
        if flavor == "B":
            out.append(ClassDescriptor("B", n, ct))
        elif ct.in_type_d():
            if ct.splits_in_d():
                out.append(ClassDescriptor("D", n, ct, "plus"))
                out.append(ClassDescriptor("D", n, ct, "minus"))
            else:
                out.append(ClassDescriptor("D", n, ct))
    return out


def _partition_label(w: SignedPermutation) -> Partition:
    return tuple(sorted((len(c) for c in w.cycles()), reverse=True))


def conjugacy_class(
    desc: ClassDescriptor, budget: int = DEFAULT_MAX_GROUP_ORDER
) -> list[SignedPermutation]:
    """All elements of the class, materialized."""
    from .signedperm import all_elements

    _check_budget(desc.flavor, desc.n, budget)
    if desc.flavor == "A":
        return [
            w
            for w in all_elements(desc.n, unsigned=True)
            if _partition_label(w) == desc.label
        ]
    if desc.flavor == "B":
        return [w for w in all_elements(desc.n) if w.cycle_type() == desc.label]
    if desc.split is None:
        return [
            w
            for w in all_elements(desc.n)
            if w.parity_negative_entries() == 0 and w.cycle_type() == desc.label
        ]
    rep = (
        reps.min_length_rep(desc.label)
        if desc.split == "plus"
        else reps.min_length_rep_twisted(desc.label)
    )
    gens = [g.to_codes() for g in generators("D", desc.n)]
    try:
        orbit = K.conjugacy_orbit(rep.to_codes(), gens, budget)
    except RuntimeError as exc:
        raise ResourceBudgetError(str(exc)) from exc
    return [SignedPermutation.from_codes(c) for c in orbit]


@dataclass(frozen=True)
class ClassCensus:
    """Exact per-class statistics.

    ``excess_histogram`` maps excess values to counts over the max-length
    elements only; ``exists_max_zero`` and ``all_max_zero`` summarize it.
    """

    descriptor: ClassDescriptor
    size: int
    min_length: int
    max_length: int
    max_count: int
    excess_histogram: dict[int, int]
    exists_max_zero: bool
    all_max_zero: bool


def class_census(
    desc: ClassDescriptor, budget: int = DEFAULT_MAX_GROUP_ORDER
) -> ClassCensus:
    """Materialize one class and survey excess over its longest elements."""
    members = conjugacy_class(desc, budget)
    ctx = _context_checked(desc.flavor, desc.n, budget)
    codes = [w.to_codes() for w in members]
    lengths = [ctx.length_map[c] for c in codes]
    lo, hi = min(lengths), max(lengths)
    histogram: dict[int, int] = {}
    max_count = 0
    for c, l in zip(codes, lengths):
        if l != hi:
            continue
        max_count += 1
        best, _, _ = K.reversing_excess(
            c, K.inverse(c), ctx.invs, ctx.inv_lengths, ctx.length_map, l
        )
        assert best >= 0
        histogram[best] = histogram.get(best, 0) + 1
    return ClassCensus(
        descriptor=desc,
        size=len(members),
        min_length=lo,
        max_length=hi,
        max_count=max_count,
        excess_histogram=dict(sorted(histogram.items())),
        exists_max_zero=histogram.get(0, 0) > 0,
        all_max_zero=set(histogram) <= {0},
    )


def sweep_all_classes(
    flavor: str, n: int, budget: int = DEFAULT_MAX_GROUP_ORDER
) -> list[ClassCensus]:
    return [class_census(d, budget) for d in all_class_descriptors(flavor, n)]


# ---------------------------------------------------------------------------
# Direct-product reduction check on a small product group.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProductReductionReport:
    pairs_checked: int
    length_additive: bool
    excess_additive: bool
    max_iff_componentwise: bool

    @property
    def passed(self) -> bool:
        return self.length_additive and self.excess_additive and self.max_iff_componentwise


def check_product_reduction(
    b_rank: int = 2, a_letters: int = 3, budget: int = DEFAULT_MAX_GROUP_ORDER
) -> ProductReductionReport:
    """Exhaustively verify length/excess additivity and the componentwise
    max-length criterion on a product of two small groups.

    The product is embedded on disjoint letters so its length can be
    counted directly over the union of the two root systems, independent
    of the componentwise sum it is compared with.
    """
    from .signedperm import all_elements

    _check_budget("B", b_rank, budget)
    _check_budget("A", a_letters, budget)
    g1 = all_elements(b_rank)
    g2 = all_elements(a_letters, unsigned=True)
    inv1 = [x for x in involutions("B", b_rank)]
    inv2 = [x for x in involutions("A", a_letters)]
    len1 = {x: roots.length_B(x) for x in g1}
    len2 = {x: roots.length_A(x) for x in g2}

    union_roots = [r for r in roots.positive_roots("B", b_rank)] + [
        (i, -j)
        for i in range(b_rank + 1, b_rank + a_letters)
        for j in range(i + 1, b_rank + a_letters + 1)
    ]

    def embed(w1: SignedPermutation, w2: SignedPermutation) -> SignedPermutation:
        return SignedPermutation(w1.window + tuple(v + b_rank for v in w2.window))

    def union_length(w1, w2) -> int:
        big = embed(w1, w2)
        return sum(
            1 for r in union_roots if not roots.root_is_positive(roots.act(big, r))
        )

    def product_excess(w1, w2):
        w1i, w2i = w1.inverse(), w2.inverse()
        best = None
        for s1 in inv1:
            if s1 * w1 * s1 != w1i:
                continue
            e1 = len1[s1] + len1[s1 * w1] - len1[w1]
            for s2 in inv2:
                if s2 * w2 * s2 != w2i:
                    continue
                e2 = len2[s2] + len2[s2 * w2] - len2[w2]
                if best is None or e1 + e2 < best:
                    best = e1 + e2
        return best

    class_max: dict[tuple, int] = {}
    for x in g1:
        for y in g2:
            t = (x.cycle_type(), _partition_label(y))
            class_max[t] = max(class_max.get(t, -1), union_length(x, y))

    max1 = {}
    for x in g1:
        t = x.cycle_type()
        max1[t] = max(max1.get(t, 0), len1[x])
    max2 = {}
    for y in g2:
        t = _partition_label(y)
        max2[t] = max(max2.get(t, 0), len2[y])

    pairs = 0
    length_ok = True
    excess_ok = True
    max_ok = True
    for w1 in g1:
        e1 = excess(w1, "B", budget).excess
        for w2 in g2:
            pairs += 1
            if union_length(w1, w2) != len1[w1] + len2[w2]:
                length_ok = False
            e2 = excess(w2, "A", budget).excess
            if product_excess(w1, w2) != e1 + e2:
                excess_ok = False
            comp_max = len1[w1] == max1[w1.cycle_type()] and len2[w2] == max2[
                _partition_label(w2)
            ]
            prod_max = (
                union_length(w1, w2)
                == class_max[(w1.cycle_type(), _partition_label(w2))]
            )
            if comp_max != prod_max:
                max_ok = False
    return ProductReductionReport(
        pairs_checked=pairs,
        length_additive=length_ok,
        excess_additive=excess_ok,
        max_iff_componentwise=max_ok,
    )
