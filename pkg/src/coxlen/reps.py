"""Explicit class representatives, involution factorizations and the
closed-form length extrema for the classical types.

The constructions:

* stair elements: interleaved-sequence representatives of maximal length
  in unsigned conjugacy classes, with an involution pair built from
  sequence reversals;
* block representatives of minimal signed length (one cycle per part,
  a single sign on the largest letter of each negative cycle) and their
  twists by the last sign change;
* signed block representatives of maximal length (all-minus cycles up to
  a split point, then minus cycles closed by a plus), with involution
  pairs built from interval reversals;
* the length extrema of a conjugacy class as closed forms in its signed
  cycle type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import roots
from .signedperm import SignedCycleType, SignedPermutation


# ---------------------------------------------------------------------------
# Type A: stair sequence, corresponding elements, reversal involutions.
# ---------------------------------------------------------------------------


def stair_sequence(n: int) -> tuple[int, ...]:
    """The interleaved sequence 1, n, 2, n-1, 3, n-2, …"""
    if n < 1:
        raise ValueError("n must be positive")
    seq = []
    for i in range(1, n // 2 + 2):
        seq.append(i)
        seq.append(n - i + 1)
    return tuple(seq[:n])


def is_maximal_partition(parts: Sequence[int]) -> bool:
    """Even parts (any order) first, then odd parts weakly decreasing."""
    if any(p < 1 for p in parts):
        return False
    odd = [p for p in parts if p % 2 == 1]
    first_odd = next((k for k, p in enumerate(parts) if p % 2 == 1), len(parts))
    if any(p % 2 == 1 for p in parts[:first_odd]):
        return False
    tail = parts[first_odd:]
    if any(p % 2 == 0 for p in tail):
        return False
    return list(tail) == sorted(odd, reverse=True)


def normalize_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Reorder a multiset of parts into canonical maximal form."""
    parts = list(parts)
    if any(p < 1 for p in parts):
        raise ValueError("parts must be positive")
    evens = sorted((p for p in parts if p % 2 == 0), reverse=True)
    odds = sorted((p for p in parts if p % 2 == 1), reverse=True)
    return tuple(evens + odds)


def stair_cycles(parts: Sequence[int]) -> list[tuple[int, ...]]:
    """Consecutive blocks of the stair sequence, one cycle per part."""
    n = sum(parts)
    seq = stair_sequence(n)
    cycles = []
    pos = 0
    for p in parts:
        cycles.append(seq[pos : pos + p])
        pos += p
    return cycles


def stair_element(parts: Sequence[int]) -> SignedPermutation:
    """The maximal-length class representative for a maximal partition."""
    if not is_maximal_partition(parts):
        raise ValueError(
            f"{tuple(parts)} is not in maximal form; use normalize_partition"
        )
    return SignedPermutation.from_cycles(stair_cycles(parts), sum(parts))


def _reversal(seq: Sequence[int], n: int) -> SignedPermutation:
    """The involution reversing the listed letters and fixing the rest."""
    images = list(range(1, n + 1))
    k = len(seq)
    for i, b in enumerate(seq):
        images[b - 1] = seq[k - 1 - i]
    return SignedPermutation(images)


def cycle_involution_pair(
    cycle: Sequence[int], n: int
) -> tuple[SignedPermutation, SignedPermutation]:
    """Involutions (sigma, tau) with sigma·tau equal to the given cycle.

    For even length, sigma reverses the whole letter sequence and tau all
    but the last letter; for odd length, sigma skips the first letter and
    tau reverses everything.
    """
    k = len(cycle)
    if k % 2 == 0:
        sigma = _reversal(cycle, n)
        tau = _reversal(cycle[:-1], n)
    else:
        sigma = _reversal(cycle[1:], n)
        tau = _reversal(cycle, n)
    return sigma, tau


# ---------------------------------------------------------------------------
# Interval reversals and signed cycle gadgets.
# ---------------------------------------------------------------------------


def reversal_involution(a: int, k: int, n: int) -> SignedPermutation:
    """Reverse the letters a+1 … a+k in place, all signs positive."""
    if a < 0 or k < 0 or a + k > n:
        raise ValueError(f"interval [{a + 1}, {a + k}] out of range 1..{n}")
    images = list(range(1, n + 1))
    for i in range(1, k + 1):
        images[a + i - 1] = a + k + 1 - i
    return SignedPermutation(images)


def negating_reversal(a: int, k: int, n: int) -> SignedPermutation:
    """Reverse the letters a+1 … a+k with every sign flipped."""
    if a < 0 or k < 0 or a + k > n:
        raise ValueError(f"interval [{a + 1}, {a + k}] out of range 1..{n}")
    images = list(range(1, n + 1))
    for i in range(1, k + 1):
        images[a + i - 1] = -(a + k + 1 - i)
    return SignedPermutation(images)


def cycle_gadget(
    a: int, k: int, sign: str, n: int
) -> tuple[SignedPermutation, SignedPermutation, SignedPermutation]:
    """A signed k-cycle on a+1 … a+k with its involution pair (w, sigma, tau).

    ``sign`` "-" gives the all-minus cycle; "+" closes the cycle with a
    plus on its largest letter.
    """
    if a < 0 or k < 1 or a + k > n:
        raise ValueError(f"interval [{a + 1}, {a + k}] out of range 1..{n}")
    letters = list(range(a + 1, a + k + 1))
    if sign == "-":
        w = SignedPermutation.from_cycles([tuple(-b for b in letters)], n)
        sigma = negating_reversal(a, k, n)
        tau = reversal_involution(a, k - 1, n)
    elif sign == "+":
        entries = tuple(-b for b in letters[:-1]) + (letters[-1],)
        w = SignedPermutation.from_cycles([entries], n)
        sigma = negating_reversal(a + 1, k - 1, n)
        tau = reversal_involution(a, k, n)
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return w, sigma, tau


# ---------------------------------------------------------------------------
# Minimal-length block representatives.
# ---------------------------------------------------------------------------


def min_length_rep(ct: SignedCycleType) -> SignedPermutation:
    """The minimal-signed-length representative of a conjugacy class.

    Positive cycles occupy the lowest letters, largest part first; then
    negative cycles, largest part first, each carrying a single minus
    sign on its largest letter.
    """
    n = ct.n
    cycles = []
    pos = 0
    for p in sorted(ct.pos, reverse=True):
        cycles.append(tuple(range(pos + 1, pos + p + 1)))
        pos += p
    for p in sorted(ct.neg, reverse=True):
        letters = list(range(pos + 1, pos + p + 1))
        cycles.append(tuple(letters[:-1]) + (-letters[-1],))
        pos += p
    w = SignedPermutation.from_cycles(cycles, n)
    assert w.cycle_type() == ct
    return w


def twist_by_last_sign(w: SignedPermutation) -> SignedPermutation:
    """Conjugate by the single sign change on the largest letter."""
    n = w.n
    t = SignedPermutation(tuple(range(1, n)) + (-n,))
    return t * w * t


def min_length_rep_twisted(ct: SignedCycleType) -> SignedPermutation:
    return twist_by_last_sign(min_length_rep(ct))


# ---------------------------------------------------------------------------
# Maximal-length block representatives.
# ---------------------------------------------------------------------------


def is_maximal_split(parts: Sequence[int], rho: int) -> bool:
    """Both segments of the composition are weakly decreasing."""
    if not 0 <= rho <= len(parts) or any(p < 1 for p in parts):
        return False
    head, tail = list(parts[:rho]), list(parts[rho:])
    return head == sorted(head, reverse=True) and tail == sorted(tail, reverse=True)


def max_length_rep(parts: Sequence[int], rho: int) -> SignedPermutation:
    """The maximal-length representative with all-minus cycles up to the
    split point and plus-closed minus cycles after it."""
    if not is_maximal_split(parts, rho):
        raise ValueError(f"({tuple(parts)}, rho={rho}) is not a maximal split")
    n = sum(parts)
    cycles = []
    pos = 0
    for i, p in enumerate(parts):
        letters = list(range(pos + 1, pos + p + 1))
        if i < rho:
            cycles.append(tuple(-b for b in letters))
        else:
            cycles.append(tuple(-b for b in letters[:-1]) + (letters[-1],))
        pos += p
    return SignedPermutation.from_cycles(cycles, n)


def normalize_split_type(ct: SignedCycleType) -> tuple[tuple[int, ...], int]:
    """The (parts, rho) whose maximal-length representative lies in the
    class labelled by ct.

    All-minus cycles are negative exactly for odd parts and plus-closed
    cycles exactly for even parts, which forces the assignment; the
    construction is verified against the requested type.
    """
    head = sorted(
        [p for p in ct.neg if p % 2 == 1] + [p for p in ct.pos if p % 2 == 0],
        reverse=True,
    )
    tail = sorted(
        [p for p in ct.neg if p % 2 == 0] + [p for p in ct.pos if p % 2 == 1],
        reverse=True,
    )
    parts, rho = tuple(head + tail), len(head)
    assert max_length_rep(parts, rho).cycle_type() == ct
    return parts, rho


def max_length_rep_for_type(ct: SignedCycleType) -> SignedPermutation:
    parts, rho = normalize_split_type(ct)
    return max_length_rep(parts, rho)


def longest_element(flavor: str, n: int) -> SignedPermutation:
    """The unique maximal-length element; it negates every positive root
    of its system."""
    if flavor == "A":
        return SignedPermutation(range(n, 0, -1))
    if flavor == "B":
        return SignedPermutation([-i for i in range(1, n + 1)])
    if flavor == "D":
        if n < 2:
            raise ValueError("type D needs rank at least 2")
        if n % 2 == 0:
            return SignedPermutation([-i for i in range(1, n + 1)])
        return SignedPermutation([-i for i in range(1, n)] + [n])
    raise ValueError(f"unknown flavor {flavor!r}")


def dual_cycle_type(ct: SignedCycleType) -> SignedCycleType:
    """Cycle type after multiplying by the all-sign-flip central element.

    Each letter of a cycle gains one sign, so odd parts flip between
    negative and positive while even parts keep their side.
    """
    neg = [p for p in ct.neg if p % 2 == 0] + [p for p in ct.pos if p % 2 == 1]
    pos = [p for p in ct.neg if p % 2 == 1] + [p for p in ct.pos if p % 2 == 0]
    return SignedCycleType(neg, pos)


# ---------------------------------------------------------------------------
# Closed-form length extrema.
# ---------------------------------------------------------------------------


def _weighted_tail_sum(neg_parts: Sequence[int]) -> int:
    """Σ (ν−i)·λ_i over the weakly increasing negative parts."""
    nu = len(neg_parts)
    return sum((nu - i) * p for i, p in enumerate(neg_parts, start=1))


@dataclass(frozen=True)
class LengthFormulas:
    """Closed-form length extrema of a conjugacy class.

    ``min_d``/``max_d`` are None when the class does not lie in the
    even-sign-change subgroup.  ``max_d_alt`` is a superficially similar
    display form that overstates the true maximum by 2n on some classes;
    it is retained so reports can show the discrepancy explicitly.
    """

    ct: SignedCycleType
    n: int
    min_b: int
    max_b: int
    min_d: int | None
    max_d: int | None
    dual: SignedCycleType
    max_d_alt: int | None

    def as_dict(self) -> dict:
        return {
            "label": str(self.ct),
            "min_len_B": self.min_b,
            "max_len_B": self.max_b,
            "min_len_D": self.min_d,
            "max_len_D": self.max_d,
        }


def length_formulas(ct: SignedCycleType) -> LengthFormulas:
    n = ct.n
    nu, z = ct.num_neg, ct.num_cycles
    s = _weighted_tail_sum(ct.neg)
    min_b = n + nu - z + 2 * s
    min_d = n - z + 2 * s

    dual = dual_cycle_type(ct)
    nu0, z0 = dual.num_neg, dual.num_cycles
    s0 = _weighted_tail_sum(dual.neg)
    min_lambda0 = n - z0 + 2 * s0
    max_b = n * n - min_lambda0 - nu0
    max_d = n * n - n - min_lambda0

    in_d = ct.in_type_d()
    return LengthFormulas(
        ct=ct,
        n=n,
        min_b=min_b,
        max_b=max_b,
        min_d=min_d if in_d else None,
        max_d=max_d if in_d else None,
        dual=dual,
        max_d_alt=(n * n + z0 - 2 * s0) if in_d else None,
    )


# ---------------------------------------------------------------------------
# Factorization certificates.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorizationCertificate:
    """An involution pair with disjoint inversion sets.

    Such a pair witnesses that the lengths of sigma and tau add up to the
    length of w, i.e. that w has excess zero in the given flavor.
    """

    w: SignedPermutation
    sigma: SignedPermutation
    tau: SignedPermutation
    flavor: str

    def problems(self) -> list[str]:
        out = []
        if not self.sigma.is_involution():
            out.append("sigma is not an involution")
        if not self.tau.is_involution():
            out.append("tau is not an involution")
        if self.sigma * self.tau != self.w:
            out.append("sigma*tau != w")
        if self.flavor == "A":
            if not (self.w.is_unsigned() and self.sigma.is_unsigned() and self.tau.is_unsigned()):
                out.append("type-A certificate must be unsigned")
        if self.flavor == "D":
            for name, x in (("w", self.w), ("sigma", self.sigma), ("tau", self.tau)):
                if x.parity_negative_entries() != 0:
                    out.append(f"{name} is outside the type-D subgroup")
        if out:
            return out
        if roots.inversion_bitset(self.sigma, self.flavor) & roots.inversion_bitset(
            self.tau, self.flavor
        ):
            out.append("inversion sets overlap")
        lw = roots.length(self.w, self.flavor)
        ls = roots.length(self.sigma, self.flavor)
        lt = roots.length(self.tau, self.flavor)
        if lw != ls + lt:
            out.append(f"lengths not additive: {lw} != {ls} + {lt}")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def lengths(self) -> tuple[int, int, int]:
        f = self.flavor
        return (
            roots.length(self.w, f),
            roots.length(self.sigma, f),
            roots.length(self.tau, f),
        )


def certificate_A(parts: Sequence[int]) -> FactorizationCertificate:
    """Involution factorization of the stair element of a maximal partition."""
    n = sum(parts)
    w = stair_element(parts)
    sigma = SignedPermutation.identity(n)
    tau = SignedPermutation.identity(n)
    for cyc in stair_cycles(parts):
        s, t = cycle_involution_pair(cyc, n)
        sigma = sigma * s
        tau = tau * t
    return FactorizationCertificate(w=w, sigma=sigma, tau=tau, flavor="A")


def certificate_BD(
    parts: Sequence[int], rho: int, flavor: str = "B"
) -> FactorizationCertificate:
    """Involution factorization of a maximal-split block representative."""
    if flavor not in ("B", "D"):
        raise ValueError("flavor must be 'B' or 'D'")
    n = sum(parts)
    w = max_length_rep(parts, rho)
    sigma = SignedPermutation.identity(n)
    tau = SignedPermutation.identity(n)
    pos = 0
    for i, p in enumerate(parts):
        _, s, t = cycle_gadget(pos, p, "-" if i < rho else "+", n)
        sigma = sigma * s
        tau = tau * t
        pos += p
    return FactorizationCertificate(w=w, sigma=sigma, tau=tau, flavor=flavor)
