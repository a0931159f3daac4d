"""Exact arithmetic for signed permutations (hyperoctahedral groups).

An element of rank n is stored in window form: ``window[i-1]`` is the
signed image w(i), an integer in {±1, …, ±n}.  The unsigned symmetric
group sits inside as the all-positive windows, and the even-sign-change
subgroup (type D) is cut out by :func:`SignedPermutation.parity_negative_entries`.

Cycle notation follows the convention that the sign written over a letter
applies to the image of that letter: the cycle ``(-1,+3,+8)`` sends
1 to -3, 3 to 8 and 8 to 1.  A cycle is negative when it carries an odd
number of minus signs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, RankMismatchError

MAX_RANK = 64


class SignedPermutation:
    """A signed permutation in window form.  Immutable and hashable."""

    __slots__ = ("n", "window")

    def __init__(self, window: Sequence[int]):
        window = tuple(window)
        n = len(window)
        if not 1 <= n <= MAX_RANK:
            raise ValueError(f"rank must be in 1..{MAX_RANK}, got {n}")
        if sorted(abs(v) for v in window) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation window: {window}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "window", window)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "SignedPermutation":
        """Build an element from signed cycles; unmentioned letters are fixed.

        Each cycle ``(c_1, …, c_k)`` sends |c_i| to sign(c_i)·|c_{i+1}|,
        indices mod k.
        """
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            if not cyc:
                raise ParseError("empty cycle")
            for c in cyc:
                a = abs(c)
                if not 1 <= a <= n:
                    raise ParseError(f"cycle letter {c} out of range 1..{n}")
                if a in seen:
                    raise ParseError(f"duplicate letter {a} across cycles")
                seen.add(a)
            k = len(cyc)
            for i, c in enumerate(cyc):
                nxt = cyc[(i + 1) % k]
                images[abs(c) - 1] = -abs(nxt) if c < 0 else abs(nxt)
        return cls(images)

    def __call__(self, i: int) -> int:
        """Signed image of a signed letter: w(-i) = -w(i)."""
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition acting on the left: (g*h)(i) = g(h(i))."""
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        if self.n != other.n:
            raise RankMismatchError(f"rank mismatch: {self.n} vs {other.n}")
        win = self.window
        return SignedPermutation(
            tuple(win[v - 1] if v > 0 else -win[-v - 1] for v in other.window)
        )

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            images[abs(v) - 1] = -i if v < 0 else i
        return SignedPermutation(images)

    def __invert__(self) -> "SignedPermutation":
        return self.inverse()

    def conjugate_by(self, g: "SignedPermutation") -> "SignedPermutation":
        """Return g·self·g⁻¹."""
        return g * self * g.inverse()

    def __pow__(self, k: int) -> "SignedPermutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = SignedPermutation.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        k = 1
        w = self
        ident = SignedPermutation.identity(self.n)
        while w != ident:
            w = w * self
            k += 1
        return k

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.window, start=1))

    def is_involution(self) -> bool:
        """True for elements of order dividing 2 (identity included)."""
        return (self * self).is_identity()

    def is_unsigned(self) -> bool:
        return all(v > 0 for v in self.window)

    def parity_negative_entries(self) -> int:
        """Number of negative window entries mod 2; 0 marks type-D membership."""
        return sum(1 for v in self.window if v < 0) & 1

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint signed cycles covering all letters, fixed points included.

        Each cycle starts at its smallest letter; cycles are ordered by
        that letter.  The sign over a letter is the sign of its image.
        """
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            a = start
            while not seen[a]:
                seen[a] = True
                v = self.window[a - 1]
                cyc.append(-a if v < 0 else a)
                a = abs(v)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> "SignedCycleType":
        neg, pos = [], []
        for cyc in self.cycles():
            minus = sum(1 for c in cyc if c < 0)
            (neg if minus & 1 else pos).append(len(cyc))
        return SignedCycleType(neg, pos)

    def to_codes(self) -> bytes:
        """Compact kernel encoding: code = ((|w(i)|-1) << 1) | (w(i) < 0)."""
        return bytes(((abs(v) - 1) << 1) | (v < 0) for v in self.window)

    @classmethod
    def from_codes(cls, codes: bytes) -> "SignedPermutation":
        return cls(tuple(-(c >> 1) - 1 if c & 1 else (c >> 1) + 1 for c in codes))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedPermutation)
            and self.n == other.n
            and self.window == other.window
        )

    def __hash__(self) -> int:
        return hash(self.window)

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"

    def __str__(self) -> str:
        return format_cycles(self)


def cycle_is_negative(cycle: Sequence[int]) -> bool:
    """A cycle is negative when it carries an odd number of minus signs."""
    return sum(1 for c in cycle if c < 0) % 2 == 1


@dataclass(frozen=True)
class SignedCycleType:
    """Conjugacy-class label: negative and positive cycle lengths, sorted.

    ``neg`` and ``pos`` are weakly increasing; fixed points appear as 1s
    in ``pos`` (or in ``neg`` when the fixed point carries a sign change).
    """

    neg: tuple[int, ...]
    pos: tuple[int, ...]

    def __init__(self, neg: Iterable[int], pos: Iterable[int]):
        neg = tuple(sorted(neg))
        pos = tuple(sorted(pos))
        if any(p < 1 for p in neg + pos):
            raise ValueError("cycle lengths must be positive")
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "pos", pos)

    @property
    def n(self) -> int:
        return sum(self.neg) + sum(self.pos)

    @property
    def num_neg(self) -> int:
        return len(self.neg)

    @property
    def num_cycles(self) -> int:
        return len(self.neg) + len(self.pos)

    def in_type_d(self) -> bool:
        """True when every element of this type has even sign-change parity."""
        return len(self.neg) % 2 == 0

    def splits_in_d(self) -> bool:
        """True when the type labels two distinct classes of the D subgroup."""
        return not self.neg and all(p % 2 == 0 for p in self.pos)

    def __str__(self) -> str:
        return ",".join(map(str, self.neg)) + ";" + ",".join(map(str, self.pos))

    def __repr__(self) -> str:
        return f"SignedCycleType({self.neg}, {self.pos})"


def all_cycle_types(n: int) -> list[SignedCycleType]:
    """All signed cycle types of rank n, deterministically ordered."""
    out = []
    for parts_neg, parts_pos in _split_partitions(n):
        out.append(SignedCycleType(parts_neg, parts_pos))
    return out


def _partitions(n: int, maxpart: int | None = None) -> list[tuple[int, ...]]:
    if maxpart is None:
        maxpart = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _split_partitions(n: int):
    for k in range(n + 1):
        for pneg in _partitions(k):
            for ppos in _partitions(n - k):
                yield pneg, ppos


# ---------------------------------------------------------------------------
# Text notation.
#
# Window form: "[s1,s2,...,sn]".  Cycle form: parenthesized comma- or
# space-separated signed integers, "+" optional, e.g. "(-1,+7,-2,-9)(5,-8)".
# Cycle type: "2,4;3" or the verbose "neg:2,4|pos:3".
# ---------------------------------------------------------------------------

_INT = r"[+\-−]?\d+"
_SEP = r"(?:\s*,\s*|\s+)"
_CYCLE_RE = re.compile(r"\(\s*(" + _INT + r"(?:" + _SEP + _INT + r")*)\s*\)")


def _to_int(tok: str) -> int:
    return int(tok.replace("−", "-"))


def parse_element(text: str, n: int) -> SignedPermutation:
    """Parse window or cycle notation into a rank-n element."""
    text = text.strip()
    if not text:
        raise ParseError("empty element text")
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated window: {text!r}")
        body = text[1:-1].strip()
        toks = re.split(_SEP, body) if body else []
        if "" in toks:
            raise ParseError(f"malformed window: {text!r}")
        if len(toks) != n:
            raise ParseError(f"window has {len(toks)} entries, expected {n}")
        try:
            window = [_to_int(t) for t in toks]
        except ValueError as exc:
            raise ParseError(f"bad window entry in {text!r}") from exc
        try:
            return SignedPermutation(window)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(text):
        if text[pos : m.start()].strip():
            raise ParseError(f"unexpected text {text[pos:m.start()]!r}")
        cycles.append([_to_int(t) for t in re.split(_SEP, m.group(1))])
        pos = m.end()
    if text[pos:].strip() or not cycles:
        raise ParseError(f"cannot parse element: {text!r}")
    return SignedPermutation.from_cycles(cycles, n)


def format_cycles(w: SignedPermutation) -> str:
    """Signed-cycle string with explicit signs, fixed points included."""
    return "".join(
        "(" + ",".join(f"{c:+d}" for c in cyc) + ")" for cyc in w.cycles()
    )


def format_window(w: SignedPermutation) -> str:
    return "[" + ",".join(str(v) for v in w.window) + "]"


def parse_cycle_type(text: str) -> SignedCycleType:
    """Parse "2,4;3" or "neg:2,4|pos:3" into a cycle type."""
    text = text.strip()
    m = re.fullmatch(r"neg:([\d,\s]*)\|pos:([\d,\s]*)", text)
    if m:
        negs, poss = m.group(1), m.group(2)
    elif ";" in text:
        negs, _, poss = text.partition(";")
    else:
        raise ParseError(f"cannot parse cycle type: {text!r}")

    def ints(s: str) -> list[int]:
        toks = [t for t in re.split(r"[\s,]+", s.strip()) if t]
        try:
            return [int(t) for t in toks]
        except ValueError as exc:
            raise ParseError(f"bad cycle-type part in {text!r}") from exc

    try:
        return SignedCycleType(ints(negs), ints(poss))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def all_elements(n: int, unsigned: bool = False) -> list[SignedPermutation]:
    """Every element of rank n (all 2^n·n!), or just the n! unsigned ones."""
    from itertools import permutations

    out = []
    signsets = [0] if unsigned else range(1 << n)
    for perm in permutations(range(1, n + 1)):
        for mask in signsets:
            out.append(
                SignedPermutation(
                    tuple(-v if mask >> i & 1 else v for i, v in enumerate(perm))
                )
            )
    return out
