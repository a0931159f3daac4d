"""Generic finite reflection engine driven by a Coxeter matrix.

Positive roots are built by closing the simple roots under the simple
reflections, with exact coordinates: plain integers when every bond is
crystallographic (2, 3, 4, 6) and golden integers a + bφ when the bonds
are from {2, 3, 5}.  Rank-2 systems take a separate dihedral model
(rotation index + flip) so arbitrary bond labels need no ring arithmetic.

Group elements are stored as signed permutations of the positive-root
index set (the kernel's bytes encoding), so length is a sign count and
all census machinery is shared with the classical-type sweeps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import _kernels as K
from .errors import CoxlenError, ParseError, ResourceBudgetError

DEFAULT_ROOT_CEILING = 10_000
DEFAULT_MAX_GROUP_ORDER = 10**6

CRYSTAL_BONDS = {2, 3, 4, 6}
GOLDEN_BONDS = {2, 3, 5}


# ---------------------------------------------------------------------------
# Golden-ratio integers a + bφ, with exact sign evaluation.
# ---------------------------------------------------------------------------


class GoldenInt:
    """An element a + bφ of ℤ[φ], φ = (1+√5)/2, with exact comparisons."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("GoldenInt is immutable")

    def __add__(self, other: "GoldenInt") -> "GoldenInt":
        return GoldenInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "GoldenInt") -> "GoldenInt":
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "GoldenInt") -> "GoldenInt":
        # φ² = φ + 1
        return GoldenInt(
            self.a * other.a + self.b * other.b,
            self.a * other.b + self.b * other.a + self.b * other.b,
        )

    def __neg__(self) -> "GoldenInt":
        return GoldenInt(-self.a, -self.b)

    def sign(self) -> int:
        """Exact sign of a + bφ via the integer pair (2a+b) + b√5."""
        p, q = 2 * self.a + self.b, self.b
        if p == 0 and q == 0:
            return 0
        if p >= 0 and q >= 0:
            return 1
        if p <= 0 and q <= 0:
            return -1
        if p > 0:  # q < 0
            return 1 if p * p > 5 * q * q else -1
        return 1 if 5 * q * q > p * p else -1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GoldenInt) and self.a == other.a and self.b == other.b
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"


# ---------------------------------------------------------------------------
# Coxeter matrices and presets.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric bond matrix: m_ii = 1, finite m_ij ≥ 2 off the diagonal."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = self.entries
        r = len(m)
        if r < 1 or any(len(row) != r for row in m):
            raise ValueError("matrix must be square and nonempty")
        for i in range(r):
            if m[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(r):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix must be symmetric")
                if i != j and m[i][j] < 2:
                    raise ValueError("off-diagonal entries must be at least 2")

    @property
    def rank(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CoxeterMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_text(cls, text: str) -> "CoxeterMatrix":
        """Plain-text form: first line the rank, then the matrix rows."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty matrix text")
        try:
            r = int(lines[0].strip())
            rows = [[int(x) for x in ln.split()] for ln in lines[1 : r + 1]]
        except ValueError as exc:
            raise ParseError(f"bad matrix text: {exc}") from exc
        if len(rows) != r:
            raise ParseError(f"expected {r} rows, found {len(rows)}")
        try:
            return cls.from_rows(rows)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


def _chain_matrix(n: int, bonds: dict[tuple[int, int], int]) -> CoxeterMatrix:
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    for (i, j), v in bonds.items():
        m[i - 1][j - 1] = m[j - 1][i - 1] = v
    return CoxeterMatrix.from_rows(m)


def preset_matrix(name: str) -> CoxeterMatrix:
    """Built-in matrices: A<n>, B<n>, D<n>, E6, E7, E8, F4, H3, H4, I2(<m>)."""
    name = name.strip().upper()
    m = re.fullmatch(r"([ABD])(\d+)", name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1 or (kind == "D" and n < 2):
            raise ParseError(f"rank too small for preset {name}")
        bonds = {(i, i + 1): 3 for i in range(1, n)}
        if kind == "B":
            if n >= 2:
                bonds[(n - 1, n)] = 4
        elif kind == "D":
            bonds.pop((n - 1, n), None)
            if n >= 3:
                bonds[(n - 2, n)] = 3
        return _chain_matrix(n, bonds)
    m = re.fullmatch(r"E([678])", name)
    if m:
        n = int(m.group(1))
        bonds = {(1, 3): 3, (2, 4): 3}
        bonds.update({(i, i + 1): 3 for i in range(3, n)})
        return _chain_matrix(n, bonds)
    if name == "F4":
        return _chain_matrix(4, {(1, 2): 3, (2, 3): 4, (3, 4): 3})
    m = re.fullmatch(r"H([34])", name)
    if m:
        n = int(m.group(1))
        bonds = {(1, 2): 5}
        bonds.update({(i, i + 1): 3 for i in range(2, n)})
        return _chain_matrix(n, bonds)
    m = re.fullmatch(r"I2\((\d+)\)", name)
    if m:
        bond = int(m.group(1))
        if bond < 2:
            raise ParseError("I2 bond must be at least 2")
        return _chain_matrix(2, {(1, 2): bond})
    raise ParseError(f"unknown preset {name!r}")


# ---------------------------------------------------------------------------
# Root tables.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootTable:
    """Positive roots plus the simple reflections' signed action on them."""

    matrix: CoxeterMatrix
    roots: tuple
    gen_tables: tuple[bytes, ...]

    @property
    def num_positive(self) -> int:
        return len(self.roots)

    @property
    def rank(self) -> int:
        return self.matrix.rank


def _cartan_int(matrix: CoxeterMatrix) -> list[list[int]]:
    """Integral Cartan-style matrix realizing the crystallographic bonds."""
    r = matrix.rank
    strength = {2: 0, 3: 1, 4: 2, 6: 3}
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
        for j in range(r):
            if i == j:
                continue
            s = strength[matrix.entries[i][j]]
            if s == 0:
                continue
            # asymmetric bonds put the -1 on the lower-index side
            a[i][j] = -1 if i < j else -s
    return a


def _cartan_golden(matrix: CoxeterMatrix) -> list[list[GoldenInt]]:
    r = matrix.rank
    zero, two = GoldenInt(0), GoldenInt(2)
    minus_one, minus_phi = GoldenInt(-1), GoldenInt(0, -1)
    a = [[zero] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = two
        for j in range(r):
            if i == j:
                continue
            bond = matrix.entries[i][j]
            if bond == 3:
                a[i][j] = minus_one
            elif bond == 5:
                a[i][j] = minus_phi
    return a


def _close_roots(matrix: CoxeterMatrix, cartan, zero, one, ceiling: int):
    """Breadth-first closure of the simple roots under the reflections."""
    r = matrix.rank

    def sign_of(x) -> int:
        if isinstance(x, int):
            return (x > 0) - (x < 0)
        return x.sign()

    def is_positive(v) -> bool:
        return all(sign_of(c) >= 0 for c in v) and any(sign_of(c) > 0 for c in v)

    def reflect(v, j):
        coeff = zero
        for i in range(r):
            coeff = coeff + v[i] * cartan[i][j]
        new = list(v)
        new[j] = new[j] - coeff
        return tuple(new)

    simples = []
    for i in range(r):
        v = [zero] * r
        v[i] = one
        simples.append(tuple(v))
    roots = list(simples)
    index = {v: k for k, v in enumerate(roots)}
    head = 0
    while head < len(roots):
        v = roots[head]
        head += 1
        for j in range(r):
            img = reflect(v, j)
            if is_positive(img) and img not in index:
                if len(roots) >= ceiling:
                    raise ResourceBudgetError(
                        f"root closure exceeded {ceiling} positive roots; "
                        "the system is too large or not finite"
                    )
                index[img] = len(roots)
                roots.append(img)

    gen_tables = []
    for j in range(r):
        codes = bytearray(len(roots))
        for p, v in enumerate(roots):
            img = reflect(v, j)
            if img in index:
                codes[p] = index[img] << 1
            else:
                neg = tuple(-c for c in img)
                codes[p] = (index[neg] << 1) | 1
        gen_tables.append(bytes(codes))

    table = RootTable(matrix=matrix, roots=tuple(roots), gen_tables=tuple(gen_tables))
    for j, codes in enumerate(table.gen_tables):
        negated = [p for p, c in enumerate(codes) if c & 1]
        if negated != [j]:
            raise AssertionError(
                f"simple reflection {j + 1} negates roots {negated}, expected [{j}]"
            )
    return table


def _dihedral_table(bond: int, matrix: CoxeterMatrix) -> RootTable:
    """Rank-2 systems as an explicit dihedral model: m positive roots
    indexed by the reflections, no ring arithmetic."""
    m = bond

    def mul(x, y):
        e1, k1 = x
        e2, k2 = y
        return (e1 ^ e2, ((k1 if not e2 else -k1) + k2) % m)

    s, t = (1, 0), (1, 1)
    lengths = {(0, 0): 0}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in (s, t):
                y = mul(x, g)
                if y not in lengths:
                    lengths[y] = lengths[x] + 1
                    nxt.append(y)
        frontier = nxt
    reflections = [(1, k) for k in range(m)]
    index = {x: i for i, x in enumerate(reflections)}
    gen_tables = []
    for g in (s, t):
        codes = bytearray(m)
        for i, x in enumerate(reflections):
            y = mul(mul(g, x), g)
            codes[i] = (index[y] << 1) | (1 if x == g else 0)
        gen_tables.append(bytes(codes))
    return RootTable(matrix=matrix, roots=tuple(reflections), gen_tables=tuple(gen_tables))


def build_root_table(
    matrix: CoxeterMatrix, root_ceiling: int = DEFAULT_ROOT_CEILING
) -> RootTable:
    """Exact positive-root table for the matrix, ring chosen by its bonds."""
    if matrix.rank == 2:
        return _dihedral_table(matrix.entries[0][1], matrix)
    bonds = {
        matrix.entries[i][j]
        for i in range(matrix.rank)
        for j in range(matrix.rank)
        if i != j
    }
    if bonds <= CRYSTAL_BONDS:
        return _close_roots(matrix, _cartan_int(matrix), 0, 1, root_ceiling)
    if bonds <= GOLDEN_BONDS:
        return _close_roots(
            matrix, _cartan_golden(matrix), GoldenInt(0), GoldenInt(1), root_ceiling
        )
    raise CoxlenError(
        f"unsupported bond labels {sorted(bonds - GOLDEN_BONDS - CRYSTAL_BONDS)} "
        "at rank > 2: only crystallographic (2,3,4,6) and golden (2,3,5) "
        "coefficient rings are implemented"
    )


# ---------------------------------------------------------------------------
# Reflection groups over a root table.
# ---------------------------------------------------------------------------


class ReflectionElement:
    """A group element as a signed permutation of the positive roots."""

    __slots__ = ("group", "codes")

    def __init__(self, group: "ReflectionGroup", codes: bytes):
        self.group = group
        self.codes = codes

    def __mul__(self, other: "ReflectionElement") -> "ReflectionElement":
        return ReflectionElement(self.group, K.compose(self.codes, other.codes))

    def inverse(self) -> "ReflectionElement":
        return ReflectionElement(self.group, K.inverse(self.codes))

    def length(self) -> int:
        return K.sign_count(self.codes)

    def order(self) -> int:
        ident = self.group.identity_codes
        k, c = 1, self.codes
        while c != ident:
            c = K.compose(c, self.codes)
            k += 1
        return k

    def is_involution(self) -> bool:
        return K.is_involution(self.codes)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReflectionElement)
            and self.group is other.group
            and self.codes == other.codes
        )

    def __hash__(self) -> int:
        return hash(self.codes)

    def __repr__(self) -> str:
        return f"<ReflectionElement len={self.length()} of {self.group.name}>"


@dataclass(frozen=True)
class GenericClassCensus:
    """Census of one conjugacy class of a reflection group."""

    group: str
    label: str
    size: int
    element_order: int
    min_length: int
    max_length: int
    max_count: int
    excess_histogram: dict[int, int]
    exists_max_zero: bool
    all_max_zero: bool


class ReflectionGroup:
    """A finite reflection group enumerated from its root table."""

    def __init__(self, table: RootTable, name: str = "W"):
        self.table = table
        self.name = name
        self.identity_codes = K.identity_elem(table.num_positive)
        self._elements: list[bytes] | None = None
        self._involutions: list[bytes] | None = None
        self._inv_lengths: list[int] | None = None
        self._classes: list[list[bytes]] | None = None

    @classmethod
    def from_name(cls, name: str) -> "ReflectionGroup":
        return cls(build_root_table(preset_matrix(name)), name=name.strip().upper())

    @property
    def rank(self) -> int:
        return self.table.rank

    @property
    def num_positive(self) -> int:
        return self.table.num_positive

    def generator(self, i: int) -> ReflectionElement:
        """1-based simple reflection."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator index {i} out of range 1..{self.rank}")
        return ReflectionElement(self, self.table.gen_tables[i - 1])

    def identity(self) -> ReflectionElement:
        return ReflectionElement(self, self.identity_codes)

    def element_from_word(self, word: Sequence[int]) -> ReflectionElement:
        """Left-to-right product of 1-based simple reflections."""
        codes = self.identity_codes
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"generator index {i} out of range 1..{self.rank}")
            codes = K.compose(codes, self.table.gen_tables[i - 1])
        return ReflectionElement(self, codes)

    def elements(self, budget: int = DEFAULT_MAX_GROUP_ORDER) -> list[bytes]:
        """Every element, breadth-first from the identity.  Cached."""
        if self._elements is None:
            try:
                self._elements = K.closure(list(self.table.gen_tables), budget)
            except RuntimeError as exc:
                raise ResourceBudgetError(
                    f"{self.name}: {exc}; raise --max-group-order if intended"
                ) from exc
        elif len(self._elements) > budget:
            raise ResourceBudgetError(
                f"{self.name} has order {len(self._elements)}, over the ceiling {budget}"
            )
        return self._elements

    def order(self, budget: int = DEFAULT_MAX_GROUP_ORDER) -> int:
        return len(self.elements(budget))

    def involutions(self, budget: int = DEFAULT_MAX_GROUP_ORDER) -> list[bytes]:
        if self._involutions is None:
            self._involutions = K.involution_filter(self.elements(budget))
            self._inv_lengths = [K.sign_count(x) for x in self._involutions]
        return self._involutions

    def conjugacy_classes(self, budget: int = DEFAULT_MAX_GROUP_ORDER) -> list[list[bytes]]:
        """Partition of the group into conjugation orbits, in discovery order."""
        if self._classes is None:
            elements = self.elements(budget)
            assigned: set[bytes] = set()
            classes = []
            gens = list(self.table.gen_tables)
            for x in elements:
                if x in assigned:
                    continue
                orbit = K.conjugacy_orbit(x, gens, budget)
                assigned.update(orbit)
                classes.append(orbit)
            self._classes = classes
        return self._classes

    def excess_of_codes(self, codes: bytes, budget: int = DEFAULT_MAX_GROUP_ORDER) -> int:
        invs = self.involutions(budget)
        best, _, _ = K.reversing_excess(
            codes, K.inverse(codes), invs, self._inv_lengths, None, K.sign_count(codes)
        )
        if best < 0:
            raise RuntimeError("no involution factorization found (should not happen)")
        return best

    def class_census_of(
        self, element: ReflectionElement, budget: int = DEFAULT_MAX_GROUP_ORDER
    ) -> GenericClassCensus:
        """Census of the conjugacy class containing the element."""
        try:
            orbit = K.conjugacy_orbit(element.codes, list(self.table.gen_tables), budget)
        except RuntimeError as exc:
            raise ResourceBudgetError(str(exc)) from exc
        return self._census(orbit, label="class", budget=budget)

    def _census(self, orbit: list[bytes], label: str, budget: int) -> GenericClassCensus:
        lengths = [K.sign_count(x) for x in orbit]
        lo, hi = min(lengths), max(lengths)
        invs = self.involutions(budget)
        histogram: dict[int, int] = {}
        for x, l in zip(orbit, lengths):
            if l != hi:
                continue
            best, _, _ = K.reversing_excess(
                x, K.inverse(x), invs, self._inv_lengths, None, l
            )
            assert best >= 0
            histogram[best] = histogram.get(best, 0) + 1
        return GenericClassCensus(
            group=self.name,
            label=label,
            size=len(orbit),
            element_order=ReflectionElement(self, orbit[0]).order(),
            min_length=lo,
            max_length=hi,
            max_count=sum(histogram.values()),
            excess_histogram=dict(sorted(histogram.items())),
            exists_max_zero=histogram.get(0, 0) > 0,
            all_max_zero=set(histogram) <= {0},
        )

    def full_group_sweep(
        self, budget: int = DEFAULT_MAX_GROUP_ORDER
    ) -> list[GenericClassCensus]:
        """Census every conjugacy class of the group."""
        classes = self.conjugacy_classes(budget)
        return [
            self._census(orbit, label=f"c{k:02d}", budget=budget)
            for k, orbit in enumerate(classes)
        ]

    def all_elements_excess_zero(self, budget: int = DEFAULT_MAX_GROUP_ORDER) -> bool:
        """Whether every single element of the group has excess zero."""
        return all(self.excess_of_codes(x, budget) == 0 for x in self.elements(budget))


@lru_cache(maxsize=8)
def cached_group(name: str) -> ReflectionGroup:
    return ReflectionGroup.from_name(name)


# ---------------------------------------------------------------------------
# Generator-labeling resolution for quoted words.
#
# Chain-with-branch diagrams are numbered differently across conventions;
# a word only pins its class through the (order, max length, max count)
# fingerprint, which is labeling-robust.  The resolver tries the native
# numbering, then the linear renumbering, then every bijection.
# ---------------------------------------------------------------------------


def _linear_relabel(rank: int) -> dict[int, int]:
    """Map from linear chain numbering (branch node last) to the native
    numbering used by the E-series presets here (branch node = 2)."""
    mapping = {1: 1}
    for k in range(2, rank):
        mapping[k] = k + 1
    mapping[rank] = 2
    return mapping


def resolve_word_class(
    group: ReflectionGroup,
    word: Sequence[int],
    want_order: int,
    want_max_length: int,
    want_max_count: int,
    budget: int = DEFAULT_MAX_GROUP_ORDER,
) -> tuple[str, dict[int, int], GenericClassCensus]:
    """Find a generator labeling under which the word hits the class with
    the stated (order, max length, max count) profile."""
    from itertools import permutations

    rank = group.rank
    candidates: list[tuple[str, dict[int, int]]] = [
        ("native", {i: i for i in range(1, rank + 1)}),
        ("linear", _linear_relabel(rank)),
    ]

    def try_one(mapping: dict[int, int]) -> GenericClassCensus | None:
        elt = group.element_from_word([mapping[i] for i in word])
        if elt.order() != want_order:
            return None
        census = group.class_census_of(elt, budget)
        if census.max_length == want_max_length and census.max_count == want_max_count:
            return census
        return None

    for name, mapping in candidates:
        census = try_one(mapping)
        if census is not None:
            return name, mapping, census
    for perm in permutations(range(1, rank + 1)):
        mapping = {i: perm[i - 1] for i in range(1, rank + 1)}
        census = try_one(mapping)
        if census is not None:
            return f"permutation{perm}", mapping, census
    raise CoxlenError(
        "no generator labeling makes the word match the stated class profile"
    )
