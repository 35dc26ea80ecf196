"""Finite groups from permutation or cyclotomic-matrix generators.

Elements are enumerated breadth-first from the identity, multiplying on the
right by the generators in the order given, so the element numbering is
deterministic.  Multiplication tables, inverses and conjugacy classes are
index-based numpy arrays computed on demand.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .cyclotomic import CyclotomicNumber, as_cyclotomic, rational

ELEMENT_CAP = 10**6
TABLE_CAP = 20_000
MATRIX_DIM_CAP = 12


class GroupError(ValueError):
    pass


# elements -----------------------------------------------------------------


class Permutation:
    """Bijection of {0, ..., n-1} in one-line notation.

    Products compose left to right: ``(a * b)(x) == b(a(x))``.
    """

    __slots__ = ("images",)
    kind = "permutation"

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a bijection: {images}")
        self.images = images

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(img)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        b = other.images
        return Permutation._unchecked(tuple(b[i] for i in self.images))

    @staticmethod
    def _unchecked(images):
        p = object.__new__(Permutation)
        p.images = images
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._unchecked(tuple(inv))

    def key(self):
        return self.images

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * len(self.images)
        lengths = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            n, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                n += 1
            lengths.append(n)
        return tuple(sorted(lengths, reverse=True))

    def canonical_key(self):
        return self.cycle_type()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def to_json(self):
        return list(self.images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


class CycloMatrix:
    """Invertible square matrix with CyclotomicNumber entries of one common order."""

    __slots__ = ("rows", "order", "_key")
    kind = "matrix"

    def __init__(self, rows, order: int | None = None, check: bool = True):
        rows = [[as_cyclotomic(x) for x in r] for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise GroupError("matrix must be square")
        if n > MATRIX_DIM_CAP:
            raise GroupError(f"matrix dimension {n} exceeds cap {MATRIX_DIM_CAP}")
        if order is None:
            order = math.lcm(1, *(x.order for r in rows for x in r))
        self.order = order
        self.rows = tuple(tuple(x.to_order(order) for x in r) for r in rows)
        self._key = None
        if check and determinant(self.rows).is_zero():
            raise GroupError("matrix is singular")

    @classmethod
    def _raw(cls, rows, order):
        m = object.__new__(cls)
        m.rows = rows
        m.order = order
        m._key = None
        return m

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def with_order(self, order: int) -> "CycloMatrix":
        if order == self.order:
            return self
        return CycloMatrix._raw(tuple(tuple(x.lift(order) for x in r) for r in self.rows), order)

    def __mul__(self, other: "CycloMatrix") -> "CycloMatrix":
        a, b = self.rows, other.rows
        n = len(a)
        cols = list(zip(*b))
        zero = rational(0, self.order)
        out = []
        for r in a:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                row.append(acc)
            out.append(tuple(row))
        return CycloMatrix._raw(tuple(out), self.order)

    def trace(self) -> CyclotomicNumber:
        acc = rational(0, self.order)
        for i, r in enumerate(self.rows):
            acc = acc + r[i]
        return acc

    def is_scalar(self) -> bool:
        d = self.rows[0][0]
        return all(
            (x == d) if i == j else x.is_zero()
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def is_identity(self) -> bool:
        return self.is_scalar() and self.rows[0][0] == 1

    def key(self):
        if self._key is None:
            self._key = tuple((x.numerators, x.denominator) for r in self.rows for x in r)
        return self._key

    def canonical_key(self):
        return self.trace().sort_key()

    def to_json(self):
        return [[x.to_triplets() for x in r] for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self.order == other.order and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"CycloMatrix({[list(r) for r in self.rows]})"


def determinant(rows) -> CyclotomicNumber:
    a = [list(r) for r in rows]
    n = len(a)
    order = a[0][0].order if n else 1
    det = rational(1, order)
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return rational(0, order)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if not a[r][col].is_zero():
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def matrix_identity(n: int, order: int = 1) -> CycloMatrix:
    return CycloMatrix._raw(
        tuple(tuple(rational(int(i == j), order) for j in range(n)) for i in range(n)), order
    )


# groups -------------------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClass:
    index: int
    label: str
    representative: object
    rep_index: int
    size: int
    element_order: int
    members: tuple[int, ...] = field(repr=False)


class FiniteGroup:
    """A finite group given by an explicit, deterministically ordered element list."""

    def __init__(self, elements, generators, right_mult, parents, name: str | None = None):
        self.elements = list(elements)
        self.generators = tuple(generators)
        self._right = right_mult  # right_mult[s][i] = index(elements[i] * gens[s])
        self._parents = parents  # (parent index, generator index) for BFS tree
        self.index = {g.key(): i for i, g in enumerate(self.elements)}
        self.name = name

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def kind(self) -> str:
        return self.elements[0].kind

    def index_of(self, g) -> int:
        if isinstance(g, CycloMatrix):
            g = g.with_order(self.elements[0].order)
        try:
            return self.index[g.key()]
        except KeyError:
            raise GroupError("element not in group") from None

    @cached_property
    def mult(self) -> np.ndarray:
        """mult[i, j] = index(elements[i] * elements[j])."""
        n = self.order
        if n > TABLE_CAP:
            raise GroupError(f"group of order {n} too large for a multiplication table")
        table = np.empty((n, n), dtype=np.int32)
        table[:, 0] = np.arange(n)
        for j in range(1, n):
            parent, s = self._parents[j]
            table[:, j] = self._right[s][table[:, parent]]
        return table

    @cached_property
    def inverse(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mult == 0)
        inv = np.empty(self.order, dtype=np.int32)
        inv[rows] = cols
        return inv

    def multiply(self, i: int, j: int) -> int:
        return int(self.mult[i, j])

    def power(self, i: int, k: int) -> int:
        result, base = 0, i
        k %= self.element_orders[i]
        while k:
            if k & 1:
                result = int(self.mult[result, base])
            base = int(self.mult[base, base])
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        while (orders == 0).any():
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            cur = self.mult[cur, np.arange(n)]
            k += 1
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(x) for x in set(self.element_orders.tolist())))

    @cached_property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        return _compute_classes(self)

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int32)
        for c in self.classes:
            out[list(c.members)] = c.index
        return out

    @cached_property
    def class_sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    @cached_property
    def inverse_class(self) -> np.ndarray:
        return np.array([self.class_of[self.inverse[c.rep_index]] for c in self.classes])

    def power_map(self, k: int) -> np.ndarray:
        """Class index of g^k for g in each class."""
        cache = self.__dict__.setdefault("_power_maps", {})
        if k not in cache:
            cache[k] = np.array(
                [self.class_of[self.power(c.rep_index, k)] for c in self.classes], dtype=np.int64
            )
        return cache[k]

    def is_abelian(self) -> bool:
        return bool((self.mult == self.mult.T).all())

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"FiniteGroup({label}order={self.order}, kind={self.kind})"

    # serialization
    def to_json(self) -> dict:
        first = self.elements[0]
        doc = {"kind": first.kind}
        if first.kind == "permutation":
            doc["degree"] = first.degree
        else:
            doc["dimension"] = first.dimension
        doc["generators"] = [g.to_json() for g in self.generators]
        return doc


def _identity_like(g):
    if isinstance(g, Permutation):
        return Permutation.identity(g.degree)
    return matrix_identity(g.dimension, g.order)


def group_from_generators(gens=(), cap: int = ELEMENT_CAP, identity=None, name=None) -> FiniteGroup:
    """Close a generating set under multiplication (breadth-first, generator order)."""
    gens = list(gens)
    kinds = {type(g) for g in gens}
    if len(kinds) > 1:
        raise GroupError("heterogeneous generators")
    if gens and isinstance(gens[0], Permutation):
        if len({g.degree for g in gens}) > 1:
            raise GroupError("heterogeneous generators")
    if gens and isinstance(gens[0], CycloMatrix):
        if len({g.dimension for g in gens}) > 1:
            raise GroupError("heterogeneous generators")
        order = math.lcm(*(g.order for g in gens))
        gens = [g.with_order(order) for g in gens]
    if identity is None:
        identity = _identity_like(gens[0]) if gens else Permutation(())
    elements = [identity]
    index = {identity.key(): 0}
    parents = [None]
    right: list[dict[int, int]] = [dict() for _ in gens]
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            a = elements[i]
            for s, g in enumerate(gens):
                b = a * g
                k = b.key()
                j = index.get(k)
                if j is None:
                    j = len(elements)
                    if j >= cap:
                        raise GroupError(f"group too large (more than {cap} elements)")
                    index[k] = j
                    elements.append(b)
                    parents.append((i, s))
                    nxt.append(j)
                right[s][i] = j
        frontier = nxt
    n = len(elements)
    right_arr = [np.array([r[i] for i in range(n)], dtype=np.int32) for r in right]
    return FiniteGroup(elements, gens, right_arr, parents, name=name)


def _compute_classes(G: FiniteGroup) -> tuple[ConjugacyClass, ...]:
    mult, inv = G.mult, G.inverse
    n = G.order
    assigned = np.full(n, -1, dtype=np.int64)
    raw = []
    for x in range(n):
        if assigned[x] >= 0:
            continue
        # g^-1 x g for all g
        orbit = np.unique(mult[inv, mult[x, :]])
        assigned[orbit] = len(raw)
        raw.append(orbit)
    orders = G.element_orders
    keyed = []
    for orbit in raw:
        rep = int(orbit[0])
        keyed.append(
            ((len(orbit), int(orders[rep]), G.elements[rep].canonical_key(), rep), orbit)
        )
    keyed.sort(key=lambda t: t[0])
    letters = Counter()
    out = []
    for idx, (key, orbit) in enumerate(keyed):
        size, order, _, rep = key
        letters[order] += 1
        label = f"{order}{_letter(letters[order] - 1)}"
        out.append(
            ConjugacyClass(
                index=idx,
                label=label,
                representative=G.elements[rep],
                rep_index=rep,
                size=size,
                element_order=order,
                members=tuple(int(i) for i in orbit),
            )
        )
    return tuple(out)


def _letter(k: int) -> str:
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def conjugacy_classes(G: FiniteGroup) -> tuple[ConjugacyClass, ...]:
    return G.classes


def projective_image_order(G: FiniteGroup) -> int:
    if G.kind != "matrix":
        raise GroupError("projective image undefined")
    scalars = sum(1 for g in G.elements if g.is_scalar())
    return G.order // scalars


def scalar_subgroup(G: FiniteGroup) -> list[int]:
    if G.kind != "matrix":
        raise GroupError("projective image undefined")
    return [i for i, g in enumerate(G.elements) if g.is_scalar()]


def central_quotient_or_center(G: FiniteGroup) -> tuple[list, int]:
    """Center (as elements) and the order of G / Z(G)."""
    central = center_indices(G)
    return [G.elements[i] for i in central], G.order // len(central)


def center_indices(G: FiniteGroup) -> list[int]:
    mult = G.mult
    return [i for i in range(G.order) if (mult[i, :] == mult[:, i]).all()]


def subgroup(G: FiniteGroup, gen_indices: Sequence[int]) -> list[int]:
    """Element indices of the subgroup generated by the given element indices (sorted)."""
    members = {0}
    frontier = [0]
    gens = [int(g) for g in gen_indices]
    mult = G.mult
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = int(mult[a, g])
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(members)


def subgroups_of_index(G: FiniteGroup, index: int, max_generators: int = 2) -> list[tuple[int, ...]]:
    """Subgroups of the given index generated by at most two elements (deduplicated)."""
    if G.order % index:
        return []
    target = G.order // index
    found = set()
    orders = G.element_orders
    cands = [i for i in range(G.order) if target % int(orders[i]) == 0]
    for a in cands:
        h = tuple(subgroup(G, [a]))
        if len(h) == target:
            found.add(h)
    if max_generators >= 2:
        for ai, a in enumerate(cands):
            ha = subgroup(G, [a])
            if target % len(ha):
                continue
            for b in cands[ai + 1:]:
                if b in ha:
                    continue
                h = subgroup(G, [a, b])
                if len(h) == target:
                    found.add(tuple(h))
    return sorted(found)


def subgroup_as_group(G: FiniteGroup, members: Sequence[int]) -> tuple[FiniteGroup, list[int]]:
    """The subgroup as its own FiniteGroup plus the map from its element order to G's indices."""
    gens = [G.elements[i] for i in _small_generating_set(G, members)]
    H = group_from_generators(gens, identity=G.elements[0])
    embed = [G.index_of(h) for h in H.elements]
    return H, embed


def _small_generating_set(G: FiniteGroup, members: Sequence[int]) -> list[int]:
    target = set(members)
    gens: list[int] = []
    span = {0}
    for m in members:
        if m not in span:
            gens.append(int(m))
            span = set(subgroup(G, gens))
            if span == target:
                break
    return gens


def group_from_json(doc: dict, name: str | None = None) -> FiniteGroup:
    kind = doc["kind"]
    if kind == "permutation":
        gens = [Permutation(g) for g in doc["generators"]]
        ident = Permutation.identity(int(doc.get("degree", 0)))
    elif kind == "matrix":
        gens = [
            CycloMatrix([[CyclotomicNumber.from_triplets(x) for x in row] for row in g])
            for g in doc["generators"]
        ]
        ident = matrix_identity(int(doc["dimension"]), gens[0].order) if gens else matrix_identity(
            int(doc["dimension"])
        )
    else:
        raise GroupError(f"unknown group kind {kind!r}")
    return group_from_generators(gens, identity=ident if not gens else None, name=name)


def check_group_axioms(G: FiniteGroup, samples: int = 200, seed: int = 0) -> bool:
    mult, inv = G.mult, G.inverse
    n = G.order
    if not (mult[0, :] == np.arange(n)).all() or not (mult[:, 0] == np.arange(n)).all():
        return False
    if not (mult[np.arange(n), inv] == 0).all():
        return False
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, samples))
    lhs = mult[mult[a, b], c]
    rhs = mult[a, mult[b, c]]
    return bool((lhs == rhs).all())


def class_size_fraction(G: FiniteGroup, c: int) -> Fraction:
    return Fraction(G.classes[c].size, G.order)
