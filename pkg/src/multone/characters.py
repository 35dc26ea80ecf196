"""Character tables, class functions and virtual characters.

Character tables are computed with the Burnside-Dixon method: the class
multiplication coefficients are reduced modulo a prime p = 1 (mod exp G),
their common eigenvectors are split off over F_p, and each character value
is lifted back to Q(zeta_e) from the eigenvalue multiplicities of rho(g).

A ClassFunction stores its values as an integer coordinate array
``num[class, basis]`` in the power basis of Q(zeta_e) together with a common
denominator, so pointwise products and inner products are exact and
vectorized across classes.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CyclotomicNumber, power_table, totient
from .groups import FiniteGroup, GroupError, subgroup_as_group

TABLE_ORDER_CAP = 20_000


class CharacterError(ValueError):
    pass


# field helpers (object arrays keep the integers exact) ----------------------


def _reduction_matrix(m: int, length: int) -> np.ndarray:
    table = power_table(m)
    return np.array([table[j % m] for j in range(length)], dtype=object)


def _conj_matrix(m: int) -> np.ndarray:
    n = totient(m)
    table = power_table(m)
    return np.array([table[(-j) % m] for j in range(n)], dtype=object)


_MAT_CACHE: dict = {}


def _mats(m: int):
    if m not in _MAT_CACHE:
        n = totient(m)
        _MAT_CACHE[m] = (_reduction_matrix(m, 2 * n - 1), _conj_matrix(m))
    return _MAT_CACHE[m]


def _field_mul(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    n = a.shape[1]
    if n == 1:
        return a * b
    acc = np.zeros((a.shape[0], 2 * n - 1), dtype=object)
    for i in range(n):
        acc[:, i:i + n] += a[:, i:i + 1] * b
    red, _ = _mats(m)
    return acc.dot(red)


def _gcd_all(arr: np.ndarray, den: int) -> int:
    g = den
    for x in arr.flat:
        if x:
            g = math.gcd(g, int(x))
            if g == 1:
                return 1
    return g


class ClassFunction:
    """A Q(zeta_e)-valued function on the conjugacy classes of a group."""

    __slots__ = ("group", "order", "num", "den", "label")

    def __init__(self, group: FiniteGroup, num: np.ndarray, den: int = 1, label: str | None = None):
        self.group = group
        self.order = field_order(group)
        num = np.asarray(num, dtype=object)
        if num.shape != (len(group.classes), totient(self.order)):
            raise CharacterError("class function has the wrong shape")
        if den < 0:
            num, den = -num, -den
        g = _gcd_all(num, den)
        if not any(num.flat):
            den, g = 1, 1
        self.num = num // g if g > 1 else num
        self.den = den // g
        self.label = label

    # construction
    @classmethod
    def from_values(cls, group: FiniteGroup, values: Sequence, label=None) -> "ClassFunction":
        m = field_order(group)
        vals = [v if isinstance(v, CyclotomicNumber) else CyclotomicNumber.from_rational(v) for v in values]
        if len(vals) != len(group.classes):
            raise CharacterError("one value per conjugacy class is required")
        vals = [v.to_order(m) for v in vals]
        den = math.lcm(*(v.denominator for v in vals))
        num = np.array([[x * (den // v.denominator) for x in v.numerators] for v in vals], dtype=object)
        return cls(group, num, den, label)

    @classmethod
    def constant(cls, group: FiniteGroup, q=1) -> "ClassFunction":
        return cls.from_values(group, [q] * len(group.classes))

    # values
    @property
    def values(self) -> tuple[CyclotomicNumber, ...]:
        return tuple(CyclotomicNumber(self.order, list(row), self.den) for row in self.num)

    def __getitem__(self, c: int) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, list(self.num[c]), self.den)

    def __len__(self):
        return self.num.shape[0]

    @property
    def degree(self):
        v = self[0]
        q = v.to_fraction()
        return int(q) if q.denominator == 1 else q

    def complex_values(self) -> np.ndarray:
        m = self.order
        n = self.num.shape[1]
        roots = np.exp(2j * np.pi * np.arange(n) / m)
        return (self.num.astype(float) @ roots) / self.den

    def canonical_rows(self) -> tuple:
        return tuple((tuple(int(x) for x in row), self.den) for row in self.num)

    # arithmetic
    def _check(self, other):
        if not isinstance(other, ClassFunction):
            return False
        if other.group is not self.group:
            raise CharacterError("class functions belong to different groups")
        return True

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ClassFunction.constant(self.group, other)
        if not self._check(other):
            return NotImplemented
        return ClassFunction(self.group, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ClassFunction(self.group, -self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ClassFunction.constant(self.group, other)
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return ClassFunction(self.group, self.num * q.numerator, self.den * q.denominator)
        if not self._check(other):
            return NotImplemented
        return ClassFunction(self.group, _field_mul(self.num, other.num, self.order), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, q):
        q = Fraction(q)
        return ClassFunction(self.group, self.num * q.denominator, self.den * q.numerator)

    def __pow__(self, k: int):
        out = ClassFunction.constant(self.group, 1)
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> "ClassFunction":
        _, cm = _mats(self.order)
        return ClassFunction(self.group, self.num.dot(cm), self.den)

    def adams(self, k: int) -> "ClassFunction":
        """g -> f(g^k)."""
        pm = self.group.power_map(k)
        return ClassFunction(self.group, self.num[pm], self.den)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return (
            other.group is self.group
            and self.den == other.den
            and bool((self.num == other.num).all())
        )

    def __hash__(self):
        return hash((id(self.group), self.canonical_rows()))

    def is_zero(self) -> bool:
        return not any(self.num.flat)

    def differs_at(self, other: "ClassFunction") -> np.ndarray:
        """Boolean mask of classes where the two functions take different values (exact)."""
        self._check(other)
        return ((self.num * other.den) != (other.num * self.den)).any(axis=1)

    def inner(self, other: "ClassFunction") -> CyclotomicNumber:
        return inner_product(self, other)

    def norm2(self) -> Fraction:
        return inner_product(self, self).to_fraction()

    def to_json(self) -> list:
        return [v.to_triplets() for v in self.values]

    def __repr__(self):
        name = f"{self.label} " if self.label else ""
        return f"ClassFunction({name}{list(self.values)})"


def field_order(group: FiniteGroup) -> int:
    """Order of the cyclotomic field used for class-function values of this group."""
    return group.exponent


def inner_product(f: ClassFunction, g: ClassFunction) -> CyclotomicNumber:
    """(1/|G|) sum over classes of |C| f(C) conj(g(C)), exact."""
    if f.group is not g.group:
        raise CharacterError("class functions belong to different groups")
    G = f.group
    prod = _field_mul(f.num, g.conj().num, f.order)
    sizes = np.array([c.size for c in G.classes], dtype=object)
    total = sizes.dot(prod)
    return CyclotomicNumber(f.order, list(total), f.den * g.den * G.order)


# modular linear algebra -----------------------------------------------------


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def _rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * _inv_mod(A[r, c], p)) % p
        others = np.nonzero(A[:, c])[0]
        for o in others:
            if o != r:
                A[o] = (A[o] - A[o, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the right nullspace of A over F_p."""
    n = A.shape[1]
    R, piv = _rref_mod(A, p)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for r, pc in enumerate(piv):
            basis[pc, k] = (-R[r, f]) % p
    return basis


def _charpoly_mod(A: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial (lowest degree first, monic) via Hessenberg reduction."""
    H = A.copy() % p
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = _inv_mod(H[m, m - 1], p)
        for i in range(m + 1, n):
            u = (H[i, m - 1] * inv) % p
            if u:
                H[i] = (H[i] - u * H[m]) % p
                H[:, m] = (H[:, m] + u * H[:, i]) % p
    polys = [[1]]
    Hl = H.tolist()
    for m in range(n):
        # (x - H[m][m]) * p_m
        prev = polys[m]
        new = [0] + prev[:]
        for i, c in enumerate(prev):
            new[i] = (new[i] - Hl[m][m] * c) % p
        t = 1
        for i in range(m - 1, -1, -1):
            t = (t * Hl[i + 1][i]) % p
            if t == 0:
                break
            coef = (Hl[i][m] * t) % p
            if coef:
                for j, c in enumerate(polys[i]):
                    new[j] = (new[j] - coef * c) % p
        polys.append(new)
    return polys[n]


def _roots_mod(poly: list[int], p: int) -> list[int]:
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(poly):
        vals = (vals * xs + c) % p
    return [int(x) for x in np.nonzero(vals == 0)[0]]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _dixon_prime(order: int, exponent: int) -> int:
    p = exponent + 1
    while p <= 2 * order or not _is_prime(p):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root")


# character table ------------------------------------------------------------


def class_coefficients(G: FiniteGroup) -> np.ndarray:
    """a[i, j, l] = #{x in C_i : x^-1 z_l in C_j} for a fixed z_l in C_l."""
    k = len(G.classes)
    a = np.zeros((k, k, k), dtype=np.int64)
    cls = G.class_of
    for l, c in enumerate(G.classes):
        y = G.mult[G.inverse, c.rep_index]
        np.add.at(a[:, :, l], (cls, cls[y]), 1)
    return a


def _split_eigenvectors(a: np.ndarray, p: int) -> list[np.ndarray]:
    k = a.shape[0]
    spaces = [np.eye(k, dtype=np.int64)]
    done: list[np.ndarray] = []
    for j in range(1, k):
        if not spaces:
            break
        M = a[:, j, :] % p
        nxt = []
        for B in spaces:
            R, piv = _rref_mod(B.T, p)
            B = R.T
            d = B.shape[1]
            restricted = (M.dot(B) % p)[piv, :]
            roots = _roots_mod(_charpoly_mod(restricted, p), p)
            for lam in roots:
                N = _nullspace_mod((restricted - lam * np.eye(d, dtype=np.int64)) % p, p)
                sub = B.dot(N) % p
                (done if sub.shape[1] == 1 else nxt).append(sub)
        spaces = nxt
    if spaces:
        raise CharacterError("class matrices failed to split; increase the prime")
    return [v[:, 0] for v in done]


class CharacterTable:
    """The irreducible characters of a finite group in canonical order."""

    def __init__(self, group: FiniteGroup, irreducibles: Sequence[ClassFunction], prime: int):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.degrees = tuple(int(chi.degree) for chi in self.irreducibles)
        self.labels = tuple(chi.label for chi in self.irreducibles)
        self.prime = prime
        self._index = {chi.canonical_rows(): i for i, chi in enumerate(self.irreducibles)}

    def __len__(self):
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise CharacterError(f"no irreducible labelled {label!r}") from None

    def find(self, f: ClassFunction) -> int | None:
        """Index of the irreducible equal to f, or None."""
        return self._index.get(f.canonical_rows())

    @property
    def trivial(self) -> ClassFunction:
        return self.irreducibles[0]

    def linear_characters(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == 1]

    def regular_character(self) -> ClassFunction:
        vals = [self.group.order] + [0] * (len(self.group.classes) - 1)
        return ClassFunction.from_values(self.group, vals)

    def decompose(self, f) -> "VirtualCharacter":
        return decompose(f, self)

    def orthogonality_holds(self) -> bool:
        """Row and column orthogonality, exact."""
        k = len(self)
        for i in range(k):
            for j in range(i, k):
                ip = inner_product(self[i], self[j])
                if ip != (1 if i == j else 0):
                    return False
        G = self.group
        # columns: sum_chi chi(a) conj(chi(b)) = delta_ab |C_G(a)|
        stacked = np.stack([chi.num for chi in self.irreducibles])  # (irr, class, basis)
        m = field_order(G)
        _, cm = _mats(m)
        for a in range(len(G.classes)):
            col_a = stacked[:, a, :]
            for b in range(a, len(G.classes)):
                col_b = stacked[:, b, :].dot(cm)
                s = _field_mul(col_a, col_b, m).sum(axis=0)
                expected = G.order // G.classes[a].size if a == b else 0
                if list(s) != [expected] + [0] * (len(s) - 1):
                    return False
        return True

    def to_json(self) -> dict:
        G = self.group
        return {
            "group": G.name,
            "order": G.order,
            "classes": [
                {"label": c.label, "size": c.size, "element_order": c.element_order}
                for c in G.classes
            ],
            "irreducibles": [
                {"label": chi.label, "degree": d, "values": chi.to_json()}
                for chi, d in zip(self.irreducibles, self.degrees)
            ],
        }


def character_table(G: FiniteGroup) -> CharacterTable:
    """Exact character table, computed once per group object."""
    cached = G.__dict__.get("_character_table")
    if cached is not None:
        return cached
    if G.order > TABLE_ORDER_CAP:
        raise GroupError(f"group of order {G.order} exceeds the character table cap")
    table = _dixon(G)
    G.__dict__["_character_table"] = table
    return table


def _dixon(G: FiniteGroup) -> CharacterTable:
    classes = G.classes
    k = len(classes)
    e = G.exponent
    m = field_order(G)
    p = _dixon_prime(G.order, e)
    sizes = [c.size for c in classes]
    if k == 1:
        chi = ClassFunction.from_values(G, [1], label="1a")
        return CharacterTable(G, [chi], p)
    a = class_coefficients(G)
    vecs = _split_eigenvectors(a, p)
    if len(vecs) != k:
        raise CharacterError("wrong number of irreducible characters")
    z = pow(_primitive_root(p), (p - 1) // e, p)
    inv_e = _inv_mod(e, p)
    zmat = np.array([[pow(z, (-t * l) % e, p) for l in range(e)] for t in range(e)], dtype=np.int64)
    # power classes: powcls[c][l] = class of rep_c^l
    powcls = []
    for c in classes:
        cur, seq = 0, []
        for _ in range(e):
            seq.append(int(G.class_of[cur]))
            cur = int(G.mult[cur, c.rep_index])
        powcls.append(seq)
    ptab = power_table(m)
    inv_cls = G.inverse_class
    chars = []
    for w in vecs:
        w = (w * _inv_mod(w[0], p)) % p
        s = 0
        for i in range(k):
            s = (s + int(w[i]) * int(w[inv_cls[i]]) * _inv_mod(sizes[i], p)) % p
        d2 = (G.order * _inv_mod(s, p)) % p
        deg = next(
            (d for d in range(1, math.isqrt(G.order) + 1) if (d * d) % p == d2 and G.order % d == 0),
            None,
        )
        if deg is None:
            raise CharacterError("could not recover a character degree")
        modvals = [(int(w[i]) * deg * _inv_mod(sizes[i], p)) % p for i in range(k)]
        rows = []
        for c in range(k):
            v = np.array([modvals[powcls[c][l]] for l in range(e)], dtype=np.int64)
            mults = [int(x) for x in (zmat.dot(v) % p) * inv_e % p]
            if sum(mults) != deg or any(x > deg for x in mults):
                raise CharacterError("eigenvalue multiplicities failed to lift")
            vec = [0] * totient(m)
            for t, mt in enumerate(mults):
                if mt:
                    for i, x in enumerate(ptab[t * (m // e)]):
                        if x:
                            vec[i] += mt * x
            rows.append(vec)
        chars.append(ClassFunction(G, np.array(rows, dtype=object), 1))
    trivial_rows = ClassFunction.constant(G, 1).canonical_rows()

    def key(chi):
        return (int(chi.degree), chi.canonical_rows() != trivial_rows, chi.canonical_rows())

    chars.sort(key=key)
    counts: dict[int, int] = {}
    labelled = []
    for chi in chars:
        d = int(chi.degree)
        counts[d] = counts.get(d, 0) + 1
        chi.label = f"{d}{_letter(counts[d] - 1)}"
        labelled.append(chi)
    table = CharacterTable(G, labelled, p)
    return table


def _letter(k: int) -> str:
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = chr(ord("a") + r) + s
    return s


# virtual characters ---------------------------------------------------------


class VirtualCharacter:
    """Integer combination of the irreducible characters of one table."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: CharacterTable, coeffs):
        self.table = table
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        clean: dict[int, int] = {}
        for i, n in items:
            if n:
                clean[int(i)] = clean.get(int(i), 0) + int(n)
        self.coeffs = {i: n for i, n in sorted(clean.items()) if n}

    @classmethod
    def irreducible(cls, table: CharacterTable, i: int) -> "VirtualCharacter":
        return cls(table, {i: 1})

    @property
    def degree(self) -> int:
        return sum(n * self.table.degrees[i] for i, n in self.coeffs.items())

    def class_function(self) -> ClassFunction:
        G = self.table.group
        out = ClassFunction.constant(G, 0)
        for i, n in self.coeffs.items():
            out = out + self.table[i] * n
        return out

    def is_isobaric(self) -> bool:
        return all(n >= 0 for n in self.coeffs.values())

    def is_cuspidal(self) -> bool:
        return list(self.coeffs.values()) == [1]

    def multiplicity(self, i: int) -> int:
        return self.coeffs.get(i, 0)

    def summands(self) -> list[tuple[str, int]]:
        return [(self.table.labels[i], n) for i, n in self.coeffs.items()]

    def __add__(self, other: "VirtualCharacter"):
        out = dict(self.coeffs)
        for i, n in other.coeffs.items():
            out[i] = out.get(i, 0) + n
        return VirtualCharacter(self.table, out)

    def __sub__(self, other: "VirtualCharacter"):
        return self + VirtualCharacter(self.table, {i: -n for i, n in other.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.table is other.table and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def to_json(self) -> list:
        return [[label, n] for label, n in self.summands()]

    def __repr__(self):
        body = " + ".join(f"{n}*{lab}" if n != 1 else lab for lab, n in self.summands()) or "0"
        return f"VirtualCharacter({body})"


def _as_class_function(x) -> ClassFunction:
    if isinstance(x, VirtualCharacter):
        return x.class_function()
    if isinstance(x, ClassFunction):
        return x
    raise TypeError(f"expected a class function, got {type(x).__name__}")


def decompose(f, table: CharacterTable | None = None) -> VirtualCharacter:
    """Multiplicities of the irreducibles in f; f must be a virtual character."""
    f = _as_class_function(f)
    if table is None:
        table = character_table(f.group)
    coeffs = {}
    for i, chi in enumerate(table):
        ip = inner_product(f, chi)
        if not ip.is_rational() or ip.to_fraction().denominator != 1:
            raise CharacterError("input is not a virtual character")
        coeffs[i] = int(ip.to_fraction())
    v = VirtualCharacter(table, coeffs)
    if v.class_function() != f:
        raise CharacterError("input is not a virtual character")
    return v


def _table_of(x) -> CharacterTable:
    if isinstance(x, VirtualCharacter):
        return x.table
    return character_table(x.group)


def is_irreducible(chi) -> bool:
    f = _as_class_function(chi)
    return f.norm2() == 1 and (f[0].to_fraction() > 0)


def adjoint_class_function(chi) -> ClassFunction:
    f = _as_class_function(chi)
    return f * f.conj() - 1


def adjoint_character(chi) -> VirtualCharacter:
    """chi * conj(chi) minus the trivial character, decomposed."""
    f = _as_class_function(chi)
    if not is_irreducible(f):
        raise CharacterError("adjoint defined only for cuspidal model objects")
    v = decompose(adjoint_class_function(f), _table_of(chi))
    assert v.is_isobaric()
    return v


def tensor(chi, psi) -> VirtualCharacter:
    return decompose(_as_class_function(chi) * _as_class_function(psi), _table_of(chi))


def dual(chi) -> VirtualCharacter:
    return decompose(_as_class_function(chi).conj(), _table_of(chi))


def _partitions(k: int, largest: int | None = None):
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def _z_lambda(parts: tuple[int, ...]) -> int:
    out = 1
    for part in set(parts):
        mult = parts.count(part)
        out *= part**mult * math.factorial(mult)
    return out


def _power_sum_formula(f: ClassFunction, k: int, signed: bool) -> ClassFunction:
    total = ClassFunction.constant(f.group, 0)
    for parts in _partitions(k):
        term = ClassFunction.constant(f.group, 1)
        for part in parts:
            term = term * f.adams(part)
        coeff = Fraction(1, _z_lambda(parts))
        if signed and (k - len(parts)) % 2:
            coeff = -coeff
        total = total + term * coeff
    return total


def sym_power_class_function(chi, k: int) -> ClassFunction:
    """Symmetric k-th power via the cycle index of S_k (Newton's identities)."""
    return _power_sum_formula(_as_class_function(chi), k, signed=False)


def alt_power_class_function(chi, k: int) -> ClassFunction:
    return _power_sum_formula(_as_class_function(chi), k, signed=True)


def sym_power(chi, k: int) -> VirtualCharacter:
    return decompose(sym_power_class_function(chi, k), _table_of(chi))


def alt_square(chi) -> VirtualCharacter:
    return decompose(alt_power_class_function(chi, 2), _table_of(chi))


# predicates -----------------------------------------------------------------


def is_self_dual(chi) -> bool:
    f = _as_class_function(chi)
    return f.conj() == f


def self_twists(chi) -> list[int]:
    """Indices of the linear characters eta with chi * eta == chi."""
    f = _as_class_function(chi)
    table = _table_of(chi)
    return [i for i in table.linear_characters() if f * table[i] == f]


def is_essentially_self_dual(chi) -> bool:
    f = _as_class_function(chi)
    table = _table_of(chi)
    fc = f.conj()
    return any(f * table[i] == fc for i in table.linear_characters())


def summand_multiplicity(rho, sigma) -> int:
    """Multiplicity of the irreducible sigma in Ad(rho)."""
    ad = adjoint_class_function(rho)
    if not is_irreducible(rho):
        raise CharacterError("adjoint defined only for cuspidal model objects")
    s = _as_class_function(sigma)
    if not is_irreducible(s):
        raise CharacterError("summand must be irreducible")
    return int(inner_product(ad, s).to_fraction())


def lemma_check_linear(rho) -> bool:
    """Every nontrivial linear character occurs in Ad(rho) at most once."""
    table = _table_of(rho)
    return all(summand_multiplicity(rho, table[i]) <= 1 for i in table.linear_characters()[1:])


def induce(G: FiniteGroup, members: Sequence[int], values_on_members: Sequence[CyclotomicNumber]) -> ClassFunction:
    """Induce a class function of a subgroup H (given on H's elements, as indices into G)."""
    h = len(members)
    acc = [CyclotomicNumber.from_rational(0, field_order(G)) for _ in G.classes]
    for idx, v in zip(members, values_on_members):
        acc[int(G.class_of[idx])] = acc[int(G.class_of[idx])] + v
    vals = [
        acc[c.index] * Fraction(G.order // c.size, h) for c in G.classes
    ]
    return ClassFunction.from_values(G, vals)


def linear_characters_of_subgroup(G: FiniteGroup, members: Sequence[int]):
    """Yield each degree-1 character of the subgroup as its list of values on ``members``."""
    H, embed = subgroup_as_group(G, members)
    Ht = character_table(H)
    pos = {g: i for i, g in enumerate(embed)}
    for i in Ht.linear_characters():
        chi = Ht[i]
        per_class = chi.values
        yield [per_class[int(H.class_of[pos[g]])] for g in members]


def is_monomial(chi, subgroups: Iterable[Sequence[int]]) -> bool:
    """True if chi is induced from a linear character of one of the given subgroups."""
    f = _as_class_function(chi)
    G = f.group
    deg = f.degree
    for members in subgroups:
        members = list(members)
        if len(members) * deg != G.order:
            continue
        for lam in linear_characters_of_subgroup(G, members):
            if induce(G, members, lam) == f:
                return True
    return False
