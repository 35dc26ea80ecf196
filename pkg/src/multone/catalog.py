"""Named finite-group models used as desk-scale stand-ins for automorphic data.

Each entry is a finite group (the model's Galois group) together with named
irreducible characters.  Matrix-group entries identify their natural
representation by matching the trace character against the computed table.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import (
    CharacterTable,
    ClassFunction,
    adjoint_character,
    adjoint_class_function,
    character_table,
    is_irreducible,
)
from .cyclotomic import zeta
from .groups import (
    CycloMatrix,
    FiniteGroup,
    GroupError,
    Permutation,
    group_from_generators,
    matrix_identity,
    projective_image_order,
    subgroups_of_index,
)


class CatalogError(KeyError):
    pass


@dataclass
class CatalogEntry:
    name: str
    group: FiniteGroup
    distinguished_reps: dict[str, int]
    notes: str = ""
    subgroups: dict[int, list[tuple[int, ...]]] = field(default_factory=dict, repr=False)

    @property
    def table(self) -> CharacterTable:
        return character_table(self.group)

    @property
    def projective_order(self) -> int | None:
        return projective_image_order(self.group) if self.group.kind == "matrix" else None

    def rep(self, role: str) -> ClassFunction:
        return self.table[self.role_index(role)]

    def role_index(self, role: str) -> int:
        """Resolve a role name, an irreducible label such as '3a', or '#<index>'."""
        if role in self.distinguished_reps:
            return self.distinguished_reps[role]
        if role in self.table.labels:
            return self.table.labels.index(role)
        m = re.fullmatch(r"#(\d+)", role)
        if m and int(m.group(1)) < len(self.table):
            return int(m.group(1))
        raise CatalogError(f"unknown role {role!r} for {self.name}")

    @property
    def distinguished_degrees(self) -> list[int]:
        roles = [r for r in self.distinguished_reps if r in PRIMARY_ROLES] or [
            r for r in self.distinguished_reps if r != "trivial"
        ]
        return sorted({self.table.degrees[self.distinguished_reps[r]] for r in roles})

    def monomial_candidates(self, degree: int, max_index: int = 12) -> list[tuple[int, ...]]:
        """Subgroups of index ``degree`` (the only ones a degree-``degree`` character can be induced from)."""
        if degree > max_index:
            return []
        if degree not in self.subgroups:
            self.subgroups[degree] = subgroups_of_index(self.group, degree)
        return self.subgroups[degree]


PRIMARY_ROLES = ("pi", "rho", "Pi")


# generators -----------------------------------------------------------------


def _perm(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def _quaternion_units():
    i = zeta(4)
    qi = CycloMatrix([[i, 0], [0, -i]])
    qj = CycloMatrix([[0, 1], [-1, 0]])
    half = Fraction(1, 2)
    # (1 + i + j + k) / 2 with k = ij
    qw = CycloMatrix([[(1 + i) * half, (1 + i) * half], [(-1 + i) * half, (1 - i) * half]])
    return qi, qj, qw


def _blichfeldt_matrices():
    z = zeta(9)
    w = z**6
    S = CycloMatrix([[1, 0, 0], [0, w, 0], [0, 0, w * w]])
    U = CycloMatrix([[z, 0, 0], [0, z, 0], [0, 0, z * w]])
    T = CycloMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    c = (w - w * w).inverse()
    V = CycloMatrix([[c, c, c], [c, c * w, c * w * w], [c, c * w * w, c * w]])
    Uinv = CycloMatrix([[z**8, 0, 0], [0, z**8, 0], [0, 0, z**8 * w * w]])
    return S, T, U, V, Uinv


def _valentiner_matrices():
    # icosahedral A5 in SO(3) plus one monomial matrix; projective image A6
    tau = 1 + zeta(5) + zeta(5, 4)
    tinv = tau - 1
    h = Fraction(1, 2)
    om = zeta(3)
    D = CycloMatrix([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    P = CycloMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    M = CycloMatrix([[h, -tau * h, tinv * h], [tau * h, tinv * h, -h], [tinv * h, h, tau * h]])
    W = CycloMatrix([[-1, 0, 0], [0, 0, -om], [0, -om * om, 0]])
    return D, P, M, W


def _kron(a, b):
    n, m = len(a), len(b)
    return [[a[i // m][j // m] * b[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def _heisenberg(p: int, k: int):
    """Shift and clock matrices on (C^p)^{tensor k}: generators of an extraspecial group of order p^(2k+1)."""
    zp = zeta(p)
    shift = [[1 if (i - 1) % p == j else 0 for j in range(p)] for i in range(p)]
    clock = [[zp**i if i == j else 0 for j in range(p)] for i in range(p)]
    eye = [[1 if i == j else 0 for j in range(p)] for i in range(p)]
    gens = []
    for slot in range(k):
        for base in (shift, clock):
            mat = [[1]]
            for pos in range(k):
                mat = _kron(mat, base if pos == slot else eye)
            gens.append(CycloMatrix(mat, order=p))
    return gens


# builders -------------------------------------------------------------------


def _natural_index(G: FiniteGroup) -> int:
    table = character_table(G)
    nat = ClassFunction.from_values(G, [c.representative.trace() for c in G.classes])
    idx = table.find(nat)
    if idx is None:
        raise GroupError("natural representation not found among irreducibles")
    return idx


def _first_twist(table: CharacterTable, idx: int) -> dict[str, int]:
    """ρ⊗η for the first linear η that moves ρ; also η itself."""
    chi = table[idx]
    for j in table.linear_characters()[1:]:
        tw = table.find(chi * table[j])
        if tw is not None and tw != idx:
            return {"eta": j, "twist": tw}
    return {}


def _dual_index(table: CharacterTable, idx: int) -> int:
    return table.find(table[idx].conj())


def _matrix_entry(name, gens, notes, role="rho") -> CatalogEntry:
    G = group_from_generators(gens, name=name)
    table = character_table(G)
    nat = _natural_index(G)
    roles = {role: nat, "trivial": 0, f"{role}-dual": _dual_index(table, nat)}
    tw = _first_twist(table, nat)
    if tw:
        roles["eta"] = tw["eta"]
        roles[f"{role}-twist"] = tw["twist"]
    return CatalogEntry(name, G, roles, notes)


def _by_degree(table: CharacterTable, degree: int) -> list[int]:
    return [i for i, d in enumerate(table.degrees) if d == degree]


def _build_C2():
    G = group_from_generators([_perm(2, (0, 1))], name="C2")
    return CatalogEntry("C2", G, {"trivial": 0, "sign": 1}, "cyclic group of order 2")


def _build_S3():
    G = group_from_generators([_perm(3, (0, 1)), _perm(3, (0, 1, 2))], name="S3")
    t = character_table(G)
    return CatalogEntry("S3", G, {"trivial": 0, "sign": 1, "pi": _by_degree(t, 2)[0]}, "symmetric group on 3 letters")


def _build_Q8():
    qi, qj, _ = _quaternion_units()
    G = group_from_generators([qi, qj], name="Q8")
    pi = _natural_index(G)
    return CatalogEntry("Q8", G, {"trivial": 0, "pi": pi}, "quaternion group as 2x2 matrices over Q(i)")


def _build_A4():
    G = group_from_generators([_perm(4, (0, 1, 2)), _perm(4, (0, 1), (2, 3))], name="A4")
    t = character_table(G)
    lin = t.linear_characters()
    return CatalogEntry(
        "A4", G, {"trivial": 0, "mu": lin[1], "mu2": lin[2], "Pi": _by_degree(t, 3)[0]},
        "alternating group on 4 letters; Pi is the adjoint of a tetrahedral pi",
    )


def _dihedral(n: int, name: str):
    r = Permutation([(i + 1) % n for i in range(n)])
    s = Permutation([(-i) % n for i in range(n)])
    G = group_from_generators([r, s], name=name)
    t = character_table(G)
    # prefer a faithful 2-dim irreducible: irrational trace at the rotation
    rot_class = int(G.class_of[G.index_of(r)])
    twos = _by_degree(t, 2)
    pi = next((i for i in twos if not t[i][rot_class].is_rational()), twos[0])
    roles = {"trivial": 0, "pi": pi}
    tw = _first_twist(t, pi)
    if tw:
        roles["eta"] = tw["eta"]
        roles["pi-twist"] = tw["twist"]
    other = [i for i in twos if i != pi]
    if other:
        roles["pi-other"] = other[0]
    return CatalogEntry(name, G, roles, f"dihedral group of order {2 * n} acting on a {n}-gon")


def _build_binary_tetrahedral():
    qi, qj, qw = _quaternion_units()
    G = group_from_generators([qi, qj, qw], name="binary-tetrahedral")
    t = character_table(G)
    pi = _natural_index(G)
    lin = t.linear_characters()
    mu = lin[1]
    twist = t.find(t[pi] * t[mu])
    ad = t.find(adjoint_class_function(t[pi]))
    omega = t.find(t[pi] * t[pi] - _sym2(t[pi]))
    return CatalogEntry(
        "binary-tetrahedral", G,
        {"trivial": 0, "pi": pi, "mu": mu, "mu2": lin[2], "pi-twist": twist, "Ad": ad, "omega": omega},
        "SL(2,3) in SU(2); pi is the natural 2-dim representation (tetrahedral type)",
    )


def _sym2(f):
    return (f * f + f.adams(2)) / 2


def _build_binary_octahedral():
    qi, qj, qw = _quaternion_units()
    z8 = zeta(8)
    r = CycloMatrix([[z8, 0], [0, z8**7]])
    G = group_from_generators([qi, qj, qw, r], name="binary-octahedral")
    t = character_table(G)
    pi = _natural_index(G)
    eta = t.linear_characters()[1]
    twist = t.find(t[pi] * t[eta])
    ad = t.find(adjoint_class_function(t[pi]))
    # the 2-dim irreducible trivial on the centre factors through S3
    minus_one = int(G.class_of[G.index_of(qi * qi)])
    sigma = next(i for i in _by_degree(t, 2) if t[i][minus_one] == 2)
    return CatalogEntry(
        "binary-octahedral", G,
        {"trivial": 0, "pi": pi, "eta": eta, "pi-twist": twist, "Ad": ad, "sigma": sigma},
        "binary octahedral group (order 48) in SU(2); pi is the natural 2-dim representation (octahedral type)",
    )


def _build_G216():
    S, T, U, V, _ = _blichfeldt_matrices()
    return _matrix_entry("G216", [S, T, U, V], "<S,T,U,V> in SL3; projective image of order 216")


def _build_G72():
    S, T, U, V, Uinv = _blichfeldt_matrices()
    return _matrix_entry("G72", [S, T, U * V * Uinv, V], "<S,T,UVU^-1,V> in SL3; projective image of order 72")


def _build_A6():
    return _matrix_entry(
        "A6-3dim", list(_valentiner_matrices()),
        "Valentiner group 3.A6 in SL3 over Q(zeta_15); projective image A6",
    )


def _build_PSL27():
    a = Permutation([(i + 1) % 7 for i in range(7)])
    b = Permutation([0, 1, 4, 3, 2, 6, 5])
    G = group_from_generators([a, b], name="PSL27-3dim")
    t = character_table(G)
    threes = _by_degree(t, 3)
    return CatalogEntry(
        "PSL27-3dim", G, {"trivial": 0, "rho": threes[0], "rho-dual": threes[1]},
        "PSL(2,7) = GL(3,2) acting on the 7 points of the Fano plane",
    )


def _build_extraspecial(p: int, k: int):
    name = f"extraspecial({p},{k})"
    G = group_from_generators(_heisenberg(p, k), name=name)
    t = character_table(G)
    rho = _natural_index(G)
    return CatalogEntry(
        name, G, {"trivial": 0, "rho": rho, "rho-dual": _dual_index(t, rho)},
        f"Heisenberg group of order {p}^{2 * k + 1} via clock and shift matrices of size {p}^{k}",
    )


_BUILDERS = {
    "A4": _build_A4,
    "A6-3dim": _build_A6,
    "C2": _build_C2,
    "G216": _build_G216,
    "G72": _build_G72,
    "PSL27-3dim": _build_PSL27,
    "Q8": _build_Q8,
    "S3": _build_S3,
    "binary-octahedral": _build_binary_octahedral,
    "binary-tetrahedral": _build_binary_tetrahedral,
    "dihedral-16": lambda: _dihedral(8, "dihedral-16"),
    "dihedral-8": lambda: _dihedral(4, "dihedral-8"),
    "extraspecial(3,1)": lambda: _build_extraspecial(3, 1),
    "extraspecial(3,2)": lambda: _build_extraspecial(3, 2),
    "extraspecial(5,1)": lambda: _build_extraspecial(5, 1),
}

CATALOG_NAMES = tuple(sorted(_BUILDERS))

# distinguished representations whose adjoint is irreducible per the Blichfeldt/Martin list
ADJOINT_IRREDUCIBLE = ("G72", "G216", "A6-3dim", "PSL27-3dim", "extraspecial(3,1)", "extraspecial(5,1)")
ADJOINT_REDUCIBLE = ("dihedral-8", "dihedral-16")


@lru_cache(maxsize=None)
def build_example(name: str) -> CatalogEntry:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None
    entry = builder()
    for role, idx in entry.distinguished_reps.items():
        if idx is None or not 0 <= idx < len(entry.table):
            raise CatalogError(f"{name}: role {role} does not name an irreducible")
    return entry


def list_catalog() -> list[dict]:
    rows = []
    for name in CATALOG_NAMES:
        e = build_example(name)
        rows.append(
            {
                "name": name,
                "order": e.group.order,
                "projective_order": e.projective_order,
                "distinguished_degrees": e.distinguished_degrees,
                "roles": {r: e.table.labels[i] for r, i in e.distinguished_reps.items()},
            }
        )
    return rows


def export_catalog(path) -> None:
    with open(path, "w") as fh:
        json.dump(list_catalog(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def adjoint_is_irreducible(entry: CatalogEntry, role: str | None = None) -> bool:
    role = role or next(r for r in PRIMARY_ROLES if r in entry.distinguished_reps)
    return is_irreducible(adjoint_character(entry.rep(role)).class_function())


def sharpness_search(n: int, entries) -> tuple[Fraction, tuple[str, str, str]]:
    """Smallest positive disagreement density among distinct degree-n irreducible pairs."""
    from .chebotarev import exact_density

    if n not in (2, 3):
        raise ValueError("sharpness search is defined for n in {2, 3}")
    best = None
    for name in entries:
        e = build_example(name) if isinstance(name, str) else name
        t = e.table
        idx = [i for i, d in enumerate(t.degrees) if d == n]
        for i in idx:
            for j in idx:
                if i == j:
                    continue
                dens = exact_density(t[i], t[j])
                if dens == 0:
                    continue
                if best is None or dens < best[0]:
                    best = (dens, (e.name, t.labels[i], t.labels[j]))
    if best is None:
        raise ValueError(f"no degree-{n} irreducibles in the given entries")
    return best
