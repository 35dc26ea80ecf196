import pytest

from multone.catalog import _blichfeldt_matrices, _heisenberg
from multone.cyclotomic import zeta
from multone.groups import (
    CycloMatrix,
    GroupError,
    Permutation,
    central_quotient_or_center,
    check_group_axioms,
    conjugacy_classes,
    group_from_generators,
    group_from_json,
    projective_image_order,
    scalar_subgroup,
)


def perm(n, *cycles):
    return Permutation.from_cycles(n, cycles)


S3_GENS = [perm(3, (0, 1)), perm(3, (0, 1, 2))]


def test_empty_generators_give_trivial_group():
    G = group_from_generators([])
    assert G.order == 1
    assert len(conjugacy_classes(G)) == 1


def test_s3_order_and_classes():
    G = group_from_generators(S3_GENS)
    assert G.order == 6
    assert [c.size for c in conjugacy_classes(G)] == [1, 2, 3]
    assert check_group_axioms(G)


def test_cyclic_group_has_singleton_classes():
    G = group_from_generators([perm(5, (0, 1, 2, 3, 4))])
    assert G.order == 5
    assert [c.size for c in G.classes] == [1] * 5


def test_quaternion_group_has_five_classes():
    i = zeta(4)
    G = group_from_generators([CycloMatrix([[i, 0], [0, -i]]), CycloMatrix([[0, 1], [-1, 0]])])
    assert G.order == 8
    assert len(G.classes) == 5


def test_blichfeldt_projective_orders():
    S, T, U, V, Uinv = _blichfeldt_matrices()
    assert U * Uinv == CycloMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]], order=9)
    G = group_from_generators([S, T, U, V])
    assert projective_image_order(G) == 216
    assert projective_image_order(G) * len(scalar_subgroup(G)) == G.order
    H = group_from_generators([S, T, U * V * Uinv, V])
    assert projective_image_order(H) == 72


def test_scalar_group_has_trivial_projective_image():
    w = zeta(3)
    G = group_from_generators([CycloMatrix([[w, 0], [0, w]])])
    assert G.order == 3 and projective_image_order(G) == 1


def test_projective_image_needs_matrices():
    with pytest.raises(GroupError, match="projective image undefined"):
        projective_image_order(group_from_generators(S3_GENS))


def test_centers():
    G = group_from_generators([perm(4, (0, 1, 2, 3))])
    center, q = central_quotient_or_center(G)
    assert len(center) == 4 and q == 1
    _, q = central_quotient_or_center(group_from_generators(S3_GENS))
    assert q == 6
    E = group_from_generators(_heisenberg(3, 1))
    center, q = central_quotient_or_center(E)
    assert E.order == 27 and len(center) == 3 and q == 9


def test_heterogeneous_generators_rejected():
    with pytest.raises(GroupError, match="heterogeneous generators"):
        group_from_generators([perm(3, (0, 1)), CycloMatrix([[0, 1], [1, 0]])])
    with pytest.raises(GroupError, match="heterogeneous generators"):
        group_from_generators([perm(3, (0, 1)), perm(4, (0, 1))])


def test_element_cap():
    with pytest.raises(GroupError, match="group too large"):
        group_from_generators([perm(7, (0, 1)), perm(7, (0, 1, 2, 3, 4, 5, 6))], cap=1000)


def test_classes_partition_and_are_closed():
    S, T, U, V, Uinv = _blichfeldt_matrices()
    G = group_from_generators([S, T, U * V * Uinv, V])
    seen = set()
    for c in G.classes:
        assert G.order % c.size == 0
        members = set(c.members)
        assert not members & seen
        seen |= members
        for g in range(0, G.order, 17):
            conj = G.mult[G.mult[G.inverse[g], c.rep_index], g]
            assert int(conj) in members
    assert len(seen) == G.order


def test_enumeration_is_deterministic():
    a = group_from_generators(S3_GENS)
    b = group_from_generators(S3_GENS)
    assert [g.key() for g in a.elements] == [g.key() for g in b.elements]
    assert [c.label for c in a.classes] == [c.label for c in b.classes]


def test_json_round_trip():
    G = group_from_generators(_heisenberg(3, 1))
    H = group_from_json(G.to_json())
    assert H.order == 27
    P = group_from_json(group_from_generators(S3_GENS).to_json())
    assert P.order == 6
