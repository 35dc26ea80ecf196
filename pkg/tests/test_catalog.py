import json
from fractions import Fraction

import pytest

from multone.catalog import (
    ADJOINT_REDUCIBLE,
    CATALOG_NAMES,
    CatalogError,
    adjoint_is_irreducible,
    build_example,
    export_catalog,
    list_catalog,
    sharpness_search,
)


def test_unknown_name():
    with pytest.raises(CatalogError, match="unknown"):
        build_example("E8")


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_roles_are_valid_irreducibles(name):
    e = build_example(name)
    for role, idx in e.distinguished_reps.items():
        assert 0 <= idx < len(e.table)
        assert e.rep(role) == e.table[idx]


def test_orders():
    expected = {
        "C2": 2, "S3": 6, "Q8": 8, "A4": 12, "dihedral-8": 8, "dihedral-16": 16,
        "binary-tetrahedral": 24, "binary-octahedral": 48, "PSL27-3dim": 168,
        "extraspecial(3,1)": 27, "extraspecial(5,1)": 125, "extraspecial(3,2)": 243,
        "G72": 216, "G216": 648, "A6-3dim": 1080,
    }
    for name, order in expected.items():
        assert build_example(name).group.order == order


def test_projective_orders():
    assert build_example("G216").projective_order == 216
    assert build_example("G72").projective_order == 72
    assert build_example("A6-3dim").projective_order == 360


def test_extraspecial_rep_degree():
    for (p, k) in [(3, 1), (5, 1), (3, 2)]:
        e = build_example(f"extraspecial({p},{k})")
        assert e.rep("rho").degree == p**k
        assert e.group.order == p ** (2 * k + 1)


@pytest.mark.parametrize("name", ["G72", "G216", "A6-3dim", "PSL27-3dim"])
def test_adjoint_irreducible(name):
    assert adjoint_is_irreducible(build_example(name))


@pytest.mark.parametrize("name", ADJOINT_REDUCIBLE)
def test_dihedral_adjoint_reducible(name):
    assert not adjoint_is_irreducible(build_example(name))


def test_listing():
    rows = list_catalog()
    names = [r["name"] for r in rows]
    assert names == sorted(names)
    by = {r["name"]: r for r in rows}
    assert by["G72"]["projective_order"] == 72
    assert by["binary-octahedral"]["order"] == 48
    assert by["C2"]["order"] == 2


def test_export(tmp_path):
    path = tmp_path / "catalog.json"
    export_catalog(path)
    assert json.loads(path.read_text()) == json.loads(json.dumps(list_catalog()))


def test_sharpness_regression():
    value, witness = sharpness_search(2, ["dihedral-8", "dihedral-16", "Q8", "binary-tetrahedral"])
    assert value == Fraction(1, 4)
    assert witness == ("dihedral-16", "2a", "2b")
    assert value >= Fraction(1, 8)


def test_sharpness_three_dim_floor():
    value, _ = sharpness_search(3, ["G72", "G216", "PSL27-3dim", "A4", "extraspecial(3,1)"])
    assert value >= Fraction(1, 18)


def test_sharpness_errors():
    with pytest.raises(ValueError):
        sharpness_search(2, ["C2"])
    with pytest.raises(ValueError):
        sharpness_search(5, ["C2"])
