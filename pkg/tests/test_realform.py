import json

import pytest

from minorbit.realform import (
    CatalogError,
    EXCEPTIONAL_TABLE_IDS,
    cross_checks,
    derive_invariants,
    exceptional_table,
    load_catalog,
)


def entry_dict(**overrides):
    base = {
        "id": "su21",
        "gc_label": "A2",
        "restricted_label": "BC1",
        "mults": {"e_i": 2, "2e_i": 1},
        "dim_m": 1,
        "hermitian": True,
        "k_name": "U(2)",
        "k_root_label": "A1",
        "jordan_algebra": None,
        "notes": "",
    }
    base.update(overrides)
    return base


def write_catalog(tmp_path, entries):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(entries), encoding="utf-8")
    return path


def test_shipped_catalog_loads(catalog):
    assert len(catalog) >= 12
    ids = [e.id for e in catalog]
    assert len(set(ids)) == len(ids)


def test_su21_dimension_arithmetic(catalog_map):
    desc = catalog_map["su21"]
    # dim_m + rank + sum over roots of the multiplicities: 1 + 1 + 2*(2+1) = 8
    assert desc.dim_g == 1 + 1 + 2 * (2 + 1) == 8


def test_rejects_hermitian_multiplicity_even_when_dims_fit(tmp_path):
    # su(4,2)-like data marked hermitian with mult(psi) = 4 must be refused
    bad = entry_dict(
        id="bad",
        gc_label="A3",
        restricted_label="A1",
        mults={"long": 4},
        dim_m=6,
        hermitian=True,
    )
    path = write_catalog(tmp_path, [bad])
    with pytest.raises(CatalogError) as err:
        load_catalog(path)
    assert "mult(psi)" in str(err.value)


def test_rejects_dimension_mismatch(tmp_path):
    bad = entry_dict(dim_m=3)
    path = write_catalog(tmp_path, [bad])
    with pytest.raises(CatalogError) as err:
        load_catalog(path)
    assert "dimension mismatch" in str(err.value)


def test_rejects_unknown_keys_and_duplicates(tmp_path):
    path = write_catalog(tmp_path, [entry_dict(extra_field=1)])
    with pytest.raises(CatalogError) as err:
        load_catalog(path)
    assert "unknown keys" in str(err.value)
    path = write_catalog(tmp_path, [entry_dict(), entry_dict()])
    with pytest.raises(CatalogError) as err:
        load_catalog(path)
    assert "duplicate" in str(err.value)


def test_rejects_wrong_mult_keys(tmp_path):
    path = write_catalog(tmp_path, [entry_dict(mults={"short": 2, "long": 1})])
    with pytest.raises(CatalogError):
        load_catalog(path)


def test_sl2R_invariants(catalog_map):
    inv = derive_invariants(catalog_map["sl2R"])
    assert inv.d == 1
    assert [inv.m[j] for j in (-2, -1, 0, 1, 2)] == [1, 0, 1, 0, 1]
    assert (inv.dim_Z, inv.dim_X) == (2, 0)
    assert inv.omin_split
    assert inv.dim_Z == 2 * inv.h_vee - 2


def test_su21_invariants(catalog_map):
    inv = derive_invariants(catalog_map["su21"])
    assert inv.d == 1
    assert inv.m[0] == 2 and inv.m[1] == 2
    assert (inv.dim_Z, inv.dim_X) == (4, 2)
    assert inv.omin_split and inv.h_vee == 3


def test_sl3H_invariants(catalog_map):
    inv = derive_invariants(catalog_map["sl3H"])
    assert inv.d == 4
    assert not inv.omin_split
    assert (inv.dim_Z, inv.dim_X) == (16, 14)


def test_all_entries_pass_cross_checks(catalog):
    for desc in catalog:
        inv = derive_invariants(desc)
        assert sum(inv.m.values()) == inv.dim_g
        assert all(inv.m[j] == inv.m[-j] for j in (1, 2))
        failures = [c for c in cross_checks(desc, inv) if c.failed]
        assert not failures, (desc.id, failures)


def test_split_entries_are_omin_split(catalog):
    split = [e for e in catalog if e.is_split_mults]
    assert split, "catalog must contain split entries"
    for desc in split:
        assert derive_invariants(desc).omin_split, desc.id


def test_hermitian_entries_have_d1(catalog):
    for desc in catalog:
        if desc.hermitian:
            assert derive_invariants(desc).d == 1, desc.id


def test_omin_split_dimension_formulas(catalog):
    for desc in catalog:
        inv = derive_invariants(desc)
        if inv.omin_split:
            assert inv.dim_Z == 2 * inv.h_vee - 2, desc.id
            assert inv.dim_X == 2 * inv.h_vee - 4, desc.id


def test_positive_system_reversal_is_invisible(catalog):
    for desc in catalog:
        a = derive_invariants(desc)
        b = derive_invariants(desc, reversed_order=True)
        assert (a.d, a.m, a.dim_Z, a.dim_X, a.omin_split) == (
            b.d,
            b.m,
            b.dim_Z,
            b.dim_X,
            b.omin_split,
        )


def test_sl3H_cross_checks_skip_dimension_formulas(catalog_map):
    desc = catalog_map["sl3H"]
    checks = {c.name: c for c in cross_checks(desc, derive_invariants(desc))}
    assert checks["minimal_orbit_dim"].status == "skipped"
    assert checks["compact_orbit_dim"].status == "skipped"
    assert not any(c.failed for c in checks.values())


def test_exceptional_table_values(catalog):
    table = exceptional_table(catalog)
    assert table.dim_X_values() == (4, 14, 20, 32, 56)
    assert [r.dim_jordan for r in table.rows] == [2, 7, 10, 16, 28]
    g2 = table.rows[0]
    assert g2.k_name == "SU(2) x SU(2)"
    assert g2.x_name == "P1(C) x P1(C)"
    assert g2.dim_X == 4
    e7 = table.rows[3]
    assert e7.dim_X == 32
    f4 = table.rows[1]
    assert f4.dim_X == 14 == 2 * 9 - 4


def test_exceptional_table_requires_all_entries(catalog):
    partial = [e for e in catalog if e.id != "e7-split"]
    with pytest.raises(CatalogError) as err:
        exceptional_table(partial)
    assert "e7-split" in str(err.value)


def test_exceptional_ids_present(catalog_map):
    for form_id in EXCEPTIONAL_TABLE_IDS:
        assert form_id in catalog_map
