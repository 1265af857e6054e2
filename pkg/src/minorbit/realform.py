"""Catalog of real simple Lie algebras and the invariants derived from it.

A catalog entry records the restricted root system of a real form together
with its root-space multiplicities (Araki-style data).  Nothing here touches
matrices: the dimension of the minimal nilpotent coadjoint orbit, the induced
compact orbit, and the splitness flag all fall out of counting eigenvalues of
the distinguished coroot element on the restricted root spaces.  The matrix
models in :mod:`minorbit.matmodel` recompute the same numbers independently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .report import CheckItem
from .rootsys import (
    RootSystem,
    RootSystemLabel,
    RootSystemError,
    build_root_system,
    coroot_pairing,
    dual_coxeter_number,
)

_DESCRIPTOR_KEYS = {
    "id",
    "gc_label",
    "restricted_label",
    "mults",
    "dim_m",
    "hermitian",
    "k_name",
    "k_root_label",
    "jordan_algebra",
    "notes",
}

EXCEPTIONAL_TABLE_IDS = ("g2-split", "f4-split", "e6-split", "e7-split", "e8-split")


class CatalogError(ValueError):
    """A catalog entry violated the schema or a structural invariant."""

    def __init__(self, entry_id: str, message: str):
        self.entry_id = entry_id
        self.invariant = message
        super().__init__(f"catalog entry {entry_id!r}: {message}")


@dataclass(frozen=True)
class RealFormDescriptor:
    id: str
    gc_label: RootSystemLabel
    restricted_label: RootSystemLabel
    mults: dict[str, int]
    dim_m: int
    hermitian: bool
    k_name: str
    k_root_label: RootSystemLabel | None = None
    jordan_algebra: str | None = None
    notes: str = ""

    @property
    def restricted_system(self) -> RootSystem:
        return build_root_system(self.restricted_label)

    @property
    def is_split_mults(self) -> bool:
        """All restricted root spaces one-dimensional."""
        return all(m == 1 for m in self.mults.values())

    def mult_of(self, root) -> int:
        return self.mults[self.restricted_system.root_class(root)]

    @property
    def dim_g(self) -> int:
        rs = self.restricted_system
        return self.dim_m + rs.rank + sum(self.mult_of(b) for b in rs.all_roots)


def expected_mult_keys(label: RootSystemLabel) -> set[str]:
    if label.family == "BC":
        keys = {"e_i", "2e_i"}
        if label.rank >= 2:
            keys.add("e_i±e_j")
        return keys
    counts = build_root_system(label).class_counts()
    return set(counts)


def _parse_entry(raw: dict) -> RealFormDescriptor:
    entry_id = raw.get("id", "<missing id>")
    if not isinstance(entry_id, str) or not entry_id:
        raise CatalogError(str(entry_id), "id must be a non-empty string")
    unknown = set(raw) - _DESCRIPTOR_KEYS
    if unknown:
        raise CatalogError(entry_id, f"unknown keys {sorted(unknown)}")
    missing = _DESCRIPTOR_KEYS - set(raw) - {"k_root_label", "jordan_algebra", "notes"}
    if missing:
        raise CatalogError(entry_id, f"missing keys {sorted(missing)}")
    try:
        gc = RootSystemLabel.parse(raw["gc_label"])
        restricted = RootSystemLabel.parse(raw["restricted_label"])
        k_root = raw.get("k_root_label")
        k_root_label = RootSystemLabel.parse(k_root) if k_root else None
    except RootSystemError as exc:
        raise CatalogError(entry_id, str(exc)) from exc
    if gc.family == "BC":
        raise CatalogError(entry_id, "complexification label cannot be BC")
    mults = raw["mults"]
    if not isinstance(mults, dict) or not mults:
        raise CatalogError(entry_id, "mults must be a non-empty map")
    expected = expected_mult_keys(restricted)
    if set(mults) != expected:
        raise CatalogError(
            entry_id,
            f"mult keys {sorted(mults)} do not match {sorted(expected)} for {restricted}",
        )
    for key, val in mults.items():
        if not isinstance(val, int) or val < 1:
            raise CatalogError(entry_id, f"mult {key!r} must be a positive integer")
    dim_m = raw["dim_m"]
    if not isinstance(dim_m, int) or dim_m < 0:
        raise CatalogError(entry_id, "dim_m must be a nonnegative integer")
    desc = RealFormDescriptor(
        id=entry_id,
        gc_label=gc,
        restricted_label=restricted,
        mults=dict(mults),
        dim_m=dim_m,
        hermitian=bool(raw["hermitian"]),
        k_name=raw["k_name"],
        k_root_label=k_root_label,
        jordan_algebra=raw.get("jordan_algebra"),
        notes=raw.get("notes") or "",
    )
    _validate(desc)
    return desc


def _validate(desc: RealFormDescriptor) -> None:
    gc_rs = build_root_system(desc.gc_label)
    dim_gc = desc.gc_label.rank + len(gc_rs.all_roots)
    if desc.dim_g != dim_gc:
        raise CatalogError(
            desc.id,
            f"dimension mismatch: dim_m + rank + sum(mults) = {desc.dim_g} "
            f"but dim of {desc.gc_label} is {dim_gc}",
        )
    rs = desc.restricted_system
    psi_mult = desc.mult_of(rs.highest_root)
    if desc.hermitian and psi_mult != 1:
        raise CatalogError(
            desc.id,
            f"hermitian entry must have mult(psi) = 1, got {psi_mult}",
        )


def default_catalog_path() -> Path:
    return Path(str(resources.files("minorbit").joinpath("data/catalog.json")))


def load_catalog(source: str | Path | None = None) -> list[RealFormDescriptor]:
    """Load and validate a catalog document (the shipped one by default)."""
    path = Path(source) if source is not None else default_catalog_path()
    raw = json.loads(path.read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise CatalogError("<document>", "top level must be a list of entries")
    entries = [_parse_entry(item) for item in raw]
    seen: set[str] = set()
    for e in entries:
        if e.id in seen:
            raise CatalogError(e.id, "duplicate id")
        seen.add(e.id)
    return entries


def catalog_by_id(source: str | Path | None = None) -> dict[str, RealFormDescriptor]:
    return {e.id: e for e in load_catalog(source)}


@dataclass(frozen=True)
class DerivedInvariants:
    d: int
    m: dict[int, int]  # ad x_psi eigenvalue -> multiplicity, j in -2..2
    dim_g: int
    dim_Z: int
    dim_X: int
    omin_split: bool
    h_vee: int

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "m": {str(j): self.m[j] for j in (-2, -1, 0, 1, 2)},
            "dim_g": self.dim_g,
            "dim_Z": self.dim_Z,
            "dim_X": self.dim_X,
            "omin_split": self.omin_split,
            "h_vee": self.h_vee,
        }


def derive_invariants(
    desc: RealFormDescriptor, reversed_order: bool = False
) -> DerivedInvariants:
    """Eigenvalue multiplicities of the highest-coroot element and orbit dims.

    ``reversed_order`` negates the positive system; every derived quantity
    must be unchanged, which the test suite asserts.
    """
    rs = desc.restricted_system
    psi = rs.highest_root
    if reversed_order:
        psi = tuple(-x for x in psi)
    m = {j: 0 for j in (-2, -1, 0, 1, 2)}
    for beta in rs.all_roots:
        j = coroot_pairing(rs, beta, psi)
        if j not in m:
            raise CatalogError(desc.id, f"pairing {j} outside -2..2 for root {beta}")
        m[j] += desc.mult_of(beta)
    m[0] += desc.dim_m + rs.rank
    d = desc.mult_of(psi)
    dim_g = desc.dim_g
    if sum(m.values()) != dim_g:
        raise CatalogError(desc.id, "eigenvalue multiplicities do not sum to dim g")
    # dim of the centralizer of the nilpositive element is m0 + m1; the
    # matrix-model lane recomputes it as the kernel of ad e.
    dim_Z = dim_g - (m[0] + m[1])
    return DerivedInvariants(
        d=d,
        m=m,
        dim_g=dim_g,
        dim_Z=dim_Z,
        dim_X=dim_Z - 2,
        omin_split=(d == 1),
        h_vee=dual_coxeter_number(build_root_system(desc.gc_label)),
    )


def cross_checks(desc: RealFormDescriptor, inv: DerivedInvariants) -> list[CheckItem]:
    """Named identity checks relating the derived invariants."""
    checks: list[CheckItem] = []

    def add(name: str, ok: bool, detail: str = ""):
        checks.append(CheckItem(name, "pass" if ok else "fail", detail))

    def skip(name: str, detail: str):
        checks.append(CheckItem(name, "skipped", detail))

    add(
        "eigenvalue_symmetry",
        all(inv.m[j] == inv.m[-j] for j in (1, 2)),
        f"m={inv.m}",
    )
    add("top_eigenspace_is_d", inv.m[2] == inv.d, f"m2={inv.m[2]} d={inv.d}")
    add(
        "dimension_partition",
        sum(inv.m.values()) == inv.dim_g,
        f"sum m_j = {sum(inv.m.values())}, dim g = {inv.dim_g}",
    )
    add("orbit_gap", inv.dim_X == inv.dim_Z - 2, f"dim_X={inv.dim_X} dim_Z={inv.dim_Z}")
    if inv.omin_split:
        add(
            "minimal_orbit_dim",
            inv.dim_Z == 2 * inv.h_vee - 2,
            f"dim_Z={inv.dim_Z} vs 2h^v-2={2 * inv.h_vee - 2}",
        )
        add(
            "compact_orbit_dim",
            inv.dim_X == 2 * inv.h_vee - 4,
            f"dim_X={inv.dim_X} vs 2h^v-4={2 * inv.h_vee - 4}",
        )
    else:
        skip("minimal_orbit_dim", "not omin-split")
        skip("compact_orbit_dim", "not omin-split")
    if desc.is_split_mults:
        add("split_implies_omin_split", inv.omin_split, f"d={inv.d}")
    else:
        skip("split_implies_omin_split", "multiplicities not all 1")
    if desc.hermitian:
        add("hermitian_implies_d1", inv.d == 1, f"d={inv.d}")
    else:
        skip("hermitian_implies_d1", "not hermitian")
    return checks


@dataclass
class TableRow:
    gc_type: str
    k_name: str
    x_name: str
    dim_X: int
    jordan_algebra: str
    dim_jordan: int


@dataclass
class ExceptionalTable:
    rows: list[TableRow] = field(default_factory=list)

    def dim_X_values(self) -> tuple[int, ...]:
        return tuple(r.dim_X for r in self.rows)

    def as_dicts(self) -> list[dict]:
        return [
            {
                "gc_type": r.gc_type,
                "K": r.k_name,
                "X": r.x_name,
                "dim_X": r.dim_X,
                "J(X)": r.jordan_algebra,
                "dim_J(X)": r.dim_jordan,
            }
            for r in self.rows
        ]


def exceptional_table(
    catalog: list[RealFormDescriptor] | None = None,
) -> ExceptionalTable:
    """Split exceptional forms with computed compact-orbit dimensions.

    For these entries dim J(X) is reported as dim X / 2; the X column is the
    display text carried in the entry's ``notes`` field.
    """
    entries = {e.id: e for e in (catalog if catalog is not None else load_catalog())}
    table = ExceptionalTable()
    for entry_id in EXCEPTIONAL_TABLE_IDS:
        if entry_id not in entries:
            raise CatalogError(entry_id, "required exceptional entry missing")
        desc = entries[entry_id]
        inv = derive_invariants(desc)
        if inv.dim_X % 2:
            raise CatalogError(entry_id, f"dim_X={inv.dim_X} is odd")
        table.rows.append(
            TableRow(
                gc_type=str(desc.gc_label),
                k_name=desc.k_name,
                x_name=desc.notes,
                dim_X=inv.dim_X,
                jordan_algebra=desc.jordan_algebra or "",
                dim_jordan=inv.dim_X // 2,
            )
        )
    return table
