"""Command-line front end: catalog queries, tables, model and orbit checks."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, matmodel, realform, sympver
from .matmodel import ModelError
from .matmodel.checks import centralizer_checks, spectral_checks
from .matmodel.restricted import (
    eigenvalue_multiplicities,
    kernel_ad_e_dimension,
)
from .matmodel.triples import cayley_violations, s_triple_violations
from .numeric import numerics
from .realform import CatalogError
from .report import CheckItem, GramReport, ReportDocument

VERIFY_CHECKS = (
    "striple",
    "cayley",
    "spectra",
    "centralizers",
    "lambda",
    "beta",
    "ks",
    "poisson",
    "moment",
)

# finite-difference checks default to a looser tolerance than closed forms
DEFAULT_TOLS = {
    "beta": sympver.DEFAULT_TOL_CLOSED,
    "ks": sympver.DEFAULT_TOL_CLOSED,
    "moment": sympver.DEFAULT_TOL_CLOSED,
    "poisson": sympver.DEFAULT_TOL_FD,
}


@dataclass
class RunConfig:
    command: str
    form_id: str | None = None
    check_names: tuple[str, ...] = ()
    samples: int = 100
    tol: float | None = None
    seed: int = 42
    catalog_path: str | None = None
    format: str = "md"
    out: str | None = None

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "form": self.form_id,
            "checks": list(self.check_names) or None,
            "samples": self.samples,
            "tol": self.tol,
            "seed": self.seed,
            "catalog": self.catalog_path,
            "format": self.format,
        }

    def validate(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.tol is not None and self.tol <= 0:
            raise ValueError("tol must be positive")


def _load_catalog(config: RunConfig):
    return realform.load_catalog(config.catalog_path)


def cmd_catalog(config: RunConfig) -> ReportDocument:
    doc = ReportDocument(version=__version__, config=config.as_dict())
    entries = _load_catalog(config)
    for desc in entries:
        inv = realform.derive_invariants(desc)
        doc.checks.append(
            CheckItem(
                name=desc.id,
                status="pass",
                detail=(
                    f"gc={desc.gc_label} restricted={desc.restricted_label} "
                    f"d={inv.d} dim_Z={inv.dim_Z} dim_X={inv.dim_X} "
                    f"omin_split={inv.omin_split} hermitian={desc.hermitian} "
                    f"has_matrix_model={matmodel.has_matrix_model(desc.id)}"
                ),
            )
        )
    return doc


def _find_descriptor(config: RunConfig) -> realform.RealFormDescriptor:
    entries = {e.id: e for e in _load_catalog(config)}
    if config.form_id not in entries:
        raise CatalogError(config.form_id or "<none>", "unknown form id")
    return entries[config.form_id]


def cmd_invariants(config: RunConfig) -> ReportDocument:
    doc = ReportDocument(version=__version__, config=config.as_dict())
    desc = _find_descriptor(config)
    inv = realform.derive_invariants(desc)
    doc.checks.append(
        CheckItem(
            name=f"invariants[{desc.id}]",
            status="pass",
            detail=(
                f"d={inv.d} m={inv.m} dim_g={inv.dim_g} dim_Z={inv.dim_Z} "
                f"dim_X={inv.dim_X} omin_split={inv.omin_split} h_vee={inv.h_vee}"
            ),
        )
    )
    doc.checks.extend(realform.cross_checks(desc, inv))
    return doc


def cmd_table(config: RunConfig) -> ReportDocument:
    doc = ReportDocument(version=__version__, config=config.as_dict())
    table = realform.exceptional_table(_load_catalog(config))
    for row in table.as_dicts():
        doc.checks.append(
            CheckItem(
                name=f"table[{row['gc_type']}]",
                status="pass",
                detail=(
                    f"K={row['K']} X={row['X']} dim_X={row['dim_X']} "
                    f"J(X)={row['J(X)']} dim_J(X)={row['dim_J(X)']}"
                ),
            )
        )
    expected = (4, 14, 20, 32, 56)
    got = table.dim_X_values()
    doc.checks.append(
        CheckItem(
            name="table[dim_X_row]",
            status="pass" if got == expected else "fail",
            detail=f"dim_X = {got}, expected {expected}",
        )
    )
    doc.checks.append(
        CheckItem(
            name="table[jordan_halving]",
            status=(
                "pass"
                if all(r.dim_jordan * 2 == r.dim_X for r in table.rows)
                else "fail"
            ),
            detail="dim X = 2 dim J(X) on every row",
        )
    )
    return doc


def cmd_model_check(config: RunConfig) -> ReportDocument:
    doc = ReportDocument(version=__version__, config=config.as_dict())
    desc = _find_descriptor(config)
    if not matmodel.has_matrix_model(desc.id):
        raise ModelError(f"form {desc.id!r} has no matrix model")
    analysis = matmodel.analyze(desc.id)
    model, datum = analysis.model, analysis.datum

    def add(name, ok, detail=""):
        doc.checks.append(CheckItem(name, "pass" if ok else "fail", detail))

    add(
        "model_dimensions",
        model.dim == analysis.invariants.dim_g and model.dim_m == desc.dim_m,
        f"dim g = {model.dim}, dim k = {model.dim_k}, dim a = {model.dim_a}, "
        f"dim m = {model.dim_m}",
    )
    add(
        "restricted_multiplicities",
        datum.class_mults() == desc.mults,
        f"model {datum.class_mults()} vs catalog {desc.mults}",
    )
    inv = analysis.invariants
    model_m = eigenvalue_multiplicities(datum)
    add("eigenvalue_multiplicities", model_m == inv.m, f"{model_m}")
    dim_z_model = model.dim - kernel_ad_e_dimension(datum, analysis.striple.e)
    add(
        "orbit_dimension_oracle",
        dim_z_model == inv.dim_Z,
        f"dim from ad-e kernel {dim_z_model}, combinatorial {inv.dim_Z}",
    )
    return doc


def _run_verify_check(name: str, config: RunConfig, doc: ReportDocument) -> None:
    analysis = matmodel.analyze(config.form_id)
    tol = config.tol if config.tol is not None else DEFAULT_TOLS.get(name, 0.0)
    if name == "striple":
        problems = s_triple_violations(analysis.striple)
        doc.checks.append(
            GramReport(
                check_name="striple",
                sample_count=1,
                max_abs_deviation=0.0 if not problems else float("inf"),
                tolerance=tol,
                passed=not problems,
                seed=config.seed,
                detail="exact arithmetic" + ("; " + "; ".join(problems) if problems else ""),
            )
        )
    elif name == "cayley":
        problems = cayley_violations(analysis.cayley)
        doc.checks.append(
            GramReport(
                check_name="cayley",
                sample_count=1,
                max_abs_deviation=0.0 if not problems else float("inf"),
                tolerance=tol,
                passed=not problems,
                seed=config.seed,
                detail="exact arithmetic" + ("; " + "; ".join(problems) if problems else ""),
            )
        )
    elif name == "spectra":
        doc.checks.extend(
            spectral_checks(analysis.model, analysis.datum, analysis.striple,
                            analysis.cayley)
        )
    elif name == "centralizers":
        doc.checks.extend(
            centralizer_checks(analysis.model, analysis.datum, analysis.striple,
                               analysis.cayley, analysis.descriptor.hermitian)
        )
    elif name == "lambda":
        doc.checks.extend(analysis.lambda_data().checks)
    elif name == "beta":
        doc.checks.extend(
            sympver.verify_beta_symplectic(
                numerics(config.form_id), config.samples, tol, config.seed
            )
        )
    elif name == "ks":
        doc.checks.append(
            sympver.ks_correspondence_check(
                numerics(config.form_id), config.samples, tol, config.seed
            )
        )
    elif name == "poisson":
        doc.checks.append(
            sympver.poisson_identities_check(
                numerics(config.form_id), config.samples, tol, config.seed
            )
        )
    elif name == "moment":
        doc.checks.append(
            sympver.moment_cone_check(
                numerics(config.form_id), config.samples, tol, config.seed
            )
        )
    else:
        raise ValueError(f"unknown check {name!r}")


def cmd_verify(config: RunConfig) -> ReportDocument:
    doc = ReportDocument(version=__version__, config=config.as_dict())
    desc = _find_descriptor(config)
    if not matmodel.has_matrix_model(desc.id):
        raise ModelError(f"form {desc.id!r} has no matrix model")
    names = config.check_names or VERIFY_CHECKS
    for name in names:
        if name not in VERIFY_CHECKS:
            raise ValueError(
                f"unknown check {name!r}; choose from {', '.join(VERIFY_CHECKS)}"
            )
        try:
            _run_verify_check(name, config, doc)
        except (ModelError, CatalogError) as exc:
            doc.checks.append(CheckItem(name, "fail", f"error: {exc}"))
    return doc


COMMANDS = {
    "catalog": cmd_catalog,
    "invariants": cmd_invariants,
    "table": cmd_table,
    "model-check": cmd_model_check,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorbit",
        description=(
            "catalog, matrix-model and symplectic-orbit verification for "
            "minimal nilpotent coadjoint orbits"
        ),
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--form", dest="form_id", help="catalog form id")
    parser.add_argument(
        "--checks",
        help=f"comma-separated subset of: {','.join(VERIFY_CHECKS)}",
    )
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--catalog", dest="catalog_path", default=None)
    parser.add_argument("--format", choices=("md", "json"), default="md")
    parser.add_argument("--out", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    checks = tuple(c.strip() for c in args.checks.split(",")) if args.checks else ()
    config = RunConfig(
        command=args.command,
        form_id=args.form_id,
        check_names=checks,
        samples=args.samples,
        tol=args.tol,
        seed=args.seed,
        catalog_path=args.catalog_path,
        format=args.format,
        out=args.out,
    )
    try:
        config.validate()
        doc = COMMANDS[config.command](config)
    except (CatalogError, ModelError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = doc.to_json() if config.format == "json" else doc.to_markdown()
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if doc.overall_pass else 1


if __name__ == "__main__":
    raise SystemExit(main())
