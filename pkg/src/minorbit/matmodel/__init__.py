"""Explicit matrix models of real forms and their exact structural checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..realform import RealFormDescriptor, DerivedInvariants, catalog_by_id, derive_invariants
from .checks import LambdaData, centralizer_checks, lambda_data, spectral_checks
from .families import MODEL_IDS, ModelError
from .model import LieAlgebraModel, build_model
from .restricted import (
    RestrictedRootDatum,
    eigenvalue_multiplicities,
    kernel_ad_e_dimension,
    restricted_root_datum,
)
from .triples import (
    CayleyTriple,
    STriple,
    cayley_transform,
    compact_partner,
    make_s_triple,
)

__all__ = [
    "MODEL_IDS",
    "ModelError",
    "LieAlgebraModel",
    "RestrictedRootDatum",
    "STriple",
    "CayleyTriple",
    "LambdaData",
    "ModelAnalysis",
    "build_model",
    "restricted_root_datum",
    "make_s_triple",
    "cayley_transform",
    "compact_partner",
    "spectral_checks",
    "centralizer_checks",
    "lambda_data",
    "eigenvalue_multiplicities",
    "kernel_ad_e_dimension",
    "analyze",
    "has_matrix_model",
]


def has_matrix_model(form_id: str) -> bool:
    return form_id in MODEL_IDS


@dataclass
class ModelAnalysis:
    """One model with all derived exact structures, built once and shared."""

    descriptor: RealFormDescriptor
    invariants: DerivedInvariants
    model: LieAlgebraModel
    datum: RestrictedRootDatum
    striple: STriple
    cayley: CayleyTriple

    @property
    def form_id(self) -> str:
        return self.descriptor.id

    def lambda_data(self) -> LambdaData:
        return _lambda_cached(self.form_id)


@lru_cache(maxsize=None)
def analyze(form_id: str) -> ModelAnalysis:
    if not has_matrix_model(form_id):
        raise ModelError(f"form {form_id!r} has no matrix model")
    descriptor = catalog_by_id()[form_id]
    invariants = derive_invariants(descriptor)
    model = build_model(form_id)
    datum = restricted_root_datum(model)
    if datum.class_mults() != descriptor.mults:
        raise ModelError(
            f"{form_id}: model multiplicities {datum.class_mults()} disagree "
            f"with the catalog {descriptor.mults}"
        )
    striple = make_s_triple(model, datum)
    cayley = cayley_transform(striple)
    return ModelAnalysis(
        descriptor=descriptor,
        invariants=invariants,
        model=model,
        datum=datum,
        striple=striple,
        cayley=cayley,
    )


@lru_cache(maxsize=None)
def _lambda_cached(form_id: str) -> LambdaData:
    a = analyze(form_id)
    return lambda_data(
        a.model, a.datum, a.striple, a.cayley, a.invariants.dim_X,
        a.descriptor.hermitian,
    )
