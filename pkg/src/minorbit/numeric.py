"""Floating-point view of a matrix model for the sampling verifications.

The exact layer fixes every distinguished element; this module converts them
to numpy arrays once per form and provides the group action, the invariant
form, the compact projection, and the unitary pairing at float precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from . import exactla
from .matmodel import ModelAnalysis, analyze, compact_partner
from .matmodel import qmat


def _as_array(mat) -> np.ndarray:
    return np.array(qmat.to_complex(mat), dtype=complex)


@dataclass
class GroupElement:
    """Product of exponentials of algebra elements, with exact inverse."""

    factors: list[np.ndarray] = field(default_factory=list)

    @property
    def matrix(self) -> np.ndarray:
        n = self.factors[0].shape[0] if self.factors else 1
        out = np.eye(n, dtype=complex)
        for f in self.factors:
            out = out @ expm(f)
        return out

    @property
    def inverse(self) -> np.ndarray:
        n = self.factors[0].shape[0] if self.factors else 1
        out = np.eye(n, dtype=complex)
        for f in reversed(self.factors):
            out = out @ expm(-f)
        return out

    def ad(self, X: np.ndarray) -> np.ndarray:
        if not self.factors:
            return X
        return self.matrix @ X @ self.inverse


class ModelNumerics:
    """Distinguished elements and operations of one model, as floats."""

    def __init__(self, analysis: ModelAnalysis):
        model = analysis.model
        self.form_id = analysis.form_id
        self.n = model.n
        self.c = float(model.c)
        self.analysis = analysis
        self.dim_Z = analysis.invariants.dim_Z
        self.dim_X = analysis.invariants.dim_X
        self.hermitian = analysis.descriptor.hermitian

        mat = lambda coords: _as_array(model.matrix(coords))
        self.e = mat(analysis.striple.e)
        self.f = mat(analysis.striple.f)
        self.x_psi = mat(analysis.striple.x)
        self.z = mat(compact_partner(analysis.cayley))
        self.h = mat(analysis.cayley.h)
        self.v = mat(analysis.cayley.v)
        self.w = mat(analysis.cayley.w)
        self.theta_e = -self.f

        self.k_basis = [mat(model.unit_coords(i)) for i in model.k_indices]
        self.p_basis = [mat(model.unit_coords(i)) for i in model.p_indices]
        self.a_basis = [mat(model.unit_coords(i)) for i in model.a_indices]
        self.m_basis = [mat(v) for v in model.m_basis]
        self.n_basis = [mat(v) for v in analysis.datum.n_basis]

        lam = analysis.lambda_data()
        self.k_nu_basis = [mat(v) for v in lam.k_nu_basis]
        self.center_k_basis = [mat(v) for v in lam.center_basis]

        # B-orthogonal complement of k_nu inside k, computed exactly
        k_units = model.subspace_units(model.k_indices)
        gram_rows = [
            [model.B(y, x) for x in k_units] for y in lam.k_nu_basis
        ]
        if gram_rows:
            sol = exactla.kernel_basis(gram_rows)
            perp_coords = []
            for t in sol:
                vec = [0] * model.dim
                for coef, unit in zip(t, k_units):
                    for r in range(model.dim):
                        vec[r] = vec[r] + coef * unit[r]
                perp_coords.append(vec)
        else:
            perp_coords = list(k_units)
        perp_coords = exactla.orthogonalize(perp_coords, model.B)
        self.k_nu_perp_basis = [mat(v) for v in perp_coords]

        self._theta = _theta_fn(analysis)
        self._sigma = _sigma_fn(analysis)

    # -- operations ----------------------------------------------------------
    def bracket(self, X, Y):
        return X @ Y - Y @ X

    def B(self, X, Y) -> complex:
        return self.c * np.trace(X @ Y)

    def theta(self, X):
        return self._theta(X)

    def sigma(self, X):
        return self._sigma(X)

    def sigma_u(self, X):
        return self._theta(self._sigma(X))

    def hermitian_pairing(self, X, Y) -> complex:
        """Invariant Hilbert pairing {X, Y} = -B(X, sigma_u(Y))."""
        return -self.B(X, self.sigma_u(Y))

    def k_component(self, X):
        return (X + self.theta(X)) / 2.0

    def group(self, factors) -> GroupElement:
        return GroupElement(list(factors))

    def sample_k(self, rng, scale: float = 1.0) -> np.ndarray:
        coeffs = rng.standard_normal(len(self.k_basis)) * scale
        return sum(c * b for c, b in zip(coeffs, self.k_basis))

    def sample_span(self, rng, basis, scale: float = 1.0) -> np.ndarray:
        coeffs = rng.standard_normal(len(basis)) * scale
        return sum(c * b for c, b in zip(coeffs, basis))

    def sample_pc(self, rng, scale: float = 1.0) -> np.ndarray:
        re = rng.standard_normal(len(self.p_basis))
        im = rng.standard_normal(len(self.p_basis))
        return sum(
            (complex(a, b) * scale) * m for a, b, m in zip(re, im, self.p_basis)
        )


def _theta_fn(analysis: ModelAnalysis):
    family = analysis.model.family
    n = analysis.model.n
    if family in ("slR", "spR", "so"):
        return lambda X: -X.T
    if family == "su":
        import re as _re

        m = _re.fullmatch(r"su(\d)(\d)", analysis.form_id)
        p = int(m.group(1))
        J = np.eye(n, dtype=complex)
        for i in range(p, n):
            J[i, i] = -1.0
        return lambda X: J @ X @ J
    if family == "sl2H":
        Jq = np.zeros((4, 4), dtype=complex)
        for i in range(2):
            Jq[i, 2 + i] = -1.0
            Jq[2 + i, i] = 1.0
        Jq_inv = -Jq
        return lambda X: -(Jq @ X.T @ Jq_inv)
    raise ValueError(f"unknown family {family}")


def _sigma_fn(analysis: ModelAnalysis):
    family = analysis.model.family
    n = analysis.model.n
    if family in ("slR", "spR", "so"):
        return lambda X: X.conj()
    if family == "su":
        import re as _re

        m = _re.fullmatch(r"su(\d)(\d)", analysis.form_id)
        p = int(m.group(1))
        J = np.eye(n, dtype=complex)
        for i in range(p, n):
            J[i, i] = -1.0
        return lambda X: -(J @ X.conj().T @ J)
    if family == "sl2H":
        Jq = np.zeros((4, 4), dtype=complex)
        for i in range(2):
            Jq[i, 2 + i] = -1.0
            Jq[2 + i, i] = 1.0
        return lambda X: Jq @ X.conj() @ (-Jq)
    raise ValueError(f"unknown family {family}")


@lru_cache(maxsize=None)
def numerics(form_id: str) -> ModelNumerics:
    return ModelNumerics(analyze(form_id))
