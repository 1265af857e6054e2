"""Validated Lie algebra models with exact structure constants.

A model keeps two views of the algebra: the defining n x n matrices (used for
spectra in the defining representation and for the floating-point lane) and
rational coordinates with respect to the chosen real basis (used for every
structural computation).  All brackets, involutions and forms reduce to exact
rational or Gaussian-rational arithmetic in coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .. import exactla
from ..exactla import QI
from . import qmat
from .families import FamilyData, ModelError, family_data
from .qmat import Mat

Coords = list  # list[Fraction] for real elements, list[QI] for complexified ones


def _vec_real(X: Mat) -> list[Fraction]:
    out: list[Fraction] = []
    for row in X:
        for x in row:
            out.append(x.re)
    for row in X:
        for x in row:
            out.append(x.im)
    return out


def _det(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    rows = [list(r) for r in mat]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def _definite(gram: list[list[Fraction]], sign: int) -> bool:
    """Leading-principal-minor test; sign=+1 positive, -1 negative definite."""
    for k in range(1, len(gram) + 1):
        minor = _det([row[:k] for row in gram[:k]])
        if sign > 0 and minor <= 0:
            return False
        if sign < 0 and (minor if k % 2 == 0 else -minor) <= 0:
            return False
    return True


@dataclass
class LieAlgebraModel:
    form_id: str
    family: str
    n: int
    basis: list[Mat]
    k_indices: list[int]
    p_indices: list[int]
    a_indices: list[int]
    theta_mat: Callable[[Mat], Mat]
    sigma_mat: Callable[[Mat], Mat]
    defining_eigs: list[set[Fraction]]
    positivity_key: Callable[[tuple], tuple] = lambda values: values
    ad: list[list[list[Fraction]]] = field(repr=False, default_factory=list)
    theta_coords: list[list[Fraction]] = field(repr=False, default_factory=list)
    tr_gram: list[list[Fraction]] = field(repr=False, default_factory=list)
    m_basis: list[Coords] = field(repr=False, default_factory=list)
    c: Fraction | None = None  # invariant-form normalization, set by the root datum

    # -- dimensions ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def dim_k(self) -> int:
        return len(self.k_indices)

    @property
    def dim_p(self) -> int:
        return len(self.p_indices)

    @property
    def dim_a(self) -> int:
        return len(self.a_indices)

    @property
    def dim_m(self) -> int:
        return len(self.m_basis)

    # -- coordinates --------------------------------------------------------
    def unit_coords(self, index: int) -> Coords:
        v = [Fraction(0)] * self.dim
        v[index] = Fraction(1)
        return v

    def subspace_units(self, indices: Sequence[int]) -> list[Coords]:
        return [self.unit_coords(i) for i in indices]

    def matrix(self, coords: Coords) -> Mat:
        return qmat.lincomb(coords, self.basis)

    def coords(self, X: Mat) -> list[Fraction]:
        vec = _vec_real(X)
        sol = [
            sum(self._expand_inv[r][k] * vec[self._pivot_rows[k]]
                for k in range(self.dim))
            for r in range(self.dim)
        ]
        # confirm the element really lies in the real span of the basis
        for r, row in enumerate(self._flat_rows):
            acc = Fraction(0)
            for k in range(self.dim):
                if sol[k]:
                    acc += row[k] * sol[k]
            if acc != vec[r]:
                raise ModelError(f"{self.form_id}: element is not in span(basis)")
        return sol

    # -- algebra operations in coordinates ----------------------------------
    def bracket(self, x: Coords, y: Coords) -> Coords:
        out = None
        for i, xi in enumerate(x):
            if not xi:
                continue
            col = exactla.mat_vec(self.ad[i], y)
            term = [xi * t for t in col]
            out = term if out is None else [a + b for a, b in zip(out, term)]
        if out is None:
            zero = Fraction(0) if not isinstance(next(iter(y), QI(0)), QI) else QI(0)
            return [zero] * self.dim
        return out

    def ad_matrix(self, x: Coords) -> list[list]:
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, xi in enumerate(x):
            if not xi:
                continue
            adi = self.ad[i]
            for r in range(self.dim):
                row = adi[r]
                rows[r] = [a + xi * b for a, b in zip(rows[r], row)]
        return rows

    def theta(self, x: Coords) -> Coords:
        return exactla.mat_vec(self.theta_coords, x)

    def sigma(self, x: Coords) -> Coords:
        return [xi.conjugate() if isinstance(xi, QI) else xi for xi in x]

    def sigma_u(self, x: Coords) -> Coords:
        return self.theta(self.sigma(x))

    def B(self, x: Coords, y: Coords):
        if self.c is None:
            raise ModelError("normalization c is not fixed yet")
        return self.c * self._tr_form(x, y)

    def _tr_form(self, x: Coords, y: Coords):
        acc = None
        gy = exactla.mat_vec(self.tr_gram, y)
        for xi, gyi in zip(x, gy):
            term = xi * gyi
            acc = term if acc is None else acc + term
        return acc

    def H(self, x: Coords, y: Coords):
        """Invariant Hilbert pairing -B(x, sigma_u(y)); positive definite."""
        return -self.B(x, self.sigma_u(y))

    # -- subspace solvers ----------------------------------------------------
    def kernel_in_span(
        self,
        operators: Sequence[list[list]],
        span: Sequence[Coords],
        real: bool = False,
    ) -> list[Coords]:
        """Vectors x in span(span) with op @ x = 0 for every operator.

        With ``real=True`` the combination coefficients are restricted to the
        rationals even when the constraints are complex (re/im parts are
        imposed separately).
        """
        if not span:
            return []
        cols = list(span)
        rows: list[list] = []
        for op in operators:
            images = [exactla.mat_vec(op, v) for v in cols]
            for r in range(self.dim):
                row = [images[j][r] for j in range(len(cols))]
                if real and any(isinstance(x, QI) for x in row):
                    rows.append([x.re if isinstance(x, QI) else x for x in row])
                    rows.append([x.im if isinstance(x, QI) else Fraction(0) for x in row])
                else:
                    rows.append(row)
        if not rows:
            sol_basis = exactla.kernel_basis([], ncols=len(cols))
        else:
            sol_basis = exactla.kernel_basis(rows)
        out = []
        for t in sol_basis:
            vec = [Fraction(0)] * self.dim
            for coef, base_vec in zip(t, cols):
                if coef:
                    vec = [a + coef * b for a, b in zip(vec, base_vec)]
            out.append(vec)
        return out

    def centralizer_in_span(
        self, elements: Sequence[Coords], span: Sequence[Coords], real: bool = True
    ) -> list[Coords]:
        ops = [self.ad_matrix(e) for e in elements]
        return self.kernel_in_span(ops, span, real=real)


def _build(form_id: str) -> LieAlgebraModel:
    fam: FamilyData = family_data(form_id)
    model = LieAlgebraModel(
        form_id=fam.form_id,
        family=fam.family,
        n=fam.n,
        basis=fam.basis,
        k_indices=fam.k_indices,
        p_indices=fam.p_indices,
        a_indices=fam.a_indices,
        theta_mat=fam.theta_mat,
        sigma_mat=fam.sigma_mat,
        defining_eigs=fam.defining_eigs,
        positivity_key=fam.positivity_key,
    )
    N = model.dim
    flat_cols = [_vec_real(b) for b in model.basis]
    nrows = len(flat_cols[0])
    flat_rows = [[flat_cols[k][r] for k in range(N)] for r in range(nrows)]
    red, pivots = exactla.rref(flat_rows)
    if len(pivots) != N:
        raise ModelError(f"{form_id}: basis matrices are linearly dependent")
    # pivot rows give an invertible N x N subsystem used for fast expansion
    pivot_rows: list[int] = []
    used: set[int] = set()
    for want in range(N):
        for r in range(nrows):
            if r in used:
                continue
            if flat_rows[r][want] and all(
                flat_rows[r][k] == 0 for k in range(want)
            ):
                pivot_rows.append(r)
                used.add(r)
                break
        else:
            # fall back: greedy search for any row keeping the minor invertible
            pivot_rows = _greedy_pivot_rows(flat_rows, N)
            break
    P = [[flat_rows[r][k] for k in range(N)] for r in pivot_rows]
    aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(N)]
           for i, row in enumerate(P)]
    red_aug, piv_aug = exactla.rref(aug)
    if piv_aug != list(range(N)):
        pivot_rows = _greedy_pivot_rows(flat_rows, N)
        P = [[flat_rows[r][k] for k in range(N)] for r in pivot_rows]
        aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(N)]
               for i, row in enumerate(P)]
        red_aug, piv_aug = exactla.rref(aug)
        if piv_aug != list(range(N)):
            raise ModelError(f"{form_id}: could not invert expansion system")
    model._expand_inv = [row[N:] for row in red_aug]
    model._pivot_rows = pivot_rows
    model._flat_rows = flat_rows

    # structure constants (closure is verified inside coords())
    struct: dict[tuple[int, int], list[Fraction]] = {}
    for i in range(N):
        for j in range(i + 1, N):
            struct[(i, j)] = model.coords(
                qmat.commutator(model.basis[i], model.basis[j])
            )
    zero = [Fraction(0)] * N
    model.ad = []
    for i in range(N):
        ad_cols = []
        for j in range(N):
            if i == j:
                ad_cols.append(zero)
            elif i < j:
                ad_cols.append(struct[(i, j)])
            else:
                ad_cols.append([-x for x in struct[(j, i)]])
        model.ad.append([[ad_cols[j][r] for j in range(N)] for r in range(N)])

    # Cartan involution in coordinates
    theta_cols = [model.coords(fam.theta_mat(b)) for b in model.basis]
    model.theta_coords = [[theta_cols[j][r] for j in range(N)] for r in range(N)]

    # trace form
    model.tr_gram = []
    for i in range(N):
        row = []
        for j in range(N):
            t = qmat.trace_product(model.basis[i], model.basis[j])
            if t.im:
                raise ModelError(f"{form_id}: trace form is not real on the basis")
            row.append(t.re)
        model.tr_gram.append(row)

    _validate_model(model)
    model.m_basis = model.centralizer_in_span(
        model.subspace_units(model.a_indices),
        model.subspace_units(model.k_indices),
    )
    return model


def _greedy_pivot_rows(flat_rows: list[list[Fraction]], N: int) -> list[int]:
    chosen: list[int] = []
    for r in range(len(flat_rows)):
        trial = chosen + [r]
        if exactla.rank([flat_rows[t] for t in trial]) == len(trial):
            chosen.append(r)
            if len(chosen) == N:
                return chosen
    raise ModelError("expansion system is rank-deficient")


def _validate_model(model: LieAlgebraModel) -> None:
    N = model.dim
    Th = model.theta_coords
    # theta is an involutive automorphism preserving the trace form
    sq = [[sum(Th[i][k] * Th[k][j] for k in range(N)) for j in range(N)]
          for i in range(N)]
    for i in range(N):
        for j in range(N):
            expect = Fraction(1) if i == j else Fraction(0)
            if sq[i][j] != expect:
                raise ModelError(f"{model.form_id}: theta^2 != id")
    for i in model.k_indices:
        col = [Th[r][i] for r in range(N)]
        if col != model.unit_coords(i):
            raise ModelError(f"{model.form_id}: k generator not theta-fixed")
    for i in model.p_indices:
        col = [Th[r][i] for r in range(N)]
        if col != [-x for x in model.unit_coords(i)]:
            raise ModelError(f"{model.form_id}: p generator not theta-negated")
    # theta is diagonal +-1 on the basis (checked above), so the automorphism
    # identity theta[x,y] = [theta x, theta y] is the Cartan grading:
    # [k,k] in k, [k,p] in p, [p,p] in k; likewise B(theta x, theta y) = B(x,y)
    # is the vanishing of the k/p off-diagonal block of the trace form.
    in_k = [False] * N
    for i in model.k_indices:
        in_k[i] = True
    for i in range(N):
        for j in range(i + 1, N):
            col = [model.ad[i][r][j] for r in range(N)]
            target_k = in_k[i] == in_k[j]
            for r, x in enumerate(col):
                if x and in_k[r] != target_k:
                    raise ModelError(f"{model.form_id}: theta is not an automorphism")
    for i in model.k_indices:
        for j in model.p_indices:
            if model.tr_gram[i][j]:
                raise ModelError(f"{model.form_id}: k and p are not B-orthogonal")
    gram_k = [[model.tr_gram[i][j] for j in model.k_indices] for i in model.k_indices]
    gram_p = [[model.tr_gram[i][j] for j in model.p_indices] for i in model.p_indices]
    if not _definite(gram_k, -1):
        raise ModelError(f"{model.form_id}: trace form is not negative definite on k")
    if not _definite(gram_p, +1):
        raise ModelError(f"{model.form_id}: trace form is not positive definite on p")
    # a is abelian and self-centralizing in p
    a_units = model.subspace_units(model.a_indices)
    for x in a_units:
        for y in a_units:
            if any(model.bracket(x, y)):
                raise ModelError(f"{model.form_id}: a is not abelian")
    cent = model.centralizer_in_span(a_units, model.subspace_units(model.p_indices))
    if len(cent) != model.dim_a or not exactla.same_span(cent, a_units):
        raise ModelError(f"{model.form_id}: a is not maximal abelian in p")


@lru_cache(maxsize=None)
def build_model(form_id: str) -> LieAlgebraModel:
    """Construct and validate the matrix model for a supported form id."""
    return _build(form_id)
