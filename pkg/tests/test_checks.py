import pytest

from minorbit.matmodel import MODEL_IDS
from minorbit.matmodel.checks import centralizer_checks, spectral_checks


def run_spectral(form_id, all_analyses):
    a = all_analyses[form_id]
    return {c.name: c for c in spectral_checks(a.model, a.datum, a.striple, a.cayley)}


def run_centralizer(form_id, all_analyses, catalog_map):
    a = all_analyses[form_id]
    return {
        c.name: c
        for c in centralizer_checks(
            a.model, a.datum, a.striple, a.cayley, catalog_map[form_id].hermitian
        )
    }


@pytest.mark.parametrize("form_id", MODEL_IDS)
def test_spectral_checks_pass(form_id, all_analyses):
    checks = run_spectral(form_id, all_analyses)
    failed = [c for c in checks.values() if c.failed]
    assert not failed, failed


@pytest.mark.parametrize("form_id", MODEL_IDS)
def test_centralizer_checks_pass(form_id, all_analyses, catalog_map):
    checks = run_centralizer(form_id, all_analyses, catalog_map)
    failed = [c for c in checks.values() if c.failed]
    assert not failed, failed


@pytest.mark.parametrize("form_id", MODEL_IDS)
def test_lambda_checks_pass(form_id, all_analyses):
    lam = all_analyses[form_id].lambda_data()
    failed = [c for c in lam.checks if c.failed]
    assert not failed, failed


def test_sl2R_multiplicity_vector(all_analyses):
    checks = run_spectral("sl2R", all_analyses)
    assert "{-2: 1, -1: 0, 0: 1, 1: 0, 2: 1}" in checks["adx_multiplicities"].detail
    # d_p = 1 and d_k = 0
    assert checks["adh_p_top_is_line_v"].status == "pass"
    assert "dim 0 d=1" in checks["adh_k_top_dim_d_minus_1"].detail


def test_sl3R_multiplicity_vector_and_compact_spectrum(all_analyses):
    checks = run_spectral("sl3R", all_analyses)
    assert "{-2: 1, -1: 2, 0: 2, 1: 2, 2: 1}" in checks["adx_multiplicities"].detail
    assert checks["adh_k_spectrum_within_1"].status == "pass"


def test_sl2H_top_eigenspace(all_analyses):
    checks = run_spectral("sl2H", all_analyses)
    assert checks["adh_p_top_is_line_v"].status == "pass"
    assert "dim 3 d=4" in checks["adh_k_top_dim_d_minus_1"].detail
    assert checks["adh_k_spectrum_within_1"].status == "skipped"


def test_su21_centralizers(all_analyses, catalog_map):
    checks = run_centralizer("su21", all_analyses, catalog_map)
    # m = u(1) acts trivially on the top root space and the center is a line
    assert "dim span [m,e] = 0" in checks["m_bracket_e_rank"].detail
    assert "dim Cent k = 1" in checks["center_of_k_dimension"].detail


def test_sl3R_centralizers_degenerate_m(all_analyses, catalog_map):
    checks = run_centralizer("sl3R", all_analyses, catalog_map)
    assert "degenerate: m = 0" in checks["m_bracket_e_rank"].detail
    assert "dim Cent k = 0" in checks["center_of_k_dimension"].detail


def test_sl2R_center_is_k(all_analyses, catalog_map):
    checks = run_centralizer("sl2R", all_analyses, catalog_map)
    assert "dim Cent k = 1" in checks["center_of_k_dimension"].detail


def test_sl2H_m_acts_transitively(all_analyses, catalog_map):
    checks = run_centralizer("sl2H", all_analyses, catalog_map)
    assert "dim span [m,e] = 3, d-1 = 3" in checks["m_bracket_e_rank"].detail


def test_sl2R_lambda(all_analyses):
    lam = all_analyses["sl2R"].lambda_data()
    assert len(lam.k_nu_basis) == 1  # k_nu = k
    assert lam.dim_X == 0
    assert not lam.x_equals_minus_x  # hermitian


def test_sl3R_lambda(all_analyses):
    lam = all_analyses["sl3R"].lambda_data()
    assert lam.dim_X == 2
    assert lam.x_equals_minus_x  # -1 is in the Weyl group of k = so(3)


def test_su21_lambda_central_character(all_analyses):
    lam = all_analyses["su21"].lambda_data()
    assert not lam.x_equals_minus_x
    assert len(lam.center_basis) == 1
    a = all_analyses["su21"]
    z = [x - y for x, y in zip(a.striple.e, a.striple.f)]
    assert a.model.B(z, lam.center_basis[0]) != 0


@pytest.mark.parametrize("form_id", MODEL_IDS)
def test_dichotomy_matches_hermitian_flag(form_id, all_analyses, catalog_map):
    lam = all_analyses[form_id].lambda_data()
    hermitian = catalog_map[form_id].hermitian
    assert lam.x_equals_minus_x == (not hermitian)
    assert len(lam.center_basis) == (1 if hermitian else 0)


@pytest.mark.parametrize("form_id", MODEL_IDS)
def test_orbit_dimension_from_isotropy(form_id, all_analyses):
    a = all_analyses[form_id]
    lam = a.lambda_data()
    assert a.model.dim_k - len(lam.k_nu_basis) == a.invariants.dim_X
