import numpy as np
import pytest

from heavenly import catalog, conditions
from heavenly.ansatz import eval_jet, jacobian_matrix
from heavenly.jets import Jet4, ScalarFn

EXP = ScalarFn("exp", 0.5)
BETAS = {f"beta{j}": 0 for j in range(1, 6)}


def hessian_jet(entries):
    H = np.zeros((4, 4), complex)
    for (i, j), v in entries.items():
        H[i, j] = H[j, i] = v
    return Jet4(0j, np.zeros(4, complex), H)


def test_heavenly2_legendre_condition():
    # theta = t^2 + r^2 in coordinates (x, r, t, z)
    assert conditions.legendre_condition("heavenly2-legendre", hessian_jet({(2, 2): 2, (1, 1): 2})) == 4


def test_hcma_legendre_condition():
    assert conditions.legendre_condition("hcma-legendre", hessian_jet({(0, 1): 1})) == -1


def test_mixed_legendre_condition_violated():
    assert conditions.legendre_condition("mixed-legendre", hessian_jet({(0, 0): 2})) == 0


def test_hcma_ii_closed_condition():
    p = {"a4": 1 + 1j, "b4": 1j, "d3": 2, "d4": 1}
    assert conditions.closed_form_condition("HCMA_II", p, [1, 1, 1, 1]) == 1


def test_equal_rows_closed_condition(rng):
    p = catalog.sample_params("H2_EQUAL", rng, bound=2.5)
    p["b2"], p["b3"] = p["a2"], p["a3"]
    inst = catalog.instantiate("H2_EQUAL", p, [EXP])
    gen, _, closed = conditions.legendre_report(inst, inst.random_points(rng, 5))
    assert np.allclose(closed, gen, rtol=1e-10, atol=1e-10)


def test_hcma_iii_closed_condition_at_origin():
    p = {"A2": 1, "B3": 1, "B4": 0, "C2": 1, "H2": 1, **BETAS}
    inst = catalog.instantiate("HCMA_III", p, [ScalarFn("exp")])
    gen, _, closed = conditions.legendre_report(inst, np.zeros((1, 4)))
    assert abs(closed[0] - gen[0]) <= 1e-8 * abs(gen[0])


def test_closed_determinants_printed_values():
    p3 = {"A2": 1, "B3": 1, "B4": 0, "C2": 1, "H2": 1}
    assert conditions.jacobian_det_closed("HCMA_III", p3, [1, 1, 1, 1]) == 16
    p2 = {"a4": 1 + 1j, "b4": 1j, "d3": 2, "d4": 1}
    assert conditions.jacobian_det_closed("HCMA_II", p2, [1, 1, 1, 1]) == -2j
    assert conditions.jacobian_det_closed("HCMA_III", p3, [1, 0, 1, 1]) == 0
    assert conditions.jacobian_det_closed("REF_SHEFTEL", {}, [1, 1, 1, 1]) is None


def test_nonzero_is_scale_aware():
    assert conditions.nonzero(1e-6)
    assert not conditions.nonzero(1e-6, scale=1e4)
    assert not conditions.nonzero(0)


def test_cma_region_factor():
    p = {"a2": 1 + 1j, "d3": 1, "beta1": 0, "beta2": 0, "beta3": 0.5, "beta4": 0}
    inst = catalog.instantiate("CMA_SQ", p, [EXP])
    z1, z2 = 0.3j * (1 + 1j), 0.2 + 0.1j
    rep = conditions.noninvariance_verdict(inst, [z1, np.conj(z1), z2, np.conj(z2)])
    assert not rep.satisfied
    assert "Gamma_1" in rep.zero_factors


def test_hcma_i_equal_d_not_satisfied(rng):
    p = catalog.sample_params("HCMA_I", rng, bound=2.5)
    p["d2"] = p["d1"]
    inst = catalog.instantiate("HCMA_I", p, [EXP])
    rep = conditions.noninvariance_verdict(inst, inst.random_points(rng, 1)[0])
    assert not rep.satisfied
    assert any(f.startswith("determinant factor") for f in rep.zero_factors)
    assert abs(rep.closed_form_value) < 1e-12


def test_hcma_iii_generic_satisfied(rng):
    inst = catalog.instantiate("HCMA_III", catalog.sample_params("HCMA_III", rng, bound=2.5), [EXP])
    for x in inst.random_points(rng, 10):
        assert conditions.noninvariance_verdict(inst, x).satisfied


def test_too_few_terms_reported(rng):
    inst = catalog.instantiate("REF_SHEFTEL", catalog.sample_params("REF_SHEFTEL", rng, n=1), [EXP],
                               n=1)
    rep = conditions.noninvariance_verdict(inst, np.zeros(4))
    assert not rep.satisfied and rep.notes


ALL_DET = ["CMA_SQ", "HCMA_I", "HCMA_II", "HCMA_III", "H2_EQUAL", "H2_HIGH_I", "H2_HIGH_II",
           "H2_SERIES_EQUAL", "H2_SERIES_HIGH_I", "H2_SERIES_HIGH_II", "MIXED_CLASS",
           "MIXED_SERIES", "ASYMM_CLASS", "EVOLUTION_CLASS"]


@pytest.mark.parametrize("cid", ALL_DET)
def test_closed_determinant_matches_generic(cid, rng):
    for _ in range(10):
        p = catalog.sample_params(cid, rng, bound=2.5)
        inst = catalog.instantiate(cid, p, [EXP])
        pts = inst.random_points(rng, 10)
        gen = np.linalg.det(jacobian_matrix(inst.ansatz, pts))
        _, d1, _ = inst.ansatz.derivs(pts)
        closed = np.array([complex(conditions.jacobian_det_closed(cid, p, r[:4], inst.n)) for r in d1])
        assert np.all(np.abs(gen - closed) <= 1e-10 * np.maximum(1, np.abs(closed)))


LEGENDRE = ["HCMA_I", "HCMA_II", "HCMA_III", "H2_EQUAL", "H2_HIGH_I", "H2_HIGH_II",
            "H2_SERIES_EQUAL", "H2_SERIES_HIGH_I", "H2_SERIES_HIGH_II", "MIXED_CLASS",
            "MIXED_SERIES"]


@pytest.mark.parametrize("cid", LEGENDRE)
def test_closed_legendre_matches_generic(cid, rng):
    for _ in range(10):
        inst = catalog.instantiate(cid, catalog.sample_params(cid, rng, bound=2.5), [EXP])
        gen, scale, closed = conditions.legendre_report(inst, inst.random_points(rng, 10))
        assert np.all(np.abs(gen - closed) <= 1e-10 * np.maximum(1, np.abs(gen)))


def test_report_json_roundtrip(rng):
    inst = catalog.instantiate("HCMA_II", catalog.sample_params("HCMA_II", rng, bound=2.5), [EXP])
    js = conditions.noninvariance_verdict(inst, inst.random_points(rng, 1)[0]).to_json()
    assert set(js) == {"generic", "closedForm", "satisfied", "regionFactors", "notes"}
