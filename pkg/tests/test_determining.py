import numpy as np
import pytest
from hypothesis import given, strategies as st

from heavenly import catalog, determining, pde
from heavenly.ansatz import ArbitraryG, ConjugateOf, Square
from heavenly.errors import ArityError
from heavenly.exact import Poly, RatComplex

V = Poly.var


def test_heavenly2_single_term():
    ds = determining.generate(pde.builtin_pde("heavenly2"), 1)
    assert ds.quad[(1, 1)].is_zero()
    # coordinates (x, y, w, z) -> a1..a4
    assert ds.lin[1] == V("a1") * V("a3") + V("a2") * V("a4")
    assert ds.const.is_zero()


def test_eq_symm_single_term():
    parts = determining.generate(pde.builtin_system("eq-symm"), 1)
    x, r, t, z = (V(f"a{m}") for m in range(1, 5))
    expected = [r * t + r * r - x * t, x * x + r * z, r * x + x * t + t * z]
    got = [p for _, p in determining.all_conditions(parts)]
    assert got == expected


def test_cma_constant_condition():
    kinds = [Square(), Square(), ArbitraryG(None), ConjugateOf(2)]
    ds = determining.generate(pde.builtin_pde("cma"), 4, kinds)
    a, b = [V(f"a{m}") for m in range(1, 5)], [V(f"b{m}") for m in range(1, 5)]
    S = [[2 * (a[m] * a[n] + b[m] * b[n]) for n in range(4)] for m in range(4)]
    assert ds.const == S[0][1] * S[2][3] - S[0][3] * S[1][2] - 1
    rng = np.random.default_rng(3)
    for _ in range(10):
        p = catalog.sample_params("CMA_SQ", rng)
        rows = [t.coeffs for t in catalog.build_terms("CMA_SQ", p).terms]
        env = {f"{x}{m + 1}": RatComplex.coerce(rows[i][m]) for i, x in enumerate("abcd")
               for m in range(4)}
        assert not ds.const.evaluate(env)


@pytest.mark.parametrize("cid", ["H2_EQUAL", "H2_HIGH_I", "H2_HIGH_II", "MIXED_CLASS",
                                 "ASYMM_CLASS", "EVOLUTION_CLASS", "CMA_SQ", "HCMA_I",
                                 "HCMA_II", "HCMA_III"])
def test_certification_exact(cid):
    target, kinds, n = determining.class_target(cid)
    ds = determining.generate(target, n, kinds)
    rep = determining.certify(ds, cid, 10, np.random.default_rng(1))
    assert rep.all_zero and rep.exact


@pytest.mark.parametrize("cid", ["H2_SERIES_EQUAL", "H2_SERIES_HIGH_I", "H2_SERIES_HIGH_II",
                                 "MIXED_SERIES", "REF_SHEFTEL", "REF_MALYKH_EXP"])
def test_certification_other_classes(cid):
    target, kinds, n = determining.class_target(cid)
    ds = determining.generate(target, n, kinds)
    rep = determining.certify(ds, cid, 5, np.random.default_rng(2))
    assert rep.all_zero
    assert rep.max_residual < 1e-9


@pytest.mark.parametrize("cid", ["H2_EQUAL", "H2_HIGH_I", "CMA_SQ", "HCMA_III"])
def test_mutants_fail(cid):
    target, kinds, n = determining.class_target(cid)
    ds = determining.generate(target, n, kinds)
    rep = determining.certify(ds, cid, 50, np.random.default_rng(4), mutate=True)
    assert rep.zero_trials <= 1


def test_prefix_of_terms_certifies():
    target, kinds, _ = determining.class_target("H2_HIGH_I")
    ds = determining.generate(target, 2, kinds[:2])
    assert determining.certify(ds, "H2_HIGH_I", 10, np.random.default_rng(5)).all_zero


def _random_spec(rng, coords="xyzt"):
    entries = [pde.hidx(i, j) for i in range(4) for j in range(i, 4)]
    pick = lambda: entries[rng.integers(len(entries))]
    small = lambda: RatComplex(int(rng.integers(-3, 4)), int(rng.integers(-3, 4)))
    quad = tuple((pick(), pick(), small()) for _ in range(rng.integers(0, 4)))
    lin = tuple((pick(), small()) for _ in range(rng.integers(0, 4)))
    return pde.PdeSpec(quad, lin, small())


@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 3), st.booleans())
def test_generate_is_linear_in_spec(seed, n, with_square):
    rng = np.random.default_rng(seed)
    s1, s2 = _random_spec(rng), _random_spec(rng)
    kinds = [Square() if with_square and j == 0 else ArbitraryG(None) for j in range(n)]
    whole = determining.generate(s1 + s2, n, kinds)
    summed = determining.generate(s1, n, kinds) + determining.generate(s2, n, kinds)
    for (na, pa), (nb, pb) in zip(whole.conditions(), summed.conditions()):
        assert (pa - pb).is_zero()


def _rename(poly, mapping):
    out = Poly()
    for mono, c in poly.terms.items():
        term = Poly.const(c)
        for s, e in mono:
            term = term * V(mapping[s]) ** e
        out = out + term
    return out


@pytest.mark.parametrize("sys_id", ["eq-symm", "high-symm", "mixed-lin"])
@pytest.mark.parametrize("n", [2, 4, 6])
def test_linear_systems_block_diagonal(sys_id, n):
    system = pde.builtin_system(sys_id)
    single = determining.generate(system, 1, naming="series")
    many = determining.generate(system, n)
    for one, part in zip(single, many):
        assert not part.quad and part.const is None
        assert sorted(part.lin) == list(range(1, n + 1))
        for i, row in enumerate(part.symbols, start=1):
            mapping = dict(zip(single[0].symbols[0], row))
            assert part.lin[i] == _rename(one.lin[1], mapping)


def test_parse_kinds():
    kinds = determining.parse_kinds("sq,sq,g,conj3", 4)
    assert kinds == [Square(), Square(), ArbitraryG(None), ConjugateOf(2)]
    with pytest.raises(ArityError):
        determining.parse_kinds("sq,g", 3)
    with pytest.raises(ValueError):
        determining.parse_kinds("sq,cube", 2)


def test_symbol_naming():
    assert determining.symbol_names(2)[1] == ["b1", "b2", "b3", "b4"]
    assert len(determining.symbol_names(6)) == 6
    with pytest.raises(ArityError):
        determining.symbol_names(5, "abcd")
