import pytest

from morozov.kempf import (AlphaResult, Cocharacter, alpha, default_bound,
                           enumerate_cocharacters, optimize,
                           parabolic_from_cochar, verify_obstruction, weights)
from morozov.liealg import build, standard_borel, standard_parabolic


def line(g, label):
    return g.subspace([g.element_by_label(label).coords])


def test_weights_sl3():
    g = build("sl", 3, 5)
    lam = Cocharacter((1, 0, -1))
    w = weights(g, lam)
    assert w[g.labels.index("e12")] == 1
    assert w[g.labels.index("e13")] == 2
    assert w[g.labels.index("e23")] == 1
    assert w[g.labels.index("f13")] == -2
    for i in g.frame.torus_indices:
        assert w[i] == 0
    assert all(v == 0 for v in weights(g, Cocharacter((0, 0, 0))))


def test_weights_additive_on_brackets():
    g = build("sp", 4, 5)
    lam = Cocharacter((2, 1))
    w = weights(g, lam)
    for i, ri in g.frame.index_root.items():
        for j, rj in g.frame.index_root.items():
            s = tuple(a + b for a, b in zip(ri, rj))
            if s in g.frame.root_index:
                k = g.frame.root_index[s]
                ui = [1 if t == i else 0 for t in range(g.dim)]
                uj = [1 if t == j else 0 for t in range(g.dim)]
                if any(g.bracket_vec(ui, uj)):
                    assert w[k] == w[i] + w[j]


def test_alpha_examples():
    g = build("sl", 3, 5)
    lam = Cocharacter((1, 0, -1))
    n = standard_borel(g)["nilradical"]
    assert alpha(g, lam, n) == AlphaResult("ok", 1)
    assert alpha(g, lam, line(g, "e13")) == AlphaResult("ok", 2)
    assert alpha(g, lam, line(g, "f12")).status == "no-limit"
    mixed = standard_parabolic(g, (1,))["parabolic"]
    assert alpha(g, lam, mixed).status == "no-limit"
    lam2 = Cocharacter((1, 1, -2))
    assert alpha(g, lam2, line(g, "e12")).status == "zero-weight"


def test_optimize_nilradical_of_borel():
    g = build("sl", 3, 5)
    n = standard_borel(g)["nilradical"]
    cert = optimize(g, n)
    assert cert.lam == Cocharacter((1, 0, -1))
    assert cert.alpha == 1 and cert.ties == 1
    parts = parabolic_from_cochar(g, cert.lam)
    assert parts["p"] == standard_borel(g)["parabolic"]
    assert parts["u"] == n


def test_optimize_e13():
    g = build("sl", 3, 5)
    cert = optimize(g, line(g, "e13"))
    assert cert.lam == Cocharacter((1, 0, -1))
    assert cert.alpha == 2
    rep = verify_obstruction(g, line(g, "e13"), cert)
    assert rep["u_in_u_lambda"]
    assert rep["normalizer_equals_p_lambda"]
    assert not rep["u_equals_u_lambda"]


def test_optimize_sl2():
    g = build("sl", 2, 5)
    cert = optimize(g, line(g, "e12"))
    assert cert.lam == Cocharacter((1, -1))


def test_optimize_maximal_parabolic():
    g = build("sl", 3, 5)
    data = standard_parabolic(g, (1,))
    cert = optimize(g, data["nilradical"])
    assert cert.lam == Cocharacter((2, -1, -1))
    rep = verify_obstruction(g, data["nilradical"], cert)
    assert rep["normalizer_equals_p_lambda"] and rep["u_equals_u_lambda"]
    parts = parabolic_from_cochar(g, cert.lam)
    assert parts["p"] == data["parabolic"]


def test_optimize_sp4():
    g = build("sp", 4, 5)
    data = standard_parabolic(g, (0,))
    cert = optimize(g, data["nilradical"])
    rep = verify_obstruction(g, data["nilradical"], cert)
    assert rep["normalizer_equals_p_lambda"] and rep["u_equals_u_lambda"]


def test_scaling_invariance_and_indivisibility():
    g = build("sl", 3, 5)
    n = standard_borel(g)["nilradical"]
    lam = Cocharacter((1, 0, -1))
    for k in (2, 3):
        scaled = lam.scale(k)
        a1 = alpha(g, lam, n).value
        ak = alpha(g, scaled, n).value
        assert ak == k * a1
        assert ak * ak * lam.norm_sq == a1 * a1 * scaled.norm_sq
    assert Cocharacter((2, 0, -2)).indivisible() == lam


def test_cochar_enumeration():
    g = build("sl", 2, 5)
    lams = list(enumerate_cocharacters(g, 8))
    assert all(sum(l.coords) == 0 and 0 < l.norm_sq <= 8 for l in lams)
    assert Cocharacter((1, -1)) in lams
    assert Cocharacter((2, -2)) in lams
    g4 = build("sp", 4, 5)
    lams4 = list(enumerate_cocharacters(g4, 4))
    assert Cocharacter((1, 1)) in lams4 and Cocharacter((-2, 0)) in lams4


def test_norm_weyl_invariance():
    # permutations (type A) and signed permutations (type C) fix the norm
    lam = (3, -1, -2)
    import itertools
    for perm in itertools.permutations(lam):
        assert sum(c * c for c in perm) == sum(c * c for c in lam)
    lam2 = (2, -3)
    for signs in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        for perm in itertools.permutations((0, 1)):
            v = tuple(signs[i] * lam2[perm[i]] for i in range(2))
            assert sum(c * c for c in v) == sum(c * c for c in lam2)


def test_default_bound_is_coxeter_based():
    g = build("sl", 3, 5)
    assert default_bound(g) == 4 * 3 * 3
    g4 = build("sl", 4, 5)
    assert default_bound(g4) == 4 * 4 * 4


def test_rejections():
    g = build("sl", 3, 5)
    with pytest.raises(ValueError):
        optimize(g, g.subspace([]))
    with pytest.raises(ValueError):
        optimize(g, line(g, "h1"))      # torus support
    with pytest.raises(ValueError):
        optimize(g, standard_borel(g)["parabolic"])   # not p-nil
    # mixed-sign support: admissible set is empty within any bound
    from morozov.fixtures import ex2_subalgebra
    pgl3 = build("pgl", 3, 3)
    with pytest.raises(ValueError):
        optimize(pgl3, ex2_subalgebra(pgl3))
