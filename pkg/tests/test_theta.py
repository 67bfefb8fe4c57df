import random

import pytest

from hwprobe import (
    CONJECTURE_HOLDS,
    GradedMap,
    HypothesisError,
    ThetaContext,
    define_ring,
    depth_zero_check,
    even_dim_torsion_check,
    free_module,
    hw_check,
    ideal_module,
    parse_polynomial,
    quotient_module,
    rigidity_probe,
    theta,
    theta_additivity_check,
    verify_short_exact,
)
from hwprobe.freemod import unit_vector
from hwprobe.theta import cokernel_with_projection, random_short_exact_sequence


def P(rq, s):
    return parse_polynomial(rq.ambient, s)


@pytest.fixture(scope="module")
def theta_ctx(threefold_mn):
    m, _ = threefold_mn
    return ThetaContext(m)


def test_theta_value_on_quadric_pair(threefold_mn, theta_ctx):
    m, n = threefold_mn
    res = theta(m, n, theta_ctx)
    assert res.value == -1
    assert res.lengths[2 * res.stable_index] - \
        res.lengths[2 * res.stable_index - 1] == -1
    # stabilization certificate: the next index pair gives the same value
    assert res.lengths[2 * res.stable_index + 2] - \
        res.lengths[2 * res.stable_index + 1] == -1


def test_theta_against_free_is_zero(threefold, threefold_mn, theta_ctx):
    m, _ = threefold_mn
    assert theta(m, free_module(threefold, (0,)), theta_ctx).value == 0


def test_theta_additive_on_direct_sum(threefold_mn, theta_ctx):
    m, n = threefold_mn
    assert theta(m, n.direct_sum(n), theta_ctx).value == -2


def test_theta_needs_locus_hypothesis(threefold):
    # R/(x, y) fails to be locally of finite projective dimension away from
    # the irrelevant ideal?  It does not: it IS locally free there, so use a
    # module genuinely failing the hypothesis: over the 1-dim ring k[x,y]/(x*y)
    # no domain flag means rank (hence the locus test) is unavailable
    bad = define_ring(["x", "y"], [1, 1], 7, ["x*y"])
    m = quotient_module(bad, [P(bad, "x")])
    with pytest.raises(HypothesisError):
        ThetaContext(m)


def test_theta_zero_for_pd_finite(threefold, theta_ctx):
    rx = quotient_module(threefold, [P(threefold, "x")])
    ctx = ThetaContext(rx)
    n = quotient_module(threefold, [P(threefold, "x"), P(threefold, "y")])
    assert theta(rx, n, ctx).value == 0
    assert ctx.periodicity["via"] == "finite projective dimension"


def test_split_sequence_additivity(threefold, threefold_mn, theta_ctx):
    m, n = threefold_mn
    amb = threefold.ambient
    x, z = n, n.twist(-1)
    y = x.direct_sum(z)
    f = GradedMap(x, y, [unit_vector(amb, j) for j in range(x.ngens)])
    g = GradedMap(y, z, [({} if j < x.ngens else
                          unit_vector(amb, j - x.ngens))
                         for j in range(y.ngens)])
    ok, reason = verify_short_exact(f, g)
    assert ok, reason
    out = theta_additivity_check(m, f, g, theta_ctx)
    assert out["additive"]
    assert out["theta_Y"] == out["theta_X"] + out["theta_Z"]


def test_multiplication_sequence_gives_zero_theta(threefold, threefold_mn,
                                                  theta_ctx):
    # 0 -> N(-1) -w-> N -> N/wN -> 0 with w a nonzerodivisor on N = R/(x,y):
    # theta against the quotient must vanish
    m, n = threefold_mn
    amb = threefold.ambient
    src = n.twist(-1)
    f = GradedMap(src, n, [{(0, (0, 0, 0, 1)): 1}])
    ok, reason = verify_short_exact(
        f, cokernel_with_projection(f)[1])
    assert ok, reason
    z, g = cokernel_with_projection(f)
    out = theta_additivity_check(m, f, g, theta_ctx)
    assert out["additive"]
    assert out["theta_Z"] == 0


def test_random_sequences_are_exact_and_additive(threefold_mn, theta_ctx):
    m, n = threefold_mn
    rng = random.Random(11)
    for _ in range(3):
        f, g = random_short_exact_sequence(n, rng)
        ok, reason = verify_short_exact(f, g)
        assert ok, reason
        assert theta_additivity_check(m, f, g, theta_ctx)["additive"]


def test_rigidity_probe_reports_gap_without_flagging(threefold_mn):
    m, n = threefold_mn
    out = rigidity_probe(m, n, window=8)
    assert out["gaps"] and out["gaps"][0]["vanishes_at"] == 2
    assert not out["refutation_grade_anomaly"]
    assert out["hypotheses"]["ring_class"] is None  # dimension three


def test_rigidity_probe_free_module_no_gaps(cusp):
    out = rigidity_probe(free_module(cusp, (0,)),
                         free_module(cusp, (0,)), window=6)
    assert not out["gaps"]
    assert all(v == 0 for v in out["lengths"][1:])


def test_rigidity_probe_two_periodic_no_gap(cusp, cusp_m):
    k = quotient_module(cusp, [P(cusp, "x"), P(cusp, "y")])
    out = rigidity_probe(cusp_m, k, window=10)
    assert out["hypotheses"]["two_periodic"]
    assert out["hypotheses"]["ring_class"] == "one-dimensional domain"
    assert not out["gaps"]
    assert not out["refutation_grade_anomaly"]


def test_hw_check_on_cusp(cusp_m):
    out = hw_check(cusp_m)
    assert out["verdict"] == CONJECTURE_HOLDS
    assert out["torsion_length"] >= 1
    assert out["tate_crosscheck_agrees"] and out["ext_crosscheck_agrees"]
    assert out["two_periodic"]


def test_hw_check_rejects_free_input(cusp):
    with pytest.raises(HypothesisError):
        hw_check(free_module(cusp, (0,)))


def test_hw_check_rejects_torsion_input(cusp):
    rx = quotient_module(cusp, [P(cusp, "x")])
    with pytest.raises(HypothesisError):
        hw_check(rx)


def test_hw_check_rejects_wrong_dimension(threefold):
    m = quotient_module(threefold, [P(threefold, "x"), P(threefold, "z")])
    with pytest.raises(HypothesisError):
        hw_check(m)


def test_even_dim_check(surface_mcm):
    out = even_dim_torsion_check(surface_mcm)
    assert out["verdict"] == "TORSION_PRESENT"
    assert out["torsion_length"] >= 1


def test_even_dim_check_rejects_zero_and_free(surface):
    with pytest.raises(HypothesisError):
        even_dim_torsion_check(quotient_module(surface, [P(surface, "1")]))
    with pytest.raises(HypothesisError):
        even_dim_torsion_check(free_module(surface, (0,)))


def test_depth_zero_check(cusp_m):
    out = depth_zero_check(cusp_m)
    assert out["verdict"] == "DEPTH_ZERO"


def test_depth_zero_check_rejects_free(cusp):
    with pytest.raises(HypothesisError):
        depth_zero_check(free_module(cusp, (0,)))


def test_stable_syzygy_depth_zero(torus_dim1):
    m = ideal_module(torus_dim1, [P(torus_dim1, "x"), P(torus_dim1, "y")])
    out = depth_zero_check(m)
    assert out["verdict"] == "DEPTH_ZERO"
