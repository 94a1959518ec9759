import math
from fractions import Fraction

import numpy as np
import pytest
from helpers import random_binary, random_roots
from oracles import naive_aperiodic, naive_fourier
from scipy.integrate import quad

from seqmerit import Sequence, all_ones, alternating, barker, parse_pm_string
from seqmerit.autocorr import max_sidelobe
from seqmerit.errors import DomainError, RouteFailureError
from seqmerit.merit import (
    all_ones_l4,
    barker_l4_prediction,
    barker_merit_prediction,
    l4_norm_fourth,
    merit_factor_analytic,
    merit_factor_discrete,
    merit_lower_bound,
    merit_report,
    minimal_merit_factor,
    sidelobe_energy,
)
from seqmerit.quadrature import exact_l4_integral, golden_nodes

B = Sequence.binary


def oracle_merit(values):
    rho = naive_aperiodic(values)
    peak = round(rho[0].real)
    energy = 2 * sum(round(abs(r) ** 2) for r in rho[1:])
    return Fraction(peak * peak, energy)


def oracle_l4_quad(values):
    val, _ = quad(lambda x: abs(naive_fourier(values, x)) ** 4, 0, 1, limit=400,
                  epsabs=1e-11, epsrel=1e-12)
    return val


def test_oracles_agree_on_derived_examples():
    assert oracle_merit([1, 1]) == 2
    assert oracle_l4_quad([1, 1]) == pytest.approx(6, rel=1e-9)
    assert oracle_merit([1, 1, 1, -1, 1]) == Fraction(25, 4)
    assert oracle_l4_quad([1, 1, 1, 1]) == pytest.approx(44, rel=1e-9)


@pytest.mark.parametrize("text, expected", [
    ("+++++--++-+-+", Fraction(169, 12)),
    ("++++", Fraction(4, 7)),
    ("+++-+", Fraction(25, 4)),
])
def test_merit_discrete_examples(text, expected):
    f = merit_factor_discrete(parse_pm_string(text))
    assert isinstance(f, Fraction)
    assert f == expected


def test_merit_needs_two_entries():
    with pytest.raises(DomainError):
        merit_factor_discrete(B([1]))


def test_zero_sidelobe_energy_is_flagged_infinite():
    s = Sequence.complex([1, 0])
    assert merit_factor_discrete(s) == math.inf
    assert merit_report(s).infinite


@pytest.mark.parametrize("text, expected", [("++", 6), ("+++++--++-+-+", 181), ("+++-", 20)])
def test_l4_examples(text, expected):
    assert l4_norm_fourth(parse_pm_string(text)) == expected


def test_analytic_exact_route_examples():
    assert merit_factor_analytic(barker(13)) == pytest.approx(169 / 12, rel=1e-9)
    assert merit_factor_analytic(B([1, 1])) == pytest.approx(2, rel=1e-9)


def test_analytic_qmc_route_within_one_percent(rng):
    nodes = golden_nodes(10**5)
    for _ in range(20):
        s = random_binary(rng, int(rng.integers(2, 33)))
        exact = merit_factor_analytic(s, "exact")
        assert merit_factor_analytic(s, "qmc", nodes) == pytest.approx(exact, rel=1e-2)


def test_qmc_route_failure_is_reported():
    # with one node at x=1/2 the quadrature sees |f|^4 = 0 for (1, 1)
    from seqmerit.quadrature import NodeSet

    with pytest.raises(RouteFailureError):
        merit_factor_analytic(B([1, 1]), "qmc", NodeSet.from_points([0.5]))


def test_minimal_merit_factor_examples():
    assert minimal_merit_factor(4) == Fraction(4, 7)
    assert minimal_merit_factor(2) == 2
    assert minimal_merit_factor(13) == Fraction(507, 3900)
    assert minimal_merit_factor(13) == merit_factor_discrete(all_ones(13))
    with pytest.raises(DomainError):
        minimal_merit_factor(1)


@pytest.mark.parametrize("n, l4, f", [(4, 20, 4), (13, 181, Fraction(169, 12)), (2, 6, 2),
                                      (5, 29, Fraction(25, 4))])
def test_barker_predictions(n, l4, f):
    assert barker_l4_prediction(n) == l4
    assert barker_merit_prediction(n) == f


def test_merit_lower_bound_examples():
    assert merit_lower_bound(13, 1).bound == Fraction(169, 24)
    assert merit_factor_discrete(barker(13)) >= merit_lower_bound(13, 1).bound
    assert merit_lower_bound(2, 1).bound == 2
    assert merit_lower_bound(5, 2).bound == Fraction(25, 32)
    assert merit_lower_bound(5, 2).weak_tail == Fraction(5, 8)
    assert merit_lower_bound(5, 1.5).bound == pytest.approx(25 / 18)


def test_l4_identity_against_quadrature_oracle(rng):
    for n in (1, 2, 3, 7, 12):
        s = random_binary(rng, n)
        assert exact_l4_integral(s) == pytest.approx(oracle_l4_quad(list(s.entries)), rel=1e-8)
    c = random_roots(rng, 9, 5)
    assert l4_norm_fourth(c) == pytest.approx(oracle_l4_quad(list(c.entries)), rel=1e-8)


def test_discrete_and_analytic_routes_agree(rng):
    for _ in range(1000):
        s = random_binary(rng, int(rng.integers(2, 65)))
        l4 = l4_norm_fourth(s)
        assert exact_l4_integral(s) == pytest.approx(l4, rel=1e-9)
        assert merit_factor_analytic(s) == pytest.approx(float(merit_factor_discrete(s)), rel=1e-9)
        if s.n < 12:
            assert merit_factor_discrete(s) == oracle_merit(list(s.entries))


def test_bounded_sidelobes_imply_lower_bound(rng):
    for _ in range(300):
        s = random_binary(rng, int(rng.integers(2, 20)))
        c = max_sidelobe(s)
        assert merit_factor_discrete(s) >= merit_lower_bound(s.n, c).bound


@pytest.mark.parametrize("n", range(2, 65))
def test_all_ones_and_alternating_closed_forms(n):
    assert merit_factor_discrete(all_ones(n)) == minimal_merit_factor(n)
    assert merit_factor_discrete(alternating(n)) == minimal_merit_factor(n)
    assert l4_norm_fourth(all_ones(n)) == all_ones_l4(n)


def test_report_invariants():
    r = merit_report(barker(13), qmc_nodes=10**4)
    assert r.merit_factor == Fraction(169, 12)
    assert r.l4_fourth == 13**2 + r.sidelobe_energy
    assert r.merit_factor == Fraction(13**2, r.sidelobe_energy)
    assert r.routes["analytic-exact"]["merit_rel_deviation"] < 1e-9
    assert r.routes["analytic-qmc"]["N"] == 10**4
    d = r.to_dict()
    assert d["merit_factor_exact"] == "169/12"
    assert sidelobe_energy(barker(13)) == 12


def test_complex_report_uses_magnitudes(rng):
    s = random_roots(rng, 11, 4)
    rho = naive_aperiodic(list(s.entries))
    expected = abs(rho[0]) ** 2 / (2 * sum(abs(r) ** 2 for r in rho[1:]))
    assert merit_factor_discrete(s) == pytest.approx(expected)
    assert merit_factor_analytic(s) == pytest.approx(expected, rel=1e-9)
    assert np.isfinite(merit_report(s).routes["analytic-exact"]["l4_fourth"])
