import random
import xml.etree.ElementTree as ET

import pytest

from schurpaths.combinat import partitions_in_box, schur_tableaux
from schurpaths.lgv import (
    OutOfBounds,
    Point,
    TooLarge,
    bialternant_endpoints,
    cauchy_doubled_scheme,
    cauchy_endpoints,
    cauchy_entry,
    corollary_power,
    e_weight,
    enumerate_paths,
    jacobi_trudi_scheme,
    lemma_product,
    lgv_det,
    nonintersecting_systems,
    nonintersecting_sum,
    path_count,
    path_systems_svg,
    schur_endpoints,
    schur_via_lgv,
    schur_weighted_scheme,
    system_weight,
    vandermonde_endpoints,
    vandermonde_scheme,
)
from schurpaths.ring import Polynomial, parse_poly, xpoly, ypoly
from schurpaths.symfun import vandermonde


# -- schemes, bounds, single-pair weights --------------------------------------


def test_out_of_bounds():
    scheme = schur_weighted_scheme(n=2, col_bound=3)
    with pytest.raises(OutOfBounds):
        e_weight(scheme, Point(0, 1), Point(2, 2))
    with pytest.raises(OutOfBounds):
        e_weight(scheme, Point(1, 1), Point(4, 2))
    doubled = cauchy_doubled_scheme(2, 4)
    with pytest.raises(OutOfBounds):
        e_weight(doubled, Point(1, 1), Point(1, 5))


def test_e_weight_schur_examples():
    scheme = schur_weighted_scheme(n=4, col_bound=4)
    assert e_weight(scheme, Point(1, 1), Point(2, 1)) == xpoly(1) - xpoly(2)
    assert e_weight(scheme, Point(1, 1), Point(2, 2)) == xpoly(1) - xpoly(3)
    assert e_weight(scheme, Point(2, 2), Point(2, 2)) == Polynomial.one()
    assert e_weight(scheme, Point(3, 1), Point(1, 2)) == Polynomial.zero()


def test_e_weight_jacobi_trudi_powers():
    scheme = jacobi_trudi_scheme(n=3, col_bound=6)
    # k right steps on row 1 each carry x1
    for k in range(4):
        assert e_weight(scheme, Point(1, 1), Point(1 + k, 1)) == xpoly(1) ** k


def test_e_weight_equals_path_enumeration():
    for builder in (
        lambda: jacobi_trudi_scheme(n=3, col_bound=6),
        lambda: schur_weighted_scheme(n=3, col_bound=6),
        lambda: schur_weighted_scheme(n=3, col_bound=6, truncated=True),
    ):
        scheme = builder()
        for m in range(1, 6):
            for n in range(1, 6):
                paths = list(enumerate_paths(scheme, Point(1, 1), Point(m, n)))
                assert len(paths) == path_count(scheme, Point(1, 1), Point(m, n))
                total = Polynomial.zero()
                for path in paths:
                    total = total + path.weight
                assert total == e_weight(scheme, Point(1, 1), Point(m, n))


def test_enumerate_paths_basics():
    scheme = schur_weighted_scheme(n=2, col_bound=2)
    trivial = list(enumerate_paths(scheme, Point(2, 2), Point(2, 2)))
    assert len(trivial) == 1
    assert trivial[0].weight == Polynomial.one()
    square = list(enumerate_paths(scheme, Point(1, 1), Point(2, 2)))
    assert len(square) == 2
    assert square == list(enumerate_paths(scheme, Point(1, 1), Point(2, 2)))


# -- main lemma and corollary ----------------------------------------------------


def test_lemma_product_examples():
    assert lemma_product(1, 4) == Polynomial.one()
    assert lemma_product(2, 2) == xpoly(1) - xpoly(3)
    assert lemma_product(3, 1) == (xpoly(1) - xpoly(3)) * (xpoly(1) - xpoly(2))


def test_main_lemma_closed_form():
    scheme = schur_weighted_scheme(n=6, col_bound=6)
    for m in range(1, 7):
        for n in range(1, 7):
            assert e_weight(scheme, Point(1, 1), Point(m, n)) == lemma_product(m, n)


def test_main_lemma_induction_recurrence():
    # the horizontal step into (m, n) carries x_n - x_{m+n-1}
    scheme = schur_weighted_scheme(n=5, col_bound=5)
    for m in range(2, 6):
        for n in range(2, 6):
            whole = e_weight(scheme, Point(1, 1), Point(m, n))
            left = e_weight(scheme, Point(1, 1), Point(m - 1, n))
            below = e_weight(scheme, Point(1, 1), Point(m, n - 1))
            assert whole == left * (xpoly(n) - xpoly(m + n - 1)) + below


def test_corollary_power_examples():
    assert corollary_power(1, 1, 2) == Polynomial.one()
    assert corollary_power(2, 4, 3) == xpoly(2) ** 3
    with pytest.raises(ValueError):
        corollary_power(2, 3, 2)


def test_corollary_against_truncated_dp():
    for n in range(2, 5):
        scheme = schur_weighted_scheme(n=n, col_bound=5, truncated=True)
        for t in range(1, n):
            for m in range(1, 6):
                assert e_weight(scheme, Point(1, t), Point(m, n)) == corollary_power(t, m, n)


# -- Vandermonde configuration -----------------------------------------------------


def test_vandermonde_endpoints_quoted_lists():
    sources, sinks = vandermonde_endpoints(1)
    assert sources == [Point(1, 1)] and sinks == [Point(1, 1)]
    sources, sinks = vandermonde_endpoints(2)
    assert sources == [Point(1, 1), Point(1, 2)]
    assert sinks == [Point(2, 2), Point(1, 2)]
    _, sinks = vandermonde_endpoints(3)
    assert sinks == [Point(3, 3), Point(2, 3), Point(1, 3)]


def test_vandermonde_entries_are_powers():
    for n in (1, 2, 3, 4):
        scheme = vandermonde_scheme(n)
        sources, sinks = vandermonde_endpoints(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert e_weight(scheme, sources[i - 1], sinks[j - 1]) == xpoly(i) ** (n - j)


def test_vandermonde_unique_system_and_sum():
    for n in (1, 2, 3):
        scheme = vandermonde_scheme(n)
        sources, sinks = vandermonde_endpoints(n)
        systems = list(nonintersecting_systems(scheme, sources, sinks))
        assert len(systems) == 1
        assert systems[0].sigma == tuple(range(n))
        assert system_weight(scheme, systems[0]) == vandermonde(n)
        assert nonintersecting_sum(scheme, sources, sinks) == vandermonde(n)
        assert lgv_det(scheme, sources, sinks) == vandermonde(n)


# -- Schur configuration -------------------------------------------------------------


def test_schur_endpoints_quoted():
    sources, sinks = schur_endpoints((2, 1), 3)
    assert sources == [Point(1, 1), Point(2, 1), Point(3, 1)]
    # b_1 = (1 + lambda_3, 3), b_2 = (2 + lambda_2, 3), b_3 = (3 + lambda_1, 3)
    assert sinks == [Point(1, 3), Point(3, 3), Point(5, 3)]


def test_schur_via_lgv_examples():
    assert schur_via_lgv((), 2) == Polynomial.one()
    assert schur_via_lgv((1,), 2) == xpoly(1) + xpoly(2)
    assert schur_via_lgv((1, 1, 1), 2) == Polynomial.zero()


def test_schur_via_lgv_matches_tableaux():
    for n in (1, 2, 3):
        for shape in partitions_in_box(n, 4):
            if sum(shape) > 4:
                continue
            assert schur_via_lgv(shape, n) == schur_tableaux(shape, n)


def test_bialternant_endpoints_quoted():
    double_primed, primed, _ = bialternant_endpoints((1,), 2)
    assert primed == [Point(1, 2), Point(2, 1)]
    assert double_primed == [Point(1, 2), Point(1, 1)]
    double_primed, primed, _ = bialternant_endpoints((), 1)
    assert primed == [Point(1, 1)] and double_primed == [Point(1, 1)]


# -- Cauchy doubled graph --------------------------------------------------------------


def test_cauchy_entry_frozen_example():
    scheme = cauchy_doubled_scheme(1, 4)
    sources, sinks = cauchy_endpoints(1)
    assert e_weight(scheme, sources[0], sinks[0]) == parse_poly(
        "x1^2*y1^2 + x1*y1 + 1"
    )


def test_cauchy_entries_are_geometric_sums():
    for n in (1, 2, 3):
        for cap in (0, 2, 4):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    geometric = Polynomial.zero()
                    for k in range(cap + 1):
                        geometric = geometric + (xpoly(i) * ypoly(j)) ** k
                    assert cauchy_entry(n, i, j, cap) == geometric


def test_cauchy_window_is_wide_enough():
    # widening the column window must not change any entry
    import dataclasses

    for n in (1, 2):
        scheme = cauchy_doubled_scheme(n, 6)
        wider = dataclasses.replace(scheme, col_bound=scheme.col_bound + 2)
        sources, sinks = cauchy_endpoints(n)
        for a in sources:
            for b in sinks:
                assert e_weight(scheme, a, b) == e_weight(wider, a, b)


def test_cauchy_dp_matches_enumeration():
    scheme = cauchy_doubled_scheme(2, 4)
    sources, sinks = cauchy_endpoints(2)
    for a in sources:
        for b in sinks:
            total = Polynomial.zero()
            for path in enumerate_paths(scheme, a, b):
                total = total + path.weight
            assert total == e_weight(scheme, a, b)


# -- the LGV lemma itself ----------------------------------------------------------------


def test_lgv_single_pair_degenerates():
    scheme = jacobi_trudi_scheme(n=2, col_bound=4)
    a, b = Point(1, 1), Point(3, 2)
    assert nonintersecting_sum(scheme, [a], [b]) == e_weight(scheme, a, b)


def _random_monotone_config(rng, scheme_builder):
    n = rng.randint(1, 3)
    scheme = scheme_builder(rng.randint(max(n, 2), 4))
    cols = rng.sample(range(1, scheme.col_bound + 1), n)
    sources = [Point(c, 1) for c in sorted(cols)]
    top = rng.randint(2, 3)
    cols = rng.sample(range(1, scheme.col_bound + 1), n)
    sinks = [Point(c, top) for c in sorted(cols)]
    return scheme, sources, sinks


def test_lgv_lemma_on_random_configurations():
    rng = random.Random(2024)
    builders = [
        lambda bound: jacobi_trudi_scheme(n=3, col_bound=bound),
        lambda bound: schur_weighted_scheme(n=3, col_bound=bound),
        lambda bound: schur_weighted_scheme(n=3, col_bound=bound, truncated=True),
    ]
    for builder in builders:
        for _ in range(20):
            scheme, sources, sinks = _random_monotone_config(rng, builder)
            assert lgv_det(scheme, sources, sinks) == nonintersecting_sum(
                scheme, sources, sinks
            )


def test_lgv_lemma_on_random_doubled_configurations():
    rng = random.Random(515)
    for _ in range(20):
        n = rng.randint(1, 2)
        scheme = cauchy_doubled_scheme(n, rng.choice((2, 4)))
        size = rng.randint(1, n)
        source_rows = sorted(rng.sample(range(1, n + 1), size))
        sink_rows = sorted(rng.sample(range(n + 1, 2 * n + 1), size))
        sources = [Point(1, r) for r in source_rows]
        sinks = [Point(1, r) for r in sink_rows]
        assert lgv_det(scheme, sources, sinks) == nonintersecting_sum(
            scheme, sources, sinks
        )


def test_lgv_lemma_on_schur_configurations():
    for n in (1, 2, 3):
        for shape in partitions_in_box(n, 4):
            if sum(shape) > 4:
                continue
            width = (shape[0] if shape else 0) + n
            scheme = jacobi_trudi_scheme(n=n, col_bound=width)
            sources, sinks = schur_endpoints(shape, n)
            assert lgv_det(scheme, sources, sinks) == nonintersecting_sum(
                scheme, sources, sinks
            )


def test_too_large_guard():
    scheme = jacobi_trudi_scheme(n=2, col_bound=30)
    with pytest.raises(TooLarge):
        list(
            nonintersecting_systems(
                scheme, [Point(1, 1)], [Point(30, 25)], max_paths_per_pair=1000
            )
        )


def test_path_weights_are_edge_products():
    from schurpaths.lgv import _edge_weight

    scheme = schur_weighted_scheme(n=3, col_bound=4, truncated=True)
    for path in enumerate_paths(scheme, Point(1, 1), Point(3, 3)):
        product = Polynomial.one()
        for frm, to in zip(path.vertices, path.vertices[1:]):
            product = product * _edge_weight(scheme, frm, to)
        assert product == path.weight


# -- SVG export -----------------------------------------------------------------------


def test_svg_is_wellformed_with_one_polyline_per_path():
    scheme = vandermonde_scheme(2)
    sources, sinks = vandermonde_endpoints(2)
    systems = list(nonintersecting_systems(scheme, sources, sinks))
    svg = path_systems_svg(scheme, sources, sinks, systems)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    polylines = [e for e in root.iter() if e.tag.endswith("polyline")]
    assert len(polylines) == sum(len(s.paths) for s in systems)
    labels = {e.text for e in root.iter() if e.tag.endswith("text")}
    assert {"a1", "a2", "b1", "b2"} <= labels


def test_svg_renders_empty_system_list():
    scheme = vandermonde_scheme(2)
    sources, sinks = vandermonde_endpoints(2)
    svg = path_systems_svg(scheme, sources, sinks, [])
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
