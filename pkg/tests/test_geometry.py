from fractions import Fraction

import pytest

from liegeom import (ComplexStructure, Connection, DegenerateMetric,
                     DimensionMismatch, KForm, LieAlgebra, Metric,
                     NotAlmostComplex, ShapeMismatch, Tensor,
                     classify, codazzi_check, cone_extend, constant_curvature,
                     curvature, double, get_example, nabla, nabla_g,
                     nijenhuis, torsion, witness_residual)
from liegeom.geometry import lee_form_solve, pairing_rows

Q = Fraction


def clan(params=None):
    return get_example("clan-triangular", params)


def su2():
    return get_example("su2")


# -- connections -----------------------------------------------------------

def test_connection_from_table_round_trip():
    entry = clan()
    rebuilt = Connection.from_table(
        entry.algebra, {(1, 0): {1: Q(-2)}, (1, 1): {0: Q(1)}})
    assert rebuilt == entry.connection


def test_connection_shape_guard():
    L = LieAlgebra.abelian(("x", "y"))
    with pytest.raises(ShapeMismatch):
        Connection(L, Tensor.zero((2, 2), ("d", "u")))


def test_nabla_values_and_linearity():
    entry = clan()
    u = entry.algebra.basis_vector(0)
    v = entry.algebra.basis_vector(1)
    # nabla_v u = -2v, nabla_v v = u, nabla_u anything = 0
    assert nabla(entry.connection, v, u) == (Q(0), Q(-2))
    assert nabla(entry.connection, v, v) == (Q(1), Q(0))
    assert nabla(entry.connection, u, v) == (Q(0), Q(0))
    combo = tuple(Q(3) * a + Q(-1, 2) * b for a, b in zip(u, v))
    expect = tuple(Q(3) * a + Q(-1, 2) * b
                   for a, b in zip(nabla(entry.connection, u, v),
                                   nabla(entry.connection, v, v)))
    assert nabla(entry.connection, combo, v) == expect


# -- torsion ---------------------------------------------------------------

def test_torsion_vanishes_for_clan_and_su2():
    assert torsion(clan().connection).is_zero()
    assert torsion(su2().connection).is_zero()


def test_torsionful_fixture_has_unit_torsion():
    entry = get_example("flat-torsionful-fixture")
    t = torsion(entry.connection)
    assert dict(t.nonzero_items()) == {(0, 1, 1): Q(1), (1, 0, 1): Q(-1)}


def test_zero_connection_torsion_is_minus_bracket():
    entry = clan()
    t = torsion(Connection.zero(entry.algebra))
    assert dict(t.nonzero_items()) == {(0, 1, 1): Q(-2), (1, 0, 1): Q(2)}


# -- curvature -------------------------------------------------------------

def test_zero_connection_on_abelian_is_flat():
    L = LieAlgebra.abelian(("x", "y", "z"))
    assert curvature(Connection.zero(L)).is_zero()


def test_clan_curvature_components():
    # R(u, v)u = 4v and R(u, v)v = -2u, plus the i <-> j mirror images
    r = curvature(clan().connection)
    assert dict(r.nonzero_items()) == {
        (0, 1, 0, 1): Q(4),
        (0, 1, 1, 0): Q(-2),
        (1, 0, 0, 1): Q(-4),
        (1, 0, 1, 0): Q(2),
    }


def test_su2_curvature_sample():
    r = curvature(su2().connection)
    assert tuple(r[0, 1, 1, l] for l in range(3)) == (Q(1), Q(0), Q(0))


def test_curvature_antisymmetric_in_first_pair():
    for entry in (clan(), su2(), get_example("flat-torsionful-fixture")):
        r = curvature(entry.connection)
        n = entry.algebra.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        assert r[i, j, k, l] == -r[j, i, k, l]


# -- metric and its derivative ---------------------------------------------

def test_metric_requires_symmetry():
    L = LieAlgebra.abelian(("x", "y"))
    with pytest.raises(ShapeMismatch):
        Metric.from_rows(L, [[1, 2], [3, 1]])


def test_metric_value_and_positivity():
    entry = clan()
    u = entry.algebra.basis_vector(0)
    v = entry.algebra.basis_vector(1)
    assert entry.metric.value(u, u) == 4
    assert entry.metric.value(u, v) == 0
    assert entry.metric.is_positive_definite()
    indefinite = Metric.from_rows(entry.algebra, [[1, 2], [2, 1]])
    assert not indefinite.is_positive_definite()


def test_clan_and_su2_metrics_are_parallel():
    for entry in (clan(), su2()):
        assert nabla_g(entry.connection, entry.metric).is_zero()


def test_nabla_g_detects_perturbation():
    entry = clan()
    g = Metric.from_rows(entry.algebra, [[4, 0], [0, 3]])
    ng = nabla_g(entry.connection, g)
    assert dict(ng.nonzero_items()) == {
        (1, 0, 1): Q(2), (1, 1, 0): Q(2)}


# -- codazzi ---------------------------------------------------------------

def test_codazzi_holds_on_catalog_pairs():
    for entry in (clan(), su2()):
        assert codazzi_check(entry.connection, entry.metric) is None


def test_codazzi_violation_location_and_residual():
    entry = clan()
    g = Metric.from_rows(entry.algebra, [[4, 0], [0, 3]])
    violation = codazzi_check(entry.connection, g)
    assert (violation.i, violation.j, violation.k) == (0, 1, 1)
    assert violation.residual == Q(-2)


# -- constant curvature fit ------------------------------------------------

def test_constant_curvature_values():
    fit = constant_curvature(clan().connection, clan().metric)
    assert (fit.kind, fit.value) == ("constant", Q(-1))
    steep = clan({"c": "2"})
    fit2 = constant_curvature(steep.connection, steep.metric)
    assert (fit2.kind, fit2.value) == ("constant", Q(-2))
    fit3 = constant_curvature(su2().connection, su2().metric)
    assert (fit3.kind, fit3.value) == ("constant", Q(1))


def test_constant_curvature_underdetermined_in_dim_one():
    entry = get_example("so2")
    fit = constant_curvature(entry.connection, entry.metric)
    assert fit.kind == "underdetermined"
    assert fit.value is None


def test_constant_curvature_mismatch_reports_witness():
    # with the identity metric the two curvature slots want different
    # constants (-4 against -2), so no single value fits
    entry = clan()
    fit = constant_curvature(entry.connection, Metric.identity(entry.algebra))
    assert fit.kind == "none"
    assert fit.witness is not None
    assert fit.witness.claim == "constant_curvature"
    assert fit.witness.indices == (0, 1, 1, 0)
    assert fit.witness.residual == Q(2)
    assert fit.witness.detail == (Q(-4),)


def test_constant_curvature_rejects_degenerate_metric():
    entry = clan()
    g = Metric.from_rows(entry.algebra, [[1, 0], [0, 0]])
    with pytest.raises(DegenerateMetric):
        constant_curvature(entry.connection, g)


# -- complex structures ----------------------------------------------------

def test_complex_structure_square_check():
    L = LieAlgebra.abelian(("x", "y"))
    with pytest.raises(NotAlmostComplex):
        ComplexStructure.from_rows(L, [[1, 0], [0, 1]])
    with pytest.raises(NotAlmostComplex):
        ComplexStructure.from_rows(L, [[0, 1], [1, 0]])


def test_complex_structure_shape_check():
    L = LieAlgebra.abelian(("x", "y"))
    with pytest.raises(ShapeMismatch):
        ComplexStructure(L, Tensor.zero((2, 2), ("d", "u")))


def test_complex_structure_apply():
    L = LieAlgebra.abelian(("x", "y"))
    J = ComplexStructure.from_rows(L, [[0, -1], [1, 0]])
    assert J.apply(L.basis_vector(0)) == (Q(0), Q(1))
    assert J.apply(L.basis_vector(1)) == (Q(-1), Q(0))
    assert J.apply((Q(2), Q(3))) == (Q(-3), Q(2))


# -- nijenhuis tensor ------------------------------------------------------

def test_nijenhuis_vanishes_on_abelian_with_standard_j():
    L = LieAlgebra.abelian(("x", "y"))
    J = ComplexStructure.from_rows(L, [[0, -1], [1, 0]])
    assert nijenhuis(L, J).is_zero()


def test_nijenhuis_vanishes_on_cone_double():
    entry = clan()
    ext = cone_extend(entry.algebra, entry.connection, entry.metric)
    dbl = double(ext.algebra, ext.nabla)
    assert nijenhuis(dbl.algebra, dbl.complex_structure).is_zero()


def test_nijenhuis_obstruction_with_torsion():
    entry = get_example("flat-torsionful-fixture")
    dbl = double(entry.algebra, entry.connection)
    n = nijenhuis(dbl.algebra, dbl.complex_structure)
    assert not n.is_zero()
    assert tuple(n[0, 1, k] for k in range(4)) == (Q(0), Q(-1), Q(0), Q(0))


# -- lee form --------------------------------------------------------------

def test_lee_form_zero_when_omega_closed():
    L = LieAlgebra.abelian(("a", "b", "c", "d"))
    omega = KForm.from_components(4, 2, {(0, 1): Q(1), (2, 3): Q(1)})
    theta = lee_form_solve(L, omega)
    assert theta is not None
    assert list(theta.components()) == []


def test_lee_form_unique_solution():
    L = LieAlgebra.from_brackets(
        ("e1", "e2", "e3", "e4"), {(0, 1): {2: 1}, (0, 2): {0: 1}})
    omega = KForm.from_components(
        4, 2, {(0, 1): Q(1), (2, 3): Q(1), (1, 2): Q(1)})
    theta = lee_form_solve(L, omega)
    assert list(theta.components()) == [
        ((1,), Q(1)), ((2,), Q(1)), ((3,), Q(-1))]


def test_lee_form_infeasible_returns_none():
    L = LieAlgebra.from_brackets(("e1", "e2", "e3", "e4"), {(0, 1): {2: 1}})
    omega = KForm.from_components(4, 2, {(2, 3): Q(1)})
    assert lee_form_solve(L, omega) is None


# -- classify --------------------------------------------------------------

def test_classify_flags_none_without_inputs():
    entry = clan()
    report = classify(entry.algebra)
    assert report.is_jacobi is True
    assert report.is_torsion_free is None
    assert report.is_kahler is None
    with pytest.raises(DimensionMismatch):
        report.flag("kahler")
    assert report.flag("jacobi") is True


def test_classify_statistical_composites():
    entry = clan()
    report = classify(entry.algebra, connection=entry.connection,
                      metric=entry.metric)
    assert report.is_torsion_free is True
    assert report.is_codazzi is True
    assert report.is_metric_positive is True
    assert report.is_statistical is True
    assert report.is_flat is False
    assert report.is_hessian is False
    assert report.constant_curvature.kind == "constant"
    assert report.constant_curvature.value == Q(-1)
    claims = [w.claim for w in report.witnesses]
    assert claims == ["curvature"]


def test_classify_kahler_on_abelian_plane():
    L = LieAlgebra.abelian(("x", "y"))
    J = ComplexStructure.from_rows(L, [[0, -1], [1, 0]])
    omega = KForm.from_components(2, 2, {(0, 1): Q(1)})
    report = classify(L, complex_structure=J, omega=omega)
    assert report.is_integrable is True
    assert report.is_omega_closed is True
    assert report.is_pairing_positive is True
    assert report.is_kahler is True
    assert report.is_lck is True
    assert report.is_lee_closed is True
    assert list(report.lee_form.components()) == []
    assert report.witnesses == ()


def test_classify_negative_pairing():
    L = LieAlgebra.abelian(("x", "y"))
    J = ComplexStructure.from_rows(L, [[0, -1], [1, 0]])
    omega = KForm.from_components(2, 2, {(0, 1): Q(-1)})
    report = classify(L, complex_structure=J, omega=omega)
    assert report.is_pairing_positive is False
    assert report.is_kahler is False
    (witness,) = [w for w in report.witnesses
                  if w.claim == "pairing_positive"]
    assert witness.indices == (1,)
    assert witness.residual == Q(-1)


def test_classify_asymmetric_pairing():
    L = LieAlgebra.abelian(("a", "b", "c", "d"))
    omega = KForm.from_components(4, 2, {(0, 2): Q(1)})
    J = ComplexStructure.from_rows(
        L, [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    report = classify(L, complex_structure=J, omega=omega)
    assert report.is_pairing_positive is False
    (witness,) = [w for w in report.witnesses
                  if w.claim == "pairing_symmetry"]
    assert witness.indices == (0, 3)
    assert witness.residual == Q(-1)
    rows = pairing_rows(omega, J)
    assert rows[0][3] - rows[3][0] == Q(-1)


def test_classify_nonclosed_lee_form():
    # the lee system pins theta uniquely but d theta != 0, and adding the
    # closedness rows makes the joint system infeasible
    L = LieAlgebra.from_brackets(
        ("e1", "e2", "e3", "e4"), {(0, 1): {2: 1}, (0, 2): {0: 1}})
    omega = KForm.from_components(
        4, 2, {(0, 1): Q(1), (2, 3): Q(1), (1, 2): Q(1)})
    report = classify(L, omega=omega)
    assert report.is_lee_closed is False
    assert list(report.lee_form.components()) == [
        ((1,), Q(1)), ((2,), Q(1)), ((3,), Q(-1))]
    claims = {w.claim for w in report.witnesses}
    assert {"d_lee", "lee_closed_system"} <= claims


def test_classify_lee_system_infeasible():
    L = LieAlgebra.from_brackets(("e1", "e2", "e3", "e4"), {(0, 1): {2: 1}})
    omega = KForm.from_components(4, 2, {(2, 3): Q(1)})
    report = classify(L, omega=omega)
    assert report.lee_form is None
    assert report.is_lee_closed is None
    (witness,) = [w for w in report.witnesses if w.claim == "lee_system"]
    assert witness.indices == ()
    assert witness.residual != 0


def test_classify_rejects_mismatched_pieces():
    entry = clan()
    other = su2()
    with pytest.raises(DimensionMismatch):
        classify(entry.algebra, connection=other.connection)


# -- witness re-evaluation -------------------------------------------------

def test_witness_residuals_round_trip_for_every_claim():
    # collect reports whose witnesses cover the whole claim vocabulary,
    # then recompute each residual from the raw inputs
    cases = []

    violator = LieAlgebra.from_brackets(
        ("e1", "e2", "e3"), {(0, 1): {0: 1}, (0, 2): {2: 1}})
    cases.append((classify(violator), {"algebra": violator}))

    torsionful = get_example("flat-torsionful-fixture")
    cases.append((
        classify(torsionful.algebra, connection=torsionful.connection,
                 metric=torsionful.metric),
        {"algebra": torsionful.algebra, "connection": torsionful.connection,
         "metric": torsionful.metric}))

    entry = clan()
    bad_g = Metric.from_rows(entry.algebra, [[4, 0], [0, 3]])
    cases.append((
        classify(entry.algebra, connection=entry.connection, metric=bad_g),
        {"algebra": entry.algebra, "connection": entry.connection,
         "metric": bad_g}))

    indefinite = Metric.from_rows(entry.algebra, [[1, 2], [2, 1]])
    cases.append((
        classify(entry.algebra, connection=entry.connection,
                 metric=indefinite),
        {"algebra": entry.algebra, "connection": entry.connection,
         "metric": indefinite}))

    fit = constant_curvature(entry.connection,
                             Metric.identity(entry.algebra))
    assert fit.witness is not None
    value = witness_residual(fit.witness, connection=entry.connection,
                             metric=Metric.identity(entry.algebra))
    assert value == fit.witness.residual

    dbl = double(torsionful.algebra, torsionful.connection)
    cases.append((
        classify(dbl.algebra, complex_structure=dbl.complex_structure),
        {"algebra": dbl.algebra, "complex_structure": dbl.complex_structure}))

    lee = LieAlgebra.from_brackets(
        ("e1", "e2", "e3", "e4"), {(0, 1): {2: 1}, (0, 2): {0: 1}})
    lee_omega = KForm.from_components(
        4, 2, {(0, 1): Q(1), (2, 3): Q(1), (1, 2): Q(1)})
    lee_report = classify(lee, omega=lee_omega)
    cases.append((lee_report,
                  {"algebra": lee, "omega": lee_omega,
                   "lee_form": lee_report.lee_form}))

    infeasible = LieAlgebra.from_brackets(
        ("e1", "e2", "e3", "e4"), {(0, 1): {2: 1}})
    bad_omega = KForm.from_components(4, 2, {(2, 3): Q(1)})
    cases.append((classify(infeasible, omega=bad_omega),
                  {"algebra": infeasible, "omega": bad_omega}))

    plane = LieAlgebra.abelian(("x", "y"))
    J = ComplexStructure.from_rows(plane, [[0, -1], [1, 0]])
    neg = KForm.from_components(2, 2, {(0, 1): Q(-1)})
    cases.append((classify(plane, complex_structure=J, omega=neg),
                  {"algebra": plane, "complex_structure": J, "omega": neg}))

    asym_base = LieAlgebra.abelian(("a", "b", "c", "d"))
    asym_omega = KForm.from_components(4, 2, {(0, 2): Q(1)})
    asym_j = ComplexStructure.from_rows(
        asym_base,
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    cases.append((
        classify(asym_base, complex_structure=asym_j, omega=asym_omega),
        {"algebra": asym_base, "complex_structure": asym_j,
         "omega": asym_omega}))

    seen = set()
    for report, pieces in cases:
        for witness in report.witnesses:
            seen.add(witness.claim)
            assert witness_residual(witness, **pieces) == witness.residual

    assert {"jacobi", "torsion", "curvature", "codazzi",
            "positive_definite", "nijenhuis", "d_omega", "d_lee",
            "lee_system", "lee_closed_system", "pairing_symmetry",
            "pairing_positive"} <= seen


def test_witness_residual_rejects_stale_certificate():
    L = LieAlgebra.from_brackets(("e1", "e2", "e3", "e4"), {(0, 1): {2: 1}})
    omega = KForm.from_components(4, 2, {(2, 3): Q(1)})
    report = classify(L, omega=omega)
    (witness,) = [w for w in report.witnesses if w.claim == "lee_system"]
    other = KForm.from_components(4, 2, {(0, 1): Q(1)})
    with pytest.raises(ShapeMismatch):
        witness_residual(witness, algebra=L, omega=other)
