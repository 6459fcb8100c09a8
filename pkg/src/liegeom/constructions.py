"""Constructions that manufacture new structures from verified ones.

  * double: the semidirect sum of an algebra with a second copy of
    itself acted on through a connection, carrying the standard complex
    structure that swaps the copies.
  * kahler_form_from_hessian: the closed positive pairing form the
    double of a flat statistical (Hessian) structure carries.
  * cone_extend: the one-dimension-higher algebra with a radiant vector
    rho, whose connection absorbs constant curvature c into the rho
    direction and comes out flat and torsion free.
  * lck_family: the one-parameter family omega_t on the double of a
    cone, with Lee form -(1 + c t) rho^1; the t where 1 + c t = 0 is the
    Kahler member.
  * solve_lambda: exact roots of c L^2 - 2 L + 1 = 0, rational when the
    discriminant is a rational square and an explicit surd pair
    otherwise.
  * extract_statistical: the inverse of cone_extend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import JacobiViolation, LieAlgebra, jacobi_check
from .errors import (CurvatureMismatch, DimensionMismatch, MissingRadiant,
                     NonPositiveScale, NonPositiveT, NoRealSolution,
                     NotConical, NotHessian, NotStatistical,
                     UnderdeterminedCurvature, ZeroCurvature)
from .forms import KForm, ce_d, dual_form, wedge
from .geometry import (ComplexStructure, Connection, Metric, StructureReport,
                       classify)
from .tensors import DOWN, UP, Tensor


@dataclass(frozen=True)
class DoubledAlgebra:
    """L acting on a second copy of itself through a connection.

    Basis order is the first copy then the second, labels suffixed 1
    and 2.  The candidate bracket satisfies Jacobi exactly when the
    connection is flat, so the verdict rides along instead of being
    assumed.
    """

    algebra: LieAlgebra
    complex_structure: ComplexStructure
    block: int
    origin_algebra: LieAlgebra
    origin_connection: Connection
    jacobi: JacobiViolation | None

    @property
    def j(self):
        return self.complex_structure


def double(L, connection):
    """Semidirect double of (L, connection) with its standard j."""
    if connection.base != L:
        raise DimensionMismatch("connection is bound to a different algebra")
    n = L.dim
    labels = tuple(x + "1" for x in L.basis_labels) + tuple(
        x + "2" for x in L.basis_labels)
    entries = {}
    for (i, j, k), value in L.c.nonzero_items():
        entries[(i, j, k)] = value
    for (i, j, k), value in connection.gamma.nonzero_items():
        entries[(i, n + j, n + k)] = value
        entries[(n + j, i, n + k)] = -value
    c = Tensor.from_entries((2 * n,) * 3, (DOWN, DOWN, UP), entries)
    algebra = LieAlgebra(2 * n, labels, c)
    j_entries = {}
    for i in range(n):
        j_entries[(n + i, i)] = Fraction(1)
        j_entries[(i, n + i)] = Fraction(-1)
    j = ComplexStructure(
        algebra, Tensor.from_entries((2 * n, 2 * n), (UP, DOWN), j_entries))
    return DoubledAlgebra(algebra, j, n, L, connection, jacobi_check(algebra))


@dataclass(frozen=True)
class HessianKahlerResult:
    double: DoubledAlgebra
    omega: KForm
    report: StructureReport


def kahler_form_from_hessian(L, connection, metric):
    """Pairing form of the double of a flat statistical structure.

    omega(X + 0, 0 + Y) = g(X, Y) and omega vanishes on pairs from the
    same copy.  The report certifies closedness, integrability and
    positivity of omega(., j .); the preconditions (flat, torsion free,
    Codazzi symmetric, positive definite) raise NotHessian naming the
    first failed verdict.
    """
    state = classify(L, connection=connection, metric=metric)
    for name in ("jacobi", "torsion_free", "flat", "codazzi",
                 "metric_positive"):
        if not state.flag(name):
            raise NotHessian(f"not a Hessian structure: {name} fails")
    dbl = double(L, connection)
    n = L.dim
    components = {}
    for i in range(n):
        for j in range(n):
            value = metric.g[i, j]
            if value != 0:
                components[(i, n + j)] = value
    omega = KForm.from_components(2 * n, 2, components)
    report = classify(dbl.algebra, complex_structure=dbl.complex_structure,
                      omega=omega)
    return HessianKahlerResult(dbl, omega, report)


# -- the quadratic for the cone generator ----------------------------------

@dataclass(frozen=True)
class SurdPair:
    """The two real roots (p + sqrt(d)) / q and (p - sqrt(d)) / q.

    Stored with integer p, q and positive non-square d, q positive.
    """

    p: int
    d: int
    q: int


def solve_lambda(c):
    """Real solutions of c L^2 - 2 L + 1 = 0 with L not in {0, 1/2}.

    Rational roots come back as a sorted tuple of Fractions; an
    irrational pair comes back as a SurdPair.  c = 0 raises
    ZeroCurvature and a negative discriminant raises NoRealSolution.
    """
    c = Fraction(c)
    if c == 0:
        raise ZeroCurvature("the quadratic degenerates for curvature zero")
    if 1 - c < 0:
        raise NoRealSolution(f"discriminant 1 - c = {1 - c} is negative")
    a, b = c.numerator, c.denominator
    d = b * (b - a)
    root = math.isqrt(d)
    if root * root == d:
        values = {Fraction(b + root, a), Fraction(b - root, a)}
        values -= {Fraction(0), Fraction(1, 2)}
        return tuple(sorted(values))
    p, q = b, a
    if q < 0:
        p, q = -p, -q
    return SurdPair(p, d, q)


# -- cone extension --------------------------------------------------------

@dataclass(frozen=True)
class ConeExtension:
    """A statistical base together with its radiant direction rho.

    The report certifies the cone connection flat and torsion free on a
    bracket that still satisfies Jacobi.
    """

    algebra: LieAlgebra
    nabla: Connection
    rho_index: int
    c: Fraction
    base_algebra: LieAlgebra
    base_connection: Connection
    base_metric: Metric
    report: StructureReport

    def rho(self):
        return self.algebra.basis_vector(self.rho_index)

    def metric(self, t):
        """g extended by t on the rho direction (zero across)."""
        n = self.algebra.dim
        r = self.rho_index
        entries = {}
        for (i, j), value in self.base_metric.g.nonzero_items():
            entries[(i, j)] = value
        entries[(r, r)] = Fraction(t)
        return Metric(self.algebra,
                      Tensor.from_entries((n, n), (DOWN, DOWN), entries))


def _fresh_label(taken, stem="rho"):
    if stem not in taken:
        return stem
    k = 0
    while f"{stem}{k}" in taken:
        k += 1
    return f"{stem}{k}"


def cone_extend(L, connection, metric, c=None):
    """Extend a statistical structure of constant curvature c by a cone.

    The new algebra is the product with a central rho; the connection is
    nabla_X Y = D_X Y - c g(X, Y) rho on the base, with rho acting as
    the identity.  c may be omitted when the base determines it; a
    supplied c is cross-checked unless the fit is underdetermined.
    """
    state = classify(L, connection=connection, metric=metric)
    for name in ("jacobi", "torsion_free", "codazzi", "metric_positive"):
        if not state.flag(name):
            raise NotStatistical(f"not a statistical structure: {name} fails")
    fit = state.constant_curvature
    if fit.kind == "none":
        raise CurvatureMismatch("no constant curvature fits the base")
    if fit.kind == "underdetermined":
        if c is None:
            raise UnderdeterminedCurvature(
                "the base determines no curvature; supply c explicitly")
    else:
        if c is None:
            c = fit.value
        elif Fraction(c) != fit.value:
            raise CurvatureMismatch(
                f"declared curvature {Fraction(c)} but the base has {fit.value}")
    c = Fraction(c)

    n = L.dim
    r = n
    labels = L.basis_labels + (_fresh_label(set(L.basis_labels)),)
    entries = {}
    for (i, j, k), value in L.c.nonzero_items():
        entries[(i, j, k)] = value
    algebra = LieAlgebra(
        n + 1, labels,
        Tensor.from_entries((n + 1,) * 3, (DOWN, DOWN, UP), entries))

    gamma = {}
    for (i, j, k), value in connection.gamma.nonzero_items():
        gamma[(i, j, k)] = value
    for i in range(n):
        for j in range(n):
            value = -c * metric.g[i, j]
            if value != 0:
                gamma[(i, j, r)] = value
        gamma[(i, r, i)] = Fraction(1)
        gamma[(r, i, i)] = Fraction(1)
    gamma[(r, r, r)] = Fraction(1)
    cone_nabla = Connection(
        algebra,
        Tensor.from_entries((n + 1,) * 3, (DOWN, DOWN, UP), gamma))

    report = classify(algebra, connection=cone_nabla)
    if not (report.is_jacobi and report.is_torsion_free and report.is_flat):
        raise RuntimeError("cone construction lost flatness; this is a bug")
    return ConeExtension(algebra, cone_nabla, r, c, L, connection, metric,
                         report)


# -- the locally conformally Kahler family ---------------------------------

@dataclass(frozen=True)
class LckFamily:
    """omega_t on the double of the cone, with its Lee form."""

    double: DoubledAlgebra
    omega: KForm
    lee_form: KForm
    report: StructureReport
    cone: ConeExtension
    c: Fraction
    t: Fraction


def lck_family(L, connection, metric, c, t):
    """Build omega_t = omega + t rho^1 ^ rho^2 on the double of the cone.

    t must be positive.  The verified Lee form is -(1 + c t) rho^1, so
    the member is Kahler exactly when 1 + c t = 0.
    """
    t = Fraction(t)
    if t <= 0:
        raise NonPositiveT(f"the family needs t > 0, got {t}")
    cone = cone_extend(L, connection, metric, c)
    c = cone.c
    dbl = double(cone.algebra, cone.nabla)
    n1 = cone.algebra.dim
    r = cone.rho_index
    components = {}
    for (i, j), value in metric.g.nonzero_items():
        components[(i, n1 + j)] = components.get((i, n1 + j), Fraction(0)) + value
    components[(r, n1 + r)] = t
    omega = KForm.from_components(2 * n1, 2, components)
    lee = dual_form(dbl.algebra, r).scale(-(1 + c * t))
    if ce_d(dbl.algebra, omega) != wedge(lee, omega):
        raise RuntimeError("Lee identity failed on the double; this is a bug")
    report = classify(dbl.algebra, complex_structure=dbl.complex_structure,
                      omega=omega)
    return LckFamily(dbl, omega, lee, report, cone, c, t)


# -- inverse of the cone ---------------------------------------------------

def extract_statistical(algebra, nabla, base_metric, rho_index):
    """Recover (D, c) from a cone-shaped (algebra, nabla, g, rho).

    base_metric lives on the base algebra spanned by the non-rho basis
    vectors.  MissingRadiant flags a rho that does not act as the
    radiant identity; NotConical flags everything else that stops the
    data being a cone over a statistical base.
    """
    n1 = algebra.dim
    r = int(rho_index)
    if not 0 <= r < n1:
        raise DimensionMismatch(f"rho index {r} out of range")
    base = [i for i in range(n1) if i != r]
    rho_label = algebra.basis_labels[r]

    for i in range(n1):
        for k in range(n1):
            if algebra.c[r, i, k] != 0:
                raise NotConical(
                    f"[{rho_label}, {algebra.basis_labels[i]}] is nonzero")
    for i in base:
        for j in base:
            if algebra.c[i, j, r] != 0:
                raise NotConical(
                    "a base bracket leaves the base subspace at "
                    f"({algebra.basis_labels[i]}, {algebra.basis_labels[j]})")

    gamma = nabla.gamma
    for i in base:
        for k in range(n1):
            expected = Fraction(1 if k == i else 0)
            if gamma[i, r, k] != expected:
                raise MissingRadiant(
                    f"nabla_{algebra.basis_labels[i]} {rho_label} is not "
                    f"{algebra.basis_labels[i]}")
            if gamma[r, i, k] != expected:
                raise MissingRadiant(
                    f"nabla_{rho_label} {algebra.basis_labels[i]} is not "
                    f"{algebra.basis_labels[i]}")
    for k in range(n1):
        if gamma[r, r, k] != Fraction(1 if k == r else 0):
            raise MissingRadiant(f"nabla_{rho_label} {rho_label} is not {rho_label}")

    labels = tuple(algebra.basis_labels[i] for i in base)
    n = len(base)
    c_entries = {}
    for a, i in enumerate(base):
        for b, j in enumerate(base):
            for d, k in enumerate(base):
                value = algebra.c[i, j, k]
                if value != 0:
                    c_entries[(a, b, d)] = value
    base_algebra = LieAlgebra(
        n, labels, Tensor.from_entries((n, n, n), (DOWN, DOWN, UP), c_entries))
    if base_metric.base != base_algebra:
        raise DimensionMismatch(
            "base metric is not bound to the base spanned by the non-rho "
            "vectors")

    curvature_value = None
    g = base_metric.g
    for a, i in enumerate(base):
        for b, j in enumerate(base):
            rho_part = gamma[i, j, r]
            if g[a, b] != 0:
                candidate = -rho_part / g[a, b]
                if curvature_value is None:
                    curvature_value = candidate
                elif candidate != curvature_value:
                    raise NotConical(
                        "the rho component of nabla is not proportional to g")
            elif rho_part != 0:
                raise NotConical(
                    "the rho component of nabla is not proportional to g")
    if curvature_value is None:
        raise NotConical("a zero metric determines no curvature")

    d_entries = {}
    for a, i in enumerate(base):
        for b, j in enumerate(base):
            for e, k in enumerate(base):
                value = gamma[i, j, k]
                if value != 0:
                    d_entries[(a, b, e)] = value
    connection = Connection(
        base_algebra,
        Tensor.from_entries((n, n, n), (DOWN, DOWN, UP), d_entries))
    return connection, curvature_value


def rescale_metric(connection, metric, c, s):
    """Scale the metric by s > 0; constant curvature scales by 1/s."""
    s = Fraction(s)
    if s <= 0:
        raise NonPositiveScale(f"scale must be positive, got {s}")
    scaled = Metric(metric.base, metric.g.scale(s))
    return connection, scaled, Fraction(c) / s
