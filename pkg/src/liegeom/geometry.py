"""Connections, metrics and complex structures on a Lie algebra.

Conventions used throughout:

  * gamma[i, j, k] is the e_k coefficient of nabla_{e_i} e_j.
  * torsion   T(X, Y) = nabla_X Y - nabla_Y X - [X, Y].
  * curvature R(X, Y) Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
                          - nabla_{[X, Y]} Z.
  * The derivative of invariant data keeps no directional term:
    (nabla_X g)(Y, Z) = -g(nabla_X Y, Z) - g(Y, nabla_X Z).

The Codazzi check asks for total symmetry of (nabla_{e_i} g)(e_j, e_k),
constant curvature compares R against c (g(Y, Z) X - g(X, Z) Y), and
classify folds every verdict computable from the supplied pieces into a
single report in which each negative answer carries an exact witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LieAlgebra, as_vector, bracket, jacobi_check
from .errors import (DegenerateMetric, DimensionMismatch, NotAlmostComplex,
                     ShapeMismatch, UnsupportedDegree)
from .forms import KForm, ce_d
from .tensors import (DOWN, UP, Infeasible, Tensor, det, leading_minors,
                      matrix_rows, null_vector, solve_linear, symmetric_rows)


@dataclass(frozen=True)
class Connection:
    base: LieAlgebra
    gamma: Tensor

    def __post_init__(self):
        n = self.base.dim
        if self.gamma.shape != (n, n, n) or self.gamma.variance != (DOWN, DOWN, UP):
            raise ShapeMismatch(
                f"connection coefficients need shape {(n, n, n)}, variance ddu")

    @classmethod
    def from_table(cls, base, table):
        """Build from {(i, j): {k: value}} meaning nabla_{e_i} e_j."""
        entries = {}
        for (i, j), component in table.items():
            for k, value in component.items():
                entries[(i, j, k)] = value
        n = base.dim
        gamma = Tensor.from_entries((n, n, n), (DOWN, DOWN, UP), entries)
        return cls(base, gamma)

    @classmethod
    def zero(cls, base):
        n = base.dim
        return cls(base, Tensor.zero((n, n, n), (DOWN, DOWN, UP)))


def nabla(connection, x, y):
    """nabla_x y in coordinates, bilinear over the rationals."""
    L = connection.base
    x = as_vector(L, x)
    y = as_vector(L, y)
    out = [Fraction(0)] * L.dim
    for (i, j, k), value in connection.gamma.nonzero_items():
        if x[i] and y[j]:
            out[k] += value * x[i] * y[j]
    return tuple(out)


@dataclass(frozen=True)
class Metric:
    """Symmetric bilinear form.  Definiteness is a verdict, not an axiom."""

    base: LieAlgebra
    g: Tensor

    def __post_init__(self):
        n = self.base.dim
        if self.g.shape != (n, n) or self.g.variance != (DOWN, DOWN):
            raise ShapeMismatch(f"metric needs shape {(n, n)}, variance dd")
        Tensor(self.g.shape, self.g.variance, self.g.entries, sym=((0, 1),))

    @classmethod
    def from_rows(cls, base, rows):
        return cls(base, Tensor.from_nested(rows, (DOWN, DOWN)))

    @classmethod
    def identity(cls, base):
        n = base.dim
        return cls.from_rows(base, [[1 if i == j else 0 for j in range(n)]
                                    for i in range(n)])

    def value(self, x, y):
        x = as_vector(self.base, x)
        y = as_vector(self.base, y)
        return _bilinear(self.g, x, y)

    def is_positive_definite(self):
        return all(m > 0 for m in leading_minors(symmetric_rows(self.g)))


def _bilinear(t, x, y):
    total = Fraction(0)
    for (i, j), value in t.nonzero_items():
        total += value * x[i] * y[j]
    return total


@dataclass(frozen=True)
class ComplexStructure:
    """Almost complex structure: a matrix squaring to minus the identity.

    j[i, k] is the e_i coefficient of J(e_k).
    """

    base: LieAlgebra
    j: Tensor

    def __post_init__(self):
        n = self.base.dim
        if self.j.shape != (n, n) or self.j.variance != (UP, DOWN):
            raise ShapeMismatch(f"complex structure needs shape {(n, n)}, ud")
        for i in range(n):
            for k in range(n):
                square = sum((self.j[i, m] * self.j[m, k] for m in range(n)),
                             Fraction(0))
                expected = Fraction(-1 if i == k else 0)
                if square != expected:
                    raise NotAlmostComplex(
                        f"(J*J)[{i}, {k}] = {square}, expected {expected}")

    @classmethod
    def from_rows(cls, base, rows):
        return cls(base, Tensor.from_nested(rows, (UP, DOWN)))

    def apply(self, x):
        x = as_vector(self.base, x)
        n = self.base.dim
        return tuple(sum((self.j[i, k] * x[k] for k in range(n)), Fraction(0))
                     for i in range(n))


# -- verdict computations --------------------------------------------------

def torsion(connection):
    """T as a (1, 2) tensor: T[i, j, k] is the e_k part of T(e_i, e_j)."""
    L = connection.base
    n = L.dim
    gamma = connection.gamma
    entries = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                value = gamma[i, j, k] - gamma[j, i, k] - L.c[i, j, k]
                if value != 0:
                    entries[(i, j, k)] = value
    return Tensor.from_entries((n, n, n), (DOWN, DOWN, UP), entries)


def curvature(connection):
    """R as a (1, 3) tensor: R[i, j, k, l] is the e_l part of R(e_i, e_j) e_k."""
    L = connection.base
    n = L.dim
    g = connection.gamma.to_nested()
    c = L.c.to_nested()
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    value = Fraction(0)
                    for m in range(n):
                        value += g[j][k][m] * g[i][m][l]
                        value -= g[i][k][m] * g[j][m][l]
                        value -= c[i][j][m] * g[m][k][l]
                    out.append(value)
    return Tensor((n, n, n, n), (DOWN, DOWN, DOWN, UP), tuple(out))


def nabla_g(connection, metric):
    """(nabla_{e_i} g)(e_j, e_k) under the invariant-data convention."""
    n = connection.base.dim
    gamma = connection.gamma.to_nested()
    g = metric.g.to_nested()
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                value = Fraction(0)
                for m in range(n):
                    value -= gamma[i][j][m] * g[m][k]
                    value -= gamma[i][k][m] * g[j][m]
                out.append(value)
    return Tensor((n, n, n), (DOWN, DOWN, DOWN), tuple(out))


@dataclass(frozen=True)
class CodazziViolation:
    """First (i, j, k) where nabla g loses symmetry in its first two slots."""

    i: int
    j: int
    k: int
    residual: Fraction


def codazzi_check(connection, metric):
    """None when nabla g is totally symmetric, else the first violation.

    Symmetry in the last two slots is automatic for a symmetric metric,
    so only the (i, j) swap is scanned, in lexicographic order.
    """
    _same_base(connection.base, metric.base)
    ng = nabla_g(connection, metric)
    n = connection.base.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                residual = ng[i, j, k] - ng[j, i, k]
                if residual != 0:
                    return CodazziViolation(i, j, k, residual)
    return None


@dataclass(frozen=True)
class Witness:
    """An exact counterexample: claim name, index tuple and residual.

    detail carries auxiliary rational data (a fitted constant, an
    infeasibility combination, a kernel vector) when the residual alone
    does not reproduce the computation.
    """

    claim: str
    indices: tuple
    residual: object
    detail: tuple = ()


@dataclass(frozen=True)
class CurvatureFit:
    """Outcome of fitting R = c (g(Y, Z) X - g(X, Z) Y).

    kind is "constant" (value holds c), "none", or "underdetermined"
    when the comparison tensor vanishes identically, as on a
    one-dimensional base.
    """

    kind: str
    value: Fraction | None = None
    witness: Witness | None = field(default=None, compare=False)


def comparison_tensor(metric):
    """K[i, j, k, l] for the constant-curvature shape, from g alone."""
    n = metric.base.dim
    g = metric.g.to_nested()
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    value = Fraction(0)
                    if l == i:
                        value += g[j][k]
                    if l == j:
                        value -= g[i][k]
                    out.append(value)
    return Tensor((n, n, n, n), (DOWN, DOWN, DOWN, UP), tuple(out))


def constant_curvature(connection, metric):
    """Fit a single exact c with R = c K, or report why none exists."""
    _same_base(connection.base, metric.base)
    if det(matrix_rows(metric.g)) == 0:
        raise DegenerateMetric("the metric is degenerate; no curvature fit")
    r = curvature(connection)
    k = comparison_tensor(metric)
    first = k.first_nonzero()
    if first is None:
        if r.is_zero():
            return CurvatureFit("underdetermined")
        idx, value = r.first_nonzero()
        return CurvatureFit(
            "none", witness=Witness("constant_curvature", idx, value,
                                    detail=(Fraction(0),)))
    idx0, k0 = first
    c = r[idx0] / k0
    for idx in r.indices():
        residual = r[idx] - c * k[idx]
        if residual != 0:
            return CurvatureFit(
                "none", witness=Witness("constant_curvature", idx, residual,
                                        detail=(c,)))
    return CurvatureFit("constant", c)


def nijenhuis(L, J):
    """N(X, Y) = [X, Y] + J([JX, Y] + [X, JY]) - [JX, JY] on basis pairs."""
    _same_base(L, J.base)
    n = L.dim
    basis = [L.basis_vector(i) for i in range(n)]
    jbasis = [J.apply(v) for v in basis]
    entries = {}
    for i in range(n):
        for j in range(n):
            inner = tuple(a + b for a, b in zip(
                bracket(L, jbasis[i], basis[j]),
                bracket(L, basis[i], jbasis[j])))
            total = tuple(
                p + q - r for p, q, r in zip(
                    bracket(L, basis[i], basis[j]),
                    J.apply(inner),
                    bracket(L, jbasis[i], jbasis[j])))
            for k, value in enumerate(total):
                if value != 0:
                    entries[(i, j, k)] = value
    return Tensor.from_entries((n, n, n), (DOWN, DOWN, UP), entries)


def pairing_rows(omega, J):
    """Matrix of omega(e_i, J e_j) as row lists."""
    n = omega.dim
    w = omega.coefficients
    return [[sum((w[i, k] * J.j[k, j] for k in range(n)), Fraction(0))
             for j in range(n)] for i in range(n)]


# -- the Lee form equation -------------------------------------------------

def lee_form_system(L, omega):
    """Linear system for theta with d(omega) = theta wedge omega.

    Returns (rows, rhs, triples): one equation per basis triple i < j < k
    in lexicographic order, one column per dual basis covector.
    """
    if omega.degree != 2:
        raise UnsupportedDegree("the Lee equation needs a 2-form")
    if omega.dim != L.dim:
        raise DimensionMismatch("form and algebra dimensions differ")
    n = L.dim
    d = ce_d(L, omega).coefficients
    w = omega.coefficients
    rows = []
    rhs = []
    triples = []
    for i, j, k in itertools.combinations(range(n), 3):
        row = [Fraction(0)] * n
        row[i] += w[j, k]
        row[j] -= w[i, k]
        row[k] += w[i, j]
        rows.append(row)
        rhs.append(d[i, j, k])
        triples.append((i, j, k))
    return rows, rhs, triples


def closedness_rows(L):
    """Equations saying theta vanishes on every bracket, i.e. d(theta) = 0."""
    n = L.dim
    rows = []
    for i, j in itertools.combinations(range(n), 2):
        rows.append([L.c[i, j, k] for k in range(n)])
    return rows


def lee_form_solve(L, omega):
    """The canonical solution theta of d(omega) = theta wedge omega.

    Free variables are pinned to zero with pivots chosen in dual basis
    order, so the answer is deterministic.  Returns None when the system
    is inconsistent.
    """
    theta, _ = _lee_solve_certified(L, omega)
    return theta


def _lee_solve_certified(L, omega):
    rows, rhs, _ = lee_form_system(L, omega)
    if not rows:
        # fewer than three dimensions: d(omega) is identically zero
        return KForm.zero(L.dim, 1), None
    solved = solve_linear(rows, rhs)
    if isinstance(solved, Infeasible):
        return None, solved
    return _theta_from_values(L.dim, solved.values), None


def _closed_lee_solve(L, omega):
    """Joint system: theta solves the Lee equation and is closed."""
    rows, rhs, _ = lee_form_system(L, omega)
    extra = closedness_rows(L)
    rows = rows + extra
    rhs = rhs + [Fraction(0)] * len(extra)
    if not rows:
        return KForm.zero(L.dim, 1), None
    solved = solve_linear(rows, rhs)
    if isinstance(solved, Infeasible):
        return None, solved
    return _theta_from_values(L.dim, solved.values), None


def _theta_from_values(dim, values):
    return KForm.from_components(
        dim, 1, {(i,): v for i, v in enumerate(values) if v != 0})


# -- the combined report ---------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    """Every verdict computable from the pieces handed to classify.

    Flags are None when the needed pieces were absent, otherwise exact
    booleans; each False flag is backed by at least one entry of
    witnesses.  lee_form prefers a closed solution of the Lee equation
    when one exists, falling back to the canonical solution.
    """

    is_jacobi: bool | None = None
    is_torsion_free: bool | None = None
    is_flat: bool | None = None
    is_codazzi: bool | None = None
    is_metric_positive: bool | None = None
    is_statistical: bool | None = None
    is_hessian: bool | None = None
    is_integrable: bool | None = None
    is_omega_closed: bool | None = None
    is_pairing_positive: bool | None = None
    is_kahler: bool | None = None
    is_lck: bool | None = None
    constant_curvature: CurvatureFit | None = None
    lee_form: KForm | None = None
    is_lee_closed: bool | None = None
    witnesses: tuple = ()

    def flag(self, name):
        value = getattr(self, "is_" + name)
        if value is None:
            raise DimensionMismatch(
                f"verdict {name} needs pieces that were not supplied")
        return value


def classify(L, connection=None, metric=None, complex_structure=None,
             omega=None):
    """Run every applicable check and assemble a StructureReport."""
    witnesses = []
    report = {}

    violation = jacobi_check(L)
    report["is_jacobi"] = violation is None
    if violation is not None:
        witnesses.append(Witness(
            "jacobi", (violation.i, violation.j, violation.k),
            violation.residual))

    if connection is not None:
        _same_base(L, connection.base)
        t = torsion(connection)
        report["is_torsion_free"] = t.is_zero()
        if not report["is_torsion_free"]:
            (i, j, _k), _ = t.first_nonzero()
            report_torsion = tuple(t[i, j, k] for k in range(L.dim))
            witnesses.append(Witness("torsion", (i, j), report_torsion))
        r = curvature(connection)
        report["is_flat"] = r.is_zero()
        if not report["is_flat"]:
            (i, j, k, _l), _ = r.first_nonzero()
            vec = tuple(r[i, j, k, l] for l in range(L.dim))
            witnesses.append(Witness("curvature", (i, j, k), vec))

    if metric is not None:
        _same_base(L, metric.base)
        rows = symmetric_rows(metric.g)
        minors = leading_minors(rows)
        bad = next((k for k, m in enumerate(minors) if m <= 0), None)
        report["is_metric_positive"] = bad is None
        if bad is not None:
            detail = ()
            if minors[bad] == 0:
                kernel = null_vector([row[: bad + 1] for row in rows[: bad + 1]])
                if kernel is not None:
                    detail = kernel + (Fraction(0),) * (L.dim - bad - 1)
            witnesses.append(Witness(
                "positive_definite", (bad + 1,), minors[bad], detail))

    if connection is not None and metric is not None:
        violation = codazzi_check(connection, metric)
        report["is_codazzi"] = violation is None
        if violation is not None:
            witnesses.append(Witness(
                "codazzi", (violation.i, violation.j, violation.k),
                violation.residual))
        fit = constant_curvature(connection, metric)
        report["constant_curvature"] = fit
        if fit.witness is not None:
            witnesses.append(fit.witness)
        report["is_statistical"] = (report["is_torsion_free"]
                                    and report["is_codazzi"]
                                    and report["is_metric_positive"])
        report["is_hessian"] = report["is_statistical"] and report["is_flat"]

    if complex_structure is not None:
        _same_base(L, complex_structure.base)
        n_tensor = nijenhuis(L, complex_structure)
        report["is_integrable"] = n_tensor.is_zero()
        if not report["is_integrable"]:
            (i, j, _k), _ = n_tensor.first_nonzero()
            vec = tuple(n_tensor[i, j, k] for k in range(L.dim))
            witnesses.append(Witness("nijenhuis", (i, j), vec))

    lee_form = None
    if omega is not None:
        if omega.degree != 2:
            raise UnsupportedDegree("classification expects a 2-form")
        if omega.dim != L.dim:
            raise DimensionMismatch("form and algebra dimensions differ")
        d_omega = ce_d(L, omega)
        report["is_omega_closed"] = d_omega.is_zero()
        if not report["is_omega_closed"]:
            idx, value = next(d_omega.components())
            witnesses.append(Witness("d_omega", idx, value))

        theta, certificate = _lee_solve_certified(L, omega)
        theta_closed = None
        if theta is None:
            witnesses.append(Witness(
                "lee_system", (), certificate.residual,
                certificate.combination))
        else:
            d_theta = ce_d(L, theta)
            if d_theta.is_zero():
                theta_closed = theta
            else:
                theta_closed, joint_cert = _closed_lee_solve(L, omega)
                if theta_closed is None:
                    idx, value = next(d_theta.components())
                    witnesses.append(Witness("d_lee", idx, value))
                    witnesses.append(Witness(
                        "lee_closed_system", (), joint_cert.residual,
                        joint_cert.combination))
        lee_form = theta_closed if theta_closed is not None else theta
        report["lee_form"] = lee_form
        if lee_form is not None:
            report["is_lee_closed"] = theta_closed is not None

        if complex_structure is not None:
            rows = pairing_rows(omega, complex_structure)
            positive = True
            n = L.dim
            asym = next(((i, j) for i in range(n) for j in range(i + 1, n)
                         if rows[i][j] != rows[j][i]), None)
            if asym is not None:
                positive = False
                i, j = asym
                witnesses.append(Witness(
                    "pairing_symmetry", (i, j), rows[i][j] - rows[j][i]))
            else:
                minors = leading_minors(rows)
                bad = next((k for k, m in enumerate(minors) if m <= 0), None)
                if bad is not None:
                    positive = False
                    witnesses.append(Witness(
                        "pairing_positive", (bad + 1,), minors[bad]))
            report["is_pairing_positive"] = positive
            report["is_kahler"] = (report["is_integrable"]
                                   and report["is_omega_closed"]
                                   and positive)
            report["is_lck"] = (report["is_integrable"]
                                and theta_closed is not None
                                and positive)

    return StructureReport(witnesses=tuple(witnesses), **report)


def _same_base(L, other):
    if L != other:
        raise DimensionMismatch("pieces are bound to different algebras")


# -- witness re-evaluation -------------------------------------------------

def witness_residual(witness, *, algebra=None, connection=None, metric=None,
                     complex_structure=None, omega=None, lee_form=None):
    """Recompute the quantity a witness points at, from scratch.

    The result equals the stored residual for a truthful report, and a
    nonzero value demonstrates the failed claim.
    """
    claim = witness.claim
    idx = tuple(witness.indices)
    if claim == "jacobi":
        i, j, k = idx
        b = [algebra.basis_vector(m) for m in range(algebra.dim)]
        parts = (bracket(algebra, bracket(algebra, b[i], b[j]), b[k]),
                 bracket(algebra, bracket(algebra, b[j], b[k]), b[i]),
                 bracket(algebra, bracket(algebra, b[k], b[i]), b[j]))
        return tuple(sum(col, Fraction(0)) for col in zip(*parts))
    if claim == "torsion":
        i, j = idx
        t = torsion(connection)
        return tuple(t[i, j, k] for k in range(connection.base.dim))
    if claim == "curvature":
        i, j, k = idx
        r = curvature(connection)
        return tuple(r[i, j, k, l] for l in range(connection.base.dim))
    if claim == "codazzi":
        i, j, k = idx
        ng = nabla_g(connection, metric)
        return ng[i, j, k] - ng[j, i, k]
    if claim == "positive_definite":
        (size,) = idx
        return leading_minors(symmetric_rows(metric.g))[size - 1]
    if claim == "constant_curvature":
        c = witness.detail[0]
        r = curvature(connection)
        k = comparison_tensor(metric)
        return r[idx] - c * k[idx]
    if claim == "nijenhuis":
        i, j = idx
        n_tensor = nijenhuis(algebra, complex_structure)
        return tuple(n_tensor[i, j, k] for k in range(algebra.dim))
    if claim == "d_omega":
        return ce_d(algebra, omega).coefficients[idx]
    if claim == "d_lee":
        return ce_d(algebra, lee_form).coefficients[idx]
    if claim in ("lee_system", "lee_closed_system"):
        rows, rhs, _ = lee_form_system(algebra, omega)
        if claim == "lee_closed_system":
            extra = closedness_rows(algebra)
            rows = rows + extra
            rhs = rhs + [Fraction(0)] * len(extra)
        combo = witness.detail
        if len(combo) != len(rows):
            raise ShapeMismatch("combination length does not match the system")
        for col in range(algebra.dim):
            if sum((y * row[col] for y, row in zip(combo, rows)),
                   Fraction(0)) != 0:
                raise ShapeMismatch("combination is not a left null vector")
        return sum((y * b for y, b in zip(combo, rhs)), Fraction(0))
    if claim == "pairing_symmetry":
        i, j = idx
        rows = pairing_rows(omega, complex_structure)
        return rows[i][j] - rows[j][i]
    if claim == "pairing_positive":
        (size,) = idx
        rows = pairing_rows(omega, complex_structure)
        return leading_minors(rows)[size - 1]
    raise ShapeMismatch(f"unknown witness claim {claim!r}")
