"""Roots of c L^2 - 2 L + 1 = 0 for a spread of curvatures.

The generator scale L of a cone over a curvature c base satisfies this
quadratic.  Rational roots print as fractions, irrational pairs print
as exact surds, c > 1 has no real solution and c = 0 degenerates.
"""

from fractions import Fraction

from liegeom import (NoRealSolution, SurdPair, ZeroCurvature, solve_lambda)


def main():
    for c in (Fraction(-3), Fraction(1), Fraction(3, 4), Fraction(1, 2),
              Fraction(2, 3), Fraction(2), Fraction(0)):
        try:
            result = solve_lambda(c)
        except NoRealSolution:
            print(f"c = {c}: no real solutions")
            continue
        except ZeroCurvature:
            print(f"c = {c}: degenerate (the equation is linear)")
            continue
        if isinstance(result, SurdPair):
            p, d, q = result.p, result.d, result.q
            inner = f"{p} +- sqrt({d})"
            surd = inner if q == 1 else f"({inner}) / {q}"
            print(f"c = {c}: L = {surd}")
        else:
            roots = ", ".join(str(r) for r in result)
            print(f"c = {c}: L = {roots}")
            for root in result:
                residue = c * root * root - 2 * root + 1
                assert residue == 0, residue


if __name__ == "__main__":
    main()
