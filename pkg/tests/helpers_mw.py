"""Shared helpers for the test modules."""

from fractions import Fraction
import random

from matrixweyl import Coeff, MatrixDiffOp, Polynomial, PolySpinor, ScalarDiffOp


def C(a, b=0):
    return Coeff.rational(a, b)


def poly(nvars, *terms):
    """poly(2, ((1,0), 1), ((0,2), -3)) -> x1 - 3 x2^2."""
    out = Polynomial.zero(nvars)
    for mono, c in terms:
        out = out + Polynomial.monomial(mono, c, nvars)
    return out


def spinor(nvars, *components):
    """Each component is a list of (mono, coeff) pairs."""
    return PolySpinor([poly(nvars, *comp) for comp in components], nvars)


def random_coeff(rng: random.Random, with_params=True) -> Coeff:
    terms = {}
    for _ in range(rng.randint(0, 3)):
        if with_params:
            exps = tuple(rng.randint(0, 1) for _ in range(4))
        else:
            exps = (0, 0, 0, 0)
        terms[exps] = (
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
        )
    return Coeff(terms)


def random_scalar_op(rng: random.Random, nvars=2, nterms=3, maxdeg=2) -> ScalarDiffOp:
    terms = {}
    for _ in range(nterms):
        xp = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
        dp = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
        terms[(xp, dp)] = random_coeff(rng)
    return ScalarDiffOp(nvars, terms)


def random_matrix_op(rng: random.Random, dim=2, nvars=2) -> MatrixDiffOp:
    return MatrixDiffOp(
        [
            [random_scalar_op(rng, nvars, nterms=2, maxdeg=1) for _ in range(dim)]
            for _ in range(dim)
        ]
    )


def random_poly(rng: random.Random, nvars=2, nterms=3, maxdeg=3) -> Polynomial:
    out = Polynomial.zero(nvars)
    for _ in range(nterms):
        mono = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
        out = out + Polynomial.monomial(mono, random_coeff(rng), nvars)
    return out


def random_spinor(rng: random.Random, dim=2, nvars=2) -> PolySpinor:
    return PolySpinor(
        [random_poly(rng, nvars, nterms=2, maxdeg=2) for _ in range(dim)], nvars
    )
