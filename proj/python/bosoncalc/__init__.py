"""Exact boson normal ordering, Bell polynomials, and diagram counting.

Exact values cross the extension boundary as "p/q" strings; this wrapper
converts them to fractions.Fraction (and plain int where values are integral).
"""

from fractions import Fraction

from . import _bosoncalc as _core

__all__ = [
    "stirling", "bell", "involutions", "hermite_kdf", "modified_hermite",
    "complete_bell", "bell_inverse", "normal_order", "word_powers", "vertices",
    "count", "kerr_sequence", "zclosed", "partition_integrand",
    "integrand_coefficients", "weighted_total", "diagram_classes",
    "bell_asymptotic", "phi4_series", "phi4_integral", "macdonald_closed",
    "divergence_ratio", "verify",
]


def _arg(x):
    if isinstance(x, (int, Fraction)):
        return str(x)
    return x


def _fractions(strings):
    return [Fraction(s) for s in strings]


def _terms(triples):
    return {(i, j): Fraction(c) for i, j, c in triples}


def stirling(n, k):
    return int(_core.stirling(n, k))


def bell(n):
    return int(_core.bell(n))


def involutions(n):
    return int(_core.involutions(n))


def hermite_kdf(n, m, g1, gm):
    return Fraction(_core.hermite_kdf(n, m, _arg(g1), _arg(gm)))


def modified_hermite(n, x):
    return Fraction(_core.modified_hermite(n, _arg(x)))


def complete_bell(g):
    return _fractions(_core.complete_bell([_arg(x) for x in g]))


def bell_inverse(y):
    return _fractions(_core.bell_inverse([_arg(x) for x in y]))


def normal_order(word):
    """Normal form of a word over {a, A} as {(dagger power, a power): coeff}."""
    return _terms(_core.normal_order(word))


def word_powers(word, order):
    return [_terms(t) for t in _core.word_powers(word, order)]


def vertices(word, order):
    return [_terms(t) for t in _core.vertices(word, order)]


def count(l, v, order):
    raw = _core.count([_arg(x) for x in l], [_arg(x) for x in v], order)
    return {key: _fractions(val) for key, val in raw.items()}


def kerr_sequence(m, order):
    return _fractions(_core.kerr_sequence(m, order))


def zclosed(m, order):
    return _fractions(_core.zclosed(m, order))


def partition_integrand(m, beta, lam, zsq, k):
    return _core.partition_integrand(m, beta, lam, zsq, k)


def integrand_coefficients(m, beta, n, zsq):
    lhs, rhs = _core.integrand_coefficients(m, _arg(beta), n, _arg(zsq))
    return Fraction(lhs), Fraction(rhs)


def weighted_total(n, l, v):
    return Fraction(_core.weighted_total(n, [_arg(x) for x in l], [_arg(x) for x in v]))


def diagram_classes(n, l, v):
    out = _core.diagram_classes(n, [_arg(x) for x in l], [_arg(x) for x in v])
    for cls in out:
        cls["weight"] = Fraction(cls["weight"])
    return out


bell_asymptotic = _core.bell_asymptotic
phi4_series = _core.phi4_series
phi4_integral = _core.phi4_integral
macdonald_closed = _core.macdonald_closed
divergence_ratio = _core.divergence_ratio
verify = _core.verify
