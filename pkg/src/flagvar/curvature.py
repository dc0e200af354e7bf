"""Scalar curvature of the canonical variation, two independent ways.

``scal_wz`` assembles the curvature by brute force from root triples:
each unordered triple {alpha, beta, alpha+beta} of positive roots feeds
the summation with a symbol value of twice the squared structure
constant of the summand pair, weighted by how many of the three roots
are vertical.  ``scal_closed_form`` returns the catalogued polynomial
coefficients for each family.

The two agree coefficient-by-coefficient for su (every n), g2, and
so-odd at n=2, and that agreement is enforced with zero tolerance.  For
so-odd at n>=4 the catalogued numerator is missing a quarter of the
fiber-internal bracket term (one of the four fiber triples per index
triple; the fiber has none at n=2), and for sp / so-even the catalogued
t**2 coefficient is the base dimension where the assembly forces the
horizontal summand count, half of it.  Two facts pin the assembled side
down independently of any closed form: the t**2 coefficient of any
fiber-scaling variation is the number of horizontal summands, and at
t=1 the value must be (dim G + rank)/4, the normal metric's curvature.
The assembled coefficients are the ones used downstream; the catalogued
ones are kept verbatim as a cross-check.

Everything is represented in u = t**2, never sampled in floats.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .rootsys import structure_constant_sq


@dataclass(frozen=True)
class ScalPoly:
    """scal(t) = (a + c*t**2 + e*t**4) / (d*t**2), exact coefficients."""

    a: Fraction
    c: Fraction
    e: Fraction
    d: Fraction

    def __post_init__(self):
        if self.d == 0:
            raise ValueError("zero denominator")

    def normalized(self):
        """Coefficient triple (a/d, c/d, e/d), the rational-function key."""
        return (self.a / self.d, self.c / self.d, self.e / self.d)

    def same_function(self, other):
        return self.normalized() == other.normalized()

    def value_at_u(self, u):
        u = Fraction(u)
        if u <= 0:
            raise ValueError("u = t**2 must be positive")
        return (self.a + self.c * u + self.e * u * u) / (self.d * u)

    def value_at_t(self, t):
        t = Fraction(t)
        return self.value_at_u(t * t)

    def scaled_denominator(self, factor):
        return ScalPoly(self.a, self.c, self.e, self.d * Fraction(factor))


@dataclass(frozen=True)
class TripleRecord:
    """An unordered root triple with its symbol value and vertical class.

    klass is 'vvv' when all three roots are vertical, 'vhh' when exactly
    one summand is vertical (the sum then being horizontal), and
    'hvh-transport' when the two summands are horizontal and bracket
    into a vertical sum.
    """

    alpha: tuple
    beta: tuple
    gamma: tuple
    value: Fraction
    klass: str


def triples(fib):
    """All triples {alpha, beta, gamma = alpha + beta} with their class."""
    rs = fib.root_system
    positives = set(rs.positive_roots)
    vertical = set(fib.vertical_roots)
    records = []
    for alpha, beta in combinations(rs.positive_roots, 2):
        gamma = tuple(x + y for x, y in zip(alpha, beta))
        if gamma not in positives:
            continue
        value = 2 * structure_constant_sq(rs, alpha, beta)
        n_vertical = sum(1 for r in (alpha, beta, gamma) if r in vertical)
        if n_vertical == 3:
            klass = "vvv"
        elif n_vertical == 1 and gamma in vertical:
            klass = "hvh-transport"
        elif n_vertical == 1:
            klass = "vhh"
        else:
            raise ValueError(
                "unexpected vertical pattern in triple {} {} {}".format(
                    alpha, beta, gamma))
        records.append(TripleRecord(alpha, beta, gamma, value, klass))
    return records


def scal_wz(fib):
    """Brute-force scalar curvature of the canonical variation.

    The curvature is (1/2) sum d_l/t_l - (1/4) sum [k;ij] t_k/(t_i t_j)
    over ordered module triples, with every vertical module scaled by
    t**2 and every horizontal one kept at 1.  An unordered triple meets
    the ordered sum with multiplicity 6; splitting those orderings by
    where the vertical roots sit gives, per unit of symbol value,
    6/t**2 for a vvv triple and 4/t**2 + 2*t**2 for a one-vertical
    triple.
    """
    sum_vvv = Fraction(0)
    sum_mixed = Fraction(0)
    for rec in triples(fib):
        if rec.klass == "vvv":
            sum_vvv += rec.value
        else:
            sum_mixed += rec.value
    n_vertical = len(fib.vertical_roots)
    n_horizontal = len(fib.horizontal_roots)
    a = n_vertical - Fraction(3, 2) * sum_vvv - sum_mixed
    c = Fraction(n_horizontal)
    e = -sum_mixed / 2
    return ScalPoly(a=a, c=c, e=e, d=Fraction(1))


def scal_closed_form(family):
    """Catalogued closed-form coefficients of scal(t) per family."""
    n = family.n
    if family.kind == "su":
        return ScalPoly(a=Fraction(-2 * n + n * n * (n + 1)),
                        c=Fraction(4 * n * (n + 1)),
                        e=Fraction(n * (1 - n)),
                        d=Fraction(4 * (n + 1)))
    if family.kind == "so-odd":
        return ScalPoly(a=Fraction(5 * n**3 - 7 * n**2 + 2 * n),
                        c=Fraction(8 * n**2 - 4 * n),
                        e=Fraction(-2 * n**2 + 2 * n),
                        d=Fraction(4 * (2 * n - 1)))
    if family.kind == "sp":
        return ScalPoly(a=Fraction(5 * n**3 + 9 * n**2 - 14 * n),
                        c=Fraction(24 * n**3 + 48 * n**2 + 24 * n),
                        e=Fraction(-2 * n**3 + 2 * n),
                        d=Fraction(24 * (n + 1)))
    if family.kind == "so-even":
        return ScalPoly(a=Fraction(5 * n**2 + 2 * n),
                        c=Fraction(24 * n**2 - 24 * n),
                        e=Fraction(-2 * n**2 + 4 * n),
                        d=Fraction(24))
    return ScalPoly(a=Fraction(2), c=Fraction(12),
                    e=Fraction(-2), d=Fraction(3))


def su_triple_census(fib):
    """Ordered triple counts (N1, N2, N3) for the su family.

    N1 counts orderings of all-vertical triples, N2 orderings of mixed
    triples with the vertical root in a bottom slot, N3 those with the
    vertical root on top.  Expected values are n**3 - 3n**2 + 2n,
    2n(n-1) and n(n-1).
    """
    if fib.family.kind != "su":
        raise ValueError("census is specific to the su family")
    n_vvv = 0
    n_mixed = 0
    for rec in triples(fib):
        if rec.klass == "vvv":
            n_vvv += 1
        else:
            n_mixed += 1
    return 6 * n_vvv, 4 * n_mixed, 2 * n_mixed
