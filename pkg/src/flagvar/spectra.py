"""Laplacian spectra: flag totals, symmetric bases, and fibers.

Flag-manifold spectra come from the class-one eigenvalue polynomials in
the simple-root coefficients (p_1, ..., p_l), p_i >= 1, restricted to
dominant weights.  Completeness of the enumeration under a cutoff is
guaranteed by a certified lower bound on the smallest eigenvalue of the
quadratic part.  Base spectra use the closed forms for the projective
space and even sphere, and weight enumeration over the spherical
generator basis for the other three bases, always with Weyl-dimension
multiplicities.

Two catalogued inconsistencies are surfaced (never silently fixed):
the sp-family flag polynomial attains 1 while the catalogued first
eigenvalue says (4n-1)/(4(n+1)), and the catalogued dominance system
for the so-odd flag has a sign slip in one row.  See
``cn_first_eigenvalue_report`` and ``bn_dominance_row_report``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, isqrt

from .exact import min_eigenvalue_lower_bound, solve_linear
from .rootsys import FamilyTag, build_root_system, ck_inner


@dataclass(frozen=True)
class SpectrumEntry:
    """One spectral line: exact value, multiplicity, origin, label.

    Flag totals and fiber entries carry mult = 1 with mult_known False:
    their true multiplicities are never needed downstream, only base
    multiplicities feed the Morse index.
    """

    value: Fraction
    mult: int
    origin: str
    label: tuple
    mult_known: bool = True


@lru_cache(maxsize=None)
def _root_system(family):
    return build_root_system(family)


@lru_cache(maxsize=None)
def _fundamental_weights(family):
    """Fundamental weights in ambient coordinates, via the simple Gram."""
    rs = _root_system(family)
    simple = rs.simple_roots
    gram = [[ck_inner(rs.ck, a, b) for b in simple] for a in simple]
    weights = []
    for i, alpha in enumerate(simple):
        rhs = [Fraction(0)] * len(simple)
        rhs[i] = ck_inner(rs.ck, alpha, alpha) / 2
        coeffs = solve_linear(gram, rhs)
        dim = len(simple[0])
        w = tuple(sum(c * root[k] for c, root in zip(coeffs, simple))
                  for k in range(dim))
        weights.append(w)
    return tuple(weights)


@lru_cache(maxsize=None)
def _half_sum(family):
    rs = _root_system(family)
    dim = len(rs.positive_roots[0])
    return tuple(sum(r[k] for r in rs.positive_roots) / Fraction(2)
                 for k in range(dim))


def casimir_of_weight(family, lam):
    """<lam, lam + 2*delta> with delta the half-sum of positive roots."""
    rs = _root_system(family)
    delta = _half_sum(family)
    shifted = tuple(x + 2 * d for x, d in zip(lam, delta))
    return ck_inner(rs.ck, lam, shifted)


def ambient_weight(family, coeffs):
    """Ambient coordinates of the weight sum c_i*omega_i."""
    weights = _fundamental_weights(family)
    if len(coeffs) != len(weights):
        raise ValueError("coefficient count does not match the rank")
    dim = len(weights[0])
    return tuple(sum(c * w[k] for c, w in zip(coeffs, weights))
                 for k in range(dim))


def weyl_dim(family, coeffs):
    """Dimension of the irreducible with highest weight sum c_i*omega_i.

    coeffs are the nonnegative integer fundamental-weight coefficients;
    anything negative is rejected as non-dominant.  The product formula
    must come out an exact positive integer, enforced here.
    """
    if any(c < 0 for c in coeffs):
        raise ValueError("non-dominant weight")
    return _weyl_dim_ambient(family, ambient_weight(family, coeffs))


def _weyl_dim_ambient(family, lam):
    rs = _root_system(family)
    delta = _half_sum(family)
    shifted = tuple(x + d for x, d in zip(lam, delta))
    result = Fraction(1)
    for alpha in rs.positive_roots:
        result *= ck_inner(rs.ck, shifted, alpha) / ck_inner(rs.ck, delta, alpha)
    if result.denominator != 1 or result <= 0:
        raise ValueError("Weyl dimension did not come out a positive integer")
    return int(result)


# ---------------------------------------------------------------------------
# Flag (total space) spectra.

def flag_mu(family, p):
    """Class-one eigenvalue polynomial, catalogued per family.

    The sp-family (kind C) polynomial is kept exactly as catalogued even
    though it differs from the Casimir value of the same weight; the
    discrepancy is reported by cn_first_eigenvalue_report.
    """
    kind, n = family.kind, family.rank
    if len(p) != n:
        raise ValueError("expected {} coefficients".format(n))
    if any(x < 1 for x in p):
        raise ValueError("class-one coefficients must be >= 1")
    if kind == "A":
        inner = (sum(x * x for x in p)
                 - sum(p[i] * p[i + 1] for i in range(n - 1))
                 + sum(p))
        return Fraction(inner, n + 1)
    if kind == "B":
        inner = (2 * sum(x * x for x in p[:-1]) + p[-1] ** 2
                 - 2 * sum(p[i] * p[i + 1] for i in range(n - 1))
                 + 2 * sum(p[:-1]) + p[-1])
        return Fraction(inner, 4 * n - 2)
    if kind == "C":
        inner = (sum(x * x for x in p[:-1]) + 2 * p[-1] ** 2
                 - sum(p[i] * p[i + 1] for i in range(n - 2))
                 - p[-2] * p[-1]
                 + sum(p[:-1]) + 2 * p[-1])
        return Fraction(inner, 2 * (n + 1))
    if kind == "D":
        inner = (sum(x * x for x in p)
                 - sum(p[i] * p[i + 1] for i in range(n - 2))
                 - p[-3] * p[-1]
                 + sum(p))
        return Fraction(inner, 2 * (n - 1))
    # G2; the catalogued coefficients are short-root-first.
    p1, p2 = p
    inner = p1 * p1 + 3 * p2 * p2 - 3 * p1 * p2 + p1 + 3 * p2
    return Fraction(inner, 12)


def class_one_weight(family, p):
    """Ambient weight for coefficients p (G2 swaps to long-first order)."""
    rs = _root_system(family)
    if family.kind == "G2":
        coeffs = (p[1], p[0])
    else:
        coeffs = p
    dim = len(rs.simple_roots[0])
    return tuple(sum(c * alpha[k] for c, alpha in zip(coeffs, rs.simple_roots))
                 for k in range(dim))


def is_dominant_class_one(family, p):
    """Dominance of the weight sum p_i*alpha_i, checked on simple roots."""
    rs = _root_system(family)
    lam = class_one_weight(family, p)
    for alpha in rs.simple_roots:
        if 2 * ck_inner(rs.ck, lam, alpha) < 0:
            return False
    return True


def _quadratic_data(family):
    """(matrix, linear, denominator) of the numerator of flag_mu."""
    kind, n = family.kind, family.rank
    half = Fraction(1, 2)
    m = [[Fraction(0)] * n for _ in range(n)]
    if kind == "A":
        for i in range(n):
            m[i][i] = Fraction(1)
        for i in range(n - 1):
            m[i][i + 1] = m[i + 1][i] = -half
        return m, [Fraction(1)] * n, n + 1
    if kind == "B":
        for i in range(n - 1):
            m[i][i] = Fraction(2)
        m[n - 1][n - 1] = Fraction(1)
        for i in range(n - 1):
            m[i][i + 1] = m[i + 1][i] = Fraction(-1)
        return m, [Fraction(2)] * (n - 1) + [Fraction(1)], 4 * n - 2
    if kind == "C":
        for i in range(n - 1):
            m[i][i] = Fraction(1)
        m[n - 1][n - 1] = Fraction(2)
        for i in range(n - 2):
            m[i][i + 1] = m[i + 1][i] = -half
        m[n - 2][n - 1] = m[n - 1][n - 2] = -half
        return m, [Fraction(1)] * (n - 1) + [Fraction(2)], 2 * (n + 1)
    if kind == "D":
        for i in range(n):
            m[i][i] = Fraction(1)
        for i in range(n - 2):
            m[i][i + 1] = m[i + 1][i] = -half
        m[n - 3][n - 1] = m[n - 1][n - 3] = -half
        return m, [Fraction(1)] * n, 2 * (n - 1)
    m = [[Fraction(1), Fraction(-3, 2)], [Fraction(-3, 2), Fraction(3)]]
    return m, [Fraction(1), Fraction(3)], 12


def _schur_forms(matrix):
    """Leading-block forms S_k with x'S_k x = min over real tails of Q.

    For a positive definite Q split as [[A, B], [B', C]] after fixing
    the first k coordinates, the minimum over real completions is the
    Schur complement A - B C^{-1} B' applied to the fixed prefix. C is
    a principal submatrix of a positive definite matrix, so the solves
    cannot be singular.
    """
    n = len(matrix)
    forms = {n: matrix}
    for k in range(1, n):
        block_b = [[matrix[i][j] for j in range(k, n)] for i in range(k)]
        block_c = [[matrix[i][j] for j in range(k, n)] for i in range(k, n)]
        solved = [solve_linear(block_c, block_b[i]) for i in range(k)]
        forms[k] = [[matrix[i][j] - sum(block_b[i][l] * solved[j][l]
                                        for l in range(n - k))
                     for j in range(k)] for i in range(k)]
    return forms


def flag_spectrum(family, cutoff):
    """All class-one eigenvalues <= cutoff, one entry per distinct value.

    Completeness: the numerator is a positive definite quadratic form Q
    plus a positive linear form.  A certified lower bound on Q's least
    eigenvalue caps every coordinate, and each prefix is kept only if
    the exact minimum of Q over real completions (Schur complement)
    plus the forced linear contribution still fits under the cutoff.
    Multiplicities are not computed (mult_known is False, mult = 1).
    """
    cutoff = Fraction(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    n = family.rank
    matrix, linear, den = _quadratic_data(family)
    budget = cutoff * den - sum(linear)
    found = {}
    if budget >= 0:
        lam_lo = min_eigenvalue_lower_bound(matrix)
        bound_sq = budget / lam_lo
        p_max = isqrt(bound_sq.numerator // bound_sq.denominator)
        schur = _schur_forms(matrix)
        tail_linear = [sum(linear[k:]) for k in range(n + 1)]
        limit = cutoff * den

        def recurse(prefix):
            if len(prefix) == n:
                p = tuple(prefix)
                value = flag_mu(family, p)
                if value <= cutoff and is_dominant_class_one(family, p):
                    found.setdefault(value, []).append(p)
                return
            for nxt in range(1, p_max + 1):
                candidate = prefix + [nxt]
                # Q of the full vector dominates lam_lo times the sum of
                # squares of any prefix, so this prune loses nothing.
                if lam_lo * sum(x * x for x in candidate) > budget:
                    break
                k = len(candidate)
                form = schur[k]
                q_min = sum(form[i][j] * candidate[i] * candidate[j]
                            for i in range(k) for j in range(k))
                fixed = sum(linear[i] * candidate[i] for i in range(k))
                # No completion with p_j >= 1 can beat this value, but
                # it is not monotone in the last coordinate: skip, not
                # break.
                if q_min + fixed + tail_linear[k] > limit:
                    continue
                recurse(candidate)

        recurse([])
    entries = [SpectrumEntry(value=v, mult=1, origin="total",
                             label=tuple(ps), mult_known=False)
               for v, ps in sorted(found.items())]
    return entries


@lru_cache(maxsize=None)
def flag_minimum(family):
    """Smallest class-one eigenvalue, found by growing the cutoff.

    The all-ones point seeds the cutoff; it need not be dominant, so
    the first sweep may come back empty, and the cutoff then doubles.
    """
    cutoff = flag_mu(family, (1,) * family.rank)
    while True:
        entries = flag_spectrum(family, cutoff)
        if entries:
            return entries[0]
        cutoff *= 2


# ---------------------------------------------------------------------------
# Base (symmetric space) spectra.

def cpn_multiplicity(n, q):
    """Eigenspace dimension on the projective base, closed form."""
    num = (n + 2 * q) * comb(n + q - 1, q) ** 2
    if num % n:
        raise ValueError("projective multiplicity must divide evenly")
    return num // n


def sphere_multiplicity(n, q):
    """Harmonic-polynomial dimension on the 2n-sphere."""
    first = comb(2 * n + q, q)
    second = comb(2 * n + q - 2, q - 2) if q >= 2 else 0
    return first - second


def kramer_basis(fib_family):
    """Spherical generator weights, as fundamental-weight coefficients."""
    n = fib_family.n
    kind = fib_family.kind
    if kind == "su":
        gen = [0] * n
        gen[0] = gen[n - 1] = 1
        return (tuple(gen),)
    if kind == "so-odd":
        gen = [0] * n
        gen[0] = 1
        return (tuple(gen),)
    if kind == "sp":
        basis = []
        for l in range(n):
            gen = [0] * n
            gen[l] = 2
            basis.append(tuple(gen))
        return tuple(basis)
    if kind == "so-even":
        basis = []
        top = n - 2 if n % 2 == 0 else n - 3
        for idx in range(2, top + 1, 2):
            gen = [0] * n
            gen[idx - 1] = 1
            basis.append(tuple(gen))
        gen = [0] * n
        if n % 2 == 0:
            gen[n - 1] = 2
        else:
            gen[n - 2] = gen[n - 1] = 1
        basis.append(tuple(gen))
        return tuple(basis)
    return ((2, 0), (0, 2))  # g2


def g2_base_value(r, s):
    """Catalogued base eigenvalue polynomial for the g2 family."""
    return Fraction(9 * r + 6 * r * r + 5 * s + 6 * r * s + 2 * s * s, 6)


def base_spectrum(fib_family, cutoff):
    """Base eigenvalues <= cutoff with Weyl-dimension multiplicities."""
    cutoff = Fraction(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    family = fib_family.root_family
    n = fib_family.n
    kind = fib_family.kind

    if kind in ("su", "so-odd"):
        gen = kramer_basis(fib_family)[0]
        entries = []
        q = 1
        while True:
            if kind == "su":
                value = Fraction(q * (q + n), n + 1)
            else:
                value = Fraction(q * (q + 2 * n - 1), 2 * (2 * n - 1))
            if value > cutoff:
                break
            coeffs = tuple(q * c for c in gen)
            entries.append(SpectrumEntry(value=value, mult=weyl_dim(family, coeffs),
                                         origin="base", label=(q,)))
            q += 1
        return entries

    basis = kramer_basis(fib_family)
    rank = len(basis[0])
    base_values = [casimir_of_weight(family, ambient_weight(family, b))
                   for b in basis]
    boxes = []
    for mu in base_values:
        top = cutoff / mu
        boxes.append(range(0, top.numerator // top.denominator + 1))
    merged = {}
    for x in product(*boxes):
        if not any(x):
            continue
        coeffs = tuple(sum(xi * b[k] for xi, b in zip(x, basis))
                       for k in range(rank))
        value = casimir_of_weight(family, ambient_weight(family, coeffs))
        if value > cutoff:
            continue
        mult = weyl_dim(family, coeffs)
        bucket = merged.setdefault(value, [0, []])
        bucket[0] += mult
        bucket[1].append(x)
    return [SpectrumEntry(value=v, mult=m, origin="base", label=tuple(xs))
            for v, (m, xs) in sorted(merged.items())]


def base_spectrum_first(fib_family, count):
    """First ``count`` base entries, growing the cutoff as needed."""
    cutoff = Fraction(8)
    while True:
        entries = base_spectrum(fib_family, cutoff)
        if len(entries) >= count:
            return entries[:count]
        cutoff *= 2


# ---------------------------------------------------------------------------
# Fiber spectra.

def _a1_values(cutoff):
    values = []
    a = 1
    while True:
        v = Fraction(a * (a + 1), 2)
        if v > cutoff:
            return values
        values.append(v)
        a += 1


def fiber_spectrum(fib, cutoff):
    """Fiber eigenvalues <= cutoff under the intrinsic normalization.

    The fiber of the so-odd family at n = 2 and of g2 is a product of
    two rank-one flags, so its spectrum is the sum set of two rank-one
    spectra with zero allowed on either factor.  Every fiber here has
    first positive eigenvalue 1, matching the default phi1.
    """
    cutoff = Fraction(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    kind, n = fib.family.kind, fib.family.n
    if kind in ("su", "sp", "so-even"):
        inner = flag_spectrum(FamilyTag("A", n - 1), cutoff)
    elif kind == "so-odd" and n >= 4:
        inner = flag_spectrum(FamilyTag("D", n), cutoff)
    else:  # g2, or so-odd at n = 2: two rank-one factors
        singles = [Fraction(0)] + _a1_values(cutoff)
        values = sorted({v1 + v2 for v1 in singles for v2 in singles
                         if 0 < v1 + v2 <= cutoff})
        return [SpectrumEntry(value=v, mult=1, origin="fiber",
                              label=(), mult_known=False)
                for v in values]
    return [SpectrumEntry(value=e.value, mult=1, origin="fiber",
                          label=e.label, mult_known=False)
            for e in inner]


# ---------------------------------------------------------------------------
# Catalogued-inconsistency reports.

def cn_first_eigenvalue_report(n):
    """Both first-eigenvalue candidates for the sp-family flag.

    The catalogued polynomial attains 1 (at p = (1, 2, ..., 2, 1)) while
    the catalogued statement of the first eigenvalue says
    (4n-1)/(4(n+1)).  Both are returned; nothing is adjudicated.
    """
    family = FamilyTag("C", n)
    entry = flag_minimum(family)
    return {
        "formula_min": entry.value,
        "formula_argmin": entry.label[0],
        "stated": Fraction(4 * n - 1, 4 * (n + 1)),
        "consistent": entry.value == Fraction(4 * n - 1, 4 * (n + 1)),
    }


def bn_dominance_row_report(n):
    """Witness that one catalogued so-odd dominance row drops a sign.

    The catalogued system lists p_{n-2} + 2p_{n-1} - p_n >= 0 where
    dominance requires -p_{n-2} + 2p_{n-1} - p_n >= 0.  For n >= 3 the
    vector (1, ..., 1, 3) passes the catalogued system yet fails
    dominance.
    """
    if n < 3:
        raise ValueError("the affected row only exists for n >= 3")
    witness = tuple([1] * (n - 1) + [3])
    catalogued_rows = [2 * witness[0] - witness[1]]
    for i in range(1, n - 2):
        catalogued_rows.append(-witness[i - 1] + 2 * witness[i] - witness[i + 1])
    catalogued_rows.append(witness[n - 3] + 2 * witness[n - 2] - witness[n - 1])
    catalogued_rows.append(-witness[n - 2] + witness[n - 1])
    return {
        "witness": witness,
        "catalogued_accepts": all(row >= 0 for row in catalogued_rows),
        "dominant": is_dominant_class_one(FamilyTag("B", n), witness),
    }
