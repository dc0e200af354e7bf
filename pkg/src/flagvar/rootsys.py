"""Root systems A_n, B_n, C_n, D_n and G2 over exact rationals.

Coordinates are ambient: A_n lives in the sum-zero hyperplane of n+1
coordinates, B/C/D use n coordinates, and G2 is written in the basis of
its two simple roots (long root first).  The inner product is the dual
Cartan-Killing form, normalized so the highest root theta satisfies
<theta, theta> = 1/h_vee with h_vee the dual Coxeter number.  That choice
makes every eigenvalue formula downstream come out with its familiar
denominator.

Only squared structure constants are ever computed; signs would require
committing to a Chevalley convention and nothing here needs them.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

KINDS = ("A", "B", "C", "D", "G2")

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "G2": 2}

_DUAL_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "G2": lambda n: 4,
}


@dataclass(frozen=True)
class FamilyTag:
    """One of the five simple families at a given rank."""

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown family kind {!r}".format(self.kind))
        if self.kind == "G2" and self.rank != 2:
            raise ValueError("G2 has fixed rank 2")
        if self.rank < _MIN_RANK[self.kind]:
            raise ValueError(
                "{}_n needs rank >= {}, got {}".format(
                    self.kind, _MIN_RANK[self.kind], self.rank))

    @property
    def dual_coxeter(self):
        return _DUAL_COXETER[self.kind](self.rank)


@dataclass(frozen=True)
class CKForm:
    """Dual Cartan-Killing form on the ambient coordinate space.

    For the classical families the form is scale times the Euclidean dot
    product and ``scale`` is set.  G2 coordinates are simple-root
    coefficients, which are not orthogonal, so only the Gram matrix is
    meaningful there and ``scale`` is None.
    """

    gram: tuple
    dual_coxeter: int
    scale: Fraction = None


def _unit(i, dim):
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(dim))


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_neg(a):
    return tuple(-x for x in a)


def _scaled_identity(dim, scale):
    return tuple(tuple(scale if i == j else Fraction(0) for j in range(dim))
                 for i in range(dim))


@dataclass(frozen=True)
class RootSystem:
    family: FamilyTag
    positive_roots: tuple
    simple_roots: tuple
    ck: CKForm

    def all_roots(self):
        return set(self.positive_roots) | {_vec_neg(r) for r in self.positive_roots}


def build_root_system(family):
    """Construct positive roots, simple roots and the normalized form."""
    kind, n = family.kind, family.rank
    h_vee = family.dual_coxeter

    if kind == "A":
        dim = n + 1
        e = [_unit(i, dim) for i in range(dim)]
        positive = [_vec_sub(e[i], e[j])
                    for i, j in combinations(range(dim), 2)]
        simple = [_vec_sub(e[i], e[i + 1]) for i in range(n)]
        scale = Fraction(1, 2 * (n + 1))
    elif kind in ("B", "C", "D"):
        dim = n
        e = [_unit(i, dim) for i in range(dim)]
        positive = []
        for i, j in combinations(range(n), 2):
            positive.append(_vec_sub(e[i], e[j]))
            positive.append(_vec_add(e[i], e[j]))
        simple = [_vec_sub(e[i], e[i + 1]) for i in range(n - 1)]
        if kind == "B":
            positive.extend(e)
            simple.append(e[n - 1])
            scale = Fraction(1, 2 * (2 * n - 1))
        elif kind == "C":
            positive.extend(_vec_add(v, v) for v in e)
            simple.append(_vec_add(e[n - 1], e[n - 1]))
            scale = Fraction(1, 4 * (n + 1))
        else:
            simple.append(_vec_add(e[n - 2], e[n - 1]))
            scale = Fraction(1, 4 * (n - 1))
    else:  # G2, coordinates in the simple-root basis, alpha1 long
        positive = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
                    (Fraction(1), Fraction(1)), (Fraction(1), Fraction(2)),
                    (Fraction(1), Fraction(3)), (Fraction(2), Fraction(3))]
        simple = positive[:2]
        gram = ((Fraction(1, 4), Fraction(-1, 8)),
                (Fraction(-1, 8), Fraction(1, 12)))
        ck = CKForm(gram=gram, dual_coxeter=h_vee, scale=None)
        return RootSystem(family, tuple(positive), tuple(simple), ck)

    gram = _scaled_identity(dim, scale)
    ck = CKForm(gram=gram, dual_coxeter=h_vee, scale=scale)
    return RootSystem(family, tuple(positive), tuple(simple), ck)


def ck_inner(ck, u, v):
    """Evaluate the normalized form on two coordinate vectors."""
    if len(u) != len(v) or len(u) != len(ck.gram):
        raise ValueError("dimension mismatch")
    total = Fraction(0)
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = ck.gram[i]
        for j, vj in enumerate(v):
            if vj != 0:
                total += ui * row[j] * vj
    return total


def root_string(positive_roots, alpha, beta):
    """The alpha-string through beta: largest p, q with beta - p*alpha
    and beta + q*alpha both roots.

    Undefined (and rejected) for beta = +-alpha.
    """
    if beta == alpha or beta == _vec_neg(alpha):
        raise ValueError("root string through +-alpha is undefined")
    roots = set(positive_roots) | {_vec_neg(r) for r in positive_roots}
    if alpha not in roots or beta not in roots:
        raise ValueError("arguments must be roots")
    p = 0
    current = _vec_sub(beta, alpha)
    while current in roots:
        p += 1
        current = _vec_sub(current, alpha)
    q = 0
    current = _vec_add(beta, alpha)
    while current in roots:
        q += 1
        current = _vec_add(current, alpha)
    return p, q


def structure_constant_sq(rs, alpha, beta):
    """Squared structure constant N^2 for the pair (alpha, beta).

    Zero when alpha + beta is not a root; otherwise q*(p+1)*<a,a>/2 with
    (p, q) the alpha-string through beta.
    """
    target = _vec_add(alpha, beta)
    if target not in rs.all_roots():
        return Fraction(0)
    p, q = root_string(rs.positive_roots, alpha, beta)
    return Fraction(q * (p + 1), 2) * ck_inner(rs.ck, alpha, alpha)


def long_root(rs):
    """Some root of maximal squared length (the normalization witness)."""
    return max(rs.positive_roots, key=lambda r: ck_inner(rs.ck, r, r))
