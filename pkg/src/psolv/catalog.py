"""Named catalog of permutation groups and the matrix-to-permutation conversion
used for the entries defined by 2x2 matrices over small finite fields."""

from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .perm import PermGroup, Permutation, parse_group_text

# ---------------------------------------------------------------- constructions


def symmetric(n):
    if n == 1:
        return PermGroup([], 1)
    return PermGroup(
        [Permutation.from_cycles([(1, 2)], n), Permutation.from_cycles([tuple(range(1, n + 1))], n)],
        n,
    )


def alternating(n):
    if n < 3:
        return PermGroup([], max(n, 1))
    return PermGroup([Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)], n)


def cyclic(n):
    if n == 1:
        return PermGroup([], 1)
    return PermGroup([Permutation.from_cycles([tuple(range(1, n + 1))], n)], n)


def dihedral(order):
    """Dihedral group of the given order (2n), acting on n points (n >= 3)."""
    n = order // 2
    rot = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    refl = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, refl], n)


def quaternion8():
    """Q_8 in its regular representation on 8 points."""
    # elements 1, i, j, k, -1, -i, -j, -k indexed 0..7
    table = {"1": 0, "i": 1, "j": 2, "k": 3}
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    units = ["1", "i", "j", "k"]

    def right_mult(y):
        imgs = []
        for idx in range(8):
            sign = -1 if idx >= 4 else 1
            s, u = mult[(units[idx % 4], y)]
            s *= sign
            imgs.append(table[u] + (0 if s == 1 else 4))
        return Permutation(imgs)

    return PermGroup([right_mult("i"), right_mult("j")], 8)


def direct_product(*groups):
    """External direct product acting on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            imgs = list(range(degree))
            for i, j in enumerate(g.images):
                imgs[offset + i] = offset + j
            gens.append(Permutation(imgs))
        offset += G.degree
    return PermGroup(gens, degree)


class FiniteField:
    """GF(p) or GF(p^2) = F_p[t] / (t^2 - r) for a quadratic non-residue r.

    Elements are encoded as integers ``a + b * p`` meaning ``a + b t``.
    """

    def __init__(self, p, k=1):
        if k not in (1, 2):
            raise InputError("only prime fields and quadratic extensions are supported")
        self.p = p
        self.k = k
        self.q = p**k
        self.r = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1) if k == 2 else 0

    def elem(self, a, b=0):
        return (a % self.p) + (b % self.p) * self.p

    def split(self, x):
        return x % self.p, x // self.p

    def add(self, x, y):
        a, b = self.split(x)
        c, d = self.split(y)
        return self.elem(a + c, b + d)

    def mul(self, x, y):
        a, b = self.split(x)
        c, d = self.split(y)
        return self.elem(a * c + b * d * self.r, a * d + b * c)

    def neg(self, x):
        a, b = self.split(x)
        return self.elem(-a, -b)


def mat_mul(F, A, B):
    return tuple(
        tuple(F.add(F.mul(A[i][0], B[0][j]), F.mul(A[i][1], B[1][j])) for j in range(2))
        for i in range(2)
    )


def mat_det(F, A):
    return F.add(F.mul(A[0][0], A[1][1]), F.neg(F.mul(A[0][1], A[1][0])))


def vec_mat(F, v, A):
    return tuple(F.add(F.mul(v[0], A[0][j]), F.mul(v[1], A[1][j])) for j in range(2))


def matrix_action(F, mats, seeds=None):
    """Permutation group induced by 2x2 matrices acting on row vectors (v -> vA).

    The point set is the union of the orbits of ``seeds`` (default: every
    nonzero vector), sorted by encoding.
    """
    if seeds is None:
        seeds = [(a, b) for a in range(F.q) for b in range(F.q) if (a, b) != (0, 0)]
    points = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for v in frontier:
            for A in mats:
                w = vec_mat(F, v, A)
                if w not in points:
                    points.add(w)
                    nxt.append(w)
        frontier = nxt
    points = sorted(points)
    index = {v: i for i, v in enumerate(points)}
    gens = [Permutation([index[vec_mat(F, v, A)] for v in points]) for A in mats]
    return PermGroup(gens, len(points))


def _sl2_generators(F):
    one, zero = F.elem(1), F.elem(0)
    return [((one, one), (zero, one)), ((zero, F.neg(one)), (one, zero))]


def special_linear_2(p):
    """SL(2, p) on the nonzero vectors of F_p^2."""
    F = FiniteField(p)
    return matrix_action(F, _sl2_generators(F))


def general_linear_2(p):
    F = FiniteField(p)
    omega = next(x for x in range(2, p) if all(pow(x, (p - 1) // q, p) != 1 for q in _primes_of(p - 1))) if p > 2 else 1
    return matrix_action(F, _sl2_generators(F) + [((F.elem(omega), 0), (0, F.elem(1)))])


def _primes_of(n):
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def schur_cover_s5(plus=False):
    """A double cover 2.S5 inside SL(2,25) or its det +-1 extension.

    PGL(2,5) is S5 and embeds in PSL(2,25); lift it by adjoining to SL(2,5)
    the element lambda * [[0,1],[2,0]] with lambda in F_25. lambda^2 = 2
    gives an element of SL(2,25) squaring to -I (transpositions lift to
    order 4); lambda^2 = 3 gives an involution of determinant -1 (the
    isoclinic cover). Either way the kernel of the projection to S5 is
    {+-I}, contained in SL(2,5) = 2.A5. Acts on the orbit of e1 (48 points).
    """
    F = FiniteField(5, 2)  # t^2 = 2
    assert F.r == 2
    lam = F.elem(0, 2) if plus else F.elem(0, 1)  # (2t)^2 = 8 = 3, t^2 = 2
    g = ((0, F.elem(1)), (F.elem(2), 0))
    lifted = tuple(tuple(F.mul(lam, x) for x in row) for row in g)
    mats = _sl2_generators(F) + [lifted]
    return matrix_action(F, mats, seeds=[(F.elem(1), 0)])


# ---------------------------------------------------------------------- catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    construction: str
    expected_order: int
    build: object

    def group(self):
        G = self.build()
        if G.order != self.expected_order:
            raise AssertionError(f"catalog {self.name}: built order {G.order} != {self.expected_order}")
        return G


_ENTRIES = [
    CatalogEntry("C2", "cyclic(2)", 2, lambda: cyclic(2)),
    CatalogEntry("C3", "cyclic(3)", 3, lambda: cyclic(3)),
    CatalogEntry("C6", "cyclic(6)", 6, lambda: cyclic(6)),
    CatalogEntry("C15", "cyclic(15)", 15, lambda: cyclic(15)),
    CatalogEntry("S3", "symmetric(3)", 6, lambda: symmetric(3)),
    CatalogEntry("S4", "symmetric(4)", 24, lambda: symmetric(4)),
    CatalogEntry("S5", "symmetric(5)", 120, lambda: symmetric(5)),
    CatalogEntry("A4", "alternating(4)", 12, lambda: alternating(4)),
    CatalogEntry("A5", "alternating(5)", 60, lambda: alternating(5)),
    CatalogEntry("D8", "dihedral(8)", 8, lambda: dihedral(8)),
    CatalogEntry("Q8", "quaternion8", 8, quaternion8),
    CatalogEntry("SL(2,3)", "matrix_action(F3, SL)", 24, lambda: special_linear_2(3)),
    CatalogEntry("GL(2,3)", "matrix_action(F3, GL)", 48, lambda: general_linear_2(3)),
    CatalogEntry("SL(2,5)", "matrix_action(F5, SL)", 120, lambda: special_linear_2(5)),
    CatalogEntry("2.S5", "matrix_action(F25, SL(2,5) + lifted PGL(2,5) involution)", 240, schur_cover_s5),
    CatalogEntry(
        "2.S5-plus", "matrix_action(F25, SL(2,5) + det -1 lift)", 240, lambda: schur_cover_s5(plus=True)
    ),
    CatalogEntry("A5xC2", "direct_product(A5, C2)", 120, lambda: direct_product(alternating(5), cyclic(2))),
    CatalogEntry("A5xA5", "direct_product(A5, A5)", 3600, lambda: direct_product(alternating(5), alternating(5))),
    CatalogEntry("A5xS4", "direct_product(A5, S4)", 1440, lambda: direct_product(alternating(5), symmetric(4))),
]

CATALOG = {e.name: e for e in _ENTRIES}

# the solvable members, used by the classical (Huppert) p-length check
SOLVABLE = ("C2", "C3", "C6", "C15", "S3", "S4", "A4", "D8", "Q8", "SL(2,3)", "GL(2,3)")

_built = {}


def catalog_names():
    return [e.name for e in _ENTRIES]


def catalog_get(name):
    """Build (and memoise) the named catalog group."""
    if name not in CATALOG:
        raise InputError(f"unknown group {name!r}; catalog: {', '.join(catalog_names())}")
    if name not in _built:
        _built[name] = CATALOG[name].group()
    return _built[name]


def load_group_file(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_group_text(text)
