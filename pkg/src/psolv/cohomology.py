"""Degree-one homology and cohomology with trivial F_p coefficients.

``H_1(N) = N / N^p[N,N]`` is realised as an F_p vector space with an explicit
projection from group elements to coordinates; ``H^1(N) = Hom(N, F_p)`` is its
dual, so every dimension here is a dimension of H_1. Fixed points of a
conjugation action on H^1 are counted through coinvariants of H_1, which have
the same dimension.
"""

from collections import deque
from dataclasses import dataclass, field

from .config import LIMITS
from .errors import CapacityError, ContractViolation
from .linalg import EchelonBasis, FpMatrix
from .perm import PermGroup, Permutation, is_normal, quotient_group
from .subgroups import derived_subgroup, intersection, normalizes
from .sylow import check_prime, o_p, sylow_subgroup


def _log(n, p):
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


class ModPAbelianization:
    """The elementary abelian quotient V(N) = N / N^p[N,N].

    ``basis`` lists elements of N whose images form an F_p basis, chosen
    greedily in generator order; ``chain[j]`` is the subgroup generated by the
    kernel and the first j basis elements, which is what ``project`` sifts
    through.
    """

    def __init__(self, N, p):
        check_prime(p)
        self.source = N
        self.p = p
        D = derived_subgroup(N)
        powers = [g ** p for g in N.generators]
        self.kernel = PermGroup(list(D.generators) + powers, N.degree)
        index = N.order // self.kernel.order
        if index > p ** LIMITS.abelianization_rank_cap:
            raise CapacityError("abelianization size", index, p ** LIMITS.abelianization_rank_cap)
        self.dim = _log(index, p)
        self.basis = []
        self.chain = [self.kernel]
        for g in N.generators:
            if len(self.basis) == self.dim:
                break
            U = PermGroup(list(self.chain[-1].generators) + [g], N.degree)
            if U.order > self.chain[-1].order:
                self.basis.append(g)
                self.chain.append(U)
        # b^{-e} for e = 0..p-1, per basis element
        self._neg_powers = []
        for b in self.basis:
            bi = b.inverse()
            pw = [Permutation.identity(N.degree)]
            for _ in range(p - 1):
                pw.append(pw[-1] * bi)
            self._neg_powers.append(pw)

    def project(self, g):
        """Coordinates of the image of g in F_p^dim."""
        coords = [0] * self.dim
        for j in range(self.dim - 1, -1, -1):
            below = self.chain[j]
            for e, neg in enumerate(self._neg_powers[j]):
                h = g * neg
                if below.contains(h):
                    coords[j] = e
                    g = h
                    break
            else:
                raise ContractViolation(f"project: {g.cycle_string()} is not in the source group")
        return coords

    def __repr__(self):
        return f"ModPAbelianization(order={self.source.order}, p={self.p}, dim={self.dim})"


def mod_p_abelianization(N, p):
    key = ("abelianization", p)
    if key not in N._cache:
        N._cache[key] = ModPAbelianization(N, p)
    return N._cache[key]


def h1_dim(G, p):
    """dim H^1(G, F_p) = dim Hom(G, F_p)."""
    return mod_p_abelianization(G, p).dim


@dataclass
class ConjugationAction:
    module: ModPAbelianization
    actor: PermGroup
    matrices: list = field(default_factory=list)

    def relation_space(self):
        """Span of v - v A_x over basis vectors v and actor generators x."""
        ab = self.module
        span = EchelonBasis(ab.p, ab.dim)
        for A in self.matrices:
            for j in range(ab.dim):
                row = list(A.rows[j])
                row[j] -= 1
                span.add(row)
        return span

    def coinvariant_dim(self):
        return self.module.dim - self.relation_space().rank


def conjugation_action(ab, P):
    """Matrices of conjugation g -> x^-1 g x on V(N), one per generator x of P."""
    N = ab.source
    for x in P.generators:
        if not normalizes(x, N):
            raise ContractViolation("conjugation_action: actor does not normalize the module's group")
    mats = [
        FpMatrix(ab.p, [ab.project(b.conjugate(x)) for b in ab.basis], ab.dim)
        for x in P.generators
    ]
    return ConjugationAction(ab, P, mats)


def h1_fixed_dim(N, P, p):
    """dim H^1(N)^P, computed as the dimension of the coinvariants H_1(N)_P."""
    ab = mod_p_abelianization(N, p)
    if ab.dim == 0:
        for x in P.generators:
            if not normalizes(x, N):
                raise ContractViolation("h1_fixed_dim: P does not normalize N")
        return 0
    return conjugation_action(ab, P).coinvariant_dim()


def coinvariant_inclusion_rank(Mi, Mj, P, p):
    """Rank of the map H_1(Mi)_P -> H_1(Mj)_P induced by inclusion Mi <= Mj.

    Returns ``(dim H_1(Mi)_P, dim H_1(Mj)_P, rank)``.
    """
    if not Mi.is_subgroup_of(Mj):
        raise ContractViolation("coinvariant_inclusion_rank: Mi is not a subgroup of Mj")
    dim_i = h1_fixed_dim(Mi, P, p)
    abj = mod_p_abelianization(Mj, p)
    if abj.dim == 0:
        return dim_i, 0, 0
    W = conjugation_action(abj, P).relation_space()
    dim_j = abj.dim - W.rank
    base_rank = W.rank
    abi = mod_p_abelianization(Mi, p)
    for b in abi.basis:
        W.add(abj.project(b))
    return dim_i, dim_j, W.rank - base_rank


def h1_hom_oracle(N, P, p):
    """log_p of the number of P-invariant homomorphisms N -> F_p, by enumeration.

    Independent of the stabilizer chain and of ModPAbelianization: walks the
    Cayley graph of N, solves the resulting linear relations on generator
    values, enumerates every homomorphism and keeps the P-fixed ones.
    """
    check_prime(p)
    if N.order > LIMITS.hom_oracle_cap:
        raise CapacityError("hom oracle", N.order, LIMITS.hom_oracle_cap)
    gens = list(N.generators)
    m = len(gens)
    if m == 0:
        return 0
    # word vectors (generator exponent sums mod p) along a BFS spanning tree
    e = Permutation.identity(N.degree)
    word = {e: (0,) * m}
    queue = deque([e])
    relations = EchelonBasis(p, m)
    while queue:
        g = queue.popleft()
        wg = word[g]
        for k, s in enumerate(gens):
            h = g * s
            step = list(wg)
            step[k] = (step[k] + 1) % p
            if h not in word:
                word[h] = tuple(step)
                queue.append(h)
            else:
                # phi(g) + phi(s) = phi(h) must hold for every homomorphism phi
                relations.add([a - b for a, b in zip(step, word[h])])
    homs_basis = FpMatrix(p, relations.reduced()[0] or [], m).nullspace()
    for x in P.generators:
        for s in gens:
            if s.conjugate(x) not in word:
                raise ContractViolation("h1_hom_oracle: P does not normalize N")

    def value(v, g):
        return sum(a * b for a, b in zip(v, word[g])) % p

    fixed = 0
    k = len(homs_basis)
    for idx in range(p ** k):
        coeffs = []
        for _ in range(k):
            coeffs.append(idx % p)
            idx //= p
        v = [sum(c * b[j] for c, b in zip(coeffs, homs_basis)) % p for j in range(m)]
        if all(value(v, s.conjugate(x)) == value(v, s) for x in P.generators for s in gens):
            fixed += 1
    return _log(fixed, p)


def lemma1_dims_check(G, N, p):
    """dim H^1(P) == dim H^1(P/M) + dim H^1(M)^P with M = N cap P.

    Requires N normal in G and O^p(N) = N.
    """
    if not is_normal(G, N):
        raise ContractViolation("lemma1_dims_check: N is not normal in G")
    if o_p(N, p).order != N.order:
        raise ContractViolation("lemma1_dims_check: N is not p-perfect")
    P = sylow_subgroup(G, p)
    M = intersection(N, P)
    Q, _ = quotient_group(P, M)
    return h1_dim(P, p) == h1_dim(Q, p) + h1_fixed_dim(M, P, p)
