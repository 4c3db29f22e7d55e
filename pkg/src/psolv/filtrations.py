"""Normal series, length invariants and the p-solvability verifiers.

Lengths are read off one canonical normal series built by alternately
stripping p'-heads (O^{p'}) and p-heads (O^p) and, at a term R with
O^p(R) = O^{p'}(R) = R != 1, descending by a single chief factor of G.
Every gap of that series is a p-group, a p'-group or a non-p-solvable chief
factor of G, so it is admissible for all three lengths.
"""

import random
from dataclasses import dataclass, field

from .cohomology import coinvariant_inclusion_rank, h1_dim, h1_fixed_dim
from .config import LIMITS
from .errors import CapacityError, ContractViolation, InvariantFailure
from .perm import PermGroup, is_normal
from .subgroups import frattini_of_p_group, intersection, is_p_power, normal_subgroups
from .sylow import check_prime, is_p_nilpotent, min_generators_p_group, o_p, o_p_prime, sylow_subgroup

P_GROUP = "p-group"
P_PRIME_GROUP = "p'-group"
NON_P_SOLVABLE = "non-p-solvable-chief"


def factor_kind(order, p):
    """Classify a factor of the given order; chief factors only for the last case."""
    if order % p:
        return P_PRIME_GROUP
    if is_p_power(order, p):
        return P_GROUP
    return NON_P_SOLVABLE


def _proper_normal_below(G, R):
    """G-normal subgroups properly contained in R."""
    return [N for N in normal_subgroups(G) if N.order < R.order and N.is_subgroup_of(R)]


def maximal_normal_below(G, R, rng=None):
    """A maximal G-normal subgroup properly inside R, so R/N is a chief factor of G.

    Ties go to the largest order, then the smallest generator images; with
    ``rng`` the choice among maximal candidates is randomised instead.
    """
    below = _proper_normal_below(G, R)
    maximal = [
        N for N in below
        if not any(M.order > N.order and N.is_subgroup_of(M) for M in below)
    ]
    if rng is not None:
        return rng.choice(maximal)
    return min(maximal, key=lambda N: (-N.order, N.sort_key()))


def chief_series(G, seed=None):
    """Descending chief series [G, ..., 1].

    ``seed`` randomises the choice among maximal normal subgroups; the
    chief factors are the same up to order (Jordan-Hoelder).
    """
    rng = random.Random(seed) if seed is not None else None
    series = [G]
    R = G
    while R.order > 1:
        R = maximal_normal_below(G, R, rng)
        series.append(R)
    return series


def chief_factor_orders(G, seed=None):
    s = chief_series(G, seed)
    return [a.order // b.order for a, b in zip(s, s[1:])]


def is_p_solvable_direct(G, p, seed=None):
    """Every chief factor is a p-group or a p'-group.

    Past the normal-subgroup cap the canonical series stands in for a chief
    series; its gaps are p-groups, p'-groups or non-p-solvable chief factors,
    so the answer is the same.
    """
    check_prime(p)
    if G.order % p or is_p_power(G.order, p):
        return True
    if G.order > LIMITS.normal_subgroup_cap:
        return NON_P_SOLVABLE not in canonical_series(G, p).tags
    return all(factor_kind(f, p) != NON_P_SOLVABLE for f in chief_factor_orders(G, seed))


def non_p_solvable_length(G, p, seed=None):
    check_prime(p)
    if G.order % p or is_p_power(G.order, p):
        return 0
    return sum(factor_kind(f, p) == NON_P_SOLVABLE for f in chief_factor_orders(G, seed))


# --------------------------------------------------------- canonical series


@dataclass
class CanonicalSeries:
    p: int
    terms: list  # G = terms[0] > ... > terms[-1] = 1
    tags: list  # tags[i] describes terms[i] / terms[i + 1]

    def orders(self):
        return [T.order for T in self.terms]

    def count(self, *kinds):
        return sum(t in kinds for t in self.tags)


def canonical_series(G, p):
    check_prime(p)
    key = ("canonical_series", p)
    if key in G._cache:
        return G._cache[key]
    terms = [G]
    tags = []
    R = G
    while R.order > 1:
        A = o_p_prime(R, p)
        if A.order < R.order:
            terms.append(A)
            tags.append(P_PRIME_GROUP)
            R = A
            continue
        B = o_p(R, p)
        if B.order < R.order:
            terms.append(B)
            tags.append(P_GROUP)
            R = B
            continue
        # R is p-perfect with no p'-quotient: peel one non-p-solvable chief factor
        N = maximal_normal_below(G, R)
        if factor_kind(R.order // N.order, p) != NON_P_SOLVABLE:
            raise InvariantFailure("chief descent produced a p-solvable factor")
        terms.append(N)
        tags.append(NON_P_SOLVABLE)
        R = N
    series = CanonicalSeries(p, terms, tags)
    G._cache[key] = series
    return series


def p_length(G, p):
    """Number of p-group factors in the canonical series."""
    return canonical_series(G, p).count(P_GROUP)


def generalized_p_length(G, p):
    """Number of factors of order divisible by p in the canonical series."""
    return canonical_series(G, p).count(P_GROUP, NON_P_SOLVABLE)


@dataclass
class ExhaustiveLengths:
    generalized_p_length: int
    p_length: int
    normal_subgroups: int


def exhaustive_lengths(G, p):
    """Minimum over every admissible normal series of G, by dynamic programming
    on the lattice of normal subgroups.

    A gap N > M is admissible when N/M is a p-group, a p'-group, or a
    non-p-solvable chief factor of G. Returns the minimal number of
    p-divisible gaps and, separately, the minimal number of p-group gaps.
    """
    check_prime(p)
    if G.order > LIMITS.exhaustive_length_cap:
        raise CapacityError("exhaustive length search", G.order, LIMITS.exhaustive_length_cap)
    lattice = normal_subgroups(G)  # ascending order
    below = {
        i: {j for j in range(i) if lattice[j].order < N.order and lattice[j].is_subgroup_of(N)}
        for i, N in enumerate(lattice)
    }
    inf = float("inf")
    gen = [inf] * len(lattice)
    plen = [inf] * len(lattice)
    gen[0] = plen[0] = 0
    for i in range(1, len(lattice)):
        for j in below[i]:
            f = lattice[i].order // lattice[j].order
            kind = factor_kind(f, p)
            if kind == NON_P_SOLVABLE:
                # only chief factors: nothing normal strictly between
                if any(j in below[k] for k in below[i]):
                    continue
            gen[i] = min(gen[i], gen[j] + (kind != P_PRIME_GROUP))
            plen[i] = min(plen[i], plen[j] + (kind == P_GROUP))
    return ExhaustiveLengths(int(gen[-1]), int(plen[-1]), len(lattice))


# ---------------------------------------------------------------- Theorem A


@dataclass
class TheoremAFiltration:
    p: int
    ambient: PermGroup
    sylow: PermGroup
    terms: list  # (M_i, dim H^1(M_i)^P) for i = 1..t
    stable: PermGroup
    lhs_dim: int

    @property
    def rhs_dim(self):
        return sum(d for _, d in self.terms)

    @property
    def verdict(self):
        return self.lhs_dim == self.rhs_dim

    def term_orders(self):
        return [M.order for M, _ in self.terms]

    def term_dims(self):
        return [d for _, d in self.terms]


def theorem_a_filtration(G, p):
    """M_1 = O^{p'}(G), M_i = O^{p'}(O^p(M_{i-1})), up to the first repeat.

    Terms past the stabilisation index add nothing: the stable term equals
    its own O^p, so its H^1 vanishes.
    """
    check_prime(p)
    P = sylow_subgroup(G, p)
    M = o_p_prime(G, p)
    terms = []
    while True:
        terms.append((M, h1_fixed_dim(M, P, p)))
        nxt = o_p_prime(o_p(M, p), p)
        if nxt.order == M.order:
            break
        M = nxt
    return TheoremAFiltration(p, G, P, terms, M, h1_dim(P, p))


def theorem_a_criterion(G, p):
    """(dim H^1(P), sum of dim H^1(M_i)^P, whether they agree)."""
    f = theorem_a_filtration(G, p)
    return f.lhs_dim, f.rhs_dim, f.verdict


# ------------------------------------------------------- p-perfect filtrations


def is_p_perfect(G, p):
    """O^p(G) = G, cross-checked against H^1(G, F_p) = 0."""
    by_residual = o_p(G, p).order == G.order
    by_cohomology = h1_dim(G, p) == 0
    if by_residual != by_cohomology:
        raise InvariantFailure(f"p-perfect characterisations disagree for order {G.order}, p={p}")
    return by_residual


@dataclass
class PPerfectFiltration:
    p: int
    ambient: PermGroup
    members: list
    # per gap: tags of the canonical-series factors the gap is made of
    factor_tags: list = field(default_factory=list)

    @property
    def pperfect_length(self):
        p = self.p
        return sum(
            (a.order // b.order) % p == 0 for a, b in zip(self.members, self.members[1:])
        )

    def member_orders(self):
        return [J.order for J in self.members]


def p_perfect_filtration(G, p):
    """G, 1 and every p-perfect term of the canonical series."""
    series = canonical_series(G, p)
    keep = [0]
    for i in range(1, len(series.terms) - 1):
        if is_p_perfect(series.terms[i], p):
            keep.append(i)
    last = len(series.terms) - 1
    if last > 0:
        keep.append(last)
    members = [series.terms[i] for i in keep]
    tags = [tuple(series.tags[a:b]) for a, b in zip(keep, keep[1:])]
    return PPerfectFiltration(p, G, members, tags)


def check_pperfect_filtration(G, p, filt):
    """Raise ContractViolation unless ``filt`` is a p-perfect filtration of G."""
    m = filt.members
    if not m or m[0].order != G.order or m[-1].order != 1:
        raise ContractViolation("filtration must run from G down to 1")
    for a, b in zip(m, m[1:]):
        if not b.is_subgroup_of(a):
            raise ContractViolation("filtration is not descending")
    for J in m:
        if not is_normal(G, J):
            raise ContractViolation("filtration member is not normal in G")
    for J in m[1:-1]:
        if not is_p_perfect(J, p):
            raise ContractViolation("filtration member below the top is not p-perfect")


@dataclass
class Prop4Record:
    i: int
    j: int
    dim_i: int
    dim_j: int
    rank: int
    index: int
    injective: bool
    iso_law: bool


def prop4_records(G, p, filt):
    """For every i >= j: the map H_1(M_i)_P -> H_1(M_j)_P, M_k = J_k cap P."""
    check_pperfect_filtration(G, p, filt)
    P = sylow_subgroup(G, p)
    Ms = [intersection(J, P) for J in filt.members]
    out = []
    for i in range(len(Ms)):
        for j in range(i + 1):
            dim_i, dim_j, rank = coinvariant_inclusion_rank(Ms[i], Ms[j], P, p)
            index = filt.members[j].order // filt.members[i].order
            injective = rank == dim_i
            iso = injective and dim_i == dim_j
            out.append(Prop4Record(i, j, dim_i, dim_j, rank, index, injective, iso == (index % p != 0)))
    return out


def prop4_check(G, p, filt):
    return all(r.injective and r.iso_law for r in prop4_records(G, p, filt))


def coinvariant_dims(G, p, filt):
    P = sylow_subgroup(G, p)
    return [h1_fixed_dim(intersection(J, P), P, p) for J in filt.members]


# ------------------------------------------------------------ Tate and friends


def tate_criterion_check(G, p):
    """[dim H^1(G) == dim H^1(P)] iff G is p-nilpotent."""
    P = sylow_subgroup(G, p)
    return (h1_dim(G, p) == h1_dim(P, p)) == is_p_nilpotent(G, p)


def tate_corollary_cases(G, p):
    """(N, qualifies, p-nilpotent) for every normal N of G."""
    P = sylow_subgroup(G, p)
    Phi = frattini_of_p_group(P, p)
    out = []
    for N in normal_subgroups(G):
        qualifies = intersection(N, P).is_subgroup_of(Phi)
        out.append((N, qualifies, is_p_nilpotent(N, p) if qualifies else None))
    return out


def tate_corollary_check(G, p):
    """Every normal N with N cap P <= Phi(P) is p-nilpotent."""
    check_prime(p)
    return all(ok for _, q, ok in tate_corollary_cases(G, p) if q)


# ------------------------------------------------------------------- analyze


@dataclass
class AnalysisReport:
    group: str
    p: int
    order: int
    sylow_order: int
    d: int
    h1_dim_g: int
    h1_dim_p: int
    p_solvable: dict
    theorem_a_lhs: int
    theorem_a_rhs: int
    theorem_a_term_orders: list
    theorem_a_term_dims: list
    p_length: int
    non_p_solvable_length: int
    generalized_p_length: int
    generalized_p_length_exhaustive: object  # int, or None past the cap
    pperfect_length: int
    canonical_series_orders: list
    canonical_series_tags: list
    pperfect_member_orders: list
    bound_checks: dict

    def consistent(self):
        return self.p_solvable["criterion"] == self.p_solvable["direct"] and all(self.bound_checks.values())

    def to_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def analyze(G, p, name="G"):
    check_prime(p)
    P = sylow_subgroup(G, p)
    d = min_generators_p_group(P, p)
    taf = theorem_a_filtration(G, p)
    series = canonical_series(G, p)
    filt = p_perfect_filtration(G, p)
    l = series.count(P_GROUP)
    gen = series.count(P_GROUP, NON_P_SOLVABLE)
    nps = non_p_solvable_length(G, p)
    exhaustive = exhaustive_lengths(G, p).generalized_p_length if G.order <= LIMITS.exhaustive_length_cap else None
    return AnalysisReport(
        group=name,
        p=p,
        order=G.order,
        sylow_order=P.order,
        d=d,
        h1_dim_g=h1_dim(G, p),
        h1_dim_p=taf.lhs_dim,
        p_solvable={"criterion": taf.verdict, "direct": is_p_solvable_direct(G, p)},
        theorem_a_lhs=taf.lhs_dim,
        theorem_a_rhs=taf.rhs_dim,
        theorem_a_term_orders=taf.term_orders(),
        theorem_a_term_dims=taf.term_dims(),
        p_length=l,
        non_p_solvable_length=nps,
        generalized_p_length=gen,
        generalized_p_length_exhaustive=exhaustive,
        pperfect_length=filt.pperfect_length,
        canonical_series_orders=series.orders(),
        canonical_series_tags=list(series.tags),
        pperfect_member_orders=filt.member_orders(),
        bound_checks={
            "p_length_le_d": l <= d,
            "non_p_solvable_length_le_d": nps <= d,
            "pperfect_length_le_d": filt.pperfect_length <= d,
            "generalized_p_length_le_2d": gen <= 2 * d,
        },
    )
