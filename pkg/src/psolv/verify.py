"""Invariant suites run by ``psolv verify``.

Each suite maps a (name, group, prime) case to a list of ``Case`` records.
"""

from dataclasses import asdict, dataclass

from .catalog import SOLVABLE, catalog_get, catalog_names
from .cohomology import h1_dim, h1_fixed_dim, h1_hom_oracle, lemma1_dims_check
from .config import LIMITS
from .filtrations import (
    analyze,
    exhaustive_lengths,
    generalized_p_length,
    is_p_solvable_direct,
    non_p_solvable_length,
    p_length,
    p_perfect_filtration,
    prop4_records,
    tate_corollary_cases,
    tate_criterion_check,
    theorem_a_filtration,
)
from .perm import closure_elements, quotient_group
from .subgroups import intersection, normal_subgroups
from .sylow import is_p_nilpotent, min_generators_p_group, o_p, o_p_prime, prime_divisors, sylow_subgroup

DEFAULT_PRIMES = (2, 3, 5, 7)


@dataclass
class Case:
    suite: str
    group: str
    prime: int
    passed: bool
    expected: object
    actual: object

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.suite:<10} {self.group:<10} p={self.prime}  expected={self.expected}  actual={self.actual}"

    def to_dict(self):
        return asdict(self)


def _d(G, p):
    return min_generators_p_group(sylow_subgroup(G, p), p)


def suite_theorem_a(name, G, p):
    f = theorem_a_filtration(G, p)
    direct = is_p_solvable_direct(G, p)
    out = [
        Case("theorem-a", name, p, f.verdict == direct, {"p_solvable": direct},
             {"lhs": f.lhs_dim, "rhs": f.rhs_dim, "verdict": f.verdict}),
        # p-solvable iff the filtration stabilises at the trivial group
        Case("theorem-a", name, p, (f.stable.order == 1) == f.verdict, {"stable_trivial": f.verdict},
             {"stable_order": f.stable.order}),
    ]
    if f.stable.order > 1:
        out.append(Case("theorem-a", name, p, h1_dim(f.stable, p) == 0, {"h1_stable": 0},
                        {"h1_stable": h1_dim(f.stable, p)}))
    return out


def suite_theorem_b(name, G, p):
    l, d = p_length(G, p), _d(G, p)
    return [Case("theorem-b", name, p, l <= d, f"p_length <= d = {d}", {"p_length": l})]


def suite_huppert(name, G, p):
    d = _d(G, p)
    out = []
    if name in SOLVABLE:
        l = p_length(G, p)
        out.append(Case("huppert", name, p, l <= d, f"p_length <= d = {d}", {"p_length": l}))
    nps = non_p_solvable_length(G, p)
    out.append(Case("huppert", name, p, nps <= d, f"non_p_solvable_length <= d = {d}",
                    {"non_p_solvable_length": nps}))
    return out


def suite_lemma1(name, G, p):
    P = sylow_subgroup(G, p)
    out = []
    for N in normal_subgroups(G):
        if o_p(N, p).order != N.order:
            continue
        M = intersection(N, P)
        Q, _ = quotient_group(P, M)
        dims = (h1_dim(P, p), h1_dim(Q, p), h1_fixed_dim(M, P, p))
        ok = lemma1_dims_check(G, N, p)
        out.append(Case("lemma1", name, p, ok and dims[0] == dims[1] + dims[2],
                        f"|N|={N.order}: dim H1(P) = dim H1(P/M) + dim H1(M)^P",
                        {"h1_P": dims[0], "h1_P_mod_M": dims[1], "h1_M_fixed": dims[2]}))
    return out


def suite_tate(name, G, p):
    P = sylow_subgroup(G, p)
    eq = h1_dim(G, p) == h1_dim(P, p)
    nil = is_p_nilpotent(G, p)
    return [Case("tate", name, p, tate_criterion_check(G, p), {"dims_equal_iff_p_nilpotent": True},
                 {"dims_equal": eq, "p_nilpotent": nil})]


def suite_tate_cor(name, G, p):
    if G.order > LIMITS.normal_subgroup_cap:
        return []
    out = []
    for N, qualifies, nil in tate_corollary_cases(G, p):
        if qualifies:
            out.append(Case("tate-cor", name, p, bool(nil), f"|N|={N.order} p-nilpotent", {"p_nilpotent": nil}))
    return out


def suite_prop4(name, G, p):
    filt = p_perfect_filtration(G, p)
    out = []
    for r in prop4_records(G, p, filt):
        out.append(Case("prop4", name, p, r.injective and r.iso_law,
                        f"J{r.i}->J{r.j} injective; iso iff p !| {r.index}",
                        {"dims": [r.dim_i, r.dim_j], "rank": r.rank}))
    d = _d(G, p)
    out.append(Case("prop4", name, p, filt.pperfect_length <= d, f"pperfect_length <= d = {d}",
                    {"pperfect_length": filt.pperfect_length, "members": filt.member_orders()}))
    return out


def suite_oracle(name, G, p):
    P = sylow_subgroup(G, p)
    candidates = [M for M, _ in theorem_a_filtration(G, p).terms]
    candidates += [intersection(J, P) for J in p_perfect_filtration(G, p).members]
    if G.order <= LIMITS.normal_subgroup_cap:
        candidates += [intersection(N, P) for N in normal_subgroups(G)]
    candidates += [P, G]
    seen = set()
    out = []
    for N in sorted(candidates, key=lambda H: H.order):
        if N.order > LIMITS.hom_oracle_cap or N.element_set() in seen:
            continue
        seen.add(N.element_set())
        a, b = h1_fixed_dim(N, P, p), h1_hom_oracle(N, P, p)
        out.append(Case("oracle", name, p, a == b, {"oracle": b}, {"|N|": N.order, "h1_fixed_dim": a}))
    return out


def suite_lengths(name, G, p):
    d = _d(G, p)
    gen = generalized_p_length(G, p)
    out = [Case("lengths", name, p, gen <= 2 * d, f"generalized_p_length <= 2d = {2 * d}",
                {"generalized_p_length": gen})]
    if G.order <= LIMITS.exhaustive_length_cap:
        ex = exhaustive_lengths(G, p)
        out.append(Case("lengths", name, p, ex.generalized_p_length == gen,
                        {"exhaustive_minimum": ex.generalized_p_length}, {"canonical": gen}))
    report = analyze(G, p, name)
    out.append(Case("lengths", name, p, report.consistent(), "report consistent",
                    {"bounds": report.bound_checks, "p_solvable": report.p_solvable}))
    return out


def suite_kernel(name, G, p):
    out = []
    if G.order <= 10**4:
        n = len(closure_elements(G.generators, G.degree))
        out.append(Case("kernel", name, p, n == G.order, {"closure": n}, {"chain_order": G.order}))
    subs = [sylow_subgroup(G, p), o_p(G, p), o_p_prime(G, p)]
    for H in subs:
        out.append(Case("kernel", name, p, G.order % H.order == 0 and H.is_subgroup_of(G),
                        "Lagrange", {"|G|": G.order, "|H|": H.order}))
    for N in (o_p(G, p), o_p_prime(G, p)):
        Q, _ = quotient_group(G, N)
        out.append(Case("kernel", name, p, Q.order * N.order == G.order, "|G/N| |N| = |G|",
                        {"|G/N|": Q.order, "|N|": N.order}))
    return out


SUITES = {
    "theorem-a": suite_theorem_a,
    "theorem-b": suite_theorem_b,
    "lemma1": suite_lemma1,
    "tate": suite_tate,
    "tate-cor": suite_tate_cor,
    "prop4": suite_prop4,
    "huppert": suite_huppert,
    "oracle": suite_oracle,
    "lengths": suite_lengths,
    "kernel": suite_kernel,
}


def default_primes(G):
    return [q for q in prime_divisors(G.order) if q in DEFAULT_PRIMES]


def run(suite, groups=None, primes=None):
    """Run one suite (or "all") over catalog groups and primes; sorted by group then prime."""
    names = catalog_names() if groups is None else list(groups)
    suites = list(SUITES) if suite == "all" else [suite]
    cases = []
    for name in sorted(names):
        G = catalog_get(name)
        for p in sorted(primes if primes is not None else default_primes(G)):
            for s in suites:
                cases.extend(SUITES[s](name, G, p))
    return cases
