"""Subgroup-valued operators: closures, derived subgroup, normalizers,
intersections, Frattini subgroups of p-groups and normal-subgroup lattices."""

from .config import LIMITS
from .errors import CapacityError, ContractViolation
from .perm import PermGroup


def subgroup(G, gens):
    """The subgroup of G generated by ``gens``."""
    return PermGroup(list(gens), G.degree)


def _require_in(G, elems, what):
    for g in elems:
        if not G.contains(g):
            raise ContractViolation(f"{what}: element {g.cycle_string()} not in G")


def normal_closure(G, S):
    """Smallest normal subgroup of G containing S.

    Conjugates current generators by G's generators and adds escapees until
    nothing escapes.
    """
    S = list(S)
    _require_in(G, S, "normal_closure")
    H = PermGroup(S, G.degree)
    gens = list(H.generators)
    while True:
        escaped = []
        for h in gens:
            for x in G.generators:
                c = h.conjugate(x)
                if not H.contains(c) and c not in escaped:
                    escaped.append(c)
        if not escaped:
            return H
        gens.extend(escaped)
        H = PermGroup(gens, G.degree)
        gens = list(H.generators)


def derived_subgroup(G):
    comms = []
    gens = G.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            c = a.commutator(b)
            if not c.is_identity():
                comms.append(c)
    return normal_closure(G, comms)


def _check_enumerable(G, what):
    if G.order > LIMITS.enumeration_cap:
        raise CapacityError(what, G.order, LIMITS.enumeration_cap)


def normalizes(x, H):
    return all(h.conjugate(x) in H for h in H.generators)


def normalizer(G, H):
    """N_G(H) by a brute-force scan of G's elements."""
    if not H.is_subgroup_of(G):
        raise ContractViolation("normalizer: H is not a subgroup of G")
    _check_enumerable(G, "normalizer scan")
    gens = []
    N = PermGroup([], G.degree)
    for g in G.elements():
        if g in N:
            continue
        if normalizes(g, H):
            gens.append(g)
            N = PermGroup(list(H.generators) + gens, G.degree)
            if N.order == G.order:
                break
    return PermGroup(list(H.generators) + gens, G.degree)


def subgroup_from_elements(elems, degree):
    """Group generated by ``elems``, keeping only elements that enlarge it."""
    gens = []
    H = PermGroup([], degree)
    for g in sorted(elems):
        if not H.contains(g):
            gens.append(g)
            H = PermGroup(gens, degree)
    return H


def intersection(H, K):
    if H.degree != K.degree:
        raise ContractViolation("intersection: degree mismatch")
    small, big = (H, K) if H.order <= K.order else (K, H)
    _check_enumerable(small, "intersection")
    return subgroup_from_elements([g for g in small.elements() if big.contains(g)], H.degree)


def join(H, K):
    return PermGroup(list(H.generators) + list(K.generators), H.degree)


def is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def frattini_of_p_group(P, p):
    """Phi(P) = P^p [P, P] for a p-group P."""
    if not is_p_power(P.order, p):
        raise ContractViolation(f"frattini_of_p_group: order {P.order} is not a power of {p}")
    D = derived_subgroup(P)
    powers = [g ** p for g in P.generators]
    return PermGroup(list(D.generators) + [x for x in powers if not x.is_identity()], P.degree)


def conjugacy_classes(G):
    """Conjugacy classes as lists, each sorted, ordered by their smallest element."""
    _check_enumerable(G, "conjugacy classes")
    seen = set()
    classes = []
    for g in sorted(G.elements()):
        if g in seen:
            continue
        cls = {g}
        frontier = [g]
        while frontier:
            nxt = []
            for h in frontier:
                for x in G.generators:
                    c = h.conjugate(x)
                    if c not in cls:
                        cls.add(c)
                        nxt.append(c)
            frontier = nxt
        seen |= cls
        classes.append(sorted(cls))
    return classes


def normal_subgroups(G):
    """Every normal subgroup of G, sorted by (order, generator images).

    Built as all joins of normal closures of single conjugacy classes.
    Cached on G.
    """
    if "normal_subgroups" in G._cache:
        return G._cache["normal_subgroups"]
    if G.order > LIMITS.normal_subgroup_cap:
        raise CapacityError("normal subgroup enumeration", G.order, LIMITS.normal_subgroup_cap)
    found = {}

    def add(N):
        key = N.element_set()
        if key in found:
            return False
        found[key] = N
        return True

    add(PermGroup([], G.degree))
    for cls in conjugacy_classes(G):
        # a conjugacy class is closed under conjugation, so it generates a normal subgroup
        add(subgroup_from_elements(cls, G.degree))
    frontier = list(found.values())
    while frontier:
        current = list(found.values())
        new = []
        for A in frontier:
            for B in current:
                if A.is_subgroup_of(B) or B.is_subgroup_of(A):
                    continue
                J = join(A, B)
                if add(J):
                    new.append(J)
        frontier = new
    result = sorted(found.values(), key=PermGroup.sort_key)
    G._cache["normal_subgroups"] = result
    return result
