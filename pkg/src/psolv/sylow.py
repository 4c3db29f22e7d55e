"""Sylow subgroups, the residuals O^p and O^{p'}, p-nilpotency and
generator counts of p-groups."""

import math

from .config import LIMITS
from .errors import CapacityError, ContractViolation, InputError
from .perm import PermGroup
from .subgroups import frattini_of_p_group, is_p_power, normal_closure, normalizes


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


def check_prime(p):
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise InputError(f"{p!r} is not a prime")
    if p > LIMITS.max_prime:
        raise InputError(f"prime {p} exceeds {LIMITS.max_prime}")
    return p


def p_part(n, p):
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def prime_divisors(n):
    """Primes dividing n, ascending. Group orders divide degree!, so their
    prime factors are small and trial division is exact and cheap."""
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def _cached(G, key, compute):
    if key not in G._cache:
        G._cache[key] = compute()
    return G._cache[key]


def sylow_subgroup(G, p):
    """A Sylow p-subgroup of G, found by extension inside normalizers.

    Seeds with the p-part of an element of maximal p-power order, then
    repeatedly adjoins a p-element of N_G(P) outside P. Deterministic in the
    element enumeration order.
    """
    check_prime(p)
    return _cached(G, ("sylow", p), lambda: _sylow(G, p))


def _sylow(G, p):
    target = p_part(G.order, p)
    if target == 1:
        return PermGroup([], G.degree)
    if is_p_power(G.order, p):
        return G
    if G.order > LIMITS.enumeration_cap:
        raise CapacityError("Sylow search", G.order, LIMITS.enumeration_cap)
    elems = G.elements()
    best, best_order = None, 1
    for g in elems:
        o = g.order()
        q = p_part(o, p)
        if q > best_order:
            best, best_order = g ** (o // q), q
            if q == target:
                break
    P = PermGroup([best], G.degree)
    while P.order < target:
        # any p-element of N_G(P) \ P extends P to a larger p-group
        for g in elems:
            if g in P or not is_p_power(g.order(), p) or not normalizes(g, P):
                continue
            P = PermGroup(list(P.generators) + [g], G.degree)
            break
        else:
            raise AssertionError("Sylow extension stalled")
    return P


def o_p(G, p):
    """O^p(G): normal closure of Sylow q-subgroups for every prime q != p."""
    check_prime(p)

    def compute():
        gens = []
        for q in prime_divisors(G.order):
            if q != p:
                gens.extend(sylow_subgroup(G, q).generators)
        return normal_closure(G, gens)

    return _cached(G, ("O^p", p), compute)


def o_p_prime(G, p):
    """O^{p'}(G): normal closure of a Sylow p-subgroup."""
    check_prime(p)
    return _cached(G, ("O^p'", p), lambda: normal_closure(G, sylow_subgroup(G, p).generators))


def is_p_nilpotent(G, p):
    return o_p(G, p).order % p != 0


def min_generators_p_group(P, p):
    """Minimal number of generators: log_p |P / Phi(P)| (Burnside basis theorem)."""
    check_prime(p)
    if not is_p_power(P.order, p):
        raise ContractViolation(f"min_generators_p_group: order {P.order} is not a power of {p}")
    index = P.order // frattini_of_p_group(P, p).order
    d = 0
    while index > 1:
        index //= p
        d += 1
    return d
