from dataclasses import dataclass


@dataclass
class Limits:
    """Size caps. Exceeding any of them raises CapacityError."""

    enumeration_cap: int = 10**6
    quotient_degree_cap: int = 10**5
    max_degree: int = 10**5
    # normal-subgroup lattice enumeration (Tate corollary, exhaustive lengths)
    normal_subgroup_cap: int = 10**4
    hom_oracle_cap: int = 5000
    exhaustive_length_cap: int = 2000
    # |N / N^p[N,N]| <= p ** abelianization_rank_cap
    abelianization_rank_cap: int = 20
    max_prime: int = 2**31


LIMITS = Limits()
