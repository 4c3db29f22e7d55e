"""Table of d, p-length, non-p-solvable length, generalized p-length and
p-perfect length for every catalog group and prime dividing its order.

Rows where the generalized length exceeds d are marked with '*'.
"""

from psolv.catalog import catalog_get, catalog_names
from psolv.filtrations import analyze
from psolv.verify import default_primes


def main():
    head = f"{'group':<10} {'p':>2} {'|G|':>5} {'d':>2} {'l_p':>3} {'nps':>3} {'gen':>3} {'exh':>4} {'pp':>3}"
    print(head)
    print("-" * len(head))
    for name in catalog_names():
        G = catalog_get(name)
        for p in default_primes(G):
            r = analyze(G, p, name)
            exh = "-" if r.generalized_p_length_exhaustive is None else r.generalized_p_length_exhaustive
            mark = " *" if r.generalized_p_length > r.d else ""
            print(f"{name:<10} {p:>2} {r.order:>5} {r.d:>2} {r.p_length:>3} {r.non_p_solvable_length:>3} "
                  f"{r.generalized_p_length:>3} {exh!s:>4} {r.pperfect_length:>3}{mark}")


if __name__ == "__main__":
    main()
