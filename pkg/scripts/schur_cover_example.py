"""The double covers of S5 at p = 2: generalized 2-length 3 with a
2-generated Sylow subgroup, while the p-length and the p-perfect length
stay within d = 2."""

from psolv.catalog import catalog_get
from psolv.filtrations import analyze, canonical_series, p_perfect_filtration


def show(name):
    G = catalog_get(name)
    r = analyze(G, 2, name)
    s = canonical_series(G, 2)
    print(f"{name}: order {G.order}, degree {G.degree}, Sylow-2 order {r.sylow_order}, d = {r.d}")
    for a, b, tag in zip(s.terms, s.terms[1:], s.tags):
        print(f"  {a.order:>4} > {b.order:<4} factor {a.order // b.order:>3}  {tag}")
    print(f"  p-length {r.p_length}, non-2-solvable length {r.non_p_solvable_length}, "
          f"generalized {r.generalized_p_length} (exhaustive {r.generalized_p_length_exhaustive})")
    f = p_perfect_filtration(G, 2)
    print(f"  2-perfect filtration {f.member_orders()}, length {f.pperfect_length}")
    print(f"  H^1(P) dim {r.theorem_a_lhs}, Theorem A sum {r.theorem_a_rhs}")
    print()


if __name__ == "__main__":
    show("2.S5")
    show("2.S5-plus")
