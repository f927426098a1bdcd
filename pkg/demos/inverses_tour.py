"""Moore-Penrose, Drazin and weighted Drazin inverses side by side, with their axiom checks."""

from qcramer import drazin, mp_inverse, parse_matrix, verify_drazin, verify_penrose, verify_wdrazin, wdrazin
from qcramer.ginverse import DRAZIN_ROUTES
from qcramer.wdrazin import WDRAZIN_ROUTES

A = parse_matrix("2 3\n1; i; 0\nj; -k; 0\n")
res = mp_inverse(A)
print(f"A has rank {res.rank}; A^+ (denominator {res.denominator}):")
print(res.matrix)
print({r.axiom_id: r.holds for r in verify_penrose(A, res.matrix)})

N = parse_matrix("3 3\n1; i; 0\n0; 0; 1\n0; 0; 0\n")
print("Drazin inverse by every route:")
for route in DRAZIN_ROUTES:
    try:
        print(route, drazin(N, route).matrix == drazin(N).matrix)
    except Exception as exc:
        print(route, "unavailable:", exc)
print({r.axiom_id: r.holds for r in verify_drazin(N, drazin(N).matrix)})

W = parse_matrix("3 2\n1; 0\nk; 1\n0; i\n")
print("weighted Drazin inverse by every route:")
base = wdrazin(A, W, "cline-oracle").matrix
for route in WDRAZIN_ROUTES:
    try:
        print(route, wdrazin(A, W, route).matrix == base)
    except Exception as exc:
        print(route, "unavailable:", exc)
print({r.axiom_id: r.holds for r in verify_wdrazin(A, W, base)})
