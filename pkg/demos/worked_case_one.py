"""Solve W A W X = D for a 4x3 quaternion matrix and see why D is rejected."""

from qcramer import InconsistentEquationError, mat_mul, mat_pow, parse_matrix, rank, solve_left, wdrazin
from qcramer.wdrazin import weighted_index

A = parse_matrix("""4 3
0; i; 0
k; 1; i
1; 0; 0
1; -k; -j
""")
W = parse_matrix("""3 4
k; 0; i; 0
-j; k; 0; 1
0; 1; 0; -k
""")
D = parse_matrix("""3 2
k; i
i; -j
1; -i
""")

k = weighted_index(A, W)
print(f"k = {k}, rank W = {rank(W)}, rank (WA)^k = {rank(mat_pow(mat_mul(W, A), k))}")
print("weighted Drazin inverse:")
print(wdrazin(A, W).matrix)

try:
    solve_left(A, W, D)
except InconsistentEquationError as exc:
    rep = exc.report
    print("D is not in the range of (WA)^k, so no restricted solution exists.")
    print("best-effort X = A_{d,W} D:")
    print(rep.X)
    print("W A W X - D:")
    print(rep.residual)

# the weight has rank 3 < 4 rows of A, so the W^+ (WA)^D expansion is unavailable
for route in ("i", "ii", "composition"):
    try:
        solve_left(A, W, D, route=route, strict=False)
        print(f"route {route}: available")
    except Exception as exc:
        print(f"route {route}: {exc}")
