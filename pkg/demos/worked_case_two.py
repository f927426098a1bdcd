"""Two-sided equation W1 A W1 X W2 B W2 = D with Hermitian products AW1 and W2B."""

from qcramer import build_d_vectors, mat_mul, parse_matrix, solve_two_sided
from qcramer.qmatrix import is_hermitian

A = parse_matrix("3 4\nk; 0; i; 0\n-j; k; 0; 1\n0; 1; 0; -k\n")
W1 = parse_matrix("4 3\nk; -j; 0\n0; k; 1\ni; 0; 0\n0; 1; -k\n")
W2 = parse_matrix("3 2\nk; -i\nj; 0\n0; 1\n")
D = parse_matrix("4 2\ni; -1\nk; 0\n0; j\n-1; 0\n")

for label, b_text in (("b21 = j", "2 3\nk; j; 0\nj; 0; 1\n"), ("b21 = i", "2 3\nk; j; 0\ni; 0; 1\n")):
    B = parse_matrix(b_text)
    herm = is_hermitian(mat_mul(W2, B))
    rep = solve_two_sided(A, W1, D, B, W2, strict=False)
    print(f"{label}: W2 B Hermitian: {herm}; route {rep.route}; k = {rep.k}; consistent: {rep.consistent}")
    print(rep.X)
    if herm:
        dv = build_d_vectors(A, W1, B, W2, D, k1=1, k2=1)
        print("D-bar with exponents (1, 1):")
        print(dv.Dbar)
        print("d^B vectors as columns:")
        print(dv.d_B)
        print(f"denominators: {dv.den_A} and {dv.den_B}")
