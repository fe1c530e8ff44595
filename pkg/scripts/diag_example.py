"""Print D_1..D_4 on b1^b2 for diag(a,b,c) and the two vanishing checks."""
from hasse_schmidt.arith import MultiPoly, symbols
from hasse_schmidt.cayley_hamilton import ch_operator_series, char_poly_via_top_form
from hasse_schmidt.exterior import Multivector
from hasse_schmidt.hs import apply_series, hs_from_endomorphism
from hasse_schmidt.matrices import Matrix


def main():
    abc = symbols("a", "b", "c")
    f = Matrix.diag([MultiPoly.var(abc, i) for i in (1, 2, 3)])
    uv = Multivector({(1, 2): 1}, 3)
    cp = char_poly_via_top_form(f)
    print(f"E(t) = {cp}")
    for k, d in enumerate(apply_series(hs_from_endomorphism(f, 4), uv, 4)):
        print(f"D_{k}(u^v) = {d}")
    ps = ch_operator_series(f, uv, 4, cp)
    print(f"(D_2 - e1 D_1 + e2)(u^v) = {ps[2]}")
    print(f"(D_4 - e1 D_3 + e2 D_2 - e3 D_1)(u^v) = {ps[4]}")


if __name__ == "__main__":
    main()
