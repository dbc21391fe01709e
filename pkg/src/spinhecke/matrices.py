"""Dense matrices over the exact Laurent scalars.

Small and boring on purpose: the representation checks need products,
Kronecker products and exact rank.  Rank uses fraction-free (Bareiss)
elimination with column pivoting, so entries stay Laurent polynomials and
every division is exact.
"""

from __future__ import annotations

from .coeff import L_ONE, L_ZERO, Laurent, as_laurent, laurent_exact_div

Matrix = tuple  # tuple of row tuples of Laurent


def mat(rows) -> Matrix:
    return tuple(tuple(as_laurent(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(L_ONE if i == j else L_ZERO for j in range(n))
                 for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple((L_ZERO,) * c for _ in range(r))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c) -> Matrix:
    c = as_laurent(c)
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out.append(tuple(
            sum((x * y for x, y in zip(row, col) if x and y), L_ZERO)
            for col in bt))
    return tuple(out)


def kron(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for ra in a:
        for rb in b:
            out.append(tuple(x * y for x in ra for y in rb))
    return tuple(out)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def flatten(a: Matrix) -> tuple:
    return tuple(x for row in a for x in row)


def rank(rows) -> int:
    """Exact rank over the fraction field, by Bareiss elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    prev = L_ONE
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pe = m[r][c]
        for i in range(r + 1, nr):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, nc):
                num = pe * row_i[j] - mic * row_r[j]
                row_i[j] = laurent_exact_div(num, prev) if num else L_ZERO
            row_i[c] = L_ZERO
        prev = pe
        r += 1
        if r == nr:
            break
    return r
