"""Exact integer matrix routines: Hermite and Smith normal forms, kernels.

Matrices are tuples of row tuples over plain Python ints, so everything is
exact at any magnitude.  Row convention throughout: the rows of a matrix
generate a sublattice of Z^n.
"""

from __future__ import annotations

from math import gcd

Row = tuple[int, ...]
Matrix = tuple[Row, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g = a*x + b*y."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


class _Echelon:
    """Incremental row echelon over Z with gcd pivoting.

    Rows may carry a transform tail of width `tail`; eliminations act on the
    full row but pivot search is restricted to the first `ncols` entries.
    Vectors whose leading part reduces to zero land in `kernel_tails`.
    """

    def __init__(self, ncols: int, tail: int = 0):
        self.ncols = ncols
        self.tail = tail
        self.rows: list[list[int]] = []      # sorted by pivot column
        self.pivots: list[int] = []          # pivot column of each row
        self.kernel_tails: list[list[int]] = []

    def add(self, vec) -> None:
        v = list(vec)
        n = self.ncols
        j = 0
        while True:
            while j < n and v[j] == 0:
                j += 1
            if j == n:
                if self.tail:
                    self.kernel_tails.append(v[n:])
                return
            pos = self._row_at(j)
            if pos is None:
                if v[j] < 0:
                    v = [-a for a in v]
                where = self._insert_at(j)
                self.rows.insert(where, v)
                self.pivots.insert(where, j)
                return
            row = self.rows[pos]
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                for k in range(j, len(v)):
                    v[k] -= q * row[k]
            else:
                g, x, y = xgcd(a, b)
                ag, bg = a // g, b // g
                for k in range(j, len(v)):
                    rk, vk = row[k], v[k]
                    row[k] = x * rk + y * vk
                    v[k] = -bg * rk + ag * vk
                # row now has pivot g at column j; v has 0 there

    def _row_at(self, col: int):
        import bisect
        i = bisect.bisect_left(self.pivots, col)
        if i < len(self.pivots) and self.pivots[i] == col:
            return i
        return None

    def _insert_at(self, col: int) -> int:
        import bisect
        return bisect.bisect_left(self.pivots, col)

    def normalize(self) -> None:
        """Make the echelon the canonical HNF: entries above each pivot
        reduced into [0, pivot)."""
        for i in range(len(self.rows)):
            c = self.pivots[i]
            p = self.rows[i][c]
            for h in range(i):
                q = self.rows[h][c] // p
                if q:
                    rh, ri = self.rows[h], self.rows[i]
                    for k in range(c, len(ri)):
                        rh[k] -= q * ri[k]


def hermite_normal_form(rows, ncols: int) -> Matrix:
    """Canonical row HNF of the lattice generated by `rows` inside Z^ncols.

    Pivots are positive, entries above each pivot lie in [0, pivot), zero rows
    are dropped and rows are ordered by pivot column.  Equal lattices yield
    identical output.

    >>> hermite_normal_form([(4, 0), (6, 0)], 2)
    ((2, 0),)
    >>> hermite_normal_form([(2, 7), (0, 4)], 2)
    ((2, 3), (0, 4))
    """
    ech = _Echelon(ncols)
    for r in rows:
        if len(r) != ncols:
            raise ValueError(f"row arity {len(r)} != {ncols}")
        ech.add(r)
    ech.normalize()
    return tuple(tuple(r) for r in ech.rows)


def reduce_mod_lattice(basis: Matrix, vec) -> Row:
    """Canonical representative of vec modulo the HNF lattice `basis`.

    The residual is zero exactly when vec lies in the lattice; two vectors
    have equal residuals exactly when they lie in the same coset.
    """
    v = list(vec)
    pivots = {row_pivot(r): i for i, r in enumerate(basis)}
    for j in range(len(v)):
        if j in pivots:
            row = basis[pivots[j]]
            q = v[j] // row[j]
            if q:
                for k in range(j, len(v)):
                    v[k] -= q * row[k]
    return tuple(v)


def row_pivot(row: Row) -> int:
    for j, a in enumerate(row):
        if a:
            return j
    raise ValueError("zero row has no pivot")


def lattice_contains(basis: Matrix, vec) -> bool:
    return not any(reduce_mod_lattice(basis, vec))


def left_kernel(rows, ncols: int) -> Matrix:
    """HNF basis of { z : z . A = 0 } for the matrix A given by `rows`."""
    m = len(rows)
    ech = _Echelon(ncols, tail=m)
    for i, r in enumerate(rows):
        tail = [0] * m
        tail[i] = 1
        ech.add(list(r) + tail)
    return hermite_normal_form(ech.kernel_tails, m)


def lattice_intersection(basis1: Matrix, basis2: Matrix, ncols: int) -> Matrix:
    """HNF basis of the intersection of two row lattices in Z^ncols."""
    if not basis1 or not basis2:
        return ()
    stacked = list(basis1) + list(basis2)
    gens = []
    for z in left_kernel(stacked, ncols):
        v = [0] * ncols
        for c, row in zip(z[: len(basis1)], basis1):
            if c:
                for k in range(ncols):
                    v[k] += c * row[k]
        gens.append(v)
    return hermite_normal_form(gens, ncols)


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(rows, ncols: int):
    """Smith reduction of the lattice generated by `rows` inside Z^ncols.

    Returns (invariants, V, Vinv) where invariants is the list d_1 | d_2 | ...
    of positive diagonal entries (1s kept, zeros dropped), and V, Vinv are
    mutually inverse ncols x ncols unimodular matrices such that the row
    lattice of A maps onto the diagonal lattice under x -> x . V.  The
    quotient Z^ncols / rowspace is then (+) Z/d_j (+) Z^(ncols - len(invariants)).
    """
    A = [list(r) for r in rows if any(r)]
    m, n = len(A), ncols
    V = _identity(n)
    Vinv = _identity(n)

    def col_addmul(dst: int, src: int, q: int) -> None:
        for i in range(m):
            A[i][dst] += q * A[i][src]
        for i in range(n):
            V[i][dst] += q * V[i][src]
        for k in range(n):
            Vinv[src][k] -= q * Vinv[dst][k]

    def col_swap(c1: int, c2: int) -> None:
        for i in range(m):
            A[i][c1], A[i][c2] = A[i][c2], A[i][c1]
        for i in range(n):
            V[i][c1], V[i][c2] = V[i][c2], V[i][c1]
        Vinv[c1], Vinv[c2] = Vinv[c2], Vinv[c1]

    def col_combine(c1: int, c2: int, t: int) -> None:
        # columns (c1, c2) <- (x*c1 + y*c2, -b/g*c1 + a/g*c2) clearing A[t][c2]
        a, b = A[t][c1], A[t][c2]
        g, x, y = xgcd(a, b)
        ag, bg = a // g, b // g
        for i in range(m):
            u, w = A[i][c1], A[i][c2]
            A[i][c1], A[i][c2] = x * u + y * w, -bg * u + ag * w
        for i in range(n):
            u, w = V[i][c1], V[i][c2]
            V[i][c1], V[i][c2] = x * u + y * w, -bg * u + ag * w
        r1, r2 = Vinv[c1], Vinv[c2]
        Vinv[c1] = [ag * u + bg * w for u, w in zip(r1, r2)]
        Vinv[c2] = [-y * u + x * w for u, w in zip(r1, r2)]

    t = 0
    while t < min(m, n):
        # find a nonzero entry in the trailing block
        found = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j]:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        if i != t:
            A[t], A[i] = A[i], A[t]
        if j != t:
            col_swap(t, j)
        while True:
            # clear column t below the pivot with row operations
            for i in range(t + 1, m):
                if A[i][t]:
                    a, b = A[t][t], A[i][t]
                    if b % a == 0:
                        q = b // a
                        for k in range(t, n):
                            A[i][k] -= q * A[t][k]
                    else:
                        g, x, y = xgcd(a, b)
                        ag, bg = a // g, b // g
                        for k in range(t, n):
                            u, w = A[t][k], A[i][k]
                            A[t][k], A[i][k] = x * u + y * w, -bg * u + ag * w
            # clear row t to the right with column operations
            for j in range(t + 1, n):
                if A[t][j]:
                    if A[t][j] % A[t][t] == 0:
                        col_addmul(j, t, -(A[t][j] // A[t][t]))
                    else:
                        col_combine(t, j, t)
            if all(A[i][t] == 0 for i in range(t + 1, m)) and all(
                A[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        if A[t][t] < 0:
            for k in range(t, n):
                A[t][k] = -A[t][k]
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a != 0:
                changed = True
                # fold column i+1 into column i, then re-diagonalize the 2x2 block
                col_addmul(i, i + 1, 1)
                a, b = A[i][i], A[i + 1][i]
                g, x, y = xgcd(a, b)
                ag, bg = a // g, b // g
                # row combine (i, i+1)
                for k in range(n):
                    u, w = A[i][k], A[i + 1][k]
                    A[i][k], A[i + 1][k] = x * u + y * w, -bg * u + ag * w
                # clear the off-diagonal entries reintroduced in row i / col i+1
                if A[i][i + 1]:
                    col_addmul(i + 1, i, -(A[i][i + 1] // A[i][i]))
                if A[i + 1][i + 1] < 0:
                    for k in range(n):
                        A[i + 1][k] = -A[i + 1][k]

    invariants = [A[i][i] for i in range(t)]
    assert all(d > 0 for d in invariants)
    return invariants, tuple(tuple(r) for r in V), tuple(tuple(r) for r in Vinv)


def quotient_invariants_of(rows, ncols: int) -> tuple[int, list[int]]:
    """(free_rank, torsion factors > 1) of Z^ncols / rowspace(rows)."""
    inv, _, _ = smith_normal_form(rows, ncols)
    return ncols - len(inv), [d for d in inv if d > 1]


def element_order_in_quotient(rows, ncols: int, vec) -> int:
    """Additive order of the image of vec in Z^ncols / rowspace(rows).

    Returns 0 for infinite order.
    """
    inv, V, _ = smith_normal_form(rows, ncols)
    r = len(inv)
    y = [sum(vec[i] * V[i][j] for i in range(ncols)) for j in range(ncols)]
    if any(y[j] for j in range(r, ncols)):
        return 0
    order = 1
    for j in range(r):
        d = inv[j]
        o = d // gcd(d, y[j] % d)
        order = order * o // gcd(order, o)
    return order


def matmul_vec(vec, M: Matrix):
    """Row vector times matrix."""
    n = len(M[0]) if M else 0
    return tuple(sum(vec[i] * M[i][j] for i in range(len(vec))) for j in range(n))
