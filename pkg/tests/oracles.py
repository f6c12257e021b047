"""Independent reference computations used only by the tests.

None of these call into the library's elimination or simplex code.
"""

from fractions import Fraction
from itertools import combinations


def brute_pair(x, f):
    n = max(len(x.prefix), len(f.prefix)) + 3
    return sum((x.entry(k) * f.entry(k) for k in range(n)), Fraction(0))


def _solve_square(A, b):
    """Solve A v = b by Gauss-Jordan with partial search; None if singular."""
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [a - f * bb for a, bb in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def bareiss_rank(rows):
    """Rank via fraction-free elimination on integer-scaled rows."""
    if not rows:
        return 0
    M = []
    for r in rows:
        den = 1
        for v in r:
            den = den * Fraction(v).denominator
        M.append([int(Fraction(v) * den) for v in r])
    m, n = len(M), len(M[0])
    rank, prev = 0, 1
    for c in range(n):
        p = next((r for r in range(rank, m) if M[r][c] != 0), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        for r in range(rank + 1, m):
            M[r] = [(M[rank][c] * M[r][j] - M[r][c] * M[rank][j]) // prev for j in range(n)]
        prev = M[rank][c]
        rank += 1
        if rank == m:
            break
    return rank


def enumerate_vertices(objective, rows, bounds):
    """Exhaustive basic-solution enumeration for a bounded LP.

    Every bound and row is a candidate hyperplane; each n-subset is solved,
    feasible points are kept, and the best objective wins.  Returns
    ``None`` when no vertex is feasible (an empty polytope).
    """
    n = len(objective)
    planes = []
    for coeffs, rel, rhs in rows:
        planes.append((list(coeffs), rhs))
    for j, (lo, hi) in enumerate(bounds):
        e = [0] * n
        e[j] = 1
        if lo is not None:
            planes.append((e, lo))
        if hi is not None:
            planes.append((e, hi))

    def feasible(v):
        for j, (lo, hi) in enumerate(bounds):
            if lo is not None and v[j] < lo or hi is not None and v[j] > hi:
                return False
        for coeffs, rel, rhs in rows:
            s = sum(Fraction(a) * b for a, b in zip(coeffs, v))
            if rel == "<=" and s > rhs or rel == ">=" and s < rhs or rel == "=" and s != rhs:
                return False
        return True

    best = None
    for combo in combinations(planes, n):
        v = _solve_square([p[0] for p in combo], [p[1] for p in combo])
        if v is None or not feasible(v):
            continue
        val = sum(Fraction(c) * a for c, a in zip(objective, v))
        if best is None or val > best:
            best = val
    return best


def random_bounded_lp(rng, max_vars=4, max_rows=6):
    """Random LP whose feasible set is inside a box, so it is never unbounded."""
    n = rng.randint(1, max_vars)
    m = rng.randint(0, max_rows)
    q = lambda: Fraction(rng.randint(-6, 6), rng.randint(1, 3))  # noqa: E731
    objective = [q() for _ in range(n)]
    rows, bounds = [], []
    for j in range(n):
        lo, hi = Fraction(rng.randint(-5, 0)), Fraction(rng.randint(0, 5))
        if rng.random() < 0.5:
            bounds.append((lo, hi))
        else:
            # free variable boxed through explicit rows
            bounds.append((None, None))
            e = [0] * n
            e[j] = 1
            rows.append((e, "<=", hi))
            rows.append((e, ">=", lo))
    for _ in range(m):
        rel = rng.choice(["<=", "<=", ">=", "="])
        rows.append(([q() for _ in range(n)], rel, q()))
    return objective, rows, bounds


def minimax_distance_to_constants(z):
    """min over alpha of max_k |z_k - alpha| for finitely many class values: (max + min) / 2 spread."""
    return (max(z) - min(z)) / 2
