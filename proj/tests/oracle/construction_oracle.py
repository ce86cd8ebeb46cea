"""Independent reference computations used to freeze expected values in the
C++ tests. Pure Python integers and fractions; brute-force scans instead of the
column-threshold method used by the library."""

from fractions import Fraction
from itertools import combinations
import sys


def floor_log2(n):
    return n.bit_length() - 1


def is_prime(v):
    return v >= 2 and all(v % d for d in range(2, int(v ** 0.5) + 1))


def params(n):
    lg = floor_log2(n)
    p = next(q for q in range(1, n) if Fraction(n, 2 * lg) < q < Fraction(n, lg) and is_prime(q))
    alpha = 2 * n
    return dict(n=n, lg=lg, p=p, alpha=alpha, scale=alpha * n * lg, m=alpha * (2 * n * n + n ** 3))


def frame(c):
    p, base, s, m = c["p"], c["alpha"] * c["n"] ** 2, c["scale"], c["m"]
    qp = [(x, (x * x) % p or p) for x in range(1, p + 1)]
    D = sorted(((base + s * x, -p + y) for x, y in qp))
    U = sorted(((base + s * x, m + y) for x, y in qp))
    L = sorted(((-p + y, base + s * x) for x, y in qp), key=lambda t: t[1])
    R = sorted(((m + y, base + s * x) for x, y in qp), key=lambda t: t[1])
    return D, U, L, R


def det(a, b, c):
    # full cofactor expansion of [[1,1,1],[xa,xb,xc],[ya,yb,yc]]
    return (b[0] * c[1] - c[0] * b[1]) - (a[0] * c[1] - c[0] * a[1]) + (a[0] * b[1] - b[0] * a[1])


def sgn(v):
    return (v > 0) - (v < 0)


def intersect(a1, a2, b1, b2):
    # Cramer's rule on  x*(a2-a1) - y*(b2-b1) = b1 - a1
    A = [[a2[0] - a1[0], -(b2[0] - b1[0])], [a2[1] - a1[1], -(b2[1] - b1[1])]]
    rhs = [b1[0] - a1[0], b1[1] - a1[1]]
    D = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    t = Fraction(rhs[0] * A[1][1] - A[0][1] * rhs[1], D)
    return (a1[0] + t * (a2[0] - a1[0]), a1[1] + t * (a2[1] - a1[1]))


def region(fr, key):
    D, U, L, R = fr
    l, r, d, u = key
    lines = dict(lower=(L[l], R[r]), upper=(L[l], R[r + 1]), left=(D[d], U[u]), right=(D[d], U[u + 1]))
    return lines


def inside(lines, q):
    return (sgn(det(*lines["lower"], q)) == 1 and sgn(det(*lines["upper"], q)) == -1
            and sgn(det(*lines["left"], q)) == -1 and sgn(det(*lines["right"], q)) == 1)


def brute_points(lines):
    verts = [intersect(*lines[h], *lines[v]) for h in ("lower", "upper") for v in ("left", "right")]
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    import math
    pts = []
    for x in range(math.floor(min(xs)), math.ceil(max(xs)) + 1):
        for y in range(math.floor(min(ys)), math.ceil(max(ys)) + 1):
            if inside(lines, (x, y)):
                pts.append((x, y))
    return pts


def splitmix(seed):
    mask = (1 << 64) - 1
    state = seed
    while True:
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        yield z ^ (z >> 31)


def main():
    for n in (32, 64):
        c = params(n)
        print(n, c)
    c = params(32)
    fr = frame(c)
    for key in [(0, 0, 0, 0), (4, 3, 4, 3), (2, 1, 3, 0)]:
        lines = region(fr, key)
        pts = brute_points(lines)
        print("n=32 region", key, "count", len(pts), "lexmin", min(pts))
    c64 = params(64)
    fr64 = frame(c64)
    l64 = region(fr64, (0, 0, 0, 0))
    a = intersect(*l64["upper"], *l64["left"])
    b = intersect(*l64["lower"], *l64["left"])
    print("n=64 delta(0,0,0,0)", a[1] - b[1])
    g = splitmix(0)
    print("splitmix(0)", [hex(next(g)) for _ in range(3)])
    g = splitmix(1)
    print("n=64 seed=1 first flats", [next(g) % 1764 for _ in range(3)])


if __name__ == "__main__":
    sys.exit(main())
