#!/usr/bin/env python3
"""Regenerates the bundled table data under data/table/.

Glue codes are found by a depth-first search over the discriminant groups of
the root-lattice components: a code is accepted when it is isotropic, has
size sqrt(|disc|) and every nonzero glue class has minimal norm >= 3 (so the
glued lattice has no norm-1 vectors and no roots beyond the components).
A1^22 uses the shortened Golay code. O23 is cut out of the Leech lattice.

The C++ catalog re-validates every file by enumeration when it is loaded.
"""

import itertools
import os
import sys
from fractions import Fraction
from math import gcd, isqrt

# ---------------------------------------------------------------------------
# Dynkin Gram matrices (same conventions as include/unimod/root_lattices.hpp)


def dynkin_gram(kind, k):
    g = [[0] * k for _ in range(k)]
    for i in range(k):
        g[i][i] = 2
    edges = []
    if kind == "A":
        edges = [(i, i + 1) for i in range(k - 1)]
    elif kind == "D":
        edges = [(i, i + 1) for i in range(k - 2)] + [(k - 3, k - 1)]
    elif kind == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, k - 1)]
    for a, b in edges:
        g[a][b] = g[b][a] = -1
    return g


def inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def det(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def parse_id(cid):
    return cid[0], int(cid[1:])


class Component:
    """Discriminant group of one root lattice, classes keyed by coefficients mod 1."""

    def __init__(self, cid):
        self.cid = cid
        kind, k = parse_id(cid)
        self.rank = k
        self.gram = dynkin_gram(kind, k)
        inv = inverse(self.gram)
        key0 = tuple([Fraction(0)] * k)
        self.keys = [key0]
        self.reps = [[Fraction(0)] * k]
        self.norms = [Fraction(0)]
        best = {}
        for j in range(k):
            w = inv[j]
            key = tuple(x % 1 for x in w)
            if key == key0:
                continue
            nrm = inv[j][j]
            if key not in best or nrm < best[key][0]:
                best[key] = (nrm, list(w))
        # close under addition; every class of P/Q has a minuscule fundamental weight
        for key in sorted(best, key=lambda kk: (best[kk][0], kk)):
            self.keys.append(key)
            self.reps.append(best[key][1])
            self.norms.append(best[key][0])
        self.index = {key: i for i, key in enumerate(self.keys)}
        n = len(self.keys)
        self.add = [[self.index[tuple((a + b) % 1 for a, b in zip(self.keys[i], self.keys[j]))]
                     for j in range(n)] for i in range(n)]
        self.pair = [[self.bil(self.reps[i], self.reps[j]) % 1 for j in range(n)] for i in range(n)]
        assert n == det(self.gram)

    def bil(self, x, y):
        k = self.rank
        return sum(x[a] * self.gram[a][b] * y[b] for a in range(k) for b in range(k))


def search_glue(cids):
    comps = [Component(c) for c in cids]
    order = 1
    for c in comps:
        order *= len(c.keys)
    target = isqrt(order)
    assert target * target == order, (cids, order)

    def add(x, y):
        return tuple(c.add[a][b] for c, a, b in zip(comps, x, y))

    def pair(x, y):
        return sum((c.pair[a][b] for c, a, b in zip(comps, x, y)), Fraction(0)) % 1

    def minnorm(x):
        return sum((c.norms[a] for c, a in zip(comps, x)), Fraction(0))

    zero = tuple([0] * len(comps))
    elements = list(itertools.product(*[range(len(c.keys)) for c in comps]))
    cands = [x for x in elements if x != zero and minnorm(x) >= 3 and pair(x, x) == 0]
    cands.sort(key=lambda x: (minnorm(x), x))

    def closure(code, x):
        out = set(code)
        frontier = list(code)
        y = x
        while True:
            new = [add(c, y) for c in code]
            if all(n in out for n in new):
                break
            for n in new:
                out.add(n)
            y = add(y, x)
        return out

    def dfs(code, gens, start):
        if len(code) == target:
            return gens
        for i in range(start, len(cands)):
            x = cands[i]
            if x in code:
                continue
            if any(pair(x, g) != 0 for g in gens):
                continue
            nc = closure(code, x)
            if len(nc) > target:
                continue
            if any(e != zero and minnorm(e) < 3 for e in nc if e not in code):
                continue
            got = dfs(nc, gens + [x], i + 1)
            if got is not None:
                return got
        return None

    gens = dfs({zero}, [], 0)
    if gens is None:
        raise SystemExit("no glue code found for " + " ".join(cids))
    vectors = []
    for g in gens:
        vec = []
        for c, a in zip(comps, g):
            vec.extend(c.reps[a])
        vectors.append(vec)
    return vectors


# ---------------------------------------------------------------------------
# Golay code, Leech lattice, O23


def gf2_rank(rows):
    rows = [int("".join(map(str, r)), 2) for r in rows]
    rank = 0
    for bit in reversed(range(64)):
        piv = next((r for r in rows if (r >> bit) & 1), None)
        if piv is None:
            continue
        rows.remove(piv)
        rows = [r ^ piv if (r >> bit) & 1 else r for r in rows]
        rank += 1
    return rank


def golay_basis():
    residues = {(x * x) % 23 for x in range(1, 23)}
    rows = []
    for s in range(23):
        v = [0] * 24
        for r in residues | {0}:
            v[(r + s) % 23] = 1
        v[23] = sum(v) % 2
        rows.append(v)
    # echelon form, keep independent rows
    basis = []
    for r in rows:
        if gf2_rank(basis + [r]) > len(basis):
            basis.append(r)
    basis.append([1] * 24)
    basis = [b for i, b in enumerate(basis) if gf2_rank(basis[:i + 1]) == i + 1][:12]
    assert len(basis) == 12
    words = set()
    for coeffs in itertools.product([0, 1], repeat=12):
        w = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) % 2 for i in range(24))
        words.add(w)
    weights = sorted({sum(w) for w in words})
    assert weights == [0, 8, 12, 16, 24], weights
    return basis, words


def shorter_golay(words):
    kept = [w[:22] for w in words if w[22] == w[23]]
    basis = []
    for w in sorted(kept, key=lambda w: (sum(w), w), reverse=False):
        if sum(w) == 0:
            continue
        if gf2_rank(basis + [list(w)]) > len(basis):
            basis.append(list(w))
    assert len(basis) == 11
    assert min(sum(w) for w in kept if sum(w)) == 6
    return basis


def hnf_rows(rows):
    """Row-style Hermite normal form of an integer matrix; drops zero rows."""
    a = [list(r) for r in rows]
    m = len(a[0])
    out = []
    r0 = 0
    for c in range(m):
        live = [i for i in range(r0, len(a)) if a[i][c] != 0]
        if not live:
            continue
        while True:
            live = [i for i in range(r0, len(a)) if a[i][c] != 0]
            if len(live) <= 1:
                break
            p = min(live, key=lambda i: abs(a[i][c]))
            for i in live:
                if i != p:
                    q = a[i][c] // a[p][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[p])]
        p = live[0]
        a[r0], a[p] = a[p], a[r0]
        if a[r0][c] < 0:
            a[r0] = [-x for x in a[r0]]
        for i in range(r0):
            q = a[i][c] // a[r0][c]
            a[i] = [x - q * y for x, y in zip(a[i], a[r0])]
        r0 += 1
    return a[:r0]


def lll_gram(g, delta=Fraction(99, 100)):
    """Textbook LLL on a Gram matrix with exact rationals; returns reduced Gram."""
    n = len(g)
    b = [[int(i == j) for j in range(n)] for i in range(n)]

    def ip(x, y):
        return sum(x[i] * g[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j])

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bn = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                mu[i][j] = (Fraction(ip(b[i], b[j])) - sum(mu[j][k] * mu[i][k] * bn[k] for k in range(j))) / bn[j]
            bn[i] = ip(b[i], b[i]) - sum(mu[i][k] ** 2 * bn[k] for k in range(i))
        return mu, bn

    k = 1
    mu, bn = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, bn = gso()
        if bn[k] >= (delta - mu[k][k - 1] ** 2) * bn[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, bn = gso()
            k = max(k - 1, 1)
    return [[ip(x, y) for y in b] for x in b]


def leech_and_o23():
    basis, _ = golay_basis()
    gens = [[2 * x for x in c] for c in basis]
    for i in range(23):
        gens.append([4 if j == i else (4 if j == i + 1 else 0) for j in range(24)])
        gens.append([4 if j == i else (-4 if j == i + 1 else 0) for j in range(24)])
    gens.append([-3] + [1] * 23)
    lam = hnf_rows(gens)
    assert len(lam) == 24
    d = 1
    for i in range(24):
        d *= lam[i][i]
    assert d == 8 ** 12, d

    def ip(x, y):
        s = sum(a * b for a, b in zip(x, y))
        assert s % 8 == 0
        return s // 8

    v = [4, 4] + [0] * 22
    # sublattice M = {x : (x, v) even}
    par = [ip(b, v) % 2 for b in lam]
    j = par.index(1)
    m = []
    for i, b in enumerate(lam):
        if i == j:
            m.append([2 * x for x in b])
        elif par[i]:
            m.append([x + y for x, y in zip(b, lam[j])])
        else:
            m.append(b)
    m = hnf_rows(m)
    assert len(m) == 24
    gm = [[ip(x, y) for y in m] for x in m]
    # coordinates of v in the M basis
    inv = inverse(gm)
    t = [ip(b, v) for b in m]
    a = [sum(inv[i][k] * t[k] for k in range(24)) for i in range(24)]
    assert all(x.denominator == 1 for x in a)
    a = [int(x) for x in a]
    # unimodular W with rows, W^-1 e_last = a ; build by completing a to a basis
    # via column operations on the 1x24 row a.
    n = 24
    cols = [[int(i == j) for j in range(n)] for i in range(n)]  # cols[k] = k-th column of C
    row = list(a)
    # reduce row to (0,...,0,1) using integer column ops, tracking C with row*C
    while sum(1 for x in row if x != 0) > 1 or row[n - 1] == 0:
        nz = [i for i in range(n) if row[i] != 0]
        if len(nz) == 1:
            i = nz[0]
            row[i], row[n - 1] = row[n - 1], row[i]
            cols[i], cols[n - 1] = cols[n - 1], cols[i]
            continue
        p = min(nz, key=lambda i: abs(row[i]))
        for i in nz:
            if i != p:
                q = row[i] // row[p]
                row[i] -= q * row[p]
                cols[i] = [x - q * y for x, y in zip(cols[i], cols[p])]
    assert abs(row[n - 1]) == 1
    # a . C = +-e_last, so a is (up to sign) the last row of C^-1 and the
    # other rows of C^-1 complete it to a basis of M
    cmat = [[cols[k][i] for k in range(n)] for i in range(n)]
    cinv = inverse(cmat)
    assert all(x.denominator == 1 for row in cinv for x in row)
    assert [int(x) for x in cinv[n - 1]] in (a, [-x for x in a])
    comp = [[int(x) for x in row] for row in cinv[:n - 1]]
    gv = [sum(gm[i][k] * a[k] for k in range(n)) for i in range(n)]
    nv = sum(a[i] * gv[i] for i in range(n))
    assert nv == 4

    def qf(x, y):
        xy = sum(x[i] * gm[i][k] * y[k] for i in range(n) for k in range(n) if x[i] and y[k])
        xv = sum(x[i] * gv[i] for i in range(n))
        yv = sum(y[i] * gv[i] for i in range(n))
        val = Fraction(xy) - Fraction(xv * yv, 4)
        assert val.denominator == 1
        return int(val)

    o23 = [[qf(x, y) for y in comp] for x in comp]
    assert det(o23) == 1
    return lll_gram(o23)


# ---------------------------------------------------------------------------


def fmt_frac(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_glue(path, label, cids, vectors):
    with open(path, "w") as f:
        f.write(f"# {label}: unimodular overlattice glued from {' '.join(cids)}\n")
        f.write("construction glue\n")
        f.write("components " + " ".join(cids) + "\n")
        f.write("glue\n")
        for v in vectors:
            f.write(" ".join(fmt_frac(x) for x in v) + "\n")


TABLE = [
    ("E7^2+", "E7_2", ["E7", "E7"]),
    ("D8^2+", "D8_2", ["D8", "D8"]),
    ("A11E6+", "A11E6", ["A11", "E6"]),
    ("D6^3+", "D6_3", ["D6", "D6", "D6"]),
    ("A9^2+", "A9_2", ["A9", "A9"]),
    ("A7^2D5+", "A7_2D5", ["A7", "A7", "D5"]),
    ("D4^5+", "D4_5", ["D4"] * 5),
    ("A5^4+", "A5_4", ["A5"] * 4),
    ("A3^7+", "A3_7", ["A3"] * 7),
]


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data", "table")
    os.makedirs(out, exist_ok=True)
    for label, fname, cids in TABLE:
        vecs = search_glue(cids)
        write_glue(os.path.join(out, fname + ".glue"), label, cids, vecs)
        print(label, len(vecs), "glue generators")
    _, words = golay_basis()
    g22 = shorter_golay(words)
    vecs = [[Fraction(b, 2) for b in w] for w in g22]
    write_glue(os.path.join(out, "A1_22.glue"), "A1^22+", ["A1"] * 22, vecs)
    print("A1^22+ 11 glue generators")
    gram = leech_and_o23()
    with open(os.path.join(out, "O23.lat"), "w") as f:
        f.write("# shorter Leech lattice: projection of {x in Leech : (x,v) even} along a norm-4 v\n")
        f.write("lattice O23\n")
        f.write("dim 23\n")
        f.write("gram\n")
        for row in gram:
            f.write(" ".join(str(x) for x in row) + "\n")
    print("O23 written")


if __name__ == "__main__":
    main()
