#!/usr/bin/env python3
"""Write permutation generator files for the nonabelian groups of order <= 24.

Each group is given either by small-degree permutations or as the right
regular representation of an explicit multiplication rule. The script checks
the order, that the group is nonabelian, computes |Z(G)| independently of the
C++ library, and checks that no two groups share an invariant fingerprint
(element-order multiset, centralizer-order multiset, |Z|, |G'|,
number of squares).

usage: make_small_groups.py <data dir>   (writes <dir>/groups/*.grp, prints manifest lines)
"""
import itertools
import os
import sys
from collections import Counter


def perm_from_cycles(text, n):
    img = list(range(n))
    for cyc in text.replace(")", ")|").split("|"):
        cyc = cyc.strip()
        if not cyc:
            continue
        pts = [int(t) - 1 for t in cyc.strip("()").split()]
        for i, a in enumerate(pts):
            img[a] = pts[(i + 1) % len(pts)]
    return tuple(img)


def compose(a, b):  # apply a, then b
    return tuple(b[a[i]] for i in range(len(a)))


def closure(gens):
    n = len(gens[0])
    e = tuple(range(n))
    seen = {e}
    order = [e]
    for x in order:
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def cycles(p):
    seen = [False] * len(p)
    out = ""
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(str(j + 1))
            j = p[j]
        out += "(" + " ".join(c) + ")"
    return out or "()"


def regular(elements, mul, gens):
    idx = {e: i for i, e in enumerate(elements)}
    return [tuple(idx[mul(x, g)] for x in elements) for g in gens]


def dicyclic(m):
    # x^a y^b, y x = x^-1 y, y^2 = x^m, x of order 2m
    els = [(a, b) for b in range(2) for a in range(2 * m)]

    def mul(u, v):
        a1, b1 = u
        a2, b2 = v
        a = a1 + (-a2 if b1 else a2)
        if b1 and b2:
            return ((a + m) % (2 * m), 0)
        return (a % (2 * m), b1 ^ b2)

    return regular(els, mul, [(1, 0), (0, 1)])


def semidirect_cyclic(n, k, r):
    # C_n x| C_k with y x y^-1 = x^r
    els = [(a, b) for b in range(k) for a in range(n)]

    def mul(u, v):
        a1, b1 = u
        a2, b2 = v
        return ((a1 + pow(r, b1, n) * a2) % n, (b1 + b2) % k)

    return regular(els, mul, [(1, 0), (0, 1)])


def smallgroup_16_3():
    # (C4 x C2) x| C2, c: a -> ab, b -> b
    els = [(i, j, k) for k in range(2) for j in range(2) for i in range(4)]

    def act(i, j, k):
        return (i, (j + i) % 2) if k else (i, j)

    def mul(u, v):
        i1, j1, k1 = u
        i2, j2, k2 = v
        i2, j2 = act(i2, j2, k1)
        return ((i1 + i2) % 4, (j1 + j2) % 2, (k1 + k2) % 2)

    return regular(els, mul, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def pauli():
    # 2x2 matrices over Z[i], entries as (re, im)
    def cm(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def ca(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mm(A, B):
        return tuple(
            tuple(ca(cm(A[r][0], B[0][c]), cm(A[r][1], B[1][c])) for c in range(2)) for r in range(2)
        )

    o, l, mi = (0, 0), (1, 0), (-1, 0)
    X = ((o, l), (l, o))
    Z = ((l, o), (o, mi))
    Y = ((o, (0, -1)), ((0, 1), o))
    gens = [X, Y, Z]
    I = ((l, o), (o, l))
    els = [I]
    seen = {I}
    for x in els:
        for g in gens:
            y = mm(x, g)
            if y not in seen:
                seen.add(y)
                els.append(y)
    return regular(els, mm, gens)


def c4_x_c4_inv():
    els = [(i, j) for j in range(4) for i in range(4)]

    def mul(u, v):
        return ((u[0] + (v[0] if u[1] % 2 == 0 else -v[0])) % 4, (u[1] + v[1]) % 4)

    return regular(els, mul, [(1, 0), (0, 1)])


def sl2_3():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(M):
        return tuple(idx[((M[0][0] * v[0] + M[0][1] * v[1]) % 3, (M[1][0] * v[0] + M[1][1] * v[1]) % 3)]
                     for v in vecs)

    return [act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))]


def P(n, *cyc):
    return [perm_from_cycles(c, n) for c in cyc]


def shift(p, off, n):
    img = list(range(n))
    for i, v in enumerate(p):
        img[i + off] = v + off
    return tuple(img)


def product(*factors):
    # direct product of generator lists on disjoint point sets
    n = sum(len(f[0]) for f in factors)
    out, off = [], 0
    for f in factors:
        out += [shift(g, off, n) for g in f]
        off += len(f[0])
    return out


def dihedral(k):
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    return [rot, ref]


S3 = P(3, "(1 2 3)", "(1 2)")
D8 = P(4, "(1 2 3 4)", "(1 3)")
Q8 = P(8, "(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)")
DIC12 = P(7, "(1 2 3)", "(2 3)(4 5 6 7)")
A4 = P(4, "(1 2 3)", "(1 2)(3 4)")
C2 = P(2, "(1 2)")
C3 = P(3, "(1 2 3)")
C4 = P(4, "(1 2 3 4)")

GROUPS = [
    ("S3", S3),
    ("D8", D8),
    ("Q8", Q8),
    ("D10", dihedral(5)),
    ("D12", dihedral(6)),
    ("A4", A4),
    ("Dic12", DIC12),
    ("D14", dihedral(7)),
    ("D16", dihedral(8)),
    ("SD16", semidirect_cyclic(8, 2, 3)),
    ("Q16", dicyclic(4)),
    ("M16", semidirect_cyclic(8, 2, 5)),
    ("C4sC4", c4_x_c4_inv()),
    ("C2xD8", product(C2, D8)),
    ("C2xQ8", product(C2, Q8)),
    ("Pauli", pauli()),
    ("C4xC2sC2", smallgroup_16_3()),
    ("D18", dihedral(9)),
    ("C3xS3", product(C3, S3)),
    ("C3C3sC2", P(6, "(1 2 3)", "(4 5 6)", "(2 3)(5 6)")),
    ("D20", dihedral(10)),
    ("Dic20", P(9, "(1 2 3 4 5)", "(2 5)(3 4)(6 7 8 9)")),
    ("F20", P(5, "(1 2 3 4 5)", "(2 3 5 4)")),
    ("C7sC3", P(7, "(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)")),
    ("D22", dihedral(11)),
    ("S4", P(4, "(1 2 3 4)", "(1 2)")),
    ("SL2_3", sl2_3()),
    ("C3sC8", P(11, "(1 2 3)", "(2 3)(4 5 6 7 8 9 10 11)")),
    ("Dic24", dicyclic(6)),
    ("C4xS3", product(C4, S3)),
    ("D24", dihedral(12)),
    ("C2xDic12", product(C2, DIC12)),
    ("C3sD8", P(7, "(1 2 3)", "(2 3)(4 5 6 7)", "(5 7)")),
    ("C3xD8", product(C3, D8)),
    ("C3xQ8", product(C3, Q8)),
    ("C2xA4", product(C2, A4)),
    ("C2xC2xS3", product(C2, C2, S3)),
]


def fingerprint(els):
    n = len(els)
    idx = {e: i for i, e in enumerate(els)}
    inv = [idx[tuple(sorted(range(len(e)), key=lambda i: e[i]))] for e in els]
    e0 = els[0]

    def order(e):
        k, x = 1, e
        while x != e0:
            x = compose(x, e)
            k += 1
        return k

    cent = [sum(1 for y in els if compose(x, y) == compose(y, x)) for x in els]
    z = sum(1 for c in cent if c == n)
    comms = {compose(compose(els[inv[idx[a]]], els[inv[idx[b]]]), compose(a, b)) for a in els for b in els}
    derived = closure(list(comms)) if len(comms) > 0 else [e0]
    squares = len({compose(x, x) for x in els})
    return (n, z, tuple(sorted(Counter(order(e) for e in els).items())),
            tuple(sorted(Counter(cent).items())), len(derived), squares), z


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "data"
    os.makedirs(os.path.join(out_dir, "groups"), exist_ok=True)
    prints = {}
    for name, gens in GROUPS:
        els = closure(gens)
        n = len(els)
        assert any(compose(a, b) != compose(b, a) for a in gens for b in gens), name
        fp, z = fingerprint(els)
        assert fp not in prints, (name, prints.get(fp))
        prints[fp] = name
        with open(os.path.join(out_dir, "groups", name + ".grp"), "w") as f:
            f.write(f"name: {name}\ndegree: {len(gens[0])}\n")
            for g in gens:
                f.write(f"gen: {cycles(g)}\n")
        print(f"{name}, {n}, {z}, file:groups/{name}.grp")
    counts = Counter(len(closure(g)) for _, g in GROUPS)
    expected = {6: 1, 8: 2, 10: 1, 12: 3, 14: 1, 16: 9, 18: 3, 20: 3, 21: 1, 22: 1, 24: 12}
    assert dict(counts) == expected, counts


if __name__ == "__main__":
    main()
