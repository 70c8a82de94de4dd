#!/usr/bin/env python3
"""Write generators of Sz(8) acting on the 65 points of the Tits ovoid in PG(3,8).

Points are (1, x, y, xy + x^2 x^4 + y^4) for x, y in GF(8) plus (0,0,0,1),
with GF(8) = GF(2)[t]/(t^3+t+1) and the field automorphism x -> x^4.
Two generators: the coordinate-reversal involution, and the product of the
first ovoid-preserving diagonal matrix with the first ovoid-preserving lower
unitriangular matrix (row vectors times matrix). The closure order is checked
to be 29120.

usage: sz8_generators.py <output .grp file>
"""
import itertools
import sys


def gmul(a, b):
    r = 0
    for i in range(3):
        if b >> i & 1:
            r ^= a << i
    for i in (4, 3):
        if r >> i & 1:
            r ^= 0b1011 << (i - 3)
    return r


MUL = [[gmul(a, b) for b in range(8)] for a in range(8)]
INV = [0] + [next(b for b in range(1, 8) if MUL[a][b] == 1) for a in range(1, 8)]


def gpow(a, e):
    r = 1
    for _ in range(e):
        r = MUL[r][a]
    return r


def theta(x):
    return gpow(x, 4)


def ovoid_z(x, y):
    return MUL[x][y] ^ MUL[gpow(x, 2)][theta(x)] ^ theta(y)


PTS = [(1, x, y, ovoid_z(x, y)) for x in range(8) for y in range(8)] + [(0, 0, 0, 1)]
IDX = {p: i for i, p in enumerate(PTS)}


def normalize(v):
    for c in v:
        if c:
            i = INV[c]
            return tuple(MUL[i][t] for t in v)
    raise ValueError("zero vector")


def act(m, v):
    return tuple(
        MUL[v[0]][m[0][j]] ^ MUL[v[1]][m[1][j]] ^ MUL[v[2]][m[2][j]] ^ MUL[v[3]][m[3][j]] for j in range(4)
    )


def perm_of(m):
    out = []
    for p in PTS:
        w = normalize(act(m, p))
        if w not in IDX:
            return None
        out.append(IDX[w])
    return out


def generators():
    ident = list(range(65))
    gens = []
    rev = [[1 if i + j == 3 else 0 for j in range(4)] for i in range(4)]
    gens.append(perm_of(rev))
    for d in itertools.product(range(1, 8), repeat=3):
        m = [[0] * 4 for _ in range(4)]
        m[0][0] = 1
        for i in range(3):
            m[i + 1][i + 1] = d[i]
        p = perm_of(m)
        if p and p != ident:
            gens.append(p)
            break
    for e in itertools.product(range(8), repeat=6):
        m = [[1, 0, 0, 0], [e[0], 1, 0, 0], [e[1], e[2], 1, 0], [e[3], e[4], e[5], 1]]
        p = perm_of(m)
        if p and p != ident:
            diag = gens.pop()
            gens.append([p[diag[i]] for i in range(65)])
            break
    return gens


def closure_order(gens):
    e = tuple(range(65))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(65))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


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


def main():
    gens = generators()
    assert closure_order(gens) == 29120
    with open(sys.argv[1], "w") as f:
        f.write("name: Sz8\ndegree: 65\n")
        for g in gens:
            f.write(f"gen: {cycles(g)}\n")


if __name__ == "__main__":
    main()
