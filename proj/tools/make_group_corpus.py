#!/usr/bin/env python3
"""Regenerate corpus/groups/: every group of order <= 16, plus S4.

Elements are labelled 0..n-1; file names follow the usual small-group
notation. Pairs of same-order groups are checked to be non-isomorphic.
"""
import itertools
import json
import pathlib
import sys


def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def metacyclic(m, n, r, s):
    """<x, y | x^m = 1, y^n = x^s, y x y^-1 = x^r>, element x^a y^b -> a*n + b."""
    assert pow(r, n, m) == 1 % m and (r * s - s) % m == 0
    table = [[0] * (m * n) for _ in range(m * n)]
    for a, b, c, d in itertools.product(range(m), range(n), range(m), range(n)):
        e = a + pow(r, b, m) * c
        f = b + d
        if f >= n:
            f -= n
            e += s
        table[a * n + b][c * n + d] = (e % m) * n + f
    return table


def direct(g, h):
    ng, nh = len(g), len(h)
    return [[g[a // nh][b // nh] * nh + h[a % nh][b % nh] for b in range(ng * nh)]
            for a in range(ng * nh)]


def semidirect(normal, phi, n):
    """normal x| Z/n where the generator acts by the automorphism phi (a list)."""
    k = len(normal)
    powers = [list(range(k))]
    for _ in range(1, n):
        powers.append([phi[x] for x in powers[-1]])
    table = [[0] * (k * n) for _ in range(k * n)]
    for a, b, c, d in itertools.product(range(k), range(n), range(k), range(n)):
        table[a * n + b][c * n + d] = normal[a][powers[b][c]] * n + (b + d) % n
    return table


def closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    index = {e: i for i, e in enumerate(elems)}
    return [[index[mul(a, b)] for b in elems] for a in elems]


def permutation_group(gens):
    n = len(gens[0])
    return closure([tuple(g) for g in gens],
                   lambda p, q: tuple(p[q[i]] for i in range(n)),
                   tuple(range(n)))


def pauli_group():
    # 2x2 matrices over Z[i]; Gaussian integers stored as (re, im).
    def cmul(x, y):
        return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def cadd(x, y):
        return (x[0] + y[0], x[1] + y[1])

    def mmul(p, q):
        return tuple(
            tuple(cadd(cmul(p[i][0], q[0][j]), cmul(p[i][1], q[1][j])) for j in range(2))
            for i in range(2))

    one, zero, i_ = (1, 0), (0, 0), (0, 1)
    neg_i = (0, -1)
    ident = ((one, zero), (zero, one))
    x = ((zero, one), (one, zero))
    y = ((zero, neg_i), (i_, zero))
    z = ((one, zero), (zero, (-1, 0)))
    return closure([x, y, z], mmul, ident)


def check_group(t):
    n = len(t)
    assert all(sorted(row) == list(range(n)) for row in t)
    for a, b, c in itertools.product(range(n), repeat=3):
        assert t[t[a][b]][c] == t[a][t[b][c]]


def identity_of(t):
    return next(e for e in range(len(t)) if all(t[e][x] == x for x in range(len(t))))


def invariants(t):
    n = len(t)
    e = identity_of(t)

    def order(x):
        k, y = 1, x
        while y != e:
            y = t[y][x]
            k += 1
        return k

    center = [z for z in range(n) if all(t[z][x] == t[x][z] for x in range(n))]
    squares = {t[x][x] for x in range(n)}
    comms = set()
    inv = [next(y for y in range(n) if t[x][y] == e) for x in range(n)]
    for a, b in itertools.product(range(n), repeat=2):
        comms.add(t[t[inv[a]][inv[b]]][t[a][b]])
    centralizers = sorted(
        (order(x), sum(1 for y in range(n) if t[x][y] == t[y][x])) for x in range(n))
    return (tuple(centralizers), len(center), len(squares), len(comms))


def isomorphic(g, h):
    n = len(g)
    if n != len(h) or invariants(g) != invariants(h):
        return False
    eg, eh = identity_of(g), identity_of(h)
    # greedy generating set of g
    gens, span = [], {eg}
    for x in range(n):
        if x not in span:
            gens.append(x)
            span = set(closure_indices(g, gens, eg))
    for images in itertools.product(range(n), repeat=len(gens)):
        phi = {eg: eh}
        frontier = [eg]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, t_img in zip(gens, images):
                    y = g[x][s]
                    img = h[phi[x]][t_img]
                    if y in phi:
                        if phi[y] != img:
                            ok = False
                            break
                    else:
                        phi[y] = img
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(set(phi.values())) != n:
            continue
        if all(phi[g[a][b]] == h[phi[a]][phi[b]] for a in range(n) for b in range(n)):
            return True
    return False


def closure_indices(t, gens, e):
    seen, frontier = {e}, [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = t[x][s]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def corpus():
    c = cyclic
    groups = {
        "c1": c(1), "c2": c(2), "c3": c(3), "c4": c(4), "c2xc2": direct(c(2), c(2)),
        "c5": c(5), "c6": c(6), "s3": metacyclic(3, 2, 2, 0), "c7": c(7),
        "c8": c(8), "c4xc2": direct(c(4), c(2)), "c2xc2xc2": direct(direct(c(2), c(2)), c(2)),
        "d4": metacyclic(4, 2, 3, 0), "q8": metacyclic(4, 2, 3, 2),
        "c9": c(9), "c3xc3": direct(c(3), c(3)), "c10": c(10), "d5": metacyclic(5, 2, 4, 0),
        "c11": c(11), "c12": c(12), "c6xc2": direct(c(6), c(2)),
        "a4": permutation_group([(1, 2, 0, 3), (1, 0, 3, 2)]),
        "d6": metacyclic(6, 2, 5, 0), "dic3": metacyclic(3, 4, 2, 0),
        "c13": c(13), "c14": c(14), "d7": metacyclic(7, 2, 6, 0), "c15": c(15),
        "c16": c(16), "c4xc4": direct(c(4), c(4)),
        # (C4 x C2) x| C2 with a -> ab, b -> b; C4 x C2 element (i, j) -> 2i + j
        "c4xc2_sd_c2": semidirect(direct(c(4), c(2)),
                                  [2 * i + ((j + i) % 2) for i in range(4) for j in range(2)], 2),
        "c4_sd_c4": metacyclic(4, 4, 3, 0), "c8xc2": direct(c(8), c(2)),
        "m16": metacyclic(8, 2, 5, 0), "d8": metacyclic(8, 2, 7, 0),
        "sd16": metacyclic(8, 2, 3, 0), "q16": metacyclic(8, 2, 7, 4),
        "c4xc2xc2": direct(direct(c(4), c(2)), c(2)), "d4xc2": direct(metacyclic(4, 2, 3, 0), c(2)),
        "q8xc2": direct(metacyclic(4, 2, 3, 2), c(2)), "pauli": pauli_group(),
        "c2xc2xc2xc2": direct(direct(c(2), c(2)), direct(c(2), c(2))),
        "s4": permutation_group([(1, 2, 3, 0), (1, 0, 2, 3)]),
    }
    return groups


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "corpus/groups")
    out.mkdir(parents=True, exist_ok=True)
    groups = corpus()
    for name, t in groups.items():
        check_group(t)
    names = list(groups)
    for a, b in itertools.combinations(names, 2):
        if len(groups[a]) == len(groups[b]) and isomorphic(groups[a], groups[b]):
            raise SystemExit(f"{a} and {b} are isomorphic")
    counts = {}
    for name, t in groups.items():
        counts[len(t)] = counts.get(len(t), 0) + 1
        doc = {"schema": "group", "name": name, "order": len(t), "mult": t}
        text = json.dumps(doc, separators=(",", ":"))
        (out / f"{name}.json").write_text(text + "\n")
    print(f"wrote {len(groups)} groups; per order: {dict(sorted(counts.items()))}")


if __name__ == "__main__":
    main()
