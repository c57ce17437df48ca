#!/usr/bin/env python3
"""Regenerate the bundled strongly regular graph files under data/sr/.

Every family here is tied to regular two-graphs:

  * SR(16,6,2,2): the rook graph and the Shrikhande graph.
  * SR(25,12,5,6) and SR(26,10,3,4): descendants and regular members of
    the regular two-graphs on 26 vertices. Seeds are the Paley graph, two
    Latin square graphs and two-graphs found by a SAT search with a
    prescribed automorphism of order 13; the families are then closed
    under descendants, regular switching and Godsil-McKay switching.
  * SR(28,12,6,4): T(8) and the regular members of its switching class.
  * SR(29,14,6,7): descendants of the regular two-graphs on 30 vertices,
    found by SAT searches with prescribed automorphisms (cycle type
    15^2, 3^8 1^6 and 2^12 1^6), plus the Paley graph.

A two-graph on n vertices is represented by a graph in its switching
class; it is regular exactly when every pair is split evenly by the other
n - 2 vertices, which is what the SAT encoding asks for.

Graphs are deduplicated by nauty certificates. The script stops with an
error when a family does not reach its known size.

Requires: numpy, numba, pynauty, python-sat.
"""

import argparse
import itertools
import sys
from pathlib import Path

import numpy as np
import numba
import pynauty
from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Cadical153

FAMILIES = {
    (16, 6, 2, 2): 2,
    (25, 12, 5, 6): 15,
    (26, 10, 3, 4): 10,
    (28, 12, 6, 4): 4,
    (29, 14, 6, 7): 41,
}


def srg_params(a):
    n = a.shape[0]
    deg = a.sum(axis=1)
    if not np.all(deg == deg[0]):
        return None
    common = a @ a
    off = ~np.eye(n, dtype=bool)
    adj = (a == 1) & off
    non = (a == 0) & off
    lam = set(common[adj].tolist())
    mu = set(common[non].tolist())
    if len(lam) > 1 or len(mu) > 1:
        return None
    return (n, int(deg[0]), lam.pop() if lam else 0, mu.pop() if mu else 0)


def certificate(a):
    n = a.shape[0]
    adj = {v: [int(u) for u in np.nonzero(a[v])[0]] for v in range(n)}
    g = pynauty.Graph(n, directed=False, adjacency_dict=adj)
    return pynauty.certificate(g)


def rook_4x4():
    cells = [(r, c) for r in range(4) for c in range(4)]
    a = np.zeros((16, 16), dtype=np.int64)
    for i, (r1, c1) in enumerate(cells):
        for j, (r2, c2) in enumerate(cells):
            if i != j and (r1 == r2 or c1 == c2):
                a[i, j] = 1
    return a


def shrikhande():
    cells = [(r, c) for r in range(4) for c in range(4)]
    conn = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    a = np.zeros((16, 16), dtype=np.int64)
    for i, (r1, c1) in enumerate(cells):
        for j, (r2, c2) in enumerate(cells):
            if ((r1 - r2) % 4, (c1 - c2) % 4) in conn:
                a[i, j] = 1
    return a


def paley_prime(p):
    squares = {(x * x) % p for x in range(1, p)}
    a = np.zeros((p, p), dtype=np.int64)
    for i in range(p):
        for j in range(p):
            if i != j and (i - j) % p in squares:
                a[i, j] = 1
    return a


def paley_25():
    # GF(25) = GF(5)[x] / (x^2 - 2)
    elems = [(u, v) for u in range(5) for v in range(5)]

    def mul(p, q):
        return ((p[0] * q[0] + 2 * p[1] * q[1]) % 5, (p[0] * q[1] + p[1] * q[0]) % 5)

    squares = {mul(e, e) for e in elems if e != (0, 0)}
    a = np.zeros((25, 25), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            d = ((p[0] - q[0]) % 5, (p[1] - q[1]) % 5)
            if i != j and d in squares:
                a[i, j] = 1
    return a


def latin_square_graph(square):
    m = len(square)
    cells = [(r, c) for r in range(m) for c in range(m)]
    a = np.zeros((m * m, m * m), dtype=np.int64)
    for i, (r1, c1) in enumerate(cells):
        for j, (r2, c2) in enumerate(cells):
            if i != j and (r1 == r2 or c1 == c2 or square[r1][c1] == square[r2][c2]):
                a[i, j] = 1
    return a


def triangular_graph(m):
    pairs = list(itertools.combinations(range(m), 2))
    a = np.zeros((len(pairs), len(pairs)), dtype=np.int64)
    for i, p in enumerate(pairs):
        for j, q in enumerate(pairs):
            if i != j and set(p) & set(q):
                a[i, j] = 1
    return a


def descendants(a):
    """Descendants of the two-graph of a + K1: isolate each vertex by switching, then delete it."""
    n = a.shape[0]
    big = np.zeros((n + 1, n + 1), dtype=np.int64)
    big[:n, :n] = a
    out = []
    for v in range(n + 1):
        s = big[v].astype(bool)
        flip = np.logical_xor.outer(s, s) == False  # noqa: E712  pairs on the same side keep adjacency
        switched = np.where(flip, big, 1 - big)
        np.fill_diagonal(switched, 0)
        keep = [u for u in range(n + 1) if u != v]
        out.append(switched[np.ix_(keep, keep)])
    return out


@numba.njit(cache=True)
def _gm_sets(a, size):
    n = a.shape[0]
    found = []
    idx = np.arange(size)
    while True:
        # induced subgraph on idx must be regular
        ok = True
        d0 = -1
        for i in range(size):
            d = 0
            for j in range(size):
                d += a[idx[i], idx[j]]
            if d0 < 0:
                d0 = d
            elif d != d0:
                ok = False
                break
        if ok:
            half = 0
            for v in range(n):
                inside = False
                for i in range(size):
                    if idx[i] == v:
                        inside = True
                if inside:
                    continue
                c = 0
                for i in range(size):
                    c += a[v, idx[i]]
                if c == size // 2:
                    half += 1
                elif c != 0 and c != size:
                    ok = False
                    break
            if ok and half > 0:
                found.append(idx.copy())
        # next combination
        i = size - 1
        while i >= 0 and idx[i] == n - size + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, size):
            idx[j] = idx[j - 1] + 1
    return found


def gm_switchings(a, size):
    out = []
    n = a.shape[0]
    for cset in _gm_sets(a, size):
        cset = list(cset)
        b = a.copy()
        for v in range(n):
            if v in cset:
                continue
            if a[v, cset].sum() == size // 2:
                b[v, cset] = 1 - a[v, cset]
                b[cset, v] = 1 - a[cset, v]
        out.append(b)
    return out


@numba.njit(cache=True)
def _regular_switchings(a, target):
    """Gray-code walk over switching sets avoiding vertex 0; returns sets giving a target-regular graph."""
    n = a.shape[0]
    b = a.copy()
    deg = b.sum(axis=1)
    inset = np.zeros(n, dtype=np.int64)
    found = []
    total = 1 << (n - 1)
    for step in range(1, total):
        w = 1
        s = step
        while (s & 1) == 0:
            s >>= 1
            w += 1
        inset[w] ^= 1
        for u in range(n):
            if u == w:
                continue
            if b[w, u] == 1:
                b[w, u] = 0
                b[u, w] = 0
                deg[u] -= 1
                deg[w] -= 1
            else:
                b[w, u] = 1
                b[u, w] = 1
                deg[u] += 1
                deg[w] += 1
        if deg[w] == target:
            ok = True
            for u in range(n):
                if deg[u] != target:
                    ok = False
                    break
            if ok:
                found.append(inset.copy())
    return found


def regular_in_switching_class(a, target):
    out = []
    for inset in _regular_switchings(a.astype(np.int64), target):
        s = inset.astype(bool)
        same = ~np.logical_xor.outer(s, s)
        b = np.where(same, a, 1 - a)
        np.fill_diagonal(b, 0)
        out.append(b)
    return out


def encode_graph6(a):
    n = a.shape[0]
    assert n <= 62
    bits = [int(a[i, j]) for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


class Family:
    def __init__(self, params):
        self.params = params
        self.graphs = {}

    def add(self, a):
        if srg_params(a) != self.params:
            return False
        cert = certificate(a)
        if cert in self.graphs:
            return False
        self.graphs[cert] = a
        return True


def two_graph_descendants(b):
    """Isolate each vertex by switching on its neighbourhood, then delete it."""
    n = b.shape[0]
    out = []
    for v in range(n):
        s = b[v].astype(bool)
        sw = np.where(np.logical_xor.outer(s, s), 1 - b, b)
        np.fill_diagonal(sw, 0)
        keep = [u for u in range(n) if u != v]
        out.append(sw[np.ix_(keep, keep)])
    return out


def with_isolated_vertex(a):
    n = a.shape[0]
    big = np.zeros((n + 1, n + 1), dtype=np.int64)
    big[:n, :n] = a
    return big


def regular_two_graphs(n, order, fixed, max_solutions):
    """Regular two-graphs on n vertices invariant under a permutation with
    (n - fixed) / order cycles of length `order`, as switching-class members."""
    perm = list(range(n))
    for c in range((n - fixed) // order):
        cyc = list(range(c * order, (c + 1) * order))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
    pool = IDPool()
    rep, reps_of = {}, []
    for i, j in itertools.combinations(range(n), 2):
        if (i, j) in rep:
            continue
        v = pool.id(("x", i, j))
        a, b = i, j
        while (min(a, b), max(a, b)) not in rep:
            rep[(min(a, b), max(a, b))] = v
            a, b = perm[a], perm[b]
        reps_of.append((i, j))

    def x(i, j):
        return rep[(min(i, j), max(i, j))]

    clauses = []
    for i, j in reps_of:
        zs = []
        for k in range(n):
            if k in (i, j):
                continue
            a, b = x(i, k), x(k, j)
            z = pool.id(("z", i, j, k))
            zs.append(z)
            clauses += [[-z, -a, b], [-z, a, -b], [z, a, b], [z, -a, -b]]
        clauses += CardEnc.equals(zs, bound=(n - 2) // 2, vpool=pool,
                                  encoding=EncType.totalizer).clauses
    variables = sorted(set(rep.values()))
    out = []
    with Cadical153(bootstrap_with=clauses) as solver:
        while len(out) < max_solutions and solver.solve():
            model = {lit for lit in solver.get_model() if lit > 0}
            a = np.zeros((n, n), dtype=np.int64)
            for i, j in itertools.combinations(range(n), 2):
                if x(i, j) in model:
                    a[i, j] = a[j, i] = 1
            out.append(a)
            solver.add_clause([-v if v in model else v for v in variables])
    print(f"  two-graphs n={n} order={order} fixed={fixed}: {len(out)}", file=sys.stderr)
    return out


def close_under_switching(fam, gm_sizes, with_descendants):
    queue = list(fam.graphs.values())
    while queue:
        a = queue.pop()
        cands = []
        for size in gm_sizes:
            cands.extend(gm_switchings(a, size))
        if with_descendants:
            cands.extend(descendants(a))
        for b in cands:
            if fam.add(b):
                queue.append(b)
        print(f"  {fam.params}: {len(fam.graphs)} graphs, queue {len(queue)}", file=sys.stderr)


def close_25_26(f25, f26):
    """Closure under descendants, regular switching and Godsil-McKay switching."""
    done25, done26 = set(), set()
    changed = True
    while changed:
        changed = False
        for cert, a in list(f25.graphs.items()):
            if cert in done25:
                continue
            done25.add(cert)
            changed = True
            big = with_isolated_vertex(a)
            for d in two_graph_descendants(big):
                f25.add(d)
            for b in regular_in_switching_class(big, 10):
                f26.add(b)
            for size in (4, 6):
                for b in gm_switchings(a, size):
                    f25.add(b)
        for cert, a in list(f26.graphs.items()):
            if cert in done26:
                continue
            done26.add(cert)
            changed = True
            for d in two_graph_descendants(a):
                f25.add(d)
            for size in (4, 6):
                for b in gm_switchings(a, size):
                    f26.add(b)
        print(f"  SR25: {len(f25.graphs)}, SR26: {len(f26.graphs)}", file=sys.stderr)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "sr"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    fams = {p: Family(p) for p in FAMILIES}

    fams[(16, 6, 2, 2)].add(rook_4x4())
    fams[(16, 6, 2, 2)].add(shrikhande())

    f25 = fams[(25, 12, 5, 6)]
    f26 = fams[(26, 10, 3, 4)]
    f25.add(paley_25())
    f25.add(latin_square_graph([[(r + c) % 5 for c in range(5)] for r in range(5)]))
    f25.add(latin_square_graph([
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]))
    for b in regular_two_graphs(26, 13, 0, 40):
        for d in two_graph_descendants(b):
            f25.add(d)
        for r in regular_in_switching_class(b, 10):
            f26.add(r)
    close_25_26(f25, f26)

    f28 = fams[(28, 12, 6, 4)]
    t8 = triangular_graph(8)
    f28.add(t8)
    for b in regular_in_switching_class(t8, 12):
        f28.add(b)
    close_under_switching(f28, (4,), False)

    f29 = fams[(29, 14, 6, 7)]
    f29.add(paley_prime(29))
    for order, fixed in ((15, 0), (3, 6), (2, 6)):
        for b in regular_two_graphs(30, order, fixed, 40):
            for d in two_graph_descendants(b):
                f29.add(d)

    ok = True
    for p, expected in FAMILIES.items():
        got = len(fams[p].graphs)
        print(f"SR{p}: {got} graphs (expected {expected})", file=sys.stderr)
        ok &= got == expected
    if not ok:
        sys.exit(1)

    for p, fam in fams.items():
        name = "sr" + "".join(str(x) for x in p) + ".g6"
        lines = sorted(encode_graph6(a) for a in fam.graphs.values())
        (out / name).write_text("".join(line + "\n" for line in lines))


if __name__ == "__main__":
    main()
