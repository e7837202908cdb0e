#!/usr/bin/env python3
"""Brute-force oracle used to derive the frozen expected values in the C++ tests.

Everything here works straight from the definitions (quantifiers over all
cyclic starts, all subsystems, all orderings) and shares no code with the
library.
"""
from itertools import combinations, permutations


def cyc_less(i, a, b, n):
    order = [((i - 1 + t) % n) + 1 for t in range(n)]
    return order.index(a) < order.index(b)


def dominates(X, Y, i, n):
    return all(cyc_less(i, x, y, n) for x in X - Y for y in Y - X)


def ws(X, Y, n):
    return any(dominates(X, Y, j, n) for j in range(1, n + 1))


def grass(n, r):
    return [frozenset(c) for c in combinations(range(1, n + 1), r)]


def lit(X):
    return "".join(str(e) for e in sorted(X)) or "{}"


def perm_to_necklace(pi, n):
    inv = {pi[i]: i for i in pi}
    le = lambda i, a, b: a == b or cyc_less(i, a, b, n)
    return [frozenset(j for j in range(1, n + 1) if le(i, j, inv[j])) for i in range(1, n + 1)]


def necklace_perm(N, n):
    pi = {}
    for i in range(1, n + 1):
        nxt = N[i % n]
        added = nxt - (N[i - 1] - {i})
        pi[i] = next(iter(added))
    return pi


def alignments(pi, n):
    inv = {pi[i]: i for i in pi}
    out = []
    for i in range(1, n + 1):
        if pi[i] == i:
            continue
        for j in range(1, n + 1):
            if i == j:
                continue
            a, b, c, d = inv[i], i, j, inv[j]
            # strict cyclic order of a,b,c and c <= d, d distinct from a,b
            ok = False
            for s in range(1, n + 1):
                if cyc_less(s, a, b, n) and cyc_less(s, b, c, n) and (c == d or cyc_less(s, c, d, n)):
                    ok = True
            if ok:
                out.append((i, j))
    return out


def interior(N, n, r):
    return [X for X in grass(n, r) if all(dominates(N[i - 1], X, i, n) for i in range(1, n + 1))]


def sep_fan(N, n, r):
    return [X for X in grass(n, r) if all(ws(X, M, n) for M in N)]


def maximal_brute(domain, n):
    dom = list(domain)
    seps = []
    for mask in range(1 << len(dom)):
        S = [dom[k] for k in range(len(dom)) if mask >> k & 1]
        if all(ws(a, b, n) for a, b in combinations(S, 2)):
            seps.append(frozenset(S))
    return [S for S in seps if not any(S < T for T in seps)]


def cliques_of(C, r, n):
    white, black = {}, {}
    for X in C:
        for x in X:
            white.setdefault(X - {x}, []).append(X)
        for y in set(range(1, n + 1)) - X:
            black.setdefault(X | {y}, []).append(X)
    return ({k: v for k, v in white.items() if len(v) >= 3},
            {k: v for k, v in black.items() if len(v) >= 3}, white, black)


if __name__ == "__main__":
    print("cyclic_less(2,4,1,n4)", cyc_less(2, 4, 1, 4), "cyclic_less(3,2,3)", cyc_less(3, 2, 3, 4))
    print("dominates 24,12,i2", dominates({2, 4}, {1, 2}, 2, 4))
    print("ws 13,24", ws({1, 3}, {2, 4}, 4), "ws 126 467", ws({1, 2, 6}, {4, 6, 7}, 7))
    N = [frozenset(s) for s in ({1, 2}, {2, 4}, {3, 4}, {1, 4})]
    pi = necklace_perm(N, 4)
    print("perm of 12,24,34,14", pi)
    print("necklace of perm", [lit(x) for x in perm_to_necklace(pi, 4)])
    print("alignments", alignments(pi, 4))
    I = interior(N, 4, 2); S = sep_fan(N, 4, 2)
    print("Int", sorted(lit(x) for x in I), "S", sorted(lit(x) for x in S))
    print("maximal Gr(2,4)", [sorted(lit(x) for x in m) for m in maximal_brute(grass(4, 2), 4)])
    print("maximal Int", [sorted(lit(x) for x in m) for m in maximal_brute(I, 4)])
    print("maximal Out", [sorted(lit(x) for x in m) for m in maximal_brute([x for x in S if x not in I], 4)])
    # rank identity sweep
    for n in range(1, 6):
        for p in permutations(range(1, n + 1)):
            pi = {i + 1: p[i] for i in range(n)}
            Nk = perm_to_necklace(pi, n)
            r = len(Nk[0])
            I = interior(Nk, n, r)
            ranks = {len(m) for m in maximal_brute(I, n)}
            assert ranks == {r * (n - r) + 1 - len(alignments(pi, n))}, (pi, ranks)
    print("rank identity holds for all n<=5 (brute-force subsystems)")
    fig = [frozenset(int(c) for c in s) for s in
           "127 123 234 345 456 567 167 126 124 134 346 467 146".split()]
    w, b, wall, ball = cliques_of(fig, 3, 7)
    print("fig2 white cells", sorted(lit(k) for k in w), "black cells", sorted(lit(k) for k in b))
    print("fig2 cell count", len(w) + len(b))
    C = [frozenset(s) for s in ({1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3})]
    w, b, _, _ = cliques_of(C, 2, 4)
    print("C5 white", sorted(lit(k) for k in w), "black", sorted(lit(k) for k in b))

    # Maximal collections of C(n, r) as maximal cliques of the separation graph,
    # counted with networkx (an implementation independent of the library).
    import networkx as nx
    counts = {}
    for n in range(2, 8):
        for r in range(1, n):
            G = nx.Graph()
            V = grass(n, r)
            G.add_nodes_from(V)
            G.add_edges_from((a, b) for a, b in combinations(V, 2) if ws(a, b, n))
            sizes = {len(c) for c in nx.find_cliques(G)}
            counts[(n, r)] = (sum(1 for _ in nx.find_cliques(G)), sizes)
    print("maximal counts", {k: v[0] for k, v in counts.items()})
    print("maximal sizes", {k: sorted(v[1]) for k, v in counts.items()})
    G = nx.Graph(); V = grass(8, 2); G.add_nodes_from(V)
    G.add_edges_from((a, b) for a, b in combinations(V, 2) if ws(a, b, 8))
    print("Gr(2,8) maximal count", sum(1 for _ in nx.find_cliques(G)))
    # per-permutation table on [4]: image, necklace, #alignments, |Int|, |Out|
    for p in permutations(range(1, 5)):
        pi = {i + 1: p[i] for i in range(4)}
        Nk = perm_to_necklace(pi, 4)
        r = len(Nk[0])
        I = interior(Nk, 4, r); S = sep_fan(Nk, 4, r)
        print("perm4", "".join(map(str, p)), " ".join(lit(x) for x in Nk), len(alignments(pi, 4)), len(I), len(S) - len(I))
