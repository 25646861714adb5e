"""Independent brute-force oracles used to freeze expected values in the C++ tests.

Run: python3 tests/oracles/oracles.py
Nothing here shares code with the C++ implementation.
"""
from itertools import combinations, combinations_with_replacement, product
import math


def cycles(n, k):
    """All k-cycles of Q_n as frozensets of edges (plain DFS, dedupe by edge set)."""
    found = set()
    V = 1 << n

    def dfs(path):
        cur = path[-1]
        if len(path) == k:
            if bin(cur ^ path[0]).count("1") == 1:
                es = frozenset(frozenset((path[i], path[(i + 1) % k])) for i in range(k))
                found.add(es)
            return
        for b in range(n):
            u = cur ^ (1 << b)
            if u not in path and u > path[0]:
                dfs(path + [u])

    for s in range(V):
        dfs([s])
    return found


def greedy_bt(t, size):
    s = []
    c = 0
    while len(s) < size:
        c += 1
        cand = s + [c]
        sums = [sum(m) for m in combinations_with_replacement(cand, t)]
        if len(sums) == len(set(sums)):
            s = cand
    return s


def ap_free(s):
    ss = set(s)
    return not any((x + z) % 2 == 0 and (x + z) // 2 in ss and x != z for x, z in combinations(s, 2))


def r3(N):
    for size in range(N, 0, -1):
        for c in combinations(range(1, N + 1), size):
            if ap_free(c):
                return size, c
    return 0, ()


def nontrivial_solution_exists(coeffs, s):
    k = len(coeffs)
    for x in product(s, repeat=k):
        if sum(a * v for a, v in zip(coeffs, x)) != 0:
            continue
        classes = {}
        for a, v in zip(coeffs, x):
            classes[v] = classes.get(v, 0) + a
        if any(c != 0 for c in classes.values()):
            return True
    return False


K10 = [(1, 1, -1, -1), (1, 1, 1, -1, -2), (1, 2, -1, -2)]


def max_free_subset(system, N):
    """Plain include/exclude search with no clever pruning beyond the size bound."""
    best = []

    def ok(s):
        return not any(nontrivial_solution_exists(eq, s) for eq in system)

    def rec(i, chosen):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i > N or len(chosen) + (N - i + 1) <= len(best):
            return
        chosen.append(i)
        if ok_with(chosen):
            rec(i + 1, chosen)
        chosen.pop()
        rec(i + 1, chosen)

    def ok_with(s):
        c = s[-1]
        for eq in system:
            for x in product(s, repeat=len(eq)):
                if c not in x or sum(a * v for a, v in zip(eq, x)) != 0:
                    continue
                classes = {}
                for a, v in zip(eq, x):
                    classes[v] = classes.get(v, 0) + a
                if any(cc != 0 for cc in classes.values()):
                    return False
        return True

    rec(1, [])
    assert ok(best)
    return best


if __name__ == "__main__":
    print("Q3 C6:", len(cycles(3, 6)))
    for n in (3, 4, 5):
        print(f"Q{n} C6:", len(cycles(n, 6)), 16 * math.comb(n, 3) * 2 ** (n - 3))
    print("Q3 C4:", len(cycles(3, 4)), "Q4 C4:", len(cycles(4, 4)), "Q4 C8:", len(cycles(4, 8)))
    print("greedy_bt(2,5):", greedy_bt(2, 5))
    print("greedy_bt(3,3):", greedy_bt(3, 3))
    print("greedy_bt(2,6):", greedy_bt(2, 6))
    print("r3:", [r3(N)[0] for N in range(1, 17)])
    print("r3(14):", r3(14))
    # Q3 k=6 pair (empty,1),({3},2): edges {0,1} and {4,6}
    e1, e2 = frozenset((0, 1)), frozenset((4, 6))
    print("pair in C6 of Q3:", any(e1 in c and e2 in c for c in cycles(3, 6)))
    # construction 2 colors, n=4, S=(1,2,4,5), N=5
    S, N, n = (1, 2, 4, 5), 5, 4
    cols = set()
    for v in range(1 << n):
        for j in range(n):
            if v >> j & 1:
                continue
            a = sum(S[i] for i in range(n) if v >> i & 1)
            cols.add(((a + 2 * S[j]) % (2 * N), (bin(v).count("1") + 1) % 3))
    print("c2 colors n=4:", len(cols))
    best = max_free_subset(K10, 20)
    print("k=10 system N=20 max:", len(best), best)
