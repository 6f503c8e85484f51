"""
Independent oracles: brute-force constructions that share no code with the
enumeration, rewriting or search routines they check.
"""

import itertools

import numpy as np


def perm_group_closure(gens):
    """All products of the given permutations (tuples on 0..n-1), by plain BFS."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def table_from_elements(elems, mul):
    index = {e: i for i, e in enumerate(elems)}
    return np.array([[index[mul(a, b)] for b in elems] for a in elems])


def group_axioms_hold(t):
    t = np.asarray(t)
    k = len(t)
    e = [i for i in range(k) if all(t[i, j] == j and t[j, i] == j for j in range(k))]
    if len(e) != 1:
        return False
    e = e[0]
    if not all((t[a] == e).sum() == 1 for a in range(k)):
        return False
    return bool(np.array_equal(t[t, :], t[:, t]))


def klein_quotient(i):
    """
    G/N_i for the Klein bottle group <a, b | a b a' b> and N_i = <a^(2^i), b^(2^i)>,
    via the normal form b^n a^m, (b^n a^m)(b^k a^l) = b^(n + (-1)^m k) a^(m + l).
    Returns (table, element list of (n, m)).
    """
    q = 2**i
    elems = [(n, m) for n in range(q) for m in range(q)]

    def mul(x, y):
        n, m = x
        k, l = y
        return ((n + (-1) ** m * k) % q, (m + l) % q)

    return table_from_elements(elems, mul), elems


def word_value(table, images, letters, inverse):
    out = 0
    for i, s in letters:
        x = images[i]
        out = table[out][x if s > 0 else inverse[x]]
    return out


def hom_count_bruteforce(p, table):
    """Count generator assignments killing every relator, with no pruning at all."""
    table = np.asarray(table)
    k = len(table)
    e = next(i for i in range(k) if all(table[i, j] == j for j in range(k)))
    assert e == 0
    inverse = [int(np.where(table[a] == 0)[0][0]) for a in range(k)]
    count = 0
    for imgs in itertools.product(range(k), repeat=p.rank):
        if all(word_value(table, imgs, r.letters, inverse) == 0 for r in p.relators):
            count += 1
    return count


def automorphism_count_bruteforce(table):
    """Bijections fixing 0 that preserve the table (only sensible for order <= 8)."""
    t = np.asarray(table)
    k = len(t)
    n = 0
    for perm in itertools.permutations(range(1, k)):
        f = np.array((0,) + perm)
        if np.array_equal(f[t], t[f][:, f]):
            n += 1
    return n


def subgroups_bruteforce(table):
    """Every subset containing 0 and closed under the product."""
    t = np.asarray(table)
    k = len(t)
    out = []
    for mask in range(1 << (k - 1)):
        s = [0] + [i for i in range(1, k) if mask >> (i - 1) & 1]
        ss = set(s)
        if all(int(t[a, b]) in ss for a in s for b in s):
            out.append(frozenset(s))
    return out
