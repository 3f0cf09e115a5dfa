"""
Normal forms in graph products of groups (right-angled Coxeter groups, trace
monoids with cancellation, the Bourdon lattice, the partially commutative U+).

A word is a list of (x, e) where x names a vertex group and e is an element
of it.  A word is reduced when no two letters with the same vertex can be
brought next to each other by commutations.  Reduced words for the same
element differ only by commutations, so the lexicographically least
rearrangement is a normal form.
"""

import heapq


def insert_right(word, x, e, commutes, combine):
    """Reduced form of word * (x, e), given a reduced word.

    combine(e1, e2) returns the product in the vertex group, or None for the
    identity."""
    j = len(word) - 1
    while j >= 0:
        y, f = word[j]
        if y == x:
            g = combine(f, e)
            out = list(word)
            if g is None:
                del out[j]
            else:
                out[j] = (x, g)
            return out
        if not commutes(y, x):
            break
        j -= 1
    out = list(word)
    out.append((x, e))
    return out


def reduce_word(word, commutes, combine, start=()):
    out = list(start)
    for x, e in word:
        out = insert_right(out, x, e, commutes, combine)
    return out


def lex_normal(word, commutes, key):
    """Least rearrangement of a reduced word, letters compared by key(x)."""
    n = len(word)
    if n < 2:
        return list(word)
    succ = [[] for _ in range(n)]
    indeg = [0]*n
    for j in range(n):
        xj = word[j][0]
        for k in range(j+1, n):
            xk = word[k][0]
            if xj == xk or not commutes(xj, xk):
                succ[j].append(k)
                indeg[k] += 1
    heap = [(key(word[j][0]), j) for j in range(n) if indeg[j] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, j = heapq.heappop(heap)
        out.append(word[j])
        for k in succ[j]:
            indeg[k] -= 1
            if indeg[k] == 0:
                heapq.heappush(heap, (key(word[k][0]), k))
    return out


def foata_levels(word, commutes):
    """Foata decomposition: level of each letter = 1 + max level of an earlier
    letter it cannot pass."""
    levels = []
    for j, (x, _) in enumerate(word):
        lev = 0
        for k in range(j):
            y = word[k][0]
            if y == x or not commutes(y, x):
                lev = max(lev, levels[k] + 1)
        levels.append(lev)
    return levels


def foata_normal(word, commutes, key):
    levels = foata_levels(word, commutes)
    order = sorted(range(len(word)), key=lambda j: (levels[j], key(word[j][0])))
    return [word[j] for j in order]
