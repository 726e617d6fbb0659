"""Brute-force reference computations.

These deliberately avoid the library's graph machinery: they work on raw
coordinate tuples and exhaustive enumeration of subsets or permutations.
"""

import itertools


def adjacent_by_definition(p, q, l):
    """Distinct, at most l indices with |difference| = 1, equality elsewhere."""
    if p == q:
        return False
    unit = [k for k in range(len(p)) if abs(p[k] - q[k]) == 1]
    others_equal = all(p[s] == q[s] for s in range(len(p)) if abs(p[s] - q[s]) != 1)
    return len(unit) <= l and others_equal


def is_connected_by_chains(points, l):
    """Grow the set reachable from the first point until it stops changing."""
    points = list(points)
    if len(points) <= 1:
        return True
    reached = {points[0]}
    while True:
        grown = {q for q in points for p in reached if adjacent_by_definition(p, q, l)}
        if grown <= reached:
            break
        reached |= grown
    return len(reached) == len(points)


def clique_census(points, l):
    """alpha_r by scanning every subset."""
    points = list(points)
    counts = []
    for size in range(1, len(points) + 1):
        c = sum(1 for sub in itertools.combinations(points, size)
                if all(adjacent_by_definition(a, b, l) for a, b in itertools.combinations(sub, 2)))
        if c == 0:
            break
        counts.append(c)
    return tuple(counts)


def euler_by_subsets(points, l):
    return sum((-1) ** r * a for r, a in enumerate(clique_census(points, l)))


def continuous_by_connected_subsets(table, src_points, src_l, tgt_l):
    """Every connected subset of the source has a connected image."""
    src_points = list(src_points)
    for size in range(1, len(src_points) + 1):
        for sub in itertools.combinations(src_points, size):
            if is_connected_by_chains(sub, src_l):
                if not is_connected_by_chains(set(table[p] for p in sub), tgt_l):
                    return False
    return True


def isomorphic_by_permutations(a_points, a_l, b_points, b_l):
    a_points, b_points = list(a_points), list(b_points)
    if len(a_points) != len(b_points):
        return False
    for perm in itertools.permutations(b_points):
        if all(adjacent_by_definition(a_points[i], a_points[j], a_l)
               == adjacent_by_definition(perm[i], perm[j], b_l)
               for i, j in itertools.combinations(range(len(a_points)), 2)):
            return True
    return False


def ray_orders_by_permutations(points, l):
    out = []
    for perm in itertools.permutations(sorted(points)):
        ok = all(is_connected_by_chains(perm[:i], l) and is_connected_by_chains(perm[i + 1:], l)
                 for i in range(len(perm)))
        if ok:
            out.append(perm)
    return out


def orthant_neighbors(s, l):
    """kappa_l neighbors of s inside the non-negative orthant, by scanning a 3^n cube."""
    out = []
    for delta in itertools.product((-1, 0, 1), repeat=len(s)):
        q = tuple(a + b for a, b in zip(s, delta))
        if min(q, default=0) >= 0 and adjacent_by_definition(s, q, l):
            out.append(q)
    return out
