"""Pure-Python reference kernels. ``_kernels.pyx`` mirrors these exactly."""
from __future__ import annotations


def graph_automorphisms(labels, codes):
    """All permutations p with labels[p[i]] == labels[i] and codes[p[i]][p[j]] == codes[i][j].

    Returned in lexicographic order of the image tuple.
    """
    n = len(labels)
    image = [-1] * n
    used = [False] * n
    out = []

    def extend(i):
        if i == n:
            out.append(tuple(image))
            return
        li = labels[i]
        ci = codes[i]
        for t in range(n):
            if used[t] or labels[t] != li or codes[t][t] != ci[i]:
                continue
            ct = codes[t]
            ok = True
            for j in range(i):
                pj = image[j]
                if ct[pj] != ci[j] or codes[pj][t] != codes[j][i]:
                    ok = False
                    break
            if ok:
                image[i] = t
                used[t] = True
                extend(i + 1)
                used[t] = False
        image[i] = -1

    extend(0)
    return out


def flip_orbit(start, flip_masks):
    """States reachable from ``start``; a move at set bit w XORs ``flip_masks[w]``."""
    seen = {start}
    stack = [start]
    nbits = len(flip_masks)
    while stack:
        s = stack.pop()
        for w in range(nbits):
            fm = flip_masks[w]
            if fm and (s >> w) & 1:
                t = s ^ fm
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return sorted(seen)


def flip_orbits(eligible, flip_masks):
    """Partition every submask of ``eligible`` into flip orbits (each sorted; orbits ordered by min)."""
    subs = []
    s = eligible
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & eligible
    subs.sort()
    done = set()
    orbits = []
    for s in subs:
        if s in done:
            continue
        orb = flip_orbit(s, flip_masks)
        done.update(orb)
        orbits.append(orb)
    return orbits
