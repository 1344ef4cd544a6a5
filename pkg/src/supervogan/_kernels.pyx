# cython: language_level=3
"""Compiled twins of ``_kernels_py``; same signatures, same output order."""
from libc.stdlib cimport malloc, free


cdef int _extend(int i, int n, int* labels, int* codes, int* image, char* used, list out) except -1:
    cdef int t, j, pj, li, ok
    if i == n:
        out.append(tuple([image[k] for k in range(n)]))
        return 0
    li = labels[i]
    for t in range(n):
        if used[t] or labels[t] != li or codes[t * n + t] != codes[i * n + i]:
            continue
        ok = 1
        for j in range(i):
            pj = image[j]
            if codes[t * n + pj] != codes[i * n + j] or codes[pj * n + t] != codes[j * n + i]:
                ok = 0
                break
        if ok:
            image[i] = t
            used[t] = 1
            _extend(i + 1, n, labels, codes, image, used, out)
            used[t] = 0
    image[i] = -1
    return 0


def graph_automorphisms(labels, codes):
    cdef int n = len(labels)
    cdef int i, j
    cdef int* lab = <int*>malloc(max(n, 1) * sizeof(int))
    cdef int* cod = <int*>malloc(max(n * n, 1) * sizeof(int))
    cdef int* image = <int*>malloc(max(n, 1) * sizeof(int))
    cdef char* used = <char*>malloc(max(n, 1) * sizeof(char))
    out = []
    try:
        for i in range(n):
            lab[i] = labels[i]
            image[i] = -1
            used[i] = 0
            for j in range(n):
                cod[i * n + j] = codes[i][j]
        _extend(0, n, lab, cod, image, used, out)
    finally:
        free(lab)
        free(cod)
        free(image)
        free(used)
    return out


def flip_orbit(unsigned long long start, flip_masks):
    cdef int nbits = len(flip_masks)
    cdef unsigned long long s, t, fm
    cdef int w
    cdef unsigned long long* fms = <unsigned long long*>malloc(max(nbits, 1) * sizeof(unsigned long long))
    seen = {start}
    stack = [start]
    try:
        for w in range(nbits):
            fms[w] = flip_masks[w]
        while stack:
            s = stack.pop()
            for w in range(nbits):
                fm = fms[w]
                if fm and (s >> w) & 1:
                    t = s ^ fm
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
    finally:
        free(fms)
    return sorted(seen)


def flip_orbits(unsigned long long eligible, flip_masks):
    cdef unsigned long long s = eligible
    subs = []
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
