# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled signed-permutation kernels (same API as ``_signed_py``)."""

cdef enum:
    MAXN = 64


def identity(int n):
    return tuple(range(1, n + 1))


def compose(tuple a, tuple b):
    cdef Py_ssize_t n = len(b), i
    cdef long x, y
    out = [0] * n
    for i in range(n):
        x = b[i]
        y = a[(x if x > 0 else -x) - 1]
        out[i] = y if x > 0 else -y
    return tuple(out)


def invert(tuple a):
    cdef Py_ssize_t n = len(a), i
    cdef long x
    out = [0] * n
    for i in range(n):
        x = a[i]
        if x > 0:
            out[x - 1] = i + 1
        else:
            out[-x - 1] = -(i + 1)
    return tuple(out)


def act(tuple a, v):
    cdef Py_ssize_t n = len(a), i
    cdef long x
    out = [0] * n
    for i in range(n):
        x = a[i]
        if x > 0:
            out[x - 1] = v[i]
        else:
            out[-x - 1] = -v[i]
    return tuple(out)


cdef inline bint _negative_image(long* img, long* root, Py_ssize_t n):
    cdef long w[MAXN]
    cdef Py_ssize_t i
    cdef long x, c
    for i in range(n):
        w[i] = 0
    for i in range(n):
        c = root[i]
        if c:
            x = img[i]
            if x > 0:
                w[x - 1] = c
            else:
                w[-x - 1] = -c
    for i in range(n):
        if w[i]:
            return w[i] < 0
    return False


cdef void _load(tuple t, long* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = t[i]


def negative_indices(tuple a, roots):
    cdef Py_ssize_t n = len(a), k
    cdef long img[MAXN]
    cdef long r[MAXN]
    if n > MAXN:
        raise ValueError("dimension too large for compiled kernel")
    _load(a, img, n)
    out = []
    for k in range(len(roots)):
        _load(tuple(roots[k]), r, n)
        if _negative_image(img, r, n):
            out.append(k)
    return tuple(out)


def count_negative(tuple a, roots):
    cdef Py_ssize_t n = len(a), k
    cdef long img[MAXN]
    cdef long r[MAXN]
    cdef long total = 0
    if n > MAXN:
        raise ValueError("dimension too large for compiled kernel")
    _load(a, img, n)
    for k in range(len(roots)):
        _load(tuple(roots[k]), r, n)
        if _negative_image(img, r, n):
            total += 1
    return total


def enumerate_bfs(gens, long cap):
    cdef Py_ssize_t n = len(gens[0]) if gens else 0
    cdef Py_ssize_t k
    start = identity(n)
    seen = {start: ()}
    order = [start]
    frontier = [start]
    cdef list nxt
    while frontier:
        nxt = []
        for w in frontier:
            word = seen[w]
            for k in range(len(gens)):
                u = compose(w, gens[k])
                if u not in seen:
                    seen[u] = word + (k + 1,)
                    order.append(u)
                    nxt.append(u)
                    if len(order) > cap:
                        raise OverflowError(f"group exceeds cap {cap}")
        frontier = nxt
    return order, [seen[w] for w in order]
