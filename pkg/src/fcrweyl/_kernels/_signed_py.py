"""Pure-Python signed-permutation kernels.

A Weyl group element of a classical root system is a signed permutation of
the coordinate vectors.  It is encoded as a tuple ``img`` of length ``n``
with ``w(e_i) = sign(img[i]) * e_{|img[i]| - 1}``.  The compiled module
``_signed`` exposes the same functions with the same semantics.
"""


def identity(n):
    return tuple(range(1, n + 1))


def compose(a, b):
    # (a b)(e_i) = a(b(e_i))
    out = []
    for x in b:
        y = a[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def invert(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[abs(x) - 1] = i + 1 if x > 0 else -(i + 1)
    return tuple(out)


def act(a, v):
    out = [0] * len(a)
    for i, x in enumerate(a):
        if x > 0:
            out[x - 1] = v[i]
        else:
            out[-x - 1] = -v[i]
    return tuple(out)


def _negative_image(a, root):
    n = len(a)
    w = [0] * n
    for i in range(n):
        c = root[i]
        if c:
            x = a[i]
            if x > 0:
                w[x - 1] = c
            else:
                w[-x - 1] = -c
    for c in w:
        if c:
            return c < 0
    return False


def negative_indices(a, roots):
    """Indices ``k`` with ``a(roots[k])`` lexicographically negative."""
    return tuple(k for k, r in enumerate(roots) if _negative_image(a, r))


def count_negative(a, roots):
    return sum(1 for r in roots if _negative_image(a, r))


def enumerate_bfs(gens, cap):
    """Breadth-first closure under right multiplication by ``gens``.

    Returns ``(elements, words)`` with the identity first; words are tuples of
    1-based generator indices and are reduced because BFS reaches each element
    at its distance from the identity.
    """
    n = len(gens[0]) if gens else 0
    start = identity(n)
    seen = {start: ()}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            word = seen[w]
            for k, s in enumerate(gens):
                u = compose(w, s)
                if u not in seen:
                    seen[u] = word + (k + 1,)
                    order.append(u)
                    nxt.append(u)
                    if len(order) > cap:
                        raise OverflowError(f"group exceeds cap {cap}")
        frontier = nxt
    return order, [seen[w] for w in order]
