"""Pure-Python kernels.  Same algorithms and output order as ``_ckernels``.

Graphs arrive in compressed form: ``indptr``/``indices`` with every row sorted
ascending, and ``neg`` flagging negative entries aligned with ``indices``.
"""


def simple_cycles(indptr, indices):
    """Every simple cycle once, as a vertex tuple rooted at its smallest
    vertex with ``cycle[1] < cycle[-1]``.

    For each root ``r`` a DFS walks only through vertices larger than ``r``;
    a cycle closes when the walk returns to ``r``.
    """
    n = len(indptr) - 1
    out = []
    on_path = [False] * n
    for r in range(n):
        path = [r]
        cursors = [indptr[r]]
        on_path[r] = True
        while path:
            x = path[-1]
            c = cursors[-1]
            if c < indptr[x + 1]:
                cursors[-1] = c + 1
                y = indices[c]
                if y == r:
                    if len(path) >= 3 and path[1] < x:
                        out.append(tuple(path))
                elif y > r and not on_path[y]:
                    path.append(y)
                    cursors.append(indptr[y])
                    on_path[y] = True
            else:
                on_path[x] = False
                path.pop()
                cursors.pop()
    return out


def negative_histogram(indptr, indices, neg):
    """``hist[k]`` = number of simple cycles with exactly ``k`` negative edges.

    Walks the same DFS as :func:`simple_cycles` without materialising cycles.
    """
    n = len(indptr) - 1
    hist = [0] * (n + 1)
    on_path = [False] * n
    for r in range(n):
        path = [r]
        cursors = [indptr[r]]
        negs = [0]
        on_path[r] = True
        while path:
            x = path[-1]
            c = cursors[-1]
            if c < indptr[x + 1]:
                cursors[-1] = c + 1
                y = indices[c]
                if y == r:
                    if len(path) >= 3 and path[1] < x:
                        hist[negs[-1] + neg[c]] += 1
                elif y > r and not on_path[y]:
                    path.append(y)
                    cursors.append(indptr[y])
                    negs.append(negs[-1] + neg[c])
                    on_path[y] = True
            else:
                on_path[x] = False
                path.pop()
                cursors.pop()
                negs.pop()
    return hist


def first_valid_marking(n, ea, eb, eneg):
    """Smallest bitmask (bit ``v`` set = vertex ``v`` marked negative) such
    that every negative edge has both ends marked and no positive edge does.
    Returns -1 when no mask works."""
    edges = list(zip(ea, eb, eneg))
    for mask in range(1 << n):
        for a, b, s in edges:
            both = (mask >> a) & (mask >> b) & 1
            if both != s:
                break
        else:
            return mask
    return -1
