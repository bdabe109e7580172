"""Canonical forms of integer point configurations up to GL(n, Z).

The approach is the usual one for lattice polytopes: the vertex/facet
pairing matrix is invariant, so colour refinement on it (plus
individualisation when refinement stalls) produces a small canonical set
of vertex orderings.  For each ordering the Hermite normal form of the
coordinate matrix is computed; the lexicographic minimum over all
orderings is the key.
"""
from .linalg import hermite_normal_form


def _relabel(signatures):
    ranks = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [ranks[s] for s in signatures]


def _refine(vcol, fcol, pairing):
    nf, nv = len(pairing), len(vcol)
    while True:
        vsig = [
            (vcol[v], tuple(sorted((pairing[f][v], fcol[f]) for f in range(nf))))
            for v in range(nv)
        ]
        fsig = [
            (fcol[f], tuple(sorted((pairing[f][v], vcol[v]) for v in range(nv))))
            for f in range(nf)
        ]
        nvcol, nfcol = _relabel(vsig), _relabel(fsig)
        if len(set(nvcol)) == len(set(vcol)) and len(set(nfcol)) == len(set(fcol)):
            return nvcol, nfcol
        vcol, fcol = nvcol, nfcol


def canonical_orderings(pairing, npoints):
    """Yield point orderings (tuples of indices) that depend only on the
    isomorphism class of the weighted incidence structure ``pairing``."""
    vcol, fcol = _refine([0] * npoints, [0] * len(pairing), pairing)
    stack = [(vcol, fcol)]
    while stack:
        vcol, fcol = stack.pop()
        cells = {}
        for v, c in enumerate(vcol):
            cells.setdefault(c, []).append(v)
        target = min((c for c, members in cells.items() if len(members) > 1), default=None)
        if target is None:
            yield tuple(sorted(range(npoints), key=vcol.__getitem__))
            continue
        for v in cells[target]:
            ind = list(vcol)
            ind[v] = -1
            stack.append(_refine(ind, fcol, pairing))


def configuration_key(points, pairing, affine):
    """Lexicographically minimal HNF over canonical orderings.

    With ``affine`` the first point of each ordering is subtracted, so the
    key is also invariant under integer translations.
    """
    best = None
    for order in canonical_orderings(pairing, len(points)):
        if affine:
            base = points[order[0]]
            cols = [[a - b for a, b in zip(points[i], base)] for i in order]
        else:
            cols = [points[i] for i in order]
        n = len(cols[0])
        matrix = [[int(cols[j][i]) for j in range(len(cols))] for i in range(n)]
        h = hermite_normal_form(matrix)
        if best is None or h < best:
            best = h
    return best


def encode_key(tag, dim, hnf):
    rows = ";".join(",".join(str(x) for x in row) for row in hnf)
    return f"{tag}{dim}:{rows}".encode("ascii")
