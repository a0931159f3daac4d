"""Pure-Python enumeration kernels.

Elements are ``bytes``: entry i holds ``(image_index << 1) | sign_bit``
for the signed image of index i.  The same encoding serves window
elements (indices are letters) and reflection-table elements (indices
are positive roots), so one kernel family drives every census.

The compiled twin in ``_kernels_cy.pyx`` implements the identical API;
``coxlen._kernels`` picks whichever is importable.
"""

from __future__ import annotations

BACKEND = "pure-python"


def identity_elem(n: int) -> bytes:
    return bytes(i << 1 for i in range(n))


def compose(g: bytes, h: bytes) -> bytes:
    """g after h: (g∘h)(i) = g(h(i)) with sign propagation."""
    return bytes(g[c >> 1] ^ (c & 1) for c in h)


def inverse(g: bytes) -> bytes:
    out = bytearray(len(g))
    for i, c in enumerate(g):
        out[c >> 1] = (i << 1) | (c & 1)
    return bytes(out)


def sign_count(g: bytes) -> int:
    return sum(c & 1 for c in g)


def is_involution(g: bytes) -> bool:
    for i, c in enumerate(g):
        if (g[c >> 1] ^ (c & 1)) != (i << 1):
            return False
    return True


def conjugate(g: bytes, x: bytes, g_inv: bytes) -> bytes:
    return compose(compose(g, x), g_inv)


def closure(gens: list[bytes], limit: int) -> list[bytes]:
    """All products of the generators in breadth-first order.

    Raises RuntimeError when the group would exceed ``limit`` elements.
    """
    n = len(gens[0])
    ident = identity_elem(n)
    seen = {ident}
    order = [ident]
    head = 0
    while head < len(order):
        w = order[head]
        head += 1
        for g in gens:
            v = compose(w, g)
            if v not in seen:
                if len(order) >= limit:
                    raise RuntimeError("group closure exceeds configured limit")
                seen.add(v)
                order.append(v)
    return order


def conjugacy_orbit(start: bytes, gens: list[bytes], limit: int) -> list[bytes]:
    """Orbit of ``start`` under conjugation by the listed generators."""
    moves = []
    for g in gens:
        gi = inverse(g)
        moves.append((g, gi))
        if gi != g:
            moves.append((gi, g))
    seen = {start}
    order = [start]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for g, gi in moves:
            y = compose(compose(g, x), gi)
            if y not in seen:
                if len(order) >= limit:
                    raise RuntimeError("conjugacy orbit exceeds configured limit")
                seen.add(y)
                order.append(y)
    return order


def involution_filter(elements: list[bytes]) -> list[bytes]:
    """The elements of order dividing 2, identity included."""
    return [x for x in elements if is_involution(x)]


def _is_reversing(x: bytes, w: bytes, w_inv: bytes) -> bool:
    """Whether x∘w∘x = w⁻¹, tested as x∘w = w⁻¹∘x without allocation."""
    for i in range(len(w)):
        cw = w[i]
        cx = x[i]
        if (x[cw >> 1] ^ (cw & 1)) != (w_inv[cx >> 1] ^ (cx & 1)):
            return False
    return True


def reversing_excess(
    w: bytes,
    w_inv: bytes,
    invs: list[bytes],
    inv_lengths: list[int],
    length_map,
    l_w: int,
    stop_at: int = 0,
):
    """Minimum of ℓ(x) + ℓ(x∘w) − ℓ(w) over involutions x with x·w·x = w⁻¹.

    ``length_map`` maps an element to its length; None means lengths are
    sign counts (true for reflection-table elements).  Since the minimum
    is never negative, the scan stops early once ``stop_at`` (default 0)
    is reached.  Returns (min, witness_index, reversing_count); min is -1
    when no reversing involution was seen.
    """
    best = -1
    best_idx = -1
    reversing = 0
    for idx, x in enumerate(invs):
        if not _is_reversing(x, w, w_inv):
            continue
        reversing += 1
        tau = compose(x, w)
        lt = sign_count(tau) if length_map is None else length_map[tau]
        exc = inv_lengths[idx] + lt - l_w
        if best < 0 or exc < best:
            best = exc
            best_idx = idx
            if stop_at >= 0 and best <= stop_at:
                break
    return best, best_idx, reversing


def reversing_stats(
    w: bytes,
    w_inv: bytes,
    invs: list[bytes],
    inv_lengths: list[int],
    length_map,
    l_w: int,
):
    """Count reversing involutions and how many give additive lengths."""
    pairs = 0
    additive = 0
    for idx, x in enumerate(invs):
        if not _is_reversing(x, w, w_inv):
            continue
        pairs += 1
        tau = compose(x, w)
        lt = sign_count(tau) if length_map is None else length_map[tau]
        if inv_lengths[idx] + lt == l_w:
            additive += 1
    return pairs, additive
