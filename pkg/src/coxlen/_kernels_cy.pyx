# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; byte-for-byte the same API and results
as the pure twin in _kernels_py.py."""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize, PyBytes_GET_SIZE

BACKEND = "compiled"


def identity_elem(Py_ssize_t n):
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* o = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = <unsigned char> (i << 1)
    return out


cdef inline bytes _compose(const unsigned char* gp, const unsigned char* hp, Py_ssize_t n):
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* o = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    cdef unsigned char c
    for i in range(n):
        c = hp[i]
        o[i] = gp[c >> 1] ^ (c & 1)
    return out


def compose(bytes g, bytes h):
    cdef Py_ssize_t n = PyBytes_GET_SIZE(g)
    if PyBytes_GET_SIZE(h) != n:
        raise ValueError("size mismatch")
    return _compose(
        <const unsigned char*> PyBytes_AS_STRING(g),
        <const unsigned char*> PyBytes_AS_STRING(h),
        n,
    )


def inverse(bytes g):
    cdef Py_ssize_t n = PyBytes_GET_SIZE(g)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* o = <unsigned char*> PyBytes_AS_STRING(out)
    cdef const unsigned char* gp = <const unsigned char*> PyBytes_AS_STRING(g)
    cdef Py_ssize_t i
    cdef unsigned char c
    for i in range(n):
        c = gp[i]
        o[c >> 1] = <unsigned char> ((i << 1) | (c & 1))
    return out


def sign_count(bytes g):
    cdef Py_ssize_t n = PyBytes_GET_SIZE(g)
    cdef const unsigned char* gp = <const unsigned char*> PyBytes_AS_STRING(g)
    cdef Py_ssize_t i, total = 0
    for i in range(n):
        total += gp[i] & 1
    return total


cdef inline bint _is_involution(const unsigned char* gp, Py_ssize_t n):
    cdef Py_ssize_t i
    cdef unsigned char c
    for i in range(n):
        c = gp[i]
        if (gp[c >> 1] ^ (c & 1)) != <unsigned char> (i << 1):
            return False
    return True


def is_involution(bytes g):
    return bool(
        _is_involution(<const unsigned char*> PyBytes_AS_STRING(g), PyBytes_GET_SIZE(g))
    )


def conjugate(bytes g, bytes x, bytes g_inv):
    return compose(compose(g, x), g_inv)


def closure(list gens, Py_ssize_t limit):
    cdef Py_ssize_t n = PyBytes_GET_SIZE(<bytes> gens[0])
    cdef bytes ident = identity_elem(n)
    cdef set seen = {ident}
    cdef list order = [ident]
    cdef Py_ssize_t head = 0
    cdef bytes w, v, g
    while head < len(order):
        w = <bytes> order[head]
        head += 1
        for g in gens:
            v = _compose(
                <const unsigned char*> PyBytes_AS_STRING(w),
                <const unsigned char*> PyBytes_AS_STRING(g),
                n,
            )
            if v not in seen:
                if len(order) >= limit:
                    raise RuntimeError("group closure exceeds configured limit")
                seen.add(v)
                order.append(v)
    return order


def conjugacy_orbit(bytes start, list gens, Py_ssize_t limit):
    cdef Py_ssize_t n = PyBytes_GET_SIZE(start)
    cdef list moves = []
    cdef bytes g, gi, x, y
    for g in gens:
        gi = inverse(g)
        moves.append((g, gi))
        if gi != g:
            moves.append((gi, g))
    cdef set seen = {start}
    cdef list order = [start]
    cdef Py_ssize_t head = 0
    while head < len(order):
        x = <bytes> order[head]
        head += 1
        for g, gi in moves:
            y = _compose(
                <const unsigned char*> PyBytes_AS_STRING(
                    _compose(
                        <const unsigned char*> PyBytes_AS_STRING(g),
                        <const unsigned char*> PyBytes_AS_STRING(x),
                        n,
                    )
                ),
                <const unsigned char*> PyBytes_AS_STRING(gi),
                n,
            )
            if y not in seen:
                if len(order) >= limit:
                    raise RuntimeError("conjugacy orbit exceeds configured limit")
                seen.add(y)
                order.append(y)
    return order


def involution_filter(list elements):
    cdef list out = []
    cdef bytes x
    for x in elements:
        if _is_involution(
            <const unsigned char*> PyBytes_AS_STRING(x), PyBytes_GET_SIZE(x)
        ):
            out.append(x)
    return out


cdef inline bint _is_reversing(
    const unsigned char* x, const unsigned char* w, const unsigned char* winv, Py_ssize_t n
):
    cdef Py_ssize_t i
    cdef unsigned char cw, cx
    for i in range(n):
        cw = w[i]
        cx = x[i]
        if (x[cw >> 1] ^ (cw & 1)) != (winv[cx >> 1] ^ (cx & 1)):
            return False
    return True


def reversing_excess(
    bytes w,
    bytes w_inv,
    list invs,
    list inv_lengths,
    object length_map,
    long l_w,
    long stop_at=0,
):
    cdef Py_ssize_t n = PyBytes_GET_SIZE(w)
    cdef const unsigned char* wp = <const unsigned char*> PyBytes_AS_STRING(w)
    cdef const unsigned char* wip = <const unsigned char*> PyBytes_AS_STRING(w_inv)
    cdef long best = -1, exc, lt
    cdef Py_ssize_t best_idx = -1, idx, reversing = 0
    cdef bytes x, tau
    for idx in range(len(invs)):
        x = <bytes> invs[idx]
        if not _is_reversing(<const unsigned char*> PyBytes_AS_STRING(x), wp, wip, n):
            continue
        reversing += 1
        tau = _compose(<const unsigned char*> PyBytes_AS_STRING(x), wp, n)
        if length_map is None:
            lt = sign_count(tau)
        else:
            lt = <long> length_map[tau]
        exc = <long> inv_lengths[idx] + lt - l_w
        if best < 0 or exc < best:
            best = exc
            best_idx = idx
            if stop_at >= 0 and best <= stop_at:
                break
    return best, best_idx, reversing


def reversing_stats(
    bytes w,
    bytes w_inv,
    list invs,
    list inv_lengths,
    object length_map,
    long l_w,
):
    cdef Py_ssize_t n = PyBytes_GET_SIZE(w)
    cdef const unsigned char* wp = <const unsigned char*> PyBytes_AS_STRING(w)
    cdef const unsigned char* wip = <const unsigned char*> PyBytes_AS_STRING(w_inv)
    cdef Py_ssize_t idx, pairs = 0, additive = 0
    cdef long lt
    cdef bytes x, tau
    for idx in range(len(invs)):
        x = <bytes> invs[idx]
        if not _is_reversing(<const unsigned char*> PyBytes_AS_STRING(x), wp, wip, n):
            continue
        pairs += 1
        tau = _compose(<const unsigned char*> PyBytes_AS_STRING(x), wp, n)
        if length_map is None:
            lt = sign_count(tau)
        else:
            lt = <long> length_map[tau]
        if <long> inv_lengths[idx] + lt == l_w:
            additive += 1
    return pairs, additive
