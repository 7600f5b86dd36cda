# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels.

Mirrors pelp._kern_py exactly (same pivot choices, same canonical
output); matrices arrive as flat int64 buffers of packed field elements.
Field arithmetic: residues for prime fields, log/antilog tables for
small extensions, digit convolution against the modulus for large ones.
Accumulators stay below 2^63 because products are reduced mod p as they
are formed (construction guarantees p^m <= 2^63 and the dispatcher only
sends p < 2^31 here).
"""

ctypedef long long i64

cdef struct Ctx:
    i64 p
    int m
    i64 order
    i64* mod
    i64* exp
    i64* log
    i64* da
    i64* db
    i64* pr


cdef inline i64 f_add(Ctx* fc, i64 a, i64 b) noexcept nogil:
    cdef i64 p = fc.p
    cdef i64 v, mult, ra, rb
    cdef int i
    if fc.m == 1:
        return (a + b) % p
    v = 0
    mult = 1
    for i in range(fc.m):
        ra = a % p
        a = a // p
        rb = b % p
        b = b // p
        v += ((ra + rb) % p) * mult
        mult *= p
    return v


cdef inline i64 f_sub(Ctx* fc, i64 a, i64 b) noexcept nogil:
    cdef i64 p = fc.p
    cdef i64 v, mult, ra, rb
    cdef int i
    if fc.m == 1:
        return (a - b + p) % p
    v = 0
    mult = 1
    for i in range(fc.m):
        ra = a % p
        a = a // p
        rb = b % p
        b = b // p
        v += ((ra - rb + p) % p) * mult
        mult *= p
    return v


cdef inline i64 f_mul(Ctx* fc, i64 a, i64 b) noexcept nogil:
    cdef i64 p = fc.p
    cdef int m = fc.m
    cdef int i, j
    cdef i64 v, c, mult
    if a == 0 or b == 0:
        return 0
    if m == 1:
        return a * b % p
    if fc.exp != NULL:
        return fc.exp[fc.log[a] + fc.log[b]]
    v = a
    for i in range(m):
        fc.da[i] = v % p
        v = v // p
    v = b
    for i in range(m):
        fc.db[i] = v % p
        v = v // p
    for i in range(2 * m - 1):
        fc.pr[i] = 0
    for i in range(m):
        if fc.da[i] != 0:
            for j in range(m):
                fc.pr[i + j] += fc.da[i] * fc.db[j] % p
    for i in range(2 * m - 2, m - 1, -1):
        c = fc.pr[i] % p
        if c != 0:
            for j in range(m):
                if fc.mod[j] != 0:
                    fc.pr[i - m + j] += c * (p - fc.mod[j] % p) % p
    v = 0
    mult = 1
    for i in range(m):
        v += (fc.pr[i] % p) * mult
        mult *= p
    return v


cdef inline i64 f_pow(Ctx* fc, i64 a, i64 e) noexcept nogil:
    cdef i64 r = 1
    while e:
        if e & 1:
            r = f_mul(fc, r, a)
        a = f_mul(fc, a, a)
        e >>= 1
    return r


cdef inline i64 f_inv(Ctx* fc, i64 a) noexcept nogil:
    if fc.m == 1:
        return f_pow(fc, a, fc.p - 2)
    if fc.exp != NULL:
        return fc.exp[fc.order - 1 - fc.log[a]]
    return f_pow(fc, a, fc.order - 2)


cdef void _init_ctx(Ctx* fc, i64 p, int m, i64[::1] mod, i64[::1] exp,
                    i64[::1] log, i64 order, i64* scratch) noexcept:
    fc.p = p
    fc.m = m
    fc.order = order
    fc.mod = &mod[0] if mod.shape[0] > 0 else NULL
    fc.exp = &exp[0] if exp.shape[0] > 0 else NULL
    fc.log = &log[0] if log.shape[0] > 0 else NULL
    fc.da = scratch
    fc.db = scratch + 64
    fc.pr = scratch + 128


def rref(object buf, Py_ssize_t nrows, Py_ssize_t ncols, i64 p, int m,
         object mod, object exp, object log, i64 order):
    """In-place reduced row echelon form on a flat row-major buffer."""
    cdef i64[::1] data = buf
    cdef i64[::1] modv = mod
    cdef i64[::1] expv = exp
    cdef i64[::1] logv = log
    cdef i64 scratch[256]
    cdef Ctx fc
    _init_ctx(&fc, p, m, modv, expv, logv, order, scratch)

    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef i64 c, f, v
    pivots = []
    for col in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if data[i * ncols + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                v = data[piv * ncols + j]
                data[piv * ncols + j] = data[r * ncols + j]
                data[r * ncols + j] = v
        v = data[r * ncols + col]
        if v != 1:
            c = f_inv(&fc, v)
            for j in range(col, ncols):
                if data[r * ncols + j] != 0:
                    data[r * ncols + j] = f_mul(&fc, c, data[r * ncols + j])
        for i in range(nrows):
            if i == r:
                continue
            f = data[i * ncols + col]
            if f != 0:
                for j in range(col, ncols):
                    v = data[r * ncols + j]
                    if v != 0:
                        data[i * ncols + j] = f_sub(&fc, data[i * ncols + j],
                                                    f_mul(&fc, f, v))
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return r, pivots


def matmul(object abuf, object bbuf, object out,
           Py_ssize_t n, Py_ssize_t inner, Py_ssize_t ncols, i64 p, int m,
           object mod, object exp, object log, i64 order):
    """out = a @ b on flat row-major buffers."""
    cdef i64[::1] a = abuf
    cdef i64[::1] b = bbuf
    cdef i64[::1] c = out
    cdef i64[::1] modv = mod
    cdef i64[::1] expv = exp
    cdef i64[::1] logv = log
    cdef i64 scratch[256]
    cdef Ctx fc
    _init_ctx(&fc, p, m, modv, expv, logv, order, scratch)

    cdef Py_ssize_t i, j, k
    cdef i64 v, w
    for i in range(n):
        for j in range(ncols):
            c[i * ncols + j] = 0
        for k in range(inner):
            v = a[i * inner + k]
            if v != 0:
                for j in range(ncols):
                    w = b[k * ncols + j]
                    if w != 0:
                        c[i * ncols + j] = f_add(&fc, c[i * ncols + j],
                                                 f_mul(&fc, v, w))
