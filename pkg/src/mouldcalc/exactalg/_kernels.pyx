# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled twin of _kernels_py; same functions, same results.

pmul and div_linear have machine-word fast paths (64-bit monomials, int64
coefficients with overflow checks) and fall back to Python integers.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.utility cimport pair
from libcpp.vector cimport vector

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow"(int64_t a, int64_t b, int64_t* res) nogil
    bint sub_overflow "__builtin_sub_overflow"(int64_t a, int64_t b, int64_t* res) nogil
    bint add_overflow "__builtin_add_overflow"(int64_t a, int64_t b, int64_t* res) nogil

cdef int64_t WORD_LIMIT = (<int64_t>1) << 62

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1


cdef int64_t _max_abs(dict p) except -2:
    """Largest |coefficient| if every monomial fits 64 bits and |c| < 2^62, else -1."""
    cdef object m, c
    cdef int64_t best = 0, v
    for m, c in p.items():
        if m.bit_length() > 64 or not (-WORD_LIMIT < c < WORD_LIMIT):
            return -1
        v = c
        if v < 0:
            v = -v
        if v > best:
            best = v
    return best


cdef object _pmul_word(dict p, dict q):
    cdef unordered_map[uint64_t, int64_t] acc
    cdef vector[pair[uint64_t, int64_t]] qa
    cdef uint64_t m1
    cdef int64_t c1, prod, v
    cdef Py_ssize_t j, nq
    cdef object pm, pc
    cdef pair[uint64_t, int64_t] kv
    for pm, pc in q.items():
        qa.push_back(pair[uint64_t, int64_t](<uint64_t>pm, <int64_t>pc))
    nq = qa.size()
    acc.reserve(len(p) * nq)
    for pm, pc in p.items():
        m1 = pm
        c1 = pc
        for j in range(nq):
            if mul_overflow(c1, qa[j].second, &prod):
                return None
            v = acc[m1 + qa[j].first]
            if add_overflow(v, prod, &v):
                return None
            acc[m1 + qa[j].first] = v
    out = {}
    for kv in acc:
        if kv.second != 0:
            out[kv.first] = kv.second
    return out


def pmul(dict p, dict q):
    cdef dict out
    cdef object m1, c1, m2, c2, m, v
    if len(p) < len(q):
        p, q = q, p
    if len(q) > 1 and _max_abs(p) >= 0 and _max_abs(q) >= 0:
        res = _pmul_word(p, q)
        if res is not None:
            return res
    out = {}
    for m2, c2 in q.items():
        for m1, c1 in p.items():
            m = m1 + m2
            v = out.get(m)
            if v is None:
                out[m] = c1 * c2
            else:
                out[m] = v + c1 * c2
    return {m: c1 for m, c1 in out.items() if c1}


def pmul_scalar(dict p, k):
    if k == 1:
        return p
    if not k:
        return {}
    return {m: c * k for m, c in p.items()}


def padd_scaled(dict p, a, dict q, b):
    cdef dict out
    cdef object m, c, v
    if a == 1:
        out = dict(p)
    else:
        out = {m: c * a for m, c in p.items()}
    for m, c in q.items():
        v = out.get(m, 0) + b * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def pshift(dict p, d):
    return {m + d: c for m, c in p.items()}


cdef int _fits(dict p, a, dict rest):
    cdef object m, c
    if not (0 < a < WORD_LIMIT):
        return 0
    for m, c in p.items():
        if m.bit_length() > 64 or not (-WORD_LIMIT < c < WORD_LIMIT):
            return 0
    for m, c in rest.items():
        if m.bit_length() > 64 or not (-WORD_LIMIT < c < WORD_LIMIT):
            return 0
    return 1


cdef object _div_linear_word(dict p, int shift, int64_t a, dict rest):
    """Returns None (no division), False (overflow, retry with bigints) or the quotient."""
    cdef uint64_t unit = (<uint64_t>1) << shift
    cdef uint64_t m, m0, base
    cdef int64_t c, c0, qc, prod, v
    cdef long d, top = 0, i
    cdef vector[unordered_map[uint64_t, int64_t]] groups
    cdef vector[pair[uint64_t, int64_t]] rterms
    cdef vector[pair[uint64_t, int64_t]] quot
    cdef pair[uint64_t, int64_t] kv
    cdef object pm, pc
    for pm, pc in p.items():
        m = pm
        d = (m >> shift) & 0xFFFF
        if d > top:
            top = d
    if top == 0:
        return None
    groups.resize(top + 1)
    for pm, pc in p.items():
        m = pm
        c = pc
        d = (m >> shift) & 0xFFFF
        groups[d][m - d * unit] = c
    for pm, pc in rest.items():
        rterms.push_back(pair[uint64_t, int64_t](<uint64_t>pm, <int64_t>pc))
    for d in range(top, 0, -1):
        base = (d - 1) * unit
        for kv in groups[d]:
            c = kv.second
            if c == 0:
                continue
            if a == 1:
                qc = c
            else:
                if c % a:
                    return None
                qc = c // a
            quot.push_back(pair[uint64_t, int64_t](kv.first + base, qc))
            for i in range(<long>rterms.size()):
                m0 = rterms[i].first
                c0 = rterms[i].second
                if mul_overflow(qc, c0, &prod):
                    return False
                v = groups[d - 1][kv.first + m0]
                if sub_overflow(v, prod, &v):
                    return False
                groups[d - 1][kv.first + m0] = v
    for kv in groups[0]:
        if kv.second != 0:
            return None
    out = {}
    for kv in quot:
        out[kv.first] = kv.second
    return out


def div_linear(dict p, int shift, a, dict rest):
    if _fits(p, a, rest):
        res = _div_linear_word(p, shift, a, rest)
        if res is not False:
            return res
    return _div_linear_big(p, shift, a, rest)


def _div_linear_big(dict p, int shift, a, dict rest):
    cdef object unit = (<object>1) << shift
    cdef dict groups = {}
    cdef dict g, cur, nxt, quot
    cdef object m, c, qc, r, m0, c0, mm, v, base
    cdef long d, top
    cdef bint unit_a = (a == 1)
    cdef object mask = FIELD_MASK
    for m, c in p.items():
        d = (m >> shift) & mask
        g = groups.get(d)
        if g is None:
            g = {}
            groups[d] = g
        g[m - d * unit] = c
    top = max(groups)
    if top == 0:
        return None
    quot = {}
    cur = groups[top]
    for d in range(top, 0, -1):
        g = groups.get(d - 1)
        nxt = dict(g) if g else {}
        if cur:
            base = (d - 1) * unit
            for m, c in cur.items():
                if unit_a:
                    qc = c
                else:
                    qc, r = divmod(c, a)
                    if r:
                        return None
                quot[m + base] = qc
                for m0, c0 in rest.items():
                    mm = m + m0
                    v = nxt.get(mm)
                    if v is None:
                        nxt[mm] = -qc * c0
                    else:
                        v = v - qc * c0
                        if v:
                            nxt[mm] = v
                        else:
                            del nxt[mm]
        cur = nxt
    if cur:
        return None
    return quot


def content(dict p):
    cdef object g = 0, c, a, b
    for c in p.values():
        if c < 0:
            c = -c
        if g == 1:
            return 1
        a, b = g, c
        while b:
            a, b = b, a % b
        g = a
    return g


def pdiv_int(dict p, g):
    if g == 1:
        return p
    return {m: c // g for m, c in p.items()}


def rename(dict p, targets):
    cdef dict out = {}
    cdef list shifts = [FIELD_BITS * (t - 1) for t in targets]
    cdef Py_ssize_t n = len(shifts), i
    cdef object m, c, nm, e, v
    cdef object mask = FIELD_MASK
    for m, c in p.items():
        nm = 0
        i = 0
        while m:
            e = m & mask
            if e:
                if i >= n:
                    raise KeyError(i + 1)
                nm += e << shifts[i]
            m >>= FIELD_BITS
            i += 1
        v = out.get(nm, 0) + c
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return out


cdef extern from "Python.h":
    long long PyLong_AsLongLongAndOverflow(object o, int* overflow) except? -1

cdef uint64_t MOD_P = 2147483647
POINT = tuple((1103515245 * (i + 3) + 12345) % 2147483647 for i in range(64))
cdef uint64_t _point[64]
for _i in range(64):
    _point[_i] = POINT[_i]


cdef inline uint64_t _powmod(uint64_t b, uint64_t e):
    cdef uint64_t r = 1
    while e:
        if e & 1:
            r = r * b % MOD_P
        b = b * b % MOD_P
        e >>= 1
    return r


cdef inline uint64_t _coef_mod(object c):
    cdef int overflow = 0
    cdef long long v = PyLong_AsLongLongAndOverflow(c, &overflow)
    if overflow:
        return <uint64_t>(c % 2147483647)
    v %= <long long>MOD_P
    if v < 0:
        v += MOD_P
    return <uint64_t>v


cdef object _eval_mod(dict p, uint64_t* vals):
    """p mod P at vals (4 variables), or None when a monomial does not fit 64 bits."""
    cdef uint64_t pw[4][32]
    cdef uint64_t total = 0, v, m, e
    cdef int i, j
    cdef object pm, pc
    for i in range(4):
        pw[i][0] = 1
        for j in range(1, 32):
            pw[i][j] = pw[i][j - 1] * vals[i] % MOD_P
    try:
        for pm, pc in p.items():
            m = pm
            v = _coef_mod(pc)
            i = 0
            while m:
                e = m & 0xFFFF
                if e:
                    v = v * (pw[i][e] if e < 32 else _powmod(vals[i], e)) % MOD_P
                m >>= 16
                i += 1
            total += v
            if total >= MOD_P:
                total -= MOD_P
    except OverflowError:
        return None
    return total


def may_divide(dict p, int shift, a, dict rest):
    """False only if L = a*x_k + rest certainly does not divide p (see _kernels_py)."""
    cdef uint64_t vals[64]
    cdef int k = shift // FIELD_BITS
    cdef int j
    if k >= 4 or a % 2147483647 == 0:
        return _kernels_py_may_divide(p, shift, a, rest)
    for j in range(64):
        vals[j] = _point[j]
    r = _eval_mod(rest, vals)
    if r is None:
        return _kernels_py_may_divide(p, shift, a, rest)
    vals[k] = (MOD_P - <uint64_t>r) % MOD_P * _powmod(<uint64_t>(a % 2147483647), MOD_P - 2) % MOD_P
    v = _eval_mod(p, vals)
    if v is None:
        return _kernels_py_may_divide(p, shift, a, rest)
    return v == 0


from mouldcalc.exactalg._kernels_py import may_divide as _kernels_py_may_divide


def univariate_image(dict p, int k, vals):
    """{deg_k: value mod MOD_P} of p with x_i -> vals[i-1] for i != k."""
    cdef uint64_t pw[4][32]
    cdef uint64_t vv[4]
    cdef uint64_t v, m, e
    cdef int i, j, kk = k - 1, shift = 16 * (k - 1)
    cdef object pm, pc
    cdef unordered_map[uint64_t, uint64_t] acc
    cdef pair[uint64_t, uint64_t] kv
    if len(vals) > 4 or k > 4:
        return _kernels_py_univariate_image(p, k, vals)
    for i in range(4):
        vv[i] = (vals[i] % 2147483647) if i < len(vals) else 0
        pw[i][0] = 1
        for j in range(1, 32):
            pw[i][j] = pw[i][j - 1] * vv[i] % MOD_P
    try:
        for pm, pc in p.items():
            m = pm
            v = _coef_mod(pc)
            e = (m >> shift) & 0xFFFF
            m &= ~((<uint64_t>0xFFFF) << shift)
            i = 0
            while m and v:
                j = m & 0xFFFF
                if j:
                    v = v * (pw[i][j] if j < 32 else _powmod(vv[i], j)) % MOD_P
                m >>= 16
                i += 1
            acc[e] = (acc[e] + v) % MOD_P
    except OverflowError:
        return _kernels_py_univariate_image(p, k, vals)
    out = {}
    for kv in acc:
        if kv.second:
            out[kv.first] = kv.second
    return out


from mouldcalc.exactalg._kernels_py import univariate_image as _kernels_py_univariate_image
