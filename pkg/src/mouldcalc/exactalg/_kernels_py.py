"""Sparse integer polynomial kernels (pure Python).

A polynomial is a dict mapping a packed monomial to a nonzero int. Variable
x_i occupies the 16-bit field starting at bit FIELD_BITS * (i - 1), so
monomial multiplication is integer addition and the constant monomial is 0.

The compiled module ``_kernels`` exposes the same functions with the same
signatures; ``kernels`` picks one of the two at import time.
"""

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1


def pmul(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = {}
    get = out.get
    for m2, c2 in q.items():
        for m1, c1 in p.items():
            m = m1 + m2
            out[m] = get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def pmul_scalar(p, k):
    if k == 1:
        return p
    if not k:
        return {}
    return {m: c * k for m, c in p.items()}


def padd_scaled(p, a, q, b):
    """Return a*p + b*q for integer scalars a, b."""
    if a == 1:
        out = dict(p)
    else:
        out = {m: c * a for m, c in p.items()}
    get = out.get
    for m, c in q.items():
        v = get(m, 0) + b * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def pshift(p, d):
    """Multiply every monomial by the packed monomial d."""
    return {m + d: c for m, c in p.items()}


def div_linear(p, shift, a, rest):
    """Exact quotient of p by L = a*x_k + rest, or None if L does not divide p.

    ``shift`` is the bit offset of x_k, ``a`` a positive int, ``rest`` the
    part of L free of x_k. Integer coefficients suffice because L is
    primitive (Gauss).
    """
    unit = 1 << shift
    groups = {}
    for m, c in p.items():
        d = (m >> shift) & FIELD_MASK
        g = groups.get(d)
        if g is None:
            groups[d] = g = {}
        g[m - d * unit] = c
    top = max(groups)
    if top == 0:
        return None
    quot = {}
    cur = groups[top]
    for d in range(top, 0, -1):
        nxt = groups.get(d - 1)
        nxt = dict(nxt) if nxt else {}
        if cur:
            base = (d - 1) * unit
            get = nxt.get
            for m, c in cur.items():
                if a == 1:
                    qc = c
                else:
                    qc, r = divmod(c, a)
                    if r:
                        return None
                quot[m + base] = qc
                for m0, c0 in rest.items():
                    mm = m + m0
                    v = get(mm, 0) - qc * c0
                    if v:
                        nxt[mm] = v
                    else:
                        del nxt[mm]
        cur = nxt
    if cur:
        return None
    return quot


def content(p):
    """gcd of the coefficients (positive), 0 for the zero polynomial."""
    g = 0
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


def pdiv_int(p, g):
    if g == 1:
        return p
    return {m: c // g for m, c in p.items()}


def rename(p, targets):
    """Apply x_i -> x_{targets[i-1]} to every monomial (targets are 1-based)."""
    out = {}
    get = out.get
    shifts = [FIELD_BITS * (t - 1) for t in targets]
    n = len(shifts)
    for m, c in p.items():
        nm = 0
        i = 0
        while m:
            e = m & FIELD_MASK
            if e:
                if i >= n:
                    raise KeyError(i + 1)
                nm += e << shifts[i]
            m >>= FIELD_BITS
            i += 1
        v = get(nm, 0) + c
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return out


MOD_P = 2147483647
# fixed pseudo-random coordinates; any choice keeps results exact
POINT = tuple((1103515245 * (i + 3) + 12345) % MOD_P for i in range(64))


def _eval_mod(p, vals):
    total = 0
    for m, c in p.items():
        v = c % MOD_P
        i = 0
        while m and v:
            e = m & FIELD_MASK
            if e:
                v = v * pow(vals[i], e, MOD_P) % MOD_P
            m >>= FIELD_BITS
            i += 1
        total += v
    return total % MOD_P


def may_divide(p, shift, a, rest):
    """False only if L = a*x_k + rest certainly does not divide p.

    p is evaluated mod a prime at a fixed point of the hyperplane L = 0; a
    multiple of L vanishes there, so a nonzero value is a proof.
    """
    k = shift // FIELD_BITS
    if k >= len(POINT) or a % MOD_P == 0:
        return True
    vals = list(POINT)
    vals[k] = -_eval_mod(rest, vals) * pow(a, MOD_P - 2, MOD_P) % MOD_P
    return _eval_mod(p, vals) == 0


def univariate_image(p, k, vals):
    """{deg_k: value mod MOD_P} of p with x_i -> vals[i-1] for i != k."""
    shift = FIELD_BITS * (k - 1)
    out = {}
    for m, c in p.items():
        d = (m >> shift) & FIELD_MASK
        v = c % MOD_P
        i = 1
        mm = m
        while mm and v:
            e = mm & FIELD_MASK
            if e and i != k:
                v = v * pow(vals[i - 1], e, MOD_P) % MOD_P
            mm >>= FIELD_BITS
            i += 1
        out[d] = (out.get(d, 0) + v) % MOD_P
    return {d: v for d, v in out.items() if v}
