"""Pure-Python kernels. Same signatures and results as the compiled ``_core``.

Binary sequences of length n travel between the kernels and the rest of
the package as bit masks: bit k set means s_k = -1.
"""

MAX_KERNEL_N = 62


def aperiodic_pm(values):
    n = len(values)
    return [sum(values[k] * values[k + t] for k in range(n - t)) for t in range(n)]


def _check_n(n):
    if n < 1 or n > MAX_KERNEL_N:
        raise ValueError(f"kernel length must be in 1..{MAX_KERNEL_N}, got {n}")


def _mask(s):
    m = 0
    for k, v in enumerate(s):
        if v < 0:
            m |= 1 << k
    return m


def bounded_leaves(n, c, prefix):
    """Bit masks of all length-n sequences extending ``prefix`` with max |rho(t)| <= c.

    Depth-first, left to right, -1 tried before +1. A node at depth d is cut
    when some lag has |partial rho(t)| - (n - d) > c, since at most n - d
    terms of that lag remain unassigned.
    """
    _check_n(n)
    s = [0] * n
    rho = [0] * n
    out = []
    c = int(c)

    def assign(d, v):
        s[d] = v
        for t in range(1, d + 1):
            rho[t] += s[d - t] * v

    def unassign(d):
        v = s[d]
        for t in range(1, d + 1):
            rho[t] -= s[d - t] * v

    def feasible(d):
        slack = c + n - d - 1
        for t in range(1, d + 1):
            if abs(rho[t]) > slack:
                return False
        return True

    def dfs(d):
        if d == n:
            out.append(_mask(s))
            return
        for v in (-1, 1):
            assign(d, v)
            if feasible(d):
                dfs(d + 1)
            unassign(d)

    for d, v in enumerate(prefix):
        if d >= n:
            break
        assign(d, v)
        if not feasible(d):
            return out
    dfs(min(len(prefix), n))
    return out


def min_energy(n, prefix):
    """Smallest sum_{t>=1} rho(t)**2 over sequences extending ``prefix``.

    Returns (energy, mask) where mask is the lexicographically first
    (-1 < +1) minimizer. Branch and bound: at depth d each lag can still move
    by at most n - d, and rho(t) has the parity of n - t.
    """
    _check_n(n)
    s = [0] * n
    rho = [0] * n
    best = [None, 0]

    def lower_bound(d):
        r = n - d
        total = 0
        for t in range(1, n):
            if t < d:
                p = abs(rho[t])
                m = p - r if p >= r else (p + r) & 1
            else:
                m = (n - t) & 1
            total += m * m
        return total

    def assign(d, v):
        s[d] = v
        for t in range(1, d + 1):
            rho[t] += s[d - t] * v

    def unassign(d):
        v = s[d]
        for t in range(1, d + 1):
            rho[t] -= s[d - t] * v

    def dfs(d):
        if d == n:
            e = sum(rho[t] * rho[t] for t in range(1, n))
            if best[0] is None or e < best[0]:
                best[0] = e
                best[1] = _mask(s)
            return
        for v in (-1, 1):
            assign(d, v)
            if best[0] is None or lower_bound(d + 1) < best[0]:
                dfs(d + 1)
            unassign(d)

    for d, v in enumerate(prefix[:n]):
        assign(d, v)
    dfs(min(len(prefix), n))
    return best[0], best[1]


def perfect_rows(n):
    """Masks of all binary rows of length n whose off-peak periodic autocorrelation vanishes."""
    _check_n(n)
    out = []
    half = n // 2
    for mask in range(1 << n):
        s = [-1 if (mask >> k) & 1 else 1 for k in range(n)]
        ok = True
        for t in range(1, half + 1):
            acc = 0
            for k in range(n):
                acc += s[k] * s[(k + t) % n]
            if acc != 0:
                ok = False
                break
        if ok:
            out.append(mask)
    return out
