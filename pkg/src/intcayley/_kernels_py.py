"""Pure-Python kernels. Same signatures and results as the compiled ``_kernels``.

``weights[j]`` is ``N // n_j`` so that a character value is the single root
of unity ``w_N ** sum_j(alpha_j * y_j * weights[j])``.  ``modulus`` is the
coefficient list (low degree first) of a monic polynomial.
"""


def psi_exponents(alpha, elems, weights, N):
    aw = [(a * w) % N for a, w in zip(alpha, weights)]
    return [sum(a * y for a, y in zip(aw, elem)) % N for elem in elems]


def reduce_monic(coeffs, modulus):
    d = len(modulus) - 1
    rem = list(coeffs)
    if len(rem) < d:
        rem.extend([0] * (d - len(rem)))
    low = modulus[:d]
    for i in range(len(rem) - 1, d - 1, -1):
        q = rem[i]
        if q:
            base = i - d
            for j, c in enumerate(low):
                if c:
                    rem[base + j] -= q * c
            rem[i] = 0
    return rem[:d]


def char_sum_table(alphas, elems, weights, N, modulus):
    out = []
    for alpha in alphas:
        hist = [0] * N
        for e in psi_exponents(alpha, elems, weights, N):
            hist[e] += 1
        out.append(tuple(reduce_monic(hist, modulus)))
    return out


def eigen_rows_hold(alpha, elems, conn, factors, weights, N, modulus, lam):
    aw = [(a * w) % N for a, w in zip(alpha, weights)]
    for a in elems:
        hist = [0] * N
        for s in conn:
            e = 0
            for u, v, n, c in zip(a, s, factors, aw):
                e += ((u + v) % n) * c
            hist[e % N] += 1
        hist[sum(u * c for u, c in zip(a, aw)) % N] -= lam
        if any(reduce_monic(hist, modulus)):
            return False
    return True
