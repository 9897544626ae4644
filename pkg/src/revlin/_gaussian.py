"""Gaussian-integer arithmetic: gcd, prime factorization, divisor lists.

A Gaussian integer is a plain tuple (re, im) of Python ints.  Used by the
rational-root search over Q(i): candidates for roots are ratios of divisors
of the trailing and leading polynomial coefficients.
"""

UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gconj(x):
    return (x[0], -x[1])


def gnorm(x):
    return x[0] * x[0] + x[1] * x[1]


def gexact_div(x, y):
    """x / y when y divides x exactly."""
    n = gnorm(y)
    tr = x[0] * y[0] + x[1] * y[1]
    ti = x[1] * y[0] - x[0] * y[1]
    qr, rr = divmod(tr, n)
    qi, ri = divmod(ti, n)
    if rr or ri:
        raise ArithmeticError(f"{y} does not divide {x}")
    return (qr, qi)


def gdivides(x, y):
    """True when y divides x."""
    n = gnorm(y)
    tr = x[0] * y[0] + x[1] * y[1]
    ti = x[1] * y[0] - x[0] * y[1]
    return tr % n == 0 and ti % n == 0


def gdivmod(x, y):
    """Rounded division: q with |x - q y| < |y| (Euclidean property)."""
    n = gnorm(y)
    tr = x[0] * y[0] + x[1] * y[1]
    ti = x[1] * y[0] - x[0] * y[1]
    qr = (2 * tr + n) // (2 * n)
    qi = (2 * ti + n) // (2 * n)
    q = (qr, qi)
    return q, (x[0] - (qr * y[0] - qi * y[1]), x[1] - (qr * y[1] + qi * y[0]))


def ggcd(x, y):
    while y != (0, 0):
        _, r = gdivmod(x, y)
        x, y = y, r
    return x


def canonical_associate(z):
    """The unit multiple of z with re > 0 and im >= 0 (0 stays 0)."""
    if z == (0, 0):
        return z
    a, b = z
    for _ in range(4):
        if a > 0 and b >= 0:
            return (a, b)
        a, b = -b, a
    raise AssertionError("unreachable")


def factor_int(n):
    """Trial-division factorization of n > 0 as an ordered {prime: exp} dict."""
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))


def _sqrt_minus_one_mod(p):
    # p = 1 (mod 4): a^((p-1)/4) for a quadratic non-residue a
    e = (p - 1) // 2
    a = 2
    while pow(a, e, p) != p - 1:
        a += 1
    return pow(a, e // 2, p)


def two_squares_prime(p):
    """A Gaussian prime of norm p, for p = 1 (mod 4)."""
    z = _sqrt_minus_one_mod(p)
    pi = ggcd((p, 0), (z, 1))
    if gnorm(pi) != p:
        raise AssertionError(f"two-squares failed for {p}")
    return canonical_associate(pi)


def factor_gaussian(z):
    """Factor a nonzero Gaussian integer: (unit, [(canonical prime, exp), ...]).

    Prime order is deterministic (ascending norm, split prime before its
    conjugate).  Uses trial division on the norm, so it is meant for the
    moderate numbers arising from characteristic polynomials, not crypto.
    """
    if z == (0, 0):
        raise ZeroDivisionError("cannot factor zero")
    primes = []
    cur = z
    for p, e in factor_int(gnorm(z)).items():
        if p == 2:
            for _ in range(e):
                cur = gexact_div(cur, (1, 1))
            primes.append(((1, 1), e))
        elif p % 4 == 3:
            k = e // 2
            for _ in range(k):
                cur = gexact_div(cur, (p, 0))
            primes.append(((p, 0), k))
        else:
            pi = two_squares_prime(p)
            a = 0
            while a < e and gdivides(cur, pi):
                cur = gexact_div(cur, pi)
                a += 1
            pib = canonical_associate(gconj(pi))
            for _ in range(e - a):
                cur = gexact_div(cur, pib)
            if a:
                primes.append((pi, a))
            if e - a:
                primes.append((pib, e - a))
    if gnorm(cur) != 1:
        raise AssertionError(f"factorization of {z} left non-unit {cur}")
    return cur, primes


def divisors(z):
    """All divisors of z up to units, in a deterministic order."""
    _, primes = factor_gaussian(z)
    divs = [(1, 0)]
    for pi, e in primes:
        grown = []
        for d in divs:
            cur = d
            for t in range(e + 1):
                grown.append(cur)
                if t < e:
                    cur = gmul(cur, pi)
        divs = grown
    return divs
