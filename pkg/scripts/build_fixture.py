#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus in src/seqfp/data/fixture/.

Every sequence is computed here from its definition; names and keyword sets
follow OEIS conventions. Entries whose A-number is not recorded below get a
placeholder id from A900001 upward and say so in their comment line.

Writes, all gzip with mtime 0 so reruns are byte-identical:
  entries.jsonl.gz    one OEIS-style JSON record per line
  stripped.gz         "A000045 ,0,1,1,2,..." lines, truncated like the OEIS file
  names.gz            "A000045 Fibonacci numbers: ..." lines
  bfiles/bNNNNNN.txt.gz  full term lists ("index term" per line)

Needs sympy and mpmath (not package dependencies).
"""
from __future__ import annotations

import bisect
import gzip
import heapq
import io
import json
import math
from functools import lru_cache
from pathlib import Path

import mpmath
from sympy import factorint, isprime, nextprime, partition, prevprime, primerange

N = 1000
MAX_DIGITS = 1000
STRIPPED_CHARS = 260
OUT = Path(__file__).resolve().parents[1] / "src" / "seqfp" / "data" / "fixture"

PR = list(primerange(2, 3_000_000))
PLACEHOLDER_NOTE = "Fixture definition; the A-number is a placeholder."


# ---------------------------------------------------------------- helpers

def nat(f, start=0, n=N):
    return [f(k) for k in range(start, start + n)]


def filt(pred, start=0, n=N):
    out, k = [], start
    while len(out) < n:
        if pred(k):
            out.append(k)
        k += 1
    return out


def linrec(coeffs, init, n=N):
    a = list(init)
    while len(a) < n:
        a.append(sum(c * a[-1 - i] for i, c in enumerate(coeffs)))
    return a[:n]


def pfilt(pred, n=N):
    out = [p for p in PR if pred(p)]
    if len(out) < n:
        raise RuntimeError("prime table too short")
    return out[:n]


@lru_cache(maxsize=None)
def fac(n):
    return tuple(sorted(factorint(n).items()))


def mult(fpe, start=1, n=N):
    out = []
    for k in range(start, start + n):
        v = 1
        for p, e in fac(k):
            v *= fpe(p, e)
        out.append(v)
    return out


def divisors(n):
    ds = [1]
    for p, e in fac(n):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def sigma(k, n):
    return sum(d**k for d in divisors(n))


def digsum(n, b=10):
    s = 0
    while n:
        n, r = divmod(n, b)
        s += r
    return s


def to_base(n, b):
    if n == 0:
        return [0]
    ds = []
    while n:
        n, r = divmod(n, b)
        ds.append(r)
    return ds[::-1]


def is_pal(n, b=10):
    d = to_base(n, b)
    return d == d[::-1]


def rev(n):
    return int(str(n)[::-1])


def as_base_digits(n, b):
    return int("".join(map(str, to_base(n, b))))


def const_digits(f, n=N):
    mpmath.mp.dps = n + 30
    s = mpmath.nstr(f(), n + 20, strip_zeros=False).replace("-", "")
    s = s.replace(".", "").lstrip("0")
    return [int(c) for c in s[:n]]


def cont_frac(f, n=N):
    mpmath.mp.dps = 3 * n
    x = f()
    out = []
    for _ in range(n):
        a = int(mpmath.floor(x))
        out.append(a)
        x = 1 / (x - a)
    return out


def smooth(primes, n=N):
    seen, heap, out = {1}, [1], []
    while len(out) < n:
        v = heapq.heappop(heap)
        out.append(v)
        for p in primes:
            if v * p not in seen:
                seen.add(v * p)
                heapq.heappush(heap, v * p)
    return out


def recurrence(step, init, n=N):
    a = list(init)
    while len(a) < n:
        a.append(step(a, len(a)))
    return a[:n]


def partitions_into(parts, n=N):
    a = [1] + [0] * (n - 1)
    for p in parts:
        for k in range(p, n):
            a[k] += a[k - p]
    return a


def ulam(n=N):
    seq = [1, 2]
    counts = {3: 1}
    while len(seq) < n:
        c = seq[-1] + 1
        while counts.get(c, 0) != 1:
            c += 1
        for u in seq:
            counts[u + c] = counts.get(u + c, 0) + 1
        seq.append(c)
    return seq


def lucky(n=N):
    lst = list(range(1, 40000, 2))
    i = 1
    while i < len(lst) and lst[i] <= len(lst):
        step = lst[i]
        del lst[step - 1::step]
        i += 1
    return lst[:n]


def kolakoski(n=N):
    a = [1, 2, 2]
    i = 2
    while len(a) < n:
        a.extend([1 + len(a) % 2 * 0 + (a[-1] % 2)] * a[i])
        i += 1
    return a[:n]


def stern(n=N):
    a = [0, 1]
    while len(a) < n:
        k = len(a)
        a.append(a[k // 2] if k % 2 == 0 else a[k // 2] + a[k // 2 + 1])
    return a[:n]


def recaman(n=N):
    a, seen = [0], {0}
    for k in range(1, n):
        c = a[-1] - k
        if c < 0 or c in seen:
            c = a[-1] + k
        a.append(c)
        seen.add(c)
    return a


def hof_q(n=N):
    a = [None, 1, 1]
    while len(a) <= n:
        k = len(a)
        a.append(a[k - a[k - 1]] + a[k - a[k - 2]])
    return a[1:n + 1]


def hof_conway(n=N):
    a = [None, 1, 1]
    while len(a) <= n:
        k = len(a)
        a.append(a[a[k - 1]] + a[k - a[k - 1]])
    return a[1:n + 1]


def fib_word(n=N):
    w = "0"
    while len(w) < n:
        w = "".join("01" if c == "0" else "0" for c in w)
    return [int(c) for c in w[:n]]


def collatz_steps(k):
    s = 0
    while k != 1:
        k = k // 2 if k % 2 == 0 else 3 * k + 1
        s += 1
    return s


def collatz_max(k):
    m = k
    while k != 1:
        k = k // 2 if k % 2 == 0 else 3 * k + 1
        m = max(m, k)
    return m


def phi(n):
    v = 1
    for p, e in fac(n):
        v *= (p - 1) * p ** (e - 1)
    return v


def phi_iter(k):
    s = 0
    while k != 1:
        k = phi(k)
        s += 1
    return s


@lru_cache(maxsize=None)
def factorizations(n, m):
    if n == 1:
        return 1
    return sum(factorizations(n // d, d) for d in divisors(n) if 1 < d <= m)


def carmichael(n):
    v = 1
    for p, e in fac(n):
        lam = (p - 1) * p ** (e - 1)
        if p == 2 and e >= 3:
            lam //= 2
        v = v * lam // math.gcd(v, lam)
    return v


def zeckendorf_terms(k):
    fibs = [1, 2]
    while fibs[-1] <= k:
        fibs.append(fibs[-1] + fibs[-2])
    c = 0
    for f in reversed(fibs):
        if f <= k:
            k -= f
            c += 1
    return c


def happy_steps(k):
    s = 0
    while k not in (1, 4):
        k = sum(int(c) ** 2 for c in str(k))
        s += 1
    return s


def pi_count(x):
    return bisect.bisect_right(PR, x)


def mult_order(a, m):
    if m == 1:
        return 1
    k, v = 1, a % m
    while v != 1:
        v = v * a % m
        k += 1
    return k


def decimal_period(k):
    while k % 2 == 0:
        k //= 2
    while k % 5 == 0:
        k //= 5
    return 0 if k == 1 else mult_order(10, k)


def harmonic(n=N):
    from fractions import Fraction
    h, out = Fraction(0), []
    for k in range(1, n + 1):
        h += Fraction(1, k)
        out.append(h)
    return out


def plane_partitions(n=N):
    s2 = [0] + [sigma(2, k) for k in range(1, n)]
    a = [1]
    for m in range(1, n):
        a.append(sum(s2[k] * a[m - k] for k in range(1, m + 1)) // m)
    return a


def bell(n=N):
    row, out = [1], [1]
    while len(out) < n:
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        out.append(row[0])
        if len(str(row[0])) > MAX_DIGITS:
            break
    return out


def bernoulli_den(n=N):
    out = []
    for k in range(n):
        d = 1
        for p in PR:
            if p - 1 > 2 * k:
                break
            if (2 * k) % (p - 1) == 0:
                d *= p
        out.append(d)
    return out


def pal_filter(pred, b=10, n=N, start=0):
    return filt(lambda k: is_pal(k, b) and pred(k), start, n)


def even_len_pals(n=N):
    out, L = [], 1
    while len(out) < n:
        for h in range(10 ** (L - 1), 10**L):
            out.append(int(str(h) + str(h)[::-1]))
        L += 1
    return out[:n]


def odd_digit_pals(n=N):
    return filt(lambda k: is_pal(k) and all(c in "13579" for c in str(k)), 1, n)


def palindromic_primes(n=N):
    out, L = [], 1
    while len(out) < n:
        half = (L + 1) // 2
        for h in range(10 ** (half - 1) if half > 1 else 0, 10**half):
            s = str(h)
            v = int(s + s[::-1][L % 2:]) if L > 1 else h
            if len(str(v)) == L and isprime(v):
                out.append(v)
        L += 1
    return out[:n]


# ---------------------------------------------------------------- definitions

# (id or None, name, keywords, terms, offset, comments)
DEFS = []


def add(seq_id, name, keywords, terms, offset=0, comments=()):
    DEFS.append((seq_id, name, keywords, terms, offset, list(comments)))


phi_num = lambda k: (k + math.isqrt(5 * k * k)) // 2  # floor(k*golden ratio)

# classic core sequences
add("A000027", "The positive integers.", "core,easy,mult,nonn", nat(lambda k: k, 1), 1)
add("A000040", "The prime numbers.", "core,easy,nice,nonn", PR[:N], 1,
    ["See A065091 for comments, formulas etc. concerning only odd primes."])
add("A000045", "Fibonacci numbers: F(n) = F(n-1) + F(n-2) with F(0) = 0 and F(1) = 1.",
    "core,easy,nice,nonn", linrec([1, 1], [0, 1]), 0)
add("A000079", "Powers of 2: a(n) = 2^n.", "core,easy,nonn", nat(lambda k: 2**k), 0,
    ["2^n is also the number of subsets of an n-set."])
add("A000290", "The squares: a(n) = n^2.", "core,easy,mult,nice,nonn", nat(lambda k: k * k), 0)
add("A000578", "The cubes: a(n) = n^3.", "core,easy,mult,nice,nonn", nat(lambda k: k**3), 0)
add("A000583", "Fourth powers: a(n) = n^4.", "easy,mult,nonn", nat(lambda k: k**4), 0)
add("A000584", "Fifth powers: a(n) = n^5.", "easy,mult,nonn", nat(lambda k: k**5), 0)
add("A001014", "Sixth powers: a(n) = n^6.", "easy,mult,nonn", nat(lambda k: k**6), 0)
add("A001015", "Seventh powers: a(n) = n^7.", "easy,mult,nonn", nat(lambda k: k**7), 0)
add("A001016", "Eighth powers: a(n) = n^8.", "easy,mult,nonn", nat(lambda k: k**8), 0)
add("A001017", "Ninth powers: a(n) = n^9.", "easy,mult,nonn", nat(lambda k: k**9), 0)
add("A000108", "Catalan numbers: C(n) = binomial(2n,n)/(n+1) = (2n)!/(n!(n+1)!).",
    "core,easy,nice,nonn", nat(lambda k: math.comb(2 * k, k) // (k + 1)), 0)
add("A000217", "Triangular numbers: a(n) = binomial(n+1,2) = n*(n+1)/2 = 0 + 1 + 2 + ... + n.",
    "core,easy,nice,nonn", nat(lambda k: k * (k + 1) // 2), 0)
add("A000010", "Euler totient function phi(n): count numbers <= n and prime to n.",
    "core,easy,mult,nice,nonn", nat(phi, 1), 1,
    ["Number of elements in a reduced residue system modulo n."])
add("A000005", "d(n) (also called tau(n) or sigma_0(n)), the number of divisors of n.",
    "core,easy,mult,nice,nonn", nat(lambda k: len(divisors(k)), 1), 1)
add("A000203", "a(n) = sigma(n), the sum of the divisors of n. Also called sigma_1(n).",
    "core,easy,mult,nice,nonn", nat(lambda k: sigma(1, k), 1), 1)
add("A000032", "Lucas numbers beginning at 2: L(n) = L(n-1) + L(n-2), L(0) = 2, L(1) = 1.",
    "core,easy,nice,nonn", linrec([1, 1], [2, 1]), 0)
add("A000041", "a(n) is the number of partitions of n (the partition numbers).",
    "core,easy,nice,nonn", nat(lambda k: int(partition(k))), 0)
add("A000012", "The simplest sequence of positive numbers: the all 1's sequence.",
    "core,easy,mult,nonn,cons", [1] * N, 0)
add("A000004", "The zero sequence.", "core,easy,mult,nonn", [0] * N, 0)
add("A005408", "The odd numbers: a(n) = 2*n + 1.", "core,easy,nonn", nat(lambda k: 2 * k + 1), 0)
add("A005843", "The nonnegative even numbers: a(n) = 2n.", "core,easy,nonn", nat(lambda k: 2 * k), 0)
add("A001477", "The nonnegative integers.", "core,easy,nonn", nat(lambda k: k), 0)
add("A000984", "Central binomial coefficients: binomial(2*n,n) = (2*n)!/(n!)^2.",
    "core,easy,nice,nonn", nat(lambda k: math.comb(2 * k, k)), 0)
add("A000129", "Pell numbers: a(0) = 0, a(1) = 1; for n > 1, a(n) = 2*a(n-1) + a(n-2).",
    "easy,nice,nonn", linrec([2, 1], [0, 1]), 0)
add("A000244", "Powers of 3: a(n) = 3^n.", "core,easy,nonn", nat(lambda k: 3**k), 0)
add("A008683", "Moebius (or Mobius) function mu(n). mu(1) = 1; mu(n) = (-1)^k if n is the "
    "product of k different primes; otherwise mu(n) = 0.", "core,easy,mult,nice,sign",
    mult(lambda p, e: -1 if e == 1 else 0), 1)
add("A000035", "Period 2: repeat [0, 1]; a(n) = n mod 2.", "core,easy,mult,nonn", nat(lambda k: k % 2), 0)
add("A002113", "Palindromes in base 10.", "base,easy,nice,nonn", filt(is_pal), 1)
add("A006995", "Binary palindromes: numbers whose binary expansion is palindromic.", "base,easy,nonn",
    filt(lambda k: is_pal(k, 2)), 1)
add("A002385", "Palindromic primes: prime numbers whose decimal expansion is a palindrome.",
    "base,easy,nice,nonn", palindromic_primes(), 1)
add("A001358", "Semiprimes (or biprimes): products of two primes.", "easy,nice,nonn",
    filt(lambda k: sum(e for _, e in fac(k)) == 2, 2), 1)
add("A006530", "Gpf(n): greatest prime dividing n, for n >= 2; a(1)=1.", "easy,nonn",
    nat(lambda k: fac(k)[-1][0] if k > 1 else 1, 1), 1)
add("A020639", "Lpf(n): least prime dividing n (when n >= 2); a(1) = 1.", "easy,nonn",
    nat(lambda k: fac(k)[0][0] if k > 1 else 1, 1), 1)
add("A001222", "Number of prime divisors of n counted with multiplicity (also called big omega of n).",
    "easy,nonn", nat(lambda k: sum(e for _, e in fac(k)), 1), 1)
add("A001221", "Number of distinct primes dividing n (also called omega(n)).", "easy,nonn",
    nat(lambda k: len(fac(k)), 1), 1)
add("A000961", "Powers of primes. Alternatively, 1 and the prime powers (p^k, p prime, k >= 1).",
    "easy,nice,nonn", filt(lambda k: len(fac(k)) <= 1, 1), 1)
add("A000120", "1's-counting sequence: number of 1's in binary expansion of n (or the binary weight of n).",
    "base,core,easy,nice,nonn", nat(lambda k: bin(k).count("1")), 0)
add("A001045", "Jacobsthal sequence (or Jacobsthal numbers): a(n) = a(n-1) + 2*a(n-2), with a(0) = 0, a(1) = 1.",
    "easy,nice,nonn", linrec([1, 2], [0, 1]), 0)
add("A000225", "a(n) = 2^n - 1. (Sometimes called Mersenne numbers.)", "core,easy,nonn",
    nat(lambda k: 2**k - 1), 0)
add("A000196", "Integer part of square root of n. Or, number of positive squares <= n.", "easy,nonn",
    nat(math.isqrt), 0)
add("A001006", "Motzkin numbers: number of ways of drawing any number of nonintersecting chords "
    "joining n (labeled) points on a circle.", "core,easy,nice,nonn",
    recurrence(lambda a, n: ((2 * n + 1) * a[-1] + 3 * (n - 1) * a[-2]) // (n + 2), [1, 1]), 0)
add("A000302", "Powers of 4: a(n) = 4^n.", "easy,nonn", nat(lambda k: 4**k), 0)
add("A000326", "Pentagonal numbers: a(n) = n*(3*n-1)/2.", "easy,nice,nonn", nat(lambda k: k * (3 * k - 1) // 2), 0)
add("A000330", "Square pyramidal numbers: a(n) = 0^2 + 1^2 + 2^2 + ... + n^2 = n*(n+1)*(2*n+1)/6.",
    "easy,nice,nonn", nat(lambda k: k * (k + 1) * (2 * k + 1) // 6), 0)
add("A000292", "Tetrahedral (or triangular pyramidal) numbers: a(n) = C(n+2,3) = n*(n+1)*(n+2)/6.",
    "easy,nice,nonn", nat(lambda k: k * (k + 1) * (k + 2) // 6), 0)
add("A000332", "Binomial coefficient binomial(n,4) = n*(n-1)*(n-2)*(n-3)/24.", "easy,nonn",
    nat(lambda k: math.comb(k, 4)), 0)
add("A000389", "Binomial coefficients C(n,5).", "easy,nonn", nat(lambda k: math.comb(k, 5)), 0)
add("A000579", "Binomial coefficients C(n,6).", "easy,nonn", nat(lambda k: math.comb(k, 6)), 0)
add("A000580", "Binomial coefficients C(n,7).", "easy,nonn", nat(lambda k: math.comb(k, 7)), 0)
add("A000581", "Binomial coefficients C(n,8).", "easy,nonn", nat(lambda k: math.comb(k, 8)), 0)
add("A000582", "Binomial coefficients C(n,9).", "easy,nonn", nat(lambda k: math.comb(k, 9)), 0)
add("A007318", "Pascal's triangle read by rows: C(n,k) = binomial(n,k) = n!/(k!*(n-k)!), 0 <= k <= n.",
    "core,easy,nice,nonn,tabl", [math.comb(r, c) for r in range(60) for c in range(r + 1)][:N], 0)
add("A000007", "The characteristic function of {0}: a(n) = 0^n.", "core,easy,mult,nonn",
    [1] + [0] * (N - 1), 0)
add("A002275", "Repunits: (10^n - 1)/9. Often denoted by R_n.", "easy,nonn", nat(lambda k: (10**k - 1) // 9), 0)
add("A011557", "Powers of 10: a(n) = 10^n.", "easy,nonn", nat(lambda k: 10**k), 0)
add("A001969", "Evil numbers: nonnegative integers with an even number of 1's in their binary expansion.",
    "base,easy,nonn", filt(lambda k: bin(k).count("1") % 2 == 0), 1)
add("A000069", "Odious numbers: nonnegative integers with an odd number of 1's in their binary expansion.",
    "base,easy,nonn", filt(lambda k: bin(k).count("1") % 2 == 1), 1)
add("A003418", "Least common multiple (or LCM) of {1, 2, ..., n} for n >= 1, a(0) = 1.", "easy,nice,nonn",
    recurrence(lambda a, n: a[-1] * n // math.gcd(a[-1], n), [1]), 0)
add("A002808", "The composite numbers: numbers n of the form x*y for x > 1 and y > 1.", "core,easy,nonn",
    filt(lambda k: k > 3 and not isprime(k), 4), 1)
add("A005117", "Squarefree numbers: numbers that are not divisible by a square greater than 1.",
    "core,easy,nice,nonn", filt(lambda k: all(e == 1 for _, e in fac(k)), 1), 1)
add("A000720", "pi(n), the number of primes <= n. Sometimes called PrimePi(n).", "core,easy,nice,nonn",
    nat(pi_count, 1), 1)
add("A001223", "Prime gaps: differences between consecutive primes.", "easy,nice,nonn",
    [PR[k + 1] - PR[k] for k in range(N)], 1)
add("A007504", "Sum of the first n primes.", "easy,nice,nonn", [sum(PR[:k]) for k in range(N)], 0)
add("A001097", "Twin primes.", "easy,nice,nonn", pfilt(lambda p: isprime(p - 2) or isprime(p + 2)), 1)
add("A001359", "Lesser of twin primes.", "easy,nice,nonn", pfilt(lambda p: isprime(p + 2)), 1)
add("A005384", "Sophie Germain primes p: 2p+1 is also prime.", "easy,nice,nonn", pfilt(lambda p: isprime(2 * p + 1)), 1)
add("A002144", "Pythagorean primes: primes of the form 4*k + 1.", "easy,nice,nonn", pfilt(lambda p: p % 4 == 1), 1)
add("A002145", "Primes of the form 4*k + 3.", "easy,nonn", pfilt(lambda p: p % 4 == 3), 1)
add("A010051", "Characteristic function of primes: 1 if n is prime, otherwise 0.", "core,easy,nonn",
    nat(lambda k: int(isprime(k)), 1), 1)
add("A000009", "Expansion of Product_{m >= 1} (1 + x^m); number of partitions of n into distinct parts; "
    "number of partitions of n into odd parts.", "core,easy,nice,nonn",
    partitions_into(range(1, N, 2)), 0)
add("A000351", "Powers of 5: a(n) = 5^n.", "easy,nonn", nat(lambda k: 5**k), 0)
add("A000400", "Powers of 6: a(n) = 6^n.", "easy,nonn", nat(lambda k: 6**k), 0)
add("A000420", "Powers of 7: a(n) = 7^n.", "easy,nonn", nat(lambda k: 7**k), 0)
add("A001018", "Powers of 8: a(n) = 8^n.", "easy,nonn", nat(lambda k: 8**k), 0)
add("A001019", "Powers of 9: a(n) = 9^n.", "easy,nonn", nat(lambda k: 9**k), 0)
add("A001020", "Powers of 11: a(n) = 11^n.", "easy,nonn", nat(lambda k: 11**k), 0)
add("A006577", "Number of halving and tripling steps to reach 1 in '3x+1' problem.", "easy,nice,nonn",
    nat(collatz_steps, 1), 1)
add("A000796", "Decimal expansion of Pi (or digits of Pi).", "cons,core,easy,nice,nonn",
    const_digits(lambda: mpmath.pi), 1)
add("A001113", "Decimal expansion of e.", "cons,core,easy,nice,nonn", const_digits(lambda: mpmath.e), 1)
add("A002193", "Decimal expansion of square root of 2.", "cons,core,nonn", const_digits(lambda: mpmath.sqrt(2)), 1)
add("A000142", "Factorial numbers n! = 1*2*3*4*...*n (order of symmetric group S_n, number of permutations of n letters).",
    "core,easy,nice,nonn", nat(math.factorial), 0)
add("A000110", "Bell or exponential numbers: number of ways to partition a set of n labeled elements.",
    "core,easy,nice,nonn", bell(), 0)
add("A000043", "Mersenne exponents: primes p such that 2^p - 1 is prime.", "core,hard,nice,nonn",
    [2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607, 1279, 2203, 2281, 3217, 4253, 4423], 1)
add("A000668", "Mersenne primes (primes of the form 2^n - 1).", "core,hard,nice,nonn",
    [2**p - 1 for p in (2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607, 1279, 2203, 2281)], 1)
add("A002110", "Primorial numbers (first definition): product of first n primes. Sometimes written prime(n)#.",
    "core,easy,nice,nonn", [math.prod(PR[:k]) for k in range(N)], 0)
add("A000312", "a(n) = n^n; number of labeled mappings from n points to themselves (endofunctions).",
    "core,easy,nice,nonn", nat(lambda k: k**k), 0)
add("A000073", "Tribonacci numbers: a(n) = a(n-1) + a(n-2) + a(n-3) with a(0)=a(1)=0, a(2)=1.",
    "easy,nice,nonn", linrec([1, 1, 1], [0, 0, 1]), 0)
add("A000931", "Padovan sequence (or Padovan numbers): a(n) = a(n-2) + a(n-3) with a(0) = 1, a(1) = a(2) = 0.",
    "easy,nonn", linrec([0, 1, 1], [1, 0, 0]), 0)
add("A000078", "Tetranacci numbers: a(n) = a(n-1) + a(n-2) + a(n-3) + a(n-4) with a(0) = a(1) = a(2) = 0 and a(3) = 1.",
    "easy,nonn", linrec([1, 1, 1, 1], [0, 0, 0, 1]), 0)
add("A001333", "Numerators of continued fraction convergents to sqrt(2).", "easy,nonn", linrec([2, 1], [1, 1]), 0)
add("A001850", "Central Delannoy numbers: a(n) = Sum_{k=0..n} binomial(n,k)*binomial(n+k,k).", "easy,nice,nonn",
    recurrence(lambda a, n: (3 * (2 * n - 1) * a[-1] - (n - 1) * a[-2]) // n, [1, 3]), 0)
add("A002426", "Central trinomial coefficients: largest coefficient of (1 + x + x^2)^n.", "easy,nice,nonn",
    recurrence(lambda a, n: ((2 * n - 1) * a[-1] + 3 * (n - 1) * a[-2]) // n, [1, 1]), 0)
add("A000166", "Subfactorial or rencontres numbers, or derangements: number of permutations of n elements "
    "with no fixed points.", "core,easy,nice,nonn",
    recurrence(lambda a, n: (n - 1) * (a[-1] + a[-2]), [1, 0]), 0)
add("A001764", "a(n) = binomial(3*n,n)/(2*n+1) (enumerates ternary trees and also noncrossing trees).",
    "easy,nice,nonn", nat(lambda k: math.comb(3 * k, k) // (2 * k + 1)), 0)
add("A002620", "Quarter-squares: a(n) = floor(n/2)*ceiling(n/2). Equivalently, a(n) = floor(n^2/4).",
    "easy,nice,nonn", nat(lambda k: k * k // 4), 0)
add("A004526", "Nonnegative integers repeated, floor(n/2).", "easy,nonn", nat(lambda k: k // 2), 0)
add("A002378", "Oblong (or promic, pronic, or heteromecic) numbers: a(n) = n*(n+1).", "easy,nonn",
    nat(lambda k: k * (k + 1)), 0)
add("A000124", "Central polygonal numbers (the Lazy Caterer's sequence): n(n+1)/2 + 1; or, maximal number "
    "of pieces formed when slicing a pancake with n cuts.", "core,easy,nice,nonn",
    nat(lambda k: k * (k + 1) // 2 + 1), 0)
add("A001844", "Centered square numbers: a(n) = 2*n*(n+1)+1. Sums of two consecutive squares.", "easy,nonn",
    nat(lambda k: 2 * k * (k + 1) + 1), 0)
add("A003215", "Hex (or centered hexagonal) numbers: 3*n*(n+1)+1 (crystal ball sequence for hexagonal lattice).",
    "easy,nonn", nat(lambda k: 3 * k * (k + 1) + 1), 0)
add("A000384", "Hexagonal numbers: a(n) = n*(2*n-1).", "easy,nonn", nat(lambda k: k * (2 * k - 1)), 0)
add("A000567", "Octagonal numbers: n*(3*n-2). Also called star numbers.", "easy,nonn", nat(lambda k: k * (3 * k - 2)), 0)
add("A007947", "Largest squarefree number dividing n: the squarefree kernel of n, rad(n), radical of n.",
    "easy,mult,nonn", mult(lambda p, e: p), 1)
add("A001157", "a(n) = sigma_2(n): sum of squares of divisors of n.", "easy,mult,nonn", nat(lambda k: sigma(2, k), 1), 1)
add("A001158", "sigma_3(n): sum of cubes of divisors of n.", "easy,mult,nonn", nat(lambda k: sigma(3, k), 1), 1)
add("A000593", "Sum of odd divisors of n.", "easy,mult,nonn",
    nat(lambda k: sum(d for d in divisors(k) if d % 2), 1), 1)
add("A001227", "Number of odd divisors of n.", "easy,mult,nonn", nat(lambda k: sum(1 for d in divisors(k) if d % 2), 1), 1)
add("A034444", "a(n) is the number of unitary divisors of n (d such that d divides n, gcd(d, n/d) = 1).",
    "easy,mult,nonn", mult(lambda p, e: 2), 1)
add("A001615", "Dedekind psi function: n * Product_{p|n, p prime} (1 + 1/p).", "easy,mult,nonn",
    mult(lambda p, e: p ** (e - 1) * (p + 1)), 1)
add("A007434", "Jordan function J_2(n) (a generalization of phi(n)).", "easy,mult,nonn",
    mult(lambda p, e: p ** (2 * e - 2) * (p * p - 1)), 1)
add("A008836", "Liouville's function lambda(n) = (-1)^k, where k is number of primes dividing n "
    "(counted with multiplicity).", "easy,mult,sign", mult(lambda p, e: (-1) ** e), 1)
add("A002322", "Reduced totient function psi(n): least k such that x^k == 1 (mod n) for all x prime to n; "
    "also known as the Carmichael lambda function.", "easy,nonn", nat(carmichael, 1), 1)
add("A003961", "Completely multiplicative with a(prime(k)) = prime(k+1).", "easy,mult,nonn",
    mult(lambda p, e: PR[bisect.bisect_left(PR, p) + 1] ** e), 1)
add("A000265", "Remove all factors of 2 from n; or largest odd divisor of n; or odd part of n.",
    "easy,mult,nonn", mult(lambda p, e: 1 if p == 2 else p**e), 1)
add("A006519", "Highest power of 2 dividing n.", "easy,mult,nonn", mult(lambda p, e: p**e if p == 2 else 1), 1)
add("A007814", "2-adic valuation of n: the exponent of the highest power of 2 dividing n.", "easy,nonn",
    nat(lambda k: (k & -k).bit_length() - 1, 1), 1)
add("A001511", "The ruler function: 2^a(n) divides 2n. Or, a(n) = 2-adic valuation of 2n.", "easy,nice,nonn",
    nat(lambda k: (k & -k).bit_length(), 1), 1)
add("A010052", "Characteristic function of squares: a(n) = 1 if n is a square, otherwise 0.", "easy,mult,nonn",
    nat(lambda k: int(math.isqrt(k) ** 2 == k)), 0)
add("A008966", "a(n) = 1 if n is squarefree, otherwise 0.", "easy,mult,nonn",
    mult(lambda p, e: 1 if e == 1 else 0), 1)
add("A002487", "Stern's diatomic series (or Stern-Brocot sequence): a(0) = 0, a(1) = 1; "
    "for n > 0: a(2*n) = a(n), a(2*n+1) = a(n) + a(n+1).", "easy,nice,nonn", stern(), 0)
add("A005132", "Recaman's sequence: a(0) = 0; for n > 0, a(n) = a(n-1) - n if nonnegative and not already "
    "in the sequence, otherwise a(n) = a(n-1) + n.", "easy,nice,nonn", recaman(), 0)
add("A000201", "Lower Wythoff sequence (a Beatty sequence): a(n) = floor(n*phi), where phi = (1+sqrt(5))/2.",
    "easy,nice,nonn", nat(phi_num, 1), 1)
add("A001951", "A Beatty sequence: a(n) = floor(n*sqrt(2)).", "easy,nonn", nat(lambda k: math.isqrt(2 * k * k)), 0)
add("A001950", "Upper Wythoff sequence (a Beatty sequence): a(n) = floor(n*phi^2), where phi = (1+sqrt(5))/2.",
    "easy,nice,nonn", nat(lambda k: phi_num(k) + k, 1), 1)
add("A003849", "The infinite Fibonacci word (start with 0, apply 0->01, 1->0, take limit).", "easy,nice,nonn",
    fib_word(), 0)
add("A010060", "Thue-Morse sequence: a(n) = parity of the number of 1's in the binary expansion of n.",
    "core,easy,nice,nonn", nat(lambda k: bin(k).count("1") % 2), 0)
add("A000002", "Kolakoski sequence: a(n) is length of n-th run; a(1) = 1; sequence consists just of 1's and 2's.",
    "core,easy,nice,nonn", kolakoski(), 1)
add("A005101", "Abundant numbers (sum of divisors of m exceeds 2m).", "easy,nonn",
    filt(lambda k: sigma(1, k) > 2 * k, 1), 1)
add("A005100", "Deficient numbers: numbers k such that sigma(k) < 2k.", "easy,nonn",
    filt(lambda k: sigma(1, k) < 2 * k, 1), 1)
add("A001248", "Squares of primes.", "easy,nonn", [p * p for p in PR[:N]], 1)
add("A030078", "Cubes of primes.", "easy,nonn", [p**3 for p in PR[:N]], 1)
add("A006881", "Squarefree semiprimes: Numbers that are the product of two distinct primes.", "easy,nonn",
    filt(lambda k: len(fac(k)) == 2 and all(e == 1 for _, e in fac(k)), 2), 1)
add("A014612", "Numbers that are the product of exactly three primes (not necessarily distinct).", "easy,nonn",
    filt(lambda k: sum(e for _, e in fac(k)) == 3, 2), 1)
add("A005349", "Niven (or Harshad) numbers: numbers that are divisible by the sum of their digits.",
    "base,easy,nonn", filt(lambda k: k % digsum(k) == 0, 1), 1)
add("A007953", "Digital sum (i.e., sum of digits) of n; also called digsum(n).", "base,easy,nice,nonn",
    nat(digsum), 0)
add("A004086", "Read n backwards (referred to as R(n) in many sequences).", "base,easy,nice,nonn", nat(rev), 0)
add("A010785", "Repdigit numbers, or numbers whose digits are all equal.", "base,easy,nonn",
    [0] + [d * (10**L - 1) // 9 for L in range(1, 200) for d in range(1, 10)][: N - 1], 0)
add("A003586", "3-smooth numbers: numbers of the form 2^i*3^j with i, j >= 0.", "easy,nonn", smooth([2, 3]), 1)
add("A051037", "5-smooth numbers, i.e., numbers whose prime divisors are all <= 5.", "easy,nonn",
    smooth([2, 3, 5]), 1)
add("A002858", "Ulam numbers: a(1) = 1; a(2) = 2; for n>2, a(n) = least number > a(n-1) which is a unique "
    "sum of two distinct earlier terms.", "nice,nonn", ulam(), 1)
add("A000959", "Lucky numbers.", "easy,nice,nonn", lucky(), 1)
add("A000037", "Numbers that are not squares (or, the nonsquares).", "easy,nonn",
    filt(lambda k: math.isqrt(k) ** 2 != k, 1), 1)
add("A000051", "a(n) = 2^n + 1.", "easy,nonn", nat(lambda k: 2**k + 1), 0)
add("A001519", "a(n) = 3*a(n-1) - a(n-2) for n >= 2, with a(0) = a(1) = 1.", "easy,nonn", linrec([3, -1], [1, 1]), 0)
add("A001906", "F(2n) = bisection of Fibonacci sequence: a(n) = 3*a(n-1) - a(n-2).", "easy,nonn",
    linrec([3, -1], [0, 1]), 0)
add("A000085", "Number of self-inverse permutations on n letters, also known as involutions.",
    "core,easy,nice,nonn", recurrence(lambda a, n: a[-1] + (n - 1) * a[-2], [1, 1]), 0)
add("A000071", "a(n) = Fibonacci(n) - 1.", "easy,nonn", [f - 1 for f in linrec([1, 1], [0, 1])], 0)
A002654 = mult(lambda p, e: 1 if p == 2 else (e + 1 if p % 4 == 1 else (1 if e % 2 == 0 else 0)))
add("A002654", "Number of ways of writing n as a sum of at most two nonzero squares, where order matters; "
    "also (number of divisors of n of form 4m+1) - (number of divisors of form 4m+3).", "easy,mult,nonn",
    A002654, 1)
add("A004018", "Theta series of square lattice (or number of ways of writing n as a sum of 2 squares). "
    "Often denoted by r(n) or r_2(n).", "core,easy,nice,nonn", [1] + [4 * v for v in A002654[: N - 1]], 0)
add("A001055", "The multiplicative partition function: number of ways of factoring n with all factors "
    "greater than 1 (a(1) = 1 by convention).", "easy,nice,nonn", nat(lambda k: factorizations(k, k), 1), 1)
add("A000688", "Number of Abelian groups of order n; number of factorizations of n into prime powers greater "
    "than 1.", "core,easy,mult,nice,nonn", mult(lambda p, e: int(partition(e))), 1)
add("A001481", "Numbers of the form x^2 + y^2.", "easy,nice,nonn",
    [0] + [k for k in range(1, 20000) if A002654[k - 1] > 0][: N - 1] if len(A002654) >= 20000
    else [0] + filt(lambda k: all(e % 2 == 0 for p, e in fac(k) if p % 4 == 3), 1, N - 1), 0)
add("A000404", "Numbers that are the sum of 2 nonzero squares.", "easy,nonn",
    filt(lambda k: any(math.isqrt(k - a * a) ** 2 == k - a * a and k - a * a > 0
                       for a in range(1, math.isqrt(k) + 1)), 1), 1)
add("A003056", "n appears n+1 times. Also the array A(n,k) = n+k (n >= 0, k >= 0) read by antidiagonals.",
    "easy,nonn", nat(lambda k: (math.isqrt(8 * k + 1) - 1) // 2), 0)
add("A002024", "n appears n times; a(n) = floor(sqrt(2n) + 1/2).", "easy,nice,nonn",
    nat(lambda k: (math.isqrt(8 * k) + 1) // 2, 1), 1)
add("A004001", "Hofstadter-Conway 10000-dollar sequence: a(n) = a(a(n-1)) + a(n-a(n-1)) with a(1) = a(2) = 1.",
    "easy,nice,nonn", hof_conway(), 1)
add("A005185", "Hofstadter Q-sequence: a(1) = a(2) = 1; a(n) = a(n-a(n-1)) + a(n-a(n-2)) for n > 2.",
    "easy,nice,nonn", hof_q(), 1)
add("A001608", "Perrin sequence: a(n) = a(n-2) + a(n-3) with a(0) = 3, a(1) = 0, a(2) = 2.", "easy,nice,nonn",
    linrec([0, 1, 1], [3, 0, 2]), 0)
for k, sid in zip(range(3, 11), ("A008585", "A008586", "A008587", "A008588", "A008589", "A008590",
                                  "A008591", "A008592")):
    add(sid, f"a(n) = {k}*n.", "easy,nonn", nat(lambda j, k=k: k * j), 0)
add("A016777", "a(n) = 3*n + 1.", "easy,nonn", nat(lambda j: 3 * j + 1), 0)
add("A016789", "a(n) = 3*n + 2.", "easy,nonn", nat(lambda j: 3 * j + 2), 0)
for b, sid in zip(range(2, 10), ("A007088", "A007089", "A007090", "A007091", "A007092", "A007093",
                                  "A007094", "A007095")):
    add(sid, f"Numbers written in base {b}.", "base,easy,nonn", nat(lambda j, b=b: as_base_digits(j, b)), 0)
add("A005574", "Numbers k such that k^2 + 1 is prime.", "easy,nonn", filt(lambda k: isprime(k * k + 1), 1), 1)
add("A023200", "Primes p such that p + 4 is also prime.", "easy,nonn", pfilt(lambda p: isprime(p + 4)), 1)
add("A023201", "Primes p such that p + 6 is also prime. (Lesser of a pair of sexy primes.)", "easy,nonn",
    pfilt(lambda p: isprime(p + 6)), 1)
add("A001043", "Numbers that are the sum of 2 successive primes.", "easy,nonn",
    [PR[k] + PR[k + 1] for k in range(N)], 1)
add("A006094", "Products of 2 successive primes.", "easy,nonn", [PR[k] * PR[k + 1] for k in range(N)], 1)
add("A014085", "Number of primes between n^2 and (n+1)^2.", "easy,nonn",
    nat(lambda k: pi_count((k + 1) ** 2) - pi_count(k * k)), 0)
add("A151800", "Least prime > n (version 2 of the \"next prime\" function).", "easy,nonn", nat(nextprime), 0)
add("A006567", "Emirps (primes whose reversal is a different prime).", "base,easy,nice,nonn",
    pfilt(lambda p: rev(p) != p and isprime(rev(p))), 1)
add("A000172", "Franel number a(n) = Sum_{k = 0..n} binomial(n,k)^3.", "easy,nice,nonn",
    recurrence(lambda a, n: ((7 * (n - 1) ** 2 + 7 * (n - 1) + 2) * a[-1] + 8 * (n - 1) ** 2 * a[-2]) // n**2,
               [1, 2]), 0)
add("A005259", "Apery (Apéry) numbers: Sum_{k=0..n} (binomial(n,k)*binomial(n+k,k))^2.", "easy,nice,nonn",
    recurrence(lambda a, n: ((34 * (n - 1) ** 3 + 51 * (n - 1) ** 2 + 27 * (n - 1) + 5) * a[-1]
                             - (n - 1) ** 3 * a[-2]) // n**3, [1, 5]), 0)
add("A006318", "Large Schroeder numbers.", "easy,nice,nonn",
    recurrence(lambda a, n: (3 * (2 * n - 1) * a[-1] - (n - 2) * a[-2]) // (n + 1), [1, 2]), 0)
add("A001405", "a(n) = binomial(n, floor(n/2)).", "easy,nice,nonn", nat(lambda k: math.comb(k, k // 2)), 0)
add("A001700", "a(n) = binomial(2*n+1, n+1): number of ways to put n+1 indistinguishable balls into n+1 "
    "distinguishable boxes.", "easy,nice,nonn", nat(lambda k: math.comb(2 * k + 1, k + 1)), 0)
add("A018804", "Pillai's arithmetical function: Sum_{k=1..n} gcd(k, n).", "easy,mult,nonn",
    mult(lambda p, e: (e + 1) * p**e - e * p ** (e - 1)), 1)
add("A007913", "Squarefree part of n: a(n) is the smallest positive number m such that n/m is a square.",
    "easy,mult,nonn", mult(lambda p, e: p if e % 2 else 1), 1)
add("A003557", "n divided by largest squarefree divisor of n.", "easy,mult,nonn", mult(lambda p, e: p ** (e - 1)), 1)
add("A048691", "a(n) = d(n^2), where d(k) = A000005(k) is the number of divisors of k.", "easy,mult,nonn",
    mult(lambda p, e: 2 * e + 1), 1)
add("A007955", "Product of divisors of n.", "easy,nonn", nat(lambda k: math.prod(divisors(k)), 1), 1)
add("A001156", "Number of partitions of n into squares.", "nonn", partitions_into([k * k for k in range(1, 32)]), 0)
add("A000219", "Number of planar partitions (or plane partitions) of n.", "easy,nice,nonn", plane_partitions(), 0)
add("A025586", "Largest value in '3x+1' trajectory of n.", "nonn", nat(collatz_max, 1), 1)
add("A003434", "Number of iterations of phi(x) at n needed to reach 1.", "nonn", nat(phi_iter, 1), 1)
add("A001203", "Simple continued fraction expansion of Pi.", "cf,cons,nonn", cont_frac(lambda: mpmath.pi), 0)
add("A002194", "Decimal expansion of sqrt(3).", "cons,nonn", const_digits(lambda: mpmath.sqrt(3)), 1)
add("A002163", "Decimal expansion of square root of 5.", "cons,nonn", const_digits(lambda: mpmath.sqrt(5)), 1)
add("A001622", "Decimal expansion of golden ratio phi (or tau) = (1 + sqrt(5))/2.", "cons,nonn",
    const_digits(lambda: mpmath.phi), 1)
add("A002162", "Decimal expansion of the natural logarithm of 2.", "cons,nonn", const_digits(lambda: mpmath.log(2)), 0)
add("A001620", "Decimal expansion of Euler's constant (or the Euler-Mascheroni constant), gamma.", "cons,nonn",
    const_digits(lambda: mpmath.euler), 0)
add("A002117", "Decimal expansion of zeta(3) = Sum_{m >= 1} 1/m^3.", "cons,nonn",
    const_digits(lambda: mpmath.zeta(3)), 1)
H = harmonic()
add("A001008", "Numerator of harmonic number H(n) = Sum_{i=1..n} 1/i.", "frac,nice,nonn", [h.numerator for h in H], 1)
add("A002805", "Denominators of harmonic numbers H(n) = Sum_{i=1..n} 1/i.", "frac,nonn", [h.denominator for h in H], 1)
add("A002445", "Denominators of Bernoulli numbers B_{2n}.", "easy,frac,nice,nonn", bernoulli_den(), 0)
add("A003188", "Decimal equivalent of Gray code for n.", "base,easy,nice,nonn", nat(lambda k: k ^ (k >> 1)), 0)
add("A002326", "Multiplicative order of 2 mod 2n+1.", "nonn", nat(lambda k: mult_order(2, 2 * k + 1)), 0)
add("A008908", "(1 + number of halving and tripling steps to reach 1 in the Collatz (3x+1) problem).", "nonn",
    nat(lambda k: collatz_steps(k) + 1, 1), 1)
add("A005875", "Theta series of simple cubic lattice; also number of ways of writing a nonnegative integer "
    "n as a sum of 3 squares (zero being allowed).", "nonn",
    nat(lambda k: sum(1 for a in range(-math.isqrt(k), math.isqrt(k) + 1)
                      for b in range(-math.isqrt(k - a * a), math.isqrt(k - a * a) + 1)
                      if math.isqrt(k - a * a - b * b) ** 2 == k - a * a - b * b
                      for _ in ((0,) if k - a * a - b * b == 0 else (0, 1)))), 0)

# entries without a recorded A-number
P = None
for m, a in ((5, 1), (5, 2), (5, 3), (5, 4), (8, 1), (8, 3), (8, 5), (8, 7), (10, 9), (12, 11)):
    add(P, f"Primes congruent to {a} mod {m}.", "easy,nonn", pfilt(lambda p, m=m, a=a: p % m == a), 1)
add(P, "Primes p such that p + 10 is also prime.", "easy,nonn", pfilt(lambda p: isprime(p + 10)), 1)
add(P, "a(n) = prime(n) - n.", "easy,nonn", [PR[k] - (k + 1) for k in range(N)], 1)
add(P, "a(n) = prime(2n).", "easy,nonn", [PR[2 * k + 1] for k in range(N)], 1)
add(P, "a(n) = prime(n)^2 + 2.", "easy,nonn", [p * p + 2 for p in PR[:N]], 1)
add(P, "Number of primes <= 10*n.", "easy,nonn", nat(lambda k: pi_count(10 * k), 1), 1)
add(P, "Smallest primitive root of the n-th prime.", "nonn",
    [next(g for g in range(1, p + 1) if mult_order(g, p) == p - 1) if p > 2 else 1 for p in PR[:N]], 1)
add(P, "Numbers n such that 2n + 1 is prime.", "easy,nonn", filt(lambda k: isprime(2 * k + 1), 1), 1)
add(P, "Numbers n such that n^2 + n + 41 is prime.", "easy,nonn", filt(lambda k: isprime(k * k + k + 41)), 1)
add(P, "Primes whose digit sum is also prime.", "base,easy,nonn", pfilt(lambda p: isprime(digsum(p))), 1)
add(P, "Sum of the distinct primes dividing n.", "easy,nonn", nat(lambda k: sum(p for p, _ in fac(k)), 1), 1)
add(P, "Sum of prime factors of n counted with multiplicity.", "easy,nonn",
    nat(lambda k: sum(p * e for p, e in fac(k)), 1), 1)
add(P, "Largest prime < n, for n >= 3.", "easy,nonn", nat(prevprime, 3), 3)
add(P, "Composite numbers n such that n + 1 is prime.", "easy,nonn", filt(lambda k: k > 3 and not isprime(k) and isprime(k + 1), 4), 1)
for k in (4, 5, 6):
    add(P, f"sigma_{k}(n), sum of {k}th powers of divisors of n.", "easy,mult,nonn",
        nat(lambda j, k=k: sigma(k, j), 1), 1)
add(P, "Number of divisors of n^3.", "easy,mult,nonn", mult(lambda p, e: 3 * e + 1), 1)
add(P, "a(n) = phi(n)^2.", "easy,mult,nonn", nat(lambda k: phi(k) ** 2, 1), 1)
add(P, "a(n) = n * d(n), where d is the number-of-divisors function.", "easy,mult,nonn",
    mult(lambda p, e: p**e * (e + 1)), 1)
add(P, "Number of cubefree divisors of n.", "easy,mult,nonn", mult(lambda p, e: min(e, 2) + 1), 1)
add(P, "Sum of the divisors of n that are not divisible by 3.", "easy,mult,nonn",
    nat(lambda k: sum(d for d in divisors(k) if d % 3), 1), 1)
add(P, "Sum of squares of odd divisors of n.", "easy,mult,nonn",
    nat(lambda k: sum(d * d for d in divisors(k) if d % 2), 1), 1)
add(P, "Number of squares dividing n.", "easy,mult,nonn", mult(lambda p, e: e // 2 + 1), 1)
add(P, "a(n) = n*phi(n).", "easy,mult,nonn", nat(lambda k: k * phi(k), 1), 1)
add(P, "Sum of the unitary divisors of n.", "easy,mult,nonn", mult(lambda p, e: p**e + 1), 1)
add(P, "Number of divisors d of n such that n/d is odd.", "easy,mult,nonn",
    nat(lambda k: sum(1 for d in divisors(k) if (k // d) % 2), 1), 1)
add(P, "a(n) = binomial(2*n, n-1).", "easy,nonn", nat(lambda k: math.comb(2 * k, k - 1), 1), 1)
add(P, "a(n) = binomial(3*n, n).", "easy,nonn", nat(lambda k: math.comb(3 * k, k)), 0)
add(P, "a(n) = binomial(n, 2)^2.", "easy,nonn", nat(lambda k: math.comb(k, 2) ** 2), 0)
add(P, "a(n) = Sum_{k=0..n} binomial(n,k)^4.", "easy,nonn", nat(lambda k: sum(math.comb(k, j) ** 4 for j in range(k + 1))), 0)
add(P, "a(n) = binomial(n+10, 10).", "easy,nonn", nat(lambda k: math.comb(k + 10, 10)), 0)
add(P, "Row sums of the triangle binomial(n,k)*k, i.e., n*2^(n-1).", "easy,nonn", nat(lambda k: k * 2 ** (k - 1) if k else 0), 0)
for b in range(3, 10):
    add(P, f"Palindromes in base {b} (written in base 10).", "base,easy,nonn", filt(lambda k, b=b: is_pal(k, b)), 1)
add(P, "Palindromes in base 10 with an even number of digits.", "base,easy,nonn", even_len_pals(), 1)
add(P, "Palindromes in base 10 all of whose digits are odd.", "base,nonn", odd_digit_pals(), 1)
add(P, "Palindromes in base 10 that are divisible by 3.", "base,easy,nonn", pal_filter(lambda k: k % 3 == 0, start=1), 1)
add(P, "Numbers n such that n + reverse(n) is a palindrome.", "base,nonn", filt(lambda k: is_pal(k + rev(k)), 1), 1)
for k in (3, 4, 5, 6, 7, 8):
    add(P, f"a(n) = {k}*a(n-1) + a(n-2) with a(0) = 0, a(1) = 1.", "easy,nonn", linrec([k, 1], [0, 1]), 0)
for k in (3, 5, 6):
    add(P, f"a(n) = a(n-1) + {k}*a(n-2) with a(0) = 0, a(1) = 1.", "easy,nonn", linrec([1, k], [0, 1]), 0)
for k in (2, 3, 5, 7, 11):
    add(P, f"a(n) = n^2 + {k}.", "easy,nonn", nat(lambda j, k=k: j * j + k), 0)
for k in (3, 5, 7):
    add(P, f"a(n) = {k}*n^2.", "easy,nonn", nat(lambda j, k=k: k * j * j), 0)
add(P, "a(n) = n^3 + n.", "easy,nonn", nat(lambda j: j**3 + j), 0)
add(P, "a(n) = n^4 + n^2 + 1.", "easy,nonn", nat(lambda j: j**4 + j * j + 1), 0)
for b in (3, 4, 5, 7):
    add(P, f"Sum of digits of n written in base {b}.", "base,easy,nonn", nat(lambda j, b=b: digsum(j, b)), 0)
add(P, "Number of steps for the sum-of-squares-of-digits map starting at n to reach 1 or 4.", "base,nonn",
    nat(happy_steps, 1), 1)
add(P, "Number of terms in the Zeckendorf representation of n.", "nonn", nat(zeckendorf_terms, 1), 1)
add(P, "Period of the decimal expansion of 1/n (0 if it terminates).", "base,nonn", nat(decimal_period, 1), 1)
add(P, "Number of halving and tripling steps for 2n+1 to reach 1 in the 3x+1 problem.", "nonn",
    nat(lambda k: collatz_steps(2 * k + 1)), 0)
add(P, "Number of partitions of n into parts 2 and 3.", "nonn", partitions_into([2, 3]), 0)
add(P, "Number of partitions of n into parts 1, 5, 10, 25 and 50 (ways to make change).", "nonn",
    partitions_into([1, 5, 10, 25, 50]), 0)
for k in (2, 3, 5):
    add(P, f"Continued fraction for the cube root of {k}.", "cf,cons,nonn",
        cont_frac(lambda k=k: mpmath.cbrt(k)), 0)
for k in (2, 3):
    add(P, f"Decimal expansion of the cube root of {k}.", "cons,nonn", const_digits(lambda k=k: mpmath.cbrt(k)), 1)
for k in (3, 5, 10):
    add(P, f"Decimal expansion of the natural logarithm of {k}.", "cons,nonn",
        const_digits(lambda k=k: mpmath.log(k)), 1)
add(P, "Decimal expansion of Pi^2.", "cons,nonn", const_digits(lambda: mpmath.pi**2), 1)
add(P, "Decimal expansion of exp(Pi).", "cons,nonn", const_digits(lambda: mpmath.exp(mpmath.pi)), 2)
add(P, "Decimal expansion of Catalan's constant.", "cons,nonn", const_digits(lambda: mpmath.catalan), 0)


# ---------------------------------------------------------------- writing

def capped(terms):
    out = []
    for t in terms:
        if len(str(abs(t))) > MAX_DIGITS:
            break
        out.append(t)
    return out


def gz_bytes(text: str) -> bytes:
    buf = io.BytesIO()
    with gzip.GzipFile(fileobj=buf, mode="wb", mtime=0) as gz:
        gz.write(text.encode("utf-8"))
    return buf.getvalue()


def truncated_data(terms):
    s = ""
    for t in terms:
        piece = str(t) if not s else "," + str(t)
        if len(s) + len(piece) > STRIPPED_CHARS:
            break
        s += piece
    return s


def main():
    bdir = OUT / "bfiles"
    bdir.mkdir(parents=True, exist_ok=True)
    for old in bdir.glob("*.gz"):
        old.unlink()
    next_placeholder = 900001
    records, stripped, names = [], ["# fixture stripped file"], ["# fixture names file"]
    seen = set()
    for seq_id, name, kw, terms, offset, comments in DEFS:
        if seq_id is None:
            seq_id = f"A{next_placeholder:06d}"
            next_placeholder += 1
            comments = comments + [PLACEHOLDER_NOTE]
        assert seq_id not in seen, seq_id
        seen.add(seq_id)
        terms = capped(terms)
        data = truncated_data(terms)
        records.append(json.dumps({"number": int(seq_id[1:]), "id": seq_id, "name": name, "keyword": kw,
                                   "comment": comments, "data": data, "offset": f"{offset},1"},
                                  sort_keys=True))
        stripped.append(f"{seq_id} ,{data},")
        names.append(f"{seq_id} {name}")
        body = "".join(f"{offset + i} {t}\n" for i, t in enumerate(terms))
        (bdir / f"b{seq_id[1:]}.txt.gz").write_bytes(gz_bytes(f"# {seq_id}: fixture b-file\n" + body))
    (OUT / "entries.jsonl.gz").write_bytes(gz_bytes("\n".join(records) + "\n"))
    (OUT / "stripped.gz").write_bytes(gz_bytes("\n".join(stripped) + "\n"))
    (OUT / "names.gz").write_bytes(gz_bytes("\n".join(names) + "\n"))
    long_enough = sum(1 for d in DEFS if len(capped(d[3])) >= 990)
    print(f"{len(DEFS)} entries, {long_enough} with >= 990 terms")


if __name__ == "__main__":
    main()
