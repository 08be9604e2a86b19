"""Pure Python reference kernels.

Same contracts as the compiled module `_fast`; used whenever the extension is
unavailable (or forced via CMSEQ_PURE_PYTHON=1) and as the correctness oracle
for it.  Value codes are signed bytes: -1 for zero, else the root exponent in
[0, k); group orders are therefore capped at 127 on these bulk paths.
"""

from array import array
from bisect import bisect_left


def sieve_primes(limit):
    """Primes <= limit, ascending."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    i = 2
    while i * i <= limit:
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
        i += 1
    return [i for i in range(2, limit + 1) if flags[i]]


def sieve_spf(n):
    """Smallest prime factor for 0 <= i < n; spf[0] = 0, spf[1] = 1."""
    spf = array("I", range(n))
    i = 2
    while i * i < n:
        if spf[i] == i:
            for j in range(i * i, n, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf


def _mul_code(a, b, k):
    if a < 0 or b < 0:
        return -1
    return (a + b) % k


def fill_codes(n, k, spf, res_mod, res_codes, special_ps, special_cs):
    """Value codes of a completely multiplicative sequence on [0, n).

    Prime codes come from the residue rule (res_mod == 0 means identity
    everywhere) overridden by the sorted special prime/code arrays; composite
    codes follow by multiplicativity along the smallest prime factor.
    """
    codes = array("b", bytes(n))
    if n == 0:
        return codes
    codes[0] = -1
    ns = len(special_ps)
    for m in range(2, n):
        p = spf[m]
        if p == m:
            i = bisect_left(special_ps, m)
            if i < ns and special_ps[i] == m:
                codes[m] = special_cs[i]
            elif res_mod:
                codes[m] = res_codes[m % res_mod]
        else:
            codes[m] = _mul_code(codes[p], codes[m // p], k)
    return codes


def finite_strided(k, ps, cs, start, step, count):
    """Codes of a finite-factor multiplicative sequence at start + i*step."""
    out = array("b", bytes(count))
    nps = len(ps)
    for i in range(count):
        idx = start + i * step
        if idx == 0:
            out[i] = -1
            continue
        r = 0
        for t in range(nps):
            p = ps[t]
            e = 0
            while idx % p == 0:
                idx //= p
                e += 1
            if e:
                c = cs[t]
                if c < 0:
                    r = -1
                    break
                r = (r + c * e) % k
        out[i] = r
    return out


def count_word(table, word, start, stop, cap):
    """Occurrences of word at positions start..stop inclusive; positions
    beyond cap are counted but not listed."""
    u = len(word)
    count = 0
    positions = []
    for pos in range(start, stop + 1):
        if table[pos : pos + u] == word:
            count += 1
            if len(positions) < cap:
                positions.append(pos)
    return count, positions


def find_word(table, word, start, stop):
    """First position in start..stop inclusive where word occurs, else -1."""
    u = len(word)
    for pos in range(start, stop + 1):
        if table[pos : pos + u] == word:
            return pos
    return -1


def letter_counts(table, start, stop):
    """Counts per code over [start, stop); slot index is code + 1."""
    counts = array("q", bytes(8 * 129))
    for i in range(start, stop):
        counts[table[i] + 1] += 1
    return counts


def mult_check(table, k, m_max):
    """First (m, n) with code(m*n) != code(m)*code(n) for m <= n <= m_max."""
    for m in range(m_max + 1):
        cm = table[m]
        for n in range(m, m_max + 1):
            if table[m * n] != _mul_code(cm, table[n], k):
                return (m, n)
    return None


def dfao_codes(base, delta, outputs, initial, count):
    """Output codes of a base-k automaton on 0..count-1, digits fed least
    significant first."""
    out = array("b", bytes(count))
    for n in range(count):
        state = initial
        t = n
        while t:
            state = delta[state * base + t % base]
            t //= base
        out[n] = outputs[state]
    return out
