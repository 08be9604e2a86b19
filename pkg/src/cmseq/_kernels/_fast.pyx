# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contract-identical to the pure Python module `_ref`."""

from array import array

from cpython.bytes cimport PyBytes_FromStringAndSize

from libc.stdint cimport int8_t, int64_t, uint32_t, uint64_t


def sieve_primes(long limit):
    """Primes <= limit, ascending."""
    cdef bytearray flags = bytearray(limit + 1)
    cdef unsigned char[::1] f = flags
    cdef long i, j
    for i in range(2, limit + 1):
        f[i] = 1
    i = 2
    while i * i <= limit:
        if f[i]:
            j = i * i
            while j <= limit:
                f[j] = 0
                j += i
        i += 1
    return [i for i in range(2, limit + 1) if f[i]]


def sieve_spf(long n):
    """Smallest prime factor for 0 <= i < n; spf[0] = 0, spf[1] = 1."""
    cdef object out = array("I", bytes(4 * n))
    cdef uint32_t[::1] spf = out
    cdef long i, j
    for i in range(n):
        spf[i] = i
    i = 2
    while i * i < n:
        if spf[i] == i:
            j = i * i
            while j < n:
                if spf[j] == j:
                    spf[j] = i
                j += i
        i += 1
    return out


cdef inline int _mul_code(int a, int b, int k) nogil:
    if a < 0 or b < 0:
        return -1
    return (a + b) % k


def fill_codes(long n, int k, spf_arr, int res_mod, res_codes_arr,
               special_ps_arr, special_cs_arr):
    """Value codes of a completely multiplicative sequence on [0, n)."""
    cdef object out = array("b", bytes(n))
    if n == 0:
        return out
    cdef int8_t[::1] codes = out
    cdef uint32_t[::1] spf = spf_arr
    cdef int8_t[::1] res_codes = res_codes_arr if res_mod else array("b", b"\x00")
    cdef uint64_t[::1] sp = special_ps_arr if len(special_ps_arr) else array("Q", b"\x00" * 8)
    cdef int8_t[::1] sc = special_cs_arr if len(special_cs_arr) else array("b", b"\x00")
    cdef long ns = len(special_ps_arr)
    cdef long m, p
    cdef long lo, hi, mid
    cdef int code
    codes[0] = -1
    for m in range(2, n):
        p = spf[m]
        if p == m:
            code = 0
            lo = 0
            hi = ns
            while lo < hi:
                mid = (lo + hi) >> 1
                if sp[mid] < <uint64_t> m:
                    lo = mid + 1
                else:
                    hi = mid
            if lo < ns and sp[lo] == <uint64_t> m:
                code = sc[lo]
            elif res_mod:
                code = res_codes[m % res_mod]
            codes[m] = code
        else:
            codes[m] = _mul_code(codes[p], codes[m / p], k)
    return out


def finite_strided(int k, ps_arr, cs_arr, int64_t start, int64_t step, long count):
    """Codes of a finite-factor multiplicative sequence at start + i*step.

    Caller guarantees the largest index fits in a signed 64-bit integer.
    """
    cdef object out = array("b", bytes(count))
    if count == 0:
        return out
    cdef int8_t[::1] codes = out
    cdef uint64_t[::1] ps = ps_arr
    cdef int8_t[::1] cs = cs_arr
    cdef long nps = len(ps_arr)
    cdef long i, t
    cdef int64_t idx
    cdef uint64_t m, p
    cdef long e
    cdef int r, c
    for i in range(count):
        idx = start + i * step
        if idx == 0:
            codes[i] = -1
            continue
        m = <uint64_t> idx
        r = 0
        for t in range(nps):
            p = ps[t]
            e = 0
            while m % p == 0:
                m /= p
                e += 1
            if e:
                c = cs[t]
                if c < 0:
                    r = -1
                    break
                r = <int> ((r + <long> c * e) % k)
        codes[i] = r
    return out


def count_word(table, word, long start, long stop, long cap):
    """Occurrences of word at positions start..stop inclusive."""
    cdef const int8_t[::1] t = table
    cdef const int8_t[::1] w = word
    cdef long u = len(word)
    cdef long count = 0
    cdef long pos, i
    cdef bint hit
    positions = []
    for pos in range(start, stop + 1):
        hit = True
        for i in range(u):
            if t[pos + i] != w[i]:
                hit = False
                break
        if hit:
            count += 1
            if len(positions) < cap:
                positions.append(pos)
    return count, positions


def find_word(table, word, long start, long stop):
    """First position in start..stop inclusive where word occurs, else -1."""
    cdef const int8_t[::1] t = table
    cdef const int8_t[::1] w = word
    cdef long u = len(word)
    cdef long pos, i
    cdef bint hit
    for pos in range(start, stop + 1):
        hit = True
        for i in range(u):
            if t[pos + i] != w[i]:
                hit = False
                break
        if hit:
            return pos
    return -1


def letter_counts(table, long start, long stop):
    """Counts per code over [start, stop); slot index is code + 1."""
    cdef object out = array("q", bytes(8 * 129))
    cdef int64_t[::1] counts = out
    cdef const int8_t[::1] t = table
    cdef long i
    for i in range(start, stop):
        counts[t[i] + 1] += 1
    return out


def mult_check(table, int k, long m_max):
    """First (m, n) with code(m*n) != code(m)*code(n) for m <= n <= m_max."""
    cdef const int8_t[::1] t = table
    cdef long m, n
    cdef int cm
    for m in range(m_max + 1):
        cm = t[m]
        for n in range(m, m_max + 1):
            if t[m * n] != _mul_code(cm, t[n], k):
                return (m, n)
    return None


def dfao_codes(int base, delta_arr, outputs_arr, int initial, long count):
    """Output codes of a base-k automaton on 0..count-1, digits fed least
    significant first."""
    cdef object out = array("b", bytes(count))
    cdef int8_t[::1] codes = out
    cdef const int[::1] delta = delta_arr
    cdef const int8_t[::1] outputs = outputs_arr
    cdef long n, t
    cdef int state
    for n in range(count):
        state = initial
        t = n
        while t:
            state = delta[state * base + t % base]
            t /= base
        codes[n] = outputs[state]
    return out
