"""Hot-loop kernels: compiled extension when available, pure Python otherwise.

Set CMSEQ_PURE_PYTHON=1 to force the fallback (used by the benchmark and the
cross-backend tests).  Both implementations share exact contracts; the
selected one is named in BACKEND.
"""

import os

if os.environ.get("CMSEQ_PURE_PYTHON"):
    from . import _ref as _impl

    BACKEND = "python"
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _ref as _impl

        BACKEND = "python"

sieve_primes = _impl.sieve_primes
sieve_spf = _impl.sieve_spf
fill_codes = _impl.fill_codes
finite_strided = _impl.finite_strided
count_word = _impl.count_word
find_word = _impl.find_word
letter_counts = _impl.letter_counts
mult_check = _impl.mult_check
dfao_codes = _impl.dfao_codes
