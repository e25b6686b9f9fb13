"""Backend selection for the numeric hot loops.

The compiled extension is preferred when present; the pure-Python twin
is used otherwise.  Set ANYONGAS_PURE_PYTHON=1 before import to force
the fallback (used by the benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("ANYONGAS_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as backend

    BACKEND = "python"
else:
    try:
        from . import _ckernels as backend

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as backend

        BACKEND = "python"

g_series_sum = backend.g_series_sum
f_series_sum = backend.f_series_sum
cf_convergent_value = backend.cf_convergent_value

GSERIES_REL_TOL = backend.GSERIES_REL_TOL
GSERIES_MAX_TERMS = backend.GSERIES_MAX_TERMS
ALTERNATING_TERMS = backend.ALTERNATING_TERMS
