"""Selects the compiled polynomial kernels when available.

Set MOULDCALC_PURE=1 to force the pure-Python implementation.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("MOULDCALC_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "compiled"

FIELD_BITS = _kernels_py.FIELD_BITS
FIELD_MASK = _kernels_py.FIELD_MASK

pmul = _impl.pmul
pmul_scalar = _impl.pmul_scalar
padd_scaled = _impl.padd_scaled
pshift = _impl.pshift
div_linear = _impl.div_linear
content = _impl.content
pdiv_int = _impl.pdiv_int
rename = _impl.rename
may_divide = _impl.may_divide
univariate_image = _impl.univariate_image
MOD_P = _kernels_py.MOD_P
