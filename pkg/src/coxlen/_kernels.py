"""Kernel selector: compiled extension when available, pure Python otherwise.

Set COXLEN_KERNEL=pure or COXLEN_KERNEL=compiled to force a backend
(the latter raises if the extension is missing).
"""

from __future__ import annotations

import os

_forced = os.environ.get("COXLEN_KERNEL", "").strip().lower()

if _forced == "pure":
    from . import _kernels_py as _impl
elif _forced == "compiled":
    from . import _kernels_cy as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND

identity_elem = _impl.identity_elem
compose = _impl.compose
inverse = _impl.inverse
sign_count = _impl.sign_count
is_involution = _impl.is_involution
conjugate = _impl.conjugate
closure = _impl.closure
conjugacy_orbit = _impl.conjugacy_orbit
involution_filter = _impl.involution_filter
reversing_excess = _impl.reversing_excess
reversing_stats = _impl.reversing_stats
