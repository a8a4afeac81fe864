"""Backend selection for the computation kernel.

The compiled kernel (_ckern) is preferred when it importable; the pure-Python
kernel (_pykern) is the fallback and the reference. Set STEINERDIAM_BACKEND
to "c" or "python" to force one; forcing "c" raises if the extension is
missing rather than silently degrading.
"""

from __future__ import annotations

import os

from . import _pykern

_forced = os.environ.get("STEINERDIAM_BACKEND", "").strip().lower()

if _forced == "python":
    _impl = _pykern
elif _forced == "c":
    from . import _ckern as _impl  # noqa: F401 (ImportError is the point)
elif _forced:
    raise ImportError(
        f"STEINERDIAM_BACKEND={_forced!r} not recognized; use 'c' or 'python'")
else:
    try:
        from . import _ckern as _impl
    except ImportError:
        _impl = _pykern

BACKEND = _impl.BACKEND
INF = _impl.INF
INF16 = _impl.INF16
W_TABLE_G = _impl.W_TABLE_G
W_TABLE_C = _impl.W_TABLE_C
W_SD3 = _impl.W_SD3
W_CUTS = _impl.W_CUTS
W_CIRC = _impl.W_CIRC
W_LEM0 = _impl.W_LEM0
W_RECOG = _impl.W_RECOG
W_ORACLE = _impl.W_ORACLE
W_MEDIAN = _impl.W_MEDIAN

steiner_table = _impl.steiner_table
sdiam3_value = _impl.sdiam3_value
profile_block = _impl.profile_block
tree_rows = _impl.tree_rows
tree_scan = _impl.tree_scan
