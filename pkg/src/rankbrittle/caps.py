"""Solver resource caps.

Every exact search refuses instances beyond its cap with a resource error
rather than degrading to an approximation.  The RANKBRITTLE_CAPS
environment variable overrides individual limits, e.g.
``RANKBRITTLE_CAPS=rbrit2=12,orbit=2000000``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import InputError

ENV_VAR = "RANKBRITTLE_CAPS"


@dataclass(frozen=True)
class Caps:
    rbrit1: int = 20         # max n for the depth-1 closed form
    rbrit2: int = 10         # max n for the depth-2 partition search
    rbrit_deep: int = 8      # max n for radius >= 3 searches
    rankdepth: int = 8       # max n for the rank-depth solver
    beta: int = 10           # max n for bounded-part-size partitions
    lrw: int = 20            # max n for the linear layout subset DP
    orbit: int = 1_000_000   # max labeled graphs per orbit closure
    iso_nodes: int = 1_000_000    # isomorphism search nodes
    vm_nodes: int = 200_000       # vertex-minor recursion states
    pattern_nodes: int = 1_000_000  # bipartite pattern search nodes

    @staticmethod
    def from_env(environ=None) -> "Caps":
        environ = os.environ if environ is None else environ
        spec = environ.get(ENV_VAR, "")
        caps = Caps()
        if not spec.strip():
            return caps
        known = {f.name for f in fields(Caps)}
        overrides = {}
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise InputError(f"bad {ENV_VAR} entry {item!r}, want key=value")
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in known:
                raise InputError(f"unknown {ENV_VAR} key {key!r}")
            try:
                overrides[key] = int(val)
            except ValueError:
                raise InputError(f"non-integer {ENV_VAR} value in {item!r}")
        return replace(caps, **overrides)


DEFAULT_CAPS = Caps()
