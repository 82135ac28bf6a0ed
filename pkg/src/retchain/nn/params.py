"""Flat path-keyed views over nested parameter containers.

Models in this package are plain dataclasses holding float64 ndarrays,
possibly nested through lists and sub-dataclasses.  The optimizer, the
gradient checker, and the checkpoint writer all operate on the flat
``dict[path, ndarray]`` produced here, so they stay agnostic of any
particular architecture.
"""

from __future__ import annotations

import dataclasses
from typing import Any

import numpy as np


def param_dict(obj: Any, prefix: str = "") -> dict[str, np.ndarray]:
    """Flatten every ndarray reachable from `obj` into a path-keyed dict."""
    out: dict[str, np.ndarray] = {}
    _walk(obj, prefix, out)
    return out


def _walk(obj: Any, path: str, out: dict[str, np.ndarray]) -> None:
    if isinstance(obj, np.ndarray):
        out[path] = obj
    elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        for f in dataclasses.fields(obj):
            _walk(getattr(obj, f.name), f"{path}.{f.name}" if path else f.name, out)
    elif isinstance(obj, (list, tuple)):
        for i, item in enumerate(obj):
            _walk(item, f"{path}.{i}" if path else str(i), out)
    elif isinstance(obj, dict):
        for k in sorted(obj):
            _walk(obj[k], f"{path}.{k}" if path else str(k), out)
    # scalars / strings are configuration, not parameters


def with_param_dict(obj: Any, params: dict[str, np.ndarray], prefix: str = "") -> Any:
    """Rebuild `obj` with each ndarray leaf replaced from `params`."""
    return _rebuild(obj, prefix, params)


def _rebuild(obj: Any, path: str, params: dict[str, np.ndarray]) -> Any:
    if isinstance(obj, np.ndarray):
        new = params[path]
        if new.shape != obj.shape:
            raise ValueError(f"shape mismatch at {path!r}: {new.shape} vs {obj.shape}")
        return new
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        updates = {
            f.name: _rebuild(getattr(obj, f.name), f"{path}.{f.name}" if path else f.name, params)
            for f in dataclasses.fields(obj)
        }
        return dataclasses.replace(obj, **updates)
    if isinstance(obj, list):
        return [_rebuild(v, f"{path}.{i}" if path else str(i), params) for i, v in enumerate(obj)]
    if isinstance(obj, tuple):
        return tuple(_rebuild(v, f"{path}.{i}" if path else str(i), params) for i, v in enumerate(obj))
    if isinstance(obj, dict):
        return {k: _rebuild(obj[k], f"{path}.{k}" if path else str(k), params) for k in sorted(obj)}
    return obj


def zeros_like_params(params: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    return {k: np.zeros_like(v) for k, v in params.items()}


def add_into(target: dict[str, np.ndarray], delta: dict[str, np.ndarray]) -> None:
    """Accumulate `delta` into `target` in place (used for shared weights)."""
    for k, v in delta.items():
        if k in target:
            target[k] = target[k] + v
        else:
            target[k] = v
