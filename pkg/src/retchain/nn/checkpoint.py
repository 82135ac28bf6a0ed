"""Versioned JSON checkpoints for parameter trees.

Floats are serialized through Python's repr (shortest round-trip form), so
``load(save(p))`` reproduces every float64 bit-exactly.  Writes go through a
temp file plus rename, so a crash never leaves a truncated checkpoint.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..errors import ValidationError
from .optim import AdamWState

FORMAT_VERSION = 1


@dataclass
class Checkpoint:
    module: str
    arrays: dict[str, np.ndarray]
    rng_seed: int
    optimizer: AdamWState | None = None
    meta: dict[str, Any] = field(default_factory=dict)


def _arrays_to_json(arrays: dict[str, np.ndarray]) -> tuple[dict, dict]:
    shapes = {}
    data = {}
    for path in sorted(arrays):
        arr = np.asarray(arrays[path], dtype=np.float64)
        if not np.all(np.isfinite(arr)):
            raise ValidationError(f"checkpoint array {path!r} contains non-finite values")
        shapes[path] = list(arr.shape)
        data[path] = arr.ravel(order="C").tolist()
    return shapes, data


def _arrays_from_json(shapes: dict, data: dict) -> dict[str, np.ndarray]:
    arrays = {}
    for path, shape in shapes.items():
        flat = np.asarray(data[path], dtype=np.float64)
        expected = int(np.prod(shape)) if shape else 1
        if flat.size != expected:
            raise ValidationError(f"array {path!r} has {flat.size} values, shape {shape} needs {expected}")
        arrays[path] = flat.reshape(shape)
    return arrays


def save_checkpoint(path: str, ckpt: Checkpoint) -> None:
    shapes, data = _arrays_to_json(ckpt.arrays)
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "module": ckpt.module,
        "rng_seed": ckpt.rng_seed,
        "shapes": shapes,
        "arrays": data,
        "meta": ckpt.meta,
    }
    if ckpt.optimizer is not None:
        opt = ckpt.optimizer
        m_shapes, m_data = _arrays_to_json(opt.first_moment)
        v_shapes, v_data = _arrays_to_json(opt.second_moment)
        doc["optimizer"] = {
            "learning_rate": opt.learning_rate,
            "weight_decay": opt.weight_decay,
            "beta1": opt.beta1,
            "beta2": opt.beta2,
            "epsilon": opt.epsilon,
            "step_count": opt.step_count,
            "first_moment_shapes": m_shapes,
            "first_moment": m_data,
            "second_moment_shapes": v_shapes,
            "second_moment": v_data,
        }
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


def load_checkpoint(path: str) -> Checkpoint:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"checkpoint {path!r} is not valid JSON: {exc}") from exc
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValidationError(
            f"checkpoint {path!r} has format_version {doc.get('format_version')}, expected {FORMAT_VERSION}"
        )
    optimizer = None
    if "optimizer" in doc:
        opt = doc["optimizer"]
        optimizer = AdamWState(
            learning_rate=opt["learning_rate"],
            weight_decay=opt["weight_decay"],
            beta1=opt["beta1"],
            beta2=opt["beta2"],
            epsilon=opt["epsilon"],
            step_count=opt["step_count"],
            first_moment=_arrays_from_json(opt["first_moment_shapes"], opt["first_moment"]),
            second_moment=_arrays_from_json(opt["second_moment_shapes"], opt["second_moment"]),
        )
    return Checkpoint(
        module=doc["module"],
        arrays=_arrays_from_json(doc["shapes"], doc["arrays"]),
        rng_seed=doc["rng_seed"],
        optimizer=optimizer,
        meta=doc.get("meta", {}),
    )
