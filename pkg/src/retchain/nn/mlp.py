"""Dense multilayer perceptrons with explicit forward tapes and hand-derived
backward passes.

All arithmetic is float64 and the summation order is fixed by numpy's
row-major evaluation, so identical inputs give bit-identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractError, ShapeError
from .rng import glorot_uniform

ACTIVATIONS = ("relu", "tanh", "identity")


def _activate(name: str, z: np.ndarray) -> np.ndarray:
    if name == "relu":
        return np.maximum(z, 0.0)
    if name == "tanh":
        return np.tanh(z)
    if name == "identity":
        return z
    raise ContractError(f"unknown activation {name!r}")


def _activate_grad(name: str, z: np.ndarray) -> np.ndarray:
    """Derivative of the activation evaluated at pre-activation z."""
    if name == "relu":
        return (z > 0.0).astype(np.float64)
    if name == "tanh":
        t = np.tanh(z)
        return 1.0 - t * t
    if name == "identity":
        return np.ones_like(z)
    raise ContractError(f"unknown activation {name!r}")


@dataclass
class LinearLayer:
    weight: np.ndarray  # (out_dim, in_dim), row-major
    bias: np.ndarray  # (out_dim,)
    activation: str = "identity"

    def __post_init__(self):
        w = np.asarray(self.weight, dtype=np.float64)
        b = np.asarray(self.bias, dtype=np.float64)
        if w.ndim != 2:
            raise ShapeError(f"weight must be 2-D, got shape {w.shape}")
        if b.shape != (w.shape[0],):
            raise ShapeError(f"bias shape {b.shape} does not match weight rows {w.shape[0]}")
        if not (np.all(np.isfinite(w)) and np.all(np.isfinite(b))):
            raise ShapeError("layer parameters must be finite")
        if self.activation not in ACTIVATIONS:
            raise ContractError(f"unknown activation {self.activation!r}")
        self.weight = w
        self.bias = b

    @property
    def in_dim(self) -> int:
        return self.weight.shape[1]

    @property
    def out_dim(self) -> int:
        return self.weight.shape[0]


@dataclass
class Mlp:
    """A stack of LinearLayers whose dimensions chain; last activation is identity."""

    layers: list[LinearLayer]

    def __post_init__(self):
        if not self.layers:
            raise ContractError("Mlp needs at least one layer")
        for k in range(len(self.layers) - 1):
            if self.layers[k].out_dim != self.layers[k + 1].in_dim:
                raise ShapeError(
                    f"layer {k} output dim {self.layers[k].out_dim} does not chain into "
                    f"layer {k + 1} input dim {self.layers[k + 1].in_dim}"
                )
        if self.layers[-1].activation != "identity":
            raise ContractError("final layer activation must be identity")

    @property
    def in_dim(self) -> int:
        return self.layers[0].in_dim

    @property
    def out_dim(self) -> int:
        return self.layers[-1].out_dim

    @classmethod
    def create(cls, dims: list[int], hidden_activation: str, rng: np.random.Generator) -> "Mlp":
        """Glorot-uniform MLP over `dims`, e.g. [37, 64, 32]."""
        layers = []
        for k in range(len(dims) - 1):
            act = hidden_activation if k < len(dims) - 2 else "identity"
            layers.append(
                LinearLayer(
                    weight=glorot_uniform(rng, dims[k + 1], dims[k]),
                    bias=np.zeros(dims[k + 1]),
                    activation=act,
                )
            )
        return cls(layers)


@dataclass
class MlpTape:
    """Activation record from one forward pass; consumed by mlp_backward."""

    inputs: list[np.ndarray] = field(default_factory=list)  # input to each layer, (n, in_dim)
    pre_activations: list[np.ndarray] = field(default_factory=list)  # (n, out_dim)
    was_vector: bool = False
    n_layers: int = 0


def mlp_forward(mlp: Mlp, x: np.ndarray) -> tuple[np.ndarray, MlpTape]:
    """Run the network; the returned tape suffices for exact gradients.

    Accepts a single vector (in_dim,) or a batch (n, in_dim); the output
    shape mirrors the input's.
    """
    x = np.asarray(x, dtype=np.float64)
    was_vector = x.ndim == 1
    h = x[None, :] if was_vector else x
    if h.ndim != 2:
        raise ShapeError(f"input must be 1-D or 2-D, got shape {x.shape}")
    if h.shape[1] != mlp.in_dim:
        raise ShapeError(f"input dim {h.shape[1]} does not match layer 0 input dim {mlp.in_dim}")
    tape = MlpTape(was_vector=was_vector, n_layers=len(mlp.layers))
    for layer in mlp.layers:
        tape.inputs.append(h)
        z = h @ layer.weight.T + layer.bias
        tape.pre_activations.append(z)
        h = _activate(layer.activation, z)
    return (h[0] if was_vector else h), tape


def mlp_backward(
    mlp: Mlp, tape: MlpTape, output_grad: np.ndarray
) -> tuple[dict[str, np.ndarray], np.ndarray]:
    """Backpropagate `output_grad` through the taped forward pass.

    Returns (grads keyed like `param_dict(mlp)`, gradient w.r.t. the input).
    """
    if tape.n_layers != len(mlp.layers) or len(tape.inputs) != len(mlp.layers):
        raise ContractError("tape does not match this network (stale or foreign tape)")
    g = np.asarray(output_grad, dtype=np.float64)
    if tape.was_vector:
        if g.shape != (mlp.out_dim,):
            raise ShapeError(f"output_grad shape {g.shape} != ({mlp.out_dim},)")
        g = g[None, :]
    elif g.shape != tape.pre_activations[-1].shape:
        raise ShapeError(
            f"output_grad shape {g.shape} != forward output shape {tape.pre_activations[-1].shape}"
        )
    grads: dict[str, np.ndarray] = {}
    for k in range(len(mlp.layers) - 1, -1, -1):
        layer = mlp.layers[k]
        dz = g * _activate_grad(layer.activation, tape.pre_activations[k])
        grads[f"layers.{k}.weight"] = dz.T @ tape.inputs[k]
        grads[f"layers.{k}.bias"] = dz.sum(axis=0)
        g = dz @ layer.weight
    input_grad = g[0] if tape.was_vector else g
    return grads, input_grad
