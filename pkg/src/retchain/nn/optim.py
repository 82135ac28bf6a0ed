"""AdamW with decoupled weight decay over path-keyed parameter dicts."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractError, TrainingError


@dataclass
class AdamWState:
    learning_rate: float
    weight_decay: float
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    step_count: int = 0
    first_moment: dict[str, np.ndarray] = field(default_factory=dict)
    second_moment: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if not (0.0 < self.beta1 < 1.0 and 0.0 < self.beta2 < 1.0):
            raise ContractError("beta1 and beta2 must lie in (0, 1)")
        if self.epsilon <= 0.0:
            raise ContractError("epsilon must be positive")
        if self.step_count < 0:
            raise ContractError("step_count must be non-negative")


def adamw_step(
    params: dict[str, np.ndarray],
    grads: dict[str, np.ndarray],
    state: AdamWState,
) -> tuple[dict[str, np.ndarray], AdamWState]:
    """One AdamW update; decay is applied multiplicatively before the
    adaptive step, decoupled from the gradient.

    Returns fresh parameter arrays and an advanced state; inputs are not
    mutated.
    """
    t = state.step_count + 1
    lr, wd = state.learning_rate, state.weight_decay
    b1, b2, eps = state.beta1, state.beta2, state.epsilon
    new_params: dict[str, np.ndarray] = {}
    new_m: dict[str, np.ndarray] = {}
    new_v: dict[str, np.ndarray] = {}
    for path in params:
        p = params[path]
        if path not in grads:
            raise ContractError(f"gradient missing for parameter {path!r}")
        g = grads[path]
        if g.shape != p.shape:
            raise ContractError(f"gradient shape {g.shape} != parameter shape {p.shape} at {path!r}")
        if not np.all(np.isfinite(g)):
            raise TrainingError(f"non-finite gradient at parameter {path!r}")
        m_prev = state.first_moment.get(path, np.zeros_like(p))
        v_prev = state.second_moment.get(path, np.zeros_like(p))
        if m_prev.shape != p.shape or v_prev.shape != p.shape:
            raise ContractError(f"moment buffer shape mismatch at {path!r}")
        m = b1 * m_prev + (1.0 - b1) * g
        v = b2 * v_prev + (1.0 - b2) * g * g
        m_hat = m / (1.0 - b1**t)
        v_hat = v / (1.0 - b2**t)
        p_decayed = p * (1.0 - lr * wd)
        new_params[path] = p_decayed - lr * m_hat / (np.sqrt(v_hat) + eps)
        new_m[path] = m
        new_v[path] = v
    new_state = AdamWState(
        learning_rate=lr,
        weight_decay=wd,
        beta1=b1,
        beta2=b2,
        epsilon=eps,
        step_count=t,
        first_moment=new_m,
        second_moment=new_v,
    )
    return new_params, new_state
