"""Numeric substrate: dense MLPs with taped backprop, AdamW, gradient
checking, and bit-exact JSON checkpoints."""

from .checkpoint import Checkpoint, load_checkpoint, save_checkpoint
from .gradcheck import GradCheckReport, finite_diff_check, numeric_gradient
from .mlp import LinearLayer, Mlp, MlpTape, mlp_backward, mlp_forward
from .ops import cosine_similarity, log_softmax, normalize_rows
from .optim import AdamWState, adamw_step
from .params import add_into, param_dict, with_param_dict, zeros_like_params
from .rng import glorot_uniform, rng_for

__all__ = [
    "AdamWState",
    "Checkpoint",
    "GradCheckReport",
    "LinearLayer",
    "Mlp",
    "MlpTape",
    "adamw_step",
    "add_into",
    "cosine_similarity",
    "finite_diff_check",
    "glorot_uniform",
    "load_checkpoint",
    "log_softmax",
    "mlp_backward",
    "mlp_forward",
    "normalize_rows",
    "numeric_gradient",
    "param_dict",
    "save_checkpoint",
    "with_param_dict",
    "zeros_like_params",
]
