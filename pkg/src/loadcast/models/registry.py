"""Lookup of trainers and config classes by model kind."""

from __future__ import annotations

from .gbrt import GbrtConfig, train_gbrt
from .mlp import MlpConfig, train_mlp
from .svr import SvrConfig, train_svr

from ..errors import ValidationError

MODEL_KINDS = ("svr", "gbrt", "mlp")

_TRAINERS = {"svr": train_svr, "gbrt": train_gbrt, "mlp": train_mlp}
_CONFIGS = {"svr": SvrConfig, "gbrt": GbrtConfig, "mlp": MlpConfig}


def trainer_for(kind: str):
    try:
        return _TRAINERS[kind]
    except KeyError:
        raise ValidationError(f"unknown model kind {kind!r}; expected {MODEL_KINDS}")


def config_class_for(kind: str):
    try:
        return _CONFIGS[kind]
    except KeyError:
        raise ValidationError(f"unknown model kind {kind!r}; expected {MODEL_KINDS}")


def default_config(kind: str):
    return config_class_for(kind)()


def train_model(kind: str, X, y, config=None, feature_names=None):
    cfg = config if config is not None else default_config(kind)
    return trainer_for(kind)(X, y, cfg, feature_names=feature_names)
