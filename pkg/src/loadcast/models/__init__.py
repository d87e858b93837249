"""The three forecasting regressors with deterministic training."""

from .gbrt import GbrtConfig, GbrtModel, train_gbrt
from .lbfgs import LbfgsResult, minimize_lbfgs
from .mlp import MlpConfig, MlpModel, train_mlp
from .persist import load_model, save_model
from .registry import MODEL_KINDS, config_class_for, default_config, train_model, trainer_for
from .scaler import StandardScaler
from .search import grid_search, kfold_indices
from .svr import SvrConfig, SvrModel, solve_epsilon_svr, svr_objective, train_svr


def predict(model, X):
    """Deterministic prediction; raises on a schema mismatch."""
    return model.predict(X)


__all__ = [
    "GbrtConfig", "GbrtModel", "train_gbrt",
    "LbfgsResult", "minimize_lbfgs",
    "MlpConfig", "MlpModel", "train_mlp",
    "SvrConfig", "SvrModel", "train_svr", "solve_epsilon_svr", "svr_objective",
    "StandardScaler", "save_model", "load_model",
    "grid_search", "kfold_indices",
    "MODEL_KINDS", "train_model", "trainer_for", "config_class_for", "default_config",
    "predict",
]
