"""Versioned model serialization to a self-describing JSON file.

The payload carries the model kind, its config, fitted parameters, and
any scalers, so a loaded model predicts identically to the one saved.
Files are written with sorted keys, so identical models serialize to
identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import asdict

import numpy as np

from ..errors import ValidationError
from .gbrt import GbrtConfig, GbrtModel, Tree
from .mlp import MlpConfig, MlpModel
from .scaler import StandardScaler
from .svr import SvrConfig, SvrModel

FORMAT = "loadcast-model"
VERSION = 1


def _scaler_to_dict(s: StandardScaler) -> dict:
    return {"mean": s.mean.tolist(), "std": s.std.tolist()}


def _scaler_from_dict(d: dict) -> StandardScaler:
    return StandardScaler(mean=np.asarray(d["mean"]), std=np.asarray(d["std"]))


def _payload(model) -> dict:
    if isinstance(model, SvrModel):
        params = {
            "w": model.w.tolist(),
            "b": model.b,
            "x_scaler": _scaler_to_dict(model.x_scaler),
            "y_scaler": _scaler_to_dict(model.y_scaler),
        }
    elif isinstance(model, MlpModel):
        params = {
            "theta": model.theta.tolist(),
            "x_scaler": _scaler_to_dict(model.x_scaler),
            "y_scaler": _scaler_to_dict(model.y_scaler),
        }
    elif isinstance(model, GbrtModel):
        params = {
            "base_value": model.base_value,
            "trees": [
                {
                    "feature": t.feature,
                    "threshold": t.threshold,
                    "left": t.left,
                    "right": t.right,
                    "value": t.value,
                }
                for t in model.trees
            ],
        }
    else:
        raise ValidationError(f"cannot serialize model of type {type(model).__name__}")
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": model.kind,
        "config": asdict(model.config),
        "feature_names": model.feature_names,
        "metadata": model.metadata,
        "params": params,
    }


def save_model(model, path) -> None:
    with open(path, "w") as fh:
        json.dump(_payload(model), fh, sort_keys=True, indent=1)
        fh.write("\n")


def load_model(path):
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format") != FORMAT:
        raise ValidationError(f"{path}: not a {FORMAT} file")
    if doc.get("version") != VERSION:
        raise ValidationError(
            f"{path}: unsupported model format version {doc.get('version')}"
        )
    kind = doc["kind"]
    params = doc["params"]
    names = doc.get("feature_names")
    meta = doc.get("metadata", {})
    if kind == "svr":
        return SvrModel(
            SvrConfig(**doc["config"]),
            _scaler_from_dict(params["x_scaler"]),
            _scaler_from_dict(params["y_scaler"]),
            np.asarray(params["w"]),
            params["b"],
            names,
            meta,
        )
    if kind == "mlp":
        cfg_dict = dict(doc["config"])
        cfg_dict["hidden_sizes"] = tuple(cfg_dict["hidden_sizes"])
        return MlpModel(
            MlpConfig(**cfg_dict),
            _scaler_from_dict(params["x_scaler"]),
            _scaler_from_dict(params["y_scaler"]),
            np.asarray(params["theta"]),
            names,
            meta,
        )
    if kind == "gbrt":
        trees = []
        for td in params["trees"]:
            t = Tree()
            t.feature = list(td["feature"])
            t.threshold = list(td["threshold"])
            t.left = list(td["left"])
            t.right = list(td["right"])
            t.value = list(td["value"])
            trees.append(t)
        return GbrtModel(
            GbrtConfig(**doc["config"]), params["base_value"], trees, names, meta
        )
    raise ValidationError(f"{path}: unknown model kind {kind!r}")
