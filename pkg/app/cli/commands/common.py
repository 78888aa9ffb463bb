from __future__ import annotations

from core.config import ExperimentConfig
from core.exceptions import ConfigError
from core.models import DatasetManifest
from data.loaders import load_manifest


def load_manifest_for(config: ExperimentConfig) -> DatasetManifest:
    if config.manifest_path is None:
        msg = "missing manifest: pass --manifest or set 'manifest' in --config"
        raise ConfigError(msg)
    return load_manifest(config.manifest_path)
