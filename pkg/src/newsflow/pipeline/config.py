"""Pipeline configuration: JSON file plus environment overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Mapping

from ..errors import ConfigError, ParseError

ENV_STORE_PATH = "NEWSFLOW_STORE_PATH"
ENV_API_PORT = "NEWSFLOW_API_PORT"


@dataclass(frozen=True)
class PipelineConfig:
    """Everything the service needs to come up.

    Paths left as None disable the corresponding inputs: no section
    model means the categorize stage passes articles through, no claims
    file means no stance annotations, and so on.
    """

    store_path: str = "newsflow.db"
    queue_dir: str = "newsflow-queue"
    sources_path: str | None = None
    claims_path: str | None = None
    citations_path: str | None = None
    source_labels_path: str | None = None
    section_model_path: str | None = None
    propaganda_model_path: str | None = None
    api_port: int = 8080
    clustering_interval: float = 1800.0
    offline_interval: float = 86400.0
    max_retries: int = 3
    parallelism: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.api_port <= 65535:
            raise ValueError(f"api_port {self.api_port} outside [1, 65535]")
        if self.clustering_interval <= 0 or self.offline_interval <= 0:
            raise ValueError("schedule intervals must be positive")
        if self.max_retries < 1:
            raise ValueError("max_retries must be positive")
        for stage, width in self.parallelism.items():
            if not isinstance(width, int) or width < 1:
                raise ValueError(f"parallelism for {stage!r} must be a positive int")


def load_config(path: str | Path | None = None,
                env: Mapping[str, str] | None = None) -> PipelineConfig:
    """Load configuration, applying environment overrides last.

    NEWSFLOW_STORE_PATH replaces store_path and NEWSFLOW_API_PORT
    replaces api_port regardless of what the file says.
    """
    env = os.environ if env is None else env
    data: dict = {}
    if path is not None:
        text = Path(path).read_text("utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed config: {exc.msg}", offset=exc.pos) from None
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        known = {f.name for f in fields(PipelineConfig)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    if ENV_STORE_PATH in env:
        data["store_path"] = env[ENV_STORE_PATH]
    if ENV_API_PORT in env:
        try:
            data["api_port"] = int(env[ENV_API_PORT])
        except ValueError:
            raise ConfigError(f"{ENV_API_PORT} must be an integer") from None
    try:
        return PipelineConfig(**data)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None
