"""Streaming pipeline: durable queue, stages, schedules, configuration."""

from .config import ENV_API_PORT, ENV_STORE_PATH, PipelineConfig, load_config
from .queue import MessageQueue
from .scheduler import PeriodicJob, schedule_clustering, schedule_offline
from .service import NewsflowService
from .stages import (
    TOPIC_ANALYZED,
    TOPIC_CATEGORIZED,
    TOPIC_EXTRACTED,
    TOPIC_FRAMED,
    TOPIC_PROPAGANDA,
    TOPIC_RAW,
    TOPIC_TRANSLATED,
    StageDescriptor,
    StageRunner,
    article_stages,
    run_stage,
)

__all__ = [
    "ENV_API_PORT",
    "ENV_STORE_PATH",
    "PipelineConfig",
    "load_config",
    "MessageQueue",
    "NewsflowService",
    "PeriodicJob",
    "schedule_clustering",
    "schedule_offline",
    "TOPIC_ANALYZED",
    "TOPIC_CATEGORIZED",
    "TOPIC_EXTRACTED",
    "TOPIC_FRAMED",
    "TOPIC_PROPAGANDA",
    "TOPIC_RAW",
    "TOPIC_TRANSLATED",
    "StageDescriptor",
    "StageRunner",
    "article_stages",
    "run_stage",
]
