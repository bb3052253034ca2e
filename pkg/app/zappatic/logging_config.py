"""Structured logging for zappatic.

Logging is configured in two declarative halves, both driven by `Settings`:

    - `get_logging_config` builds the `logging.config.dictConfig` mapping
      (one stderr handler, a structlog `ProcessorFormatter`).
    - `configure_structlog` installs the structlog chain feeding it.

`configure_logging` applies both and is called once by the `zap` callback.
Until then a quiet default keeps everything below WARNING silent.
stdout carries the JSON reports, so nothing here ever writes to it.
"""

import logging.config
import sys
from enum import Enum
from typing import Any

import structlog
from pydantic import BaseModel
from structlog.types import EventDict, Processor, WrappedLogger

from zappatic.config import Settings

JSON_ENVIRONMENTS = ("production", "staging")


# =============================================================================
# PROCESSORS
# =============================================================================

def plain_values(_: WrappedLogger, __: str, event_dict: EventDict) -> EventDict:
    """Replace enum members by their values and records by their dumps.

    Log calls pass `GraphMode`, `VerdictStatus` or whole `K2Interval`
    records; JSON lines should carry the same values as the reports.
    """
    for key, value in event_dict.items():
        if isinstance(value, Enum):
            event_dict[key] = value.value
        elif isinstance(value, BaseModel):
            event_dict[key] = value.model_dump(mode="json")
    return event_dict


def shared_processors() -> list[Processor]:
    """Processors run on every entry, structlog or stdlib, before rendering."""
    return [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        plain_values,
        structlog.processors.format_exc_info,
    ]


def _renderer(settings: Settings) -> Processor:
    if settings.ENVIRONMENT in JSON_ENVIRONMENTS:
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())


# =============================================================================
# CONFIGURATION
# =============================================================================

def get_logging_config(settings: Settings) -> dict[str, Any]:
    """Build the dictConfig mapping for ``settings``. Pure; installs nothing.

    Args:
        settings: Source of LOG_LEVEL, ENVIRONMENT and LOGGING_NOISY_MODULES.

    Returns:
        dict[str, Any]: Mapping accepted by `logging.config.dictConfig`.
    """
    level = settings.LOG_LEVEL.upper()
    quiet = {name: {"level": "WARNING", "propagate": False} for name in settings.LOGGING_NOISY_MODULES}
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "structured": {
                "()": structlog.stdlib.ProcessorFormatter,
                "processor": _renderer(settings),
                "foreign_pre_chain": shared_processors(),
            },
        },
        "handlers": {
            "stderr": {
                "class": "logging.StreamHandler",
                "level": level,
                "formatter": "structured",
                "stream": "ext://sys.stderr",
            },
        },
        "loggers": {"": {"handlers": ["stderr"], "level": level}, **quiet},
    }


def configure_structlog() -> None:
    """Route structlog through the stdlib handlers installed by dictConfig."""
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            *shared_processors(),
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def configure_quiet_default() -> None:
    """Warnings and above to stderr through stdlib, everything below dropped.

    Stands in until `configure_logging` runs, so importing zappatic as a
    library never prints to stdout.
    """
    structlog.configure(
        processors=[*shared_processors(), structlog.dev.ConsoleRenderer(colors=False)],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.make_filtering_bound_logger(logging.WARNING),
        cache_logger_on_first_use=False,
    )


def configure_logging(settings: Settings) -> None:
    logging.config.dictConfig(get_logging_config(settings))
    configure_structlog()


def get_logger(name: str | None = None) -> Any:
    """Bound structlog logger, named after the calling module by convention."""
    return structlog.get_logger(name) if name else structlog.get_logger()


if not structlog.is_configured():
    configure_quiet_default()

# Context variables: the CLI binds the running command here.
bind_contextvars = structlog.contextvars.bind_contextvars
clear_contextvars = structlog.contextvars.clear_contextvars
