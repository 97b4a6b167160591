import os
import sys
from logging.config import dictConfig
from typing import Any

from monocodes.core.config import settings
from monocodes.core.json_logging import JsonFormatter


def get_logging_config(level: str | None = None, as_json: bool = False) -> dict[str, Any]:
    """
    Build the dictConfig for the library and the CLI.

    Console records go to stderr, leaving stdout to command reports; they are
    JSON objects under --json and plain lines otherwise. The optional log file
    always receives JSON.
    """
    log_level = level or settings.log_level
    handlers: list[str] = ["console"]

    config_handlers: dict[str, dict[str, Any]] = {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "json" if as_json else "default",
            "stream": sys.stderr,
        }
    }

    if settings.enable_file_logging:
        config_handlers["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "formatter": "json",
            "filename": settings.log_file_path,
            "maxBytes": 10 * 1024 * 1024,
            "backupCount": 5,
        }
        handlers.append("file")

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "[%(asctime)s] %(levelname)s %(name)s: %(message)s",
            },
            "json": {
                "()": JsonFormatter,
                "application": "monomial-codes",
                "environment": settings.environment,
            },
        },
        "handlers": config_handlers,
        "loggers": {
            "monocodes": {
                "handlers": handlers,
                "level": log_level,
                "propagate": False,
            },
        },
        "root": {
            "handlers": handlers,
            "level": log_level,
        },
    }


def setup_logging(level: str | None = None, as_json: bool = False) -> None:
    """
    Configure logging once per process.
    Drops the file handler when the log file cannot be opened.
    """
    if settings.enable_file_logging:
        try:
            os.makedirs(os.path.dirname(os.path.abspath(settings.log_file_path)), exist_ok=True)
            with open(settings.log_file_path, "a"):
                pass
        except OSError as e:
            print(f"Warning: cannot open log file {settings.log_file_path}: {e}; logging to stderr only", file=sys.stderr)
            settings.enable_file_logging = False

    dictConfig(get_logging_config(level, as_json))
