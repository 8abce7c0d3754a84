import os
import structlog
import sys

from dotenv import load_dotenv


BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
LOG_DIR = os.path.join(BASE_DIR, "var/log")

if not os.path.exists(LOG_DIR):
    os.makedirs(LOG_DIR)

# Load environment variables, defaulting to the plain .env file when
# QRF_ENV is not injected.
QRF_ENV = os.getenv("QRF_ENV", "default")
ENVIRONMENTS = {
    "local": ".env.local",
    "ci": ".env.ci",
}

dotenv_path = os.path.join(BASE_DIR, "config", ENVIRONMENTS.get(QRF_ENV) or ".env")

# stdout carries command output (json/csv)
if os.getenv("QRF_VERBOSE_ENV"):
    sys.stderr.write(f"Loading environment variables from {dotenv_path}\n")
load_dotenv(dotenv_path)

# No web surface is served; the key only satisfies Django's startup checks.
SECRET_KEY = os.getenv("SECRET_KEY", "qrf-calculus-not-a-secret")

DEBUG = os.getenv("DEBUG", "False").lower() == "true"

# Numerical configuration
QRF_DIM_CAP = int(os.getenv("QRF_DIM_CAP", 2 ** 14))
QRF_CLASSIFY_TOL = float(os.getenv("QRF_CLASSIFY_TOL", 1e-10))
QRF_SCHMIDT_TOL = float(os.getenv("QRF_SCHMIDT_TOL", 1e-9))
QRF_PSD_TOL = float(os.getenv("QRF_PSD_TOL", 1e-9))
QRF_DEFAULT_SHOTS = int(os.getenv("QRF_DEFAULT_SHOTS", 1000))
QRF_VERIFY_WORKERS = int(os.getenv("QRF_VERIFY_WORKERS", 1))
QRF_LOG_LEVEL = os.getenv("QRF_LOG_LEVEL", "WARNING").upper()

# Common settings
DEFAULT_AUTO_FIELD = "django.db.models.AutoField"

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

INSTALLED_APPS = (
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "rest_framework",
    "core",
    "groups",
    "tensors",
    "frames",
    "circuits",
    "resources",
    "protocol",
)

# Nothing is persisted; the sqlite file only exists if a command ever asks for it.
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": os.path.join(BASE_DIR, "var", "qrf.sqlite3"),
    }
}

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
}

# Logging
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain_console": {
            "()": structlog.stdlib.ProcessorFormatter,
            "processor": structlog.dev.ConsoleRenderer(colors=False),
        },
        "key_value": {
            "()": structlog.stdlib.ProcessorFormatter,
            "processor": structlog.processors.KeyValueRenderer(key_order=["timestamp", "level", "event", "logger"]),
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain_console",
        },
        "flat_line_file": {
            "class": "logging.handlers.TimedRotatingFileHandler",
            "filename": LOG_DIR + "/qrf.log",
            "when": "W5",
            "backupCount": 12,
            "formatter": "key_value",
        },
    },
    "loggers": {
        "core": {
            "handlers": ["console", "flat_line_file"],
            "level": QRF_LOG_LEVEL,
        },
        "groups": {
            "handlers": ["console", "flat_line_file"],
            "level": QRF_LOG_LEVEL,
        },
        "tensors": {
            "handlers": ["console", "flat_line_file"],
            "level": QRF_LOG_LEVEL,
        },
        "frames": {
            "handlers": ["console", "flat_line_file"],
            "level": QRF_LOG_LEVEL,
        },
        "circuits": {
            "handlers": ["console", "flat_line_file"],
            "level": QRF_LOG_LEVEL,
        },
        "resources": {
            "handlers": ["console", "flat_line_file"],
            "level": QRF_LOG_LEVEL,
        },
        "protocol": {
            "handlers": ["console", "flat_line_file"],
            "level": QRF_LOG_LEVEL,
        },
    }
}

structlog.configure(
    processors=[
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
    ],
    logger_factory=structlog.stdlib.LoggerFactory(),
    cache_logger_on_first_use=True,
)
