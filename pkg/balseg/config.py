"""
Runtime configuration
Values come from the environment (optionally a .env file), CLI flags override them
"""
import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .errors import InvalidArgumentError

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Settings(BaseModel):
    enumeration_cap: int = Field(default=24, ge=0, description="Largest L accepted by enumerate")
    host: str = "127.0.0.1"
    port: int = Field(default=8000, ge=1, le=65535)
    log_level: str = Field(default="INFO", pattern=r"(?i)^(debug|info|warning|error|critical)$")


def load_settings() -> Settings:
    """Build settings from BALSEG_* environment variables"""
    load_dotenv()
    raw = {
        "enumeration_cap": os.getenv("BALSEG_CAP"),
        "host": os.getenv("BALSEG_HOST"),
        "port": os.getenv("BALSEG_PORT"),
        "log_level": os.getenv("BALSEG_LOG_LEVEL"),
    }
    try:
        settings = Settings(**{k: v for k, v in raw.items() if v is not None})
    except ValidationError as e:
        raise InvalidArgumentError(f"Invalid BALSEG_* environment: {e}") from e
    logger.debug(f"Loaded settings: {settings.model_dump()}")
    return settings


def configure_logging(level: str = "INFO") -> None:
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT)
