import os
from dataclasses import dataclass
from dotenv import load_dotenv
from src.config.logger import get_logger

@dataclass(frozen=True)
class Settings:
    max_depth: int = 4
    max_states: int = 2000
    max_valleys: int = 1
    canon_branch_limit: int = 5000

def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return value

def settings() -> Settings:
    logger = get_logger("settings")
    load_dotenv()
    logger.debug("loaded dotenv, reading analysis defaults")

    try:
        result = Settings(
            max_depth=_int_env("CHRDC_MAX_DEPTH", Settings.max_depth),
            max_states=_int_env("CHRDC_MAX_STATES", Settings.max_states),
            max_valleys=_int_env("CHRDC_MAX_VALLEYS", Settings.max_valleys),
            canon_branch_limit=_int_env("CHRDC_CANON_BRANCH_LIMIT", Settings.canon_branch_limit),
        )
    except ValueError as e:
        logger.error(f"invalid environment setting - {e}")
        raise

    return result
