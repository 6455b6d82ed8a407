"""Main application configuration."""

from functools import lru_cache

try:
    from pydantic_settings import BaseSettings
except ImportError:
    from pydantic import BaseSettings  # pydantic<2


class Settings(BaseSettings):
    corpus_dir: str = ""
    log_level: str = "INFO"
    default_seed: int = 20240611
    default_trials: int = 200
    output_format: str = "json"

    class Config:
        env_file = ".env"
        extra = "ignore"


@lru_cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
