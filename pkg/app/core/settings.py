from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Cache Configuration
    skein_cache: str | None = Field(None, alias="SKEIN_CACHE")
    cache_ttl: int = Field(0, alias="SKEIN_CACHE_TTL")  # 0 = sem expiração

    # Oracle Configuration
    max_crossings: int = Field(26, alias="SKEIN_MAX_CROSSINGS")
    oracle_workers: int = Field(1, alias="SKEIN_WORKERS")
    parallel_min_states: int = Field(4096, alias="SKEIN_PARALLEL_MIN_STATES")

    # Root-of-unity Configuration
    root_tolerance: float = Field(1e-9, alias="SKEIN_ROOT_TOLERANCE")
    lemma2_tolerance: float = Field(1e-6, alias="SKEIN_LEMMA2_TOLERANCE")

    # Logging
    log_level: str = Field("INFO", alias="SKEIN_LOG_LEVEL")

    model_config = SettingsConfigDict(env_file=".env", extra="ignore", populate_by_name=True)


def get_settings() -> Settings:
    """Factory function para criar instância de Settings."""
    return Settings()


settings = get_settings()
