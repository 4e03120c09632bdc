"""Cache de resultados - backend em diretório ou Redis, escolhido por SKEIN_CACHE."""

import json
from pathlib import Path
from typing import Any, Protocol

import redis

from app.core.logger import logger
from app.core.settings import get_settings


class ResultCache(Protocol):
    def get(self, key: str) -> str | None: ...

    def set(self, key: str, value: str) -> bool: ...

    def delete(self, key: str) -> bool: ...


class FileCache:
    """Um arquivo JSON por chave dentro de um diretório."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def _path(self, key: str) -> Path:
        return self.directory / f"{key.replace(':', '_')}.json"

    def get(self, key: str) -> str | None:
        """Busca valor no cache."""
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return path.read_text(encoding="utf-8")
        except OSError as e:
            logger.error("cache_get_error", key=key, error=str(e))
            return None

    def set(self, key: str, value: str) -> bool:
        """Salva valor no cache."""
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            tmp = self._path(key).with_suffix(".tmp")
            tmp.write_text(value, encoding="utf-8")
            tmp.replace(self._path(key))
            return True
        except OSError as e:
            logger.error("cache_set_error", key=key, error=str(e))
            return False

    def delete(self, key: str) -> bool:
        """Remove chave do cache."""
        try:
            self._path(key).unlink(missing_ok=True)
            return True
        except OSError as e:
            logger.error("cache_delete_error", key=key, error=str(e))
            return False


class RedisCache:
    """Cache Redis a partir de uma URL redis://."""

    def __init__(self, url: str, ttl: int = 0):
        self.url = url
        self.default_ttl = ttl
        self._client: redis.Redis | None = None

    @property
    def client(self) -> redis.Redis:
        """Retorna cliente Redis (lazy loading)."""
        if self._client is None:
            self._client = redis.Redis.from_url(self.url, decode_responses=True)
            logger.info("redis_cache_connected", url=self.url)
        return self._client

    def get(self, key: str) -> str | None:
        """Busca valor no cache."""
        try:
            return self.client.get(key)
        except Exception as e:
            logger.error("cache_get_error", key=key, error=str(e))
            return None

    def set(self, key: str, value: str) -> bool:
        """Salva valor no cache; ttl 0 mantém a chave sem expiração."""
        try:
            if self.default_ttl:
                self.client.setex(key, self.default_ttl, value)
            else:
                self.client.set(key, value)
            return True
        except Exception as e:
            logger.error("cache_set_error", key=key, error=str(e))
            return False

    def delete(self, key: str) -> bool:
        """Remove chave do cache."""
        try:
            self.client.delete(key)
            return True
        except Exception as e:
            logger.error("cache_delete_error", key=key, error=str(e))
            return False


def get_json(cache: ResultCache, key: str) -> Any | None:
    """Busca e deserializa JSON."""
    value = cache.get(key)
    if value:
        try:
            return json.loads(value)
        except json.JSONDecodeError:
            return None
    return None


def set_json(cache: ResultCache, key: str, value: Any) -> bool:
    """Serializa e salva JSON."""
    try:
        return cache.set(key, json.dumps(value, sort_keys=True))
    except (TypeError, ValueError):
        return False


def build_cache(location: str | None, ttl: int = 0) -> ResultCache | None:
    """Diretório ou redis:// conforme a localização; None desliga o cache."""
    if not location:
        return None
    if location.startswith(("redis://", "rediss://", "unix://")):
        return RedisCache(location, ttl=ttl)
    return FileCache(location)


# Cache global
_result_cache: ResultCache | None = None
_configured = False


def get_result_cache() -> ResultCache | None:
    """Retorna o cache configurado pelo ambiente (singleton)."""
    global _result_cache, _configured
    if not _configured:
        settings = get_settings()
        _result_cache = build_cache(settings.skein_cache, settings.cache_ttl)
        _configured = True
        logger.debug("result_cache_configured", backend=type(_result_cache).__name__)
    return _result_cache


def reset_result_cache() -> None:
    global _result_cache, _configured
    _result_cache = None
    _configured = False
