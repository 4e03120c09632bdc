"""Decorator de cache para resultados de subcomandos."""

import functools
import hashlib
import json
from collections.abc import Callable
from typing import Any

import structlog

from app import __version__
from app.schemas.skein import CacheEntry

logger = structlog.get_logger(__name__)


def cache_result(key_prefix: str = "") -> Callable[[Callable[..., str]], Callable[..., str]]:
    """
    Decorator para cachear a saída textual de uma função.

    A chave inclui a versão do pacote; uma entrada de outra versão é ignorada
    e recalculada. Falhas do cache só geram log.

    Args:
        key_prefix: Prefixo para a chave do cache

    Usage:
        @cache_result(key_prefix="expand")
        def render_expansion(calculator, p: int, q: int, n: int, s: int) -> str:
            ...
    """

    def decorator(func: Callable[..., str]) -> Callable[..., str]:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> str:
            from app.clients.cache import get_json, get_result_cache, set_json

            cache = get_result_cache()
            if cache is None:
                return func(*args, **kwargs)

            cache_key = _generate_cache_key(func.__name__, key_prefix, args, kwargs)
            try:
                cached = get_json(cache, cache_key)
                if cached is not None:
                    entry = CacheEntry.model_validate(cached)
                    if entry.tool_version == __version__:
                        logger.debug("cache_hit", key=cache_key, function=func.__name__)
                        return entry.value
                    logger.debug("cache_stale", key=cache_key, version=entry.tool_version)
            except Exception as e:
                logger.warning("cache_read_error", error=str(e), key=cache_key)

            result = func(*args, **kwargs)

            try:
                entry = CacheEntry(key=cache_key, value=result, tool_version=__version__)
                set_json(cache, cache_key, entry.model_dump())
                logger.debug("cache_set", key=cache_key, function=func.__name__)
            except Exception as e:
                logger.warning("cache_write_error", error=str(e), key=cache_key)

            return result

        return wrapper

    return decorator


def _generate_cache_key(func_name: str, prefix: str, args: tuple, kwargs: dict) -> str:
    """
    Gera chave de cache determinística baseada em argumentos.

    Args:
        func_name: Nome da função
        prefix: Prefixo customizado
        args: Argumentos posicionais
        kwargs: Argumentos nomeados

    Returns:
        Chave de cache única
    """
    args_repr = {
        "version": __version__,
        "args": [_serialize_arg(arg) for arg in args],
        "kwargs": {k: _serialize_arg(v) for k, v in sorted(kwargs.items())},
    }

    args_str = json.dumps(args_repr, sort_keys=True, default=str)
    args_hash = hashlib.md5(args_str.encode()).hexdigest()[:16]

    parts = [prefix, func_name, args_hash] if prefix else [func_name, args_hash]
    return ":".join(parts)


def _serialize_arg(arg: Any) -> Any:
    """Serializa argumento para JSON."""
    if isinstance(arg, str | int | float | bool | type(None)):
        return arg
    if isinstance(arg, list | tuple):
        return [_serialize_arg(item) for item in arg]
    if isinstance(arg, dict):
        return {str(k): _serialize_arg(v) for k, v in sorted(arg.items(), key=lambda item: str(item[0]))}
    if isinstance(arg, bytes):
        return f"bytes:{hashlib.md5(arg).hexdigest()[:16]}"
    if hasattr(arg, "__dict__"):
        # serviços injetados não entram na chave
        return "obj"
    return str(arg)
