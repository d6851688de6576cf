from .commands import CommandRunner
from .config import RunConfig
from .emit import Table, encode
from .main import build_parser, main

__all__ = ["CommandRunner", "RunConfig", "Table", "build_parser", "encode", "main"]
