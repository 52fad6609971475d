"""
Instance files (*.bck), their loader and the command line.

- instance_format.py - pydantic-модели секций, parse/serialize;
- loader.py - InstanceFile -> проверенные объекты ядра (+ ссылки на другие файлы);
- checks.py - свойства для check-map и блоков [check];
- main.py - argparse-команды verify / topology / check-map / suite / enumerate.
"""
from .checks import HOM_PROPS, evaluate_check, evaluate_prop, format_outcome
from .instance_format import InstanceFile, parse_instance, serialize_instance
from .loader import LoadedHom, LoadedInstance, load_instance, load_instance_text

__all__ = [
    "HOM_PROPS",
    "InstanceFile",
    "LoadedHom",
    "LoadedInstance",
    "evaluate_check",
    "evaluate_prop",
    "format_outcome",
    "load_instance",
    "load_instance_text",
    "parse_instance",
    "serialize_instance",
]
